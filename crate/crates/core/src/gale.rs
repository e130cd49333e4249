//! Alternating moment-curve configurations on `S^m` and their verification.
//!
//! Point `i` (1-based) is `(−1)^i γ(i)/‖γ(i)‖` with `γ(t) = (1, t, …, t^m)`
//! and stands for the vertex `σ(i)`. Every open-hemisphere split of such a
//! configuration is checked against a signed increasing property.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signed::property::SignedProperty;
use crate::signed::{LinearOrder, SignedPair};

/// Inner products within this band of zero count as degenerate.
pub const DEGENERACY_EPS: f64 = 1e-9;
/// Samples per random stream; stream `c` serves trials `c·CHUNK..`.
const CHUNK: usize = 4096;
/// Failing directions kept verbatim in a report.
const KEPT_FAILURES: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaleConfiguration {
    pub m: usize,
    pub points: Vec<Vec<f64>>,
    /// `ident[i]` is the vertex carried by point `i`.
    pub ident: Vec<u32>,
}

pub fn gale_points(n: usize, m: usize, sigma: &LinearOrder) -> Result<GaleConfiguration> {
    if n == 0 || m >= n {
        return Err(Error::invalid(format!("need 0 <= m <= n-1, got n={n}, m={m}")));
    }
    if sigma.len() != n {
        return Err(Error::LengthMismatch { what: "ordering", expected: n, got: sigma.len() });
    }
    let points = (1..=n)
        .map(|i| {
            let w: Vec<f64> = (0..=m).map(|j| (i as f64).powi(j as i32)).collect();
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            w.into_iter().map(|x| sign * x / norm).collect()
        })
        .collect();
    Ok(GaleConfiguration { m, points, ident: sigma.as_slice().to_vec() })
}

impl GaleConfiguration {
    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.m + 1
    }

    fn products(&self, x: &[f64]) -> Vec<f64> {
        self.points.iter().map(|z| z.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Split {
    Pair(SignedPair),
    Degenerate,
}

/// `(Z_x⁺, Z_x⁻)`: vertices whose points lie strictly inside `H(x)` and
/// `H(−x)`, or `Degenerate` if a point is within `eps` of the boundary.
pub fn hemisphere_split(z: &GaleConfiguration, x: &[f64], eps: f64) -> Result<Split> {
    if x.len() != z.dim() {
        return Err(Error::LengthMismatch { what: "direction", expected: z.dim(), got: x.len() });
    }
    let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::invalid(format!("direction must be a unit vector, norm is {norm}")));
    }
    let dots = z.products(x);
    if dots.iter().any(|d| d.abs() <= eps) {
        return Ok(Split::Degenerate);
    }
    let side = |positive: bool| -> BTreeSet<u32> {
        dots.iter().zip(&z.ident).filter(|(d, _)| (**d > 0.0) == positive).map(|(_, &v)| v).collect()
    };
    Ok(Split::Pair(SignedPair::new(side(true), side(false))?))
}

/// Sign changes of the nonzero entries, read left to right.
fn sign_changes(signs: impl IntoIterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.into_iter().filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_ms: u128,
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub m: usize,
    pub ident: Vec<u32>,
    pub seed: u64,
    pub generator: String,
    pub eps: f64,
    pub trials: usize,
    pub resamples: usize,
    pub failure_count: usize,
    /// First failing directions, in trial order.
    pub failures: Vec<Vec<f64>>,
    /// Samples whose de-alternated sign vector changes sign more than `m`
    /// times.
    pub pattern_violations: usize,
    pub timing: Timing,
}

struct ChunkOutcome {
    resamples: usize,
    failure_count: usize,
    failures: Vec<Vec<f64>>,
    pattern_violations: usize,
}

/// Samples `trials` uniform directions and checks every split lies in `p`.
pub fn verify_gale(z: &GaleConfiguration, p: &dyn SignedProperty, trials: usize, seed: u64) -> Result<VerificationReport> {
    let ground = p.ground();
    let slot: Vec<usize> = z
        .ident
        .iter()
        .map(|v| {
            ground
                .iter()
                .position(|g| g == v)
                .ok_or_else(|| Error::invalid(format!("vertex {v} is not in the property's ground set")))
        })
        .collect::<Result<_>>()?;
    let start = Instant::now();
    let chunks = trials.div_ceil(CHUNK);
    let outcomes: Vec<ChunkOutcome> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let count = CHUNK.min(trials - c * CHUNK);
            let mut out = ChunkOutcome { resamples: 0, failure_count: 0, failures: Vec::new(), pattern_violations: 0 };
            for _ in 0..count {
                let (x, dots) = loop {
                    let x = random_unit(&mut rng, z.dim());
                    let dots = z.products(&x);
                    if dots.iter().all(|d| d.abs() > DEGENERACY_EPS) {
                        break (x, dots);
                    }
                    out.resamples += 1;
                };
                let (mut plus, mut minus) = (0u128, 0u128);
                for (i, d) in dots.iter().enumerate() {
                    if *d > 0.0 {
                        plus |= 1 << slot[i];
                    } else {
                        minus |= 1 << slot[i];
                    }
                }
                if !p.holds(plus, minus) {
                    out.failure_count += 1;
                    if out.failures.len() < KEPT_FAILURES {
                        out.failures.push(x);
                    }
                }
                let undone = dots.iter().enumerate().map(|(i, d)| {
                    let s = if *d > 0.0 { 1 } else { -1 };
                    if (i + 1) % 2 == 0 { s } else { -s }
                });
                if sign_changes(undone) > z.m {
                    out.pattern_violations += 1;
                }
            }
            out
        })
        .collect();
    let mut failures: Vec<Vec<f64>> = outcomes.iter().flat_map(|o| o.failures.iter().cloned()).collect();
    failures.truncate(KEPT_FAILURES);
    Ok(VerificationReport {
        n: z.n(),
        m: z.m,
        ident: z.ident.clone(),
        seed,
        generator: format!("ChaCha8, stream per {CHUNK} trials, normalised Gaussian"),
        eps: DEGENERACY_EPS,
        trials,
        resamples: outcomes.iter().map(|o| o.resamples).sum(),
        failure_count: outcomes.iter().map(|o| o.failure_count).sum(),
        failures,
        pattern_violations: outcomes.iter().map(|o| o.pattern_violations).sum(),
        timing: Timing { wall_ms: start.elapsed().as_millis(), workers: rayon::current_num_threads() },
    })
}

fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let x: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return x.into_iter().map(|a| a / norm).collect();
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignPatternReport {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub hyperplanes: usize,
    /// Largest number of sign changes seen.
    pub max_sign_changes: usize,
    pub violations: usize,
}

/// Exact check that integer hyperplanes `c` meet the curve in at most `m`
/// sign changes: `sign ⟨γ(i), c⟩` is evaluated in integer arithmetic, which
/// is the de-alternated sign of `⟨z_i, c⟩`. Half of the hyperplanes have
/// random coefficients; the rest have `m` random half-integer roots in
/// `(0, n+1)` so the bound is met with equality.
pub fn exact_sign_patterns(n: usize, m: usize, hyperplanes: usize, seed: u64) -> Result<SignPatternReport> {
    if n == 0 || m >= n || n > 64 || m > 16 {
        return Err(Error::invalid(format!("exact check supports 0 <= m < n <= 64 and m <= 16, got n={n}, m={m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_changes = 0;
    let mut violations = 0;
    for h in 0..hyperplanes {
        let coeffs: Vec<i128> = if h % 2 == 0 {
            (0..=m).map(|_| rng.random_range(-1000..=1000)).collect()
        } else {
            // prod_j (2t − (2r_j + 1))
            let mut poly = vec![if rng.random_bool(0.5) { 1i128 } else { -1 }];
            for _ in 0..m {
                let root = 2 * rng.random_range(0..=n as i128) + 1;
                let mut next = vec![0i128; poly.len() + 1];
                for (j, &a) in poly.iter().enumerate() {
                    next[j] -= a * root;
                    next[j + 1] += a * 2;
                }
                poly = next;
            }
            poly
        };
        let signs = (1..=n as i128).map(|t| {
            let value = coeffs.iter().rev().fold(0i128, |acc, &c| acc * t + c);
            value.signum() as i8
        });
        let changes = sign_changes(signs);
        max_changes = max_changes.max(changes);
        if changes > m {
            violations += 1;
        }
    }
    Ok(SignPatternReport { n, m, seed, hyperplanes, max_sign_changes: max_changes, violations })
}
