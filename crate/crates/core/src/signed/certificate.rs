use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::kernel::{EdgeConstraint, Search, Sides};
use super::{signed_split, Hypergraph, Kind, LinearOrder, Method, Mode, SignVector};
use crate::error::{Error, Result};
use crate::TOOL_VERSION;

/// Orderings are enumerated exhaustively only up to this many vertices.
pub const DEFAULT_FACTORIAL_CAP: usize = 9;

/// A concrete `(hypergraph, ordering, witness)` triple together with the
/// chromatic lower bound it certifies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltCertificate {
    pub tool_version: String,
    pub hypergraph_id: String,
    pub vertex_count: usize,
    pub order: LinearOrder,
    pub kind: Kind,
    pub value: usize,
    pub witness: SignVector,
    pub bound: usize,
    pub method: Method,
    pub seed: Option<u64>,
}

impl AltCertificate {
    /// Re-checks the certificate against `h`: the witness must satisfy the
    /// side condition of its kind, attain `value`, and the bound must match.
    /// Maximality of `value` is not re-derived here.
    pub fn check(&self, h: &Hypergraph) -> Result<()> {
        if self.hypergraph_id != h.content_id() {
            return Err(Error::invalid("certificate belongs to a different hypergraph"));
        }
        h.order_indices(&self.order)?;
        let pair = signed_split(&self.witness, &self.order)?;
        let (p, m) = (h.contains_edge(&pair.plus), h.contains_edge(&pair.minus));
        let ok = match self.kind {
            Kind::Alt => !p && !m,
            Kind::Salt => !(p && m),
        };
        if !ok {
            return Err(Error::invalid("witness violates the side condition"));
        }
        if self.witness.alt() != self.value {
            return Err(Error::invalid(format!(
                "witness alternation {} differs from value {}",
                self.witness.alt(),
                self.value
            )));
        }
        if self.bound != bound_for(self.kind, self.vertex_count, self.value) {
            return Err(Error::invalid("bound does not match value"));
        }
        Ok(())
    }
}

fn bound_for(kind: Kind, n: usize, value: usize) -> usize {
    match kind {
        Kind::Alt => n - value,
        Kind::Salt => n + 1 - value,
    }
}

/// `|V| − value` for ALT and `|V| + 1 − value` for SALT.
pub fn certificate_bound(cert: &AltCertificate) -> usize {
    bound_for(cert.kind, cert.vertex_count, cert.value)
}

fn constraint(h: &Hypergraph, kind: Kind) -> Result<EdgeConstraint> {
    Ok(EdgeConstraint::new(kind, h.vertex_count(), &h.edge_masks()?))
}

/// `alt_σ` or `salt_σ` with the lexicographically smallest witness.
pub fn sigma_value(h: &Hypergraph, sigma: &LinearOrder, kind: Kind, mode: Mode) -> Result<(usize, SignVector)> {
    let order = h.order_indices(sigma)?;
    let c = constraint(h, kind)?;
    let search = Search::new(&c, &order);
    let (k, x) = match mode {
        Mode::Exhaustive => search.exhaustive(),
        Mode::BranchAndBound => search.branch_and_bound(),
    };
    Ok((k, SignVector::new(x).expect("kernel emits signs")))
}

pub fn alt_sigma(h: &Hypergraph, sigma: &LinearOrder, mode: Mode) -> Result<(usize, SignVector)> {
    sigma_value(h, sigma, Kind::Alt, mode)
}

pub fn salt_sigma(h: &Hypergraph, sigma: &LinearOrder, mode: Mode) -> Result<(usize, SignVector)> {
    sigma_value(h, sigma, Kind::Salt, mode)
}

/// Certificate for a fixed ordering.
pub fn certify(h: &Hypergraph, sigma: &LinearOrder, kind: Kind, mode: Mode) -> Result<AltCertificate> {
    let (value, witness) = sigma_value(h, sigma, kind, mode)?;
    Ok(AltCertificate {
        tool_version: TOOL_VERSION.to_string(),
        hypergraph_id: h.content_id(),
        vertex_count: h.vertex_count(),
        order: sigma.clone(),
        kind,
        value,
        witness,
        bound: bound_for(kind, h.vertex_count(), value),
        method: mode.into(),
        seed: None,
    })
}

/// How [`alt_min`] searches the orderings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Every ordering; refused above `cap` vertices.
    ExactAllOrders { cap: usize },
    /// Steepest descent over adjacent transpositions with `restarts` random
    /// restarts (the first start is the natural order).
    LocalSearch { seed: u64, restarts: usize },
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::ExactAllOrders { cap: DEFAULT_FACTORIAL_CAP }
    }
}

/// `min_σ alt_σ(h)` (or `salt`), exactly or by local search. A local-search
/// result is the value of a concrete ordering, so it is an upper bound on the
/// true minimum and still a valid certificate.
pub fn alt_min(h: &Hypergraph, kind: Kind, strategy: Strategy) -> Result<AltCertificate> {
    let n = h.vertex_count();
    let c = constraint(h, kind)?;
    let (perm, method, seed) = match strategy {
        Strategy::ExactAllOrders { cap } => {
            if n > cap {
                return Err(Error::Capacity { what: "vertex count for exhaustive ordering search", limit: cap, got: n });
            }
            (exact_min_order(&c, n), Method::Exhaustive, None)
        }
        Strategy::LocalSearch { seed, restarts } => {
            (local_search(&c, n, seed, restarts), Method::HeuristicOrderSearch, Some(seed))
        }
    };
    let sigma = LinearOrder::new(perm.iter().map(|&i| h.vertices()[i]).collect())?;
    let (value, witness) = Search::new(&c, &perm).branch_and_bound();
    Ok(AltCertificate {
        tool_version: TOOL_VERSION.to_string(),
        hypergraph_id: h.content_id(),
        vertex_count: n,
        order: sigma,
        kind,
        value,
        witness: SignVector::new(witness).expect("kernel emits signs"),
        bound: bound_for(kind, n, value),
        method,
        seed,
    })
}

/// Value of `order` if it is strictly below `cutoff`.
fn value_below(c: &EdgeConstraint, order: &[usize], cutoff: usize) -> Option<usize> {
    let search = Search::new(c, order);
    if search.reach(0, Sides::default(), 0, cutoff) {
        None
    } else {
        Some(search.max_alt())
    }
}

/// Lexicographically first ordering (of vertex indices) attaining the
/// minimum. Branches on the first element run in parallel; the reduction
/// prefers the earliest branch on ties.
fn exact_min_order(c: &EdgeConstraint, n: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let per_branch: Vec<(usize, Vec<usize>)> = (0..n)
        .into_par_iter()
        .map(|first| {
            let rest: Vec<usize> = (0..n).filter(|&i| i != first).collect();
            let mut best = (n + 1, Vec::new());
            for tail in rest.iter().copied().permutations(rest.len()) {
                let mut order = Vec::with_capacity(n);
                order.push(first);
                order.extend(tail);
                if let Some(v) = value_below(c, &order, best.0) {
                    best = (v, order);
                }
            }
            best
        })
        .collect();
    per_branch
        .into_iter()
        .reduce(|a, b| if b.0 < a.0 { b } else { a })
        .map(|b| b.1)
        .expect("n > 0")
}

fn local_search(c: &EdgeConstraint, n: usize, seed: u64, restarts: usize) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best_order: Vec<usize> = (0..n).collect();
    let mut best_value = Search::new(c, &best_order).max_alt();
    for restart in 0..=restarts {
        let mut order: Vec<usize> = (0..n).collect();
        if restart > 0 {
            order.shuffle(&mut rng);
        }
        let mut value = Search::new(c, &order).max_alt();
        loop {
            let mut step: Option<(usize, usize)> = None;
            for i in 0..n.saturating_sub(1) {
                order.swap(i, i + 1);
                let cutoff = step.map_or(value, |s| s.1);
                if let Some(v) = value_below(c, &order, cutoff) {
                    step = Some((i, v));
                }
                order.swap(i, i + 1);
            }
            match step {
                Some((i, v)) => {
                    order.swap(i, i + 1);
                    value = v;
                }
                None => break,
            }
        }
        if value < best_value {
            best_value = value;
            best_order = order;
        }
    }
    best_order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{kneser_hypergraph, schrijver_hypergraph};

    fn sv(v: &[i8]) -> SignVector {
        SignVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn singleton_edges_give_zero() {
        let h = Hypergraph::on_range(3, vec![vec![1], vec![2], vec![3]]).unwrap();
        for mode in [Mode::Exhaustive, Mode::BranchAndBound] {
            let sigma = LinearOrder::new(vec![2, 3, 1]).unwrap();
            assert_eq!(alt_sigma(&h, &sigma, mode).unwrap(), (0, sv(&[0, 0, 0])));
        }
        let cert = alt_min(&h, Kind::Alt, Strategy::default()).unwrap();
        assert_eq!(cert.value, 0);
        assert_eq!(cert.bound, 3);
    }

    #[test]
    fn alt_sigma_examples() {
        // Frozen from a 3^n brute-force oracle; witnesses are the
        // lexicographically smallest maximizers.
        let kg62 = kneser_hypergraph(6, 2).unwrap();
        let sg52 = schrijver_hypergraph(5, 2).unwrap();
        for mode in [Mode::Exhaustive, Mode::BranchAndBound] {
            assert_eq!(
                alt_sigma(&kg62, &LinearOrder::natural(6), mode).unwrap(),
                (2, sv(&[-1, 0, 0, 0, 0, 1]))
            );
            assert_eq!(
                alt_sigma(&sg52, &LinearOrder::natural(5), mode).unwrap(),
                (3, sv(&[-1, 0, 0, 1, -1]))
            );
        }
    }

    #[test]
    fn salt_sigma_examples() {
        for mode in [Mode::Exhaustive, Mode::BranchAndBound] {
            let sg62 = schrijver_hypergraph(6, 2).unwrap();
            assert_eq!(salt_sigma(&sg62, &LinearOrder::natural(6), mode).unwrap().0, 3);
            let sg93 = schrijver_hypergraph(9, 3).unwrap();
            assert_eq!(salt_sigma(&sg93, &LinearOrder::natural(9), mode).unwrap().0, 5);
            let empty = Hypergraph::on_range(3, vec![]).unwrap();
            assert_eq!(salt_sigma(&empty, &LinearOrder::natural(3), mode).unwrap(), (3, sv(&[-1, 1, -1])));
        }
    }

    #[test]
    fn alt_min_examples() {
        let pair = Hypergraph::on_range(2, vec![vec![1, 2]]).unwrap();
        let cert = alt_min(&pair, Kind::Alt, Strategy::default()).unwrap();
        assert_eq!(cert.value, 2);
        assert_eq!(cert.bound, 0);
        cert.check(&pair).unwrap();

        let sg52 = schrijver_hypergraph(5, 2).unwrap();
        let cert = alt_min(&sg52, Kind::Alt, Strategy::default()).unwrap();
        assert_eq!(cert.value, 3);
        cert.check(&sg52).unwrap();
    }

    #[test]
    fn alt_min_cap() {
        let big = kneser_hypergraph(10, 2).unwrap();
        assert!(matches!(alt_min(&big, Kind::Alt, Strategy::default()), Err(Error::Capacity { .. })));
        let cert = alt_min(&big, Kind::Alt, Strategy::LocalSearch { seed: 7, restarts: 2 }).unwrap();
        assert_eq!(cert.seed, Some(7));
        assert_eq!(cert.method, Method::HeuristicOrderSearch);
        cert.check(&big).unwrap();
        // alt(KG(n,k)) = 2k - 2 under every ordering.
        assert_eq!(cert.value, 2);
    }

    #[test]
    fn local_search_never_beats_exact() {
        let sg62 = schrijver_hypergraph(6, 2).unwrap();
        let exact = alt_min(&sg62, Kind::Salt, Strategy::default()).unwrap();
        let local = alt_min(&sg62, Kind::Salt, Strategy::LocalSearch { seed: 1, restarts: 3 }).unwrap();
        assert!(local.value >= exact.value);
        let again = alt_min(&sg62, Kind::Salt, Strategy::LocalSearch { seed: 1, restarts: 3 }).unwrap();
        assert_eq!(local, again);
    }

    #[test]
    fn bounds() {
        let sg52 = schrijver_hypergraph(5, 2).unwrap();
        let cert = certify(&sg52, &LinearOrder::natural(5), Kind::Salt, Mode::BranchAndBound).unwrap();
        assert_eq!((cert.value, certificate_bound(&cert)), (3, 3));
        let kg62 = kneser_hypergraph(6, 2).unwrap();
        let cert = certify(&kg62, &LinearOrder::natural(6), Kind::Alt, Mode::BranchAndBound).unwrap();
        assert_eq!((cert.value, certificate_bound(&cert)), (2, 4));
        cert.check(&kg62).unwrap();
        let mut forged = cert.clone();
        forged.value = 3;
        assert!(forged.check(&kg62).is_err());
    }
}
