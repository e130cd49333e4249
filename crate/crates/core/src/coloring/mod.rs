//! Exact colouring oracles.

mod clique;
mod hom;
mod kcolor;
mod multi;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use clique::{clique_number, maximum_clique};
pub use hom::{has_homomorphism, is_homomorphism, HOM_CAP};
pub use kcolor::{chromatic_number, chromatic_number_within, greedy_coloring, is_k_colorable, is_k_colorable_within};
pub use multi::{multichromatic_number, multichromatic_number_within, multicoloring_exists, multicoloring_exists_within};

/// Wall-clock allowance shared by the exact searches.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Budget { deadline: Some(Instant::now() + timeout) }
    }

    pub fn from_millis(ms: Option<u64>) -> Self {
        ms.map_or_else(Budget::unlimited, |ms| Budget::with_timeout(Duration::from_millis(ms)))
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Outcome of a bounded decision search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE", tag = "verdict", content = "witness")]
pub enum Verdict<T> {
    Sat(T),
    Unsat,
    Timeout,
}

impl<T> Verdict<T> {
    pub fn into_option(self) -> Option<T> {
        match self {
            Verdict::Sat(t) => Some(t),
            _ => None,
        }
    }
}

/// A minimum or bracketed value: `lower == upper` means exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval<W> {
    pub lower: usize,
    pub upper: usize,
    /// Witness for `upper`.
    pub witness: W,
}

impl<W> Interval<W> {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn exact(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub assignment: Vec<usize>,
}

impl Coloring {
    pub fn new(g: &Graph, k: usize, assignment: Vec<usize>) -> Result<Self> {
        let c = Coloring { k, assignment };
        c.check(g)?;
        Ok(c)
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.n() {
            return Err(Error::LengthMismatch { what: "coloring", expected: g.n(), got: self.assignment.len() });
        }
        if let Some(v) = self.assignment.iter().position(|&c| c >= self.k) {
            return Err(Error::invalid(format!("vertex {v} uses color {} outside [0,{})", self.assignment[v], self.k)));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| self.assignment[u] == self.assignment[v]) {
            return Err(Error::invalid(format!("edge {u}-{v} is monochromatic")));
        }
        Ok(())
    }

    pub fn colors_used(&self) -> usize {
        let mut seen = self.assignment.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Colouring of `G × H` taking the colour of the first coordinate.
    pub fn project_onto_product(&self, second_factor_order: usize) -> Coloring {
        let assignment = self
            .assignment
            .iter()
            .flat_map(|&c| std::iter::repeat_n(c, second_factor_order))
            .collect();
        Coloring { k: self.k, assignment }
    }
}

/// `m`-fold colouring with colour sets drawn from `[n]`, stored as bit masks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multicoloring {
    pub m: usize,
    pub n: usize,
    pub assignment: Vec<Vec<usize>>,
}

impl Multicoloring {
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.n() {
            return Err(Error::LengthMismatch { what: "multicoloring", expected: g.n(), got: self.assignment.len() });
        }
        let masks = self.masks()?;
        if let Some((u, v)) = g.edges().find(|&(u, v)| masks[u] & masks[v] != 0) {
            return Err(Error::invalid(format!("edge {u}-{v} has overlapping color sets")));
        }
        Ok(())
    }

    fn masks(&self) -> Result<Vec<u64>> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(v, set)| {
                let mask = set.iter().try_fold(0u64, |acc, &c| {
                    (c < self.n && c < 64 && acc >> c & 1 == 0).then_some(acc | 1 << c)
                });
                match mask {
                    Some(mask) if set.len() == self.m => Ok(mask),
                    _ => Err(Error::invalid(format!("vertex {v} needs {} distinct colors from [0,{})", self.m, self.n))),
                }
            })
            .collect()
    }
}
