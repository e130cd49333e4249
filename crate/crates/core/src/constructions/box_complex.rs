use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Facet enumeration visits every subset pair, so inputs are kept small.
pub const BOX_COMPLEX_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoxVariant {
    /// `A ⊎ B` with `G[A,B]` complete and `CN(A) ≠ ∅ ≠ CN(B)`.
    B,
    /// `A ⊎ B` with `A ∩ B = ∅` and `G[A,B]` complete.
    B0,
}

/// Simplicial complex on `V × {1, 2}` given by its facets. A simplex
/// `A ⊎ B` is stored as the pair of vertex masks `(A, B)`; the involution
/// swaps them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Z2SimplicialComplex {
    pub n: usize,
    pub facets: Vec<(u32, u32)>,
}

impl Z2SimplicialComplex {
    /// `(v, copy)` for `copy ∈ {1, 2}` goes to the other copy.
    pub fn involution(&self, v: usize, copy: u8) -> (usize, u8) {
        (v, 3 - copy)
    }

    pub fn is_free(&self) -> bool {
        (0..self.n).all(|v| (1..=2).all(|c| self.involution(v, c) != (v, c)))
    }

    pub fn contains(&self, a: u32, b: u32) -> bool {
        self.facets.iter().any(|&(fa, fb)| a & !fa == 0 && b & !fb == 0)
    }

    /// The facet list is closed under the involution.
    pub fn is_symmetric(&self) -> bool {
        self.facets.iter().all(|&(a, b)| self.contains(b, a))
    }

    /// Whether the vertex map `v ↦ f[v]` applied to both copies sends every
    /// simplex of `self` into `other`. Such a map commutes with the
    /// involution by construction.
    pub fn map_is_simplicial(&self, other: &Z2SimplicialComplex, f: &[usize]) -> bool {
        let image = |m: u32| (0..self.n).filter(|&v| m >> v & 1 == 1).fold(0u32, |acc, v| acc | 1 << f[v]);
        f.len() == self.n
            && f.iter().all(|&x| x < other.n)
            && self.facets.iter().all(|&(a, b)| other.contains(image(a), image(b)))
    }
}

pub fn box_complex(g: &Graph, variant: BoxVariant) -> Result<Z2SimplicialComplex> {
    let n = g.n();
    if n > BOX_COMPLEX_CAP {
        return Err(Error::Capacity { what: "box complex vertices", limit: BOX_COMPLEX_CAP, got: n });
    }
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w)).collect();
    // common neighbourhood of every subset; CN(∅) = V
    let mut cn = vec![full; 1usize << n];
    for s in 1..1usize << n {
        let low = s.trailing_zeros() as usize;
        cn[s] = cn[s & (s - 1)] & nbr[low];
    }
    let admissible = |a: u32, b: u32| match variant {
        BoxVariant::B0 => a | b != 0 && b & !cn[a as usize] == 0,
        BoxVariant::B => b & !cn[a as usize] == 0 && cn[a as usize] != 0 && cn[b as usize] != 0,
    };
    let mut facets = Vec::new();
    for a in 0..=full {
        let room = cn[a as usize];
        if variant == BoxVariant::B && room == 0 {
            continue;
        }
        // submasks of CN(A), largest first
        let mut b = room;
        loop {
            if admissible(a, b) {
                let maximal = (0..n).all(|v| {
                    let bit = 1u32 << v;
                    (a & bit != 0 || !admissible(a | bit, b)) && (b & bit != 0 || !admissible(a, b | bit))
                });
                if maximal {
                    facets.push((a, b));
                }
            }
            if b == 0 {
                break;
            }
            b = (b - 1) & room;
        }
    }
    facets.sort_unstable();
    Ok(Z2SimplicialComplex { n, facets })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b0_of_k2() {
        let c = box_complex(&Graph::complete(2), BoxVariant::B0).unwrap();
        // {(1,1),(2,2)} and {(2,1),(1,2)}
        assert!(c.facets.contains(&(0b01, 0b10)));
        assert!(c.facets.contains(&(0b10, 0b01)));
        assert!(c.facets.contains(&(0b11, 0)));
        assert_eq!(c.facets.len(), 4);
        assert!(c.is_free() && c.is_symmetric());
    }

    #[test]
    fn b_excludes_sets_without_common_neighbours() {
        let c = box_complex(&Graph::complete(2), BoxVariant::B).unwrap();
        assert!(!c.contains(0b11, 0));
        assert!(c.contains(0b01, 0b10));
        let c = box_complex(&Graph::cycle(5), BoxVariant::B).unwrap();
        assert!(c.is_free() && c.is_symmetric());
    }

    #[test]
    fn homomorphism_induces_simplicial_map() {
        let k2 = box_complex(&Graph::complete(2), BoxVariant::B0).unwrap();
        let k3 = box_complex(&Graph::complete(3), BoxVariant::B0).unwrap();
        assert!(k2.map_is_simplicial(&k3, &[0, 2]));
        // collapsing an edge is not a homomorphism and breaks simpliciality
        let p = box_complex(&Graph::path(3), BoxVariant::B0).unwrap();
        assert!(!p.map_is_simplicial(&k2, &[0, 1, 1]));
    }

    #[test]
    fn facets_are_simplices_and_closed_downward() {
        let g = Graph::cycle(5);
        for variant in [BoxVariant::B, BoxVariant::B0] {
            let c = box_complex(&g, variant).unwrap();
            for &(a, b) in &c.facets {
                for v in 0..5 {
                    let bit = 1u32 << v;
                    assert!(c.contains(a & !bit, b));
                    assert!(c.contains(a, b & !bit));
                }
            }
        }
    }

    #[test]
    fn capacity() {
        assert!(box_complex(&Graph::new(13), BoxVariant::B).is_err());
    }
}
