//! Signed increasing properties: superset-closed families of signed pairs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::signed::kernel::{Constraint, Search, Sides};
use crate::signed::{Hypergraph, LinearOrder, SignedPair};

/// A superset-closed family of signed pairs over a fixed ground set. Pairs
/// are passed as bitmasks over positions in [`SignedProperty::ground`].
pub trait SignedProperty: Sync {
    fn ground(&self) -> &[u32];

    fn holds(&self, plus: u128, minus: u128) -> bool;

    /// Evaluates the property on vertex sets.
    fn holds_for(&self, pair: &SignedPair) -> bool {
        let mask = |set: &std::collections::BTreeSet<u32>| {
            self.ground()
                .iter()
                .enumerate()
                .filter(|(_, v)| set.contains(v))
                .fold(0u128, |m, (i, _)| m | 1 << i)
        };
        self.holds(mask(&pair.plus), mask(&pair.minus))
    }
}

fn masks_of(h: &Hypergraph) -> Result<Vec<u128>> {
    h.edge_masks()
}

/// `P₁`: either side contains a hyperedge.
pub struct EitherContains {
    ground: Vec<u32>,
    edges: Vec<u128>,
}

/// `P₂`: both sides contain a hyperedge.
pub struct BothContain {
    ground: Vec<u32>,
    edges: Vec<u128>,
}

impl EitherContains {
    pub fn new(h: &Hypergraph) -> Result<Self> {
        Ok(EitherContains { ground: h.vertices().to_vec(), edges: masks_of(h)? })
    }
}

impl BothContain {
    pub fn new(h: &Hypergraph) -> Result<Self> {
        Ok(BothContain { ground: h.vertices().to_vec(), edges: masks_of(h)? })
    }
}

fn has_edge(edges: &[u128], side: u128) -> bool {
    edges.iter().any(|&e| e & !side == 0)
}

impl SignedProperty for EitherContains {
    fn ground(&self) -> &[u32] {
        &self.ground
    }

    fn holds(&self, plus: u128, minus: u128) -> bool {
        has_edge(&self.edges, plus) || has_edge(&self.edges, minus)
    }
}

impl SignedProperty for BothContain {
    fn ground(&self) -> &[u32] {
        &self.ground
    }

    fn holds(&self, plus: u128, minus: u128) -> bool {
        has_edge(&self.edges, plus) && has_edge(&self.edges, minus)
    }
}

/// `P(n, k, s)` on `[n]`: each side contains `⌈s/2⌉` pairwise disjoint
/// `s`-stable `k`-subsets.
pub struct DisjointStableFamilies {
    ground: Vec<u32>,
    family: Vec<u128>,
    need: usize,
}

impl DisjointStableFamilies {
    pub fn new(n: u32, k: u32, s: u32) -> Result<Self> {
        if n as usize > crate::signed::hypergraph::KERNEL_VERTEX_CAP {
            return Err(Error::Capacity {
                what: "ground set size",
                limit: crate::signed::hypergraph::KERNEL_VERTEX_CAP,
                got: n as usize,
            });
        }
        if k == 0 || s == 0 {
            return Err(Error::invalid("k and s must be positive"));
        }
        let family = crate::constructions::stable_subsets(n, k, s)
            .into_iter()
            .map(|set| set.iter().fold(0u128, |m, &v| m | 1 << (v - 1)))
            .collect();
        Ok(DisjointStableFamilies {
            ground: (1..=n).collect(),
            family,
            need: s.div_ceil(2) as usize,
        })
    }

    fn side_holds(&self, side: u128) -> bool {
        let inside: Vec<u128> = self.family.iter().copied().filter(|&f| f & !side == 0).collect();
        pick_disjoint(&inside, 0, 0, self.need)
    }
}

fn pick_disjoint(sets: &[u128], from: usize, used: u128, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    (from..sets.len()).any(|i| sets[i] & used == 0 && pick_disjoint(sets, i + 1, used | sets[i], need - 1))
}

impl SignedProperty for DisjointStableFamilies {
    fn ground(&self) -> &[u32] {
        &self.ground
    }

    fn holds(&self, plus: u128, minus: u128) -> bool {
        self.side_holds(plus) && self.side_holds(minus)
    }
}

/// Adapts an arbitrary predicate on vertex-set pairs.
pub struct PredicateProperty<F> {
    ground: Vec<u32>,
    predicate: F,
}

impl<F: Fn(&SignedPair) -> bool + Sync> PredicateProperty<F> {
    pub fn new(ground: Vec<u32>, predicate: F) -> Self {
        PredicateProperty { ground, predicate }
    }
}

impl<F: Fn(&SignedPair) -> bool + Sync> SignedProperty for PredicateProperty<F> {
    fn ground(&self) -> &[u32] {
        &self.ground
    }

    fn holds(&self, plus: u128, minus: u128) -> bool {
        let mut pair = SignedPair::default();
        for (i, &v) in self.ground.iter().enumerate() {
            if plus >> i & 1 == 1 {
                pair.plus.insert(v);
            } else if minus >> i & 1 == 1 {
                pair.minus.insert(v);
            }
        }
        (self.predicate)(&pair)
    }

    fn holds_for(&self, pair: &SignedPair) -> bool {
        (self.predicate)(pair)
    }
}

struct PropertyConstraint<'a> {
    property: &'a dyn SignedProperty,
}

impl Constraint for PropertyConstraint<'_> {
    fn push(&self, mut s: Sides, v: usize, positive: bool) -> Sides {
        if positive {
            s.plus |= 1 << v;
        } else {
            s.minus |= 1 << v;
        }
        s
    }

    fn allowed(&self, s: &Sides) -> bool {
        !self.property.holds(s.plus, s.minus)
    }
}

/// Number of random (pair, one-element extension) probes in the
/// superset-closure spot check.
pub const MONOTONE_PROBES: usize = 512;

/// Samples random disjoint pairs and one-element extensions and fails if a
/// member of the property has an extension outside it.
pub fn check_monotone(p: &dyn SignedProperty, seed: u64) -> Result<()> {
    let n = p.ground().len();
    if n == 0 {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions: Vec<usize> = (0..n).collect();
    for _ in 0..MONOTONE_PROBES {
        let (mut plus, mut minus) = (0u128, 0u128);
        for i in 0..n {
            match rng.random_range(0..3) {
                0 => plus |= 1 << i,
                1 => minus |= 1 << i,
                _ => {}
            }
        }
        if !p.holds(plus, minus) {
            continue;
        }
        positions.shuffle(&mut rng);
        let Some(&free) = positions.iter().find(|&&i| (plus | minus) >> i & 1 == 0) else {
            continue;
        };
        let (a, b) = if rng.random_bool(0.5) { (plus | 1 << free, minus) } else { (plus, minus | 1 << free) };
        if !p.holds(a, b) {
            return Err(Error::NonMonotone(format!(
                "pair (plus={plus:#x}, minus={minus:#x}) is in the property but adding ground element {} is not",
                p.ground()[free]
            )));
        }
    }
    Ok(())
}

/// `alt_σ(V, P)`: the largest `alt(X)` with `X_σ ∉ P`, computed exactly
/// after a seeded superset-closure spot check.
pub fn alt_property(p: &dyn SignedProperty, sigma: &LinearOrder) -> Result<usize> {
    let ground = p.ground();
    if ground.len() > crate::signed::hypergraph::KERNEL_VERTEX_CAP {
        return Err(Error::Capacity {
            what: "ground set size",
            limit: crate::signed::hypergraph::KERNEL_VERTEX_CAP,
            got: ground.len(),
        });
    }
    if sigma.len() != ground.len() {
        return Err(Error::LengthMismatch { what: "ordering", expected: ground.len(), got: sigma.len() });
    }
    let order = sigma
        .as_slice()
        .iter()
        .map(|v| {
            ground
                .iter()
                .position(|g| g == v)
                .ok_or_else(|| Error::invalid(format!("ordering mentions vertex {v} outside the ground set")))
        })
        .collect::<Result<Vec<_>>>()?;
    check_monotone(p, 0x5eed)?;
    let constraint = PropertyConstraint { property: p };
    Ok(Search::new(&constraint, &order).max_alt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::schrijver_hypergraph;

    #[test]
    fn p1_p2_on_sg52() {
        let h = schrijver_hypergraph(5, 2).unwrap();
        let sigma = LinearOrder::natural(5);
        assert_eq!(alt_property(&EitherContains::new(&h).unwrap(), &sigma).unwrap(), 3);
        assert_eq!(alt_property(&BothContain::new(&h).unwrap(), &sigma).unwrap(), 3);
    }

    #[test]
    fn disjoint_stable_families() {
        // alt_I([n], P(n,k,s)) = sk - 1
        for (n, k, s, expected) in [(6, 2, 2, 3), (8, 2, 4, 7), (9, 2, 4, 7)] {
            let p = DisjointStableFamilies::new(n, k, s).unwrap();
            assert_eq!(alt_property(&p, &LinearOrder::natural(n)).unwrap(), expected, "{n} {k} {s}");
        }
    }

    #[test]
    fn non_monotone_rejected() {
        // "plus is exactly {1}" is not superset-closed.
        let p = PredicateProperty::new(vec![1, 2, 3], |pair: &SignedPair| pair.plus == [1].into());
        assert!(matches!(alt_property(&p, &LinearOrder::natural(3)), Err(Error::NonMonotone(_))));
    }

    #[test]
    fn predicate_property_matches_builtin() {
        let h = schrijver_hypergraph(6, 2).unwrap();
        let edges = h.clone();
        let p = PredicateProperty::new(h.vertices().to_vec(), move |pair: &SignedPair| {
            edges.contains_edge(&pair.plus) && edges.contains_edge(&pair.minus)
        });
        let sigma = LinearOrder::natural(6);
        assert_eq!(
            alt_property(&p, &sigma).unwrap(),
            alt_property(&BothContain::new(&h).unwrap(), &sigma).unwrap()
        );
    }
}
