use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::signed::{Hypergraph, LinearOrder};

/// A hypergraph together with a graph isomorphic to its general Kneser
/// graph. `vertex_map[i]` is the graph vertex of hyperedge `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KneserRepresentation {
    pub hypergraph: Hypergraph,
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<LinearOrder>,
}

impl KneserRepresentation {
    /// Checks that `vertex_map` is a bijection under which disjointness of
    /// hyperedges is exactly adjacency.
    pub fn verify(&self) -> Result<()> {
        let m = self.hypergraph.edge_count();
        if self.graph.n() != m || self.vertex_map.len() != m {
            return Err(Error::invalid("representation sizes disagree"));
        }
        let mut seen = vec![false; m];
        for &v in &self.vertex_map {
            if v >= m || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid("vertex map is not a bijection"));
            }
        }
        let edges = self.hypergraph.edges();
        for i in 0..m {
            for j in i + 1..m {
                let disjoint = disjoint(&edges[i], &edges[j]);
                if disjoint != self.graph.has_edge(self.vertex_map[i], self.vertex_map[j]) {
                    return Err(Error::invalid(format!(
                        "hyperedges {:?} and {:?}: disjointness and adjacency disagree",
                        edges[i], edges[j]
                    )));
                }
            }
        }
        if let Some(order) = &self.order {
            self.hypergraph.order_indices(order)?;
        }
        Ok(())
    }

    pub fn with_order(mut self, order: LinearOrder) -> Self {
        self.order = Some(order);
        self
    }
}

pub(crate) fn disjoint(a: &[u32], b: &[u32]) -> bool {
    // both sorted
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

pub(crate) fn set_label(e: &[u32]) -> String {
    format!("{{{}}}", e.iter().join(","))
}

/// `KG(h)`: one vertex per hyperedge, adjacent iff the hyperedges are
/// disjoint.
pub fn kneser_graph(h: &Hypergraph) -> KneserRepresentation {
    let edges = h.edges();
    let m = edges.len();
    let mut g = Graph::new(m);
    for i in 0..m {
        for j in i + 1..m {
            if disjoint(&edges[i], &edges[j]) {
                g.connect(i, j);
            }
        }
    }
    let g = g.with_labels(edges.iter().map(|e| set_label(e)).collect());
    KneserRepresentation { hypergraph: h.clone(), graph: g, vertex_map: (0..m).collect(), order: None }
}

/// All `s`-stable `k`-subsets of `[n]` in lexicographic order: distinct
/// elements `i, j` satisfy `s ≤ |i − j| ≤ n − s`.
pub fn stable_subsets(n: u32, k: u32, s: u32) -> Vec<Vec<u32>> {
    (1..=n)
        .combinations(k as usize)
        .filter(|c| c.iter().tuple_combinations().all(|(&i, &j)| s <= j - i && j - i <= n.saturating_sub(s)))
        .collect()
}

fn check_params(n: u32, k: u32) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(Error::invalid(format!("Kneser parameters need n >= 2k >= 2, got n={n}, k={k}")));
    }
    Ok(())
}

/// All `k`-subsets of `[n]`.
pub fn kneser_hypergraph(n: u32, k: u32) -> Result<Hypergraph> {
    check_params(n, k)?;
    Hypergraph::on_range(n, (1..=n).combinations(k as usize).collect())
}

/// All `s`-stable `k`-subsets of `[n]`.
pub fn stable_kneser_hypergraph(n: u32, k: u32, s: u32) -> Result<Hypergraph> {
    check_params(n, k)?;
    if s == 0 || n < s * k {
        return Err(Error::invalid(format!("stable Kneser parameters need s >= 1 and n >= sk, got n={n}, k={k}, s={s}")));
    }
    Hypergraph::on_range(n, stable_subsets(n, k, s))
}

pub fn schrijver_hypergraph(n: u32, k: u32) -> Result<Hypergraph> {
    stable_kneser_hypergraph(n, k, 2)
}

pub fn kneser(n: u32, k: u32) -> Result<KneserRepresentation> {
    Ok(kneser_graph(&kneser_hypergraph(n, k)?).with_order(LinearOrder::natural(n)))
}

pub fn stable_kneser(n: u32, k: u32, s: u32) -> Result<KneserRepresentation> {
    Ok(kneser_graph(&stable_kneser_hypergraph(n, k, s)?).with_order(LinearOrder::natural(n)))
}

pub fn schrijver(n: u32, k: u32) -> Result<KneserRepresentation> {
    stable_kneser(n, k, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn petersen() {
        let rep = kneser(5, 2).unwrap();
        rep.verify().unwrap();
        assert_eq!(rep.graph.n(), 10);
        assert_eq!(rep.graph.edge_count(), 15);
        assert!((0..10).all(|v| rep.graph.degree(v) == 3));
    }

    #[test]
    fn small_general_kneser() {
        let h = Hypergraph::on_range(2, vec![vec![1], vec![2]]).unwrap();
        let g = kneser_graph(&h).graph;
        assert_eq!((g.n(), g.edge_count()), (2, 1));

        let h = Hypergraph::on_range(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        let g = kneser_graph(&h).graph;
        assert_eq!((g.n(), g.edge_count()), (2, 0));
    }

    #[test]
    fn schrijver_examples() {
        let sg52 = schrijver(5, 2).unwrap();
        assert_eq!(
            sg52.hypergraph.edges(),
            &[vec![1, 3], vec![1, 4], vec![2, 4], vec![2, 5], vec![3, 5]]
        );
        assert_eq!(sg52.graph.edge_count(), 5);
        assert!((0..5).all(|v| sg52.graph.degree(v) == 2));
        assert_eq!(schrijver(6, 2).unwrap().graph.n(), 9);
        assert_eq!(kneser(6, 2).unwrap().graph.n(), 15);
    }

    #[test]
    fn vertex_counts() {
        for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3), (9, 3), (9, 4), (10, 3)] {
            assert_eq!(kneser_hypergraph(n, k).unwrap().edge_count() as u64, binom(n as u64, k as u64));
            let expected = n as u64 * binom((n - k) as u64, k as u64) / (n - k) as u64;
            assert_eq!(schrijver_hypergraph(n, k).unwrap().edge_count() as u64, expected, "SG({n},{k})");
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(kneser(3, 2).is_err());
        assert!(kneser(4, 0).is_err());
        assert!(stable_kneser(7, 3, 3).is_err());
        assert!(stable_kneser(9, 3, 3).is_ok());
    }

    #[test]
    fn verify_catches_bad_map() {
        let mut rep = kneser(5, 2).unwrap();
        rep.vertex_map.swap(0, 1);
        assert!(rep.verify().is_err());
    }
}
