use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::signed::{Hypergraph, LinearOrder};

use super::kneser::{kneser_graph, KneserRepresentation};

/// `G × H` with vertex `(a, b)` numbered `a·|V(H)| + b`.
pub fn categorical_product(g: &Graph, h: &Graph) -> Graph {
    let w = h.n();
    let mut p = Graph::new(g.n() * w);
    for (a, a2) in g.edges() {
        for (b, b2) in h.edges() {
            p.connect(a * w + b, a2 * w + b2);
            p.connect(a * w + b2, a2 * w + b);
        }
    }
    if g.labels().is_some() || h.labels().is_some() {
        let labels = (0..g.n())
            .flat_map(|a| (0..w).map(move |b| (a, b)))
            .map(|(a, b)| format!("({},{})", g.label(a), h.label(b)))
            .collect();
        p = p.with_labels(labels);
    }
    p
}

/// `L` with `E(L) = {A ∪ B}`, representing `KG(hg) × KG(hh)`. The second
/// factor is shifted past the first when their vertex sets meet.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductRepresentation {
    pub hypergraph: Hypergraph,
    pub graph: Graph,
    /// Graph vertex of each hyperedge of `hypergraph`.
    pub vertex_map: Vec<usize>,
    /// Original and new id of every relabeled vertex of the second factor.
    pub relabeled: Vec<(u32, u32)>,
}

impl ProductRepresentation {
    pub fn representation(&self) -> KneserRepresentation {
        KneserRepresentation {
            hypergraph: self.hypergraph.clone(),
            graph: self.graph.clone(),
            vertex_map: self.vertex_map.clone(),
            order: None,
        }
    }

    /// Maps an ordering of the second factor onto its relabeled vertices.
    pub fn second_order(&self, tau: &LinearOrder) -> Result<LinearOrder> {
        if self.relabeled.is_empty() {
            return Ok(tau.clone());
        }
        let map: std::collections::HashMap<u32, u32> = self.relabeled.iter().copied().collect();
        let ids = tau
            .as_slice()
            .iter()
            .map(|v| map.get(v).copied().ok_or_else(|| Error::invalid(format!("vertex {v} is not in the second factor"))))
            .collect::<Result<Vec<_>>>()?;
        LinearOrder::new(ids)
    }

    /// `π = σ || τ` on the vertex set of `L`.
    pub fn order(&self, sigma: &LinearOrder, tau: &LinearOrder) -> Result<LinearOrder> {
        let pi = sigma.concat(&self.second_order(tau)?)?;
        self.hypergraph.order_indices(&pi)?;
        Ok(pi)
    }
}

pub fn product_representation(hg: &Hypergraph, hh: &Hypergraph) -> Result<ProductRepresentation> {
    let first: std::collections::HashSet<u32> = hg.vertices().iter().copied().collect();
    let mut relabeled = Vec::new();
    let second = if hh.vertices().iter().any(|v| first.contains(v)) {
        let offset = hg.max_vertex().map_or(1, |v| v + 1);
        let map: std::collections::HashMap<u32, u32> =
            hh.vertices().iter().enumerate().map(|(i, &v)| (v, offset + i as u32)).collect();
        relabeled = hh.vertices().iter().map(|v| (*v, map[v])).collect();
        hh.relabel(|v| map[&v])?
    } else {
        hh.clone()
    };

    let mut edges = Vec::with_capacity(hg.edge_count() * second.edge_count());
    let mut seen = std::collections::HashSet::new();
    for a in hg.edges() {
        for b in second.edges() {
            let mut e = a.clone();
            e.extend(b);
            e.sort_unstable();
            if !seen.insert(e.clone()) {
                return Err(Error::invalid(format!("product hyperedge {e:?} arises twice")));
            }
            edges.push(e);
        }
    }
    let mut vertices = hg.vertices().to_vec();
    vertices.extend(second.vertices());
    let hypergraph = Hypergraph::new(vertices, edges)?;
    let graph = categorical_product(&kneser_graph(hg).graph, &kneser_graph(hh).graph);
    let rep = ProductRepresentation {
        vertex_map: (0..hypergraph.edge_count()).collect(),
        hypergraph,
        graph,
        relabeled,
    };
    rep.representation().verify()?;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{graphs_isomorphic, schrijver_hypergraph};

    #[test]
    fn small_products() {
        let k2 = Graph::complete(2);
        let p = categorical_product(&k2, &k2);
        assert_eq!((p.n(), p.edge_count()), (4, 2));
        assert!(p.degree_sequence().iter().all(|&d| d == 1));

        let p = categorical_product(&Graph::cycle(5), &k2);
        assert!(graphs_isomorphic(&p, &Graph::cycle(10)).unwrap().is_some());
    }

    #[test]
    fn singleton_factors() {
        let h = Hypergraph::on_range(1, vec![vec![1]]).unwrap();
        let rep = product_representation(&h, &h).unwrap();
        assert_eq!(rep.hypergraph.edges(), &[vec![1, 2]]);
        assert_eq!(rep.relabeled, vec![(1, 2)]);
        assert_eq!(rep.graph.n(), 1);
    }

    #[test]
    fn schrijver_times_k2_is_c10() {
        let sg = schrijver_hypergraph(5, 2).unwrap();
        let k2 = Hypergraph::on_range(2, vec![vec![1], vec![2]]).unwrap();
        let rep = product_representation(&sg, &k2).unwrap();
        assert_eq!(rep.hypergraph.vertex_count(), 7);
        let kg = kneser_graph(&rep.hypergraph).graph;
        assert!(graphs_isomorphic(&kg, &Graph::cycle(10)).unwrap().is_some());
        let pi = rep.order(&LinearOrder::natural(5), &LinearOrder::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(pi.as_slice(), &[1, 2, 3, 4, 5, 7, 6]);
    }

    #[test]
    fn disjoint_factors_keep_labels() {
        let a = Hypergraph::on_range(2, vec![vec![1], vec![2]]).unwrap();
        let b = Hypergraph::new(vec![3, 4], vec![vec![3], vec![4]]).unwrap();
        let rep = product_representation(&a, &b).unwrap();
        assert!(rep.relabeled.is_empty());
        assert_eq!(rep.hypergraph.edges(), &[vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
    }
}
