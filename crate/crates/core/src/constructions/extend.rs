use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signed::{Hypergraph, LinearOrder};

use super::kneser::KneserRepresentation;

/// Adds a vertex `v` past the current maximum, the hyperedge `V ∪ {v}` and
/// appends `v` to `σ`. The Kneser graph gains one isolated vertex while
/// `alt` grows by at most one.
pub fn extend_rep_isolated(h: &Hypergraph, sigma: &LinearOrder) -> Result<(Hypergraph, LinearOrder)> {
    h.order_indices(sigma)?;
    let v = h.max_vertex().map_or(1, |m| m + 1);
    let mut vertices = h.vertices().to_vec();
    vertices.push(v);
    let mut edges = h.edges().to_vec();
    edges.push(vertices.clone());
    let order = sigma.concat(&LinearOrder::new(vec![v])?)?;
    Ok((Hypergraph::new(vertices, edges)?, order))
}

/// Result of adding one edge to a represented graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeExtension {
    pub hypergraph: Hypergraph,
    pub order: LinearOrder,
    /// `|A ∩ B|`: each step adds two vertices and at most two to `alt`.
    pub steps: usize,
    pub representation: KneserRepresentation,
}

/// Makes graph vertices `a` and `b` adjacent. For each `y ∈ A ∩ B` (in
/// order position) a fresh `y'` replaces `y` in `A`, joins every other
/// hyperedge through `y` except `B`, and `σ` has `y` replaced by
/// `y < z < y'` with `z` a fresh isolated vertex.
pub fn extend_rep_edge(rep: &KneserRepresentation, a: usize, b: usize) -> Result<EdgeExtension> {
    let h = &rep.hypergraph;
    let n = rep.graph.n();
    if a >= n || b >= n || a == b {
        return Err(Error::invalid(format!("need two distinct graph vertices below {n}, got {a} and {b}")));
    }
    if rep.graph.has_edge(a, b) {
        return Err(Error::invalid(format!("vertices {a} and {b} are already adjacent")));
    }
    let sigma = rep.order.clone().unwrap_or_else(|| h.natural_order());
    h.order_indices(&sigma)?;
    let edge_of = |v: usize| rep.vertex_map.iter().position(|&x| x == v).expect("vertex map is a bijection");
    let (ia, ib) = (edge_of(a), edge_of(b));

    let mut edges = h.edges().to_vec();
    let mut shared: Vec<u32> = edges[ia].iter().copied().filter(|y| edges[ib].contains(y)).collect();
    shared.sort_by_key(|&y| sigma.position(y));

    let mut vertices = h.vertices().to_vec();
    let mut next = h.max_vertex().map_or(1, |m| m + 1);
    let mut order = sigma.as_slice().to_vec();
    for &y in &shared {
        let (twin, pad) = (next, next + 1);
        next += 2;
        vertices.extend([twin, pad]);
        for (i, e) in edges.iter_mut().enumerate() {
            if i == ib || !e.contains(&y) {
                continue;
            }
            if i == ia {
                e.retain(|&x| x != y);
            }
            e.push(twin);
        }
        let p = order.iter().position(|&x| x == y).expect("order covers every vertex");
        order.splice(p + 1..p + 1, [pad, twin]);
    }
    let hypergraph = Hypergraph::new(vertices, edges)?;
    let order = LinearOrder::new(order)?;
    let mut graph = rep.graph.clone();
    graph.connect(a, b);
    let representation = KneserRepresentation {
        hypergraph: hypergraph.clone(),
        graph,
        vertex_map: rep.vertex_map.clone(),
        order: Some(order.clone()),
    };
    representation.verify()?;
    Ok(EdgeExtension { hypergraph, order, steps: shared.len(), representation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{kneser_graph, schrijver_hypergraph};

    #[test]
    fn isolated_extension() {
        let h = schrijver_hypergraph(5, 2).unwrap();
        let (h1, s1) = extend_rep_isolated(&h, &LinearOrder::natural(5)).unwrap();
        assert_eq!(h1.edges().last().unwrap(), &vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(s1.as_slice(), &[1, 2, 3, 4, 5, 6]);
        let g = kneser_graph(&h1).graph;
        assert_eq!(g.degree(5), 0);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn edge_extension_on_path() {
        let h = Hypergraph::on_range(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        let rep = kneser_graph(&h).with_order(LinearOrder::natural(3));
        let ext = extend_rep_edge(&rep, 0, 1).unwrap();
        assert_eq!(ext.steps, 1);
        assert_eq!(ext.hypergraph.edges(), &[vec![1, 4], vec![2, 3]]);
        assert_eq!(ext.order.as_slice(), &[1, 2, 5, 4, 3]);
        assert!(ext.representation.graph.has_edge(0, 1));
        assert!(extend_rep_edge(&ext.representation, 0, 1).is_err());
    }

    #[test]
    fn chained_extensions() {
        let h = Hypergraph::on_range(4, vec![vec![1, 2], vec![2, 3], vec![3, 4, 1]]).unwrap();
        let rep = kneser_graph(&h).with_order(LinearOrder::natural(4));
        assert_eq!(rep.graph.edge_count(), 0);
        let one = extend_rep_edge(&rep, 0, 1).unwrap();
        let two = extend_rep_edge(&one.representation, 1, 2).unwrap();
        let g = &two.representation.graph;
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert_eq!(two.hypergraph.vertex_count(), 4 + 2 + 2);
    }
}
