use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::signed::{Hypergraph, LinearOrder};

use super::kneser::{kneser_graph, KneserRepresentation};

/// `M(G)`: vertices `u_0..u_{n-1}`, twins `v_0..v_{n-1}` and the root `w`,
/// numbered in that order.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut m = Graph::new(2 * n + 1);
    for (a, b) in g.edges() {
        m.connect(a, b);
        m.connect(a, n + b);
        m.connect(n + a, b);
    }
    for i in 0..n {
        m.connect(2 * n, n + i);
    }
    let labels = (0..n)
        .map(|i| g.label(i))
        .chain((0..n).map(|i| format!("{}'", g.label(i))))
        .chain(std::iter::once("w".to_string()))
        .collect();
    m.with_labels(labels)
}

/// A blow-up and the projection of each copy onto its original vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowUp {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

/// `G(r, μ)`: vertex `μ[i]` is replaced by `r[i]` pairwise nonadjacent
/// copies and every edge by a complete bipartite graph. Copies are numbered
/// in `μ` order.
pub fn blow_up(g: &Graph, r: &[usize], mu: &[usize]) -> Result<BlowUp> {
    let n = g.n();
    if r.len() != n {
        return Err(Error::LengthMismatch { what: "multiplicity vector", expected: n, got: r.len() });
    }
    if let Some(i) = r.iter().position(|&x| x == 0) {
        return Err(Error::invalid(format!("multiplicity r[{i}] must be positive")));
    }
    if mu.len() != n || !mu.iter().copied().sorted().eq(0..n) {
        return Err(Error::invalid("vertex ordering must be a permutation of the graph's vertices"));
    }
    let origin: Vec<usize> = mu.iter().zip(r).flat_map(|(&v, &k)| std::iter::repeat_n(v, k)).collect();
    let mut b = Graph::new(origin.len());
    for x in 0..origin.len() {
        for y in x + 1..origin.len() {
            if g.has_edge(origin[x], origin[y]) {
                b.connect(x, y);
            }
        }
    }
    let mut copy = vec![0usize; n];
    let labels = origin
        .iter()
        .map(|&v| {
            copy[v] += 1;
            format!("{}^{}", g.label(v), copy[v])
        })
        .collect();
    Ok(BlowUp { graph: b.with_labels(labels), origin })
}

/// Kneser representation of a blow-up of `M(KG(f))` together with the
/// ordering `π = τ || σ` whose alternation number grows by at most
/// `2m(2t+1) − 1` over `alt_σ(f)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MycielskiRepresentation {
    pub hypergraph: Hypergraph,
    pub order: LinearOrder,
    /// `M(KG(f))(r, μ)` with `μ` = KG(f) vertices, twins, root.
    pub target: BlowUp,
    pub multiplicities: Vec<usize>,
    /// Graph vertex of each hyperedge of `hypergraph`.
    pub vertex_map: Vec<usize>,
    /// Names of the vertices added to `f`'s vertex set.
    pub labels: Vec<(u32, String)>,
    pub t: usize,
}

impl MycielskiRepresentation {
    pub fn representation(&self) -> KneserRepresentation {
        KneserRepresentation {
            hypergraph: self.hypergraph.clone(),
            graph: self.target.graph.clone(),
            vertex_map: self.vertex_map.clone(),
            order: Some(self.order.clone()),
        }
    }

    /// Checks that disjointness in `hypergraph` is adjacency in `target`.
    pub fn verify(&self) -> Result<()> {
        self.representation().verify()
    }

    /// `alt_σ(f) + 2m(2t+1) − 1`, the ceiling on `alt_π(h)`.
    pub fn alt_ceiling(&self, alt_sigma_f: usize) -> usize {
        let m = self.multiplicities.len().saturating_sub(1) / 2;
        alt_sigma_f + 2 * m * (2 * self.t + 1) - 1
    }
}

pub fn mycielski_representation(f: &Hypergraph, sigma: &LinearOrder, t: usize) -> Result<MycielskiRepresentation> {
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let m = f.edge_count();
    if m == 0 {
        return Err(Error::invalid("the base hypergraph needs at least one hyperedge"));
    }
    f.order_indices(sigma)?;
    let width = 2 * t + 1;
    let mut next = f.max_vertex().map_or(1, |v| v + 1);
    let mut fresh = |count: usize| {
        let ids: Vec<u32> = (next..next + count as u32).collect();
        next += count as u32;
        ids
    };
    let b = fresh(width);
    let c = fresh(width * (m - 1));
    let a = fresh(m * width); // a[i * width + j] = a_{i+1, j+1}

    let mut labels = Vec::new();
    labels.extend(b.iter().enumerate().map(|(j, &id)| (id, format!("b{}", j + 1))));
    labels.extend(c.iter().enumerate().map(|(j, &id)| (id, format!("c{}", j + 1))));
    labels.extend(a.iter().enumerate().map(|(x, &id)| (id, format!("a{},{}", x / width + 1, x % width + 1))));

    let base = f.edges();
    let mut edges: Vec<Vec<u32>> = Vec::new();
    for (i, ai) in base.iter().enumerate() {
        for j in 0..width {
            let mut e = ai.clone();
            e.push(a[i * width + j]);
            edges.push(e);
        }
    }
    let l = (0..width).combinations(t + 1).count();
    for ai in base {
        for subset in (0..width).combinations(t + 1) {
            let mut e = ai.clone();
            e.extend(subset.iter().map(|&j| b[j]));
            edges.push(e);
        }
    }
    edges.push(a.clone());

    let mut vertices = f.vertices().to_vec();
    vertices.extend(&b);
    vertices.extend(&c);
    vertices.extend(&a);
    let hypergraph = Hypergraph::new(vertices, edges)?;

    let mut tau = Vec::with_capacity(2 * m * width);
    let mut c_iter = c.iter();
    for j in 0..width {
        for i in 0..m {
            tau.push(a[i * width + j]);
            if i + 1 < m {
                tau.push(*c_iter.next().expect("c has (2t+1)(m-1) entries"));
            }
        }
        tau.push(b[j]);
    }
    let order = LinearOrder::new(tau)?.concat(sigma)?;

    let myc = mycielskian(&kneser_graph(f).graph);
    let multiplicities: Vec<usize> =
        std::iter::repeat_n(width, m).chain(std::iter::repeat_n(l, m)).chain(std::iter::once(1)).collect();
    let mu: Vec<usize> = (0..2 * m + 1).collect();
    let target = blow_up(&myc, &multiplicities, &mu)?;
    let vertex_map = (0..hypergraph.edge_count()).collect();

    Ok(MycielskiRepresentation { hypergraph, order, target, multiplicities, vertex_map, labels, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{graphs_isomorphic, kneser};

    #[test]
    fn mycielskian_of_k2_is_c5() {
        let m = mycielskian(&Graph::complete(2));
        assert!(graphs_isomorphic(&m, &Graph::cycle(5)).unwrap().is_some());
    }

    #[test]
    fn grotzsch() {
        let m = mycielskian(&Graph::cycle(5));
        assert_eq!((m.n(), m.edge_count()), (11, 20));
    }

    #[test]
    fn mycielskian_of_k1() {
        let m = mycielskian(&Graph::new(1));
        assert_eq!((m.n(), m.edge_count()), (3, 1));
        assert!(m.has_edge(1, 2));
        assert_eq!(m.label(1), "0'");
        assert_eq!(m.label(2), "w");
    }

    #[test]
    fn blow_up_examples() {
        let g = kneser(5, 2).unwrap().graph;
        let id = blow_up(&g, &[1; 10], &(0..10).collect::<Vec<_>>()).unwrap();
        assert!(graphs_isomorphic(&id.graph, &g).unwrap().is_some());

        let k23 = blow_up(&Graph::complete(2), &[2, 3], &[0, 1]).unwrap();
        assert_eq!((k23.graph.n(), k23.graph.edge_count()), (5, 6));
        assert_eq!(k23.origin, vec![0, 0, 1, 1, 1]);

        assert!(blow_up(&Graph::complete(2), &[0, 1], &[0, 1]).is_err());
        assert!(blow_up(&Graph::complete(2), &[1], &[0, 1]).is_err());
        assert!(blow_up(&Graph::complete(2), &[1, 1], &[0, 0]).is_err());
    }

    #[test]
    fn representation_sizes() {
        let f = Hypergraph::on_range(1, vec![vec![1]]).unwrap();
        let rep = mycielski_representation(&f, &LinearOrder::natural(1), 1).unwrap();
        assert_eq!(rep.hypergraph.vertex_count(), 7);
        assert_eq!(rep.hypergraph.edge_count(), 3 + 3 + 1);
        rep.verify().unwrap();

        let f = Hypergraph::on_range(2, vec![vec![1], vec![2]]).unwrap();
        let rep = mycielski_representation(&f, &LinearOrder::natural(2), 2).unwrap();
        assert_eq!(rep.hypergraph.vertex_count(), 2 + 5 + 5 + 10);
        assert_eq!(rep.multiplicities, vec![5, 5, 10, 10, 1]);
        assert_eq!(rep.hypergraph.isolated_vertices().len(), 5);
        rep.verify().unwrap();
        // tau rows: a_{1,j} c a_{2,j} b_j
        let names: std::collections::HashMap<u32, &str> =
            rep.labels.iter().map(|(id, s)| (*id, s.as_str())).collect();
        let head: Vec<&str> = rep.order.as_slice()[..4].iter().map(|v| names[v]).collect();
        assert_eq!(head, ["a1,1", "c1", "a2,1", "b1"]);
        assert_eq!(&rep.order.as_slice()[20..], &[1, 2]);

        assert!(mycielski_representation(&f, &LinearOrder::natural(2), 0).is_err());
    }
}
