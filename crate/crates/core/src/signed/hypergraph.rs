use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::signed::LinearOrder;

/// Largest vertex count the alternation kernel handles (vertex sets are
/// `u128` masks there).
pub const KERNEL_VERTEX_CAP: usize = 128;

/// A simple hypergraph: a vertex list and a family of distinct nonempty
/// hyperedges. Vertices in no hyperedge are allowed and matter for every
/// alternation computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    vertices: Vec<u32>,
    edges: Vec<Vec<u32>>,
    index: HashMap<u32, usize>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    vertices: Vec<u32>,
    edges: Vec<Vec<u32>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::new(raw.vertices, raw.edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph { vertices: h.vertices, edges: h.edges }
    }
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge. Edge order is kept, since it
    /// fixes the vertex numbering of the Kneser graph.
    pub fn new(vertices: Vec<u32>, edges: Vec<Vec<u32>>) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if index.insert(v, i).is_some() {
                return Err(Error::invalid(format!("vertex {v} listed twice")));
            }
        }
        let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(edges.len());
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for edge in edges {
            let set: BTreeSet<u32> = edge.iter().copied().collect();
            if set.is_empty() {
                return Err(Error::invalid("hyperedges must be nonempty"));
            }
            if set.len() != edge.len() {
                return Err(Error::invalid(format!("hyperedge {edge:?} repeats a vertex")));
            }
            if let Some(v) = set.iter().find(|v| !index.contains_key(v)) {
                return Err(Error::invalid(format!("hyperedge {edge:?} uses unknown vertex {v}")));
            }
            let e: Vec<u32> = set.into_iter().collect();
            if !seen.insert(e.clone()) {
                return Err(Error::invalid(format!("hyperedge {e:?} listed twice")));
            }
            sorted_edges.push(e);
        }
        Ok(Hypergraph { vertices, edges: sorted_edges, index })
    }

    /// Hypergraph on `[n]` with the given edges.
    pub fn on_range(n: u32, edges: Vec<Vec<u32>>) -> Result<Self> {
        Hypergraph::new((1..=n).collect(), edges)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, v: u32) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn max_vertex(&self) -> Option<u32> {
        self.vertices.iter().copied().max()
    }

    /// Vertices that lie in no hyperedge.
    pub fn isolated_vertices(&self) -> Vec<u32> {
        let covered: HashSet<u32> = self.edges.iter().flatten().copied().collect();
        self.vertices.iter().copied().filter(|v| !covered.contains(v)).collect()
    }

    /// True iff some hyperedge is a subset of `s`.
    pub fn contains_edge(&self, s: &BTreeSet<u32>) -> bool {
        self.edges.iter().any(|e| e.iter().all(|v| s.contains(v)))
    }

    /// The vertex list in increasing id order.
    pub fn natural_order(&self) -> LinearOrder {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        LinearOrder::new(v).expect("vertex ids are distinct")
    }

    /// Checks that `sigma` is a permutation of the vertex set and returns the
    /// vertex index at each position.
    pub fn order_indices(&self, sigma: &LinearOrder) -> Result<Vec<usize>> {
        if sigma.len() != self.vertex_count() {
            return Err(Error::LengthMismatch {
                what: "ordering",
                expected: self.vertex_count(),
                got: sigma.len(),
            });
        }
        sigma
            .as_slice()
            .iter()
            .map(|v| {
                self.index_of(*v)
                    .ok_or_else(|| Error::invalid(format!("ordering mentions unknown vertex {v}")))
            })
            .collect()
    }

    /// Hyperedges as bitmasks over vertex indices.
    pub(crate) fn edge_masks(&self) -> Result<Vec<u128>> {
        if self.vertex_count() > KERNEL_VERTEX_CAP {
            return Err(Error::Capacity {
                what: "hypergraph vertex count",
                limit: KERNEL_VERTEX_CAP,
                got: self.vertex_count(),
            });
        }
        Ok(self
            .edges
            .iter()
            .map(|e| e.iter().fold(0u128, |m, v| m | 1u128 << self.index[v]))
            .collect())
    }

    /// Content hash of the canonical serialization (sorted vertices, sorted
    /// edges). Identical hypergraphs listed in different orders share an id.
    pub fn content_id(&self) -> String {
        let mut vertices = self.vertices.clone();
        vertices.sort_unstable();
        let mut edges = self.edges.clone();
        edges.sort();
        let canonical = serde_json::to_vec(&RawHypergraph { vertices, edges })
            .expect("hypergraph serializes");
        hex::encode(Sha256::digest(&canonical))
    }

    /// Relabels vertices through `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Result<Hypergraph> {
        Hypergraph::new(
            self.vertices.iter().map(|&v| f(v)).collect(),
            self.edges.iter().map(|e| e.iter().map(|&v| f(v)).collect()).collect(),
        )
    }
}

pub fn contains_edge(h: &Hypergraph, s: &BTreeSet<u32>) -> bool {
    h.contains_edge(s)
}
