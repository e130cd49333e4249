//! Simple undirected graphs and their file formats.
//!
//! Text format: an optional run of `c ...` comment lines, a header `p <n>`,
//! then one `u v` pair per line with 0-based vertex ids. The JSON format
//! mirrors the hypergraph one: `{"vertices":[...],"edges":[[u,v],...]}` with
//! an optional `"labels"` array.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![FixedBitSet::with_capacity(n); n], labels: None }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.connect(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut g = Graph::new(n);
        for u in 0..n {
            g.connect(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.connect(u - 1, u);
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        self.labels.as_ref().map_or_else(|| v.to_string(), |l| l[v].clone())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::invalid(format!("edge {u}-{v} leaves the vertex range 0..{n}")));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        self.connect(u, v);
        Ok(())
    }

    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Disjoint union; `other`'s vertices follow `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n + other.n());
        for (u, v) in self.edges() {
            g.connect(u, v);
        }
        for (u, v) in other.edges() {
            g.connect(n + u, n + v);
        }
        g
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p {}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Graph> {
        let err = |line: usize, message: String| Error::Parse { what: "graph", line, column: 1, message };
        let mut graph: Option<Graph> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match (&mut graph, fields.as_slice()) {
                (None, ["p", n]) => {
                    let n = n.parse().map_err(|_| err(i + 1, format!("bad vertex count {n:?}")))?;
                    graph = Some(Graph::new(n));
                }
                (None, _) => return Err(err(i + 1, "expected header `p <n>`".into())),
                (Some(g), [u, v]) => {
                    let parse = |s: &str| s.parse::<usize>().map_err(|_| err(i + 1, format!("bad vertex id {s:?}")));
                    let (u, v) = (parse(u)?, parse(v)?);
                    g.add_edge(u, v).map_err(|e| err(i + 1, e.to_string()))?;
                }
                (Some(_), _) => return Err(err(i + 1, format!("expected `u v`, found {line:?}"))),
            }
        }
        graph.ok_or_else(|| err(1, "missing header `p <n>`".into()))
    }
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<usize>,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawGraph {
            vertices: (0..self.n()).collect(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGraph::deserialize(d)?;
        let n = raw.vertices.len();
        if raw.vertices.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(serde::de::Error::custom("graph vertices must be 0..n in order"));
        }
        let mut g = Graph::from_edges(n, raw.edges.into_iter().map(|[u, v]| (u, v))).map_err(serde::de::Error::custom)?;
        if let Some(labels) = raw.labels {
            if labels.len() != n {
                return Err(serde::de::Error::custom("label count differs from vertex count"));
            }
            g.labels = Some(labels);
        }
        Ok(g)
    }
}
