use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ISO_CAP: usize = 64;

/// Whether `map` (a vertex of `g2` for each vertex of `g1`) is a bijection
/// preserving adjacency and non-adjacency.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    let n = g1.n();
    if g2.n() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    if map.iter().any(|&u| u >= n || std::mem::replace(&mut seen[u], true)) {
        return false;
    }
    (0..n).all(|v| (v + 1..n).all(|w| g1.has_edge(v, w) == g2.has_edge(map[v], map[w])))
}

/// An isomorphism `g1 → g2`, or `None` if the graphs are not isomorphic.
pub fn graphs_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    graphs_isomorphic_capped(g1, g2, DEFAULT_ISO_CAP)
}

pub fn graphs_isomorphic_capped(g1: &Graph, g2: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    let n = g1.n();
    if n.max(g2.n()) > cap {
        return Err(Error::Capacity { what: "isomorphism test vertices", limit: cap, got: n.max(g2.n()) });
    }
    if g2.n() != n || g1.edge_count() != g2.edge_count() || g1.degree_sequence() != g2.degree_sequence() {
        return Ok(None);
    }
    let (c1, c2) = refine(g1, g2);
    let histogram = |c: &[usize]| c.iter().fold(BTreeMap::new(), |mut m, &x| {
        *m.entry(x).or_insert(0usize) += 1;
        m
    });
    if histogram(&c1) != histogram(&c2) {
        return Ok(None);
    }
    let sizes = histogram(&c1);

    // Grow the matching order along edges, rarest colors first.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), sizes[&c1[v]], v))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for w in g1.neighbors(v) {
            links[w] += 1;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = extend(g1, g2, &c1, &c2, &order, 0, &mut map, &mut used);
    debug_assert!(!found || is_isomorphism(g1, g2, &map));
    Ok(found.then_some(map))
}

/// Joint colour refinement of both graphs so classes are comparable.
fn refine(g1: &Graph, g2: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut c1: Vec<usize> = (0..g1.n()).map(|v| g1.degree(v)).collect();
    let mut c2: Vec<usize> = (0..g2.n()).map(|v| g2.degree(v)).collect();
    let mut classes = 0;
    loop {
        let signature = |g: &Graph, c: &[usize], v: usize| {
            let mut around: Vec<usize> = g.neighbors(v).map(|w| c[w]).collect();
            around.sort_unstable();
            (c[v], around)
        };
        let s1: Vec<_> = (0..g1.n()).map(|v| signature(g1, &c1, v)).collect();
        let s2: Vec<_> = (0..g2.n()).map(|v| signature(g2, &c2, v)).collect();
        let ids: BTreeMap<_, usize> = s1.iter().chain(&s2).map(|s| (s.clone(), 0)).collect();
        let ids: BTreeMap<_, usize> = ids.into_keys().enumerate().map(|(i, s)| (s, i)).collect();
        c1 = s1.iter().map(|s| ids[s]).collect();
        c2 = s2.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (c1, c2);
        }
        classes = ids.len();
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else { return true };
    for u in 0..g2.n() {
        if used[u] || c2[u] != c1[v] {
            continue;
        }
        if order[..depth].iter().any(|&w| g1.has_edge(v, w) != g2.has_edge(u, map[w])) {
            continue;
        }
        map[v] = u;
        used[u] = true;
        if extend(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used[u] = false;
    }
    map[v] = usize::MAX;
    false
}
