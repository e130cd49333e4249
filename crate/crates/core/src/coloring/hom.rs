use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `|V(g)|·|V(h)|` accepted by [`has_homomorphism`].
pub const HOM_CAP: usize = 1 << 20;

pub fn is_homomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    map.len() == g.n() && map.iter().all(|&x| x < h.n()) && g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

/// A homomorphism `g → h`, found by backtracking over per-vertex domains
/// kept arc consistent.
pub fn has_homomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    let size = g.n().saturating_mul(h.n());
    if size > HOM_CAP {
        return Err(Error::Capacity { what: "homomorphism search size", limit: HOM_CAP, got: size });
    }
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    if h.n() == 0 {
        return Ok(None);
    }
    let mut full = FixedBitSet::with_capacity(h.n());
    full.insert_range(..);
    // a vertex with neighbours can only go to a vertex with neighbours
    let mut domains: Vec<FixedBitSet> = (0..g.n())
        .map(|v| {
            let mut d = full.clone();
            if g.degree(v) > 0 {
                for x in 0..h.n() {
                    if h.degree(x) == 0 {
                        d.remove(x);
                    }
                }
            }
            d
        })
        .collect();
    if !propagate(g, h, &mut domains) {
        return Ok(None);
    }
    let found = search(g, h, &mut domains);
    Ok(found.inspect(|map| {
        debug_assert!(is_homomorphism(g, h, map));
    }))
}

/// AC-3 over the edges of `g`; false on a wipe-out.
fn propagate(g: &Graph, h: &Graph, domains: &mut [FixedBitSet]) -> bool {
    let mut queue: std::collections::VecDeque<usize> = (0..g.n()).collect();
    let mut queued = vec![true; g.n()];
    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        // the values of v's neighbours must each see some value of v
        let mut support = FixedBitSet::with_capacity(h.n());
        for x in domains[v].ones() {
            support.union_with(h.neighborhood(x));
        }
        for w in g.neighbors(v) {
            let before = domains[w].count_ones(..);
            domains[w].intersect_with(&support);
            let after = domains[w].count_ones(..);
            if after == 0 {
                return false;
            }
            if after < before && !queued[w] {
                queued[w] = true;
                queue.push_back(w);
            }
        }
    }
    true
}

fn search(g: &Graph, h: &Graph, domains: &mut Vec<FixedBitSet>) -> Option<Vec<usize>> {
    let v = (0..g.n())
        .filter(|&v| domains[v].count_ones(..) > 1)
        .min_by_key(|&v| (domains[v].count_ones(..), std::cmp::Reverse(g.degree(v)), v));
    let Some(v) = v else {
        return Some(domains.iter().map(|d| d.ones().next().expect("nonempty domain")).collect());
    };
    let values: Vec<usize> = domains[v].ones().collect();
    for x in values {
        let saved = domains.clone();
        domains[v].clear();
        domains[v].insert(x);
        if propagate(g, h, domains) {
            if let Some(map) = search(g, h, domains) {
                return Some(map);
            }
        }
        *domains = saved;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::chromatic_number;
    use crate::constructions::{blow_up, kneser, mycielskian};

    #[test]
    fn into_complete_graphs() {
        let p = kneser(5, 2).unwrap().graph;
        let k = chromatic_number(&p);
        let map = has_homomorphism(&p, &Graph::complete(k)).unwrap().unwrap();
        assert!(is_homomorphism(&p, &Graph::complete(k), &map));
        assert!(has_homomorphism(&p, &Graph::complete(k - 1)).unwrap().is_none());
        assert!(has_homomorphism(&Graph::cycle(5), &Graph::complete(2)).unwrap().is_none());
    }

    #[test]
    fn blow_up_is_equivalent() {
        let c5 = Graph::cycle(5);
        let b = blow_up(&c5, &[2, 1, 1, 1, 1], &[0, 1, 2, 3, 4]).unwrap().graph;
        assert!(has_homomorphism(&b, &c5).unwrap().is_some());
        assert!(has_homomorphism(&c5, &b).unwrap().is_some());
    }

    #[test]
    fn cycles_and_mycielskians() {
        assert!(has_homomorphism(&Graph::cycle(7), &Graph::cycle(5)).unwrap().is_some());
        assert!(has_homomorphism(&Graph::cycle(5), &Graph::cycle(7)).unwrap().is_none());
        let m = mycielskian(&Graph::cycle(5));
        assert!(has_homomorphism(&m, &Graph::complete(3)).unwrap().is_none());
        assert!(has_homomorphism(&Graph::new(3), &Graph::new(1)).unwrap().is_some());
    }
}
