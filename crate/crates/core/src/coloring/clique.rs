use fixedbitset::FixedBitSet;

use crate::graph::Graph;

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

/// Branch and bound with greedy colouring bounds on the candidate set.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, order, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn expand(g: &Graph, candidates: Vec<usize>, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let (vertices, bounds) = color_bound(g, &candidates);
    for i in (0..vertices.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = vertices[i];
        current.push(v);
        let next: Vec<usize> = vertices[..i].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, next, current, best);
        }
        current.pop();
    }
}

/// Sequential colouring of `candidates`; returns them sorted by colour with
/// each vertex's colour number, an upper bound on cliques in its prefix.
fn color_bound(g: &Graph, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut members: Vec<FixedBitSet> = Vec::new();
    for &v in candidates {
        let slot = match (0..classes.len()).find(|&i| g.neighborhood(v).is_disjoint(&members[i])) {
            Some(i) => i,
            None => {
                classes.push(Vec::new());
                members.push(FixedBitSet::with_capacity(g.n()));
                classes.len() - 1
            }
        };
        classes[slot].push(v);
        members[slot].insert(v);
    }
    let mut vertices = Vec::with_capacity(candidates.len());
    let mut bounds = Vec::with_capacity(candidates.len());
    for (c, class) in classes.into_iter().enumerate() {
        for v in class {
            vertices.push(v);
            bounds.push(c + 1);
        }
    }
    (vertices, bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{kneser, schrijver};

    #[test]
    fn values() {
        assert_eq!(clique_number(&kneser(5, 2).unwrap().graph), 2);
        assert_eq!(clique_number(&Graph::complete(5)), 5);
        // {1,3}, {2,5}, {4,6}
        assert_eq!(clique_number(&schrijver(6, 2).unwrap().graph), 3);
        assert_eq!(clique_number(&kneser(7, 2).unwrap().graph), 3);
        assert_eq!(clique_number(&Graph::new(3)), 1);
        assert_eq!(clique_number(&Graph::new(0)), 0);
    }

    #[test]
    fn returns_a_clique() {
        let g = kneser(8, 2).unwrap().graph;
        let c = maximum_clique(&g);
        assert_eq!(c.len(), 4);
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                assert!(g.has_edge(u, v));
            }
        }
    }
}
