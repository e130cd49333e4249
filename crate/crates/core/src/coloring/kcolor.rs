use crate::graph::Graph;

use super::clique::maximum_clique;
use super::{Budget, Coloring, Interval, Verdict};

const UNCOLORED: usize = usize::MAX;
/// Colours are tracked in a `u128` domain per vertex.
const MAX_COLORS: usize = 128;
const CLOCK_EVERY: u64 = 1 << 12;

pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    is_k_colorable_within(g, k, &Budget::unlimited()).into_option()
}

/// Exact `k`-colourability: saturation-first branching with forward
/// checking and unit propagation, a maximum clique precoloured, and new
/// colours opened in order only.
pub fn is_k_colorable_within(g: &Graph, k: usize, budget: &Budget) -> Verdict<Coloring> {
    let n = g.n();
    if n == 0 {
        return Verdict::Sat(Coloring { k, assignment: Vec::new() });
    }
    if k >= n {
        return Verdict::Sat(Coloring::new(g, k, (0..n).collect()).expect("distinct colours are proper"));
    }
    if k == 0 {
        return Verdict::Unsat;
    }
    let greedy = greedy_coloring(g);
    if greedy.k <= k {
        return Verdict::Sat(Coloring { k, ..greedy });
    }
    let clique = maximum_clique(g);
    if clique.len() > k {
        return Verdict::Unsat;
    }
    if k > MAX_COLORS {
        return Verdict::Timeout;
    }

    let mut s = Search::new(g, k, budget);
    let mut ok = true;
    for (c, &v) in clique.iter().enumerate() {
        if s.color[v] == UNCOLORED && !s.assign(v, c) {
            ok = false;
            break;
        }
    }
    if ok && s.solve() {
        let c = Coloring::new(g, k, s.color).expect("search only builds proper colourings");
        return Verdict::Sat(c);
    }
    if s.timed_out {
        Verdict::Timeout
    } else {
        Verdict::Unsat
    }
}

struct Search<'a> {
    nbrs: Vec<Vec<usize>>,
    degree: Vec<usize>,
    k: usize,
    color: Vec<usize>,
    domain: Vec<u128>,
    trail: Vec<(usize, u128)>,
    colored: Vec<usize>,
    used: usize,
    nodes: u64,
    budget: &'a Budget,
    timed_out: bool,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, k: usize, budget: &'a Budget) -> Self {
        let n = g.n();
        let full = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
        Search {
            nbrs: (0..n).map(|v| g.neighbors(v).collect()).collect(),
            degree: (0..n).map(|v| g.degree(v)).collect(),
            k,
            color: vec![UNCOLORED; n],
            domain: vec![full; n],
            trail: Vec::new(),
            colored: Vec::new(),
            used: 0,
            nodes: 0,
            budget,
            timed_out: false,
        }
    }

    /// Colours `v` with `c` and propagates forced colours. Returns false on
    /// a wipe-out; the caller undoes.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        let mut queue = vec![(v, c)];
        while let Some((v, c)) = queue.pop() {
            if self.color[v] != UNCOLORED {
                if self.color[v] != c {
                    return false;
                }
                continue;
            }
            if self.domain[v] >> c & 1 == 0 {
                return false;
            }
            self.color[v] = c;
            self.colored.push(v);
            self.used = self.used.max(c + 1);
            let bit = 1u128 << c;
            for i in 0..self.nbrs[v].len() {
                let w = self.nbrs[v][i];
                if self.color[w] != UNCOLORED || self.domain[w] & bit == 0 {
                    continue;
                }
                self.trail.push((w, self.domain[w]));
                self.domain[w] &= !bit;
                match self.domain[w].count_ones() {
                    0 => return false,
                    1 => queue.push((w, self.domain[w].trailing_zeros() as usize)),
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: usize, colored: usize, used: usize) {
        while self.trail.len() > trail {
            let (w, d) = self.trail.pop().expect("trail entry");
            self.domain[w] = d;
        }
        while self.colored.len() > colored {
            let v = self.colored.pop().expect("colored entry");
            self.color[v] = UNCOLORED;
        }
        self.used = used;
    }

    fn pick(&self) -> Option<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v] == UNCOLORED)
            .min_by_key(|&v| (self.domain[v].count_ones(), std::cmp::Reverse(self.degree[v]), v))
    }

    fn solve(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(CLOCK_EVERY) && self.budget.expired() {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        let Some(v) = self.pick() else { return true };
        let open = (self.used + 1).min(self.k);
        let mut choices = self.domain[v] & ((1u128 << open) - 1);
        let mark = (self.trail.len(), self.colored.len(), self.used);
        while choices != 0 {
            let c = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            if self.assign(v, c) && self.solve() {
                return true;
            }
            self.undo(mark.0, mark.1, mark.2);
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

/// DSATUR heuristic colouring; `k` is the number of colours it uses.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color = vec![UNCOLORED; n];
    let mut seen: Vec<fixedbitset::FixedBitSet> = vec![fixedbitset::FixedBitSet::with_capacity(n + 1); n];
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == UNCOLORED)
            .max_by_key(|&v| (seen[v].count_ones(..), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncoloured vertex remains");
        let c = (0..=n).find(|&c| !seen[v].contains(c)).expect("some colour is free");
        color[v] = c;
        k = k.max(c + 1);
        for w in g.neighbors(v) {
            seen[w].insert(c);
        }
    }
    Coloring { k, assignment: color }
}

pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_number_within(g, &Budget::unlimited()).lower
}

/// `χ(g)` bracketed between a clique bound and the best colouring found;
/// exact unless the budget runs out.
pub fn chromatic_number_within(g: &Graph, budget: &Budget) -> Interval<Coloring> {
    let mut best = greedy_coloring(g);
    let mut lower = maximum_clique(g).len();
    while lower < best.k {
        match is_k_colorable_within(g, lower, budget) {
            Verdict::Sat(c) => {
                best = Coloring { k: lower, ..c };
                break;
            }
            Verdict::Unsat => lower += 1,
            Verdict::Timeout => break,
        }
    }
    Interval { lower, upper: best.k, witness: best }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{kneser, mycielskian, schrijver};

    #[test]
    fn cycles() {
        assert!(is_k_colorable(&Graph::cycle(5), 2).is_none());
        let c = is_k_colorable(&Graph::cycle(5), 3).unwrap();
        c.check(&Graph::cycle(5)).unwrap();
        assert!(is_k_colorable(&Graph::cycle(6), 2).is_some());
    }

    #[test]
    fn grotzsch_needs_four() {
        let m = mycielskian(&Graph::cycle(5));
        assert!(is_k_colorable(&m, 3).is_none());
        assert_eq!(chromatic_number(&m), 4);
    }

    #[test]
    fn kneser_values() {
        assert_eq!(chromatic_number(&kneser(6, 2).unwrap().graph), 4);
        assert_eq!(chromatic_number(&kneser(5, 2).unwrap().graph), 3);
        assert_eq!(chromatic_number(&schrijver(6, 2).unwrap().graph), 4);
        assert_eq!(chromatic_number(&schrijver(7, 3).unwrap().graph), 3);
    }

    #[test]
    fn trivial_graphs() {
        assert_eq!(chromatic_number(&Graph::new(0)), 0);
        assert_eq!(chromatic_number(&Graph::new(3)), 1);
        assert_eq!(chromatic_number(&Graph::complete(6)), 6);
        assert!(is_k_colorable(&Graph::new(2), 0).is_none());
    }

    #[test]
    fn expired_budget_gives_interval() {
        let m = mycielskian(&mycielskian(&Graph::cycle(5)));
        let budget = Budget::with_timeout(std::time::Duration::ZERO);
        let r = chromatic_number_within(&m, &budget);
        assert!(r.lower <= 5 && 5 <= r.upper);
        r.witness.check(&m).unwrap();
    }
}
