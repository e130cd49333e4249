use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::clique::maximum_clique;
use super::kcolor::greedy_coloring;
use super::{Budget, Interval, Multicoloring, Verdict};

/// Palettes are `u64` masks.
const MAX_PALETTE: usize = 64;
const CLOCK_EVERY: u64 = 1 << 10;

pub fn multicoloring_exists(g: &Graph, m: usize, n: usize) -> Result<Option<Multicoloring>> {
    Ok(multicoloring_exists_within(g, m, n, &Budget::unlimited())?.into_option())
}

/// Is there a homomorphism `g → KG(n, m)`? Vertices take `m`-subsets of
/// `[n]`, most constrained first, candidates least constraining first.
pub fn multicoloring_exists_within(g: &Graph, m: usize, n: usize, budget: &Budget) -> Result<Verdict<Multicoloring>> {
    if m == 0 || n < m {
        return Err(Error::invalid(format!("multicoloring needs n >= m >= 1, got m={m}, n={n}")));
    }
    if n > MAX_PALETTE {
        return Err(Error::Capacity { what: "multicoloring palette", limit: MAX_PALETTE, got: n });
    }
    let clique = maximum_clique(g);
    if clique.len() * m > n {
        return Ok(Verdict::Unsat);
    }
    let mut s = Search::new(g, m, n, budget);
    let mut ok = true;
    for (i, &v) in clique.iter().enumerate() {
        let block = ((1u64 << m) - 1) << (i * m);
        if !s.assign(v, block) {
            ok = false;
            break;
        }
    }
    if ok && s.solve() {
        let assignment = s.sets.iter().map(|&mask| bits(mask)).collect();
        let mc = Multicoloring { m, n, assignment };
        mc.check(g).expect("search only builds proper multicolorings");
        return Ok(Verdict::Sat(mc));
    }
    Ok(if s.timed_out { Verdict::Timeout } else { Verdict::Unsat })
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&c| mask >> c & 1 == 1).collect()
}

fn low_bits(count: usize) -> u64 {
    if count >= 64 {
        u64::MAX
    } else {
        (1u64 << count) - 1
    }
}

struct Search<'a> {
    nbrs: Vec<Vec<usize>>,
    degree: Vec<usize>,
    m: usize,
    palette: usize,
    sets: Vec<u64>,
    blocked: Vec<u64>,
    trail: Vec<(usize, u64)>,
    placed: Vec<usize>,
    used: usize,
    nodes: u64,
    budget: &'a Budget,
    timed_out: bool,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, m: usize, palette: usize, budget: &'a Budget) -> Self {
        let n = g.n();
        Search {
            nbrs: (0..n).map(|v| g.neighbors(v).collect()).collect(),
            degree: (0..n).map(|v| g.degree(v)).collect(),
            m,
            palette,
            sets: vec![0; n],
            blocked: vec![0; n],
            trail: Vec::new(),
            placed: Vec::new(),
            used: 0,
            nodes: 0,
            budget,
            timed_out: false,
        }
    }

    fn free(&self, v: usize) -> u64 {
        low_bits(self.palette) & !self.blocked[v]
    }

    fn assign(&mut self, v: usize, set: u64) -> bool {
        let mut queue = vec![(v, set)];
        while let Some((v, set)) = queue.pop() {
            if self.sets[v] != 0 {
                if self.sets[v] != set {
                    return false;
                }
                continue;
            }
            if set & self.blocked[v] != 0 {
                return false;
            }
            self.sets[v] = set;
            self.placed.push(v);
            self.used = self.used.max(64 - set.leading_zeros() as usize);
            for i in 0..self.nbrs[v].len() {
                let w = self.nbrs[v][i];
                if self.sets[w] != 0 || self.blocked[w] & set == set {
                    continue;
                }
                self.trail.push((w, self.blocked[w]));
                self.blocked[w] |= set;
                let free = self.free(w);
                let room = free.count_ones() as usize;
                if room < self.m {
                    return false;
                }
                if room == self.m {
                    queue.push((w, free));
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: usize, placed: usize, used: usize) {
        while self.trail.len() > trail {
            let (w, b) = self.trail.pop().expect("trail entry");
            self.blocked[w] = b;
        }
        while self.placed.len() > placed {
            let v = self.placed.pop().expect("placed entry");
            self.sets[v] = 0;
        }
        self.used = used;
    }

    fn candidates(&self, v: usize) -> Vec<u64> {
        let free = self.free(v);
        let old = free & low_bits(self.used);
        let old_bits = bits(old);
        let mut out = Vec::new();
        for fresh in 0..=self.m.min(self.palette - self.used) {
            let new_block = low_bits(fresh) << self.used;
            for pick in old_bits.iter().combinations(self.m - fresh) {
                out.push(pick.iter().fold(new_block, |acc, &&c| acc | 1 << c));
            }
        }
        let open: Vec<usize> = self.nbrs[v].iter().copied().filter(|&w| self.sets[w] == 0).collect();
        out.sort_by_cached_key(|&set| {
            let cost: u32 = open.iter().map(|&w| (set & self.free(w)).count_ones()).sum();
            (cost, set)
        });
        out
    }

    fn solve(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(CLOCK_EVERY) && self.budget.expired() {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        let pick = (0..self.sets.len())
            .filter(|&v| self.sets[v] == 0)
            .min_by_key(|&v| (self.free(v).count_ones(), std::cmp::Reverse(self.degree[v]), v));
        let Some(v) = pick else { return true };
        let mark = (self.trail.len(), self.placed.len(), self.used);
        for set in self.candidates(v) {
            if self.assign(v, set) && self.solve() {
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

pub fn multichromatic_number(g: &Graph, m: usize) -> Result<usize> {
    Ok(multichromatic_number_within(g, m, &Budget::unlimited())?.lower)
}

/// `χ_m(g)` searched upward from `max(m, ω·m)`; the upper end comes from
/// blowing up a greedy colouring.
pub fn multichromatic_number_within(g: &Graph, m: usize, budget: &Budget) -> Result<Interval<Multicoloring>> {
    if m == 0 {
        return Err(Error::invalid("multicoloring needs m >= 1"));
    }
    let greedy = greedy_coloring(g);
    let upper = (greedy.k * m).max(m);
    let mut best = Multicoloring {
        m,
        n: upper,
        assignment: greedy.assignment.iter().map(|&c| (c * m..c * m + m).collect()).collect(),
    };
    let mut lower = (maximum_clique(g).len() * m).max(m);
    while lower < best.n && lower <= MAX_PALETTE {
        match multicoloring_exists_within(g, m, lower, budget)? {
            Verdict::Sat(mc) => {
                best = mc;
                break;
            }
            Verdict::Unsat => lower += 1,
            Verdict::Timeout => break,
        }
    }
    Ok(Interval { lower, upper: best.n, witness: best })
}
