//! Search over sign vectors for the largest alternation number subject to a
//! superset-closed "forbidden" family.
//!
//! Vectors are built position by position along the ordering. Each side of
//! the split is a `u128` mask over vertex indices, and for hypergraph
//! constraints a per-side flag records whether that side already contains a
//! hyperedge, so extending by one vertex only inspects the edges through it.
//!
//! Every constraint here is monotone: once a prefix is infeasible every
//! extension is too. Zeroing entries never makes a feasible vector
//! infeasible, which is what lets the branch-and-bound search look only at
//! vectors whose nonzero entries alternate.

use rayon::prelude::*;

use crate::signed::Kind;

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Sides {
    pub plus: u128,
    pub minus: u128,
    pub plus_hit: bool,
    pub minus_hit: bool,
}

pub(crate) trait Constraint: Sync {
    fn push(&self, s: Sides, v: usize, positive: bool) -> Sides;

    fn allowed(&self, s: &Sides) -> bool;

    /// Whether feasibility is invariant under swapping the two sides.
    fn symmetric(&self) -> bool {
        false
    }
}

/// ALT: neither side may contain a hyperedge. SALT: not both sides may.
pub(crate) struct EdgeConstraint {
    kind: Kind,
    through: Vec<Vec<u128>>,
}

impl EdgeConstraint {
    pub fn new(kind: Kind, n: usize, edges: &[u128]) -> Self {
        let mut through = vec![Vec::new(); n];
        for &e in edges {
            for (v, list) in through.iter_mut().enumerate() {
                if e >> v & 1 == 1 {
                    list.push(e);
                }
            }
        }
        EdgeConstraint { kind, through }
    }
}

impl Constraint for EdgeConstraint {
    #[inline]
    fn push(&self, mut s: Sides, v: usize, positive: bool) -> Sides {
        let bit = 1u128 << v;
        if positive {
            s.plus |= bit;
            if !s.plus_hit {
                s.plus_hit = self.through[v].iter().any(|&e| e & !s.plus == 0);
            }
        } else {
            s.minus |= bit;
            if !s.minus_hit {
                s.minus_hit = self.through[v].iter().any(|&e| e & !s.minus == 0);
            }
        }
        s
    }

    #[inline]
    fn allowed(&self, s: &Sides) -> bool {
        match self.kind {
            Kind::Alt => !s.plus_hit && !s.minus_hit,
            Kind::Salt => !(s.plus_hit && s.minus_hit),
        }
    }

    fn symmetric(&self) -> bool {
        true
    }
}

pub(crate) struct Search<'a, C: Constraint> {
    constraint: &'a C,
    order: &'a [usize],
}

/// Prefix length used to shard the exhaustive enumeration across workers.
const SHARD_DEPTH: usize = 5;

impl<'a, C: Constraint> Search<'a, C> {
    pub fn new(constraint: &'a C, order: &'a [usize]) -> Self {
        Search { constraint, order }
    }

    fn n(&self) -> usize {
        self.order.len()
    }

    #[inline]
    fn push(&self, s: Sides, pos: usize, sign: i8) -> Sides {
        self.constraint.push(s, self.order[pos], sign > 0)
    }

    /// Visits all `3^n` vectors in lexicographic order (`-1 < 0 < +1`) and
    /// keeps the first vector of largest alternation among the feasible
    /// ones. Shards on a fixed prefix; the reduction walks shards in
    /// lexicographic order so the result does not depend on scheduling.
    pub fn exhaustive(&self) -> (usize, Vec<i8>) {
        let n = self.n();
        let depth = n.min(SHARD_DEPTH);
        let shards = 3usize.pow(depth as u32);
        let results: Vec<Option<(usize, Vec<i8>)>> = (0..shards)
            .into_par_iter()
            .map(|shard| {
                let mut x = vec![0i8; n];
                let mut digits = shard;
                for pos in (0..depth).rev() {
                    x[pos] = (digits % 3) as i8 - 1;
                    digits /= 3;
                }
                let mut s = Sides::default();
                let mut last = 0i8;
                let mut count = 0usize;
                for (pos, &e) in x.iter().enumerate().take(depth) {
                    if e != 0 {
                        s = self.push(s, pos, e);
                        if e != last {
                            count += 1;
                            last = e;
                        }
                    }
                }
                let mut best = None;
                self.enumerate(depth, s, last, count, &mut x, &mut best);
                best
            })
            .collect();
        results
            .into_iter()
            .flatten()
            .fold((0, vec![0; n]), |acc, cand| if cand.0 > acc.0 { cand } else { acc })
    }

    fn enumerate(
        &self,
        pos: usize,
        s: Sides,
        last: i8,
        count: usize,
        x: &mut Vec<i8>,
        best: &mut Option<(usize, Vec<i8>)>,
    ) {
        if pos == self.n() {
            if self.constraint.allowed(&s) && best.as_ref().is_none_or(|b| count > b.0) {
                *best = Some((count, x.clone()));
            }
            return;
        }
        for sign in [-1i8, 0, 1] {
            x[pos] = sign;
            if sign == 0 {
                self.enumerate(pos + 1, s, last, count, x, best);
            } else {
                let next = self.push(s, pos, sign);
                let c = if sign != last { count + 1 } else { count };
                self.enumerate(pos + 1, next, sign, c, x, best);
            }
        }
        x[pos] = 0;
    }

    /// Largest alternation over feasible vectors, by branch and bound over
    /// alternating supports.
    pub fn max_alt(&self) -> usize {
        let mut best = 0;
        self.grow(0, Sides::default(), 0, 0, &mut best);
        best
    }

    fn grow(&self, from: usize, s: Sides, last: i8, count: usize, best: &mut usize) {
        *best = (*best).max(count);
        let n = self.n();
        let first_signs: &[i8] = if last != 0 {
            &[]
        } else if self.constraint.symmetric() {
            &[1]
        } else {
            &[1, -1]
        };
        for pos in from..n {
            if count + (n - pos) <= *best {
                return;
            }
            let try_sign = |sign: i8, best: &mut usize| {
                let next = self.push(s, pos, sign);
                if self.constraint.allowed(&next) {
                    self.grow(pos + 1, next, sign, count + 1, best);
                }
            };
            if last != 0 {
                try_sign(-last, best);
            } else {
                for &sign in first_signs {
                    try_sign(sign, best);
                }
            }
        }
    }

    /// Whether some feasible continuation from `from` adds at least `need`
    /// alternating entries after the prefix state `(s, last)`.
    pub fn reach(&self, from: usize, s: Sides, last: i8, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        let n = self.n();
        let signs: &[i8] = match last {
            0 if self.constraint.symmetric() && s.plus == 0 && s.minus == 0 => &[1],
            0 => &[1, -1],
            1 => &[-1],
            _ => &[1],
        };
        for pos in from..n {
            if n - pos < need {
                return false;
            }
            for &sign in signs {
                let next = self.push(s, pos, sign);
                if self.constraint.allowed(&next) && self.reach(pos + 1, next, sign, need - 1) {
                    return true;
                }
            }
        }
        false
    }

    /// Branch and bound: the optimum plus the lexicographically smallest
    /// feasible vector attaining it.
    pub fn branch_and_bound(&self) -> (usize, Vec<i8>) {
        let k = self.max_alt();
        (k, self.smallest_witness(k))
    }

    /// Greedy lexicographic descent: at each position take the smallest
    /// entry that keeps an optimal completion reachable.
    pub fn smallest_witness(&self, k: usize) -> Vec<i8> {
        let n = self.n();
        let mut x = vec![0i8; n];
        let mut s = Sides::default();
        let mut last = 0i8;
        let mut count = 0usize;
        for pos in 0..n {
            for sign in [-1i8, 0, 1] {
                let (next, next_last, next_count) = if sign == 0 {
                    (s, last, count)
                } else {
                    let next = self.push(s, pos, sign);
                    if !self.constraint.allowed(&next) {
                        continue;
                    }
                    (next, sign, count + usize::from(sign != last))
                };
                if self.reach(pos + 1, next, next_last, k.saturating_sub(next_count)) {
                    x[pos] = sign;
                    s = next;
                    last = next_last;
                    count = next_count;
                    break;
                }
            }
        }
        debug_assert_eq!(count, k);
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_reaches_n() {
        let c = EdgeConstraint::new(Kind::Salt, 3, &[]);
        let order = [0, 1, 2];
        let search = Search::new(&c, &order);
        assert_eq!(search.exhaustive(), (3, vec![-1, 1, -1]));
        assert_eq!(search.branch_and_bound(), (3, vec![-1, 1, -1]));
    }

    #[test]
    fn singletons_force_zero() {
        let edges = [1u128, 2, 4];
        let c = EdgeConstraint::new(Kind::Alt, 3, &edges);
        let order = [2, 0, 1];
        let search = Search::new(&c, &order);
        assert_eq!(search.exhaustive(), (0, vec![0, 0, 0]));
        assert_eq!(search.branch_and_bound(), (0, vec![0, 0, 0]));
    }
}
