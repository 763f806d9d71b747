use crate::graph::{bits, Graph};

use super::{Label, Pattern};

/// Adjacency re-indexed by rank: bit `s` of `rows[r]` is set when the
/// vertices at ranks `r` and `s` (0-based) are adjacent. Ranks can be
/// pushed and popped, which is how the solver grows an ordering prefix.
#[derive(Debug, Clone, Default)]
pub struct RankAdjacency {
    rows: Vec<u64>,
}

impl RankAdjacency {
    /// `order[r]` is the vertex at rank `r`; it may be a proper prefix.
    pub fn new(g: &Graph, order: &[usize]) -> Self {
        let mut ranks = Self { rows: Vec::with_capacity(g.n()) };
        for i in 0..order.len() {
            ranks.push_vertex(g, order, i);
        }
        ranks
    }

    fn push_vertex(&mut self, g: &Graph, order: &[usize], i: usize) {
        let v = order[i];
        let mask = order[..i].iter().enumerate().filter(|&(_, &u)| g.has_edge(u, v)).fold(0u64, |m, (r, _)| m | 1 << r);
        self.push(mask);
    }

    /// Appends a rank whose neighbours among existing ranks are `earlier`.
    pub fn push(&mut self, earlier: u64) {
        let t = self.rows.len();
        for r in bits(earlier) {
            self.rows[r] |= 1 << t;
        }
        self.rows.push(earlier);
    }

    pub fn pop(&mut self) {
        if let Some(row) = self.rows.pop() {
            let t = self.rows.len();
            for r in bits(row) {
                self.rows[r] &= !(1 << t);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Lexicographically least realization of `p` as 0-based ranks. With
    /// `last = Some(t)` only tuples ending at rank `t` are considered.
    pub fn find(&self, p: &Pattern, last: Option<usize>) -> Option<Vec<usize>> {
        let k = p.k();
        let mut chosen = Vec::with_capacity(k);
        match last {
            None => {
                if k > self.rows.len() {
                    return None;
                }
                let all = low_mask(self.rows.len());
                self.extend(p, k, all, &mut chosen).then_some(chosen)
            }
            Some(t) => {
                if k > t + 1 {
                    return None;
                }
                // Pre-filter every free position by its relation to rank t.
                let mut within = Vec::with_capacity(k - 1);
                for j in 0..k - 1 {
                    let mut m = low_mask(t);
                    match p.label(j + 1, k) {
                        Label::Edge => m &= self.rows[t],
                        Label::NonEdge => m &= !self.rows[t],
                        Label::Undecided => {}
                    }
                    within.push(m);
                }
                if self.extend_fixed(p, k - 1, &within, &mut chosen) {
                    chosen.push(t);
                    Some(chosen)
                } else {
                    None
                }
            }
        }
    }

    fn candidates(&self, p: &Pattern, chosen: &[usize], allowed: u64) -> u64 {
        let j = chosen.len();
        let mut cand = allowed;
        if let Some(&prev) = chosen.last() {
            cand &= !low_mask(prev + 1);
        }
        for i in bits(p.edge_rows()[j]) {
            cand &= self.rows[chosen[i]];
        }
        for i in bits(p.nonedge_rows()[j]) {
            cand &= !self.rows[chosen[i]];
        }
        cand
    }

    fn extend(&self, p: &Pattern, k: usize, allowed: u64, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return true;
        }
        for r in bits(self.candidates(p, chosen, allowed)) {
            chosen.push(r);
            if self.extend(p, k, allowed, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn extend_fixed(&self, p: &Pattern, k: usize, within: &[u64], chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return true;
        }
        for r in bits(self.candidates(p, chosen, within[chosen.len()])) {
            chosen.push(r);
            if self.extend_fixed(p, k, within, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{make_ps, PsSubset};

    #[test]
    fn push_pop_matches_rebuild() {
        let g = Graph::cycle(5).unwrap();
        let order = [0, 2, 4, 1, 3];
        let mut inc = RankAdjacency::new(&g, &order[..3]);
        inc.push_vertex(&g, &order, 3);
        inc.push_vertex(&g, &order, 4);
        inc.pop();
        assert_eq!(inc.rows, RankAdjacency::new(&g, &order[..4]).rows);
    }

    #[test]
    fn fixed_last_rank() {
        let k4 = Graph::complete(4).unwrap();
        let ranks = RankAdjacency::new(&k4, &[0, 1, 2, 3]);
        let p = make_ps(PsSubset::EMPTY);
        assert_eq!(ranks.find(&p, Some(3)), Some(vec![0, 1, 2, 3]));
        assert_eq!(ranks.find(&p, Some(2)), None);
    }
}
