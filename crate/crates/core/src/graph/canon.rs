use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Graph;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 10;

/// Lexicographically least upper-triangle adjacency string over all
/// relabelings. Pairs are read column by column, `(0,1), (0,2), (1,2),
/// (0,3), ...`, and packed most significant bit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalForm {
    pub fn bit_len(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("canonical order is small");
        let mut pos = self.bit_len();
        for v in 1..self.n {
            for u in 0..v {
                pos -= 1;
                if self.bits >> pos & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..self.bit_len()).rev() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_CANONICAL_ORDER });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut search = Search { g, total, placed: Vec::with_capacity(n), used: 0, best: u64::MAX };
    search.run(0, 0);
    let bits = if total == 0 { 0 } else { search.best };
    Ok(CanonicalForm { n, bits })
}

/// Branch and bound over placements: the bits among the first `k` placed
/// vertices form a prefix of the final string, so a prefix larger than the
/// best one found cannot lead anywhere.
struct Search<'a> {
    g: &'a Graph,
    total: usize,
    placed: Vec<usize>,
    used: u64,
    best: u64,
}

impl Search<'_> {
    fn run(&mut self, prefix: u64, prefix_len: usize) {
        let k = self.placed.len();
        if k == self.g.n() {
            self.best = self.best.min(prefix);
            return;
        }
        let next_len = prefix_len + k;
        for v in 0..self.g.n() {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut p = prefix;
            for &u in &self.placed {
                p = p << 1 | self.g.has_edge(u, v) as u64;
            }
            if self.best != u64::MAX && next_len > 0 {
                let best_prefix = self.best >> (self.total - next_len);
                if p > best_prefix {
                    continue;
                }
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.run(p, next_len);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}
