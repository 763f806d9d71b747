//! Membership in pattern classes: pruned backtracking and a full scan.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::Ordering;
use crate::pattern::{PatternSet, RankAdjacency};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest order [`brute_force_membership`] accepts.
pub const MAX_BRUTE_ORDER: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipResult {
    pub member: bool,
    pub witness_ordering: Option<Ordering>,
    pub nodes_explored: u64,
}

pub fn avoids_all(g: &Graph, sigma: &Ordering, family: &PatternSet) -> Result<bool> {
    sigma.check_for(g)?;
    let ranks = RankAdjacency::new(g, sigma.as_slice());
    Ok(family.patterns().iter().all(|p| ranks.find(p, None).is_none()))
}

/// Backtracking over ordering prefixes.
///
/// A node is a prefix with no realized pattern. Each extension only checks
/// tuples ending at the new rank. If some unplaced vertex would complete a
/// pattern when appended, the prefix is dead: wherever that vertex goes
/// later, the placed vertices still precede it. Vertices are tried by
/// descending degree, then ascending id.
pub fn find_avoiding_ordering(g: &Graph, family: &PatternSet, budget: u64) -> Result<MembershipResult> {
    if budget == 0 {
        return Err(Error::BudgetExhausted { nodes_explored: 0 });
    }
    let mut branch: Vec<usize> = (0..g.n()).collect();
    branch.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut search = Search {
        g,
        family,
        branch,
        budget,
        nodes: 0,
        ranks: RankAdjacency::default(),
        order: Vec::with_capacity(g.n()),
        used: 0,
    };
    let found = search.run()?;
    let witness =
        if found { Some(Ordering::new(search.order.clone()).expect("search builds a permutation")) } else { None };
    Ok(MembershipResult { member: found, witness_ordering: witness, nodes_explored: search.nodes })
}

struct Search<'a> {
    g: &'a Graph,
    family: &'a PatternSet,
    branch: Vec<usize>,
    budget: u64,
    nodes: u64,
    ranks: RankAdjacency,
    order: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn earlier_mask(&self, v: usize) -> u64 {
        self.order.iter().enumerate().filter(|&(_, &u)| self.g.has_edge(u, v)).fold(0, |m, (r, _)| m | 1 << r)
    }

    /// Whether appending `v` realizes some pattern ending at the new rank.
    fn completes(&mut self, v: usize) -> bool {
        let t = self.order.len();
        self.ranks.push(self.earlier_mask(v));
        let hit = self.family.patterns().iter().any(|p| self.ranks.find(p, Some(t)).is_some());
        self.ranks.pop();
        hit
    }

    fn run(&mut self) -> Result<bool> {
        let n = self.g.n();
        if self.order.len() == n {
            return Ok(true);
        }
        let open: Vec<usize> = self.branch.iter().copied().filter(|&v| self.used >> v & 1 == 0).collect();
        for &v in &open {
            if self.completes(v) {
                return Ok(false);
            }
        }
        for v in open {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExhausted { nodes_explored: self.budget });
            }
            let mask = self.earlier_mask(v);
            self.ranks.push(mask);
            self.order.push(v);
            self.used |= 1 << v;
            if self.run()? {
                return Ok(true);
            }
            self.used &= !(1 << v);
            self.order.pop();
            self.ranks.pop();
        }
        Ok(false)
    }
}

/// Scans all `n!` orderings in lexicographic order; the witness is the
/// first avoiding one.
pub fn brute_force_membership(g: &Graph, family: &PatternSet) -> Result<MembershipResult> {
    let n = g.n();
    if n > MAX_BRUTE_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_BRUTE_ORDER });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut scanned = 0u64;
    loop {
        scanned += 1;
        let ranks = RankAdjacency::new(g, &perm);
        if family.patterns().iter().all(|p| ranks.find(p, None).is_none()) {
            return Ok(MembershipResult {
                member: true,
                witness_ordering: Some(Ordering::new(perm).expect("permutation")),
                nodes_explored: scanned,
            });
        }
        if !next_permutation(&mut perm) {
            return Ok(MembershipResult { member: false, witness_ordering: None, nodes_explored: scanned });
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
