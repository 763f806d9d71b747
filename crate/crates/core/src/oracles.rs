//! Direct brute-force class tests, independent of the pattern machinery.
//! Exponential, meant for small catalogs.

use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Oracle {
    Acyclic,
    LinearForest,
    Star,
    Interval,
    Split,
    Bipartite,
    Chordal,
    Comparability,
    Cocomparability,
    Permutation,
    TriangleFree,
    #[serde(rename = "at-most-2-nodes")]
    AtMostTwoNodes,
    #[serde(rename = "3-colorable")]
    ThreeColorable,
    #[serde(rename = "k4-free")]
    K4Free,
}

impl Oracle {
    pub fn test(self, g: &Graph) -> bool {
        match self {
            Self::Acyclic => is_acyclic(g),
            Self::LinearForest => is_acyclic(g) && (0..g.n()).all(|v| g.degree(v) <= 2),
            Self::Star => is_star_forest(g),
            Self::Interval => is_chordal(g) && !has_asteroidal_triple(g),
            Self::Split => is_split(g),
            Self::Bipartite => is_bipartite(g),
            Self::Chordal => is_chordal(g),
            Self::Comparability => has_transitive_orientation(g),
            Self::Cocomparability => has_transitive_orientation(&complement(g)),
            Self::Permutation => has_transitive_orientation(g) && has_transitive_orientation(&complement(g)),
            Self::TriangleFree => !has_clique(g, 3),
            Self::AtMostTwoNodes => g.n() <= 2,
            Self::ThreeColorable => is_colorable(g, 3),
            Self::K4Free => !has_clique(g, 4),
        }
    }
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut h = Graph::empty(n).expect("same order");
    for v in 1..n {
        for u in 0..v {
            if !g.has_edge(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

pub fn is_acyclic(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

/// Every edge goes through one common vertex.
fn is_star_forest(g: &Graph) -> bool {
    let m = g.edge_count();
    m == 0 || (0..g.n()).any(|v| g.degree(v) == m)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut color = vec![None; g.n()];
    for s in 0..g.n() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let c = color[v].expect("colored on push");
            for w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(d) if d == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

fn is_connected_subset(g: &Graph, set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= g.neighbor_mask(v) & set;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == set
}

/// No induced cycle of length four or more, found by scanning vertex
/// subsets that induce a connected 2-regular graph.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n).all(|set| {
        set.count_ones() < 4
            || !bits(set).all(|v| (g.neighbor_mask(v) & set).count_ones() == 2)
            || !is_connected_subset(g, set)
    })
}

/// Three pairwise non-adjacent vertices, each pair joined by a path that
/// avoids the closed neighbourhood of the third.
fn has_asteroidal_triple(g: &Graph) -> bool {
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let joined = |x: usize, y: usize, avoid: usize| {
        let allowed = all & !(g.neighbor_mask(avoid) | 1 << avoid);
        let mut seen = 1u64 << x;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.neighbor_mask(v) & allowed;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen >> y & 1 == 1
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if joined(a, b, c) && joined(a, c, b) && joined(b, c, a) {
                    return true;
                }
            }
        }
    }
    false
}

/// A partition into a clique and an independent set, by subset scan.
pub fn is_split(g: &Graph) -> bool {
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let is_clique = |s: u64| bits(s).all(|v| g.neighbor_mask(v) & s == s & !(1 << v));
    let is_independent = |s: u64| bits(s).all(|v| g.neighbor_mask(v) & s == 0);
    (0u64..1 << n).any(|k| is_clique(k) && is_independent(all & !k))
}

pub fn has_clique(g: &Graph, size: usize) -> bool {
    fn grow(g: &Graph, cand: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        bits(cand).any(|v| grow(g, cand & g.neighbor_mask(v) & !((1 << (v + 1)) - 1), need - 1))
    }
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    grow(g, all, size)
}

pub fn is_colorable(g: &Graph, colors: usize) -> bool {
    fn assign(g: &Graph, v: usize, colors: usize, col: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..colors {
            if g.neighbors(v).filter(|&u| u < v).all(|u| col[u] != c) {
                col[v] = c;
                if assign(g, v + 1, colors, col) {
                    return true;
                }
            }
        }
        false
    }
    assign(g, 0, colors, &mut vec![usize::MAX; g.n()])
}

/// Backtracking over edge orientations; each new arc is checked against
/// the arcs already placed so that no `a -> b -> c` lacks `a -> c`.
pub fn has_transitive_orientation(g: &Graph) -> bool {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    // out[v]: heads of arcs leaving v; inn[v]: tails of arcs entering v.
    let mut out = vec![0u64; n];
    let mut inn = vec![0u64; n];

    fn consistent(g: &Graph, out: &[u64], inn: &[u64], u: usize, v: usize) -> bool {
        // x -> u -> v needs x -> v.
        if bits(inn[u]).any(|x| !g.has_edge(x, v) || out[v] >> x & 1 == 1) {
            return false;
        }
        // u -> v -> y needs u -> y.
        if bits(out[v]).any(|y| !g.has_edge(u, y) || out[y] >> u & 1 == 1) {
            return false;
        }
        // v -> x -> u would need v -> u.
        out[v] & inn[u] == 0
    }

    fn go(g: &Graph, edges: &[(usize, usize)], i: usize, out: &mut [u64], inn: &mut [u64]) -> bool {
        let Some(&(a, b)) = edges.get(i) else {
            return true;
        };
        for (u, v) in [(a, b), (b, a)] {
            if consistent(g, out, inn, u, v) {
                out[u] |= 1 << v;
                inn[v] |= 1 << u;
                if go(g, edges, i + 1, out, inn) {
                    return true;
                }
                out[u] &= !(1 << v);
                inn[v] &= !(1 << u);
            }
            if i == 0 {
                // Reversing every arc preserves transitivity.
                break;
            }
        }
        false
    }

    go(g, &edges, 0, &mut out, &mut inn)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn cycles() {
        let c4 = Graph::cycle(4).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_chordal(&c4) && !is_chordal(&c5));
        assert!(is_bipartite(&c4) && !is_bipartite(&c5));
        assert!(has_transitive_orientation(&c4) && !has_transitive_orientation(&c5));
        assert!(!is_acyclic(&c4));
        assert!(is_colorable(&c5, 3) && !is_colorable(&c5, 2));
    }

    #[test]
    fn cliques() {
        let k4 = Graph::complete(4).unwrap();
        assert!(has_clique(&k4, 4) && !has_clique(&k4, 5));
        assert!(!is_colorable(&k4, 3));
        assert!(is_split(&k4) && is_chordal(&k4));
        assert!(Oracle::Permutation.test(&k4));
    }

    #[test]
    fn split_examples() {
        assert!(!is_split(&Graph::cycle(4).unwrap()));
        assert!(!is_split(&g(4, &[(0, 1), (2, 3)])));
        assert!(is_split(&Graph::path(4).unwrap()));
        assert!(!is_split(&Graph::cycle(5).unwrap()));
    }

    #[test]
    fn asteroidal() {
        // Subdivided claw: the three leaves form an asteroidal triple.
        let claw = g(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        assert!(has_asteroidal_triple(&claw));
        assert!(!Oracle::Interval.test(&claw));
        assert!(Oracle::Interval.test(&Graph::path(5).unwrap()));
    }

    #[test]
    fn cocomparability_of_c6() {
        assert!(!Oracle::Cocomparability.test(&Graph::cycle(6).unwrap()));
        assert!(Oracle::Cocomparability.test(&Graph::cycle(4).unwrap()));
    }

    #[test]
    fn oracle_names() {
        let o: Oracle = serde_json::from_str("\"3-colorable\"").unwrap();
        assert_eq!(o, Oracle::ThreeColorable);
        let o: Oracle = serde_json::from_str("\"linear-forest\"").unwrap();
        assert_eq!(o, Oracle::LinearForest);
    }
}
