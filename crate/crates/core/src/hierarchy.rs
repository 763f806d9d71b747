//! Catalog-scale inclusion checks between classes and hunts for
//! separating graphs.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::construct::{build_grounded_stairs, build_interval_filaments};
use crate::error::{Error, Result};
use crate::geometry::{grounding_order, RepKind, Representation};
use crate::graph::{enumerate_catalog, Graph};
use crate::oracles::Oracle;
use crate::ordering::Ordering;
use crate::pattern::{PatternSet, PsSubset};
use crate::solver::{avoids_all, brute_force_membership, find_avoiding_ordering, DEFAULT_BUDGET};

/// Largest order for catalog sweeps over pattern classes.
pub const MAX_SWEEP_ORDER: usize = 7;
/// Oracles that brute-force orientations are limited to this order.
pub const MAX_ORIENTATION_ORDER: usize = 6;
/// Largest order for hunts.
pub const MAX_HUNT_ORDER: usize = 8;

const ALIASES: &[(&str, &str)] = &[
    ("outerplanar", "C_empty"),
    ("grounded-rectangles", "C_b"),
    ("G-rectangles", "C_b"),
    ("G-L", "grounded-L"),
    ("grounded-L-shapes", "grounded-L"),
];

#[derive(Debug, Clone)]
pub enum ClassKind {
    Pattern(PatternSet),
    Oracle(Oracle),
    All,
}

/// A class with a decision procedure usable on catalog graphs.
#[derive(Debug, Clone)]
pub struct ClassSpec {
    pub name: String,
    pub kind: ClassKind,
}

/// Verdict plus, for pattern classes, the avoiding ordering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Ordering>,
}

impl ClassSpec {
    pub fn pattern(ps: PatternSet) -> Self {
        let name = ps.name.clone().unwrap_or_else(|| "pattern".into());
        Self { name, kind: ClassKind::Pattern(ps) }
    }

    pub fn oracle(o: Oracle) -> Self {
        let name = serde_json::to_value(o).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        Self { name: format!("oracle:{name}"), kind: ClassKind::Oracle(o) }
    }

    pub fn all() -> Self {
        Self { name: "all".into(), kind: ClassKind::All }
    }

    /// `all`, `oracle:<name>`, an alias such as `outerplanar`, a `P_S`
    /// letter string or a catalog name.
    pub fn parse(selector: &str) -> Result<Self> {
        if selector == "all" {
            return Ok(Self::all());
        }
        if let Some(o) = selector.strip_prefix("oracle:") {
            let oracle: Oracle = serde_json::from_value(serde_json::Value::String(o.into()))
                .map_err(|_| Error::UnknownClass(selector.into()))?;
            return Ok(Self::oracle(oracle));
        }
        let target = ALIASES.iter().find(|(a, _)| a.eq_ignore_ascii_case(selector)).map_or(selector, |(_, t)| t);
        Ok(Self::pattern(PatternSet::parse(target)?))
    }

    pub fn of_subset(s: PsSubset) -> Self {
        Self::pattern(PatternSet::parse(&s.to_string()).expect("subsets always resolve"))
    }

    /// Largest catalog order this class may be swept at.
    pub fn max_sweep_order(&self) -> usize {
        match self.kind {
            ClassKind::Oracle(Oracle::Comparability | Oracle::Cocomparability | Oracle::Permutation) => {
                MAX_ORIENTATION_ORDER
            }
            ClassKind::All => MAX_HUNT_ORDER,
            _ => MAX_SWEEP_ORDER,
        }
    }

    pub fn membership(&self, g: &Graph) -> Result<Membership> {
        Ok(match &self.kind {
            ClassKind::Pattern(ps) => {
                let r = find_avoiding_ordering(g, ps, DEFAULT_BUDGET)?;
                Membership { member: r.member, witness: r.witness_ordering }
            }
            ClassKind::Oracle(o) => Membership { member: o.test(g), witness: None },
            ClassKind::All => Membership { member: true, witness: None },
        })
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        Ok(self.membership(g)?.member)
    }

    /// Re-checks a verdict independently: the witness must avoid the
    /// family, and the full scan must agree.
    fn confirm(&self, g: &Graph, claimed: &Membership) -> Result<()> {
        let ok = match &self.kind {
            ClassKind::Pattern(ps) => {
                let witness_ok = match &claimed.witness {
                    Some(w) => avoids_all(g, w, ps)?,
                    None => !claimed.member,
                };
                witness_ok && brute_force_membership(g, ps)?.member == claimed.member
            }
            ClassKind::Oracle(o) => o.test(g) == claimed.member,
            ClassKind::All => claimed.member,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InternalContradiction(format!("membership of {g} in {} did not re-verify", self.name)))
        }
    }
}

fn g6_opt<S: Serializer>(g: &Option<Graph>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match g {
        Some(g) => s.serialize_str(&g.to_string()),
        None => s.serialize_none(),
    }
}

fn g6<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_string())
}

/// Outcome of checking `sub ⊆ sup` on a catalog. Graphs serialize as graph6.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeCheckResult {
    pub sub: String,
    pub sup: String,
    pub n_max: usize,
    pub graphs_checked: usize,
    pub inclusion_holds_on_catalog: bool,
    /// First graph in `sub` but not in `sup`.
    #[serde(serialize_with = "g6_opt")]
    pub counterexample: Option<Graph>,
    /// First graph in `sup` but not in `sub`.
    #[serde(serialize_with = "g6_opt")]
    pub separating_example: Option<Graph>,
    pub strict_on_catalog: bool,
}

fn check_order(n_max: usize, max: usize) -> Result<()> {
    if n_max > max {
        Err(Error::OrderTooLarge { n: n_max, max })
    } else {
        Ok(())
    }
}

fn memberships(spec: &ClassSpec, graphs: &[Graph]) -> Result<Vec<Membership>> {
    graphs.par_iter().map(|g| spec.membership(g)).collect()
}

fn inclusion_from(
    sub: &ClassSpec,
    sup: &ClassSpec,
    n_max: usize,
    graphs: &[Graph],
    a: &[Membership],
    b: &[Membership],
) -> Result<EdgeCheckResult> {
    let first = |want_sub: bool| (0..graphs.len()).find(|&i| a[i].member == want_sub && b[i].member != want_sub);
    let counter = first(true);
    let separating = first(false);
    for i in counter.into_iter().chain(separating) {
        sub.confirm(&graphs[i], &a[i])?;
        sup.confirm(&graphs[i], &b[i])?;
    }
    Ok(EdgeCheckResult {
        sub: sub.name.clone(),
        sup: sup.name.clone(),
        n_max,
        graphs_checked: graphs.len(),
        inclusion_holds_on_catalog: counter.is_none(),
        counterexample: counter.map(|i| graphs[i].clone()),
        separating_example: separating.map(|i| graphs[i].clone()),
        strict_on_catalog: separating.is_some(),
    })
}

/// Checks `sub ⊆ sup` on every catalog graph of order at most `n_max`.
pub fn verify_inclusion(sub: &ClassSpec, sup: &ClassSpec, n_max: usize) -> Result<EdgeCheckResult> {
    check_order(n_max, sub.max_sweep_order().min(sup.max_sweep_order()).min(MAX_SWEEP_ORDER))?;
    let graphs: Vec<Graph> = enumerate_catalog(n_max)?.iter().cloned().collect();
    let a = memberships(sub, &graphs)?;
    let b = memberships(sup, &graphs)?;
    inclusion_from(sub, sup, n_max, &graphs, &a, &b)
}

/// A graph in `b` but not in `a`, with both verdicts re-verified.
#[derive(Debug, Clone, Serialize)]
pub struct HuntHit {
    #[serde(serialize_with = "g6")]
    pub graph: Graph,
    pub in_b: Membership,
    pub in_a: Membership,
}

/// First catalog graph, by order then canonical position, that is in `b`
/// and not in `a`.
pub fn hunt_separating_graph(a: &ClassSpec, b: &ClassSpec, n_max: usize) -> Result<Option<HuntHit>> {
    check_order(n_max, MAX_HUNT_ORDER)?;
    let catalog = enumerate_catalog(n_max)?;
    for n in 1..=n_max {
        let hit = catalog
            .of_order(n)
            .par_iter()
            .map(|g| -> Result<Option<HuntHit>> {
                let in_b = b.membership(g)?;
                if !in_b.member {
                    return Ok(None);
                }
                let in_a = a.membership(g)?;
                Ok((!in_a.member).then(|| HuntHit { graph: g.clone(), in_b, in_a }))
            })
            .find_first(|r| !matches!(r, Ok(None)));
        if let Some(hit) = hit {
            let hit = hit?.expect("only hits and errors are kept");
            b.confirm(&hit.graph, &hit.in_b)?;
            a.confirm(&hit.graph, &hit.in_a)?;
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

/// A hard-coded graph with its expected `C_S` verdicts.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub expected: Vec<(PsSubset, bool)>,
    /// An ordering avoiding `P_S`, for a class the graph belongs to.
    pub witness: Option<(PsSubset, Ordering)>,
}

fn subset(s: &str) -> PsSubset {
    s.parse().expect("valid subset")
}

/// The 8-vertex graph in `C_ab` but in neither `C_a` nor `C_b`, and the
/// 12-vertex graph outside `C_abcd`.
pub fn separation_fixtures() -> Vec<Fixture> {
    let eight = Graph::new(8, (0..7).map(|i| (i, i + 1)).chain([(0, 7), (0, 4), (2, 6)])).expect("valid graph");
    let twelve =
        Graph::new(12, (0..11).map(|i| (i, i + 1)).chain([(0, 11), (0, 6), (2, 8), (4, 10)])).expect("valid graph");
    vec![
        Fixture {
            name: "in-ab-not-a-not-b",
            graph: eight,
            expected: vec![(subset("a"), false), (subset("b"), false), (subset("ab"), true)],
            witness: Some((subset("ab"), Ordering::new(vec![0, 1, 3, 4, 5, 6, 2, 7]).expect("permutation"))),
        },
        Fixture { name: "not-abcd", graph: twelve, expected: vec![(subset("abcd"), false)], witness: None },
    ]
}

/// How a diagram edge is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeMethod {
    /// Both ends are decidable; every catalog graph is tested.
    Sweep,
    /// The superclass has a builder taking the subclass's orderings; every
    /// member of the subclass is built and verified.
    Constructive,
    /// The subclass has a builder; grounding orders of every built
    /// representation are tested against the superclass's patterns.
    GroundingOrder,
    /// No decision procedure and no builder on either side that applies.
    NotComputable,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagramNode {
    pub id: &'static str,
    pub label: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decided_by: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub built_by: Option<RepKind>,
    /// Catalog members, when decidable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagramEdge {
    pub id: u32,
    pub from: &'static str,
    pub to: &'static str,
    /// Drawn as a known strict inclusion.
    pub thick: bool,
    pub method: EdgeMethod,
    #[serde(flatten)]
    pub result: Option<EdgeCheckResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagramReport {
    pub n_max: usize,
    pub nodes: Vec<DiagramNode>,
    pub edges: Vec<DiagramEdge>,
}

// (id, label, selector)
const NODES: &[(&str, &str, Option<&str>)] = &[
    ("forest", "T-G. L-shapes / forests", Some("forest")),
    ("outerplanar", "T-G. strings / outerplanar", Some("C_empty")),
    ("interval", "B-G. segments / interval", Some("interval")),
    ("cocomparability", "2-G. stairs / cocomparability", Some("cocomparability")),
    ("permutation", "2-G. segments / permutation", Some("permutation")),
    ("C_a", "C_a", Some("C_a")),
    ("interval-filament", "B-G. strings / interval filament", None),
    ("grounded-rectangles", "G. rectangles (C_b)", Some("C_b")),
    ("grounded-L-shapes", "G. L-shapes", Some("grounded-L")),
    ("grounded-segments", "G. segments", None),
    ("C_ab", "C_ab", Some("C_ab")),
    ("grounded-stairs", "G. stairs", None),
    ("grounded-convex", "G. convex", None),
    ("grounded-strings", "G. strings", None),
    ("C_abc", "C_abc", Some("C_abc")),
    ("C_abcd", "C_abcd", Some("C_abcd")),
];

// (id, from, to, thick)
const EDGES: &[(u32, &str, &str, bool)] = &[
    (1, "forest", "outerplanar", true),
    (2, "forest", "grounded-L-shapes", true),
    (3, "interval", "C_a", true),
    (4, "interval", "cocomparability", true),
    (5, "interval", "grounded-rectangles", true),
    (6, "interval", "grounded-L-shapes", true),
    (7, "permutation", "cocomparability", true),
    (8, "permutation", "grounded-L-shapes", true),
    (9, "outerplanar", "C_a", true),
    (10, "outerplanar", "grounded-rectangles", true),
    (11, "C_a", "interval-filament", false),
    (12, "cocomparability", "interval-filament", true),
    (13, "C_a", "C_ab", true),
    (14, "interval-filament", "C_ab", false),
    (15, "grounded-rectangles", "C_ab", true),
    (16, "grounded-rectangles", "grounded-convex", true),
    (17, "grounded-L-shapes", "C_ab", true),
    (18, "grounded-L-shapes", "grounded-segments", true),
    (19, "C_ab", "grounded-stairs", false),
    (20, "grounded-segments", "grounded-stairs", false),
    (21, "grounded-segments", "grounded-convex", true),
    (22, "grounded-stairs", "C_abc", false),
    (23, "grounded-stairs", "grounded-strings", false),
    (24, "grounded-convex", "C_abc", false),
    (25, "grounded-convex", "grounded-strings", false),
    (26, "C_abc", "C_abcd", false),
    (27, "grounded-strings", "C_abcd", false),
];

/// (node, builder, node whose orderings the builder takes)
const BUILDERS: &[(&str, RepKind, &str)] =
    &[("interval-filament", RepKind::IntervalFilaments, "C_a"), ("grounded-stairs", RepKind::GroundedStairs, "C_ab")];

struct Built {
    graphs: Vec<usize>,
    reps: Vec<std::result::Result<Representation, String>>,
}

/// Checks every edge of the class diagram on the catalog up to `n_max`.
pub fn diagram_report(n_max: usize) -> Result<DiagramReport> {
    check_order(n_max, MAX_SWEEP_ORDER)?;
    let graphs: Vec<Graph> = enumerate_catalog(n_max)?.iter().cloned().collect();

    let specs: Vec<Option<ClassSpec>> =
        NODES.iter().map(|(_, _, sel)| sel.map(ClassSpec::parse).transpose()).collect::<Result<_>>()?;
    let verdicts: Vec<Option<Vec<Membership>>> =
        specs.iter().map(|s| s.as_ref().map(|s| memberships(s, &graphs)).transpose()).collect::<Result<_>>()?;
    let index = |id: &str| NODES.iter().position(|(n, _, _)| *n == id).expect("edges name known nodes");

    let mut built: Vec<Option<Built>> = NODES.iter().map(|_| None).collect();
    for &(node, kind, input) in BUILDERS {
        let v = verdicts[index(input)].as_ref().expect("builder inputs are decidable");
        let members: Vec<usize> = (0..graphs.len()).filter(|&i| v[i].member).collect();
        let reps = members
            .par_iter()
            .map(|&i| {
                let sigma = v[i].witness.as_ref().expect("pattern members carry a witness");
                let r = match kind {
                    RepKind::IntervalFilaments => build_interval_filaments(&graphs[i], sigma),
                    _ => build_grounded_stairs(&graphs[i], sigma),
                };
                r.map_err(|e| e.to_string())
            })
            .collect();
        built[index(node)] = Some(Built { graphs: members, reps });
    }

    let nodes = NODES
        .iter()
        .enumerate()
        .map(|(i, &(id, label, _))| DiagramNode {
            id,
            label,
            decided_by: specs[i].as_ref().map(|s| s.name.clone()),
            built_by: BUILDERS.iter().find(|b| b.0 == id).map(|b| b.1),
            members: verdicts[i].as_ref().map(|v| v.iter().filter(|m| m.member).count()),
        })
        .collect();

    let mut edges = Vec::with_capacity(EDGES.len());
    for &(id, from, to, thick) in EDGES {
        let (f, t) = (index(from), index(to));
        let (method, result) = match (&specs[f], &specs[t]) {
            (Some(sub), Some(sup)) => {
                let (a, b) = (verdicts[f].as_ref().expect("decidable"), verdicts[t].as_ref().expect("decidable"));
                (EdgeMethod::Sweep, Some(inclusion_from(sub, sup, n_max, &graphs, a, b)?))
            }
            (Some(sub), None) if BUILDERS.iter().any(|b| b.0 == to && b.2 == from) => {
                let b = built[t].as_ref().expect("builder ran");
                let failed = b.reps.iter().position(|r| r.is_err()).map(|k| graphs[b.graphs[k]].clone());
                (EdgeMethod::Constructive, Some(partial_result(&sub.name, to, n_max, b.reps.len(), failed)))
            }
            (None, Some(sup)) if built[f].is_some() => {
                let ClassKind::Pattern(ps) = &sup.kind else { unreachable!("diagram classes are pattern classes") };
                let b = built[f].as_ref().expect("checked above");
                let mut failed = None;
                for (k, rep) in b.reps.iter().enumerate() {
                    let Ok(rep) = rep else { continue };
                    if !avoids_all(&graphs[b.graphs[k]], &grounding_order(rep), ps)? {
                        failed = Some(graphs[b.graphs[k]].clone());
                        break;
                    }
                }
                let checked = b.reps.iter().filter(|r| r.is_ok()).count();
                (EdgeMethod::GroundingOrder, Some(partial_result(from, &sup.name, n_max, checked, failed)))
            }
            _ => (EdgeMethod::NotComputable, None),
        };
        edges.push(DiagramEdge { id, from, to, thick, method, result });
    }
    Ok(DiagramReport { n_max, nodes, edges })
}

fn partial_result(sub: &str, sup: &str, n_max: usize, checked: usize, failed: Option<Graph>) -> EdgeCheckResult {
    EdgeCheckResult {
        sub: sub.into(),
        sup: sup.into(),
        n_max,
        graphs_checked: checked,
        inclusion_holds_on_catalog: failed.is_none(),
        counterexample: failed,
        separating_example: None,
        strict_on_catalog: false,
    }
}

impl DiagramReport {
    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Graphviz rendering: thick edges are bold; green holds on the
    /// catalog, red has a counterexample, gray is not computable. A
    /// trailing `*` marks a separating example found.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph classes {\n  rankdir=BT;\n  node [shape=box, style=rounded];\n");
        for n in &self.nodes {
            let _ = writeln!(out, "  \"{}\" [label=\"{}\"];", n.id, n.label);
        }
        for e in &self.edges {
            let color = match &e.result {
                None => "gray",
                Some(r) if r.inclusion_holds_on_catalog => "darkgreen",
                Some(_) => "red",
            };
            let star = if e.result.as_ref().is_some_and(|r| r.strict_on_catalog) { "*" } else { "" };
            let style = if e.thick { ", penwidth=2.5" } else { "" };
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}{}\", color={}{}];",
                e.from, e.to, e.id, star, color, style
            );
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_selectors() {
        assert_eq!(ClassSpec::parse("outerplanar").unwrap().name, "C_empty");
        assert_eq!(ClassSpec::parse("ab").unwrap().name, "C_ab");
        assert_eq!(ClassSpec::parse("oracle:chordal").unwrap().name, "oracle:chordal");
        assert!(matches!(ClassSpec::parse("all").unwrap().kind, ClassKind::All));
        assert!(ClassSpec::parse("oracle:nope").is_err());
        assert!(ClassSpec::parse("nope").is_err());
    }

    #[test]
    fn empty_in_a_separated_by_k4() {
        let r = verify_inclusion(&ClassSpec::parse("empty").unwrap(), &ClassSpec::parse("a").unwrap(), 5).unwrap();
        assert!(r.inclusion_holds_on_catalog);
        assert!(r.strict_on_catalog);
        let sep = r.separating_example.unwrap();
        assert!(sep.n() <= 4);
        assert_eq!(sep.edge_count(), sep.n() * (sep.n() - 1) / 2, "first separation is complete");
    }

    #[test]
    fn order_limits() {
        let a = ClassSpec::parse("a").unwrap();
        assert!(matches!(verify_inclusion(&a, &a, 8), Err(Error::OrderTooLarge { .. })));
        let cmp = ClassSpec::parse("oracle:comparability").unwrap();
        assert!(matches!(verify_inclusion(&cmp, &a, 7), Err(Error::OrderTooLarge { .. })));
        assert!(matches!(hunt_separating_graph(&a, &a, 9), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn forest_vs_outerplanar_hunt() {
        let forest = ClassSpec::parse("forest").unwrap();
        let outer = ClassSpec::parse("outerplanar").unwrap();
        let hit = hunt_separating_graph(&forest, &outer, 4).unwrap().unwrap();
        assert_eq!(hit.graph.n(), 3);
        assert_eq!(hit.graph.edge_count(), 3);
    }

    #[test]
    fn fixtures_are_consistent() {
        for f in separation_fixtures() {
            if let Some((s, w)) = &f.witness {
                assert!(avoids_all(&f.graph, w, &PatternSet::parse(&s.to_string()).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn diagram_small() {
        let r = diagram_report(4).unwrap();
        assert_eq!(r.edges.len(), 27);
        assert!(r.edges.iter().filter_map(|e| e.result.as_ref()).all(|res| res.inclusion_holds_on_catalog));
        assert!(r.to_dot().contains("\"C_a\" -> \"C_ab\""));
        let methods: Vec<_> = r.edges.iter().map(|e| e.method).collect();
        assert_eq!(methods[10], EdgeMethod::Constructive);
        assert_eq!(methods[13], EdgeMethod::GroundingOrder);
        assert_eq!(methods[26], EdgeMethod::NotComputable);
    }
}
