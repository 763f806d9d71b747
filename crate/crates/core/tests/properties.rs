use patternforge::construct::*;
use patternforge::geometry::{intersection_graph, seg_intersect, Point, Rational, Segment};
use patternforge::*;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let len = pairs.len();
        subsequence(pairs, 0..=len).prop_map(move |edges| Graph::new(n, edges).unwrap())
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn subset() -> impl Strategy<Value = PsSubset> {
    (0u8..16).prop_map(|b| PsSubset::all().nth(b as usize).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..30).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(8)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(canonical_form(&g).unwrap().to_graph().edge_count(), g.edge_count());
    }

    #[test]
    fn reversal_mirrors_occurrences((g, perm) in graph_and_perm(8), s in subset()) {
        let sigma = Ordering::new(perm).unwrap();
        let p = make_ps(s);
        let forward = occurs(&g, &sigma, &p).unwrap().is_some();
        let backward = occurs(&g, &sigma.reversed(), &mirror(&p)).unwrap().is_some();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn search_matches_full_scan(g in graph(7), s in subset()) {
        let f = PatternSet::single(make_ps(s));
        let r = find_avoiding_ordering(&g, &f, u64::MAX).unwrap();
        prop_assert_eq!(r.member, brute_force_membership(&g, &f).unwrap().member);
        if let Some(w) = r.witness_ordering {
            prop_assert!(avoids_all(&g, &w, &f).unwrap());
        }
    }

    #[test]
    fn builders_round_trip(g in graph(7)) {
        for (sub, kind) in [("empty", 0), ("a", 1), ("ab", 2)] {
            let f = PatternSet::parse(sub).unwrap();
            let Some(sigma) = find_avoiding_ordering(&g, &f, u64::MAX).unwrap().witness_ordering else { continue };
            let rep = match kind {
                0 => build_touching_rectangles(&g, &sigma),
                1 => build_interval_filaments(&g, &sigma),
                _ => build_grounded_stairs(&g, &sigma),
            }.unwrap();
            prop_assert_eq!(intersection_graph(&rep), g.clone());
        }
    }

    #[test]
    fn rational_field_laws(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        prop_assert_eq!(a < b, a.to_f64() < b.to_f64());
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&text).unwrap(), a);
    }

    #[test]
    fn intersection_is_symmetric(c in proptest::array::uniform8(-4i64..5)) {
        let s = Segment::new(Point::new(c[0], c[1]), Point::new(c[2], c[3]));
        let t = Segment::new(Point::new(c[4], c[5]), Point::new(c[6], c[7]));
        prop_assume!(!s.is_degenerate() && !t.is_degenerate());
        let st = seg_intersect(&s, &t).unwrap();
        let ts = seg_intersect(&t, &s).unwrap();
        prop_assert_eq!(st.is_disjoint(), ts.is_disjoint());
    }
}
