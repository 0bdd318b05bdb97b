//! Structural invariants checked on random shapes and slope sequences.

use std::io::Cursor;

use proptest::prelude::*;

use girthlab::bsg::{inevitable_walks, validate_closed_walk, BlockStructureGraph};
use girthlab::construction::{
    build_mother, lift, lift_with, read_alist, write_alist, Anchoring, CodeDescriptor, CodeParams,
    SlopeSequence,
};
use girthlab::girth::{g_max, girth_bfs, girth_bsg, Girth};

fn shape() -> impl Strategy<Value = CodeParams> {
    (2usize..=6, 1usize..=4, 1usize..=4).prop_map(|(a, b, c)| CodeParams::new(a, b, c).unwrap())
}

/// A shape, a lifting size and a slope sequence of the right length.
fn code() -> impl Strategy<Value = (CodeParams, usize, Vec<usize>)> {
    (shape(), 1usize..=9).prop_flat_map(|(p, m)| {
        let n = p.block_cols();
        (Just(p), Just(m), prop::collection::vec(0..m, n))
    })
}

fn tanner_girth(p: CodeParams, m: usize, slopes: &[usize]) -> Girth {
    let mother = build_mother(p).unwrap();
    let seq = SlopeSequence::new(m, slopes.iter().copied()).unwrap();
    girth_bfs(lift(&mother, &seq).unwrap().matrix())
        .unwrap()
        .girth
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mother_has_column_weight_two(p in shape()) {
        let h = build_mother(p).unwrap();
        prop_assert_eq!(h.rows(), (p.a() + p.c() - 1) * p.b());
        prop_assert_eq!(h.cols(), (p.a() + p.c()) * p.b());
        let dense = h.to_dense();
        for j in 0..h.cols() {
            prop_assert_eq!(dense.iter().filter(|r| r[j] == 1).count(), 2);
        }
        prop_assert_eq!(dense.iter().flatten().filter(|&&x| x == 1).count(), 2 * h.cols());
    }

    #[test]
    fn lift_is_circulant_expansion((p, m, s) in code()) {
        let mother = build_mother(p).unwrap();
        let seq = SlopeSequence::new(m, s.iter().copied()).unwrap();
        let code = lift(&mother, &seq).unwrap();
        let h = code.matrix();
        prop_assert_eq!(h.rows(), mother.rows() * m);
        prop_assert_eq!(h.cols(), mother.cols() * m);
        for j in 0..h.cols() {
            prop_assert_eq!(h.column(j).len(), 2);
        }
        // each block of the lift is a permutation matrix exactly where the mother has a 1
        for (k, &[top, bottom]) in mother.support().iter().enumerate() {
            let [st, sb] = code.shifts(k);
            prop_assert_eq!(st, 0);
            prop_assert_eq!(sb, s[k]);
            for j in 0..m {
                let rows = h.column(k * m + j);
                prop_assert!(rows.contains(&(top * m + j)));
                prop_assert!(rows.contains(&(bottom * m + (j + s[k]) % m)));
            }
        }
    }

    #[test]
    fn girth_is_even_and_bounded((p, m, s) in code()) {
        match tanner_girth(p, m, &s) {
            Girth::Finite(g) => {
                prop_assert_eq!(g % 2, 0);
                prop_assert!(g >= 4);
                prop_assert!(g <= g_max(&p));
            }
            other => prop_assert!(false, "a DC code always has a cycle, got {:?}", other),
        }
    }

    #[test]
    fn engines_agree((p, m, s) in code()) {
        let mother = build_mother(p).unwrap();
        let seq = SlopeSequence::new(m, s.iter().copied()).unwrap();
        let code = lift(&mother, &seq).unwrap();
        let bfs = girth_bfs(code.matrix()).unwrap().girth;
        let bsg = girth_bsg(&BlockStructureGraph::from_lifted(&code)).unwrap().girth;
        prop_assert_eq!(bfs, bsg);
    }

    #[test]
    fn inevitable_walks_close_under_any_slopes((p, m, s) in code()) {
        // with m = 1 an edge may be used only once, which P needs twice
        prop_assume!(m >= 2);
        let walks = inevitable_walks(p).unwrap();
        let seq = SlopeSequence::new(m, s.iter().copied()).unwrap();
        let graph = walks.graph.with_slopes(&seq).unwrap();
        prop_assert!(validate_closed_walk(&graph, &walks.p).is_valid());
        prop_assert!(validate_closed_walk(&graph, &walks.p_prime).is_valid());
        prop_assert_eq!(walks.p.slope_sum(&graph), Some(0));
        prop_assert_eq!(walks.p_prime.slope_sum(&graph), Some(0));
    }

    #[test]
    fn row_gauge_preserves_girth((p, m, s) in code(), shift in prop::collection::vec(0usize..9, 64)) {
        // adding t_v to every shift in block row v gives an isomorphic lift
        let mother = build_mother(p).unwrap();
        let moved: Vec<usize> = mother
            .support()
            .iter()
            .zip(&s)
            .map(|(&[top, bottom], &x)| (x + shift[bottom] % m + m - shift[top] % m) % m)
            .collect();
        prop_assert_eq!(tanner_girth(p, m, &s), tanner_girth(p, m, &moved));
    }

    #[test]
    fn anchoring_and_negation_preserve_girth((p, m, s) in code()) {
        let mother = build_mother(p).unwrap();
        let seq = SlopeSequence::new(m, s.iter().copied()).unwrap();
        let top = girth_bfs(lift(&mother, &seq).unwrap().matrix()).unwrap().girth;
        let bottom = lift_with(&mother, &seq, Anchoring::Bottom).unwrap();
        let neg = lift(&mother, &seq.negated()).unwrap();
        prop_assert_eq!(top, girth_bfs(bottom.matrix()).unwrap().girth);
        prop_assert_eq!(top, girth_bfs(neg.matrix()).unwrap().girth);
    }

    #[test]
    fn descriptor_round_trips((p, m, s) in code()) {
        let seq = SlopeSequence::new(m, s.iter().copied()).unwrap();
        let d = CodeDescriptor::new(p, &seq);
        let back = CodeDescriptor::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(&back, &d);
        let restored = back.to_code().unwrap();
        let direct = lift(&build_mother(p).unwrap(), &seq).unwrap();
        prop_assert_eq!(restored.matrix(), direct.matrix());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn alist_round_trips((p, m, s) in code()) {
        let seq = SlopeSequence::new(m, s.iter().copied()).unwrap();
        let code = lift(&build_mother(p).unwrap(), &seq).unwrap();
        let mut text = Vec::new();
        write_alist(code.matrix(), &mut text).unwrap();
        let back = read_alist(Cursor::new(&text)).unwrap();
        prop_assert_eq!(&back, code.matrix());
        let mut again = Vec::new();
        write_alist(&back, &mut again).unwrap();
        prop_assert_eq!(again, text);
    }
}
