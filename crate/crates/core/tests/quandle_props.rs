mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::*;
use symq::group::constructors::cyclic;
use symq::group::{inversion_automorphism, validate_automorphism};
use symq::quandle::{
    affine_automorphism, automorphisms, galex, quandle_isomorphisms, validate_quandle,
    FiniteQuandle, QuandleError, QuandleMap,
};
use symq::Budget;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn preserves_op(q: &FiniteQuandle, f: &[usize]) -> bool {
    let n = q.order();
    (0..n).all(|x| (0..n).all(|y| f[q.op(x, y)] == q.op(f[x], f[y])))
}

#[test]
fn every_small_galex_is_a_quandle() {
    for e in galex_entries(8) {
        let q = &e.quandle;
        let n = q.order();
        for x in 0..n {
            assert_eq!(q.op(x, x), x, "{}", e.spec);
            for y in 0..n {
                assert_eq!(q.op(q.inv_op(x, y), y), x);
                assert_eq!(q.inv_op(x, y), inv_op(q, x, y));
                for z in 0..n {
                    assert_eq!(
                        q.op(q.op(x, y), z),
                        q.op(q.op(x, z), q.op(y, z)),
                        "{}",
                        e.spec
                    );
                }
            }
        }
        assert!(validate_quandle(&q.table()).is_ok());
    }
}

#[test]
fn alexander_tables_match_corpus() {
    let times = |n: usize, t: usize| {
        let g = cyclic(n).unwrap();
        galex(
            &g,
            &validate_automorphism(&g, (0..n).map(|x| x * t % n).collect()).unwrap(),
        )
        .unwrap()
    };
    assert_eq!(times(5, 2).table(), read_table("alexander_z5_t2.txt"));
    assert_eq!(times(7, 3).table(), read_table("alexander_z7_t3.txt"));
    assert_eq!(times(8, 3).table(), read_table("alexander_z8_t3.txt"));
    assert_eq!(times(8, 5).table(), read_table("alexander_z8_t5.txt"));
    for m in 3..=8 {
        let g = cyclic(m).unwrap();
        let q = galex(&g, &inversion_automorphism(&g).unwrap()).unwrap();
        assert_eq!(q.table(), read_table(&format!("dihedral_r{m}.txt")));
        assert_eq!(q.is_connected(), m % 2 == 1);
    }
}

#[test]
fn non_quandle_reports_first_distributivity_failure() {
    let t = read_table("bad_not_quandle.txt");
    let n = t.len();
    let first = (0..n)
        .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
        .find(|&(x, y, z)| t[t[x][y]][z] != t[t[x][z]][t[y][z]])
        .unwrap();
    assert_eq!(
        validate_quandle(&t).unwrap_err(),
        QuandleError::Q3Violation(first.0, first.1, first.2)
    );
    assert_eq!(
        validate_quandle(&read_table("group_z4.txt")).unwrap_err(),
        QuandleError::Q1Violation(1)
    );
}

#[test]
fn abelian_galex_is_kei_exactly_when_phi_squares_to_identity() {
    for e in galex_entries(12)
        .into_iter()
        .filter(|e| e.group.is_abelian())
    {
        let involutive = e.group.elements().all(|x| e.phi.apply(e.phi.apply(x)) == x);
        assert_eq!(
            e.quandle.is_kei(),
            involutive,
            "{} {:?}",
            e.spec,
            e.phi.perm()
        );
        assert_eq!(is_kei_direct(&e.quandle), involutive);
    }
}

#[test]
fn automorphism_search_matches_permutation_scan() {
    for (name, q) in corpus_quandles()
        .into_iter()
        .filter(|(_, q)| q.order() <= 7)
    {
        let found: Vec<Vec<usize>> = automorphisms(&q, Budget::default())
            .unwrap()
            .iter()
            .map(|f| f.perm().to_vec())
            .collect();
        let mut scanned: Vec<Vec<usize>> = permutations(q.order())
            .into_iter()
            .filter(|p| preserves_op(&q, p))
            .collect();
        scanned.sort();
        assert_eq!(found, scanned, "{name}");
    }
}

#[test]
fn isomorphism_search_separates_corpus() {
    let r3 = validate_quandle(&read_table("dihedral_r3.txt")).unwrap();
    let transpositions = validate_quandle(&read_table("transpositions_s4.txt")).unwrap();
    let r6 = validate_quandle(&read_table("dihedral_r6.txt")).unwrap();
    let tetra = validate_quandle(&read_table("tetrahedral.txt")).unwrap();
    let r4 = validate_quandle(&read_table("dihedral_r4.txt")).unwrap();
    let b = Budget::default();
    assert!(quandle_isomorphisms(&transpositions, &r6, false, b)
        .unwrap()
        .is_empty());
    assert!(quandle_isomorphisms(&tetra, &r4, false, b)
        .unwrap()
        .is_empty());
    assert_eq!(quandle_isomorphisms(&r3, &r3, true, b).unwrap().len(), 6);
    let all = quandle_isomorphisms(&transpositions, &transpositions, true, b).unwrap();
    assert_eq!(all.len(), automorphisms(&transpositions, b).unwrap().len());
}

#[test]
fn affine_maps_are_injective_in_psi_and_c() {
    for e in galex_entries(8)
        .into_iter()
        .filter(|e| e.quandle.is_connected())
    {
        let centralizer: Vec<_> =
            symq::group::centralizer_in_aut(&e.group, &e.phi, Budget::default()).unwrap();
        let mut seen = BTreeSet::new();
        for psi in &centralizer {
            for c in e.group.elements() {
                let f = affine_automorphism(&e.quandle, psi, c).unwrap();
                assert!(
                    seen.insert(f.perm().to_vec()),
                    "{} {:?}",
                    e.spec,
                    e.phi.perm()
                );
            }
        }
        let total = automorphisms(&e.quandle, Budget::default()).unwrap().len();
        assert_eq!(seen.len(), total, "{} {:?}", e.spec, e.phi.perm());
    }
}

#[test]
fn affine_map_rejects_non_centralizing_psi() {
    let g = symq::group::constructors::symmetric(3).unwrap();
    let phi = symq::spec::parse_aut_spec("conj:1", &g).unwrap();
    let q = galex(&g, &phi).unwrap();
    let auts = symq::group::enumerate_automorphisms(&g, Budget::default()).unwrap();
    let outside = auts.iter().find(|a| !a.commutes_with(&phi)).unwrap();
    assert_eq!(
        affine_automorphism(&q, outside, 0).unwrap_err(),
        QuandleError::NotCentralizing
    );
}

fn corpus_keis() -> Vec<FiniteQuandle> {
    corpus_quandles()
        .into_iter()
        .map(|(_, q)| q)
        .filter(|q| q.order() <= 8)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn automorphisms_closed_under_composition(i in any::<prop::sample::Index>(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let quandles = corpus_keis();
        let q = i.get(&quandles);
        let auts = automorphisms(q, Budget::default()).unwrap();
        let f = a.get(&auts);
        let g = b.get(&auts);
        let composed: Vec<usize> = (0..q.order()).map(|x| f.apply(g.apply(x))).collect();
        prop_assert!(auts.iter().any(|h| h.perm() == composed));
        prop_assert!(auts.contains(&f.inverse()));
    }

    #[test]
    fn inner_maps_are_automorphisms(i in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let quandles = corpus_keis();
        let q = i.get(&quandles);
        let y = y.index(q.order());
        prop_assert!(QuandleMap::new(q, q, q.column(y)).is_ok());
        prop_assert!(QuandleMap::new(q, q, q.inv_column(y)).is_ok());
    }

    #[test]
    fn table_validation_is_total(rows in proptest::collection::vec(proptest::collection::vec(0usize..5, 0..5), 0..5)) {
        let _ = validate_quandle(&rows);
        let _ = symq::group::validate_group(&rows);
    }
}
