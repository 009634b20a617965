//! Helpers shared by the integration tests: the table corpus, a memoized
//! catalog run and direct-from-definition oracles.

#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use symq::catalog::{run_catalog, CatalogOptions, CatalogRun};
use symq::group::{validate_automorphism, FiniteGroup, GroupAutomorphism};
use symq::io::parse_table;
use symq::quandle::{galex, validate_quandle, FiniteQuandle};
use symq::report::Report;
use symq::spec::build_group;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn read_table(name: &str) -> Vec<Vec<usize>> {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    parse_table(&text).unwrap()
}

/// Every valid quandle table in `tests/data`, by file name.
pub fn corpus_quandles() -> Vec<(String, FiniteQuandle)> {
    let mut names: Vec<String> = std::fs::read_dir(data_path(""))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".txt") && !n.starts_with("bad_") && !n.starts_with("group_"))
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|n| {
            let q = validate_quandle(&read_table(&n)).unwrap_or_else(|e| panic!("{n}: {e}"));
            (n, q)
        })
        .collect()
}

static CATALOG_12: OnceLock<CatalogRun> = OnceLock::new();

/// The default sweep up to order 12, computed once per test binary.
pub fn catalog_12() -> &'static CatalogRun {
    CATALOG_12.get_or_init(|| run_catalog(&CatalogOptions::new(12)))
}

pub struct Entry {
    pub spec: String,
    pub group: FiniteGroup,
    pub phi: GroupAutomorphism,
    pub quandle: FiniteQuandle,
}

/// Rebuilds the group, automorphism and quandle behind a catalog report.
pub fn rebuild(r: &Report) -> Entry {
    let spec = r.group_spec.clone().unwrap();
    let group = build_group(&spec).unwrap();
    let phi = validate_automorphism(&group, r.automorphism.clone().unwrap()).unwrap();
    let quandle = galex(&group, &phi).unwrap();
    Entry {
        spec,
        group,
        phi,
        quandle,
    }
}

/// The galex quandle of every automorphism of one group spec.
pub fn galex_entries_of(spec: &str) -> Vec<Entry> {
    let group = build_group(spec).unwrap();
    symq::group::automorphisms_by_scan(&group, symq::Budget::unlimited())
        .unwrap()
        .into_iter()
        .map(|phi| Entry {
            spec: spec.to_string(),
            quandle: galex(&group, &phi).unwrap(),
            group: group.clone(),
            phi,
        })
        .collect()
}

/// Every galex quandle from every (group, automorphism) in the sweep up to
/// `max_order`, rebuilt without running the classification.
pub fn galex_entries(max_order: usize) -> Vec<Entry> {
    symq::catalog::catalog_specs(max_order, false)
        .iter()
        .flat_map(|spec| galex_entries_of(spec))
        .collect()
}

/// All involutive permutations of `0..n`, generated by pairing off the
/// smallest unused point.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(p: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = p.iter().position(Option::is_none) else {
            out.push(p.iter().map(|x| x.unwrap()).collect());
            return;
        };
        p[i] = Some(i);
        go(p, out);
        for j in i + 1..p.len() {
            if p[j].is_none() {
                p[i] = Some(j);
                p[j] = Some(i);
                go(p, out);
                p[j] = None;
            }
        }
        p[i] = None;
    }
    let mut out = Vec::new();
    go(&mut vec![None; n], &mut out);
    out.sort();
    out
}

/// `x ^ (y^-1)`, found by searching the column.
pub fn inv_op(q: &FiniteQuandle, x: usize, y: usize) -> usize {
    (0..q.order()).find(|&z| q.op(z, y) == x).unwrap()
}

/// The two good involution conditions, checked for all `x, y`.
pub fn is_good_involution(q: &FiniteQuandle, rho: &[usize]) -> bool {
    let n = q.order();
    (0..n).all(|x| rho[rho[x]] == x)
        && (0..n).all(|x| {
            (0..n).all(|y| rho[q.op(x, y)] == q.op(rho[x], y) && q.op(x, rho[y]) == inv_op(q, x, y))
        })
}

pub fn good_involutions_direct(q: &FiniteQuandle) -> Vec<Vec<usize>> {
    involutions(q.order())
        .into_iter()
        .filter(|rho| is_good_involution(q, rho))
        .collect()
}

pub fn is_kei_direct(q: &FiniteQuandle) -> bool {
    let n = q.order();
    (0..n).all(|x| (0..n).all(|y| q.op(q.op(x, y), y) == x))
}

/// `{ r : phi(r) = r, r * r = e }` by scanning the group.
pub fn fixed_two_torsion_direct(g: &FiniteGroup, phi: &GroupAutomorphism) -> Vec<usize> {
    g.elements()
        .filter(|&r| phi.apply(r) == r && g.mul(r, r) == g.identity())
        .collect()
}

/// `x -> r * x`.
pub fn left_translation(g: &FiniteGroup, r: usize) -> Vec<usize> {
    g.elements().map(|x| g.mul(r, x)).collect()
}

pub fn is_multiplicative(g: &FiniteGroup, f: &[usize]) -> bool {
    g.elements()
        .all(|a| g.elements().all(|b| f[g.mul(a, b)] == g.mul(f[a], f[b])))
}

/// Orbits of `maps` on `points`, each as a sorted list, ordered by least
/// member. Plain breadth-first closure.
pub fn orbits_direct(points: &[usize], maps: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: Vec<usize> = Vec::new();
    let mut orbits = Vec::new();
    for &p in points {
        if seen.contains(&p) {
            continue;
        }
        let mut orbit = vec![p];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            i += 1;
            for m in maps {
                if !orbit.contains(&m[x]) {
                    orbit.push(m[x]);
                }
            }
        }
        orbit.sort_unstable();
        seen.extend(&orbit);
        orbits.push(orbit);
    }
    orbits
}
