//! Sweep over a family of small groups and all of their automorphisms,
//! cross-checking the good-involution results on every GAlex quandle.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::group::{enumerate_automorphisms, FiniteGroup, GroupAutomorphism};
use crate::quandle::galex;
use crate::report::{Report, TOOL_VERSION};
use crate::spec::build_group;
use crate::symq::{cross_check_sq, Limits};

type BuiltGroup = Result<(FiniteGroup, Vec<GroupAutomorphism>), String>;

#[derive(Clone, Debug)]
pub struct CatalogOptions {
    pub max_order: usize,
    /// Adds alternating:4 and symmetric:4 when the order bound allows them.
    pub include_large: bool,
    pub limits: Limits,
    /// Fill `elapsed_ms`. Off by default so repeated runs are byte-identical.
    pub timing: bool,
}

impl CatalogOptions {
    pub fn new(max_order: usize) -> Self {
        CatalogOptions {
            max_order,
            include_large: false,
            limits: Limits::default(),
            timing: false,
        }
    }
}

/// Invariant factor lists `d1 | d2 | ... | dk` with `d1 > 1` and product `m`,
/// sorted lexicographically. One list per abelian group of order `m`.
pub fn invariant_factor_lists(m: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, prev: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 1 {
            out.push(prefix.clone());
            return;
        }
        for d in 2..=remaining {
            if !d.is_multiple_of(prev) || !remaining.is_multiple_of(d) {
                continue;
            }
            let rest = remaining / d;
            // Later factors are multiples of d, so d must divide what is left.
            if rest != 1 && !rest.is_multiple_of(d) {
                continue;
            }
            prefix.push(d);
            go(rest, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m >= 2 {
        go(m, 1, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

fn abelian_spec(factors: &[usize]) -> String {
    match factors {
        [n] => format!("cyclic:{n}"),
        _ => {
            let parts: Vec<String> = factors.iter().map(|d| format!("cyclic:{d}")).collect();
            format!("product:{}", parts.join(","))
        }
    }
}

/// Group specs in the sweep, ordered by group order and then family.
pub fn catalog_specs(max_order: usize, include_large: bool) -> Vec<String> {
    let mut specs = Vec::new();
    for m in 2..=max_order {
        specs.extend(invariant_factor_lists(m).iter().map(|f| abelian_spec(f)));
        if m % 2 == 0 && m >= 6 {
            specs.push(format!("dihedral:{}", m / 2));
        }
        if m == 8 {
            specs.push("quaternion".into());
        }
        if m == 6 {
            specs.push("symmetric:3".into());
        }
        if include_large && m == 12 {
            specs.push("alternating:4".into());
        }
        if include_large && m == 24 {
            specs.push("symmetric:4".into());
        }
    }
    specs
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSummary {
    /// Connected kei entries whose two classifications disagree.
    pub agreement_failures: usize,
    pub entries: usize,
    pub groups: usize,
    /// Entries whose brute-force search was cut short by a limit.
    pub incomplete: usize,
    pub kei_entries: usize,
    /// Entries that are connected keis, where the orbit path applies.
    pub hypothesis_met: usize,
    /// Entries where "has a good involution" and "is a kei" differ.
    pub existence_mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRun {
    pub entries: Vec<Report>,
    pub include_large: bool,
    pub max_order: usize,
    pub summary: CatalogSummary,
    pub tool_version: String,
}

impl CatalogRun {
    /// True when no entry contradicts the classification results.
    pub fn is_consistent(&self) -> bool {
        self.summary.agreement_failures == 0 && self.summary.existence_mismatches == 0
    }
}

fn error_report(spec: &str, order: usize, phi: Option<&GroupAutomorphism>, err: String) -> Report {
    let mut r = Report::for_quandle(&crate::quandle::trivial_quandle(1));
    r.order = order;
    r.group_spec = Some(spec.to_string());
    r.automorphism = phi.map(|p| p.perm().to_vec());
    r.notes.push(format!("error: {err}"));
    r
}

fn entry_report(
    spec: &str,
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
    opts: &CatalogOptions,
) -> Report {
    let start = Instant::now();
    let q = match galex(group, phi) {
        Ok(q) => q,
        Err(e) => return error_report(spec, group.order(), Some(phi), e.to_string()),
    };
    let mut report = Report::for_galex(&q, spec, group, phi);
    match cross_check_sq(group, phi, &opts.limits) {
        Ok(c) => report.absorb(c),
        Err(e) => report.notes.push(format!("error: {e}")),
    }
    if opts.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

fn summarize(entries: &[Report], groups: usize) -> CatalogSummary {
    let mut s = CatalogSummary {
        entries: entries.len(),
        groups,
        ..Default::default()
    };
    for r in entries {
        if r.is_kei {
            s.kei_entries += 1;
        }
        if r.is_kei && r.is_connected {
            s.hypothesis_met += 1;
            if r.agreement != Some(true) {
                s.agreement_failures += 1;
            }
        }
        match &r.good_involutions {
            Some(list) => {
                if list.is_empty() == r.is_kei {
                    s.existence_mismatches += 1;
                }
            }
            None => s.incomplete += 1,
        }
    }
    s
}

/// Runs the cross-check on every (group, automorphism) pair of the sweep.
/// Per-entry failures are recorded in that entry's notes.
pub fn run_catalog(opts: &CatalogOptions) -> CatalogRun {
    let specs = catalog_specs(opts.max_order, opts.include_large);
    let groups: Vec<(String, BuiltGroup)> = specs
        .into_par_iter()
        .map(|spec| {
            let built = build_group(&spec).map_err(|e| e.to_string()).and_then(|g| {
                enumerate_automorphisms(&g, opts.limits.budget)
                    .map(|auts| (g, auts))
                    .map_err(|e| e.to_string())
            });
            (spec, built)
        })
        .collect();

    let jobs: Vec<(usize, Option<usize>)> = groups
        .iter()
        .enumerate()
        .flat_map(|(gi, (_, built))| match built {
            Ok((_, auts)) => (0..auts.len()).map(|ai| (gi, Some(ai))).collect::<Vec<_>>(),
            Err(_) => vec![(gi, None)],
        })
        .collect();

    let entries: Vec<Report> = jobs
        .into_par_iter()
        .map(|(gi, ai)| {
            let (spec, built) = &groups[gi];
            match (built, ai) {
                (Ok((g, auts)), Some(ai)) => entry_report(spec, g, &auts[ai], opts),
                (Err(e), _) => error_report(spec, 0, None, e.clone()),
                (Ok(_), None) => {
                    unreachable!("jobs without an automorphism come from failed groups")
                }
            }
        })
        .collect();

    CatalogRun {
        summary: summarize(&entries, groups.len()),
        entries,
        include_large: opts.include_large,
        max_order: opts.max_order,
        tool_version: TOOL_VERSION.to_string(),
    }
}
