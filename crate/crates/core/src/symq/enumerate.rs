use std::collections::HashMap;

use super::{good_involution_violation, Limits, SymqError};
use crate::quandle::FiniteQuandle;
use crate::search::NodeCounter;

struct Enumerator<'a> {
    q: &'a FiniteQuandle,
    /// `allowed[y * n + z]`: column `S_z` equals `S_y⁻¹`, so `ρ(y) = z` is
    /// compatible with the column condition.
    allowed: Vec<bool>,
}

#[derive(Clone)]
struct Partial {
    rho: Vec<usize>,
    used: Vec<bool>,
    queue: Vec<usize>,
}

impl Enumerator<'_> {
    fn assign(&self, p: &mut Partial, x: usize, t: usize) -> bool {
        let n = self.q.order();
        if p.rho[x] != usize::MAX {
            return p.rho[x] == t;
        }
        if p.used[t] || !self.allowed[x * n + t] {
            return false;
        }
        p.rho[x] = t;
        p.used[t] = true;
        p.queue.push(x);
        true
    }

    /// Closes a partial assignment under `ρ∘ρ = id` and under commuting with
    /// every inner map and its inverse.
    fn propagate(&self, p: &mut Partial) -> bool {
        let q = self.q;
        while let Some(a) = p.queue.pop() {
            let t = p.rho[a];
            if !self.assign(p, t, a) {
                return false;
            }
            for y in 0..q.order() {
                if !self.assign(p, q.op(a, y), q.op(t, y))
                    || !self.assign(p, q.inv_op(a, y), q.inv_op(t, y))
                {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        &self,
        p: Partial,
        counter: &mut NodeCounter,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), SymqError> {
        let n = self.q.order();
        // The smallest unassigned point heads an inner orbit untouched so far.
        let Some(x) = p.rho.iter().position(|&t| t == usize::MAX) else {
            if let Some(v) = good_involution_violation(self.q, &p.rho)? {
                return Err(SymqError::Inconsistent(format!(
                    "enumerator produced a map failing {v}"
                )));
            }
            out.push(p.rho);
            return Ok(());
        };
        for t in 0..n {
            if p.used[t] || !self.allowed[x * n + t] {
                continue;
            }
            counter.tick()?;
            let mut next = p.clone();
            if self.assign(&mut next, x, t) && self.propagate(&mut next) {
                self.search(next, counter, out)?;
            }
        }
        Ok(())
    }
}

/// Every good involution of `q`, in lexicographic order.
///
/// Candidate images come from matching columns against inverse columns; a
/// choice at one point is pushed across its inner orbit by equivariance and
/// mirrored by the involution condition, and only the first point of each
/// untouched orbit is branched on.
pub fn enumerate_good_involutions(
    q: &FiniteQuandle,
    limits: &Limits,
) -> Result<Vec<Vec<usize>>, SymqError> {
    let n = q.order();
    if n > limits.oracle_max_order {
        return Err(SymqError::OrderLimit {
            what: "good-involution enumeration",
            order: n,
            limit: limits.oracle_max_order,
        });
    }
    let mut by_column: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for z in 0..n {
        by_column.entry(q.column(z)).or_default().push(z);
    }
    let mut allowed = vec![false; n * n];
    for y in 0..n {
        if let Some(zs) = by_column.get(&q.inv_column(y)) {
            for &z in zs {
                allowed[y * n + z] = true;
            }
        }
    }
    let e = Enumerator { q, allowed };
    let start = Partial {
        rho: vec![usize::MAX; n],
        used: vec![false; n],
        queue: Vec::new(),
    };
    let mut out = Vec::new();
    let mut counter = limits.budget.counter();
    e.search(start, &mut counter, &mut out)?;
    out.sort();
    Ok(out)
}

/// Largest order accepted by [`good_involutions_by_filter`].
pub const FILTER_MAX_ORDER: usize = 10;

/// Plain filter over all involutive permutations of `0..n`. Used as an
/// independent check on [`enumerate_good_involutions`] for small quandles.
pub fn good_involutions_by_filter(q: &FiniteQuandle) -> Result<Vec<Vec<usize>>, SymqError> {
    let n = q.order();
    if n > FILTER_MAX_ORDER {
        return Err(SymqError::OrderLimit {
            what: "involution filter",
            order: n,
            limit: FILTER_MAX_ORDER,
        });
    }
    let mut out = Vec::new();
    for rho in crate::perm::involutions(n) {
        if good_involution_violation(q, &rho)?.is_none() {
            out.push(rho);
        }
    }
    Ok(out)
}
