//! Good involutions and symmetric quandles.
//!
//! A good involution of a quandle `X` is an involution `ρ` with
//! `ρ(x^y) = ρ(x)^y` and `x^{ρ(y)} = x^{y⁻¹}` for all `x, y`. The exhaustive
//! enumerator in [`enumerate`] is the source of truth; the closed forms for
//! GAlex quandles in [`closed_form`] and the orbit classification in
//! [`classify`] are always checked against it.

pub mod classify;
pub mod closed_form;
pub mod enumerate;

pub use classify::{
    classify_sq_bruteforce, classify_sq_theorem, cross_check_sq, SqClassification, TheoremClass,
};
pub use closed_form::{exists_good_involution_galex, good_involutions_closed_form, rho_r};
pub use enumerate::{enumerate_good_involutions, good_involutions_by_filter};

use std::fmt;

use thiserror::Error;

use crate::group::GroupError;
use crate::quandle::{FiniteQuandle, MapSearch, QuandleError, QuandleMap};
use crate::search::{Budget, BudgetExceeded, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Kei,
    Connected,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Kei => "kei",
            Hypothesis::Connected => "connected",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymqError {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("element {0} is not a fixed point of phi of order at most 2")]
    NotFixedTwoTorsion(usize),
    #[error("hypothesis not met: quandle is not {0}")]
    HypothesisNotMet(Hypothesis),
    #[error("{what} limited to order {limit}, got {order}")]
    OrderLimit {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

impl SymqError {
    /// True for errors that signal a search was cut short rather than a
    /// property of the input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            SymqError::Budget(_)
                | SymqError::OrderLimit { .. }
                | SymqError::Quandle(QuandleError::Budget(_))
                | SymqError::Group(GroupError::Budget(_))
                | SymqError::Quandle(QuandleError::Group(GroupError::Budget(_)))
        )
    }
}

/// Search limits for the exhaustive paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub budget: Budget,
    /// Largest quandle the good-involution enumerator accepts.
    pub oracle_max_order: usize,
    /// Largest quandle for which pairwise isomorphism classes are computed.
    pub pairwise_max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            budget: Budget::new(DEFAULT_BUDGET),
            oracle_max_order: 64,
            pairwise_max_order: 16,
        }
    }
}

/// The first condition a candidate map fails, with its smallest witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `ρ(ρ(x)) != x`
    NotInvolution(usize),
    /// `ρ(x^y) != ρ(x)^y`
    Equivariance(usize, usize),
    /// `x^{ρ(y)} != x^{y⁻¹}`
    Column(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotInvolution(x) => write!(f, "rho(rho({x})) != {x}"),
            Violation::Equivariance(x, y) => write!(f, "rho({x}^{y}) != rho({x})^{y}"),
            Violation::Column(x, y) => write!(f, "{x}^rho({y}) != {x}^({y}^-1)"),
        }
    }
}

fn check_permutation(q: &FiniteQuandle, rho: &[usize]) -> Result<(), SymqError> {
    if rho.len() != q.order() || !crate::perm::is_permutation(rho) {
        return Err(SymqError::MalformedPermutation(format!(
            "expected a permutation of 0..{}",
            q.order()
        )));
    }
    Ok(())
}

/// `None` when `rho` is a good involution of `q`, otherwise the first failed
/// condition (involution, then equivariance, then column condition).
pub fn good_involution_violation(
    q: &FiniteQuandle,
    rho: &[usize],
) -> Result<Option<Violation>, SymqError> {
    check_permutation(q, rho)?;
    let n = q.order();
    if let Some(x) = (0..n).find(|&x| rho[rho[x]] != x) {
        return Ok(Some(Violation::NotInvolution(x)));
    }
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    if let Some((x, y)) = pairs().find(|&(x, y)| rho[q.op(x, y)] != q.op(rho[x], y)) {
        return Ok(Some(Violation::Equivariance(x, y)));
    }
    if let Some((x, y)) = pairs().find(|&(x, y)| q.op(x, rho[y]) != q.inv_op(x, y)) {
        return Ok(Some(Violation::Column(x, y)));
    }
    Ok(None)
}

pub fn is_good_involution(q: &FiniteQuandle, rho: &[usize]) -> Result<bool, SymqError> {
    Ok(good_involution_violation(q, rho)?.is_none())
}

/// A permutation verified to be a good involution of a particular quandle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoodInvolution {
    rho: Vec<usize>,
}

impl GoodInvolution {
    pub fn new(q: &FiniteQuandle, rho: Vec<usize>) -> Result<Self, SymqError> {
        match good_involution_violation(q, &rho)? {
            None => Ok(GoodInvolution { rho }),
            Some(v) => Err(SymqError::MalformedPermutation(format!(
                "not a good involution: {v}"
            ))),
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.rho
    }

    pub fn into_perm(self) -> Vec<usize> {
        self.rho
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.rho[x]
    }
}

/// A quandle paired with one of its good involutions.
#[derive(Clone, Debug)]
pub struct SymmetricQuandle<'q> {
    quandle: &'q FiniteQuandle,
    rho: GoodInvolution,
}

impl<'q> SymmetricQuandle<'q> {
    pub fn new(quandle: &'q FiniteQuandle, rho: Vec<usize>) -> Result<Self, SymqError> {
        let rho = GoodInvolution::new(quandle, rho)?;
        Ok(SymmetricQuandle { quandle, rho })
    }

    pub fn quandle(&self) -> &'q FiniteQuandle {
        self.quandle
    }

    pub fn rho(&self) -> &GoodInvolution {
        &self.rho
    }
}

/// A symmetric quandle isomorphism `A → B` (an operation-preserving bijection
/// `f` with `f∘ρ_A = ρ_B∘f`), or `None` when the exhaustive search finds none.
pub fn symmetric_quandle_isomorphic(
    a: &SymmetricQuandle<'_>,
    b: &SymmetricQuandle<'_>,
    budget: Budget,
) -> Result<Option<QuandleMap>, SymqError> {
    if a.quandle.order() != b.quandle.order() {
        return Ok(None);
    }
    let found = MapSearch::new(a.quandle, b.quandle, Some((a.rho.perm(), b.rho.perm())))
        .run(false, budget)?;
    Ok(found.into_iter().next().map(|perm| {
        QuandleMap::new(a.quandle, b.quandle, perm)
            .expect("search returns operation-preserving maps")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::constructors::cyclic;
    use crate::group::{inversion_automorphism, validate_automorphism};
    use crate::quandle::{dihedral_quandle, galex};

    fn z5_times_two() -> FiniteQuandle {
        let g = cyclic(5).unwrap();
        galex(&g, &validate_automorphism(&g, vec![0, 2, 4, 1, 3]).unwrap()).unwrap()
    }

    #[test]
    fn identity_on_a_kei_is_good() {
        for m in 1..8 {
            let q = dihedral_quandle(m);
            assert!(is_good_involution(&q, &crate::perm::identity(m)).unwrap());
        }
    }

    #[test]
    fn identity_on_non_kei_fails_column_condition() {
        let q = z5_times_two();
        assert_eq!(
            good_involution_violation(&q, &[0, 1, 2, 3, 4]).unwrap(),
            Some(Violation::Column(0, 1))
        );
    }

    #[test]
    fn r4_shift_by_two_is_good() {
        let g = cyclic(4).unwrap();
        let r4 = galex(&g, &inversion_automorphism(&g).unwrap()).unwrap();
        assert!(is_good_involution(&r4, &[2, 3, 0, 1]).unwrap());
        // A 4-cycle is not an involution.
        assert_eq!(
            good_involution_violation(&r4, &[1, 2, 3, 0]).unwrap(),
            Some(Violation::NotInvolution(0))
        );
    }

    #[test]
    fn malformed_permutations_are_errors() {
        let q = dihedral_quandle(3);
        assert!(matches!(
            is_good_involution(&q, &[0, 1]),
            Err(SymqError::MalformedPermutation(_))
        ));
        assert!(matches!(
            is_good_involution(&q, &[0, 0, 1]),
            Err(SymqError::MalformedPermutation(_))
        ));
    }

    #[test]
    fn symmetric_isomorphism_basics() {
        let q = dihedral_quandle(3);
        let a = SymmetricQuandle::new(&q, vec![0, 1, 2]).unwrap();
        let w = symmetric_quandle_isomorphic(&a, &a, Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(w.perm(), &[0, 1, 2]);

        let other = dihedral_quandle(4);
        let b = SymmetricQuandle::new(&other, vec![0, 1, 2, 3]).unwrap();
        assert!(symmetric_quandle_isomorphic(&a, &b, Budget::default())
            .unwrap()
            .is_none());
    }
}
