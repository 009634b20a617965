//! Closed forms for good involutions of GAlex quandles.

use super::{good_involution_violation, GoodInvolution, Hypothesis, SymqError};
use crate::group::{fixed_two_torsion, FiniteGroup, GroupAutomorphism, GroupError};
use crate::quandle::{galex, FiniteQuandle};

/// Whether `GAlex(group, phi)` has a good involution, decided by the kei test.
pub fn exists_good_involution_galex(
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
) -> Result<bool, SymqError> {
    Ok(galex(group, phi)?.is_kei())
}

/// Left multiplication `x ↦ r·x` by a fixed point `r` of `phi` with `r² = e`.
pub fn rho_r(
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
    r: usize,
) -> Result<Vec<usize>, SymqError> {
    if r >= group.order() {
        return Err(GroupError::BadElement(r, group.order()).into());
    }
    if phi.apply(r) != r || group.mul(r, r) != group.identity() {
        return Err(SymqError::NotFixedTwoTorsion(r));
    }
    Ok(group.elements().map(|x| group.mul(r, x)).collect())
}

pub(crate) fn require_connected_kei(q: &FiniteQuandle) -> Result<(), SymqError> {
    if !q.is_kei() {
        return Err(SymqError::HypothesisNotMet(Hypothesis::Kei));
    }
    if !q.is_connected() {
        return Err(SymqError::HypothesisNotMet(Hypothesis::Connected));
    }
    Ok(())
}

/// `{ ρ_r : r ∈ fixed two-torsion }` for a connected kei `GAlex(group, phi)`,
/// in increasing order of `r`. Each map is checked to be a good involution.
pub fn good_involutions_closed_form(
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
) -> Result<Vec<GoodInvolution>, SymqError> {
    let q = galex(group, phi)?;
    require_connected_kei(&q)?;
    fixed_two_torsion(group, phi)
        .members()
        .iter()
        .map(|&r| {
            let rho = rho_r(group, phi, r)?;
            if let Some(v) = good_involution_violation(&q, &rho)? {
                return Err(SymqError::Inconsistent(format!(
                    "rho_{r} is not a good involution: {v}"
                )));
            }
            Ok(GoodInvolution { rho })
        })
        .collect()
}
