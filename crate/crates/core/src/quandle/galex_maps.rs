//! Passing between quandle automorphisms of a GAlex quandle and pairs
//! `(ψ, c)` with `ψ` an automorphism of the group commuting with `φ`.

use super::{FiniteQuandle, GalexOrigin, QuandleError, QuandleMap};
use crate::group::{validate_automorphism, GroupAutomorphism, GroupError};

fn origin_of(q: &FiniteQuandle) -> Result<&GalexOrigin, QuandleError> {
    q.origin().ok_or(QuandleError::NotGalexOrigin)
}

/// `f#(x) = f(x)·f(e)⁻¹` for a quandle automorphism `f` of a connected GAlex
/// quandle. The result is validated as a group automorphism commuting with
/// `φ`; a failure of either check is reported as an internal inconsistency.
pub fn f_sharp(q: &FiniteQuandle, f: &QuandleMap) -> Result<GroupAutomorphism, QuandleError> {
    let GalexOrigin { group, phi } = origin_of(q)?;
    let orbits = q.inner_orbits().count();
    if orbits != 1 {
        return Err(QuandleError::NotConnected(orbits));
    }
    // Re-check f against q: the map may have been validated for another quandle.
    let f = QuandleMap::new(q, q, f.perm().to_vec())?;
    let shift = group.inv(f.apply(group.identity()));
    let perm: Vec<usize> = group
        .elements()
        .map(|x| group.mul(f.apply(x), shift))
        .collect();
    let sharp = validate_automorphism(group, perm).map_err(|e| match e {
        GroupError::NotMultiplicative(i, j) => {
            QuandleError::Inconsistent(format!("f# is not multiplicative at ({i}, {j})"))
        }
        other => QuandleError::Inconsistent(format!("f# is not an automorphism: {other}")),
    })?;
    if !sharp.commutes_with(phi) {
        return Err(QuandleError::Inconsistent(
            "f# does not commute with phi".into(),
        ));
    }
    Ok(sharp)
}

/// The quandle automorphism `x ↦ ψ(x)·c`, for `ψ` commuting with `φ`.
pub fn affine_automorphism(
    q: &FiniteQuandle,
    psi: &GroupAutomorphism,
    c: usize,
) -> Result<QuandleMap, QuandleError> {
    let GalexOrigin { group, phi } = origin_of(q)?;
    if c >= group.order() {
        return Err(GroupError::BadElement(c, group.order()).into());
    }
    if psi.perm().len() != group.order() {
        return Err(QuandleError::MalformedMap(
            "automorphism length mismatch".into(),
        ));
    }
    if !psi.commutes_with(phi) {
        return Err(QuandleError::NotCentralizing);
    }
    let perm: Vec<usize> = group
        .elements()
        .map(|x| group.mul(psi.apply(x), c))
        .collect();
    QuandleMap::new(q, q, perm).map_err(|e| {
        QuandleError::Inconsistent(format!("affine map is not a quandle automorphism: {e}"))
    })
}
