//! Symmetric quandle isomorphism classes, computed two ways.
//!
//! The brute-force path enumerates good involutions and groups them by
//! exhaustive isomorphism search. The orbit path applies to connected kei
//! GAlex quandles and counts orbits of the automorphisms commuting with `φ`
//! on the fixed two-torsion set. [`cross_check_sq`] runs both and compares.

use super::closed_form::{require_connected_kei, rho_r};
use super::{
    enumerate_good_involutions, symmetric_quandle_isomorphic, Limits, SymmetricQuandle, SymqError,
};
use crate::group::{
    centralizer_in_aut, fixed_two_torsion, orbits_under, FiniteGroup, GroupAutomorphism,
};
use crate::quandle::{galex, FiniteQuandle};

/// One orbit of the fixed two-torsion set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremClass {
    /// Smallest element of the orbit.
    pub representative: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SqClassification {
    pub order: usize,
    /// Good involutions. Lexicographic on the brute-force path; in increasing
    /// order of `r` on the orbit path.
    pub good_involutions: Vec<Vec<usize>>,
    /// Classes as sorted indices into `good_involutions`; the first index is
    /// the class representative. `None` when the pairwise phase was skipped.
    pub classes_bruteforce: Option<Vec<Vec<usize>>>,
    /// Present for GAlex inputs.
    pub fixed_two_torsion: Option<Vec<usize>>,
    pub classes_theorem: Option<Vec<TheoremClass>>,
    pub agreement: Option<bool>,
    pub notes: Vec<String>,
}

/// Good involutions of `q` grouped by symmetric quandle isomorphism.
///
/// Each involution is compared against one representative per existing
/// class; since isomorphism is an equivalence relation and each search is
/// exhaustive, this yields the full partition.
pub fn classify_sq_bruteforce(
    q: &FiniteQuandle,
    limits: &Limits,
) -> Result<SqClassification, SymqError> {
    let involutions = enumerate_good_involutions(q, limits)?;
    let mut result = SqClassification {
        order: q.order(),
        ..Default::default()
    };
    if q.order() > limits.pairwise_max_order && !involutions.is_empty() {
        result.notes.push(format!(
            "pairwise classification skipped: order {} exceeds limit {}",
            q.order(),
            limits.pairwise_max_order
        ));
        result.good_involutions = involutions;
        return Ok(result);
    }

    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, rho) in involutions.iter().enumerate() {
        let candidate = SymmetricQuandle::new(q, rho.clone())?;
        let mut placed = false;
        for class in classes.iter_mut() {
            let rep = SymmetricQuandle::new(q, involutions[class[0]].clone())?;
            if symmetric_quandle_isomorphic(&rep, &candidate, limits.budget)?.is_some() {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    result.good_involutions = involutions;
    result.classes_bruteforce = Some(classes);
    Ok(result)
}

/// Orbits of the automorphisms commuting with `phi` on the fixed two-torsion
/// set, for a connected kei `GAlex(group, phi)`.
pub fn classify_sq_theorem(
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
    limits: &Limits,
) -> Result<SqClassification, SymqError> {
    let q = galex(group, phi)?;
    require_connected_kei(&q)?;
    theorem_classes(group, phi, &q, limits)
}

fn theorem_classes(
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
    q: &FiniteQuandle,
    limits: &Limits,
) -> Result<SqClassification, SymqError> {
    let torsion = fixed_two_torsion(group, phi);
    let centralizer = centralizer_in_aut(group, phi, limits.budget)?;
    let mut restricted = Vec::with_capacity(centralizer.len());
    for psi in &centralizer {
        let map: Option<Vec<usize>> = torsion
            .members()
            .iter()
            .map(|&r| torsion.position(psi.apply(r)))
            .collect();
        match map {
            Some(m) => restricted.push(m),
            None => {
                return Err(SymqError::Inconsistent(
                    "fixed two-torsion set is not closed under the centralizer".into(),
                ))
            }
        }
    }
    let partition = orbits_under(&restricted, torsion.len())?;
    let classes = partition
        .orbits()
        .iter()
        .map(|orbit| {
            let members: Vec<usize> = orbit.iter().map(|&i| torsion.members()[i]).collect();
            TheoremClass {
                representative: members[0],
                members,
            }
        })
        .collect();
    let good_involutions = torsion
        .members()
        .iter()
        .map(|&r| rho_r(group, phi, r))
        .collect::<Result<_, _>>()?;
    Ok(SqClassification {
        order: q.order(),
        good_involutions,
        classes_bruteforce: None,
        fixed_two_torsion: Some(torsion.members().to_vec()),
        classes_theorem: Some(classes),
        agreement: None,
        notes: vec![format!(
            "centralizer of phi has {} elements",
            centralizer.len()
        )],
    })
}

/// True when the orbit classes and brute-force classes match: equal counts,
/// every `ρ_r` of an orbit lies in one brute-force class, and different
/// orbits land in different classes.
fn classes_agree(
    brute: &[Vec<usize>],
    involutions: &[Vec<usize>],
    theorem: &[TheoremClass],
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
) -> Result<bool, SymqError> {
    if brute.len() != theorem.len() {
        return Ok(false);
    }
    let mut class_of = vec![usize::MAX; involutions.len()];
    for (c, members) in brute.iter().enumerate() {
        for &i in members {
            class_of[i] = c;
        }
    }
    let mut seen = vec![false; brute.len()];
    for tc in theorem {
        let mut target = None;
        for &r in &tc.members {
            let rho = rho_r(group, phi, r)?;
            let Ok(idx) = involutions.binary_search(&rho) else {
                return Ok(false);
            };
            match target {
                None => target = Some(class_of[idx]),
                Some(c) if c != class_of[idx] => return Ok(false),
                Some(_) => {}
            }
        }
        let Some(c) = target else { return Ok(false) };
        if std::mem::replace(&mut seen[c], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force classification of `GAlex(group, phi)`, plus the orbit
/// classification and an agreement verdict whenever the quandle is a
/// connected kei. Notes record why the orbit path was skipped otherwise.
pub fn cross_check_sq(
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
    limits: &Limits,
) -> Result<SqClassification, SymqError> {
    let q = galex(group, phi)?;
    let mut report = classify_sq_bruteforce(&q, limits)?;
    report.fixed_two_torsion = Some(fixed_two_torsion(group, phi).members().to_vec());

    if let Some((x, y)) = q.kei_witness() {
        report.notes.push(format!(
            "orbit path skipped: not a kei ({x}^{y} = {} but {x}^({y}^-1) = {})",
            q.op(x, y),
            q.inv_op(x, y)
        ));
        return Ok(report);
    }
    let orbits = q.inner_orbits().count();
    if orbits != 1 {
        report.notes.push(format!(
            "orbit path skipped: not connected ({orbits} inner orbits)"
        ));
        return Ok(report);
    }

    let theorem = theorem_classes(group, phi, &q, limits)?;
    report.notes.extend(theorem.notes);
    let theorem_classes = theorem.classes_theorem.unwrap_or_default();
    report.agreement = match &report.classes_bruteforce {
        Some(brute) => Some(classes_agree(
            brute,
            &report.good_involutions,
            &theorem_classes,
            group,
            phi,
        )?),
        None => {
            report
                .notes
                .push("agreement not decided: brute-force classes unavailable".into());
            None
        }
    };
    report.classes_theorem = Some(theorem_classes);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::constructors::{cyclic, direct_product};
    use crate::group::{inversion_automorphism, validate_automorphism};
    use crate::symq::Hypothesis;

    fn cyc_inv(n: usize) -> (FiniteGroup, GroupAutomorphism) {
        let g = cyclic(n).unwrap();
        let inv = inversion_automorphism(&g).unwrap();
        (g, inv)
    }

    #[test]
    fn bruteforce_examples() {
        let l = Limits::default();
        let z5 = cyclic(5).unwrap();
        let times_two = validate_automorphism(&z5, vec![0, 2, 4, 1, 3]).unwrap();
        let c = classify_sq_bruteforce(&galex(&z5, &times_two).unwrap(), &l).unwrap();
        assert!(c.good_involutions.is_empty());
        assert_eq!(c.classes_bruteforce, Some(vec![]));

        let (z3, inv3) = cyc_inv(3);
        let c = classify_sq_bruteforce(&galex(&z3, &inv3).unwrap(), &l).unwrap();
        assert_eq!(c.classes_bruteforce.unwrap().len(), 1);
    }

    #[test]
    fn theorem_examples() {
        let l = Limits::default();
        let (z3, inv3) = cyc_inv(3);
        let c = classify_sq_theorem(&z3, &inv3, &l).unwrap();
        assert_eq!(
            c.classes_theorem.unwrap(),
            vec![TheoremClass {
                representative: 0,
                members: vec![0]
            }]
        );
        let (z9, inv9) = cyc_inv(9);
        assert_eq!(
            classify_sq_theorem(&z9, &inv9, &l)
                .unwrap()
                .classes_theorem
                .unwrap()
                .len(),
            1
        );
        let (z4, inv4) = cyc_inv(4);
        assert_eq!(
            classify_sq_theorem(&z4, &inv4, &l),
            Err(SymqError::HypothesisNotMet(Hypothesis::Connected))
        );
    }

    #[test]
    fn cross_check_examples() {
        let l = Limits::default();
        let (z3, inv3) = cyc_inv(3);
        let c = cross_check_sq(&z3, &inv3, &l).unwrap();
        assert_eq!(c.agreement, Some(true));
        assert_eq!(c.classes_bruteforce.as_ref().unwrap().len(), 1);
        assert_eq!(c.classes_theorem.as_ref().unwrap().len(), 1);

        let z5 = cyclic(5).unwrap();
        let times_two = validate_automorphism(&z5, vec![0, 2, 4, 1, 3]).unwrap();
        let c = cross_check_sq(&z5, &times_two, &l).unwrap();
        assert_eq!(c.classes_bruteforce, Some(vec![]));
        assert_eq!(c.agreement, None);
        assert!(c.notes.iter().any(|n| n.contains("not a kei (0^1 = 4")));

        let v = direct_product(&[cyclic(2).unwrap(), cyclic(2).unwrap()]).unwrap();
        let id = GroupAutomorphism::identity(&v);
        let c = cross_check_sq(&v, &id, &l).unwrap();
        // Trivial quandle on 4 points: every involution is good, classified
        // by the number of transpositions.
        assert_eq!(c.good_involutions.len(), 10);
        assert_eq!(c.classes_bruteforce.as_ref().unwrap().len(), 3);
        assert_eq!(c.agreement, None);
        assert!(c
            .notes
            .iter()
            .any(|n| n.contains("not connected (4 inner orbits)")));
    }
}
