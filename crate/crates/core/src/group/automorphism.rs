use super::{ElementSet, FiniteGroup, GroupError};
use crate::perm;
use crate::search::{Budget, NodeCounter};

/// A validated automorphism of some [`FiniteGroup`], stored as the image of
/// each element index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupAutomorphism {
    perm: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn identity(group: &FiniteGroup) -> Self {
        GroupAutomorphism {
            perm: perm::identity(group.order()),
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            perm: perm::compose(&self.perm, &other.perm),
        }
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        GroupAutomorphism {
            perm: perm::inverse(&self.perm),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn commutes_with(&self, other: &GroupAutomorphism) -> bool {
        self.perm.len() == other.perm.len()
            && (0..self.perm.len()).all(|x| self.perm[other.perm[x]] == other.perm[self.perm[x]])
    }
}

/// Checks that `perm` is a multiplicative bijection of `group`.
pub fn validate_automorphism(
    group: &FiniteGroup,
    perm: Vec<usize>,
) -> Result<GroupAutomorphism, GroupError> {
    let n = group.order();
    if perm.len() != n {
        return Err(GroupError::MalformedPermutation(format!(
            "length {} does not match group order {n}",
            perm.len()
        )));
    }
    if let Some(&x) = perm.iter().find(|&&x| x >= n) {
        return Err(GroupError::MalformedPermutation(format!(
            "entry {x} is out of range"
        )));
    }
    if !perm::is_permutation(&perm) {
        return Err(GroupError::NotBijective);
    }
    for i in 0..n {
        for j in 0..n {
            if perm[group.mul(i, j)] != group.mul(perm[i], perm[j]) {
                return Err(GroupError::NotMultiplicative(i, j));
            }
        }
    }
    Ok(GroupAutomorphism { perm })
}

/// `g ↦ g⁻¹`, an automorphism exactly when the group is abelian.
pub fn inversion_automorphism(group: &FiniteGroup) -> Result<GroupAutomorphism, GroupError> {
    if let Some((i, j)) = group.commutator_witness() {
        return Err(GroupError::NotAbelian(i, j));
    }
    Ok(GroupAutomorphism {
        perm: group.inverse_table().to_vec(),
    })
}

/// Extends generator images to a full map via the Cayley graph, failing on
/// any inconsistency or collision.
fn extend_from_generators(
    group: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = group.order();
    let e = group.identity();
    let mut map = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    map[e] = e;
    hit[e] = true;
    let mut queue = vec![e];
    while let Some(x) = queue.pop() {
        for (&g, &h) in gens.iter().zip(images) {
            let y = group.mul(x, g);
            let target = group.mul(map[x], h);
            if map[y] == usize::MAX {
                if hit[target] {
                    return None;
                }
                map[y] = target;
                hit[target] = true;
                queue.push(y);
            } else if map[y] != target {
                return None;
            }
        }
    }
    // The generators span the group, so every element was reached.
    debug_assert!(map.iter().all(|&m| m != usize::MAX));
    Some(map)
}

/// All automorphisms of `group`, sorted lexicographically by permutation.
///
/// Backtracks over images of a greedy generating set. A generator may only go
/// to an element of the same order lying outside the subgroup spanned by the
/// earlier images; each complete assignment is extended along the Cayley
/// graph and kept when the extension is a well-defined bijection.
pub fn enumerate_automorphisms(
    group: &FiniteGroup,
    budget: Budget,
) -> Result<Vec<GroupAutomorphism>, GroupError> {
    let gens = group.greedy_generators();
    let orders: Vec<usize> = group.elements().map(|x| group.element_order(x)).collect();
    let mut counter = budget.counter();
    let mut images = Vec::with_capacity(gens.len());
    let mut out = Vec::new();

    fn go(
        group: &FiniteGroup,
        gens: &[usize],
        orders: &[usize],
        images: &mut Vec<usize>,
        counter: &mut NodeCounter,
        out: &mut Vec<GroupAutomorphism>,
    ) -> Result<(), GroupError> {
        let k = images.len();
        if k == gens.len() {
            if let Some(perm) = extend_from_generators(group, gens, images) {
                out.push(GroupAutomorphism { perm });
            }
            return Ok(());
        }
        let span = group.closure(images);
        for h in group.elements() {
            if span[h] || orders[h] != orders[gens[k]] {
                continue;
            }
            counter.tick()?;
            images.push(h);
            go(group, gens, orders, images, counter, out)?;
            images.pop();
        }
        Ok(())
    }

    go(group, &gens, &orders, &mut images, &mut counter, &mut out)?;
    out.sort();
    Ok(out)
}

/// Brute-force oracle: scans every permutation fixing the identity and keeps
/// the multiplicative ones. Only practical for tiny groups.
pub fn automorphisms_by_scan(
    group: &FiniteGroup,
    budget: Budget,
) -> Result<Vec<GroupAutomorphism>, GroupError> {
    let n = group.order();
    let e = group.identity();
    let mut counter = budget.counter();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    perm[e] = e;
    used[e] = true;
    let mut out = Vec::new();

    fn go(
        group: &FiniteGroup,
        pos: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        counter: &mut NodeCounter,
        out: &mut Vec<GroupAutomorphism>,
    ) -> Result<(), GroupError> {
        let n = group.order();
        if pos == n {
            let ok = (0..n)
                .all(|i| (0..n).all(|j| perm[group.mul(i, j)] == group.mul(perm[i], perm[j])));
            if ok {
                out.push(GroupAutomorphism { perm: perm.clone() });
            }
            return Ok(());
        }
        if pos == group.identity() {
            return go(group, pos + 1, perm, used, counter, out);
        }
        for x in 0..n {
            if used[x] {
                continue;
            }
            counter.tick()?;
            used[x] = true;
            perm[pos] = x;
            go(group, pos + 1, perm, used, counter, out)?;
            used[x] = false;
        }
        perm[pos] = usize::MAX;
        Ok(())
    }

    go(group, 0, &mut perm, &mut used, &mut counter, &mut out)?;
    out.sort();
    Ok(out)
}

/// Automorphisms commuting with `phi`.
pub fn centralizer_in_aut(
    group: &FiniteGroup,
    phi: &GroupAutomorphism,
    budget: Budget,
) -> Result<Vec<GroupAutomorphism>, GroupError> {
    Ok(enumerate_automorphisms(group, budget)?
        .into_iter()
        .filter(|psi| psi.commutes_with(phi))
        .collect())
}

/// `{ r : phi(r) = r, r² = e }`
pub fn fixed_two_torsion(group: &FiniteGroup, phi: &GroupAutomorphism) -> ElementSet {
    ElementSet::from_unsorted(
        group
            .elements()
            .filter(|&r| phi.apply(r) == r && group.mul(r, r) == group.identity())
            .collect(),
    )
}
