//! Finite groups given by Cayley tables.
//!
//! Elements are indices `0..n`. Tables loaded from files may put the identity
//! anywhere; the built-in constructors in [`constructors`] always put it at 0.

mod automorphism;
pub mod constructors;
mod orbit;

pub use automorphism::{
    automorphisms_by_scan, centralizer_in_aut, enumerate_automorphisms, fixed_two_torsion,
    inversion_automorphism, validate_automorphism, GroupAutomorphism,
};
pub use orbit::{orbits_under, OrbitPartition, UnionFind};

use thiserror::Error;

use crate::search::BudgetExceeded;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("group is not abelian: {0}*{1} != {1}*{0}")]
    NotAbelian(usize, usize),
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("map is not bijective")]
    NotBijective,
    #[error("map is not multiplicative at ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("element {0} is out of range for a group of order {1}")]
    BadElement(usize, usize),
    #[error("unsupported order: {0}")]
    UnsupportedOrder(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// A finite group stored as a full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    product: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn inverse_table(&self) -> &[usize] {
        &self.inverse
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The Cayley table as rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.product
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Multiplicative order of `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.commutator_witness().is_none()
    }

    /// Lexicographically smallest non-commuting pair.
    pub fn commutator_witness(&self) -> Option<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.mul(i, j) != self.mul(j, i))
    }

    /// Smallest set of elements, chosen greedily in index order, that
    /// generates the group.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[self.identity] = true;
        for g in self.elements() {
            if span[g] {
                continue;
            }
            gens.push(g);
            span = self.closure(&gens);
        }
        gens
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut span = vec![false; self.order];
        span[self.identity] = true;
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !span[y] {
                    span[y] = true;
                    queue.push(y);
                }
            }
        }
        span
    }
}

/// Builds a [`FiniteGroup`] from a Cayley table.
///
/// Checks run in a fixed order: shape, identity, inverses, associativity.
/// The first failing check determines the error, and witnesses are the
/// lexicographically smallest offending indices. A table passing all four is
/// a Latin square, so no separate Latin-square pass is needed.
pub fn validate_group(table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::MalformedTable("empty table".into()));
    }
    let mut product = Vec::with_capacity(n * n);
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::MalformedTable(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(GroupError::MalformedTable(format!(
                    "entry ({i}, {j}) = {v} is out of range"
                )));
            }
            product.push(v);
        }
    }
    let at = |i: usize, j: usize| product[i * n + j];

    let identity = (0..n)
        .find(|&e| (0..n).all(|i| at(e, i) == i && at(i, e) == i))
        .ok_or(GroupError::NoIdentity)?;

    let mut inverse = Vec::with_capacity(n);
    for i in 0..n {
        let j = (0..n)
            .find(|&j| at(i, j) == identity && at(j, i) == identity)
            .ok_or(GroupError::NoInverse(i))?;
        inverse.push(j);
    }

    for i in 0..n {
        for j in 0..n {
            let ij = at(i, j);
            for k in 0..n {
                if at(ij, k) != at(i, at(j, k)) {
                    return Err(GroupError::NotAssociative(i, j, k));
                }
            }
        }
    }

    Ok(FiniteGroup {
        order: n,
        product,
        identity,
        inverse,
    })
}

/// A sorted, duplicate-free set of element indices of some group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    members: Vec<usize>,
}

impl ElementSet {
    pub fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        ElementSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Position of `x` within the sorted member list.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }
}
