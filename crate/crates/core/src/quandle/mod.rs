//! Finite quandles as operation tables, and the generalized Alexander
//! construction `x^y = φ(x)·φ(y⁻¹)·y` on a finite group.

mod galex_maps;
mod iso;

pub use galex_maps::{affine_automorphism, f_sharp};
pub(crate) use iso::MapSearch;
pub use iso::{automorphisms, quandle_isomorphisms, QuandleMap};

use thiserror::Error;

use crate::group::{orbits_under, FiniteGroup, GroupAutomorphism, GroupError, OrbitPartition};
use crate::search::BudgetExceeded;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("idempotency fails at x = {0}")]
    Q1Violation(usize),
    #[error("column {0} is not a permutation")]
    Q2Violation(usize),
    #[error("self-distributivity fails at (x, y, z) = ({0}, {1}, {2})")]
    Q3Violation(usize, usize, usize),
    #[error("quandle was not built from a group and automorphism")]
    NotGalexOrigin,
    #[error("quandle is not connected ({0} inner orbits)")]
    NotConnected(usize),
    #[error("automorphism does not commute with phi")]
    NotCentralizing,
    #[error("malformed map: {0}")]
    MalformedMap(String),
    #[error("map does not preserve the operation at ({0}, {1})")]
    NotQuandleMap(usize, usize),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// The group and automorphism a quandle was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalexOrigin {
    pub group: FiniteGroup,
    pub phi: GroupAutomorphism,
}

/// A finite quandle: the operation table `x^y` together with the derived
/// inverse operation `x^{y⁻¹}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    order: usize,
    op: Vec<usize>,
    inv_op: Vec<usize>,
    origin: Option<GalexOrigin>,
}

impl FiniteQuandle {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `x^y`
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.order + y]
    }

    /// `x^{y⁻¹}`
    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv_op[x * self.order + y]
    }

    pub fn origin(&self) -> Option<&GalexOrigin> {
        self.origin.as_ref()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// The inner map `S_y : x ↦ x^y`.
    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.order).map(|x| self.op(x, y)).collect()
    }

    /// `S_y⁻¹ : x ↦ x^{y⁻¹}`.
    pub fn inv_column(&self, y: usize) -> Vec<usize> {
        (0..self.order).map(|x| self.inv_op(x, y)).collect()
    }

    /// First `(x, y)` in row-major order with `x^y != x^{y⁻¹}`.
    pub fn kei_witness(&self) -> Option<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.op(x, y) != self.inv_op(x, y))
    }

    pub fn is_kei(&self) -> bool {
        self.kei_witness().is_none()
    }

    /// Orbits of the inner maps.
    pub fn inner_orbits(&self) -> OrbitPartition {
        let columns: Vec<Vec<usize>> = (0..self.order).map(|y| self.column(y)).collect();
        orbits_under(&columns, self.order).expect("quandle columns are permutations")
    }

    pub fn is_connected(&self) -> bool {
        self.inner_orbits().count() == 1
    }
}

/// Validates an operation table as a quandle and derives the inverse
/// operation column by column.
///
/// Checks run shape, then Q1, then Q2, then Q3; witnesses are the smallest
/// offending indices in that scan order.
pub fn validate_quandle(table: &[Vec<usize>]) -> Result<FiniteQuandle, QuandleError> {
    let n = table.len();
    if n == 0 {
        return Err(QuandleError::MalformedTable("empty table".into()));
    }
    let mut op = Vec::with_capacity(n * n);
    for (x, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(QuandleError::MalformedTable(format!(
                "row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((y, v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(QuandleError::MalformedTable(format!(
                "entry ({x}, {y}) = {v} is out of range"
            )));
        }
        op.extend_from_slice(row);
    }
    from_op(n, op)
}

fn from_op(n: usize, op: Vec<usize>) -> Result<FiniteQuandle, QuandleError> {
    let at = |x: usize, y: usize| op[x * n + y];

    if let Some(x) = (0..n).find(|&x| at(x, x) != x) {
        return Err(QuandleError::Q1Violation(x));
    }

    let mut inv_op = vec![usize::MAX; n * n];
    for y in 0..n {
        for x in 0..n {
            let slot = &mut inv_op[at(x, y) * n + y];
            if *slot != usize::MAX {
                return Err(QuandleError::Q2Violation(y));
            }
            *slot = x;
        }
    }

    for x in 0..n {
        for y in 0..n {
            let xy = at(x, y);
            for z in 0..n {
                if at(xy, z) != at(at(x, z), at(y, z)) {
                    return Err(QuandleError::Q3Violation(x, y, z));
                }
            }
        }
    }

    Ok(FiniteQuandle {
        order: n,
        op,
        inv_op,
        origin: None,
    })
}

/// The generalized Alexander quandle of `(group, phi)`.
///
/// The inverse operation is `x^{y⁻¹} = φ⁻¹(x)·φ⁻¹(y⁻¹)·y`; it is checked
/// against the column inverses derived during validation.
pub fn galex(group: &FiniteGroup, phi: &GroupAutomorphism) -> Result<FiniteQuandle, QuandleError> {
    let n = group.order();
    if phi.perm().len() != n {
        return Err(GroupError::MalformedPermutation(format!(
            "automorphism has length {}, group has order {n}",
            phi.perm().len()
        ))
        .into());
    }
    let phi_inv = phi.inverse();
    let mut op = Vec::with_capacity(n * n);
    let mut inv_formula = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let yi = group.inv(y);
            op.push(group.mul(group.mul(phi.apply(x), phi.apply(yi)), y));
            inv_formula.push(group.mul(group.mul(phi_inv.apply(x), phi_inv.apply(yi)), y));
        }
    }
    let mut q = from_op(n, op)
        .map_err(|e| QuandleError::Inconsistent(format!("GAlex table is not a quandle: {e}")))?;
    if q.inv_op != inv_formula {
        return Err(QuandleError::Inconsistent(
            "GAlex inverse operation disagrees with the column inverses".into(),
        ));
    }
    q.origin = Some(GalexOrigin {
        group: group.clone(),
        phi: phi.clone(),
    });
    Ok(q)
}

/// `x^y = x` on `n` points.
pub fn trivial_quandle(n: usize) -> FiniteQuandle {
    let table: Vec<Vec<usize>> = (0..n).map(|x| vec![x; n]).collect();
    validate_quandle(&table).expect("trivial quandle")
}

/// Dihedral quandle `R_m`: `x^y = 2y - x mod m`.
pub fn dihedral_quandle(m: usize) -> FiniteQuandle {
    let table: Vec<Vec<usize>> = (0..m)
        .map(|x| (0..m).map(|y| (2 * y + m - x) % m).collect())
        .collect();
    validate_quandle(&table).expect("dihedral quandle")
}
