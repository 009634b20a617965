//! Exact model of the 2-torsion of the n-torus `T_n = (R/Z)^n`.
//!
//! A 2-torsion point has coordinates in `{0, 1/2}` and is stored as an
//! n-bit vector (bit `i` set means coordinate `i` is `1/2`). The elementary
//! maps `E_ij` adding coordinate `j` into coordinate `i` act on these points
//! as `bit_i ^= bit_j`.

use std::fmt;

use thiserror::Error;

pub const MAX_DIMENSION: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorusError {
    #[error("dimension {0} is outside 1..={MAX_DIMENSION}")]
    DimensionTooLarge(usize),
    #[error("vector {bits:#b} does not fit in dimension {n}")]
    BadVector { n: usize, bits: u32 },
    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),
}

fn check_dimension(n: usize) -> Result<(), TorusError> {
    if (1..=MAX_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(TorusError::DimensionTooLarge(n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitVector {
    n: usize,
    bits: u32,
}

impl BitVector {
    pub fn new(n: usize, bits: u32) -> Result<Self, TorusError> {
        check_dimension(n)?;
        if u64::from(bits) >> n != 0 {
            return Err(TorusError::BadVector { n, bits });
        }
        Ok(BitVector { n, bits })
    }

    /// The point with coordinate `i` equal to `1/2` and all others zero.
    pub fn unit(n: usize, i: usize) -> Result<Self, TorusError> {
        check_dimension(n)?;
        if i >= n {
            return Err(TorusError::BadVector { n, bits: u32::MAX });
        }
        BitVector::new(n, 1 << i)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }
}

/// Most significant coordinate first.
impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.n)
    }
}

/// `E_ij`: adds coordinate `j` into coordinate `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transvection {
    i: usize,
    j: usize,
}

impl Transvection {
    pub fn new(i: usize, j: usize) -> Option<Self> {
        (i != j).then_some(Transvection { i, j })
    }

    #[inline]
    pub fn apply_bits(&self, v: u32) -> u32 {
        v ^ (((v >> self.j) & 1) << self.i)
    }

    pub fn apply(&self, v: BitVector) -> BitVector {
        BitVector {
            n: v.n,
            bits: self.apply_bits(v.bits),
        }
    }

    /// All `E_ij` with `i != j` in dimension `n`.
    pub fn all(n: usize) -> Vec<Transvection> {
        (0..n)
            .flat_map(|i| (0..n).filter_map(move |j| Transvection::new(i, j)))
            .collect()
    }
}

/// All `2^n` two-torsion points, by integer value.
pub fn two_torsion_set(n: usize) -> Result<Vec<BitVector>, TorusError> {
    check_dimension(n)?;
    Ok((0..1u32 << n).map(|bits| BitVector { n, bits }).collect())
}

fn orbit_bits(n: usize, start: u32, gens: &[Transvection], seen: &mut [bool]) -> Vec<u32> {
    let mut orbit = vec![start];
    seen[start as usize] = true;
    let mut next = 0;
    while next < orbit.len() {
        let v = orbit[next];
        next += 1;
        for t in gens {
            let w = t.apply_bits(v);
            if !seen[w as usize] {
                seen[w as usize] = true;
                orbit.push(w);
            }
        }
    }
    debug_assert!(orbit.iter().all(|&w| u64::from(w) >> n == 0));
    orbit.sort_unstable();
    orbit
}

/// Orbit of `v` under the group generated by all transvections, sorted.
pub fn transvection_orbit(v: BitVector) -> Result<Vec<BitVector>, TorusError> {
    let n = v.n;
    check_dimension(n)?;
    let mut seen = vec![false; 1 << n];
    Ok(orbit_bits(n, v.bits, &Transvection::all(n), &mut seen)
        .into_iter()
        .map(|bits| BitVector { n, bits })
        .collect())
}

/// Result of classifying the 2-torsion points of `T_n` up to transvections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSummary {
    pub n: usize,
    pub two_torsion_size: usize,
    /// Orbit sizes, with orbits sorted by smallest member.
    pub orbit_sizes: Vec<usize>,
    /// Smallest member of each orbit.
    pub orbit_representatives: Vec<BitVector>,
    pub class_count: usize,
    /// Whether the orbit of the first unit vector is every nonzero point;
    /// `None` in dimension 1, where there are no transvections.
    pub unit_orbit_is_all_nonzero: Option<bool>,
    pub notes: Vec<String>,
}

/// Number of transvection orbits on the 2-torsion of `T_n`. For `n >= 2`
/// this also verifies that the first unit vector reaches every nonzero point
/// and fails with [`TorusError::ModelInconsistency`] if it does not.
pub fn torus_sq_class_count(n: usize) -> Result<usize, TorusError> {
    Ok(torus_summary(n)?.class_count)
}

pub fn torus_summary(n: usize) -> Result<TorusSummary, TorusError> {
    check_dimension(n)?;
    let gens = Transvection::all(n);
    let size = 1usize << n;
    let mut seen = vec![false; size];
    let mut orbits = Vec::new();
    for start in 0..size as u32 {
        if !seen[start as usize] {
            orbits.push(orbit_bits(n, start, &gens, &mut seen));
        }
    }
    if orbits[0] != [0] {
        return Err(TorusError::ModelInconsistency(
            "zero vector is not a fixed point".into(),
        ));
    }
    let mut notes = Vec::new();
    let unit_orbit_is_all_nonzero = if n >= 2 {
        let unit = &orbits[1];
        let all_nonzero = unit.len() == size - 1 && unit[0] == 1;
        if !all_nonzero {
            return Err(TorusError::ModelInconsistency(format!(
                "orbit of the first unit vector has {} points, expected {}",
                unit.len(),
                size - 1
            )));
        }
        Some(true)
    } else {
        notes.push(
            "dimension 1 has no transvections; the two classes {0} and {1/2} are read off directly"
                .to_string(),
        );
        None
    };
    Ok(TorusSummary {
        n,
        two_torsion_size: size,
        orbit_sizes: orbits.iter().map(Vec::len).collect(),
        orbit_representatives: orbits.iter().map(|o| BitVector { n, bits: o[0] }).collect(),
        class_count: orbits.len(),
        unit_orbit_is_all_nonzero,
        notes,
    })
}
