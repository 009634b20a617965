use super::{FiniteQuandle, QuandleError};
use crate::perm;
use crate::search::{Budget, NodeCounter};

/// An operation-preserving bijection between two quandles of equal order,
/// stored as the image of each source element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuandleMap {
    perm: Vec<usize>,
}

impl QuandleMap {
    /// Checks that `perm` is a bijection with `perm[x^y] = perm[x]^{perm[y]}`.
    pub fn new(
        source: &FiniteQuandle,
        target: &FiniteQuandle,
        perm: Vec<usize>,
    ) -> Result<Self, QuandleError> {
        let n = source.order();
        if target.order() != n || perm.len() != n {
            return Err(QuandleError::MalformedMap(format!(
                "map of length {} between quandles of order {n} and {}",
                perm.len(),
                target.order()
            )));
        }
        if !perm::is_permutation(&perm) {
            return Err(QuandleError::MalformedMap("not a bijection".into()));
        }
        for x in 0..n {
            for y in 0..n {
                if perm[source.op(x, y)] != target.op(perm[x], perm[y]) {
                    return Err(QuandleError::NotQuandleMap(x, y));
                }
            }
        }
        Ok(QuandleMap { perm })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    pub fn inverse(&self) -> QuandleMap {
        QuandleMap {
            perm: perm::inverse(&self.perm),
        }
    }

    pub(crate) fn from_verified(perm: Vec<usize>) -> Self {
        QuandleMap { perm }
    }
}

/// Per-element invariant that any isomorphism must preserve: the cycle type
/// of the element's column map, plus whether the element is fixed by the
/// involution when one is being intertwined.
fn profiles(q: &FiniteQuandle, rho: Option<&[usize]>) -> Vec<(Vec<usize>, bool)> {
    (0..q.order())
        .map(|y| {
            let fixed = rho.is_some_and(|r| r[y] == y);
            (perm::cycle_type(&q.column(y)), fixed)
        })
        .collect()
}

#[derive(Clone)]
struct State {
    image: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    processed: usize,
}

/// Backtracking search for operation-preserving bijections `src → dst`,
/// optionally also requiring `f ∘ ρ = ρ' ∘ f`.
///
/// Decisions are made on the smallest unassigned source element, with
/// candidate images tried in ascending order. After each decision the
/// partial map is closed under `op`, `inv_op` and the involutions, so a
/// small generating set fixes the whole map.
pub(crate) struct MapSearch<'a> {
    src: &'a FiniteQuandle,
    dst: &'a FiniteQuandle,
    rho: Option<(&'a [usize], &'a [usize])>,
    src_profile: Vec<(Vec<usize>, bool)>,
    dst_profile: Vec<(Vec<usize>, bool)>,
}

impl<'a> MapSearch<'a> {
    pub(crate) fn new(
        src: &'a FiniteQuandle,
        dst: &'a FiniteQuandle,
        rho: Option<(&'a [usize], &'a [usize])>,
    ) -> Self {
        MapSearch {
            src,
            dst,
            rho,
            src_profile: profiles(src, rho.map(|r| r.0)),
            dst_profile: profiles(dst, rho.map(|r| r.1)),
        }
    }

    /// Whole-structure invariants that rule out any map up front.
    fn obviously_incompatible(&self) -> bool {
        if self.src.order() != self.dst.order() {
            return true;
        }
        if let Some((r1, r2)) = self.rho {
            if perm::cycle_type(r1) != perm::cycle_type(r2) {
                return true;
            }
        }
        let mut a = self.src_profile.clone();
        let mut b = self.dst_profile.clone();
        a.sort();
        b.sort();
        a != b
    }

    fn assign(&self, st: &mut State, x: usize, t: usize) -> bool {
        if st.image[x] != usize::MAX {
            return st.image[x] == t;
        }
        if st.used[t] || self.src_profile[x] != self.dst_profile[t] {
            return false;
        }
        st.image[x] = t;
        st.used[t] = true;
        st.assigned.push(x);
        true
    }

    fn propagate(&self, st: &mut State) -> bool {
        while st.processed < st.assigned.len() {
            let i = st.processed;
            let a = st.assigned[i];
            let fa = st.image[a];
            if let Some((r1, r2)) = self.rho {
                if !self.assign(st, r1[a], r2[fa]) {
                    return false;
                }
            }
            for j in 0..=i {
                let b = st.assigned[j];
                let fb = st.image[b];
                for (x, y, fx, fy) in [(a, b, fa, fb), (b, a, fb, fa)] {
                    if !self.assign(st, self.src.op(x, y), self.dst.op(fx, fy))
                        || !self.assign(st, self.src.inv_op(x, y), self.dst.inv_op(fx, fy))
                    {
                        return false;
                    }
                }
            }
            st.processed += 1;
        }
        true
    }

    /// Runs the search; stops after the first map unless `find_all`.
    pub(crate) fn run(
        &self,
        find_all: bool,
        budget: Budget,
    ) -> Result<Vec<Vec<usize>>, QuandleError> {
        let n = self.src.order();
        let mut out = Vec::new();
        if self.obviously_incompatible() {
            return Ok(out);
        }
        let st = State {
            image: vec![usize::MAX; n],
            used: vec![false; n],
            assigned: Vec::with_capacity(n),
            processed: 0,
        };
        let mut counter = budget.counter();
        self.go(st, find_all, &mut counter, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn go(
        &self,
        st: State,
        find_all: bool,
        counter: &mut NodeCounter,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<bool, QuandleError> {
        let Some(x) = st.image.iter().position(|&t| t == usize::MAX) else {
            out.push(st.image);
            return Ok(!find_all);
        };
        for t in 0..self.dst.order() {
            if st.used[t] || self.src_profile[x] != self.dst_profile[t] {
                continue;
            }
            counter.tick()?;
            let mut next = st.clone();
            if self.assign(&mut next, x, t)
                && self.propagate(&mut next)
                && self.go(next, find_all, counter, out)?
            {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Operation-preserving bijections `q1 → q2`: all of them when `find_all`,
/// otherwise at most the first one in search order.
pub fn quandle_isomorphisms(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    find_all: bool,
    budget: Budget,
) -> Result<Vec<QuandleMap>, QuandleError> {
    Ok(MapSearch::new(q1, q2, None)
        .run(find_all, budget)?
        .into_iter()
        .map(QuandleMap::from_verified)
        .collect())
}

/// All quandle automorphisms, sorted.
pub fn automorphisms(q: &FiniteQuandle, budget: Budget) -> Result<Vec<QuandleMap>, QuandleError> {
    quandle_isomorphisms(q, q, true, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{dihedral_quandle, trivial_quandle, validate_quandle};

    fn automorphisms_by_scan(q: &FiniteQuandle) -> Vec<Vec<usize>> {
        let n = q.order();
        let mut all = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        // Heap's algorithm.
        fn heap(k: usize, p: &mut Vec<usize>, q: &FiniteQuandle, all: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                if QuandleMap::new(q, q, p.clone()).is_ok() {
                    all.push(p.clone());
                }
                return;
            }
            for i in 0..k {
                heap(k - 1, p, q, all);
                let j = if k.is_multiple_of(2) { i } else { 0 };
                p.swap(j, k - 1);
            }
        }
        heap(n, &mut p, q, &mut all);
        all.sort();
        all.dedup();
        all
    }

    #[test]
    fn single_point() {
        let q = trivial_quandle(1);
        let maps = automorphisms(&q, Budget::default()).unwrap();
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].perm(), &[0]);
    }

    #[test]
    fn r3_has_six_automorphisms() {
        let q = dihedral_quandle(3);
        let found: Vec<Vec<usize>> = automorphisms(&q, Budget::default())
            .unwrap()
            .into_iter()
            .map(|m| m.perm().to_vec())
            .collect();
        let oracle = automorphisms_by_scan(&q);
        assert_eq!(oracle.len(), 6);
        assert_eq!(found, oracle);
    }

    #[test]
    fn search_matches_scan_on_small_quandles() {
        let mut qs = vec![
            trivial_quandle(4),
            dihedral_quandle(4),
            dihedral_quandle(5),
            dihedral_quandle(6),
        ];
        // Tetrahedral quandle: F4 with x^y = ωx + ω²y, element a + bω stored as a + 2b.
        let times_w = |v: usize| (v >> 1) | ((((v & 1) ^ (v >> 1)) & 1) << 1);
        let t: Vec<Vec<usize>> = (0..4)
            .map(|x| (0..4).map(|y| times_w(x) ^ times_w(times_w(y))).collect())
            .collect();
        qs.push(validate_quandle(&t).unwrap());
        for q in &qs {
            let found: Vec<Vec<usize>> = automorphisms(q, Budget::default())
                .unwrap()
                .into_iter()
                .map(|m| m.perm().to_vec())
                .collect();
            assert_eq!(found, automorphisms_by_scan(q));
        }
    }

    #[test]
    fn r3_not_isomorphic_to_trivial() {
        let maps = quandle_isomorphisms(
            &dihedral_quandle(3),
            &trivial_quandle(3),
            true,
            Budget::default(),
        )
        .unwrap();
        assert!(maps.is_empty());
        let maps = quandle_isomorphisms(
            &dihedral_quandle(3),
            &dihedral_quandle(4),
            true,
            Budget::default(),
        )
        .unwrap();
        assert!(maps.is_empty());
    }

    #[test]
    fn first_only_returns_one() {
        let q = dihedral_quandle(5);
        let first = quandle_isomorphisms(&q, &q, false, Budget::default()).unwrap();
        assert_eq!(first.len(), 1);
        assert_eq!(first[0].perm(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn budget_is_enforced() {
        let q = trivial_quandle(6);
        assert!(matches!(
            automorphisms(&q, Budget::new(10)),
            Err(QuandleError::Budget(_))
        ));
    }

    #[test]
    fn map_validation() {
        let q = dihedral_quandle(3);
        assert!(QuandleMap::new(&q, &q, vec![0, 2, 1]).is_ok());
        assert!(matches!(
            QuandleMap::new(&q, &q, vec![0, 0, 1]),
            Err(QuandleError::MalformedMap(_))
        ));
        let r4 = dihedral_quandle(4);
        // Swapping 0 and 1 does not preserve the operation on R4.
        assert!(matches!(
            QuandleMap::new(&r4, &r4, vec![1, 0, 2, 3]),
            Err(QuandleError::NotQuandleMap(..))
        ));
    }
}
