//! Built-in group families. Every constructor places the identity at index 0.

use super::{validate_group, FiniteGroup, GroupError};

/// Largest group order the constructors will build.
pub const MAX_CONSTRUCTED_ORDER: usize = 720;

fn check_order(what: &str, order: Option<usize>) -> Result<usize, GroupError> {
    match order {
        Some(n) if (1..=MAX_CONSTRUCTED_ORDER).contains(&n) => Ok(n),
        Some(0) => Err(GroupError::UnsupportedOrder(format!("{what} has order 0"))),
        _ => Err(GroupError::UnsupportedOrder(format!(
            "{what} exceeds the maximum order {MAX_CONSTRUCTED_ORDER}"
        ))),
    }
}

fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| mul(i, j)).collect())
        .collect();
    validate_group(&table).expect("built-in constructor produced an invalid table")
}

/// Z/nZ with element `i` standing for the residue `i`.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    let n = check_order("cyclic group", Some(n))?;
    Ok(from_fn(n, |i, j| (i + j) % n))
}

/// Dihedral group of order `2m`. Index `a*m + k` is `r^k s^a`.
pub fn dihedral(m: usize) -> Result<FiniteGroup, GroupError> {
    if m == 0 {
        return Err(GroupError::UnsupportedOrder("dihedral:0".into()));
    }
    check_order("dihedral group", m.checked_mul(2))?;
    let split = |x: usize| (x % m, x / m);
    Ok(from_fn(2 * m, |x, y| {
        let (k1, a1) = split(x);
        let (k2, a2) = split(y);
        // s r^k = r^{-k} s
        let k = if a1 == 0 {
            (k1 + k2) % m
        } else {
            (k1 + m - k2) % m
        };
        (a1 ^ a2) * m + k
    }))
}

/// Quaternion group Q8: indices 0..8 are 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion() -> FiniteGroup {
    // Unit products on {1, i, j, k} with signs.
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    from_fn(8, |x, y| {
        let (ux, nx) = (x / 2, x % 2 == 1);
        let (uy, ny) = (y / 2, y % 2 == 1);
        let (u, s) = UNIT[ux][uy];
        let neg = nx ^ ny ^ s;
        2 * u + usize::from(neg)
    })
}

fn permutations_of(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let transpositions: usize = crate::perm::cycle_type(p).iter().map(|l| l - 1).sum();
    transpositions.is_multiple_of(2)
}

fn permutation_group(elements: Vec<Vec<usize>>) -> FiniteGroup {
    let index: std::collections::HashMap<Vec<usize>, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    // g_i * g_j = g_i ∘ g_j
    from_fn(elements.len(), |i, j| {
        index[&crate::perm::compose(&elements[i], &elements[j])]
    })
}

fn factorial(k: usize) -> Option<usize> {
    (1..=k).try_fold(1usize, |acc, x| acc.checked_mul(x))
}

/// Symmetric group on `k` points, elements in lexicographic order.
pub fn symmetric(k: usize) -> Result<FiniteGroup, GroupError> {
    if k == 0 {
        return Err(GroupError::UnsupportedOrder("symmetric:0".into()));
    }
    check_order("symmetric group", factorial(k))?;
    Ok(permutation_group(permutations_of(k)))
}

/// Alternating group on `k` points, even permutations in lexicographic order.
pub fn alternating(k: usize) -> Result<FiniteGroup, GroupError> {
    if k == 0 {
        return Err(GroupError::UnsupportedOrder("alternating:0".into()));
    }
    check_order("alternating group", factorial(k).map(|f| f.div_ceil(2)))?;
    Ok(permutation_group(
        permutations_of(k)
            .into_iter()
            .filter(|p| is_even(p))
            .collect(),
    ))
}

/// Direct product; index is mixed-radix with the first factor most significant.
pub fn direct_product(factors: &[FiniteGroup]) -> Result<FiniteGroup, GroupError> {
    if factors.is_empty() {
        return Err(GroupError::UnsupportedOrder("empty product".into()));
    }
    let n = check_order(
        "direct product",
        factors
            .iter()
            .try_fold(1usize, |acc, g| acc.checked_mul(g.order())),
    )?;
    let decompose = |mut x: usize| {
        let mut parts = vec![0; factors.len()];
        for (slot, g) in parts.iter_mut().zip(factors).rev() {
            *slot = x % g.order();
            x /= g.order();
        }
        parts
    };
    // Factors built from files may keep the identity elsewhere; reindex so
    // each factor's identity becomes digit 0.
    let relabel: Vec<Vec<usize>> = factors
        .iter()
        .map(|g| {
            let mut order: Vec<usize> = vec![g.identity()];
            order.extend(g.elements().filter(|&x| x != g.identity()));
            order
        })
        .collect();
    let unlabel: Vec<Vec<usize>> = relabel.iter().map(|r| crate::perm::inverse(r)).collect();
    Ok(from_fn(n, |x, y| {
        let (xs, ys) = (decompose(x), decompose(y));
        factors.iter().enumerate().fold(0, |acc, (f, g)| {
            let z = g.mul(relabel[f][xs[f]], relabel[f][ys[f]]);
            acc * g.order() + unlabel[f][z]
        })
    }))
}
