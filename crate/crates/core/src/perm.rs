//! Small helpers for permutations stored as index vectors.

/// True when `p` is a bijection of `0..n` where `n = p.len()`.
pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Inverse of a permutation. The input must be a permutation.
pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// `outer ∘ inner`, i.e. `x ↦ outer[inner[x]]`.
pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn is_involution(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| x < p.len() && p[x] == i)
}

/// Sorted cycle lengths of a permutation.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut lengths = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

/// All involutions (including the identity) of `0..n`, in lexicographic order.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(p: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = p.iter().position(Option::is_none) else {
            out.push(p.iter().map(|x| x.unwrap()).collect());
            return;
        };
        // Candidates for the image of `first`: itself, or any later free point.
        for j in first..p.len() {
            if p[j].is_some() {
                continue;
            }
            p[first] = Some(j);
            p[j] = Some(first);
            go(p, out);
            p[j] = None;
            p[first] = None;
        }
    }
    let mut out = Vec::new();
    go(&mut vec![None; n], &mut out);
    out.sort();
    out
}
