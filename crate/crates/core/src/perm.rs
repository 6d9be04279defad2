//! Permutations of `0..n` in one-line notation.

use crate::error::{Error, Result};

/// Rearranges `p` into its lexicographic successor. Returns `false` (leaving
/// `p` untouched) when `p` is already the last arrangement.
pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations { current: Some((0..n).collect()) }
}

pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        if next_permutation(&mut succ) {
            self.current = Some(succ);
        }
        Some(out)
    }
}

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

pub fn check_permutation(p: &[usize]) -> Result<()> {
    if is_permutation(p) {
        Ok(())
    } else {
        Err(Error::NotAPermutation(p.to_vec()))
    }
}

/// +1 or -1, computed from the cycle decomposition.
pub fn sign(p: &[usize]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut s = 1;
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
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All words of length `len` over `0..base`, lexicographically.
pub fn words(len: usize, base: usize) -> impl Iterator<Item = Vec<usize>> + Clone {
    let total = (base as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = (code % base as u64) as usize;
            code /= base as u64;
        }
        w
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inversions(p: &[usize]) -> usize {
        let mut c = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn lexicographic_and_complete() {
        let all: Vec<_> = permutations(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|p| is_permutation(p)));
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(1).count(), 1);
    }

    #[test]
    fn sign_matches_inversion_parity() {
        for p in permutations(5) {
            let expected = if inversions(&p) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign(&p), expected, "{p:?}");
        }
    }

    #[test]
    fn inverse_composes_to_identity() {
        for p in permutations(4) {
            let q = inverse(&p);
            assert!((0..4).all(|i| q[p[i]] == i));
        }
    }

    #[test]
    fn words_enumerate_in_order() {
        let w: Vec<_> = words(2, 3).collect();
        assert_eq!(w.len(), 9);
        assert_eq!(w[0], vec![0, 0]);
        assert_eq!(w[5], vec![1, 2]);
        assert_eq!(words(0, 2).count(), 1);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(!is_permutation(&[0, 0]));
        assert!(!is_permutation(&[0, 2]));
        assert!(check_permutation(&[1, 0, 2]).is_ok());
    }
}
