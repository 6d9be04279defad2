use std::fmt::Debug;
use std::hash::Hash;

use crate::algebra::RingMatrix;
use crate::perm;

/// Edge and entry labels. Plain objects carry one index `l` in `0..k`
/// selecting `A_l`/`B_l`; two-index objects carry a [`TwoLabel`] selecting
/// `A_{alpha, l}`/`B_{alpha, l}`.
pub trait Label: Copy + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    /// Whether a full label sequence of length `n` is admissible.
    fn sequence_ok(labels: &[Self], n: usize, k: usize) -> bool;

    /// Every admissible label sequence of length `n`, lexicographically.
    fn sequences(n: usize, k: usize) -> Vec<Vec<Self>>;

    /// Number of admissible sequences: `k^n`, or `n! k^n` for two-index labels.
    fn sequence_count(n: usize, k: usize) -> u64;

    /// Splits a sequence into (alpha components, plain components).
    fn split(labels: &[Self]) -> (Option<Vec<usize>>, Vec<usize>);
}

impl Label for usize {
    fn sequence_ok(labels: &[usize], n: usize, k: usize) -> bool {
        labels.len() == n && labels.iter().all(|&l| l < k)
    }

    fn sequences(n: usize, k: usize) -> Vec<Vec<usize>> {
        perm::words(n, k).collect()
    }

    fn sequence_count(n: usize, k: usize) -> u64 {
        (k as u64).pow(n as u32)
    }

    fn split(labels: &[usize]) -> (Option<Vec<usize>>, Vec<usize>) {
        (None, labels.to_vec())
    }
}

/// The label pair `(alpha, l)` of two-index objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoLabel {
    pub alpha: usize,
    pub ell: usize,
}

impl TwoLabel {
    pub fn new(alpha: usize, ell: usize) -> TwoLabel {
        TwoLabel { alpha, ell }
    }
}

impl Label for TwoLabel {
    /// The alpha components along a sequence must form a permutation.
    fn sequence_ok(labels: &[TwoLabel], n: usize, k: usize) -> bool {
        let alphas: Vec<usize> = labels.iter().map(|l| l.alpha).collect();
        labels.len() == n && labels.iter().all(|l| l.ell < k) && perm::is_permutation(&alphas)
    }

    fn sequences(n: usize, k: usize) -> Vec<Vec<TwoLabel>> {
        let words: Vec<Vec<usize>> = perm::words(n, k).collect();
        perm::permutations(n)
            .flat_map(|a| {
                words
                    .iter()
                    .map(|w| a.iter().zip(w).map(|(&al, &l)| TwoLabel::new(al, l)).collect())
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    fn sequence_count(n: usize, k: usize) -> u64 {
        perm::factorial(n) * (k as u64).pow(n as u32)
    }

    fn split(labels: &[TwoLabel]) -> (Option<Vec<usize>>, Vec<usize>) {
        (
            Some(labels.iter().map(|l| l.alpha).collect()),
            labels.iter().map(|l| l.ell).collect(),
        )
    }
}

/// Resolves a label to its matrix.
pub trait LabelIndex<L> {
    fn matrix(&self, l: L) -> Option<&RingMatrix>;
}

impl LabelIndex<usize> for [RingMatrix] {
    fn matrix(&self, l: usize) -> Option<&RingMatrix> {
        self.get(l)
    }
}

impl LabelIndex<usize> for Vec<RingMatrix> {
    fn matrix(&self, l: usize) -> Option<&RingMatrix> {
        self.get(l)
    }
}

impl LabelIndex<TwoLabel> for [Vec<RingMatrix>] {
    fn matrix(&self, l: TwoLabel) -> Option<&RingMatrix> {
        self.get(l.alpha)?.get(l.ell)
    }
}

impl LabelIndex<TwoLabel> for Vec<Vec<RingMatrix>> {
    fn matrix(&self, l: TwoLabel) -> Option<&RingMatrix> {
        self.get(l.alpha)?.get(l.ell)
    }
}
