//! Seeded generators of commuting families and of families satisfying the
//! linear constraint.
//!
//! # Random numbers
//!
//! Every generator is a pure function of its seed. Draws come from
//! xoshiro256** (Blackman and Vigna, 2018) seeded through SplitMix64:
//! the 256-bit state is four consecutive SplitMix64 outputs
//! (`state += 0x9e3779b97f4a7c15; z = state;
//! z = (z ^ z >> 30) * 0xbf58476d1ce4e5b9; z = (z ^ z >> 27) * 0x94d049bb133111eb;
//! z ^ z >> 31`) started from the 64-bit seed.
//!
//! A bounded draw in `[0, s)` rejects raw outputs `x >= 2^64 - (2^64 mod s)`
//! and returns `x mod s`; a draw in `[-m, m]` is a draw in `[0, 2m + 1)`
//! minus `m`.
//!
//! Independent streams derived from one seed use the seed
//! `seed + stream * 0x9e3779b97f4a7c15` (wrapping); see [`Stream`].

use std::fmt;
use std::str::FromStr;

use rand_xoshiro::rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, RingMatrix};
use crate::error::{Error, Result};
use crate::mixed::MatrixTuple;
use crate::theorems::{check_commuting, ConstraintFamily, MixedConstraintFamily};

pub const DEFAULT_MAGNITUDE: u32 = 5;

const STREAM_STEP: u64 = 0x9e37_79b9_7f4a_7c15;

/// Named sub-streams of one seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    Commuting = 0,
    Constraint = 1,
    Tuple = 2,
    Order = 3,
}

/// A seeded xoshiro256** source with the bounded draws used here.
#[derive(Clone, Debug)]
pub struct SeededRng(Xoshiro256StarStar);

impl SeededRng {
    pub fn new(seed: u64) -> SeededRng {
        SeededRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn stream(seed: u64, stream: Stream) -> SeededRng {
        SeededRng::new(seed.wrapping_add((stream as u64).wrapping_mul(STREAM_STEP)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, bound)`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Uniform in `[-m, m]`.
    pub fn int(&mut self, m: u32) -> i64 {
        self.below(2 * m as u64 + 1) as i64 - m as i64
    }

    /// Uniform in `[-m, m] \ {0}`.
    pub fn nonzero_int(&mut self, m: u32) -> i64 {
        let v = self.below(2 * m as u64) as i64 - m as i64;
        if v >= 0 {
            v + 1
        } else {
            v
        }
    }

    pub fn int_matrix(&mut self, n: usize, m: u32) -> RingMatrix {
        RingMatrix::from_fn(n, |_, _| Poly::int(self.int(m)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    DiagonalGeneric,
    PowersOfOne,
    Circulant,
    ConjugatedDiagonal,
}

impl Strategy {
    pub const ALL: [Strategy; 4] =
        [Strategy::DiagonalGeneric, Strategy::PowersOfOne, Strategy::Circulant, Strategy::ConjugatedDiagonal];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::DiagonalGeneric => "diagonal-generic",
            Strategy::PowersOfOne => "powers-of-one",
            Strategy::Circulant => "circulant",
            Strategy::ConjugatedDiagonal => "conjugated-diagonal",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Strategy> {
        Strategy::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown strategy {s:?}")))
    }
}

fn default_magnitude() -> u32 {
    DEFAULT_MAGNITUDE
}

/// What to generate: `k` matrices of size `n` by `strategy`, from `seed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub strategy: Strategy,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    #[serde(default)]
    pub symbolic: bool,
    #[serde(default = "default_magnitude")]
    pub magnitude: u32,
}

impl FamilySpec {
    pub fn new(strategy: Strategy, n: usize, k: usize, seed: u64) -> FamilySpec {
        FamilySpec { strategy, n, k, seed, symbolic: false, magnitude: DEFAULT_MAGNITUDE }
    }

    pub fn symbolic(mut self, on: bool) -> FamilySpec {
        self.symbolic = on;
        self
    }

    pub fn magnitude(mut self, m: u32) -> FamilySpec {
        self.magnitude = m;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 {
            return Err(Error::InvalidArgument(format!("n = {}, k = {}; both must be at least 1", self.n, self.k)));
        }
        if self.magnitude == 0 {
            return Err(Error::InvalidArgument("magnitude must be at least 1".into()));
        }
        Ok(())
    }
}

/// Indeterminate `{prefix}{a}{b}`, with an underscore when an index exceeds 9.
fn indexed(prefix: &str, a: usize, b: usize) -> Poly {
    if a > 9 || b > 9 {
        Poly::var(&format!("{prefix}{a}_{b}"))
    } else {
        Poly::var(&format!("{prefix}{a}{b}"))
    }
}

fn cyclic_shift(n: usize) -> RingMatrix {
    RingMatrix::from_fn(n, |i, j| Poly::int(((i + 1) % n == j) as i64))
}

/// `P` and `P^{-1}` from `3n` elementary operations `row_r += c row_s`.
fn unimodular_pair(rng: &mut SeededRng, n: usize) -> (RingMatrix, RingMatrix) {
    let mut p = RingMatrix::identity(n);
    let mut q = RingMatrix::identity(n);
    if n < 2 {
        return (p, q);
    }
    for _ in 0..3 * n {
        let r = rng.below(n as u64) as usize;
        let s = (r + 1 + rng.below(n as u64 - 1) as usize) % n;
        let c = rng.nonzero_int(2);
        // E = I + c e_{r,s}, E^{-1} = I - c e_{r,s}
        let e = &RingMatrix::identity(n) + &RingMatrix::elementary(n, r, s).scale(&Poly::int(c));
        let e_inv = &RingMatrix::identity(n) - &RingMatrix::elementary(n, r, s).scale(&Poly::int(c));
        p = &e * &p;
        q = &q * &e_inv;
    }
    debug_assert_eq!(&p * &q, RingMatrix::identity(n));
    (p, q)
}

/// `k` pairwise commuting `n x n` matrices.
pub fn gen_commuting(spec: &FamilySpec) -> Result<Vec<RingMatrix>> {
    spec.validate()?;
    let (n, k, m) = (spec.n, spec.k, spec.magnitude);
    let mut rng = SeededRng::stream(spec.seed, Stream::Commuting);
    let out: Vec<RingMatrix> = match spec.strategy {
        Strategy::DiagonalGeneric => (1..=k)
            .map(|j| {
                RingMatrix::diag(
                    (1..=n)
                        .map(|i| if spec.symbolic { indexed("b", j, i) } else { Poly::int(rng.int(m)) })
                        .collect(),
                )
            })
            .collect(),
        Strategy::PowersOfOne => {
            let c = if spec.symbolic { RingMatrix::generic("c", n) } else { rng.int_matrix(n, m) };
            let mut acc = c.clone();
            let mut out = vec![c.clone()];
            for _ in 1..k {
                acc = &acc * &c;
                out.push(acc.clone());
            }
            out
        }
        Strategy::Circulant => {
            let s = cyclic_shift(n);
            let powers: Vec<RingMatrix> = (0..n).map(|t| s.pow(t as u32)).collect();
            (1..=k)
                .map(|j| {
                    let mut b = RingMatrix::zero(n);
                    for (t, st) in powers.iter().enumerate() {
                        let c = if spec.symbolic { indexed("c", j, t) } else { Poly::int(rng.int(m)) };
                        b = &b + &st.scale(&c);
                    }
                    b
                })
                .collect()
        }
        Strategy::ConjugatedDiagonal => {
            let (p, q) = unimodular_pair(&mut rng, n);
            (1..=k)
                .map(|j| {
                    let d = RingMatrix::diag(
                        (1..=n)
                            .map(|i| if spec.symbolic { indexed("d", j, i) } else { Poly::int(rng.int(m)) })
                            .collect(),
                    );
                    &(&p * &d) * &q
                })
                .collect()
        }
    };
    check_commuting(&out, "B")?;
    Ok(out)
}

/// An antisymmetric `k x k` integer matrix, not all zero when `k >= 2`.
fn antisymmetric(rng: &mut SeededRng, k: usize, m: u32) -> Vec<Vec<i64>> {
    loop {
        let mut e = vec![vec![0i64; k]; k];
        for i in 0..k {
            for j in i + 1..k {
                let v = rng.int(m);
                e[i][j] = v;
                e[j][i] = -v;
            }
        }
        if k < 2 || e.iter().flatten().any(|&v| v != 0) {
            return e;
        }
    }
}

/// `A_i = sum_j e_{ij} C B_j`.
fn constrained_row(rng: &mut SeededRng, b: &[RingMatrix], m: u32, c: Option<&RingMatrix>) -> Vec<RingMatrix> {
    let (n, k) = (b[0].n(), b.len());
    let e = antisymmetric(rng, k, m);
    let c = match c {
        Some(c) => c.clone(),
        None => rng.int_matrix(n, m),
    };
    let cb: Vec<RingMatrix> = b.iter().map(|bj| &c * bj).collect();
    (0..k)
        .map(|i| {
            let mut a = RingMatrix::zero(n);
            for (j, cbj) in cb.iter().enumerate() {
                if e[i][j] != 0 {
                    a = &a + &cbj.scale(&Poly::int(e[i][j]));
                }
            }
            a
        })
        .collect()
}

fn check_family_input(b: &[RingMatrix]) -> Result<usize> {
    let n = b.first().map(|m| m.n()).ok_or_else(|| Error::Dimension("empty B family".into()))?;
    if b.iter().any(|m| m.n() != n) {
        return Err(Error::Dimension("B matrices differ in size".into()));
    }
    check_commuting(b, "B")?;
    Ok(n)
}

/// A constrained family over the commuting `b`, with entries of `e` and `C`
/// in `[-magnitude, magnitude]`. For `k = 1` this is `A_1 = 0`, flagged
/// degenerate.
pub fn gen_constrained_with(b: &[RingMatrix], seed: u64, magnitude: u32) -> Result<ConstraintFamily> {
    check_family_input(b)?;
    if magnitude == 0 {
        return Err(Error::InvalidArgument("magnitude must be at least 1".into()));
    }
    let mut rng = SeededRng::stream(seed, Stream::Constraint);
    let a = constrained_row(&mut rng, b, magnitude, None);
    let f = ConstraintFamily::new(a, b.to_vec())?.with_degenerate(b.len() == 1);
    f.validate()?;
    Ok(f)
}

pub fn gen_constrained(b: &[RingMatrix], seed: u64) -> Result<ConstraintFamily> {
    gen_constrained_with(b, seed, DEFAULT_MAGNITUDE)
}

/// [`gen_commuting`] followed by [`gen_constrained_with`]. With `symbolic`
/// set, `C` is the generic matrix `(c_{ij})` instead of a random one.
pub fn gen_family(spec: &FamilySpec) -> Result<ConstraintFamily> {
    let b = gen_commuting(spec)?;
    if !spec.symbolic {
        return gen_constrained_with(&b, spec.seed, spec.magnitude);
    }
    let mut rng = SeededRng::stream(spec.seed, Stream::Constraint);
    let c = RingMatrix::generic("g", spec.n);
    let a = constrained_row(&mut rng, &b, spec.magnitude, Some(&c));
    let f = ConstraintFamily::new(a, b)?.with_degenerate(spec.k == 1);
    f.validate()?;
    Ok(f)
}

/// A two-index family: `B_{i,j}` is entry `(i, j)` of one commuting pool of
/// `n k` matrices and every row gets its own `e` and `C`.
pub fn gen_mixed_constrained(spec: &FamilySpec) -> Result<MixedConstraintFamily> {
    let pool_spec = FamilySpec { k: spec.n * spec.k, ..spec.clone() };
    let pool = gen_commuting(&pool_spec)?;
    let k = spec.k;
    let b: Vec<Vec<RingMatrix>> = pool.chunks(k).map(|c| c.to_vec()).collect();
    let mut rng = SeededRng::stream(spec.seed, Stream::Constraint);
    let a: Vec<Vec<RingMatrix>> = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let c = spec.symbolic.then(|| RingMatrix::generic(&format!("g{}_", i + 1), spec.n));
            constrained_row(&mut rng, row, spec.magnitude, c.as_ref())
        })
        .collect();
    let f = MixedConstraintFamily::new(a, b)?.with_degenerate(k == 1);
    f.validate()?;
    Ok(f)
}

/// `A_1 = -I, A_2 = M, B_1 = M, B_2 = I`.
pub fn specialize_ch(m: &RingMatrix) -> ConstraintFamily {
    let i = RingMatrix::identity(m.n());
    ConstraintFamily::new(vec![-&i, m.clone()], vec![m.clone(), i]).expect("shapes agree")
}

/// `A_1 = A, B_1 = B, A_2 = -B, B_2 = A` for commuting `A`, `B`.
pub fn specialize_cor12(a: &RingMatrix, b: &RingMatrix) -> Result<ConstraintFamily> {
    let f = ConstraintFamily::new(vec![a.clone(), -b], vec![b.clone(), a.clone()])?;
    if !a.commutes_with(b) {
        return Err(Error::NotCommuting("A".into(), "B".into()));
    }
    f.validate()?;
    Ok(f)
}

/// `A_{i,1} = -B_{i,2} = I`, `A_{i,2} = B_{i,1} = M_i` for pairwise commuting `M_i`.
pub fn specialize_cor16(ms: &[RingMatrix]) -> Result<MixedConstraintFamily> {
    let n = check_family_input(ms)?;
    let i = RingMatrix::identity(n);
    let a = ms.iter().map(|m| vec![i.clone(), m.clone()]).collect();
    let b = ms.iter().map(|m| vec![m.clone(), -&i]).collect();
    let f = MixedConstraintFamily::new(a, b)?;
    f.validate()?;
    Ok(f)
}

/// [`specialize_cor16`] on `n` commuting matrices drawn by `spec.strategy`.
pub fn gen_cor16(spec: &FamilySpec) -> Result<MixedConstraintFamily> {
    specialize_cor16(&gen_commuting(&FamilySpec { k: spec.n, ..spec.clone() })?)
}

/// `n` independent random integer `n x n` matrices.
pub fn gen_tuple(n: usize, seed: u64, magnitude: u32) -> Result<MatrixTuple> {
    if magnitude == 0 {
        return Err(Error::InvalidArgument("magnitude must be at least 1".into()));
    }
    let mut rng = SeededRng::stream(seed, Stream::Tuple);
    MatrixTuple::new((0..n).map(|_| rng.int_matrix(n, magnitude)).collect())
}

/// One random integer `n x n` matrix.
pub fn gen_matrix(n: usize, seed: u64, magnitude: u32) -> RingMatrix {
    SeededRng::stream(seed, Stream::Tuple).int_matrix(n, magnitude)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_bounded_and_reproducible() {
        let mut a = SeededRng::new(42);
        let mut b = SeededRng::new(42);
        for _ in 0..1000 {
            let x = a.int(3);
            assert!((-3..=3).contains(&x));
            assert_eq!(x, b.int(3));
            assert_ne!(a.nonzero_int(2), 0);
            b.nonzero_int(2);
        }
        assert_ne!(SeededRng::stream(1, Stream::Commuting).next_u64(), SeededRng::stream(1, Stream::Constraint).next_u64());
    }

    /// Direct transcription of the documented constants.
    fn reference(seed: u64, count: usize) -> Vec<u64> {
        let mut sm = seed;
        let mut s = [0u64; 4];
        for w in &mut s {
            sm = sm.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = sm;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            *w = z ^ (z >> 31);
        }
        (0..count)
            .map(|_| {
                let out = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
                let t = s[1] << 17;
                s[2] ^= s[0];
                s[3] ^= s[1];
                s[1] ^= s[2];
                s[0] ^= s[3];
                s[2] ^= t;
                s[3] = s[3].rotate_left(45);
                out
            })
            .collect()
    }

    #[test]
    fn matches_documented_generator() {
        for seed in [0, 1, 0xdead_beef, u64::MAX] {
            let mut r = SeededRng::new(seed);
            let got: Vec<u64> = (0..16).map(|_| r.next_u64()).collect();
            assert_eq!(got, reference(seed, 16));
        }
    }

    #[test]
    fn diagonal_generic_names() {
        let b = gen_commuting(&FamilySpec::new(Strategy::DiagonalGeneric, 2, 2, 0).symbolic(true)).unwrap();
        assert_eq!(b[0], RingMatrix::diag(vec![Poly::var("b11"), Poly::var("b12")]));
        assert_eq!(b[1], RingMatrix::diag(vec![Poly::var("b21"), Poly::var("b22")]));
    }

    #[test]
    fn every_strategy_commutes() {
        for s in Strategy::ALL {
            for sym in [false, true] {
                let b = gen_commuting(&FamilySpec::new(s, 3, 3, 9).symbolic(sym)).unwrap();
                assert_eq!(b.len(), 3);
                for x in &b {
                    for y in &b {
                        assert!(x.commutes_with(y), "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn unimodular_inverse_is_exact() {
        let mut rng = SeededRng::new(5);
        for n in 1..5 {
            let (p, q) = unimodular_pair(&mut rng, n);
            assert_eq!(&p * &q, RingMatrix::identity(n));
            assert_eq!(p.det(), Poly::one());
        }
    }

    #[test]
    fn constrained_families_hold() {
        for s in Strategy::ALL {
            let f = gen_family(&FamilySpec::new(s, 3, 3, 17)).unwrap();
            assert!(f.constraint_residual().is_zero());
            assert!(!f.is_degenerate());
        }
        let f = gen_family(&FamilySpec::new(Strategy::PowersOfOne, 3, 1, 1)).unwrap();
        assert!(f.is_degenerate());
        assert!(f.a()[0].is_zero());
        let sym = gen_family(&FamilySpec::new(Strategy::DiagonalGeneric, 2, 2, 3).symbolic(true)).unwrap();
        assert!(sym.a().iter().all(|a| !a.is_constant()));
    }

    #[test]
    fn determinism() {
        let spec = FamilySpec::new(Strategy::ConjugatedDiagonal, 3, 2, 77);
        assert_eq!(gen_family(&spec).unwrap(), gen_family(&spec).unwrap());
        assert_ne!(gen_family(&spec).unwrap(), gen_family(&FamilySpec { seed: 78, ..spec }).unwrap());
    }

    #[test]
    fn mixed_reduces_to_single_row() {
        let spec = FamilySpec::new(Strategy::Circulant, 1, 2, 4);
        let m = gen_mixed_constrained(&spec).unwrap();
        let f = gen_constrained_with(&gen_commuting(&spec).unwrap(), spec.seed, spec.magnitude).unwrap();
        assert_eq!(m.a()[0], f.a());
        assert_eq!(m.b()[0], f.b());
        let m2 = gen_mixed_constrained(&FamilySpec::new(Strategy::PowersOfOne, 2, 2, 4)).unwrap();
        assert!(m2.validate().is_ok());
    }

    #[test]
    fn specializations() {
        let i = RingMatrix::identity(3);
        let ch = specialize_ch(&i);
        assert_eq!(ch.a(), &[-&i, i.clone()]);
        assert!(ch.validate().is_ok());
        let m = gen_matrix(3, 2, 4);
        assert!(specialize_ch(&m).constraint_residual().is_zero());
        let f = specialize_cor12(&i, &m).unwrap();
        assert_eq!(f.b(), &[m.clone(), i.clone()]);
        let e = RingMatrix::elementary(2, 0, 1);
        assert!(matches!(specialize_cor12(&e, &e.transpose()), Err(Error::NotCommuting(..))));
        let c = gen_cor16(&FamilySpec::new(Strategy::PowersOfOne, 3, 2, 8)).unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(c.k(), 2);
    }

    #[test]
    fn spec_json_and_validation() {
        let s: FamilySpec = serde_json::from_str(r#"{"strategy":"powers-of-one","n":2,"k":3,"seed":5}"#).unwrap();
        assert_eq!(s.magnitude, DEFAULT_MAGNITUDE);
        assert!(!s.symbolic);
        assert!(FamilySpec::new(Strategy::Circulant, 0, 1, 0).validate().is_err());
        assert!(FamilySpec::new(Strategy::Circulant, 1, 1, 0).magnitude(0).validate().is_err());
        assert_eq!("circulant".parse::<Strategy>().unwrap(), Strategy::Circulant);
        assert!("nope".parse::<Strategy>().is_err());
    }
}
