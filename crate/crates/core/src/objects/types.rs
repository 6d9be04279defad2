//! Decorated permutations, paths and maps, and the pairs built from them.
//!
//! Every type is generic over its [`Label`]; `usize` gives the plain objects
//! and [`TwoLabel`] the two-index ones. A two-index permutation is stored as
//! `pi` together with the per-position pairs `(alpha[pi[i]], l_i)`, so the
//! permutation `alpha` itself is recovered as `pairs[pi^-1[v]].alpha`.

use serde::ser::{Serialize, SerializeMap, Serializer};

use super::label::{Label, LabelIndex, TwoLabel};
use crate::algebra::{Poly, RingMatrix};
use crate::error::{Error, Result};
use crate::perm;

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn lookup<'a, L: Label, S: LabelIndex<L> + ?Sized>(src: &'a S, l: L, n: usize) -> Result<&'a RingMatrix> {
    let m = src
        .matrix(l)
        .ok_or_else(|| Error::Dimension(format!("no matrix for label {l:?}")))?;
    if m.n() != n {
        return Err(Error::Dimension(format!("expected {n}x{n} matrices, found {0}x{0}", m.n())));
    }
    Ok(m)
}

fn product<'a, I: IntoIterator<Item = &'a Poly>>(factors: I) -> Poly {
    let mut acc = Poly::one();
    for f in factors {
        if f.is_zero() {
            return Poly::zero();
        }
        acc = &acc * f;
    }
    acc
}

/// A permutation `pi` of `0..n` whose positions carry labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation<L = usize> {
    pub(crate) k: usize,
    pub(crate) pi: Vec<usize>,
    pub(crate) labels: Vec<L>,
}

pub type Decorated2Permutation = DecoratedPermutation<TwoLabel>;

impl<L: Label> DecoratedPermutation<L> {
    pub fn new(k: usize, pi: Vec<usize>, labels: Vec<L>) -> Result<Self> {
        perm::check_permutation(&pi)?;
        if !L::sequence_ok(&labels, pi.len(), k) {
            return Err(Error::InvalidObject(format!("bad labels {labels:?} for k = {k}")));
        }
        Ok(DecoratedPermutation { k, pi, labels })
    }

    pub fn n(&self) -> usize {
        self.pi.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn sign(&self) -> i64 {
        perm::sign(&self.pi)
    }

    /// `sgn(pi) * prod_i (A_{label_i})_{i, pi_i}`.
    pub fn swgt<S: LabelIndex<L> + ?Sized>(&self, a: &S) -> Result<Poly> {
        let n = self.n();
        let mut factors = Vec::with_capacity(n);
        for i in 0..n {
            factors.push(&lookup(a, self.labels[i], n)?[(i, self.pi[i])]);
        }
        let w = product(factors);
        Ok(if self.sign() < 0 { -w } else { w })
    }
}

impl Decorated2Permutation {
    /// Builds the two-index permutation from `alpha`, `pi` and plain labels.
    pub fn from_parts(k: usize, alpha: &[usize], pi: Vec<usize>, ells: &[usize]) -> Result<Self> {
        perm::check_permutation(alpha)?;
        perm::check_permutation(&pi)?;
        if alpha.len() != pi.len() || ells.len() != pi.len() {
            return Err(Error::Dimension("alpha, pi and labels differ in length".into()));
        }
        let labels = pi.iter().zip(ells).map(|(&p, &l)| TwoLabel::new(alpha[p], l)).collect();
        DecoratedPermutation::new(k, pi, labels)
    }

    pub fn alpha(&self) -> Vec<usize> {
        let mut alpha = vec![0; self.n()];
        for (i, &p) in self.pi.iter().enumerate() {
            alpha[p] = self.labels[i].alpha;
        }
        alpha
    }
}

/// A walk `q_0 .. q_n` on `0..n` whose `n` edges carry labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPath<L = usize> {
    pub(crate) k: usize,
    pub(crate) vertices: Vec<usize>,
    pub(crate) labels: Vec<L>,
}

pub type Decorated2Path = DecoratedPath<TwoLabel>;

impl<L: Label> DecoratedPath<L> {
    pub fn new(k: usize, vertices: Vec<usize>, labels: Vec<L>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || vertices.len() != n + 1 {
            return Err(Error::InvalidObject(format!(
                "a path with {n} edges needs {} vertices, got {}",
                n + 1,
                vertices.len()
            )));
        }
        if vertices.iter().any(|&v| v >= n) {
            return Err(Error::InvalidObject(format!("vertex out of range in {vertices:?}")));
        }
        if !L::sequence_ok(&labels, n, k) {
            return Err(Error::InvalidObject(format!("bad labels {labels:?} for k = {k}")));
        }
        Ok(DecoratedPath { k, vertices, labels })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        self.vertices[self.n()]
    }

    /// `prod_i (B_{label_i})_{q_i, q_{i+1}}`.
    pub fn wgt<S: LabelIndex<L> + ?Sized>(&self, b: &S) -> Result<Poly> {
        let n = self.n();
        let mut factors = Vec::with_capacity(n);
        for i in 0..n {
            factors.push(&lookup(b, self.labels[i], n)?[(self.vertices[i], self.vertices[i + 1])]);
        }
        Ok(product(factors))
    }
}

/// A label-synchronised pair of a decorated permutation and a decorated path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pathmutation<L = usize> {
    pub(crate) perm: DecoratedPermutation<L>,
    pub(crate) path: DecoratedPath<L>,
}

pub type Pathmutation2 = Pathmutation<TwoLabel>;

impl<L: Label> Pathmutation<L> {
    pub fn new(perm: DecoratedPermutation<L>, path: DecoratedPath<L>) -> Result<Self> {
        if perm.k != path.k || perm.labels != path.labels {
            return Err(Error::InvalidObject("permutation and path labels differ".into()));
        }
        Ok(Pathmutation { perm, path })
    }

    pub fn perm(&self) -> &DecoratedPermutation<L> {
        &self.perm
    }

    pub fn path(&self) -> &DecoratedPath<L> {
        &self.path
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn begin(&self) -> usize {
        self.path.start()
    }

    pub fn end(&self) -> usize {
        self.path.end()
    }

    pub fn swgt<SA, SB>(&self, a: &SA, b: &SB) -> Result<Poly>
    where
        SA: LabelIndex<L> + ?Sized,
        SB: LabelIndex<L> + ?Sized,
    {
        let p = self.perm.swgt(a)?;
        if p.is_zero() {
            return Ok(p);
        }
        Ok(&p * &self.path.wgt(b)?)
    }

    /// The pathmutation viewed as a pathmap (identity `sigma`, `tau = pi`).
    pub fn to_pathmap(&self) -> Pathmap<L> {
        Pathmap {
            map: DecoratedMap {
                k: self.perm.k,
                sigma: (0..self.n()).collect(),
                tau: self.perm.pi.clone(),
                labels: self.perm.labels.clone(),
            },
            path: self.path.clone(),
        }
    }
}

/// Triples `(sigma_i, tau_i, label_i)` where `tau` may repeat one value,
/// compensated by `sigma` being the identity or the transposition of the
/// two repeated positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedMap<L = usize> {
    pub(crate) k: usize,
    pub(crate) sigma: Vec<usize>,
    pub(crate) tau: Vec<usize>,
    pub(crate) labels: Vec<L>,
}

pub type Decorated2Map = DecoratedMap<TwoLabel>;

/// Positions `s < t` with `tau_s == tau_t`, if any; `Err` when `tau` has fewer
/// than `n - 1` distinct values.
fn repeated_pair(tau: &[usize]) -> std::result::Result<Option<(usize, usize)>, ()> {
    let n = tau.len();
    let mut pair = None;
    for s in 0..n {
        for t in s + 1..n {
            if tau[s] == tau[t] {
                if pair.is_some() {
                    return Err(());
                }
                pair = Some((s, t));
            }
        }
    }
    Ok(pair)
}

impl<L: Label> DecoratedMap<L> {
    pub fn new(k: usize, sigma: Vec<usize>, tau: Vec<usize>, labels: Vec<L>) -> Result<Self> {
        let n = tau.len();
        if n == 0 || sigma.len() != n {
            return Err(Error::InvalidObject("sigma and tau must have the same positive length".into()));
        }
        if tau.iter().any(|&v| v >= n) {
            return Err(Error::InvalidObject(format!("tau value out of range in {tau:?}")));
        }
        perm::check_permutation(&sigma)?;
        if !L::sequence_ok(&labels, n, k) {
            return Err(Error::InvalidObject(format!("bad labels {labels:?} for k = {k}")));
        }
        let moved: Vec<usize> = (0..n).filter(|&i| sigma[i] != i).collect();
        match repeated_pair(&tau) {
            Err(()) => return Err(Error::InvalidObject(format!("tau {tau:?} has fewer than n - 1 values"))),
            Ok(None) => {
                if !moved.is_empty() {
                    return Err(Error::InvalidObject("sigma must be the identity when tau is a permutation".into()));
                }
            }
            Ok(Some((s, t))) => {
                let swapped = moved == [s, t] && sigma[s] == t && sigma[t] == s;
                if !moved.is_empty() && !swapped {
                    return Err(Error::InvalidObject(format!(
                        "sigma {sigma:?} is neither the identity nor the transposition of positions {s}, {t}"
                    )));
                }
            }
        }
        Ok(DecoratedMap { k, sigma, tau, labels })
    }

    pub fn n(&self) -> usize {
        self.tau.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn repeated(&self) -> Option<(usize, usize)> {
        repeated_pair(&self.tau).expect("validated map")
    }

    pub fn sigma_is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// `prod_i (A_{label_i})_{sigma_i, tau_i}`.
    pub fn wgt<S: LabelIndex<L> + ?Sized>(&self, a: &S) -> Result<Poly> {
        let n = self.n();
        let mut factors = Vec::with_capacity(n);
        for i in 0..n {
            factors.push(&lookup(a, self.labels[i], n)?[(self.sigma[i], self.tau[i])]);
        }
        Ok(product(factors))
    }
}

/// A decorated map paired with a decorated path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pathmap<L = usize> {
    pub(crate) map: DecoratedMap<L>,
    pub(crate) path: DecoratedPath<L>,
}

pub type Pathmap2 = Pathmap<TwoLabel>;

impl<L: Label> Pathmap<L> {
    pub fn new(map: DecoratedMap<L>, path: DecoratedPath<L>) -> Result<Self> {
        let pm = Pathmap { map, path };
        pm.check()?;
        Ok(pm)
    }

    pub(crate) fn check(&self) -> Result<()> {
        let (m, q) = (&self.map, &self.path);
        if m.k != q.k || m.n() != q.n() {
            return Err(Error::InvalidObject("map and path sizes differ".into()));
        }
        match m.repeated() {
            None => {
                if m.labels != q.labels {
                    return Err(Error::InvalidObject("labels of a pathmutation must match".into()));
                }
            }
            Some((s, t)) => {
                if q.start() != m.tau[s] {
                    return Err(Error::InvalidObject("path must start at the repeated tau value".into()));
                }
                let (ms, mt) = if m.sigma_is_identity() { (s, t) } else { (t, s) };
                let ok = (0..m.n()).all(|r| {
                    let want = if r == s {
                        q.labels[ms]
                    } else if r == t {
                        q.labels[mt]
                    } else {
                        q.labels[r]
                    };
                    m.labels[r] == want
                });
                if !ok {
                    return Err(Error::InvalidObject("map labels do not pair with path labels".into()));
                }
            }
        }
        Ok(())
    }

    pub fn map(&self) -> &DecoratedMap<L> {
        &self.map
    }

    pub fn path(&self) -> &DecoratedPath<L> {
        &self.path
    }

    pub fn n(&self) -> usize {
        self.map.n()
    }

    pub fn is_pathmutation(&self) -> bool {
        self.map.repeated().is_none()
    }

    /// The value `b` with `self` in `G(b, e)`: the path start for a
    /// pathmutation, otherwise the value missing from `tau`.
    pub fn base(&self) -> usize {
        if self.is_pathmutation() {
            self.path.start()
        } else {
            let mut seen = vec![false; self.n()];
            for &v in &self.map.tau {
                seen[v] = true;
            }
            seen.iter().position(|&x| !x).expect("tau misses exactly one value")
        }
    }

    pub fn end(&self) -> usize {
        self.path.end()
    }

    pub fn in_a(&self, b: usize, e: usize) -> bool {
        self.is_pathmutation() && self.path.start() == b && self.end() == e
    }

    pub fn in_h(&self, b: usize, e: usize) -> bool {
        !self.is_pathmutation() && self.base() == b && self.end() == e
    }

    pub fn in_g(&self, b: usize, e: usize) -> bool {
        self.in_a(b, e) || self.in_h(b, e)
    }

    /// Unsigned weight `wgt(map) * wgt(path)`.
    pub fn wgt<SA, SB>(&self, a: &SA, b: &SB) -> Result<Poly>
    where
        SA: LabelIndex<L> + ?Sized,
        SB: LabelIndex<L> + ?Sized,
    {
        let m = self.map.wgt(a)?;
        if m.is_zero() {
            return Ok(m);
        }
        Ok(&m * &self.path.wgt(b)?)
    }
}

fn labels_json<L: Label, M: SerializeMap>(map: &mut M, labels: &[L]) -> std::result::Result<(), M::Error> {
    let (alpha, ells) = L::split(labels);
    if let Some(a) = alpha {
        map.serialize_entry("alpha", &one_based(&a))?;
    }
    map.serialize_entry("labels", &one_based(&ells))
}

impl<L: Label> Serialize for DecoratedPermutation<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("n", &self.n())?;
        m.serialize_entry("k", &self.k)?;
        m.serialize_entry("pi", &one_based(&self.pi))?;
        let (alpha, ells) = L::split(&self.labels);
        if alpha.is_some() {
            // report alpha itself rather than the per-position alpha_{pi_i}
            let mut a = vec![0; self.n()];
            for (i, &p) in self.pi.iter().enumerate() {
                a[p] = alpha.as_ref().unwrap()[i];
            }
            m.serialize_entry("alpha", &one_based(&a))?;
        }
        m.serialize_entry("labels", &one_based(&ells))?;
        m.end()
    }
}

impl<L: Label> Serialize for DecoratedPath<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("n", &self.n())?;
        m.serialize_entry("k", &self.k)?;
        m.serialize_entry("vertices", &one_based(&self.vertices))?;
        labels_json(&mut m, &self.labels)?;
        m.end()
    }
}

impl<L: Label> Serialize for DecoratedMap<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("n", &self.n())?;
        m.serialize_entry("k", &self.k)?;
        m.serialize_entry("sigma", &one_based(&self.sigma))?;
        m.serialize_entry("tau", &one_based(&self.tau))?;
        labels_json(&mut m, &self.labels)?;
        m.end()
    }
}

impl<L: Label> Serialize for Pathmutation<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("perm", &self.perm)?;
        m.serialize_entry("path", &self.path)?;
        m.end()
    }
}

impl<L: Label> Serialize for Pathmap<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("map", &self.map)?;
        m.serialize_entry("path", &self.path)?;
        m.end()
    }
}
