//! The bijection `phi: A(b,e) x [n] -> G(b,e)`, its inverse, the signed
//! weight it induces on pathmaps, and the involution on `H(b,e)`.
//!
//! All of these are generic in the label type, so the two-index versions
//! (`hat_phi`, `hat_phi_inv`, `involution_f2`) are the same maps applied to
//! [`TwoLabel`] objects.

use super::label::{Label, LabelIndex, TwoLabel};
use super::types::{DecoratedMap, DecoratedPath, DecoratedPermutation, Pathmap, Pathmutation};
use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::perm;

/// `phi(pm, j)`: restart the path at `j`, and point the two positions
/// `s = pi^-1(b)`, `t = pi^-1(j)` at `j`, the smaller row index going to
/// position `s`.
pub fn phi<L: Label>(pm: &Pathmutation<L>, j: usize) -> Result<Pathmap<L>> {
    let n = pm.n();
    if j >= n {
        return Err(Error::IndexOutOfRange(format!("j = {j} with n = {n}")));
    }
    let b = pm.begin();
    if j == b {
        return Ok(pm.to_pathmap());
    }
    let pi = &pm.perm.pi;
    let s = pi.iter().position(|&v| v == b).unwrap();
    let t = pi.iter().position(|&v| v == j).unwrap();

    let mut tau = pi.clone();
    tau[s] = j;
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut labels = pm.perm.labels.clone();
    if s > t {
        sigma.swap(s, t);
        labels.swap(s, t);
    }
    let mut vertices = pm.path.vertices.clone();
    vertices[0] = j;
    Ok(Pathmap {
        map: DecoratedMap { k: pm.perm.k, sigma, tau, labels },
        path: DecoratedPath { k: pm.path.k, vertices, labels: pm.path.labels.clone() },
    })
}

/// Inverse of [`phi`]; returns the pathmutation and the `j` it was sent with.
pub fn phi_inv<L: Label>(pmap: &Pathmap<L>) -> Result<(Pathmutation<L>, usize)> {
    pmap.check()?;
    let k = pmap.map.k;
    let path_labels = pmap.path.labels.clone();
    match pmap.map.repeated() {
        None => {
            let perm = DecoratedPermutation { k, pi: pmap.map.tau.clone(), labels: path_labels };
            let j = pmap.path.start();
            Ok((Pathmutation { perm, path: pmap.path.clone() }, j))
        }
        Some((s, t)) => {
            let b = pmap.base();
            let j = pmap.path.start();
            let mut pi = pmap.map.tau.clone();
            if pmap.map.sigma_is_identity() {
                pi[s] = b;
                pi[t] = j;
            } else {
                pi[s] = j;
                pi[t] = b;
            }
            let mut vertices = pmap.path.vertices.clone();
            vertices[0] = b;
            let perm = DecoratedPermutation { k, pi, labels: path_labels.clone() };
            let path = DecoratedPath { k, vertices, labels: path_labels };
            Ok((Pathmutation { perm, path }, j))
        }
    }
}

/// The sign of a pathmap: that of the permutation underlying `phi_inv`.
pub fn pathmap_sign<L: Label>(pmap: &Pathmap<L>) -> Result<i64> {
    Ok(phi_inv(pmap)?.0.perm.sign())
}

/// `swgt(pmap) = sgn(pi) * wgt(map) * wgt(path)` with `pi` from `phi_inv`.
pub fn swgt_pathmap<L, SA, SB>(pmap: &Pathmap<L>, a: &SA, b: &SB) -> Result<Poly>
where
    L: Label,
    SA: LabelIndex<L> + ?Sized,
    SB: LabelIndex<L> + ?Sized,
{
    let sign = pathmap_sign(pmap)?;
    let w = pmap.wgt(a, b)?;
    Ok(if sign < 0 { -w } else { w })
}

/// The sign-reversing involution on `H(b,e)`: exchange the values `b` and `j`
/// in the underlying permutation and map forward with the same `j`.
pub fn involution_f<L: Label>(pmap: &Pathmap<L>) -> Result<Pathmap<L>> {
    let (pm, j) = phi_inv(pmap)?;
    let b = pm.begin();
    if j == b {
        return Err(Error::InvalidObject("involution is defined on H(b,e) only; got an element of A(b,e)".into()));
    }
    let mut swapped = pm.clone();
    for v in swapped.perm.pi.iter_mut() {
        if *v == b {
            *v = j;
        } else if *v == j {
            *v = b;
        }
    }
    debug_assert!(perm::is_permutation(&swapped.perm.pi));
    phi(&swapped, j)
}

pub fn hat_phi(pm: &Pathmutation<TwoLabel>, j: usize) -> Result<Pathmap<TwoLabel>> {
    phi(pm, j)
}

pub fn hat_phi_inv(pmap: &Pathmap<TwoLabel>) -> Result<(Pathmutation<TwoLabel>, usize)> {
    phi_inv(pmap)
}

/// The involution on `H^2(b,e)`. Positions keep their label pairs, so the
/// recovered `alpha` is composed with the transposition of the values `b`, `j`.
pub fn involution_f2(pmap: &Pathmap<TwoLabel>) -> Result<Pathmap<TwoLabel>> {
    involution_f(pmap)
}
