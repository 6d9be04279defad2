//! The matrix-valued determinant expansion behind the theorem: entries
//! `M^B_{r,c} = sum_l (A_l)_{r,c} B_l` and minors `det_B M[i|j]`.

use std::time::Instant;

use serde_json::json;

use super::family::ConstraintFamily;
use super::report::{finish, params, VerificationReport};
use super::xpoly::multivar_char_poly;
use crate::algebra::{Poly, RingMatrix};
use crate::error::{Error, Result};
use crate::perm;

/// `M^B_{r,c}` for every `(r, c)`, row-major.
pub fn substituted_entries(f: &ConstraintFamily) -> Vec<RingMatrix> {
    let n = f.n();
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut m = RingMatrix::zero(n);
            for (a, b) in f.a().iter().zip(f.b()) {
                let coeff = &a[(r, c)];
                if !coeff.is_zero() {
                    m = &m + &b.scale(coeff);
                }
            }
            out.push(m);
        }
    }
    out
}

/// `(-1)^{i+j} sum_{sigma_i = j} sgn(sigma) prod_{r != i} M^B_{r, sigma_r}`,
/// products taken in ascending `r`.
pub fn det_b_minor(f: &ConstraintFamily, i: usize, j: usize) -> Result<RingMatrix> {
    let n = f.n();
    if i >= n || j >= n {
        return Err(Error::IndexOutOfRange(format!("({}, {}) with n = {n}", i + 1, j + 1)));
    }
    det_b_minor_from(&substituted_entries(f), n, i, j)
}

fn det_b_minor_from(mb: &[RingMatrix], n: usize, i: usize, j: usize) -> Result<RingMatrix> {
    let mut acc = RingMatrix::zero(n);
    for sigma in perm::permutations(n).filter(|s| s[i] == j) {
        let mut prod = RingMatrix::identity(n);
        for r in (0..n).filter(|&r| r != i) {
            prod = &prod * &mb[r * n + sigma[r]];
            if prod.is_zero() {
                break;
            }
        }
        acc = if perm::sign(&sigma) > 0 { &acc + &prod } else { &acc - &prod };
    }
    Ok(if (i + j) % 2 == 1 { -&acc } else { acc })
}

/// `sum_s (-1)^{s+b} (M^B_{s,b} det_B M[s|b])_{b,e}`, which must vanish.
/// `data.equals_p_entry` records agreement with `p(B)_{b,e}`.
pub fn phillips_laplace_check(f: &ConstraintFamily, b: usize, e: usize) -> VerificationReport {
    let start = Instant::now();
    let n = f.n();
    let base = VerificationReport::new("phillips_laplace", params([("n", n), ("k", f.k()), ("b", b + 1), ("e", e + 1)]));
    let r = (|| {
        if b >= n || e >= n {
            return Err(Error::IndexOutOfRange(format!("(b, e) = ({}, {}) with n = {n}", b + 1, e + 1)));
        }
        f.validate()?;
        let value = laplace_value(f, b, e)?;
        let p = multivar_char_poly(f.a())?.evaluate(f.b())?[(b, e)].clone();
        let mut r = base.clone().count("minors", n as u64);
        r.data = Some(json!({ "equals_p_entry": value == p }));
        if !value.is_zero() {
            r = r.fail(json!({ "value": value.to_string() }));
        }
        Ok(r)
    })();
    finish(r, base, start)
}

/// The Laplace-type sum itself, without any hypothesis check.
pub fn laplace_value(f: &ConstraintFamily, b: usize, e: usize) -> Result<Poly> {
    let n = f.n();
    let mb = substituted_entries(f);
    let mut total = RingMatrix::zero(n);
    for s in 0..n {
        let term = &mb[s * n + b] * &det_b_minor_from(&mb, n, s, b)?;
        total = if (s + b) % 2 == 1 { &total - &term } else { &total + &term };
    }
    Ok(total[(b, e)].clone())
}
