//! Theorem-level checks: build the polynomial, substitute, test for the
//! exact zero matrix.

use std::time::Instant;

use serde_json::{json, Map};

use super::family::{ConstraintFamily, MixedConstraintFamily};
use super::report::{finish, VerificationReport};
use super::xpoly::{mixed_x_poly, multivar_char_poly, XPolynomial};
use crate::algebra::RingMatrix;
use crate::error::{Error, Result};
use crate::mixed::{char_poly_vars, mixed_char_poly, MatrixTuple};
use crate::perm;

fn size_params(n: usize, k: usize) -> Map<String, serde_json::Value> {
    super::report::params([("n", n), ("k", k)])
}

/// `p(B_1..B_k) = 0` for `p = det(sum_i A_i x_i)`.
pub fn verify_phillips(f: &ConstraintFamily) -> VerificationReport {
    let start = Instant::now();
    let base = VerificationReport::new("phillips", size_params(f.n(), f.k()));
    let r = (|| {
        f.validate()?;
        let p = multivar_char_poly(f.a())?;
        let value = p.evaluate(f.b())?;
        let mut r = base.clone().count("monomials", p.len() as u64).expect_zero(&value);
        if f.is_degenerate() {
            r = r.param("degenerate", true);
        }
        Ok(r)
    })();
    finish(r, base, start)
}

/// `p_2(B, A) = 0` for `p_2(x, y) = det(xA - yB)` and commuting `A`, `B`.
pub fn verify_cor_2matrices(a: &RingMatrix, b: &RingMatrix) -> VerificationReport {
    let start = Instant::now();
    let base = VerificationReport::new("cor_2matrices", size_params(a.n(), 2));
    let r = (|| {
        if a.n() != b.n() {
            return Err(Error::Dimension(format!("{0}x{0} and {1}x{1}", a.n(), b.n())));
        }
        if !a.commutes_with(b) {
            return Err(Error::NotCommuting("A".into(), "B".into()));
        }
        let p = multivar_char_poly(&[a.clone(), -b])?;
        let value = p.evaluate(&[b.clone(), a.clone()])?;
        Ok(base.clone().count("monomials", p.len() as u64).expect_zero(&value))
    })();
    finish(r, base, start)
}

/// Evaluates the multilinear `f` of a tuple, each monomial as the product of
/// its matrices in `order`.
fn bapat_roy_value(f: &XPolynomial, t: &MatrixTuple, order: &[usize]) -> Result<RingMatrix> {
    f.evaluate_ordered(t.mats(), order)
}

/// The mean of the ordered evaluations over every product order.
fn bapat_roy_symmetrized(f: &XPolynomial, t: &MatrixTuple) -> Result<RingMatrix> {
    let n = t.n();
    let mut acc = RingMatrix::zero(n);
    let mut count = 0i64;
    for order in perm::permutations(n) {
        acc = &acc + &f.evaluate_ordered(t.mats(), &order)?;
        count += 1;
    }
    Ok(acc.scale(&crate::algebra::Poly::constant(crate::algebra::Rational::new(1.into(), count.into()))))
}

/// `f(A_1..A_n) = 0` for `f = D(x_1 I - A_1, ..., x_n I - A_n)`, evaluated
/// with ascending products. `alt_order`, when given, is evaluated too and
/// recorded under `data` with the order-averaged value; neither affects the
/// status.
pub fn verify_bapat_roy(t: &MatrixTuple, alt_order: Option<&[usize]>) -> VerificationReport {
    let start = Instant::now();
    let n = t.n();
    let base = VerificationReport::new("bapat_roy", super::report::params([("n", n)]));
    let r = (|| {
        let f = XPolynomial::from_poly(&mixed_char_poly(t)?, char_poly_vars(n));
        let ascending: Vec<usize> = (0..n).collect();
        let value = bapat_roy_value(&f, t, &ascending)?;
        let mut r = base.clone().count("monomials", f.len() as u64).expect_zero(&value);
        if let Some(order) = alt_order {
            let alt = bapat_roy_value(&f, t, order)?;
            r.data = Some(json!({
                "alternate_order": order.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "alternate_is_zero": alt.is_zero(),
                "alternate_matches_ascending": alt == value,
                "symmetrized_is_zero": bapat_roy_symmetrized(&f, t)?.is_zero(),
            }));
        }
        Ok(r)
    })();
    finish(r, base, start)
}

/// `p^(B_{i,j}) = 0` for a two-index family.
pub fn verify_mixed_theorem(f: &MixedConstraintFamily) -> VerificationReport {
    let start = Instant::now();
    let (n, k) = (f.n(), f.k());
    let base = VerificationReport::new("mixed_theorem", size_params(n, k));
    let r = (|| {
        f.validate()?;
        let p = mixed_x_poly(f.a())?;
        // one variable per row in every monomial; ascending index order is then row order
        if let Some((e, _)) = p.terms().find(|(e, _)| e.chunks(k).any(|row| row.iter().sum::<u32>() != 1)) {
            return Ok(base.clone().fail(json!({ "non_multilinear_monomial": e })));
        }
        let flat: Vec<RingMatrix> = f.b().iter().flatten().cloned().collect();
        let value = p.evaluate(&flat)?;
        let mut r = base.clone().count("monomials", p.len() as u64).expect_zero(&value);
        if f.is_degenerate() {
            r = r.param("degenerate", true);
        }
        Ok(r)
    })();
    finish(r, base, start)
}

/// A uniformly chosen permutation of `0..n` from a `below(m)` source.
pub fn shuffled_order(n: usize, mut below: impl FnMut(u64) -> u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = below(i as u64 + 1) as usize;
        p.swap(i, j);
    }
    debug_assert!(perm::is_permutation(&p));
    p
}
