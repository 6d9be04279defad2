//! Signed-weight sums over `A`, `H` and `G`, the entry identity linking the
//! `A`-sum to the substituted polynomial, and the termwise involution check.

use std::time::Instant;

use num_bigint::BigInt;
use serde_json::json;

use super::family::{check_commuting, ConstraintFamily, MixedConstraintFamily};
use super::report::{finish, params, VerificationReport};
use super::xpoly::{mixed_x_poly, multivar_char_poly};
use crate::algebra::{Poly, Rational, RingMatrix};
use crate::error::{Error, Result};
use crate::objects::{
    involution_f, pathmap_sign, pathmaps_g, pathmaps_h, pathmutations, Cardinalities, Label, LabelIndex, Pathmap,
    TwoLabel,
};
use crate::perm;

fn check_pair(n: usize, b: usize, e: usize) -> Result<()> {
    if b >= n || e >= n {
        return Err(Error::IndexOutOfRange(format!("(b, e) = ({}, {}) with n = {n}", b + 1, e + 1)));
    }
    Ok(())
}

fn signed(p: Poly, sign: i64) -> Poly {
    if sign < 0 {
        -p
    } else {
        p
    }
}

/// `(sum, count)` of signed weights over a pathmap stream.
pub fn signed_sum<L, I, SA, SB>(items: I, a: &SA, b: &SB) -> Result<(Poly, u64)>
where
    L: Label,
    I: IntoIterator<Item = Pathmap<L>>,
    SA: LabelIndex<L> + ?Sized,
    SB: LabelIndex<L> + ?Sized,
{
    let mut acc = Poly::zero();
    let mut count = 0u64;
    for x in items {
        count += 1;
        let w = x.wgt(a, b)?;
        if !w.is_zero() {
            acc += &signed(w, pathmap_sign(&x)?);
        }
    }
    Ok((acc, count))
}

/// Sum over `A(b, e)` using the pathmutation weights directly.
pub fn a_sum<L, SA, SB>(n: usize, k: usize, b: usize, e: usize, a: &SA, bm: &SB) -> Result<(Poly, u64)>
where
    L: Label,
    SA: LabelIndex<L> + ?Sized,
    SB: LabelIndex<L> + ?Sized,
{
    let mut acc = Poly::zero();
    let mut count = 0u64;
    for pm in pathmutations::<L>(n, k, b, e)? {
        count += 1;
        let w = pm.swgt(a, bm)?;
        if !w.is_zero() {
            acc += &w;
        }
    }
    Ok((acc, count))
}

pub fn g_sum<L, SA, SB>(n: usize, k: usize, b: usize, e: usize, a: &SA, bm: &SB) -> Result<(Poly, u64)>
where
    L: Label,
    SA: LabelIndex<L> + ?Sized,
    SB: LabelIndex<L> + ?Sized,
{
    signed_sum(pathmaps_g::<L>(n, k, b, e)?, a, bm)
}

pub fn h_sum<L, SA, SB>(n: usize, k: usize, b: usize, e: usize, a: &SA, bm: &SB) -> Result<(Poly, u64)>
where
    L: Label,
    SA: LabelIndex<L> + ?Sized,
    SB: LabelIndex<L> + ?Sized,
{
    signed_sum(pathmaps_h::<L>(n, k, b, e)?, a, bm)
}

pub fn lemma_g_sum(f: &ConstraintFamily, b: usize, e: usize) -> Result<Poly> {
    check_pair(f.n(), b, e)?;
    Ok(g_sum::<usize, _, _>(f.n(), f.k(), b, e, f.a(), f.b())?.0)
}

pub fn lemma_h_sum(f: &ConstraintFamily, b: usize, e: usize) -> Result<Poly> {
    check_pair(f.n(), b, e)?;
    Ok(h_sum::<usize, _, _>(f.n(), f.k(), b, e, f.a(), f.b())?.0)
}

pub fn lemma_g2_sum(f: &MixedConstraintFamily, b: usize, e: usize) -> Result<Poly> {
    check_pair(f.n(), b, e)?;
    Ok(g_sum::<TwoLabel, _, _>(f.n(), f.k(), b, e, f.a(), f.b())?.0)
}

pub fn lemma_h2_sum(f: &MixedConstraintFamily, b: usize, e: usize) -> Result<Poly> {
    check_pair(f.n(), b, e)?;
    Ok(h_sum::<TwoLabel, _, _>(f.n(), f.k(), b, e, f.a(), f.b())?.0)
}

/// Termwise check of the involution on `H(b, e)`: `f(f(x)) = x`, `f(x) != x`,
/// `f(x)` stays in `H(b, e)`, equal weights and opposite signs.
/// Returns the number of elements checked.
pub fn check_involution<L, SA, SB>(n: usize, k: usize, b: usize, e: usize, a: &SA, bm: &SB) -> Result<std::result::Result<u64, serde_json::Value>>
where
    L: Label,
    SA: LabelIndex<L> + ?Sized,
    SB: LabelIndex<L> + ?Sized,
{
    let mut count = 0u64;
    for x in pathmaps_h::<L>(n, k, b, e)? {
        count += 1;
        let y = involution_f(&x)?;
        let problem = if y == x {
            Some("fixed point")
        } else if !y.in_h(b, e) {
            Some("image leaves H(b,e)")
        } else if involution_f(&y)? != x {
            Some("not an involution")
        } else if pathmap_sign(&y)? != -pathmap_sign(&x)? {
            Some("sign not reversed")
        } else if y.wgt(a, bm)? != x.wgt(a, bm)? {
            Some("weight not preserved")
        } else {
            None
        };
        if let Some(p) = problem {
            return Ok(Err(json!({ "problem": p, "object": x, "image": y })));
        }
    }
    Ok(Ok(count))
}

fn zero_check(r: VerificationReport, name: &str, p: &Poly) -> VerificationReport {
    if p.is_zero() || r.witness.is_some() {
        r
    } else {
        r.fail(json!({ "check": name, "value": p.to_string() }))
    }
}

fn equal_check(r: VerificationReport, name: &str, lhs: &Poly, rhs: &Poly) -> VerificationReport {
    if lhs == rhs || r.witness.is_some() {
        r
    } else {
        r.fail(json!({ "check": name, "lhs": lhs.to_string(), "rhs": rhs.to_string() }))
    }
}

fn be_params(n: usize, k: usize, b: usize, e: usize) -> serde_json::Map<String, serde_json::Value> {
    params([("n", n), ("k", k), ("b", b + 1), ("e", e + 1)])
}

/// `sum_A swgt = p(B)_{b,e}`; needs only commuting `B`s.
pub fn pathmutation_entry_identity(a: &[RingMatrix], bm: &[RingMatrix], b: usize, e: usize) -> VerificationReport {
    let start = Instant::now();
    let n = a.first().map(|m| m.n()).unwrap_or(0);
    let base = VerificationReport::new("pathmutation_entry_identity", be_params(n, a.len(), b, e));
    let r = (|| {
        check_pair(n, b, e)?;
        check_commuting(bm, "B")?;
        let p = multivar_char_poly(a)?;
        let rhs = p.evaluate(bm)?[(b, e)].clone();
        let (lhs, count) = a_sum::<usize, _, _>(n, a.len(), b, e, a, bm)?;
        Ok(equal_check(base.clone().count("A", count), "A-sum = p(B)[b,e]", &lhs, &rhs))
    })();
    finish(r, base, start)
}

/// `sum_{A^2} swgt = n! * p^(B)_{b,e}`; needs only the cross-row commutation.
pub fn pathmutation2_entry_identity(f: &MixedConstraintFamily, b: usize, e: usize) -> VerificationReport {
    let start = Instant::now();
    let (n, k) = (f.n(), f.k());
    let base = VerificationReport::new("pathmutation2_entry_identity", be_params(n, k, b, e));
    let r = (|| {
        check_pair(n, b, e)?;
        f.check_commuting()?;
        let (lhs, count) = a_sum::<TwoLabel, _, _>(n, k, b, e, f.a(), f.b())?;
        let rhs = scaled_mixed_entry(f, b, e)?;
        Ok(equal_check(base.clone().count("A2", count), "A2-sum = n! p^(B)[b,e]", &lhs, &rhs))
    })();
    finish(r, base, start)
}

/// `p^(B)_{b,e}` without the `1/n!` of the mixed discriminant.
fn scaled_mixed_entry(f: &MixedConstraintFamily, b: usize, e: usize) -> Result<Poly> {
    let flat: Vec<RingMatrix> = f.b().iter().flatten().cloned().collect();
    let v = mixed_x_poly(f.a())?.evaluate(&flat)?[(b, e)].clone();
    Ok(v.scale(&Rational::from_integer(BigInt::from(perm::factorial(f.n())))))
}

/// `p^(B)_{b,e}` itself.
pub fn mixed_entry(f: &MixedConstraintFamily, b: usize, e: usize) -> Result<Poly> {
    let flat: Vec<RingMatrix> = f.b().iter().flatten().cloned().collect();
    Ok(mixed_x_poly(f.a())?.evaluate(&flat)?[(b, e)].clone())
}

/// Every identity at one `(b, e)`: G-sum and H-sum vanish, the A-sum equals
/// `p(B)_{b,e}`, and the involution cancels `H(b, e)` termwise.
pub fn verify_lemmas(f: &ConstraintFamily, b: usize, e: usize) -> VerificationReport {
    let start = Instant::now();
    let (n, k) = (f.n(), f.k());
    let base = VerificationReport::new("lemmas", be_params(n, k, b, e));
    let r = (|| {
        check_pair(n, b, e)?;
        f.validate()?;
        let (g, gc) = g_sum::<usize, _, _>(n, k, b, e, f.a(), f.b())?;
        let (h, hc) = h_sum::<usize, _, _>(n, k, b, e, f.a(), f.b())?;
        let (a, ac) = a_sum::<usize, _, _>(n, k, b, e, f.a(), f.b())?;
        let p = multivar_char_poly(f.a())?.evaluate(f.b())?[(b, e)].clone();
        let mut r = base.clone().count("A", ac).count("H", hc).count("G", gc);
        r = cardinality_check(r, Cardinalities::of::<usize>(n, k), ac, hc, gc);
        r = zero_check(r, "G-sum", &g);
        r = zero_check(r, "H-sum", &h);
        r = equal_check(r, "A-sum = p(B)[b,e]", &a, &p);
        r = equal_check(r, "G-sum = A-sum + H-sum", &g, &(&a + &h));
        if r.witness.is_none() {
            if let Err(w) = check_involution::<usize, _, _>(n, k, b, e, f.a(), f.b())? {
                r = r.fail(w);
            }
        }
        Ok(r)
    })();
    finish(r, base, start)
}

/// Two-index version of [`verify_lemmas`]. The A^2-sum is compared with
/// `p^(B)_{b,e}` (both vanish under the hypotheses) and, with the `n!` of
/// the mixed discriminant restored, checked as an identity.
pub fn verify_lemmas2(f: &MixedConstraintFamily, b: usize, e: usize) -> VerificationReport {
    let start = Instant::now();
    let (n, k) = (f.n(), f.k());
    let base = VerificationReport::new("lemmas2", be_params(n, k, b, e));
    let r = (|| {
        check_pair(n, b, e)?;
        f.validate()?;
        let (g, gc) = g_sum::<TwoLabel, _, _>(n, k, b, e, f.a(), f.b())?;
        let (h, hc) = h_sum::<TwoLabel, _, _>(n, k, b, e, f.a(), f.b())?;
        let (a, ac) = a_sum::<TwoLabel, _, _>(n, k, b, e, f.a(), f.b())?;
        let p = mixed_entry(f, b, e)?;
        let scaled = scaled_mixed_entry(f, b, e)?;
        let mut r = base.clone().count("A2", ac).count("H2", hc).count("G2", gc);
        r = cardinality_check(r, Cardinalities::of::<TwoLabel>(n, k), ac, hc, gc);
        r = zero_check(r, "G2-sum", &g);
        r = zero_check(r, "H2-sum", &h);
        r = equal_check(r, "A2-sum = p^(B)[b,e]", &a, &p);
        r = equal_check(r, "A2-sum = n! p^(B)[b,e]", &a, &scaled);
        if r.witness.is_none() {
            if let Err(w) = check_involution::<TwoLabel, _, _>(n, k, b, e, f.a(), f.b())? {
                r = r.fail(w);
            }
        }
        Ok(r)
    })();
    finish(r, base, start)
}

fn cardinality_check(r: VerificationReport, c: Cardinalities, a: u64, h: u64, g: u64) -> VerificationReport {
    if (a, h, g) == (c.a, c.h, c.g) || r.witness.is_some() {
        r
    } else {
        r.fail(json!({ "check": "cardinalities", "enumerated": [a, h, g], "formula": [c.a, c.h, c.g] }))
    }
}
