//! Sparse multivariate polynomials over the rationals.
//!
//! Indeterminates are interned once per process. Internally a monomial keeps
//! its factors sorted by interned id, which is canonical for the lifetime of
//! the process and makes equality a direct structural comparison. Anything
//! user-visible (printing, serialization) re-sorts by indeterminate *name* so
//! the text form does not depend on the order in which names were first seen.

use std::borrow::Borrow;
use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

pub use num_rational::BigRational as Rational;

#[derive(Default)]
struct Interner {
    names: Vec<Arc<str>>,
    ids: HashMap<Arc<str>, u32>,
}

static INTERNER: Lazy<RwLock<Interner>> = Lazy::new(|| RwLock::new(Interner::default()));

/// An interned indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

impl Var {
    pub fn new(name: &str) -> Var {
        if let Some(&id) = INTERNER.read().unwrap().ids.get(name) {
            return Var(id);
        }
        let mut guard = INTERNER.write().unwrap();
        if let Some(&id) = guard.ids.get(name) {
            return Var(id);
        }
        let id = guard.names.len() as u32;
        let name: Arc<str> = Arc::from(name);
        guard.names.push(name.clone());
        guard.ids.insert(name, id);
        Var(id)
    }

    pub fn name(self) -> Arc<str> {
        INTERNER.read().unwrap().names[self.0 as usize].clone()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A power product of indeterminates. Exponents are always positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(var, exponent)` pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut d = 0;
            if j < other.0.len() && other.0[j].0 == v {
                d = other.0[j].1;
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if d > e {
                return None;
            }
            if e > d {
                out.push((v, e - d));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Graded lexicographic comparison on interned ids. This is a monomial
    /// order (compatible with multiplication), which exact division needs.
    fn grlex_by_id(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for (x, y) in self.0.iter().zip(&other.0) {
                    if x.0 != y.0 {
                        // The monomial carrying the smaller variable is larger.
                        return y.0.cmp(&x.0);
                    }
                    if x.1 != y.1 {
                        return x.1.cmp(&y.1);
                    }
                }
                self.0.len().cmp(&other.0.len())
            })
    }

    fn print_key(&self) -> (Reverse<u32>, Vec<(Arc<str>, Reverse<u32>)>) {
        let mut named: Vec<(Arc<str>, Reverse<u32>)> =
            self.0.iter().map(|&(v, e)| (v.name(), Reverse(e))).collect();
        named.sort();
        (Reverse(self.total_degree()), named)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut named: Vec<(Arc<str>, u32)> = self.0.iter().map(|&(v, e)| (v.name(), e)).collect();
        named.sort();
        for (i, (name, e)) in named.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(name)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact rational coefficients. No zero coefficient is
/// ever stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::term(Monomial::one(), c)
    }

    pub fn int(c: i64) -> Poly {
        Poly::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn frac(num: i64, den: i64) -> Poly {
        Poly::constant(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn var(name: &str) -> Poly {
        Poly::term(Monomial::var(Var::new(name)), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .get(&Monomial::one())
                .cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| a.0.grlex_by_id(b.0))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(&lm)?;
            let c = rc / &lc;
            rem -= &d.mul_monomial(&m, &c);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Splits every monomial into the part made of variables selected by
    /// `pred` and the rest, grouping by the selected part.
    pub fn split_by<F: Fn(Var) -> bool>(&self, pred: F) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (sel, rest): (Vec<_>, Vec<_>) = m.factors().iter().partition(|&&(v, _)| pred(v));
            out.entry(Monomial(sel))
                .or_default()
                .add_term(Monomial(rest), c.clone());
        }
        out
    }

    /// Replaces each variable found in `map` by the given polynomial.
    pub fn substitute(&self, map: &HashMap<Var, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            let mut kept = Vec::new();
            for &(v, e) in m.factors() {
                match map.get(&v) {
                    Some(p) => t = &t * &p.pow(e),
                    None => kept.push((v, e)),
                }
            }
            out += &t.mul_monomial(&Monomial(kept), &Rational::one());
        }
        out
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Poly {
        Poly::int(c)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Poly {
        Poly::constant(c)
    }
}

impl<B: Borrow<Poly>> AddAssign<B> for Poly {
    fn add_assign(&mut self, rhs: B) {
        for (m, c) in &rhs.borrow().terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<B: Borrow<Poly>> SubAssign<B> for Poly {
    fn sub_assign(&mut self, rhs: B) {
        for (m, c) in &rhs.borrow().terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Formats an exact rational as `p` or `p/q`.
pub fn rational_to_string(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().map(|(m, c)| (m.print_key(), m, c)).collect();
        ordered.sort_by(|a, b| a.0.cmp(&b.0));
        for (i, (_, m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write_rational(f, &a)?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write_rational(f, &a)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}
