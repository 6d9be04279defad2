//! Square matrices over the polynomial ring.
//!
//! Indices are 0-based throughout the library; 1-based indices only appear
//! at the CLI and in serialized objects.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::parse::parse_entry;
use super::poly::{Poly, Var};
use crate::error::{Error, Result};
use crate::perm;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixFile", into = "MatrixFile")]
pub struct RingMatrix {
    n: usize,
    entries: Vec<Poly>,
}

/// On-disk form: `{ "n": 2, "entries": [["a", "b"], ["c", "d"]] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl TryFrom<MatrixFile> for RingMatrix {
    type Error = Error;

    fn try_from(f: MatrixFile) -> Result<RingMatrix> {
        if f.entries.len() != f.n {
            return Err(Error::Dimension(format!(
                "declared n = {} but {} rows given",
                f.n,
                f.entries.len()
            )));
        }
        let rows = f
            .entries
            .iter()
            .map(|row| row.iter().map(|s| parse_entry(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RingMatrix::from_rows(rows)
    }
}

impl From<RingMatrix> for MatrixFile {
    fn from(m: RingMatrix) -> MatrixFile {
        MatrixFile {
            n: m.n,
            entries: (0..m.n)
                .map(|i| (0..m.n).map(|j| m[(i, j)].to_string()).collect())
                .collect(),
        }
    }
}

impl RingMatrix {
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<RingMatrix> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Dimension("matrix dimension must be at least 1".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension(format!("row of length {} in a {n}x{n} matrix", bad.len())));
        }
        Ok(RingMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Poly>(n: usize, mut f: F) -> RingMatrix {
        assert!(n >= 1, "matrix dimension must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RingMatrix { n, entries }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<RingMatrix> {
        RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Poly::int(x)).collect()).collect())
    }

    /// Parses a matrix from rows of entry expressions.
    pub fn parse(rows: &[&[&str]]) -> Result<RingMatrix> {
        RingMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_entry(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// A matrix of distinct indeterminates `{prefix}{i}{j}` (1-based, with an
    /// underscore separator when `n > 9`).
    pub fn generic(prefix: &str, n: usize) -> RingMatrix {
        RingMatrix::from_fn(n, |i, j| {
            if n > 9 {
                Poly::var(&format!("{prefix}{}_{}", i + 1, j + 1))
            } else {
                Poly::var(&format!("{prefix}{}{}", i + 1, j + 1))
            }
        })
    }

    pub fn zero(n: usize) -> RingMatrix {
        RingMatrix::from_fn(n, |_, _| Poly::zero())
    }

    pub fn identity(n: usize) -> RingMatrix {
        RingMatrix::scalar(n, Poly::one())
    }

    pub fn scalar(n: usize, c: Poly) -> RingMatrix {
        RingMatrix::from_fn(n, |i, j| if i == j { c.clone() } else { Poly::zero() })
    }

    pub fn diag(d: Vec<Poly>) -> RingMatrix {
        RingMatrix::from_fn(d.len(), |i, j| if i == j { d[i].clone() } else { Poly::zero() })
    }

    /// The unit matrix with a single 1 at `(i, j)`.
    pub fn elementary(n: usize, i: usize, j: usize) -> RingMatrix {
        RingMatrix::from_fn(n, |r, c| if (r, c) == (i, j) { Poly::one() } else { Poly::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Poly> {
        (i < self.n && j < self.n).then(|| &self.entries[i * self.n + j])
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        let n = self.n;
        self.entries[i * n + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Poly)> {
        let n = self.n;
        self.entries.iter().enumerate().map(move |(k, p)| ((k / n, k % n), p))
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.n).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<((usize, usize), &Poly)> {
        self.entries().find(|(_, p)| !p.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(Poly::is_constant)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.entries.iter().flat_map(|p| p.vars()).collect()
    }

    pub fn transpose(&self) -> RingMatrix {
        RingMatrix::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn map<F: Fn(&Poly) -> Poly>(&self, f: F) -> RingMatrix {
        RingMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    fn check_same(&self, other: &RingMatrix, op: &str) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Dimension(format!("{op} of {}x{} and {}x{}", self.n, self.n, other.n, other.n)))
        }
    }

    pub fn checked_add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same(other, "sum")?;
        Ok(RingMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same(other, "difference")?;
        Ok(RingMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same(other, "product")?;
        let n = self.n;
        Ok(RingMatrix::from_fn(n, |i, j| {
            let mut acc = Poly::zero();
            for r in 0..n {
                let (a, b) = (&self[(i, r)], &other[(r, j)]);
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        }))
    }

    pub fn scale(&self, c: &Poly) -> RingMatrix {
        self.map(|p| c * p)
    }

    pub fn pow(&self, e: u32) -> RingMatrix {
        let mut acc = RingMatrix::identity(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn commutes_with(&self, other: &RingMatrix) -> bool {
        self.n == other.n && &(self * other) == &(other * self)
    }

    /// Determinant. Constant matrices and matrices larger than 5x5 go through
    /// fraction-free elimination; small symbolic ones through the permutation
    /// expansion.
    pub fn det(&self) -> Poly {
        if self.is_constant() || self.n > 5 {
            self.det_bareiss()
        } else {
            self.det_expansion()
        }
    }

    /// `sum over sigma of sgn(sigma) * prod_i m[i, sigma_i]`.
    pub fn det_expansion(&self) -> Poly {
        let mut acc = Poly::zero();
        for p in perm::permutations(self.n) {
            if let Some(t) = self.diagonal_product(&p) {
                if perm::sign(&p) > 0 {
                    acc += &t;
                } else {
                    acc -= &t;
                }
            }
        }
        acc
    }

    /// Bareiss fraction-free elimination; every division is exact.
    pub fn det_bareiss(&self) -> Poly {
        let n = self.n;
        let mut m: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|j| self[(i, j)].clone()).collect()).collect();
        let mut negate = false;
        let mut prev = Poly::one();
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Poly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss step must divide exactly");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    pub fn permanent(&self) -> Poly {
        let mut acc = Poly::zero();
        for p in perm::permutations(self.n) {
            if let Some(t) = self.diagonal_product(&p) {
                acc += &t;
            }
        }
        acc
    }

    /// `prod_i m[i, p_i]`, or `None` when a factor vanishes.
    fn diagonal_product(&self, p: &[usize]) -> Option<Poly> {
        let mut t = Poly::one();
        for (i, &j) in p.iter().enumerate() {
            let e = &self[(i, j)];
            if e.is_zero() {
                return None;
            }
            t = &t * e;
        }
        Some(t)
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Result<RingMatrix> {
        if self.n < 2 {
            return Err(Error::Dimension("minor of a 1x1 matrix".into()));
        }
        if i >= self.n || j >= self.n {
            return Err(Error::IndexOutOfRange(format!("({i}, {j}) in a {0}x{0} matrix", self.n)));
        }
        let keep = |x: usize, skip: usize| (0..self.n).filter(move |&y| y != skip).nth(x).unwrap();
        Ok(RingMatrix::from_fn(self.n - 1, |r, c| self[(keep(r, i), keep(c, j))].clone()))
    }
}

impl std::ops::Index<(usize, usize)> for RingMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range");
        &self.entries[i * self.n + j]
    }
}

impl Add for &RingMatrix {
    type Output = RingMatrix;
    fn add(self, rhs: &RingMatrix) -> RingMatrix {
        self.checked_add(rhs).unwrap()
    }
}

impl Sub for &RingMatrix {
    type Output = RingMatrix;
    fn sub(self, rhs: &RingMatrix) -> RingMatrix {
        self.checked_sub(rhs).unwrap()
    }
}

impl Mul for &RingMatrix {
    type Output = RingMatrix;
    fn mul(self, rhs: &RingMatrix) -> RingMatrix {
        self.checked_mul(rhs).unwrap()
    }
}

impl Neg for &RingMatrix {
    type Output = RingMatrix;
    fn neg(self) -> RingMatrix {
        self.map(|p| -p)
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let a = RingMatrix::generic("a", 3);
        assert_eq!(&RingMatrix::identity(3) * &a, a);
        assert_eq!(&a * &RingMatrix::identity(3), a);
    }

    #[test]
    fn elementary_products() {
        let e12 = RingMatrix::elementary(2, 0, 1);
        let e21 = RingMatrix::elementary(2, 1, 0);
        assert_eq!(&e12 * &e21, RingMatrix::elementary(2, 0, 0));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = RingMatrix::identity(2);
        let b = RingMatrix::identity(3);
        assert!(matches!(a.checked_mul(&b), Err(Error::Dimension(_))));
        assert!(matches!(a.checked_add(&b), Err(Error::Dimension(_))));
        assert!(RingMatrix::from_rows(vec![vec![Poly::one(), Poly::one()]]).is_err());
    }

    #[test]
    fn small_determinants() {
        for n in 1..=5 {
            assert!(RingMatrix::identity(n).det().is_one());
            assert!(RingMatrix::identity(n).permanent().is_one());
        }
        let m = RingMatrix::parse(&[&["a", "b"], &["c", "d"]]).unwrap();
        assert_eq!(m.det().to_string(), "a*d - b*c");
        assert_eq!(m.det_bareiss(), m.det_expansion());
        let one = RingMatrix::parse(&[&["7*z"]]).unwrap();
        assert_eq!(one.det(), one[(0, 0)]);
        assert_eq!(one.permanent(), one[(0, 0)]);
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let m = RingMatrix::from_ints(&[&[0, 1, 2], &[3, 0, 1], &[4, 5, 0]]).unwrap();
        assert_eq!(m.det_bareiss(), m.det_expansion());
        let sing = RingMatrix::from_ints(&[&[0, 1], &[0, 2]]).unwrap();
        assert!(sing.det_bareiss().is_zero());
        let sym = RingMatrix::parse(&[&["0", "x", "1"], &["y", "0", "x"], &["1", "y", "0"]]).unwrap();
        assert_eq!(sym.det_bareiss(), sym.det_expansion());
    }

    #[test]
    fn permanent_of_all_ones() {
        let j = RingMatrix::from_fn(3, |_, _| Poly::one());
        assert_eq!(j.permanent(), Poly::int(6));
    }

    #[test]
    fn minors() {
        assert_eq!(RingMatrix::identity(3).minor(1, 1).unwrap(), RingMatrix::identity(2));
        let m = RingMatrix::parse(&[&["a", "b"], &["c", "d"]]).unwrap();
        assert_eq!(m.minor(0, 0).unwrap(), RingMatrix::parse(&[&["d"]]).unwrap());
        assert!(matches!(m.minor(2, 0), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(RingMatrix::identity(1).minor(0, 0), Err(Error::Dimension(_))));
    }

    #[test]
    fn json_round_trip() {
        let m = RingMatrix::parse(&[&["2*a11 - 3/2", "0"], &["x^2", "-y"]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"n":2,"entries":[["2*a11 - 3/2","0"],["x^2","-y"]]}"#);
        let back: RingMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<RingMatrix>(r#"{"n":3,"entries":[["1"]]}"#).is_err());
        assert!(serde_json::from_str::<RingMatrix>(r#"{"n":1,"entries":[["1+"]]}"#).is_err());
    }
}
