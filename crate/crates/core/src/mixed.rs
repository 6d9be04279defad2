//! Mixed discriminants.
//!
//! For an n-tuple of n x n matrices the mixed discriminant is the average,
//! over all assignments of the n matrices to the n columns, of the
//! determinant of the matrix assembled column by column. It equals `det(B)`
//! when every argument is `B`, and the permanent of the coefficient array
//! when every argument is diagonal.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, Rational, RingMatrix, Var};
use crate::error::{Error, Result};
use crate::perm;

/// An n-tuple of n x n matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TupleFile", into = "TupleFile")]
pub struct MatrixTuple {
    mats: Vec<RingMatrix>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TupleFile {
    pub n: usize,
    pub mats: Vec<RingMatrix>,
}

impl TryFrom<TupleFile> for MatrixTuple {
    type Error = Error;
    fn try_from(f: TupleFile) -> Result<MatrixTuple> {
        let t = MatrixTuple::new(f.mats)?;
        if t.n() != f.n {
            return Err(Error::Dimension(format!("declared n = {} but tuple has dimension {}", f.n, t.n())));
        }
        Ok(t)
    }
}

impl From<MatrixTuple> for TupleFile {
    fn from(t: MatrixTuple) -> TupleFile {
        TupleFile { n: t.n(), mats: t.mats }
    }
}

impl MatrixTuple {
    pub fn new(mats: Vec<RingMatrix>) -> Result<MatrixTuple> {
        let n = mats.len();
        if n == 0 {
            return Err(Error::Dimension("empty matrix tuple".into()));
        }
        if let Some(m) = mats.iter().find(|m| m.n() != n) {
            return Err(Error::Dimension(format!(
                "tuple of length {n} holds a {0}x{0} matrix",
                m.n()
            )));
        }
        Ok(MatrixTuple { mats })
    }

    pub fn n(&self) -> usize {
        self.mats.len()
    }

    pub fn mats(&self) -> &[RingMatrix] {
        &self.mats
    }

    pub fn into_mats(self) -> Vec<RingMatrix> {
        self.mats
    }
}

/// The matrix whose column `i` is column `i` of `t[alpha[i]]`.
pub fn column_mix(t: &MatrixTuple, alpha: &[usize]) -> Result<RingMatrix> {
    if alpha.len() != t.n() {
        return Err(Error::NotAPermutation(alpha.to_vec()));
    }
    perm::check_permutation(alpha)?;
    Ok(RingMatrix::from_fn(t.n(), |i, j| t.mats[alpha[j]][(i, j)].clone()))
}

/// `n! * D(t)`: the plain sum of the column-mixed determinants.
pub fn mixed_discriminant_scaled(t: &MatrixTuple) -> Poly {
    let mut acc = Poly::zero();
    for alpha in perm::permutations(t.n()) {
        let m = column_mix(t, &alpha).expect("enumerated alpha is a permutation");
        acc += &m.det();
    }
    acc
}

pub fn mixed_discriminant(t: &MatrixTuple) -> Poly {
    let nf = BigInt::from(perm::factorial(t.n()));
    mixed_discriminant_scaled(t).scale(&Rational::new(BigInt::from(1), nf))
}

/// Names of the indeterminates of the mixed characteristic polynomial.
pub fn char_poly_vars(n: usize) -> Vec<Var> {
    (1..=n).map(|i| Var::new(&format!("x_{i}"))).collect()
}

/// `D(x_1 I - A_1, ..., x_n I - A_n)` in the indeterminates `x_1..x_n`.
pub fn mixed_char_poly(t: &MatrixTuple) -> Result<Poly> {
    let xs = char_poly_vars(t.n());
    for m in &t.mats {
        if let Some(v) = m.vars().into_iter().find(|v| xs.contains(v)) {
            return Err(Error::NameCollision(v.name().to_string()));
        }
    }
    let shifted = t
        .mats
        .iter()
        .zip(&xs)
        .map(|(a, x)| {
            let xi = RingMatrix::scalar(a.n(), Poly::var(&x.name()));
            &xi - a
        })
        .collect();
    Ok(mixed_discriminant(&MatrixTuple::new(shifted)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn ints(rows: &[&[i64]]) -> RingMatrix {
        RingMatrix::from_ints(rows).unwrap()
    }

    #[test]
    fn column_mix_reads_columns() {
        let a = RingMatrix::generic("a", 2);
        let b = RingMatrix::generic("b", 2);
        let t = MatrixTuple::new(vec![a.clone(), b.clone()]).unwrap();
        let same = MatrixTuple::new(vec![b.clone(), b.clone()]).unwrap();
        assert_eq!(column_mix(&same, &[0, 1]).unwrap(), b);
        let swapped = column_mix(&t, &[1, 0]).unwrap();
        assert_eq!(swapped.column(0), b.column(0));
        assert_eq!(swapped.column(1), a.column(1));
        assert!(matches!(column_mix(&t, &[0, 0]), Err(Error::NotAPermutation(_))));
        assert!(column_mix(&t, &[0]).is_err());
    }

    #[test]
    fn worked_two_by_two_value() {
        // alpha = id: det [[1,1],[3,0]] = -3; alpha = (12): det [[0,2],[1,4]] = -2.
        let t = MatrixTuple::new(vec![ints(&[&[1, 2], &[3, 4]]), ints(&[&[0, 1], &[1, 0]])]).unwrap();
        assert_eq!(mixed_discriminant(&t), Poly::frac(-5, 2));
        assert_eq!(mixed_discriminant_scaled(&t), Poly::int(-5));
    }

    #[test]
    fn char_poly_small_cases() {
        let t = MatrixTuple::new(vec![RingMatrix::parse(&[&["a"]]).unwrap()]).unwrap();
        assert_eq!(mixed_char_poly(&t).unwrap(), "x_1 - a".parse().unwrap());

        let z = MatrixTuple::new(vec![RingMatrix::zero(3); 3]).unwrap();
        assert_eq!(mixed_char_poly(&z).unwrap(), "x_1*x_2*x_3".parse().unwrap());
    }

    #[test]
    fn char_poly_is_monic_multilinear() {
        let t = MatrixTuple::new(vec![
            ints(&[&[1, -2, 0], &[3, 1, 4], &[0, 2, 2]]),
            ints(&[&[0, 1, 5], &[-1, 0, 2], &[2, 2, -3]]),
            ints(&[&[4, 0, 1], &[1, 1, 1], &[-2, 3, 0]]),
        ])
        .unwrap();
        let f = mixed_char_poly(&t).unwrap();
        let xs = char_poly_vars(3);
        let lead = Monomial::from_pairs(xs.iter().map(|&v| (v, 1)));
        assert!(f.coeff(&lead) == Rational::from_integer(1.into()));
        for &x in &xs {
            assert_eq!(f.degree_in(x), 1);
        }
    }

    #[test]
    fn name_collision() {
        let t = MatrixTuple::new(vec![RingMatrix::parse(&[&["x_1"]]).unwrap()]).unwrap();
        assert!(matches!(mixed_char_poly(&t), Err(Error::NameCollision(_))));
    }

    #[test]
    fn tuple_file_validation() {
        let ok = r#"{"n":1,"mats":[{"n":1,"entries":[["3"]]}]}"#;
        let t: MatrixTuple = serde_json::from_str(ok).unwrap();
        assert_eq!(t.n(), 1);
        let bad = r#"{"n":2,"mats":[{"n":1,"entries":[["3"]]}]}"#;
        assert!(serde_json::from_str::<MatrixTuple>(bad).is_err());
        assert!(MatrixTuple::new(vec![RingMatrix::identity(2)]).is_err());
    }
}
