//! Polynomials in dedicated `x` indeterminates with coefficients in the
//! entry ring, and their evaluation at matrices.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Poly, RingMatrix, Var};
use crate::error::{Error, Result};
use crate::mixed::{mixed_discriminant, MatrixTuple};

/// `sum_a c_a x^a` with `c_a` polynomials in the entry indeterminates.
/// Exponent vectors are indexed like [`XPolynomial::xs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPolynomial {
    xs: Vec<Var>,
    terms: BTreeMap<Vec<u32>, Poly>,
}

impl XPolynomial {
    /// Splits `p` by the variables `xs`.
    pub fn from_poly(p: &Poly, xs: Vec<Var>) -> XPolynomial {
        let index: HashMap<Var, usize> = xs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut terms = BTreeMap::new();
        for (m, c) in p.split_by(|v| index.contains_key(&v)) {
            let mut exps = vec![0u32; xs.len()];
            for &(v, e) in m.factors() {
                exps[index[&v]] = e;
            }
            if !c.is_zero() {
                terms.insert(exps, c);
            }
        }
        XPolynomial { xs, terms }
    }

    pub fn xs(&self) -> &[Var] {
        &self.xs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Poly)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Poly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// `Some(d)` when every term has total `x`-degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn to_poly(&self) -> Poly {
        let mut acc = Poly::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (&v, &k) in self.xs.iter().zip(e) {
                if k > 0 {
                    t = &t * &Poly::var(&v.name()).pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Evaluates at `mats` (one per `x`), multiplying the powers of each
    /// monomial in the order given by `order`. No commutation is assumed.
    pub fn evaluate_ordered(&self, mats: &[RingMatrix], order: &[usize]) -> Result<RingMatrix> {
        if mats.len() != self.xs.len() {
            return Err(Error::Dimension(format!("{} indeterminates but {} matrices", self.xs.len(), mats.len())));
        }
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (0..mats.len()).collect::<Vec<_>>() {
            return Err(Error::NotAPermutation(order.to_vec()));
        }
        let n = mats.first().map(|m| m.n()).unwrap_or(1);
        if mats.iter().any(|m| m.n() != n) {
            return Err(Error::Dimension("evaluation matrices differ in size".into()));
        }
        let mut powers: HashMap<(usize, u32), RingMatrix> = HashMap::new();
        let mut acc = RingMatrix::zero(n);
        for (e, c) in &self.terms {
            let mut prod: Option<RingMatrix> = None;
            for &i in order {
                if e[i] == 0 {
                    continue;
                }
                let p = powers.entry((i, e[i])).or_insert_with(|| mats[i].pow(e[i]));
                prod = Some(match prod {
                    None => p.clone(),
                    Some(q) => &q * p,
                });
            }
            let term = match prod {
                None => RingMatrix::scalar(n, c.clone()),
                Some(m) => m.scale(c),
            };
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Evaluation in ascending index order.
    pub fn evaluate(&self, mats: &[RingMatrix]) -> Result<RingMatrix> {
        let order: Vec<usize> = (0..mats.len()).collect();
        self.evaluate_ordered(mats, &order)
    }
}

fn check_collision(mats: &[&RingMatrix], xs: &[Var]) -> Result<()> {
    for m in mats {
        if let Some(v) = m.vars().into_iter().find(|v| xs.contains(v)) {
            return Err(Error::NameCollision(v.name().to_string()));
        }
    }
    Ok(())
}

/// `x_1..x_k`.
pub fn phillips_vars(k: usize) -> Vec<Var> {
    (1..=k).map(|i| Var::new(&format!("x_{i}"))).collect()
}

/// `x_{i,j}` named `x_i_j`, row-major.
pub fn mixed_vars(n: usize, k: usize) -> Vec<Var> {
    (1..=n)
        .flat_map(|i| (1..=k).map(move |j| Var::new(&format!("x_{i}_{j}"))))
        .collect()
}

/// `p(x_1..x_k) = det(A_1 x_1 + ... + A_k x_k)`.
pub fn multivar_char_poly(a: &[RingMatrix]) -> Result<XPolynomial> {
    let n = a.first().ok_or_else(|| Error::Dimension("no matrices".into()))?.n();
    if let Some(m) = a.iter().find(|m| m.n() != n) {
        return Err(Error::Dimension(format!("mixes {n}x{n} and {0}x{0} matrices", m.n())));
    }
    let xs = phillips_vars(a.len());
    check_collision(&a.iter().collect::<Vec<_>>(), &xs)?;
    let mut m = RingMatrix::zero(n);
    for (ai, x) in a.iter().zip(&xs) {
        m = &m + &ai.scale(&Poly::var(&x.name()));
    }
    Ok(XPolynomial::from_poly(&m.det(), xs))
}

/// `p^(x_{i,j}) = D(sum_j A_{1,j} x_{1,j}, ..., sum_j A_{n,j} x_{n,j})`.
pub fn mixed_x_poly(a: &[Vec<RingMatrix>]) -> Result<XPolynomial> {
    let n = a.len();
    let k = a.first().map(|r| r.len()).unwrap_or(0);
    if n == 0 || k == 0 || a.iter().any(|r| r.len() != k) {
        return Err(Error::Dimension("need n rows of k matrices".into()));
    }
    let xs = mixed_vars(n, k);
    check_collision(&a.iter().flatten().collect::<Vec<_>>(), &xs)?;
    let mut rows = Vec::with_capacity(n);
    for (i, row) in a.iter().enumerate() {
        let mut m = RingMatrix::zero(n);
        for (j, aij) in row.iter().enumerate() {
            if aij.n() != n {
                return Err(Error::Dimension(format!("A_{},{} is {1}x{1}, expected {n}x{n}", i + 1, aij.n())));
            }
            m = &m + &aij.scale(&Poly::var(&xs[i * k + j].name()));
        }
        rows.push(m);
    }
    Ok(XPolynomial::from_poly(&mixed_discriminant(&MatrixTuple::new(rows)?), xs))
}

/// Substitutes `x_i -> B_i` after checking that the `B`s commute pairwise.
pub fn substitute_commuting(p: &XPolynomial, b: &[RingMatrix]) -> Result<RingMatrix> {
    super::family::check_commuting(b, "B")?;
    p.evaluate(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_matrix_gives_scaled_power() {
        let a = RingMatrix::generic("a", 2);
        let p = multivar_char_poly(&[a.clone()]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&[2]), a.det());
    }

    #[test]
    fn diagonal_pencil() {
        let d = RingMatrix::diag(vec![Poly::var("a"), Poly::var("b")]);
        let p = multivar_char_poly(&[RingMatrix::identity(2), d]).unwrap();
        assert_eq!(p.to_poly(), "x_1^2 + (a+b)*x_1*x_2 + a*b*x_2^2".parse().unwrap());
        assert_eq!(p.homogeneous_degree(), Some(2));
    }

    #[test]
    fn evaluation_of_linear_and_product_terms() {
        let b1 = RingMatrix::generic("b", 2);
        let x1 = XPolynomial::from_poly(&Poly::var("x_1"), phillips_vars(1));
        assert_eq!(substitute_commuting(&x1, &[b1.clone()]).unwrap(), b1);

        let c = RingMatrix::from_ints(&[&[1, 2], &[0, 3]]).unwrap();
        let c2 = &c * &c;
        let x12 = XPolynomial::from_poly(&"x_1*x_2".parse().unwrap(), phillips_vars(2));
        assert_eq!(substitute_commuting(&x12, &[c.clone(), c2.clone()]).unwrap(), &c2 * &c);

        let e = RingMatrix::elementary(2, 0, 1);
        assert!(matches!(
            substitute_commuting(&x12, &[e.clone(), e.transpose()]),
            Err(Error::NotCommuting(..))
        ));
    }

    #[test]
    fn constants_become_scalar_matrices() {
        let p = XPolynomial::from_poly(&"3 + x_1".parse().unwrap(), phillips_vars(1));
        let m = RingMatrix::from_ints(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(p.evaluate(&[m]).unwrap(), RingMatrix::from_ints(&[&[4, 1], &[0, 4]]).unwrap());
    }

    #[test]
    fn collision_is_reported() {
        let a = RingMatrix::parse(&[&["x_1"]]).unwrap();
        assert!(matches!(multivar_char_poly(&[a]), Err(Error::NameCollision(_))));
    }

    #[test]
    fn mixed_poly_is_multilinear_by_row() {
        let a = vec![
            vec![RingMatrix::generic("a", 2), RingMatrix::generic("c", 2)],
            vec![RingMatrix::generic("d", 2), RingMatrix::generic("f", 2)],
        ];
        let p = mixed_x_poly(&a).unwrap();
        for (e, _) in p.terms() {
            assert_eq!(e[0] + e[1], 1);
            assert_eq!(e[2] + e[3], 1);
        }
    }
}
