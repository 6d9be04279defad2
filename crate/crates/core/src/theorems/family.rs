//! Families of matrices carrying the hypotheses of the theorems: pairwise
//! commuting `B`s and the linear constraint `sum_i A_i B_i = 0`, or its
//! row-wise version for the two-index families.

use serde::{Deserialize, Serialize};

use crate::algebra::RingMatrix;
use crate::error::{Error, Result};

fn check_square_family(mats: &[&RingMatrix], what: &str) -> Result<usize> {
    let n = mats.first().map(|m| m.n()).ok_or_else(|| Error::Dimension(format!("{what}: empty family")))?;
    if let Some(m) = mats.iter().find(|m| m.n() != n) {
        return Err(Error::Dimension(format!("{what}: mixes {n}x{n} and {0}x{0} matrices", m.n())));
    }
    Ok(n)
}

fn sum_of_products<'a, I>(pairs: I, n: usize) -> RingMatrix
where
    I: IntoIterator<Item = (&'a RingMatrix, &'a RingMatrix)>,
{
    let mut acc = RingMatrix::zero(n);
    for (a, b) in pairs {
        acc = &acc + &(a * b);
    }
    acc
}

/// Checks that `mats` commute pairwise; names are `{name}_{i}` (1-based).
pub fn check_commuting(mats: &[RingMatrix], name: &str) -> Result<()> {
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if !mats[i].commutes_with(&mats[j]) {
                return Err(Error::NotCommuting(format!("{name}_{}", i + 1), format!("{name}_{}", j + 1)));
            }
        }
    }
    Ok(())
}

/// `A_1..A_k`, `B_1..B_k` of a common size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConstraintFamilyFile", into = "ConstraintFamilyFile")]
pub struct ConstraintFamily {
    a: Vec<RingMatrix>,
    b: Vec<RingMatrix>,
    degenerate: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstraintFamilyFile {
    pub n: usize,
    pub k: usize,
    pub a: Vec<RingMatrix>,
    pub b: Vec<RingMatrix>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub degenerate: bool,
}

impl TryFrom<ConstraintFamilyFile> for ConstraintFamily {
    type Error = Error;
    fn try_from(f: ConstraintFamilyFile) -> Result<ConstraintFamily> {
        let fam = ConstraintFamily::new(f.a, f.b)?;
        if fam.n() != f.n || fam.k() != f.k {
            return Err(Error::Dimension(format!(
                "declared n = {}, k = {} but found n = {}, k = {}",
                f.n,
                f.k,
                fam.n(),
                fam.k()
            )));
        }
        Ok(fam.with_degenerate(f.degenerate))
    }
}

impl From<ConstraintFamily> for ConstraintFamilyFile {
    fn from(f: ConstraintFamily) -> ConstraintFamilyFile {
        ConstraintFamilyFile { n: f.n(), k: f.k(), a: f.a, b: f.b, degenerate: f.degenerate }
    }
}

impl ConstraintFamily {
    /// Checks shapes only; the hypotheses are checked by [`Self::validate`].
    pub fn new(a: Vec<RingMatrix>, b: Vec<RingMatrix>) -> Result<ConstraintFamily> {
        if a.len() != b.len() {
            return Err(Error::Dimension(format!("{} A matrices but {} B matrices", a.len(), b.len())));
        }
        check_square_family(&a.iter().chain(&b).collect::<Vec<_>>(), "constraint family")?;
        Ok(ConstraintFamily { a, b, degenerate: false })
    }

    pub(crate) fn with_degenerate(mut self, d: bool) -> ConstraintFamily {
        self.degenerate = d;
        self
    }

    pub fn n(&self) -> usize {
        self.a[0].n()
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[RingMatrix] {
        &self.a
    }

    pub fn b(&self) -> &[RingMatrix] {
        &self.b
    }

    /// Set for `k = 1` families, where the constraint forces `A_1 = 0`.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// `sum_i A_i B_i`.
    pub fn constraint_residual(&self) -> RingMatrix {
        sum_of_products(self.a.iter().zip(&self.b), self.n())
    }

    pub fn check_commuting(&self) -> Result<()> {
        check_commuting(&self.b, "B")
    }

    /// Commutation first, then the constraint.
    pub fn validate(&self) -> Result<()> {
        self.check_commuting()?;
        let r = self.constraint_residual();
        if let Some(((i, j), v)) = r.first_nonzero() {
            return Err(Error::ConstraintViolated(format!(
                "(sum_i A_i B_i)[{},{}] = {v}",
                i + 1,
                j + 1
            )));
        }
        Ok(())
    }
}

/// `A_{i,j}`, `B_{i,j}` for `i` in `0..n` and `j` in `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MixedFamilyFile", into = "MixedFamilyFile")]
pub struct MixedConstraintFamily {
    a: Vec<Vec<RingMatrix>>,
    b: Vec<Vec<RingMatrix>>,
    degenerate: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MixedFamilyFile {
    pub n: usize,
    pub k: usize,
    pub a: Vec<Vec<RingMatrix>>,
    pub b: Vec<Vec<RingMatrix>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub degenerate: bool,
}

impl TryFrom<MixedFamilyFile> for MixedConstraintFamily {
    type Error = Error;
    fn try_from(f: MixedFamilyFile) -> Result<MixedConstraintFamily> {
        let fam = MixedConstraintFamily::new(f.a, f.b)?;
        if fam.n() != f.n || fam.k() != f.k {
            return Err(Error::Dimension(format!(
                "declared n = {}, k = {} but found n = {}, k = {}",
                f.n,
                f.k,
                fam.n(),
                fam.k()
            )));
        }
        Ok(fam.with_degenerate(f.degenerate))
    }
}

impl From<MixedConstraintFamily> for MixedFamilyFile {
    fn from(f: MixedConstraintFamily) -> MixedFamilyFile {
        MixedFamilyFile { n: f.n(), k: f.k(), a: f.a, b: f.b, degenerate: f.degenerate }
    }
}

impl MixedConstraintFamily {
    /// Expects `n` rows of `k` matrices each, all `n x n`.
    pub fn new(a: Vec<Vec<RingMatrix>>, b: Vec<Vec<RingMatrix>>) -> Result<MixedConstraintFamily> {
        let rows = a.len();
        if rows == 0 || b.len() != rows {
            return Err(Error::Dimension(format!("{} rows of A but {} rows of B", rows, b.len())));
        }
        let k = a[0].len();
        if k == 0 || a.iter().chain(&b).any(|r| r.len() != k) {
            return Err(Error::Dimension("rows must all hold the same positive number of matrices".into()));
        }
        let n = check_square_family(&a.iter().chain(&b).flatten().collect::<Vec<_>>(), "mixed family")?;
        if n != rows {
            return Err(Error::Dimension(format!("{rows} rows of {n}x{n} matrices; need exactly {n} rows")));
        }
        Ok(MixedConstraintFamily { a, b, degenerate: false })
    }

    pub(crate) fn with_degenerate(mut self, d: bool) -> MixedConstraintFamily {
        self.degenerate = d;
        self
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn k(&self) -> usize {
        self.a[0].len()
    }

    pub fn a(&self) -> &[Vec<RingMatrix>] {
        &self.a
    }

    pub fn b(&self) -> &[Vec<RingMatrix>] {
        &self.b
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// `sum_j A_{i,j} B_{i,j}`.
    pub fn row_residual(&self, i: usize) -> RingMatrix {
        sum_of_products(self.a[i].iter().zip(&self.b[i]), self.n())
    }

    /// `B_{i,j}` and `B_{i',j'}` must commute whenever `i != i'`.
    pub fn check_commuting(&self) -> Result<()> {
        let (n, k) = (self.n(), self.k());
        for i in 0..n {
            for i2 in i + 1..n {
                for j in 0..k {
                    for j2 in 0..k {
                        if !self.b[i][j].commutes_with(&self.b[i2][j2]) {
                            return Err(Error::NotCommuting(
                                format!("B_{},{}", i + 1, j + 1),
                                format!("B_{},{}", i2 + 1, j2 + 1),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_commuting()?;
        for i in 0..self.n() {
            if let Some(((r, c), v)) = self.row_residual(i).first_nonzero() {
                return Err(Error::ConstraintViolated(format!(
                    "row {}: (sum_j A_{{i,j}} B_{{i,j}})[{},{}] = {v}",
                    i + 1,
                    r + 1,
                    c + 1
                )));
            }
        }
        Ok(())
    }

    /// The one-index family obtained by repeating `A_j`, `B_j` in every row.
    pub fn from_uniform(f: &ConstraintFamily) -> MixedConstraintFamily {
        let n = f.n();
        MixedConstraintFamily {
            a: vec![f.a.clone(); n],
            b: vec![f.b.clone(); n],
            degenerate: f.degenerate,
        }
    }
}
