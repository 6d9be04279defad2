//! The `n = k = 2`, `(b, e) = (1, 2)` term tables: every element of `G(1, 2)`
//! whose labels are the free pair `(r, s)`, rendered as a signed monomial in
//! generic entries.

use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use super::report::{finish, params, VerificationReport};

use crate::algebra::{Poly, RingMatrix};
use crate::error::{Error, Result};
use crate::objects::{pathmap_sign, pathmaps_g, phi_inv, swgt_pathmap, Label, Pathmap, TwoLabel};

const FREE: [&str; 2] = ["r", "s"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FigureTerm {
    /// `"A"` for pathmutations, `"H"` for the other pathmaps.
    pub kind: &'static str,
    pub term: String,
    pub object: serde_json::Value,
}

trait Render: Label {
    fn tag(self) -> String;
}

impl Render for usize {
    fn tag(self) -> String {
        FREE[self].to_string()
    }
}

impl Render for TwoLabel {
    fn tag(self) -> String {
        format!("α_{},{}", self.alpha + 1, FREE[self.ell])
    }
}

fn var_name<L: Render>(mat: char, l: L, i: usize, j: usize) -> String {
    let t: String = l.tag().chars().filter(|c| c.is_ascii_alphanumeric()).collect();
    format!("{mat}{t}_{}{}", i + 1, j + 1)
}

fn factor<L: Render>(mat: char, l: L, i: usize, j: usize) -> String {
    let t = l.tag();
    if t.chars().count() == 1 {
        format!("({mat}_{t})_{{{},{}}}", i + 1, j + 1)
    } else {
        format!("({mat}_{{{t}}})_{{{},{}}}", i + 1, j + 1)
    }
}

fn generic<L: Render>(mat: char, l: L) -> RingMatrix {
    RingMatrix::from_fn(2, |i, j| Poly::var(&var_name(mat, l, i, j)))
}

/// Signed monomial with `A` factors in row order and `B` factors in path order.
fn render<L: Render>(x: &Pathmap<L>) -> Result<(String, Poly)> {
    let m = x.map();
    let mut rows: Vec<usize> = (0..m.n()).collect();
    rows.sort_by_key(|&i| m.sigma()[i]);
    let mut text = String::from(if pathmap_sign(x)? < 0 { "-" } else { "+" });
    let mut poly = Poly::int(pathmap_sign(x)?);
    for i in rows {
        let (l, r, c) = (m.labels()[i], m.sigma()[i], m.tau()[i]);
        text += &factor('A', l, r, c);
        poly = &poly * &Poly::var(&var_name('A', l, r, c));
    }
    let q = x.path();
    for i in 0..q.n() {
        let (l, u, v) = (q.labels()[i], q.vertices()[i], q.vertices()[i + 1]);
        text += &factor('B', l, u, v);
        poly = &poly * &Poly::var(&var_name('B', l, u, v));
    }
    Ok((text, poly))
}

fn term<L: Render, SA, SB>(x: &Pathmap<L>, a: &SA, b: &SB) -> Result<FigureTerm>
where
    SA: crate::objects::LabelIndex<L> + ?Sized,
    SB: crate::objects::LabelIndex<L> + ?Sized,
{
    let (text, poly) = render(x)?;
    // the rendering must agree with the weight computed from the matrices
    if swgt_pathmap(x, a, b)? != poly {
        return Err(Error::InvalidObject(format!("rendered term {text} disagrees with its weight")));
    }
    Ok(FigureTerm {
        kind: if x.is_pathmutation() { "A" } else { "H" },
        term: text,
        object: serde_json::to_value(x)?,
    })
}

/// The eight one-index terms.
pub fn figure_terms() -> Result<Vec<FigureTerm>> {
    let a: Vec<RingMatrix> = (0..2).map(|l| generic('A', l)).collect();
    let b: Vec<RingMatrix> = (0..2).map(|l| generic('B', l)).collect();
    pathmaps_g::<usize>(2, 2, 0, 1)?
        .filter(|x| x.path().labels() == [0, 1])
        .map(|x| term(&x, &a, &b))
        .collect()
}

/// The eight two-index terms, with `alpha` the identity.
pub fn figure_terms2() -> Result<Vec<FigureTerm>> {
    let lab = |al, l| TwoLabel::new(al, l);
    let a: Vec<Vec<RingMatrix>> = (0..2).map(|al| (0..2).map(|l| generic('A', lab(al, l))).collect()).collect();
    let b: Vec<Vec<RingMatrix>> = (0..2).map(|al| (0..2).map(|l| generic('B', lab(al, l))).collect()).collect();
    let mut out = Vec::new();
    for x in pathmaps_g::<TwoLabel>(2, 2, 0, 1)? {
        let ells: Vec<usize> = x.path().labels().iter().map(|l| l.ell).collect();
        if ells != [0, 1] || phi_inv(&x)?.0.perm().alpha() != [0, 1] {
            continue;
        }
        out.push(term(&x, &a, &b)?);
    }
    Ok(out)
}

/// Both tables as a report: each must hold four `A` and four `H` terms,
/// every one consistent with its weight.
pub fn verify_figures() -> VerificationReport {
    let start = Instant::now();
    let base = VerificationReport::new("figures", params([("n", 2), ("k", 2), ("b", 1), ("e", 2)]));
    let r = (|| {
        let one = figure_terms()?;
        let two = figure_terms2()?;
        let mut r = base.clone().count("one_index", one.len() as u64).count("two_index", two.len() as u64);
        for (name, t) in [("one_index", &one), ("two_index", &two)] {
            let a = t.iter().filter(|x| x.kind == "A").count();
            if (a, t.len() - a) != (4, 4) && r.witness.is_none() {
                r = r.fail(json!({ "table": name, "A": a, "H": t.len() - a }));
            }
        }
        r.data = Some(json!({ "one_index": one, "two_index": two }));
        Ok(r)
    })();
    finish(r, base, start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eight_terms_each() {
        let t = figure_terms().unwrap();
        assert_eq!(t.len(), 8);
        assert_eq!(t.iter().filter(|x| x.kind == "H").count(), 4);
        assert!(t.iter().any(|x| x.term == "+(A_r)_{1,1}(A_s)_{2,2}(B_r)_{1,1}(B_s)_{1,2}"));
        let t2 = figure_terms2().unwrap();
        assert_eq!(t2.len(), 8);
        assert!(verify_figures().passed());
    }
}
