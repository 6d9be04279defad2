use chvlab::algebra::{parse_entry, Monomial, Poly, Rational, RingMatrix, Var};
use chvlab::mixed::{mixed_discriminant, MatrixTuple};
use proptest::prelude::*;

const NAMES: [&str; 3] = ["x", "y", "z"];

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((-6i64..=6), (1i64..=4), prop::array::uniform3(0u32..3)), 0..6).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(num, den, exps)| {
            let m = Monomial::from_pairs(
                NAMES.iter().zip(exps).filter(|(_, e)| *e > 0).map(|(v, e)| (Var::new(v), e)),
            );
            (m, Rational::new(num.into(), den.into()))
        }))
    })
}

fn int_matrix(n: usize) -> impl Strategy<Value = RingMatrix> {
    prop::collection::vec(-5i64..=5, n * n)
        .prop_map(move |v| RingMatrix::from_fn(n, |i, j| Poly::int(v[i * n + j])))
}

fn poly_matrix(n: usize) -> impl Strategy<Value = RingMatrix> {
    prop::collection::vec(poly_strategy(), n * n).prop_map(move |v| RingMatrix::from_fn(n, |i, j| v[i * n + j].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Poly::zero(), a.clone());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-&a), a.clone());
    }

    #[test]
    fn printing_round_trips(p in poly_strategy()) {
        let text = p.to_string();
        prop_assert_eq!(parse_entry(&text).unwrap(), p, "{}", text);
    }

    #[test]
    fn exact_division(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn det_is_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        prop_assert_eq!((&a * &b).det(), &a.det() * &b.det());
    }

    #[test]
    fn bareiss_matches_expansion_over_integers(a in int_matrix(4)) {
        prop_assert_eq!(a.det_bareiss(), a.det_expansion());
    }

    #[test]
    fn bareiss_matches_expansion_over_polynomials(a in poly_matrix(3)) {
        prop_assert_eq!(a.det_bareiss(), a.det_expansion());
    }

    #[test]
    fn transpose_keeps_det_and_permanent(a in poly_matrix(3)) {
        prop_assert_eq!(a.transpose().det(), a.det());
        prop_assert_eq!(a.transpose().permanent(), a.permanent());
    }

    #[test]
    fn mixed_discriminant_of_equal_arguments(b in int_matrix(3)) {
        let t = MatrixTuple::new(vec![b.clone(); 3]).unwrap();
        prop_assert_eq!(mixed_discriminant(&t), b.det());
    }

    #[test]
    fn mixed_discriminant_is_symmetric(a in int_matrix(3), b in int_matrix(3), c in int_matrix(3)) {
        let d = mixed_discriminant(&MatrixTuple::new(vec![a.clone(), b.clone(), c.clone()]).unwrap());
        prop_assert_eq!(mixed_discriminant(&MatrixTuple::new(vec![c.clone(), a.clone(), b.clone()]).unwrap()), d.clone());
        prop_assert_eq!(mixed_discriminant(&MatrixTuple::new(vec![b, a, c]).unwrap()), d);
    }

    #[test]
    fn mixed_discriminant_is_multilinear(
        a in int_matrix(3), a2 in int_matrix(3), b in int_matrix(3), c in int_matrix(3), s in -4i64..=4
    ) {
        let d = |x: &RingMatrix| mixed_discriminant(&MatrixTuple::new(vec![x.clone(), b.clone(), c.clone()]).unwrap());
        let combo = &a + &a2.scale(&Poly::int(s));
        prop_assert_eq!(d(&combo), &d(&a) + &d(&a2).scale(&Rational::from_integer(s.into())));
    }
}

#[test]
fn literal_parsing() {
    let p = parse_entry("(x + 2*y)^2 - 1/2*z").unwrap();
    let (x, y, z) = (Poly::var("x"), Poly::var("y"), Poly::var("z"));
    let x2y = &x + &(&Poly::int(2) * &y);
    let expect = &(&x2y * &x2y) - &(&Poly::frac(1, 2) * &z);
    assert_eq!(p, expect);
    assert!(parse_entry("1/0").is_err());
    assert!(parse_entry("x +").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn diagonal_tuple_is_permanent_over_n_factorial(n in 1usize..=4, v in prop::collection::vec(-5i64..=5, 16)) {
        let c = RingMatrix::from_fn(n, |i, j| Poly::int(v[i * 4 + j]));
        let diags = (0..n).map(|i| RingMatrix::diag((0..n).map(|j| c[(i, j)].clone()).collect())).collect();
        let d = mixed_discriminant(&MatrixTuple::new(diags).unwrap());
        let nf: i64 = (1..=n as i64).product();
        prop_assert_eq!(d.scale(&Rational::from_integer(nf.into())), c.permanent());
    }
}
