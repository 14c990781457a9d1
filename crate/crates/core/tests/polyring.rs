use std::sync::Arc;

use blowdown_core::error::Error;
use blowdown_core::polyring::{parse, Coeff, Grade, Image, Monomial, Polynomial, VarTable};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn ring() -> Arc<VarTable> {
    VarTable::with_invertible(&["b", "v1", "v2", "g", "w1", "w2", "x", "y"], &["g"]).unwrap()
}

fn small() -> Arc<VarTable> {
    VarTable::with_invertible(&["g", "x", "y"], &["g"]).unwrap()
}

fn p(s: &str) -> Polynomial {
    parse(s, &ring()).unwrap()
}

fn coeff() -> impl Strategy<Value = Coeff> {
    (-5i64..=5, 1i64..=4, -3i64..=3, 1i64..=3)
        .prop_map(|(a, b, c, d)| &Coeff::from_ratio(a, b) + &(&Coeff::i() * &Coeff::from_ratio(c, d)))
}

/// Random Laurent polynomial in `g, x, y` (negative powers of `g` only).
fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((-2i32..=2, 0i32..=3, 0i32..=3), coeff()), 0..5).prop_map(|ts| {
        let r = small();
        Polynomial::from_terms(&r, ts.into_iter().map(|((a, b, c), k)| (Monomial(vec![a, b, c]), k)))
    })
}

/// Random polynomial in `g, x, y` with nonnegative exponents.
fn true_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0i32..=2, 0i32..=3, 0i32..=3), coeff()), 0..5).prop_map(|ts| {
        let r = small();
        Polynomial::from_terms(&r, ts.into_iter().map(|((a, b, c), k)| (Monomial(vec![a, b, c]), k)))
    })
}

#[test]
fn arithmetic_examples() {
    assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
    assert_eq!(&p("b*g-1") + &p("1"), p("b*g"));
    for k in 1..=5 {
        let f = p(&format!("g*w2+w1^{k}"));
        assert_eq!(&f * &p("g^2"), p(&format!("g^3*w2+g^2*w1^{k}")));
    }
}

#[test]
fn substitution_examples() {
    let r = ring();
    let f = p("g^(-1)*w1");
    let out = f.substitute(&[(3, Image { pos: p("g"), neg: Some(p("b")) })]).unwrap();
    assert_eq!(out, p("b*w1"));
    assert_eq!(p("x^2").subs(&[("x", &p("x"))]).unwrap(), p("x^2"));
    for k in 1..=4u32 {
        let f = p(&format!("g^2*w1^{k}+w1"));
        let sub = p("x+g*y");
        let got = f.subs(&[("w1", &sub)]).unwrap();
        // independent: expand by repeated multiplication
        let mut pow = Polynomial::one(&r);
        for _ in 0..k {
            pow = &pow * &sub;
        }
        assert_eq!(got, &(&p("g^2") * &pow) + &sub);
    }
}

#[test]
fn laurent_examples() {
    assert_eq!(p("g*x+g^2*y").laurent_coeff(3, 2), p("y"));
    for k in 1..=5 {
        let f = p(&format!("g*(2/{})*x^{}", k + 1, k + 1));
        assert_eq!(f.laurent_coeff(3, 1), p(&format!("(2/{})*x^{}", k + 1, k + 1)));
    }
    assert_eq!(p("(x+g*y)^3*g^(-1)").laurent_coeff(3, 1), p("3*x*y^2"));
}

#[test]
fn grade_examples() {
    let w = [1, 4, 7, -1, 3, 10, 0, 0];
    assert_eq!(p("b*v2-v1^2").grade(&w), Grade::Homogeneous(8));
    assert_eq!(p("1").grade(&w), Grade::Homogeneous(0));
    assert!(matches!(p("x+x^2").grade(&[1; 8]), Grade::NotHomogeneous(..)));
    assert_eq!(Polynomial::zero(&ring()).grade(&w), Grade::Zero);
}

#[test]
fn split_examples() {
    let a = [0, 1, 2];
    let b = [3, 4, 5];
    let (pa, pb, m) = p("g^2*w2+g*w1^3+b^2*w1^2").split_pure_mixed(&a, &b);
    assert!(pa.is_zero());
    assert_eq!(pb, p("g^2*w2+g*w1^3"));
    assert_eq!(m, p("b^2*w1^2"));
    let (pa, pb, m) = p("b+g").split_pure_mixed(&a, &b);
    assert_eq!((pa, pb, m.is_zero()), (p("b"), p("g"), true));
    let (pa, pb, m) = p("b*g").split_pure_mixed(&a, &b);
    assert!(pa.is_zero() && pb.is_zero());
    assert_eq!(m, p("b*g"));
}

#[test]
fn variable_tables() {
    assert_eq!(VarTable::new(&["x", "x"]).unwrap_err(), Error::DuplicateVariable("x".into()));
    assert!(matches!(VarTable::with_invertible(&["x"], &["z"]), Err(Error::UnknownVariable(_))));
    let r = ring();
    assert!(Polynomial::checked_term(&r, Monomial(vec![0, -1, 0, 0, 0, 0, 0, 0]), Coeff::one()).is_err());
    assert!(Polynomial::checked_term(&r, Monomial(vec![0, 0, 0, -1, 0, 0, 0, 0]), Coeff::one()).is_ok());
    assert!(matches!(parse("x^(-1)", &r), Err(Error::NegativeExponent(_))));
    let other = VarTable::new(&["x", "y"]).unwrap();
    assert_eq!(p("x").checked_add(&parse("x", &other).unwrap()).unwrap_err(), Error::TableMismatch);
}

#[test]
fn gaussian_field() {
    let i = Coeff::i();
    assert_eq!(&i * &i, -Coeff::one());
    for k in -8..=8 {
        let mut want = Coeff::one();
        let step = if k >= 0 { i.clone() } else { i.inv() };
        for _ in 0..k.abs() {
            want = &want * &step;
        }
        assert_eq!(Coeff::i_pow(k), want);
    }
    let z = &Coeff::from_ratio(3, 4) + &(&i * &Coeff::from_ratio(-2, 6));
    assert_eq!(&z * &z.inv(), Coeff::one());
    assert_eq!(z.im(), &num_rational::BigRational::new(BigInt::from(-1), BigInt::from(3)));
}

proptest! {
    #[test]
    fn field_axioms(a in coeff(), b in coeff(), c in coeff()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
        // canonical form: positive denominators, lowest terms
        for r in [a.re(), a.im(), (&a * &b).re(), (&a * &b).im()] {
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
        }
    }

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        for (_, k) in (&a * &b).terms() {
            prop_assert!(!k.is_zero());
        }
    }

    #[test]
    fn exact_division_by_remultiplication(a in true_poly(), b in true_poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b), Some(a.clone()));
        if let Some(q) = (&prod + &Polynomial::one(&small())).div_exact(&b) {
            prop_assert_eq!(&q * &b, &prod + &Polynomial::one(&small()));
        }
    }

    #[test]
    fn laurent_shift(f in poly(), j in -3i32..=3, k in -4i32..=4) {
        let r = small();
        let gj = Polynomial::term(&r, Monomial(vec![j, 0, 0]), Coeff::one());
        prop_assert_eq!((&f * &gj).laurent_coeff(0, k + j), f.laurent_coeff(0, k));
    }

    #[test]
    fn split_reassembles(f in poly()) {
        let (a, b, m) = f.split_pure_mixed(&[0], &[1, 2]);
        prop_assert_eq!(&(&a + &b) + &m, f);
    }

    #[test]
    fn grade_matches_brute_force(f in poly(), w in prop::array::uniform3(-3i64..=3)) {
        let degs: std::collections::BTreeSet<i64> =
            f.terms().map(|(m, _)| m.0.iter().zip(&w).map(|(&e, &x)| e as i64 * x).sum()).collect();
        match f.grade(&w) {
            Grade::Zero => prop_assert!(f.is_zero()),
            Grade::Homogeneous(d) => prop_assert_eq!(degs.into_iter().collect::<Vec<_>>(), vec![d]),
            Grade::NotHomogeneous(..) => prop_assert!(degs.len() > 1),
        }
    }

    #[test]
    fn display_parse_round_trip(f in poly()) {
        let r = small();
        prop_assert_eq!(parse(&f.to_string(), &r).unwrap(), f);
    }
}
