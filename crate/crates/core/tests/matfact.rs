use blowdown_core::matfact::*;
use blowdown_core::polyring::{parse, Coeff, Polynomial, VarTable};
use proptest::prelude::*;

#[test]
fn a_plain_all_splits() {
    for n in 2..=6 {
        for m in 1..n {
            let f = build_a_factorization(n, m, false).unwrap();
            let chk = verify_factorization(&f.r, &f.s, &f.f).unwrap();
            assert!(chk.holds(), "n={n} m={m}: {:?}", chk.witness);
            let want = parse(&format!("X*Y - Z^{n}"), &f.ring.vars).unwrap();
            assert_eq!(f.f, want);
        }
    }
}

#[test]
fn a_deformed_all_splits() {
    for n in 2..=5 {
        for m in 1..n {
            let f = build_a_factorization(n, m, true).unwrap();
            assert!(verify_factorization(&f.r, &f.s, &f.f).unwrap().holds(), "n={n} m={m}");
        }
    }
}

#[test]
fn a_bad_split() {
    assert!(build_a_factorization(3, 3, false).is_err());
    assert!(build_a_factorization(3, 0, false).is_err());
}

#[test]
fn identity_pair() {
    let v = VarTable::new(&["X"]).unwrap();
    let i = PolyMatrix::identity(&v, 3);
    assert!(verify_factorization(&i, &i, &Polynomial::one(&v)).unwrap().holds());
    let two = Polynomial::int(&v, 2);
    let w = verify_factorization(&i, &i, &two).unwrap().witness.unwrap();
    assert_eq!((w.product, w.row, w.col), ("RS", 0, 0));
    assert!(verify_factorization(&i, &PolyMatrix::identity(&v, 2), &two).is_err());
}

#[test]
fn d_plain_products() {
    for n in 1..=6 {
        for m in 1..=n {
            let d = build_d_relations(n, m, false).unwrap();
            let chk = verify_factorization(&d.r, d.s.as_ref().unwrap(), &d.eqn).unwrap();
            assert!(chk.holds(), "n={n} m={m}: {:?}", chk.witness);
            let want = parse(&format!("-X^2 - Y^2*Z + Z^{}", n + 1), &d.ring.vars).unwrap();
            assert_eq!(d.eqn, want);
        }
    }
}

#[test]
fn d_plain_odd_minors() {
    let (n, m) = (3, 1);
    let d = build_d_relations(n, m, false).unwrap();
    let p = row_pair_minors(&d.r, RowPair::Top).unwrap();
    let v = &d.ring.vars;
    assert_eq!(p.gamma(), &parse("X^2 - Z^4", v).unwrap());
    assert_eq!(p.phi(), &parse("Y^2", v).unwrap());
    assert_eq!(p.beta(), &parse("Y*Z^3", v).unwrap());
    assert_eq!(p.eps(), &parse("-Y*Z", v).unwrap());
    assert_eq!(p.delta(), &parse("I*X*Y", v).unwrap());
    assert_eq!(p.alpha(), p.delta());
}

#[test]
fn d_plain_even_minors() {
    let (n, m) = (4, 2);
    let d = build_d_relations(n, m, false).unwrap();
    let p = row_pair_minors(&d.r, RowPair::Top).unwrap();
    let v = &d.ring.vars;
    assert_eq!(p.gamma(), &parse("X^2", v).unwrap());
    assert_eq!(p.phi(), &parse("Y^2 - Z^4", v).unwrap());
    assert_eq!(p.beta(), &parse("-I*X*Z^3", v).unwrap());
    assert_eq!(p.eps(), &parse("-I*X*Z", v).unwrap());
}

#[test]
fn deformed_d_reduces_to_plain() {
    for n in 1..=4 {
        for m in 1..=n {
            let d = build_d_relations(n, m, true).unwrap();
            let p = build_d_relations(n, m, false).unwrap();
            let r0 = d.r.map(|q| d.ring.at_origin(q).embed(&p.ring.vars)).unwrap();
            assert_eq!(r0, p.r, "n={n} m={m}");
            assert_eq!(d.eqn, d.versal_equation(), "n={n} m={m}");
        }
    }
}

#[test]
fn deformed_d_determinant_and_cofactors() {
    for n in 1..=4 {
        for m in 1..=n {
            let d = build_d_relations(n, m, true).unwrap();
            assert_eq!(d.determinant_certificate().unwrap(), (true, true), "n={n} m={m}");
        }
    }
}

#[test]
fn printed_deformed_matrix_drops_linear_term() {
    for (n, m) in [(2, 1), (2, 2), (3, 2)] {
        let d = deformed_d_as_printed(n, m).unwrap();
        let det = d.r.det().unwrap();
        assert_ne!(det, &d.eqn * &d.eqn);
        let c = &d.context;
        let dp = d.distinguished.as_ref().unwrap();
        let (p2, q2) = (&dp.dprimed.p, &dp.dprimed.q);
        let xt = d.r.get(1, 1).scale(&-Coeff::i());
        let yt = -d.r.get(0, 2);
        let g2 = &(&c.z * &(p2 * p2)) + &(q2 * q2);
        let e0 = &(&(&xt * &xt) + &(&(&yt * &yt) * &c.z)) - &(&c.h1 * &g2);
        assert_eq!(det, &e0 * &e0);
    }
}

#[test]
fn plucker_relations_all() {
    for n in 1..=4 {
        for m in 1..=n {
            let plain = build_d_relations(n, m, false).unwrap();
            let corrected = build_d_relations(n, m, true).unwrap();
            let printed = deformed_d_as_printed(n, m).unwrap();
            for d in [&plain, &corrected, &printed] {
                for rows in [RowPair::Top, RowPair::Bottom] {
                    let mn = row_pair_minors(&d.r, rows).unwrap();
                    let rep = verify_plucker_relations(&mn, rows, &d.context);
                    assert!(rep.holds(), "n={n} m={m} {rows:?}: {rep:?}");
                }
            }
        }
    }
}

#[test]
fn plucker_shape_and_rank_one() {
    let v = VarTable::new(&["X", "Y"]).unwrap();
    let p = |s: &str| parse(s, &v).unwrap();
    let row = [p("X"), p("Y"), p("X*Y"), p("1")];
    let k = p("X+2");
    let m = PolyMatrix::from_rows(&v, vec![row.to_vec(), row.iter().map(|e| &k * e).collect()]).unwrap();
    let mn = plucker(&m).unwrap();
    for q in [&mn.p12, &mn.p13, &mn.p14, &mn.p23, &mn.p24, &mn.p34] {
        assert!(q.is_zero());
    }
    assert!(plucker(&PolyMatrix::identity(&v, 2)).is_err());
}

#[test]
fn distinguished_identities() {
    for n in 1..=4 {
        for m in 1..=n {
            let d = distinguished(n, m).unwrap();
            let r = &d.ring;
            assert!(d.full.identities_hold(r) && d.primed.identities_hold(r) && d.dprimed.identities_hold(r));
            assert!(d.split_identity_holds());
            let prod = (1..=n + 2).fold(Polynomial::one(&r.vars), |acc, i| &acc * &r.t(i));
            assert_eq!(d.full.delta, prod);
        }
    }
    assert!(distinguished(2, 3).is_err());
}

#[test]
fn distinguished_origin_split_table() {
    for n in 1..=4usize {
        for m in 1..=n {
            let d = distinguished(n, m).unwrap();
            let r = &d.ring;
            let z = parse("Z", &r.vars).unwrap();
            let (p2, q2) = (r.at_origin(&d.dprimed.p), r.at_origin(&d.dprimed.q));
            if m % 2 == 0 {
                let s = if m % 4 == 0 { 1 } else { -1 };
                assert_eq!(p2, &Polynomial::int(&r.vars, s) * &z.pow((m / 2) as u32), "n={n} m={m}");
                assert!(q2.is_zero());
            } else {
                let s = if (m + 1) % 4 == 0 { 1 } else { -1 };
                assert_eq!(q2, &Polynomial::int(&r.vars, s) * &z.pow(m.div_ceil(2) as u32), "n={n} m={m}");
                assert!(p2.is_zero());
            }
            assert_eq!(r.at_origin(&d.primed.h), z.pow((n - m) as u32));
        }
    }
}

#[test]
fn tyurina_identities() {
    for n in 1..=3 {
        let t = tyurina_check(n).unwrap();
        assert!(t.holds(), "n={n}: {t:?}");
    }
}

#[test]
fn length3_factorization() {
    let l = build_length3_factorization().unwrap();
    assert_eq!((l.a.rows(), l.a.cols()), (6, 6));
    assert!(verify_factorization(&l.phi, &l.psi, &l.g).unwrap().holds());
    assert!(verify_factorization(&l.a, &l.b, &l.f).unwrap().holds());
    assert_eq!(l.f, parse("x^2 - y^3 + z^5 + 3*t*y*z^2 + t^3*z", &l.vars).unwrap());
    // t = 0 slice
    let t0 = |m: &PolyMatrix| m.map(|p| Ok(p.set_zero(&[3]))).unwrap();
    let g0 = parse("-y^3 + z^5", &l.vars).unwrap();
    assert!(verify_factorization(&t0(&l.phi), &t0(&l.psi), &g0).unwrap().holds());
}

#[test]
fn residual_charts() {
    for n in 2..=6 {
        for m in 1..n {
            for deformed in [false, true] {
                let r = residual_chart_checks(ResidualFamily::A { n, m, deformed }).unwrap();
                assert!(r.holds(), "A n={n} m={m}: {:?}", r.checks);
            }
        }
    }
    for n in 1..=4 {
        for m in 1..=n {
            let r = residual_chart_checks(ResidualFamily::DPlain { n, m }).unwrap();
            assert!(r.holds(), "D n={n} m={m}: {:?}", r.checks);
            let r = residual_chart_checks(ResidualFamily::DDeformed { n, m }).unwrap();
            assert!(r.holds(), "D~ n={n} m={m}: {:?}", r.checks);
        }
    }
}

fn small_poly(vars: &std::sync::Arc<VarTable>) -> impl Strategy<Value = Polynomial> {
    let v = vars.clone();
    prop::collection::vec((-3i64..=3, 0i32..=2, 0i32..=2), 0..4).prop_map(move |terms| {
        terms.into_iter().fold(Polynomial::zero(&v), |acc, (c, a, b)| {
            let t = Polynomial::term(&v, blowdown_core::Monomial(vec![a, b]), Coeff::from_int(c));
            &acc + &t
        })
    })
}

fn xy() -> std::sync::Arc<VarTable> {
    VarTable::new(&["X", "Y"]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn plucker_quadric_vanishes(entries in prop::collection::vec(small_poly(&xy()), 8)) {
        let v = xy();
        let m = PolyMatrix::from_rows(&v, vec![entries[..4].to_vec(), entries[4..].to_vec()]).unwrap();
        prop_assert!(plucker(&m).unwrap().quadric().is_zero());
    }

    #[test]
    fn det_is_multiplicative(a in prop::collection::vec(small_poly(&xy()), 9), b in prop::collection::vec(small_poly(&xy()), 9)) {
        let v = xy();
        let sq = |e: &[Polynomial]| PolyMatrix::from_rows(&v, e.chunks(3).map(|r| r.to_vec()).collect()).unwrap();
        let (a, b) = (sq(&a), sq(&b));
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
    }

    #[test]
    fn cofactors_are_adjugate(a in prop::collection::vec(small_poly(&xy()), 9)) {
        let v = xy();
        let a = PolyMatrix::from_rows(&v, a.chunks(3).map(|r| r.to_vec()).collect()).unwrap();
        let adj = a.cofactors().unwrap().transpose();
        prop_assert_eq!(a.mul(&adj).unwrap(), PolyMatrix::scalar(&a.det().unwrap(), 3));
    }

    #[test]
    fn distinguished_specialises(ts in prop::collection::vec((-9i64..=9, 1i64..=5), 5), u in -5i64..=5, z in -5i64..=5) {
        let d = distinguished(3, 2).unwrap();
        let r = &d.ring;
        let mut point = vec![Coeff::from_int(0); r.vars.len()];
        point[2] = Coeff::from_int(z);
        point[3] = Coeff::from_int(u);
        let tv: Vec<Coeff> = ts.iter().map(|&(a, b)| Coeff::from_ratio(a, b)).collect();
        for (i, t) in tv.iter().enumerate() {
            point[r.t_index(i + 1)] = t.clone();
        }
        let one = Coeff::from_int(1);
        let f = tv.iter().fold(one.clone(), |acc, t| &acc * &(&Coeff::from_int(u) + t));
        let g = tv.iter().fold(one, |acc, t| &acc * &(&Coeff::from_int(z) + &(t * t)));
        prop_assert_eq!(d.full.f.eval(&point), f);
        prop_assert_eq!(d.full.g.eval(&point), g);
        let delta = tv.iter().fold(Coeff::from_int(1), |acc, t| &acc * t);
        prop_assert_eq!(d.full.delta.eval(&point), delta);
    }
}
