use blowdown_core::blowdown::*;
use blowdown_core::cases::{golden, lookup, verify, WeightPick};
use blowdown_core::ferrari::{parse_pterm, CaseSpec};
use blowdown_core::polyring::{parse, Grade, Image, Monomial, Polynomial};

fn case(p: &str) -> CaseSpec {
    CaseSpec::two_field("t", parse_pterm(p).unwrap())
}

fn ideal(p: &str) -> TransitionIdeal {
    TransitionIdeal::build(&case(p)).unwrap()
}

fn ghfs(t: &TransitionIdeal, w: &[i64; 6], betas: &[&str]) -> Vec<Ghf> {
    betas
        .iter()
        .map(|s| {
            let beta = t.parse(s).unwrap();
            let gamma = t.certify(&beta).unwrap_or_else(|| panic!("{s} is not holomorphic"));
            let degree = chart_degree(&beta, w).unwrap();
            Ghf { degree, beta, gamma }
        })
        .collect()
}

fn ys(n: usize, s: &str) -> Polynomial {
    parse(s, &y_ring(n)).unwrap()
}

/// Brute-force enumeration of `b^i v1^j v2^k` with positive weights.
fn brute_monomials(w: &[i64; 6], d: i64) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in 0..=d {
        for j in 0..=d {
            for k in 0..=d {
                if i * w[0] + j * w[1] + k * w[2] == d {
                    out.push(vec![i as i32, j as i32, k as i32]);
                }
            }
        }
    }
    out.sort();
    out
}

#[test]
fn transition_generators() {
    let cases = [
        ("b*w1^2+g^2*w1^3", ["b*g-1", "v1-b*w1", "v2-g^3*w2-g^2*w1^3-b*w1^2"]),
        ("0", ["b*g-1", "v1-b*w1", "v2-g^3*w2"]),
        ("g^2*w1+w1", ["b*g-1", "v1-b*w1", "v2-g^3*w2-g^2*w1-w1"]),
    ];
    for (p, gens) in cases {
        let t = ideal(p);
        let want: Vec<Polynomial> = gens.iter().map(|s| t.parse(s).unwrap()).collect();
        assert_eq!(t.generators, want, "{p}");
        assert!(t.generators.iter().all(|g| !g.has_negative_exponents()));
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for w in [[1, 4, 7, -1, 3, 10], [1, 3, 2, -1, 2, 5], [2, 5, 8, -2, 3, 14], [1, 1, 1, -1, 0, 4]] {
        for d in 0..=20 {
            let mut got: Vec<Vec<i32>> =
                monomials_of_weight(&w, d, 4).unwrap().iter().map(|m| m.0[..3].to_vec()).collect();
            got.sort();
            assert_eq!(got, brute_monomials(&w, d), "{w:?} d={d}");
        }
    }
    let e6 = monomials_of_weight(&[1, 4, 7, -1, 3, 10], 8, 4).unwrap();
    let t = ideal("b*w1^2+g^2*w1^3");
    for s in ["b*v2", "v1^2"] {
        let m = t.parse(s).unwrap().terms().next().unwrap().0.clone();
        assert!(e6.contains(&m), "{s}");
    }
    assert_eq!(monomials_of_weight(&[1, 3, 2, -1, 2, 5], 0, 4).unwrap(), vec![Monomial(vec![0; 6])]);
    assert_eq!(monomials_of_weight(&[1, 3, 2, -1, 2, 5], 6, 4).unwrap().len(), 7);
}

#[test]
fn xreduce_examples() {
    let e6 = ideal("b*w1^2+g^2*w1^3");
    let f = xreduce(&e6.parse("b*v2").unwrap(), &[], &e6);
    assert_eq!(f, e6.parse("b*v2-v1^2").unwrap());
    assert!(e6.mixed(&e6.normal_form(&f)).is_zero());

    let a2 = ideal("g^2*w1^2+w1");
    let v2 = a2.parse("v2").unwrap();
    assert_eq!(xreduce(&v2, &[], &a2), v2);
    let w = [1, 3, 2, -1, 2, 5];
    let mut st = SearchState::default();
    let mut table = Vec::new();
    for d in 1..=3 {
        table = polysearch(&monomials_of_weight(&w, d, 4).unwrap(), d, &mut st, &a2, &w).unwrap();
    }
    let f = xreduce(&a2.parse("b^2*v2").unwrap(), &table, &a2);
    assert_eq!(f, a2.parse("b^2*v2-b*v1").unwrap());
    assert!(a2.mixed(&a2.normal_form(&f)).is_zero());
}

#[test]
fn polysearch_examples() {
    let e6 = ideal("b*w1^2+g^2*w1^3");
    let w = [1, 4, 7, -1, 3, 10];
    let mut st = SearchState::default();
    for d in 1..=8 {
        polysearch(&monomials_of_weight(&w, d, 4).unwrap(), d, &mut st, &e6, &w).unwrap();
    }
    assert_eq!(st.ghfs.len(), 1);
    assert_eq!(st.ghfs[0].beta, e6.parse("b*v2-v1^2").unwrap());
    assert_eq!(st.ghfs[0].degree, 8);

    let before = st.ghfs.clone();
    let table = polysearch(&[], 99, &mut st, &e6, &w).unwrap();
    assert!(table.is_empty());
    assert_eq!(st.ghfs, before);

    let ahat = ideal("g^2*w1");
    let w = [1, 4, 1, -1, 3, 4];
    let mut st = SearchState::default();
    polysearch(&monomials_of_weight(&w, 1, 4).unwrap(), 1, &mut st, &ahat, &w).unwrap();
    assert_eq!(st.ghfs.len(), 1);
    assert_eq!(st.ghfs[0].beta, ahat.parse("v2").unwrap());
}

#[test]
fn is_new_examples() {
    let e6 = ideal("b*w1^2+g^2*w1^3");
    let w = [1, 4, 7, -1, 3, 10];
    let y1 = ghfs(&e6, &w, &["b*v2-v1^2"]);
    let by1 = e6.parse("b*(b*v2-v1^2)").unwrap();
    assert!(is_new(&by1, &y1, &w).unwrap());
    let sq = e6.parse("(b*v2-v1^2)^2").unwrap();
    assert!(!is_new(&sq, &y1, &w).unwrap());

    for k in 1..=4 {
        let a = ideal(&format!("g^2*w1^{k}+w1"));
        let ki = k as i64;
        let w = [ki - 1, ki + 1, 2, 1 - ki, 2, 3 * ki - 1];
        let first = ghfs(&a, &w, &["v2", "b*v2-v1", "b^2*v2-b*v1"]);
        let y4 = a.parse(&format!("v2^{}*v1-b^3*v2+b^2*v1", k - 1)).unwrap();
        assert!(is_new(&y4, &first, &w).unwrap(), "k={k}");
        assert!(is_new_by_elimination(&y4, 3 * ki - 1, &first, &w).unwrap(), "k={k}");
    }
}

#[test]
fn is_new_agrees_with_elimination() {
    // each reference generator is new over the earlier ones; products and
    // sums of products are not
    for (name, k) in [("Dk", Some(3)), ("Dhat", None), ("Ak", Some(2)), ("Ahat", None)] {
        let c = lookup(name, k, WeightPick::default()).unwrap();
        let w = c.weights().unwrap();
        let t = TransitionIdeal::build(&c.spec).unwrap();
        let gd = c.golden.unwrap();
        let all = ghfs(&t, &w, &[]);
        let mut gs = all;
        for (d, p) in &gd.ghfs {
            let new = is_new(p, &gs, &w).unwrap();
            assert_eq!(new, is_new_by_elimination(p, *d, &gs, &w).unwrap(), "{name}");
            assert!(new, "{name} {p}");
            gs.push(Ghf { degree: *d, beta: p.clone(), gamma: t.normal_form(p) });
        }
        for a in 0..gs.len() {
            for b in a..gs.len() {
                let prod = &gs[a].beta * &gs[b].beta;
                let deg = gs[a].degree + gs[b].degree;
                assert!(!is_new(&prod, &gs, &w).unwrap());
                assert!(!is_new_by_elimination(&prod, deg, &gs, &w).unwrap());
                // mix in another product of the same degree when one exists
                for c2 in 0..gs.len() {
                    for d2 in c2..gs.len() {
                        if (c2, d2) != (a, b) && gs[c2].degree + gs[d2].degree == deg {
                            let s = &prod - &(&gs[c2].beta * &gs[d2].beta).scale(&blowdown_core::Coeff::from_int(3));
                            assert!(!is_new(&s, &gs, &w).unwrap());
                            assert!(!is_new_by_elimination(&s, deg, &gs, &w).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn is_new_agrees_with_elimination_e7() {
    let c = lookup("E7", None, WeightPick::default()).unwrap();
    let w = c.weights().unwrap();
    let t = TransitionIdeal::build(&c.spec).unwrap();
    let mut gs: Vec<Ghf> = Vec::new();
    for (d, p) in &c.golden.unwrap().ghfs {
        assert!(is_new(p, &gs, &w).unwrap());
        assert!(is_new_by_elimination(p, *d, &gs, &w).unwrap());
        gs.push(Ghf { degree: *d, beta: p.clone(), gamma: t.normal_form(p) });
    }
    let sq = &gs[0].beta * &gs[1].beta;
    assert!(!is_new(&sq, &gs, &w).unwrap());
    assert!(!is_new_by_elimination(&sq, gs[0].degree + gs[1].degree, &gs, &w).unwrap());
}

#[test]
fn relation_examples() {
    for k in 1..=4u32 {
        let a = ideal(&format!("g^2*w1^{k}+w1"));
        let ki = k as i64;
        let w = [ki - 1, ki + 1, 2, 1 - ki, 2, 3 * ki - 1];
        let g = ghfs(&a, &w, &["v2", "b*v2-v1", "b^2*v2-b*v1", &format!("b*v2^{k}-b^3*v2+b^2*v1")]);
        let rels = find_relations(&g, &w).unwrap();
        assert_eq!(rels.len(), 1, "k={k}");
        assert!(rels[0].is_scalar_multiple_of(&ys(4, &format!("y2*y4+y3*(y3-y1^{k})"))).is_some(), "k={k}: {rels:?}");
        assert!(relation_residue(&rels[0], &g, &a).unwrap().is_zero());
    }
    let d = ideal("g*w1^2");
    let w = [1, 2, 1, -1, 1, 4];
    let g = ghfs(&d, &w, &["v2", "b*v2", "v1*v2", "b^3*v2-v1^2"]);
    let rels = find_relations(&g, &w).unwrap();
    assert_eq!(rels.len(), 1);
    assert!(rels[0].is_scalar_multiple_of(&ys(4, "y3^2-y2^3+y1^2*y4")).is_some(), "{rels:?}");
    assert!(find_relations(&g[..1], &w).unwrap().is_empty());
}

fn local(c: &CoordSolution) -> (Polynomial, Polynomial) {
    match c {
        CoordSolution::Solved { local, .. } => local.clone(),
        CoordSolution::Unsolved => panic!("unsolved"),
    }
}

#[test]
fn chart_examples() {
    for k in 1..=4u32 {
        let a = ideal(&format!("g^2*w1^{k}+w1"));
        let ki = k as i64;
        let w = [ki - 1, ki + 1, 2, 1 - ki, 2, 3 * ki - 1];
        let g = ghfs(&a, &w, &["v2", "b*v2-v1", "b^2*v2-b*v1", &format!("v2^{}*v1-b^3*v2+b^2*v1", k - 1)]);
        let beta = invert_chart(&g, Chart::Beta).unwrap();
        let fr = beta.fractions().unwrap();
        assert_eq!(fr[0], (ys(4, "y3"), ys(4, "y2")), "k={k}");
        assert_eq!(fr[2], (ys(4, "y1"), ys(4, "1")), "k={k}");
        let lift = lift_ring(["b", "v1", "v2"], 4);
        // v1 = b*y1 - y2 on the chart: compare after y_i -> ghf_i
        let (n, d) = local(&beta.coords[1].1);
        let diff = &n - &(&parse("b*y1-y2", &lift).unwrap() * &d);
        let mut images: Vec<Image> = (0..3).map(|i| Image::of(Polynomial::var_index(&a.vars, i))).collect();
        images.extend(g.iter().map(|x| Image::of(x.beta.clone())));
        assert!(diff.map_into(&a.vars, &images).unwrap().is_zero(), "k={k}");
        assert!(!d.map_into(&a.vars, &images).unwrap().is_zero());
        let gamma = invert_chart(&g, Chart::Gamma).unwrap();
        assert!(chart_round_trip(&a, &g, &beta, &gamma).unwrap().passed(), "k={k}");
    }

    let c = lookup("Ohat", None, WeightPick::default()).unwrap();
    let gd = c.golden.unwrap();
    let g: Vec<Ghf> = gd
        .ghfs
        .iter()
        .map(|(d, p)| Ghf {
            degree: *d,
            beta: p.clone(),
            gamma: TransitionIdeal::build(&c.spec).unwrap().normal_form(p),
        })
        .collect();
    let beta = invert_chart(&g, Chart::Beta).unwrap();
    // X00 = y1, X10 = y2
    assert_eq!(beta.fractions().unwrap()[0], (ys(10, "y2"), ys(10, "y1")));

    let e6 = lookup("E6", None, WeightPick::default()).unwrap();
    let t = TransitionIdeal::build(&e6.spec).unwrap();
    let g: Vec<Ghf> = e6
        .golden
        .unwrap()
        .ghfs
        .iter()
        .map(|(d, p)| Ghf { degree: *d, beta: p.clone(), gamma: t.normal_form(p) })
        .collect();
    // the reference list does invert: b = y2/y1 already with two functions
    assert!(!invert_chart(&g[..2], Chart::Beta).unwrap().is_complete());
    let b = invert_chart(&g, Chart::Beta).unwrap();
    let gm = invert_chart(&g, Chart::Gamma).unwrap();
    assert_eq!(b.fractions().unwrap()[0], (ys(7, "y2"), ys(7, "y1")));
    assert!(chart_round_trip(&t, &g, &b, &gm).unwrap().passed());
}

fn check_result(t: &TransitionIdeal, r: &BlowdownResult) {
    for g in &r.ghfs {
        assert_eq!(t.certify(&g.beta).as_ref(), Some(&g.gamma));
        assert_eq!(g.beta.grade(&r.weights), Grade::Homogeneous(g.degree));
        let (a, _, mixed) = t.normal_form(&g.beta).split_pure_mixed(&BETA_SIDE, &GAMMA_SIDE);
        assert!(mixed.is_zero() && a.is_constant());
    }
    for rel in &r.relations {
        assert!(relation_residue(rel, &r.ghfs, t).unwrap().is_zero(), "{rel}");
    }
    if r.beta_chart.is_complete() && r.gamma_chart.is_complete() {
        assert!(chart_round_trip(t, &r.ghfs, &r.beta_chart, &r.gamma_chart).unwrap().passed());
    }
}

#[test]
fn run_a2() {
    let c = case("g^2*w1^2+w1");
    let r = run_case(&c, &RunOptions::new(8)).unwrap();
    let t = TransitionIdeal::build(&c).unwrap();
    check_result(&t, &r);
    assert_eq!(r.ghfs.len(), 4);
    assert_eq!(r.ghfs.iter().map(|g| g.degree).collect::<Vec<_>>(), vec![2, 3, 4, 5]);
    assert_eq!(r.relations.len(), 1);
    let gd = golden("Ak", Some(2), None).unwrap().unwrap();
    let alg = Subalgebra::new(&r.ghfs, &r.weights).unwrap();
    for (_, p) in &gd.ghfs {
        assert!(alg.contains(p).unwrap());
    }
}

#[test]
fn run_ohat() {
    let c = lookup("Ohat", None, WeightPick::default()).unwrap();
    let r = run_case(&c.spec, &c.run_options(Some(4))).unwrap();
    let t = TransitionIdeal::build(&c.spec).unwrap();
    check_result(&t, &r);
    assert_eq!(r.ghfs.len(), 10);
    let mut got: Vec<Polynomial> = r.ghfs.iter().map(|g| g.beta.clone()).collect();
    let mut want: Vec<Polynomial> = Vec::new();
    for i in 0..=3 {
        for j in 0..=3 - i {
            want.push(t.parse(&format!("b^{i}*v1^{j}*v2")).unwrap());
        }
    }
    got.sort_by_key(|p| p.to_string());
    want.sort_by_key(|p| p.to_string());
    assert_eq!(got, want);
}

#[test]
fn weight_resolution() {
    let ahat = case("g^2*w1");
    assert!(resolve_weights(&ahat, None).is_err());
    assert_eq!(resolve_weights(&ahat, Some([1, 4, 1, -1, 3, 4])).unwrap(), [1, 4, 1, -1, 3, 4]);
    assert!(resolve_weights(&ahat, Some([1, 1, 1, 1, 1, 1])).is_err());
    assert_eq!(resolve_weights(&case("b*w1^2+g*w1^3"), None).unwrap(), [1, 3, 5, -1, 2, 8]);
    let mut o = RunOptions::new(4);
    o.weights = Some([1, 0, -1, -1, -1, 2]);
    assert!(run_case(&ahat, &o).is_err());
}

#[test]
fn registry_verifies() {
    let list: [(&str, Option<u32>); 14] = [
        ("Ak", Some(1)),
        ("Ak", Some(2)),
        ("Ak", Some(3)),
        ("Ak", Some(4)),
        ("Dk", Some(2)),
        ("Dk", Some(3)),
        ("Dk", Some(4)),
        ("E6", None),
        ("E7", None),
        ("E8", None),
        ("Ohat", None),
        ("Ahat", None),
        ("Dhat", None),
        ("Ehat", None),
    ];
    for (name, k) in list {
        let c = lookup(name, k, WeightPick::default()).unwrap();
        let rep = verify(&c, true, None).unwrap();
        let failed: Vec<String> =
            rep.checks.iter().filter(|c| !c.passed).map(|c| format!("{} {}", c.name, c.detail)).collect();
        assert!(rep.passed(), "{}: {failed:?}", c.label());
        let t = TransitionIdeal::build(&c.spec).unwrap();
        check_result(&t, rep.run.as_ref().unwrap());
    }
}
