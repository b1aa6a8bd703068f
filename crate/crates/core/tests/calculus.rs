mod common;

use common::{br, random_direction, rng, sc, Sym};
use dgla_core::calculus::*;
use dgla_core::lie::{gen, is_primitive, AlgebraContext, AlgebraElement};
use dgla_core::models::{
    bigon_context, build_bigon_symmetric, build_circle2, build_disc_one_vertex, build_one_complex, OneComplex,
};
use dgla_core::scalar::{frac, int, Rational};
use dgla_core::Error;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// `B_0 = 1`, `Σ_{k<=n} C(n+1,k) B_k = 0` for `n >= 1`.
fn bernoulli_by_recurrence(max: usize) -> Vec<Rational> {
    let binom = |n: usize, k: usize| -> Rational {
        (0..k).fold(Rational::one(), |acc, i| acc * int((n - i) as i64) / int((i + 1) as i64))
    };
    let mut out = vec![Rational::one()];
    for n in 1..=max {
        let mut acc = Rational::zero();
        for (k, b) in out.iter().enumerate() {
            acc += binom(n + 1, k) * b;
        }
        out.push(-acc / binom(n + 1, n));
    }
    out
}

#[test]
fn bernoulli_matches_recurrence() {
    let oracle = bernoulli_by_recurrence(24);
    assert_eq!(oracle[1], frac(-1, 2));
    assert_eq!(oracle[2], frac(1, 6));
    assert_eq!(oracle[3], int(0));
    let table = BernoulliTable::new(24);
    assert_eq!(table.values(), oracle.as_slice());
    assert_eq!(bernoulli(0), int(1));
    assert_eq!(bernoulli(1), frac(-1, 2));
}

fn circle_syms(n: usize) -> (dgla_core::CellModel, Sym) {
    let m = build_circle2(n).unwrap();
    let s = Sym::new(m.context());
    (m, s)
}

#[test]
fn operator_series_examples() {
    let (_, s) = circle_syms(6);
    assert_eq!(OperatorSeries::variable().apply(&s.e, &s.a).unwrap(), br(&s.e, &s.a));

    // Oracle: coefficients of T/(1-e^T) from c * (1-e^T)/T = 1, applied termwise.
    let len = 6;
    let d: Vec<Rational> = (0..len)
        .map(|k| -Rational::one() / (1..=k + 1).fold(Rational::one(), |acc, i| acc * int(i as i64)))
        .collect();
    let mut c: Vec<Rational> = Vec::new();
    for n in 0..len {
        let mut acc = if n == 0 { Rational::one() } else { Rational::zero() };
        for k in 1..=n {
            acc -= &d[k] * &c[n - k];
        }
        c.push(acc / &d[0]);
    }
    let mut expected = s.zero();
    let mut power = s.a.clone();
    for ck in &c {
        expected = &expected + &power.scale(ck);
        power = br(&s.e, &power);
    }
    let got = OperatorSeries::x_over_one_minus_exp(len).apply(&s.e, &s.a).unwrap();
    assert_eq!(got, expected);
    assert_eq!(got.truncated(2), &(-&s.a) + &sc(1, 2, &br(&s.e, &s.a)));

    let exp_neg = OperatorSeries::exp_scaled(&int(-1), 7).apply(&s.e, &s.f).unwrap();
    let mut expected = s.zero();
    let mut power = s.f.clone();
    for k in 0..6 {
        let fact = (1..=k).fold(Rational::one(), |acc, i| acc * int(i as i64));
        expected = &expected + &power.scale(&(int(if k % 2 == 0 { 1 } else { -1 }) / fact));
        power = br(&s.e, &power);
    }
    assert_eq!(exp_neg, expected);
}

#[test]
fn edge_differential_examples() {
    let (m, s) = circle_syms(6);
    let de = m.differential_of("e").unwrap();
    assert_eq!(de.weight_component(1), &s.b - &s.a);
    assert_eq!(de.weight_component(2), sc(1, 2, &br(&s.e, &(&s.a + &s.b))));
    let ctx = m.context();
    let (e, a) = (ctx.generator("e").unwrap(), ctx.generator("a").unwrap());
    assert!(matches!(edge_differential(ctx, a, e, a), Err(Error::Grading(_))));
}

#[test]
fn edge_differential_two_forms_agree_through_order_ten() {
    for n in 1..=10 {
        let ctx = AlgebraContext::new(&[("a", -1), ("b", -1), ("e", 0)], n).unwrap();
        let (e, a, b) =
            (ctx.generator("e").unwrap(), ctx.generator("a").unwrap(), ctx.generator("b").unwrap());
        assert_eq!(
            edge_differential(&ctx, e, a, b).unwrap(),
            edge_differential_bernoulli(&ctx, e, a, b).unwrap(),
            "N={n}"
        );
        let loop_form = edge_differential(&ctx, e, a, a).unwrap();
        assert_eq!(loop_form, edge_differential_bernoulli(&ctx, e, a, a).unwrap());
        assert_eq!(loop_form, br(&gen(&ctx, "e").unwrap(), &gen(&ctx, "a").unwrap()), "N={n}");
    }
}

#[test]
fn extend_differential_examples() {
    let (m, s) = circle_syms(6);
    let da = m.differential_of("a").unwrap();
    assert!(extend_differential(&m, da).unwrap().is_zero());
    let lhs = extend_differential(&m, &br(&s.e, &s.f)).unwrap();
    let de = m.differential_of("e").unwrap();
    let df = m.differential_of("f").unwrap();
    assert_eq!(lhs, &br(de, &s.f) + &br(&s.e, df));

    let sym = build_bigon_symmetric(6).unwrap();
    let t = Sym::new(sym.context());
    let dg = sym.differential_of("g").unwrap();
    assert_eq!(dg.weight_component(2), sc(-1, 2, &br(&(&t.a + &t.b), t.g())));

    let no_g = dgla_core::CellModel::new("partial", sym.context(), sym.cells().to_vec()).unwrap();
    let _ = no_g;
    // A model over a context with an unassigned generator cannot extend D to it.
    let ctx = AlgebraContext::new(&[("a", -1), ("b", -1), ("e", 0), ("f", 0), ("g", 1)], 4).unwrap();
    let circle = build_circle2(4).unwrap();
    let stray = gen(&ctx, "g").unwrap().transport(&ctx).unwrap();
    assert!(matches!(extend_differential(&circle, &stray), Err(Error::ContextMismatch)));
}

#[test]
fn missing_differential_is_reported() {
    let m = build_disc_one_vertex(4).unwrap();
    let ctx = m.context();
    let mut cells = m.cells().to_vec();
    cells.truncate(2);
    assert!(dgla_core::CellModel::new("short", ctx, cells).is_err());
}

#[test]
fn maurer_cartan_defect_examples() {
    let (m, s) = circle_syms(6);
    assert!(maurer_cartan_defect(&m, &s.a).unwrap().is_zero());
    assert!(maurer_cartan_defect(&m, &s.b).unwrap().is_zero());
    // D(a+b) + ½[a+b,a+b] = -½[a,a] - ½[b,b] + ½([a,a] + 2[a,b] + [b,b]) = [a,b]
    let defect = maurer_cartan_defect(&m, &(&s.a + &s.b)).unwrap();
    assert_eq!(defect, br(&s.a, &s.b));
    assert_eq!(defect.weight_component(2), br(&s.a, &s.b));
    assert!(matches!(maurer_cartan_defect(&m, &s.e), Err(Error::Grading(_))));
}

#[test]
fn twisted_differential_examples() {
    let disc = build_disc_one_vertex(6).unwrap();
    let (a, e, g) = (
        gen(disc.context(), "a").unwrap(),
        gen(disc.context(), "e").unwrap(),
        gen(disc.context(), "g").unwrap(),
    );
    assert!(twisted_differential(&disc, &a, &e).unwrap().is_zero());
    assert_eq!(twisted_differential(&disc, &a, &g).unwrap(), e);

    let (m, s) = circle_syms(6);
    let loop_class = bch(&s.ctx, &[s.e.clone(), s.f.clone()]).unwrap();
    assert!(twisted_differential(&m, &s.a, &loop_class).unwrap().is_zero());
    assert!(matches!(twisted_differential(&m, &(&s.a + &s.b), &s.e), Err(Error::NotAPoint { .. })));
}

#[test]
fn flow_examples() {
    let (m, s) = circle_syms(6);
    let one = int(1);
    assert_eq!(flow(&m, &s.e, &s.a, &one).unwrap(), s.b);
    assert_eq!(flow(&m, &s.f, &s.b, &one).unwrap(), s.a);
    assert_eq!(flow(&m, &s.zero(), &s.a, &one).unwrap(), s.a);
    let loop_class = bch(&s.ctx, &[s.e.clone(), s.f.clone()]).unwrap();
    assert_eq!(flow(&m, &loop_class, &s.a, &one).unwrap(), s.a);
    let round = flow(&m, &s.f, &flow(&m, &s.e, &s.a, &one).unwrap(), &one).unwrap();
    assert_eq!(round, s.a);
    assert!(matches!(flow(&m, &s.a, &s.a, &one), Err(Error::Grading(_))));
    // flowing by e for time t equals flowing by t·e for unit time
    for t in [frac(1, 2), frac(-1, 3), int(2)] {
        assert_eq!(flow(&m, &s.e, &s.a, &t).unwrap(), flow(&m, &s.e.scale(&t), &s.a, &one).unwrap());
        assert_eq!(flow(&m, &s.e, &s.f, &t).unwrap(), flow(&m, &s.e.scale(&t), &s.f, &one).unwrap());
    }
}

/// Solves `dx/dt = De - ad_e(x)` (degree -1) weight by weight with `x_k(t)`
/// polynomial in `t`, then evaluates at `t`.
fn flow_by_weights(
    m: &dgla_core::CellModel,
    e: &AlgebraElement,
    x0: &AlgebraElement,
    t: &Rational,
) -> AlgebraElement {
    let n = m.order();
    let de = extend_differential(m, e).unwrap();
    // poly[k][j]: weight-k part, coefficient of t^j
    let mut poly: Vec<Vec<AlgebraElement>> = vec![Vec::new(); n + 1];
    for k in 1..=n {
        let mut rhs: Vec<AlgebraElement> = vec![de.weight_component(k)];
        for i in 1..k {
            let ei = e.weight_component(i);
            for (j, xj) in poly[k - i].iter().enumerate() {
                if rhs.len() <= j {
                    rhs.resize(j + 1, AlgebraElement::zero(m.context()));
                }
                rhs[j] = &rhs[j] - &ei.commutator(xj);
            }
        }
        let mut xk = vec![x0.weight_component(k)];
        for (j, r) in rhs.iter().enumerate() {
            xk.push(r.scale(&(Rational::one() / int(j as i64 + 1))));
        }
        poly[k] = xk;
    }
    let mut out = AlgebraElement::zero(m.context());
    for layer in &poly {
        let mut tp = Rational::one();
        for c in layer {
            out = &out + &c.scale(&tp);
            tp *= t;
        }
    }
    out
}

#[test]
fn closed_form_flow_matches_weight_solver() {
    let (m, s) = circle_syms(6);
    let mut r = rng(11);
    for t in [int(1), frac(1, 2), frac(-1, 2)] {
        for _ in 0..10 {
            let e = random_direction(&s, &mut r);
            for x0 in [&s.a, &s.b] {
                assert_eq!(flow(&m, &e, x0, &t).unwrap(), flow_by_weights(&m, &e, x0, &t));
            }
        }
    }
}

#[test]
fn bch_matches_explicit_low_order_terms() {
    let ctx = AlgebraContext::new(&[("x", 0), ("y", 0)], 5).unwrap();
    let (x, y) = (gen(&ctx, "x").unwrap(), gen(&ctx, "y").unwrap());
    let xx = AdPolynomial::ad(&x);
    let yy = AdPolynomial::ad(&y);
    let z = bch(&ctx, &[x.clone(), y.clone()]).unwrap();
    let mut expected = &(&x + &y) + &sc(1, 2, &br(&x, &y));
    expected = &expected + &xx.pow(2).apply(&y).unwrap().scale(&frac(1, 12));
    expected = &expected + &yy.pow(2).apply(&x).unwrap().scale(&frac(1, 12));
    expected = &expected + &xx.compose(&yy).compose(&xx).apply(&y).unwrap().scale(&frac(-1, 24));
    let w5 = [
        (xx.pow(4).apply(&y).unwrap() + yy.pow(4).apply(&x).unwrap(), frac(-1, 720)),
        (
            xx.pow(2).compose(&yy.pow(2)).apply(&x).unwrap()
                + yy.pow(2).compose(&xx.pow(2)).apply(&y).unwrap(),
            frac(1, 120),
        ),
        (xx.compose(&yy.pow(3)).apply(&x).unwrap() + yy.compose(&xx.pow(3)).apply(&y).unwrap(), frac(1, 360)),
    ];
    for (term, c) in &w5 {
        expected = &expected + &term.scale(c);
    }
    assert_eq!(z, expected);
    // The bracket expansion is a Lie element by construction, and so is BCH.
    assert!(is_primitive(&expected, 4).unwrap());
    assert!(is_primitive(&z, 5).unwrap());
    assert!(!is_primitive(&exp_assoc(&x).unwrap().0, 2).unwrap());
}

#[test]
fn bch_rejects_bad_inputs() {
    let ctx = bigon_context(4).unwrap();
    let a = gen(&ctx, "a").unwrap();
    assert!(matches!(bch(&ctx, &[a]), Err(Error::Grading(_))));
    let other = AlgebraContext::new(&[("e", 0)], 4).unwrap();
    assert!(matches!(bch(&ctx, &[gen(&other, "e").unwrap()]), Err(Error::ContextMismatch)));
}

#[test]
fn flow_family_reaches_b() {
    let (m, s) = circle_syms(6);
    let loop_class = bch(&s.ctx, &[s.e.clone(), s.f.clone()]).unwrap();
    for t in [int(0), int(-1), frac(-1, 2), frac(1, 3)] {
        let h = bch(&s.ctx, &[loop_class.scale(&t), s.e.clone()]).unwrap();
        assert_eq!(flow(&m, &h, &s.a, &int(1)).unwrap(), s.b, "t={t}");
        if t.is_zero() {
            assert_eq!(h, s.e);
        }
        if t == int(-1) {
            assert_eq!(h, -&s.f);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bch_laws(seed in any::<u64>()) {
        let ctx = bigon_context(6).unwrap();
        let s = Sym::new(&ctx);
        let mut r = rng(seed);
        let ag = br(&s.a, s.g());
        let beg = br(&s.b, &br(&s.e, s.g()));
        let pick = |r: &mut rand_chacha::ChaCha8Rng| {
            use rand::Rng;
            let d = random_direction(&s, r);
            &(&d + &ag.scale(&int(r.gen_range(-1..=1)))) + &beg.scale(&int(r.gen_range(-1..=1)))
        };
        let (x, y, z) = (pick(&mut r), pick(&mut r), pick(&mut r));
        let b = |xs: &[AlgebraElement]| bch(&ctx, xs).unwrap();
        prop_assert_eq!(b(&[b(&[x.clone(), y.clone()]), z.clone()]), b(&[x.clone(), b(&[y.clone(), z.clone()])]));
        prop_assert!(b(&[x.clone(), -&x]).is_zero());
        prop_assert_eq!(b(&[-&x, -&y]), -b(&[y.clone(), x.clone()]));
        prop_assert_eq!(b(&[x.clone(), y.clone(), -&x]), exp_ad(&x, &y).unwrap());
        let ex = exp_ad(&s.e, &x).unwrap();
        let ey = exp_ad(&s.e, &y).unwrap();
        prop_assert_eq!(b(&[ex, ey]), exp_ad(&s.e, &b(&[x.clone(), y.clone()])).unwrap());
        prop_assert!(is_primitive(&b(&[x, y, z]), 4).unwrap());
    }

    #[test]
    fn flow_is_a_homomorphism(seed in any::<u64>()) {
        let m = build_bigon_symmetric(6).unwrap();
        let s = Sym::new(m.context());
        let mut r = rng(seed);
        let e1 = random_direction(&s, &mut r);
        let e2 = random_direction(&s, &mut r);
        let composed = bch(&s.ctx, &[e1.clone(), e2.clone()]).unwrap();
        let one = int(1);
        for x in [&s.a, &s.b, s.g()] {
            let step = flow(&m, &e2, &flow(&m, &e1, x, &one).unwrap(), &one).unwrap();
            prop_assert_eq!(step, flow(&m, &composed, x, &one).unwrap());
        }
    }

    #[test]
    fn flow_preserves_flatness(seed in any::<u64>()) {
        let (m, s) = circle_syms(6);
        let mut r = rng(seed);
        let e = random_direction(&s, &mut r);
        for t in [int(1), frac(1, 2), frac(-1, 2)] {
            let p = flow(&m, &e, &s.a, &t).unwrap();
            prop_assert!(maurer_cartan_defect(&m, &p).unwrap().is_zero());
        }
    }
}

#[test]
fn flow_intertwines_twisted_differentials_on_words() {
    let (m, s) = circle_syms(5);
    let mut r = rng(5);
    let words = common::all_words(&s.ctx, 3);
    let at_a = Localisation::new(&m, &s.a).unwrap();
    for e in [s.e.clone(), random_direction(&s, &mut r)] {
        let target = flow(&m, &e, &s.a, &int(1)).unwrap();
        let at_target = Localisation::new(&m, &target).unwrap();
        let push = OperatorSeries::exp_scaled(&int(-1), m.order() + 1);
        for w in &words {
            let lhs = at_target.apply(&push.apply(&e, w).unwrap()).unwrap();
            let rhs = push.apply(&e, &at_a.apply(w).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "word {w}");
        }
    }
}

#[test]
fn one_complex_differentials_square_to_zero() {
    let g = OneComplex::new(
        &["p", "q", "r"],
        &[("x", "p", "q"), ("y", "q", "r"), ("z", "r", "p"), ("w", "p", "p")],
    )
    .unwrap();
    let m = build_one_complex(&g, 5).unwrap();
    for cell in m.cells() {
        assert!(extend_differential(&m, &cell.differential).unwrap().is_zero());
    }
}
