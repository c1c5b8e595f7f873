use proptest::prelude::*;

use bcinterp::arith::{Field, Monomial, Poly, Rat, RatFunc};
use bcinterp::interp::pstar_comb;
use bcinterp::koornwinder::*;
use bcinterp::params::Params;
use bcinterp::partition::Partition;
use bcinterp::qcalc::*;
use bcinterp::Error;

fn laurent_1var() -> impl Strategy<Value = Poly<Rat>> {
    prop::collection::vec((prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), -5i64..=5), 1..5)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(e, c)| (Monomial::var_pow(0, e), Rat::from_i64(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// With `v = q^r u` the Jackson integral is the finite sum
    /// `(1-q) sum_(k<r) f(q^k u)`.
    #[test]
    fn q_integral_matches_jackson_sum(f in laurent_1var(), r in 1i64..5, qn in 2i64..6, u in 1i64..5) {
        let q = Rat::new(1, qn);
        let u = Rat::from_i64(u);
        let lower = Bound::new(q.pow(r) * &u, Monomial::one()).unwrap();
        let upper = Bound::new(u.clone(), Monomial::one()).unwrap();
        let got = q_integral(&f, 0, &lower, &upper, &q).unwrap();
        let mut want = Rat::zero();
        for k in 0..r {
            want = want + f.eval(&[q.pow(k) * &u]);
        }
        want = want * (Rat::one() - &q);
        prop_assert_eq!(got, Poly::constant(want));
    }

    /// Symbolic bounds `v, u`: the integral is divisible by `u - v`.
    #[test]
    fn q_integral_vanishes_on_the_diagonal(f in laurent_1var(), qn in 2i64..6) {
        let q = Rat::new(1, qn);
        let g = f.remap_vars(|_| 2);
        let got = q_integral(&g, 2, &Bound::var(Rat::one(), 1), &Bound::var(Rat::one(), 0), &q).unwrap();
        let diff = &Poly::<Rat>::var(0) - &Poly::var(1);
        prop_assert!(got.div_exact(&diff).is_some());
    }
}

#[test]
fn constant_term_is_rejected() {
    let q = Rat::new(1, 2);
    let f = &Poly::<Rat>::one() + &Poly::var(0);
    let b = Bound::var(Rat::one(), 1);
    assert_eq!(q_integral(&f, 0, &b, &b, &q), Err(Error::ConstantTermInMeasure));
    assert!(Bound::new(Rat::zero(), Monomial::one()).is_err());
}

#[test]
fn weyl_denominator_shape() {
    let z: Vec<(usize, Rat)> = (0..3).map(|i| (i, Rat::one())).collect();
    let v = weyl_v(&z);
    // odd under each inversion, alternating under swaps
    for i in 0..3 {
        let mut img = vec![None; 3];
        img[i] = Some(bcinterp::arith::VarImage::scaled_var(Rat::one(), i, -1));
        assert_eq!(v.subst(&img), -v.clone());
    }
    assert_eq!(bcinterp::macdonald::swap_vars(&v, 0, 1), -v.clone());
    for n in 2..=4 {
        let p = Params::numeric(Rat::new(1, 2), Rat::new(1, 3), Rat::from_i64(3));
        let vy = weyl_v(&y_star(n, &p));
        let top = vy.terms().iter().map(|(m, _)| m.degree()).max().unwrap();
        assert_eq!(top as usize, n * (n - 1) / 2);
        assert_eq!(weyl_products(n, 0, WeylWhich::V, &p).terms().iter().map(|(m, _)| m.degree()).max().unwrap() as usize, n * (n + 1) / 2);
    }
}

#[test]
fn pi_vanishes_on_its_divisor() {
    // q^(1/2) x*_1 y*_1 = 1 kills Pi at k = 1
    let p = Params::numeric(Rat::new(1, 2), Rat::new(1, 8), Rat::from_i64(3));
    let n = 2;
    let pi = weyl_products(n, 1, WeylWhich::Pi, &p);
    let xs = x_star(n, &p);
    let ys = y_star(n, &p);
    let x1 = Rat::new(5, 7);
    let y1 = (p.q_half().clone() * &xs[0].1 * &x1 * &ys[0].1).recip().unwrap();
    let vals = vec![Some(x1), None, Some(y1)];
    assert!(pi.eval_partial(&vals).is_zero());
    assert!(!weyl_products(n, 1, WeylWhich::D, &p).is_zero());
}

#[test]
fn integration_order_is_irrelevant() {
    for k in 0..=1u32 {
        let qh = Rat::new(1, 2);
        let p = Params::numeric(qh.clone(), qh.pow(2 * k as i64 + 1), Rat::from_i64(3));
        let n = 3;
        let mu = Partition::new(&[1]);
        let sh = p.with_s(p.s().clone() * p.t_half());
        let g = pstar_comb(&mu, n - 1, &sh).shift_vars(n);
        let b = default_bounds(n, &p);
        let a = integrate_in_order(&g, n, k, &p, &b, &[2, 1]).unwrap();
        let c = integrate_in_order(&g, n, k, &p, &b, &[1, 2]).unwrap();
        assert_eq!(a, c, "k={k}");
        assert!(integral_rep_verify(&mu, n, k, &p).unwrap());
    }
}

#[test]
fn integral_preconditions() {
    let p = Params::symbolic_theta(0);
    assert_eq!(integral_rep_verify(&Partition::new(&[1, 1]), 2, 0, &p), Err(Error::MuNNonzero));
    assert!(integral_rep_verify(&Partition::new(&[1]), 2, 1, &p).is_err());
    assert!(integral_rep_verify(&Partition::new(&[1]), 2, 0, &Params::symbolic()).is_err());
    // C(mu, n) at n = 1 is 1
    assert!(c_const(&Partition::empty(), 1, 0, &p).unwrap().is_one());
}

fn kp_numeric() -> KoornwinderParams<Rat> {
    let base = Params::numeric(Rat::new(1, 3), Rat::new(2, 5), Rat::one());
    KoornwinderParams::from_alphas(1, base, [Rat::new(3, 2), Rat::new(-2, 5), Rat::new(5, 4), Rat::new(7, 3)])
}

#[test]
fn askey_wilson_eigenfunctions() {
    let kp = kp_numeric();
    let abcd = kp.askey_wilson_abcd().unwrap();
    let q = kp.base.q().clone();
    let prod = abcd.iter().fold(Rat::one(), |acc, x| acc * x);
    for m in 0..=4 {
        let aw = askey_wilson(m, &kp).unwrap();
        // L P = E P with the textbook eigenvalue
        assert_eq!(askey_wilson_operator(&aw.poly, &abcd, &q).unwrap(), aw.poly.scale(&aw.eigenvalue));
        let want = (q.pow(-(m as i64)) - Rat::one()) * (Rat::one() - prod.clone() * q.pow(m as i64 - 1));
        assert_eq!(aw.eigenvalue, want);
        // symmetric under z -> 1/z and monic
        let inv = aw.poly.subst(&[Some(bcinterp::arith::VarImage::scaled_var(Rat::one(), 0, -1))]);
        assert_eq!(inv, aw.poly);
        assert!(aw.poly.coeff(&Monomial::var_pow(0, m as i64)).is_one());
    }
}

#[test]
fn one_variable_binomial_and_duality() {
    assert!(verify_binomial_n1(3, &kp_numeric()).unwrap());
    let base = Params::numeric(Rat::new(1, 3), Rat::new(2, 5), Rat::one());
    let sd = KoornwinderParams::self_dual(1, base, Rat::new(3, 2), Rat::new(5, 7), Rat::new(-2, 3));
    assert_eq!(sd.a(1).unwrap(), sd.a1_dual().unwrap());
    assert!(verify_duality_n1(2, 3, &sd).unwrap());
    assert_eq!(verify_duality_n1(1, 1, &kp_numeric()), Err(Error::NotSelfDual));
    assert!(verify_binomial_n1(2, &KoornwinderParams::from_alphas(2, kp_numeric().base, kp_numeric().gens)).is_err());
}

#[test]
fn evaluation_table_interface() {
    let mut t = EvaluationTable::<RatFunc>::new();
    assert!(t.get(&Partition::empty()).unwrap().is_one());
    assert!(matches!(t.get(&Partition::new(&[1])), Err(Error::MissingEvaluation(_))));
    assert!(t.insert(Partition::new(&[1]), RatFunc::zero()).is_err());
    t.insert(Partition::new(&[2, 1]), RatFunc::var(0) + RatFunc::one()).unwrap();
    let back = EvaluationTable::from_json(&t.to_json()).unwrap();
    assert_eq!(back.get(&Partition::new(&[2, 1])).unwrap(), t.get(&Partition::new(&[2, 1])).unwrap());
    // n = 2: the expansion needs every e_mu below lambda
    let kp = KoornwinderParams::symbolic(2);
    assert!(matches!(binomial_rhs(&Partition::new(&[1]), &kp, &t), Err(Error::MissingEvaluation(_))));
    assert!(EvaluationTable::<RatFunc>::from_json(&serde_json::json!({"1": "not a value"})).is_err());
}
