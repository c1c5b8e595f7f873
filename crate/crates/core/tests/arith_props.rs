use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use bcinterp::arith::{Field, Monomial, Poly, Rat, RatFunc, VarImage};
use bcinterp::serial::{parse_json, parse_text, to_json, to_text, Alphabet, BASE_LEN};

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rat() -> impl Strategy<Value = (i64, i64)> {
    (-(1i64 << 40)..(1i64 << 40), 1i64..(1i64 << 40))
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| Rat::new(a, b))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (1i64..=9, 1i64..=5, any::<bool>()).prop_map(|(a, b, neg)| Rat::new(if neg { -a } else { a }, b))
}

/// Laurent polynomials in `vars` variables with exponents in `-2..=2`.
fn poly(vars: usize, max_terms: usize) -> impl Strategy<Value = Poly<Rat>> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, vars), small_rat()), 0..=max_terms)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(e, c)| (Monomial::from_exps(&e), c))))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    let vars = BASE_LEN + 4;
    (poly(vars, 4), poly(vars, 3)).prop_map(|(n, d)| {
        let d = if d.is_zero() { Poly::one() } else { d };
        RatFunc::from_fraction(n, &d).unwrap()
    })
}

fn alphabet() -> Alphabet {
    Alphabet { nx: 2, ny: 1, u: true }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rat_matches_bigrational((a, b) in rat(), (c, d) in rat()) {
        let (x, y) = (Rat::new(a, b), Rat::new(c, d));
        let (bx, by) = (big(a, b), big(c, d));
        prop_assert_eq!((x.clone() + &y).to_big(), &bx + &by);
        prop_assert_eq!((x.clone() - &y).to_big(), &bx - &by);
        prop_assert_eq!((x.clone() * &y).to_big(), &bx * &by);
        if c != 0 {
            prop_assert_eq!((x.clone() * y.recip().unwrap()).to_big(), &bx / &by);
        }
        prop_assert_eq!(x.pow(3).to_big(), &bx * &bx * &bx);
    }

    #[test]
    fn poly_ring_laws(f in poly(3, 5), g in poly(3, 5), h in poly(3, 5)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Poly::one(), f.clone());
    }

    #[test]
    fn exact_division_undoes_multiplication(f in poly(3, 4), g in poly(3, 4)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).div_exact(&g), Some(f));
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in poly(3, 4), g in poly(3, 4), pt in prop::collection::vec(nonzero_rat(), 3)) {
        prop_assert_eq!((&f * &g).eval(&pt), f.eval(&pt) * g.eval(&pt));
        prop_assert_eq!((&f + &g).eval(&pt), f.eval(&pt) + g.eval(&pt));
    }

    #[test]
    fn substitution_is_a_homomorphism(
        f in poly(3, 4),
        g in poly(3, 4),
        cs in prop::collection::vec(nonzero_rat(), 3),
        es in prop::collection::vec(prop::sample::select(vec![-1i64, 1, 2]), 3),
    ) {
        // x_i -> c_i x_(i+1 mod 3)^e_i
        let img: Vec<_> = (0..3).map(|i| Some(VarImage::scaled_var(cs[i].clone(), (i + 1) % 3, es[i]))).collect();
        prop_assert_eq!((&f * &g).subst(&img), &f.subst(&img) * &g.subst(&img));
        // substitute then evaluate equals evaluating at the image point
        let pt = [Rat::new(2, 3), Rat::new(-5, 2), Rat::new(7, 1)];
        let img_pt: Vec<Rat> = (0..3).map(|i| cs[i].clone() * pt[(i + 1) % 3].pow(es[i])).collect();
        prop_assert_eq!(f.subst(&img).eval(&pt), f.eval(&img_pt));
    }

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.clone() * (b.clone() + &c), a.clone() * &b + a.clone() * &c);
        prop_assert_eq!(a.clone() + &b - &b, a.clone());
        if let Some(ai) = a.inv() {
            prop_assert!((a.clone() * ai).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn text_and_json_round_trip(a in ratfunc()) {
        let al = alphabet();
        let text = to_text(&a, &al);
        prop_assert_eq!(parse_text(&text, &al).unwrap(), a.clone(), "{}", text);
        // canonical: printing the parsed value reproduces the text
        prop_assert_eq!(to_text(&parse_text(&text, &al).unwrap(), &al), text);
        let (back, al2) = parse_json(&to_json(&a, &al)).unwrap();
        prop_assert_eq!(back, a);
        prop_assert_eq!(al2, al);
    }
}

#[test]
fn division_by_zero_is_refused() {
    assert!(Rat::zero().recip().is_none());
    assert!(RatFunc::zero().inv().is_none());
    assert!(RatFunc::from_fraction(Poly::one(), &Poly::zero()).is_none());
    let f: Poly<Rat> = Poly::var(0);
    assert!(Poly::<Rat>::one().div_exact(&(&f + &Poly::one())).is_none());
}
