use bcinterp::arith::{Field, Monomial, Poly, Rat, RatFunc};
use bcinterp::macdonald::*;
use bcinterp::params::Params;
use bcinterp::partition::{interlaces, partitions_upto, Partition};

/// `f(u) = (t u; q)_inf / (q u; q)_inf`, truncated.
fn f_inf(u: f64, q: f64, t: f64) -> f64 {
    let mut acc = 1.0;
    let mut qk = 1.0;
    for _ in 0..400 {
        acc *= (1.0 - t * u * qk) / (1.0 - q * u * qk);
        qk *= q;
    }
    acc
}

/// The infinite-product form of `psi_{lambda/mu}`.
fn psi_oracle(lambda: &Partition, mu: &Partition, q: f64, t: f64) -> f64 {
    let l = |i: usize| lambda.part(i) as i32;
    let m = |i: usize| mu.part(i) as i32;
    let f = |a: i32, b: i32| f_inf(q.powi(a) * t.powi(b), q, t);
    let mut acc = 1.0;
    for i in 1..=mu.len() {
        for j in i..=mu.len() {
            let b = (j - i) as i32;
            acc *= f(m(i) - m(j), b) * f(l(i) - l(j + 1), b) / (f(l(i) - m(j), b) * f(m(i) - l(j + 1), b));
        }
    }
    acc
}

#[test]
fn psi_matches_infinite_products() {
    let (qf, tf) = (0.3, 0.45);
    let p = Params::new(Rat::new(3, 10), Rat::new(9, 20), Rat::one());
    let mut checked = 0;
    for lambda in partitions_upto(6, 4) {
        for mu in partitions_upto(lambda.weight(), 4) {
            if !interlaces(&mu, &lambda) {
                assert!(psi_skew(&lambda, &mu, &p).is_zero());
                continue;
            }
            let got = psi_skew(&lambda, &mu, &p).to_f64();
            let want = psi_oracle(&lambda, &mu, qf, tf);
            assert!((got - want).abs() < 1e-9 * want.abs().max(1.0), "{lambda}/{mu}: {got} vs {want}");
            checked += 1;
        }
    }
    assert!(checked > 50);
}

fn det(m: &[Vec<Rat>]) -> Rat {
    // fraction-free enough for 3x3: cofactor expansion
    match m.len() {
        0 => Rat::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Rat::zero();
            for j in 0..n {
                let minor: Vec<Vec<Rat>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
                let term = m[0][j].clone() * det(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// `s_mu(x)` by the bialternant formula.
fn schur(mu: &Partition, x: &[Rat]) -> Rat {
    let n = x.len();
    let num: Vec<Vec<Rat>> = x.iter().map(|xi| (1..=n).map(|j| xi.pow((mu.part(j) + n - j) as i64)).collect()).collect();
    let den: Vec<Vec<Rat>> = x.iter().map(|xi| (1..=n).map(|j| xi.pow((n - j) as i64)).collect()).collect();
    det(&num) * det(&den).recip().unwrap()
}

#[test]
fn schur_at_t_equals_q() {
    let q = Rat::new(2, 7);
    let p = Params::new(q.clone(), q, Rat::one());
    let pts = [Rat::new(3, 1), Rat::new(-1, 2), Rat::new(5, 3)];
    for n in 1..=3 {
        for mu in partitions_upto(4, n) {
            let got = macdonald_p(&mu, n, &p).eval(&pts[..n]);
            assert_eq!(got, schur(&mu, &pts[..n]), "{mu} n={n}");
        }
    }
}

#[test]
fn elementary_columns_and_monic_leading_term() {
    let s = Params::<RatFunc>::symbolic();
    for n in 1..=3 {
        for k in 0..=n {
            assert_eq!(macdonald_p(&Partition::new(&vec![1; k]), n, &s), elementary::<RatFunc>(k, n));
        }
        for mu in partitions_upto(3, n) {
            let f = macdonald_p(&mu, n, &s);
            assert!(is_symmetric(&f, n), "{mu}");
            let lead = Monomial::from_exps(&mu.padded(n).iter().map(|&e| e as i64).collect::<Vec<_>>());
            assert!(f.coeff(&lead).is_one());
        }
    }
}

#[test]
fn pieri_weights_expand_products() {
    // e_1 P_mu = sum psi' P_lambda, recomposed
    let p = Params::new(Rat::new(1, 3), Rat::new(3, 5), Rat::one());
    for n in 1..=3 {
        for mu in partitions_upto(3, n) {
            let w = pieri_weights_a(&mu, n, &p);
            let recomposed: Vec<Poly<Rat>> = w.iter().map(|(lam, c)| macdonald_p(lam, n, &p).scale(c)).collect();
            let mut want = Poly::zero();
            for k in 0..=n {
                want = &want + &(&elementary::<Rat>(k, n) * &macdonald_p(&mu, n, &p));
            }
            assert_eq!(Poly::sum(&recomposed), want, "{mu} n={n}");
            for lam in w.keys() {
                assert!(mu.is_subset_of(lam) && lam.is_subset_of(&mu.plus_one(n)));
                assert!(!pieri_weight_a(lam, &mu, n, &p).is_zero());
            }
        }
    }
}
