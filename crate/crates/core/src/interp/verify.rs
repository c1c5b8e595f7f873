use rayon::prelude::*;

use super::{bc_factor, comb_two_param, eval_q_lambda, newton_expand, pstar_comb};
use crate::arith::{Field, Monomial, Poly, RatFunc, VarImage};
use crate::error::{Error, Result};
use crate::macdonald::{macdonald_p, pieri_weights_a};
use crate::params::Params;
use crate::partition::{box_partitions, partitions_upto, skew_squares, tilde, Partition};
use crate::serial::S;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftProp {
    /// Lowering every part by one when `mu_n > 0`.
    P21,
    /// Setting `x_n = 1` when `mu_n = 0`.
    P22,
    /// Inverting all parameters and variables.
    P23,
}

fn invert_vars<K: Field>(f: &Poly<K>, n: usize) -> Poly<K> {
    let img: Vec<_> = (0..n).map(|i| Some(VarImage::scaled_var(K::one(), i, -1))).collect();
    f.subst(&img)
}

fn scale_vars<K: Field>(f: &Poly<K>, c: &[K]) -> Poly<K> {
    let img: Vec<_> = c.iter().enumerate().map(|(i, c)| Some(VarImage::scaled_var(c.clone(), i, 1))).collect();
    f.subst(&img)
}

pub fn verify_shift_props<K: Field>(mu: &Partition, n: usize, which: ShiftProp, p: &Params<K>) -> Result<bool> {
    mu.check_length(n)?;
    let lhs = pstar_comb(mu, n, p);
    match which {
        ShiftProp::P21 => {
            let lower = mu.minus_one(n)?;
            let shifted = p.with_s(p.s().clone() * p.q());
            let qi = p.q_pow(-1);
            let inner = scale_vars(&pstar_comb(&lower, n, &shifted), &vec![qi; n]);
            let mut rhs = inner.scale(&p.q_pow(lower.weight() as i64));
            let s2 = p.s2();
            for i in 1..=n as i64 {
                let f = bc_factor((i - 1) as usize, p.t_pow(i - n as i64), &(p.t_pow(n as i64 - i) * &s2));
                rhs = (&rhs * &f).scale(&p.t_pow(1 - i));
            }
            Ok(lhs == rhs)
        }
        ShiftProp::P22 => {
            if n == 0 || mu.len() == n {
                return Err(Error::MuNNonzero);
            }
            let mut vals = vec![None; n];
            vals[n - 1] = Some(K::one());
            let shifted = p.with_s(p.s().clone() * p.t());
            Ok(lhs.eval_partial(&vals) == pstar_comb(mu, n - 1, &shifted))
        }
        ShiftProp::P23 => {
            let inv = invert_vars(&pstar_comb(mu, n, &p.inverted()), n);
            let w = mu.weight() as i64;
            let c = p.s().pow(2 * w) * p.t_pow((2 * n as i64 - 2) * w);
            Ok(inv == lhs.scale(&c))
        }
    }
}

/// `psi'` times the product over `(mu + 1) / lambda`, in variable `var`.
fn pieri_coeff_with<K: Field>(psi: K, lambda: &Partition, mu: &Partition, n: usize, p: &Params<K>, var: usize) -> Poly<K> {
    let s2 = p.s2();
    let mut acc = Poly::constant(psi);
    for (i, j) in skew_squares(&mu.plus_one(n), lambda).expect("window checked by caller") {
        let (ac, lc) = ((j - 1) as i64, (i - 1) as i64);
        let d = -(s2.clone() * p.qt(ac, 2 * (n as i64 - 1) - lc));
        acc = &acc * &bc_factor(var, -p.qt(ac, -lc), &d);
    }
    acc
}

fn in_window(lambda: &Partition, mu: &Partition, n: usize) -> bool {
    mu.len() <= n && lambda.len() <= n && mu.is_subset_of(lambda) && lambda.is_subset_of(&mu.plus_one(n))
}

/// Pieri coefficient in variable `var`; zero outside `mu ⊂ lambda ⊂ mu + 1`.
pub fn pieri_coeff<K: Field>(lambda: &Partition, mu: &Partition, n: usize, p: &Params<K>, var: usize) -> Poly<K> {
    if !in_window(lambda, mu, n) {
        return Poly::zero();
    }
    let psi = pieri_weights_a(mu, n, p).remove(lambda).unwrap_or_else(K::zero);
    pieri_coeff_with(psi, lambda, mu, n, p, var)
}

/// Expands `prod (u + x_i t^(1-i))(1 + 1/(s^2 t^(2n-i-1) u x_i)) P*_mu`
/// with `u` as variable `n` and compares with [`pieri_coeff`].
pub fn verify_pieri<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> Result<bool> {
    mu.check_length(n)?;
    let s2 = p.s2();
    let mut lhs = pstar_comb(mu, n, p);
    for i in 1..=n {
        let a = p.t_pow(1 - i as i64);
        let b = s2.clone() * p.t_pow(2 * n as i64 - i as i64 - 1);
        let bi = b.inv().ok_or(Error::DivisionByZero)?;
        let x = i - 1;
        let f = Poly::from_terms([
            (Monomial::var(n), K::one()),
            (Monomial::var_pow(x, -1), bi.clone()),
            (Monomial::var(x), a.clone()),
            (Monomial::var_pow(n, -1), a * &bi),
        ]);
        lhs = &lhs * &f;
    }
    let got = newton_expand(&lhs, n, mu.weight() + n, p)?;
    let psi = pieri_weights_a(mu, n, p);
    for lam in partitions_upto(mu.weight() + n, n) {
        let want = if in_window(&lam, mu, n) {
            pieri_coeff_with(psi.get(&lam).cloned().unwrap_or_else(K::zero), &lam, mu, n, p, n)
        } else {
            Poly::zero()
        };
        if got.get(&lam).cloned().unwrap_or_else(Poly::zero) != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Cauchy-type identity with `x` in variables `0..n` and `y` in `n..n+m`.
pub fn verify_cauchy<K: Field>(n: usize, m: usize, p: &Params<K>) -> bool {
    let s2 = p.s2();
    let mut lhs = Poly::<K>::one();
    for i in 1..=n {
        for j in 1..=m {
            let a = p.t_pow((n - i) as i64);
            let b = p.q_pow((m - j) as i64);
            let c = (s2.clone() * &a * &b).inv().expect("nonzero parameters");
            let (x, y) = (i - 1, n + j - 1);
            // (a x - b y)(1 - c/(x y))
            let f = Poly::from_terms([
                (Monomial::var(x), a.clone()),
                (Monomial::var(y), -b.clone()),
                (Monomial::var_pow(y, -1), -(a * &c)),
                (Monomial::var_pow(x, -1), b * &c),
            ]);
            lhs = &lhs * &f;
        }
    }
    let swapped = p.swap_qt();
    let terms: Vec<Poly<K>> = box_partitions(n, m)
        .par_iter()
        .map(|mu| {
            let mt = tilde(mu, n, m).unwrap();
            let px = pstar_comb(mu, n, p);
            let py = pstar_comb(&mt, m, &swapped).shift_vars(n);
            let mut c = p.t_pow((n as i64 - 1) * mu.weight() as i64) * p.q_pow((m as i64 - 1) * mt.weight() as i64);
            if mt.weight() % 2 == 1 {
                c = -c;
            }
            (&px * &py).scale(&c)
        })
        .collect();
    Poly::sum(&terms) == lhs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitDirection {
    SInfinity,
    SZero,
}

/// Extreme `s`-components of `P*_mu` against the two-parameter formula.
/// `p.s()` must be the bare symbol `s`.
pub fn limit_check(mu: &Partition, n: usize, dir: LimitDirection, p: &Params<RatFunc>) -> Result<bool> {
    mu.check_length(n)?;
    if *p.s() != RatFunc::var(S) {
        return Err(Error::Precondition("limit_check needs a symbolic s".into()));
    }
    let full = pstar_comb(mu, n, p);
    let w = mu.weight() as i64;
    let (e, want) = match dir {
        LimitDirection::SInfinity => (0, comb_two_param(mu, n, p)),
        LimitDirection::SZero => {
            let inv = invert_vars(&comb_two_param(mu, n, &p.inverted()), n);
            (-2 * w, inv.scale(&p.t_pow((2 - 2 * n as i64) * w)))
        }
    };
    let mut got = Vec::new();
    for (m, c) in full.terms() {
        let Some((lo, hi)) = c.range_in(S) else { return Ok(false) };
        if lo < -2 * w || hi > 0 {
            return Ok(false);
        }
        got.push((m.clone(), c.component_in(S, e).unwrap() * RatFunc::var(S).pow(-e)));
    }
    Ok(Poly::from_terms(got) == want)
}

/// The top-degree part of `P*_mu` against `P_mu(x_1, x_2/t, ...)`.
pub fn top_term_check<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> Result<bool> {
    mu.check_length(n)?;
    let w = mu.weight() as i64;
    let top = pstar_comb(mu, n, p).filter(|m| m.degree() == w);
    let c: Vec<K> = (0..n).map(|i| p.t_pow(-(i as i64))).collect();
    Ok(top == scale_vars(&macdonald_p(mu, n, p), &c))
}

/// Setting `x_j = q^lambda_j` for `j >= i` kills `f` whenever the tails
/// from `i` are not nested.
pub fn lemma55_check<K: Field>(f: &Poly<K>, mu: &Partition, lambda: &Partition, n: usize, p: &Params<K>) -> bool {
    let lp = lambda.padded(n);
    (1..=n).all(|i| {
        if mu.tail_from(i).is_subset_of(&lambda.tail_from(i)) {
            return true;
        }
        let vals: Vec<Option<K>> =
            (1..=n).map(|j| if j >= i { Some(p.q_pow(lp[j - 1] as i64)) } else { None }).collect();
        f.eval_partial(&vals).is_zero()
    })
}

/// `g(u) = g(1/(c u))` with `c = s^2 t^(2n-2)`, `u` in variable `var`.
pub fn u_inversion_invariant<K: Field>(g: &Poly<K>, n: usize, p: &Params<K>, var: usize) -> bool {
    let c = (p.s2() * p.t_pow(2 * n as i64 - 2)).inv().expect("nonzero parameters");
    let mut img = vec![None; var + 1];
    img[var] = Some(VarImage::scaled_var(c, var, -1));
    g.subst(&img) == *g
}

/// `P*_mu` is unchanged by `s -> -s`.
pub fn s_parity_check<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> bool {
    pstar_comb(mu, n, p) == pstar_comb(mu, n, &p.with_s(-p.s().clone()))
}

/// The vanishing slice and the normalization at `q^mu`.
pub fn vanishing_slice<K: Field>(f: &Poly<K>, mu: &Partition, n: usize, p: &Params<K>) -> Result<bool> {
    for lam in partitions_upto(mu.weight() + 2, n) {
        let v = eval_q_lambda(f, &lam, n, p);
        if lam == *mu {
            if v != Poly::constant(super::norm_h(mu, n, p)?) {
                return Ok(false);
            }
        } else if !mu.is_subset_of(&lam) && !v.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

