//! Jackson q-integrals of Laurent polynomials and the integral
//! representation of `P*` at `t = q^(2k+1)`.

use std::collections::BTreeMap;

use crate::arith::{product_of, Field, Monomial, Poly, VarImage};
use crate::error::{Error, Result};
use crate::interp::{pstar_comb, starred_images};
use crate::params::Params;
use crate::partition::Partition;

/// A nonzero monomial `coef * x^mono` used as an integration bound.
#[derive(Clone, Debug)]
pub struct Bound<K> {
    pub coef: K,
    pub mono: Monomial,
}

impl<K: Field> Bound<K> {
    pub fn new(coef: K, mono: Monomial) -> Result<Self> {
        if coef.is_zero() {
            return Err(Error::ZeroCoordinate);
        }
        Ok(Bound { coef, mono })
    }

    pub fn var(coef: K, var: usize) -> Self {
        Bound::new(coef, Monomial::var(var)).expect("nonzero bound")
    }

    fn pow(&self, l: i64) -> Poly<K> {
        Poly::monomial(self.mono.pow(l), self.coef.pow(l))
    }
}

/// `∫_v^u f(z) d_q z / z` with `z^l -> (u^l - v^l) / [l]_q`.
pub fn q_integral<K: Field>(f: &Poly<K>, var: usize, lower: &Bound<K>, upper: &Bound<K>, q: &K) -> Result<Poly<K>> {
    let mut by_power: BTreeMap<i64, Vec<(Monomial, K)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        by_power.entry(m.exp(var)).or_default().push((m.with_exp(var, 0), c.clone()));
    }
    if by_power.contains_key(&0) {
        return Err(Error::ConstantTermInMeasure);
    }
    let one = K::one();
    let mut parts = Vec::with_capacity(by_power.len());
    for (l, terms) in by_power {
        let g = Poly::from_terms(terms);
        let scale = (one.clone() - q) * (one.clone() - q.pow(l)).inv().ok_or(Error::DivisionByZero)?;
        let diff = &upper.pow(l) - &lower.pow(l);
        parts.push((&g * &diff).scale(&scale));
    }
    Ok(Poly::sum(&parts))
}

/// Starred variables `c_i * x_(var_i)`.
pub type Starred<K> = Vec<(usize, K)>;

fn star_var<K: Field>(z: &(usize, K), e: i64) -> Poly<K> {
    Poly::monomial(Monomial::var_pow(z.0, e), z.1.pow(e))
}

/// `det[z_i^(m-j+1) - z_i^-(m-j+1)]` for `m` starred variables.
pub fn weyl_v<K: Field>(z: &[(usize, K)]) -> Poly<K> {
    let m = z.len();
    let entry = |i: usize, j: usize| {
        let e = (m - j) as i64;
        &star_var(&z[i], e) - &star_var(&z[i], -e)
    };
    let mut perm: Vec<usize> = (0..m).collect();
    let mut terms = Vec::new();
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
        let prod = product_of((0..m).map(|i| entry(i, p[i])).collect());
        terms.push(if inversions % 2 == 1 { -prod } else { prod });
    });
    Poly::sum(&terms)
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// `1 - c * z^a * w^b` for starred `z, w`.
fn one_minus_zw<K: Field>(c: &K, z: &(usize, K), a: i64, w: &(usize, K), b: i64) -> Poly<K> {
    let m = Monomial::var_pow(z.0, a).mul(&Monomial::var_pow(w.0, b));
    let coef = c.clone() * z.1.pow(a) * w.1.pow(b);
    &Poly::one() - &Poly::monomial(m, coef)
}

const SIGNS: [(i64, i64); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

/// Factors of `prod_(i,j) prod_(l<k) (1 - q^(l+1/2) x*^±1 y*^±1)`.
pub fn weyl_pi_factors<K: Field>(xs: &[(usize, K)], ys: &[(usize, K)], k: u32, p: &Params<K>) -> Vec<Poly<K>> {
    let mut out = Vec::new();
    for x in xs {
        for y in ys {
            for l in 0..k as i64 {
                let c = p.q_half_pow(2 * l + 1);
                for (a, b) in SIGNS {
                    out.push(one_minus_zw(&c, x, a, y, b));
                }
            }
        }
    }
    out
}

/// Factors of `prod_(i<j) ((x*_i + 1/x*_i) - (x*_j + 1/x*_j)) prod_(1<=l<=2k) (1 - q^l x*_i^±1 x*_j^±1)`.
pub fn weyl_d_factors<K: Field>(xs: &[(usize, K)], k: u32, p: &Params<K>) -> Vec<Poly<K>> {
    let mut out = Vec::new();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let (a, b) = (&xs[i], &xs[j]);
            let d = &(&star_var(a, 1) + &star_var(a, -1)) - &(&star_var(b, 1) + &star_var(b, -1));
            out.push(d);
            for l in 1..=2 * k as i64 {
                let c = p.q_pow(l);
                for (e, f) in SIGNS {
                    out.push(one_minus_zw(&c, a, e, b, f));
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylWhich {
    V,
    Pi,
    D,
}

/// `x*_i = x_i t^(n-i) s` in variables `0..n`.
pub fn x_star<K: Field>(n: usize, p: &Params<K>) -> Starred<K> {
    starred_images(n, p, false)
        .into_iter()
        .enumerate()
        .map(|(i, img)| (i, img.unwrap().coef))
        .collect()
}

/// `y*_i = y_i t^(n-i-1/2) s` in variables `n..2n-1`.
pub fn y_star<K: Field>(n: usize, p: &Params<K>) -> Starred<K> {
    (1..n).map(|i| (n + i - 1, p.t_half_pow(2 * (n - i) as i64 - 1) * p.s())).collect()
}

/// The products in `n` variables: `V` in `x*`, `Pi` in `(x*, y*)`, `D` in `x*`.
pub fn weyl_products<K: Field>(n: usize, k: u32, which: WeylWhich, p: &Params<K>) -> Poly<K> {
    match which {
        WeylWhich::V => weyl_v(&x_star(n, p)),
        WeylWhich::Pi => product_of(weyl_pi_factors(&x_star(n, p), &y_star(n, p), k, p)),
        WeylWhich::D => product_of(weyl_d_factors(&x_star(n, p), k, p)),
    }
}

/// `C(mu, n)` for `theta = 2k+1`.
pub fn c_const<K: Field>(mu: &Partition, n: usize, k: u32, p: &Params<K>) -> Result<K> {
    mu.check_length(n)?;
    let theta = 2 * k as i64 + 1;
    let one = K::one();
    let mut acc = p.q_half_pow((n * n.saturating_sub(1) / 2) as i64) * (one.clone() - p.q()).pow(n as i64 - 1);
    for i in 1..n {
        for j in 1..theta {
            acc *= one.clone() - p.q_pow(j);
        }
        for j in 0..theta {
            let e = mu.part(i) as i64 + (n - i) as i64 * theta + j;
            acc *= (one.clone() - p.q_pow(e)).inv().ok_or(Error::DivisionByZero)?;
        }
    }
    Ok(acc)
}

fn require_theta<K: Field>(k: u32, p: &Params<K>) -> Result<()> {
    if !p.has_halves() || *p.t_half() != p.q_half().pow(2 * k as i64 + 1) {
        return Err(Error::Precondition(format!("needs t^(1/2) = q^(k+1/2) with k = {k}")));
    }
    Ok(())
}

/// Default bounds `y_i ∈ [x_(i+1), q x_i]`.
pub fn default_bounds<K: Field>(n: usize, p: &Params<K>) -> Vec<(Bound<K>, Bound<K>)> {
    (1..n).map(|i| (Bound::var(K::one(), i), Bound::var(p.q().clone(), i - 1))).collect()
}

/// The iterated integral of `V(y*) Pi(x*, y*) g(y)`, innermost `y_(n-1)` first.
pub fn integrate_against_measure<K: Field>(
    g: &Poly<K>,
    n: usize,
    k: u32,
    p: &Params<K>,
    bounds: &[(Bound<K>, Bound<K>)],
) -> Result<Poly<K>> {
    let order: Vec<usize> = (1..n).rev().collect();
    integrate_in_order(g, n, k, p, bounds, &order)
}

/// Same integral with the `y_i` integrated in the given order.
///
/// `Pi` splits into one factor per `y_i` and the bounds only involve
/// `x`, so each step only needs `∫ Pi_i(x, y_i) y_i^a dy_i / y_i` for the
/// exponents `a` present in the remaining integrand.
pub fn integrate_in_order<K: Field>(
    g: &Poly<K>,
    n: usize,
    k: u32,
    p: &Params<K>,
    bounds: &[(Bound<K>, Bound<K>)],
    order: &[usize],
) -> Result<Poly<K>> {
    let xs = x_star(n, p);
    let ys = y_star(n, p);
    let mut f = &weyl_v(&ys) * g;
    for &i in order {
        let var = n + i - 1;
        let pi = product_of(weyl_pi_factors(&xs, &ys[i - 1..i], k, p));
        // pi = sum_e y^e pi_e(x)
        let mut pi_parts: BTreeMap<i64, Vec<(Monomial, K)>> = BTreeMap::new();
        for (m, c) in pi.terms() {
            pi_parts.entry(m.exp(var)).or_default().push((m.with_exp(var, 0), c.clone()));
        }
        let pi_parts: Vec<(i64, Poly<K>)> = pi_parts.into_iter().map(|(e, t)| (e, Poly::from_terms(t))).collect();
        let mut f_parts: BTreeMap<i64, Vec<(Monomial, K)>> = BTreeMap::new();
        for (m, c) in f.terms() {
            f_parts.entry(m.exp(var)).or_default().push((m.with_exp(var, 0), c.clone()));
        }
        let (lo, hi) = &bounds[i - 1];
        let one = K::one();
        let mut out = Vec::new();
        let mut constant = Vec::new();
        for (a, terms) in f_parts {
            let fa = Poly::from_terms(terms);
            let mut acc = Vec::new();
            for (e, pe) in &pi_parts {
                let l = e + a;
                if l == 0 {
                    constant.push(&fa * pe);
                    continue;
                }
                let scale = (one.clone() - p.q()) * (one.clone() - p.q_pow(l)).inv().ok_or(Error::DivisionByZero)?;
                acc.push((pe * &(&hi.pow(l) - &lo.pow(l))).scale(&scale));
            }
            out.push(&fa * &Poly::sum(&acc));
        }
        if !Poly::sum(&constant).is_zero() {
            return Err(Error::ConstantTermInMeasure);
        }
        f = Poly::sum(&out);
    }
    Ok(f)
}

/// Both sides of the integral identity for `mu_n = 0`:
/// `(C t^|mu| D(x*) P*_mu(x), ∫ V Pi P*_mu(y; s t^(1/2)) dy/y)`.
fn integral_sides<K: Field>(
    mu: &Partition,
    n: usize,
    k: u32,
    p: &Params<K>,
    inner: &Poly<K>,
) -> Result<(K, Vec<Poly<K>>, Poly<K>)> {
    let lift = inner.shift_vars(n);
    let rhs = integrate_against_measure(&lift, n, k, p, &default_bounds(n, p))?;
    let c = c_const(mu, n, k, p)? * p.t_pow(mu.weight() as i64);
    Ok((c, weyl_d_factors(&x_star(n, p), k, p), rhs))
}

fn check_mu_n(mu: &Partition, n: usize) -> Result<()> {
    mu.check_length(n)?;
    if n == 0 || mu.len() == n {
        return Err(Error::MuNNonzero);
    }
    Ok(())
}

/// Cross-multiplied check of the integral representation, with the
/// combinatorial `P*` on both sides.
pub fn integral_rep_verify<K: Field>(mu: &Partition, n: usize, k: u32, p: &Params<K>) -> Result<bool> {
    check_mu_n(mu, n)?;
    require_theta(k, p)?;
    let sh = p.with_s(p.s().clone() * p.t_half());
    let inner = pstar_comb(mu, n - 1, &sh);
    let (c, d, rhs) = integral_sides(mu, n, k, p, &inner)?;
    let mut lhs = pstar_comb(mu, n, p).scale(&c);
    for f in &d {
        lhs = &lhs * f;
    }
    Ok(lhs == rhs)
}

/// Integral of the full integrand over shifted bounds
/// `(q^-s' x_(i+1), q^(r+1) x_i)`.
pub fn bound_shift_integral<K: Field>(mu: &Partition, n: usize, k: u32, r: i64, s_shift: i64, p: &Params<K>) -> Result<Poly<K>> {
    check_mu_n(mu, n)?;
    require_theta(k, p)?;
    let sh = p.with_s(p.s().clone() * p.t_half());
    let inner = pstar_comb(mu, n - 1, &sh).shift_vars(n);
    let bounds: Vec<_> = (1..n)
        .map(|i| (Bound::var(p.q_pow(-s_shift), i), Bound::var(p.q_pow(r + 1), i - 1)))
        .collect();
    integrate_against_measure(&inner, n, k, p, &bounds)
}

/// `P*` built from the integral (for `mu_n = 0`) and the lowering
/// identity (for `mu_n > 0`).
pub fn pstar_integral<K: Field>(mu: &Partition, n: usize, k: u32, p: &Params<K>) -> Result<Poly<K>> {
    mu.check_length(n)?;
    require_theta(k, p)?;
    if mu.is_empty() || n == 0 {
        return Ok(Poly::one());
    }
    if mu.len() == n {
        let lower = mu.minus_one(n)?;
        let sq = p.with_s(p.s().clone() * p.q());
        let qi = p.q_pow(-1);
        let img: Vec<_> = (0..n).map(|i| Some(VarImage::scaled_var(qi.clone(), i, 1))).collect();
        let mut acc = pstar_integral(&lower, n, k, &sq)?.subst(&img).scale(&p.q_pow(lower.weight() as i64));
        let s2 = p.s2();
        for i in 1..=n as i64 {
            let f = crate::interp::bc_factor((i - 1) as usize, p.t_pow(i - n as i64), &(p.t_pow(n as i64 - i) * &s2));
            acc = (&acc * &f).scale(&p.t_pow(1 - i));
        }
        return Ok(acc);
    }
    let sh = p.with_s(p.s().clone() * p.t_half());
    let inner = pstar_integral(mu, n - 1, k, &sh)?;
    let (c, d, rhs) = integral_sides(mu, n, k, p, &inner)?;
    let mut acc = rhs.scale(&c.inv().ok_or(Error::DivisionByZero)?);
    for f in &d {
        acc = acc.div_exact(f).ok_or_else(|| Error::Precondition("integral not divisible by D".into()))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Rat, RatFunc};

    #[test]
    fn integral_of_square() {
        let q = RatFunc::var(crate::serial::Q_HALF).pow(2);
        let f = Poly::<RatFunc>::var(0).pow(2);
        let lo = Bound::var(RatFunc::one(), 1);
        let hi = Bound::var(RatFunc::one(), 2);
        let got = q_integral(&f, 0, &lo, &hi, &q).unwrap();
        let want = (&Poly::var(2).pow(2) - &Poly::var(1).pow(2))
            .scale(&(RatFunc::one() + q.clone()).inv().unwrap());
        assert_eq!(got, want);
        assert_eq!(q_integral(&Poly::one(), 0, &lo, &hi, &q), Err(Error::ConstantTermInMeasure));
    }

    #[test]
    fn symmetric_bounds_cancel() {
        let q = Rat::new(1, 3);
        let f = &Poly::<Rat>::var(0) - &Poly::monomial(Monomial::var_pow(0, -1), Rat::one());
        let lo = Bound::new(Rat::one(), Monomial::var(1)).unwrap();
        let hi = Bound::new(q.clone(), Monomial::var_pow(1, -1)).unwrap();
        assert!(q_integral(&f, 0, &lo, &hi, &q).unwrap().is_zero());
    }

    #[test]
    fn constants() {
        let p = Params::symbolic_theta(1);
        let one = RatFunc::one();
        let q = p.q().clone();
        assert!(c_const(&Partition::empty(), 1, 1, &p).unwrap().is_one());
        let want = p.q_half().clone()
            * (one.clone() - &q).pow(2)
            * (one.clone() - q.pow(2))
            * ((one.clone() - q.pow(3)) * (one.clone() - q.pow(4)) * (one - q.pow(5))).inv().unwrap();
        assert_eq!(c_const(&Partition::empty(), 2, 1, &p).unwrap(), want);
    }

    #[test]
    fn small_identities() {
        let p = Params::symbolic_theta(0);
        assert!(integral_rep_verify(&Partition::empty(), 2, 0, &p).unwrap());
        assert!(integral_rep_verify(&Partition::new(&[1]), 2, 0, &p).unwrap());
        assert_eq!(integral_rep_verify(&Partition::new(&[1, 1]), 2, 0, &p), Err(Error::MuNNonzero));
    }
}
