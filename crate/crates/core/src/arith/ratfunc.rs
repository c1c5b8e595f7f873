//! The rational-function field over the rationals.
//!
//! A value is a Laurent numerator over a product of normalized denominator
//! factors. Factors are never multiplied out; cancellation is by trial
//! exact division of the numerator, which is what keeps symbolic
//! elimination from blowing up without a multivariate gcd. Equality is
//! decided by cross-multiplication.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::poly::{Monomial, Poly};
use super::rat::{big_gcd, big_lcm, Rat};

#[derive(Clone)]
pub struct RatFunc {
    num: Poly<Rat>,
    /// Sorted by [`poly_cmp`]; each factor primitive, non-constant, with
    /// positive leading coefficient and no monomial content.
    den: Vec<(Poly<Rat>, u32)>,
}

/// A total order on polynomials, used only to keep factor lists sorted.
pub fn poly_cmp(a: &Poly<Rat>, b: &Poly<Rat>) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for ((ma, ca), (mb, cb)) in a.terms().iter().zip(b.terms()) {
            match ma.cmp(mb).then_with(|| ca.cmp(cb)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

/// Splits `p = c * m * g` with `g` primitive, positive leading coefficient
/// and no monomial content. `p` must be nonzero.
pub fn normalize(p: &Poly<Rat>) -> (Rat, Monomial, Poly<Rat>) {
    let m = p.monomial_content();
    let mut small = true;
    let (mut g, mut l) = (0i64, 1i64);
    for (_, c) in p.terms() {
        match c {
            Rat::Small(n, d) => {
                g = gcd_i64(g, n.abs());
                match l.checked_mul(*d / gcd_i64(l, *d)) {
                    Some(v) => l = v,
                    None => {
                        small = false;
                        break;
                    }
                }
            }
            Rat::Big(_) => {
                small = false;
                break;
            }
        }
    }
    let mut content = if small {
        Rat::new(g, l)
    } else {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for (_, c) in p.terms() {
            g = big_gcd(&g, &c.numer());
            l = big_lcm(&l, &c.denom());
        }
        Rat::from_big(num_rational::BigRational::new(g, l))
    };
    if p.lead().unwrap().1.is_negative() {
        content = -content;
    }
    let inv = content.recip().unwrap();
    let g = p.mul_monomial(&m.inv(), &inv);
    (content, m, g)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i64
}

fn merge_factors(
    a: &[(Poly<Rat>, u32)],
    b: &[(Poly<Rat>, u32)],
    combine: impl Fn(u32, u32) -> u32,
) -> Vec<(Poly<Rat>, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => poly_cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push((a[i].0.clone(), combine(a[i].1, 0)));
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0.clone(), combine(0, b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                out.push((a[i].0.clone(), combine(a[i].1, b[j].1)));
                i += 1;
                j += 1;
            }
        }
    }
    out.retain(|(_, k)| *k > 0);
    out
}

fn expand(factors: &[(Poly<Rat>, u32)], skip: impl Fn(usize) -> u32) -> Poly<Rat> {
    let mut acc = Poly::one();
    for (idx, (f, k)) in factors.iter().enumerate() {
        for _ in 0..k.saturating_sub(skip(idx)) {
            acc = &acc * f;
        }
    }
    acc
}

fn cancel(num: &mut Poly<Rat>, den: &mut Vec<(Poly<Rat>, u32)>) {
    if num.is_zero() {
        den.clear();
        return;
    }
    for (f, k) in den.iter_mut() {
        while *k > 0 {
            match num.div_exact(f) {
                Some(q) => {
                    *num = q;
                    *k -= 1;
                }
                None => break,
            }
        }
    }
    den.retain(|(_, k)| *k > 0);
}

impl RatFunc {
    pub fn from_poly(p: Poly<Rat>) -> Self {
        RatFunc { num: p, den: Vec::new() }
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(Poly::var(i))
    }

    /// `num / den`; fails when `den` is zero.
    pub fn from_fraction(num: Poly<Rat>, den: &Poly<Rat>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let (c, m, g) = normalize(den);
        let mut num = num.mul_monomial(&m.inv(), &c.recip().unwrap());
        let mut den = if g.is_constant() { Vec::new() } else { vec![(g, 1)] };
        cancel(&mut num, &mut den);
        Some(RatFunc { num, den })
    }

    pub fn numer(&self) -> &Poly<Rat> {
        &self.num
    }

    pub fn den_factors(&self) -> &[(Poly<Rat>, u32)] {
        &self.den
    }

    /// The denominator multiplied out.
    pub fn denom(&self) -> Poly<Rat> {
        expand(&self.den, |_| 0)
    }

    /// The underlying Laurent polynomial when there is no denominator.
    pub fn as_poly(&self) -> Option<&Poly<Rat>> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// The value as a rational number, if it is a constant.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.den.is_empty() && self.num.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.num.uses_var(i) || self.den.iter().any(|(f, _)| f.uses_var(i))
    }

    /// Part of the value homogeneous of degree `e` in variable `var`;
    /// `None` when the denominator involves `var`.
    pub fn component_in(&self, var: usize, e: i64) -> Option<RatFunc> {
        if self.den.iter().any(|(f, _)| f.uses_var(var)) {
            return None;
        }
        let mut num = self.num.filter(|m| m.exp(var) == e);
        let mut den = self.den.clone();
        cancel(&mut num, &mut den);
        Some(RatFunc { num, den })
    }

    /// `(min, max)` exponent of `var` in the numerator, when the
    /// denominator is free of it.
    pub fn range_in(&self, var: usize) -> Option<(i64, i64)> {
        if self.den.iter().any(|(f, _)| f.uses_var(var)) {
            return None;
        }
        self.num.var_range(var)
    }

    /// Applies a substitution to numerator and denominator factors.
    pub fn subst(&self, images: &[Option<super::poly::VarImage<Rat>>]) -> Option<RatFunc> {
        let num = self.num.try_subst(images)?;
        let mut acc = RatFunc::from_poly(num);
        for (f, k) in &self.den {
            let fd = f.try_subst(images)?;
            let d = RatFunc::from_poly(fd).inv()?;
            for _ in 0..*k {
                acc = acc * &d;
            }
        }
        Some(acc)
    }

    fn product(&self, other: &RatFunc) -> RatFunc {
        if self.num.is_zero() || other.num.is_zero() {
            return RatFunc::zero();
        }
        let mut an = self.num.clone();
        let mut bn = other.num.clone();
        let mut ad = self.den.clone();
        let mut bd = other.den.clone();
        cancel(&mut an, &mut bd);
        cancel(&mut bn, &mut ad);
        RatFunc { num: &an * &bn, den: merge_factors(&ad, &bd, |x, y| x + y) }
    }

    fn sum(&self, other: &RatFunc, negate: bool) -> RatFunc {
        if other.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        let (mut num, mut den) = if self.den.len() == other.den.len()
            && self.den.iter().zip(&other.den).all(|(a, b)| a.1 == b.1 && a.0 == b.0)
        {
            let n = if negate { &self.num - &other.num } else { &self.num + &other.num };
            (n, self.den.clone())
        } else {
            let l = merge_factors(&self.den, &other.den, |x, y| x.max(y));
            let mult = |own: &[(Poly<Rat>, u32)]| {
                expand(&l, |i| {
                    own.iter()
                        .find(|(f, _)| f == &l[i].0)
                        .map(|(_, k)| *k)
                        .unwrap_or(0)
                })
            };
            let a = &self.num * &mult(&self.den);
            let b = &other.num * &mult(&other.den);
            (if negate { &a - &b } else { &a + &b }, l)
        };
        cancel(&mut num, &mut den);
        RatFunc { num, den }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Vec::new() }
    }

    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_constant() && self.num.constant_term().is_one()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let (c, m, g) = normalize(&self.num);
        let mut num = expand(&self.den, |_| 0).mul_monomial(&m.inv(), &c.recip().unwrap());
        let mut den = if g.is_constant() { Vec::new() } else { vec![(g, 1)] };
        cancel(&mut num, &mut den);
        Some(RatFunc { num, den })
    }

    fn from_rat(r: &Rat) -> Self {
        RatFunc::from_poly(Poly::constant(r.clone()))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den.len() == other.den.len()
            && self.den.iter().zip(&other.den).all(|(a, b)| a.1 == b.1 && a.0 == b.0)
        {
            return self.num == other.num;
        }
        (self.clone() - other.clone()).num.is_zero()
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        self.sum(rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self.sum(rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        self.product(rhs)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.sum(&rhs, false)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self.sum(&rhs, true)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.product(&rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl AddAssign for RatFunc {
    fn add_assign(&mut self, rhs: RatFunc) {
        *self = self.sum(&rhs, false);
    }
}

impl SubAssign for RatFunc {
    fn sub_assign(&mut self, rhs: RatFunc) {
        *self = self.sum(&rhs, true);
    }
}

impl MulAssign for RatFunc {
    fn mul_assign(&mut self, rhs: RatFunc) {
        *self = self.product(&rhs);
    }
}

impl<'a> AddAssign<&'a RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &'a RatFunc) {
        *self = self.sum(rhs, false);
    }
}

impl<'a> SubAssign<&'a RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &'a RatFunc) {
        *self = self.sum(rhs, true);
    }
}

impl<'a> MulAssign<&'a RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &'a RatFunc) {
        *self = self.product(rhs);
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{:?}", self.num);
        }
        write!(f, "({:?})/(", self.num)?;
        for (i, (p, k)) in self.den.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "({p:?})^{k}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::var(0)
    }

    fn k(n: i64) -> RatFunc {
        RatFunc::from_i64(n)
    }

    #[test]
    fn cancellation() {
        // (q-1)/q + 1/q = 1
        let a = (q() - k(1)) * q().inv().unwrap();
        let b = q().inv().unwrap();
        assert!((a + b).is_one());
    }

    #[test]
    fn factor_product_cancels() {
        // (q^2-1)/(q-1) * 1/(q+1) = 1
        let a = (q() * q() - k(1)) * (q() - k(1)).inv().unwrap();
        let b = (q() + k(1)).inv().unwrap();
        let r = a * b;
        assert_eq!(r, k(1));
        assert!(r.is_one());
    }

    #[test]
    fn equality_is_cross_multiplication() {
        let x = RatFunc::var(1);
        assert_eq!(x.clone() * x.inv().unwrap(), k(1));
        let a = (q() * q() - k(1)).inv().unwrap();
        let b = (q() - k(1)).inv().unwrap() * (q() + k(1)).inv().unwrap();
        assert_eq!(a, b);
        assert_ne!(a, (q() - k(1)).inv().unwrap());
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(k(0).inv().is_none());
        assert!((q() - q()).inv().is_none());
    }

    #[test]
    fn normalization_moves_monomials_and_content() {
        // 1/(2q^2 - 4q) = (1/2) q^-1 / (q - 2)
        let d = (k(2) * q() * q() - k(4) * q()).inv().unwrap();
        assert_eq!(d.den_factors().len(), 1);
        let (f, _) = &d.den_factors()[0];
        assert_eq!(f.lead().unwrap().1, Rat::one());
        assert_eq!(f.len(), 2);
    }
}
