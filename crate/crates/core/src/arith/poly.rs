//! Sparse multivariate Laurent polynomials over an exact field.
//!
//! Variables are addressed by index. Exponent vectors are stored with
//! trailing zeros trimmed, so a polynomial never needs to know how many
//! variables its context has; the same value embeds into any larger
//! alphabet unchanged.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::field::Field;

type ExpVec = SmallVec<[i64; 8]>;

fn checked(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .unwrap_or_else(|| panic!("exponent overflow: {a} + {b} exceeds 64-bit range"))
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .unwrap_or_else(|| panic!("exponent overflow: {a} * {b} exceeds 64-bit range"))
}

/// A Laurent monomial `x_0^{e_0} x_1^{e_1} ...` with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(ExpVec);

impl Monomial {
    pub fn one() -> Self {
        Monomial(ExpVec::new())
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: i64) -> Self {
        let mut v = ExpVec::from_elem(0, i + 1);
        v[i] = e;
        Monomial::from_vec(v)
    }

    fn from_vec(mut v: ExpVec) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn from_exps(e: &[i64]) -> Self {
        Monomial::from_vec(ExpVec::from_slice(e))
    }

    pub fn exps(&self) -> &[i64] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of stored exponent slots (one past the highest used variable).
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().fold(0i64, |a, &b| checked(a, b))
    }

    /// Total degree restricted to the variables in `vars`.
    pub fn degree_in(&self, vars: std::ops::Range<usize>) -> i64 {
        vars.map(|i| self.exp(i)).fold(0i64, checked)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(short.0.iter()) {
            *a = checked(*a, *b);
        }
        Monomial::from_vec(v)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| checked_mul(*e, -1)).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> Monomial {
        Monomial::from_vec(self.0.iter().map(|x| checked_mul(*x, e)).collect())
    }

    /// Replace the exponent of variable `i`.
    pub fn with_exp(&self, i: usize, e: i64) -> Monomial {
        let mut v = self.0.clone();
        if v.len() <= i {
            v.resize(i + 1, 0);
        }
        v[i] = e;
        Monomial::from_vec(v)
    }

    /// Rename variables; `map[i]` is the new index of variable `i`.
    pub fn remap(&self, map: &dyn Fn(usize) -> usize) -> Monomial {
        let mut v = ExpVec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let j = map(i);
            if v.len() <= j {
                v.resize(j + 1, 0);
            }
            v[j] = checked(v[j], e);
        }
        Monomial::from_vec(v)
    }

    /// Componentwise minimum (the gcd of two Laurent monomials).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::from_vec((0..n).map(|i| self.exp(i).min(other.exp(i))).collect())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent of the
    /// earliest variable.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            match self.exp(i).cmp(&other.exp(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Image of one variable under a monomial substitution: `x_i -> c * m`.
#[derive(Clone, Debug)]
pub struct VarImage<K> {
    pub coef: K,
    pub mono: Monomial,
}

impl<K: Field> VarImage<K> {
    pub fn scalar(c: K) -> Self {
        VarImage { coef: c, mono: Monomial::one() }
    }

    pub fn mono(m: Monomial) -> Self {
        VarImage { coef: K::one(), mono: m }
    }

    pub fn scaled_var(c: K, var: usize, e: i64) -> Self {
        VarImage { coef: c, mono: Monomial::var_pow(var, e) }
    }
}

/// Sparse Laurent polynomial; terms sorted in strictly descending
/// graded-lex order with nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct Poly<K> {
    terms: Vec<(Monomial, K)>,
}

impl<K: Field> Default for Poly<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Field> Poly<K> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: K) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), K::one())
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, K)>>(it: I) -> Self {
        let mut acc: FxHashMap<Monomial, K> = FxHashMap::default();
        for (m, c) in it {
            match acc.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, K>) -> Self {
        let mut terms: Vec<(Monomial, K)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Terms already sorted descending with nonzero coefficients.
    fn from_sorted(terms: Vec<(Monomial, K)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, K)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant (monomial-free) coefficient.
    pub fn constant_term(&self) -> K {
        self.coeff(&Monomial::one())
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => K::zero(),
        }
    }

    pub fn lead(&self) -> Option<&(Monomial, K)> {
        self.terms.first()
    }

    pub fn trail(&self) -> Option<&(Monomial, K)> {
        self.terms.last()
    }

    /// If this is a single term, return it.
    pub fn as_monomial(&self) -> Option<(&Monomial, &K)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k.clone() * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // graded lex is translation invariant, so the order is preserved
        Poly {
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k.clone() * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Keeps the terms whose monomial satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&Monomial) -> bool) -> Self {
        Poly { terms: self.terms.iter().filter(|(m, _)| pred(m)).cloned().collect() }
    }

    /// Rename variables (the map may merge variables).
    pub fn remap_vars(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.remap(&map), c.clone())))
    }

    /// Shift every variable index by `offset`.
    pub fn shift_vars(&self, offset: usize) -> Self {
        // order preserving only for offset 0, so re-sort
        self.remap_vars(|i| i + offset)
    }

    /// `(min, max)` exponent of variable `i`, `None` for the zero polynomial.
    pub fn var_range(&self, i: usize) -> Option<(i64, i64)> {
        let mut it = self.terms.iter().map(|(m, _)| m.exp(i));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Highest variable index appearing plus one.
    pub fn width(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.width()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) != 0)
    }

    /// Maximum total degree over `vars` among all terms.
    pub fn max_degree_in(&self, vars: std::ops::Range<usize>) -> Option<i64> {
        self.terms.iter().map(|(m, _)| m.degree_in(vars.clone())).max()
    }

    pub fn min_degree_in(&self, vars: std::ops::Range<usize>) -> Option<i64> {
        self.terms.iter().map(|(m, _)| m.degree_in(vars.clone())).min()
    }

    /// Gcd of all monomials (componentwise minimum exponent).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(),
            Some((m, _)) => it.fold(m.clone(), |acc, (t, _)| acc.gcd(t)),
        }
    }

    /// Applies `x_i -> images[i]` for every `i` with `Some` image.
    ///
    /// Panics when a variable is sent to zero while appearing with a
    /// negative exponent; use [`Poly::try_subst`] to get an error instead.
    pub fn subst(&self, images: &[Option<VarImage<K>>]) -> Self {
        self.try_subst(images).expect("substituted zero into a negative power")
    }

    pub fn try_subst(&self, images: &[Option<VarImage<K>>]) -> Option<Self> {
        let mut pow_cache: Vec<FxHashMap<i64, K>> = vec![FxHashMap::default(); images.len()];
        let mut acc: FxHashMap<Monomial, K> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut mono = ExpVec::new();
            let exps = m.exps();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match images.get(i).and_then(|x| x.as_ref()) {
                    None => {
                        if mono.len() <= i {
                            mono.resize(i + 1, 0);
                        }
                        mono[i] = checked(mono[i], e);
                    }
                    Some(img) => {
                        let cache = &mut pow_cache[i];
                        let p = match cache.get(&e) {
                            Some(p) => p.clone(),
                            None => {
                                if e < 0 && img.coef.is_zero() {
                                    return None;
                                }
                                let p = img.coef.pow(e);
                                cache.insert(e, p.clone());
                                p
                            }
                        };
                        coef *= &p;
                        for (j, &f) in img.mono.exps().iter().enumerate() {
                            if f == 0 {
                                continue;
                            }
                            if mono.len() <= j {
                                mono.resize(j + 1, 0);
                            }
                            mono[j] = checked(mono[j], checked_mul(f, e));
                        }
                    }
                }
            }
            if coef.is_zero() {
                continue;
            }
            let key = Monomial::from_vec(mono);
            match acc.get_mut(&key) {
                Some(v) => *v += &coef,
                None => {
                    acc.insert(key, coef);
                }
            }
        }
        Some(Self::from_map(acc))
    }

    /// Substitutes field values for the first `values.len()` variables.
    pub fn eval_partial(&self, values: &[Option<K>]) -> Self {
        let images: Vec<Option<VarImage<K>>> =
            values.iter().map(|v| v.clone().map(VarImage::scalar)).collect();
        self.subst(&images)
    }

    /// Full evaluation; every variable that occurs must receive a value.
    pub fn eval(&self, values: &[K]) -> K {
        let opt: Vec<Option<K>> = values.iter().cloned().map(Some).collect();
        let r = self.eval_partial(&opt);
        assert!(r.is_constant(), "eval: polynomial uses variables beyond the supplied point");
        r.constant_term()
    }

    /// Exact division in the Laurent ring; `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Poly<K>) -> Option<Poly<K>> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = d.as_monomial() {
            let ci = c.inv()?;
            return Some(self.mul_monomial(&m.inv(), &ci));
        }
        let width = self.width().max(d.width());
        // per-variable box for the quotient exponents
        let mut lo = Vec::with_capacity(width);
        let mut hi = Vec::with_capacity(width);
        for i in 0..width {
            let (a_lo, a_hi) = self.var_range(i).unwrap();
            let (d_lo, d_hi) = d.var_range(i).unwrap();
            let (l, h) = (a_lo - d_lo, a_hi - d_hi);
            if l > h {
                return None;
            }
            lo.push(l);
            hi.push(h);
        }
        let in_box = |m: &Monomial| (0..width).all(|i| (lo[i]..=hi[i]).contains(&m.exp(i)));
        if self.len() < d.len() {
            return None;
        }
        let (d_lead_m, d_lead_c) = d.lead().unwrap();
        let d_lead_inv = d_lead_c.inv()?;
        let mut rem: BTreeMap<Monomial, K> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, K)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(d_lead_m);
            if !in_box(&qm) {
                return None;
            }
            let qc = c * &d_lead_inv;
            for (dm, dc) in d.terms.iter().skip(1) {
                let key = dm.mul(&qm);
                let delta = qc.clone() * dc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= &delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly::from_sorted(quot))
    }

    /// Sum of many polynomials through one accumulator.
    pub fn sum<'a, I: IntoIterator<Item = &'a Poly<K>>>(it: I) -> Self
    where
        K: 'a,
    {
        let mut acc: FxHashMap<Monomial, K> = FxHashMap::default();
        for p in it {
            for (m, c) in &p.terms {
                match acc.get_mut(m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m.clone(), c.clone());
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        a[i].1.clone() - &b[j].1
                    } else {
                        a[i].1.clone() + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -t.1.clone() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = other.as_monomial() {
            return self.mul_monomial(m, c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return other.mul_monomial(m, c);
        }
        let mut acc: FxHashMap<Monomial, K> =
            FxHashMap::with_capacity_and_hasher(self.len() * other.len() / 2 + 1, Default::default());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let key = m1.mul(m2);
                let v = c1.clone() * c2;
                match acc.get_mut(&key) {
                    Some(e) => *e += &v,
                    None => {
                        acc.insert(key, v);
                    }
                }
            }
        }
        Self::from_map(acc)
    }
}

impl<'a, K: Field> Add<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &'a Poly<K>) -> Poly<K> {
        self.merge(rhs, false)
    }
}

impl<'a, K: Field> Sub<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &'a Poly<K>) -> Poly<K> {
        self.merge(rhs, true)
    }
}

impl<'a, K: Field> Mul<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &'a Poly<K>) -> Poly<K> {
        self.product(rhs)
    }
}

impl<K: Field> Add for Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: Poly<K>) -> Poly<K> {
        self.merge(&rhs, false)
    }
}

impl<K: Field> Sub for Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: Poly<K>) -> Poly<K> {
        self.merge(&rhs, true)
    }
}

impl<K: Field> Mul for Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: Poly<K>) -> Poly<K> {
        self.product(&rhs)
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        -&self
    }
}

impl<'a, K: Field> AddAssign<&'a Poly<K>> for Poly<K> {
    fn add_assign(&mut self, rhs: &'a Poly<K>) {
        *self = self.merge(rhs, false);
    }
}

impl<'a, K: Field> SubAssign<&'a Poly<K>> for Poly<K> {
    fn sub_assign(&mut self, rhs: &'a Poly<K>) {
        *self = self.merge(rhs, true);
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c:?}){m:?}")?;
        }
        Ok(())
    }
}

/// Product of several polynomials, multiplying smallest first.
pub fn product_of<K: Field>(mut factors: Vec<Poly<K>>) -> Poly<K> {
    if factors.is_empty() {
        return Poly::one();
    }
    factors.sort_by_key(|p| p.len());
    let mut acc = factors.remove(0);
    for f in &factors {
        acc = &acc * f;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn x(i: usize) -> Poly<Rat> {
        Poly::var(i)
    }

    fn c(n: i64) -> Poly<Rat> {
        Poly::constant(Rat::from(n))
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial::from_exps(&[1, 0]);
        let b = Monomial::from_exps(&[0, 1]);
        let one = Monomial::one();
        let inv = Monomial::from_exps(&[-1]);
        assert!(a > b);
        assert!(b > one);
        assert!(one > inv);
        assert_eq!(Monomial::from_exps(&[2, 0, 0]), Monomial::var_pow(0, 2));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &x(0) - &x(0);
        assert!(p.is_zero());
        let q = &(&x(0) + &c(1)) * &(&x(0) - &c(1));
        assert_eq!(q, &(&x(0) * &x(0)) - &c(1));
    }

    #[test]
    fn exact_division_laurent() {
        // (q^2 - 1) / (q - 1) = q + 1
        let num = &(&x(0) * &x(0)) - &c(1);
        let den = &x(0) - &c(1);
        assert_eq!(num.div_exact(&den).unwrap(), &x(0) + &c(1));
        // not divisible
        assert!(den.div_exact(&num).is_none());
        assert!((&x(0) + &c(2)).div_exact(&den).is_none());
        // Laurent: (x - 1/x) / (1 - 1/x^2) = x
        let xi = Poly::monomial(Monomial::var_pow(0, -1), Rat::one());
        let xi2 = Poly::monomial(Monomial::var_pow(0, -2), Rat::one());
        let a = &x(0) - &xi;
        let b = &c(1) - &xi2;
        assert_eq!(a.div_exact(&b).unwrap(), x(0));
    }

    #[test]
    fn division_terminates_on_non_divisible_laurent() {
        // x - y does not divide x + y
        let a = &x(0) + &x(1);
        let b = &x(0) - &x(1);
        assert!(a.div_exact(&b).is_none());
    }

    #[test]
    fn substitution_monomial_images() {
        // x0 -> 2*x1^-1 applied to x0^2 + x0*x1
        let p = &(&x(0) * &x(0)) + &(&x(0) * &x(1));
        let img = vec![Some(VarImage::scaled_var(Rat::from(2), 1, -1))];
        let r = p.subst(&img);
        let expect = &Poly::monomial(Monomial::var_pow(1, -2), Rat::from(4)) + &c(2);
        assert_eq!(r, expect);
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn exponent_overflow_aborts() {
        let m = Monomial::var_pow(0, i64::MAX);
        let _ = m.mul(&Monomial::var(0));
    }
}
