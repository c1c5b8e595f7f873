//! Substitution of generators by monomials or numbers.

use std::collections::BTreeMap;

use crate::arith::{Field, Monomial, Poly, Rat, RatFunc, VarImage};
use crate::error::{Error, Result};
use crate::serial::{Q_HALF, T_HALF};

#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    Number(Rat),
    /// `coef * monomial` in the surviving symbols.
    Monomial(Rat, Monomial),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SpecializationSpec {
    map: BTreeMap<usize, Target>,
    /// Set when `t_half -> q_half^theta`.
    pub theta: Option<i64>,
}

impl SpecializationSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, symbol: usize, target: Target) -> Self {
        self.map.insert(symbol, target);
        self
    }

    pub fn number(self, symbol: usize, v: Rat) -> Self {
        self.set(symbol, Target::Number(v))
    }

    pub fn monomial(self, symbol: usize, c: Rat, m: Monomial) -> Self {
        self.set(symbol, Target::Monomial(c, m))
    }

    /// `t_half -> q_half^(2k+1)`, i.e. `t = q^theta` with odd theta.
    pub fn odd_theta(k: u32) -> Self {
        let theta = 2 * k as i64 + 1;
        let mut s = Self::new().monomial(T_HALF, Rat::one(), Monomial::var_pow(Q_HALF, theta));
        s.theta = Some(theta);
        s
    }

    pub fn targets(&self) -> impl Iterator<Item = (&usize, &Target)> {
        self.map.iter()
    }

    fn validate(&self) -> Result<()> {
        for (sym, t) in &self.map {
            if let Target::Monomial(c, m) = t {
                if c.is_zero() {
                    return Err(Error::IllFormedSpec(format!("symbol {sym} sent to zero monomial")));
                }
                if let Some(bad) = self.map.keys().find(|k| m.exp(**k) != 0) {
                    return Err(Error::IllFormedSpec(format!(
                        "target of symbol {sym} mentions removed symbol {bad}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn images(&self, p: &Poly<Rat>) -> Result<Vec<Option<VarImage<Rat>>>> {
        let width = self.map.keys().max().map(|k| k + 1).unwrap_or(0);
        let mut img = vec![None; width];
        for (sym, t) in &self.map {
            img[*sym] = Some(match t {
                Target::Number(v) => {
                    if v.is_zero() && p.var_range(*sym).map(|r| r.0 < 0).unwrap_or(false) {
                        return Err(Error::IllFormedSpec(format!(
                            "symbol {sym} sent to 0 but occurs with a negative power"
                        )));
                    }
                    VarImage::scalar(v.clone())
                }
                Target::Monomial(c, m) => VarImage { coef: c.clone(), mono: m.clone() },
            });
        }
        Ok(img)
    }

    pub fn apply_poly(&self, p: &Poly<Rat>) -> Result<Poly<Rat>> {
        self.validate()?;
        let img = self.images(p)?;
        Ok(p.subst(&img))
    }

    pub fn apply(&self, r: &RatFunc) -> Result<RatFunc> {
        self.validate()?;
        let mut acc = RatFunc::from_poly(self.apply_poly(r.numer())?);
        for (f, k) in r.den_factors() {
            let d = self.apply_poly(f)?;
            let inv = RatFunc::from_poly(d).inv().ok_or(Error::DivisionByZero)?;
            for _ in 0..*k {
                acc *= &inv;
            }
        }
        Ok(acc)
    }
}

/// Applies the spec to a polynomial with rational-function coefficients.
pub fn substitute(p: &Poly<RatFunc>, spec: &SpecializationSpec) -> Result<Poly<RatFunc>> {
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        terms.push((m.clone(), spec.apply(c)?));
    }
    Ok(Poly::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::serial::{Alphabet, S};

    #[test]
    fn theta_rewrite() {
        let a = Alphabet::new(1);
        // 1 - t*x -> 1 - q^3 x
        let t = RatFunc::var(T_HALF).pow(2);
        let x = RatFunc::var(a.x(1));
        let p = RatFunc::one() - t * x.clone();
        let r = SpecializationSpec::odd_theta(1).apply(&p).unwrap();
        let q3 = RatFunc::var(Q_HALF).pow(6);
        assert_eq!(r, RatFunc::one() - q3 * x);
    }

    #[test]
    fn zero_into_negative_power_is_rejected() {
        let p = RatFunc::var(S).inv().unwrap();
        let spec = SpecializationSpec::new().number(S, Rat::zero());
        assert!(matches!(spec.apply(&p), Err(Error::IllFormedSpec(_))));
    }

    #[test]
    fn target_may_not_mention_removed_symbol() {
        let spec = SpecializationSpec::new()
            .monomial(S, Rat::one(), Monomial::var(Q_HALF))
            .number(Q_HALF, Rat::from(2));
        assert!(spec.apply(&RatFunc::var(S)).is_err());
    }
}
