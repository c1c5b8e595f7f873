//! Finite certificates that the one-variable `f_m` satisfy no
//! q-difference equation of bounded order and coefficient degree.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{Field, Monomial, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::interp::norm_h;
use crate::params::Params;
use crate::partition::Partition;
use crate::serial::{to_text, Alphabet};

/// `prod_(j<m) (x - q^j)(1 - 1/(s^2 q^j x))`.
pub fn f_closed_form<K: Field>(m: usize, p: &Params<K>) -> Poly<K> {
    let mut acc = Poly::one();
    for j in 0..m as i64 {
        let qj = p.q_pow(j);
        let d = (p.s2() * &qj).inv().expect("nonzero parameters");
        let f = Poly::from_terms([
            (Monomial::var(0), K::one()),
            (Monomial::one(), -(qj.clone() + &d)),
            (Monomial::var_pow(0, -1), qj * &d),
        ]);
        acc = &acc * &f;
    }
    acc
}

/// A point `q^(q_exp) s^(s_exp)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QsMonomial {
    pub q_exp: i64,
    pub s_exp: i64,
}

impl QsMonomial {
    fn value<K: Field>(&self, p: &Params<K>) -> K {
        p.q_pow(self.q_exp) * p.s().pow(self.s_exp)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationCertificate {
    pub d: usize,
    pub deg_bound: usize,
    pub probes: Vec<usize>,
    /// Forced roots of the leading coefficient `a_d`.
    pub roots_plus: Vec<QsMonomial>,
    /// Forced roots of `a_(-d)`.
    pub roots_minus: Vec<QsMonomial>,
    /// `f_m(q^m)` in canonical text, one per probe.
    pub witnesses: Vec<String>,
    pub distinct: bool,
}

/// Checks the vanishing pattern at `x = q^(m-d)` and at its mirror
/// `x = 1/(s^2 q^(m-d))`: every shift `q^i x`, `|i| <= d`, hits a root of
/// `f_m` except `i = d` (resp. `i = -d`), where the value is `w`.
fn pattern_holds<K: Field>(f: &Poly<K>, m: usize, d: usize, w: &K, p: &Params<K>) -> bool {
    let (m, d) = (m as i64, d as i64);
    let s2i = p.s2().inv().unwrap();
    (-d..=d).all(|i| {
        let plus = f.eval(&[p.q_pow(m - d + i)]);
        let minus = f.eval(&[s2i.clone() * p.q_pow(i - (m - d))]);
        let plus_ok = if i == d { plus == *w } else { plus.is_zero() };
        let minus_ok = if i == -d { minus == *w } else { minus.is_zero() };
        plus_ok && minus_ok
    })
}

fn distinct(v: &[QsMonomial]) -> bool {
    let mut s: Vec<_> = v.iter().map(|m| (m.q_exp, m.s_exp)).collect();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// Builds a certificate over the probes `m = 2d, ..., 2d + probe_count - 1`.
///
/// A hypothetical relation `sum a_i(x) f_m(q^i x) = E(m) f_m(x)` with
/// rational `a_i` is first cleared of denominators, so the coefficients
/// become Laurent polynomials of degree span at most `deg_bound`. The
/// leading one then has more than `deg_bound` roots and must vanish.
pub fn refute(d: usize, deg_bound: usize, probe_count: usize) -> Result<RefutationCertificate> {
    if d == 0 {
        return Err(Error::Precondition("order d must be at least 1".into()));
    }
    if probe_count <= deg_bound {
        return Err(Error::InsufficientProbes { deg_bound, probes: probe_count });
    }
    let p = Params::<RatFunc>::symbolic();
    let alphabet = Alphabet::new(1);
    let probes: Vec<usize> = (2 * d..2 * d + probe_count).collect();
    let witnesses: Vec<Result<String>> = probes
        .par_iter()
        .map(|&m| {
            let f = f_closed_form(m, &p);
            let w = f.eval(&[p.q_pow(m as i64)]);
            if w.is_zero() || w != norm_h(&Partition::new(&[m]), 1, &p)? || !pattern_holds(&f, m, d, &w, &p) {
                return Err(Error::Precondition(format!("witness pattern fails at m = {m}")));
            }
            Ok(to_text(&w, &alphabet))
        })
        .collect();
    let witnesses = witnesses.into_iter().collect::<Result<Vec<_>>>()?;
    let roots_plus: Vec<_> = probes.iter().map(|&m| QsMonomial { q_exp: m as i64 - d as i64, s_exp: 0 }).collect();
    let roots_minus: Vec<_> = probes.iter().map(|&m| QsMonomial { q_exp: d as i64 - m as i64, s_exp: -2 }).collect();
    let distinct = distinct(&roots_plus) && distinct(&roots_minus);
    Ok(RefutationCertificate { d, deg_bound, probes, roots_plus, roots_minus, witnesses, distinct })
}

/// Re-derives every witness and the counting argument from scratch.
pub fn verify_certificate(c: &RefutationCertificate) -> bool {
    let p = Params::<RatFunc>::symbolic();
    let alphabet = Alphabet::new(1);
    let n = c.probes.len();
    if c.d == 0 || n <= c.deg_bound || c.roots_plus.len() != n || c.roots_minus.len() != n || c.witnesses.len() != n {
        return false;
    }
    if !c.distinct || !distinct(&c.roots_plus) || !distinct(&c.roots_minus) {
        return false;
    }
    c.probes.iter().enumerate().all(|(k, &m)| {
        if m < 2 * c.d {
            return false;
        }
        let f = f_closed_form(m, &p);
        let w = f.eval(&[p.q_pow(m as i64)]);
        let rp = c.roots_plus[k];
        let rm = c.roots_minus[k];
        !w.is_zero()
            && to_text(&w, &alphabet) == c.witnesses[k]
            && rp.value(&p) == p.q_pow(m as i64 - c.d as i64)
            && rm.value(&p) == (p.s2() * p.q_pow(m as i64 - c.d as i64)).inv().unwrap()
            && pattern_holds(&f, m, c.d, &w, &p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = refute(1, 3, 4).unwrap();
        assert_eq!(c.roots_plus.iter().map(|r| r.q_exp).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert!(verify_certificate(&c));
        assert_eq!(refute(1, 3, 2), Err(Error::InsufficientProbes { deg_bound: 3, probes: 2 }));
        let c = refute(3, 6, 7).unwrap();
        assert_eq!(c.roots_plus.first().unwrap().q_exp, 3);
        assert_eq!(c.roots_plus.last().unwrap().q_exp, 9);
        assert!(refute(0, 3, 4).is_err());
    }

    #[test]
    fn tampered_certificate_fails() {
        let mut c = refute(1, 2, 3).unwrap();
        c.witnesses[0] = "1".into();
        assert!(!verify_certificate(&c));
        let mut c = refute(1, 2, 3).unwrap();
        c.probes.pop();
        assert!(!verify_certificate(&c));
    }
}
