use std::collections::BTreeMap;

use super::{check_in_algebra, eval_q_lambda, norm_h, BranchMemo};
use crate::arith::{Field, Poly};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::{partitions_of, partitions_upto, Partition};

/// Coefficients `f_mu` of `f = sum f_mu P*_mu`, found triangularly from
/// the values `f(q^lambda)`. Variables past the first `n` are carried
/// along, so coefficients are polynomials in them.
pub fn newton_expand<K: Field>(
    f: &Poly<K>,
    n: usize,
    d: usize,
    p: &Params<K>,
) -> Result<BTreeMap<Partition, Poly<K>>> {
    if !check_in_algebra(f, n, p) {
        return Err(Error::NotInAlgebra("not invariant in the starred variables".into()));
    }
    let grid = partitions_upto(d, n);
    let mut memo = BranchMemo::new(p);
    let basis: Vec<(Partition, Poly<K>)> = grid.iter().map(|m| (m.clone(), memo.get(m, n))).collect();

    let mut coeffs: Vec<(Partition, Poly<K>)> = Vec::new();
    let residual = |lam: &Partition, coeffs: &[(Partition, Poly<K>)]| -> Poly<K> {
        let mut r = eval_q_lambda(f, lam, n, p);
        for (mu, c) in coeffs {
            if !mu.is_subset_of(lam) {
                continue;
            }
            let (_, pm) = basis.iter().find(|(b, _)| b == mu).unwrap();
            let v = eval_q_lambda(pm, lam, n, p).constant_term();
            if !v.is_zero() {
                r -= &c.scale(&v);
            }
        }
        r
    };
    for lam in &grid {
        let r = residual(lam, &coeffs);
        if r.is_zero() {
            continue;
        }
        let h = norm_h(lam, n, p)?.inv().ok_or(Error::DivisionByZero)?;
        coeffs.push((lam.clone(), r.scale(&h)));
    }
    for lam in partitions_of(d + 1, n, d + 1) {
        if !residual(&lam, &coeffs).is_zero() {
            return Err(Error::DegreeExceeded(d));
        }
    }
    Ok(coeffs.into_iter().collect())
}
