use rayon::prelude::*;

use super::norm_h;
use crate::arith::{Field, Monomial, Poly};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::{partitions_upto, Partition};

/// Distinct permutations of `v`, lexicographic.
pub(crate) fn distinct_perms(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn star_consts<K: Field>(n: usize, p: &Params<K>) -> Vec<K> {
    (1..=n).map(|i| p.t_pow((n - i) as i64) * p.s()).collect()
}

/// `sum over distinct a in S_n nu of prod_(a_i > 0) (x*_i^a_i + x*_i^-a_i)`.
pub fn orbit_sum<K: Field>(nu: &Partition, n: usize, p: &Params<K>) -> Poly<K> {
    let c = star_consts(n, p);
    let mut terms = Vec::new();
    for a in distinct_perms(&nu.padded(n)) {
        let mut acc = Poly::one();
        for (i, &e) in a.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let e = e as i64;
            let f = Poly::from_terms([
                (Monomial::var_pow(i, e), c[i].pow(e)),
                (Monomial::var_pow(i, -e), c[i].pow(-e)),
            ]);
            acc = &acc * &f;
        }
        terms.push(acc);
    }
    Poly::sum(&terms)
}

/// The orbit sum evaluated at `x = q^lambda`, without building polynomials.
fn orbit_value<K: Field>(nu: &Partition, lambda: &Partition, n: usize, p: &Params<K>) -> K {
    let c = star_consts(n, p);
    let z: Vec<K> = lambda.padded(n).iter().zip(&c).map(|(&l, c)| p.q_pow(l as i64) * c).collect();
    let mut total = K::zero();
    for a in distinct_perms(&nu.padded(n)) {
        let mut acc = K::one();
        for (i, &e) in a.iter().enumerate() {
            if e > 0 {
                acc *= z[i].pow(e as i64) + z[i].pow(-(e as i64));
            }
        }
        total += acc;
    }
    total
}

/// Gaussian elimination; `SingularSystem` when no pivot exists.
pub(crate) fn solve_linear<K: Field>(mut a: Vec<Vec<K>>, mut b: Vec<K>) -> Result<Vec<K>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv().unwrap();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() * &inv;
            for k in col..n {
                let d = f.clone() * &a[col][k];
                a[r][k] -= d;
            }
            let d = f * &b[col];
            b[r] -= d;
        }
    }
    let mut x = vec![K::zero(); n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for k in r + 1..n {
            acc -= a[r][k].clone() * &x[k];
        }
        x[r] = acc * a[r][r].inv().unwrap();
    }
    Ok(x)
}

/// Reference construction: the interpolation conditions as a square
/// linear system in the orbit-sum basis.
pub fn pstar_solve<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> Result<Poly<K>> {
    mu.check_length(n)?;
    let basis = partitions_upto(mu.weight(), n);
    let rows: Vec<Vec<K>> = basis
        .par_iter()
        .map(|lam| basis.iter().map(|nu| orbit_value(nu, lam, n, p)).collect())
        .collect();
    let rhs: Vec<K> = basis.iter().map(|lam| if lam == mu { K::one() } else { K::zero() }).collect();
    let coeffs = solve_linear(rows, rhs)?;
    let h = norm_h(mu, n, p)?;
    let terms: Vec<Poly<K>> = basis
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(nu, c)| orbit_sum(nu, n, p).scale(&(c * &h)))
        .collect();
    Ok(Poly::sum(&terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perms() {
        assert_eq!(distinct_perms(&[1, 0, 1]).len(), 3);
        assert_eq!(distinct_perms(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_perms(&[]).len(), 1);
    }
}
