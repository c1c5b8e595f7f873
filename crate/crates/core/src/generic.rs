//! Exact test of the genericity assumption `q^i t^j s^k != 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rat;

/// Pairwise coprime refinement of a list of integers > 1.
fn coprime_base(mut xs: Vec<BigInt>) -> Vec<BigInt> {
    let one = BigInt::one();
    xs.retain(|x| *x > one);
    let mut base: Vec<BigInt> = Vec::new();
    while let Some(mut x) = xs.pop() {
        let mut k = 0;
        while k < base.len() {
            let g = x.gcd(&base[k]);
            if g > one {
                let b = base.swap_remove(k);
                let rest = &b / &g;
                x /= &g;
                for v in [g, rest, x.clone()] {
                    if v > one {
                        xs.push(v);
                    }
                }
                x = BigInt::one();
                break;
            }
            k += 1;
        }
        if x > one {
            base.push(x);
        }
    }
    base.sort();
    base.dedup();
    base
}

fn valuation(mut x: BigInt, p: &BigInt) -> i64 {
    let mut v = 0;
    while !x.is_zero() && (&x % p).is_zero() {
        x /= p;
        v += 1;
    }
    v
}

fn exponent_vector(r: &Rat, base: &[BigInt]) -> Vec<i64> {
    let n = r.numer().abs();
    let d = r.denom();
    base.iter().map(|p| valuation(n.clone(), p) - valuation(d.clone(), p)).collect()
}

/// True iff `q^i t^j s^k != 1` for all `0 <= i,j,k <= bound` not all zero,
/// and `|q|, |t| != 1`.
pub fn check_generic(q: &Rat, t: &Rat, s: &Rat, bound: u32) -> bool {
    check_generic_multi(q, t, std::slice::from_ref(s), bound)
}

/// Same check with several values in the `s` slot, each tested on its own.
pub fn check_generic_multi(q: &Rat, t: &Rat, s_values: &[Rat], bound: u32) -> bool {
    if q.is_zero() || t.is_zero() || s_values.iter().any(|s| s.is_zero()) {
        return false;
    }
    if q.abs().is_one() || t.abs().is_one() {
        return false;
    }
    s_values.iter().all(|s| no_relation(&[q, t, s], bound))
}

fn no_relation(vals: &[&Rat; 3], bound: u32) -> bool {
    let mut ints = Vec::new();
    for v in vals {
        ints.push(v.numer().abs());
        ints.push(v.denom());
    }
    let base = coprime_base(ints);
    let e: Vec<Vec<i64>> = vals.iter().map(|v| exponent_vector(v, &base)).collect();
    let neg: Vec<bool> = vals.iter().map(|v| v.is_negative()).collect();
    let b = bound as i64;
    for i in 0..=b {
        for j in 0..=b {
            for k in 0..=b {
                if i == 0 && j == 0 && k == 0 {
                    continue;
                }
                let odd = (neg[0] && i % 2 == 1) ^ (neg[1] && j % 2 == 1) ^ (neg[2] && k % 2 == 1);
                if odd {
                    continue;
                }
                if (0..base.len()).all(|l| i * e[0][l] + j * e[1][l] + k * e[2][l] == 0) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn brute(q: &Rat, t: &Rat, s: &Rat, b: i64) -> bool {
        if q.abs().is_one() || t.abs().is_one() {
            return false;
        }
        for i in 0..=b {
            for j in 0..=b {
                for k in 0..=b {
                    if i + j + k == 0 {
                        continue;
                    }
                    if (q.pow(i) * t.pow(j) * s.pow(k)).is_one() {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn documented_cases() {
        assert!(check_generic(&r(1, 2), &r(1, 3), &r(5, 1), 8));
        assert!(check_generic(&r(1, 2), &r(1, 3), &r(5, 1), 64));
        assert!(!check_generic(&r(1, 1), &r(1, 3), &r(5, 1), 8));
        assert!(!check_generic(&r(2, 3), &r(3, 2), &r(5, 1), 8));
    }

    #[test]
    fn agrees_with_enumeration() {
        let vals = [r(1, 2), r(2, 1), r(4, 1), r(-1, 2), r(3, 4), r(-1, 1), r(6, 1), r(1, 6), r(9, 4)];
        for q in &vals {
            for t in &vals {
                for s in &vals {
                    assert_eq!(check_generic(q, t, s, 8), brute(q, t, s, 8), "{q} {t} {s}");
                }
            }
        }
    }
}
