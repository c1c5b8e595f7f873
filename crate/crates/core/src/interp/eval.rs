use crate::arith::{Field, Poly, VarImage};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::Partition;

/// Images `x_i -> c_i x_i` with `c_i = t^(n-i) s`, or `1/c_i` when `inverse`.
pub fn starred_images<K: Field>(n: usize, p: &Params<K>, inverse: bool) -> Vec<Option<VarImage<K>>> {
    (1..=n)
        .map(|i| {
            let c = p.t_pow((n - i) as i64) * p.s();
            let c = if inverse { c.inv().expect("s must be nonzero") } else { c };
            Some(VarImage::scaled_var(c, i - 1, 1))
        })
        .collect()
}

/// Rewrites `f(x)` as a polynomial in the starred variables.
pub fn to_starred<K: Field>(f: &Poly<K>, n: usize, p: &Params<K>) -> Poly<K> {
    f.subst(&starred_images(n, p, true))
}

/// Exact evaluation at a point with nonzero coordinates.
pub fn eval_at<K: Field>(f: &Poly<K>, point: &[K]) -> Result<K> {
    if point.iter().any(|c| c.is_zero()) {
        return Err(Error::ZeroCoordinate);
    }
    let r = f.eval_partial(&point.iter().cloned().map(Some).collect::<Vec<_>>());
    if !r.is_constant() {
        return Err(Error::Precondition("point is shorter than the variable list".into()));
    }
    Ok(r.constant_term())
}

/// `f(q^lambda)` in the first `n` variables; other variables survive.
pub fn eval_q_lambda<K: Field>(f: &Poly<K>, lambda: &Partition, n: usize, p: &Params<K>) -> Poly<K> {
    let vals: Vec<Option<K>> = lambda.padded(n).iter().map(|&l| Some(p.q_pow(l as i64))).collect();
    f.eval_partial(&vals)
}

/// Invariance under permutations of the starred variables and under
/// `x*_n -> 1/x*_n`; adjacent transpositions generate the rest.
pub fn check_in_algebra<K: Field>(f: &Poly<K>, n: usize, p: &Params<K>) -> bool {
    for i in 1..n {
        // x*_i <-> x*_(i+1)
        let mut img: Vec<Option<VarImage<K>>> = vec![None; n];
        img[i - 1] = Some(VarImage::scaled_var(p.t_pow(-1), i, 1));
        img[i] = Some(VarImage::scaled_var(p.t().clone(), i - 1, 1));
        if f.subst(&img) != *f {
            return false;
        }
    }
    if n > 0 {
        let mut img: Vec<Option<VarImage<K>>> = vec![None; n];
        img[n - 1] = Some(VarImage::scaled_var(p.s2().inv().expect("s must be nonzero"), n - 1, -1));
        if f.subst(&img) != *f {
            return false;
        }
    }
    true
}
