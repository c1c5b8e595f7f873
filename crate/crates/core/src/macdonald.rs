//! Ordinary (type A) Macdonald polynomials and their tableau weights.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::arith::{Field, Monomial, Poly};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::{box_partitions, reverse_tableaux, tilde, Partition, ReverseTableau};

/// `1 - q^a t^b`.
pub(crate) fn one_minus<K: Field>(p: &Params<K>, a: i64, b: i64) -> K {
    K::one() - p.qt(a, b)
}

/// `(q^a t^b; q)_d` as a list of factors `1 - q^(a+k) t^b`.
fn pochhammer_factors(a: i64, b: i64, d: i64) -> impl Iterator<Item = (i64, i64)> {
    (0..d).map(move |k| (a + k, b))
}

/// `psi_{lambda/mu}`; zero unless `lambda/mu` is a horizontal strip.
pub fn psi_skew<K: Field>(lambda: &Partition, mu: &Partition, p: &Params<K>) -> K {
    if !crate::partition::interlaces(mu, lambda) {
        return K::zero();
    }
    let l = |i: usize| lambda.part(i) as i64;
    let m = |i: usize| mu.part(i) as i64;
    let mut num: Vec<(i64, i64)> = Vec::new();
    let mut den: Vec<(i64, i64)> = Vec::new();
    for i in 1..=mu.len() {
        let d = l(i) - m(i);
        if d == 0 {
            continue;
        }
        for j in i..=mu.len() {
            let b = (j - i) as i64;
            num.extend(pochhammer_factors(m(i) - m(j), b + 1, d));
            den.extend(pochhammer_factors(m(i) - m(j) + 1, b, d));
            num.extend(pochhammer_factors(m(i) - l(j + 1) + 1, b, d));
            den.extend(pochhammer_factors(m(i) - l(j + 1), b + 1, d));
        }
    }
    // cancel identical factors before touching the field
    num.sort_unstable();
    den.sort_unstable();
    let (mut a, mut b) = (Vec::new(), Vec::new());
    let (mut i, mut j) = (0, 0);
    while i < num.len() || j < den.len() {
        if j == den.len() || (i < num.len() && num[i] < den[j]) {
            a.push(num[i]);
            i += 1;
        } else if i == num.len() || den[j] < num[i] {
            b.push(den[j]);
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    let mut acc = K::one();
    for (x, y) in a {
        acc *= one_minus(p, x, y);
    }
    for (x, y) in b {
        acc *= one_minus(p, x, y).inv().expect("non-generic parameters in psi");
    }
    acc
}

/// Memo for `psi_skew` values keyed by `(lambda, mu)`.
pub struct PsiCache<'a, K> {
    params: &'a Params<K>,
    map: HashMap<(Partition, Partition), K>,
}

impl<'a, K: Field> PsiCache<'a, K> {
    pub fn new(params: &'a Params<K>) -> Self {
        PsiCache { params, map: HashMap::new() }
    }

    pub fn get(&mut self, lambda: &Partition, mu: &Partition) -> K {
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.map.get(&key) {
            return v.clone();
        }
        let v = psi_skew(lambda, mu, self.params);
        self.map.insert(key, v.clone());
        v
    }

    pub fn tableau(&mut self, t: &ReverseTableau) -> K {
        let chain = t.chain();
        let mut acc = K::one();
        for w in chain.windows(2) {
            acc *= self.get(&w[1], &w[0]);
        }
        acc
    }
}

/// `psi_T`, the product of strip weights along the tableau's chain.
pub fn psi_tableau<K: Field>(t: &ReverseTableau, p: &Params<K>) -> K {
    PsiCache::new(p).tableau(t)
}

/// `P_mu(x_1..x_n; q, t)` in variables `0..n`.
pub fn macdonald_p<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> Poly<K> {
    let tabs = reverse_tableaux(mu, n);
    let mut cache = PsiCache::new(p);
    let weights: Vec<K> = tabs.iter().map(|t| cache.tableau(t)).collect();
    Poly::from_terms(tabs.iter().zip(weights).map(|(t, w)| {
        let mut e = vec![0i64; n];
        for &x in t.rows.iter().flatten() {
            e[x - 1] += 1;
        }
        (Monomial::from_exps(&e), w)
    }))
}

/// `e_k(x_1..x_n)`.
pub fn elementary<K: Field>(k: usize, n: usize) -> Poly<K> {
    fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<i64>, out: &mut Vec<Monomial>) {
        if k == 0 {
            out.push(Monomial::from_exps(cur));
            return;
        }
        for i in start..n {
            cur[i] = 1;
            rec(i + 1, k - 1, n, cur, out);
            cur[i] = 0;
        }
    }
    let mut out = Vec::new();
    rec(0, k, n, &mut vec![0; n], &mut out);
    Poly::from_terms(out.into_iter().map(|m| (m, K::one())))
}

/// Swaps variables `i` and `j`.
pub fn swap_vars<K: Field>(f: &Poly<K>, i: usize, j: usize) -> Poly<K> {
    f.remap_vars(|v| if v == i { j } else if v == j { i } else { v })
}

pub fn is_symmetric<K: Field>(f: &Poly<K>, n: usize) -> bool {
    (0..n.saturating_sub(1)).all(|i| swap_vars(f, i, i + 1) == *f)
}

/// Coefficients `c` with `f = sum c_lambda P_lambda`.
pub fn expand_in_macdonald<K: Field>(
    f: &Poly<K>,
    n: usize,
    p: &Params<K>,
) -> Result<BTreeMap<Partition, K>> {
    if !is_symmetric(f, n) || f.width() > n {
        return Err(Error::NotSymmetric);
    }
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.lead().cloned() {
        let parts: Vec<i64> = (0..n).map(|i| m.exp(i)).collect();
        if parts.iter().any(|&e| e < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let lam = Partition::new(&parts.iter().map(|&e| e as usize).collect::<Vec<_>>());
        let pl = macdonald_p(&lam, n, p);
        rest -= &pl.scale(&c);
        out.insert(lam, c);
    }
    Ok(out)
}

/// All `psi'_{lambda/mu}` at once, read off from `prod (u + x_i) P_mu`.
pub fn pieri_weights_a<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> BTreeMap<Partition, K> {
    let pm = macdonald_p(mu, n, p);
    let mut out = BTreeMap::new();
    for k in 0..=n {
        let f = &elementary::<K>(k, n) * &pm;
        for (lam, c) in expand_in_macdonald(&f, n, p).expect("symmetric by construction") {
            out.insert(lam, c);
        }
    }
    out
}

/// `psi'_{lambda/mu}`, zero outside `mu ⊂ lambda ⊂ mu + 1`.
pub fn pieri_weight_a<K: Field>(lambda: &Partition, mu: &Partition, n: usize, p: &Params<K>) -> K {
    if !mu.is_subset_of(lambda) || !lambda.is_subset_of(&mu.plus_one(n)) || mu.len() > n {
        return K::zero();
    }
    pieri_weights_a(mu, n, p).remove(lambda).unwrap_or_else(K::zero)
}

/// `prod (x_i - y_j) = sum (-1)^|mu~| P_mu(x; q, t) P_mu~(y; t, q)`.
pub fn dual_cauchy_check<K: Field>(n: usize, m: usize, p: &Params<K>) -> bool {
    let mut lhs = Poly::<K>::one();
    for i in 0..n {
        for j in 0..m {
            lhs = &lhs * &(&Poly::var(i) - &Poly::var(n + j));
        }
    }
    let swapped = p.swap_qt();
    let terms: Vec<Poly<K>> = box_partitions(n, m)
        .par_iter()
        .map(|mu| {
            let mt = tilde(mu, n, m).unwrap();
            let px = macdonald_p(mu, n, p);
            let py = macdonald_p(&mt, m, &swapped).shift_vars(n);
            let t = &px * &py;
            if mt.weight() % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .collect();
    Poly::sum(&terms) == lhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RatFunc;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v)
    }

    fn w21() -> RatFunc {
        // (1+q)(1-t)/(1-qt)
        let s = Params::symbolic();
        let one = RatFunc::one();
        (one.clone() + s.q().clone()) * (one.clone() - s.t().clone())
            * (one - s.q().clone() * s.t()).inv().unwrap()
    }

    #[test]
    fn psi_examples() {
        let s = Params::symbolic();
        assert!(psi_skew(&p(&[1]), &p(&[]), &s).is_one());
        assert!(psi_skew(&p(&[2, 1]), &p(&[2, 1]), &s).is_one());
        assert_eq!(psi_skew(&p(&[2]), &p(&[1]), &s), w21());
        assert!(psi_skew(&p(&[2, 2]), &p(&[1]), &s).is_zero());
    }

    #[test]
    fn p2_in_two_variables() {
        let s = Params::symbolic();
        let got = macdonald_p(&p(&[2]), 2, &s);
        let x = |i| Poly::<RatFunc>::var(i);
        let want = &(&(&x(0) * &x(0)) + &(&x(1) * &x(1))) + &(&x(0) * &x(1)).scale(&w21());
        assert_eq!(got, want);
        assert_eq!(macdonald_p(&p(&[1]), 2, &s), &x(0) + &x(1));
        assert_eq!(macdonald_p(&p(&[]), 2, &s), Poly::one());
    }

    #[test]
    fn expansion_examples() {
        let s = Params::symbolic();
        let p2 = macdonald_p(&p(&[2]), 2, &s);
        let e = expand_in_macdonald(&p2, 2, &s).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[&p(&[2])].is_one());
        let x = |i| Poly::<RatFunc>::var(i);
        let sq = (&x(0) + &x(1)).pow(2);
        let e = expand_in_macdonald(&sq, 2, &s).unwrap();
        assert!(e[&p(&[2])].is_one());
        assert_eq!(e[&p(&[1, 1])], RatFunc::from_i64(2) - w21());
        assert!(expand_in_macdonald(&x(0), 2, &s).is_err());
    }

    #[test]
    fn pieri_weight_examples() {
        let s = Params::symbolic();
        assert!(pieri_weight_a(&p(&[]), &p(&[]), 1, &s).is_one());
        assert!(pieri_weight_a(&p(&[1]), &p(&[]), 1, &s).is_one());
        assert!(pieri_weight_a(&p(&[2]), &p(&[]), 1, &s).is_zero());
    }

    #[test]
    fn dual_cauchy_small() {
        let s = Params::symbolic();
        assert!(dual_cauchy_check(1, 1, &s));
        assert!(dual_cauchy_check(2, 1, &s));
        assert!(dual_cauchy_check(2, 2, &s));
    }
}
