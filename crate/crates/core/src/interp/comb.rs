use rayon::prelude::*;

use super::bc_factor;
use crate::arith::{Field, Monomial, Poly};
use crate::macdonald::PsiCache;
use crate::params::Params;
use crate::partition::{reverse_tableaux, Partition, ReverseTableau};

fn tableau_weights<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> Vec<(ReverseTableau, K)> {
    let mut cache = PsiCache::new(p);
    reverse_tableaux(mu, n)
        .into_iter()
        .map(|t| {
            let w = cache.tableau(&t);
            (t, w)
        })
        .collect()
}

/// Sum over reverse tableaux; terms are built in parallel and added in
/// tableau order.
pub fn pstar_comb<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> Poly<K> {
    let s2 = p.s2();
    let terms: Vec<Poly<K>> = tableau_weights(mu, n, p)
        .par_iter()
        .map(|(t, w)| {
            let mut acc = Poly::constant(w.clone());
            for (i, j) in mu.squares() {
                let e = t.entry(i, j) as i64;
                let (ac, lc) = ((j - 1) as i64, (i - 1) as i64);
                let f = bc_factor(
                    (e - 1) as usize,
                    p.qt(ac, -lc),
                    &(p.qt(ac, 2 * (n as i64 - e) - lc) * &s2),
                );
                acc = (&acc * &f).scale(&p.t_pow(1 - e));
            }
            acc
        })
        .collect();
    Poly::sum(&terms)
}

/// The same sum with every `s`-dependent factor dropped.
pub fn comb_two_param<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> Poly<K> {
    let terms: Vec<Poly<K>> = tableau_weights(mu, n, p)
        .iter()
        .map(|(t, w)| {
            let mut acc = Poly::constant(w.clone());
            for (i, j) in mu.squares() {
                let e = t.entry(i, j);
                let c = p.qt((j - 1) as i64, -((i - 1) as i64));
                let f = Poly::from_terms([(Monomial::var(e - 1), K::one()), (Monomial::one(), -c)]);
                acc = (&acc * &f).scale(&p.t_pow(1 - e as i64));
            }
            acc
        })
        .collect();
    Poly::sum(&terms)
}
