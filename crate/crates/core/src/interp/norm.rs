use crate::arith::Field;
use crate::error::Result;
use crate::params::Params;
use crate::partition::{all_stats, Partition};

/// `H(mu, n)`, the value of `P*_mu` at `q^mu`.
pub fn norm_h<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> Result<K> {
    mu.check_length(n)?;
    let w = mu.weight() as i64;
    let pre_t = mu.n_stat() as i64 - 2 * (n as i64 - 1) * w;
    let pre_q = -(2 * mu.conjugate().n_stat() as i64 + w);
    let mut acc = p.qt(pre_q, pre_t) * p.s().pow(-2 * w);
    let s2 = p.s2();
    for st in all_stats(mu, n) {
        acc *= p.qt(st.a + 1, st.l) - K::one();
        acc *= s2.clone() * p.qt(st.a_mirror, st.l_mirror) - K::one();
    }
    Ok(acc)
}
