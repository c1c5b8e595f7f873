use std::collections::HashMap;

use super::bc_factor;
use crate::arith::{Field, Poly};
use crate::error::Result;
use crate::macdonald::psi_skew;
use crate::params::Params;
use crate::partition::{interlaces, interlacing_below, skew_squares, Partition};

/// Branching coefficient as a Laurent polynomial in variable `var`;
/// zero unless `nu ≺ mu`.
pub fn branch_coeff<K: Field>(mu: &Partition, nu: &Partition, n: usize, p: &Params<K>, var: usize) -> Poly<K> {
    if !interlaces(nu, mu) {
        return Poly::zero();
    }
    let s2 = p.s2();
    let mut acc = Poly::constant(psi_skew(mu, nu, p) * p.t_pow(-(nu.weight() as i64)));
    for (i, j) in skew_squares(mu, nu).expect("interlacing implies containment") {
        let (ac, lc) = ((j - 1) as i64, (i - 1) as i64);
        let d = p.qt(ac, 2 * n as i64 - 2 - lc) * &s2;
        acc = &acc * &bc_factor(var, p.qt(ac, -lc), &d);
    }
    acc
}

/// Memo of `P*` values by `(mu, n)` for the branching recursion.
pub struct BranchMemo<'a, K> {
    params: &'a Params<K>,
    map: HashMap<(Partition, usize), Poly<K>>,
}

impl<'a, K: Field> BranchMemo<'a, K> {
    pub fn new(params: &'a Params<K>) -> Self {
        BranchMemo { params, map: HashMap::new() }
    }

    pub fn get(&mut self, mu: &Partition, n: usize) -> Poly<K> {
        if mu.len() > n {
            return Poly::zero();
        }
        if n == 0 || mu.is_empty() {
            return Poly::one();
        }
        let key = (mu.clone(), n);
        if let Some(v) = self.map.get(&key) {
            return v.clone();
        }
        let mut terms = Vec::new();
        for nu in interlacing_below(mu, n - 1) {
            let c = branch_coeff(mu, &nu, n, self.params, 0);
            let rest = self.get(&nu, n - 1).shift_vars(1);
            terms.push(&c * &rest);
        }
        let v = Poly::sum(&terms);
        self.map.insert(key, v.clone());
        v
    }
}

/// Recursion on the number of variables, peeling off `x_1`.
pub fn pstar_branch<K: Field>(mu: &Partition, n: usize, p: &Params<K>) -> Result<Poly<K>> {
    mu.check_length(n)?;
    Ok(BranchMemo::new(p).get(mu, n))
}
