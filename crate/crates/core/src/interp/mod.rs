//! BC-type interpolation polynomials: four constructions, evaluation,
//! Newton expansion and the identities they satisfy.

mod branch;
mod comb;
mod eval;
mod newton;
mod norm;
mod solve;
mod verify;

pub use branch::{branch_coeff, pstar_branch, BranchMemo};
pub use comb::{comb_two_param, pstar_comb};
pub use eval::{check_in_algebra, eval_at, eval_q_lambda, starred_images, to_starred};
pub use newton::newton_expand;
pub use norm::norm_h;
pub use solve::{orbit_sum, pstar_solve};
pub use verify::{
    lemma55_check, limit_check, pieri_coeff, s_parity_check, top_term_check, u_inversion_invariant, vanishing_slice,
    verify_cauchy, verify_pieri, verify_shift_props, LimitDirection, ShiftProp,
};

use std::fmt;
use std::str::FromStr;

use crate::arith::{Field, Monomial, Poly};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::Partition;

/// Which construction produced a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Solve,
    Comb,
    Branch,
    /// Needs `t = q^(2k+1)`.
    Integral { k: u32 },
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Solve => write!(f, "solve"),
            Route::Comb => write!(f, "comb"),
            Route::Branch => write!(f, "branch"),
            Route::Integral { .. } => write!(f, "integral"),
        }
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "solve" => Ok(Route::Solve),
            "comb" => Ok(Route::Comb),
            "branch" => Ok(Route::Branch),
            "integral" => Ok(Route::Integral { k: 0 }),
            _ => Err(Error::Precondition(format!("unknown method {s:?}"))),
        }
    }
}

/// A constructed `P*_mu` together with its provenance.
#[derive(Clone)]
pub struct InterpolationPolynomial<K: Field> {
    pub mu: Partition,
    pub n: usize,
    pub value: Poly<K>,
    pub route: Route,
}

pub fn pstar<K: Field>(route: Route, mu: &Partition, n: usize, p: &Params<K>) -> Result<InterpolationPolynomial<K>> {
    mu.check_length(n)?;
    let value = match route {
        Route::Solve => pstar_solve(mu, n, p)?,
        Route::Comb => pstar_comb(mu, n, p),
        Route::Branch => pstar_branch(mu, n, p)?,
        Route::Integral { k } => crate::qcalc::pstar_integral(mu, n, k, p)?,
    };
    Ok(InterpolationPolynomial { mu: mu.clone(), n, value, route })
}

/// `(x_v - c)(1 - 1/(d x_v))`.
pub(crate) fn bc_factor<K: Field>(v: usize, c: K, d: &K) -> Poly<K> {
    let di = d.inv().expect("zero in a BC factor");
    let cd = c.clone() * &di;
    Poly::from_terms([
        (Monomial::var(v), K::one()),
        (Monomial::one(), -(c + &di)),
        (Monomial::var_pow(v, -1), cd),
    ])
}
