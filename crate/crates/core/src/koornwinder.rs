//! Dual parameters, the binomial expansion of shifted Koornwinder
//! polynomials, and a one-variable Askey–Wilson oracle.

use std::collections::BTreeMap;

use crate::arith::{Field, Monomial, Poly, Rat, RatFunc, VarImage};
use crate::error::{Error, Result};
use crate::interp::{eval_q_lambda, norm_h, pstar_comb};
use crate::params::Params;
use crate::partition::{partitions_upto, Partition};
use crate::serial::{parse_json_from, to_json_value, Alphabet, ALPHA};

/// `a_i = prod_j g_j^(E_ij)` for generator values `g`.
#[derive(Clone, Debug)]
pub struct KoornwinderParams<K: Field> {
    pub n: usize,
    pub base: Params<K>,
    pub gens: [K; 4],
    pub exps: [[Rat; 4]; 4],
}

fn half_hadamard(e: &[[Rat; 4]; 4]) -> [[Rat; 4]; 4] {
    const SIGN: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
    let half = Rat::new(1, 2);
    let mut out: [[Rat; 4]; 4] = Default::default();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Rat::zero();
            for k in 0..4 {
                acc = acc + Rat::from_i64(SIGN[i][k]) * &e[k][j];
            }
            out[i][j] = acc * &half;
        }
    }
    out
}

impl<K: Field> KoornwinderParams<K> {
    /// `a_i = g_i^2`, so the `g_i` are the square roots `alpha_i`.
    pub fn from_alphas(n: usize, base: Params<K>, alphas: [K; 4]) -> Self {
        let mut exps: [[Rat; 4]; 4] = Default::default();
        for (i, row) in exps.iter_mut().enumerate() {
            row[i] = Rat::from_i64(2);
        }
        KoornwinderParams { n, base, gens: alphas, exps }
    }

    /// `a_1 = a_2 a_3 a_4`, which makes the point self-dual.
    pub fn self_dual(n: usize, base: Params<K>, a2: K, a3: K, a4: K) -> Self {
        let mut kp = Self::from_alphas(n, base, [K::one(), a2, a3, a4]);
        kp.exps[0] = [Rat::zero(), Rat::from_i64(2), Rat::from_i64(2), Rat::from_i64(2)];
        kp
    }

    /// The dual point; an involution on the exponent matrix.
    pub fn dual(&self) -> Self {
        KoornwinderParams { exps: half_hadamard(&self.exps), ..self.clone() }
    }

    fn monomial(&self, row: &[Rat; 4]) -> Result<K> {
        let mut acc = K::one();
        for (g, e) in self.gens.iter().zip(row) {
            if !e.is_integer() {
                return Err(Error::Precondition("parameter is not a monomial in the generators".into()));
            }
            acc *= g.pow(e.to_i64().unwrap());
        }
        Ok(acc)
    }

    /// `a_i`, 1-based.
    pub fn a(&self, i: usize) -> Result<K> {
        self.monomial(&self.exps[i - 1])
    }

    /// `a'_1 = sqrt(a_1 a_2 a_3 a_4)`.
    pub fn a1_dual(&self) -> Result<K> {
        self.dual().a(1)
    }

    /// `(t^(n-1) a_1, ..., t a_1, a_1)`.
    pub fn rho_prime(&self) -> Result<Vec<K>> {
        let a1 = self.a(1)?;
        Ok((1..=self.n).map(|i| self.base.t_pow((self.n - i) as i64) * &a1).collect())
    }

    /// `(t^(n-1) a'_1, ..., a'_1)`.
    pub fn rho(&self) -> Result<Vec<K>> {
        self.dual().rho_prime()
    }

    /// Askey–Wilson `(a, b, c, d) = (a_1, -a_2, q^(1/2) a_3, -q^(1/2) a_4)`.
    pub fn askey_wilson_abcd(&self) -> Result<[K; 4]> {
        let qh = self.base.q_half().clone();
        Ok([self.a(1)?, -self.a(2)?, qh.clone() * self.a(3)?, -(qh * self.a(4)?)])
    }
}

impl KoornwinderParams<RatFunc> {
    /// Symbolic `q^(1/2), t^(1/2)` and generators `alpha_1..alpha_4`.
    pub fn symbolic(n: usize) -> Self {
        let gens = ALPHA.map(RatFunc::var);
        Self::from_alphas(n, Params::symbolic(), gens)
    }
}

/// Values `e_lambda = P_lambda(q^rho')`, supplied externally or by the
/// one-variable oracle.
#[derive(Clone, Debug)]
pub struct EvaluationTable<K> {
    pub entries: BTreeMap<Partition, K>,
}

impl<K: Field> EvaluationTable<K> {
    pub fn new() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(Partition::empty(), K::one());
        EvaluationTable { entries }
    }

    pub fn get(&self, mu: &Partition) -> Result<&K> {
        self.entries.get(mu).ok_or_else(|| Error::MissingEvaluation(mu.to_string()))
    }

    pub fn insert(&mut self, mu: Partition, v: K) -> Result<()> {
        if v.is_zero() {
            return Err(Error::Precondition(format!("evaluation at {mu} is zero")));
        }
        self.entries.insert(mu, v);
        Ok(())
    }
}

impl<K: Field> Default for EvaluationTable<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl EvaluationTable<RatFunc> {
    /// `{"2,1": <serialized value>, ...}` with `"0"` for the empty partition.
    pub fn to_json(&self) -> serde_json::Value {
        let a = Alphabet::new(0);
        serde_json::Value::Object(self.entries.iter().map(|(k, v)| (k.to_string(), to_json_value(v, &a))).collect())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::IllFormedSpec("evaluation table must be an object".into()))?;
        let mut t = EvaluationTable { entries: BTreeMap::new() };
        for (k, val) in obj {
            let mu: Partition = if k == "0" || k.is_empty() {
                Partition::empty()
            } else {
                k.parse().map_err(Error::IllFormedSpec)?
            };
            let (r, _) = parse_json_from(val)?;
            t.insert(mu, r)?;
        }
        if !t.entries.get(&Partition::empty()).is_some_and(|e| e.is_one()) {
            return Err(Error::IllFormedSpec("the empty partition must map to 1".into()));
        }
        Ok(t)
    }
}

/// `e_mu` times the `mu`-term of the binomial sum, which does not depend
/// on the evaluation table.
pub fn binomial_term_unnormalized<K: Field>(lambda: &Partition, mu: &Partition, kp: &KoornwinderParams<K>) -> Result<Poly<K>> {
    let n = kp.n;
    let a1 = kp.a(1)?;
    let a1d = kp.a1_dual()?;
    let pd = kp.base.with_s(a1d);
    let px = kp.base.with_s(a1.clone());
    let w = mu.weight() as i64;
    let at_lambda = eval_q_lambda(&pstar_comb(mu, n, &pd), lambda, n, &pd).constant_term();
    if at_lambda.is_zero() {
        return Ok(Poly::zero());
    }
    let c = kp.base.t_pow((n as i64 - 1) * w) * a1.pow(w) * at_lambda * norm_h(mu, n, &pd)?.inv().ok_or(Error::DivisionByZero)?;
    Ok(pstar_comb(mu, n, &px).scale(&c))
}

/// The terms `T_mu`, `mu ⊂ lambda`, of the binomial expansion.
pub fn binomial_terms<K: Field>(
    lambda: &Partition,
    kp: &KoornwinderParams<K>,
    e: &EvaluationTable<K>,
) -> Result<Vec<(Partition, Poly<K>)>> {
    lambda.check_length(kp.n)?;
    let mut out = Vec::new();
    for mu in partitions_upto(lambda.weight(), kp.n) {
        if !mu.is_subset_of(lambda) {
            continue;
        }
        let ei = e.get(&mu)?.inv().ok_or(Error::DivisionByZero)?;
        out.push((mu.clone(), binomial_term_unnormalized(lambda, &mu, kp)?.scale(&ei)));
    }
    Ok(out)
}

pub fn binomial_rhs<K: Field>(lambda: &Partition, kp: &KoornwinderParams<K>, e: &EvaluationTable<K>) -> Result<Poly<K>> {
    let terms = binomial_terms(lambda, kp, e)?;
    Ok(Poly::sum(terms.iter().map(|(_, t)| t)))
}

/// At `x = (1, ..., 1)` only the empty term survives, and it equals 1.
pub fn binomial_unit_check<K: Field>(lambda: &Partition, kp: &KoornwinderParams<K>) -> Result<bool> {
    let ones = vec![Some(K::one()); kp.n];
    for mu in partitions_upto(lambda.weight(), kp.n) {
        if !mu.is_subset_of(lambda) {
            continue;
        }
        let v = binomial_term_unnormalized(lambda, &mu, kp)?.eval_partial(&ones);
        let want = if mu.is_empty() { Poly::one() } else { Poly::zero() };
        if v != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `lambda` term carries the whole top degree, equal to
/// `t^((n-1)|lambda|) a_1^|lambda| P_lambda(x_1, x_2/t, ...)`.
pub fn binomial_top_check<K: Field>(lambda: &Partition, kp: &KoornwinderParams<K>) -> Result<bool> {
    let n = kp.n;
    let w = lambda.weight() as i64;
    for mu in partitions_upto(lambda.weight(), n) {
        if !mu.is_subset_of(lambda) {
            continue;
        }
        let t = binomial_term_unnormalized(lambda, &mu, kp)?;
        let deg = t.terms().iter().map(|(m, _)| m.degree()).max().unwrap_or(i64::MIN);
        if mu != *lambda {
            if deg >= w {
                return Ok(false);
            }
            continue;
        }
        let top = t.filter(|m| m.degree() == w);
        let img: Vec<_> = (0..n).map(|i| Some(VarImage::scaled_var(kp.base.t_pow(-(i as i64)), i, 1))).collect();
        let c = kp.base.t_pow((n as i64 - 1) * w) * kp.a(1)?.pow(w);
        let want = crate::macdonald::macdonald_p(lambda, n, &kp.base).subst(&img).scale(&c);
        if top != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f(c z)` for a one-variable Laurent polynomial.
fn dilate<K: Field>(f: &Poly<K>, c: K) -> Poly<K> {
    f.subst(&[Some(VarImage::scaled_var(c, 0, 1))])
}

fn poly1<K: Field>(coeffs: &[(i64, K)]) -> Poly<K> {
    Poly::from_terms(coeffs.iter().map(|(e, c)| (Monomial::var_pow(0, *e), c.clone())))
}

/// The Askey–Wilson operator
/// `A(z)(f(qz) - f(z)) + A(1/z)(f(z/q) - f(z))` with
/// `A(z) = prod (1 - a_i z) / ((1 - z^2)(1 - q z^2))`.
pub fn askey_wilson_operator<K: Field>(f: &Poly<K>, abcd: &[K; 4], q: &K) -> Result<Poly<K>> {
    let one = K::one();
    let mut num_z = Poly::one();
    let mut num_zi = Poly::one();
    for a in abcd {
        num_z = &num_z * &poly1(&[(0, one.clone()), (1, -a.clone())]);
        num_zi = &num_zi * &poly1(&[(0, one.clone()), (-1, -a.clone())]);
    }
    let den_z = &poly1(&[(0, one.clone()), (2, -one.clone())]) * &poly1(&[(0, one.clone()), (2, -q.clone())]);
    let den_zi = &poly1(&[(0, one.clone()), (-2, -one.clone())]) * &poly1(&[(0, one.clone()), (-2, -q.clone())]);
    let qi = q.inv().ok_or(Error::DivisionByZero)?;
    let up = &dilate(f, q.clone()) - f;
    let down = &dilate(f, qi) - f;
    let num = &(&(&num_z * &up) * &den_zi) + &(&(&num_zi * &down) * &den_z);
    num.div_exact(&(&den_z * &den_zi))
        .ok_or_else(|| Error::NotInAlgebra("operator image is not a Laurent polynomial".into()))
}

fn sym_basis<K: Field>(j: i64) -> Poly<K> {
    if j == 0 {
        Poly::one()
    } else {
        poly1(&[(j, K::one()), (-j, K::one())])
    }
}

/// Askey–Wilson data in degree `m`.
#[derive(Clone, Debug)]
pub struct AskeyWilson<K: Field> {
    pub poly: Poly<K>,
    pub eigenvalue: K,
    /// Value at `z = a_1`.
    pub evaluation: K,
}

/// The monic symmetric eigenfunction of degree `m`, from a triangular
/// solve in the basis `z^j + z^-j`.
pub fn askey_wilson<K: Field>(m: usize, kp: &KoornwinderParams<K>) -> Result<AskeyWilson<K>> {
    let abcd = kp.askey_wilson_abcd()?;
    let q = kp.base.q().clone();
    let m = m as i64;
    // l[i][j]: coefficient of basis i in L(basis j)
    let mut l = vec![vec![K::zero(); m as usize + 1]; m as usize + 1];
    for j in 0..=m {
        let img = askey_wilson_operator(&sym_basis::<K>(j), &abcd, &q)?;
        for i in 0..=m {
            l[i as usize][j as usize] = img.coeff(&Monomial::var_pow(0, i));
        }
        if img.max_degree_in(0..1).unwrap_or(0) > j {
            return Err(Error::NotInAlgebra("operator raised the degree".into()));
        }
    }
    let mu = m as usize;
    let ev = l[mu][mu].clone();
    let mut c = vec![K::zero(); mu + 1];
    c[mu] = K::one();
    for i in (0..mu).rev() {
        let d = l[i][i].clone() - &ev;
        if d.is_zero() {
            return Err(Error::DegenerateEigenvalue);
        }
        let mut acc = K::zero();
        for j in i + 1..=mu {
            acc += c[j].clone() * &l[i][j];
        }
        c[i] = -acc * d.inv().unwrap();
    }
    let poly = Poly::sum(&c.iter().enumerate().map(|(j, cj)| sym_basis::<K>(j as i64).scale(cj)).collect::<Vec<_>>());
    let evaluation = poly.eval(&[kp.a(1)?]);
    Ok(AskeyWilson { poly, eigenvalue: ev, evaluation })
}

/// One-variable binomial formula for all degrees up to `m_max`.
pub fn verify_binomial_n1<K: Field>(m_max: usize, kp: &KoornwinderParams<K>) -> Result<bool> {
    if kp.n != 1 {
        return Err(Error::Precondition("one-variable check".into()));
    }
    let a1 = kp.a(1)?;
    let mut table = EvaluationTable::new();
    let mut polys = Vec::new();
    for m in 0..=m_max {
        let aw = askey_wilson(m, kp)?;
        if m > 0 {
            table.insert(Partition::new(&[m]), aw.evaluation.clone())?;
        }
        polys.push(aw);
    }
    for (m, aw) in polys.iter().enumerate() {
        let lhs = dilate(&aw.poly, a1.clone()).scale(&aw.evaluation.inv().ok_or(Error::DivisionByZero)?);
        if lhs != binomial_rhs(&Partition::new(&[m]), kp, &table)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P_m(q^nu a_1) / P_m(a_1) = P_nu(q^m a'_1) / P_nu(a'_1)` at a
/// self-dual point.
pub fn verify_duality_n1<K: Field>(m: usize, nu: usize, kp: &KoornwinderParams<K>) -> Result<bool> {
    let a1 = kp.a(1)?;
    let dual = kp.dual();
    let a1d = dual.a(1)?;
    if a1 != a1d {
        return Err(Error::NotSelfDual);
    }
    let q = kp.base.q();
    let pm = askey_wilson(m, kp)?;
    let pn = askey_wilson(nu, &dual)?;
    let lhs = pm.poly.eval(&[q.pow(nu as i64) * &a1]) * pm.evaluation.inv().ok_or(Error::DivisionByZero)?;
    let rhs = pn.poly.eval(&[q.pow(m as i64) * &a1d]) * pn.evaluation.inv().ok_or(Error::DivisionByZero)?;
    Ok(lhs == rhs)
}
