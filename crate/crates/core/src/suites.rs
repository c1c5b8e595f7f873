//! Verification suites shared by the command line and the acceptance run.
//!
//! A suite expands into a list of independent cases. Cases run in
//! parallel on the ambient rayon pool; results come back in generation
//! order, so reports do not depend on the worker count.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{Field, Rat, RatFunc};
use crate::error::{Error, Result};
use crate::generic::check_generic_multi;
use crate::interp::{
    branch_coeff, check_in_algebra, lemma55_check, limit_check, pieri_coeff, pstar_branch, pstar_comb, pstar_solve,
    s_parity_check, top_term_check, u_inversion_invariant, vanishing_slice, verify_cauchy, verify_pieri,
    verify_shift_props, LimitDirection, ShiftProp,
};
use crate::koornwinder::{askey_wilson, binomial_top_check, binomial_unit_check, verify_binomial_n1, verify_duality_n1, KoornwinderParams};
use crate::macdonald::dual_cauchy_check;
use crate::params::{random_point, small_rational, Params};
use crate::partition::{interlaces, partitions_upto, Partition};
use crate::qcalc::{bound_shift_integral, integral_rep_verify, pstar_integral};
use crate::refute::{f_closed_form, refute, verify_certificate};

pub const GENERIC_BOUND: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Routes,
    Vanishing,
    Shifts,
    TopTerm,
    Branching,
    Limits,
    Pieri,
    Cauchy,
    DualCauchy,
    Integral,
    BinomialN1,
    DualityN1,
    Refute,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Routes,
        Suite::Vanishing,
        Suite::Shifts,
        Suite::TopTerm,
        Suite::Branching,
        Suite::Limits,
        Suite::Pieri,
        Suite::Cauchy,
        Suite::DualCauchy,
        Suite::Integral,
        Suite::BinomialN1,
        Suite::DualityN1,
        Suite::Refute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Vanishing => "vanishing",
            Suite::Shifts => "shifts",
            Suite::TopTerm => "topterm",
            Suite::Branching => "branching",
            Suite::Limits => "limits",
            Suite::Pieri => "pieri",
            Suite::Cauchy => "cauchy",
            Suite::DualCauchy => "dualcauchy",
            Suite::Integral => "integral",
            Suite::BinomialN1 => "binomial-n1",
            Suite::DualityN1 => "duality-n1",
            Suite::Refute => "refute",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A suite name, or `all`.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Ok(vec![s.parse()?])
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite '{s}'")))
    }
}

/// Numeric values given on the command line, e.g. `q=1/2,t=1/3,s=5`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PointSpec {
    pub q: Option<Rat>,
    pub t: Option<Rat>,
    pub s: Option<Rat>,
    pub q_half: Option<Rat>,
    pub t_half: Option<Rat>,
    pub alpha: [Option<Rat>; 4],
}

impl FromStr for PointSpec {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let mut out = PointSpec::default();
        for item in text.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::IllFormedSpec(format!("expected key=value, got '{item}'")))?;
            let v: Rat = v
                .trim()
                .parse()
                .map_err(|_| Error::IllFormedSpec(format!("bad rational in '{item}'")))?;
            if v.is_zero() {
                return Err(Error::IllFormedSpec(format!("{k} may not be zero")));
            }
            let slot = match k.trim() {
                "q" => &mut out.q,
                "t" => &mut out.t,
                "s" => &mut out.s,
                "q_half" => &mut out.q_half,
                "t_half" => &mut out.t_half,
                "alpha1" => &mut out.alpha[0],
                "alpha2" => &mut out.alpha[1],
                "alpha3" => &mut out.alpha[2],
                "alpha4" => &mut out.alpha[3],
                other => return Err(Error::IllFormedSpec(format!("unknown key '{other}'"))),
            };
            if slot.replace(v).is_some() {
                return Err(Error::IllFormedSpec(format!("key '{k}' given twice")));
            }
        }
        Ok(out)
    }
}

impl PointSpec {
    /// Resolves to parameters; halves, when given, must square to `q`, `t`.
    pub fn params(&self) -> Result<Params<Rat>> {
        let s = self.s.clone().unwrap_or_else(Rat::one);
        let pick = |full: &Option<Rat>, half: &Option<Rat>, name: &str| -> Result<(Rat, Option<Rat>)> {
            match (full, half) {
                (Some(f), Some(h)) if h.clone() * h != *f => {
                    Err(Error::IllFormedSpec(format!("{name}_half does not square to {name}")))
                }
                (_, Some(h)) => Ok((h.clone() * h, Some(h.clone()))),
                (Some(f), None) => Ok((f.clone(), None)),
                (None, None) => Err(Error::IllFormedSpec(format!("missing {name}"))),
            }
        };
        let (q, qh) = pick(&self.q, &self.q_half, "q")?;
        let (t, th) = pick(&self.t, &self.t_half, "t")?;
        Ok(match (qh, th) {
            (Some(qh), Some(th)) => Params::numeric(qh, th, s),
            _ => Params::new(q, t, s),
        })
    }

    pub fn alphas(&self) -> Option<[Rat; 4]> {
        let [a, b, c, d] = self.alpha.clone();
        Some([a?, b?, c?, d?])
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<u32>,
    pub max_weight: Option<usize>,
    pub seed: u64,
    /// Numeric points per case where the grid is not run symbolically.
    pub points: usize,
    pub spec: Option<PointSpec>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: None, m: None, k: None, max_weight: None, seed: 0, points: 5, spec: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub id: String,
    pub outcome: Outcome,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {}", self.id),
            Outcome::Fail => write!(f, "FAIL {}", self.id),
            Outcome::Error(e) => write!(f, "FAIL {} (error: {e})", self.id),
        }
    }
}

type Check = Box<dyn Fn() -> Result<bool> + Send + Sync>;

pub struct Case {
    pub id: String,
    check: Check,
}

impl Case {
    fn new(id: String, check: impl Fn() -> Result<bool> + Send + Sync + 'static) -> Self {
        Case { id, check: Box::new(check) }
    }

    pub fn run(&self) -> CaseResult {
        let outcome = match (self.check)() {
            Ok(true) => Outcome::Pass,
            Ok(false) => Outcome::Fail,
            Err(e) => Outcome::Error(e.to_string()),
        };
        CaseResult { id: self.id.clone(), outcome }
    }
}

pub fn run_cases(cases: &[Case]) -> Vec<CaseResult> {
    cases.par_iter().map(Case::run).collect()
}

/// Parameters a case is evaluated at.
#[derive(Clone, Debug)]
pub enum Point {
    Symbolic(Params<RatFunc>),
    Numeric(Params<Rat>),
}

impl Point {
    pub fn label(&self) -> String {
        match self {
            Point::Symbolic(_) => "symbolic".into(),
            Point::Numeric(p) if p.has_halves() => format!("q^1/2={} t^1/2={} s={}", p.q_half(), p.t_half(), p.s()),
            Point::Numeric(p) => format!("q={} t={} s={}", p.q(), p.t(), p.s()),
        }
    }
}

/// Runs `$body` with `$p` bound to the parameters of either kind.
macro_rules! at_point {
    ($pt:expr, |$p:ident| $body:expr) => {
        match $pt {
            Point::Symbolic($p) => $body,
            Point::Numeric($p) => $body,
        }
    };
}

fn ns(cfg: &SuiteConfig, lo: usize, hi: usize) -> Vec<usize> {
    match cfg.n {
        Some(n) => vec![n],
        None => (lo..=hi).collect(),
    }
}

fn max_w(cfg: &SuiteConfig, default: usize) -> usize {
    cfg.max_weight.unwrap_or(default)
}

fn rng(cfg: &SuiteConfig, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(cfg.seed);
    r.set_stream(stream);
    r
}

/// Seeded generic points, or the single point from `--spec`.
pub fn numeric_points(cfg: &SuiteConfig, stream: u64) -> Result<Vec<Params<Rat>>> {
    if let Some(s) = &cfg.spec {
        return Ok(vec![s.params()?]);
    }
    let mut r = rng(cfg, stream);
    Ok((0..cfg.points.max(1)).map(|_| random_point(&mut r, GENERIC_BOUND)).collect())
}

/// Symbolic when the case is small enough, numeric points otherwise.
/// A `--spec` always wins.
fn points_for(cfg: &SuiteConfig, symbolic: bool, numeric: &[Params<Rat>]) -> Vec<Point> {
    if symbolic && cfg.spec.is_none() {
        vec![Point::Symbolic(Params::symbolic())]
    } else {
        numeric.iter().cloned().map(Point::Numeric).collect()
    }
}

fn routes(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let pts = numeric_points(cfg, 1)?;
    let mut out = Vec::new();
    for n in ns(cfg, 1, 3) {
        for mu in partitions_upto(max_w(cfg, 4), n) {
            for pt in points_for(cfg, mu.weight() <= 3 && n <= 2, &pts) {
                let id = format!("routes n={n} mu=({mu}) {}", pt.label());
                let mu = mu.clone();
                out.push(Case::new(id, move || {
                    at_point!(&pt, |p| {
                        let c = pstar_comb(&mu, n, p);
                        Ok(c == pstar_solve(&mu, n, p)?
                            && c == pstar_branch(&mu, n, p)?
                            && check_in_algebra(&c, n, p)
                            && s_parity_check(&mu, n, p))
                    })
                }));
            }
        }
    }
    Ok(out)
}

fn vanishing(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let pts = numeric_points(cfg, 2)?;
    let mut out = Vec::new();
    for n in ns(cfg, 1, 3) {
        for mu in partitions_upto(max_w(cfg, 4), n) {
            for pt in points_for(cfg, mu.weight() <= 3 && n <= 2, &pts) {
                let id = format!("vanishing n={n} mu=({mu}) {}", pt.label());
                let mu = mu.clone();
                out.push(Case::new(id, move || at_point!(&pt, |p| vanishing_slice(&pstar_comb(&mu, n, p), &mu, n, p))));
            }
        }
    }
    if cfg.n.is_none() || cfg.n == Some(1) {
        for m in 0..=cfg.max_weight.unwrap_or(6) {
            out.push(Case::new(format!("closed-form m={m} symbolic"), move || {
                let p = Params::symbolic();
                Ok(f_closed_form(m, &p) == pstar_solve(&Partition::new(&[m]), 1, &p)?)
            }));
        }
    }
    Ok(out)
}

fn shifts(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let pts = numeric_points(cfg, 3)?;
    let mut out = Vec::new();
    for n in ns(cfg, 1, 3) {
        for mu in partitions_upto(max_w(cfg, 3), n) {
            let mut props = vec![ShiftProp::P23];
            if mu.len() == n {
                props.insert(0, ShiftProp::P21);
            } else {
                props.insert(0, ShiftProp::P22);
            }
            for prop in props {
                for pt in points_for(cfg, true, &pts) {
                    let id = format!("shift {prop:?} n={n} mu=({mu}) {}", pt.label());
                    let mu = mu.clone();
                    out.push(Case::new(id, move || at_point!(&pt, |p| verify_shift_props(&mu, n, prop, p))));
                }
            }
        }
    }
    Ok(out)
}

fn topterm(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let pts = numeric_points(cfg, 4)?;
    let mut out = Vec::new();
    for n in ns(cfg, 1, 3) {
        for mu in partitions_upto(max_w(cfg, 4), n) {
            for pt in points_for(cfg, true, &pts) {
                let id = format!("topterm n={n} mu=({mu}) {}", pt.label());
                let mu = mu.clone();
                out.push(Case::new(id, move || at_point!(&pt, |p| top_term_check(&mu, n, p))));
            }
        }
    }
    Ok(out)
}

/// Branching and Pieri coefficients: support, `u`-inversion symmetry and
/// the partial vanishing of `P*_mu` on tails.
fn branching_case<K: Field>(mu: &Partition, n: usize, lambda_max: usize, p: &Params<K>) -> Result<bool> {
    for nu in partitions_upto(mu.weight(), n.saturating_sub(1)) {
        let c = branch_coeff(mu, &nu, n, p, 0);
        let ok = if interlaces(&nu, mu) { u_inversion_invariant(&c, n, p, 0) } else { c.is_zero() };
        if !ok {
            return Ok(false);
        }
    }
    for lam in partitions_upto(mu.weight() + n, n) {
        if !u_inversion_invariant(&pieri_coeff(&lam, mu, n, p, n), n, p, n) {
            return Ok(false);
        }
    }
    let f = pstar_comb(mu, n, p);
    Ok(partitions_upto(lambda_max, n).iter().all(|lam| lemma55_check(&f, mu, lam, n, p)))
}

fn branching(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let pts = numeric_points(cfg, 5)?;
    let w = max_w(cfg, 3);
    let mut out = Vec::new();
    for n in ns(cfg, 1, 3) {
        for mu in partitions_upto(w, n) {
            for pt in points_for(cfg, true, &pts) {
                let id = format!("branching n={n} mu=({mu}) {}", pt.label());
                let mu = mu.clone();
                out.push(Case::new(id, move || at_point!(&pt, |p| branching_case(&mu, n, w + 1, p))));
            }
        }
    }
    Ok(out)
}

fn limits(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let pts = numeric_points(cfg, 6)?;
    let mut out = Vec::new();
    for n in ns(cfg, 1, 3) {
        for mu in partitions_upto(max_w(cfg, 3), n) {
            for dir in [LimitDirection::SInfinity, LimitDirection::SZero] {
                // s stays a symbol; only q, t may be numeric
                let ps: Vec<(String, Params<RatFunc>)> = match points_for(cfg, true, &pts).as_slice() {
                    [Point::Symbolic(p)] => vec![("symbolic".into(), p.clone())],
                    numeric => numeric
                        .iter()
                        .map(|pt| match pt {
                            Point::Numeric(p) => (format!("{} (s symbolic)", pt.label()), Params::symbolic_s(p)),
                            Point::Symbolic(p) => ("symbolic".into(), p.clone()),
                        })
                        .collect(),
                };
                for (label, p) in ps {
                    let id = format!("limit {dir:?} n={n} mu=({mu}) {label}");
                    let mu = mu.clone();
                    out.push(Case::new(id, move || limit_check(&mu, n, dir, &p)));
                }
            }
        }
    }
    Ok(out)
}

fn pieri(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let pts = numeric_points(cfg, 7)?;
    let mut out = Vec::new();
    for n in ns(cfg, 1, 3) {
        for mu in partitions_upto(max_w(cfg, 3), n) {
            for pt in points_for(cfg, n <= 2, &pts) {
                let id = format!("pieri n={n} mu=({mu}) {}", pt.label());
                let mu = mu.clone();
                out.push(Case::new(id, move || at_point!(&pt, |p| verify_pieri(&mu, n, p))));
            }
        }
    }
    Ok(out)
}

fn cauchy_pairs(cfg: &SuiteConfig) -> Vec<(usize, usize)> {
    match (cfg.n, cfg.m) {
        (Some(n), Some(m)) => vec![(n, m)],
        (Some(n), None) => vec![(n, 1), (n, 2)],
        (None, Some(m)) => vec![(1, m), (2, m)],
        (None, None) => vec![(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)],
    }
}

fn cauchy(cfg: &SuiteConfig, dual: bool) -> Result<Vec<Case>> {
    let pts = numeric_points(cfg, if dual { 9 } else { 8 })?;
    let mut out = Vec::new();
    for (n, m) in cauchy_pairs(cfg) {
        for pt in points_for(cfg, n * m <= 4, &pts) {
            let name = if dual { "dualcauchy" } else { "cauchy" };
            let id = format!("{name} n={n} m={m} {}", pt.label());
            out.push(Case::new(id, move || {
                at_point!(&pt, |p| Ok(if dual { dual_cauchy_check(n, m, p) } else { verify_cauchy(n, m, p) }))
            }));
        }
    }
    Ok(out)
}

/// A light generic point with `t = q^(2k+1)`: small numerators keep the
/// bigints short at three variables.
pub fn theta_point(cfg: &SuiteConfig, k: u32) -> Result<Params<Rat>> {
    let theta = 2 * k as i64 + 1;
    if let Some(s) = &cfg.spec {
        let qh = s
            .q_half
            .clone()
            .ok_or_else(|| Error::IllFormedSpec("the integral suite needs q_half".into()))?;
        return Ok(Params::numeric(qh.clone(), qh.pow(theta), s.s.clone().unwrap_or_else(Rat::one)));
    }
    let mut r = rng(cfg, 10 + k as u64);
    loop {
        let qh = small_rational(&mut r, 3, 3);
        let s = small_rational(&mut r, 5, 1);
        let p = Params::numeric(qh.clone(), qh.pow(theta), s);
        if p.is_generic(GENERIC_BOUND) {
            return Ok(p);
        }
    }
}

fn integral(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let ks: Vec<u32> = cfg.k.map(|k| vec![k]).unwrap_or_else(|| vec![0, 1]);
    let w = max_w(cfg, 3);
    let mut out = Vec::new();
    for &k in &ks {
        let numeric = theta_point(cfg, k)?;
        for n in ns(cfg, 2, 3) {
            let pt = if n <= 2 && cfg.spec.is_none() {
                Point::Symbolic(Params::symbolic_theta(k))
            } else {
                Point::Numeric(numeric.clone())
            };
            for mu in partitions_upto(w, n) {
                let label = pt.label();
                if mu.len() < n {
                    let (mu, pt) = (mu.clone(), pt.clone());
                    out.push(Case::new(format!("integral k={k} n={n} mu=({mu}) {label}"), move || {
                        at_point!(&pt, |p| integral_rep_verify(&mu, n, k, p))
                    }));
                }
                let (mu, pt) = (mu.clone(), pt.clone());
                out.push(Case::new(format!("integral-route k={k} n={n} mu=({mu}) {label}"), move || {
                    at_point!(&pt, |p| Ok(pstar_integral(&mu, n, k, p)? == pstar_comb(&mu, n, p)))
                }));
            }
        }
    }
    if ks.contains(&1) && cfg.n.map_or(true, |n| n == 2) {
        let pt = if cfg.spec.is_none() { Point::Symbolic(Params::symbolic_theta(1)) } else { Point::Numeric(theta_point(cfg, 1)?) };
        for mu in partitions_upto(w, 1) {
            for r in 1..=2 {
                for sh in 1..=2 {
                    let id = format!("bound-shift k=1 n=2 mu=({mu}) r={r} s'={sh} {}", pt.label());
                    let (mu, pt) = (mu.clone(), pt.clone());
                    out.push(Case::new(id, move || {
                        at_point!(&pt, |p| Ok(bound_shift_integral(&mu, 2, 1, r, sh, p)?
                            == bound_shift_integral(&mu, 2, 1, 0, 0, p)?))
                    }));
                }
            }
        }
    }
    Ok(out)
}

/// Seeded one-variable Koornwinder points with distinct Askey–Wilson
/// eigenvalues up to degree `m_max`.
pub fn koornwinder_points(cfg: &SuiteConfig, m_max: usize, self_dual: bool, stream: u64) -> Result<Vec<KoornwinderParams<Rat>>> {
    let build = |base: Params<Rat>, a: [Rat; 4]| {
        if self_dual {
            let [_, a2, a3, a4] = a;
            KoornwinderParams::self_dual(1, base, a2, a3, a4)
        } else {
            KoornwinderParams::from_alphas(1, base, a)
        }
    };
    let usable = |kp: &KoornwinderParams<Rat>| -> bool {
        let (Ok(a1), Ok(a1d)) = (kp.a(1), kp.a1_dual()) else { return false };
        check_generic_multi(kp.base.q(), kp.base.t(), &[a1, a1d], GENERIC_BOUND)
            && (0..=m_max).all(|m| askey_wilson(m, kp).is_ok() && askey_wilson(m, &kp.dual()).is_ok())
    };
    if let Some(s) = &cfg.spec {
        let a = s.alphas().ok_or_else(|| Error::IllFormedSpec("need alpha1..alpha4".into()))?;
        let kp = build(s.params()?, a);
        if !kp.base.has_halves() {
            return Err(Error::IllFormedSpec("need q_half and t_half".into()));
        }
        return Ok(vec![kp]);
    }
    let mut r = rng(cfg, stream);
    let mut out = Vec::new();
    while out.len() < cfg.points.max(1) {
        let base = random_point(&mut r, GENERIC_BOUND);
        let a = [(); 4].map(|_| small_rational(&mut r, 7, 4));
        let kp = build(base, a);
        if usable(&kp) {
            out.push(kp);
        }
    }
    Ok(out)
}

fn kp_label(kp: &KoornwinderParams<Rat>) -> String {
    let g: Vec<String> = kp.gens.iter().map(|g| g.to_string()).collect();
    format!("{} alpha=({})", Point::Numeric(kp.base.clone()).label(), g.join(","))
}

fn binomial_n1(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let m_max = cfg.m.unwrap_or(4);
    let mut out = Vec::new();
    if cfg.n.map_or(true, |n| n == 1) {
        for kp in koornwinder_points(cfg, m_max, false, 20)? {
            out.push(Case::new(format!("binomial n=1 m<={m_max} {}", kp_label(&kp)), move || verify_binomial_n1(m_max, &kp)));
        }
    }
    for n in ns(cfg, 1, 2) {
        for lam in partitions_upto(max_w(cfg, 3), n) {
            out.push(Case::new(format!("binomial-structure n={n} lambda=({lam}) symbolic"), move || {
                let kp = KoornwinderParams::symbolic(n);
                Ok(binomial_unit_check(&lam, &kp)? && binomial_top_check(&lam, &kp)?)
            }));
        }
    }
    Ok(out)
}

fn duality_n1(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let top = cfg.m.unwrap_or(3);
    let mut out = Vec::new();
    for kp in koornwinder_points(cfg, top, true, 21)? {
        let label = kp_label(&kp);
        for m in 0..=top {
            for nu in 0..=top {
                let kp = kp.clone();
                out.push(Case::new(format!("duality m={m} nu={nu} {label}"), move || verify_duality_n1(m, nu, &kp)));
            }
        }
    }
    Ok(out)
}

fn refute_suite(cfg: &SuiteConfig) -> Vec<Case> {
    let ds: Vec<usize> = cfg.k.map(|d| vec![d as usize]).unwrap_or_else(|| (1..=3).collect());
    let degs: Vec<usize> = cfg.max_weight.map(|g| vec![g]).unwrap_or_else(|| (1..=6).collect());
    let mut out = Vec::new();
    for &d in &ds {
        for &g in &degs {
            out.push(Case::new(format!("refute d={d} deg={g}"), move || {
                let c = refute(d, g, g + 1)?;
                Ok(c.distinct && verify_certificate(&c))
            }));
        }
    }
    out
}

/// Expands a suite into its cases, in a fixed order.
pub fn cases(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Case>> {
    match suite {
        Suite::Routes => routes(cfg),
        Suite::Vanishing => vanishing(cfg),
        Suite::Shifts => shifts(cfg),
        Suite::TopTerm => topterm(cfg),
        Suite::Branching => branching(cfg),
        Suite::Limits => limits(cfg),
        Suite::Pieri => pieri(cfg),
        Suite::Cauchy => cauchy(cfg, false),
        Suite::DualCauchy => cauchy(cfg, true),
        Suite::Integral => integral(cfg),
        Suite::BinomialN1 => binomial_n1(cfg),
        Suite::DualityN1 => duality_n1(cfg),
        Suite::Refute => Ok(refute_suite(cfg)),
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<CaseResult>> {
    Ok(run_cases(&cases(suite, cfg)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        let s: PointSpec = "q=1/4,q_half=1/2,t=1/3,s=5".parse().unwrap();
        let p = s.params().unwrap();
        assert!(p.has_halves() == false);
        assert_eq!(*p.q(), Rat::new(1, 4));
        assert!("q=1/2,q=1/3".parse::<PointSpec>().is_err());
        assert!("q=1/2,t".parse::<PointSpec>().is_err());
        assert!("q=0,t=2".parse::<PointSpec>().is_err());
        let bad: PointSpec = "q=1/3,q_half=1/2,t=2".parse().unwrap();
        assert!(bad.params().is_err());
    }

    #[test]
    fn small_suite_runs() {
        let cfg = SuiteConfig { n: Some(2), m: Some(2), ..Default::default() };
        let r = run_suite(Suite::Cauchy, &cfg).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].passed(), "{}", r[0]);
        assert!("bogus".parse::<Suite>().is_err());
        assert_eq!(parse_suites("all").unwrap().len(), Suite::ALL.len());
    }
}
