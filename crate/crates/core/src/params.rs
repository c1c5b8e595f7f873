//! The parameters `(q, t, s)` in whatever coefficient field a run uses.

use rand::Rng;

use crate::arith::{Field, Rat, RatFunc};
use crate::generic::check_generic;
use crate::serial::{Q_HALF, S, T_HALF};

#[derive(Clone, Debug)]
pub struct Params<K> {
    q: K,
    t: K,
    s: K,
    q_half: Option<K>,
    t_half: Option<K>,
}

impl<K: Field> Params<K> {
    /// Parameters without square roots; half powers will panic.
    pub fn new(q: K, t: K, s: K) -> Self {
        Params { q, t, s, q_half: None, t_half: None }
    }

    pub fn from_halves(q_half: K, t_half: K, s: K) -> Self {
        Params {
            q: q_half.clone() * &q_half,
            t: t_half.clone() * &t_half,
            s,
            q_half: Some(q_half),
            t_half: Some(t_half),
        }
    }

    pub fn q(&self) -> &K {
        &self.q
    }

    pub fn t(&self) -> &K {
        &self.t
    }

    pub fn s(&self) -> &K {
        &self.s
    }

    pub fn s2(&self) -> K {
        self.s.clone() * &self.s
    }

    pub fn q_half(&self) -> &K {
        self.q_half.as_ref().expect("this computation needs q^(1/2)")
    }

    pub fn t_half(&self) -> &K {
        self.t_half.as_ref().expect("this computation needs t^(1/2)")
    }

    pub fn has_halves(&self) -> bool {
        self.q_half.is_some() && self.t_half.is_some()
    }

    pub fn q_pow(&self, e: i64) -> K {
        self.q.pow(e)
    }

    pub fn t_pow(&self, e: i64) -> K {
        self.t.pow(e)
    }

    /// `q^a t^b`.
    pub fn qt(&self, a: i64, b: i64) -> K {
        self.q.pow(a) * self.t.pow(b)
    }

    /// `q^(e/2)`.
    pub fn q_half_pow(&self, e: i64) -> K {
        if e % 2 == 0 {
            self.q.pow(e / 2)
        } else {
            self.q_half().pow(e)
        }
    }

    /// `t^(e/2)`.
    pub fn t_half_pow(&self, e: i64) -> K {
        if e % 2 == 0 {
            self.t.pow(e / 2)
        } else {
            self.t_half().pow(e)
        }
    }

    pub fn with_s(&self, s: K) -> Self {
        Params { s, ..self.clone() }
    }

    /// The same point with `q` and `t` exchanged.
    pub fn swap_qt(&self) -> Self {
        Params {
            q: self.t.clone(),
            t: self.q.clone(),
            s: self.s.clone(),
            q_half: self.t_half.clone(),
            t_half: self.q_half.clone(),
        }
    }

    /// `(1/q, 1/t, 1/s)`.
    pub fn inverted(&self) -> Self {
        let inv = |k: &K| k.inv().expect("parameters must be nonzero");
        Params {
            q: inv(&self.q),
            t: inv(&self.t),
            s: inv(&self.s),
            q_half: self.q_half.as_ref().map(inv),
            t_half: self.t_half.as_ref().map(inv),
        }
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Params<L> {
        Params {
            q: f(&self.q),
            t: f(&self.t),
            s: f(&self.s),
            q_half: self.q_half.as_ref().map(&f),
            t_half: self.t_half.as_ref().map(&f),
        }
    }
}

impl Params<RatFunc> {
    /// Fully symbolic `q^(1/2), t^(1/2), s`.
    pub fn symbolic() -> Self {
        Params::from_halves(RatFunc::var(Q_HALF), RatFunc::var(T_HALF), RatFunc::var(S))
    }

    /// Symbolic `q^(1/2)` and `s` with `t = q^(2k+1)`.
    pub fn symbolic_theta(k: u32) -> Self {
        let qh = RatFunc::var(Q_HALF);
        Params::from_halves(qh.clone(), qh.pow(2 * k as i64 + 1), RatFunc::var(S))
    }

    /// Numeric `q, t` with a symbolic `s`.
    pub fn symbolic_s(p: &Params<Rat>) -> Self {
        let mut r = p.map(RatFunc::from_rat);
        r.s = RatFunc::var(S);
        r
    }
}

impl Params<Rat> {
    /// Numeric point with the squares of `q^(1/2), t^(1/2)` and the given `s`.
    pub fn numeric(q_half: Rat, t_half: Rat, s: Rat) -> Self {
        Params::from_halves(q_half, t_half, s)
    }

    pub fn lift<K: Field>(&self) -> Params<K> {
        self.map(K::from_rat)
    }

    pub fn is_generic(&self, bound: u32) -> bool {
        check_generic(&self.q, &self.t, &self.s, bound)
    }
}

/// A small random nonzero rational `a/b`, with `|a| <= num_max`, `b <= den_max`.
pub fn small_rational<R: Rng>(rng: &mut R, num_max: i64, den_max: i64) -> Rat {
    loop {
        let a = rng.gen_range(-num_max..=num_max);
        let b = rng.gen_range(1..=den_max);
        if a != 0 {
            return Rat::new(a, b);
        }
    }
}

/// Seeded generic numeric point passing the genericity check at `bound`.
pub fn random_point<R: Rng>(rng: &mut R, bound: u32) -> Params<Rat> {
    loop {
        let p = Params::numeric(
            small_rational(rng, 7, 4),
            small_rational(rng, 7, 4),
            small_rational(rng, 7, 4),
        );
        if p.is_generic(bound) {
            return p;
        }
    }
}

/// Generic numeric point with `t = q^(2k+1)`.
pub fn random_theta_point<R: Rng>(rng: &mut R, k: u32, bound: u32) -> Params<Rat> {
    loop {
        let qh = small_rational(rng, 5, 3);
        let th = qh.pow(2 * k as i64 + 1);
        let p = Params::numeric(qh, th, small_rational(rng, 7, 4));
        if p.is_generic(bound) {
            return p;
        }
    }
}
