//! Symbol alphabet, canonical text and JSON forms for rational functions.
//!
//! Flattened values use one index space: the seven base generators first
//! (`q_half, t_half, s, alpha1..alpha4`), then `x1..xn`, `y1..`, and `u`.
//! Polynomials whose coefficients are themselves rational functions are
//! flattened by shifting their variables past the base generators.

use serde::{Deserialize, Serialize};

use crate::arith::{Field, Monomial, Poly, Rat, RatFunc};
use crate::error::{Error, Result};

pub const Q_HALF: usize = 0;
pub const T_HALF: usize = 1;
pub const S: usize = 2;
pub const ALPHA: [usize; 4] = [3, 4, 5, 6];
pub const BASE_LEN: usize = 7;

const BASE_NAMES: [&str; BASE_LEN] =
    ["q_half", "t_half", "s", "alpha1", "alpha2", "alpha3", "alpha4"];
// printed names; half-power symbols print in units of their square
const BASE_TEXT: [&str; BASE_LEN] = ["q", "t", "s", "a1", "a2", "a3", "a4"];

fn is_half(i: usize) -> bool {
    i == Q_HALF || i == T_HALF || ALPHA.contains(&i)
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Alphabet {
    pub nx: usize,
    pub ny: usize,
    pub u: bool,
}

impl Alphabet {
    pub fn new(nx: usize) -> Self {
        Alphabet { nx, ny: 0, u: false }
    }

    pub fn len(&self) -> usize {
        BASE_LEN + self.nx + self.ny + usize::from(self.u)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Flattened index of `x_i` (1-based).
    pub fn x(&self, i: usize) -> usize {
        BASE_LEN + i - 1
    }

    pub fn y(&self, j: usize) -> usize {
        BASE_LEN + self.nx + j - 1
    }

    pub fn u_index(&self) -> usize {
        BASE_LEN + self.nx + self.ny
    }

    pub fn symbols(&self) -> Vec<String> {
        let mut v: Vec<String> = BASE_NAMES.iter().map(|s| s.to_string()).collect();
        v.extend((1..=self.nx).map(|i| format!("x{i}")));
        v.extend((1..=self.ny).map(|i| format!("y{i}")));
        if self.u {
            v.push("u".into());
        }
        v
    }

    fn text_name(&self, idx: usize) -> String {
        if idx < BASE_LEN {
            return BASE_TEXT[idx].into();
        }
        let k = idx - BASE_LEN;
        if k < self.nx {
            format!("x{}", k + 1)
        } else if k < self.nx + self.ny {
            format!("y{}", k - self.nx + 1)
        } else {
            "u".into()
        }
    }

    fn from_symbols(syms: &[String]) -> Result<Self> {
        let bad = |m: &str| Error::Parse { pos: 0, msg: m.to_string() };
        if syms.len() < BASE_LEN || syms[..BASE_LEN].iter().zip(BASE_NAMES).any(|(a, b)| a != b) {
            return Err(bad("alphabet must start with the seven base generators"));
        }
        let mut a = Alphabet::default();
        for s in &syms[BASE_LEN..] {
            let expect = if s == "u" {
                a.u = true;
                "u".to_string()
            } else if a.ny == 0 && !a.u && s.starts_with('x') {
                a.nx += 1;
                format!("x{}", a.nx)
            } else if !a.u && s.starts_with('y') {
                a.ny += 1;
                format!("y{}", a.ny)
            } else {
                return Err(bad(&format!("unexpected symbol {s}")));
            };
            if *s != expect {
                return Err(bad(&format!("expected symbol {expect}, got {s}")));
            }
        }
        Ok(a)
    }

    fn lookup(&self, name: &str) -> Option<usize> {
        if let Some(i) = BASE_TEXT.iter().position(|b| *b == name) {
            return Some(i);
        }
        if name == "u" && self.u {
            return Some(self.u_index());
        }
        let (head, tail) = name.split_at(1);
        let k: usize = tail.parse().ok()?;
        match head {
            "x" if (1..=self.nx).contains(&k) => Some(self.x(k)),
            "y" if (1..=self.ny).contains(&k) => Some(self.y(k)),
            _ => None,
        }
    }
}

/// Flattens a polynomial with rational-function coefficients into one
/// rational function over the full alphabet.
pub fn flatten(p: &Poly<RatFunc>) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mono = RatFunc::from_poly(Poly::monomial(m.remap(&|i| i + BASE_LEN), Rat::one()));
        acc += &(c.clone() * mono);
    }
    acc
}

/// Flattens a polynomial with numeric coefficients.
pub fn flatten_rat(p: &Poly<Rat>) -> RatFunc {
    RatFunc::from_poly(p.remap_vars(|i| i + BASE_LEN))
}

fn write_exp(out: &mut String, name: &str, e: i64, half: bool) {
    out.push_str(name);
    if half {
        if e % 2 == 0 {
            if e != 2 {
                out.push_str(&format!("^{}", e / 2));
            }
        } else {
            out.push_str(&format!("^({e}/2)"));
        }
    } else if e != 1 {
        out.push_str(&format!("^{e}"));
    }
}

fn poly_text(p: &Poly<Rat>, a: &Alphabet) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut mono = String::new();
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !mono.is_empty() {
                mono.push('*');
            }
            write_exp(&mut mono, &a.text_name(i), e, is_half(i));
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    out
}

/// Canonical text: the numerator, or `(num)/(den)` when there is a
/// nontrivial denominator. Terms run in descending graded-lex order.
pub fn to_text(r: &RatFunc, a: &Alphabet) -> String {
    let den = r.denom();
    if den.is_constant() {
        let c = den.constant_term();
        return poly_text(&r.numer().scale(&c.recip().unwrap()), a);
    }
    format!("({})/({})", poly_text(r.numer(), a), poly_text(&den, a))
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos] == b' ' {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse().or_else(|_| self.err("integer out of range"))
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let v = self.digits()?;
        Ok(if neg { -v } else { v })
    }

    fn number(&mut self) -> Result<Rat> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos < self.s.len() && self.s[self.pos] == b'/' {
            let save = self.pos;
            self.pos += 1;
            let dstart = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if dstart == self.pos {
                self.pos = save;
            }
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse::<Rat>().or_else(|_| {
            self.pos = start;
            self.err("malformed number")
        })
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a symbol or number");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

fn parse_factor(lx: &mut Lexer, a: &Alphabet, coef: &mut Rat, exps: &mut Vec<i64>) -> Result<()> {
    match lx.peek() {
        Some(c) if c.is_ascii_digit() => {
            *coef *= lx.number()?;
            Ok(())
        }
        _ => {
            let at = lx.pos;
            let name = lx.ident()?;
            let idx = match a.lookup(name) {
                Some(i) => i,
                None => return Err(Error::Parse { pos: at, msg: format!("unknown symbol {name}") }),
            };
            let half = is_half(idx);
            let mut e = if half { 2 } else { 1 };
            if lx.eat(b'^') {
                if lx.eat(b'(') {
                    let v = lx.signed()?;
                    lx.expect(b'/')?;
                    if lx.digits()? != 2 || !half {
                        return lx.err("only half-integer powers of q, t, a1..a4 are allowed");
                    }
                    lx.expect(b')')?;
                    e = v;
                } else {
                    let v = lx.signed()?;
                    e = if half { v * 2 } else { v };
                }
            }
            if exps.len() <= idx {
                exps.resize(idx + 1, 0);
            }
            exps[idx] += e;
            Ok(())
        }
    }
}

fn parse_sum(lx: &mut Lexer, a: &Alphabet) -> Result<Poly<Rat>> {
    let mut terms = Vec::new();
    let mut sign = if lx.eat(b'-') { -1 } else { 1 };
    loop {
        let mut coef = Rat::from(sign);
        let mut exps = Vec::new();
        parse_factor(lx, a, &mut coef, &mut exps)?;
        while lx.eat(b'*') {
            parse_factor(lx, a, &mut coef, &mut exps)?;
        }
        terms.push((Monomial::from_exps(&exps), coef));
        if lx.eat(b'+') {
            sign = 1;
        } else if lx.eat(b'-') {
            sign = -1;
        } else {
            break;
        }
    }
    Ok(Poly::from_terms(terms))
}

/// Parses the canonical text form over the given alphabet.
pub fn parse_text(text: &str, a: &Alphabet) -> Result<RatFunc> {
    let mut lx = Lexer { s: text.trim_end().as_bytes(), pos: 0 };
    let value = if lx.peek() == Some(b'(') {
        lx.expect(b'(')?;
        let num = parse_sum(&mut lx, a)?;
        lx.expect(b')')?;
        lx.expect(b'/')?;
        lx.expect(b'(')?;
        let at = lx.pos;
        let den = parse_sum(&mut lx, a)?;
        lx.expect(b')')?;
        RatFunc::from_fraction(num, &den)
            .ok_or(Error::Parse { pos: at, msg: "zero denominator".into() })?
    } else {
        RatFunc::from_poly(parse_sum(&mut lx, a)?)
    };
    if lx.peek().is_some() {
        return lx.err("trailing input");
    }
    Ok(value)
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: Vec<i64>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonValue {
    alphabet: Vec<String>,
    num: JsonPoly,
    den: JsonPoly,
}

fn poly_json(p: &Poly<Rat>, len: usize) -> JsonPoly {
    JsonPoly {
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut exp = m.exps().to_vec();
                exp.resize(len.max(exp.len()), 0);
                JsonTerm { exp, coef: c.to_string() }
            })
            .collect(),
    }
}

fn json_poly(j: &JsonPoly, len: usize) -> Result<Poly<Rat>> {
    let mut terms = Vec::with_capacity(j.terms.len());
    for (k, t) in j.terms.iter().enumerate() {
        if t.exp.len() != len {
            return Err(Error::Parse { pos: k, msg: "exponent vector length differs from alphabet".into() });
        }
        let c: Rat = t
            .coef
            .parse()
            .map_err(|_| Error::Parse { pos: k, msg: format!("bad coefficient {}", t.coef) })?;
        terms.push((Monomial::from_exps(&t.exp), c));
    }
    Ok(Poly::from_terms(terms))
}

fn json_parts(r: &RatFunc) -> (Poly<Rat>, Poly<Rat>) {
    let den = r.denom();
    if den.is_constant() {
        let c = den.constant_term().recip().unwrap();
        (r.numer().scale(&c), Poly::one())
    } else {
        (r.numer().clone(), den)
    }
}

pub fn to_json_value(r: &RatFunc, a: &Alphabet) -> serde_json::Value {
    let (num, den) = json_parts(r);
    let v = JsonValue {
        alphabet: a.symbols(),
        num: poly_json(&num, a.len()),
        den: poly_json(&den, a.len()),
    };
    serde_json::to_value(v).expect("serializable")
}

pub fn to_json(r: &RatFunc, a: &Alphabet) -> String {
    serde_json::to_string(&to_json_value(r, a)).expect("serializable")
}

pub fn parse_json(text: &str) -> Result<(RatFunc, Alphabet)> {
    let v: JsonValue = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    parse_json_value(v)
}

pub fn parse_json_from(value: &serde_json::Value) -> Result<(RatFunc, Alphabet)> {
    let v: JsonValue = serde_json::from_value(value.clone())
        .map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
    parse_json_value(v)
}

fn parse_json_value(v: JsonValue) -> Result<(RatFunc, Alphabet)> {
    let a = Alphabet::from_symbols(&v.alphabet)?;
    let num = json_poly(&v.num, a.len())?;
    let den = json_poly(&v.den, a.len())?;
    let r = RatFunc::from_fraction(num, &den)
        .ok_or(Error::Parse { pos: 0, msg: "zero denominator".into() })?;
    Ok((r, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> Alphabet {
        Alphabet::new(1)
    }

    #[test]
    fn zero_and_simple() {
        let a = a1();
        assert_eq!(to_text(&RatFunc::zero(), &a), "0");
        assert!(parse_text("0", &a).unwrap().is_zero());
        let p = RatFunc::var(a.x(1)) - RatFunc::one();
        assert_eq!(to_text(&p, &a), "x1 - 1");
        assert_eq!(parse_text("x1 - 1", &a).unwrap(), p);
    }

    #[test]
    fn half_powers() {
        let a = a1();
        let q = RatFunc::var(Q_HALF);
        assert_eq!(to_text(&q, &a), "q^(1/2)");
        assert_eq!(to_text(&(q.clone() * q.clone()), &a), "q");
        assert_eq!(to_text(&q.pow(-4), &a), "q^-2");
        assert_eq!(parse_text("q^(-3/2)", &a).unwrap(), q.pow(-3));
    }

    #[test]
    fn fraction_round_trip() {
        let a = a1();
        let q = RatFunc::var(Q_HALF).pow(2);
        let t = RatFunc::var(T_HALF).pow(2);
        let one = RatFunc::one();
        let v = (one.clone() + q.clone()) * (one.clone() - t.clone())
            * (one - q * t).inv().unwrap();
        let s = to_text(&v, &a);
        assert_eq!(s, "(q*t - q + t - 1)/(q*t - 1)");
        let back = parse_text(&s, &a).unwrap();
        assert_eq!(back, v);
        assert_eq!(to_text(&back, &a), s);
        let j = to_json(&v, &a);
        let (w, b) = parse_json(&j).unwrap();
        assert_eq!(b, a);
        assert_eq!(to_json(&w, &b), j);
    }

    #[test]
    fn parse_errors_have_positions() {
        let a = a1();
        match parse_text("x1 + z", &a) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_text("x1 +", &a).is_err());
        assert!(parse_text("(x1)/(0)", &a).is_err());
        assert!(parse_text("s^(1/2)", &a).is_err());
    }
}
