//! Partitions, diagram statistics, interlacing and reverse tableaux.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition with trailing zeros removed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Panics if `parts` is not weakly decreasing.
    pub fn new(parts: &[usize]) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing")
    }

    pub fn try_new(parts: &[usize]) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Some(Partition(v))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `mu_i` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `n(mu) = sum (i-1) mu_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// `self` is a subdiagram of `other`.
    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Squares `(i, j)`, 1-based, row by row.
    pub fn squares(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn contains_square(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) >= j
    }

    /// Order used for every enumeration: weight first, then parts in
    /// decreasing lexicographic order.
    pub fn graded_cmp(&self, other: &Partition) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }

    pub fn plus_one(&self, n: usize) -> Partition {
        Partition(self.padded(n).iter().map(|p| p + 1).collect())
    }

    pub fn minus_one(&self, n: usize) -> Result<Partition> {
        if n == 0 || self.part(n) == 0 || self.len() > n {
            return Err(Error::NotStrictlyPositive);
        }
        Ok(Partition::new(&self.0.iter().map(|p| p - 1).collect::<Vec<_>>()))
    }

    /// `(mu_i, mu_{i+1}, ...)`, 1-based.
    pub fn tail_from(&self, i: usize) -> Partition {
        Partition(self.0.iter().skip(i.saturating_sub(1)).copied().collect())
    }

    pub fn drop_first(&self) -> Partition {
        self.tail_from(2)
    }

    pub fn check_length(&self, n: usize) -> Result<()> {
        if self.len() > n {
            Err(Error::LengthExceeded { len: self.len(), n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad part '{p}'")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Partition::try_new(&parts).ok_or_else(|| format!("parts of '{s}' are not weakly decreasing"))
    }
}

/// All partitions with `|mu| <= max_weight` and at most `max_length` parts,
/// in graded order.
pub fn partitions_upto(max_weight: usize, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        out.extend(partitions_of(w, max_length, w));
    }
    out
}

/// Partitions of `w` with at most `max_length` parts, each at most
/// `max_part`, in decreasing lexicographic order.
pub fn partitions_of(w: usize, max_length: usize, max_part: usize) -> Vec<Partition> {
    fn rec(w: usize, len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if w == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if len == 0 {
            return;
        }
        for p in (1..=cap.min(w)).rev() {
            cur.push(p);
            rec(w - p, len - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, max_length, max_part, &mut Vec::new(), &mut out);
    out
}

/// Arm, leg and mirror statistics of one square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareStats {
    pub i: usize,
    pub j: usize,
    pub a: i64,
    pub l: i64,
    pub a_co: i64,
    pub l_co: i64,
    pub a_mirror: i64,
    pub l_mirror: i64,
}

pub fn square_stats(mu: &Partition, n: usize, i: usize, j: usize) -> Result<SquareStats> {
    if !mu.contains_square(i, j) {
        return Err(Error::OutOfDiagram { i, j });
    }
    let conj_j = mu.0.iter().filter(|&&p| p >= j).count() as i64;
    let mu_i = mu.part(i) as i64;
    let (i, j) = (i as i64, j as i64);
    let a = mu_i - j;
    let l = conj_j - i;
    let a_co = j - 1;
    Ok(SquareStats {
        i: i as usize,
        j: j as usize,
        a,
        l,
        a_co,
        l_co: i - 1,
        a_mirror: mu_i + a_co,
        l_mirror: l + 2 * (n as i64 - conj_j),
    })
}

/// Statistics of every square of `mu`, row by row.
pub fn all_stats(mu: &Partition, n: usize) -> Vec<SquareStats> {
    mu.squares().map(|(i, j)| square_stats(mu, n, i, j).unwrap()).collect()
}

/// `nu ≺ mu`: `mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...`.
pub fn interlaces(nu: &Partition, mu: &Partition) -> bool {
    let k = nu.len().max(mu.len());
    (1..=k).all(|i| mu.part(i) >= nu.part(i) && nu.part(i) >= mu.part(i + 1))
}

/// All `nu ≺ mu` with at most `max_len` parts, in decreasing lex order.
pub fn interlacing_below(mu: &Partition, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let k = mu.len().min(max_len);
    if mu.len() > max_len + 1 {
        return out;
    }
    fn rec(mu: &Partition, i: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > k {
            out.push(Partition::new(cur));
            return;
        }
        for v in (mu.part(i + 1)..=mu.part(i)).rev() {
            cur.push(v);
            rec(mu, i + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(mu, 1, k, &mut Vec::new(), &mut out);
    out
}

/// Squares of `lambda / mu` (1-based), `None` when `mu ⊄ lambda`.
pub fn skew_squares(lambda: &Partition, mu: &Partition) -> Option<Vec<(usize, usize)>> {
    if !mu.is_subset_of(lambda) {
        return None;
    }
    Some(lambda.squares().filter(|&(i, j)| !mu.contains_square(i, j)).collect())
}

/// A filling strictly decreasing down columns and weakly decreasing
/// along rows, entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverseTableau {
    pub shape: Partition,
    pub n: usize,
    /// `rows[i][j]` is the entry of square `(i+1, j+1)`.
    pub rows: Vec<Vec<usize>>,
}

impl ReverseTableau {
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    /// Squares with entry at least `r`.
    pub fn layer(&self, r: usize) -> Partition {
        Partition::new(&self.rows.iter().map(|row| row.iter().filter(|&&e| e >= r).count()).collect::<Vec<_>>())
    }

    /// `[layer(n), layer(n-1), ..., layer(1)]` preceded by the empty shape.
    pub fn chain(&self) -> Vec<Partition> {
        let mut v = vec![Partition::empty()];
        for r in (1..=self.n).rev() {
            v.push(self.layer(r));
        }
        v
    }

    pub fn is_valid(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]));
        let cols_ok = self.shape.squares().all(|(i, j)| {
            !self.shape.contains_square(i + 1, j) || self.entry(i, j) > self.entry(i + 1, j)
        });
        let range_ok = self.rows.iter().flatten().all(|&e| (1..=self.n).contains(&e));
        rows_ok && cols_ok && range_ok
    }
}

/// Every reverse tableau of shape `mu` with entries in `1..=n`.
pub fn reverse_tableaux(mu: &Partition, n: usize) -> Vec<ReverseTableau> {
    if mu.len() > n {
        return Vec::new();
    }
    // fillings with entries in lo..=n, recursing on the layer of entries > lo
    fn rec(mu: &Partition, lo: usize, n: usize) -> Vec<Vec<Vec<usize>>> {
        if lo == n {
            return if mu.len() <= 1 { vec![vec![vec![n; mu.part(1)]]] } else { vec![] };
        }
        let mut out = Vec::new();
        for nu in interlacing_below(mu, n - lo) {
            for inner in rec(&nu, lo + 1, n) {
                let rows = (1..=mu.len())
                    .map(|i| {
                        let mut r: Vec<usize> = inner.get(i - 1).cloned().unwrap_or_default();
                        r.truncate(nu.part(i));
                        r.resize(mu.part(i), lo);
                        r
                    })
                    .collect();
                out.push(rows);
            }
        }
        out
    }
    if mu.is_empty() {
        return vec![ReverseTableau { shape: mu.clone(), n, rows: vec![] }];
    }
    rec(mu, 1, n)
        .into_iter()
        .map(|mut rows| {
            rows.truncate(mu.len());
            ReverseTableau { shape: mu.clone(), n, rows }
        })
        .collect()
}

/// `(n - mu'_m, ..., n - mu'_1)` for `mu` inside the `n x m` box.
pub fn tilde(mu: &Partition, n: usize, m: usize) -> Result<Partition> {
    if mu.len() > n || mu.part(1) > m {
        return Err(Error::NotInBox { n, m });
    }
    let c = mu.conjugate();
    Ok(Partition::new(&(1..=m).rev().map(|j| n - c.part(j)).collect::<Vec<_>>()))
}

/// All partitions inside the `n x m` box, in graded order.
pub fn box_partitions(n: usize, m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=n * m {
        out.extend(partitions_of(w, n, m));
    }
    out
}
