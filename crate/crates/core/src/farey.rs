//! Reduced fractions, Stern-Brocot paths over `[0, 1/2]`, continued
//! fractions and Farey approach sequences.
//!
//! The Markov tree is indexed by the branch of the Stern-Brocot tree spanned
//! by the boundary pair `(0/1, 1/2)`; its root is the mediant `1/3`.  A step
//! `L` replaces the right endpoint by the current mediant (moving toward the
//! smaller endpoint), `R` replaces the left one.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{domain, Error, Result};

/// A reduced fraction `p/q` with `q >= 1`, or the formal point at infinity `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: i64,
    q: i64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { p: 0, q: 1 };
    pub const HALF: Fraction = Fraction { p: 1, q: 2 };
    pub const ONE: Fraction = Fraction { p: 1, q: 1 };
    pub const INFINITY: Fraction = Fraction { p: 1, q: 0 };

    /// Builds `p/q` in lowest terms. `q = 0` with `p != 0` gives [`Fraction::INFINITY`].
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            if p == 0 {
                return domain("0/0 is not a fraction");
            }
            return Ok(Fraction::INFINITY);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(Fraction { p, q })
    }

    pub fn integer(n: i64) -> Self {
        Fraction { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    /// `p q' - p' q`.
    pub fn det(&self, other: &Fraction) -> i128 {
        self.p as i128 * other.q as i128 - other.p as i128 * self.q as i128
    }

    /// Two fractions are Farey neighbours when `|p q' - p' q| = 1`.
    pub fn is_adjacent(&self, other: &Fraction) -> bool {
        self.det(other).abs() == 1
    }

    /// Componentwise sum `(p+p')/(q+q')`, reduced.
    pub fn mediant(&self, other: &Fraction) -> Fraction {
        Fraction::new(self.p + other.p, self.q + other.q).expect("mediant of valid fractions")
    }

    /// Closed unit interval test `0 <= x <= 1/2`.
    pub fn in_fundamental_domain(&self) -> bool {
        !self.is_infinite() && self.p >= 0 && 2 * self.p <= self.q
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    /// Continued fraction expansion `[a0; a1, ..., an]` (finite).
    pub fn to_continued_fraction(&self) -> Result<ContinuedFraction> {
        if self.is_infinite() {
            return domain("1/0 has no continued fraction");
        }
        let (mut p, mut q) = (self.p, self.q);
        let a0 = Integer::div_floor(&p, &q);
        let mut quotients = Vec::new();
        let r = p - a0 * q;
        p = q;
        q = r;
        while q != 0 {
            let a = p / q;
            quotients.push(a);
            let r = p - a * q;
            p = q;
            q = r;
        }
        ContinuedFraction::new(a0, quotients, Vec::new())
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    /// Real order with `1/0` above every finite value.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (self.p as i128 * other.q as i128).cmp(&(other.p as i128 * self.q as i128)),
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("bad integer {t:?} in fraction {s:?}: {e}")))
        };
        match s.split_once('/') {
            Some((p, q)) => Fraction::new(parse(p)?, parse(q)?),
            None => Ok(Fraction::integer(parse(s)?)),
        }
    }
}

/// The two involutions generating the symmetries of `m`: `x -> 1 - x` and `x -> 1/x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    OneMinus,
    Reciprocal,
}

impl Symmetry {
    pub fn apply(self, x: Fraction) -> Fraction {
        match self {
            // 1 - infinity is the same projective point
            Symmetry::OneMinus if x.is_infinite() => x,
            Symmetry::OneMinus => Fraction { p: x.q - x.p, q: x.q },
            Symmetry::Reciprocal => Fraction::new(x.q, x.p).expect("nonzero pair"),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symmetry::OneMinus => f.write_str("x->1-x"),
            Symmetry::Reciprocal => f.write_str("x->1/x"),
        }
    }
}

/// Maps `x` into `[0, 1/2]`.
///
/// Returns `(y, word)` such that applying the symmetries of `word` to `y`, in
/// order, gives back `x`. The point `1/0` maps to `0/1`.
pub fn reduce_to_fundamental(x: Fraction) -> (Fraction, Vec<Symmetry>) {
    let mut y = x;
    let mut applied = Vec::new();
    while !y.in_fundamental_domain() {
        let g = if y.is_infinite() || y > Fraction::ONE {
            Symmetry::Reciprocal
        } else {
            // y < 0 or 1/2 < y <= 1
            Symmetry::OneMinus
        };
        y = g.apply(y);
        applied.push(g);
    }
    applied.reverse();
    (y, applied)
}

/// Applies a symmetry word left to right.
pub fn apply_word(x: Fraction, word: &[Symmetry]) -> Fraction {
    word.iter().fold(x, |acc, g| g.apply(acc))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    L,
    R,
}

/// A path in the Stern-Brocot branch below `(0/1, 1/2)`; empty is `1/3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SbPath(pub Vec<Step>);

impl SbPath {
    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SbPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::L => "L",
                Step::R => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for SbPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Step::L),
                'R' | 'r' => Ok(Step::R),
                other => Err(Error::Parse(format!("path letter {other:?} is not L or R"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SbPath)
    }
}

/// Encodes `x` strictly inside `(0, 1/2)` as a Stern-Brocot path.
pub fn sb_encode(x: Fraction) -> Result<SbPath> {
    if x.is_infinite() || x <= Fraction::ZERO || x >= Fraction::HALF {
        return domain(format!("sb_encode needs 0 < x < 1/2, got {x}"));
    }
    let mut steps = Vec::new();
    walk_to(x, |step, _, _| steps.push(step));
    Ok(SbPath(steps))
}

pub fn sb_decode(path: &SbPath) -> Fraction {
    let (mut l, mut r) = (Fraction::ZERO, Fraction::HALF);
    for step in path.steps() {
        let m = l.mediant(&r);
        match step {
            Step::L => r = m,
            Step::R => l = m,
        }
    }
    l.mediant(&r)
}

/// Stern-Brocot parents `(left, right)` of `x` in `(0, 1/2)`.
pub fn sb_parents(x: Fraction) -> Result<(Fraction, Fraction)> {
    if x.is_infinite() || x <= Fraction::ZERO || x >= Fraction::HALF {
        return domain(format!("{x} has no parents inside the (0/1, 1/2) branch"));
    }
    let mut parents = (Fraction::ZERO, Fraction::HALF);
    walk_to(x, |_, l, r| parents = (l, r));
    Ok(parents)
}

// Calls `visit(step, l, r)` with the parent pair after each step; the final
// pair are the parents of x.
fn walk_to(x: Fraction, mut visit: impl FnMut(Step, Fraction, Fraction)) {
    let (mut l, mut r) = (Fraction::ZERO, Fraction::HALF);
    let mut m = l.mediant(&r);
    while m != x {
        let step = if x < m {
            r = m;
            Step::L
        } else {
            l = m;
            Step::R
        };
        visit(step, l, r);
        m = l.mediant(&r);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "left" | "l" | "L" => Ok(Side::Left),
            "right" | "r" | "R" => Ok(Side::Right),
            other => Err(Error::Parse(format!("side must be left or right, got {other:?}"))),
        }
    }
}

/// Fractions approaching `x` from one side inside the `[0, 1/2]` tree.
///
/// The sequence starts at the mediant of `x` with its Stern-Brocot parent on
/// that side (for `0/1` the right parent is `1/2`, for `1/2` the left parent
/// is `0/1`) and keeps taking mediants against `x`, so every element is a
/// Farey neighbour of `x` and denominators increase strictly.
pub fn farey_neighbours(x: Fraction, side: Side, count: usize) -> Result<Vec<Fraction>> {
    if !x.in_fundamental_domain() {
        return domain(format!("farey_neighbours needs x in [0, 1/2], got {x}"));
    }
    match (x == Fraction::ZERO, x == Fraction::HALF, side) {
        (true, _, Side::Left) => return domain("0/1 has no left side in the [0, 1/2] tree"),
        (_, true, Side::Right) => return domain("1/2 has no right side in the [0, 1/2] tree"),
        _ => {}
    }
    Ok(mediant_chain(approach_parent(x, side)?, x, count))
}

/// A Farey neighbour of `x` on `side`, returned as a raw pair so that the
/// signed infinities `1/0` and `-1/0` can be told apart.
///
/// Inside `[0, 1/2]` the neighbour is the Stern-Brocot parent used by
/// [`farey_neighbours`]; elsewhere it is the neighbour with the smallest
/// non-negative denominator.
pub fn approach_parent(x: Fraction, side: Side) -> Result<(i64, i64)> {
    if x.is_infinite() {
        return domain("no one-sided approach to 1/0");
    }
    if x.in_fundamental_domain() {
        let parent = match (x == Fraction::ZERO, x == Fraction::HALF, side) {
            (true, _, Side::Right) => Some(Fraction::HALF),
            (_, true, Side::Left) => Some(Fraction::ZERO),
            (false, false, _) => {
                let (l, r) = sb_parents(x)?;
                Some(if side == Side::Left { l } else { r })
            }
            _ => None,
        };
        if let Some(f) = parent {
            return Ok((f.p, f.q));
        }
    }
    // a q - b p = sigma, 0 <= b < q
    let (p, q) = (x.p, x.q);
    let sigma: i64 = match side {
        Side::Left => -1,
        Side::Right => 1,
    };
    if q == 1 {
        return Ok((sigma, 0));
    }
    let inv = mod_inverse(p.rem_euclid(q), q);
    let b = (-sigma * inv).rem_euclid(q);
    let a = (sigma + b * p) / q;
    Ok((a, b))
}

/// One-sided approach sequence at any finite rational.
pub fn approach_sequence(x: Fraction, side: Side, count: usize) -> Result<Vec<Fraction>> {
    let parent = approach_parent(x, side)?;
    Ok(mediant_chain(parent, x, count))
}

fn mediant_chain(parent: (i64, i64), x: Fraction, count: usize) -> Vec<Fraction> {
    (1..=count as i64)
        .map(|k| Fraction::new(parent.0 + k * x.p, parent.1 + k * x.q).expect("neighbour mediant"))
        .collect()
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

/// A simple continued fraction `[a0; a1, ..., an, (b1, ..., bk)]`.
///
/// An empty period means a finite expansion (a rational number); a non-empty
/// period repeats forever (a quadratic irrational).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    a0: i64,
    prefix: Vec<i64>,
    period: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(a0: i64, prefix: Vec<i64>, period: Vec<i64>) -> Result<Self> {
        if let Some(a) = prefix.iter().chain(&period).find(|&&a| a <= 0) {
            return domain(format!("partial quotients must be positive, got {a}"));
        }
        Ok(ContinuedFraction { a0, prefix, period })
    }

    pub fn a0(&self) -> i64 {
        self.a0
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Partial quotient `a_n` for `n >= 1`, or `None` past the end of a finite expansion.
    pub fn partial_quotient(&self, n: usize) -> Option<i64> {
        if n == 0 {
            return Some(self.a0);
        }
        let i = n - 1;
        if i < self.prefix.len() {
            Some(self.prefix[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.prefix.len()) % self.period.len()])
        }
    }

    /// Convergents `c_0, c_1, ..., c_depth` (fewer when a finite expansion ends,
    /// or when denominators would overflow `i64`).
    pub fn convergents_from_zero(&self, depth: usize) -> Vec<Fraction> {
        let mut out = Vec::with_capacity(depth + 1);
        let (mut p_prev, mut q_prev) = (1i64, 0i64);
        let (mut p, mut q) = (self.a0, 1i64);
        out.push(Fraction { p, q });
        for n in 1..=depth {
            let Some(a) = self.partial_quotient(n) else { break };
            let next = a
                .checked_mul(p)
                .and_then(|v| v.checked_add(p_prev))
                .zip(a.checked_mul(q).and_then(|v| v.checked_add(q_prev)));
            let Some((pn, qn)) = next else { break };
            p_prev = p;
            q_prev = q;
            p = pn;
            q = qn;
            out.push(Fraction { p, q });
        }
        out
    }

    /// Convergents `c_1, ..., c_depth`.
    pub fn convergents(&self, depth: usize) -> Vec<Fraction> {
        let mut all = self.convergents_from_zero(depth);
        all.remove(0);
        all
    }

    /// Exact value of a finite expansion.
    pub fn value(&self) -> Option<Fraction> {
        if !self.is_finite() {
            return None;
        }
        self.convergents_from_zero(self.prefix.len()).last().copied()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a0)?;
        if self.prefix.is_empty() && self.period.is_empty() {
            return Ok(());
        }
        f.write_str(";")?;
        let mut parts: Vec<String> = self.prefix.iter().map(|a| a.to_string()).collect();
        if !self.period.is_empty() {
            let tail: Vec<String> = self.period.iter().map(|a| a.to_string()).collect();
            parts.push(format!("({})", tail.join(",")));
        }
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    /// Parses `"a0;a1,a2,(b1,...,bk)"`; surrounding brackets are optional.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("continued fraction {s:?}: {msg}"));
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        let (head, rest) = match body.split_once(';') {
            Some((h, r)) => (h, r.trim()),
            None => (body, ""),
        };
        let a0 = head.trim().parse::<i64>().map_err(|_| bad("a0 is not an integer"))?;
        let (prefix_str, period_str) = match rest.find('(') {
            Some(i) => {
                let tail = rest[i + 1..].trim();
                let tail = tail.strip_suffix(')').ok_or_else(|| bad("unclosed period"))?;
                (&rest[..i], Some(tail))
            }
            None => (rest, None),
        };
        let parse_list = |t: &str| -> Result<Vec<i64>> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<i64>().map_err(|_| bad(&format!("{x:?} is not an integer"))))
                .collect()
        };
        let prefix = parse_list(prefix_str)?;
        let period = match period_str {
            Some(t) => {
                let p = parse_list(t)?;
                if p.is_empty() {
                    return Err(bad("empty period"));
                }
                p
            }
            None => Vec::new(),
        };
        ContinuedFraction::new(a0, prefix, period)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    #[test]
    fn fraction_normalises() {
        assert_eq!(Fraction::new(4, -8).unwrap(), f("-1/2"));
        assert_eq!(Fraction::new(-3, 0).unwrap(), Fraction::INFINITY);
        assert!(Fraction::new(0, 0).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_to_fundamental(f("2/3")), (f("1/3"), vec![Symmetry::OneMinus]));
        assert_eq!(reduce_to_fundamental(f("1/3")), (f("1/3"), vec![]));
        assert_eq!(reduce_to_fundamental(Fraction::INFINITY).0, Fraction::ZERO);
        let (y, word) = reduce_to_fundamental(f("7/3"));
        assert_eq!(y, f("3/7"));
        assert_eq!(apply_word(y, &word), f("7/3"));
    }

    // every word of length <= 6 in the two involutions, applied to x
    fn orbit(x: Fraction) -> Vec<Fraction> {
        let mut out = vec![x];
        let mut frontier = vec![x];
        for _ in 0..6 {
            let mut next = Vec::new();
            for y in frontier {
                for g in [Symmetry::OneMinus, Symmetry::Reciprocal] {
                    next.push(g.apply(y));
                }
            }
            out.extend(next.iter().copied());
            frontier = next;
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn reduce_matches_brute_force_orbit() {
        for p in -15..=15 {
            for q in 1..=15 {
                let x = Fraction::new(p, q).unwrap();
                let in_domain: Vec<_> = orbit(x).into_iter().filter(|y| y.in_fundamental_domain()).collect();
                let (y, word) = reduce_to_fundamental(x);
                assert!(in_domain.contains(&y), "{x} -> {y} not in orbit");
                assert_eq!(apply_word(y, &word), x);
                assert_eq!(reduce_to_fundamental(y), (y, vec![]));
            }
        }
        let orbit73: Vec<_> = orbit(f("7/3")).into_iter().filter(|y| y.in_fundamental_domain()).collect();
        assert_eq!(orbit73, vec![f("3/7")]);
    }

    #[test]
    fn sb_examples() {
        assert_eq!(sb_encode(f("1/3")).unwrap().to_string(), "");
        assert_eq!(sb_encode(f("1/4")).unwrap().to_string(), "L");
        assert_eq!(sb_encode(f("2/5")).unwrap().to_string(), "R");
        assert_eq!(sb_encode(f("3/8")).unwrap().to_string(), "RL");
        assert_eq!(sb_decode(&"RL".parse().unwrap()), f("3/8"));
        assert!(sb_encode(f("1/2")).is_err());
        assert!(sb_encode(Fraction::ZERO).is_err());
        assert!(sb_encode(f("3/5")).is_err());
        assert_eq!(sb_encode(f("1/10")).unwrap().len(), 7);
    }

    #[test]
    fn sb_round_trip_q_le_500() {
        for q in 3..=500i64 {
            for p in 1..q {
                if 2 * p >= q || p.gcd(&q) != 1 {
                    continue;
                }
                let x = Fraction::new(p, q).unwrap();
                assert_eq!(sb_decode(&sb_encode(x).unwrap()), x);
            }
        }
    }

    #[test]
    fn convergent_examples() {
        let cf: ContinuedFraction = "0;2,(1)".parse().unwrap();
        let got: Vec<String> = cf.convergents(5).iter().map(|c| c.to_string()).collect();
        assert_eq!(got, ["1/2", "1/3", "2/5", "3/8", "5/13"]);
        let cf: ContinuedFraction = "0;3".parse().unwrap();
        assert_eq!(cf.convergents(1), vec![f("1/3")]);
        assert_eq!(cf.convergents(4), vec![f("1/3")]);
        let cf: ContinuedFraction = "[0;(2)]".parse().unwrap();
        let got: Vec<String> = cf.convergents(4).iter().map(|c| c.to_string()).collect();
        assert_eq!(got, ["1/2", "2/5", "5/12", "12/29"]);
    }

    #[test]
    fn convergents_are_unimodular() {
        let cf: ContinuedFraction = "1;3,(1,4,2)".parse().unwrap();
        let c = cf.convergents_from_zero(25);
        for w in c.windows(2) {
            assert!(w[0].is_adjacent(&w[1]));
        }
        for w in c[1..].windows(2) {
            assert!(w[0].q() < w[1].q());
        }
    }

    #[test]
    fn finite_cf_terminates_at_value() {
        let x = f("355/113");
        let cf = x.to_continued_fraction().unwrap();
        assert_eq!(cf.to_string(), "3;7,16");
        assert_eq!(cf.value(), Some(x));
        assert_eq!(*cf.convergents(10).last().unwrap(), x);
    }

    #[test]
    fn cf_parse_errors() {
        assert!("0;2,(".parse::<ContinuedFraction>().is_err());
        assert!("0;2,0".parse::<ContinuedFraction>().is_err());
        assert!("x;1".parse::<ContinuedFraction>().is_err());
        assert!("0;1,()".parse::<ContinuedFraction>().is_err());
    }

    #[test]
    fn neighbour_examples() {
        let s = |v: Vec<Fraction>| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        assert_eq!(s(farey_neighbours(f("1/2"), Side::Left, 3).unwrap()), ["1/3", "2/5", "3/7"]);
        assert_eq!(s(farey_neighbours(f("1/3"), Side::Right, 3).unwrap()), ["2/5", "3/8", "4/11"]);
        assert_eq!(s(farey_neighbours(Fraction::ZERO, Side::Right, 3).unwrap()), ["1/3", "1/4", "1/5"]);
        assert!(farey_neighbours(Fraction::ZERO, Side::Left, 3).is_err());
        assert!(farey_neighbours(Fraction::HALF, Side::Right, 3).is_err());
        assert!(farey_neighbours(f("2/3"), Side::Left, 3).is_err());
    }

    #[test]
    fn general_approach() {
        let s = |v: Vec<Fraction>| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        assert_eq!(s(approach_sequence(f("1/2"), Side::Right, 3).unwrap()), ["2/3", "3/5", "4/7"]);
        assert_eq!(s(approach_sequence(Fraction::ZERO, Side::Left, 3).unwrap()), ["-1/1", "-1/2", "-1/3"]);
        assert_eq!(s(approach_sequence(f("5/2"), Side::Left, 2).unwrap()), ["7/3", "12/5"]);
        assert_eq!(s(approach_sequence(f("3"), Side::Right, 2).unwrap()), ["4/1", "7/2"]);
        for p in -20..=20 {
            for q in 1..=20 {
                let x = Fraction::new(p, q).unwrap();
                for side in [Side::Left, Side::Right] {
                    let seq = approach_sequence(x, side, 6).unwrap();
                    for (i, y) in seq.iter().enumerate() {
                        assert!(y.is_adjacent(&x));
                        match side {
                            Side::Left => assert!(*y < x),
                            Side::Right => assert!(*y > x),
                        }
                        if i > 0 {
                            assert!(y.q() > seq[i - 1].q());
                            assert!(seq[i - 1].is_adjacent(y));
                        }
                    }
                }
            }
        }
    }
}
