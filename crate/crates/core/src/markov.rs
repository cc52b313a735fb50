//! Exact Vieta recursion on Markov-type surfaces.
//!
//! Three surfaces are supported:
//!
//! * classical: `x^2 + y^2 + z^2 = 3xyz`, stored as unscaled Markov numbers,
//!   Vieta step `z -> 3xy - z`;
//! * the `a`-family: `X^2 + Y^2 + Z^2 - XYZ = 4 - 4a^6` on traces, Vieta step
//!   `Z -> XY - Z`, rooted at `(a^2+2, a^2+2, 4a^2+2)`;
//! * Fricke: `X^2 + Y^2 + Z^2 - XYZ = c < 0`, seeded by a user triple of exact
//!   rationals `(tr A, tr B, tr AB)`.
//!
//! A node of the tree is a Farey fraction `x` in `(0, 1/2)` with parents
//! `l < x < r`; its triple is `(T(l), T(r), T(x))` in that order.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use parking_lot::RwLock;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::farey::{reduce_to_fundamental, sb_encode, Fraction, SbPath, Step};

/// A trace or Markov number: an exact integer, or an exact rational in Fricke mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Trace {
    Int(BigInt),
    Rat(BigRational),
}

impl Trace {
    pub fn int(n: impl Into<BigInt>) -> Self {
        Trace::Int(n.into())
    }

    pub fn to_rational(&self) -> BigRational {
        match self {
            Trace::Int(n) => BigRational::from_integer(n.clone()),
            Trace::Rat(r) => r.clone(),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Trace::Int(n) => Some(n),
            Trace::Rat(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Trace::Int(n) => n.is_zero(),
            Trace::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Trace::Int(n) => n.is_positive(),
            Trace::Rat(r) => r.is_positive(),
        }
    }

    /// Approximate number of decimal digits of the numerator.
    pub fn decimal_digits(&self) -> u64 {
        let bits = match self {
            Trace::Int(n) => n.bits(),
            Trace::Rat(r) => r.numer().bits().max(r.denom().bits()),
        };
        (bits as f64 * std::f64::consts::LOG10_2).ceil() as u64
    }

    fn binop(
        &self,
        o: &Trace,
        fi: impl Fn(&BigInt, &BigInt) -> BigInt,
        fr: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Trace {
        match (self, o) {
            (Trace::Int(a), Trace::Int(b)) => Trace::Int(fi(a, b)),
            _ => Trace::Rat(fr(&self.to_rational(), &o.to_rational())),
        }
    }

    pub fn scale(&self, k: i64) -> Trace {
        self * &Trace::int(k)
    }
}

impl Mul for &Trace {
    type Output = Trace;
    fn mul(self, o: &Trace) -> Trace {
        self.binop(o, |a, b| a * b, |a, b| a * b)
    }
}

impl Sub for &Trace {
    type Output = Trace;
    fn sub(self, o: &Trace) -> Trace {
        self.binop(o, |a, b| a - b, |a, b| a - b)
    }
}

impl std::ops::Add for &Trace {
    type Output = Trace;
    fn add(self, o: &Trace) -> Trace {
        self.binop(o, |a, b| a + b, |a, b| a + b)
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trace::Int(n) => write!(f, "{n}"),
            Trace::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Trace::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// Seed of a one-holed torus on `X^2 + Y^2 + Z^2 - XYZ = c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrickeSeed {
    tr_a: BigRational,
    tr_b: BigRational,
    tr_ab: BigRational,
    c: BigRational,
}

impl FrickeSeed {
    /// `(tr A, tr B, tr AB)`, the traces at `0/1`, `1/2` and `1/3`.
    pub fn new(tr_a: BigRational, tr_b: BigRational, tr_ab: BigRational) -> Result<Self> {
        if !(tr_a.is_positive() && tr_b.is_positive() && tr_ab.is_positive()) {
            return domain("Fricke seed entries must be positive (positive real component)");
        }
        let c = &tr_a * &tr_a + &tr_b * &tr_b + &tr_ab * &tr_ab - &tr_a * &tr_b * &tr_ab;
        if !c.is_negative() {
            return domain(format!("Fricke seed must satisfy c < 0, got c = {c}"));
        }
        Ok(FrickeSeed { tr_a, tr_b, tr_ab, c })
    }

    /// As [`FrickeSeed::new`], also requiring the seed to lie on the surface with the given `c`.
    pub fn with_c(tr_a: BigRational, tr_b: BigRational, tr_ab: BigRational, c: &BigRational) -> Result<Self> {
        let seed = FrickeSeed::new(tr_a, tr_b, tr_ab)?;
        if &seed.c != c {
            return domain(format!("seed triple is not on X^2+Y^2+Z^2-XYZ = {c} (its residual is {})", seed.c));
        }
        Ok(seed)
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }
}

/// Which surface the traces live on.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Surface {
    #[default]
    Classical,
    AFamily(u32),
    Fricke(Arc<FrickeSeed>),
}

impl Surface {
    pub fn a_family(a: u32) -> Result<Self> {
        if a == 0 {
            return domain("the a-family needs a >= 1");
        }
        Ok(Surface::AFamily(a))
    }

    pub fn fricke(seed: FrickeSeed) -> Self {
        Surface::Fricke(Arc::new(seed))
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, Surface::Classical)
    }

    /// Right-hand constant `X^2+Y^2+Z^2-XYZ` on traces: `0`, `4-4a^6`, or `c`.
    pub fn trace_constant(&self) -> Trace {
        match self {
            Surface::Classical => Trace::int(0),
            Surface::AFamily(a) => {
                let a = BigInt::from(*a);
                Trace::Int(BigInt::from(4) - BigInt::from(4) * num_traits::pow(a, 6))
            }
            Surface::Fricke(seed) => Trace::Rat(seed.c.clone()),
        }
    }

    /// Multiplier in the Vieta step on stored values: 3 classically, else 1.
    fn vieta_factor(&self) -> i64 {
        if self.is_classical() {
            3
        } else {
            1
        }
    }

    /// Stored values on the base triangle `(0/1, 1/1, 1/2)`.
    fn base_triangle(&self) -> [Trace; 3] {
        match self {
            Surface::Classical => [Trace::int(1), Trace::int(1), Trace::int(2)],
            Surface::AFamily(a) => {
                let a2 = BigInt::from(*a) * BigInt::from(*a);
                let x = Trace::Int(&a2 + 2);
                [x.clone(), x, Trace::Int(a2 * 4 + 2)]
            }
            Surface::Fricke(seed) => {
                let one = Trace::Rat(&seed.tr_a * &seed.tr_b - &seed.tr_ab);
                [Trace::Rat(seed.tr_a.clone()), one, Trace::Rat(seed.tr_b.clone())]
            }
        }
    }

    pub fn a(&self) -> Option<u32> {
        match self {
            Surface::AFamily(a) => Some(*a),
            _ => None,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Classical => f.write_str("classical"),
            Surface::AFamily(a) => write!(f, "a={a}"),
            Surface::Fricke(seed) => write!(f, "fricke c={}", seed.c),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    X,
    Y,
    Z,
}

/// A point `(X, Y, Z)` on one of the surfaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovTriple {
    pub x: Trace,
    pub y: Trace,
    pub z: Trace,
    pub surface: Surface,
}

impl MarkovTriple {
    pub fn new(x: Trace, y: Trace, z: Trace, surface: Surface) -> Self {
        MarkovTriple { x, y, z, surface }
    }

    pub fn entries(&self) -> [&Trace; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Traces; classical entries are multiplied by 3.
    pub fn traces(&self) -> [Trace; 3] {
        let k = self.surface.vieta_factor();
        [self.x.scale(k), self.y.scale(k), self.z.scale(k)]
    }

    /// Exactly zero on the surface: `x^2+y^2+z^2-3xyz` classically,
    /// `X^2+Y^2+Z^2-XYZ-(4-4a^6)` or `... - c` otherwise.
    pub fn residual(&self) -> Trace {
        let sq = &(&(&self.x * &self.x) + &(&self.y * &self.y)) + &(&self.z * &self.z);
        let prod = (&(&self.x * &self.y) * &self.z).scale(self.surface.vieta_factor());
        &(&sq - &prod) - &self.surface.trace_constant()
    }

    pub fn is_positive(&self) -> bool {
        self.entries().iter().all(|t| t.is_positive())
    }

    /// Replaces one coordinate by the other root of the quadratic in it.
    pub fn vieta_step(&self, slot: Slot) -> MarkovTriple {
        let k = self.surface.vieta_factor();
        let flip = |a: &Trace, b: &Trace, old: &Trace| &(a * b).scale(k) - old;
        let mut out = self.clone();
        match slot {
            Slot::X => out.x = flip(&self.y, &self.z, &self.x),
            Slot::Y => out.y = flip(&self.x, &self.z, &self.y),
            Slot::Z => out.z = flip(&self.x, &self.y, &self.z),
        }
        out
    }
}

impl fmt::Display for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Canonical root: `(1,1,1)` classically (traces `(3,3,3)`), `(a^2+2, a^2+2, 4a^2+2)`
/// for the `a`-family, and the triple on the base triangle for a Fricke seed.
pub fn root_triple(s: &Surface) -> Result<MarkovTriple> {
    let t = match s {
        Surface::Classical => [Trace::int(1), Trace::int(1), Trace::int(1)],
        _ => s.base_triangle(),
    };
    let [x, y, z] = t;
    Ok(MarkovTriple::new(x, y, z, s.clone()))
}

/// Node triple `(T(l), T(r), T(x))` of the tree root `1/3`.
fn root_node(s: &Surface) -> MarkovTriple {
    let [t0, t1, thalf] = s.base_triangle();
    let base = MarkovTriple::new(t0, t1, thalf, s.clone());
    let stepped = base.vieta_step(Slot::Y);
    MarkovTriple::new(stepped.x, stepped.z, stepped.y, s.clone())
}

/// Child of a node triple `(T(l), T(r), T(x))` along `step`.
pub fn child_node(node: &MarkovTriple, step: Step) -> MarkovTriple {
    match step {
        // (l, x, med(l, x)): replace T(r)
        Step::L => {
            let t = node.vieta_step(Slot::Y);
            MarkovTriple::new(t.x, t.z, t.y, node.surface.clone())
        }
        // (x, r, med(x, r)): replace T(l)
        Step::R => {
            let t = node.vieta_step(Slot::X);
            MarkovTriple::new(t.z, t.y, t.x, node.surface.clone())
        }
    }
}

/// Node triple at `x` in `(0, 1/2)`.
pub fn node_triple(x: Fraction, s: &Surface) -> Result<MarkovTriple> {
    let path = sb_encode(x)?;
    Ok(node_from_path(&path, s))
}

pub fn node_from_path(path: &SbPath, s: &Surface) -> MarkovTriple {
    path.steps().iter().fold(root_node(s), |node, &step| child_node(&node, step))
}

/// `m(p/q)` (classical, unscaled) or `X(p/q)` (`a`-family and Fricke, traces)
/// for `x` in `[0, 1/2]`.
pub fn markov_number(x: Fraction, s: &Surface) -> Result<Trace> {
    if !x.in_fundamental_domain() {
        return domain(format!("markov_number needs x in [0, 1/2], got {x}"));
    }
    let [t0, _, thalf] = s.base_triangle();
    if x == Fraction::ZERO {
        return Ok(t0);
    }
    if x == Fraction::HALF {
        return Ok(thalf);
    }
    Ok(node_triple(x, s)?.z)
}

/// Trace of the simple closed geodesic in class `x = p/q`, for any `x` including `1/0`.
///
/// Classically the value comes from the symmetry `m(1-x) = m(1/x) = m(x)`;
/// the other surfaces lack the `1/x` symmetry and are evaluated on the full
/// Farey tessellation outside `[0, 1/2]`.
pub fn trace_value(x: Fraction, s: &Surface) -> Result<Trace> {
    match s {
        Surface::Classical => {
            let (y, _) = reduce_to_fundamental(x);
            Ok(markov_number(y, s)?.scale(3))
        }
        _ if x.in_fundamental_domain() => markov_number(x, s),
        _ => Ok(topograph_trace(x, s)),
    }
}

/// Trace at `x` by walking the Farey tessellation from the triangle
/// `(0/1, 1/1, 1/0)`; valid on every surface.
pub fn topograph_trace(x: Fraction, s: &Surface) -> Trace {
    let k = s.vieta_factor();
    let [t0, t1, thalf] = s.base_triangle().map(|t| t.scale(k));
    let tinf = &(&t0 * &t1) - &thalf;
    if x == Fraction::ZERO {
        return t0;
    }
    if x.is_infinite() {
        return tinf;
    }
    let tneg1 = &(&t0 * &tinf) - &t1;
    // (p, q) pairs; (-1, 0) is the infinite vertex seen from the negative side
    let ((mut l, mut tl), (mut r, mut tr), mut to) = if x > Fraction::ZERO {
        (((0i64, 1i64), t0), ((1, 0), tinf), tneg1)
    } else {
        (((-1, 0), tinf), ((0, 1), t0), t1)
    };
    let (xp, xq) = (x.p() as i128, x.q() as i128);
    loop {
        let m = (l.0 + r.0, l.1 + r.1);
        let tm = &(&tl * &tr) - &to;
        if m.0 as i128 == xp && m.1 as i128 == xq {
            return tm;
        }
        if xp * (m.1 as i128) < (m.0 as i128) * xq {
            to = std::mem::replace(&mut tr, tm);
            r = m;
        } else {
            to = std::mem::replace(&mut tl, tm);
            l = m;
        }
    }
}

/// A node emitted by [`enumerate_tree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub fraction: Fraction,
    pub triple: MarkovTriple,
}

/// Visits the tree below `1/3` to `depth` (root has depth 0) in breadth-first,
/// left-to-right order, with parents `(l, r)` of each node.
pub fn walk_tree(s: &Surface, depth: usize, mut visit: impl FnMut(Fraction, &MarkovTriple)) {
    let mut level = vec![(Fraction::ZERO, Fraction::HALF, root_node(s))];
    for d in 0..=depth {
        let mut next = Vec::with_capacity(if d < depth { level.len() * 2 } else { 0 });
        for (l, r, node) in &level {
            let x = l.mediant(r);
            visit(x, node);
            if d < depth {
                next.push((*l, x, child_node(node, Step::L)));
                next.push((x, *r, child_node(node, Step::R)));
            }
        }
        level = next;
    }
}

/// Complete tree of Vieta children to `depth` with their Farey labels. Every
/// emitted triple is checked against its surface equation.
pub fn enumerate_tree(s: &Surface, depth: usize) -> Result<Vec<TreeNode>> {
    let mut out = Vec::new();
    let mut bad = None;
    walk_tree(s, depth, |fraction, triple| {
        if bad.is_none() && !triple.residual().is_zero() {
            bad = Some(fraction);
        }
        out.push(TreeNode { fraction, triple: triple.clone() });
    });
    if let Some(x) = bad {
        return Err(Error::Invariant(format!("surface residual nonzero at {x}")));
    }
    Ok(out)
}

#[derive(Serialize)]
struct TreeLine<'a> {
    fraction: String,
    triple: [String; 3],
    a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<&'a str>,
}

/// One JSON line `{"fraction":"p/q","triple":["..","..",".."],"a":1}`.
pub fn tree_json_line(node: &TreeNode) -> String {
    let c = match &node.triple.surface {
        Surface::Fricke(seed) => Some(seed.c.to_string()),
        _ => None,
    };
    let line = TreeLine {
        fraction: node.fraction.to_string(),
        triple: node.triple.entries().map(|t| t.to_string()),
        a: node.triple.surface.a(),
        c: c.as_deref(),
    };
    serde_json::to_string(&line).expect("tree line serialises")
}

/// Memo of node triples keyed by fraction (equivalently by Stern-Brocot path
/// prefix). Concurrent readers, exclusive insertion; results never depend on
/// whether the cache is used.
#[derive(Debug)]
pub struct TreeCache {
    surface: Surface,
    nodes: RwLock<HashMap<Fraction, MarkovTriple>>,
}

impl TreeCache {
    pub fn new(surface: Surface) -> Self {
        TreeCache { surface, nodes: RwLock::new(HashMap::new()) }
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    pub fn len(&self) -> usize {
        self.nodes.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn node(&self, x: Fraction) -> Result<MarkovTriple> {
        if let Some(t) = self.nodes.read().get(&x) {
            return Ok(t.clone());
        }
        let path = sb_encode(x)?;
        let (mut l, mut r) = (Fraction::ZERO, Fraction::HALF);
        let mut node = root_node(&self.surface);
        let mut at = l.mediant(&r);
        for &step in path.steps() {
            let cached = self.nodes.read().get(&at).cloned();
            if let Some(t) = cached {
                node = t;
            } else {
                self.nodes.write().entry(at).or_insert_with(|| node.clone());
            }
            match step {
                Step::L => r = at,
                Step::R => l = at,
            }
            node = child_node(&node, step);
            at = l.mediant(&r);
        }
        self.nodes.write().entry(at).or_insert_with(|| node.clone());
        Ok(node)
    }

    pub fn markov_number(&self, x: Fraction) -> Result<Trace> {
        if x == Fraction::ZERO || x == Fraction::HALF || !x.in_fundamental_domain() {
            return markov_number(x, &self.surface);
        }
        Ok(self.node(x)?.z)
    }
}

/// Parses `"X,Y,Z"` into exact rationals (decimals such as `2.5` allowed).
pub fn parse_rational_triple(s: &str) -> Result<[BigRational; 3]> {
    let parts: Vec<_> = s.split(',').map(parse_rational).collect::<Result<_>>()?;
    <[BigRational; 3]>::try_from(parts)
        .map_err(|_| Error::Parse(format!("expected three comma-separated values, got {s:?}")))
}

/// Parses an exact rational from `"n"`, `"n/d"`, or a decimal `"-12.375"` (optionally with exponent).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let ten = BigInt::from(10);
    let e = exp - frac.len() as i32;
    let mut r = if e >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, e as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-e) as usize))
    };
    if neg {
        r = -r;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn m(s: &str) -> BigInt {
        markov_number(f(s), &Surface::Classical).unwrap().as_int().unwrap().clone()
    }

    #[test]
    fn classical_values() {
        let table = [
            ("0/1", 1),
            ("1/2", 2),
            ("1/3", 5),
            ("1/4", 13),
            ("2/5", 29),
            ("1/5", 34),
            ("3/7", 169),
            ("2/7", 194),
            ("3/8", 433),
            ("1/6", 89),
            ("1/7", 233),
            ("1/8", 610),
            ("4/9", 985),
        ];
        for (x, want) in table {
            assert_eq!(m(x), BigInt::from(want), "m({x})");
        }
    }

    #[test]
    fn fibonacci_branch_oracle() {
        // (1, m, m') -> (1, m', 3m' - m) along 1/k
        let (mut a, mut b) = (BigInt::from(2), BigInt::from(5));
        for k in 3..40 {
            assert_eq!(m(&format!("1/{k}")), b);
            let next = &b * 3 - &a;
            a = b;
            b = next;
        }
    }

    #[test]
    fn vieta_examples() {
        let s = Surface::Classical;
        let t = MarkovTriple::new(Trace::int(1), Trace::int(1), Trace::int(1), s);
        assert_eq!(t.vieta_step(Slot::Z).z, Trace::int(2));

        let a1 = Surface::a_family(1).unwrap();
        let t = MarkovTriple::new(Trace::int(3), Trace::int(3), Trace::int(3), a1);
        assert_eq!(t.vieta_step(Slot::Z).z, Trace::int(6));

        let a2 = Surface::a_family(2).unwrap();
        let t = MarkovTriple::new(Trace::int(6), Trace::int(6), Trace::int(18), a2.clone());
        assert_eq!(t.vieta_step(Slot::Z).z, Trace::int(18));
        let t = MarkovTriple::new(Trace::int(6), Trace::int(18), Trace::int(6), a2.clone());
        let u = t.vieta_step(Slot::Z);
        assert_eq!(u.z, Trace::int(102));
        assert!(u.residual().is_zero());
        assert_eq!(u.vieta_step(Slot::Z), t);
    }

    #[test]
    fn root_examples() {
        let r = root_triple(&Surface::Classical).unwrap();
        assert_eq!(r.traces(), [Trace::int(3), Trace::int(3), Trace::int(3)]);
        assert!(r.residual().is_zero());
        let r = root_triple(&Surface::a_family(1).unwrap()).unwrap();
        assert_eq!(r.entries(), [&Trace::int(3), &Trace::int(3), &Trace::int(6)]);
        assert!(r.residual().is_zero());
        let a2 = Surface::a_family(2).unwrap();
        let r = root_triple(&a2).unwrap();
        assert_eq!(r.entries(), [&Trace::int(6), &Trace::int(6), &Trace::int(18)]);
        assert!(r.residual().is_zero());
        assert_eq!(a2.trace_constant(), Trace::int(-252));
        assert!(Surface::a_family(0).is_err());
    }

    #[test]
    fn a_family_values() {
        let a2 = Surface::a_family(2).unwrap();
        assert_eq!(markov_number(f("1/3"), &a2).unwrap(), Trace::int(102));
        assert_eq!(markov_number(f("0/1"), &a2).unwrap(), Trace::int(6));
        assert_eq!(markov_number(f("1/2"), &a2).unwrap(), Trace::int(18));
        for a in 1..=6u32 {
            let s = Surface::a_family(a).unwrap();
            let a2 = (a * a) as i64;
            assert_eq!(markov_number(f("1/3"), &s).unwrap(), Trace::int((a2 + 2) * (4 * a2 + 1)));
        }
    }

    #[test]
    fn a1_is_three_times_classical() {
        let classical = enumerate_tree(&Surface::Classical, 8).unwrap();
        let a1 = enumerate_tree(&Surface::a_family(1).unwrap(), 8).unwrap();
        assert_eq!(classical.len(), a1.len());
        for (c, a) in classical.iter().zip(&a1) {
            assert_eq!(c.fraction, a.fraction);
            assert_eq!(c.triple.traces(), [a.triple.x.clone(), a.triple.y.clone(), a.triple.z.clone()]);
        }
    }

    #[test]
    fn enumerate_examples() {
        let nodes = enumerate_tree(&Surface::Classical, 1).unwrap();
        let labels: Vec<String> = nodes.iter().map(|n| n.fraction.to_string()).collect();
        assert_eq!(labels, ["1/3", "1/4", "2/5"]);
        assert_eq!(nodes[0].triple.entries(), [&Trace::int(1), &Trace::int(2), &Trace::int(5)]);
        let a1 = enumerate_tree(&Surface::a_family(1).unwrap(), 0).unwrap();
        assert_eq!(a1.len(), 1);
        assert_eq!(a1[0].triple.entries(), [&Trace::int(3), &Trace::int(6), &Trace::int(15)]);
        assert_eq!(tree_json_line(&a1[0]), r#"{"fraction":"1/3","triple":["3","6","15"],"a":1}"#);
    }

    #[test]
    fn fricke_seed_depth_zero_is_seed() {
        let [x, y, z] = parse_rational_triple("6,18,102").unwrap();
        let seed = FrickeSeed::with_c(x, y, z, &parse_rational("-252").unwrap()).unwrap();
        let s = Surface::fricke(seed);
        let nodes = enumerate_tree(&s, 0).unwrap();
        assert_eq!(nodes[0].triple.to_string(), "(6, 18, 102)");
        // this seed is the a=2 torus
        let a2 = Surface::a_family(2).unwrap();
        let deep = enumerate_tree(&s, 5).unwrap();
        let want = enumerate_tree(&a2, 5).unwrap();
        for (u, v) in deep.iter().zip(&want) {
            assert_eq!(u.triple.z.to_rational(), v.triple.z.to_rational());
        }
        assert!(tree_json_line(&nodes[0]).ends_with(r#""a":null,"c":"-252"}"#));
    }

    #[test]
    fn fricke_real_seed_conserves_surface() {
        let [x, y, z] = parse_rational_triple("3,4,8.5").unwrap();
        let seed = FrickeSeed::new(x, y, z).unwrap();
        assert_eq!(seed.c().to_string(), "-19/4");
        let s = Surface::fricke(seed);
        for node in enumerate_tree(&s, 6).unwrap() {
            assert!(node.triple.residual().is_zero());
            assert!(node.triple.is_positive());
        }
        assert!(FrickeSeed::new(
            parse_rational("3").unwrap(),
            parse_rational("3").unwrap(),
            parse_rational("3").unwrap()
        )
        .is_err());
        let [x, y, z] = parse_rational_triple("3,4,8.5").unwrap();
        assert!(FrickeSeed::with_c(x, y, z, &parse_rational("-5").unwrap()).is_err());
    }

    #[test]
    fn topograph_agrees_with_symmetry_route() {
        for p in -25..=25 {
            for q in 0..=25 {
                let Ok(x) = Fraction::new(p, q) else { continue };
                let via_symmetry = trace_value(x, &Surface::Classical).unwrap();
                assert_eq!(topograph_trace(x, &Surface::Classical), via_symmetry, "{x}");
            }
        }
    }

    #[test]
    fn topograph_agrees_with_tree_in_fundamental_domain() {
        let a3 = Surface::a_family(3).unwrap();
        for node in enumerate_tree(&a3, 6).unwrap() {
            assert_eq!(topograph_trace(node.fraction, &a3), node.triple.z);
        }
        // T(1/0) = a^4 + 2 on the a-family
        assert_eq!(topograph_trace(Fraction::INFINITY, &a3), Trace::int(83));
        assert_eq!(trace_value(Fraction::ONE, &a3).unwrap(), Trace::int(11));
    }

    #[test]
    fn cache_matches_plain_walk_concurrently() {
        let cache = TreeCache::new(Surface::a_family(2).unwrap());
        let xs: Vec<Fraction> = (3..40)
            .flat_map(|q| {
                (1..q).filter_map(move |p| {
                    let x = Fraction::new(p, q).ok()?;
                    (x.q() == q && 2 * p < q).then_some(x)
                })
            })
            .collect();
        std::thread::scope(|scope| {
            for chunk in xs.chunks(50) {
                let cache = &cache;
                scope.spawn(move || {
                    for &x in chunk {
                        let got = cache.markov_number(x).unwrap();
                        assert_eq!(got, markov_number(x, cache.surface()).unwrap());
                    }
                });
            }
        });
        assert!(!cache.is_empty());
    }

    #[test]
    fn parse_numbers() {
        assert_eq!(parse_rational("2.5").unwrap().to_string(), "5/2");
        assert_eq!(parse_rational("-1.25e1").unwrap().to_string(), "-25/2");
        assert_eq!(parse_rational("7/14").unwrap().to_string(), "1/2");
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational_triple("1,2").is_err());
    }
}
