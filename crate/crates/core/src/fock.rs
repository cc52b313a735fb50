//! Fock's function, the stable norm, and its one-sided derivatives.
//!
//! With `T(p/q)` the trace of the simple closed geodesic in class `(p, q)`
//! (`3m` classically), the half length is `l = arcosh(T/2)`, the geodesic
//! has length `2l`, and `psi(p/q) = l / q`. The stable norm of a class
//! `n (p, q)` with `(p, q)` primitive is `2 n l(p/q)`, and `beta = |h|^2 / 2`.
//!
//! Everything real-valued is a certified [`HpReal`] enclosure.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::farey::Step;
use crate::farey::{approach_parent, reduce_to_fundamental, ContinuedFraction, Fraction, Side};
use crate::hpreal::{arcosh_of_ratio_bits, bits_for_target, Dyadic, HpReal, GUARD_BITS, MAX_PREC_BITS};
use crate::markov::{child_node, trace_value, MarkovTriple, Surface, Trace};

/// Accuracy target and size budget for real-valued outputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    bits: u64,
    digit_budget: u64,
}

impl Precision {
    pub const DEFAULT_TARGET: f64 = 1e-30;
    pub const DEFAULT_DIGIT_BUDGET: u64 = 200_000;

    /// Absolute error target such as `1e-30`.
    pub fn new(target_err: f64) -> Result<Self> {
        Ok(Precision { bits: bits_for_target(target_err)? - GUARD_BITS, digit_budget: Self::DEFAULT_DIGIT_BUDGET })
    }

    pub fn from_bits(bits: u64) -> Self {
        Precision { bits, digit_budget: Self::DEFAULT_DIGIT_BUDGET }
    }

    /// Maximum number of decimal digits of any trace that may be computed.
    pub fn with_digit_budget(mut self, digits: u64) -> Self {
        self.digit_budget = digits;
        self
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn digit_budget(&self) -> u64 {
        self.digit_budget
    }

    pub fn target_err(&self) -> f64 {
        (-(self.bits as f64)).exp2()
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::new(Self::DEFAULT_TARGET).expect("default target is positive")
    }
}

fn bit_len(v: u64) -> u64 {
    64 - v.leading_zeros() as u64
}

/// `arcosh(T/2)`, half the length of the geodesic with trace `T`.
pub fn half_length(t: &Trace, bits: u64) -> Result<HpReal> {
    let (n, d) = match t {
        Trace::Int(n) => (n.clone(), BigInt::from(2)),
        Trace::Rat(r) => (r.numer().clone(), r.denom() * 2),
    };
    if n < d {
        return domain(format!("trace {t} < 2 does not belong to a hyperbolic geodesic"));
    }
    arcosh_of_ratio_bits(&n, &d, bits)
}

/// Rough decimal size of `T(x)`, for budget checks before the trace is built.
fn estimated_digits(x: Fraction, s: &Surface) -> Option<f64> {
    let y = match s {
        Surface::Classical => reduce_to_fundamental(x).0,
        _ if x.in_fundamental_domain() => x,
        _ => return None,
    };
    // psi is convex on [0, 1/2], so its maximum sits at an endpoint
    let psi_max = [Fraction::ZERO, Fraction::HALF]
        .iter()
        .map(|&e| {
            let t = trace_value(e, s).ok()?.to_rational();
            let t = num_traits::ToPrimitive::to_f64(&t)?;
            Some((t / 2.0).max(1.0).acosh() / e.q() as f64)
        })
        .try_fold(0f64, |m, v| v.map(|v| m.max(v)))?;
    Some(y.q() as f64 * psi_max / std::f64::consts::LN_10 + 1.0)
}

fn budgeted_trace(x: Fraction, s: &Surface, prec: Precision) -> Result<Trace> {
    let over =
        |d: f64| Error::Precision(format!("T({x}) has about {d:.0} digits, over the budget of {}", prec.digit_budget));
    if let Some(d) = estimated_digits(x, s) {
        if d > prec.digit_budget as f64 * 1.05 + 10.0 {
            return Err(over(d));
        }
    }
    let t = trace_value(x, s)?;
    let d = t.decimal_digits();
    if d > prec.digit_budget {
        return Err(over(d as f64));
    }
    Ok(t)
}

/// `psi(x)` together with the data it came from.
#[derive(Clone, Debug)]
pub struct PsiValue {
    pub x: Fraction,
    pub trace: Trace,
    /// `arcosh(T/2)`.
    pub half_length: HpReal,
    pub psi: HpReal,
    pub surface: Surface,
}

/// `psi(p/q) = arcosh(T(p/q)/2) / q` for any finite rational.
pub fn psi(x: Fraction, s: &Surface, prec: Precision) -> Result<PsiValue> {
    if x.is_infinite() {
        return domain("psi is undefined at 1/0");
    }
    let trace = budgeted_trace(x, s, prec)?;
    let half_length = half_length(&trace, prec.bits)?;
    let psi = half_length.div_i64(x.q())?;
    if !psi.is_positive() {
        return Err(Error::Invariant(format!("psi({x}) is not positive")));
    }
    Ok(PsiValue { x, trace, half_length, psi, surface: s.clone() })
}

/// Length `2 arcosh(T/2)` of the simple closed geodesic in class `x` (including `1/0`).
pub fn geodesic_length(x: Fraction, s: &Surface, prec: Precision) -> Result<HpReal> {
    let t = budgeted_trace(x, s, prec)?;
    Ok(half_length(&t, prec.bits + 1)?.mul_int(2))
}

/// Length of the boundary geodesic: `0` for the punctured torus,
/// `2 arcosh(2a^6 - 1)` in the `a`-family, `2 arcosh((2 - c)/2)` for a Fricke seed.
pub fn hole_length(s: &Surface, prec: Precision) -> Result<HpReal> {
    match s {
        Surface::Classical => Ok(HpReal::from_i64(0, prec.bits)),
        Surface::AFamily(a) => {
            let a6 = num_traits::pow(BigInt::from(*a), 6);
            let v = arcosh_of_ratio_bits(&(a6 * 2 - 1), &BigInt::from(1), prec.bits + 1)?;
            Ok(v.mul_int(2))
        }
        Surface::Fricke(seed) => hole_length_from_c(seed.c(), prec),
    }
}

/// `2 arcosh((2 - c)/2)` for `c <= 0`.
pub fn hole_length_from_c(c: &BigRational, prec: Precision) -> Result<HpReal> {
    if c.is_positive() {
        return domain(format!("hole length needs c <= 0, got {c}"));
    }
    let v = BigRational::from_integer(2.into()) - c;
    let v = arcosh_of_ratio_bits(v.numer(), &(v.denom() * 2), prec.bits + 1)?;
    Ok(v.mul_int(2))
}

/// An integer class `(h1, h2)` in `H_1(T^2; Z)`, identified with the slope `h1/h2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass {
    h1: i64,
    h2: i64,
}

impl HomologyClass {
    pub fn new(h1: i64, h2: i64) -> Result<Self> {
        if h1 == 0 && h2 == 0 {
            return domain("the zero class has no norm direction");
        }
        Ok(HomologyClass { h1, h2 })
    }

    pub fn h1(&self) -> i64 {
        self.h1
    }

    pub fn h2(&self) -> i64 {
        self.h2
    }

    /// `n` in `h = n * h_hat` with `h_hat` primitive.
    pub fn multiplicity(&self) -> i64 {
        self.h1.gcd(&self.h2)
    }

    pub fn primitive(&self) -> HomologyClass {
        let n = self.multiplicity();
        HomologyClass { h1: self.h1 / n, h2: self.h2 / n }
    }

    pub fn is_primitive(&self) -> bool {
        self.multiplicity() == 1
    }

    /// The slope `h1/h2` (`1/0` for `(+-1, 0)`); `h` and `-h` share it.
    pub fn direction(&self) -> Fraction {
        Fraction::new(self.h1, self.h2).expect("nonzero class")
    }

    pub fn scale(&self, n: i64) -> Result<HomologyClass> {
        HomologyClass::new(self.h1 * n, self.h2 * n)
    }

    pub fn checked_add(&self, o: &HomologyClass) -> Option<HomologyClass> {
        HomologyClass::new(self.h1 + o.h1, self.h2 + o.h2).ok()
    }

    /// `h1 * o.h2 - h2 * o.h1`.
    pub fn det(&self, o: &HomologyClass) -> i64 {
        self.h1 * o.h2 - self.h2 * o.h1
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h1, self.h2)
    }
}

impl FromStr for HomologyClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("class {s:?}: expected \"p,q\""));
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t.split_once(',').ok_or_else(bad)?;
        HomologyClass::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
    }
}

/// `|n h_hat|_s = n * 2 arcosh(T(h_hat)/2)`.
pub fn stable_norm(h: HomologyClass, s: &Surface, prec: Precision) -> Result<HpReal> {
    let n = h.multiplicity();
    let unit = geodesic_length(h.direction(), s, Precision { bits: prec.bits + bit_len(n as u64) + 1, ..prec })?;
    Ok(unit.mul_int(n))
}

/// `beta(h) = |h|^2 / 2`.
pub fn beta(h: HomologyClass, s: &Surface, prec: Precision) -> Result<HpReal> {
    let norm = stable_norm(h, s, Precision { bits: prec.bits + 16, ..prec })?;
    norm.square().div_i64(2)
}

/// Norms of primitive classes in the given directions, evaluated in parallel.
pub fn unit_norms(dirs: &[Fraction], s: &Surface, prec: Precision) -> Result<HashMap<Fraction, HpReal>> {
    let mut dirs = dirs.to_vec();
    dirs.sort();
    dirs.dedup();
    let norms: Vec<HpReal> = dirs.par_iter().map(|&d| geodesic_length(d, s, prec)).collect::<Result<_>>()?;
    Ok(dirs.into_iter().zip(norms).collect())
}

/// A boundary point `h / |h|` of the unit ball.
#[derive(Clone, Debug)]
pub struct BallPoint {
    pub class: HomologyClass,
    pub x: HpReal,
    pub y: HpReal,
}

fn angle_key(h: &HomologyClass) -> u8 {
    if h.h2 > 0 || (h.h2 == 0 && h.h1 > 0) {
        0
    } else {
        1
    }
}

/// Counter-clockwise angular order starting from the positive `h1` axis.
pub fn angle_cmp(a: &HomologyClass, b: &HomologyClass) -> std::cmp::Ordering {
    angle_key(a).cmp(&angle_key(b)).then_with(|| 0.cmp(&a.det(b)))
}

/// Boundary points `h/|h|` for every primitive class with `max(|h1|, |h2|) <= max_q`,
/// in counter-clockwise order.
pub fn unit_ball(s: &Surface, max_q: i64, prec: Precision) -> Result<Vec<BallPoint>> {
    if max_q < 1 {
        return domain("unit_ball needs max_q >= 1");
    }
    let mut classes: Vec<HomologyClass> = (-max_q..=max_q)
        .flat_map(|p| (-max_q..=max_q).map(move |q| (p, q)))
        .filter(|&(p, q)| (p, q) != (0, 0) && p.gcd(&q) == 1)
        .map(|(p, q)| HomologyClass { h1: p, h2: q })
        .collect();
    classes.sort_by(angle_cmp);
    let dirs: Vec<Fraction> = classes.iter().map(|h| h.direction()).collect();
    let inner = Precision { bits: prec.bits + 8, ..prec };
    let norms = unit_norms(&dirs, s, inner)?;
    classes
        .par_iter()
        .map(|h| {
            let n = &norms[&h.direction()];
            Ok(BallPoint {
                class: *h,
                x: HpReal::from_i64(h.h1, inner.bits).div(n)?,
                y: HpReal::from_i64(h.h2, inner.bits).div(n)?,
            })
        })
        .collect()
}

/// One difference quotient in a [`SlopeSequence`].
#[derive(Clone, Debug)]
pub struct SlopePoint {
    pub depth: usize,
    pub approach: Fraction,
    pub slope: HpReal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlopeTarget {
    Rational(Fraction),
    Irrational(ContinuedFraction),
}

impl fmt::Display for SlopeTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeTarget::Rational(x) => write!(f, "{x}"),
            SlopeTarget::Irrational(cf) => write!(f, "[{cf}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeSide {
    Left,
    Right,
    TwoSided,
}

impl From<Side> for SlopeSide {
    fn from(s: Side) -> Self {
        match s {
            Side::Left => SlopeSide::Left,
            Side::Right => SlopeSide::Right,
        }
    }
}

impl fmt::Display for SlopeSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SlopeSide::Left => "left",
            SlopeSide::Right => "right",
            SlopeSide::TwoSided => "two-sided",
        })
    }
}

/// An enclosure `[lower, upper]` of a derivative.
#[derive(Clone, Debug)]
pub struct Bracket {
    pub depth: usize,
    pub lower: HpReal,
    pub upper: HpReal,
}

impl Bracket {
    pub fn width(&self) -> HpReal {
        &self.upper - &self.lower
    }
}

/// Difference quotients of `psi` approaching a target, and (for irrational
/// targets) the derivative brackets they imply.
#[derive(Clone, Debug)]
pub struct SlopeSequence {
    pub target: SlopeTarget,
    pub side: SlopeSide,
    pub points: Vec<SlopePoint>,
    pub brackets: Vec<Bracket>,
    /// Set when the digit budget cut the sequence short.
    pub truncated: bool,
}

/// Traces along `x_k = (a + k p)/(b + k q)`, `k = 0..=depth`, using
/// `T_{k+1} = T(x) T_k - T_{k-1}`.
fn approach_traces(parent: (i64, i64), x: Fraction, tx: &Trace, depth: usize, s: &Surface) -> Result<Vec<Trace>> {
    let x0 = Fraction::new(parent.0, parent.1)?;
    let x1 = Fraction::new(parent.0 + x.p(), parent.1 + x.q())?;
    let mut ts = vec![trace_value(x0, s)?, trace_value(x1, s)?];
    while ts.len() <= depth {
        let n = ts.len();
        let next = &(tx * &ts[n - 1]) - &ts[n - 2];
        ts.push(next);
    }
    ts.truncate(depth + 1);
    Ok(ts)
}

struct Approach {
    x: Fraction,
    sigma: i64,
    parent: (i64, i64),
    tx: Trace,
    /// `T(x_k)` for `k = 0..=depth`.
    traces: Vec<Trace>,
}

impl Approach {
    fn new(x: Fraction, side: Side, depth: usize, s: &Surface, prec: Precision) -> Result<Self> {
        if x.is_infinite() {
            return domain("one-sided slopes need a finite target");
        }
        if depth == 0 {
            return domain("depth must be at least 1");
        }
        let parent = approach_parent(x, side)?;
        let sigma = parent.0 * x.q() - parent.1 * x.p();
        debug_assert_eq!(sigma.abs(), 1);
        let last = Fraction::new(parent.0 + depth as i64 * x.p(), parent.1 + depth as i64 * x.q())?;
        if let Some(d) = estimated_digits(last, s) {
            if d > prec.digit_budget as f64 * 1.05 + 10.0 {
                return Err(Error::Precision(format!(
                    "T({last}) has about {d:.0} digits, over the budget of {}",
                    prec.digit_budget
                )));
            }
        }
        let tx = trace_value(x, s)?;
        let traces = approach_traces(parent, x, &tx, depth, s)?;
        Ok(Approach { x, sigma, parent, tx, traces })
    }

    fn fraction(&self, k: usize) -> Fraction {
        let k = k as i64;
        Fraction::new(self.parent.0 + k * self.x.p(), self.parent.1 + k * self.x.q()).expect("approach fraction")
    }

    fn denom(&self, k: usize) -> i64 {
        self.parent.1 + k as i64 * self.x.q()
    }

    /// `sigma (q l_k - q_k l_x)`, the quotient `(psi(x_k) - psi(x)) / (x_k - x)`.
    fn slopes(&self, bits: u64) -> Result<Vec<HpReal>> {
        let depth = self.traces.len() - 1;
        let work = bits + bit_len(self.denom(depth).unsigned_abs()) + 4;
        let lx = half_length(&self.tx, work)?;
        (1..=depth)
            .into_par_iter()
            .map(|k| {
                let lk = half_length(&self.traces[k], work)?;
                let v = &lk.mul_int(self.x.q()) - &lx.mul_int(self.denom(k));
                Ok(v.mul_int(self.sigma))
            })
            .collect()
    }
}

/// Difference quotients `(psi(x_k) - psi(x)) / (x_k - x)` along the Farey
/// neighbours `x_k` of `x` on `side`, `k = 1..=depth`.
///
/// By convexity the left quotients increase and the right ones decrease;
/// each consecutive pair is separated with certified intervals (raising the
/// precision as needed) and a violation is an [`Error::Invariant`].
pub fn one_sided_slopes(x: Fraction, side: Side, depth: usize, s: &Surface, prec: Precision) -> Result<SlopeSequence> {
    let ap = Approach::new(x, side, depth, s, prec)?;
    let slopes = certified_monotone(&ap, side, prec)?;
    Ok(SlopeSequence {
        target: SlopeTarget::Rational(x),
        side: side.into(),
        points: slopes
            .into_iter()
            .enumerate()
            .map(|(i, slope)| SlopePoint { depth: i + 1, approach: ap.fraction(i + 1), slope })
            .collect(),
        brackets: Vec::new(),
        truncated: false,
    })
}

fn certified_monotone(ap: &Approach, side: Side, prec: Precision) -> Result<Vec<HpReal>> {
    use crate::hpreal::Cmp;
    let want = match side {
        Side::Left => Cmp::Less,
        Side::Right => Cmp::Greater,
    };
    let mut bits = prec.bits;
    loop {
        let slopes = ap.slopes(bits)?;
        let mut overlap = false;
        for (k, w) in slopes.windows(2).enumerate() {
            match w[0].compare(&w[1]) {
                c if c == want => {}
                Cmp::Overlapping => overlap = true,
                _ => {
                    return Err(Error::Invariant(format!(
                        "{side} slopes at {} are not monotone at depth {}",
                        ap.x,
                        k + 2
                    )))
                }
            }
        }
        if !overlap {
            return Ok(slopes);
        }
        if bits >= MAX_PREC_BITS {
            return Err(Error::Precision(format!("could not separate the {side} slopes at {}", ap.x)));
        }
        bits = (bits * 2).min(MAX_PREC_BITS);
    }
}

/// Rigorous distance bounds `|slope_k - D|` for `k = 1..=depth`, or `None`
/// where the bound does not apply yet.
///
/// Along the approach, `T_k = alpha lambda^k + beta lambda^-k` with
/// `lambda + 1/lambda = T(x)`, so `ln T_k = ln alpha + k ln lambda + ln(1 + rho_k)`,
/// `rho_k = (beta/alpha) lambda^-2k`, and `0 <= ln T - arcosh(T/2) <= 2/(T^2 - 2)`.
/// The `k ln lambda` terms cancel in the quotient, leaving
/// `|slope_k - D| <= q (2/(T_k^2 - 2) + |rho_k|/(1 - |rho_k|))`.
fn tail_bounds(ap: &Approach, bits: u64) -> Result<Vec<Option<HpReal>>> {
    let work = bits + 16;
    let hp = |t: &Trace| HpReal::from_rational(&t.to_rational(), work);
    let t = hp(&ap.tx);
    let two = HpReal::from_i64(2, work);
    let disc = &t.square() - &HpReal::from_i64(4, work);
    if !disc.is_positive() {
        return domain(format!("T({}) must exceed 2 for a corner estimate", ap.x));
    }
    let lambda = (&t + &disc.sqrt()?).div_i64(2)?;
    let inv = &t - &lambda;
    let spread = &lambda - &inv;
    let (t0, t1) = (hp(&ap.traces[0]), hp(&ap.traces[1]));
    let alpha = (&t1 - &(&t0 * &inv)).div(&spread)?;
    let beta = (&(&t0 * &lambda) - &t1).div(&spread)?;
    if !alpha.is_positive() {
        return Err(Error::Precision(format!("could not certify the growth constant at {}", ap.x)));
    }
    let ratio = beta.div(&alpha)?;
    let inv2 = inv.square();
    let one = HpReal::from_i64(1, work);
    let mut decay = one.clone();
    let q = ap.x.q();
    let mut out = Vec::with_capacity(ap.traces.len() - 1);
    for tk in &ap.traces[1..] {
        decay = &decay * &inv2;
        let rho = (&ratio * &decay).abs();
        if rho.hi() >= one.lo() {
            out.push(None);
            continue;
        }
        let tk = hp(tk);
        let log_err = rho.div(&(&one - &rho))?;
        let arc_err = two.div(&(&tk.square() - &two))?;
        let e = (&log_err + &arc_err).mul_int(q);
        out.push(Some(HpReal::exact(e.hi().clone(), work)));
    }
    Ok(out)
}

/// Bounds on the jump `D+psi(x) - D-psi(x)` of the derivative at a rational.
#[derive(Clone, Debug)]
pub struct CornerGap {
    pub x: Fraction,
    pub depth: usize,
    pub left: SlopeSequence,
    pub right: SlopeSequence,
    /// Certified lower bound on the gap after each depth (running maximum;
    /// `None` while the tail estimate is not yet valid).
    pub lower_by_depth: Vec<Option<HpReal>>,
    /// Best certified lower bound (`-inf` is reported as `None`).
    pub lower: Option<HpReal>,
    /// `R_depth - L_depth`, an upper bound by convexity.
    pub upper: HpReal,
    /// Enclosures of the one-sided derivatives, when available.
    pub d_minus: Option<HpReal>,
    pub d_plus: Option<HpReal>,
    /// The lower bound is certified to be `> 0`.
    pub certified_positive: bool,
}

/// Certified bounds on the corner of `psi` at `x`, from `depth` Farey
/// neighbours on each side.
///
/// Convexity alone gives the upper bound `R_k - L_k`. The lower bound uses
/// the tail estimate of the two quotient sequences: `D+ >= R_k - E_k^R`,
/// `D- <= L_k + E_k^L`.
pub fn corner_gap(x: Fraction, depth: usize, s: &Surface, prec: Precision) -> Result<CornerGap> {
    let left_ap = Approach::new(x, Side::Left, depth, s, prec)?;
    let right_ap = Approach::new(x, Side::Right, depth, s, prec)?;
    let left = certified_monotone(&left_ap, Side::Left, prec)?;
    let right = certified_monotone(&right_ap, Side::Right, prec)?;
    let el = tail_bounds(&left_ap, prec.bits)?;
    let er = tail_bounds(&right_ap, prec.bits)?;

    let mut lower_by_depth = Vec::with_capacity(depth);
    let mut best: Option<HpReal> = None;
    let (mut d_minus, mut d_plus) = (None, None);
    for k in 0..depth {
        if let (Some(a), Some(b)) = (&el[k], &er[k]) {
            let dm = HpReal::from_bounds(left[k].lo().clone(), (&left[k] + a).hi().clone(), prec.bits);
            let dp = HpReal::from_bounds((&right[k] - b).lo().clone(), right[k].hi().clone(), prec.bits);
            let bound = &dp - &dm;
            let bound = HpReal::exact(bound.lo().clone(), prec.bits);
            best = Some(match best {
                Some(prev) if prev.lo() >= bound.lo() => prev,
                _ => bound,
            });
            d_minus = Some(narrower(d_minus, dm));
            d_plus = Some(narrower(d_plus, dp));
        }
        lower_by_depth.push(best.clone());
    }
    let upper = &right[depth - 1] - &left[depth - 1];
    let upper = HpReal::exact(upper.hi().clone(), prec.bits);
    let certified_positive = best.as_ref().is_some_and(|b| b.is_positive());
    let seq = |ap: &Approach, side: Side, slopes: Vec<HpReal>| SlopeSequence {
        target: SlopeTarget::Rational(x),
        side: side.into(),
        points: slopes
            .into_iter()
            .enumerate()
            .map(|(i, slope)| SlopePoint { depth: i + 1, approach: ap.fraction(i + 1), slope })
            .collect(),
        brackets: Vec::new(),
        truncated: false,
    };
    Ok(CornerGap {
        x,
        depth,
        left: seq(&left_ap, Side::Left, left),
        right: seq(&right_ap, Side::Right, right),
        lower_by_depth,
        lower: best,
        upper,
        d_minus,
        d_plus,
        certified_positive,
    })
}

// Intersection of two enclosures of the same number.
fn narrower(prev: Option<HpReal>, next: HpReal) -> HpReal {
    match prev {
        None => next,
        Some(p) => {
            let lo = p.lo().clone().max(next.lo().clone());
            let hi = p.hi().clone().min(next.hi().clone());
            if lo <= hi {
                HpReal::from_bounds(lo, hi, next.prec())
            } else {
                next
            }
        }
    }
}

/// Secant slope of `psi` between `u` and `v`:
/// `(q_u l_v - q_v l_u) / (p_v q_u - p_u q_v)`.
fn secant(u: (Fraction, &HpReal), v: (Fraction, &HpReal)) -> Result<HpReal> {
    let (fu, lu) = u;
    let (fv, lv) = v;
    let num = &lv.mul_int(fu.q()) - &lu.mul_int(fv.q());
    num.div_i64(fv.p() * fu.q() - fu.p() * fv.q())
}

/// Derivative brackets of `psi` at the quadratic irrational `cf`.
///
/// Even convergents lie left of `x`, odd ones right. At depth `d` the
/// point is the secant through `c_{d-2}` and `c_d` (both on one side of
/// `x`); convexity puts every left secant below `psi'(x)` and every right
/// secant above it, so the latest of each form a bracket. Convergents whose
/// traces would exceed the digit budget are dropped and `truncated` is set.
pub fn irrational_slope_bracket(
    cf: &ContinuedFraction,
    depth: usize,
    s: &Surface,
    prec: Precision,
) -> Result<SlopeSequence> {
    if cf.is_finite() {
        let v = cf.value().expect("finite expansion has a value");
        return domain(format!("rational target {v}: use `corner` for rationals"));
    }
    if depth < 3 {
        return domain("irrational brackets need depth >= 3");
    }
    let mut conv = cf.convergents_from_zero(depth);
    let mut truncated = conv.len() < depth + 1;
    if let Some(cut) = conv.iter().position(|&c| estimated_digits(c, s).is_some_and(|d| d > prec.digit_budget as f64)) {
        conv.truncate(cut);
        truncated = true;
    }
    let traces: Vec<Trace> = conv.par_iter().map(|&c| budgeted_trace(c, s, prec)).collect::<Result<_>>()?;
    let qmax = conv.last().map_or(1, |c| c.q());
    // widths fall roughly like 1/T, so the precision must follow the traces
    let tbits = traces.iter().map(|t| t.decimal_digits()).max().unwrap_or(0) as f64 / std::f64::consts::LOG10_2;
    let mut work = prec.bits + 2 * bit_len(qmax as u64) + 8 + 2 * tbits as u64;
    loop {
        let (points, brackets) = brackets_at(&conv, &traces, work)?;
        match check_brackets(&brackets) {
            Ok(true) => {
                return Ok(SlopeSequence {
                    target: SlopeTarget::Irrational(cf.clone()),
                    side: SlopeSide::TwoSided,
                    points,
                    brackets,
                    truncated,
                })
            }
            Ok(false) if work < MAX_PREC_BITS => work = (work * 2).min(MAX_PREC_BITS),
            Ok(false) => return Err(Error::Precision(format!("brackets at [{cf}] stayed unresolved"))),
            Err(e) => return Err(e),
        }
    }
}

fn brackets_at(conv: &[Fraction], traces: &[Trace], work: u64) -> Result<(Vec<SlopePoint>, Vec<Bracket>)> {
    let lengths: Vec<HpReal> = traces.par_iter().map(|t| half_length(t, work)).collect::<Result<_>>()?;
    let mut points = Vec::new();
    let mut brackets = Vec::new();
    let (mut lower, mut upper): (Option<HpReal>, Option<HpReal>) = (None, None);
    for d in 2..conv.len() {
        let slope = secant((conv[d - 2], &lengths[d - 2]), (conv[d], &lengths[d]))?;
        if d % 2 == 0 {
            lower = Some(slope.clone());
        } else {
            upper = Some(slope.clone());
        }
        points.push(SlopePoint { depth: d, approach: conv[d], slope });
        if let (Some(lo), Some(hi)) = (&lower, &upper) {
            brackets.push(Bracket { depth: d, lower: lo.clone(), upper: hi.clone() });
        }
    }
    Ok((points, brackets))
}

// Ok(true): widths certified positive and strictly shrinking; Ok(false): undecided.
fn check_brackets(brackets: &[Bracket]) -> Result<bool> {
    use crate::hpreal::Cmp;
    let widths: Vec<HpReal> = brackets.iter().map(|b| b.width()).collect();
    let mut decided = true;
    for (b, w) in brackets.iter().zip(&widths) {
        if w.hi().signum() < 0 {
            return Err(Error::Invariant(format!("bracket at depth {} is inverted", b.depth)));
        }
        decided &= w.is_positive();
    }
    for (pair, b) in widths.windows(2).zip(&brackets[1..]) {
        match pair[1].compare(&pair[0]) {
            Cmp::Less => {}
            Cmp::Overlapping => decided = false,
            Cmp::Greater => return Err(Error::Invariant(format!("bracket widened at depth {}", b.depth))),
        }
    }
    Ok(decided)
}

/// Chord margin `D(r,m) l(l) + D(m,l) l(r) - D(r,l) l(m)` with `D(u,v) = p_u q_v - p_v q_u`.
///
/// For `l < m < r` this is `q_l q_m q_r (r - l)` times
/// `lambda psi(l) + (1 - lambda) psi(r) - psi(m)`, `lambda = (r - m)/(r - l)`,
/// so convexity of `psi` is the statement that it is positive.
pub fn chord_margin(l: Fraction, m: Fraction, r: Fraction, s: &Surface, prec: Precision) -> Result<HpReal> {
    if !(l < m && m < r) || l.is_infinite() || r.is_infinite() {
        return domain(format!("chord needs l < m < r, got {l}, {m}, {r}"));
    }
    let ts = [trace_value(l, s)?, trace_value(m, s)?, trace_value(r, s)?];
    margin_from_traces([l, m, r], &ts, prec.bits)
}

fn det(u: Fraction, v: Fraction) -> i64 {
    u.p() * v.q() - v.p() * u.q()
}

fn margin_at(fs: [Fraction; 3], ts: &[Trace; 3], bits: u64) -> Result<HpReal> {
    let [l, m, r] = fs;
    let ls: Vec<HpReal> = ts.iter().map(|t| half_length(t, bits + 4)).collect::<Result<_>>()?;
    let v = &(&ls[0].mul_int(det(r, m)) + &ls[2].mul_int(det(m, l))) - &ls[1].mul_int(det(r, l));
    Ok(v)
}

/// Sign-certified margin, raising precision until the enclosure excludes zero.
fn margin_from_traces(fs: [Fraction; 3], ts: &[Trace; 3], bits: u64) -> Result<HpReal> {
    // for a mediant the margin is about T_o / (T_l T_r); start near that scale
    let size = |t: &Trace| match t {
        Trace::Int(n) => n.bits(),
        Trace::Rat(r) => r.numer().bits().saturating_sub(r.denom().bits()),
    };
    let mut work = bits.max(size(&ts[0]) + size(&ts[2]) + 16);
    loop {
        let v = margin_at(fs, ts, work)?;
        if !v.contains_zero() {
            return Ok(v);
        }
        if work >= MAX_PREC_BITS {
            return Err(Error::Precision(format!("chord margin at {} stayed unresolved", fs[1])));
        }
        work = (work * 2).min(MAX_PREC_BITS);
    }
}

/// A Farey triple `(l, m, r)` with `m` the mediant of `l` and `r`.
#[derive(Clone, Debug)]
pub struct FareyTriple {
    pub l: Fraction,
    pub m: Fraction,
    pub r: Fraction,
    pub traces: [Trace; 3],
}

/// Every Farey triple of the `[0, 1/2]` tree whose mediant has denominator `<= max_q`,
/// with its exact traces.
pub fn farey_triples(s: &Surface, max_q: i64) -> Vec<FareyTriple> {
    let k = if s.is_classical() { 3 } else { 1 };
    let root = crate::markov::node_from_path(&crate::farey::SbPath(Vec::new()), s);
    let mut out = Vec::new();
    let mut stack: Vec<(Fraction, Fraction, MarkovTriple)> = vec![(Fraction::ZERO, Fraction::HALF, root)];
    while let Some((l, r, node)) = stack.pop() {
        let m = l.mediant(&r);
        if m.q() > max_q {
            continue;
        }
        out.push(FareyTriple { l, m, r, traces: [node.x.scale(k), node.z.scale(k), node.y.scale(k)] });
        stack.push((m, r, child_node(&node, Step::R)));
        stack.push((l, m, child_node(&node, Step::L)));
    }
    out.sort_by_key(|t| (t.m.q(), t.m.p()));
    out
}

/// Outcome of a convexity sweep.
#[derive(Clone, Debug)]
pub struct ConvexityReport {
    pub triples: usize,
    /// Smallest certified margin and where it occurred.
    pub min_margin: HpReal,
    pub at: Fraction,
}

/// Certifies the strict chord inequality on every Farey triple with mediant
/// denominator `<= max_q`.
pub fn convexity_sweep(s: &Surface, max_q: i64, prec: Precision) -> Result<ConvexityReport> {
    let triples = farey_triples(s, max_q);
    let margins: Vec<(Fraction, HpReal)> = triples
        .par_iter()
        .map(|t| {
            let v = margin_from_traces([t.l, t.m, t.r], &t.traces, prec.bits)?;
            if !v.is_positive() {
                return Err(Error::Invariant(format!("chord inequality fails at {} < {} < {}", t.l, t.m, t.r)));
            }
            Ok((t.m, v))
        })
        .collect::<Result<_>>()?;
    let (at, min_margin) = margins
        .into_iter()
        .min_by(|a, b| a.1.lo().cmp(b.1.lo()))
        .ok_or_else(|| Error::Domain(format!("no Farey triples with q <= {max_q}")))?;
    Ok(ConvexityReport { triples: triples.len(), min_margin, at })
}

/// `2^-bits` as an exact interval, for tolerance comparisons.
pub fn tolerance(bits: u64) -> HpReal {
    HpReal::exact(Dyadic::new(BigInt::from(1), -(bits as i64)), bits)
}

/// `|a - b| <= tol + combined radii`, certified.
pub fn agree_within(a: &HpReal, b: &HpReal, tol: f64) -> bool {
    let d = (a - b).abs();
    d.hi().to_f64() <= tol + a.err_f64() + b.err_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn close(x: &HpReal, want: f64, tol: f64) {
        assert!((x.to_f64() - want).abs() < tol, "{x} vs {want}");
    }

    #[test]
    fn psi_examples() {
        let p = Precision::default();
        let c = Surface::Classical;
        close(&psi(f("0/1"), &c, p).unwrap().psi, 0.962_423_650_119_206_9, 1e-15);
        close(&psi(f("1/2"), &c, p).unwrap().psi, 0.881_373_587_019_543, 1e-15);
        let a2 = Surface::a_family(2).unwrap();
        let v = psi(f("1/3"), &a2, p).unwrap();
        assert_eq!(v.trace, Trace::int(102));
        close(&v.psi, 1.541_625_560_848_501_7, 1e-15);
        assert!(v.psi.err_f64() <= 1e-30);
        // symmetry m(1-x) = m(1/x) = m(x)
        let a = psi(f("2/3"), &c, p).unwrap();
        let b = psi(f("1/3"), &c, p).unwrap();
        assert!(agree_within(&a.half_length, &b.half_length, 0.0));
        assert!(psi(Fraction::INFINITY, &c, p).is_err());
    }

    #[test]
    fn lengths() {
        let p = Precision::default();
        let c = Surface::Classical;
        close(&geodesic_length(f("0/1"), &c, p).unwrap(), 1.924_847_300_238_413_8, 1e-15);
        close(&geodesic_length(f("1/3"), &c, p).unwrap(), 5.407_151_661_862_805, 1e-14);
        assert!(hole_length(&Surface::a_family(1).unwrap(), p).unwrap().is_exact());
        for a in 1..=6u32 {
            let s = Surface::a_family(a).unwrap();
            let c = BigRational::from_integer(BigInt::from(4) - BigInt::from(4) * num_traits::pow(BigInt::from(a), 6));
            let h = hole_length(&s, p).unwrap();
            let k = hole_length_from_c(&c, p).unwrap();
            assert!(agree_within(&h, &k, 1e-25));
        }
    }

    #[test]
    fn norm_examples() {
        let p = Precision::default();
        let c = Surface::Classical;
        let n01 = stable_norm(HomologyClass::new(0, 1).unwrap(), &c, p).unwrap();
        close(&n01, 1.924_847_300_238_413_8, 1e-15);
        let n10 = stable_norm(HomologyClass::new(1, 0).unwrap(), &c, p).unwrap();
        assert!(agree_within(&n01, &n10, 0.0));
        let n24 = stable_norm(HomologyClass::new(2, 4).unwrap(), &c, p).unwrap();
        close(&n24, 7.050_988_696_156_344, 1e-14);
        let neg = stable_norm(HomologyClass::new(-2, -4).unwrap(), &c, p).unwrap();
        assert!(agree_within(&n24, &neg, 0.0));
        close(&beta(HomologyClass::new(0, 1).unwrap(), &c, p).unwrap(), 1.852_518_564_617_555, 1e-14);
        close(&beta(HomologyClass::new(1, 2).unwrap(), &c, p).unwrap(), 6.214_555_199_165_568, 1e-13);
        assert!(HomologyClass::new(0, 0).is_err());
        assert_eq!("3,-4".parse::<HomologyClass>().unwrap(), HomologyClass::new(3, -4).unwrap());
    }

    #[test]
    fn a_family_norm_is_not_symmetric_in_swap() {
        let p = Precision::default();
        let a3 = Surface::a_family(3).unwrap();
        let n01 = stable_norm(HomologyClass::new(0, 1).unwrap(), &a3, p).unwrap();
        let n10 = stable_norm(HomologyClass::new(1, 0).unwrap(), &a3, p).unwrap();
        // T(0/1) = 11, T(1/0) = 83
        assert_eq!(n01.compare(&n10), crate::hpreal::Cmp::Less);
    }

    #[test]
    fn slopes_at_half() {
        let p = Precision::default();
        let c = Surface::Classical;
        let left = one_sided_slopes(f("1/2"), Side::Left, 3, &c, p).unwrap();
        let got: Vec<String> = left.points.iter().map(|pt| pt.approach.to_string()).collect();
        assert_eq!(got, ["1/3", "2/5", "3/7"]);
        // oracle: 2 sigma (q l_k - q_k l_x), l = arcosh(T/2), T = 3m
        let lx = (9f64).sqrt().acosh();
        for (pt, m) in left.points.iter().zip([5.0f64, 29.0, 169.0]) {
            let want = -(2.0 * (1.5 * m).acosh() - pt.approach.q() as f64 * lx);
            close(&pt.slope, want, 1e-12);
        }
        close(&left.points[0].slope, -0.118_910, 1e-6);
        close(&left.points[1].slope, -0.117_816, 1e-6);
        let right = one_sided_slopes(f("1/2"), Side::Right, 3, &c, p).unwrap();
        for (l, r) in left.points.iter().zip(&right.points) {
            assert!(agree_within(&l.slope, &-&r.slope, 0.0));
        }
        let zero = one_sided_slopes(f("0/1"), Side::Right, 3, &c, p).unwrap();
        let got: Vec<String> = zero.points.iter().map(|pt| pt.approach.to_string()).collect();
        assert_eq!(got, ["1/3", "1/4", "1/5"]);
    }

    #[test]
    fn recurrence_traces_match_tree() {
        for s in [Surface::Classical, Surface::a_family(2).unwrap()] {
            for (x, side) in [("2/5", Side::Left), ("2/5", Side::Right), ("1/3", Side::Left), ("3/8", Side::Right)] {
                let ap = Approach::new(f(x), side, 6, &s, Precision::default()).unwrap();
                for k in 0..=6 {
                    assert_eq!(ap.traces[k], trace_value(ap.fraction(k), &s).unwrap());
                }
            }
        }
    }

    #[test]
    fn corner_at_half() {
        let g = corner_gap(f("1/2"), 8, &Surface::Classical, Precision::default()).unwrap();
        assert!(g.certified_positive);
        let lo = g.lower.as_ref().unwrap();
        close(lo, 0.235_566, 1e-5);
        assert!(lo.lo() <= g.upper.hi());
        // running maximum never decreases
        let bounds: Vec<&HpReal> = g.lower_by_depth.iter().flatten().collect();
        assert!(bounds.windows(2).all(|w| w[0].lo() <= w[1].lo()));
        // symmetry: D- = -D+
        let (dm, dp) = (g.d_minus.unwrap(), g.d_plus.unwrap());
        assert!((&dm + &dp).contains_zero() || agree_within(&dm, &-&dp, 1e-12));
        close(&dm, -0.117_783, 1e-5);
    }

    #[test]
    fn corner_closed_form_oracle() {
        // D = sigma (q ln alpha - b ln lambda), an independent route to the limit
        for (x, side) in [("1/3", Side::Left), ("1/3", Side::Right), ("2/5", Side::Right)] {
            let x = f(x);
            let ap = Approach::new(x, side, 4, &Surface::Classical, Precision::default()).unwrap();
            let t = ap.tx.to_rational();
            let t = num_traits::ToPrimitive::to_f64(&t).unwrap();
            let lam = (t + (t * t - 4.0).sqrt()) / 2.0;
            let inv = 1.0 / lam;
            let t0 = num_traits::ToPrimitive::to_f64(&ap.traces[0].to_rational()).unwrap();
            let t1 = num_traits::ToPrimitive::to_f64(&ap.traces[1].to_rational()).unwrap();
            let alpha = (t1 - t0 * inv) / (lam - inv);
            let d = ap.sigma as f64 * (x.q() as f64 * alpha.ln() - ap.parent.1 as f64 * lam.ln());
            let g = corner_gap(x, 10, &Surface::Classical, Precision::default()).unwrap();
            let enc = if side == Side::Left { g.d_minus.unwrap() } else { g.d_plus.unwrap() };
            assert!(enc.lo().to_f64() - 1e-12 <= d && d <= enc.hi().to_f64() + 1e-12, "{x} {side}: {d} vs {enc}");
        }
    }

    #[test]
    fn irrational_brackets() {
        let p = Precision::default();
        let cf: ContinuedFraction = "0;2,(1)".parse().unwrap();
        let seq = irrational_slope_bracket(&cf, 12, &Surface::Classical, p).unwrap();
        assert!(!seq.truncated);
        let widths: Vec<HpReal> = seq.brackets.iter().map(|b| b.width()).collect();
        for w in widths.windows(2) {
            assert_eq!(w[1].compare(&w[0]), crate::hpreal::Cmp::Less);
        }
        assert!(widths.iter().all(|w| w.is_positive()));
        let rational: ContinuedFraction = "0;3".parse().unwrap();
        assert!(irrational_slope_bracket(&rational, 8, &Surface::Classical, p).is_err());
        let tight = p.with_digit_budget(30);
        let cut = irrational_slope_bracket(&cf, 60, &Surface::Classical, tight).unwrap();
        assert!(cut.truncated);
    }

    #[test]
    fn chord_margins() {
        let p = Precision::default();
        let c = Surface::Classical;
        let v = chord_margin(f("0/1"), f("1/3"), f("1/2"), &c, p).unwrap();
        assert!(v.is_positive());
        // non-adjacent triple uses the general weights
        let v = chord_margin(f("0/1"), f("1/4"), f("1/2"), &c, p).unwrap();
        assert!(v.is_positive());
        let r = convexity_sweep(&c, 40, p).unwrap();
        assert!(r.min_margin.is_positive());
        assert_eq!(r.triples, farey_triples(&c, 40).len());
    }

    #[test]
    fn unit_ball_small() {
        let p = Precision::default();
        let pts = unit_ball(&Surface::Classical, 1, p).unwrap();
        let classes: Vec<String> = pts.iter().map(|b| b.class.to_string()).collect();
        assert_eq!(classes, ["(1,0)", "(1,1)", "(0,1)", "(-1,1)", "(-1,0)", "(-1,-1)", "(0,-1)", "(1,-1)"]);
        let l = 2.0 * 1.5f64.acosh();
        close(&pts[0].x, 1.0 / l, 1e-15);
        close(&pts[2].y, 1.0 / l, 1e-15);
        assert_eq!(unit_ball(&Surface::Classical, 2, p).unwrap().len(), 16);
    }
}
