//! Certified real arithmetic on dyadic intervals.
//!
//! An [`HpReal`] is a closed interval `[lo, hi]` whose endpoints are exact
//! dyadic numbers `m * 2^e`. Every operation rounds its endpoints outward, so
//! the true value of any expression built from exact inputs always lies in the
//! returned interval. Only the functions this crate needs are provided:
//! field operations, `sqrt`, `ln` and `arcosh`.
//!
//! `prec` is a working precision in bits. Arithmetic rounds endpoints to
//! `prec` significant bits; `ln` (and therefore `arcosh`) is accurate to about
//! `2^-prec` absolutely.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use parking_lot::Mutex;

use crate::error::{domain, Error, Result};

/// Guard bits added to the working precision of transcendental functions.
pub const GUARD_BITS: u64 = 32;

/// Largest working precision the retry loops will try.
pub const MAX_PREC_BITS: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// An exact binary fraction `man * 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Self {
        if man.is_zero() {
            return Dyadic::zero();
        }
        let tz = man.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            Dyadic { man: man >> tz, exp: exp + tz as i64 }
        } else {
            Dyadic { man, exp }
        }
    }

    pub fn zero() -> Self {
        Dyadic { man: BigInt::zero(), exp: 0 }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// `floor(log2 |x|) + 1`, i.e. the position of the leading bit.
    pub fn magnitude(&self) -> i64 {
        self.man.bits() as i64 + self.exp
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { man: -&self.man, exp: self.exp }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    /// Multiplication by `2^k`.
    pub fn shl(&self, k: i64) -> Dyadic {
        Dyadic { man: self.man.clone(), exp: self.exp + k }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &other.man << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.man * &other.man, self.exp + other.exp)
    }

    /// Rounds to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u64, dir: Round) -> Dyadic {
        let bits = self.man.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        let man = shift_round(&self.man, shift, dir);
        Dyadic::new(man, self.exp + shift as i64)
    }

    /// `self / k` for a positive integer `k`, rounded to `prec` bits.
    pub fn div_int(&self, k: &BigInt, prec: u64, dir: Round) -> Dyadic {
        debug_assert!(k.is_positive());
        if self.is_zero() {
            return Dyadic::zero();
        }
        let s = (prec + k.bits() + 2).saturating_sub(self.man.bits());
        let n = &self.man << s;
        Dyadic::new(div_round(&n, k, dir), self.exp - s as i64)
    }

    /// `1 / self`, rounded to `prec` bits.
    pub fn recip(&self, prec: u64, dir: Round) -> Dyadic {
        debug_assert!(!self.is_zero());
        let s = prec + self.man.bits() + 2;
        let n = BigInt::one() << s;
        Dyadic::new(div_round(&n, &self.man, dir), -self.exp - s as i64)
    }

    /// `sqrt(self)` for `self >= 0`, rounded to `prec` bits.
    pub fn sqrt(&self, prec: u64, dir: Round) -> Dyadic {
        debug_assert!(self.signum() >= 0);
        if self.is_zero() {
            return Dyadic::zero();
        }
        let mut s = (2 * prec + 2).saturating_sub(self.man.bits());
        if (self.exp - s as i64).rem_euclid(2) != 0 {
            s += 1;
        }
        let n = &self.man << s;
        let mut r = n.sqrt();
        if dir == Round::Up && &r * &r != n {
            r += 1;
        }
        Dyadic::new(r, (self.exp - s as i64) / 2)
    }

    /// Certified bounds `(lo, hi)` on `ln(self)` for `self > 0`, with absolute
    /// width about `2^-prec`.
    pub fn ln_bounds(&self, prec: u64) -> (Dyadic, Dyadic) {
        debug_assert!(self.signum() > 0);
        let n = self.man.bits();
        // self = (man / 2^j) * 2^(exp + j) with man / 2^j in [1/sqrt2, sqrt2)
        let j = if (&self.man * &self.man) << 1u32 >= BigInt::one() << (2 * n) { n } else { n - 1 };
        let k = self.exp + j as i64;
        let scale = prec + 8 + bit_length(k.unsigned_abs());
        let two_j = BigInt::one() << j;
        let num = &self.man - &two_j;
        let den = &self.man + &two_j;
        let (t_lo, t_hi) = atanh_fixed(&num, &den, scale);
        let (l2_lo, l2_hi) = ln2_fixed(scale);
        let kb = BigInt::from(k);
        let (klo, khi) = if k >= 0 { (&kb * &l2_lo, &kb * &l2_hi) } else { (&kb * &l2_hi, &kb * &l2_lo) };
        let lo = klo + (t_lo << 1u32);
        let hi = khi + (t_hi << 1u32);
        (Dyadic::new(lo, -(scale as i64)), Dyadic::new(hi, -(scale as i64)))
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.man << self.exp as u64)
        } else {
            BigRational::new(self.man.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.man.bits() as i64;
        let shift = bits - 60;
        let (m, e) = if shift > 0 {
            ((&self.man >> shift as u64).to_f64().unwrap_or(0.0), self.exp + shift)
        } else {
            (self.man.to_f64().unwrap_or(0.0), self.exp)
        };
        m * (e as f64).exp2()
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // same sign; compare magnitudes first to avoid huge shifts
        let (ma, mb) = (self.magnitude(), other.magnitude());
        if ma != mb {
            let by_mag = ma.cmp(&mb);
            return if sa > 0 { by_mag } else { by_mag.reverse() };
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &other.man << (other.exp - e) as u64;
        a.cmp(&b)
    }
}

fn bit_length(v: u64) -> u64 {
    64 - v.leading_zeros() as u64
}

fn shift_round(m: &BigInt, shift: u64, dir: Round) -> BigInt {
    // BigInt >> rounds toward negative infinity
    match dir {
        Round::Down => m >> shift,
        Round::Up => -((-m) >> shift),
    }
}

fn div_round(n: &BigInt, d: &BigInt, dir: Round) -> BigInt {
    match dir {
        Round::Down => n.div_floor(d),
        Round::Up => -((-n).div_floor(d)),
    }
}

// Fixed-point bounds on atanh(num/den) scaled by 2^scale, for |num/den| <= 1/3.
fn atanh_fixed(num: &BigInt, den: &BigInt, scale: u64) -> (BigInt, BigInt) {
    if num.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    if num.is_negative() {
        let (lo, hi) = atanh_fixed(&-num, den, scale);
        return (-hi, -lo);
    }
    let shifted = num << scale;
    let s_lo = shifted.div_floor(den);
    let s_hi = -((-&shifted).div_floor(den));
    let s2_lo = (&s_lo * &s_lo) >> scale;
    let s2_hi = -((-(&s_hi * &s_hi)) >> scale);
    let (mut p_lo, mut p_hi) = (s_lo, s_hi);
    let (mut sum_lo, mut sum_hi) = (BigInt::zero(), BigInt::zero());
    let four = BigInt::from(4);
    let mut i: u64 = 0;
    loop {
        let d = BigInt::from(2 * i + 1);
        sum_lo += p_lo.div_floor(&d);
        sum_hi += -((-&p_hi).div_floor(&d));
        p_lo = (&p_lo * &s2_lo) >> scale;
        p_hi = -((-(&p_hi * &s2_hi)) >> scale);
        i += 1;
        if p_hi <= four {
            break;
        }
    }
    // remaining terms: sum_{j>=i} s^(2j+1)/(2j+1) <= p_i / (1 - s^2) <= 2 p_i
    sum_hi += &p_hi << 1u32;
    (sum_lo, sum_hi)
}

static LN2_CACHE: Mutex<Option<(u64, BigInt, BigInt)>> = Mutex::new(None);

fn ln2_fixed(scale: u64) -> (BigInt, BigInt) {
    let mut cache = LN2_CACHE.lock();
    if let Some((s, lo, hi)) = cache.as_ref() {
        if *s >= scale {
            let shift = s - scale;
            return (lo >> shift, -((-hi) >> shift));
        }
    }
    let s = scale.max(cache.as_ref().map_or(0, |c| 2 * c.0));
    // ln 2 = 2 atanh(1/3)
    let (lo, hi) = atanh_fixed(&BigInt::one(), &BigInt::from(3), s);
    let (lo, hi) = (lo << 1u32, hi << 1u32);
    *cache = Some((s, lo.clone(), hi.clone()));
    let shift = s - scale;
    (lo >> shift, -((-hi) >> shift))
}

/// Result of a certified comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Less,
    Greater,
    /// The intervals intersect; recompute at higher precision to decide.
    Overlapping,
}

/// A real number known to lie in `[lo, hi]`.
#[derive(Clone, Debug)]
pub struct HpReal {
    lo: Dyadic,
    hi: Dyadic,
    prec: u64,
}

impl HpReal {
    pub fn from_bounds(lo: Dyadic, hi: Dyadic, prec: u64) -> Self {
        debug_assert!(lo <= hi);
        HpReal { lo, hi, prec }
    }

    pub fn exact(d: Dyadic, prec: u64) -> Self {
        HpReal { lo: d.clone(), hi: d, prec }
    }

    pub fn from_int(n: &BigInt, prec: u64) -> Self {
        HpReal::exact(Dyadic::from_int(n.clone()), prec)
    }

    pub fn from_i64(n: i64, prec: u64) -> Self {
        HpReal::exact(Dyadic::from_int(n), prec)
    }

    /// Encloses `n / d`; exact when `d` is a power of two.
    pub fn from_ratio(n: &BigInt, d: &BigInt, prec: u64) -> Result<Self> {
        if d.is_zero() {
            return domain("division by zero");
        }
        let (n, d) = if d.is_negative() { (-n, -d) } else { (n.clone(), d.clone()) };
        let num = Dyadic::from_int(n);
        Ok(HpReal { lo: num.div_int(&d, prec, Round::Down), hi: num.div_int(&d, prec, Round::Up), prec })
    }

    pub fn from_rational(r: &BigRational, prec: u64) -> Self {
        HpReal::from_ratio(r.numer(), r.denom(), prec).expect("rational has nonzero denominator")
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn prec(&self) -> u64 {
        self.prec
    }

    pub fn with_prec(mut self, prec: u64) -> Self {
        self.prec = prec;
        self
    }

    /// Exact midpoint of the interval.
    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).shl(-1)
    }

    /// Exact half-width of the interval.
    pub fn rad(&self) -> Dyadic {
        self.hi.sub(&self.lo).shl(-1)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    pub fn err_f64(&self) -> f64 {
        self.rad().to_f64()
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    /// Certified `self > 0`.
    pub fn is_positive(&self) -> bool {
        self.lo.signum() > 0
    }

    pub fn contains(&self, d: &Dyadic) -> bool {
        &self.lo <= d && d <= &self.hi
    }

    pub fn intersects(&self, other: &HpReal) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// `true` when the radius is at most `2^-bits`.
    pub fn err_within_bits(&self, bits: u64) -> bool {
        let rad = self.rad();
        rad.is_zero() || rad.magnitude() <= -(bits as i64)
    }

    pub fn compare(&self, other: &HpReal) -> Cmp {
        if self.hi < other.lo {
            Cmp::Less
        } else if self.lo > other.hi {
            Cmp::Greater
        } else {
            Cmp::Overlapping
        }
    }

    fn rounded(lo: Dyadic, hi: Dyadic, prec: u64) -> HpReal {
        HpReal { lo: lo.round(prec, Round::Down), hi: hi.round(prec, Round::Up), prec }
    }

    pub fn abs(&self) -> HpReal {
        if self.lo.signum() >= 0 {
            self.clone()
        } else if self.hi.signum() <= 0 {
            -self
        } else {
            let m = self.lo.abs().max(self.hi.clone());
            HpReal { lo: Dyadic::zero(), hi: m, prec: self.prec }
        }
    }

    pub fn square(&self) -> HpReal {
        if self.contains_zero() {
            let m = self.lo.abs().max(self.hi.abs());
            HpReal::rounded(Dyadic::zero(), m.mul(&m), self.prec)
        } else {
            self * self
        }
    }

    pub fn mul_int(&self, k: i64) -> HpReal {
        self * &HpReal::from_i64(k, self.prec)
    }

    /// Division by a nonzero integer.
    pub fn div_int(&self, k: &BigInt) -> Result<HpReal> {
        if k.is_zero() {
            return domain("division by zero");
        }
        let (src, k) = if k.is_negative() { (-self, -k) } else { (self.clone(), k.clone()) };
        Ok(HpReal {
            lo: src.lo.div_int(&k, src.prec, Round::Down),
            hi: src.hi.div_int(&k, src.prec, Round::Up),
            prec: src.prec,
        })
    }

    pub fn div_i64(&self, k: i64) -> Result<HpReal> {
        self.div_int(&BigInt::from(k))
    }

    pub fn recip(&self) -> Result<HpReal> {
        if self.contains_zero() {
            return domain("reciprocal of an interval containing zero");
        }
        Ok(HpReal {
            lo: self.hi.recip(self.prec, Round::Down),
            hi: self.lo.recip(self.prec, Round::Up),
            prec: self.prec,
        })
    }

    pub fn div(&self, other: &HpReal) -> Result<HpReal> {
        Ok(self * &other.recip()?)
    }

    pub fn sqrt(&self) -> Result<HpReal> {
        if self.lo.signum() < 0 {
            return domain("sqrt of an interval reaching below zero");
        }
        Ok(HpReal { lo: self.lo.sqrt(self.prec, Round::Down), hi: self.hi.sqrt(self.prec, Round::Up), prec: self.prec })
    }

    pub fn ln(&self) -> Result<HpReal> {
        if self.lo.signum() <= 0 {
            return domain("ln of an interval reaching zero or below");
        }
        let lo = self.lo.ln_bounds(self.prec).0;
        let hi = if self.is_exact() { self.lo.ln_bounds(self.prec).1 } else { self.hi.ln_bounds(self.prec).1 };
        Ok(HpReal { lo, hi, prec: self.prec })
    }

    /// `arcosh(y) = ln(y + sqrt(y^2 - 1))` for `y >= 1`.
    pub fn arcosh(&self) -> Result<HpReal> {
        let one = Dyadic::from_int(1);
        if self.lo < one {
            return domain("arcosh needs an argument >= 1");
        }
        let lo = arcosh_bound(&self.lo, self.prec, Round::Down);
        let hi = arcosh_bound(&self.hi, self.prec, Round::Up);
        Ok(HpReal { lo, hi, prec: self.prec })
    }

    /// Endpoint union.
    pub fn hull(&self, other: &HpReal) -> HpReal {
        HpReal {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            prec: self.prec.max(other.prec),
        }
    }

    /// Decimal midpoint and an upper bound on the distance from the printed
    /// value to every point of the interval.
    pub fn decimal_parts(&self) -> (String, String) {
        let rad = self.rad();
        let mid = self.mid();
        if rad.is_zero() && mid.exp >= -64 {
            let digits = (-mid.exp).max(0) as usize;
            return (format_fixed(&mid.to_rational(), digits), "0".to_string());
        }
        let digits = if rad.is_zero() {
            40
        } else {
            let log10 = (-rad.magnitude()) as f64 * std::f64::consts::LOG10_2;
            (log10.floor() as i64 + 2).clamp(1, 100_000) as usize
        };
        let m = mid.to_rational();
        let printed = round_decimal(&m, digits);
        let total = rad.to_rational() + (&m - &printed).abs();
        (format_fixed(&printed, digits), format_err(&total))
    }

    /// Decimal string of a rigorous lower (`Down`) or upper (`Up`) bound.
    pub fn bound_string(&self, dir: Round, digits: usize) -> String {
        let d = match dir {
            Round::Down => &self.lo,
            Round::Up => &self.hi,
        };
        let scale = num_traits::pow(BigInt::from(10), digits);
        let r = d.to_rational() * BigRational::from_integer(scale.clone());
        let n = match dir {
            Round::Down => r.floor(),
            Round::Up => r.ceil(),
        };
        format_fixed(&(n / BigRational::from_integer(scale)), digits)
    }
}

fn arcosh_bound(y: &Dyadic, prec: u64, dir: Round) -> Dyadic {
    let one = Dyadic::from_int(1);
    if *y == one {
        return Dyadic::zero();
    }
    let work = prec + 8;
    let t = y.mul(y).sub(&one);
    let r = t.sqrt(work, dir);
    let z = y.add(&r).round(work, dir);
    let (lo, hi) = z.ln_bounds(prec);
    match dir {
        Round::Down => lo.max(Dyadic::zero()),
        Round::Up => hi,
    }
}

fn round_decimal(x: &BigRational, digits: usize) -> BigRational {
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), digits));
    (x * &scale).round() / scale
}

// Fixed notation with exactly `digits` places (trailing zeros trimmed, at least one kept).
fn format_fixed(x: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let n = (x * BigRational::from_integer(scale.clone())).round().to_integer();
    let neg = n.is_negative();
    let s = n.abs().to_str_radix(10);
    let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
    let (int, frac) = s.split_at(s.len() - digits);
    let frac = frac.trim_end_matches('0');
    let body = if frac.is_empty() { format!("{int}.0") } else { format!("{int}.{frac}") };
    if neg && body.chars().any(|c| c.is_ascii_digit() && c != '0') {
        format!("-{body}")
    } else {
        body
    }
}

// Two significant digits, rounded up.
fn format_err(e: &BigRational) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let ten = BigRational::from_integer(BigInt::from(10));
    let bits = e.numer().bits() as i64 - e.denom().bits() as i64;
    let mut n = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    let pow10 = |k: i64| -> BigRational {
        if k >= 0 {
            num_traits::pow(ten.clone(), k as usize)
        } else {
            num_traits::pow(ten.clone(), (-k) as usize).recip()
        }
    };
    while pow10(n + 1) <= *e {
        n += 1;
    }
    while pow10(n) > *e {
        n -= 1;
    }
    let mut mant = (e / pow10(n - 1)).ceil().to_integer();
    if mant >= BigInt::from(100) {
        n += 1;
        mant = BigInt::from(10);
    }
    let m = mant.to_u32().unwrap_or(99);
    format!("{}.{}e{}", m / 10, m % 10, n)
}

impl fmt::Display for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (v, e) = self.decimal_parts();
        write!(f, "{v}±{e}")
    }
}

impl Neg for &HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        HpReal { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }
}

impl Neg for HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        -&self
    }
}

impl Add for &HpReal {
    type Output = HpReal;
    fn add(self, o: &HpReal) -> HpReal {
        HpReal::rounded(self.lo.add(&o.lo), self.hi.add(&o.hi), self.prec.max(o.prec))
    }
}

impl Sub for &HpReal {
    type Output = HpReal;
    fn sub(self, o: &HpReal) -> HpReal {
        HpReal::rounded(self.lo.sub(&o.hi), self.hi.sub(&o.lo), self.prec.max(o.prec))
    }
}

impl Mul for &HpReal {
    type Output = HpReal;
    fn mul(self, o: &HpReal) -> HpReal {
        let prec = self.prec.max(o.prec);
        if self.lo.signum() >= 0 && o.lo.signum() >= 0 {
            return HpReal::rounded(self.lo.mul(&o.lo), self.hi.mul(&o.hi), prec);
        }
        let c = [self.lo.mul(&o.lo), self.lo.mul(&o.hi), self.hi.mul(&o.lo), self.hi.mul(&o.hi)];
        let lo = c.iter().min().expect("four products").clone();
        let hi = c.iter().max().expect("four products").clone();
        HpReal::rounded(lo, hi, prec)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for HpReal {
            type Output = HpReal;
            fn $m(self, o: HpReal) -> HpReal {
                (&self).$m(&o)
            }
        }
        impl $tr<&HpReal> for HpReal {
            type Output = HpReal;
            fn $m(self, o: &HpReal) -> HpReal {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Working precision (bits) for an absolute error target such as `1e-30`.
pub fn bits_for_target(target_err: f64) -> Result<u64> {
    if !(target_err > 0.0 && target_err.is_finite()) {
        return Err(Error::Domain(format!("precision target must be positive, got {target_err}")));
    }
    Ok(((-target_err.log2()).ceil().max(1.0) as u64) + GUARD_BITS)
}

/// Certified enclosure of `arcosh(n / d)` with radius at most `target_err`.
///
/// The working precision starts from the target and the bit length of `n`
/// and is raised until the target is met.
pub fn arcosh_of_ratio(n: &BigInt, d: &BigInt, target_err: f64) -> Result<HpReal> {
    arcosh_of_ratio_bits(n, d, bits_for_target(target_err)? - GUARD_BITS)
}

/// As [`arcosh_of_ratio`], with the radius bounded by `2^-target_bits`.
pub fn arcosh_of_ratio_bits(n: &BigInt, d: &BigInt, target_bits: u64) -> Result<HpReal> {
    if !d.is_positive() {
        return domain("arcosh_of_ratio needs a positive denominator");
    }
    if n < d {
        return domain(format!("arcosh needs n/d >= 1, got {n}/{d}"));
    }
    let mut prec = target_bits + GUARD_BITS + bit_length(n.bits());
    loop {
        let v = HpReal::from_ratio(n, d, prec)?.arcosh()?;
        if v.err_within_bits(target_bits) {
            return Ok(v);
        }
        if prec > MAX_PREC_BITS {
            return Err(Error::Precision(format!("arcosh({n}/{d}) did not reach 2^-{target_bits}")));
        }
        prec *= 2;
    }
}
