//! Exact `SL2(Z)` words in the Cohn generators.
//!
//! `A = (1 1; 1 2)`, `B = (3 4; 2 3)` classically, and
//! `A_a = (1-a+a^2, a^2; a, a+1)`, `B_a = (1-2a+4a^2, 4a^2; 2a, 2a+1)` in the
//! `a`-family. `A` sits at `0/1`, `B` at `1/2`, and the word at a Farey
//! mediant is the left parent's word followed by the right parent's.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Result};
use crate::farey::{sb_encode, Fraction, Step};
use crate::markov::Surface;

/// A 2x2 integer matrix `(a b; c d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Mat2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one()
    }

    /// Inverse of a determinant-one matrix (the adjugate).
    pub fn inverse(&self) -> Result<Mat2> {
        if !self.is_unimodular() {
            return domain(format!("matrix {self} has determinant {} != 1", self.det()));
        }
        Ok(Mat2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() })
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

/// Classical generators, or the `a`-family at the given `a` (`a = 1` is classical).
pub fn generator(s: &Surface, which: Letter) -> Result<Mat2> {
    let a: i64 = match s {
        Surface::Classical => 1,
        Surface::AFamily(a) => *a as i64,
        Surface::Fricke(_) => return domain("no integer generators for a Fricke surface"),
    };
    let a = BigInt::from(a);
    let a2 = &a * &a;
    Ok(match which {
        Letter::A => Mat2 { a: BigInt::one() - &a + &a2, b: a2.clone(), c: a.clone(), d: &a + 1 },
        Letter::B => Mat2 { a: BigInt::one() - &a * 2 + &a2 * 4, b: &a2 * 4, c: &a * 2, d: &a * 2 + 1 },
    })
}

/// A nonempty word in `A`, `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixWord {
    letters: Vec<Letter>,
}

impl MatrixWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return domain("empty matrix word");
        }
        Ok(MatrixWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Product of the generator matrices, left to right.
    pub fn evaluate(&self, s: &Surface) -> Result<Mat2> {
        let ga = generator(s, Letter::A)?;
        let gb = generator(s, Letter::B)?;
        Ok(self.letters.iter().fold(Mat2::identity(), |m, l| {
            &m * match l {
                Letter::A => &ga,
                Letter::B => &gb,
            }
        }))
    }

    fn concat(&self, o: &MatrixWord) -> MatrixWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        MatrixWord { letters }
    }
}

impl fmt::Display for MatrixWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Letter::A => "A",
                Letter::B => "B",
            })?;
        }
        Ok(())
    }
}

/// Word of `x` in `[0, 1/2]`: `A` at `0/1`, `B` at `1/2`, concatenation under
/// mediants. Length is `q - p`.
pub fn christoffel_word(x: Fraction) -> Result<MatrixWord> {
    let a = MatrixWord { letters: vec![Letter::A] };
    let b = MatrixWord { letters: vec![Letter::B] };
    if x == Fraction::ZERO {
        return Ok(a);
    }
    if x == Fraction::HALF {
        return Ok(b);
    }
    let path = sb_encode(x)?;
    let (mut l, mut r) = (a, b);
    for step in path.steps() {
        let m = l.concat(&r);
        match step {
            Step::L => r = m,
            Step::R => l = m,
        }
    }
    Ok(l.concat(&r))
}

/// `tr W(x)` for `x` in `[0, 1/2]`; equals `3 m(x)` classically and `X(x)` in the `a`-family.
pub fn trace_of(x: Fraction, s: &Surface) -> Result<BigInt> {
    if !x.in_fundamental_domain() {
        return domain(format!("trace_of needs x in [0, 1/2], got {x}"));
    }
    // evaluate along the path so that the product is shared with the parents
    let ga = generator(s, Letter::A)?;
    let gb = generator(s, Letter::B)?;
    if x == Fraction::ZERO {
        return Ok(ga.trace());
    }
    if x == Fraction::HALF {
        return Ok(gb.trace());
    }
    let (mut l, mut r) = (ga, gb);
    for step in sb_encode(x)?.steps() {
        let m = &l * &r;
        match step {
            Step::L => r = m,
            Step::R => l = m,
        }
    }
    Ok((&l * &r).trace())
}

/// Residuals of the Fricke identities
/// `tr AB + tr AB^-1 - tr A tr B` and
/// `tr A^2 + tr B^2 + tr AB^2 - tr A tr B tr AB - tr [A,B] - 2`.
pub fn fricke_check(a: &Mat2, b: &Mat2) -> Result<(BigInt, BigInt)> {
    let ai = a.inverse()?;
    let bi = b.inverse()?;
    let (ta, tb) = (a.trace(), b.trace());
    let ab = a * b;
    let tc = ab.trace();
    let r1 = &tc + (a * &bi).trace() - &ta * &tb;
    let comm = &(&ab * &ai) * &bi;
    let r2 = &ta * &ta + &tb * &tb + &tc * &tc - &ta * &tb * &tc - comm.trace() - 2;
    Ok((r1, r2))
}

/// `tr(A B A^-1 B^-1)` of the generators of `s`.
pub fn commutator_trace(s: &Surface) -> Result<BigInt> {
    let a = generator(s, Letter::A)?;
    let b = generator(s, Letter::B)?;
    let comm = &(&(&a * &b) * &a.inverse()?) * &b.inverse()?;
    Ok(comm.trace())
}

/// Seeded random `SL2(Z)` matrix with entries bounded by `bound` in absolute value.
pub fn random_sl2(rng: &mut impl Rng, bound: i64) -> Mat2 {
    loop {
        let a = rng.gen_range(-bound..=bound);
        let b = rng.gen_range(-bound..=bound);
        let g = num_integer::Integer::extended_gcd(&a, &b);
        if g.gcd != 1 {
            continue;
        }
        // a*x + b*y = 1  =>  (a -b... ) pick (a b; c d) with a d - b c = 1: c = -y, d = x
        let (mut c, mut d) = (-g.y, g.x);
        // shift along (c, d) += k (a, b) to land the row in range
        let norm = a * a + b * b;
        let k = -(c * a + d * b) as f64 / norm as f64;
        let k = k.round() as i64 + rng.gen_range(-2..=2);
        c += k * a;
        d += k * b;
        if c.abs() <= bound && d.abs() <= bound {
            let m = Mat2::new(a, b, c, d);
            debug_assert!(m.is_unimodular());
            return m;
        }
    }
}

/// `count` seeded random pairs.
pub fn random_pairs(seed: u64, count: usize, bound: i64) -> Vec<(Mat2, Mat2)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (random_sl2(&mut rng, bound), random_sl2(&mut rng, bound))).collect()
}

/// Largest absolute entry; used in reports.
pub fn max_entry(m: &Mat2) -> BigInt {
    [&m.a, &m.b, &m.c, &m.d].into_iter().map(num_traits::Signed::abs).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markov::{markov_number, Trace};

    fn f(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    #[test]
    fn generators() {
        let a = generator(&Surface::Classical, Letter::A).unwrap();
        assert_eq!(a, Mat2::new(1, 1, 1, 2));
        assert_eq!(a.trace(), BigInt::from(3));
        assert_eq!(generator(&Surface::Classical, Letter::B).unwrap(), Mat2::new(3, 4, 2, 3));
        let a1 = Surface::a_family(1).unwrap();
        assert_eq!(generator(&a1, Letter::A).unwrap(), a);
        let a2 = Surface::a_family(2).unwrap();
        let ga = generator(&a2, Letter::A).unwrap();
        let gb = generator(&a2, Letter::B).unwrap();
        assert_eq!(ga, Mat2::new(3, 4, 2, 3));
        assert_eq!(ga.trace(), BigInt::from(6));
        assert_eq!(gb, Mat2::new(13, 16, 4, 5));
        assert_eq!(gb.trace(), BigInt::from(18));
        for a in 1..=10 {
            let s = Surface::a_family(a).unwrap();
            assert!(generator(&s, Letter::A).unwrap().is_unimodular());
            assert!(generator(&s, Letter::B).unwrap().is_unimodular());
        }
    }

    #[test]
    fn words() {
        assert_eq!(christoffel_word(f("0/1")).unwrap().to_string(), "A");
        assert_eq!(christoffel_word(f("1/2")).unwrap().to_string(), "B");
        assert_eq!(christoffel_word(f("1/3")).unwrap().to_string(), "AB");
        assert_eq!(christoffel_word(f("1/4")).unwrap().to_string(), "AAB");
        let ab = christoffel_word(f("1/3")).unwrap().evaluate(&Surface::Classical).unwrap();
        assert_eq!(ab, Mat2::new(5, 7, 7, 10));
        assert_eq!(trace_of(f("1/3"), &Surface::Classical).unwrap(), BigInt::from(15));
        assert_eq!(trace_of(f("1/4"), &Surface::Classical).unwrap(), BigInt::from(39));
        assert_eq!(trace_of(f("1/2"), &Surface::Classical).unwrap(), BigInt::from(6));
        assert_eq!(trace_of(f("1/3"), &Surface::a_family(2).unwrap()).unwrap(), BigInt::from(102));
        for q in 2..30 {
            for p in 0..=q / 2 {
                let Ok(x) = Fraction::new(p, q) else { continue };
                if x.q() != q {
                    continue;
                }
                let w = christoffel_word(x).unwrap();
                assert_eq!(w.len() as i64, q - p);
                let m = w.evaluate(&Surface::Classical).unwrap();
                assert!(m.is_unimodular());
                let Trace::Int(mx) = markov_number(x, &Surface::Classical).unwrap() else { panic!() };
                assert_eq!(m.trace(), mx * 3, "{x}");
            }
        }
    }

    #[test]
    fn fricke_identities() {
        let a = generator(&Surface::Classical, Letter::A).unwrap();
        let b = generator(&Surface::Classical, Letter::B).unwrap();
        assert_eq!(fricke_check(&a, &b).unwrap(), (BigInt::zero(), BigInt::zero()));
        let i = Mat2::identity();
        assert_eq!(fricke_check(&i, &i).unwrap(), (BigInt::zero(), BigInt::zero()));
        for (a, b) in random_pairs(7, 500, 1000) {
            assert!(max_entry(&a) <= BigInt::from(1000));
            assert_eq!(fricke_check(&a, &b).unwrap(), (BigInt::zero(), BigInt::zero()));
        }
        assert!(fricke_check(&Mat2::new(2, 0, 0, 1), &i).is_err());
    }

    #[test]
    fn commutators() {
        assert_eq!(commutator_trace(&Surface::Classical).unwrap(), BigInt::from(-2));
        for a in 1..=6i64 {
            let s = Surface::a_family(a as u32).unwrap();
            assert_eq!(commutator_trace(&s).unwrap(), BigInt::from(2 - 4 * a.pow(6)));
        }
        assert_eq!(commutator_trace(&Surface::a_family(2).unwrap()).unwrap(), BigInt::from(-254));
        assert_eq!(commutator_trace(&Surface::a_family(3).unwrap()).unwrap(), BigInt::from(-2914));
    }

    #[test]
    fn random_pairs_are_reproducible() {
        assert_eq!(random_pairs(7, 20, 1000), random_pairs(7, 20, 1000));
        assert_ne!(random_pairs(7, 20, 1000), random_pairs(8, 20, 1000));
    }
}
