//! Exact rationals and quadratic surds `p + q·√d`.
//!
//! Every slope in the engine is a root of an integer quadratic, so it lives in
//! some `Q(√d)`. Comparisons between different fields are decided by sign
//! case analysis and squaring, never by floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A real number `p + q·√d` with `d` squarefree.
///
/// The representation is canonical: rational values always carry `q = 0`
/// and `d = 0`, so structural equality is numerical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    p: Rational,
    q: Rational,
    d: BigInt,
}

/// Splits `n ≥ 0` as `k² · d` with `d` squarefree.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_negative(), "radicand must be nonnegative");
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    if let Some(small) = n.to_u64() {
        let (k, d) = squarefree_u64(small);
        return (BigInt::from(k), BigInt::from(d));
    }
    squarefree_decompose_from(n.clone(), BigInt::from(2u32))
}

fn squarefree_decompose_from(mut rest: BigInt, start: BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut d = BigInt::one();
    let mut f = start;
    while &f * &f <= rest {
        let mut e = 0u32;
        while (&rest % &f).is_zero() {
            rest /= &f;
            e += 1;
        }
        for _ in 0..e / 2 {
            k *= &f;
        }
        if e % 2 == 1 {
            d *= &f;
        }
        f += 1u32;
    }
    (k, d * rest)
}

fn squarefree_u64(mut n: u64) -> (u64, u64) {
    let mut k = 1u64;
    let mut d = 1u64;
    let mut f = 2u64;
    while f.saturating_mul(f) <= n {
        let mut e = 0u32;
        while n % f == 0 {
            n /= f;
            e += 1;
        }
        k *= f.pow(e / 2);
        if e % 2 == 1 {
            d *= f;
        }
        f += if f == 2 { 1 } else { 2 };
    }
    (k, d * n)
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ratio_from_int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// Sign of `r + u·√m` for squarefree `m ≥ 0`.
fn sign_surd(r: &Rational, u: &Rational, m: &BigInt) -> Ordering {
    let sr = r.cmp(&Rational::zero());
    let su = if m.is_zero() { Ordering::Equal } else { u.cmp(&Rational::zero()) };
    if su == Ordering::Equal {
        return sr;
    }
    if sr == Ordering::Equal || sr == su {
        return su;
    }
    let r2 = r * r;
    let u2m = u * u * ratio_from_int(m.clone());
    match r2.cmp(&u2m) {
        Ordering::Greater => sr,
        Ordering::Less => su,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `r + u·√m + v·√n` for distinct squarefree `m, n ≥ 2`.
fn sign_two_surds(r: &Rational, u: &Rational, m: &BigInt, v: &Rational, n: &BigInt) -> Ordering {
    let su = u.cmp(&Rational::zero());
    let sv = v.cmp(&Rational::zero());
    let sy = if su == Ordering::Equal {
        sv
    } else if sv == Ordering::Equal || su == sv {
        su
    } else {
        let lhs = u * u * ratio_from_int(m.clone());
        let rhs = v * v * ratio_from_int(n.clone());
        match lhs.cmp(&rhs) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => Ordering::Equal,
        }
    };
    let sr = r.cmp(&Rational::zero());
    if sy == Ordering::Equal {
        return sr;
    }
    if sr == Ordering::Equal || sr == sy {
        return sy;
    }
    // |r| against |u√m + v√n|: compare r² with u²m + v²n + 2uv·√(mn).
    let g = m.gcd(n);
    let core = (m / &g) * (n / &g);
    let two = ratio_from_int(int(2));
    let rest = r * r - u * u * ratio_from_int(m.clone()) - v * v * ratio_from_int(n.clone());
    let coef = -(two * u * v * ratio_from_int(g));
    match sign_surd(&rest, &coef, &core) {
        Ordering::Greater => sr,
        Ordering::Less => sy,
        Ordering::Equal => Ordering::Equal,
    }
}

impl QuadraticNumber {
    /// Builds `p + q·√radicand`, reducing the radicand to its squarefree part.
    ///
    /// Panics on a negative radicand.
    pub fn new(p: Rational, q: Rational, radicand: BigInt) -> Self {
        let (k, d) = squarefree_decompose(&radicand);
        let q = q * ratio_from_int(k);
        Self::from_reduced(p, q, d)
    }

    fn from_reduced(p: Rational, q: Rational, d: BigInt) -> Self {
        if q.is_zero() || d.is_zero() {
            return Self { p, q: Rational::zero(), d: BigInt::zero() };
        }
        if d.is_one() {
            return Self { p: p + q, q: Rational::zero(), d: BigInt::zero() };
        }
        Self { p, q, d }
    }

    pub fn rational(p: Rational) -> Self {
        Self { p, q: Rational::zero(), d: BigInt::zero() }
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Self::rational(Rational::from_integer(v.into()))
    }

    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self::rational(Rational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// Squarefree radicand; `0` for rational values.
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self { p: self.p.clone(), q: -self.q.clone(), d: self.d.clone() }
    }

    /// `(p + q√d)(p − q√d)`, always rational.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - &self.q * &self.q * ratio_from_int(self.d.clone())
    }

    pub fn signum(&self) -> Ordering {
        sign_surd(&self.p, &self.q, &self.d)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self::from_reduced(&self.p / &n, -(&self.q / &n), self.d.clone()))
    }

    /// Exact floor.
    pub fn floor(&self) -> BigInt {
        let den = self.p.denom().lcm(self.q.denom());
        let big_p = self.p.numer() * (&den / self.p.denom());
        let big_q = self.q.numer() * (&den / self.q.denom());
        let radicand = &big_q * &big_q * &self.d;
        let root = radicand.sqrt();
        let floor_q = if big_q.is_negative() {
            let exact = &root * &root == radicand;
            -(root + BigInt::from(if exact { 0 } else { 1 }))
        } else {
            root
        };
        (big_p + floor_q).div_floor(&den)
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        if self.q.is_zero() {
            return p;
        }
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        p + q * d.sqrt()
    }

    /// Decimal rendering truncated toward −∞ at `places` digits, so the
    /// printed value is within `10^-places` of the exact one.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = BigInt::from(10u32).pow(places);
        let scaled = self * &Self::from_integer(scale.clone());
        let n = scaled.floor();
        let negative = n.is_negative();
        let a = n.abs();
        let (whole, frac) = a.div_rem(&scale);
        let sign = if negative { "-" } else { "" };
        if places == 0 {
            format!("{sign}{whole}")
        } else {
            format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = places as usize)
        }
    }

    fn common_radicand(&self, other: &Self) -> BigInt {
        if self.d.is_zero() {
            other.d.clone()
        } else if other.d.is_zero() || self.d == other.d {
            self.d.clone()
        } else {
            panic!("arithmetic across different radicands √{} and √{}", self.d, other.d)
        }
    }
}

/// Exact comparison of two surds, possibly with different radicands.
pub fn qn_compare(x: &QuadraticNumber, y: &QuadraticNumber) -> Ordering {
    let r = &x.p - &y.p;
    if x.d.is_zero() || y.d.is_zero() || x.d == y.d {
        let d = if x.d.is_zero() { &y.d } else { &x.d };
        let u = &x.q - &y.q;
        return sign_surd(&r, &u, d);
    }
    sign_two_surds(&r, &x.q, &x.d, &(-y.q.clone()), &y.d)
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        qn_compare(self, other)
    }
}

/// All real roots of `A·t² + B·t + C = 0`, ascending, with multiplicity for
/// a double root. A linear equation yields its single root; a nonzero
/// constant yields none.
pub fn quadratic_roots(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<Vec<QuadraticNumber>> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::DegenerateEquation);
    }
    if a.is_zero() {
        if b.is_zero() {
            return Ok(Vec::new());
        }
        return Ok(vec![QuadraticNumber::rational(Rational::new(-c, b.clone()))]);
    }
    let disc = b * b - int(4) * a * c;
    if disc.is_negative() {
        return Ok(Vec::new());
    }
    let two_a = int(2) * a;
    let p = Rational::new(-b, two_a.clone());
    let q = Rational::new(BigInt::one(), two_a);
    let plus = QuadraticNumber::new(p.clone(), q.clone(), disc.clone());
    let minus = QuadraticNumber::new(p, -q, disc);
    let mut roots = vec![minus, plus];
    roots.sort();
    Ok(roots)
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        let abs_q = self.q.abs();
        let coef = if abs_q.is_one() { String::new() } else { format!("{abs_q}·") };
        if self.p.is_zero() {
            let sign = if self.q.is_negative() { "-" } else { "" };
            write!(f, "{sign}{coef}√{}", self.d)
        } else {
            let sign = if self.q.is_negative() { '-' } else { '+' };
            write!(f, "{} {sign} {coef}√{}", self.p, self.d)
        }
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber { p: -self.p.clone(), q: -self.q.clone(), d: self.d.clone() }
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -&self
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.common_radicand(rhs);
        QuadraticNumber::from_reduced(&self.p + &rhs.p, &self.q + &rhs.q, d)
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self + &(-rhs)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.common_radicand(rhs);
        let dr = ratio_from_int(d.clone());
        let p = &self.p * &rhs.p + &self.q * &rhs.q * dr;
        let q = &self.p * &rhs.q + &self.q * &rhs.p;
        QuadraticNumber::from_reduced(p, q, d)
    }
}

impl Div for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn div(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let inv = rhs.recip().expect("division by zero");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: QuadraticNumber) -> QuadraticNumber {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: &QuadraticNumber) -> QuadraticNumber {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;

    fn qn(p: i64, q: i64, d: i64) -> QuadraticNumber {
        QuadraticNumber::new(
            Rational::from_integer(int(p)),
            Rational::from_integer(int(q)),
            int(d),
        )
    }

    fn roots(a: i64, b: i64, c: i64) -> Vec<QuadraticNumber> {
        quadratic_roots(&int(a), &int(b), &int(c)).unwrap()
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_decompose(&int(12)), (int(2), int(3)));
        assert_eq!(squarefree_decompose(&int(72)), (int(6), int(2)));
        assert_eq!(squarefree_decompose(&int(49)), (int(7), int(1)));
        assert_eq!(squarefree_decompose(&int(1)), (int(1), int(1)));
        let big = BigInt::from(u64::MAX) * int(18);
        let (k, d) = squarefree_decompose(&big);
        assert_eq!(&k * &k * &d, big);
    }

    #[test]
    fn canonical_form_folds_perfect_squares() {
        let x = qn(1, 2, 9);
        assert!(x.is_rational());
        assert_eq!(x, QuadraticNumber::from_integer(7));
        assert_eq!(qn(3, 1, 12), qn(3, 2, 3));
        assert_eq!(qn(5, 0, 7).d(), &int(0));
    }

    #[test]
    fn roots_of_one_minus_six_minus_three() {
        let r = roots(1, -6, -3);
        assert_eq!(r, vec![qn(3, -2, 3), qn(3, 2, 3)]);
        let float_roots = [3.0 - 12f64.sqrt(), 3.0 + 12f64.sqrt()];
        for (exact, approx) in r.iter().zip(float_roots) {
            assert!((exact.to_f64() - approx).abs() < 1e-12);
            let value = exact * exact - qn(6, 0, 0) * exact.clone() - qn(3, 0, 0);
            assert!(value.is_zero());
        }
    }

    #[test]
    fn double_root_at_zero() {
        assert_eq!(roots(1, 0, 0), vec![QuadraticNumber::zero(), QuadraticNumber::zero()]);
    }

    #[test]
    fn factorable_quadratic() {
        assert_eq!(
            roots(1, -8, 0),
            vec![QuadraticNumber::zero(), QuadraticNumber::from_integer(8)]
        );
    }

    #[test]
    fn linear_negative_and_degenerate() {
        assert_eq!(roots(0, 2, -3), vec![QuadraticNumber::from_ratio(3, 2)]);
        assert!(roots(1, 0, 1).is_empty());
        assert!(roots(0, 0, 5).is_empty());
        assert_eq!(
            quadratic_roots(&int(0), &int(0), &int(0)),
            Err(Error::DegenerateEquation)
        );
    }

    #[test]
    fn negative_leading_coefficient_still_ascending() {
        let r = roots(-1, 6, 3);
        assert_eq!(r, vec![qn(3, -2, 3), qn(3, 2, 3)]);
    }

    #[test]
    fn compare_examples() {
        assert_eq!(qn_compare(&qn(3, 2, 3), &qn(6, 0, 0)), Ordering::Greater);
        assert_eq!(qn_compare(&qn(5, 0, 0), &qn(5, 0, 0)), Ordering::Equal);
        assert_eq!(qn_compare(&qn(2, 1, 2), &qn(1, 1, 5)), Ordering::Greater);
        assert_eq!(qn_compare(&qn(1, 1, 5), &qn(2, 1, 2)), Ordering::Less);
        // 3 + √2 ≈ 4.414 sits between √19 and √20
        assert_eq!(qn_compare(&qn(3, 1, 2), &qn(0, 1, 19)), Ordering::Greater);
        assert_eq!(qn_compare(&qn(3, 1, 2), &qn(0, 1, 20)), Ordering::Less);
    }

    #[test]
    fn floor_and_ceil() {
        let x = qn(3, 2, 3);
        assert_eq!(x.floor(), int(6));
        assert_eq!(x.ceil(), int(7));
        assert_eq!((-&x).floor(), int(-7));
        assert_eq!(QuadraticNumber::from_integer(4).floor(), int(4));
        assert_eq!(QuadraticNumber::from_ratio(-1, 2).floor(), int(-1));
        let y = QuadraticNumber::new(Rational::new(int(1), int(3)), Rational::new(int(-1), int(2)), int(5));
        assert_eq!(y.floor(), int(-1));
    }

    #[test]
    fn decimals_truncate() {
        assert_eq!(qn(3, 2, 3).to_decimal(6), "6.464101");
        assert_eq!(qn(0, -1, 2).to_decimal(3), "-1.415");
        assert_eq!(QuadraticNumber::from_integer(8).to_decimal(2), "8.00");
    }

    #[test]
    fn field_arithmetic() {
        let x = qn(1, 1, 2);
        let inv = x.recip().unwrap();
        assert_eq!(&x * &inv, QuadraticNumber::from_integer(1));
        assert_eq!(&x / &x, QuadraticNumber::from_integer(1));
        assert_eq!(&x - &x, QuadraticNumber::zero());
        assert_eq!(x.norm(), Rational::from_integer(int(-1)));
    }

    #[test]
    fn display() {
        assert_eq!(qn(3, 2, 3).to_string(), "3 + 2·√3");
        assert_eq!(qn(0, -1, 7).to_string(), "-√7");
        assert_eq!(QuadraticNumber::from_ratio(-1, 2).to_string(), "-1/2");
    }

    #[test]
    #[should_panic(expected = "different radicands")]
    fn mixed_radicand_arithmetic_panics() {
        let _ = qn(0, 1, 2) + qn(0, 1, 3);
    }
}
