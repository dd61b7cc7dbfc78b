//! Independent oracles for integration tests: fixed-point interval
//! evaluation of surds and a hand-expanded intersection form.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use ruled_walls::QuadraticNumber;

pub const ORACLE_DIGITS: u32 = 50;

/// `[lo, hi] / 10^digits` containing a real number.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub digits: u32,
}

fn scale(digits: u32) -> BigInt {
    BigInt::from(10u32).pow(digits)
}

fn floor_div(n: &BigInt, d: &BigInt) -> BigInt {
    n.div_floor(d)
}

fn ceil_div(n: &BigInt, d: &BigInt) -> BigInt {
    -((-n).div_floor(d))
}

/// Encloses `num/den · √radicand` (radicand ≥ 0) at `digits` places.
fn surd_term(num: &BigInt, den: &BigInt, radicand: &BigInt, digits: u32) -> (BigInt, BigInt) {
    let s = scale(digits);
    if num.is_zero() || radicand.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    // r_lo ≤ √radicand·s ≤ r_lo + 1
    let r_lo = (radicand * &s * &s).sqrt();
    let r_hi = if &r_lo * &r_lo == radicand * &s * &s { r_lo.clone() } else { &r_lo + 1 };
    let (a, b) = (num * &r_lo, num * &r_hi);
    let (lo, hi) = if num.is_negative() { (b, a) } else { (a, b) };
    // rational denominators are positive
    (floor_div(&lo, den), ceil_div(&hi, den))
}

/// Encloses `p + q√d` given by numerators and denominators.
pub fn enclose_parts(p_num: &BigInt, p_den: &BigInt, q_num: &BigInt, q_den: &BigInt, d: &BigInt, digits: u32) -> Interval {
    let s = scale(digits);
    let p_lo = floor_div(&(p_num * &s), p_den);
    let p_hi = ceil_div(&(p_num * &s), p_den);
    let (q_lo, q_hi) = surd_term(q_num, q_den, d, digits);
    Interval { lo: p_lo + q_lo, hi: p_hi + q_hi, digits }
}

pub fn enclose(t: &QuadraticNumber) -> Interval {
    enclose_parts(t.p().numer(), t.p().denom(), t.q().numer(), t.q().denom(), t.d(), ORACLE_DIGITS)
}

impl Interval {
    /// `Some` when the intervals are disjoint.
    pub fn compare(&self, other: &Interval) -> Option<Ordering> {
        assert_eq!(self.digits, other.digits);
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Whether `decimal` is within `10^-tol_digits` of the interval.
    pub fn within_decimal(&self, decimal: &str, tol_digits: u32) -> bool {
        let value = parse_decimal(decimal, self.digits);
        let tol = scale(self.digits - tol_digits);
        value >= &self.lo - &tol && value <= &self.hi + &tol
    }

    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }
}

/// `"6.464101"` as an integer scaled by `10^digits`.
pub fn parse_decimal(text: &str, digits: u32) -> BigInt {
    let negative = text.starts_with('-');
    let body = text.trim_start_matches('-');
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    assert!(frac_part.len() as u32 <= digits);
    let mut digits_str = String::from(int_part);
    digits_str.push_str(frac_part);
    for _ in 0..(digits as usize - frac_part.len()) {
        digits_str.push('0');
    }
    let v: BigInt = digits_str.parse().unwrap();
    if negative { -v } else { v }
}

/// `S³, S²H, SH², H³` for base invariants `c₁′, c₂′`.
pub fn monomials(c1p: i128, c2p: i128) -> [i128; 4] {
    [c1p * c1p - c2p, c1p, 1, 0]
}

/// `D₁·D₂·D₃` by expanding `(a₁S + b₁H)(a₂S + b₂H)(a₃S + b₃H)`.
pub fn triple(c1p: i128, c2p: i128, d1: (i128, i128), d2: (i128, i128), d3: (i128, i128)) -> i128 {
    let m = monomials(c1p, c2p);
    let mut total = 0;
    for (i, x) in [d1.0, d1.1].iter().enumerate() {
        for (j, y) in [d2.0, d2.1].iter().enumerate() {
            for (k, z) in [d3.0, d3.1].iter().enumerate() {
                total += x * y * z * m[i + j + k];
            }
        }
    }
    total
}

/// `ξ·L²`.
pub fn xi_l_sq(c1p: i128, c2p: i128, xi: (i128, i128), l: (i128, i128)) -> i128 {
    triple(c1p, c2p, xi, l, l)
}

pub fn binom2(n: i128) -> i128 {
    if n < 2 { 0 } else { n * (n - 1) / 2 }
}
