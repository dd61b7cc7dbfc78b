//! Intersection ring of a ruled threefold `X = P(E) → P²`.
//!
//! `Num(X)` has basis `{S, H}` (tautological class, pullback of a line) and
//! codimension-2 classes have basis `{SH, H²}`. The ring is determined by
//! `H³ = 0`, `SH² = 1`, `S²H = c₁′` and `S² = c₁′·SH − c₂′·H²`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base datum fixing the intersection ring: Chern classes of `E` and,
/// when known, its splitting type `E = O(e₁) ⊕ O(e₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RuledThreefold {
    c1p: i64,
    c2p: i64,
    split: Option<(i64, i64)>,
}

impl RuledThreefold {
    /// A threefold known only through `c₁′, c₂′` of a globally generated `E`.
    pub fn new(c1p: i64, c2p: i64) -> Result<Self> {
        Self::with_split(c1p, c2p, None)
    }

    /// `P(O(e₁) ⊕ O(e₂))`; the pair is sorted so that `e₁ ≥ e₂`.
    pub fn split(e1: i64, e2: i64) -> Result<Self> {
        let (e1, e2) = if e1 >= e2 { (e1, e2) } else { (e2, e1) };
        Self::with_split(e1 + e2, e1 * e2, Some((e1, e2)))
    }

    /// `P² × P¹`.
    pub fn plane_times_line() -> Self {
        Self { c1p: 0, c2p: 0, split: Some((0, 0)) }
    }

    pub fn with_split(c1p: i64, c2p: i64, split: Option<(i64, i64)>) -> Result<Self> {
        if c1p < 0 {
            return Err(Error::InvalidThreefold(format!("c1' = {c1p} must be nonnegative")));
        }
        let c1_sq = c1p
            .checked_mul(c1p)
            .ok_or_else(|| Error::InvalidThreefold(format!("c1' = {c1p} is too large")))?;
        if c2p < 0 || c2p > c1_sq {
            return Err(Error::InvalidThreefold(format!(
                "c2' = {c2p} must satisfy 0 <= c2' <= c1'^2 = {c1_sq}"
            )));
        }
        if let Some((e1, e2)) = split {
            if e1 < e2 || e2 < 0 {
                return Err(Error::InvalidThreefold(format!(
                    "split type ({e1}, {e2}) needs e1 >= e2 >= 0"
                )));
            }
            if e1 + e2 != c1p || e1 * e2 != c2p {
                return Err(Error::InvalidThreefold(format!(
                    "split type ({e1}, {e2}) has Chern classes ({}, {}), not ({c1p}, {c2p})",
                    e1 + e2,
                    e1 * e2
                )));
            }
        }
        Ok(Self { c1p, c2p, split })
    }

    pub fn c1p(&self) -> i64 {
        self.c1p
    }

    pub fn c2p(&self) -> i64 {
        self.c2p
    }

    pub fn split_type(&self) -> Option<(i64, i64)> {
        self.split
    }

    fn c1(&self) -> BigInt {
        BigInt::from(self.c1p)
    }

    fn c2(&self) -> BigInt {
        BigInt::from(self.c2p)
    }

    /// Degrees of the four cubic monomials `S³, S²H, SH², H³`.
    pub fn monomial_degrees(&self) -> [BigInt; 4] {
        let c1 = self.c1();
        [&c1 * &c1 - self.c2(), c1, BigInt::from(1), BigInt::zero()]
    }

    /// Product of two divisor classes, reduced to the `{SH, H²}` basis.
    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> CycleClass {
        let ss = &d1.a * &d2.a;
        let sh = &d1.a * &d2.b + &d2.a * &d1.b;
        let hh = &d1.b * &d2.b;
        CycleClass { z1: &ss * self.c1() + sh, z2: hh - ss * self.c2() }
    }

    /// Degree of a triple product, expanded over the monomial table.
    pub fn triple(&self, d1: &DivisorClass, d2: &DivisorClass, d3: &DivisorClass) -> BigInt {
        let [sss, ssh, shh, hhh] = self.monomial_degrees();
        let (a1, b1, a2, b2, a3, b3) = (&d1.a, &d1.b, &d2.a, &d2.b, &d3.a, &d3.b);
        let n_sss = a1 * a2 * a3;
        let n_ssh = a1 * a2 * b3 + a1 * b2 * a3 + b1 * a2 * a3;
        let n_shh = a1 * b2 * b3 + b1 * a2 * b3 + b1 * b2 * a3;
        let n_hhh = b1 * b2 * b3;
        n_sss * sss + n_ssh * ssh + n_shh * shh + n_hhh * hhh
    }

    /// Pairing of a codimension-2 class with a divisor: `z₁·(c₁′α + β) + z₂·α`.
    pub fn pair(&self, z: &CycleClass, d: &DivisorClass) -> BigInt {
        &z.z1 * (self.c1() * &d.a + &d.b) + &z.z2 * &d.a
    }

    /// Reduces a product of two or three divisor classes.
    pub fn reduce_product(&self, factors: &[DivisorClass]) -> Result<Product> {
        match factors {
            [d1, d2] => Ok(Product::Cycle(self.intersect(d1, d2))),
            [d1, d2, d3] => Ok(Product::Degree(self.triple(d1, d2, d3))),
            _ => Err(Error::ProductArity(factors.len())),
        }
    }

    /// `K_X = −2S + (c₁′ − 3)H`.
    pub fn canonical_divisor(&self) -> DivisorClass {
        DivisorClass::new(-2, self.c1p - 3)
    }

    /// Sufficient integral ampleness test: `α ≥ 1` and `β ≥ 2`.
    pub fn certified_ample(&self, l: &DivisorClass) -> bool {
        certified_ample(l)
    }

    /// `Z·L ≥ 0` for every `L` in the open positive quadrant.
    pub fn cycle_pseudo_effective(&self, z: &CycleClass) -> bool {
        !z.z1.is_negative() && !(self.c1() * &z.z1 + &z.z2).is_negative()
    }
}

/// Sufficient integral ampleness test: `α ≥ 1` and `β ≥ 2`.
pub fn certified_ample(l: &DivisorClass) -> bool {
    l.a >= BigInt::from(1) && l.b >= BigInt::from(2)
}

/// Membership in the working cone `{αS + βH : α > 0, β > 0}`.
pub fn in_positive_cone(l: &DivisorClass) -> bool {
    l.a.is_positive() && l.b.is_positive()
}

/// Result of [`RuledThreefold::reduce_product`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Product {
    Cycle(CycleClass),
    Degree(BigInt),
}

/// A divisor class `aS + bH`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub a: BigInt,
    pub b: BigInt,
}

impl DivisorClass {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into() }
    }

    pub fn s() -> Self {
        Self::new(1, 0)
    }

    pub fn h() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self { a: &self.a * &k, b: &self.b * &k }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_pair(f, &self.a, "S", &self.b, "H")
    }
}

fn write_pair(f: &mut fmt::Formatter<'_>, x: &BigInt, xs: &str, y: &BigInt, ys: &str) -> fmt::Result {
    fn term(c: &BigInt, name: &str) -> String {
        match c.to_i64() {
            Some(1) => name.to_string(),
            Some(-1) => format!("-{name}"),
            _ => format!("{c}{name}"),
        }
    }
    match (x.is_zero(), y.is_zero()) {
        (true, true) => write!(f, "0"),
        (false, true) => write!(f, "{}", term(x, xs)),
        (true, false) => write!(f, "{}", term(y, ys)),
        (false, false) if y.is_negative() => write!(f, "{} - {}", term(x, xs), term(&-y, ys)),
        (false, false) => write!(f, "{} + {}", term(x, xs), term(y, ys)),
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass { a: -&self.a, b: -&self.b }
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        &self + &rhs
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        &self - &rhs
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        -&self
    }
}

/// A codimension-2 class `z₁·SH + z₂·H²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleClass {
    pub z1: BigInt,
    pub z2: BigInt,
}

impl CycleClass {
    pub fn new(z1: impl Into<BigInt>, z2: impl Into<BigInt>) -> Self {
        Self { z1: z1.into(), z2: z2.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.z1.is_zero() && self.z2.is_zero()
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self { z1: &self.z1 * &k, z2: &self.z2 * &k }
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_pair(f, &self.z1, "SH", &self.z2, "H^2")
    }
}

impl Add for &CycleClass {
    type Output = CycleClass;
    fn add(self, rhs: &CycleClass) -> CycleClass {
        CycleClass { z1: &self.z1 + &rhs.z1, z2: &self.z2 + &rhs.z2 }
    }
}

impl Sub for &CycleClass {
    type Output = CycleClass;
    fn sub(self, rhs: &CycleClass) -> CycleClass {
        CycleClass { z1: &self.z1 - &rhs.z1, z2: &self.z2 - &rhs.z2 }
    }
}

impl Mul<&BigInt> for &CycleClass {
    type Output = CycleClass;
    fn mul(self, k: &BigInt) -> CycleClass {
        CycleClass { z1: &self.z1 * k, z2: &self.z2 * k }
    }
}
