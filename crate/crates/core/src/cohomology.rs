//! Cohomology of line bundles on `P²` and on `X = P(E)` for split `E`.
//!
//! For `a ≥ 0`, `Hⁱ(X, O(aS + bH)) = Hⁱ(P², Symᵃ(E) ⊗ O(b))`; for `a = −1`
//! everything vanishes; for `a ≤ −2` Serre duality against `K_X` applies.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::chow::{DivisorClass, RuledThreefold};
use crate::error::{Error, Result};

/// `hⁱ(P², O(d))`.
pub fn h_plane(d: impl Into<BigInt>, i: u8) -> BigInt {
    let d: BigInt = d.into();
    match i {
        0 if d >= BigInt::zero() => binom2(&d + 2),
        2 if d <= BigInt::from(-3) => binom2(-d - 1),
        _ => BigInt::zero(),
    }
}

fn binom2(n: BigInt) -> BigInt {
    &n * (&n - 1) / 2
}

/// Dimensions `h⁰..h³` of a line bundle on `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyVector(pub [BigInt; 4]);

impl CohomologyVector {
    pub fn euler_characteristic(&self) -> BigInt {
        let [h0, h1, h2, h3] = &self.0;
        h0 - h1 + h2 - h3
    }
}

/// `hⁱ(X, O(aS + bH))`. The split type is only consulted when `a ≥ 1` or
/// `a ≤ −3`; pullbacks from `P²` and their duals need no splitting data.
pub fn h_line_bundle(x: &RuledThreefold, d: &DivisorClass, i: u8) -> Result<BigInt> {
    if i > 3 {
        return Ok(BigInt::zero());
    }
    let a = d.a.to_i64().expect("S-coefficient out of range");
    if a == -1 {
        return Ok(BigInt::zero());
    }
    if a <= -2 {
        let dual = &x.canonical_divisor() - d;
        return h_line_bundle(x, &dual, 3 - i);
    }
    if i == 3 {
        return Ok(BigInt::zero());
    }
    if a == 0 {
        return Ok(h_plane(d.b.clone(), i));
    }
    let (e1, e2) = x.split_type().ok_or(Error::MissingSplit)?;
    let total = (0..=a)
        .map(|j| h_plane(BigInt::from(j * e1 + (a - j) * e2) + &d.b, i))
        .sum();
    Ok(total)
}

pub fn line_bundle_cohomology(x: &RuledThreefold, d: &DivisorClass) -> Result<CohomologyVector> {
    Ok(CohomologyVector([
        h_line_bundle(x, d, 0)?,
        h_line_bundle(x, d, 1)?,
        h_line_bundle(x, d, 2)?,
        h_line_bundle(x, d, 3)?,
    ]))
}

pub fn euler_characteristic(x: &RuledThreefold, d: &DivisorClass) -> Result<BigInt> {
    Ok(line_bundle_cohomology(x, d)?.euler_characteristic())
}

/// `h⁰(P², E(twist))` for split `E`.
pub fn bundle_h0(x: &RuledThreefold, twist: i64) -> Result<BigInt> {
    let (e1, e2) = x.split_type().ok_or(Error::MissingSplit)?;
    Ok(h_plane(e1 + twist, 0) + h_plane(e2 + twist, 0))
}
