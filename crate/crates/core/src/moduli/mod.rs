//! The `ξ_b` families of rank-two bundles with `c₁ = S` and the numerical
//! statements attached to them.

mod classify;
mod verify;

pub use classify::{classify_moduli, ChamberRegion, ModuliReport, Verdict, WallSides};
pub use verify::{
    decomposition_report, verify_no_intermediate_walls, verify_xi_b_wall, CaseCheck, CaseFamily,
    DecompositionReport, Exclusion, NoIntermediateWallsReport, ScalarMultiple, XiBWallReport,
};

use num_bigint::BigInt;

use crate::chow::{CycleClass, DivisorClass, RuledThreefold};
use crate::cohomology::{bundle_h0, h_line_bundle, h_plane};
use crate::error::{Error, Result};
use crate::exact::QuadraticNumber;
use crate::walls::{top_ray, SlopeWindow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `c₂ = (b+1)SH − b²H²`
    A,
    /// `c₂ = bSH − b²H²`
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernFamily {
    pub b: i64,
    pub variant: Variant,
    pub c1: DivisorClass,
    pub c2: CycleClass,
}

impl ChernFamily {
    pub fn new(x: &RuledThreefold, b: i64, variant: Variant) -> Result<Self> {
        if b < x.c1p() + 1 {
            return Err(Error::InvalidFamily(format!("b = {b} must be at least c1' + 1 = {}", x.c1p() + 1)));
        }
        let z1 = match variant {
            Variant::A => b + 1,
            Variant::B => b,
        };
        let c2 = CycleClass::new(z1, -BigInt::from(b) * b);
        Ok(Self { b, variant, c1: DivisorClass::s(), c2 })
    }

    pub fn xi(&self, l: i64) -> DivisorClass {
        xi_l(l)
    }

    fn require_a(&self) -> Result<()> {
        match self.variant {
            Variant::A => Ok(()),
            Variant::B => Err(Error::InvalidFamily("operation is stated for variant A only".into())),
        }
    }
}

/// `ξ_l = −S + 2lH`.
pub fn xi_l(l: i64) -> DivisorClass {
    DivisorClass::new(-1, 2 * l)
}

/// Largest positive ray of `ξ_l`, if any. `ξ_l` has at most one for
/// `l ≥ c₁′`.
pub fn xi_ray(x: &RuledThreefold, l: i64) -> Option<QuadraticNumber> {
    top_ray(x, &xi_l(l)).expect("ξ_l is nonzero")
}

/// `(ray ξ_{b−1} or 0, ray ξ_{b+1})`: the two chambers on either side of
/// `W^{ξ_b}` and nothing else.
pub(crate) fn family_window(x: &RuledThreefold, b: i64, hi_closed: bool) -> SlopeWindow {
    let lo = xi_ray(x, b - 1).unwrap_or_else(QuadraticNumber::zero);
    let hi = xi_ray(x, b + 1).expect("ξ_{b+1} has a positive ray");
    SlopeWindow::new(lo, false, Some(hi), hi_closed)
}

/// The cohomology table behind `ext¹(I_Z(S − bH), O_X(bH))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ext1Table {
    /// `h²O_X(−2bH + K_X)`
    pub h2_minus_2b: BigInt,
    /// `h³O_X(−(2b+1)H + K_X)`
    pub h3_minus_2b_plus_1: BigInt,
    /// `h³O_X(−2bH + K_X)`
    pub h3_minus_2b: BigInt,
    /// `h²O_X(S − (2b+1)H + K_X)`
    pub h2_s_minus_2b_plus_1: BigInt,
    /// `h³O_X(S − (2b+1)H + K_X)`
    pub h3_s_minus_2b_plus_1: BigInt,
    /// `h³O_X(S − 2bH + K_X)`
    pub h3_s_minus_2b: BigInt,
    pub ext1_computed: BigInt,
    /// The constant `2b + 1` printed alongside the table.
    pub ext1_stated: BigInt,
}

impl Ext1Table {
    pub fn vanishing_entries(&self) -> [&BigInt; 4] {
        [&self.h2_minus_2b, &self.h2_s_minus_2b_plus_1, &self.h3_s_minus_2b_plus_1, &self.h3_s_minus_2b]
    }
}

pub fn ext1_table(x: &RuledThreefold, b: i64) -> Result<Ext1Table> {
    if b < 1 {
        return Err(Error::InvalidFamily(format!("ext1 table needs b >= 1, got {b}")));
    }
    let k = x.canonical_divisor();
    let twist = |a: i64, h: i64| &DivisorClass::new(a, h) + &k;
    let h3_minus_2b_plus_1 = h_line_bundle(x, &twist(0, -(2 * b + 1)), 3)?;
    let h3_minus_2b = h_line_bundle(x, &twist(0, -2 * b), 3)?;
    Ok(Ext1Table {
        h2_minus_2b: h_line_bundle(x, &twist(0, -2 * b), 2)?,
        ext1_computed: &h3_minus_2b_plus_1 - &h3_minus_2b,
        h3_minus_2b_plus_1,
        h3_minus_2b,
        h2_s_minus_2b_plus_1: h_line_bundle(x, &twist(1, -(2 * b + 1)), 2)?,
        h3_s_minus_2b_plus_1: h_line_bundle(x, &twist(1, -(2 * b + 1)), 3)?,
        h3_s_minus_2b: h_line_bundle(x, &twist(1, -2 * b), 3)?,
        ext1_stated: BigInt::from(2 * b + 1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDimension {
    /// `h⁰E − h⁰E(−1) − 1`, the dimension of the family of `Z`.
    pub dim_cycles: BigInt,
    pub dim_computed: BigInt,
    pub dim_stated: BigInt,
}

pub fn component_dimension(x: &RuledThreefold, fam: &ChernFamily) -> Result<ComponentDimension> {
    fam.require_a()?;
    let dim_cycles = bundle_h0(x, 0)? - bundle_h0(x, -1)? - 1;
    let ext = ext1_table(x, fam.b)?;
    Ok(ComponentDimension {
        dim_computed: &ext.ext1_computed + &dim_cycles - 1,
        dim_stated: BigInt::from(2 * fam.b) + &dim_cycles,
        dim_cycles,
    })
}

/// `C(b+2, 2) = h⁰O_X(bH)`.
pub fn bn_range(b: i64) -> BigInt {
    h_plane(b, 0)
}
