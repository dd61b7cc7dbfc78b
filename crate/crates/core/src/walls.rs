//! Numerical walls of type `(c₁, c₂)`.
//!
//! A class `ξ = aS + bH` cuts the positive cone along the rays where
//! `ξ·L² = 0`. Writing `L = α(S + tH)`, this is `α²·P(t)` with
//!
//! ```text
//! P(t) = a·t² + (2a·c₁′ + 2b)·t + a(c₁′² − c₂′) + b·c₁′
//! ```
//!
//! so every ray slope is a quadratic surd.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::chow::{in_positive_cone, CycleClass, DivisorClass, RuledThreefold};
use crate::cohomology::h_line_bundle;
use crate::error::{Error, Result};
use crate::exact::{quadratic_roots, QuadraticNumber, Rational};

/// Outcome of testing a class against the wall definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCheck {
    pub xi: DivisorClass,
    /// `ξ + c₁` is divisible by 2.
    pub parity_ok: bool,
    /// `c₂ + (ξ² − c₁²)/4`, when integral.
    pub z_class: Option<CycleClass>,
    pub z_pseudo_effective: bool,
    /// Distinct positive slopes `t = β/α` of the wall, ascending.
    pub rays: Vec<QuadraticNumber>,
    pub is_wall: bool,
}

/// Position of a polarization relative to a wall: the sign of `ξ·L²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Below,
    On,
    Above,
}

impl Side {
    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Side::Below,
            Ordering::Equal => Side::On,
            Ordering::Greater => Side::Above,
        }
    }

    pub fn signum(self) -> i8 {
        match self {
            Side::Below => -1,
            Side::On => 0,
            Side::Above => 1,
        }
    }
}

/// Coefficients `[A, B, C]` of `ξ·(S + tH)² = A·t² + B·t + C`.
pub fn slope_polynomial(x: &RuledThreefold, xi: &DivisorClass) -> [BigInt; 3] {
    let c1 = BigInt::from(x.c1p());
    let c2 = BigInt::from(x.c2p());
    let (a, b) = (&xi.a, &xi.b);
    [
        a.clone(),
        BigInt::from(2) * (a * &c1 + b),
        a * (&c1 * &c1 - c2) + b * &c1,
    ]
}

/// Distinct positive roots of the slope polynomial, ascending.
pub fn positive_rays(x: &RuledThreefold, xi: &DivisorClass) -> Result<Vec<QuadraticNumber>> {
    if xi.is_zero() {
        return Err(Error::ZeroClass);
    }
    let [a, b, c] = slope_polynomial(x, xi);
    let mut rays: Vec<QuadraticNumber> =
        quadratic_roots(&a, &b, &c)?.into_iter().filter(QuadraticNumber::is_positive).collect();
    rays.dedup();
    Ok(rays)
}

/// The largest positive ray, if any.
pub fn top_ray(x: &RuledThreefold, xi: &DivisorClass) -> Result<Option<QuadraticNumber>> {
    Ok(positive_rays(x, xi)?.pop())
}

/// `c₂ + (ξ² − c₁²)/4`, or `None` when the coefficients are not integral.
pub fn z_class(
    x: &RuledThreefold,
    xi: &DivisorClass,
    c1: &DivisorClass,
    c2: &CycleClass,
) -> Option<CycleClass> {
    let diff = &x.intersect(xi, xi) - &x.intersect(c1, c1);
    let four = BigInt::from(4);
    if !diff.z1.is_multiple_of(&four) || !diff.z2.is_multiple_of(&four) {
        return None;
    }
    Some(&CycleClass::new(diff.z1 / &four, diff.z2 / &four) + c2)
}

fn parity_ok(xi: &DivisorClass, c1: &DivisorClass) -> bool {
    let sum = xi + c1;
    sum.a.is_even() && sum.b.is_even()
}

pub fn wall_check(
    x: &RuledThreefold,
    xi: &DivisorClass,
    c1: &DivisorClass,
    c2: &CycleClass,
) -> Result<WallCheck> {
    let rays = positive_rays(x, xi)?;
    let parity_ok = parity_ok(xi, c1);
    let z_class = if parity_ok { z_class(x, xi, c1, c2) } else { None };
    let z_pseudo_effective = z_class.as_ref().is_some_and(|z| x.cycle_pseudo_effective(z));
    let is_wall = parity_ok && z_pseudo_effective && !rays.is_empty();
    Ok(WallCheck { xi: xi.clone(), parity_ok, z_class, z_pseudo_effective, rays, is_wall })
}

/// Exact sign of `ξ·L²`.
pub fn side_of_wall(x: &RuledThreefold, xi: &DivisorClass, l: &DivisorClass) -> Side {
    Side::from_ordering(x.triple(xi, l, l).cmp(&BigInt::zero()))
}

/// Side of the real polarization `S + tH` for a surd slope `t`.
pub fn side_at_slope(x: &RuledThreefold, xi: &DivisorClass, t: &QuadraticNumber) -> Side {
    let [a, b, c] = slope_polynomial(x, xi);
    let value = &(&(t * t) * &QuadraticNumber::from_integer(a))
        + &(&(t * &QuadraticNumber::from_integer(b)) + &QuadraticNumber::from_integer(c));
    Side::from_ordering(value.signum())
}

/// The positive `a` with `ξ·(L₁ + a·L₂)² = 0`, for `ξ·L₁² < 0 < ξ·L₂²`.
pub fn separation_parameter(
    x: &RuledThreefold,
    xi: &DivisorClass,
    l1: &DivisorClass,
    l2: &DivisorClass,
) -> Result<QuadraticNumber> {
    let s1 = side_of_wall(x, xi, l1);
    let s2 = side_of_wall(x, xi, l2);
    if s1 != Side::Below || s2 != Side::Above {
        return Err(Error::NoSeparation(format!(
            "{xi} puts {l1} {s1:?} and {l2} {s2:?}; need Below then Above"
        )));
    }
    let quad = x.triple(xi, l2, l2);
    let lin = BigInt::from(2) * x.triple(xi, l1, l2);
    let cst = x.triple(xi, l1, l1);
    // cst < 0 < quad: exactly one positive root
    let root = quadratic_roots(&quad, &lin, &cst)?
        .into_iter()
        .find(QuadraticNumber::is_positive)
        .expect("opposite-sign end coefficients force a positive root");
    Ok(root)
}

/// Qin's necessary condition for a wall separating `L₁` and `L₂` on a
/// threefold: some `S ∈ {L₁, L₂, L₁ + L₂}` has `(c₁² − 4c₂)·S ≤ ξ²·S < 0`.
pub fn qin_sandwich(
    x: &RuledThreefold,
    xi: &DivisorClass,
    c1: &DivisorClass,
    c2: &CycleClass,
    l1: &DivisorClass,
    l2: &DivisorClass,
) -> bool {
    let bound = &x.intersect(c1, c1) - &(c2 * &BigInt::from(4));
    let xi_sq = x.intersect(xi, xi);
    [l1.clone(), l2.clone(), l1 + l2].iter().any(|s| {
        let v = x.pair(&xi_sq, s);
        v.is_negative() && x.pair(&bound, s) <= v
    })
}

/// An interval of slopes inside the positive cone. `hi = None` is unbounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeWindow {
    pub lo: QuadraticNumber,
    pub lo_closed: bool,
    pub hi: Option<QuadraticNumber>,
    pub hi_closed: bool,
}

impl SlopeWindow {
    /// Negative lower ends are clamped to the open cone boundary at `0`.
    pub fn new(lo: QuadraticNumber, lo_closed: bool, hi: Option<QuadraticNumber>, hi_closed: bool) -> Self {
        if lo.is_positive() {
            Self { lo, lo_closed, hi, hi_closed }
        } else {
            Self { lo: QuadraticNumber::zero(), lo_closed: false, hi, hi_closed }
        }
    }

    pub fn open(lo: QuadraticNumber, hi: QuadraticNumber) -> Self {
        Self::new(lo, false, Some(hi), false)
    }

    pub fn closed(lo: QuadraticNumber, hi: QuadraticNumber) -> Self {
        Self::new(lo, true, Some(hi), true)
    }

    /// The whole positive cone.
    pub fn cone() -> Self {
        Self::new(QuadraticNumber::zero(), false, None, false)
    }

    pub fn contains(&self, t: &QuadraticNumber) -> bool {
        if !t.is_positive() {
            return false;
        }
        let above_lo = match t.cmp(&self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Less => false,
        };
        let below_hi = match &self.hi {
            None => true,
            Some(hi) => match t.cmp(hi) {
                Ordering::Less => true,
                Ordering::Equal => self.hi_closed,
                Ordering::Greater => false,
            },
        };
        above_lo && below_hi
    }

    pub fn is_empty(&self) -> bool {
        match &self.hi {
            None => false,
            Some(hi) => match self.lo.cmp(hi) {
                Ordering::Less => !hi.is_positive(),
                Ordering::Equal => !(self.lo_closed && self.hi_closed && hi.is_positive()),
                Ordering::Greater => true,
            },
        }
    }
}

/// Search box for enumeration: `|a| ≤ a_max`, `|b| ≤ b_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub a_max: i64,
    pub b_max: i64,
}

/// All wall classes with a ray in the closed slope range spanned by `L₁`
/// and `L₂` that also pass [`qin_sandwich`]. Canonical representatives
/// (negative S-coefficient), lexicographic in `(a, b)`.
pub fn enumerate_wall_classes(
    x: &RuledThreefold,
    c1: &DivisorClass,
    c2: &CycleClass,
    l1: &DivisorClass,
    l2: &DivisorClass,
    caps: Caps,
) -> Result<Vec<WallCheck>> {
    for l in [l1, l2] {
        if !in_positive_cone(l) {
            return Err(Error::OutsideCone(l.to_string()));
        }
    }
    let s1 = slope_of(l1);
    let s2 = slope_of(l2);
    let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
    let window = SlopeWindow::closed(lo, hi);
    enumerate_filtered(x, c1, c2, &window, caps, |xi| qin_sandwich(x, xi, c1, c2, l1, l2))
}

/// All wall classes with a ray inside `window`, without the Qin filter.
pub fn enumerate_in_window(
    x: &RuledThreefold,
    c1: &DivisorClass,
    c2: &CycleClass,
    window: &SlopeWindow,
    caps: Caps,
) -> Result<Vec<WallCheck>> {
    enumerate_filtered(x, c1, c2, window, caps, |_| true)
}

pub fn slope_of(l: &DivisorClass) -> QuadraticNumber {
    QuadraticNumber::rational(Rational::new(l.b.clone(), l.a.clone()))
}

/// `g(t) = S·L²/H·L²` at `L = S + tH`; a wall class `−mS + bH` has a ray at
/// `t` exactly when `b = m·g(t)`. Increasing on `t > 0`.
fn ray_ratio(x: &RuledThreefold, t: &QuadraticNumber) -> QuadraticNumber {
    let c1 = QuadraticNumber::from_integer(x.c1p());
    let num = &(&(t * t) + &(&(t * &c1) * &QuadraticNumber::from_integer(2)))
        + &QuadraticNumber::from_integer(x.c1p() * x.c1p() - x.c2p());
    let den = &(t * &QuadraticNumber::from_integer(2)) + &c1;
    if den.is_zero() {
        // t = 0 with c₁′ = 0 forces c₂′ = 0 and g(t) = t/2
        return QuadraticNumber::zero();
    }
    &num / &den
}

struct RowBounds {
    /// Real bounds on `b` with strictness flags.
    lo: (QuadraticNumber, bool),
    hi: Option<(QuadraticNumber, bool)>,
}

impl RowBounds {
    fn integer_range(&self) -> Option<(BigInt, Option<BigInt>)> {
        let lo = if self.lo.1 { self.lo.0.floor() + 1 } else { self.lo.0.ceil() };
        let hi = self.hi.as_ref().map(|(v, strict)| if *strict { v.ceil() - 1 } else { v.floor() });
        match &hi {
            Some(h) if *h < lo => None,
            _ => Some((lo, hi)),
        }
    }
}

struct RowAnalysis<'a> {
    x: &'a RuledThreefold,
    window: &'a SlopeWindow,
    g_lo: QuadraticNumber,
    g_hi: Option<QuadraticNumber>,
    /// `c₁²·[SH] − 4·c₂·[SH]`; pseudo-effectivity needs `2ab ≥ r − a²c₁′`.
    r: BigInt,
}

impl<'a> RowAnalysis<'a> {
    fn new(x: &'a RuledThreefold, c1: &DivisorClass, c2: &CycleClass, window: &'a SlopeWindow) -> Self {
        let g_lo = ray_ratio(x, &window.lo);
        let g_hi = window.hi.as_ref().map(|h| ray_ratio(x, h));
        let r = x.intersect(c1, c1).z1 - BigInt::from(4) * &c2.z1;
        Self { x, window, g_lo, g_hi, r }
    }

    /// Real interval of `b` for row `a ≠ 0` from the slope window and the
    /// `[Z]·SH`-coefficient half of pseudo-effectivity.
    fn bounds(&self, a: i64) -> RowBounds {
        let m = QuadraticNumber::from_integer(a.abs());
        let c1p = self.x.c1p();
        let z_bound = QuadraticNumber::rational(Rational::new(
            BigInt::from(a) * BigInt::from(a) * c1p - &self.r,
            BigInt::from(2 * a.abs()),
        ));
        let lo_strict = !self.window.lo_closed;
        let hi_strict = !self.window.hi_closed;
        if a < 0 {
            // b ∈ m·[g(lo), g(hi)], b ≤ (a²c₁′ − r)/(2m)
            let lo = (&m * &self.g_lo, lo_strict);
            let win_hi = self.g_hi.as_ref().map(|g| (&m * g, hi_strict));
            let hi = match win_hi {
                Some((w, s)) if w < z_bound || (w == z_bound && s) => (w, s),
                _ => (z_bound, false),
            };
            RowBounds { lo, hi: Some(hi) }
        } else {
            // b ∈ −m·[g(hi), g(lo)], b ≥ (r − a²c₁′)/(2m)
            let hi = (-(&m * &self.g_lo), lo_strict);
            let z_lo = -z_bound;
            let lo = match self.g_hi.as_ref().map(|g| (-(&m * g), hi_strict)) {
                Some((w, s)) if w > z_lo || (w == z_lo && s) => (w, s),
                _ => (z_lo, false),
            };
            RowBounds { lo, hi: Some(hi) }
        }
    }

    /// Whether any row with `|a| ≥ m0` can still hold candidates.
    fn rows_beyond_feasible(&self, m0: i64) -> bool {
        let c1 = QuadraticNumber::from_integer(self.x.c1p());
        let k = &(&self.g_lo * &QuadraticNumber::from_integer(2)) - &c1;
        let minus_r = QuadraticNumber::from_integer(-self.r.clone());
        match k.signum() {
            Ordering::Less => true,
            // m²·k ≤ −r is monotone in m
            Ordering::Greater => &QuadraticNumber::from_integer(m0 * m0) * &k <= minus_r,
            Ordering::Equal => {
                if minus_r.signum() == Ordering::Less {
                    return false;
                }
                if self.window.lo_closed {
                    return true;
                }
                // the row interval is (m·c₁′/2, m·c₁′/2 − r/(2m)], empty once m > −r
                let last = (-self.r.clone()).to_i64().unwrap_or(i64::MAX).max(m0);
                (m0..=last).any(|m| self.bounds(-m).integer_range().is_some())
            }
        }
    }
}

fn enumerate_filtered<F>(
    x: &RuledThreefold,
    c1: &DivisorClass,
    c2: &CycleClass,
    window: &SlopeWindow,
    caps: Caps,
    extra: F,
) -> Result<Vec<WallCheck>>
where
    F: Fn(&DivisorClass) -> bool + Sync,
{
    if window.is_empty() {
        return Ok(Vec::new());
    }
    let rows = RowAnalysis::new(x, c1, c2, window);
    let cap = BigInt::from(caps.b_max);
    let row_ids: Vec<i64> = (-caps.a_max..=caps.a_max).filter(|a| *a != 0).collect();
    let per_row: Vec<Result<Vec<WallCheck>>> = row_ids
        .par_iter()
        .map(|&a| {
            let Some((lo, hi)) = rows.bounds(a).integer_range() else {
                return Ok(Vec::new());
            };
            let hi = hi.expect("rows are bounded above");
            if lo < -&cap || hi > cap {
                return Err(Error::Truncation {
                    row: a,
                    detail: format!("b may range over [{lo}, {hi}], beyond the cap |b| <= {}", caps.b_max),
                });
            }
            let (lo, hi) = (lo.to_i64().unwrap(), hi.to_i64().unwrap());
            let mut found = Vec::new();
            for b in lo..=hi {
                let xi = DivisorClass::new(a, b);
                let check = wall_check(x, &xi, c1, c2)?;
                if check.is_wall && check.rays.iter().any(|t| window.contains(t)) && extra(&xi) {
                    found.push(check);
                }
            }
            Ok(found)
        })
        .collect();
    let mut walls = Vec::new();
    for row in per_row {
        walls.extend(row?);
    }
    let next = caps.a_max + 1;
    if rows.rows_beyond_feasible(next) {
        return Err(Error::Truncation {
            row: -next,
            detail: format!("rows with |a| >= {next} may still hold wall classes"),
        });
    }
    let mut canonical: Vec<WallCheck> = walls
        .into_iter()
        .map(|w| if w.xi.a.is_positive() { WallCheck { xi: -&w.xi, ..w } } else { w })
        .collect();
    canonical.sort_by(|p, q| p.xi.cmp(&q.xi));
    canonical.dedup_by(|p, q| p.xi == q.xi);
    Ok(canonical)
}

/// Numerical side of the condition needed to build extensions along a wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CConditionReport {
    pub h2_xi: BigInt,
    /// Degree of `∧²N_{Z/X} ⊗ O(ξ)` on `Z = D₁ ∩ D₂`.
    pub normal_twist_degree: BigInt,
    pub h0_on_z: BigInt,
    pub satisfied: bool,
    /// `Z` was not the section `S ∩ H`; `h⁰` assumes `Z ≅ P¹` anyway.
    pub genus_zero_assumed: bool,
}

pub fn check_c_condition(
    x: &RuledThreefold,
    xi: &DivisorClass,
    c1: &DivisorClass,
    c2: &CycleClass,
    factors: (&DivisorClass, &DivisorClass),
) -> Result<CConditionReport> {
    let (d1, d2) = factors;
    let product = x.intersect(d1, d2);
    match z_class(x, xi, c1, c2) {
        Some(z) if z == product => {}
        other => {
            return Err(Error::FactorMismatch {
                product: product.to_string(),
                expected: other.map_or_else(|| "non-integral".to_string(), |z| z.to_string()),
            })
        }
    }
    let h2_xi = h_line_bundle(x, xi, 2)?;
    let twist = &(d1 + d2) + xi;
    let normal_twist_degree = x.triple(&twist, d1, d2);
    let h0_on_z = if normal_twist_degree.is_negative() {
        BigInt::zero()
    } else {
        &normal_twist_degree + 1
    };
    let satisfied = h2_xi.is_zero() && h0_on_z.is_positive();
    let section = |p: &DivisorClass, q: &DivisorClass| *p == DivisorClass::s() && *q == DivisorClass::h();
    let genus_zero_assumed = !(section(d1, d2) || section(d2, d1));
    Ok(CConditionReport { h2_xi, normal_twist_degree, h0_on_z, satisfied, genus_zero_assumed })
}
