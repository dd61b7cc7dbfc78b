use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chambers::{build_in_window, ChamberDecomposition};
use crate::chow::{DivisorClass, RuledThreefold};
use crate::cohomology::h_line_bundle;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::walls::{
    check_c_condition, enumerate_in_window, positive_rays, side_at_slope, wall_check, CConditionReport, Caps,
    Side, SlopeWindow, WallCheck,
};

use super::{component_dimension, family_window, xi_l, xi_ray, ComponentDimension, ChernFamily, Variant};

/// `[Z]` of `t·ξ_b`, kept rational so even `t` (which breaks parity) can
/// still be tested against pseudo-effectivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMultiple {
    pub t: i64,
    pub z1: Rational,
    pub z2: Rational,
    pub pseudo_effective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiBWallReport {
    pub wall: WallCheck,
    pub h2_xi: BigInt,
    /// `(S, H)` factorization of `Z = S ∩ H`; variant A only.
    pub c_condition: Option<CConditionReport>,
    /// The same test for `−ξ_b`, which must fail.
    pub negative_c_condition: Option<CConditionReport>,
    /// Variant B has `[Z] = 0`, so the `h⁰` clause does not apply.
    pub h0_clause_applicable: bool,
    pub multiples: Vec<ScalarMultiple>,
    pub only_unit_multiples: bool,
    pub notes: Vec<String>,
}

pub fn verify_xi_b_wall(x: &RuledThreefold, fam: &ChernFamily, t_max: i64) -> Result<XiBWallReport> {
    let xi = xi_l(fam.b);
    let wall = wall_check(x, &xi, &fam.c1, &fam.c2)?;
    let h2_xi = h_line_bundle(x, &xi, 2)?;
    let mut notes = Vec::new();
    let factors = (&DivisorClass::s(), &DivisorClass::h());
    let (c_condition, negative_c_condition, h0_clause_applicable) = match fam.variant {
        Variant::A => {
            let pos = check_c_condition(x, &xi, &fam.c1, &fam.c2, factors)?;
            let neg = match check_c_condition(x, &-&xi, &fam.c1, &fam.c2, factors) {
                Ok(r) => Some(r),
                Err(Error::MissingSplit) => {
                    notes.push("h2 of -xi_b needs the split type; skipped".to_string());
                    None
                }
                Err(e) => return Err(e),
            };
            (Some(pos), neg, true)
        }
        Variant::B => (None, None, false),
    };
    let four = Rational::from_integer(BigInt::from(4));
    let c1_sq = x.intersect(&fam.c1, &fam.c1);
    let multiples: Vec<ScalarMultiple> = (-t_max..=t_max)
        .filter(|t| *t != 0)
        .map(|t| {
            let eta = xi.scale(t);
            let diff = &x.intersect(&eta, &eta) - &c1_sq;
            let z1 = Rational::from_integer(diff.z1) / &four + Rational::from_integer(fam.c2.z1.clone());
            let z2 = Rational::from_integer(diff.z2) / &four + Rational::from_integer(fam.c2.z2.clone());
            let c1p = Rational::from_integer(BigInt::from(x.c1p()));
            let pseudo_effective = !z1.is_negative() && !(&c1p * &z1 + &z2).is_negative();
            ScalarMultiple { t, z1, z2, pseudo_effective }
        })
        .collect();
    let survivors: Vec<i64> = multiples.iter().filter(|m| m.pseudo_effective).map(|m| m.t).collect();
    let only_unit_multiples = survivors == [-1, 1];
    Ok(XiBWallReport {
        wall,
        h2_xi,
        c_condition,
        negative_c_condition,
        h0_clause_applicable,
        multiples,
        only_unit_multiples,
        notes,
    })
}

/// The structured families of candidate classes examined around `W^{ξ_b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseFamily {
    /// `−S + 2pH`, `p > b + 1`
    Case1 { p: i64 },
    /// `−S + 2pH`, `0 ≤ p < b`
    Case2 { p: i64 },
    /// `−(2p+1)S + 2bH`, `p ≥ 1`
    Case3 { p: i64 },
    /// `−(2a+1)S + 2pH`, `a ≥ 1`, `0 < p < b`
    Case4 { a: i64, p: i64 },
    /// `−(2a+1)S + 2pH`, `a ≥ 1`, `(2a+1)b < p < (2a+1)(b+1)`
    Case5 { a: i64, p: i64 },
}

impl CaseFamily {
    pub fn number(&self) -> u8 {
        match self {
            CaseFamily::Case1 { .. } => 1,
            CaseFamily::Case2 { .. } => 2,
            CaseFamily::Case3 { .. } => 3,
            CaseFamily::Case4 { .. } => 4,
            CaseFamily::Case5 { .. } => 5,
        }
    }

    fn class(&self, b: i64) -> DivisorClass {
        match *self {
            CaseFamily::Case1 { p } | CaseFamily::Case2 { p } => DivisorClass::new(-1, 2 * p),
            CaseFamily::Case3 { p } => DivisorClass::new(-(2 * p + 1), 2 * b),
            CaseFamily::Case4 { a, p } | CaseFamily::Case5 { a, p } => DivisorClass::new(-(2 * a + 1), 2 * p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exclusion {
    /// Every ray lies strictly under the wall of the given class.
    UnderWall { wall: DivisorClass },
    /// Every ray lies strictly above the wall of the given class.
    AboveWall { wall: DivisorClass },
    /// `[Z]·SH < 0`, together with the bound `a(a+1)(c₁′ − 4b) + 1`.
    NotPseudoEffective { z1: BigInt, stated_bound: BigInt },
    NoPositiveRay,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseCheck {
    pub family: CaseFamily,
    pub xi: DivisorClass,
    pub reason: Exclusion,
    pub excluded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoIntermediateWallsReport {
    /// Open window between the rays of `ξ_b` and `ξ_{b+1}`.
    pub upper_window: SlopeWindow,
    pub upper_walls: Vec<WallCheck>,
    /// Open window between the ray of `ξ_{b−1}` (or the cone edge) and `ξ_b`.
    pub lower_window: SlopeWindow,
    pub lower_walls: Vec<WallCheck>,
    pub cases: Vec<CaseCheck>,
    pub passed: bool,
    pub first_counterexample: Option<String>,
}

fn side_case(x: &RuledThreefold, family: CaseFamily, xi: DivisorClass, wall: DivisorClass, want: Side) -> Result<CaseCheck> {
    let rays = positive_rays(x, &xi)?;
    if rays.is_empty() {
        return Ok(CaseCheck { family, xi, reason: Exclusion::NoPositiveRay, excluded: true });
    }
    let excluded = rays.iter().all(|t| side_at_slope(x, &wall, t) == want);
    let reason = match want {
        Side::Below => Exclusion::UnderWall { wall },
        _ => Exclusion::AboveWall { wall },
    };
    Ok(CaseCheck { family, xi, reason, excluded })
}

fn case_checks(x: &RuledThreefold, fam: &ChernFamily, caps: Caps) -> Result<Vec<CaseCheck>> {
    let b = fam.b;
    let c1p = x.c1p();
    let odd_max = (caps.a_max - 1) / 2;
    let mut out = Vec::new();
    for p in (b + 2)..=(caps.b_max / 2).max(b + 2) {
        let f = CaseFamily::Case1 { p };
        out.push(side_case(x, f, f.class(b), xi_l(b + 1), Side::Below)?);
    }
    for p in 0..b {
        let f = CaseFamily::Case2 { p };
        out.push(side_case(x, f, f.class(b), xi_l(b), Side::Above)?);
    }
    for p in 1..=odd_max {
        let f = CaseFamily::Case3 { p };
        out.push(side_case(x, f, f.class(b), xi_l(b), Side::Above)?);
    }
    for a in 1..=odd_max {
        for p in 1..b {
            let f = CaseFamily::Case4 { a, p };
            out.push(side_case(x, f, f.class(b), xi_l(b), Side::Above)?);
        }
    }
    for a in 1..=odd_max {
        for p in ((2 * a + 1) * b + 1)..((2 * a + 1) * (b + 1)) {
            let f = CaseFamily::Case5 { a, p };
            let xi = f.class(b);
            let check = wall_check(x, &xi, &fam.c1, &fam.c2)?;
            let z1 = check.z_class.as_ref().map_or_else(BigInt::zero, |z| z.z1.clone());
            let stated_bound = BigInt::from(a * (a + 1) * (c1p - 4 * b) + 1);
            let excluded =
                check.z_class.is_some() && !check.z_pseudo_effective && z1.is_negative() && stated_bound.is_negative();
            out.push(CaseCheck { family: f, xi, reason: Exclusion::NotPseudoEffective { z1, stated_bound }, excluded });
        }
    }
    Ok(out)
}

pub fn verify_no_intermediate_walls(
    x: &RuledThreefold,
    fam: &ChernFamily,
    caps: Caps,
) -> Result<NoIntermediateWallsReport> {
    fam.require_a()?;
    let b = fam.b;
    let ray_b = xi_ray(x, b).expect("ξ_b has a positive ray");
    let ray_next = xi_ray(x, b + 1).expect("ξ_{b+1} has a positive ray");
    let ray_prev = xi_ray(x, b - 1).unwrap_or_else(crate::exact::QuadraticNumber::zero);
    let upper_window = SlopeWindow::open(ray_b.clone(), ray_next);
    let lower_window = SlopeWindow::open(ray_prev, ray_b);
    let upper_walls = enumerate_in_window(x, &fam.c1, &fam.c2, &upper_window, caps)?;
    let lower_walls = enumerate_in_window(x, &fam.c1, &fam.c2, &lower_window, caps)?;
    let cases = case_checks(x, fam, caps)?;
    let first_counterexample = upper_walls
        .first()
        .map(|w| format!("wall {} between xi_b and xi_(b+1)", w.xi))
        .or_else(|| lower_walls.first().map(|w| format!("wall {} between xi_(b-1) and xi_b", w.xi)))
        .or_else(|| {
            cases
                .iter()
                .find(|c| !c.excluded)
                .map(|c| format!("case {} class {} not excluded", c.family.number(), c.xi))
        });
    Ok(NoIntermediateWallsReport {
        upper_window,
        upper_walls,
        lower_window,
        lower_walls,
        passed: first_counterexample.is_none(),
        cases,
        first_counterexample,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub decomposition: ChamberDecomposition,
    pub chamber_b: Option<usize>,
    pub chamber_prime: Option<usize>,
    pub l: Option<DivisorClass>,
    pub l_prime: Option<DivisorClass>,
    /// `ξ_b·L′²`; positive means `O(bH)` destabilizes at `L′`.
    pub certificate: Option<BigInt>,
    pub e_xi_dimension: Option<ComponentDimension>,
    pub statement: String,
}

/// Decomposition of `(ray ξ_{b−1}, ray ξ_{b+1}]` by the walls found there,
/// with integer witnesses on both sides of `W^{ξ_b}`.
pub fn decomposition_report(
    x: &RuledThreefold,
    fam: &ChernFamily,
    caps: Caps,
    alpha_max: i64,
) -> Result<DecompositionReport> {
    fam.require_a()?;
    let b = fam.b;
    let window = family_window(x, b, true);
    let walls = enumerate_in_window(x, &fam.c1, &fam.c2, &window, caps)?;
    let decomposition = build_in_window(&walls, window)?;
    let ray_b = xi_ray(x, b).expect("ξ_b has a positive ray");
    let ray_next = xi_ray(x, b + 1).expect("ξ_{b+1} has a positive ray");
    let chamber_b = decomposition.sector_between(&ray_b, Some(&ray_next));
    let chamber_prime = decomposition.sector_between(&decomposition.window.lo.clone(), Some(&ray_b));
    let witness = |idx: Option<usize>| -> Result<Option<DivisorClass>> {
        match idx {
            Some(i) => decomposition.integer_polarization_in(i, alpha_max),
            None => Ok(None),
        }
    };
    let l = witness(chamber_b)?;
    let l_prime = witness(chamber_prime)?;
    let certificate = l_prime.as_ref().map(|lp| x.triple(&xi_l(b), lp, lp));
    let e_xi_dimension = match component_dimension(x, fam) {
        Ok(d) => Some(d),
        Err(Error::MissingSplit) => None,
        Err(e) => return Err(e),
    };
    let statement = format!("M(C_b) = M(C'_b) ⊔ E_ξ(c1, c2) with ξ = {}", xi_l(b));
    Ok(DecompositionReport {
        decomposition,
        chamber_b,
        chamber_prime,
        l,
        l_prime,
        certificate,
        e_xi_dimension,
        statement,
    })
}
