use num_bigint::BigInt;

use crate::chow::{in_positive_cone, DivisorClass, RuledThreefold};
use crate::error::{Error, Result};
use crate::walls::{side_of_wall, Side};

use super::{bn_range, component_dimension, xi_l, ChernFamily, Variant};

/// Sign of `ξ_l·L²` for `l = b − 1, b, b + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WallSides {
    pub xi_prev: Side,
    pub xi_b: Side,
    pub xi_next: Side,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChamberRegion {
    /// On `W^{ξ_b}`: the bundles of `E_{ξ_b}` are strictly semistable.
    Face,
    /// The neighbouring chamber `𝒞′_b`, where `M_{𝒞′_b} = M_{𝒞_b} \ E_{ξ_b}`.
    Complement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Empty,
    NonemptyWithComponent {
        /// Absent when the split type is unknown.
        dim_computed: Option<BigInt>,
        dim_stated: Option<BigInt>,
    },
    Decomposition { region: ChamberRegion },
    OutsideCoverage,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Empty => "empty",
            Verdict::NonemptyWithComponent { .. } => "nonempty_with_component",
            Verdict::Decomposition { .. } => "decomposition",
            Verdict::OutsideCoverage => "outside_coverage",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliReport {
    pub polarization: DivisorClass,
    pub sides: WallSides,
    pub verdict: Verdict,
    pub bn_k_max: Option<BigInt>,
    pub certified_ample: bool,
    pub notes: Vec<String>,
}

pub fn classify_moduli(x: &RuledThreefold, fam: &ChernFamily, l: &DivisorClass) -> Result<ModuliReport> {
    if !in_positive_cone(l) {
        return Err(Error::OutsideCone(l.to_string()));
    }
    let b = fam.b;
    let sides = WallSides {
        xi_prev: side_of_wall(x, &xi_l(b - 1), l),
        xi_b: side_of_wall(x, &xi_l(b), l),
        xi_next: side_of_wall(x, &xi_l(b + 1), l),
    };
    let certified_ample = x.certified_ample(l);
    let mut notes = Vec::new();
    if !certified_ample {
        notes.push("cone-model only: not certified ample".to_string());
    }
    let mut bn_k_max = None;
    let verdict = match fam.variant {
        Variant::A => {
            if sides.xi_next != Side::Above {
                notes.push(format!("on or below the wall of {}", xi_l(b + 1)));
                Verdict::Empty
            } else {
                match sides.xi_b {
                    Side::Below => {
                        bn_k_max = Some(bn_range(b));
                        notes.push(format!("M(C_b) = M(C'_b) ⊔ E_ξ for ξ = {}", xi_l(b)));
                        match component_dimension(x, fam) {
                            Ok(d) => Verdict::NonemptyWithComponent {
                                dim_computed: Some(d.dim_computed),
                                dim_stated: Some(d.dim_stated),
                            },
                            Err(Error::MissingSplit) => {
                                notes.push("component dimension needs the split type".to_string());
                                Verdict::NonemptyWithComponent { dim_computed: None, dim_stated: None }
                            }
                            Err(e) => return Err(e),
                        }
                    }
                    Side::On => {
                        notes.push(format!("bundles in E_ξ for ξ = {} are strictly semistable here", xi_l(b)));
                        Verdict::Decomposition { region: ChamberRegion::Face }
                    }
                    Side::Above if sides.xi_prev == Side::Below => {
                        notes.push(format!("M(C'_b) = M(C_b) minus E_ξ for ξ = {}", xi_l(b)));
                        Verdict::Decomposition { region: ChamberRegion::Complement }
                    }
                    Side::Above => Verdict::OutsideCoverage,
                }
            }
        }
        Variant::B => {
            if sides.xi_b != Side::Above {
                notes.push(format!("on or below the wall of {}", xi_l(b)));
                Verdict::Empty
            } else {
                Verdict::OutsideCoverage
            }
        }
    };
    Ok(ModuliReport { polarization: l.clone(), sides, verdict, bn_k_max, certified_ample, notes })
}
