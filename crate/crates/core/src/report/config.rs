//! TOML instance files.
//!
//! ```toml
//! polarizations = [[1, 3], [1, 5], [1, 9]]
//!
//! [base]
//! c1p = 0
//! c2p = 0
//! split = [0, 0]
//!
//! [family]
//! b = 1
//! variant = "A"
//!
//! [caps]
//! a_max = 10
//! b_max = 20
//!
//! [outputs]
//! json_path = "report.json"
//! svg_path = "cone.svg"
//! ```

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::chow::{in_positive_cone, DivisorClass, RuledThreefold};
use crate::moduli::{ChernFamily, Variant};
use crate::walls::Caps;

use super::ReportError;

pub const DEFAULT_A_MAX: i64 = 10;
pub const DEFAULT_T_MAX: i64 = 10;
pub const DEFAULT_ALPHA_MAX: i64 = 4;

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    #[serde(default)]
    pub polarizations: Vec<[i64; 2]>,
    pub base: BaseConfig,
    pub family: FamilyConfig,
    #[serde(default)]
    pub caps: CapsConfig,
    #[serde(default)]
    pub outputs: OutputsConfig,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct BaseConfig {
    pub c1p: i64,
    pub c2p: i64,
    pub split: Option<[i64; 2]>,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
pub enum VariantName {
    A,
    B,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FamilyConfig {
    pub b: i64,
    pub variant: VariantName,
}

#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CapsConfig {
    pub a_max: Option<i64>,
    /// Defaults to `20·b`.
    pub b_max: Option<i64>,
    pub t_max: Option<i64>,
    pub alpha_max: Option<i64>,
}

#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct OutputsConfig {
    pub json_path: Option<PathBuf>,
    pub svg_path: Option<PathBuf>,
}

/// A validated instance, ready to run.
#[derive(Clone, Debug)]
pub struct Instance {
    pub x: RuledThreefold,
    pub family: ChernFamily,
    pub polarizations: Vec<DivisorClass>,
    pub caps: Caps,
    pub t_max: i64,
    pub alpha_max: i64,
    pub json_path: Option<PathBuf>,
    pub svg_path: Option<PathBuf>,
}

impl InstanceConfig {
    pub fn parse(text: &str) -> Result<Self, ReportError> {
        toml::from_str(text).map_err(|e| ReportError::Validation(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, ReportError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ReportError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<Instance, ReportError> {
        let split = self.base.split.map(|[e1, e2]| (e1, e2));
        let x = RuledThreefold::with_split(self.base.c1p, self.base.c2p, split)?;
        let variant = match self.family.variant {
            VariantName::A => Variant::A,
            VariantName::B => Variant::B,
        };
        let family = ChernFamily::new(&x, self.family.b, variant)?;
        let polarizations = self
            .polarizations
            .iter()
            .map(|[a, b]| {
                let l = DivisorClass::new(*a, *b);
                if in_positive_cone(&l) {
                    Ok(l)
                } else {
                    Err(ReportError::Validation(format!("polarization {l} is not in the positive cone")))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let caps = Caps {
            a_max: self.caps.a_max.unwrap_or(DEFAULT_A_MAX),
            b_max: self.caps.b_max.unwrap_or(20 * self.family.b),
        };
        let t_max = self.caps.t_max.unwrap_or(DEFAULT_T_MAX);
        let alpha_max = self.caps.alpha_max.unwrap_or(DEFAULT_ALPHA_MAX);
        if caps.a_max < 0 || caps.b_max < 1 || t_max < 1 || alpha_max < 1 {
            return Err(ReportError::Validation(format!(
                "caps must satisfy a_max >= 0, b_max, t_max, alpha_max >= 1; got a_max={}, b_max={}, t_max={t_max}, alpha_max={alpha_max}",
                caps.a_max, caps.b_max
            )));
        }
        Ok(Instance {
            x,
            family,
            polarizations,
            caps,
            t_max,
            alpha_max,
            json_path: self.outputs.json_path.clone(),
            svg_path: self.outputs.svg_path.clone(),
        })
    }
}

/// Parses `a=10,b=40` (either key may be omitted).
pub fn parse_caps_override(spec: &str, caps: Caps) -> Result<Caps, ReportError> {
    let mut out = caps;
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| ReportError::Validation(format!("caps entry `{part}` is not key=value")))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| ReportError::Validation(format!("caps value `{value}` is not an integer")))?;
        match key.trim() {
            "a" | "a_max" => out.a_max = value,
            "b" | "b_max" => out.b_max = value,
            other => return Err(ReportError::Validation(format!("unknown caps key `{other}`"))),
        }
    }
    if out.a_max < 0 || out.b_max < 1 {
        return Err(ReportError::Validation("caps must satisfy a >= 0 and b >= 1".into()));
    }
    Ok(out)
}
