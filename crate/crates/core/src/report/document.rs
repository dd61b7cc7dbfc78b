//! The JSON report. Keys are emitted in sorted order, so identical
//! instances give identical bytes.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::chambers::{build_in_window, ChamberDecomposition, Location};
use crate::chow::{CycleClass, DivisorClass};
use crate::exact::{QuadraticNumber, Rational};
use crate::moduli::{
    classify_moduli, component_dimension, decomposition_report, ext1_table, family_window, verify_no_intermediate_walls,
    verify_xi_b_wall, xi_l, CaseFamily, ChamberRegion, Exclusion, ModuliReport, Variant, Verdict,
};
use crate::walls::{enumerate_in_window, CConditionReport, Side, SlopeWindow, WallCheck};
use crate::error::Error;

use super::config::Instance;
use super::ReportError;

pub const SCHEMA_VERSION: u32 = 1;
pub const DECIMAL_PLACES: u32 = 6;

fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

fn rational(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn exact(t: &QuadraticNumber) -> Value {
    json!({
        "p_num": t.p().numer().to_string(),
        "p_den": t.p().denom().to_string(),
        "q_num": t.q().numer().to_string(),
        "q_den": t.q().denom().to_string(),
        "d": t.d().to_string(),
        "text": t.to_string(),
        "decimal": t.to_decimal(DECIMAL_PLACES),
    })
}

fn divisor(d: &DivisorClass) -> Value {
    json!([int(&d.a), int(&d.b)])
}

fn cycle(z: &CycleClass) -> Value {
    json!([int(&z.z1), int(&z.z2)])
}

/// `ξ_l` for classes of the form `−S + 2lH`, otherwise the class itself.
pub fn wall_name(xi: &DivisorClass) -> String {
    let two = BigInt::from(2);
    if xi.a == BigInt::from(-1) && (&xi.b % &two) == BigInt::from(0) {
        format!("xi_{}", &xi.b / &two)
    } else {
        xi.to_string()
    }
}

fn wall(w: &WallCheck) -> Value {
    json!({
        "name": wall_name(&w.xi),
        "xi": divisor(&w.xi),
        "parity_ok": w.parity_ok,
        "z_class": w.z_class.as_ref().map(cycle),
        "z_pseudo_effective": w.z_pseudo_effective,
        "rays": w.rays.iter().map(exact).collect::<Vec<_>>(),
        "is_wall": w.is_wall,
        "admissibility": "numerical",
    })
}

fn window(w: &SlopeWindow) -> Value {
    json!({
        "lo": exact(&w.lo),
        "lo_closed": w.lo_closed,
        "hi": w.hi.as_ref().map(exact),
        "hi_closed": w.hi_closed,
    })
}

fn side(s: Side) -> Value {
    json!(s.signum())
}

fn location(l: Location) -> Value {
    match l {
        Location::OnWall(i) => json!({ "kind": "on_wall", "index": i }),
        Location::InSector(i) => json!({ "kind": "in_sector", "index": i }),
        Location::OutsideWindow => json!({ "kind": "outside_window" }),
    }
}

pub fn decomposition(dec: &ChamberDecomposition, alpha_max: i64) -> Result<Value, ReportError> {
    let rays: Vec<Value> = dec
        .rays
        .iter()
        .map(|r| {
            json!({
                "slope": exact(&r.slope),
                "walls": r.walls.iter().map(|w| json!(wall_name(&w.xi))).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut sectors = Vec::new();
    for (i, s) in dec.sectors.iter().enumerate() {
        let witness = dec.integer_polarization_in(i, alpha_max)?;
        sectors.push(json!({
            "lo": exact(&s.lo),
            "hi": s.hi.as_ref().map(exact),
            "lower_ray": s.lower_ray,
            "upper_ray": s.upper_ray,
            "integer_polarization": witness.as_ref().map(divisor),
        }));
    }
    Ok(json!({ "window": window(&dec.window), "rays": rays, "sectors": sectors }))
}

fn verdict(v: &Verdict) -> Value {
    match v {
        Verdict::NonemptyWithComponent { dim_computed, dim_stated } => json!({
            "kind": v.label(),
            "dim_computed": dim_computed.as_ref().map(int),
            "dim_stated": dim_stated.as_ref().map(int),
        }),
        Verdict::Decomposition { region } => json!({
            "kind": v.label(),
            "region": match region {
                ChamberRegion::Face => "wall_face",
                ChamberRegion::Complement => "complement_chamber",
            },
        }),
        _ => json!({ "kind": v.label() }),
    }
}

fn moduli_report(r: &ModuliReport, loc: Location) -> Value {
    json!({
        "polarization": divisor(&r.polarization),
        "location": location(loc),
        "sides": {
            "xi_prev": side(r.sides.xi_prev),
            "xi_b": side(r.sides.xi_b),
            "xi_next": side(r.sides.xi_next),
        },
        "verdict": verdict(&r.verdict),
        "bn_k_max": r.bn_k_max.as_ref().map(int),
        "certified_ample": r.certified_ample,
        "notes": r.notes,
    })
}

fn c_condition(c: &CConditionReport) -> Value {
    json!({
        "h2_xi": int(&c.h2_xi),
        "normal_twist_degree": int(&c.normal_twist_degree),
        "h0_on_z": int(&c.h0_on_z),
        "satisfied": c.satisfied,
        "genus_zero_assumed": c.genus_zero_assumed,
    })
}

fn exclusion(e: &Exclusion) -> Value {
    match e {
        Exclusion::UnderWall { wall } => json!({ "kind": "under_wall", "wall": wall_name(wall) }),
        Exclusion::AboveWall { wall } => json!({ "kind": "above_wall", "wall": wall_name(wall) }),
        Exclusion::NotPseudoEffective { z1, stated_bound } => json!({
            "kind": "not_pseudo_effective",
            "z1": int(z1),
            "stated_bound": int(stated_bound),
        }),
        Exclusion::NoPositiveRay => json!({ "kind": "no_positive_ray" }),
    }
}

fn case_params(f: &CaseFamily) -> Value {
    match *f {
        CaseFamily::Case1 { p } | CaseFamily::Case2 { p } | CaseFamily::Case3 { p } => json!({ "p": p }),
        CaseFamily::Case4 { a, p } | CaseFamily::Case5 { a, p } => json!({ "a": a, "p": p }),
    }
}

/// Walls with a ray in `(ray ξ_{b−1}, ray ξ_{b+1}]`, and the decomposition
/// they cut out.
pub fn family_walls(inst: &Instance) -> Result<(Vec<WallCheck>, ChamberDecomposition), ReportError> {
    let fam = &inst.family;
    let win = family_window(&inst.x, fam.b, true);
    let walls = enumerate_in_window(&inst.x, &fam.c1, &fam.c2, &win, inst.caps)?;
    let dec = build_in_window(&walls, win)?;
    Ok((walls, dec))
}

pub fn walls_document(inst: &Instance) -> Result<Value, ReportError> {
    let (walls, dec) = family_walls(inst)?;
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "instance": instance(inst),
        "window": window(&dec.window),
        "walls": walls.iter().map(wall).collect::<Vec<_>>(),
        "wall_set": "enumerated-within-caps",
    }))
}

pub fn chambers_document(inst: &Instance) -> Result<Value, ReportError> {
    let (_, dec) = family_walls(inst)?;
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "instance": instance(inst),
        "chambers": decomposition(&dec, inst.alpha_max)?,
    }))
}

fn instance(inst: &Instance) -> Value {
    json!({
        "base": {
            "c1p": inst.x.c1p(),
            "c2p": inst.x.c2p(),
            "split": inst.x.split_type().map(|(e1, e2)| json!([e1, e2])),
        },
        "family": {
            "b": inst.family.b,
            "variant": match inst.family.variant { Variant::A => "A", Variant::B => "B" },
            "c1": divisor(&inst.family.c1),
            "c2": cycle(&inst.family.c2),
        },
        "caps": {
            "a_max": inst.caps.a_max,
            "b_max": inst.caps.b_max,
            "t_max": inst.t_max,
            "alpha_max": inst.alpha_max,
        },
    })
}

fn optional<T>(r: crate::error::Result<T>) -> Result<Option<T>, ReportError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::MissingSplit) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Full report for one instance.
pub fn run_report(inst: &Instance) -> Result<Value, ReportError> {
    let x = &inst.x;
    let fam = &inst.family;
    let b = fam.b;
    let (walls, dec) = family_walls(inst)?;

    let mut polarizations = Vec::new();
    for l in &inst.polarizations {
        let r = classify_moduli(x, fam, l)?;
        polarizations.push(moduli_report(&r, dec.locate(l)?));
    }

    let ext = ext1_table(x, b)?;
    let ext1 = json!({
        "h2_minus_2b": int(&ext.h2_minus_2b),
        "h3_minus_2b_plus_1": int(&ext.h3_minus_2b_plus_1),
        "h3_minus_2b": int(&ext.h3_minus_2b),
        "h2_s_minus_2b_plus_1": int(&ext.h2_s_minus_2b_plus_1),
        "h3_s_minus_2b_plus_1": int(&ext.h3_s_minus_2b_plus_1),
        "h3_s_minus_2b": int(&ext.h3_s_minus_2b),
        "ext1_computed": int(&ext.ext1_computed),
        "ext1_stated": int(&ext.ext1_stated),
    });

    let xi_b = verify_xi_b_wall(x, fam, inst.t_max)?;
    let xi_b_json = json!({
        "wall": wall(&xi_b.wall),
        "h2_xi": int(&xi_b.h2_xi),
        "c_condition": xi_b.c_condition.as_ref().map(c_condition),
        "negative_c_condition": xi_b.negative_c_condition.as_ref().map(c_condition),
        "h0_clause_applicable": xi_b.h0_clause_applicable,
        "multiples": xi_b.multiples.iter().map(|m| json!({
            "t": m.t,
            "z1": rational(&m.z1),
            "z2": rational(&m.z2),
            "pseudo_effective": m.pseudo_effective,
        })).collect::<Vec<_>>(),
        "only_unit_multiples": xi_b.only_unit_multiples,
        "notes": xi_b.notes,
    });

    let mut verification = serde_json::Map::new();
    verification.insert("xi_b_wall".into(), xi_b_json);
    let mut discrepancies = Vec::new();
    let mut dimension = Value::Null;

    if fam.variant == Variant::A {
        let nw = verify_no_intermediate_walls(x, fam, inst.caps)?;
        verification.insert(
            "no_intermediate_walls".into(),
            json!({
                "passed": nw.passed,
                "first_counterexample": nw.first_counterexample,
                "upper_window": window(&nw.upper_window),
                "upper_walls": nw.upper_walls.iter().map(wall).collect::<Vec<_>>(),
                "lower_window": window(&nw.lower_window),
                "lower_walls": nw.lower_walls.iter().map(wall).collect::<Vec<_>>(),
                "cases": nw.cases.iter().map(|c| json!({
                    "case": c.family.number(),
                    "params": case_params(&c.family),
                    "xi": divisor(&c.xi),
                    "reason": exclusion(&c.reason),
                    "excluded": c.excluded,
                })).collect::<Vec<_>>(),
            }),
        );
        let dr = decomposition_report(x, fam, inst.caps, inst.alpha_max)?;
        verification.insert(
            "decomposition".into(),
            json!({
                "statement": dr.statement,
                "chamber_b": dr.chamber_b,
                "chamber_prime": dr.chamber_prime,
                "l": dr.l.as_ref().map(divisor),
                "l_prime": dr.l_prime.as_ref().map(divisor),
                "certificate_xi_b_l_prime_sq": dr.certificate.as_ref().map(int),
            }),
        );
        if let Some(d) = optional(component_dimension(x, fam))? {
            dimension = json!({
                "dim_cycles": int(&d.dim_cycles),
                "dim_computed": int(&d.dim_computed),
                "dim_stated": int(&d.dim_stated),
            });
            discrepancies.push(json!({
                "quantity": "component_dimension",
                "computed": int(&d.dim_computed),
                "stated": int(&d.dim_stated),
            }));
        }
        discrepancies.push(json!({
            "quantity": "ext1",
            "computed": int(&ext.ext1_computed),
            "stated": int(&ext.ext1_stated),
        }));
        let next = crate::walls::z_class(x, &xi_l(b + 1), &fam.c1, &fam.c2);
        discrepancies.push(json!({
            "quantity": "z_class_xi_next",
            "computed": next.as_ref().map(cycle),
            "stated": json!([0, 2 * (b + 1)]),
        }));
        discrepancies.push(json!({
            "quantity": "minus_xi_b_normal_twist_degree",
            "computed": xi_b.negative_c_condition.as_ref().map(|c| int(&c.normal_twist_degree)),
            "stated": json!(x.c1p() + 1 - 2 * b),
        }));
    }

    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "instance": instance(inst),
        "walls": walls.iter().map(wall).collect::<Vec<_>>(),
        "chambers": decomposition(&dec, inst.alpha_max)?,
        "wall_set": "enumerated-within-caps",
        "polarizations": polarizations,
        "ext1_table": ext1,
        "component_dimension": dimension,
        "bn_range": int(&crate::moduli::bn_range(b)),
        "verification": Value::Object(verification),
        "discrepancies": discrepancies,
    }))
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
