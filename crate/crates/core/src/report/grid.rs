//! Batch checks of the `ξ_b` statements over a grid of base invariants.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::chow::{CycleClass, RuledThreefold};
use crate::error::Result;
use crate::exact::{QuadraticNumber, Rational};
use crate::moduli::{
    decomposition_report, ext1_table, verify_no_intermediate_walls, verify_xi_b_wall, xi_l, ChernFamily, Variant,
};
use crate::walls::{side_of_wall, wall_check, z_class, Caps, Side};

/// `(c₁′, c₂′)` with `0 ≤ c₁′ ≤ c1_max`, `0 ≤ c₂′ ≤ c₁′²`, carrying a split
/// type whenever `t² − c₁′t + c₂′` has integer roots.
pub fn grid_threefolds(c1_max: i64) -> Vec<RuledThreefold> {
    let mut out = Vec::new();
    for c1p in 0..=c1_max {
        for c2p in 0..=c1p * c1p {
            let split = (0..=c1p).find(|e| e * (c1p - e) == c2p).map(|e| (c1p - e, e));
            out.push(RuledThreefold::with_split(c1p, c2p, split).expect("grid values are valid"));
        }
    }
    out
}

/// `2b − c₁′ + √(2b(2b − c₁′) + c₂′)`.
pub fn closed_form_ray(x: &RuledThreefold, b: i64) -> QuadraticNumber {
    let c1p = x.c1p();
    QuadraticNumber::new(
        Rational::from_integer(BigInt::from(2 * b - c1p)),
        Rational::from_integer(BigInt::from(1)),
        BigInt::from(2 * b * (2 * b - c1p) + x.c2p()),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub c1p: i64,
    pub c2p: i64,
    pub b: i64,
    /// Names of the checks that failed, with details.
    pub failures: Vec<String>,
}

pub fn check_instance(x: &RuledThreefold, b: i64, caps: Caps, alpha_max: i64) -> Result<InstanceOutcome> {
    let fam = ChernFamily::new(x, b, Variant::A)?;
    let mut failures = Vec::new();

    let w = wall_check(x, &xi_l(b), &fam.c1, &fam.c2)?;
    if w.rays != vec![closed_form_ray(x, b)] {
        failures.push(format!("ray: {:?}", w.rays.iter().map(|t| t.to_string()).collect::<Vec<_>>()));
    }
    if w.z_class != Some(CycleClass::new(1, 0)) || !w.is_wall {
        failures.push(format!("z_class xi_b: {:?}", w.z_class));
    }
    let next = z_class(x, &xi_l(b + 1), &fam.c1, &fam.c2);
    if next != Some(CycleClass::new(0, 2 * b + 1)) {
        failures.push(format!("z_class xi_b+1: {next:?}"));
    }

    let nw = verify_no_intermediate_walls(x, &fam, caps)?;
    if !nw.passed {
        failures.push(format!("intermediate walls: {:?}", nw.first_counterexample));
    }

    let xr = verify_xi_b_wall(x, &fam, 10)?;
    if !xr.only_unit_multiples {
        failures.push("multiples of xi_b".into());
    }
    if !xr.c_condition.as_ref().is_some_and(|c| c.satisfied) {
        failures.push("C-condition of xi_b".into());
    }
    if let Some(neg) = &xr.negative_c_condition {
        if !neg.h0_on_z.is_zero() || neg.satisfied {
            failures.push("C-condition of -xi_b".into());
        }
    }

    let dr = decomposition_report(x, &fam, caps, alpha_max)?;
    match (&dr.l, &dr.l_prime) {
        (Some(l), Some(lp)) => {
            let ok = side_of_wall(x, &xi_l(b), l) == Side::Below
                && side_of_wall(x, &xi_l(b + 1), l) == Side::Above
                && side_of_wall(x, &xi_l(b), lp) == Side::Above
                && side_of_wall(x, &xi_l(b - 1), lp) == Side::Below;
            if !ok {
                failures.push(format!("chamber signs for {l} / {lp}"));
            }
        }
        other => failures.push(format!("integer chambers: {other:?}")),
    }
    Ok(InstanceOutcome { c1p: x.c1p(), c2p: x.c2p(), b, failures })
}

/// Every `(X, b)` with `b` in `c₁′+1 ..= c₁′+b_span`, caps `(a_max, 20b)`.
pub fn run_grid(c1_max: i64, b_span: i64, a_max: i64, alpha_max: i64) -> Result<Vec<InstanceOutcome>> {
    let jobs: Vec<(RuledThreefold, i64)> = grid_threefolds(c1_max)
        .into_iter()
        .flat_map(|x| {
            let c1p = x.c1p();
            ((c1p + 1)..=(c1p + b_span)).map(move |b| (x.clone(), b))
        })
        .collect();
    jobs.par_iter()
        .map(|(x, b)| check_instance(x, *b, Caps { a_max, b_max: 20 * b }, alpha_max))
        .collect()
}

/// `b` values in `1..=b_max` where the ext¹ table misbehaves.
pub fn ext1_failures(b_max: i64) -> Result<Vec<i64>> {
    let x = RuledThreefold::plane_times_line();
    let mut bad = Vec::new();
    for b in 1..=b_max {
        let t = ext1_table(&x, b)?;
        let ok = t.vanishing_entries().iter().all(|v| v.is_zero())
            && t.ext1_computed == BigInt::from(2 * b + 2)
            && t.ext1_stated == BigInt::from(2 * b + 1);
        if !ok {
            bad.push(b);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        let g = grid_threefolds(3);
        assert_eq!(g.len(), 1 + 2 + 5 + 10);
        let split: Vec<_> = g.iter().filter_map(|x| x.split_type()).collect();
        assert_eq!(split, vec![(0, 0), (1, 0), (2, 0), (1, 1), (3, 0), (2, 1)]);
    }

    #[test]
    fn small_instance_passes() {
        let x = RuledThreefold::split(1, 0).unwrap();
        let out = check_instance(&x, 2, Caps { a_max: 10, b_max: 40 }, 4).unwrap();
        assert!(out.failures.is_empty(), "{:?}", out.failures);
    }
}
