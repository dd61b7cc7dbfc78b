mod common;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use ruled_walls::chambers::build_decomposition;
use ruled_walls::exact::qn_compare;
use ruled_walls::walls::{enumerate_wall_classes, side_of_wall, wall_check, z_class, Caps, Side};
use ruled_walls::{CycleClass, DivisorClass, QuadraticNumber, Rational, RuledThreefold};

use common::{enclose, parse_decimal, triple, ORACLE_DIGITS};

fn threefold() -> impl Strategy<Value = RuledThreefold> {
    (0i64..=6).prop_flat_map(|c1p| (Just(c1p), 0..=c1p * c1p)).prop_map(|(c1p, c2p)| RuledThreefold::new(c1p, c2p).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=30).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// Pairs of numbers sharing a radicand, so field operations are defined.
fn surd_pair() -> impl Strategy<Value = (QuadraticNumber, QuadraticNumber)> {
    (prop::sample::select(vec![0i64, 2, 3, 5, 7, 30, 33]), rational(), rational(), rational(), rational())
        .prop_map(|(d, p1, q1, p2, q2)| (QuadraticNumber::new(p1, q1, d.into()), QuadraticNumber::new(p2, q2, d.into())))
}

fn ample() -> impl Strategy<Value = DivisorClass> {
    (1i64..=8, 1i64..=80).prop_map(|(a, b)| DivisorClass::new(a, b))
}

fn class(bound: i64) -> impl Strategy<Value = DivisorClass> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, b)| DivisorClass::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_laws((x, y) in surd_pair()) {
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &x.conjugate()), &QuadraticNumber::rational(x.norm()));
        if let Some(inv) = y.recip() {
            prop_assert_eq!(&(&x * &y) * &inv, x.clone());
        } else {
            prop_assert!(y.is_zero());
        }
    }

    #[test]
    fn order_matches_difference_sign((x, y) in surd_pair()) {
        prop_assert_eq!(qn_compare(&x, &y), (&x - &y).signum());
        let lo = x.floor();
        prop_assert!(qn_compare(&QuadraticNumber::from_integer(lo.clone()), &x) != Ordering::Greater);
        prop_assert!(qn_compare(&QuadraticNumber::from_integer(lo + 1), &x) == Ordering::Greater);
    }

    #[test]
    fn order_agrees_with_oracle((x, y) in surd_pair()) {
        if let Some(o) = enclose(&x).compare(&enclose(&y)) {
            prop_assert_eq!(qn_compare(&x, &y), o);
        } else {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn triple_matches_hand_expansion(x in threefold(), d1 in class(30), d2 in class(30), d3 in class(30)) {
        let p = |d: &DivisorClass| (i128::try_from(&d.a).unwrap(), i128::try_from(&d.b).unwrap());
        let want = triple(x.c1p() as i128, x.c2p() as i128, p(&d1), p(&d2), p(&d3));
        prop_assert_eq!(x.triple(&d1, &d2, &d3), BigInt::from(want));
    }

    #[test]
    fn side_flips_with_sign(x in threefold(), xi in class(10), l in ample()) {
        let neg = xi.scale(-1);
        prop_assert_eq!(side_of_wall(&x, &neg, &l).signum(), -side_of_wall(&x, &xi, &l).signum());
    }

    #[test]
    fn constructed_point_is_on_wall(x in threefold(), l in ample()) {
        // ξ = (H·L², −S·L²) kills L² by construction
        let sl = x.triple(&DivisorClass::s(), &l, &l);
        let hl = x.triple(&DivisorClass::h(), &l, &l);
        let g = sl.gcd(&hl);
        prop_assume!(g != BigInt::from(0));
        let xi = DivisorClass::new(&hl / &g, -(&sl / &g));
        prop_assert_eq!(side_of_wall(&x, &xi, &l), Side::On);
        prop_assert_eq!(side_of_wall(&x, &xi, &l.scale(3)), Side::On);
    }

    #[test]
    fn parity_valid_classes_have_integral_z(x in threefold(), d in class(12), c1a in 0i64..=1, c1b in -2i64..=2) {
        let c1 = DivisorClass::new(c1a, c1b);
        // ξ ≡ c₁ mod 2 by construction
        let xi = &d.scale(2) - &c1;
        let z = z_class(&x, &xi, &c1, &CycleClass::new(0, 0));
        prop_assert!(z.is_some());
    }

    #[test]
    fn verdict_location_is_homogeneous(b in 1i64..=4, l in ample(), k in 2i64..=6) {
        let x = RuledThreefold::plane_times_line();
        let c1 = DivisorClass::new(-1, 0);
        let c2 = CycleClass::new(0, b * b);
        let walls: Vec<_> = (b - 1..=b + 2)
            .map(|m| wall_check(&x, &DivisorClass::new(-1, 2 * m), &c1, &c2).unwrap())
            .filter(|w| w.is_wall)
            .collect();
        let dec = build_decomposition(&walls).unwrap();
        prop_assert_eq!(dec.locate(&l).unwrap(), dec.locate(&l.scale(k)).unwrap());
    }

    #[test]
    fn enumeration_is_symmetric(l1 in ample(), l2 in ample()) {
        let x = RuledThreefold::split(1, 0).unwrap();
        let c1 = DivisorClass::new(-1, 0);
        let c2 = CycleClass::new(0, 4);
        let caps = Caps { a_max: 4, b_max: 200 };
        let forward = enumerate_wall_classes(&x, &c1, &c2, &l1, &l2, caps);
        let backward = enumerate_wall_classes(&x, &c1, &c2, &l2, &l1, caps);
        match (forward, backward) {
            (Ok(f), Ok(g)) => {
                let names = |v: &[ruled_walls::walls::WallCheck]| v.iter().map(|w| w.xi.clone()).collect::<Vec<_>>();
                prop_assert_eq!(names(&f), names(&g));
            }
            (Err(e), Err(f)) => prop_assert_eq!(e.to_string(), f.to_string()),
            (f, g) => prop_assert!(false, "asymmetric: {:?} vs {:?}", f.is_ok(), g.is_ok()),
        }
    }
}

#[test]
fn oracle_self_check() {
    // 3 + 2√3 = 6.46410161513775458705489268301174473388561050762076...
    let t = QuadraticNumber::new(Rational::from_integer(3.into()), Rational::from_integer(2.into()), 3.into());
    let iv = enclose(&t);
    let reference = parse_decimal("6.46410161513775458705489268301174473388561050762076", ORACLE_DIGITS);
    assert!(iv.lo <= reference && reference <= iv.hi, "{iv:?}");
    assert!(iv.width() <= BigInt::from(3));
    assert!(iv.within_decimal(&t.to_decimal(6), 6));
    assert_eq!(triple(0, 0, (1, 0), (1, 0), (0, 1)), 0);
    assert_eq!(triple(1, 0, (1, 0), (1, 0), (1, 0)), 1);
    assert_eq!(triple(2, 1, (1, 0), (0, 1), (0, 1)), 1);
}
