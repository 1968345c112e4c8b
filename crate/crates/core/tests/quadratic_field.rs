mod common;

use balanced_core::quadratic::{
    limit_l, nondominant_eigen, period_field, period_matrix, periodic_cf_value, Mat2, QuadNum,
};
use balanced_core::sturmian::{convergents, Slope};
use common::*;
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

#[test]
fn products_and_comparisons() {
    assert_eq!(&sqrt(2) * &sqrt(2), rat(2, 1, 2));
    assert!((sqrt(21) + 3) / 12 < rat(21, 24, 21));
    let x = (-sqrt(2) + 2) / 6 + 1;
    assert_eq!(x.approx(), "1.09763107294");
}

#[test]
fn cf_values() {
    assert_eq!(periodic_cf_value(&[], &[2]).unwrap(), sqrt(2) - 1);
    assert_eq!(periodic_cf_value(&[1], &[2]).unwrap(), sqrt(2) / 2);
    assert_eq!(periodic_cf_value(&[], &[3, 1]).unwrap(), (sqrt(21) - 3) / 6);
    assert_eq!(periodic_cf_value(&[], &[1]).unwrap(), (sqrt(5) - 1) / 2);
}

#[test]
fn matrices() {
    assert_eq!(period_matrix(&[3, 1], 0).unwrap(), Mat2::new(1, 1, 3, 4));
    assert_eq!(period_matrix(&[2], 0).unwrap(), Mat2::new(0, 1, 1, 2));
    assert_eq!(
        period_matrix(&[3, 1], 1).unwrap(),
        period_matrix(&[3, 1], 0).unwrap().transpose()
    );
    assert!(period_matrix(&[], 0).is_err());
}

#[test]
fn eigen() {
    let (lambda, (x, y)) = nondominant_eigen(&Mat2::new(1, 1, 3, 4)).unwrap();
    assert_eq!(lambda, (-sqrt(21) + 5) / 2);
    // proportional to (2, 3 - sqrt 21)
    assert_eq!(&y * 2, &x * &(-sqrt(21) + 3));
    let (lambda, _) = nondominant_eigen(&Mat2::new(0, 1, 1, 2)).unwrap();
    assert_eq!(lambda, -sqrt(2) + 1);
    assert!(nondominant_eigen(&Mat2::identity()).is_err());
}

#[test]
fn limits() {
    for i in [0, 2, 4] {
        assert_eq!(limit_l(&[3, 1], i).unwrap(), (sqrt(21) - 3) / 2);
        assert_eq!(limit_l(&[3, 1], i + 1).unwrap(), (sqrt(21) - 3) / 6);
    }
    for i in 0..3 {
        assert_eq!(limit_l(&[2], i).unwrap(), sqrt(2) - 1);
    }
}

#[test]
fn fields() {
    assert_eq!(period_field(&[1, 1, 1, 2]).unwrap(), int(6));
    assert_eq!(period_field(&[1, 2, 1]).unwrap(), int(10));
    assert_eq!(period_field(&[3]).unwrap(), int(13));
}

fn slope_strategy() -> impl Strategy<Value = Slope> {
    (
        prop::collection::vec(1u64..6, 0..3),
        prop::collection::vec(1u64..6, 1..4),
    )
        .prop_map(|(pre, per)| Slope::new(pre, per).unwrap())
}

fn quad(d: &BigInt) -> impl Strategy<Value = QuadNum> {
    let d = d.clone();
    (-50i64..50, -50i64..50, 1i64..30)
        .prop_map(move |(a, b, c)| QuadNum::new(a.into(), b.into(), c.into(), d.clone()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn discrepancy_identity(s in slope_strategy(), extra in 0usize..3) {
        let h = s.preperiod().len() + extra;
        let z = s.period_from(h);
        let m = z.len();
        let (lambda, _) = nondominant_eigen(&period_matrix(&z, 0).unwrap()).unwrap();
        let d = lambda.d().clone();
        let c = convergents(&s, h + m * 6 + m);
        for i in 0..m {
            let l = limit_l(&z, i).unwrap();
            let disc = |n: usize| {
                QuadNum::integer(c.Q(n as isize - 1), &d) - &l * &QuadNum::integer(c.Q(n as isize), &d)
            };
            let base = disc(h + i);
            for big_n in 0..=5u32 {
                prop_assert_eq!(disc(m * big_n as usize + h + i), &lambda.pow(big_n) * &base);
            }
        }
    }

    #[test]
    fn ratios_approach_limits(s in slope_strategy()) {
        let h = s.preperiod().len();
        let z = s.period_from(h);
        let m = z.len();
        let c = convergents(&s, h + m * 9 + m);
        let d = s.field();
        for i in 0..m {
            let l = limit_l(&z, i).unwrap();
            prop_assert!(QuadNum::integer(0, &d) < l && l < QuadNum::integer(1, &d));
            let err = |n: usize| {
                (QuadNum::rational(c.Q(n as isize - 1), c.Q(n as isize), &d).unwrap() - &l).abs()
            };
            for big_n in 0..8 {
                prop_assert!(err(m * (big_n + 1) + h + i) < err(m * big_n + h + i));
            }
        }
    }

    #[test]
    fn eigenvalue_inside_unit_disc(z in prop::collection::vec(1u64..8, 1..5), i in 0usize..5) {
        let a = period_matrix(&z, i % z.len()).unwrap();
        let (lambda, _) = nondominant_eigen(&a).unwrap();
        let d = lambda.d().clone();
        prop_assert!(lambda.abs() < QuadNum::integer(1, &d));
        prop_assert_eq!(&lambda * &lambda.conjugate(), QuadNum::integer(a.det(), &d));
        prop_assert_eq!(a.det(), int(if z.len() % 2 == 0 { 1 } else { -1 }));
    }

    #[test]
    fn classical_approximation_bound(s in slope_strategy()) {
        let theta = s.value();
        let d = theta.d().clone();
        let c = convergents(&s, 21);
        for n in 1..=20isize {
            let err = (&theta - &QuadNum::rational(c.p(n).clone(), c.q(n).clone(), &d).unwrap()).abs();
            let bound = QuadNum::rational(1, c.q(n) * c.q(n + 1), &d).unwrap();
            prop_assert!(err < bound);
        }
    }

    #[test]
    fn field_arithmetic((x, y) in (quad(&int(7)), quad(&int(7)))) {
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x.clone());
        }
        prop_assert_eq!(x.checked_cmp(&y).unwrap(), y.checked_cmp(&x).unwrap().reverse());
        let gap = x.to_f64() - y.to_f64();
        if gap.abs() > 1e-9 {
            prop_assert_eq!(x < y, gap < 0.0);
        }
        prop_assert_eq!(&x - &x.clone().max(y.clone()) <= QuadNum::integer(0, &int(7)), true);
    }

    #[test]
    fn canonical_form(a in -40i64..40, b in -40i64..40, c in 1i64..40, k in 1i64..5) {
        let x = QuadNum::new((a * k).into(), (b * k).into(), (c * k).into(), int(3)).unwrap();
        let y = QuadNum::new((-a).into(), (-b).into(), (-c).into(), int(3)).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert!(x.c().is_positive());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<QuadNum>(&json).unwrap(), x);
    }
}
