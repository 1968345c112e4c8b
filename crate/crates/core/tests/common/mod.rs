#![allow(dead_code)]

use balanced_core::colouring::BalancedSpec;
use balanced_core::quadratic::QuadNum;
use balanced_core::sturmian::{alphabet, Slope};
use balanced_core::words::Word;
use num_bigint::BigInt;

pub const X9: (&str, &str, &str) = ("0;2,3;(2)", "01", "234567284365274863254768");
pub const LUBKA: (&str, &str, &str) = ("0;3,2;(3,1)", "01", "234235");
/// The Fibonacci colouring with period-4 and period-2 sequences; `a` is the
/// rarer letter, so the period-2 sequence colours it.
pub const G: (&str, &str, &str) = ("0;;(1)", "34", "0102");

pub const TABLE2: [(u32, &str, &str, &str); 8] = [
    (3, "0;1;(2)", "0", "12"),
    (4, "0;;(1)", "01", "23"),
    (5, "0;1;(2)", "01", "2324"),
    (6, "0;2,1,1;(1,1,1,2)", "0", "123415321435"),
    (7, "0;1,3;(1,2,1)", "01", "234526432546"),
    (8, "0;3,1;(2)", "01", "234526732546237526432576"),
    (9, "0;2,3;(2)", "01", "234567284365274863254768"),
    (10, "0;4,2;(3)", "01", "234567284963254768294365274869"),
];

pub fn spec((s, y, yp): (&str, &str, &str)) -> BalancedSpec {
    BalancedSpec::parse(s, y, yp).unwrap()
}

pub fn slope(s: &str) -> Slope {
    s.parse().unwrap()
}

pub fn ab(text: &str) -> Word {
    alphabet().parse(text).unwrap()
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `(x + y sqrt(d)) / z`.
pub fn q(x: i64, y: i64, z: i64, d: i64) -> QuadNum {
    QuadNum::new(int(x), int(y), int(z), int(d)).unwrap()
}

pub fn sqrt(d: i64) -> QuadNum {
    QuadNum::sqrt(&int(d)).unwrap()
}

pub fn rat(x: i64, z: i64, d: i64) -> QuadNum {
    QuadNum::rational(x, z, &int(d)).unwrap()
}
