//! Exact arithmetic in a real quadratic field, values of eventually periodic
//! continued fractions, and the period matrices of a slope.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// `(a + b*sqrt(d)) / c` with `gcd(a, b, c) = 1` and `c > 0`.
///
/// Rationals have `b = 0`; their `d` is carried along but ignored by
/// equality, so a rational combines with any field.
#[derive(Clone, Debug)]
pub struct QuadNum {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &(&r * &r) == n
    }
}

/// Writes `n = f^2 * s` with `s` square-free. `n` must be positive.
pub fn square_free_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut f = BigInt::one();
    let mut s = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        f *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= &p;
        }
        p += 1;
    }
    (f, s * rest)
}

/// Sign of `a + b*sqrt(d)`.
fn sign_of(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    let sa = a.sign();
    let sb = b.sign();
    match (sa, sb) {
        (_, Sign::NoSign) => a.cmp(&BigInt::zero()),
        (Sign::NoSign, _) => b.cmp(&BigInt::zero()),
        _ if sa == sb => a.cmp(&BigInt::zero()),
        _ => {
            let lhs = a * a;
            let rhs = b * b * d;
            // the larger magnitude decides; equality is impossible for non-square d
            if lhs > rhs {
                a.cmp(&BigInt::zero())
            } else {
                b.cmp(&BigInt::zero())
            }
        }
    }
}

impl QuadNum {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if d <= BigInt::zero() || is_square(&d) {
            return Err(Error::BadDiscriminant(d));
        }
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadNum::normalized(a, b, c, d))
    }

    fn normalized(mut a: BigInt, mut b: BigInt, mut c: BigInt, d: BigInt) -> Self {
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_zero() && !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        QuadNum { a, b, c, d }
    }

    /// `p/q` in the field of `d`.
    pub fn rational(p: impl Into<BigInt>, q: impl Into<BigInt>, d: &BigInt) -> Result<Self> {
        QuadNum::new(p.into(), BigInt::zero(), q.into(), d.clone())
    }

    pub fn integer(n: impl Into<BigInt>, d: &BigInt) -> Self {
        QuadNum::normalized(n.into(), BigInt::zero(), BigInt::one(), d.clone())
    }

    pub fn from_ratio(r: &BigRational, d: &BigInt) -> Self {
        QuadNum::normalized(r.numer().clone(), BigInt::zero(), r.denom().clone(), d.clone())
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: &BigInt) -> Result<Self> {
        QuadNum::new(BigInt::zero(), BigInt::one(), BigInt::one(), d.clone())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_ratio(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.a.clone(), self.c.clone()))
    }

    pub fn signum(&self) -> Ordering {
        sign_of(&self.a, &self.b, &self.d)
    }

    fn field(&self, other: &QuadNum) -> Result<BigInt> {
        if other.b.is_zero() || self.d == other.d {
            Ok(self.d.clone())
        } else if self.b.is_zero() {
            Ok(other.d.clone())
        } else {
            Err(Error::MixedField(self.d.clone(), other.d.clone()))
        }
    }

    pub fn checked_add(&self, y: &QuadNum) -> Result<QuadNum> {
        let d = self.field(y)?;
        Ok(QuadNum::normalized(
            &self.a * &y.c + &y.a * &self.c,
            &self.b * &y.c + &y.b * &self.c,
            &self.c * &y.c,
            d,
        ))
    }

    pub fn checked_sub(&self, y: &QuadNum) -> Result<QuadNum> {
        self.checked_add(&-y)
    }

    pub fn checked_mul(&self, y: &QuadNum) -> Result<QuadNum> {
        let d = self.field(y)?;
        Ok(QuadNum::normalized(
            &self.a * &y.a + &self.b * &y.b * &d,
            &self.a * &y.b + &self.b * &y.a,
            &self.c * &y.c,
            d,
        ))
    }

    pub fn recip(&self) -> Result<QuadNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // c / (a + b√d) = c (a − b√d) / (a² − b² d)
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        Ok(QuadNum::normalized(
            &self.c * &self.a,
            -(&self.c * &self.b),
            norm,
            self.d.clone(),
        ))
    }

    pub fn checked_div(&self, y: &QuadNum) -> Result<QuadNum> {
        self.field(y)?;
        self.checked_mul(&y.recip()?)
    }

    pub fn checked_cmp(&self, y: &QuadNum) -> Result<Ordering> {
        Ok(self.checked_sub(y)?.signum())
    }

    pub fn conjugate(&self) -> QuadNum {
        QuadNum::normalized(self.a.clone(), -&self.b, self.c.clone(), self.d.clone())
    }

    pub fn abs(&self) -> QuadNum {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> QuadNum {
        let mut out = QuadNum::integer(1, &self.d);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        out
    }

    /// Larger of the two, by exact comparison.
    pub fn max(self, other: QuadNum) -> QuadNum {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Value times `10^digits`, approximately.
    fn scaled(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10).pow(digits);
        let root = (&self.d * &scale * &scale).sqrt();
        (&self.a * &scale + &self.b * root) / &self.c
    }

    pub fn to_f64(&self) -> f64 {
        let digits = 30;
        let v = self.scaled(digits);
        v.to_f64().unwrap_or(f64::NAN) / 10f64.powi(digits as i32)
    }

    /// Decimal approximation with 12 significant digits.
    pub fn approx(&self) -> String {
        let v = self.to_f64();
        if v == 0.0 {
            return "0".to_string();
        }
        let magnitude = v.abs().log10().floor() as i32;
        let decimals = (11 - magnitude).max(0) as usize;
        format!("{v:.decimals$}")
    }
}

impl PartialEq for QuadNum {
    fn eq(&self, y: &QuadNum) -> bool {
        self.a == y.a && self.b == y.b && self.c == y.c && (self.b.is_zero() || self.d == y.d)
    }
}

impl Eq for QuadNum {}

impl Hash for QuadNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.c.hash(state);
        if !self.b.is_zero() {
            self.d.hash(state);
        }
    }
}

/// `None` only when both operands are irrational over different fields.
impl PartialOrd for QuadNum {
    fn partial_cmp(&self, y: &QuadNum) -> Option<Ordering> {
        self.checked_cmp(y).ok()
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;

    fn neg(self) -> QuadNum {
        QuadNum {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;

    fn neg(self) -> QuadNum {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// # Panics
        ///
        /// On mixed fields, or on division by zero.
        impl $trait<&QuadNum> for &QuadNum {
            type Output = QuadNum;

            fn $method(self, y: &QuadNum) -> QuadNum {
                match self.$checked(y) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl $trait<QuadNum> for QuadNum {
            type Output = QuadNum;

            fn $method(self, y: QuadNum) -> QuadNum {
                (&self).$method(&y)
            }
        }

        impl $trait<&QuadNum> for QuadNum {
            type Output = QuadNum;

            fn $method(self, y: &QuadNum) -> QuadNum {
                (&self).$method(y)
            }
        }

        impl $trait<i64> for &QuadNum {
            type Output = QuadNum;

            fn $method(self, y: i64) -> QuadNum {
                self.$method(&QuadNum::integer(y, &self.d))
            }
        }

        impl $trait<i64> for QuadNum {
            type Output = QuadNum;

            fn $method(self, y: i64) -> QuadNum {
                (&self).$method(y)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            if self.c.is_one() {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.c)
            }
        } else {
            let op = if self.b.is_negative() { '-' } else { '+' };
            write!(
                f,
                "({} {} {}*sqrt({}))/{}",
                self.a,
                op,
                self.b.abs(),
                self.d,
                self.c
            )
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QuadJson {
    a: String,
    b: String,
    c: String,
    #[serde(rename = "D")]
    d: String,
    #[serde(default, skip_deserializing)]
    approx: String,
}

impl Serialize for QuadNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuadJson {
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
            d: self.d.to_string(),
            approx: self.approx(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadNum {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let j = QuadJson::deserialize(de)?;
        let num = |s: &str| s.parse::<BigInt>().map_err(D::Error::custom);
        QuadNum::new(num(&j.a)?, num(&j.b)?, num(&j.c)?, num(&j.d)?).map_err(D::Error::custom)
    }
}

/// `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2 {
            a: self.a.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// `tr^2 - 4 det`.
    pub fn discriminant(&self) -> BigInt {
        let t = self.trace();
        &t * &t - 4 * self.det()
    }

    /// Square-free part of the discriminant: the `D` of the eigenvalue field.
    pub fn field(&self) -> Result<BigInt> {
        let disc = self.discriminant();
        if disc <= BigInt::zero() || is_square(&disc) {
            return Err(Error::NotPrimitive(format!("discriminant {disc}")));
        }
        Ok(square_free_part(&disc).1)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, y: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &y.a + &self.b * &y.c,
            b: &self.a * &y.b + &self.b * &y.d,
            c: &self.c * &y.a + &self.d * &y.c,
            d: &self.c * &y.b + &self.d * &y.d,
        }
    }
}

/// `prod_j [[0, 1], [1, z_{(i+j) mod M}]]` for `j = 0..M`.
pub fn period_matrix(period: &[u64], i: usize) -> Result<Mat2> {
    if period.is_empty() {
        return Err(Error::BadCoefficients("empty period".into()));
    }
    let m = period.len();
    Ok((0..m).fold(Mat2::identity(), |acc, j| {
        let z = period[(i + j) % m];
        &acc * &Mat2::new(0, 1, 1, z as i64)
    }))
}

/// The eigenvalue of modulus below one and a right eigenvector `(x, y)`.
pub fn nondominant_eigen(m: &Mat2) -> Result<(QuadNum, (QuadNum, QuadNum))> {
    let sq = &(m * m);
    let positive = [&sq.a, &sq.b, &sq.c, &sq.d].iter().all(|v| v.is_positive());
    let det = m.det();
    if !positive || !(det.is_one() || det == -BigInt::one()) {
        return Err(Error::NotPrimitive(format!("{m:?}")));
    }
    let d = m.field()?;
    let (f, _) = square_free_part(&m.discriminant());
    let lambda = QuadNum::normalized(m.trace(), -f, BigInt::from(2), d.clone());
    let x = QuadNum::integer(m.b.clone(), &d);
    let y = &lambda - &QuadNum::integer(m.a.clone(), &d);
    Ok((lambda, (x, y)))
}

/// `L_i = -y/x` for the eigenvector of `period_matrix(period, i mod M)`.
pub fn limit_l(period: &[u64], i: usize) -> Result<QuadNum> {
    let m = period_matrix(period, i % period.len().max(1))?;
    let (_, (x, y)) = nondominant_eigen(&m)?;
    (-y).checked_div(&x)
}

/// The field `D` of any slope whose expansion ends with `period`.
pub fn period_field(period: &[u64]) -> Result<BigInt> {
    period_matrix(period, 0)?.field()
}

/// Exact value of `[0; coeffs, (period)]`.
pub fn periodic_cf_value(coeffs: &[u64], period: &[u64]) -> Result<QuadNum> {
    if coeffs.iter().chain(period).any(|&c| c == 0) {
        return Err(Error::BadCoefficients(
            "coefficients must be positive".into(),
        ));
    }
    let pm = period_matrix(period, 0)?;
    let d = pm.field()?;
    // eta = [z0; z1, ..., eta] solves eta = (P eta + P') / (Q eta + Q')
    let conv = period.iter().fold(Mat2::identity(), |acc, &z| {
        &acc * &Mat2::new(z as i64, 1, 1, 0)
    });
    let (p, q, q1) = (&conv.a, &conv.c, &conv.d);
    let (f, _) = square_free_part(&conv.discriminant());
    let eta = QuadNum::normalized(p - q1, f, 2 * q, d.clone());
    let mut x = eta;
    for &c in coeffs.iter().rev() {
        x = &QuadNum::integer(c, &d) + &x.recip()?;
    }
    x.recip()
}
