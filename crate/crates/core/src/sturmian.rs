//! Standard Sturmian sequences given by an eventually periodic slope:
//! convergents, prefixes, bispecial factors and their return words, and the
//! critical exponents of the Sturmian sequence itself.
//!
//! Letter `a` (id 0) is the less frequent letter and `b` (id 1) the more
//! frequent one; every two-component count is written `(a, b)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::quadratic::{limit_l, period_field, periodic_cf_value, QuadNum};
use crate::words::{factors, Alphabet, Letter, Word};
use crate::{Error, Result};

pub const A: Letter = Letter(0);
pub const B: Letter = Letter(1);

pub fn alphabet() -> Alphabet {
    Alphabet::from_chars("ab").expect("two distinct letters")
}

/// `[0; a_1, ..., a_h, (z_0, ..., z_{M-1})]` in canonical form: the period is
/// primitive and the last preperiod coefficient differs from the last period
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    pre: Vec<u64>,
    period: Vec<u64>,
}

impl Slope {
    pub fn new(pre: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::BadCoefficients("empty period".into()));
        }
        if pre.iter().chain(&period).any(|&c| c == 0) {
            return Err(Error::BadCoefficients(
                "coefficients must be positive".into(),
            ));
        }
        let m = period.len();
        let root = (1..=m)
            .find(|&d| m % d == 0 && (0..m).all(|i| period[i] == period[i % d]))
            .unwrap_or(m);
        let mut period = period[..root].to_vec();
        let mut pre = pre;
        while pre.last().is_some() && pre.last() == period.last() {
            pre.pop();
            period.rotate_right(1);
        }
        Ok(Slope { pre, period })
    }

    pub fn preperiod(&self) -> &[u64] {
        &self.pre
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    /// `a_n` for `n >= 1`.
    pub fn coefficient(&self, n: usize) -> u64 {
        assert!(n >= 1, "coefficients are indexed from 1");
        if n <= self.pre.len() {
            self.pre[n - 1]
        } else {
            self.period[(n - 1 - self.pre.len()) % self.period.len()]
        }
    }

    /// The period read from `a_{n+1}` on, i.e. `z_i = a_{n+1+i}` for `n >= h`.
    pub fn period_from(&self, n: usize) -> Vec<u64> {
        assert!(n >= self.pre.len());
        let mut z = self.period.clone();
        let len = z.len();
        z.rotate_left((n - self.pre.len()) % len);
        z
    }

    /// `[0; a_n - m, a_{n+1}, ...]`.
    pub fn tail(&self, n: usize, m: u64) -> Result<Slope> {
        let head = self.coefficient(n);
        if m >= head {
            return Err(Error::OutOfRange(format!("m = {m} with a_{n} = {head}")));
        }
        let (mut pre, period) = if n <= self.pre.len() {
            (self.pre[n - 1..].to_vec(), self.period.clone())
        } else {
            (vec![head], self.period_from(n))
        };
        pre[0] -= m;
        Slope::new(pre, period)
    }

    pub fn value(&self) -> QuadNum {
        periodic_cf_value(&self.pre, &self.period).expect("canonical slopes are valid")
    }

    /// The `D` shared by every quantity attached to this slope.
    pub fn field(&self) -> BigInt {
        period_field(&self.period).expect("canonical slopes are valid")
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadSlope {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        let (head, pre, period) = match parts.as_slice() {
            [head, pre, period] => (*head, *pre, *period),
            [head, period] => (*head, "", *period),
            _ => return Err(bad("expected \"0;a1,...,ah;(z0,...,zM-1)\"")),
        };
        if head != "0" {
            return Err(bad("the integer part must be 0"));
        }
        let list = |text: &str| -> Result<Vec<u64>> {
            if text.trim().is_empty() {
                return Ok(Vec::new());
            }
            text.split(',')
                .map(|c| c.trim().parse::<u64>().map_err(|_| bad("not a positive integer")))
                .collect()
        };
        let period = period
            .strip_prefix('(')
            .and_then(|p| p.strip_suffix(')'))
            .ok_or_else(|| bad("the period must be parenthesised"))?;
        Slope::new(list(pre)?, list(period)?).map_err(|e| bad(&e.to_string()))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "0;{};({})", join(&self.pre), join(&self.period))
    }
}

/// `p_N`, `q_N` and `Q_N = p_N + q_N` for `N = -1..=upto`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergents {
    p: Vec<BigInt>,
    q: Vec<BigInt>,
}

impl Convergents {
    pub fn new(s: &Slope, upto: usize) -> Self {
        let mut c = Convergents {
            p: vec![BigInt::one(), BigInt::zero()],
            q: vec![BigInt::zero(), BigInt::one()],
        };
        c.extend(s, upto);
        c
    }

    pub fn extend(&mut self, s: &Slope, upto: usize) {
        while self.upto() < upto {
            let n = self.upto() + 1;
            let a = BigInt::from(s.coefficient(n));
            let len = self.p.len();
            self.p.push(&a * &self.p[len - 1] + &self.p[len - 2]);
            self.q.push(&a * &self.q[len - 1] + &self.q[len - 2]);
        }
    }

    pub fn upto(&self) -> usize {
        self.p.len() - 2
    }

    pub fn p(&self, n: isize) -> &BigInt {
        &self.p[(n + 1) as usize]
    }

    pub fn q(&self, n: isize) -> &BigInt {
        &self.q[(n + 1) as usize]
    }

    #[allow(non_snake_case)]
    pub fn Q(&self, n: isize) -> BigInt {
        self.p(n) + self.q(n)
    }
}

pub fn convergents(s: &Slope, upto: usize) -> Convergents {
    Convergents::new(s, upto)
}

/// The first `length` letters of the standard sequence, from the directive
/// sequence `D^{a_1} G^{a_2} D^{a_3} ...` with `G: a -> a, b -> ab` and
/// `D: a -> ba, b -> b`.
pub fn generate_prefix(s: &Slope, length: usize) -> Word {
    let mut img_a = vec![A];
    let mut img_b = vec![B];
    let mut n = 1;
    loop {
        let d_step = n % 2 == 1;
        // the sequence being mapped starts with b under D and with a under G
        let head = if d_step { &img_b } else { &img_a };
        if head.len() >= length {
            return Word::new(head[..length].to_vec());
        }
        for _ in 0..s.coefficient(n) {
            if d_step {
                let mut next = img_b.clone();
                next.extend_from_slice(&img_a);
                img_a = next;
            } else {
                img_b = [img_a.as_slice(), img_b.as_slice()].concat();
            }
        }
        n += 1;
    }
}

/// A prefix length (found by doubling) whose prefix contains all `n + 1`
/// factors of length `n`.
pub fn saturated_prefix_len(s: &Slope, n: usize) -> usize {
    let mut len = 2 * n + 2;
    loop {
        let w = generate_prefix(s, len);
        if factors(&w, n).len() == n + 1 {
            return len;
        }
        len *= 2;
    }
}

/// A prefix containing every factor of length `n`.
pub fn saturated_prefix(s: &Slope, n: usize) -> Word {
    generate_prefix(s, saturated_prefix_len(s, n))
}

/// `(N, m)` with `n = a_1 + ... + a_N + m` and `0 <= m < a_{N+1}`.
pub fn bispecial_params(n: u64, s: &Slope) -> (usize, u64) {
    let mut big_n = 0;
    let mut acc = 0u64;
    loop {
        let a = s.coefficient(big_n + 1);
        if n < acc + a {
            return (big_n, n - acc);
        }
        acc += a;
        big_n += 1;
    }
}

/// Letter counts `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Psi {
    pub a: BigInt,
    pub b: BigInt,
}

impl Psi {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Psi {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn len(&self) -> BigInt {
        &self.a + &self.b
    }

    pub fn is_empty(&self) -> bool {
        self.len().is_zero()
    }
}

/// The bispecial prefix with parameters `(N, m)` and its two return words:
/// `r` (more frequent) and `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BispecialData {
    pub n: usize,
    pub m: u64,
    pub psi_r: Psi,
    pub psi_s: Psi,
    pub psi_b: Psi,
    pub derived_slope: Slope,
    pub len_r: BigInt,
    pub len_s: BigInt,
    pub len_b: BigInt,
}

pub fn bispecial_data(big_n: usize, m: u64, s: &Slope) -> Result<BispecialData> {
    let derived_slope = s.tail(big_n + 1, m)?;
    let c = Convergents::new(s, big_n);
    let n = big_n as isize;
    let psi_r = Psi::new(c.p(n).clone(), c.q(n).clone());
    let psi_s = Psi::new(m * c.p(n) + c.p(n - 1), m * c.q(n) + c.q(n - 1));
    let psi_b = Psi::new(&psi_r.a + &psi_s.a - 1, &psi_r.b + &psi_s.b - 1);
    Ok(BispecialData {
        n: big_n,
        m,
        len_r: psi_r.len(),
        len_s: psi_s.len(),
        len_b: psi_b.len(),
        psi_r,
        psi_s,
        psi_b,
        derived_slope,
    })
}

/// Whether some factor has `k` letters b and `l` letters a:
/// `(k - 1) theta - 1 < l < (k + 1) theta + 1`.
pub fn factor_exists(theta: &QuadNum, k: u64, l: u64) -> bool {
    let k = k as i64;
    let l = QuadNum::integer(l, theta.d());
    let lo = theta * (k - 1) - 1;
    let hi = theta * (k + 1) + 1;
    lo < l && l < hi
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmianExponents {
    pub e: QuadNum,
    pub e_star: QuadNum,
    /// The supremum defining `e` is reached at a finite `N`.
    pub attained: bool,
}

/// `E = 2 + sup (a_{N+1} + (Q_{N-1} - 2)/Q_N)` and
/// `E* = 2 + limsup (a_{N+1} + Q_{N-1}/Q_N)`.
pub fn sturmian_exponents(s: &Slope) -> SturmianExponents {
    let d = s.field();
    let h = s.preperiod().len();
    let period = s.period();
    let mut conv = Convergents::new(s, h + period.len());
    let term = |conv: &Convergents, n: usize| {
        let n_i = n as isize;
        let a = QuadNum::integer(s.coefficient(n + 1), &d);
        let frac = QuadNum::rational(conv.Q(n_i - 1) - 2, conv.Q(n_i), &d).expect("Q_N > 0");
        a + frac
    };

    let mut finite: Option<QuadNum> = None;
    let push = |v: QuadNum, finite: &mut Option<QuadNum>| {
        *finite = Some(match finite.take() {
            Some(f) => f.max(v),
            None => v,
        });
    };
    for n in 0..h {
        push(term(&conv, n), &mut finite);
    }
    let mut limit: Option<QuadNum> = None;
    for i in 0..period.len() {
        let l = limit_l(period, i).expect("period matrices are primitive");
        let lim = QuadNum::integer(period[i], &d) + &l;
        limit = Some(match limit {
            Some(x) => x.max(lim),
            None => lim,
        });
        // past the point where |Q_{N-1} - L Q_N| <= 2 every term sits below its limit
        let mut n = h + i;
        loop {
            conv.extend(s, n);
            let disc = QuadNum::integer(conv.Q(n as isize - 1), &d)
                - &l * &QuadNum::integer(conv.Q(n as isize), &d);
            if disc.abs() <= QuadNum::integer(2, &d) {
                break;
            }
            push(term(&conv, n), &mut finite);
            n += period.len();
        }
    }
    let limit = limit.expect("non-empty period");
    let (sup, attained) = match finite {
        Some(f) if f >= limit => (f, true),
        _ => (limit.clone(), false),
    };
    SturmianExponents {
        e: sup + 2,
        e_star: limit + 2,
        attained,
    }
}
