//! Colouring a standard Sturmian sequence: every `a` is replaced by the next
//! letter of `y` and every `b` by the next letter of `y'`.

use std::collections::HashSet;

use crate::constant_gap::ConstantGapSeq;
use crate::sturmian::{factor_exists, generate_prefix, Slope, A, B};
use crate::words::{Alphabet, Letter, Word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedSpec {
    slope: Slope,
    y: ConstantGapSeq,
    yp: ConstantGapSeq,
    shift_y: usize,
    shift_yp: usize,
    /// Letters of `y` first, then those of `y'`.
    alphabet: Alphabet,
}

impl BalancedSpec {
    pub fn new(
        slope: Slope,
        y: ConstantGapSeq,
        yp: ConstantGapSeq,
        shift_y: usize,
        shift_yp: usize,
    ) -> Result<Self> {
        if let Some(name) = y
            .alphabet()
            .names()
            .iter()
            .find(|n| yp.alphabet().letter(n).is_some())
        {
            return Err(Error::OverlappingAlphabets(name.clone()));
        }
        for (shift, per) in [(shift_y, y.per()), (shift_yp, yp.per())] {
            if shift >= per {
                return Err(Error::BadShift { shift, per });
            }
        }
        let alphabet = Alphabet::new(
            y.alphabet()
                .names()
                .iter()
                .chain(yp.alphabet().names())
                .cloned(),
        )?;
        Ok(BalancedSpec {
            slope,
            y,
            yp,
            shift_y,
            shift_yp,
            alphabet,
        })
    }

    /// From the textual forms, with zero shifts.
    pub fn parse(slope: &str, y: &str, yp: &str) -> Result<Self> {
        BalancedSpec::new(
            slope.parse()?,
            ConstantGapSeq::parse(y)?,
            ConstantGapSeq::parse(yp)?,
            0,
            0,
        )
    }

    pub fn slope(&self) -> &Slope {
        &self.slope
    }

    pub fn y(&self) -> &ConstantGapSeq {
        &self.y
    }

    pub fn yp(&self) -> &ConstantGapSeq {
        &self.yp
    }

    pub fn shifts(&self) -> (usize, usize) {
        (self.shift_y, self.shift_yp)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// `Per(y) * Per(y')`.
    pub fn per_product(&self) -> usize {
        self.y.per() * self.yp.per()
    }

    fn offset(&self) -> u16 {
        self.y.alphabet().len() as u16
    }

    /// The same sequences with other starting rotations.
    pub fn with_shifts(&self, shift_y: usize, shift_yp: usize) -> Result<Self> {
        BalancedSpec::new(
            self.slope.clone(),
            self.y.clone(),
            self.yp.clone(),
            shift_y,
            shift_yp,
        )
    }
}

/// The first `length` letters of the coloured sequence.
pub fn colour_prefix(spec: &BalancedSpec, length: usize) -> Word {
    colour_word(spec, &generate_prefix(&spec.slope, length))
}

/// Colours an explicit word over `{a, b}` from the spec's starting rotations.
pub fn colour_word(spec: &BalancedSpec, u: &[Letter]) -> Word {
    let (mut i, mut j) = spec.shifts();
    let offset = spec.offset();
    u.iter()
        .map(|&x| {
            if x == A {
                i += 1;
                spec.y.at(i - 1)
            } else {
                j += 1;
                Letter(spec.yp.at(j - 1).0 + offset)
            }
        })
        .collect()
}

/// The morphism sending letters of `y` to `a` and letters of `y'` to `b`.
pub fn project(v: &[Letter], spec: &BalancedSpec) -> Result<Word> {
    let offset = spec.offset();
    v.iter()
        .map(|&x| {
            if !spec.alphabet.contains(x) {
                Err(Error::UnknownLetter(format!("#{}", x.0)))
            } else if x.0 < offset {
                Ok(A)
            } else {
                Ok(B)
            }
        })
        .collect()
}

fn check_long(spec: &BalancedSpec, u: &[Letter]) -> Result<()> {
    let na = u.iter().filter(|&&x| x == A).count();
    let nb = u.len() - na;
    if na <= spec.y.beta() || nb <= spec.yp.beta() {
        return Err(Error::ShortFactor(format!(
            "|u|_a = {na} (beta = {}), |u|_b = {nb} (beta' = {})",
            spec.y.beta(),
            spec.yp.beta()
        )));
    }
    Ok(())
}

/// Number of factors of the coloured sequence projecting onto `u`, valid for
/// `|u|_a > beta(y)` and `|u|_b > beta(y')`.
pub fn preimage_count(u: &[Letter], spec: &BalancedSpec) -> Result<usize> {
    check_long(spec, u)?;
    Ok(spec.per_product())
}

/// Number of return words to any factor projecting onto the long factor `u`.
pub fn return_word_count(spec: &BalancedSpec, u: &[Letter]) -> Result<usize> {
    check_long(spec, u)?;
    Ok(1 + spec.per_product())
}

/// Smallest length from which every Sturmian factor has more than `beta(y)`
/// letters a and more than `beta(y')` letters b.
pub fn dendric_threshold(spec: &BalancedSpec) -> usize {
    let theta = spec.slope.value();
    let (beta, beta_p) = (spec.y.beta() as u64, spec.yp.beta() as u64);
    (0u64..)
        .find(|&n| {
            (0..=n).all(|l| {
                let k = n - l;
                !factor_exists(&theta, k, l) || (l > beta && k > beta_p)
            })
        })
        .expect("the search is unbounded") as usize
}

/// Prefix of the coloured sequence holding every factor of length `n`.
///
/// Saturation is certified at a length `t >= threshold`, where the factor
/// count is known in closed form; shorter factors are prefixes of those.
pub fn saturated_colour_prefix(spec: &BalancedSpec, n: usize) -> Word {
    let t = n.max(dendric_threshold(spec));
    let target = spec.per_product() * (t + 1);
    let mut len = 4 * (t + 1) * spec.per_product();
    loop {
        let v = colour_prefix(spec, len);
        let count: HashSet<&[Letter]> = v.windows(t.max(1)).map(|w| &w[..t]).collect();
        if count.len() >= target {
            return v;
        }
        len *= 2;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Complexity {
    pub value: usize,
    /// Given by `Per(y) Per(y') (n + 1)` rather than by counting.
    pub closed_form: bool,
}

/// Number of factors of length `n` of the coloured sequence.
pub fn complexity(spec: &BalancedSpec, n: usize) -> Complexity {
    if n >= dendric_threshold(spec) {
        return Complexity {
            value: spec.per_product() * (n + 1),
            closed_form: true,
        };
    }
    let v = saturated_colour_prefix(spec, n);
    let value = if n == 0 {
        1
    } else {
        v.windows(n).collect::<HashSet<_>>().len()
    };
    Complexity {
        value,
        closed_form: false,
    }
}
