//! Critical exponent `E` and asymptotic critical exponent `E*` of a coloured
//! Sturmian sequence.
//!
//! Long bispecial factors fall into finitely many classes `(i, m)`, inside
//! which the sets of admissible return-word combinations are constant and
//! the index converges to a quadratic irrational. Short factors form a
//! finite universe that is examined one by one.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::colouring::BalancedSpec;
use crate::quadratic::{limit_l, nondominant_eigen, period_matrix, QuadNum};
use crate::sturmian::{
    alphabet, bispecial_data, bispecial_params, factor_exists, generate_prefix, saturated_prefix,
    sturmian_exponents, BispecialData, Convergents, A,
};
use crate::words::{extension_graph, occurrences, Letter, Word};
use crate::{Error, Result};

/// `l` copies of the less frequent return word `s` and `k` of `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SVector {
    pub l: u64,
    pub k: u64,
}

impl SVector {
    pub fn new(l: u64, k: u64) -> Self {
        SVector { l, k }
    }
}

impl Serialize for SVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.l, self.k].serialize(s)
    }
}

impl fmt::Display for SVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l, self.k)
    }
}

pub type SSet = BTreeSet<SVector>;

/// The componentwise-minimal elements.
pub fn hat_reduce(s: &SSet) -> SSet {
    s.iter()
        .filter(|v| !s.iter().any(|w| w != *v && w.l <= v.l && w.k <= v.k))
        .copied()
        .collect()
}

fn residue(x: &BigInt, n: usize) -> u64 {
    (x % BigInt::from(n)).to_u64().expect("non-negative")
}

fn clamp(x: &BigInt) -> usize {
    x.to_usize().unwrap_or(usize::MAX)
}

/// All `(l, k)` with `1 <= k + l <= Per(y) Per(y')` such that `k r + l s`
/// is congruent to zero modulo some `(n, n')` from the gap sets at
/// `(count_a, count_b)`, and such that the derived sequence has a factor
/// with `k` letters `r` and `l` letters `s`.
fn admissible(spec: &BalancedSpec, data: &BispecialData, count_a: usize, count_b: usize) -> SSet {
    let theta = data.derived_slope.value();
    let gaps: Vec<(usize, usize)> = spec
        .y()
        .gap_set(count_a)
        .into_iter()
        .flat_map(|n| spec.yp().gap_set(count_b).into_iter().map(move |np| (n, np)))
        .collect();
    let residues: Vec<[u64; 4]> = gaps
        .iter()
        .map(|&(n, np)| {
            [
                residue(&data.psi_r.a, n),
                residue(&data.psi_s.a, n),
                residue(&data.psi_r.b, np),
                residue(&data.psi_s.b, np),
            ]
        })
        .collect();
    let cap = spec.per_product() as u64;
    let mut out = SSet::new();
    for total in 1..=cap {
        for l in 0..=total {
            let k = total - l;
            let congruent = gaps.iter().zip(&residues).any(|(&(n, np), r)| {
                (k * r[0] + l * r[1]) % n as u64 == 0 && (k * r[2] + l * r[3]) % np as u64 == 0
            });
            if congruent && factor_exists(&theta, k, l) {
                out.insert(SVector::new(l, k));
            }
        }
    }
    out
}

/// The shortest bispecial factor containing the Sturmian factor `u`, as
/// `(N, m)`.
pub fn bispecial_extension(spec: &BalancedSpec, u: &[Letter]) -> Result<(usize, u64)> {
    let slope = spec.slope();
    let mut b = u.to_vec();
    let text = saturated_prefix(slope, b.len().max(1));
    if !b.is_empty() && occurrences(&b, &text).is_empty() {
        return Err(Error::NotAFactor(alphabet().render(u)));
    }
    loop {
        let text = saturated_prefix(slope, b.len() + 2);
        let g = extension_graph(&b, &text);
        if g.right.len() == 1 {
            b.push(*g.right.first().expect("one letter"));
        } else if g.left.len() == 1 {
            b.insert(0, *g.left.first().expect("one letter"));
        } else {
            break;
        }
    }
    for n in 0.. {
        let (big_n, m) = bispecial_params(n, slope);
        let data = bispecial_data(big_n, m, slope)?;
        match clamp(&data.len_b).cmp(&b.len()) {
            std::cmp::Ordering::Less => continue,
            std::cmp::Ordering::Equal if generate_prefix(slope, b.len()).letters() == b => {
                return Ok((big_n, m))
            }
            _ => break,
        }
    }
    Err(Error::NotAFactor(alphabet().render(u)))
}

/// The set `S(u)` for a non-empty Sturmian factor `u`.
pub fn set_s_factor(spec: &BalancedSpec, u: &[Letter]) -> Result<SSet> {
    Ok(factor_data(spec, u)?.1)
}

fn factor_data(spec: &BalancedSpec, u: &[Letter]) -> Result<(BispecialData, SSet)> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (big_n, m) = bispecial_extension(spec, u)?;
    let data = bispecial_data(big_n, m, spec.slope())?;
    let na = u.iter().filter(|&&x| x == A).count();
    let set = admissible(spec, &data, na, u.len() - na);
    Ok((data, set))
}

/// Length of a shortest return word to any factor projecting onto `u`;
/// `None` when `S(u)` is empty.
pub fn shortest_return_length(spec: &BalancedSpec, u: &[Letter]) -> Result<Option<BigInt>> {
    let (data, set) = factor_data(spec, u)?;
    Ok(min_return(&data, &set))
}

fn min_return(data: &BispecialData, set: &SSet) -> Option<BigInt> {
    set.iter()
        .map(|v| v.k * &data.len_r + v.l * &data.len_s)
        .min()
}

/// Smallest `h >= h_0` with `p_h + p_{h-1} - 1 > beta(y)` and
/// `q_h + q_{h-1} - 1 > beta(y')`.
pub fn min_preperiod_h(spec: &BalancedSpec) -> usize {
    let slope = spec.slope();
    let (beta, beta_p) = (
        BigInt::from(spec.y().beta()),
        BigInt::from(spec.yp().beta()),
    );
    let mut h = slope.preperiod().len();
    let mut conv = Convergents::new(slope, h);
    loop {
        conv.extend(slope, h);
        let n = h as isize;
        if conv.p(n) + conv.p(n - 1) - 1 > beta && conv.q(n) + conv.q(n - 1) - 1 > beta_p {
            return h;
        }
        h += 1;
    }
}

/// Smallest `i > 0` with `h + i ~ h`: equal index modulo `M` and equal
/// `(p, q)` at `N - 1` and `N` modulo `(Per(y), Per(y'))`.
pub fn class_count(spec: &BalancedSpec, h: usize) -> usize {
    let slope = spec.slope();
    let (per, per_p) = (spec.y().per() as u64, spec.yp().per() as u64);
    let m = slope.period().len();
    let conv = Convergents::new(slope, h);
    let n = h as isize;
    let start = [
        residue(conv.p(n - 1), per as usize),
        residue(conv.q(n - 1), per_p as usize),
        residue(conv.p(n), per as usize),
        residue(conv.q(n), per_p as usize),
    ];
    let mut state = start;
    let mut i = 0;
    loop {
        i += 1;
        let a = slope.coefficient(h + i);
        state = [
            state[2],
            state[3],
            (a * state[2] + state[0]) % per,
            (a * state[3] + state[1]) % per_p,
        ];
        if i % m == 0 && state == start {
            return i;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub i: usize,
    pub m: u64,
    #[serde(rename = "S_hat")]
    pub s_hat: Vec<SVector>,
    #[serde(rename = "L")]
    pub l: QuadNum,
    #[serde(rename = "Estar_im")]
    pub e_star_im: QuadNum,
    #[serde(rename = "E_im")]
    pub e_im: QuadNum,
    #[serde(rename = "N0")]
    pub n0: usize,
    #[serde(rename = "I_values")]
    pub i_values: Vec<QuadNum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShortRow {
    #[serde(serialize_with = "ser_word")]
    pub projection: Word,
    #[serde(serialize_with = "ser_big")]
    pub ret_len: Option<BigInt>,
    #[serde(serialize_with = "ser_ratio")]
    pub ratio: BigRational,
}

fn ser_word<S: Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    alphabet().render(w).serialize(s)
}

fn ser_big<S: Serializer>(x: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => match x.to_u64() {
            Some(v) => v.serialize(s),
            None => x.to_string().serialize(s),
        },
        None => s.serialize_none(),
    }
}

fn ser_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    format!("{}/{}", r.numer(), r.denom()).serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentReport {
    #[serde(rename = "E")]
    pub e: QuadNum,
    #[serde(rename = "Estar")]
    pub e_star: QuadNum,
    #[serde(rename = "E_short")]
    pub e_short: QuadNum,
    pub h: usize,
    #[serde(rename = "H")]
    pub big_h: usize,
    pub classes: Vec<ClassRow>,
    pub short_table: Vec<ShortRow>,
    pub attained_by: String,
    /// Anything unusual met on the way, such as an empty `S` set.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
}

/// Per-spec state: the preperiod cutoff, the class count, the field, the
/// limits `L_i` and the non-dominant eigenvalue.
pub struct Analysis<'a> {
    spec: &'a BalancedSpec,
    d: BigInt,
    h: usize,
    big_h: usize,
    z: Vec<u64>,
    lambda: QuadNum,
    limits: Vec<QuadNum>,
    conv: Convergents,
    class_sets: HashMap<[u64; 6], SSet>,
}

impl<'a> Analysis<'a> {
    pub fn new(spec: &'a BalancedSpec) -> Result<Self> {
        let slope = spec.slope();
        let d = slope.field();
        let h = min_preperiod_h(spec);
        let big_h = class_count(spec, h);
        let z = slope.period_from(h);
        let (lambda, _) = nondominant_eigen(&period_matrix(&z, 0)?)?;
        let limits = (0..z.len())
            .map(|i| limit_l(&z, i))
            .collect::<Result<Vec<_>>>()?;
        let conv = Convergents::new(slope, h + big_h);
        Ok(Analysis {
            spec,
            d,
            h,
            big_h,
            z,
            lambda,
            limits,
            conv,
            class_sets: HashMap::new(),
        })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    #[allow(non_snake_case)]
    pub fn H(&self) -> usize {
        self.big_h
    }

    pub fn field(&self) -> &BigInt {
        &self.d
    }

    pub fn lambda(&self) -> &QuadNum {
        &self.lambda
    }

    /// `z_i = a_{h+1+i}`, for `i` taken modulo `M`.
    pub fn z(&self, i: usize) -> u64 {
        self.z[i % self.z.len()]
    }

    pub fn limit(&self, i: usize) -> &QuadNum {
        &self.limits[i % self.limits.len()]
    }

    /// Class parameters `(i, m)` with `0 <= i < H` and `0 <= m < z_i`.
    pub fn classes(&self) -> Vec<(usize, u64)> {
        (0..self.big_h)
            .flat_map(|i| (0..self.z(i)).map(move |m| (i, m)))
            .collect()
    }

    fn q(&mut self, n: usize) -> (BigInt, BigInt) {
        self.conv.extend(self.spec.slope(), n);
        (self.conv.Q(n as isize - 1), self.conv.Q(n as isize))
    }

    /// `S(i, m)`: the set of the bispecial factors `(h + i + tH, m)`.
    pub fn set_s_class(&mut self, i: usize, m: u64) -> Result<SSet> {
        if i >= self.big_h || m >= self.z(i) {
            return Err(Error::OutOfRange(format!("class ({i}, {m})")));
        }
        let n = self.h + i;
        self.conv.extend(self.spec.slope(), n);
        let (per, per_p) = (self.spec.y().per(), self.spec.yp().per());
        let key = [
            residue(self.conv.p(n as isize - 1), per),
            residue(self.conv.q(n as isize - 1), per_p),
            residue(self.conv.p(n as isize), per),
            residue(self.conv.q(n as isize), per_p),
            (i % self.z.len()) as u64,
            m,
        ];
        if let Some(s) = self.class_sets.get(&key) {
            return Ok(s.clone());
        }
        let data = bispecial_data(n, m, self.spec.slope())?;
        let set = admissible(
            self.spec,
            &data,
            clamp(&data.psi_b.a),
            clamp(&data.psi_b.b),
        );
        self.class_sets.insert(key, set.clone());
        Ok(set)
    }

    /// `1 + max ((1 + m) Q_N + Q_{N-1} - 2) / ((k + l m) Q_N + l Q_{N-1})`;
    /// `None` for an empty set.
    pub fn index_i(&mut self, n: usize, m: u64, set: &SSet) -> Option<QuadNum> {
        let (q_prev, q_n) = self.q(n);
        let num: BigInt = BigInt::from(1 + m) * &q_n + &q_prev - 2;
        set.iter()
            .map(|v| {
                let den: BigInt = BigInt::from(v.k + v.l * m) * &q_n + BigInt::from(v.l) * &q_prev;
                QuadNum::rational(num.clone(), den, &self.d).expect("positive denominator")
            })
            .reduce(QuadNum::max)
            .map(|x| x + 1)
    }

    /// `1 + max (1 + m + L_i) / (k + l m + l L_i)` over `S^(i, m)`.
    pub fn e_star_class(&mut self, i: usize, m: u64) -> Result<Option<QuadNum>> {
        let set = hat_reduce(&self.set_s_class(i, m)?);
        let l_i = self.limit(i).clone();
        Ok(set
            .iter()
            .map(|v| {
                let num = &l_i + (1 + m) as i64;
                let den = &l_i * v.l as i64 + (v.k + v.l * m) as i64;
                num / den
            })
            .reduce(QuadNum::max)
            .map(|x| x + 1))
    }

    /// Smallest `N_0` with `|lambda|^{N_0 H / M} |Q_{h+i-1} - L_i Q_{h+i}| <= 2 L_i`.
    pub fn cutoff_n0(&mut self, i: usize) -> usize {
        let (q_prev, q_n) = self.q(self.h + i);
        let l_i = self.limit(i).clone();
        let d = self.d.clone();
        let mut disc = (QuadNum::integer(q_prev, &d) - &l_i * &QuadNum::integer(q_n, &d)).abs();
        let step = self
            .lambda
            .abs()
            .pow((self.big_h / self.z.len()) as u32);
        let bound = &l_i * 2;
        let mut n0 = 0;
        while disc > bound {
            disc = &disc * &step;
            n0 += 1;
        }
        n0
    }

    /// The class table and `E*`.
    pub fn class_rows(&mut self) -> Result<(Vec<ClassRow>, Vec<String>)> {
        let mut rows = Vec::new();
        let mut flags = Vec::new();
        let mut cutoffs: HashMap<usize, usize> = HashMap::new();
        for (i, m) in self.classes() {
            let set = self.set_s_class(i, m)?;
            let s_hat = hat_reduce(&set);
            let e_star_im = match self.e_star_class(i, m)? {
                Some(v) => v,
                None => {
                    flags.push(format!("empty S for class ({i},{m})"));
                    QuadNum::integer(1, &self.d)
                }
            };
            let n0 = match cutoffs.get(&i) {
                Some(&n0) => n0,
                None => {
                    let n0 = self.cutoff_n0(i);
                    cutoffs.insert(i, n0);
                    n0
                }
            };
            let mut i_values = Vec::new();
            for t in 0..n0 {
                let n = self.h + i + t * self.big_h;
                let v = self
                    .index_i(n, m, &s_hat)
                    .unwrap_or_else(|| QuadNum::integer(1, &self.d));
                i_values.push(v);
            }
            let e_im = i_values
                .iter()
                .cloned()
                .fold(e_star_im.clone(), QuadNum::max);
            rows.push(ClassRow {
                i,
                m,
                s_hat: s_hat.into_iter().collect(),
                l: self.limit(i).clone(),
                e_star_im,
                e_im,
                n0,
                i_values,
            });
        }
        Ok((rows, flags))
    }
}

/// Projections to examine one by one: factors with at most `beta(y)`
/// letters a or at most `beta(y')` letters b, and bispecial factors with
/// `N < h`. The empty word is excluded.
pub fn short_factor_universe(spec: &BalancedSpec, h: usize) -> Vec<Word> {
    let slope = spec.slope();
    let theta = slope.value();
    let (beta, beta_p) = (spec.y().beta() as u64, spec.yp().beta() as u64);
    // beyond this length every factor has more than beta a's and beta' b's
    let few_a = |n: u64| (0..=beta.min(n)).any(|l| factor_exists(&theta, n - l, l));
    let few_b = |n: u64| (0..=beta_p.min(n)).any(|k| factor_exists(&theta, k, n - k));
    let bound = (1u64..).find(|&n| !few_a(n) && !few_b(n)).expect("unbounded") as usize;

    let mut out: BTreeSet<(usize, Word)> = BTreeSet::new();
    if bound > 1 {
        let text = saturated_prefix(slope, bound - 1);
        for n in 1..bound {
            for w in text.windows(n) {
                let na = w.iter().filter(|&&x| x == A).count() as u64;
                let nb = n as u64 - na;
                if na <= beta || nb <= beta_p {
                    out.insert((n, Word::from(w)));
                }
            }
        }
    }
    for n in 1.. {
        let (big_n, m) = bispecial_params(n, slope);
        if big_n >= h {
            break;
        }
        let data = bispecial_data(big_n, m, slope).expect("valid parameters");
        let len = clamp(&data.len_b);
        out.insert((len, generate_prefix(slope, len)));
    }
    out.into_iter().map(|(_, w)| w).collect()
}

/// Rows of the short table and `E^short`.
pub fn short_table(spec: &BalancedSpec, h: usize) -> Result<(Vec<ShortRow>, Vec<String>)> {
    let mut rows = Vec::new();
    let mut flags = Vec::new();
    for u in short_factor_universe(spec, h) {
        let ret_len = shortest_return_length(spec, &u)?;
        let ratio = match &ret_len {
            Some(len) => BigRational::new(BigInt::from(u.len()), len.clone()),
            None => {
                flags.push(format!("empty S for {}", alphabet().render(&u)));
                BigRational::zero()
            }
        };
        rows.push(ShortRow {
            projection: u,
            ret_len,
            ratio,
        });
    }
    Ok((rows, flags))
}

/// `E^short = 1 + max |u| / |v|` over the short universe.
pub fn e_short(spec: &BalancedSpec) -> Result<QuadNum> {
    let (rows, _) = short_table(spec, min_preperiod_h(spec))?;
    let d = spec.slope().field();
    let best = rows
        .iter()
        .map(|r| r.ratio.clone())
        .max()
        .unwrap_or_else(BigRational::zero);
    Ok(QuadNum::from_ratio(&best, &d) + 1)
}

/// `E*` alone, with its class table.
pub fn e_star(spec: &BalancedSpec) -> Result<QuadNum> {
    if spec.per_product() == 1 {
        return Ok(sturmian_exponents(spec.slope()).e_star);
    }
    let mut job = Analysis::new(spec)?;
    let (rows, _) = job.class_rows()?;
    Ok(rows
        .into_iter()
        .map(|r| r.e_star_im)
        .reduce(QuadNum::max)
        .expect("at least one class"))
}

/// The full computation of `E` and `E*`.
pub fn e_total(spec: &BalancedSpec) -> Result<ExponentReport> {
    if spec.per_product() == 1 {
        return Ok(sturmian_report(spec));
    }
    let mut job = Analysis::new(spec)?;
    let (classes, mut flags) = job.class_rows()?;
    let (short, short_flags) = short_table(spec, job.h())?;
    flags.extend(short_flags);
    let d = job.field().clone();

    let e_star = classes
        .iter()
        .map(|r| r.e_star_im.clone())
        .reduce(QuadNum::max)
        .expect("at least one class");

    let mut best: Option<(QuadNum, String)> = None;
    let candidates = short
        .iter()
        .map(|row| {
            (
                QuadNum::from_ratio(&row.ratio, &d) + 1,
                format!("short factor {}", alphabet().render(&row.projection)),
            )
        })
        .collect::<Vec<_>>();
    let short_count = candidates.len();
    let class_candidates = classes
        .iter()
        .map(|row| (row.e_im.clone(), format!("class ({},{})", row.i, row.m)));
    let mut e_short = QuadNum::integer(1, &d);
    for (k, (value, label)) in candidates.into_iter().chain(class_candidates).enumerate() {
        if k < short_count && value > e_short {
            e_short = value.clone();
        }
        if best.as_ref().map_or(true, |(b, _)| value > *b) {
            best = Some((value, label));
        }
    }
    let (e, attained_by) = best.expect("non-empty");
    Ok(ExponentReport {
        e,
        e_star,
        e_short,
        h: job.h(),
        big_h: job.H(),
        classes,
        short_table: short,
        attained_by,
        flags,
    })
}

/// With `Per(y) = Per(y') = 1` the colouring is the Sturmian sequence itself.
fn sturmian_report(spec: &BalancedSpec) -> ExponentReport {
    let ex = sturmian_exponents(spec.slope());
    let attained_by = if ex.attained {
        "sturmian formula, attained at finite N"
    } else {
        "sturmian formula, limit value"
    };
    ExponentReport {
        e_short: ex.e.clone(),
        e: ex.e,
        e_star: ex.e_star,
        h: spec.slope().preperiod().len(),
        big_h: spec.slope().period().len(),
        classes: Vec::new(),
        short_table: Vec::new(),
        attained_by: attained_by.to_string(),
        flags: Vec::new(),
    }
}

/// Free-function forms of the [`Analysis`] methods.
pub fn set_s_class(spec: &BalancedSpec, i: usize, m: u64) -> Result<SSet> {
    Analysis::new(spec)?.set_s_class(i, m)
}

pub fn e_star_class(spec: &BalancedSpec, i: usize, m: u64) -> Result<Option<QuadNum>> {
    Analysis::new(spec)?.e_star_class(i, m)
}

pub fn cutoff_n0(spec: &BalancedSpec, i: usize) -> Result<usize> {
    Ok(Analysis::new(spec)?.cutoff_n0(i))
}

pub fn index_i(spec: &BalancedSpec, n: usize, m: u64, set: &SSet) -> Result<Option<QuadNum>> {
    Ok(Analysis::new(spec)?.index_i(n, m, set))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hat_keeps_incomparable() {
        let s: SSet = [SVector::new(3, 3), SVector::new(2, 4)].into();
        assert_eq!(hat_reduce(&s), s);
        let one: SSet = [SVector::new(1, 1)].into();
        assert_eq!(hat_reduce(&one), one);
    }

    #[test]
    fn empty_word_rejected() {
        let spec = BalancedSpec::parse("0;;(1)", "01", "23").unwrap();
        assert_eq!(set_s_factor(&spec, &[]), Err(Error::EmptyWord));
    }

    #[test]
    fn non_factor_rejected() {
        let spec = BalancedSpec::parse("0;;(1)", "01", "23").unwrap();
        assert!(matches!(
            set_s_factor(&spec, &[A, A]),
            Err(Error::NotAFactor(_))
        ));
    }
}
