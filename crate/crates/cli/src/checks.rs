//! Property checks run by `verify` and by the acceptance suite. Each check
//! reports a short message on success and the offending values on failure.

use std::collections::{HashMap, HashSet};

use balanced_core::colouring::{
    colour_prefix, dendric_threshold, project, saturated_colour_prefix, BalancedSpec,
};
use balanced_core::critexp::{
    hat_reduce, min_preperiod_h, short_factor_universe, shortest_return_length, Analysis,
    ExponentReport,
};
use balanced_core::quadratic::{limit_l, nondominant_eigen, period_matrix, QuadNum};
use balanced_core::sturmian::{alphabet, convergents, generate_prefix, A};
use balanced_core::words::{
    factors, is_balanced, max_fractional_power, occurrences, return_words_bruteforce, Letter,
};
use num_bigint::BigInt;
use num_rational::Ratio;

use crate::spec_file::Expected;

pub type Outcome = Result<String, String>;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.outcome {
            Ok(msg) => format!("[PASS] {}: {msg}", self.name),
            Err(msg) => format!("[FAIL] {}: {msg}", self.name),
        }
    }
}

fn ratio_to_quad(r: Ratio<u64>, d: &BigInt) -> QuadNum {
    QuadNum::rational(*r.numer(), *r.denom(), d).expect("non-zero denominator")
}

pub fn e_dominates(report: &ExponentReport) -> Outcome {
    if report.e >= report.e_star {
        Ok(format!("{} >= {}", report.e, report.e_star))
    } else {
        Err(format!("E = {} < E* = {}", report.e, report.e_star))
    }
}

pub fn lower_bound(spec: &BalancedSpec, report: &ExponentReport) -> Outcome {
    let bound = QuadNum::rational(1, spec.per_product(), report.e_star.d()).expect("positive") + 1;
    if report.e_star >= bound {
        Ok(format!("E* = {} >= {}", report.e_star, bound))
    } else {
        Err(format!("E* = {} < {}", report.e_star, bound))
    }
}

/// Largest exponent in the coloured prefix, with every root length.
pub fn oracle_exponent(spec: &BalancedSpec, prefix: usize) -> Ratio<u64> {
    let v = colour_prefix(spec, prefix);
    max_fractional_power(&v, v.len())
        .map(|p| p.exponent)
        .unwrap_or_else(|| Ratio::from(1))
}

pub fn oracle_below(spec: &BalancedSpec, report: &ExponentReport, prefix: usize) -> Outcome {
    let found = oracle_exponent(spec, prefix);
    let q = ratio_to_quad(found, report.e.d());
    if q <= report.e {
        Ok(format!("prefix {prefix}: {found} <= E"))
    } else {
        Err(format!("prefix {prefix}: {found} exceeds E = {}", report.e))
    }
}

pub fn balanced(spec: &BalancedSpec, prefix: usize) -> Outcome {
    let v = colour_prefix(spec, prefix);
    if is_balanced(&v, 40) {
        Ok(format!("{prefix} letters, windows up to 40"))
    } else {
        Err(format!("unbalanced window in the first {prefix} letters"))
    }
}

pub fn projection(spec: &BalancedSpec, prefix: usize) -> Outcome {
    let v = colour_prefix(spec, prefix);
    match project(&v, spec) {
        Ok(u) if u == generate_prefix(spec.slope(), prefix) => Ok(format!("{prefix} letters")),
        Ok(_) => Err("projection differs from the Sturmian prefix".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Factor counts from the threshold on against `Per Per' (n + 1)`.
pub fn complexity_formula(spec: &BalancedSpec) -> Outcome {
    let t = dendric_threshold(spec);
    let v = saturated_colour_prefix(spec, t + 8);
    for n in t..=t + 8 {
        let got = factors(&v, n).len();
        let want = spec.per_product() * (n + 1);
        if got != want {
            return Err(format!("n = {n}: {got} factors, formula {want}"));
        }
    }
    Ok(format!("n = {t}..={}", t + 8))
}

/// Return-word counts of three long factors; the prefix doubles until the
/// count reaches `1 + Per Per'`, which it cannot exceed.
pub fn return_word_counts(spec: &BalancedSpec) -> Outcome {
    let t = dendric_threshold(spec).max(1);
    let want = 1 + spec.per_product();
    let starts = [0usize, 7, 31];
    let mut len = 50_000;
    let mut v = colour_prefix(spec, len);
    for &i in &starts {
        loop {
            let w = v[i..i + t].to_vec();
            let got = return_words_bruteforce(&w, &v).map(|r| r.len()).unwrap_or(0);
            if got == want {
                break;
            }
            if got > want || len >= 3_200_000 {
                return Err(format!(
                    "{}: {got} return words, formula {want}",
                    spec.alphabet().render(&w)
                ));
            }
            len *= 2;
            v = colour_prefix(spec, len);
        }
    }
    Ok(format!("{} factors of length {t}, {want} each", starts.len()))
}

/// Shortest return over all coloured words projecting onto `u`, by scanning.
pub fn brute_shortest_return(spec: &BalancedSpec, u: &[Letter], len: usize) -> Option<usize> {
    let v = colour_prefix(spec, len);
    let w = generate_prefix(spec.slope(), len);
    let n = u.len();
    let mut last: HashMap<&[Letter], usize> = HashMap::new();
    let mut best: Option<usize> = None;
    for i in 0..=len.saturating_sub(n) {
        if &w[i..i + n] == u {
            if let Some(j) = last.insert(&v[i..i + n], i) {
                best = Some(best.map_or(i - j, |b| b.min(i - j)));
            }
        }
    }
    best
}

pub fn short_returns(spec: &BalancedSpec) -> Outcome {
    if spec.per_product() == 1 {
        return Ok("no short universe".into());
    }
    let universe = short_factor_universe(spec, min_preperiod_h(spec));
    for u in &universe {
        let formula = shortest_return_length(spec, u).map_err(|e| e.to_string())?;
        let brute = brute_shortest_return(spec, u, 100_000).map(BigInt::from);
        if formula != brute {
            return Err(format!(
                "{}: formula {formula:?}, scan {brute:?}",
                alphabet().render(u)
            ));
        }
    }
    Ok(format!("{} projections", universe.len()))
}

/// `I(h + i + tH, m) <= E*(i, m)` for `N0 <= t < N0 + 3`.
pub fn cutoff_spot_check(spec: &BalancedSpec) -> Outcome {
    if spec.per_product() == 1 {
        return Ok("no classes".into());
    }
    let mut job = Analysis::new(spec).map_err(|e| e.to_string())?;
    let mut count = 0;
    for (i, m) in job.classes() {
        let s = hat_reduce(&job.set_s_class(i, m).map_err(|e| e.to_string())?);
        let Some(e) = job.e_star_class(i, m).map_err(|e| e.to_string())? else {
            continue;
        };
        let n0 = job.cutoff_n0(i);
        for t in n0..n0 + 3 {
            let n = job.h() + i + t * job.H();
            if let Some(v) = job.index_i(n, m, &s) {
                if v > e {
                    return Err(format!("class ({i},{m}), N = {n}: I = {v} > E* = {e}"));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} values"))
}

/// `Q_{MN+h+i-1} - L_i Q_{MN+h+i} = lambda^N (Q_{h+i-1} - L_i Q_{h+i})`.
pub fn discrepancy(spec: &BalancedSpec) -> Outcome {
    let slope = spec.slope();
    let h = slope.preperiod().len();
    let z = slope.period_from(h);
    let m = z.len();
    let a = period_matrix(&z, 0).map_err(|e| e.to_string())?;
    let (lambda, _) = nondominant_eigen(&a).map_err(|e| e.to_string())?;
    let d = slope.field();
    let c = convergents(slope, h + 6 * m + m);
    for i in 0..m {
        let l = limit_l(&z, i).map_err(|e| e.to_string())?;
        let disc = |n: usize| {
            QuadNum::integer(c.Q(n as isize - 1), &d) - &l * &QuadNum::integer(c.Q(n as isize), &d)
        };
        let base = disc(h + i);
        for big_n in 0..=5u32 {
            if disc(m * big_n as usize + h + i) != &lambda.pow(big_n) * &base {
                return Err(format!("i = {i}, N = {big_n}"));
            }
        }
    }
    Ok("N = 0..5".into())
}

/// Prefixes before occurrences of the first two letters reach every
/// residue class of Parikh vectors modulo 2 and 3.
pub fn well_distributed(spec: &BalancedSpec, prefix: usize) -> Outcome {
    let u = generate_prefix(spec.slope(), prefix);
    let w = &u[..2];
    for m in [2usize, 3] {
        let mut seen = HashSet::new();
        let (mut na, mut nb, mut last) = (0, 0, 0);
        for i in occurrences(w, &u) {
            for &x in &u[last..i] {
                if x == A {
                    na += 1;
                } else {
                    nb += 1;
                }
            }
            last = i;
            seen.insert((na % m, nb % m));
        }
        if seen.len() != m * m {
            return Err(format!("{} classes modulo {m}", seen.len()));
        }
    }
    Ok("moduli 2 and 3".into())
}

pub fn expected_values(report: &ExponentReport, expected: &Expected) -> Outcome {
    let mut bad = Vec::new();
    if let Some(e) = &expected.e {
        if *e != report.e {
            bad.push(format!("E = {}, expected {e}", report.e));
        }
    }
    if let Some(e) = &expected.e_star {
        if *e != report.e_star {
            bad.push(format!("E* = {}, expected {e}", report.e_star));
        }
    }
    if bad.is_empty() {
        Ok("stored values reproduced".into())
    } else {
        Err(bad.join("; "))
    }
}

/// Every check, in a fixed order.
pub fn run_all(
    spec: &BalancedSpec,
    report: &ExponentReport,
    oracle_prefix: usize,
    expected: Option<&Expected>,
) -> Vec<Check> {
    let mut out = Vec::new();
    if let Some(x) = expected {
        out.push(Check {
            name: "expected values",
            outcome: expected_values(report, x),
        });
    }
    let small = oracle_prefix.min(10_000);
    let list: Vec<(&'static str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("E >= E*", Box::new(|| e_dominates(report))),
        ("lower bound", Box::new(|| lower_bound(spec, report))),
        ("oracle", Box::new(|| oracle_below(spec, report, oracle_prefix))),
        ("balanced", Box::new(|| balanced(spec, small))),
        ("projection", Box::new(|| projection(spec, small))),
        ("complexity", Box::new(|| complexity_formula(spec))),
        ("return words", Box::new(|| return_word_counts(spec))),
        ("shortest returns", Box::new(|| short_returns(spec))),
        ("cutoff", Box::new(|| cutoff_spot_check(spec))),
        ("discrepancy", Box::new(|| discrepancy(spec))),
        ("well distributed", Box::new(|| well_distributed(spec, small))),
    ];
    for (name, f) in list {
        out.push(Check {
            name,
            outcome: f(),
        });
    }
    out
}
