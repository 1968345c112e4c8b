//! Plain-text tables for reports. JSON output goes through serde directly.

use std::fmt::Write;

use balanced_core::critexp::{ClassRow, ExponentReport};
use balanced_core::quadratic::QuadNum;

use crate::table2::RowResult;

fn value(x: &QuadNum) -> String {
    format!("{x}  ~ {}", x.approx())
}

fn sets(row: &ClassRow) -> String {
    row.s_hat
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn class_table(out: &mut String, classes: &[ClassRow]) {
    if classes.is_empty() {
        return;
    }
    writeln!(out, "{:>4} {:>3}  {:<18} {:>3}  {:<28} E*(i,m)", "i", "m", "S_hat", "N0", "L_i").unwrap();
    for row in classes {
        writeln!(
            out,
            "{:>4} {:>3}  {:<18} {:>3}  {:<28} {}",
            row.i,
            row.m,
            sets(row),
            row.n0,
            row.l.to_string(),
            value(&row.e_star_im)
        )
        .unwrap();
    }
}

pub fn report(r: &ExponentReport) -> String {
    let mut out = String::new();
    writeln!(out, "E       = {}", value(&r.e)).unwrap();
    writeln!(out, "E*      = {}", value(&r.e_star)).unwrap();
    writeln!(out, "E_short = {}", value(&r.e_short)).unwrap();
    writeln!(out, "h = {}, H = {}", r.h, r.big_h).unwrap();
    writeln!(out, "attained by {}", r.attained_by).unwrap();
    for flag in &r.flags {
        writeln!(out, "note: {flag}").unwrap();
    }
    if !r.classes.is_empty() {
        writeln!(out).unwrap();
        class_table(&mut out, &r.classes);
    }
    if !r.short_table.is_empty() {
        writeln!(out).unwrap();
        writeln!(out, "{:<20} {:>8}  ratio", "projection", "return").unwrap();
        for row in &r.short_table {
            let ret = row
                .ret_len
                .as_ref()
                .map_or_else(|| "-".to_string(), |x| x.to_string());
            writeln!(
                out,
                "{:<20} {:>8}  {}/{}",
                balanced_core::sturmian::alphabet().render(&row.projection),
                ret,
                row.ratio.numer(),
                row.ratio.denom()
            )
            .unwrap();
        }
    }
    out
}

pub fn table2(rows: &[RowResult]) -> String {
    let mut out = String::new();
    writeln!(out, "{:>3}  {:<26} {:<34} status", "d", "E", "E*").unwrap();
    for r in rows {
        let status = if r.matches {
            "ok".to_string()
        } else {
            format!(
                "MISMATCH (expected E = {}, E* = {})",
                r.expected_e, r.expected_e_star
            )
        };
        writeln!(
            out,
            "{:>3}  {:<26} {:<34} {status}",
            r.d,
            r.e.to_string(),
            r.e_star.to_string()
        )
        .unwrap();
    }
    out
}
