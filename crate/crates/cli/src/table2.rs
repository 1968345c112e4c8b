//! The table of balanced sequences with least critical exponent for
//! alphabets of size 3 to 10, recomputed against stored exact values.

use std::thread;

use balanced_core::colouring::BalancedSpec;
use balanced_core::critexp::e_total;
use balanced_core::quadratic::QuadNum;
use serde::{Deserialize, Serialize};

use crate::spec_file::bundled;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub d: u32,
    pub slope: String,
    pub y: String,
    pub yp: String,
    #[serde(rename = "E")]
    pub e: QuadNum,
    #[serde(rename = "Estar")]
    pub e_star: QuadNum,
}

#[derive(Deserialize)]
struct Table {
    rows: Vec<Row>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowResult {
    pub d: u32,
    #[serde(rename = "E")]
    pub e: QuadNum,
    #[serde(rename = "Estar")]
    pub e_star: QuadNum,
    pub expected_e: QuadNum,
    pub expected_e_star: QuadNum,
    pub matches: bool,
}

/// The stored rows.
pub fn rows() -> Vec<Row> {
    serde_json::from_str::<Table>(bundled::TABLE2)
        .expect("bundled table parses")
        .rows
}

fn evaluate(row: &Row) -> Result<RowResult, CliError> {
    let spec = BalancedSpec::parse(&row.slope, &row.y, &row.yp)?;
    let report = e_total(&spec)?;
    let matches = report.e == row.e && report.e_star == row.e_star;
    Ok(RowResult {
        d: row.d,
        e: report.e,
        e_star: report.e_star,
        expected_e: row.e.clone(),
        expected_e_star: row.e_star.clone(),
        matches,
    })
}

/// Recomputes every row, one thread per row.
pub fn run(rows: &[Row]) -> Result<Vec<RowResult>, CliError> {
    thread::scope(|s| {
        let handles: Vec<_> = rows.iter().map(|r| s.spawn(move || evaluate(r))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("row worker panicked"))
            .collect()
    })
}
