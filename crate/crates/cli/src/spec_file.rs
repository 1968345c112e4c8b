//! The JSON spec file:
//! `{"slope": "0;2,3;(2)", "y": "01", "yp": "2345...", "shift_y": 0, "shift_yp": 0}`
//! with an optional `expected` block holding `E` and `Estar`.

use std::path::Path;

use balanced_core::colouring::BalancedSpec;
use balanced_core::constant_gap::ConstantGapSeq;
use balanced_core::quadratic::QuadNum;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecFile {
    pub slope: String,
    pub y: String,
    pub yp: String,
    #[serde(default)]
    pub shift_y: usize,
    #[serde(default)]
    pub shift_yp: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Expected {
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub e: Option<QuadNum>,
    #[serde(rename = "Estar", default, skip_serializing_if = "Option::is_none")]
    pub e_star: Option<QuadNum>,
}

impl SpecFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_spec(&self) -> Result<BalancedSpec, CliError> {
        Ok(BalancedSpec::new(
            self.slope.parse()?,
            ConstantGapSeq::parse(&self.y)?,
            ConstantGapSeq::parse(&self.yp)?,
            self.shift_y,
            self.shift_yp,
        )?)
    }

    pub fn from_spec(spec: &BalancedSpec) -> Self {
        let (shift_y, shift_yp) = spec.shifts();
        SpecFile {
            slope: spec.slope().to_string(),
            y: spec.y().render(),
            yp: spec.yp().render(),
            shift_y,
            shift_yp,
            expected: None,
        }
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

/// The specs shipped in `fixtures/`.
pub mod bundled {
    pub const X9: &str = include_str!("../fixtures/x9.json");
    pub const WORKED_EXAMPLE: &str = include_str!("../fixtures/lubka.json");
    pub const TABLE2: &str = include_str!("../fixtures/table2.json");
}
