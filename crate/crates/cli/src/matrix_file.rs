//! JSON matrix input: `{"rows": 2, "cols": 2, "entries": [["3", "4"], ["2", "1/2"]]}`.

use std::path::Path;

use matint_core::{Rational, RationalMatrix};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &RationalMatrix) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(Rational::to_string).collect())
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Io(format!("invalid matrix file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        MatrixFile::parse(&text)
    }

    pub fn to_matrix(&self) -> Result<RationalMatrix, CliError> {
        let invalid = |msg: String| CliError::Io(format!("invalid matrix file: {msg}"));
        if self.entries.len() != self.rows {
            return Err(invalid(format!(
                "declared {} rows, found {}",
                self.rows,
                self.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(invalid(format!(
                    "row {} has {} entries, declared {}",
                    r + 1,
                    row.len(),
                    self.cols
                )));
            }
            let parsed = row
                .iter()
                .map(|s| s.trim().parse::<Rational>().map_err(|e| invalid(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(parsed);
        }
        RationalMatrix::from_rows(rows).map_err(|e| invalid(e.to_string()))
    }
}
