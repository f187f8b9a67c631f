//! Data-file ingestion: comma-separated (x, f) rows, optional header,
//! `-` for stdin, parse errors reported with line numbers.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use clampline::{Error, SplineInput};

#[derive(Debug)]
pub struct DataFile {
    pub xs: Vec<f64>,
    pub fs: Vec<f64>,
    /// 1-based source line of each row, for error reporting.
    lines: Vec<usize>,
}

impl DataFile {
    pub fn read(path: &str) -> Result<Self> {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            buf
        } else {
            fs::read_to_string(path).with_context(|| format!("reading {path}"))?
        };
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut xs = Vec::new();
        let mut fs = Vec::new();
        let mut lines = Vec::new();
        let mut saw_data = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 2 {
                // A single non-numeric first line is an accepted header.
                if !saw_data && fields.iter().all(|f| f.parse::<f64>().is_err()) {
                    continue;
                }
                bail!("line {line_no}: expected 2 comma-separated fields, got {}", fields.len());
            }
            let parsed: std::result::Result<Vec<f64>, _> =
                fields.iter().map(|f| f.parse::<f64>()).collect();
            match parsed {
                Ok(pair) => {
                    xs.push(pair[0]);
                    fs.push(pair[1]);
                    lines.push(line_no);
                    saw_data = true;
                }
                Err(_) if !saw_data => continue, // header line
                Err(e) => bail!("line {line_no}: {e}"),
            }
        }
        if xs.is_empty() {
            bail!("no data rows found");
        }
        Ok(Self { xs, fs, lines })
    }

    /// Builds spline input, mapping knot-order violations back to source
    /// line numbers.
    pub fn into_input(self, left_derivative: f64, right_derivative: f64) -> Result<SplineInput> {
        SplineInput::from_data(self.xs, self.fs, left_derivative, right_derivative).map_err(|e| {
            match e {
                Error::NonIncreasingKnots { index, .. } => anyhow!(
                    "{e} (line {})",
                    self.lines.get(index).copied().unwrap_or(index + 1)
                ),
                Error::NonFinite { index, .. } => anyhow!(
                    "{e} (line {})",
                    self.lines.get(index).copied().unwrap_or(index + 1)
                ),
                other => anyhow!(other),
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_rows() {
        let d = DataFile::parse("0,1\n1,2\n2,4\n").unwrap();
        assert_eq!(d.xs, vec![0.0, 1.0, 2.0]);
        assert_eq!(d.fs, vec![1.0, 2.0, 4.0]);
    }

    #[test]
    fn skips_header_and_comments() {
        let d = DataFile::parse("x,f\n# comment\n0,1\n1,2\n2,4\n").unwrap();
        assert_eq!(d.xs.len(), 3);
    }

    #[test]
    fn reports_line_of_malformed_row() {
        let err = DataFile::parse("0,1\n1,2\na,b,c\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn reports_line_of_bad_number_after_data() {
        let err = DataFile::parse("0,1\nbad,2\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn maps_knot_order_violation_to_line() {
        let err = DataFile::parse("0,1\n2,2\n1,3\n")
            .unwrap()
            .into_input(0.0, 0.0)
            .unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }
}
