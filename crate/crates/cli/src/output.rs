//! Reports as JSON documents or CSV tables.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::Value;

use crate::{exit, CliError, Format};

/// Output of one command: a JSON document, its tabular form, and the flags
/// that decide the exit status.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub has_violations: bool,
    pub not_converged: bool,
}

impl Report {
    pub fn new(json: Value, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Report {
            json,
            header,
            rows,
            has_violations: false,
            not_converged: false,
        }
    }

    /// 1 when violations were found, otherwise 3 when an integral did not
    /// converge, otherwise 0.
    pub fn status(&self) -> i32 {
        if self.has_violations {
            exit::VIOLATION
        } else if self.not_converged {
            exit::NOT_CONVERGED
        } else {
            exit::OK
        }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)
                    .map_err(|e| CliError::Io(e.into()))?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header).map_err(csv_error)?;
                for row in &self.rows {
                    w.write_record(row).map_err(csv_error)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(io::Error::other(e))
}

/// Standard output, or the file named by `--out`.
pub fn sink(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| {
            CliError::Usage(format!("cannot create {}: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Shortest round-trip decimal form; non-finite values as `inf`, `-inf`, `NaN`.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}
