//! CSV tables: header row, LF line endings, floats in round-trip-safe
//! scientific notation (17 significant digits).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::error::{CliError, CliResult};

pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Table {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write_to<W: Write>(&self, out: W) -> CliResult<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Writes to `path`, or stdout when no path is given.
    pub fn emit(&self, path: Option<&Path>) -> CliResult<()> {
        match path {
            Some(p) => {
                let file = File::create(p).map_err(|source| CliError::Io {
                    path: p.to_path_buf(),
                    source,
                })?;
                self.write_to(BufWriter::new(file))
            }
            None => self.write_to(BufWriter::new(io::stdout().lock())),
        }
    }
}
