//! CSV ingestion: one point per row, numeric columns only.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use crate::error::CliError;

/// Reads points from a CSV file. I/O failures map to exit code 2,
/// parse failures to 3.
pub fn read_points(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::io(format!("cannot open {}", path.display()), e))?;
    parse_points(BufReader::new(file), &path.display().to_string())
}

/// Parses rows of comma-separated numbers. A first row that is not
/// fully numeric is taken to be a header and skipped; empty lines are
/// ignored. Row index (after the header, if any) is the point id.
pub fn parse_points<R: Read>(reader: BufReader<R>, name: &str) -> Result<Vec<Vec<f64>>, CliError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut first_data_line = true;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| CliError::io(format!("cannot read {name}"), e))?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let parsed: Result<Vec<f64>, _> = trimmed
            .split(',')
            .map(|field| field.trim().parse::<f64>())
            .collect();
        match parsed {
            Ok(row) => rows.push(row),
            Err(_) if first_data_line => {
                // header row, skip
            }
            Err(_) => {
                return Err(CliError::Data(format!(
                    "{name}: line {} is not numeric: {trimmed:?}",
                    lineno + 1
                )));
            }
        }
        first_data_line = false;
    }
    if rows.is_empty() {
        return Err(CliError::Data(format!("{name}: no data rows")));
    }
    Ok(rows)
}
