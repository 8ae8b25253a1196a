use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde_json::json;

use super::config::OutputFormat;
use super::RunResult;
use crate::error::Result;

/// Scientific notation with 17 significant digits; round-trips every `f64`.
pub fn format_value(x: f64) -> String {
    format!("{x:.16e}")
}

/// `out/fig1.csv` → `out/fig1.meta.json`.
pub fn metadata_path(data_path: &Path) -> PathBuf {
    let stem = data_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "run".to_string());
    data_path.with_file_name(format!("{stem}.meta.json"))
}

fn write_csv(result: &RunResult, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{}", result.columns().join(","))?;
    for row in &result.rows {
        let line: Vec<String> = result.row_values(row).into_iter().map(format_value).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    w.flush()?;
    Ok(())
}

fn write_json(value: &serde_json::Value, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, value).map_err(std::io::Error::from)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

/// Writes `result` to `path` and returns every file created.
///
/// CSV output gets a companion metadata file next to it (see
/// [`metadata_path`]); JSON output is a single self-describing document.
pub fn emit(result: &RunResult, format: OutputFormat, path: &Path) -> Result<Vec<PathBuf>> {
    let metadata = serde_json::to_value(&result.metadata).map_err(std::io::Error::from)?;
    match format {
        OutputFormat::Csv => {
            write_csv(result, path)?;
            let meta = metadata_path(path);
            write_json(&metadata, &meta)?;
            Ok(vec![path.to_path_buf(), meta])
        }
        OutputFormat::Json => {
            let rows: Vec<Vec<f64>> = result.rows.iter().map(|r| result.row_values(r)).collect();
            let doc = json!({
                "metadata": metadata,
                "columns": result.columns(),
                "rows": rows,
            });
            write_json(&doc, path)?;
            Ok(vec![path.to_path_buf()])
        }
    }
}
