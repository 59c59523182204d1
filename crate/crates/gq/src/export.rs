//! CSV and OBJ writers for [`SurfaceSample`], and atomic file output.

use std::io::{self, Write};
use std::path::Path;

use thiserror::Error;

use crate::sample::SurfaceSample;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub const CSV_HEADER: [&str; 7] = ["x1", "x2", "x3", "x4", "X", "Y", "Z"];

/// 17 significant digits.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn check_finite(sample: &SurfaceSample) -> Result<(), ExportError> {
    for (index, p) in sample.points.iter().enumerate() {
        let bell = p.bell.unwrap_or([0.0; 3]);
        if p.x
            .iter()
            .chain(&bell)
            .chain(&p.chart)
            .any(|v| !v.is_finite())
        {
            return Err(ExportError::NonFinite { index });
        }
    }
    Ok(())
}

/// Writes `x1,x2,x3,x4,X,Y,Z` rows; the Bell columns are empty when the
/// sample has no Bell frame.
pub fn write_csv<W: Write>(sample: &SurfaceSample, out: W) -> Result<(), ExportError> {
    check_finite(sample)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for p in &sample.points {
        let mut row: Vec<String> = p.x.iter().copied().map(format_float).collect();
        match p.bell {
            Some(b) => row.extend(b.iter().copied().map(format_float)),
            None => row.extend(std::iter::repeat_n(String::new(), 3)),
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `v x y z` records in chart coordinates and `l i j` segments
/// (1-based, as OBJ requires).
pub fn write_obj<W: Write>(sample: &SurfaceSample, mut out: W) -> Result<(), ExportError> {
    check_finite(sample)?;
    writeln!(
        out,
        "# gq {} seed={} n={}",
        sample.label, sample.seed, sample.requested
    )?;
    for p in &sample.points {
        let [x, y, z] = p.chart.map(format_float);
        writeln!(out, "v {x} {y} {z}")?;
    }
    for (i, j) in &sample.segments {
        writeln!(out, "l {} {}", i + 1, j + 1)?;
    }
    out.flush()?;
    Ok(())
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// One parsed CSV row: ambient coordinates and optional Bell coordinates.
pub type CsvRow = ([f64; 4], Option<[f64; 3]>);

/// Reads back a CSV produced by [`write_csv`].
pub fn read_csv<R: io::Read>(input: R) -> Result<Vec<CsvRow>, ExportError> {
    let mut rdr = csv::Reader::from_reader(input);
    let bad =
        |msg: &str| ExportError::Io(io::Error::new(io::ErrorKind::InvalidData, msg.to_string()));
    let headers = rdr.headers()?.clone();
    if headers.iter().ne(CSV_HEADER) {
        return Err(bad("unexpected CSV header"));
    }
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let num = |i: usize| rec[i].parse::<f64>().map_err(|_| bad("malformed float"));
        let x = [num(0)?, num(1)?, num(2)?, num(3)?];
        let bell = if rec[4].is_empty() {
            None
        } else {
            Some([num(4)?, num(5)?, num(6)?])
        };
        rows.push((x, bell));
    }
    Ok(rows)
}
