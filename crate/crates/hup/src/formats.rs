//! Coefficient tables as JSON and point scans as CSV.

use std::io::{Read, Write};

use anyhow::{bail, Context, Result};
use hup_core::sphharm::HarmonicCoefficients;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One `C_k^l` entry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub k: usize,
    pub l: i64,
    pub re: f64,
    pub im: f64,
}

/// `{"n": 3, "K": K, "coeffs": [{"k", "l", "re", "im"}, ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientFile {
    pub n: usize,
    #[serde(rename = "K")]
    pub max_degree: usize,
    pub coeffs: Vec<CoefficientEntry>,
}

impl CoefficientFile {
    /// Lists the non-zero entries of a table.
    pub fn from_table(table: &HarmonicCoefficients) -> Self {
        let coeffs = table
            .iter()
            .filter(|(_, _, c)| *c != Complex64::new(0.0, 0.0))
            .map(|(k, l, c)| CoefficientEntry { k, l, re: c.re, im: c.im })
            .collect();
        Self { n: 3, max_degree: table.max_degree(), coeffs }
    }

    pub fn to_table(&self) -> Result<HarmonicCoefficients> {
        if self.n != 3 {
            bail!("coefficient tables exist only for n = 3 (got n = {})", self.n);
        }
        let mut table = HarmonicCoefficients::zeros(self.max_degree);
        for e in &self.coeffs {
            table
                .set(e.k, e.l, Complex64::new(e.re, e.im))
                .with_context(|| format!("entry k = {}, l = {}", e.k, e.l))?;
        }
        Ok(table)
    }

    pub fn read(reader: impl Read) -> Result<Self> {
        serde_json::from_reader(reader).context("malformed coefficient file")
    }

    pub fn write(&self, writer: impl Write) -> Result<()> {
        serde_json::to_writer_pretty(writer, self)?;
        Ok(())
    }
}

/// Writes `x1..xn,re,im,abs`, one row per point.
pub fn write_scan_csv(writer: impl Write, points: &[Vec<f64>], values: &[Complex64]) -> Result<()> {
    let n = points.first().map_or(0, Vec::len);
    let mut w = csv::Writer::from_writer(writer);
    let mut header: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    header.extend(["re", "im", "abs"].map(String::from));
    w.write_record(&header)?;
    for (p, v) in points.iter().zip(values) {
        let mut row: Vec<String> = p.iter().map(|x| format!("{x:?}")).collect();
        row.extend([v.re, v.im, v.norm()].map(|x| format!("{x:?}")));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads points from CSV, one per row. A first row that does not parse as
/// numbers is taken as a header.
pub fn read_points_csv(reader: impl Read) -> Result<Vec<Vec<f64>>> {
    let mut r = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(reader);
    let mut points = Vec::new();
    for (i, record) in r.records().enumerate() {
        let record = record?;
        let parsed: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(p) => points.push(p),
            Err(_) if i == 0 => continue,
            Err(e) => bail!("row {}: {e}", i + 1),
        }
    }
    Ok(points)
}
