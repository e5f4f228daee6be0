//! Time series on a strictly increasing grid, with CSV output.
//!
//! File layout: `#key=value` metadata lines, a header row `tau,<column>...`,
//! then one row per grid point. Values are printed with 17 significant digits
//! so a write/parse cycle is lossless.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries {
    metadata: Vec<(String, String)>,
    tau: Vec<f64>,
    columns: Vec<(String, Vec<f64>)>,
}

impl TimeSeries {
    pub fn new(tau: Vec<f64>, columns: Vec<(String, Vec<f64>)>) -> Result<Self> {
        if tau.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidArgument("time grid must be strictly increasing".into()));
        }
        for (name, col) in &columns {
            if col.len() != tau.len() {
                return Err(Error::InvalidArgument(format!(
                    "column {name:?} has {} values for {} grid points",
                    col.len(),
                    tau.len()
                )));
            }
            if name.is_empty() || name.contains([',', '\n', '#']) || name == "tau" {
                return Err(Error::InvalidArgument(format!("unusable column name {name:?}")));
            }
        }
        Ok(Self {
            metadata: Vec::new(),
            tau,
            columns,
        })
    }

    pub fn push_metadata(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.metadata.push((key.into(), value.into()));
    }

    pub fn metadata(&self) -> &[(String, String)] {
        &self.metadata
    }

    /// Last value recorded for `key`.
    pub fn metadata_value(&self, key: &str) -> Option<&str> {
        self.metadata.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn tau(&self) -> &[f64] {
        &self.tau
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn column_names(&self) -> impl Iterator<Item = &str> {
        self.columns.iter().map(|(n, _)| n.as_str())
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns.iter().find(|(n, _)| n == name).map(|(_, c)| c.as_slice())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            let v = v.replace('\n', " ");
            writeln!(out, "#{k}={v}").unwrap();
        }
        out.push_str("tau");
        for (name, _) in &self.columns {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (i, t) in self.tau.iter().enumerate() {
            write!(out, "{t:.16e}").unwrap();
            for (_, col) in &self.columns {
                write!(out, ",{:.16e}", col[i]).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut metadata = Vec::new();
        let mut lines = text.lines().enumerate();
        let header = loop {
            let (i, line) = lines
                .next()
                .ok_or_else(|| Error::Parse("missing column header row".into()))?;
            if let Some(meta) = line.strip_prefix('#') {
                let (k, v) = meta
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("line {}: metadata is not key=value", i + 1)))?;
                metadata.push((k.to_string(), v.to_string()));
            } else if !line.trim().is_empty() {
                break line;
            }
        };
        let names: Vec<&str> = header.split(',').map(str::trim).collect();
        if names.first() != Some(&"tau") {
            return Err(Error::Parse(format!("header must start with tau, got {header:?}")));
        }
        let mut tau = Vec::new();
        let mut cols: Vec<Vec<f64>> = vec![Vec::new(); names.len() - 1];
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != names.len() {
                return Err(Error::Parse(format!(
                    "line {}: {} fields, header has {}",
                    i + 1,
                    fields.len(),
                    names.len()
                )));
            }
            let mut values = fields.iter().map(|f| {
                f.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("line {}: bad number {f:?}", i + 1)))
            });
            tau.push(values.next().unwrap()?);
            for col in cols.iter_mut() {
                col.push(values.next().unwrap()?);
            }
        }
        let columns = names[1..].iter().map(|n| n.to_string()).zip(cols).collect();
        let mut series = Self::new(tau, columns).map_err(|e| Error::Parse(e.to_string()))?;
        series.metadata = metadata;
        Ok(series)
    }

    /// Writes to a temporary file in the target directory, then renames it into place.
    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(self.to_csv().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    pub fn read_csv(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse_csv(&std::fs::read_to_string(path)?)
    }
}
