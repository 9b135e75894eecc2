//! Rendering of branching results as JSON, aligned tables and TSV.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::branching::BranchingResult;
use crate::error::{Error, Result};

/// Output formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Tsv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

/// One spectrum line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub mu: String,
    pub mult: u64,
}

/// The serialised form of a [`BranchingResult`]; weights are in their text
/// form and entries are sorted by window height, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub pair: String,
    pub lambda: String,
    pub method: String,
    pub sign: i32,
    pub window: String,
    pub multiplicity_free: bool,
    pub spectrum: Vec<SpectrumEntry>,
}

impl Report {
    pub fn new(r: &BranchingResult) -> Report {
        Report {
            pair: r.pair.clone(),
            lambda: r.lambda.to_string(),
            method: r.method.name().to_string(),
            sign: r.sign,
            window: format!("<{}, mu> <= {}", r.window.functional, r.window.bound),
            multiplicity_free: r.multiplicity_free(),
            spectrum: r
                .sorted()
                .into_iter()
                .map(|(mu, mult)| SpectrumEntry {
                    mu: mu.to_string(),
                    mult,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Aligned table with a header block.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "pair    {}", self.pair);
        let _ = writeln!(s, "lambda  {}", self.lambda);
        let _ = writeln!(s, "method  {} (sign {:+})", self.method, self.sign);
        let _ = writeln!(s, "window  {}", self.window);
        let _ = writeln!(
            s,
            "multiplicity free within window: {}",
            if self.multiplicity_free { "yes" } else { "no" }
        );
        let width = self.spectrum.iter().map(|e| e.mu.chars().count()).max().unwrap_or(2).max(2);
        let _ = writeln!(s, "{:<width$}  mult", "mu");
        for e in &self.spectrum {
            let pad = width - e.mu.chars().count();
            let _ = writeln!(s, "{}{}  {}", e.mu, " ".repeat(pad), e.mult);
        }
        s
    }

    /// `mu<TAB>mult` lines after a `#` header line.
    pub fn to_tsv(&self) -> String {
        let mut s = format!("# {}\t{}\t{}\n", self.pair, self.lambda, self.method);
        for e in &self.spectrum {
            let _ = writeln!(s, "{}\t{}", e.mu, e.mult);
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Json => self.to_json() + "\n",
            Format::Tsv => self.to_tsv(),
        }
    }
}

/// Entries present in one report but not matching in the other, as
/// `mu<TAB>left<TAB>right` lines.
pub fn diff(a: &Report, b: &Report) -> Vec<String> {
    let get = |r: &Report| -> std::collections::BTreeMap<String, u64> {
        r.spectrum.iter().map(|e| (e.mu.clone(), e.mult)).collect()
    };
    let (x, y) = (get(a), get(b));
    let mut keys: Vec<&String> = x.keys().chain(y.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter(|k| x.get(*k) != y.get(*k))
        .map(|k| {
            format!(
                "{k}\t{}\t{}",
                x.get(k).copied().unwrap_or(0),
                y.get(k).copied().unwrap_or(0)
            )
        })
        .collect()
}
