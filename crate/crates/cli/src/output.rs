use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

/// Output encodings shared by all commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Bfile,
}

/// Exact JSON number for an arbitrary-size integer.
pub fn number(x: &BigInt) -> Value {
    Value::Number(
        x.to_string()
            .parse::<Number>()
            .expect("integers are valid JSON numbers"),
    )
}

/// A one-index sequence `a(offset), a(offset+1), ...`.
pub struct Sequence {
    pub name: String,
    pub terms: Vec<(usize, BigInt)>,
}

impl Sequence {
    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Bfile => {
                for (n, a) in &self.terms {
                    writeln!(out, "{n} {a}").unwrap();
                }
            }
            Format::Csv => {
                writeln!(out, "n,{}", self.name).unwrap();
                for (n, a) in &self.terms {
                    writeln!(out, "{n},{a}").unwrap();
                }
            }
            Format::Json => {
                let value = json!({
                    "sequence": self.name,
                    "offset": self.terms.first().map_or(0, |t| t.0),
                    "values": self.terms.iter().map(|(_, a)| number(a)).collect::<Vec<_>>(),
                });
                writeln!(out, "{value}").unwrap();
            }
            Format::Text => {
                let width = self
                    .terms
                    .iter()
                    .map(|(n, _)| n.to_string().len())
                    .max()
                    .unwrap_or(1);
                for (n, a) in &self.terms {
                    writeln!(out, "{} {n:>width$}  {a}", self.name).unwrap();
                }
            }
        }
        out
    }
}

/// One cell of a two-index table, with the printed value when it differs.
pub struct Entry {
    pub n: usize,
    pub row: usize,
    pub value: BigInt,
    pub printed: Option<u64>,
}

/// A table indexed by `n` and a row label (`k` or `m`).
pub struct Grid {
    pub name: String,
    pub row_label: &'static str,
    pub entries: Vec<Entry>,
}

impl Grid {
    pub fn render(&self, format: Format) -> Option<String> {
        let mut out = String::new();
        match format {
            Format::Bfile => return None,
            Format::Csv => {
                writeln!(out, "n,{},value,printed", self.row_label).unwrap();
                for e in &self.entries {
                    let printed = e.printed.map(|p| p.to_string()).unwrap_or_default();
                    writeln!(out, "{},{},{},{printed}", e.n, e.row, e.value).unwrap();
                }
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .entries
                    .iter()
                    .map(|e| {
                        let mut v =
                            json!({ "n": e.n, self.row_label: e.row, "value": number(&e.value) });
                        if let Some(p) = e.printed {
                            v["printed"] = json!(p);
                        }
                        v
                    })
                    .collect();
                writeln!(out, "{}", json!({ "table": self.name, "entries": rows })).unwrap();
            }
            Format::Text => {
                let max_n = self.entries.iter().map(|e| e.n).max().unwrap_or(0);
                let min_n = self.entries.iter().map(|e| e.n).min().unwrap_or(0);
                let max_row = self.entries.iter().map(|e| e.row).max().unwrap_or(0);
                let cell = |n: usize, r: usize| {
                    self.entries
                        .iter()
                        .find(|e| e.n == n && e.row == r)
                        .map(|e| {
                            let mark = if e.printed.is_some() { "*" } else { "" };
                            format!("{}{mark}", e.value)
                        })
                };
                let width = self
                    .entries
                    .iter()
                    .map(|e| e.value.to_string().len() + usize::from(e.printed.is_some()))
                    .max()
                    .unwrap_or(1)
                    .max(3);
                write!(out, "{:>4}", format!("{}\\n", self.row_label)).unwrap();
                for n in min_n..=max_n {
                    write!(out, " {n:>width$}").unwrap();
                }
                out.push('\n');
                for r in 0..=max_row {
                    write!(out, "{r:>4}").unwrap();
                    for n in min_n..=max_n {
                        write!(out, " {:>width$}", cell(n, r).unwrap_or_default()).unwrap();
                    }
                    out.push('\n');
                }
                for e in self.entries.iter().filter(|e| e.printed.is_some()) {
                    writeln!(
                        out,
                        "* n={} {}={}: computed {}, printed value {} differs",
                        e.n,
                        self.row_label,
                        e.row,
                        e.value,
                        e.printed.unwrap()
                    )
                    .unwrap();
                }
            }
        }
        Some(out)
    }
}
