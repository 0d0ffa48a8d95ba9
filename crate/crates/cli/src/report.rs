//! Report emission.
//!
//! The machine format is one `key=value` per line: `meta.<key>`, then
//! `<table>.<row>.<column>` where `<row>` is the first cell of the row and column names
//! are lowercased with spaces turned into underscores, then `verdict.<key>`.

use std::fmt::Write as _;

use clap::ValueEnum;
use mixhom::exactlin::DegreeHomology;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Machine,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub meta: Vec<(String, String)>,
    pub tables: Vec<Table>,
    pub verdicts: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    pub fn meta(&mut self, k: &str, v: impl ToString) {
        self.meta.push((k.into(), v.to_string()));
    }

    pub fn verdict(&mut self, k: &str, v: impl ToString) {
        self.verdicts.push((k.into(), v.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.render_table(),
            Format::Machine => self.render_machine(),
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        let meta: Vec<String> = self.meta.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "{} {}", self.command, meta.join(" "));
        for t in &self.tables {
            let _ = writeln!(out, "\n[{}]", t.name);
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|j| t.rows.iter().map(|r| r[j].chars().count()).chain([t.columns[j].chars().count()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| -> String {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                padded.join(" | ")
            };
            let _ = writeln!(out, "{}", line(&t.columns));
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            let _ = writeln!(out, "{}", rule.join("-+-"));
            for r in &t.rows {
                let _ = writeln!(out, "{}", line(r));
            }
        }
        if !self.verdicts.is_empty() {
            out.push('\n');
            for (k, v) in &self.verdicts {
                let _ = writeln!(out, "{k}: {v}");
            }
        }
        out
    }

    fn render_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command={}", self.command);
        for (k, v) in &self.meta {
            let _ = writeln!(out, "meta.{k}={v}");
        }
        let key = |s: &str| s.to_lowercase().replace(' ', "_");
        for t in &self.tables {
            for r in &t.rows {
                for (c, v) in t.columns.iter().zip(r).skip(1) {
                    let _ = writeln!(out, "{}.{}.{}={}", key(&t.name), r[0], key(c), v);
                }
            }
        }
        for (k, v) in &self.verdicts {
            let _ = writeln!(out, "verdict.{}={}", key(k), v);
        }
        out
    }
}

pub fn factors(h: &DegreeHomology) -> String {
    if h.torsion.is_empty() {
        "-".into()
    } else {
        h.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
