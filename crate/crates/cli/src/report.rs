//! JSON-serialisable command results and their text renderings.

use std::fmt;

use schur_core::cayley::AutOrder;
use schur_core::construct::ConstructionCertificate;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub group: String,
    pub order: usize,
    pub set: Vec<String>,
    /// Order of the subgroup generated by `set`.
    pub generated_order: usize,
    pub basic_sets: Vec<Vec<String>>,
    pub rank: usize,
    pub trivial: bool,
}

impl fmt::Display for ClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "<<C>> for C = {{{}}} in {}",
            self.set.join(", "),
            self.group
        )?;
        if self.generated_order != self.order {
            writeln!(
                f,
                "note: C generates a subgroup of order {}",
                self.generated_order
            )?;
        }
        for (i, set) in self.basic_sets.iter().enumerate() {
            writeln!(f, "B{i} = {{{}}}", set.join(", "))?;
        }
        writeln!(f, "rank: {} of {}", self.rank, self.order)?;
        write!(f, "trivial: {}", if self.trivial { "yes" } else { "no" })
    }
}

pub struct CertificateText<'a>(pub &'a ConstructionCertificate);

impl fmt::Display for CertificateText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0;
        writeln!(f, "{}", c.spec)?;
        writeln!(f, "method: {}", c.certificate.method)?;
        if let Some(t) = c.certificate.trivial_closure {
            writeln!(f, "trivial closure: {}", if t { "yes" } else { "no" })?;
        }
        if let Some(order) = &c.certificate.aut_order {
            writeln!(f, "|Aut|: {order}")?;
        }
        write!(
            f,
            "GRR: {}",
            if c.certificate.is_grr { "yes" } else { "no" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub p: u32,
    pub r: u32,
    pub s: u32,
    pub t: u32,
    pub connecting_set: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut_order: Option<AutOrder>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    pub notes: Vec<String>,
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let certify = self.rows.iter().any(|r| r.certified.is_some());
        let mut lines = vec![format!(
            "{:>4} {:>4} {:>4} {:>4}  {:<28}",
            "p", "r", "s", "t", "connecting set"
        )];
        if certify {
            lines[0].push_str("  certified  |Aut|");
        }
        for row in &self.rows {
            let set = format!("{{{}}}", row.connecting_set.join(", "));
            let mut line = format!(
                "{:>4} {:>4} {:>4} {:>4}  {set:<28}",
                row.p, row.r, row.s, row.t
            );
            if let Some(c) = row.certified {
                let order = row
                    .aut_order
                    .as_ref()
                    .map_or("-".to_string(), ToString::to_string);
                line.push_str(&format!("  {:<9}  {order}", if c { "yes" } else { "no" }));
            }
            lines.push(line);
        }
        let body: Vec<&str> = lines.iter().map(|l| l.trim_end()).collect();
        f.write_str(&body.join("\n"))?;
        for note in &self.notes {
            write!(f, "\nnote: {note}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemResult {
    pub id: String,
    pub group: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproduceReport {
    pub items: Vec<ItemResult>,
    pub passed: usize,
    pub failed: Vec<String>,
}

impl fmt::Display for ReproduceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let status = if item.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {:<24} {}", item.id, item.detail)?;
        }
        write!(f, "{} passed, {} failed", self.passed, self.failed.len())?;
        if !self.failed.is_empty() {
            write!(f, ": {}", self.failed.join(", "))?;
        }
        Ok(())
    }
}
