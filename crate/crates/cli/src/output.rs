//! Text, JSON and CSV renderings of command results.

use std::fmt::Write as _;

use hvec_core::fib_bound::Containment;
use hvec_core::table::OutputRecord;
use hvec_core::HVector;
use serde::ser::{Serialize, SerializeMap, Serializer};

/// One vector per line, digit-concatenated when every entry is a single digit.
pub fn vectors_text(vectors: &[HVector]) -> String {
    let mut out = String::new();
    for v in vectors {
        let _ = writeln!(out, "{v}");
    }
    out
}

pub fn vectors_json(vectors: &[HVector]) -> String {
    let arrays: Vec<&[u64]> = vectors.iter().map(HVector::entries).collect();
    let mut out = serde_json::to_string(&arrays).expect("integer arrays serialize");
    out.push('\n');
    out
}

/// Header row of column identifiers, then one row per record. No quoting,
/// LF line endings.
pub fn table_csv(columns: &[String], records: &[OutputRecord]) -> String {
    let mut out = String::from("n");
    for c in columns {
        out.push(',');
        out.push_str(c);
    }
    out.push('\n');
    for r in records {
        let _ = write!(out, "{}", r.n);
        for (_, v) in &r.values {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
    }
    out
}

struct JsonRecord<'a>(&'a OutputRecord);

impl Serialize for JsonRecord<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.values.len() + 1))?;
        map.serialize_entry("n", &self.0.n)?;
        for (column, value) in &self.0.values {
            map.serialize_entry(&column.to_string(), value)?;
        }
        map.end()
    }
}

/// An array of objects keyed by `n` and the column identifiers, in
/// request order.
pub fn table_json(records: &[OutputRecord]) -> String {
    let rows: Vec<JsonRecord<'_>> = records.iter().map(JsonRecord).collect();
    let mut out = serde_json::to_string_pretty(&rows).expect("records serialize");
    out.push('\n');
    out
}

/// Bounds from both sides for one `n`.
pub struct BoundsLine {
    pub n: u64,
    pub distinct_parts: u64,
    pub ell: u64,
    pub fib: u64,
    pub containment: Containment,
}

/// Witnesses listed per line in the bounds report.
pub const WITNESS_LIMIT: usize = 3;

impl BoundsLine {
    pub fn passes(&self) -> bool {
        self.distinct_parts <= self.ell && self.ell <= self.fib && self.containment.subset_holds
    }

    /// `n=7: 4 <= 12 <= 13 PASS deficit=1 witnesses=124`
    pub fn render(&self) -> String {
        let verdict = if self.passes() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "n={}: {} <= {} <= {} {} deficit={}",
            self.n,
            self.distinct_parts,
            self.ell,
            self.fib,
            verdict,
            self.fib.saturating_sub(self.ell)
        );
        if !self.containment.subset_holds {
            line.push_str(" containment=FAIL");
        }
        if !self.containment.witnesses.is_empty() {
            let shown: Vec<String> = self
                .containment
                .witnesses
                .iter()
                .take(WITNESS_LIMIT)
                .map(ToString::to_string)
                .collect();
            let _ = write!(line, " witnesses={}", shown.join(" "));
            if self.containment.witnesses.len() > WITNESS_LIMIT {
                line.push_str(" ...");
            }
        }
        line
    }
}
