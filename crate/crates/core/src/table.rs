//! Rows of counting sequences, one per length `n`.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::{count_by_length, enumerate_by_length, tau_direct};
use crate::error::{domain, Error, Result};
use crate::fib_bound::fib;
use crate::lefschetz::{has_wlp, is_symmetric, is_unimodal};
use crate::staircase::distinct_partitions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Column {
    /// `l(n)`
    Ell,
    Fib,
    Wlp,
    Unimodal,
    Symmetric,
    /// `l_k(n)`, written `l<k>`.
    FirstEntry(u64),
    Tau,
    /// Partitions of `n` into at least two distinct parts.
    DistinctParts,
}

impl Column {
    /// Columns that need the full list of vectors rather than a count.
    fn needs_census(&self) -> bool {
        matches!(
            self,
            Column::Wlp | Column::Unimodal | Column::Symmetric | Column::FirstEntry(_)
        )
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Column::Ell => f.write_str("ell"),
            Column::Fib => f.write_str("fib"),
            Column::Wlp => f.write_str("wlp"),
            Column::Unimodal => f.write_str("unimodal"),
            Column::Symmetric => f.write_str("symmetric"),
            Column::FirstEntry(k) => write!(f, "l{k}"),
            Column::Tau => f.write_str("tau"),
            Column::DistinctParts => f.write_str("distinct_parts"),
        }
    }
}

impl FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ell" => Ok(Column::Ell),
            "fib" => Ok(Column::Fib),
            "wlp" => Ok(Column::Wlp),
            "unimodal" => Ok(Column::Unimodal),
            "symmetric" => Ok(Column::Symmetric),
            "tau" => Ok(Column::Tau),
            "distinct_parts" => Ok(Column::DistinctParts),
            _ => match s.strip_prefix('l').map(str::parse::<u64>) {
                Some(Ok(k)) if k >= 1 => Ok(Column::FirstEntry(k)),
                _ => domain(format!("unknown column `{s}`")),
            },
        }
    }
}

/// One row: `n` and the requested columns in request order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub n: u64,
    pub values: Vec<(Column, u64)>,
}

impl OutputRecord {
    pub fn get(&self, column: Column) -> Option<u64> {
        self.values
            .iter()
            .find(|(c, _)| *c == column)
            .map(|&(_, v)| v)
    }
}

pub fn compute_row(n: u64, columns: &[Column]) -> Result<OutputRecord> {
    let census = if columns.iter().any(Column::needs_census) {
        Some(enumerate_by_length(n)?)
    } else {
        None
    };
    let count_where = |pred: &dyn Fn(&crate::HVector) -> bool| -> u64 {
        census
            .as_ref()
            .expect("census computed for condition columns")
            .vectors()
            .iter()
            .filter(|h| pred(h))
            .count() as u64
    };
    let mut values = Vec::with_capacity(columns.len());
    for &column in columns {
        let v = match column {
            Column::Ell => count_by_length(n)?,
            Column::Fib => fib(n)?,
            Column::Wlp => count_where(&has_wlp),
            Column::Unimodal => count_where(&is_unimodal),
            Column::Symmetric => count_where(&is_symmetric),
            Column::FirstEntry(k) => count_where(&|h| h.first_entry() == Some(k)),
            Column::Tau => tau_direct(n)?,
            Column::DistinctParts => distinct_partitions(n, 2)?.len() as u64,
        };
        values.push((column, v));
    }
    Ok(OutputRecord { n, values })
}

/// Rows for `n = 1..=max_n`.
pub fn compute_table(max_n: u64, columns: &[Column]) -> Result<Vec<OutputRecord>> {
    if max_n == 0 {
        return domain("max-n must be at least 1");
    }
    (1..=max_n).map(|n| compute_row(n, columns)).collect()
}
