//! Numeric conditions on h-vectors and their counting sequences.
//!
//! An h-vector has the weak Lefschetz property (numerically) when it is
//! unimodal and the positive part of its first difference is again an
//! h-vector. "Positive part" admits two readings, both available through
//! [`PositivePart`]. Under the unimodality used here (strict rise to the
//! peak, weak fall after it) the positive entries of the first difference
//! always form a prefix, so the two readings agree on every h-vector.
//!
//! These definitions reproduce the published table of counts for lengths
//! 1 to 20 (ℓ = 1059, WLP = 915, unimodal = 920, symmetric = 13 at n = 20).

use std::fmt;
use std::str::FromStr;

use crate::enumerate::enumerate_by_length;
use crate::error::{domain, Error, Result};
use crate::macaulay::{is_h_vector, HVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositivePart {
    /// Keep every strictly positive entry, in order.
    Filter,
    /// Keep the longest strictly positive prefix.
    Truncate,
}

impl PositivePart {
    pub const DEFAULT: PositivePart = PositivePart::Filter;
}

impl Default for PositivePart {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    All,
    Unimodal,
    Symmetric,
    Wlp(PositivePart),
    FirstEntry(u64),
}

impl Condition {
    pub fn first_entry(k: u64) -> Result<Self> {
        if k == 0 {
            domain("first-entry condition needs k >= 1")
        } else {
            Ok(Self::FirstEntry(k))
        }
    }

    pub fn accepts(&self, h: &HVector) -> bool {
        match *self {
            Condition::All => true,
            Condition::Unimodal => is_unimodal(h),
            Condition::Symmetric => is_symmetric(h),
            Condition::Wlp(variant) => has_wlp_with(h, variant),
            Condition::FirstEntry(k) => h.first_entry() == Some(k),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::All => f.write_str("all"),
            Condition::Unimodal => f.write_str("unimodal"),
            Condition::Symmetric => f.write_str("symmetric"),
            Condition::Wlp(PositivePart::Filter) => f.write_str("wlp-filter"),
            Condition::Wlp(PositivePart::Truncate) => f.write_str("wlp-truncate"),
            Condition::FirstEntry(k) => write!(f, "l{k}"),
        }
    }
}

/// `all`, `unimodal`, `symmetric`, `wlp` (default variant), `wlp-filter`,
/// `wlp-truncate`, or `l<k>` for `h_1 = k`.
impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Condition::All),
            "unimodal" => Ok(Condition::Unimodal),
            "symmetric" => Ok(Condition::Symmetric),
            "wlp" => Ok(Condition::Wlp(PositivePart::DEFAULT)),
            "wlp-filter" => Ok(Condition::Wlp(PositivePart::Filter)),
            "wlp-truncate" => Ok(Condition::Wlp(PositivePart::Truncate)),
            _ => match s.strip_prefix('l').map(str::parse::<u64>) {
                Some(Ok(k)) => Condition::first_entry(k),
                _ => domain(format!("unknown condition `{s}`")),
            },
        }
    }
}

fn rises_then_falls(e: &[u64], strict_rise: bool) -> bool {
    let mut i = 1;
    while i < e.len() && (e[i - 1] < e[i] || (!strict_rise && e[i - 1] == e[i])) {
        i += 1;
    }
    while i < e.len() && e[i - 1] >= e[i] {
        i += 1;
    }
    i == e.len()
}

/// Strictly rises to a peak, then weakly falls: `(1,3,3,2)` qualifies,
/// `(1,3,3,4)` does not.
///
/// A plateau may only occur at or after the peak. This is the reading under
/// which the unimodal counts come out as 56 at n = 11 and 920 at n = 20.
pub fn is_unimodal(h: &HVector) -> bool {
    rises_then_falls(h.entries(), true)
}

/// The textbook notion `h_0 <= ... <= h_p >= ... >= h_s`.
pub fn is_weakly_unimodal(h: &HVector) -> bool {
    rises_then_falls(h.entries(), false)
}

pub fn is_symmetric(h: &HVector) -> bool {
    let e = h.entries();
    e.iter().eq(e.iter().rev())
}

/// `(h_0, h_1 - h_0, ..., h_s - h_{s-1})`.
pub fn first_difference(h: &HVector) -> Vec<i64> {
    let e = h.entries();
    std::iter::once(e[0] as i64)
        .chain(e.windows(2).map(|w| w[1] as i64 - w[0] as i64))
        .collect()
}

pub fn positive_part(g: &[i64], variant: PositivePart) -> Vec<u64> {
    match variant {
        PositivePart::Filter => g.iter().filter(|&&x| x > 0).map(|&x| x as u64).collect(),
        PositivePart::Truncate => g
            .iter()
            .take_while(|&&x| x > 0)
            .map(|&x| x as u64)
            .collect(),
    }
}

pub fn has_wlp(h: &HVector) -> bool {
    has_wlp_with(h, PositivePart::DEFAULT)
}

pub fn has_wlp_with(h: &HVector, variant: PositivePart) -> bool {
    is_unimodal(h) && is_h_vector(&positive_part(&first_difference(h), variant))
}

/// Number of h-vectors of length `n` accepted by `c`.
pub fn h_sequence(c: Condition, n: u64) -> Result<u64> {
    let census = enumerate_by_length(n)?;
    Ok(census.vectors().iter().filter(|h| c.accepts(h)).count() as u64)
}
