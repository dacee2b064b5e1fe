//! Macaulay representations and the growth condition on h-vectors.
//!
//! Every `a >= 1` has a unique expansion in degree `d`
//!
//! ```text
//! a = C(b_d, d) + C(b_{d-1}, d-1) + ... + C(b_j, j),   b_d > b_{d-1} > ... > b_j >= j >= 1
//! ```
//!
//! and the bound `a^<d>` re-sums it with every top and bottom shifted by one.
//! A sequence `(1, h_1, ..., h_s)` is an h-vector iff `h_{t+1} <= h_t^<t>`
//! for every `t >= 1`.

use std::fmt;

use crate::error::{domain, Error, Result};

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    // Intermediate values are C(n, i) for i <= k <= n/2, all bounded by the
    // result, so a u128 product never overflows when the result fits u64.
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// The expansion of an integer in a given degree.
///
/// `coefficients[i]` is the top `b_{degree - i}`; the pairing with lower
/// indices is exposed by [`MacaulayRep::terms`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MacaulayRep {
    degree: u64,
    coefficients: Vec<u64>,
}

impl MacaulayRep {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// `(b_i, i)` pairs from `i = degree` downwards.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(pos, &b)| (b, self.degree - pos as u64))
    }

    /// The represented integer, `sum C(b_i, i)`.
    pub fn value(&self) -> Result<u64> {
        self.terms().try_fold(0u64, |acc, (b, i)| {
            acc.checked_add(binom(b, i)?)
                .ok_or(Error::Overflow("Macaulay representation value"))
        })
    }

    /// `sum C(b_i + 1, i + 1)`.
    pub fn shifted_value(&self) -> Result<u64> {
        self.terms().try_fold(0u64, |acc, (b, i)| {
            acc.checked_add(binom(b + 1, i + 1)?)
                .ok_or(Error::Overflow("Macaulay bound"))
        })
    }
}

/// Greedy expansion of `a` in degree `d`.
///
/// In each degree `i` the top is the largest `b` with `C(b, i)` not
/// exceeding the remainder; the scan starts at `b = i` and walks upwards.
pub fn macaulay_rep(a: u64, d: u64) -> Result<MacaulayRep> {
    if a == 0 {
        return domain("Macaulay representation of 0 is undefined");
    }
    if d == 0 {
        return domain("Macaulay representation needs degree >= 1");
    }
    let mut coefficients = Vec::new();
    let mut rest = a;
    let mut i = d;
    while rest > 0 {
        // C(i, i) = 1 <= rest; in degree 1 the answer is rest itself.
        let mut b = if i == 1 { rest } else { i };
        if i > 1 {
            while matches!(binom(b + 1, i), Ok(next) if next <= rest) {
                b += 1;
            }
        }
        rest -= binom(b, i)?;
        coefficients.push(b);
        i -= 1;
    }
    Ok(MacaulayRep {
        degree: d,
        coefficients,
    })
}

/// `a^<d>`, with `0^<d> = 0`.
pub fn macaulay_bound(a: u64, d: u64) -> Result<u64> {
    if a == 0 {
        return Ok(0);
    }
    macaulay_rep(a, d)?.shifted_value()
}

/// Whether `next` may follow `current` in degree `t + 1`.
pub fn is_valid_growth(current: u64, next: u64, t: u64) -> bool {
    match macaulay_bound(current, t) {
        Ok(bound) => next <= bound,
        // the bound exceeds u64::MAX, so every u64 fits under it
        Err(Error::Overflow(_)) => true,
        Err(Error::Domain(_)) => false,
    }
}

/// Condition (C) on a raw sequence: leading 1, positive entries, and
/// Macaulay growth from degree 1 onwards. `h_1` is unconstrained.
pub fn is_h_vector(entries: &[u64]) -> bool {
    if entries.first() != Some(&1) || entries.contains(&0) {
        return false;
    }
    entries
        .windows(2)
        .enumerate()
        .skip(1)
        .all(|(t, w)| is_valid_growth(w[0], w[1], t as u64))
}

/// Writes `1211` when every entry is a single digit, `1,10,3` otherwise.
fn fmt_entries(entries: &[u64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if entries.iter().all(|&e| e <= 9) {
        for e in entries {
            write!(f, "{e}")?;
        }
    } else {
        for (i, e) in entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
    }
    Ok(())
}

/// A finite positive sequence starting with 1, not necessarily an h-vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateVector(Vec<u64>);

impl CandidateVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.first() != Some(&1) {
            return domain(format!("vector {entries:?} must start with 1"));
        }
        if entries.contains(&0) {
            return domain(format!("vector {entries:?} has a zero entry"));
        }
        Ok(Self(entries))
    }

    /// Callers guarantee a leading 1 and positive entries.
    pub(crate) fn from_raw(entries: Vec<u64>) -> Self {
        debug_assert!(entries.first() == Some(&1) && !entries.contains(&0));
        Self(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_h_vector(&self) -> bool {
        is_h_vector(&self.0)
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.0
    }
}

impl fmt::Display for CandidateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(&self.0, f)
    }
}

/// A validated h-vector `(1, h_1, ..., h_s)` with every entry positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HVector(Vec<u64>);

impl HVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if is_h_vector(&entries) {
            Ok(Self(entries))
        } else {
            domain(format!("{entries:?} violates Macaulay's growth condition"))
        }
    }

    pub(crate) fn from_raw(entries: Vec<u64>) -> Self {
        debug_assert!(is_h_vector(&entries), "{entries:?}");
        Self(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// The length of the quotient, i.e. the sum of the entries.
    pub fn length(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Index `s` of the last entry.
    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }

    /// `h_1`, absent for the vector `(1)`.
    pub fn first_entry(&self) -> Option<u64> {
        self.0.get(1).copied()
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.0
    }
}

impl From<HVector> for CandidateVector {
    fn from(h: HVector) -> Self {
        CandidateVector(h.0)
    }
}

impl TryFrom<CandidateVector> for HVector {
    type Error = Error;

    fn try_from(v: CandidateVector) -> Result<Self> {
        HVector::new(v.0)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(&self.0, f)
    }
}
