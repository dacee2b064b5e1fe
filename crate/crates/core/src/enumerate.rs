//! The set `L(n)` of h-vectors whose entries sum to `n`, its refinement
//! `L_k(n)` by `h_1 = k`, and the derived sequences `s(n)` and `tau(n)`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{domain, Error, Result};
use crate::macaulay::{binom, macaulay_bound, HVector};

/// Bucket key for the vector `(1)`, which has no `h_1`.
pub const SINGLETON_BUCKET: u64 = 0;

/// All h-vectors of one length, in ascending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthCensus {
    n: u64,
    vectors: Vec<HVector>,
    by_first_entry: BTreeMap<u64, Vec<usize>>,
}

impl LengthCensus {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn vectors(&self) -> &[HVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Vectors with `h_1 = k`; `k = 0` holds only `(1)`.
    pub fn bucket(&self, k: u64) -> impl Iterator<Item = &HVector> + '_ {
        self.by_first_entry
            .get(&k)
            .into_iter()
            .flatten()
            .map(move |&i| &self.vectors[i])
    }

    /// Occupied bucket keys with their sizes.
    pub fn bucket_sizes(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.by_first_entry.iter().map(|(&k, v)| (k, v.len()))
    }

    pub fn into_vectors(self) -> Vec<HVector> {
        self.vectors
    }
}

/// Largest admissible next entry after `last` sitting in degree `t`,
/// capped at the remaining budget.
fn step_limit(t: u64, last: u64, remaining: u64) -> Result<u64> {
    if t == 0 {
        return Ok(remaining);
    }
    match macaulay_bound(last, t) {
        Ok(bound) => Ok(bound.min(remaining)),
        Err(Error::Overflow(_)) => Ok(remaining),
        Err(e) => Err(e),
    }
}

fn check_length(n: u64) -> Result<()> {
    if n == 0 {
        domain("length must be at least 1")
    } else {
        Ok(())
    }
}

/// Depth-first construction of `L(n)`.
///
/// Extending in ascending order of the appended entry emits the vectors in
/// lexicographic order, since no vector of `L(n)` is a prefix of another.
pub fn enumerate_by_length(n: u64) -> Result<LengthCensus> {
    check_length(n)?;
    let mut vectors = Vec::new();
    let mut prefix = vec![1u64];
    extend(&mut prefix, n - 1, &mut vectors)?;

    let mut by_first_entry: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, v) in vectors.iter().enumerate() {
        let key = v.first_entry().unwrap_or(SINGLETON_BUCKET);
        by_first_entry.entry(key).or_default().push(i);
    }
    Ok(LengthCensus {
        n,
        vectors,
        by_first_entry,
    })
}

fn extend(prefix: &mut Vec<u64>, remaining: u64, out: &mut Vec<HVector>) -> Result<()> {
    if remaining == 0 {
        out.push(HVector::from_raw(prefix.clone()));
        return Ok(());
    }
    let t = prefix.len() as u64 - 1;
    let last = *prefix.last().expect("prefix starts with 1");
    for m in 1..=step_limit(t, last, remaining)? {
        prefix.push(m);
        extend(prefix, remaining - m, out)?;
        prefix.pop();
    }
    Ok(())
}

/// Memoized count of completions from a partial vector ending in `last`
/// at degree `t` with `remaining` still to distribute.
struct Completions {
    memo: HashMap<(u64, u64, u64), u64>,
}

impl Completions {
    fn new() -> Self {
        Self {
            memo: HashMap::new(),
        }
    }

    fn count(&mut self, t: u64, last: u64, remaining: u64) -> Result<u64> {
        if remaining == 0 {
            return Ok(1);
        }
        if let Some(&c) = self.memo.get(&(t, last, remaining)) {
            return Ok(c);
        }
        let mut total = 0u64;
        for m in 1..=step_limit(t, last, remaining)? {
            total = total
                .checked_add(self.count(t + 1, m, remaining - m)?)
                .ok_or(Error::Overflow("h-vector count"))?;
        }
        self.memo.insert((t, last, remaining), total);
        Ok(total)
    }
}

/// `l(n) = |L(n)|` without materializing the vectors.
pub fn count_by_length(n: u64) -> Result<u64> {
    check_length(n)?;
    Completions::new().count(0, 1, n - 1)
}

/// `l_k(n) = |L_k(n)|`; zero for `n = 1` since `(1)` has no `h_1`.
pub fn count_by_first_entry(n: u64, k: u64) -> Result<u64> {
    check_length(n)?;
    if k == 0 {
        return domain("first entry k must be at least 1");
    }
    if n == 1 || k > n - 1 {
        return Ok(0);
    }
    Completions::new().count(1, k, n - 1 - k)
}

/// `s(n)`: the least `k >= 1` with `n <= C(k + 2, 2)`.
pub fn s_of(n: u64) -> Result<u64> {
    check_length(n)?;
    let mut k = 1;
    while binom(k + 2, 2)? < n {
        k += 1;
    }
    Ok(k)
}

/// `tau(n)` as the literal sum `sum_{k = s(n)}^{n-1} l_k(n)`, with the base
/// value `tau(1) = 1`.
pub fn tau_direct(n: u64) -> Result<u64> {
    check_length(n)?;
    if n == 1 {
        return Ok(1);
    }
    let mut completions = Completions::new();
    let mut total = 0u64;
    for k in s_of(n)?..n {
        let c = completions.count(1, k, n - 1 - k)?;
        total = total.checked_add(c).ok_or(Error::Overflow("tau"))?;
    }
    Ok(total)
}

/// `tau(n)` through the two-case recurrence seeded with `tau(1) = 1`:
/// add `l_{s(n)}(n)` when `s(n) = s(n - 1)`, carry over otherwise.
pub fn tau_recursive(n: u64) -> Result<u64> {
    check_length(n)?;
    let mut tau = 1u64;
    let mut s_prev = s_of(1)?;
    for m in 2..=n {
        let s = s_of(m)?;
        if s == s_prev {
            tau = tau
                .checked_add(count_by_first_entry(m, s)?)
                .ok_or(Error::Overflow("tau"))?;
        }
        s_prev = s;
    }
    Ok(tau)
}

/// Whether `l_{k+1}(n+1) = l_k(n)`; only defined when `C(k + 2, 2) >= n`.
pub fn check_shift_identity(n: u64, k: u64) -> Result<bool> {
    check_length(n)?;
    if k == 0 {
        return domain("first entry k must be at least 1");
    }
    if binom(k + 2, 2)? < n {
        return domain(format!(
            "shift identity needs C(k+2, 2) >= n, got k = {k}, n = {n}"
        ));
    }
    Ok(count_by_first_entry(n + 1, k + 1)? == count_by_first_entry(n, k)?)
}
