//! The recursively defined family `B(n)`, counted by the Fibonacci numbers
//! and containing every h-vector of length `n`.
//!
//! `B(1) = {(1)}`, `B(2) = {(1,1)}`, and for `n >= 3` `B(n)` is the union of
//!
//! * `C(n)`: each member of `B(n-1)` with a trailing 1 appended, and
//! * `D(n)`: each member `(1, t_1, ..., t_s)` of `B(n-1)` with `t_s`
//!   incremented, allowed when `s = 1` or `t_{s-1} > 1`.

use std::collections::BTreeSet;

use crate::enumerate::enumerate_by_length;
use crate::error::{domain, Error, Result};
use crate::macaulay::CandidateVector;

/// `F_1 = F_2 = 1`.
pub fn fib(n: u64) -> Result<u64> {
    if n == 0 {
        return domain("Fibonacci index must be at least 1");
    }
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 2..n {
        let next = a
            .checked_add(b)
            .ok_or(Error::Overflow("Fibonacci number"))?;
        a = b;
        b = next;
    }
    Ok(b)
}

/// `B(n)` in ascending lexicographic order, with the `C`/`D` split kept as
/// index lists into `members`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFamily {
    n: u64,
    members: Vec<CandidateVector>,
    c_part: Vec<usize>,
    d_part: Vec<usize>,
}

impl BFamily {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn members(&self) -> &[CandidateVector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members obtained by appending a 1. Empty for `n <= 2`.
    pub fn c_part(&self) -> impl Iterator<Item = &CandidateVector> + '_ {
        self.c_part.iter().map(move |&i| &self.members[i])
    }

    /// Members obtained by incrementing the last entry. Empty for `n <= 2`.
    pub fn d_part(&self) -> impl Iterator<Item = &CandidateVector> + '_ {
        self.d_part.iter().map(move |&i| &self.members[i])
    }

    pub fn c_len(&self) -> usize {
        self.c_part.len()
    }

    pub fn d_len(&self) -> usize {
        self.d_part.len()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.members
            .binary_search_by(|m| m.entries().cmp(v))
            .is_ok()
    }
}

fn may_increment(v: &[u64]) -> bool {
    // v = (1, t_1, ..., t_s); s = 1 means the entry before t_s is the leading 1
    let s = v.len() - 1;
    s == 1 || (s >= 2 && v[s - 1] > 1)
}

impl BFamily {
    /// `B(n + 1)` from `B(n)`.
    ///
    /// All members share one sum, so none is a prefix of another and both
    /// appending a 1 and incrementing the last entry preserve the order.
    /// `C` and `D` therefore come out sorted and are merged in one pass.
    pub fn successor(&self) -> BFamily {
        let n = self.n + 1;
        if n == 2 {
            return BFamily {
                n,
                members: vec![CandidateVector::from_raw(vec![1, 1])],
                c_part: Vec::new(),
                d_part: Vec::new(),
            };
        }
        let c = self.members.iter().map(|v| {
            let mut w = v.entries().to_vec();
            w.push(1);
            w
        });
        let mut d = self
            .members
            .iter()
            .filter(|v| may_increment(v.entries()))
            .map(|v| {
                let mut w = v.entries().to_vec();
                *w.last_mut().expect("non-empty") += 1;
                w
            })
            .peekable();

        let mut members = Vec::with_capacity(self.members.len() * 2);
        let mut c_part = Vec::with_capacity(self.members.len());
        let mut d_part = Vec::new();
        for from_c in c {
            while let Some(from_d) = d.next_if(|w| *w < from_c) {
                d_part.push(members.len());
                members.push(CandidateVector::from_raw(from_d));
            }
            c_part.push(members.len());
            members.push(CandidateVector::from_raw(from_c));
        }
        for from_d in d {
            d_part.push(members.len());
            members.push(CandidateVector::from_raw(from_d));
        }
        BFamily {
            n,
            members,
            c_part,
            d_part,
        }
    }
}

pub fn build_b(n: u64) -> Result<BFamily> {
    if n == 0 {
        return domain("B(n) needs n >= 1");
    }
    let mut family = BFamily {
        n: 1,
        members: vec![CandidateVector::from_raw(vec![1])],
        c_part: Vec::new(),
        d_part: Vec::new(),
    };
    while family.n < n {
        family = family.successor();
    }
    Ok(family)
}

/// Direct description of `B(n)`: vectors `(1, t_1, ..., t_s)` summing to `n`
/// in which every entry after a 1 is again 1.
pub fn characterize_b(n: u64) -> Result<BTreeSet<CandidateVector>> {
    if n == 0 {
        return domain("B(n) needs n >= 1");
    }
    let mut out = BTreeSet::new();
    let mut prefix = vec![1u64];
    collect_tail_of_ones(&mut prefix, n - 1, &mut out);
    Ok(out)
}

fn collect_tail_of_ones(
    prefix: &mut Vec<u64>,
    remaining: u64,
    out: &mut BTreeSet<CandidateVector>,
) {
    if remaining == 0 {
        out.insert(CandidateVector::from_raw(prefix.clone()));
        return;
    }
    // once a 1 has been placed after the leading entry only 1s may follow
    let locked = prefix.len() > 1 && prefix.last() == Some(&1);
    let top = if locked { 1 } else { remaining };
    for m in 1..=top {
        prefix.push(m);
        collect_tail_of_ones(prefix, remaining - m, out);
        prefix.pop();
    }
}

/// Outcome of comparing `L(n)` with `B(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    /// Every h-vector of length `n` lies in `B(n)`.
    pub subset_holds: bool,
    /// Members of `B(n)` that are not h-vectors, in ascending order.
    pub witnesses: Vec<CandidateVector>,
}

pub fn check_containment(n: u64) -> Result<Containment> {
    let family = build_b(n)?;
    let census = enumerate_by_length(n)?;
    let subset_holds = census
        .vectors()
        .iter()
        .all(|h| family.contains(h.entries()));
    let witnesses = family
        .members()
        .iter()
        .filter(|v| !v.is_h_vector())
        .cloned()
        .collect();
    Ok(Containment {
        subset_holds,
        witnesses,
    })
}
