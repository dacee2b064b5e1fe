//! Brute-force reference computations, independent of the library's
//! algorithms. Shared with the acceptance suite of the CLI crate.

#![allow(dead_code)]

use std::collections::HashSet;

/// Pascal's triangle with rows `0..=rows` (saturating), separate from the library's
/// multiplicative binomial.
pub struct Pascal(Vec<Vec<u64>>);

impl Pascal {
    pub fn new(rows: u64) -> Self {
        let mut t: Vec<Vec<u64>> = vec![vec![1]];
        for n in 1..=rows as usize {
            let prev = &t[n - 1];
            let mut row = vec![1u64; n + 1];
            for k in 1..n {
                row[k] = prev[k - 1].saturating_add(prev[k]);
            }
            t.push(row);
        }
        Pascal(t)
    }

    pub fn get(&self, n: u64, k: u64) -> u64 {
        if k > n {
            0
        } else {
            self.0[n as usize][k as usize]
        }
    }
}

/// Every expansion `a = sum C(b_i, i)` over `i = d, d-1, ..., j` with
/// `b_d > ... > b_j >= j >= 1`, as lists of `(b_i, i)`.
pub fn all_macaulay_decompositions(a: u64, d: u64) -> Vec<Vec<(u64, u64)>> {
    let mut out = Vec::new();
    let mut terms = Vec::new();
    let table = Pascal::new(a + d);
    search(&table, a, d, u64::MAX, &mut terms, &mut out);
    out
}

fn search(
    table: &Pascal,
    rest: u64,
    i: u64,
    above: u64,
    terms: &mut Vec<(u64, u64)>,
    out: &mut Vec<Vec<(u64, u64)>>,
) {
    if rest == 0 {
        if !terms.is_empty() {
            out.push(terms.clone());
        }
        return;
    }
    if i == 0 {
        return;
    }
    // C(b, i) >= b - i + 1 >= 1, so b <= rest + i - 1 bounds the search
    let hi = (rest + i - 1).min(above.saturating_sub(1));
    for b in i..=hi {
        let c = table.get(b, i);
        if c > rest {
            break;
        }
        terms.push((b, i));
        search(table, rest - c, i - 1, b, terms, out);
        terms.pop();
    }
}

fn monomials(vars: usize, degree: u64) -> Vec<Vec<u64>> {
    fn go(vars: usize, degree: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == vars - 1 {
            cur.push(degree);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=degree {
            cur.push(e);
            go(vars, degree - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(vars, degree, &mut Vec::new(), &mut out);
    out
}

/// Macaulay's bound as a monomial count: take the `a` lex-smallest
/// monomials of degree `d` in `vars` variables and count the degree `d + 1`
/// monomials all of whose degree `d` divisors are among them.
/// `None` when fewer than `a` monomials of degree `d` exist.
pub fn lex_shadow_bound(a: u64, d: u64, vars: usize) -> Option<u64> {
    let mut deg_d = monomials(vars, d);
    if (deg_d.len() as u64) < a {
        return None;
    }
    deg_d.sort();
    let kept: HashSet<Vec<u64>> = deg_d.into_iter().take(a as usize).collect();
    let count = monomials(vars, d + 1)
        .into_iter()
        .filter(|m| {
            (0..vars).filter(|&i| m[i] > 0).all(|i| {
                let mut div = m.clone();
                div[i] -= 1;
                kept.contains(&div)
            })
        })
        .count();
    Some(count as u64)
}

/// All compositions of `n` whose first part is 1.
pub fn compositions_starting_with_one(n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    // compositions of n - 1 via the 2^(n-2) cut patterns
    if n == 1 {
        return vec![vec![1]];
    }
    let m = n - 1;
    for mask in 0..(1u64 << (m - 1)) {
        let mut v = vec![1];
        let mut part = 1;
        for bit in 0..(m - 1) {
            if mask & (1 << bit) != 0 {
                v.push(part);
                part = 1;
            } else {
                part += 1;
            }
        }
        v.push(part);
        out.push(v);
    }
    out
}

/// Every partition of `n`, parts weakly decreasing.
pub fn all_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Counts lattice points `(a, b)` outside the ideal along each antidiagonal
/// `a + b = j`, where `(a, b)` is outside iff `a` indexes a column and `b`
/// is below its height.
pub fn lattice_hilbert(heights: &[u64]) -> Vec<u64> {
    let outside = |a: u64, b: u64| (a as usize) < heights.len() && b < heights[a as usize];
    let mut h = Vec::new();
    for j in 0.. {
        let c = (0..=j).filter(|&a| outside(a, j - a)).count() as u64;
        if c == 0 {
            break;
        }
        h.push(c);
    }
    h
}

/// Vectors `(1, t_1, ..., t_s)` summing to `n` in which no entry after a 1
/// (past the leading position) exceeds 1, found by filtering compositions.
pub fn tail_of_ones_vectors(n: u64) -> HashSet<Vec<u64>> {
    compositions_starting_with_one(n)
        .into_iter()
        .filter(|v| {
            let tail = &v[1..];
            match tail.iter().position(|&x| x == 1) {
                Some(i) => tail[i..].iter().all(|&x| x == 1),
                None => true,
            }
        })
        .collect()
}
