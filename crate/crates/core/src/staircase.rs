//! Integer partitions and `(x, y)`-primary monomial ideals in `k[x, y]`.
//!
//! An ideal is stored by its column heights: `lambda_i` is the number of
//! monomials `x^(i-1) y^j` outside the ideal. The heights weakly decrease,
//! sum to the colength, and determine the ideal as
//! `(y^lambda_1, x y^lambda_2, ..., x^(t-1) y^lambda_t, x^t)`.

use std::fmt::{self, Write as _};

use crate::error::{domain, Result};
use crate::macaulay::HVector;

fn check_weakly_decreasing(values: &[u64], what: &str) -> Result<()> {
    if values.contains(&0) {
        return domain(format!("{what} {values:?} has a zero entry"));
    }
    if values.windows(2).any(|w| w[0] < w[1]) {
        return domain(format!("{what} {values:?} is not weakly decreasing"));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        check_weakly_decreasing(&parts, "partition")?;
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// An `(x, y)`-primary monomial ideal, as its column heights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Staircase {
    column_heights: Vec<u64>,
}

impl Staircase {
    pub fn new(column_heights: Vec<u64>) -> Result<Self> {
        if column_heights.is_empty() {
            return domain("a staircase needs at least one column");
        }
        check_weakly_decreasing(&column_heights, "column heights")?;
        Ok(Self { column_heights })
    }

    pub fn column_heights(&self) -> &[u64] {
        &self.column_heights
    }

    /// Number of columns `t`; `x^t` is the pure-power generator.
    pub fn width(&self) -> u64 {
        self.column_heights.len() as u64
    }

    /// `lambda_1`; `y^lambda_1` is the other pure power.
    pub fn height(&self) -> u64 {
        self.column_heights[0]
    }

    /// Number of monomials outside the ideal.
    pub fn colength(&self) -> u64 {
        self.column_heights.iter().sum()
    }
}

/// Heights are the parts.
pub fn partition_to_staircase(p: &Partition) -> Result<Staircase> {
    if p.is_empty() {
        return domain("the empty partition has no staircase");
    }
    Ok(Staircase {
        column_heights: p.parts.clone(),
    })
}

pub fn staircase_to_partition(s: &Staircase) -> Partition {
    Partition {
        parts: s.column_heights.clone(),
    }
}

/// Minimal generators as `(x exponent, y exponent)`, sorted by the x
/// exponent and ending with `(t, 0)`.
pub fn minimal_generators(s: &Staircase) -> Vec<(u64, u64)> {
    let heights = &s.column_heights;
    let mut gens: Vec<(u64, u64)> = heights
        .iter()
        .enumerate()
        .filter(|&(i, &h)| i == 0 || h < heights[i - 1])
        .map(|(i, &h)| (i as u64, h))
        .collect();
    gens.push((s.width(), 0));
    gens
}

/// Whether `x^a y^b` lies in the ideal.
pub fn contains_monomial(s: &Staircase, a: u64, b: u64) -> bool {
    match s.column_heights.get(a as usize) {
        Some(&h) => b >= h,
        None => true,
    }
}

/// Lex in two variables is equivalent to strictly decreasing heights.
pub fn is_lex(s: &Staircase) -> bool {
    s.column_heights.windows(2).all(|w| w[0] > w[1])
}

/// Counts the monomials of each total degree outside the ideal.
pub fn hilbert_from_staircase(s: &Staircase) -> HVector {
    let top = s
        .column_heights
        .iter()
        .enumerate()
        .map(|(a, &h)| a as u64 + h - 1)
        .max()
        .expect("non-empty staircase");
    let mut h = vec![0u64; top as usize + 1];
    for (a, &height) in s.column_heights.iter().enumerate() {
        for y in 0..height {
            h[a + y as usize] += 1;
        }
    }
    HVector::from_raw(h)
}

/// Partitions of `n` into strictly decreasing parts with at least
/// `min_parts` parts, in descending lexicographic order.
pub fn distinct_partitions(n: u64, min_parts: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return domain("distinct partitions need n >= 1");
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    collect_distinct(n, n, min_parts, &mut parts, &mut out);
    Ok(out)
}

fn collect_distinct(
    remaining: u64,
    max_part: u64,
    min_parts: usize,
    parts: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if parts.len() >= min_parts {
            out.push(Partition {
                parts: parts.clone(),
            });
        }
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        // parts below p sum to at most p(p-1)/2
        if p + p * (p - 1) / 2 < remaining {
            break;
        }
        parts.push(p);
        collect_distinct(remaining - p, p - 1, min_parts, parts, out);
        parts.pop();
    }
}

/// `y^5, x*y^4, x^2*y^2, x^3`
pub fn format_generators(gens: &[(u64, u64)]) -> String {
    gens.iter()
        .map(|&(a, b)| format_monomial(a, b))
        .collect::<Vec<_>>()
        .join(", ")
}

fn format_monomial(a: u64, b: u64) -> String {
    let power = |var: &str, e: u64| match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    };
    let factors: Vec<String> = [power("x", a), power("y", b)]
        .into_iter()
        .flatten()
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Text picture of the staircase over a `(t + 2) x (lambda_1 + 2)` window.
///
/// `*` marks a minimal generator, `#` any other monomial of the ideal and
/// `.` a monomial outside it. Rows run from the top y value down to 0.
pub fn render_staircase(s: &Staircase) -> String {
    let cols = s.width() + 2;
    let rows = s.height() + 2;
    let gens = minimal_generators(s);
    let w = (cols.max(rows) - 1).to_string().len();

    let mut out = String::new();
    let _ = writeln!(out, "{:>w$}", "y");
    for y in (0..rows).rev() {
        let _ = write!(out, "{y:>w$} |");
        for x in 0..cols {
            let cell = if gens.contains(&(x, y)) {
                '*'
            } else if contains_monomial(s, x, y) {
                '#'
            } else {
                '.'
            };
            let _ = write!(out, " {cell:>w$}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{:>w$} +{}", "", "-".repeat(cols as usize * (w + 1)));
    let _ = write!(out, "{:>w$}  ", "");
    for x in 0..cols {
        let _ = write!(out, " {x:>w$}");
    }
    out.push_str("  x\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stair(h: &[u64]) -> Staircase {
        Staircase::new(h.to_vec()).unwrap()
    }

    #[test]
    fn constructors_validate() {
        assert!(Partition::new(vec![3, 3, 1]).is_ok());
        assert!(Partition::new(vec![]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Staircase::new(vec![]).is_err());
        assert!(partition_to_staircase(&Partition::new(vec![]).unwrap()).is_err());
    }

    #[test]
    fn generators_of_examples() {
        assert_eq!(
            minimal_generators(&stair(&[3, 3, 1])),
            vec![(0, 3), (2, 1), (3, 0)]
        );
        assert_eq!(
            minimal_generators(&stair(&[5, 4, 2])),
            vec![(0, 5), (1, 4), (2, 2), (3, 0)]
        );
        assert_eq!(minimal_generators(&stair(&[2, 2, 2])), vec![(0, 2), (3, 0)]);
        assert_eq!(minimal_generators(&stair(&[1])), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn generator_strings() {
        assert_eq!(
            format_generators(&minimal_generators(&stair(&[5, 4, 2]))),
            "y^5, x*y^4, x^2*y^2, x^3"
        );
        assert_eq!(format_generators(&minimal_generators(&stair(&[1]))), "y, x");
        assert_eq!(format_monomial(0, 0), "1");
    }

    #[test]
    fn membership() {
        let s = stair(&[3, 3, 1]);
        assert!(!contains_monomial(&s, 2, 0));
        assert!(contains_monomial(&s, 0, 3));
        assert!(contains_monomial(&s, 2, 1));
        assert!(!contains_monomial(&s, 1, 2));
        assert!(contains_monomial(&s, 3, 0));
        assert!(contains_monomial(&stair(&[1]), 5, 5));
        assert!(!contains_monomial(&stair(&[1]), 0, 0));
    }

    #[test]
    fn lex_examples() {
        assert!(is_lex(&stair(&[5, 4, 2])));
        assert!(!is_lex(&stair(&[3, 3, 1])));
        assert!(is_lex(&stair(&[1])));
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(
            hilbert_from_staircase(&stair(&[5, 4, 2])).entries(),
            &[1, 2, 3, 3, 2]
        );
        // degree 0: 1; 1: y, x; 2: y^2, xy, x^2; 3: xy^2
        assert_eq!(
            hilbert_from_staircase(&stair(&[3, 3, 1])).entries(),
            &[1, 2, 3, 1]
        );
        assert_eq!(hilbert_from_staircase(&stair(&[1])).entries(), &[1]);
        assert_eq!(
            hilbert_from_staircase(&stair(&[4])).entries(),
            &[1, 1, 1, 1]
        );
    }

    #[test]
    fn distinct_partition_lists() {
        let three = distinct_partitions(3, 2).unwrap();
        assert_eq!(three, vec![Partition::new(vec![2, 1]).unwrap()]);
        assert_eq!(distinct_partitions(3, 1).unwrap().len(), 2);
        assert_eq!(distinct_partitions(7, 2).unwrap().len(), 4);
        assert!(distinct_partitions(1, 2).unwrap().is_empty());
        let parts: Vec<Vec<u64>> = distinct_partitions(7, 0)
            .unwrap()
            .into_iter()
            .map(|p| p.parts)
            .collect();
        assert_eq!(
            parts,
            vec![vec![7], vec![6, 1], vec![5, 2], vec![4, 3], vec![4, 2, 1]]
        );
    }

    #[test]
    fn render_rectangle_corner() {
        let expected = "\
y
4 | # # # # #
3 | * # # # #
2 | . . # # #
1 | . . * # #
0 | . . . * #
  +----------
    0 1 2 3 4  x
";
        assert_eq!(render_staircase(&stair(&[3, 3, 1])), expected);
    }

    #[test]
    fn render_maximal_ideal() {
        let expected = "\
y
2 | # # #
1 | * # #
0 | . * #
  +------
    0 1 2  x
";
        assert_eq!(render_staircase(&stair(&[1])), expected);
    }
}
