//! Young shapes of hook and two-row type and their standard tableaux.
//!
//! Tableaux follow the decreasing convention: entries decrease from
//! left to right in each row and from top to bottom in each column, so
//! the largest entry `n` always sits in the top-left box. A tableau is
//! identified by the set of entries below its top row, and the fixed
//! enumeration order is lexicographic on that set.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A Young shape: weakly decreasing positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungShape {
    rows: Vec<usize>,
}

impl YoungShape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Parse("shape must have at least one row".into()));
        }
        if rows.contains(&0) {
            return Err(Error::Parse("row lengths must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "row lengths must be weakly decreasing, got {rows:?}"
            )));
        }
        Ok(YoungShape { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Total number of boxes.
    pub fn n(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of columns `b`, the length of the first row.
    pub fn num_cols(&self) -> usize {
        self.rows[0]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        (1..=self.num_cols())
            .map(|j| self.rows.iter().filter(|&&r| r >= j).count())
            .collect()
    }

    /// At most one row longer than one box, i.e. shape `(b, 1, ..., 1)`.
    pub fn is_hook(&self) -> bool {
        self.rows.iter().filter(|&&r| r > 1).count() <= 1
    }

    /// At most two rows.
    pub fn is_two_row(&self) -> bool {
        self.rows.len() <= 2
    }

    pub fn supported(&self) -> bool {
        self.is_hook() || self.is_two_row()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row length {part:?} in shape {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungShape::new(rows)
    }

    fn unsupported(&self, reason: &str) -> Error {
        Error::UnsupportedShape {
            shape: self.to_string(),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for YoungShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rows.iter().map(|r| r.to_string()).join(","))
    }
}

/// The dimension of every component of the Springer fiber for this
/// shape: the sum of `c(c-1)/2` over the column lengths `c`.
pub fn component_dimension(shape: &YoungShape) -> usize {
    shape.column_lengths().iter().map(|&c| c * (c - 1) / 2).sum()
}

/// A standard filling of a Young shape under the decreasing convention.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    shape: YoungShape,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungShape::new(rows.iter().map(|r| r.len()).collect())?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &v in row {
                if v == 0 || v > n {
                    return Err(Error::InvalidTableau(format!(
                        "entry {v} out of range 1..={n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidTableau(format!("entry {v} repeated")));
                }
                seen[v] = true;
            }
        }
        for (ri, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not strictly decreasing",
                    ri + 1
                )));
            }
        }
        for ri in 1..rows.len() {
            for ci in 0..rows[ri].len() {
                if rows[ri - 1][ci] <= rows[ri][ci] {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not strictly decreasing",
                        ci + 1
                    )));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &YoungShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// 1-based row index of the box holding `value`.
    pub fn row_of(&self, value: usize) -> usize {
        for (ri, row) in self.rows.iter().enumerate() {
            if row.contains(&value) {
                return ri + 1;
            }
        }
        panic!("value {value} not in tableau");
    }

    /// 1-based column index of the box holding `value`.
    pub fn column_of(&self, value: usize) -> usize {
        for row in &self.rows {
            if let Some(ci) = row.iter().position(|&v| v == value) {
                return ci + 1;
            }
        }
        panic!("value {value} not in tableau");
    }

    pub fn is_on_top_row(&self, value: usize) -> bool {
        self.row_of(value) == 1
    }

    /// Descents: all `i` with `i+1` in a strictly higher row than `i`.
    ///
    /// For two-row tableaux this is the classical "i on the bottom row,
    /// i+1 on the top row"; for hooks it makes `i` a descent exactly
    /// when `i` is in the first column below the top row, so no two
    /// tableaux of one hook shape share a descent set.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.row_of(i + 1) < self.row_of(i))
            .collect()
    }

    pub fn has_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.row_of(i + 1) < self.row_of(i)
    }

    /// Exchange `k` with `k-1` (`Down`) or `k+1` (`Up`) when the result
    /// is still standard.
    pub fn adjacent_swap(&self, k: usize, direction: SwapDirection) -> Option<StandardTableau> {
        let partner = match direction {
            SwapDirection::Down => k.checked_sub(1)?,
            SwapDirection::Up => k + 1,
        };
        if k < 1 || k > self.n() || partner < 1 || partner > self.n() {
            return None;
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| {
                        if v == k {
                            partner
                        } else if v == partner {
                            k
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        StandardTableau::new(rows).ok()
    }

    /// Sorted top-row entries other than `n`, for a hook tableau: the
    /// indices `i_1 < ... < i_{b-1}` (with `i_0 = 0`, `i_b = n` by
    /// convention on the caller's side).
    pub fn top_row_indices(&self) -> Result<Vec<usize>> {
        if !self.shape.is_hook() {
            return Err(self.shape.unsupported("top_row_indices requires a hook shape"));
        }
        let n = self.n();
        let mut idx: Vec<usize> = self.rows[0].iter().copied().filter(|&v| v != n).collect();
        idx.sort_unstable();
        Ok(idx)
    }

    /// Row lengths `(T(i), B(i))` after deleting the entries `1..=i`
    /// from a two-row tableau.
    pub fn remaining_rows(&self, i: usize) -> Result<(usize, usize)> {
        if !self.shape.is_two_row() {
            return Err(self.shape.unsupported("remaining_rows requires a two-row shape"));
        }
        let top = self.rows[0].iter().filter(|&&v| v > i).count();
        let bottom = self
            .rows
            .get(1)
            .map(|r| r.iter().filter(|&&v| v > i).count())
            .unwrap_or(0);
        Ok((top, bottom))
    }

    /// The entries below the top row, ascending: the enumeration key.
    pub fn below_top_set(&self) -> Vec<usize> {
        let mut vals: Vec<usize> = self.rows[1..].iter().flatten().copied().collect();
        vals.sort_unstable();
        vals
    }

    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad entry {tok:?} in tableau {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::new(rows)
    }

    /// JSON form: a list of rows.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(
            self.rows
                .iter()
                .map(|r| serde_json::Value::from(r.clone()))
                .collect::<Vec<_>>(),
        )
    }
}

impl fmt::Display for StandardTableau {
    /// Rows joined by " / " with space-separated entries: `5 4 3 / 2 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).join(" "))
            .join(" / ");
        write!(f, "{rows}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwapDirection {
    Down,
    Up,
}

/// Build the hook or two-row tableau whose below-top entries are
/// exactly `below` (ascending), for the given shape.
fn tableau_from_below_set(shape: &YoungShape, below: &[usize]) -> Result<StandardTableau> {
    let n = shape.n();
    let below_desc: Vec<usize> = below.iter().rev().copied().collect();
    let top_desc: Vec<usize> = (1..=n)
        .rev()
        .filter(|v| !below.contains(v))
        .collect();
    let mut rows = vec![top_desc];
    if shape.num_rows() == 2 {
        rows.push(below_desc);
    } else {
        for v in below_desc {
            rows.push(vec![v]);
        }
    }
    StandardTableau::new(rows)
}

/// All standard tableaux of a hook or two-row shape, in the fixed
/// order: lexicographic, ascending, on the sorted set of entries below
/// the top row. The count matches the hook-length formula.
pub fn enumerate_standard(shape: &YoungShape) -> Result<Vec<StandardTableau>> {
    if !shape.supported() {
        return Err(shape.unsupported("only hook and two-row shapes are supported"));
    }
    let n = shape.n();
    let below_count = n - shape.num_cols();
    let mut out = Vec::new();
    if shape.is_hook() {
        // Any below-top set avoiding n gives a standard hook filling.
        for below in (1..n).combinations(below_count) {
            out.push(tableau_from_below_set(shape, &below)?);
        }
    } else {
        for below in (1..=n).combinations(below_count) {
            if let Ok(t) = tableau_from_below_set(shape, &below) {
                out.push(t);
            }
        }
    }
    Ok(out)
}

/// The hook tableau with top row `n, b-1, b-2, ..., 1`, which
/// normalizes the Gram matrix.
pub fn hook_top_tableau(shape: &YoungShape) -> Result<StandardTableau> {
    if !shape.is_hook() {
        return Err(shape.unsupported("the TOP tableau exists for hook shapes"));
    }
    let n = shape.n();
    let b = shape.num_cols();
    let below: Vec<usize> = (b..n).collect();
    tableau_from_below_set(shape, &below)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(rows: &[usize]) -> YoungShape {
        YoungShape::new(rows.to_vec()).unwrap()
    }

    /// Brute-force oracle: count standard fillings of any shape by
    /// placing n, n-1, ..., 1 greedily in all legal positions.
    fn brute_force_count(rows: &[usize]) -> usize {
        fn place(rows: &[usize], filled: &mut Vec<usize>, value: usize) -> usize {
            if value == 0 {
                return 1;
            }
            // Place the next (largest remaining) value at the end of any
            // row whose upper neighbour column is already longer.
            let mut total = 0;
            for r in 0..rows.len() {
                let len = filled[r];
                if len < rows[r] && (r == 0 || filled[r - 1] > len) {
                    filled[r] += 1;
                    total += place(rows, filled, value - 1);
                    filled[r] -= 1;
                }
            }
            total
        }
        let n: usize = rows.iter().sum();
        let mut filled = vec![0; rows.len()];
        place(rows, &mut filled, n)
    }

    /// Hook-length formula, usable for any shape.
    fn hook_length_count(rows: &[usize]) -> usize {
        let n: usize = rows.iter().sum();
        let mut numer: u128 = 1;
        for k in 1..=n {
            numer *= k as u128;
        }
        let mut denom: u128 = 1;
        for (ri, &len) in rows.iter().enumerate() {
            for ci in 0..len {
                let arm = len - ci - 1;
                let leg = rows[ri + 1..].iter().filter(|&&r| r > ci).count();
                denom *= (arm + leg + 1) as u128;
            }
        }
        (numer / denom) as usize
    }

    #[test]
    fn shape_classification() {
        assert!(shape(&[5]).is_hook());
        assert!(shape(&[5]).is_two_row());
        assert!(shape(&[3, 1, 1]).is_hook());
        assert!(!shape(&[3, 1, 1]).is_two_row());
        assert!(shape(&[3, 2]).is_two_row());
        assert!(!shape(&[3, 2]).is_hook());
        assert!(shape(&[1, 1, 1]).is_hook());
        assert!(!shape(&[2, 2, 1]).supported());
        assert!(YoungShape::new(vec![2, 3]).is_err());
        assert!(YoungShape::new(vec![3, 0]).is_err());
    }

    #[test]
    fn enumerate_counts_match_examples() {
        assert_eq!(enumerate_standard(&shape(&[4])).unwrap().len(), 1);
        assert_eq!(enumerate_standard(&shape(&[3, 2])).unwrap().len(), 5);
        assert_eq!(enumerate_standard(&shape(&[3, 1, 1])).unwrap().len(), 6);
        assert!(enumerate_standard(&shape(&[2, 2, 1])).is_err());
    }

    #[test]
    fn enumerate_counts_match_hook_length_formula_and_brute_force() {
        // every hook and two-row shape with n <= 10
        for n in 1..=10usize {
            for b in 1..=n {
                let rows: Vec<usize> = std::iter::once(b).chain(std::iter::repeat_n(1, n - b)).collect();
                let sh = shape(&rows);
                let count = enumerate_standard(&sh).unwrap().len();
                assert_eq!(count, hook_length_count(&rows), "hook {rows:?}");
                if n <= 8 {
                    assert_eq!(count, brute_force_count(&rows), "hook {rows:?}");
                }
            }
            for t2 in 1..=n / 2 {
                let rows = vec![n - t2, t2];
                let sh = shape(&rows);
                let count = enumerate_standard(&sh).unwrap().len();
                assert_eq!(count, hook_length_count(&rows), "two-row {rows:?}");
                if n <= 8 {
                    assert_eq!(count, brute_force_count(&rows), "two-row {rows:?}");
                }
            }
        }
    }

    #[test]
    fn enumeration_order_is_lex_on_below_top_sets() {
        let tabs = enumerate_standard(&shape(&[3, 2])).unwrap();
        let keys: Vec<Vec<usize>> = tabs.iter().map(|t| t.below_top_set()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(keys[0], vec![1, 2]);
        assert_eq!(tabs[0].to_string(), "5 4 3 / 2 1");
    }

    #[test]
    fn descent_examples() {
        let single = enumerate_standard(&shape(&[5])).unwrap();
        assert!(single[0].descent_set().is_empty());
        let a = StandardTableau::parse("5 4 3 / 2 1").unwrap();
        assert_eq!(a.descent_set(), vec![2]);
        let b = StandardTableau::parse("5 4 1 / 3 2").unwrap();
        assert_eq!(b.descent_set(), vec![3]);
    }

    #[test]
    fn hook_descents_are_complement_of_top_row() {
        // For hooks, i < n is a descent iff i is not on the top row.
        for rows in [vec![3, 1, 1], vec![4, 1, 1], vec![2, 1, 1, 1]] {
            let sh = shape(&rows);
            for t in enumerate_standard(&sh).unwrap() {
                let desc = t.descent_set();
                for i in 1..t.n() {
                    assert_eq!(desc.contains(&i), !t.is_on_top_row(i), "{t} at {i}");
                }
            }
        }
    }

    #[test]
    fn hook_descent_sets_pairwise_distinct() {
        for n in 2..=8usize {
            for b in 1..=n {
                let rows: Vec<usize> = std::iter::once(b).chain(std::iter::repeat_n(1, n - b)).collect();
                let tabs = enumerate_standard(&shape(&rows)).unwrap();
                let mut seen = std::collections::BTreeSet::new();
                for t in &tabs {
                    assert!(seen.insert(t.descent_set()), "duplicate descent set in {rows:?}");
                }
            }
        }
    }

    #[test]
    fn adjacent_swap_examples() {
        let a = StandardTableau::parse("5 2 1 / 4 / 3").unwrap();
        let up = a.adjacent_swap(2, SwapDirection::Up).unwrap();
        assert_eq!(up.to_string(), "5 3 1 / 4 / 2");
        assert!(a.adjacent_swap(1, SwapDirection::Down).is_none());
        let single = enumerate_standard(&shape(&[4])).unwrap().remove(0);
        for k in 1..=4 {
            assert!(single.adjacent_swap(k, SwapDirection::Up).is_none());
            assert!(single.adjacent_swap(k, SwapDirection::Down).is_none());
        }
    }

    #[test]
    fn adjacent_swap_is_involution_and_flips_descent() {
        for rows in [vec![3, 1, 1], vec![3, 2], vec![4, 2]] {
            let sh = shape(&rows);
            for t in enumerate_standard(&sh).unwrap() {
                for k in 1..=t.n() {
                    for dir in [SwapDirection::Down, SwapDirection::Up] {
                        if let Some(s) = t.adjacent_swap(k, dir) {
                            let back = match dir {
                                SwapDirection::Down => s.adjacent_swap(k - 1, SwapDirection::Up),
                                SwapDirection::Up => s.adjacent_swap(k + 1, SwapDirection::Down),
                            };
                            // swapping k with k+1 is the same move from either side
                            let back2 = s.adjacent_swap(k, dir);
                            assert!(back == Some(t.clone()) || back2 == Some(t.clone()));
                            if k < t.n() && dir == SwapDirection::Up {
                                assert_ne!(t.has_descent(k), s.has_descent(k));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn top_row_indices_examples() {
        let top = hook_top_tableau(&shape(&[3, 1, 1])).unwrap();
        assert_eq!(top.to_string(), "5 2 1 / 4 / 3");
        assert_eq!(top.top_row_indices().unwrap(), vec![1, 2]);
        let single = enumerate_standard(&shape(&[6])).unwrap().remove(0);
        assert_eq!(single.top_row_indices().unwrap(), vec![1, 2, 3, 4, 5]);
        let t = StandardTableau::parse("5 3 1 / 4 / 2").unwrap();
        assert_eq!(t.top_row_indices().unwrap(), vec![1, 3]);
        let two_row = StandardTableau::parse("5 4 3 / 2 1").unwrap();
        assert!(two_row.top_row_indices().is_err());
    }

    #[test]
    fn remaining_rows_examples() {
        let a = StandardTableau::parse("5 4 3 / 2 1").unwrap();
        assert_eq!(a.remaining_rows(0).unwrap(), (3, 2));
        assert_eq!(a.remaining_rows(5).unwrap(), (0, 0));
        assert_eq!(a.remaining_rows(2).unwrap(), (3, 0));
        let hook = StandardTableau::parse("5 2 1 / 4 / 3").unwrap();
        assert!(hook.remaining_rows(1).is_err());
    }

    #[test]
    fn component_dimension_examples() {
        assert_eq!(component_dimension(&shape(&[6])), 0);
        assert_eq!(component_dimension(&shape(&[3, 2])), 2);
        assert_eq!(component_dimension(&shape(&[3, 1, 1])), 3);
        // two-row: dimension equals the bottom-row length n - b
        for n in 2..=10usize {
            for t2 in 1..=n / 2 {
                assert_eq!(component_dimension(&shape(&[n - t2, t2])), t2);
            }
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["5 4 3 / 2 1", "5 2 1 / 4 / 3", "7 6 5 4 3 2 1"] {
            let t = StandardTableau::parse(s).unwrap();
            assert_eq!(t.to_string(), s);
            assert_eq!(StandardTableau::parse(&t.to_string()).unwrap(), t);
        }
        assert!(StandardTableau::parse("5 2 1 / 3 / 4").is_err()); // column not decreasing
        assert!(StandardTableau::parse("1 2 / 3").is_err());
        assert!(StandardTableau::parse("2 1 / 2").is_err());
        let t = StandardTableau::parse("5 4 3 / 2 1").unwrap();
        assert_eq!(t.to_json(), serde_json::json!([[5, 4, 3], [2, 1]]));
    }
}
