//! Zero submatrices that force every immanant to vanish.
//!
//! A `y x z` zero block with `y + z = n + 1` exists exactly when the bipartite
//! graph of nonzero entries has no perfect matching. The witness is read off
//! a minimum vertex cover (König): uncovered rows times uncovered columns is
//! all zero.

use serde::Serialize;

use crate::matrix::ExactMatrix;

/// Rows and columns of an all-zero submatrix with `y + z = n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroBlock {
    pub y: usize,
    pub z: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Maximum matching of rows to columns along nonzero entries; `match_col[j]`
/// is the row matched to column `j`.
fn max_matching(m: &ExactMatrix) -> (usize, Vec<Option<usize>>) {
    let n = m.order();
    let mut match_col: Vec<Option<usize>> = vec![None; n];
    fn augment(
        m: &ExactMatrix,
        i: usize,
        seen: &mut [bool],
        match_col: &mut [Option<usize>],
    ) -> bool {
        for j in 0..m.order() {
            if m.is_zero_at(i, j) || seen[j] {
                continue;
            }
            seen[j] = true;
            if match_col[j].is_none_or(|k| augment(m, k, seen, match_col)) {
                match_col[j] = Some(i);
                return true;
            }
        }
        false
    }
    let mut size = 0;
    for i in 0..n {
        if augment(m, i, &mut vec![false; n], &mut match_col) {
            size += 1;
        }
    }
    (size, match_col)
}

/// Size of a maximum matching on the nonzero support (the term rank).
pub fn term_rank(m: &ExactMatrix) -> usize {
    max_matching(m).0
}

/// Finds a zero block with `y + z = n + 1`, or `None` when the support has a
/// perfect matching.
pub fn vanishes_by_zero_block(m: &ExactMatrix) -> Option<ZeroBlock> {
    let n = m.order();
    let (size, match_col) = max_matching(m);
    if size == n {
        return None;
    }
    let mut match_row: Vec<Option<usize>> = vec![None; n];
    for (j, r) in match_col.iter().enumerate() {
        if let Some(i) = r {
            match_row[*i] = Some(j);
        }
    }
    // alternating search from unmatched rows
    let mut row_reached = vec![false; n];
    let mut col_reached = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&i| match_row[i].is_none()).collect();
    for &i in &stack {
        row_reached[i] = true;
    }
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if m.is_zero_at(i, j) || col_reached[j] {
                continue;
            }
            col_reached[j] = true;
            if let Some(k) = match_col[j] {
                if !row_reached[k] {
                    row_reached[k] = true;
                    stack.push(k);
                }
            }
        }
    }
    // cover = unreached rows + reached columns; its complement is a zero block
    let mut rows: Vec<usize> = (0..n).filter(|&i| row_reached[i]).collect();
    let mut cols: Vec<usize> = (0..n).filter(|&j| !col_reached[j]).collect();
    debug_assert!(rows
        .iter()
        .all(|&i| cols.iter().all(|&j| m.is_zero_at(i, j))));
    while rows.len() + cols.len() > n + 1 {
        if rows.len() > 1 {
            rows.pop();
        } else {
            cols.pop();
        }
    }
    Some(ZeroBlock {
        y: rows.len(),
        z: cols.len(),
        rows,
        cols,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{rat, Rational};
    use num_traits::Zero;

    #[test]
    fn finds_corner_block() {
        let mut m = ExactMatrix::from_fn(3, |i, j| rat((i * 3 + j + 1) as i64));
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, Rational::zero());
            }
        }
        let w = vanishes_by_zero_block(&m).unwrap();
        assert_eq!(w.y + w.z, 4);
        assert!(w
            .rows
            .iter()
            .all(|&i| w.cols.iter().all(|&j| m.is_zero_at(i, j))));
    }

    #[test]
    fn full_support_has_no_block() {
        assert!(vanishes_by_zero_block(&ExactMatrix::identity(4)).is_none());
        let full = ExactMatrix::from_fn(4, |i, j| rat((i + 2 * j + 1) as i64));
        assert!(vanishes_by_zero_block(&full).is_none());
        assert_eq!(term_rank(&full), 4);
    }

    #[test]
    fn zero_row_is_a_block() {
        let mut m = ExactMatrix::identity(3);
        m.set(1, 1, Rational::zero());
        let w = vanishes_by_zero_block(&m).unwrap();
        assert_eq!(w.y + w.z, 4);
        assert!(w
            .rows
            .iter()
            .all(|&i| w.cols.iter().all(|&j| m.is_zero_at(i, j))));
    }
}
