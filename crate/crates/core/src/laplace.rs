//! Expansion of an immanant along a fixed set of rows, weighting products of
//! sub-immanants by Littlewood–Richardson coefficients.
//!
//! Submatrices keep rows and columns in ascending original-index order.
//! The identity `laplace_expand(M, lambda, R) == Imm_lambda(M)` holds when
//! every permutation with a nonzero product maps `R` onto itself (for example
//! when `M[R, R']` is zero) and for the permanent; it does not hold for
//! general matrices (the determinant already needs the cofactor signs).
//! [`laplace_expand`] evaluates the expansion as written either way.

use crate::error::{arg, Result};
use crate::immanant::{contract, immanant_profile, CycleProfile, Limits};
use crate::lr::littlewood_richardson;
use crate::matrix::{ExactMatrix, Rational};
use crate::partition::{enumerate_partitions, Partition};

use num_traits::Zero;

/// Equal-size row and column index sets with their complements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowColSelection {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub row_complement: Vec<usize>,
    pub col_complement: Vec<usize>,
}

impl RowColSelection {
    pub fn new(n: usize, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.len() != cols.len() {
            return arg("row and column selections must have equal size");
        }
        let norm = |s: &[usize]| -> Result<Vec<usize>> {
            let mut v = s.to_vec();
            v.sort_unstable();
            v.dedup();
            if v.len() != s.len() || v.last().is_some_and(|&x| x >= n) {
                return arg(format!("{s:?} is not a subset of 0..{n}"));
            }
            Ok(v)
        };
        let rows = norm(rows)?;
        let cols = norm(cols)?;
        let complement = |s: &[usize]| (0..n).filter(|i| !s.contains(i)).collect();
        Ok(RowColSelection {
            row_complement: complement(&rows),
            col_complement: complement(&cols),
            rows,
            cols,
        })
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0..1u32 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// `sum_U sum_{mu, nu} c^lambda_{mu,nu} Imm_mu(M[R,U]) Imm_nu(M[R',U'])`
/// over column sets `U` with `|U| = |R|`.
pub fn laplace_expand(m: &ExactMatrix, lambda: &Partition, rows: &[usize]) -> Result<Rational> {
    let n = m.order();
    if lambda.weight() != n {
        return arg(format!("partition {lambda} does not have weight {n}"));
    }
    let r = rows.len();
    if r == 0 || r >= n {
        return arg("row set must be a nonempty proper subset");
    }
    // validate indices up front
    RowColSelection::new(n, rows, &(0..r).collect::<Vec<_>>())?;
    let mus = enumerate_partitions(r);
    let nus = enumerate_partitions(n - r);
    let mut lr = Vec::new();
    for mu in &mus {
        for nu in &nus {
            let c = littlewood_richardson(lambda, mu, nu)?;
            if c > 0 {
                lr.push((mu, nu, Rational::from_integer(c.into())));
            }
        }
    }
    let limits = Limits::default();
    let mut total = Rational::zero();
    for cols in subsets(n, r) {
        let sel = RowColSelection::new(n, rows, &cols)?;
        let top = m.submatrix(&sel.rows, &sel.cols)?;
        let bottom = m.submatrix(&sel.row_complement, &sel.col_complement)?;
        let top_profile: CycleProfile = immanant_profile(&top, &limits)?;
        let bottom_profile: CycleProfile = immanant_profile(&bottom, &limits)?;
        for (mu, nu, c) in &lr {
            let a = contract(&top_profile, mu)?;
            if a.is_zero() {
                continue;
            }
            total += c * a * contract(&bottom_profile, nu)?;
        }
    }
    Ok(total)
}
