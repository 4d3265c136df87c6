//! Independent reference computations used to cross-check the immanant
//! engine: fraction-free elimination for the determinant and Ryser's
//! inclusion–exclusion for the permanent.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::matrix::{ExactMatrix, Rational};

/// Determinant by Bareiss elimination after clearing denominators.
pub fn determinant(m: &ExactMatrix) -> Rational {
    let n = m.order();
    if n == 0 {
        return Rational::one();
    }
    // scale each row to integers; det picks up the product of the scales
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let lcm = m.row(i).iter().fold(BigInt::one(), |l, x| {
                num_integer::Integer::lcm(&l, x.denom())
            });
            scale *= &lcm;
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Rational::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    Rational::new(sign * &a[n - 1][n - 1], scale)
}

/// Permanent by Ryser's formula with Gray-code subset updates.
pub fn permanent(m: &ExactMatrix) -> Rational {
    let n = m.order();
    if n == 0 {
        return Rational::one();
    }
    let mut row_sums = vec![Rational::zero(); n];
    let mut total = Rational::zero();
    for step in 1u64..(1 << n) {
        let bit = step.trailing_zeros() as usize;
        let gray = step ^ (step >> 1);
        let adding = gray & (1 << bit) != 0;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += m.get(i, bit);
            } else {
                *s -= m.get(i, bit);
            }
        }
        let prod: Rational = row_sums.iter().fold(Rational::one(), |acc, s| acc * s);
        let size = gray.count_ones() as usize;
        if (n - size).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

/// `true` when the value is a nonnegative rational.
pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{rat, ratio};

    #[test]
    fn small_determinants() {
        let m = ExactMatrix::from_rows(vec![
            vec![rat(0), rat(2), rat(1)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(3), rat(1), rat(4)],
        ])
        .unwrap();
        // expansion along row 2: -1 * (2*4 - 1*1) = -7
        assert_eq!(determinant(&m), rat(-7));
        let h = ExactMatrix::from_fn(3, |i, j| ratio(1, (i + j + 1) as i64));
        assert_eq!(determinant(&h), ratio(1, 2160));
        assert_eq!(determinant(&ExactMatrix::zeros(2)), rat(0));
    }

    #[test]
    fn small_permanents() {
        let ones = ExactMatrix::from_fn(4, |_, _| rat(1));
        assert_eq!(permanent(&ones), rat(24));
        let m =
            ExactMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(3), ratio(1, 2)]]).unwrap();
        assert_eq!(permanent(&m), ratio(13, 2));
    }
}
