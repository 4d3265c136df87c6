//! Exact immanant evaluation and immanantal-polynomial coefficients.
//!
//! Both routes enumerate permutations depth-first, abandon a branch as soon
//! as its running product hits a zero entry, and accumulate products per
//! cycle type. Characters are applied once per cycle type at the end, so one
//! enumeration serves every partition.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::character::character;
use crate::error::{arg, Error, Result};
use crate::matrix::{rat, ExactMatrix, Rational};
use crate::partition::Partition;
use crate::polynomial::{ImmPolynomial, Polynomial};

/// Tractability caps. Exceeding one yields [`Error::Intractable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest order for a full immanant (`n!` permutations).
    pub max_immanant_order: usize,
    /// Largest order for a full polynomial (about `e * n!` permutations).
    pub max_poly_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_immanant_order: 9,
            max_poly_order: 8,
        }
    }
}

impl Limits {
    fn check_immanant(&self, n: usize) -> Result<()> {
        if n > self.max_immanant_order {
            return Err(Error::Intractable {
                what: "immanant order",
                got: n,
                cap: self.max_immanant_order,
            });
        }
        Ok(())
    }

    fn check_poly(&self, n: usize) -> Result<()> {
        if n > self.max_poly_order {
            return Err(Error::Intractable {
                what: "polynomial order",
                got: n,
                cap: self.max_poly_order,
            });
        }
        Ok(())
    }
}

/// Sum of products keyed by cycle type.
pub type CycleProfile = BTreeMap<Partition, Rational>;

fn add_into(acc: &mut CycleProfile, key: Partition, value: Rational) {
    match acc.get_mut(&key) {
        Some(v) => *v += value,
        None => {
            acc.insert(key, value);
        }
    }
}

fn merge(mut a: CycleProfile, b: CycleProfile) -> CycleProfile {
    for (k, v) in b {
        add_into(&mut a, k, v);
    }
    a
}

/// Cycle type of the permutation `i -> image[i]` restricted to `support`.
fn cycle_type(support: &[usize], image: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; image.len()];
    let mut parts = Vec::with_capacity(support.len());
    for &s in support {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            len += 1;
            v = image[v];
        }
        parts.push(len);
    }
    parts
}

struct Walk<'a> {
    m: &'a ExactMatrix,
    support: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
    pad: usize,
    acc: CycleProfile,
}

impl Walk<'_> {
    fn run(&mut self, depth: usize, prod: Rational) {
        if depth == self.support.len() {
            let mut parts = cycle_type(self.support, &self.image);
            parts.extend(std::iter::repeat_n(1, self.pad));
            add_into(&mut self.acc, Partition::from_unsorted(parts), prod);
            return;
        }
        let i = self.support[depth];
        for idx in 0..self.support.len() {
            let j = self.support[idx];
            if self.used[j] {
                continue;
            }
            let entry = self.m.get(i, j);
            if entry.is_zero() {
                continue;
            }
            self.used[j] = true;
            self.image[i] = j;
            self.run(depth + 1, &prod * entry);
            self.used[j] = false;
        }
    }
}

/// Permutations of `support` weighted by `prod_{i in support} m[i][sigma(i)]`,
/// grouped by the cycle type padded with `pad` fixed points. When `first` is
/// given, the first support element is forced to map there.
fn walk_support(
    m: &ExactMatrix,
    support: &[usize],
    pad: usize,
    first: Option<usize>,
) -> CycleProfile {
    let n = m.order();
    let mut w = Walk {
        m,
        support,
        image: (0..n).collect(),
        used: vec![false; n],
        pad,
        acc: CycleProfile::new(),
    };
    match (first, support.first()) {
        (Some(j), Some(&i)) => {
            let entry = m.get(i, j);
            if !entry.is_zero() {
                w.used[j] = true;
                w.image[i] = j;
                w.run(1, entry.clone());
            }
        }
        _ => w.run(0, Rational::one()),
    }
    w.acc
}

/// `sum_sigma prod_i m[i][sigma(i)]` grouped by the cycle type of `sigma`.
pub fn immanant_profile(m: &ExactMatrix, limits: &Limits) -> Result<CycleProfile> {
    let n = m.order();
    limits.check_immanant(n)?;
    if n == 0 {
        return Ok(CycleProfile::from([(Partition::empty(), Rational::one())]));
    }
    let support: Vec<usize> = (0..n).collect();
    Ok((0..n)
        .into_par_iter()
        .map(|j| walk_support(m, &support, 0, Some(j)))
        .reduce(CycleProfile::new, merge))
}

/// Applies `chi_lambda` to a cycle profile.
pub fn contract(profile: &CycleProfile, lambda: &Partition) -> Result<Rational> {
    let mut total = Rational::zero();
    for (mu, sum) in profile {
        let chi = character(lambda, mu)?;
        if !chi.is_zero() {
            total += sum * Rational::from_integer(chi);
        }
    }
    Ok(total)
}

/// `Imm_lambda(M) = sum_sigma chi_lambda(sigma) prod_i m[i][sigma(i)]`.
pub fn immanant(m: &ExactMatrix, lambda: &Partition) -> Result<Rational> {
    immanant_with(m, lambda, &Limits::default())
}

pub fn immanant_with(m: &ExactMatrix, lambda: &Partition, limits: &Limits) -> Result<Rational> {
    check_weight(m, lambda)?;
    contract(&immanant_profile(m, limits)?, lambda)
}

fn check_weight(m: &ExactMatrix, lambda: &Partition) -> Result<()> {
    if lambda.weight() != m.order() {
        return arg(format!(
            "partition {lambda} has weight {} but the matrix has order {}",
            lambda.weight(),
            m.order()
        ));
    }
    Ok(())
}

/// Per-`r` cycle profiles of principal sub-permutations: entry `r` groups,
/// over all `r`-subsets `I` and all permutations of `I`, the products
/// `prod_{i in I} m[i][sigma(i)]` by cycle type padded to weight `n`.
#[derive(Debug, Clone)]
pub struct CoefficientProfile {
    n: usize,
    by_r: Vec<CycleProfile>,
}

impl CoefficientProfile {
    pub fn new(m: &ExactMatrix, limits: &Limits) -> Result<Self> {
        let n = m.order();
        limits.check_poly(n)?;
        let subsets: Vec<u32> = (0..1u32 << n).collect();
        let partials: Vec<(usize, CycleProfile)> = subsets
            .into_par_iter()
            .map(|mask| {
                let support: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let r = support.len();
                (r, walk_support(m, &support, n - r, None))
            })
            .collect();
        let mut by_r = vec![CycleProfile::new(); n + 1];
        for (r, p) in partials {
            let slot = std::mem::take(&mut by_r[r]);
            by_r[r] = merge(slot, p);
        }
        Ok(CoefficientProfile { n, by_r })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `c_{lambda, r}` for a single `r`.
    pub fn coefficient(&self, lambda: &Partition, r: usize) -> Result<Rational> {
        if lambda.weight() != self.n {
            return arg(format!(
                "partition {lambda} does not have weight {}",
                self.n
            ));
        }
        match self.by_r.get(r) {
            Some(p) => contract(p, lambda),
            None => arg(format!("coefficient index r={r} exceeds n={}", self.n)),
        }
    }

    pub fn polynomial(&self, lambda: &Partition) -> Result<ImmPolynomial> {
        let coeffs = (0..=self.n)
            .map(|r| self.coefficient(lambda, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(ImmPolynomial::new(lambda.clone(), coeffs))
    }
}

/// Coefficients `c_{lambda,r}(M)` by the principal-subset expansion.
pub fn imm_poly(m: &ExactMatrix, lambda: &Partition) -> Result<ImmPolynomial> {
    imm_poly_with(m, lambda, &Limits::default())
}

pub fn imm_poly_with(
    m: &ExactMatrix,
    lambda: &Partition,
    limits: &Limits,
) -> Result<ImmPolynomial> {
    check_weight(m, lambda)?;
    CoefficientProfile::new(m, limits)?.polynomial(lambda)
}

/// Coefficients recovered from `Imm_lambda(xI - M)` at `x = 0..=n` by exact
/// Lagrange interpolation. Shares no code with the subset expansion beyond
/// the character table.
pub fn imm_poly_interpolated(m: &ExactMatrix, lambda: &Partition) -> Result<ImmPolynomial> {
    imm_poly_interpolated_with(m, lambda, &Limits::default())
}

pub fn imm_poly_interpolated_with(
    m: &ExactMatrix,
    lambda: &Partition,
    limits: &Limits,
) -> Result<ImmPolynomial> {
    check_weight(m, lambda)?;
    let n = m.order();
    limits.check_poly(n)?;
    let points: Vec<Rational> = (0..=n as i64).map(rat).collect();
    let values = points
        .par_iter()
        .map(|x| immanant_with(&m.characteristic_at(x), lambda, limits))
        .collect::<Result<Vec<_>>>()?;
    let poly = Polynomial::interpolate(&points, &values)?;
    Ok(ImmPolynomial::from_polynomial(lambda.clone(), &poly, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::matrix::MatrixKind;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn permanent_of_star_laplacian() {
        let l = MatrixKind::Laplacian.matrix(&Family::Star(3).build().unwrap());
        assert_eq!(immanant(&l, &p(&[3])).unwrap(), rat(4));
    }

    #[test]
    fn connected_laplacian_is_singular() {
        for fam in [
            Family::Path(4),
            Family::Cycle(5),
            Family::Complete(4),
            Family::Star(5),
        ] {
            let l = MatrixKind::Laplacian.matrix(&fam.build().unwrap());
            let n = l.order();
            assert!(immanant(&l, &Partition::column(n)).unwrap().is_zero());
        }
    }

    #[test]
    fn identity_immanant_is_dimension() {
        for lam in enumerate_partitions(5) {
            let dim = character(&lam, &Partition::column(5)).unwrap();
            assert_eq!(
                immanant(&ExactMatrix::identity(5), &lam).unwrap(),
                Rational::from_integer(dim)
            );
        }
        assert_eq!(
            immanant(&ExactMatrix::identity(3), &p(&[2, 1])).unwrap(),
            rat(2)
        );
    }

    #[test]
    fn weight_mismatch_and_cap() {
        assert!(immanant(&ExactMatrix::identity(3), &p(&[2])).is_err());
        let big = ExactMatrix::identity(10);
        assert!(matches!(
            immanant(&big, &Partition::row(10)),
            Err(Error::Intractable { .. })
        ));
        assert!(matches!(
            imm_poly(&ExactMatrix::identity(9), &Partition::row(9)),
            Err(Error::Intractable { .. })
        ));
        let relaxed = Limits {
            max_immanant_order: 10,
            max_poly_order: 9,
        };
        assert!(imm_poly_with(&ExactMatrix::identity(9), &Partition::row(9), &relaxed).is_ok());
    }

    #[test]
    fn poly_examples() {
        let l = MatrixKind::Laplacian.matrix(&Family::Path(3).build().unwrap());
        let poly = imm_poly(&l, &p(&[2, 1])).unwrap();
        assert_eq!(poly.coefficient(0), &rat(2));
        assert_eq!(poly.coefficient(1), &rat(8));
        let m = MatrixKind::Laplacian.matrix(&Family::Path(4).build().unwrap());
        assert_eq!(
            imm_poly(&m, &p(&[2, 1, 1])).unwrap().coefficient(0),
            &rat(3)
        );
    }

    #[test]
    fn zero_and_identity_matrices() {
        for lam in enumerate_partitions(4) {
            let dim = Rational::from_integer(character(&lam, &Partition::column(4)).unwrap());
            let z = imm_poly(&ExactMatrix::zeros(4), &lam).unwrap();
            assert_eq!(z.coefficient(0), &dim);
            assert!((1..=4).all(|r| z.coefficient(r).is_zero()));
            let id = imm_poly(&ExactMatrix::identity(4), &lam).unwrap();
            for r in 0..=4 {
                let binom = [1, 4, 6, 4, 1][r];
                assert_eq!(id.coefficient(r), &(&dim * rat(binom)));
            }
            assert_eq!(
                imm_poly_interpolated(&ExactMatrix::zeros(4), &lam).unwrap(),
                z
            );
        }
    }

    #[test]
    fn routes_agree_on_families() {
        for fam in [
            Family::Star(5),
            Family::Cycle(4),
            Family::Complete(4),
            Family::CompleteBipartite(2, 3),
        ] {
            let g = fam.build().unwrap();
            let m = MatrixKind::LinComb(rat(2), rat(3)).matrix(&g);
            for lam in enumerate_partitions(g.order()) {
                assert_eq!(
                    imm_poly(&m, &lam).unwrap(),
                    imm_poly_interpolated(&m, &lam).unwrap()
                );
            }
        }
    }

    #[test]
    fn top_coefficient_is_immanant() {
        // c_{lambda,n}(M) = Imm_lambda(M)
        let g = Family::Cycle(5).build().unwrap();
        let m = MatrixKind::SignlessLaplacian.matrix(&g);
        for lam in enumerate_partitions(5) {
            let poly = imm_poly(&m, &lam).unwrap();
            assert_eq!(poly.coefficient(5), &immanant(&m, &lam).unwrap());
        }
    }
}
