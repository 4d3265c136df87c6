//! Littlewood–Richardson coefficients by counting LR tableaux.

use crate::error::{arg, Result};
use crate::partition::Partition;

/// `c^lambda_{mu,nu}`: the number of semistandard fillings of the skew shape
/// `lambda / mu` with content `nu` whose reverse reading word is a lattice
/// word.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if mu.weight() + nu.weight() != lambda.weight() {
        return arg(format!(
            "weights must satisfy |mu| + |nu| = |lambda|, got {} + {} != {}",
            mu.weight(),
            nu.weight(),
            lambda.weight()
        ));
    }
    if !lambda.contains(mu) || nu.len() > lambda.len() {
        return Ok(0);
    }
    // cells in reading order: rows top to bottom, each row right to left
    let rows = lambda.len();
    let mut cells = Vec::with_capacity(nu.weight());
    for i in 0..rows {
        for j in (mu.part(i)..lambda.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut filling: Vec<Vec<usize>> = (0..rows)
        .map(|i| vec![usize::MAX; lambda.part(i)])
        .collect();
    let mut counts = vec![0usize; nu.len()];
    let mut found = 0u64;
    fill(0, &cells, mu, nu, &mut filling, &mut counts, &mut found);
    Ok(found)
}

fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    mu: &Partition,
    nu: &Partition,
    filling: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    found: &mut u64,
) {
    let Some(&(i, j)) = cells.get(idx) else {
        *found += 1;
        return;
    };
    // weakly increasing along the row: bounded by the cell to the right
    let upper = filling[i].get(j + 1).copied().unwrap_or(usize::MAX);
    // strictly increasing down the column, when the cell above is in the skew shape
    let lower = if i > 0 && j >= mu.part(i - 1) {
        filling[i - 1][j] + 1
    } else {
        0
    };
    for v in lower..nu.len() {
        if v > upper {
            break;
        }
        if counts[v] >= nu.part(v) || (v > 0 && counts[v] + 1 > counts[v - 1]) {
            continue;
        }
        counts[v] += 1;
        filling[i][j] = v;
        fill(idx + 1, cells, mu, nu, filling, counts, found);
        filling[i][j] = usize::MAX;
        counts[v] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let lam = p(&[3, 2, 1]);
        assert_eq!(
            littlewood_richardson(&lam, &lam, &Partition::empty()).unwrap(),
            1
        );
        assert_eq!(
            littlewood_richardson(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap(),
            1
        );
        assert!(littlewood_richardson(&p(&[2, 2]), &p(&[2]), &p(&[1])).is_err());
        assert_eq!(
            littlewood_richardson(&p(&[2, 2]), &p(&[2]), &p(&[2])).unwrap(),
            1
        );
        // the classic multiplicity-two coefficient
        assert_eq!(
            littlewood_richardson(&lam, &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            2
        );
    }

    #[test]
    fn pieri_rule() {
        // c^lambda_{mu,(k)} is 1 exactly when lambda/mu is a horizontal strip
        for n in 1..=6 {
            for lam in enumerate_partitions(n) {
                for r in 0..=n {
                    for mu in enumerate_partitions(r) {
                        let c = littlewood_richardson(&lam, &mu, &Partition::row(n - r)).unwrap();
                        let strip = lam.contains(&mu)
                            && (0..lam.len()).all(|i| i == 0 || lam.part(i) <= mu.part(i - 1));
                        assert_eq!(c, u64::from(strip), "{lam} / {mu}");
                    }
                }
            }
        }
    }
}
