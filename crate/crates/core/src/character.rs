//! Irreducible characters of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama recursion, memoized in a
//! [`CharacterTable`]. The hook fast paths evaluate closed forms on a few
//! conjugacy classes and fall back to the recursion whenever a closed form
//! would need a binomial coefficient with negative upper index.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{arg, Result};
use crate::partition::Partition;

/// `binom(a, b)` for `a >= 0`, zero when `b < 0` or `b > a`.
/// Returns `None` for a negative upper index.
pub fn binomial(a: i64, b: i64) -> Option<BigInt> {
    if a < 0 {
        return None;
    }
    if b < 0 || b > a {
        return Some(BigInt::zero());
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    Some(acc)
}

/// Memoized character values keyed by `(lambda, mu)`.
///
/// Lookups never change returned values; the table only grows. Safe to share
/// between threads: concurrent inserts of the same key write equal values.
#[derive(Debug, Default)]
pub struct CharacterTable {
    memo: RwLock<HashMap<(Partition, Partition), BigInt>>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table used by the free functions of this crate.
    pub fn global() -> &'static CharacterTable {
        static TABLE: OnceLock<CharacterTable> = OnceLock::new();
        TABLE.get_or_init(CharacterTable::new)
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("character cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Drops every cached value.
    pub fn clear(&self) {
        self.memo.write().expect("character cache poisoned").clear();
    }

    /// `chi_lambda(mu)`; the weights must agree.
    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.weight() != mu.weight() {
            return arg(format!(
                "character needs equal weights, got {lambda} ({}) and {mu} ({})",
                lambda.weight(),
                mu.weight()
            ));
        }
        Ok(self.eval(lambda, mu.parts()))
    }

    fn eval(&self, lambda: &Partition, mu: &[usize]) -> BigInt {
        let Some((&first, rest)) = mu.split_first() else {
            return if lambda.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        // single row or column: trivial and sign characters
        if lambda.len() == 1 {
            return BigInt::one();
        }
        if lambda.part(0) == 1 {
            let odd_moves = lambda.weight() - mu.len();
            return if odd_moves.is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            };
        }
        let key = (lambda.clone(), Partition::from_unsorted(mu.to_vec()));
        if let Some(v) = self
            .memo
            .read()
            .expect("character cache poisoned")
            .get(&key)
        {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (smaller, height) in lambda.remove_rim_hooks(first) {
            let v = self.eval(&smaller, rest);
            if height % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo
            .write()
            .expect("character cache poisoned")
            .insert(key, total.clone());
        total
    }
}

/// `chi_lambda(mu)` through the global table.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    CharacterTable::global().character(lambda, mu)
}

fn check_hook(n: usize, k: usize) -> Result<Partition> {
    if n == 0 || k == 0 || k > n {
        return arg(format!("hook needs 1 <= k <= n, got n={n}, k={k}"));
    }
    Partition::hook(n, k)
}

fn mn_fallback(n: usize, k: usize, class: Vec<usize>) -> BigInt {
    let lambda = Partition::hook(n, k).expect("checked hook");
    let mu = Partition::from_unsorted(class);
    character(&lambda, &mu).expect("class has weight n")
}

/// `chi_{(k,1^{n-k})}(id) = binom(n-1, k-1)`.
pub fn hook_character_identity(n: usize, k: usize) -> Result<BigInt> {
    check_hook(n, k)?;
    Ok(binomial(n as i64 - 1, k as i64 - 1).expect("n >= 1"))
}

/// Hook character on the class `(l, 1^{n-l})`.
pub fn hook_character_lcycle(n: usize, k: usize, l: usize) -> Result<BigInt> {
    check_hook(n, k)?;
    if l < 2 || l > n {
        return arg(format!("cycle length l={l} must lie in [2, {n}]"));
    }
    let (n, k, l) = (n as i64, k as i64, l as i64);
    let top = n - l - 1;
    match (binomial(top, k - l - 1), binomial(top, k - 1)) {
        (Some(a), Some(b)) => Ok(if l % 2 == 1 { a + b } else { a - b }),
        _ => {
            let mut class = vec![l as usize];
            class.extend(std::iter::repeat_n(1, (n - l) as usize));
            Ok(mn_fallback(n as usize, k as usize, class))
        }
    }
}

/// Hook character on the class `(2^i, 1^{n-2i})`.
pub fn hook_character_involution(n: usize, k: usize, i: usize) -> Result<BigInt> {
    check_hook(n, k)?;
    if i == 0 || 2 * i > n {
        return arg(format!(
            "involution class needs 1 <= i and 2i <= n, got i={i}, n={n}"
        ));
    }
    let top = n as i64 - 2 * i as i64 - 1;
    if top < 0 {
        let mut class = vec![2; i];
        class.extend(std::iter::repeat_n(1, n - 2 * i));
        return Ok(mn_fallback(n, k, class));
    }
    let mut total = BigInt::zero();
    for j in 0..=i as i64 {
        let term = binomial(top, n as i64 - k as i64 - 2 * j).expect("top >= 0")
            * binomial(i as i64, j).expect("i >= 0");
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Hook character on the class `(3, 2, 1^{n-5})`.
pub fn hook_character_32(n: usize, k: usize) -> Result<BigInt> {
    if n < 5 {
        return arg(format!("class (3,2,1^(n-5)) needs n >= 5, got {n}"));
    }
    check_hook(n, k)?;
    if n == 5 {
        return Ok(mn_fallback(n, k, vec![3, 2]));
    }
    let top = n as i64 - 6;
    let k = k as i64;
    let b = |lower: i64| binomial(top, lower).expect("n >= 6");
    Ok(b(k - 6) - b(k - 4) + b(k - 3) - b(k - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn chi(l: &[usize], m: &[usize]) -> i64 {
        i64::try_from(character(&p(l), &p(m)).unwrap()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(chi(&[3], &[2, 1]), 1);
        assert_eq!(chi(&[1, 1, 1], &[3]), 1);
        assert_eq!(chi(&[2, 1, 1], &[2, 1, 1]), -1);
        assert_eq!(chi(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(chi(&[2, 1], &[2, 1]), 0);
        assert_eq!(chi(&[2, 1], &[3]), -1);
        assert_eq!(chi(&[2, 2], &[2, 2]), 2);
        assert_eq!(chi(&[], &[]), 1);
    }

    #[test]
    fn s4_table_against_frozen_values() {
        // rows (4),(3,1),(2,2),(2,1,1),(1^4); columns in the same order
        let table = [
            [1, 1, 1, 1, 1],
            [-1, 0, -1, 1, 3],
            [0, -1, 2, 0, 2],
            [1, 0, -1, -1, 3],
            [-1, 1, 1, -1, 1],
        ];
        let parts = enumerate_partitions(4);
        for (i, lam) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                assert_eq!(
                    character(lam, mu).unwrap(),
                    BigInt::from(table[i][j]),
                    "{lam} at {mu}"
                );
            }
        }
    }

    #[test]
    fn weight_mismatch_is_error() {
        assert!(character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn private_table_matches_global() {
        let t = CharacterTable::new();
        for lam in enumerate_partitions(6) {
            for mu in enumerate_partitions(6) {
                assert_eq!(
                    t.character(&lam, &mu).unwrap(),
                    character(&lam, &mu).unwrap()
                );
            }
        }
        assert!(!t.is_empty());
        t.clear();
        assert!(t.is_empty());
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), Some(BigInt::from(10)));
        assert_eq!(binomial(3, -1), Some(BigInt::zero()));
        assert_eq!(binomial(3, 4), Some(BigInt::zero()));
        assert_eq!(binomial(0, 0), Some(BigInt::one()));
        assert_eq!(binomial(-1, 0), None);
    }

    #[test]
    fn hook_examples() {
        let i = |v: BigInt| i64::try_from(v).unwrap();
        assert_eq!(i(hook_character_identity(5, 3).unwrap()), 6);
        assert_eq!(i(hook_character_identity(9, 1).unwrap()), 1);
        assert_eq!(
            i(hook_character_identity(7, 4).unwrap()),
            chi(&[4, 1, 1, 1], &[1; 7])
        );
        assert_eq!(i(hook_character_lcycle(5, 2, 3).unwrap()), 1);
        assert_eq!(i(hook_character_lcycle(4, 3, 2).unwrap()), 1);
        assert_eq!(
            i(hook_character_lcycle(6, 2, 6).unwrap()),
            chi(&[2, 1, 1, 1, 1], &[6])
        );
        assert_eq!(
            hook_character_involution(5, 2, 1).unwrap(),
            hook_character_lcycle(5, 2, 2).unwrap()
        );
        assert_eq!(
            i(hook_character_involution(6, 3, 2).unwrap()),
            chi(&[3, 1, 1, 1], &[2, 2, 1, 1])
        );
        assert_eq!(i(hook_character_involution(4, 2, 2).unwrap()), -1);
        assert_eq!(i(hook_character_32(7, 1).unwrap()), -1);
        assert_eq!(i(hook_character_32(8, 8).unwrap()), 1);
        assert_eq!(
            i(hook_character_32(9, 4).unwrap()),
            chi(&[4, 1, 1, 1, 1, 1], &[3, 2, 1, 1, 1, 1])
        );
    }

    #[test]
    fn hook_argument_errors() {
        assert!(hook_character_identity(5, 0).is_err());
        assert!(hook_character_identity(5, 6).is_err());
        assert!(hook_character_lcycle(5, 2, 1).is_err());
        assert!(hook_character_lcycle(5, 2, 6).is_err());
        assert!(hook_character_involution(5, 2, 0).is_err());
        assert!(hook_character_involution(5, 2, 3).is_err());
        assert!(hook_character_32(4, 2).is_err());
    }
}
