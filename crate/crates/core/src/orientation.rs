//! Vertex orientations: for a vertex subset `B`, every vertex of `B` sends one
//! arrow along an incident edge. The arrows form a functional digraph; its
//! directed cycles inside `B` (a doubly-arrowed edge is a 2-cycle) give the
//! parts of size at least two, and every remaining arrow gives a part 1.
//!
//! Summing the subset expansion of a coefficient over these orientations
//! instead of over permutations turns `c_{lambda,r}(beta D + gamma A)` into a
//! weighted count of orientation types.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::character::{binomial, CharacterTable};
use crate::error::{arg, Error, Result};
use crate::graph::Graph;
use crate::invariants::elementary_symmetric_all;
use crate::matrix::Rational;
use crate::partition::{CycleTypeCounts, Partition};

/// Largest number of arrow assignments a census will enumerate.
pub const CENSUS_CAP: u64 = 100_000_000;

/// Partition of `|B|` recording the cycle structure of an orientation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct OrientationType(pub Partition);

impl OrientationType {
    pub fn partition(&self) -> &Partition {
        &self.0
    }
}

impl fmt::Display for OrientationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Number of orientations of each type over all `r`-subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationCensus {
    pub r: usize,
    pub counts: BTreeMap<OrientationType, u64>,
}

impl OrientationCensus {
    pub fn get(&self, nu: &Partition) -> u64 {
        self.counts
            .get(&OrientationType(nu.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Type of the orientation `arrow` on the vertex set `members`.
fn classify(members: &[usize], arrow: &[usize], in_b: &[bool]) -> Partition {
    let n = in_b.len();
    // 0 unvisited, 1 on the current walk, 2 finished
    let mut state = vec![0u8; n];
    let mut parts = Vec::new();
    let mut cycle_vertices = 0;
    let mut walk = Vec::new();
    for &start in members {
        if state[start] != 0 {
            continue;
        }
        walk.clear();
        let mut v = start;
        while in_b[v] && state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = arrow[v];
        }
        if in_b[v] && state[v] == 1 {
            let len = walk.len() - walk.iter().position(|&u| u == v).unwrap();
            parts.push(len);
            cycle_vertices += len;
        }
        for &u in &walk {
            state[u] = 2;
        }
    }
    parts.extend(std::iter::repeat_n(1, members.len() - cycle_vertices));
    Partition::from_unsorted(parts)
}

fn census_of_subset(g: &Graph, mask: u64, out: &mut BTreeMap<Partition, u64>) {
    let n = g.order();
    let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    let in_b: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
    let nbrs: Vec<Vec<usize>> = members.iter().map(|&v| g.neighbors(v).collect()).collect();
    if nbrs.iter().any(|l| l.is_empty()) {
        return;
    }
    let mut digits = vec![0usize; members.len()];
    let mut arrow = vec![usize::MAX; n];
    loop {
        for (idx, &v) in members.iter().enumerate() {
            arrow[v] = nbrs[idx][digits[idx]];
        }
        *out.entry(classify(&members, &arrow, &in_b)).or_insert(0) += 1;
        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == digits.len() {
                return;
            }
            digits[i] += 1;
            if digits[i] < nbrs[i].len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Census `a_G(nu, r)` by exhaustive enumeration of subsets and arrows.
pub fn census(g: &Graph, r: usize) -> Result<OrientationCensus> {
    let n = g.order();
    if r > n {
        return arg(format!("subset size {r} exceeds order {n}"));
    }
    if n > 63 {
        return Err(Error::Intractable {
            what: "graph order",
            got: n,
            cap: 63,
        });
    }
    let total = &elementary_symmetric_all(&g.degrees())[r];
    if *total > BigInt::from(CENSUS_CAP) {
        return Err(Error::Intractable {
            what: "orientation assignments",
            got: total.to_usize().unwrap_or(usize::MAX),
            cap: CENSUS_CAP as usize,
        });
    }
    let masks: Vec<u64> = (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .collect();
    let merged = masks
        .par_iter()
        .fold(BTreeMap::new, |mut acc, &mask| {
            census_of_subset(g, mask, &mut acc);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut counts: BTreeMap<OrientationType, u64> = merged
        .into_iter()
        .map(|(k, v)| (OrientationType(k), v))
        .collect();
    if r == 0 {
        counts.insert(OrientationType(Partition::empty()), 1);
    }
    Ok(OrientationCensus { r, counts })
}

fn power(x: &Rational, e: usize) -> Rational {
    // explicit so that 0^0 never arises from a library convention
    if e == 0 {
        Rational::one()
    } else {
        num_traits::pow(x.clone(), e)
    }
}

/// Weight of one orientation of type `nu` (a partition of `r`) in the
/// coefficient `c_{lambda,r}`: the sum over sub-selections `mu` of the cycles
/// of `nu` of `beta^(r - |mu|) gamma^|mu| chi_lambda(mu, 1, ..., 1)` times
/// the number of ways to pick `mu`.
pub fn type_weight(
    table: &CharacterTable,
    lambda: &Partition,
    nu: &Partition,
    beta: &Rational,
    gamma: &Rational,
) -> Result<Rational> {
    let n = lambda.weight();
    let r = nu.weight();
    if r > n {
        return arg(format!("type {nu} has weight above {n}"));
    }
    let counts = nu.cycle_counts();
    let lengths: Vec<(usize, usize)> = counts.iter().filter(|&(l, _)| l >= 2).collect();
    let mut total = Rational::zero();
    let mut picks = vec![0usize; lengths.len()];
    loop {
        let mut chosen = CycleTypeCounts::new();
        let mut moved = 0;
        let mut ways = BigInt::one();
        for (&(l, avail), &t) in lengths.iter().zip(&picks) {
            chosen.set(l, t);
            moved += l * t;
            ways *= binomial(avail as i64, t as i64).unwrap_or_default();
        }
        let mu = chosen.to_partition().padded(n - moved);
        let chi = table.character(lambda, &mu)?;
        if !chi.is_zero() {
            total +=
                Rational::from_integer(chi * ways) * power(beta, r - moved) * power(gamma, moved);
        }
        let mut i = 0;
        loop {
            if i == picks.len() {
                return Ok(total);
            }
            picks[i] += 1;
            if picks[i] <= lengths[i].1 {
                break;
            }
            picks[i] = 0;
            i += 1;
        }
    }
}

/// `c_{lambda,r}(beta D(G) + gamma A(G))` from the orientation census.
pub fn coeff_via_orientations(
    g: &Graph,
    lambda: &Partition,
    r: usize,
    beta: &Rational,
    gamma: &Rational,
) -> Result<Rational> {
    if lambda.weight() != g.order() {
        return arg(format!(
            "partition {lambda} does not have weight {}",
            g.order()
        ));
    }
    let c = census(g, r)?;
    coeff_from_census(&c, lambda, beta, gamma)
}

/// Same as [`coeff_via_orientations`] for an already computed census.
pub fn coeff_from_census(
    c: &OrientationCensus,
    lambda: &Partition,
    beta: &Rational,
    gamma: &Rational,
) -> Result<Rational> {
    let table = CharacterTable::global();
    let mut total = Rational::zero();
    for (nu, &count) in &c.counts {
        total += type_weight(table, lambda, nu.partition(), beta, gamma)?
            * Rational::from_integer(count.into());
    }
    Ok(total)
}

/// One per-type comparison `lower <= upper`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusComparison {
    pub nu: Partition,
    pub lower: u64,
    pub upper: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub edge: (usize, usize),
    pub r: usize,
    pub comparisons: Vec<CensusComparison>,
    pub holds: bool,
}

fn compare(lower: &OrientationCensus, upper: &OrientationCensus) -> Vec<CensusComparison> {
    let mut types: Vec<&OrientationType> = lower.counts.keys().chain(upper.counts.keys()).collect();
    types.sort();
    types.dedup();
    types
        .into_iter()
        .map(|t| CensusComparison {
            nu: t.0.clone(),
            lower: lower.get(&t.0),
            upper: upper.get(&t.0),
        })
        .collect()
}

/// Checks `a_{G-e}(nu, r) <= a_G(nu, r)` for every type.
pub fn check_edge_monotonicity(
    g: &Graph,
    e: (usize, usize),
    r: usize,
) -> Result<MonotonicityReport> {
    if !g.has_edge(e.0, e.1) {
        return arg(format!("{e:?} is not an edge"));
    }
    let smaller = census(&g.remove_edge(e.0, e.1)?, r)?;
    let larger = census(g, r)?;
    let comparisons = compare(&smaller, &larger);
    Ok(MonotonicityReport {
        edge: e,
        r,
        holds: comparisons.iter().all(|c| c.lower <= c.upper),
        comparisons,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCensusReport {
    pub r: usize,
    /// `(nu, star, tree, path)` counts.
    pub rows: Vec<(Partition, u64, u64, u64)>,
    pub holds: bool,
}

/// Checks `a_{S_n}(nu, r) <= a_T(nu, r) <= a_{P_n}(nu, r)` for every type.
pub fn check_tree_census_bounds(t: &Graph, r: usize) -> Result<TreeCensusReport> {
    if !t.is_tree() {
        return Err(Error::HypothesisNotMet("graph is not a tree".into()));
    }
    let n = t.order();
    let star = census(&crate::graph::Family::Star(n).build()?, r)?;
    let path = census(&crate::graph::Family::Path(n).build()?, r)?;
    let tree = census(t, r)?;
    let mut types: Vec<&OrientationType> = star
        .counts
        .keys()
        .chain(tree.counts.keys())
        .chain(path.counts.keys())
        .collect();
    types.sort();
    types.dedup();
    let rows: Vec<_> = types
        .into_iter()
        .map(|ty| {
            (
                ty.0.clone(),
                star.get(&ty.0),
                tree.get(&ty.0),
                path.get(&ty.0),
            )
        })
        .collect();
    Ok(TreeCensusReport {
        r,
        holds: rows.iter().all(|(_, s, t, p)| s <= t && t <= p),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::immanant::CoefficientProfile;
    use crate::matrix::{lincomb_matrix, rat, ratio};
    use crate::partition::enumerate_partitions;
    use crate::Limits;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn path_two_examples() {
        let g = Family::Path(2).build().unwrap();
        let c2 = census(&g, 2).unwrap();
        assert_eq!(c2.counts.len(), 1);
        assert_eq!(c2.get(&p(&[2])), 1);
        let c1 = census(&g, 1).unwrap();
        assert_eq!(c1.get(&p(&[1])), 2);
        let c0 = census(&g, 0).unwrap();
        assert_eq!(c0.get(&Partition::empty()), 1);
        assert_eq!(c0.total(), 1);
    }

    #[test]
    fn triangle_census() {
        // r = 3 on K_3: 8 assignments, 2 directed triangles, 6 with one
        // doubly-arrowed edge and a dangling arrow
        let c = census(&Family::Complete(3).build().unwrap(), 3).unwrap();
        assert_eq!(c.get(&p(&[3])), 2);
        assert_eq!(c.get(&p(&[2, 1])), 6);
        assert_eq!(c.total(), 8);
    }

    #[test]
    fn totals_match_elementary_symmetric() {
        for g in [
            Family::Cycle(5).build().unwrap(),
            Family::Complete(5).build().unwrap(),
            Family::CompleteBipartite(2, 3).build().unwrap(),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap(),
        ] {
            let e = elementary_symmetric_all(&g.degrees());
            for (r, want) in e.iter().enumerate() {
                assert_eq!(BigInt::from(census(&g, r).unwrap().total()), *want);
            }
        }
    }

    #[test]
    fn path_two_determinant_coefficient() {
        let g = Family::Path(2).build().unwrap();
        let lam = Partition::column(2);
        let (b, c) = (rat(1), rat(-1));
        let prof =
            CoefficientProfile::new(&lincomb_matrix(&g, &b, &c), &Limits::default()).unwrap();
        let oracle = prof.coefficient(&lam, 2).unwrap();
        assert_eq!(oracle, rat(0));
        assert_eq!(coeff_via_orientations(&g, &lam, 2, &b, &c).unwrap(), oracle);
    }

    #[test]
    fn r_zero_is_dimension() {
        let g = Family::Cycle(4).build().unwrap();
        let v = coeff_via_orientations(&g, &p(&[2, 2]), 0, &rat(1), &rat(-1)).unwrap();
        assert_eq!(v, rat(2));
    }

    #[test]
    fn matches_oracle_on_small_graphs() {
        let graphs = [
            Family::Star(4).build().unwrap(),
            Family::Cycle(4).build().unwrap(),
            Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
        ];
        for g in &graphs {
            for (b, c) in [
                (rat(1), rat(-1)),
                (rat(2), rat(3)),
                (ratio(1, 2), ratio(1, 2)),
            ] {
                let prof = CoefficientProfile::new(&lincomb_matrix(g, &b, &c), &Limits::default())
                    .unwrap();
                for r in 0..=4 {
                    let cen = census(g, r).unwrap();
                    for lam in enumerate_partitions(4) {
                        assert_eq!(
                            coeff_from_census(&cen, &lam, &b, &c).unwrap(),
                            prof.coefficient(&lam, r).unwrap(),
                            "{g:?} {lam} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn edge_monotonicity_examples() {
        let c4 = Family::Cycle(4).build().unwrap();
        for e in c4.edges() {
            assert!(check_edge_monotonicity(&c4, e, 2).unwrap().holds);
        }
        let p2 = Family::Path(2).build().unwrap();
        let rep = check_edge_monotonicity(&p2, (0, 1), 2).unwrap();
        assert!(rep.holds);
        assert_eq!(
            rep.comparisons,
            vec![CensusComparison {
                nu: p(&[2]),
                lower: 0,
                upper: 1
            }]
        );
        let rep = check_edge_monotonicity(&c4, (0, 1), 0).unwrap();
        assert_eq!(rep.comparisons[0].lower, 1);
        assert_eq!(rep.comparisons[0].upper, 1);
        assert!(check_edge_monotonicity(&c4, (0, 2), 1).is_err());
    }

    #[test]
    fn tree_sandwich_small() {
        let star = Family::Star(4).build().unwrap();
        let path = Family::Path(4).build().unwrap();
        let rep = check_tree_census_bounds(&path, 4).unwrap();
        assert!(rep.holds);
        assert!(rep.rows.iter().all(|(_, _, t, p)| t == p));
        let rep = check_tree_census_bounds(&star, 4).unwrap();
        assert!(rep.rows.iter().all(|(_, s, t, _)| s == t));
        assert!(check_tree_census_bounds(&Family::Cycle(4).build().unwrap(), 2).is_err());
    }

    #[test]
    fn bipartite_types_have_even_cycles() {
        let g = Family::CompleteBipartite(3, 3).build().unwrap();
        for r in 0..=6 {
            for ty in census(&g, r).unwrap().counts.keys() {
                assert!(ty.0.parts().iter().all(|&x| x == 1 || x % 2 == 0));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Family::Complete(40).build().unwrap();
        assert!(matches!(census(&g, 20), Err(Error::Intractable { .. })));
    }
}
