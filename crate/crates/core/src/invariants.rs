//! Degree, cycle, matching and pendant-star invariants of a graph.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{arg, Result};
use crate::graph::Graph;

/// Elementary symmetric polynomials `e_0..e_len` of a sequence.
pub fn elementary_symmetric_all(values: &[usize]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); values.len() + 1];
    e[0] = BigInt::one();
    for (i, &v) in values.iter().enumerate() {
        for r in (1..=i + 1).rev() {
            let t = &e[r - 1] * v;
            e[r] += t;
        }
    }
    e
}

/// `F_r(G)`: the `r`-th elementary symmetric function of the degree sequence.
pub fn elementary_symmetric(g: &Graph, r: usize) -> Result<BigInt> {
    if r > g.order() {
        return arg(format!("F_r needs r <= n, got r={r}, n={}", g.order()));
    }
    Ok(elementary_symmetric_all(&g.degrees()).swap_remove(r))
}

/// `F_r` of the degree sequence with the given vertices deleted. Degrees are
/// those of the full graph.
fn f_without(degrees: &[usize], removed: &[usize], r: usize) -> BigInt {
    let rest: Vec<usize> = (0..degrees.len())
        .filter(|v| !removed.contains(v))
        .map(|v| degrees[v])
        .collect();
    if r > rest.len() {
        return BigInt::zero();
    }
    elementary_symmetric_all(&rest).swap_remove(r)
}

/// Every cycle of length `l` as a vertex sequence, each cycle once.
///
/// A cycle is reported starting at its smallest vertex, travelling towards
/// the smaller of that vertex's two cycle-neighbours; the list is sorted
/// lexicographically.
pub fn cycles(g: &Graph, l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if l < 3 {
        return out;
    }
    fn extend(g: &Graph, l: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().expect("nonempty");
        if path.len() == l {
            if g.has_edge(last, start) && path[1] < path[l - 1] {
                out.push(path.clone());
            }
            return;
        }
        for v in g.neighbors(last) {
            if v > start && !path.contains(&v) {
                path.push(v);
                extend(g, l, path, out);
                path.pop();
            }
        }
    }
    for s in 0..g.order() {
        extend(g, l, &mut vec![s], &mut out);
    }
    out.sort();
    out
}

/// Every `l`-matching as a sorted edge list, lexicographically ordered.
pub fn matchings(g: &Graph, l: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        edges: &[(usize, usize)],
        from: usize,
        l: usize,
        used: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == l {
            out.push(chosen.clone());
            return;
        }
        for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
            if used.contains(&u) || used.contains(&v) {
                continue;
            }
            used.extend([u, v]);
            chosen.push((u, v));
            rec(edges, i + 1, l, used, chosen, out);
            chosen.pop();
            used.truncate(used.len() - 2);
        }
    }
    let mut out = Vec::new();
    rec(&g.edges(), 0, l, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// `C_r^l(G)`: sum over `l`-cycles of `F_{r-l}` of the remaining degrees.
pub fn census_cycles(g: &Graph, r: usize, l: usize) -> Result<BigInt> {
    if !(3..=5).contains(&l) {
        return arg(format!("cycle census supports l in 3..=5, got {l}"));
    }
    if r < l {
        return arg(format!("cycle census needs r >= l, got r={r}, l={l}"));
    }
    let degrees = g.degrees();
    Ok(cycles(g, l)
        .iter()
        .map(|c| f_without(&degrees, c, r - l))
        .sum())
}

/// `M_r^l(G)`: sum over `l`-matchings of `F_{r-2l}` of the remaining degrees.
pub fn census_matchings(g: &Graph, r: usize, l: usize) -> Result<BigInt> {
    if !(1..=2).contains(&l) {
        return arg(format!("matching census supports l in 1..=2, got {l}"));
    }
    if r < 2 * l {
        return arg(format!("matching census needs r >= 2l, got r={r}, l={l}"));
    }
    let degrees = g.degrees();
    Ok(matchings(g, l)
        .iter()
        .map(|m| {
            let verts: Vec<usize> = m.iter().flat_map(|&(u, v)| [u, v]).collect();
            f_without(&degrees, &verts, r - 2 * l)
        })
        .sum())
}

/// Degree sum of each triangle, in lexicographic triangle order.
pub fn triangle_degree_sums(g: &Graph) -> Vec<usize> {
    cycles(g, 3)
        .iter()
        .map(|t| t.iter().map(|&v| g.degree(v)).sum())
        .collect()
}

/// Sum over pendant-star centres of (pendant neighbours - 1).
pub fn star_degree(g: &Graph) -> usize {
    (0..g.order())
        .map(|c| g.neighbors(c).filter(|&v| g.degree(v) == 1).count())
        .filter(|&p| p > 0)
        .map(|p| p - 1)
        .sum()
}

/// Every combinatorial quantity the hook coefficient formulas consume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    /// `F_0..F_n`.
    pub f: Vec<BigInt>,
    pub cycles3: Vec<Vec<usize>>,
    pub cycles4: Vec<Vec<usize>>,
    pub cycles5: Vec<Vec<usize>>,
    pub matchings1: Vec<Vec<(usize, usize)>>,
    pub matchings2: Vec<Vec<(usize, usize)>>,
    pub triangle_degree_sums: Vec<usize>,
    pub star_degree: usize,
}

impl InvariantBundle {
    pub fn new(g: &Graph) -> Self {
        let degrees = g.degrees();
        InvariantBundle {
            n: g.order(),
            m: g.size(),
            f: elementary_symmetric_all(&degrees),
            degrees,
            cycles3: cycles(g, 3),
            cycles4: cycles(g, 4),
            cycles5: cycles(g, 5),
            matchings1: matchings(g, 1),
            matchings2: matchings(g, 2),
            triangle_degree_sums: triangle_degree_sums(g),
            star_degree: star_degree(g),
        }
    }

    /// `F_r`, zero past `n`.
    pub fn f(&self, r: usize) -> BigInt {
        self.f.get(r).cloned().unwrap_or_default()
    }

    pub fn cycles(&self, l: usize) -> &[Vec<usize>] {
        match l {
            3 => &self.cycles3,
            4 => &self.cycles4,
            5 => &self.cycles5,
            _ => &[],
        }
    }

    /// `C_r^l`; zero when `r < l`.
    pub fn census_cycles(&self, r: usize, l: usize) -> BigInt {
        if r < l {
            return BigInt::zero();
        }
        self.cycles(l)
            .iter()
            .map(|c| f_without(&self.degrees, c, r - l))
            .sum()
    }

    /// `M_r^l` for `l` in `{1, 2}`; zero when `r < 2l`.
    pub fn census_matchings(&self, r: usize, l: usize) -> BigInt {
        let ms = match l {
            1 => &self.matchings1,
            2 => &self.matchings2,
            _ => return BigInt::zero(),
        };
        if r < 2 * l {
            return BigInt::zero();
        }
        ms.iter()
            .map(|m| {
                let verts: Vec<usize> = m.iter().flat_map(|&(u, v)| [u, v]).collect();
                f_without(&self.degrees, &verts, r - 2 * l)
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn elementary_symmetric_examples() {
        let c3 = Family::Cycle(3).build().unwrap();
        assert_eq!(elementary_symmetric(&c3, 0).unwrap(), b(1));
        assert_eq!(elementary_symmetric(&c3, 1).unwrap(), b(6));
        assert_eq!(elementary_symmetric(&c3, 2).unwrap(), b(12));
        assert_eq!(elementary_symmetric(&c3, 3).unwrap(), b(8));
        assert!(elementary_symmetric(&c3, 4).is_err());
    }

    #[test]
    fn census_examples() {
        let c3 = Family::Cycle(3).build().unwrap();
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(census_cycles(&c3, 3, 3).unwrap(), b(1));
        assert_eq!(census_matchings(&c3, 3, 1).unwrap(), b(6));
        assert_eq!(census_cycles(&k4, 4, 3).unwrap(), b(12));
        assert!(census_cycles(&k4, 2, 3).is_err());
        assert!(census_cycles(&k4, 6, 6).is_err());
        assert!(census_matchings(&k4, 3, 2).is_err());
        assert!(census_matchings(&k4, 6, 3).is_err());
    }

    #[test]
    fn cycle_counts_of_complete_graphs() {
        // K_n has n!/(2l(n-l)!) cycles of length l
        let k5 = Family::Complete(5).build().unwrap();
        assert_eq!(cycles(&k5, 3).len(), 10);
        assert_eq!(cycles(&k5, 4).len(), 15);
        assert_eq!(cycles(&k5, 5).len(), 12);
        assert_eq!(cycles(&Family::Complete(4).build().unwrap(), 4).len(), 3);
    }

    #[test]
    fn triangle_sums() {
        assert_eq!(
            triangle_degree_sums(&Family::Cycle(3).build().unwrap()),
            vec![6]
        );
        assert_eq!(
            triangle_degree_sums(&Family::Complete(4).build().unwrap()),
            vec![9; 4]
        );
        assert!(triangle_degree_sums(&Family::Path(4).build().unwrap()).is_empty());
    }

    #[test]
    fn star_degrees() {
        assert_eq!(star_degree(&Family::Star(5).build().unwrap()), 3);
        assert_eq!(star_degree(&Family::Cycle(4).build().unwrap()), 0);
        assert_eq!(star_degree(&Family::Path(3).build().unwrap()), 1);
        assert_eq!(star_degree(&Family::Path(2).build().unwrap()), 0);
    }

    #[test]
    fn bundle_basics() {
        let g = Family::CompleteBipartite(2, 3).build().unwrap();
        let bundle = InvariantBundle::new(&g);
        assert_eq!(bundle.f(0), b(1));
        assert_eq!(bundle.f(1), b(2 * 6));
        assert_eq!(bundle.cycles3.len(), 0);
        assert_eq!(bundle.cycles4.len(), 3);
        assert_eq!(bundle.census_cycles(4, 4), b(3));
        assert_eq!(bundle.census_matchings(2, 1), b(6));
    }
}
