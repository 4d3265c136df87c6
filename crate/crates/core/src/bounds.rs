//! Extremal bounds on `c_{lambda,r}(beta D(G) + gamma A(G))`:
//!
//! * connected graphs, `beta > 0`, `gamma >= -beta`, `gamma != 0`:
//!   star below, complete graph above;
//! * trees, `beta > 0`, `gamma != 0`: star below, path above;
//! * connected bipartite graphs, `beta > 0`, `gamma != 0`: star below,
//!   balanced complete bipartite graph above.
//!
//! The lower bounds go through a spanning tree, so connectivity is part of
//! the hypothesis: the edgeless graph sits below the star.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{arg, Error, Result};
use crate::graph::{Family, Graph};
use crate::immanant::{CoefficientProfile, Limits};
use crate::matrix::{format_rational, lincomb_matrix, Rational};
use crate::partition::{enumerate_partitions, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    General,
    Tree,
    Bipartite,
}

impl Regime {
    pub const ALL: [Regime; 3] = [Regime::General, Regime::Tree, Regime::Bipartite];

    /// Lower and upper extremal graphs on `n` vertices.
    pub fn extremal_graphs(self, n: usize) -> Result<(Graph, Graph)> {
        let lower = Family::Star(n).build()?;
        let upper = match self {
            Regime::General => Family::Complete(n).build()?,
            Regime::Tree => Family::Path(n).build()?,
            Regime::Bipartite if n < 2 => Family::Path(n).build()?,
            Regime::Bipartite => Family::CompleteBipartite(n.div_ceil(2), n / 2).build()?,
        };
        Ok((lower, upper))
    }

    /// Why `(beta, gamma)` falls outside the hypothesis, if it does.
    pub fn parameter_violation(self, beta: &Rational, gamma: &Rational) -> Option<String> {
        if !beta.is_positive() {
            return Some("beta must be positive".into());
        }
        if gamma.is_zero() {
            return Some("gamma must be nonzero".into());
        }
        if self == Regime::General && *gamma < -beta {
            return Some("gamma must be at least -beta".into());
        }
        None
    }

    /// Why `g` falls outside the graph class, if it does.
    pub fn graph_violation(self, g: &Graph) -> Option<String> {
        match self {
            Regime::General if !g.is_connected() => Some("graph is not connected".into()),
            Regime::Tree if !g.is_tree() => Some("graph is not a tree".into()),
            Regime::Bipartite if !g.is_connected() => Some("graph is not connected".into()),
            Regime::Bipartite if !g.is_bipartite() => Some("graph is not bipartite".into()),
            _ => None,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::General => "general",
            Regime::Tree => "tree",
            Regime::Bipartite => "bipartite",
        })
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Regime::General),
            "tree" => Ok(Regime::Tree),
            "bipartite" => Ok(Regime::Bipartite),
            _ => arg(format!("unknown regime {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum BoundVerdict {
    Holds,
    Violated,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub regime: Regime,
    pub partition: Partition,
    pub r: usize,
    pub beta: String,
    pub gamma: String,
    pub lower: Option<String>,
    pub value: Option<String>,
    pub upper: Option<String>,
    pub verdict: BoundVerdict,
}

/// Coefficients of the two extremal graphs for one regime and `(beta, gamma)`,
/// reusable across many graphs of the same order.
pub struct BoundChecker {
    regime: Regime,
    n: usize,
    beta: Rational,
    gamma: Rational,
    lower: CoefficientProfile,
    upper: CoefficientProfile,
    limits: Limits,
}

impl BoundChecker {
    pub fn new(
        regime: Regime,
        n: usize,
        beta: &Rational,
        gamma: &Rational,
        limits: &Limits,
    ) -> Result<Self> {
        let (lo, hi) = regime.extremal_graphs(n)?;
        Ok(BoundChecker {
            regime,
            n,
            beta: beta.clone(),
            gamma: gamma.clone(),
            lower: CoefficientProfile::new(&lincomb_matrix(&lo, beta, gamma), limits)?,
            upper: CoefficientProfile::new(&lincomb_matrix(&hi, beta, gamma), limits)?,
            limits: *limits,
        })
    }

    fn skipped(&self, lambda: &Partition, r: usize, reason: String) -> BoundReport {
        BoundReport {
            regime: self.regime,
            partition: lambda.clone(),
            r,
            beta: format_rational(&self.beta),
            gamma: format_rational(&self.gamma),
            lower: None,
            value: None,
            upper: None,
            verdict: BoundVerdict::Skipped(reason),
        }
    }

    /// Reports for every partition in `lambdas` and every `r` in `0..=n`.
    pub fn check(&self, g: &Graph, lambdas: &[Partition]) -> Result<Vec<BoundReport>> {
        if g.order() != self.n {
            return arg(format!(
                "graph has order {}, checker built for {}",
                g.order(),
                self.n
            ));
        }
        let reason = self
            .regime
            .parameter_violation(&self.beta, &self.gamma)
            .or_else(|| self.regime.graph_violation(g));
        if let Some(reason) = reason {
            return Ok(lambdas
                .iter()
                .flat_map(|l| (0..=self.n).map(move |r| (l, r)))
                .map(|(l, r)| self.skipped(l, r, reason.clone()))
                .collect());
        }
        let profile =
            CoefficientProfile::new(&lincomb_matrix(g, &self.beta, &self.gamma), &self.limits)?;
        let mut out = Vec::new();
        for lambda in lambdas {
            for r in 0..=self.n {
                let lo = self.lower.coefficient(lambda, r)?;
                let v = profile.coefficient(lambda, r)?;
                let hi = self.upper.coefficient(lambda, r)?;
                let verdict = if lo <= v && v <= hi {
                    BoundVerdict::Holds
                } else {
                    BoundVerdict::Violated
                };
                out.push(BoundReport {
                    regime: self.regime,
                    partition: lambda.clone(),
                    r,
                    beta: format_rational(&self.beta),
                    gamma: format_rational(&self.gamma),
                    lower: Some(format_rational(&lo)),
                    value: Some(format_rational(&v)),
                    upper: Some(format_rational(&hi)),
                    verdict,
                });
            }
        }
        Ok(out)
    }

    /// Reports for every partition of `n`.
    pub fn check_all_partitions(&self, g: &Graph) -> Result<Vec<BoundReport>> {
        self.check(g, &enumerate_partitions(self.n))
    }
}

/// Checks one coefficient against the regime's extremal graphs.
pub fn check_coeff_bounds(
    g: &Graph,
    lambda: &Partition,
    r: usize,
    beta: &Rational,
    gamma: &Rational,
    regime: Regime,
) -> Result<BoundReport> {
    let n = g.order();
    if lambda.weight() != n {
        return arg(format!("partition {lambda} does not have weight {n}"));
    }
    if r > n {
        return arg(format!("r = {r} exceeds order {n}"));
    }
    let checker = BoundChecker::new(regime, n, beta, gamma, &Limits::default())?;
    let reports = checker.check(g, std::slice::from_ref(lambda))?;
    Ok(reports.into_iter().nth(r).expect("one report per r"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{rat, ratio};
    use crate::partition::hooks;

    #[test]
    fn general_small_example() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let checker =
            BoundChecker::new(Regime::General, 5, &rat(1), &rat(1), &Limits::default()).unwrap();
        for rep in checker.check(&g, &hooks(5)).unwrap() {
            assert_eq!(rep.verdict, BoundVerdict::Holds, "{rep:?}");
        }
    }

    #[test]
    fn bipartite_cycle() {
        let g = Family::Cycle(6).build().unwrap();
        let checker =
            BoundChecker::new(Regime::Bipartite, 6, &rat(1), &rat(-1), &Limits::default()).unwrap();
        for rep in checker.check_all_partitions(&g).unwrap() {
            assert_eq!(rep.verdict, BoundVerdict::Holds, "{rep:?}");
        }
    }

    #[test]
    fn extremes_are_tight() {
        let star = Family::Star(5).build().unwrap();
        let rep = check_coeff_bounds(
            &star,
            &Partition::row(5),
            3,
            &rat(1),
            &rat(-1),
            Regime::Tree,
        )
        .unwrap();
        assert_eq!(rep.lower, rep.value);
        let path = Family::Path(5).build().unwrap();
        let rep = check_coeff_bounds(
            &path,
            &Partition::row(5),
            3,
            &rat(1),
            &rat(-1),
            Regime::Tree,
        )
        .unwrap();
        assert_eq!(rep.upper, rep.value);
    }

    #[test]
    fn hypothesis_violations_are_skipped() {
        let g = Family::Cycle(4).build().unwrap();
        let lam = Partition::row(4);
        let rep = check_coeff_bounds(&g, &lam, 2, &rat(1), &rat(-2), Regime::General).unwrap();
        assert!(matches!(rep.verdict, BoundVerdict::Skipped(_)));
        let rep = check_coeff_bounds(&g, &lam, 2, &rat(0), &rat(1), Regime::General).unwrap();
        assert!(matches!(rep.verdict, BoundVerdict::Skipped(_)));
        let rep = check_coeff_bounds(&g, &lam, 2, &rat(1), &rat(-1), Regime::Tree).unwrap();
        assert!(matches!(rep.verdict, BoundVerdict::Skipped(_)));
        let tri = Family::Complete(3).build().unwrap();
        let rep = check_coeff_bounds(
            &tri,
            &Partition::row(3),
            1,
            &ratio(1, 2),
            &rat(1),
            Regime::Bipartite,
        )
        .unwrap();
        assert!(matches!(rep.verdict, BoundVerdict::Skipped(_)));
        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let rep =
            check_coeff_bounds(&disconnected, &lam, 2, &rat(1), &rat(1), Regime::General).unwrap();
        assert!(matches!(rep.verdict, BoundVerdict::Skipped(_)));
    }

    #[test]
    fn regime_names_round_trip() {
        for r in Regime::ALL {
            assert_eq!(r.to_string().parse::<Regime>().unwrap(), r);
        }
    }
}
