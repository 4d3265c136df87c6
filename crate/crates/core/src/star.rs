//! Star degree as a lower bound on the multiplicity of the root `beta`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::immanant::imm_poly;
use crate::invariants::star_degree;
use crate::matrix::{format_rational, lincomb_matrix, Rational};
use crate::partition::Partition;
use crate::polynomial::{root_multiplicity, RootMultiplicity};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarDegreeReport {
    pub partition: Partition,
    pub beta: String,
    pub gamma: String,
    pub star_degree: usize,
    pub multiplicity: RootMultiplicity,
    pub holds: bool,
}

/// Multiplicity of `beta` in `Imm_lambda(xI - beta D - gamma A)` against the
/// star degree of a connected graph.
pub fn star_degree_bound_check(
    g: &Graph,
    lambda: &Partition,
    beta: &Rational,
    gamma: &Rational,
) -> Result<StarDegreeReport> {
    if !g.is_connected() {
        return Err(Error::HypothesisNotMet("graph is not connected".into()));
    }
    let poly = imm_poly(&lincomb_matrix(g, beta, gamma), lambda)?;
    let multiplicity = root_multiplicity(&poly, beta);
    let sd = star_degree(g);
    Ok(StarDegreeReport {
        partition: lambda.clone(),
        beta: format_rational(beta),
        gamma: format_rational(gamma),
        star_degree: sd,
        holds: multiplicity.count(g.order()) >= sd,
        multiplicity,
    })
}
