//! Turning command-line strings into graphs, matrices and partitions.

use std::fs::File;
use std::io::BufReader;

use immanant::graph::read_graph6_lines;
use immanant::matrix::{parse_rational, Rational};
use immanant::{parse_graph6, Error, Family, Graph, MatrixKind, Partition, Result};

/// Graphs named by `g6:<string>`, `file:<path>` or `family:<name>:<params>`.
pub fn load_graphs(spec: &str) -> Result<Vec<Graph>> {
    if let Some(s) = spec.strip_prefix("g6:") {
        Ok(vec![parse_graph6(s)?])
    } else if let Some(path) = spec.strip_prefix("file:") {
        read_graph_file(path)
    } else if let Some(f) = spec.strip_prefix("family:") {
        Ok(vec![f.parse::<Family>()?.build()?])
    } else {
        Err(Error::Argument(format!(
            "graph source {spec:?} must start with g6:, file: or family:"
        )))
    }
}

/// Every graph in a graph6 file; `#` lines and blank lines are skipped.
pub fn read_graph_file(path: &str) -> Result<Vec<Graph>> {
    let file = File::open(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    read_graph6_lines(BufReader::new(file))
        .map(|(line, g)| g.map_err(|e| Error::Graph6(format!("{path}:{line}: {e}"))))
        .collect()
}

/// `hook:k` or an explicit part list such as `3,1,1`.
pub fn parse_partition(spec: &str, n: usize) -> Result<Partition> {
    let lambda = if let Some(k) = spec.strip_prefix("hook:") {
        let k = k
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Argument(format!("bad hook spec {spec:?}: {e}")))?;
        Partition::hook(n, k)?
    } else {
        parse_parts(spec)?
    };
    if lambda.weight() != n {
        return Err(Error::Argument(format!(
            "partition {lambda} has weight {}, graph has {n} vertices",
            lambda.weight()
        )));
    }
    Ok(lambda)
}

pub fn parse_parts(spec: &str) -> Result<Partition> {
    let parts = spec
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::Argument(format!("bad partition {spec:?}: {e}")))?;
    Partition::new(parts)
}

/// Optional exact rational flag.
pub fn rational(flag: &str, v: Option<&str>) -> Result<Option<Rational>> {
    v.map(|s| parse_rational(s).map_err(|e| Error::Argument(format!("--{flag}: {e}"))))
        .transpose()
}

/// A matrix kind, where bare `Aalpha` and `lincomb` take their parameters
/// from `--alpha` and `--beta`/`--gamma`.
pub fn matrix_kind(
    spec: &str,
    alpha: Option<&Rational>,
    beta: Option<&Rational>,
    gamma: Option<&Rational>,
) -> Result<MatrixKind> {
    let missing = |what: &str| Error::Argument(format!("matrix {spec} needs {what}"));
    match spec {
        "Aalpha" => Ok(MatrixKind::AAlpha(
            alpha.ok_or_else(|| missing("--alpha"))?.clone(),
        )),
        "lincomb" => Ok(MatrixKind::LinComb(
            beta.ok_or_else(|| missing("--beta"))?.clone(),
            gamma.ok_or_else(|| missing("--gamma"))?.clone(),
        )),
        s => s.parse(),
    }
}
