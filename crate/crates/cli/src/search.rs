//! Screening regular graphs for pairs that share a hook immanantal
//! polynomial.
//!
//! For connected regular graphs of a common degree, two graphs agree on the
//! hook polynomial of the adjacency matrix exactly when they agree on that of
//! `beta D + gamma A`; the search checks that the two bucketings coincide and
//! lists the non-isomorphic pairs inside each bucket.

use std::collections::HashMap;

use immanant::matrix::{lincomb_matrix, Rational};
use immanant::{emit_graph6, Error, Graph, Limits, MatrixKind, Partition, Result};
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct SearchRequest {
    pub k: usize,
    pub beta: Rational,
    pub gamma: Rational,
    /// Keep only graphs of this order.
    pub order: Option<usize>,
    /// Keep only graphs of this degree; defaults to the first regular graph's.
    pub degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub graphs_read: usize,
    pub degree: Option<usize>,
    pub skipped: Vec<Skipped>,
    /// Bucket by hook polynomial of the adjacency matrix, in input order.
    pub adjacency_buckets: Vec<Vec<String>>,
    /// Bucket by hook polynomial of `beta D + gamma A`, in input order.
    pub lincomb_buckets: Vec<Vec<String>>,
    /// Whether the two bucketings coincide.
    pub consistent: bool,
    /// Non-isomorphic pairs sharing an adjacency bucket.
    pub cospectral_pairs: Vec<[String; 2]>,
}

fn skip_reason(g: &Graph, req: &SearchRequest, degree: Option<usize>) -> Option<String> {
    if req.order.is_some_and(|n| g.order() != n) {
        return Some(format!("order {} is not {}", g.order(), req.order.unwrap()));
    }
    if !g.is_connected() {
        return Some("not connected".into());
    }
    match (g.regular_degree(), degree) {
        (None, _) => Some("not regular".into()),
        (Some(d), Some(want)) if d != want => Some(format!("degree {d} is not {want}")),
        _ => None,
    }
}

/// Groups indices by key, buckets in order of first appearance.
fn bucket<K: std::hash::Hash + Eq>(keys: &[K]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut seen: HashMap<&K, usize> = HashMap::new();
    let mut ids = Vec::with_capacity(keys.len());
    let mut buckets: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        let id = *seen.entry(k).or_insert_with(|| {
            buckets.push(Vec::new());
            buckets.len() - 1
        });
        buckets[id].push(i);
        ids.push(id);
    }
    (ids, buckets)
}

fn petgraph_of(g: &Graph) -> UnGraph<(), ()> {
    let edges: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (u as u32, v as u32))
        .collect();
    let mut pg = UnGraph::<(), ()>::with_capacity(g.order(), edges.len());
    for _ in 0..g.order() {
        pg.add_node(());
    }
    pg.extend_with_edges(edges);
    pg
}

fn hook_coeffs(
    m: &immanant::ExactMatrix,
    lambda: &Partition,
    limits: &Limits,
) -> Result<Vec<Rational>> {
    Ok(immanant::immanant::imm_poly_with(m, lambda, limits)?
        .coeffs()
        .to_vec())
}

pub fn search_regular_pairs(
    graphs: &[Graph],
    req: &SearchRequest,
    limits: &Limits,
) -> Result<SearchReport> {
    if let (Some(n), Some(d)) = (req.order, req.degree) {
        if n * d % 2 == 1 {
            return Err(Error::Argument(format!(
                "no {d}-regular graph has {n} vertices"
            )));
        }
    }
    let degree = req.degree.or_else(|| {
        graphs
            .iter()
            .find(|g| skip_reason(g, req, None).is_none())
            .and_then(Graph::regular_degree)
    });
    let mut skipped = Vec::new();
    let mut kept = Vec::new();
    for g in graphs {
        match skip_reason(g, req, degree) {
            Some(reason) => skipped.push(Skipped {
                graph6: emit_graph6(g),
                reason,
            }),
            None => kept.push(g),
        }
    }
    if let Some(n) = kept.first().map(|g| g.order()) {
        if kept.iter().any(|g| g.order() != n) {
            return Err(Error::Argument(
                "graphs of different orders; pass --n".into(),
            ));
        }
        if req.k == 0 || req.k > n {
            return Err(Error::Argument(format!(
                "hook k = {} is outside [1, {n}]",
                req.k
            )));
        }
    }
    let keys = kept
        .par_iter()
        .map(|g| {
            let lambda = Partition::hook(g.order(), req.k)?;
            let a = hook_coeffs(&MatrixKind::Adjacency.matrix(g), &lambda, limits)?;
            let b = hook_coeffs(&lincomb_matrix(g, &req.beta, &req.gamma), &lambda, limits)?;
            Ok((a, b))
        })
        .collect::<Result<Vec<_>>>()?;
    let (a_keys, b_keys): (Vec<_>, Vec<_>) = keys.into_iter().unzip();
    let (a_ids, a_buckets) = bucket(&a_keys);
    let (b_ids, b_buckets) = bucket(&b_keys);
    let consistent =
        (0..kept.len()).all(|i| (0..i).all(|j| (a_ids[i] == a_ids[j]) == (b_ids[i] == b_ids[j])));

    let names: Vec<String> = kept.iter().map(|g| emit_graph6(g)).collect();
    let pets: Vec<_> = kept.iter().map(|g| petgraph_of(g)).collect();
    let mut cospectral_pairs = Vec::new();
    for b in &a_buckets {
        for (x, &i) in b.iter().enumerate() {
            for &j in &b[x + 1..] {
                if !is_isomorphic(&pets[i], &pets[j]) {
                    cospectral_pairs.push([names[i].clone(), names[j].clone()]);
                }
            }
        }
    }
    let render = |bs: Vec<Vec<usize>>| -> Vec<Vec<String>> {
        bs.into_iter()
            .map(|b| b.into_iter().map(|i| names[i].clone()).collect())
            .collect()
    };
    Ok(SearchReport {
        graphs_read: graphs.len(),
        degree,
        skipped,
        adjacency_buckets: render(a_buckets),
        lincomb_buckets: render(b_buckets),
        consistent,
        cospectral_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use immanant::matrix::rat;
    use immanant::Family;

    fn req(k: usize) -> SearchRequest {
        SearchRequest {
            k,
            beta: rat(1),
            gamma: rat(-1),
            order: None,
            degree: None,
        }
    }

    #[test]
    fn single_cycle_is_one_bucket() {
        let g = Family::Cycle(5).build().unwrap();
        let rep = search_regular_pairs(&[g], &req(2), &Limits::default()).unwrap();
        assert_eq!(rep.adjacency_buckets.len(), 1);
        assert!(rep.consistent);
        assert!(rep.cospectral_pairs.is_empty());
    }

    #[test]
    fn empty_input() {
        let rep = search_regular_pairs(&[], &req(2), &Limits::default()).unwrap();
        assert_eq!(rep.graphs_read, 0);
        assert!(rep.adjacency_buckets.is_empty());
        assert!(rep.consistent);
    }

    #[test]
    fn isomorphic_copies_are_not_pairs() {
        let g = Family::Cycle(6).build().unwrap();
        let h = g.relabel(&[3, 1, 4, 0, 5, 2]).unwrap();
        let path = Family::Path(6).build().unwrap();
        let rep = search_regular_pairs(&[g, h, path], &req(3), &Limits::default()).unwrap();
        assert_eq!(rep.adjacency_buckets.len(), 1);
        assert_eq!(rep.adjacency_buckets[0].len(), 2);
        assert!(rep.cospectral_pairs.is_empty());
        assert_eq!(rep.skipped.len(), 1);
    }

    #[test]
    fn odd_degree_sum_is_rejected() {
        let mut r = req(2);
        r.order = Some(5);
        r.degree = Some(3);
        assert!(search_regular_pairs(&[], &r, &Limits::default()).is_err());
    }
}
