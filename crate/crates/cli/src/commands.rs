//! Subcommand bodies. Each returns an [`Outcome`]; errors map to exit codes
//! in `main`.

use std::fmt::Write as _;
use std::path::PathBuf;

use immanant::atlas::Atlas;
use immanant::hook::{hook_coeff_closed, min_order, render_deviations, HookCoeffRequest};
use immanant::matrix::{format_rational, Rational};
use immanant::orientation::census as orientation_census;
use immanant::verify::{run_suite, Suite, VerifyConfig};
use immanant::{
    character, emit_graph6, enumerate_partitions, imm_poly, Error, Limits, MatrixKind, Partition,
    Result,
};
use serde_json::{json, Value};

use crate::input::{
    load_graphs, matrix_kind, parse_partition, parse_parts, rational, read_graph_file,
};
use crate::output::Outcome;
use crate::search::{search_regular_pairs, SearchRequest};
use crate::MatrixArgs;

fn parts_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn parse_kind(m: &MatrixArgs) -> Result<MatrixKind> {
    let alpha = rational("alpha", m.alpha.as_deref())?;
    let beta = rational("beta", m.beta.as_deref())?;
    let gamma = rational("gamma", m.gamma.as_deref())?;
    matrix_kind(&m.matrix, alpha.as_ref(), beta.as_ref(), gamma.as_ref())
}

fn matrix_inputs(m: &MatrixArgs, kind: &MatrixKind) -> Value {
    json!({
        "graph": m.graph,
        "matrix": kind.to_string(),
        "partition": m.partition,
    })
}

pub fn poly(m: &MatrixArgs) -> Result<Outcome> {
    let kind = parse_kind(m)?;
    let mut results = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for g in load_graphs(&m.graph)? {
        let lambda = parse_partition(&m.partition, g.order())?;
        let p = imm_poly(&kind.matrix(&g), &lambda)?;
        let g6 = emit_graph6(&g);
        let coeffs: Vec<String> = p.coeffs().iter().map(format_rational).collect();
        let _ = writeln!(text, "{g6} {kind} {lambda}");
        for (r, c) in coeffs.iter().enumerate() {
            let _ = writeln!(text, "  c_{r} = {c}");
            rows.push(vec![
                g6.clone(),
                kind.to_string(),
                lambda.to_string(),
                r.to_string(),
                c.clone(),
            ]);
        }
        results.push(json!({
            "graph6": g6,
            "order": g.order(),
            "partition": parts_json(&lambda),
            "coefficients": coeffs,
        }));
    }
    Ok(Outcome {
        json: json!({"command": "poly", "inputs": matrix_inputs(m, &kind), "results": results}),
        header: vec!["graph6", "matrix", "partition", "r", "coefficient"],
        rows,
        text,
        failed: false,
    })
}

pub fn coeff(m: &MatrixArgs, r: usize) -> Result<Outcome> {
    let kind = parse_kind(m)?;
    let (beta, gamma) = kind.coefficients();
    let mut results = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut failed = false;
    for g in load_graphs(&m.graph)? {
        let n = g.order();
        if r > n {
            return Err(Error::Argument(format!("r = {r} exceeds the order {n}")));
        }
        let lambda = parse_partition(&m.partition, n)?;
        let value = imm_poly(&kind.matrix(&g), &lambda)?.coefficient(r).clone();
        let closed: Option<Rational> = match lambda.hook_arm() {
            Some(k) if r <= 5 && n >= min_order(r) => Some(hook_coeff_closed(&HookCoeffRequest {
                graph: &g,
                k,
                r,
                beta: beta.clone(),
                gamma: gamma.clone(),
            })?),
            _ => None,
        };
        let agrees = closed.as_ref().map(|c| *c == value);
        failed |= agrees == Some(false);
        let g6 = emit_graph6(&g);
        let value_s = format_rational(&value);
        let closed_s = closed.as_ref().map(format_rational);
        let _ = write!(text, "{g6} {kind} {lambda} c_{r} = {value_s}");
        if let Some(c) = &closed_s {
            let _ = write!(text, " (closed form {c})");
        }
        text.push('\n');
        rows.push(vec![
            g6.clone(),
            kind.to_string(),
            lambda.to_string(),
            r.to_string(),
            value_s.clone(),
            closed_s.clone().unwrap_or_default(),
        ]);
        results.push(json!({
            "graph6": g6,
            "order": n,
            "partition": parts_json(&lambda),
            "r": r,
            "value": value_s,
            "closed_form": closed_s,
            "agrees": agrees,
        }));
    }
    let mut inputs = matrix_inputs(m, &kind);
    inputs["r"] = json!(r);
    Ok(Outcome {
        json: json!({"command": "coeff", "inputs": inputs, "results": results}),
        header: vec!["graph6", "matrix", "partition", "r", "value", "closed_form"],
        rows,
        text,
        failed,
    })
}

pub fn char(spec: &str, n: Option<usize>, class: Option<&str>) -> Result<Outcome> {
    let lambda = if spec.starts_with("hook:") {
        let n = n.ok_or_else(|| Error::Argument("hook partitions need --n".into()))?;
        parse_partition(spec, n)?
    } else {
        let p = parse_parts(spec)?;
        if n.is_some_and(|n| n != p.weight()) {
            return Err(Error::Argument(format!(
                "partition {p} does not have weight {}",
                n.unwrap()
            )));
        }
        p
    };
    let classes = match class {
        Some(c) => vec![parse_parts(c)?],
        None => enumerate_partitions(lambda.weight()),
    };
    let mut values = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for mu in &classes {
        let v = character(&lambda, mu)?.to_string();
        let _ = writeln!(text, "chi_{lambda}({mu}) = {v}");
        rows.push(vec![lambda.to_string(), mu.to_string(), v.clone()]);
        values.push(json!({"class": parts_json(mu), "value": v}));
    }
    Ok(Outcome {
        json: json!({
            "command": "char",
            "inputs": {"partition": spec, "n": n, "class": class},
            "partition": parts_json(&lambda),
            "values": values,
        }),
        header: vec!["partition", "class", "value"],
        rows,
        text,
        failed: false,
    })
}

pub fn census(graph: &str, r: Option<usize>) -> Result<Outcome> {
    let mut results = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for g in load_graphs(graph)? {
        let n = g.order();
        if r.is_some_and(|r| r > n) {
            return Err(Error::Argument(format!(
                "r = {} exceeds the order {n}",
                r.unwrap()
            )));
        }
        let g6 = emit_graph6(&g);
        let rs: Vec<usize> = r.map_or_else(|| (0..=n).collect(), |r| vec![r]);
        for r in rs {
            let c = orientation_census(&g, r)?;
            let _ = writeln!(text, "{g6} r={r} total={}", c.total());
            let mut counts = Vec::new();
            for (ty, count) in &c.counts {
                let _ = writeln!(text, "  {ty}: {count}");
                rows.push(vec![
                    g6.clone(),
                    r.to_string(),
                    ty.to_string(),
                    count.to_string(),
                ]);
                counts.push(json!({"type": parts_json(ty.partition()), "count": count}));
            }
            results.push(json!({"graph6": g6, "r": r, "total": c.total(), "counts": counts}));
        }
    }
    Ok(Outcome {
        json: json!({"command": "census", "inputs": {"graph": graph, "r": r}, "results": results}),
        header: vec!["graph6", "r", "type", "count"],
        rows,
        text,
        failed: false,
    })
}

pub struct VerifyArgs {
    pub suites: Vec<String>,
    pub max_n: Option<usize>,
    pub beta: Option<String>,
    pub gamma: Option<String>,
    pub atlas: Option<PathBuf>,
    pub seed: u64,
    pub matrix_samples: usize,
    pub graph_samples: usize,
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let suites = if a.suites.is_empty() || a.suites.iter().any(|s| s == "all") {
        Suite::ALL.to_vec()
    } else {
        a.suites
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Suite>>>()?
    };
    if a.max_n == Some(0) {
        return Err(Error::Argument("--max-n must be positive".into()));
    }
    let beta = rational("beta", a.beta.as_deref())?;
    let gamma = rational("gamma", a.gamma.as_deref())?;
    let atlas = a.atlas.clone().map_or_else(Atlas::bundled, Atlas::new);
    let deviations = std::fs::read_to_string(atlas.dir().join("../hook_deviations.csv")).ok();
    let cfg = VerifyConfig {
        atlas,
        max_n: a.max_n,
        params: beta.zip(gamma),
        seed: a.seed,
        matrix_samples: a.matrix_samples,
        graph_samples: a.graph_samples,
        limits: Limits::default(),
        deviations_file: deviations,
    };
    let reports = suites
        .iter()
        .map(|&s| run_suite(s, &cfg))
        .collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.passed);
    let mut rows = Vec::new();
    let mut text = String::new();
    for rep in &reports {
        let _ = writeln!(
            text,
            "{}: {}",
            rep.suite,
            if rep.passed { "PASS" } else { "FAIL" }
        );
        for c in &rep.checks {
            let tag = match (c.informational, c.failures) {
                (true, _) => "info",
                (false, 0) => "ok",
                _ => "FAIL",
            };
            let _ = writeln!(
                text,
                "  [{tag}] {}: {} cases, {} failures",
                c.name, c.cases, c.failures
            );
            for w in &c.witnesses {
                let _ = writeln!(text, "      witness: {}", w.replace('\n', " "));
            }
            rows.push(vec![
                rep.suite.to_string(),
                c.name.clone(),
                c.cases.to_string(),
                c.failures.to_string(),
                c.informational.to_string(),
                c.passed().to_string(),
            ]);
        }
        if let Some(d) = &rep.deviations {
            let _ = writeln!(text, "  printed readings:");
            for line in render_deviations(d).lines() {
                let _ = writeln!(text, "    {line}");
            }
        }
    }
    Ok(Outcome {
        json: json!({
            "command": "verify",
            "inputs": {
                "suites": suites,
                "max_n": a.max_n,
                "beta": a.beta,
                "gamma": a.gamma,
                "atlas": cfg.atlas.dir(),
                "seed": a.seed,
                "matrix_samples": a.matrix_samples,
                "graph_samples": a.graph_samples,
            },
            "passed": passed,
            "suites": reports,
        }),
        header: vec![
            "suite",
            "check",
            "cases",
            "failures",
            "informational",
            "passed",
        ],
        rows,
        text,
        failed: !passed,
    })
}

pub fn search(
    input: &str,
    k: usize,
    beta: &str,
    gamma: &str,
    n: Option<usize>,
    degree: Option<usize>,
) -> Result<Outcome> {
    let req = SearchRequest {
        k,
        beta: rational("beta", Some(beta))?.unwrap(),
        gamma: rational("gamma", Some(gamma))?.unwrap(),
        order: n,
        degree,
    };
    let graphs = read_graph_file(input)?;
    let rep = search_regular_pairs(&graphs, &req, &Limits::default())?;
    let mut rows = Vec::new();
    let mut text = format!(
        "{} graphs read, {} skipped, {} buckets; bucketings {}\n",
        rep.graphs_read,
        rep.skipped.len(),
        rep.adjacency_buckets.len(),
        if rep.consistent { "agree" } else { "DISAGREE" }
    );
    for (i, b) in rep.adjacency_buckets.iter().enumerate() {
        let _ = writeln!(text, "  bucket {i}: {}", b.join(" "));
        for g in b {
            rows.push(vec![i.to_string(), g.clone()]);
        }
    }
    for [a, b] in &rep.cospectral_pairs {
        let _ = writeln!(text, "  pair: {a} {b}");
    }
    let mut json = serde_json::to_value(&rep).expect("report serializes");
    json["command"] = json!("search");
    json["inputs"] = json!({
        "input": input,
        "k": k,
        "beta": format_rational(&req.beta),
        "gamma": format_rational(&req.gamma),
        "n": n,
        "degree": degree,
    });
    Ok(Outcome {
        json,
        header: vec!["bucket", "graph6"],
        rows,
        text,
        failed: !rep.consistent,
    })
}
