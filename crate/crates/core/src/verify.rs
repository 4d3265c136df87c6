//! Exhaustive and sampled cross-checks of every structural result against
//! brute-force oracles. Each suite can run on its own; each reports named
//! checks with case counts and the first few counterexamples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::atlas::Atlas;
use crate::bounds::{BoundChecker, BoundVerdict, Regime};
use crate::character::{
    character, hook_character_32, hook_character_identity, hook_character_involution,
    hook_character_lcycle, CharacterTable,
};
use crate::error::{arg, Error, Result};
use crate::graph::{emit_graph6, Family, Graph};
use crate::hook::{
    deviation_records, min_order, regular_equivalence_check, render_deviations, specialized_coeffs,
    DeviationRecord, HookFormulas, RegularEquivalence, SpecializedKind,
};
use crate::immanant::{
    contract, imm_poly_interpolated_with, immanant_profile, immanant_with, CoefficientProfile,
    Limits,
};
use crate::laplace::laplace_expand;
use crate::matrix::{
    format_rational, lincomb_matrix, rat, ratio, ExactMatrix, MatrixKind, Rational,
};
use crate::oracle::{determinant, permanent};
use crate::orientation::{
    census, check_edge_monotonicity, check_tree_census_bounds, coeff_from_census, type_weight,
};
use crate::partition::{enumerate_partitions, factorial, Partition};
use crate::polynomial::root_multiplicity;
use crate::zero_block::vanishes_by_zero_block;

/// Independently invocable verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Characters,
    OraclePair,
    OrientationFormula,
    Bounds,
    HookClosedForms,
    Laplace,
    ZeroBlock,
    StarDegree,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Characters,
        Suite::OraclePair,
        Suite::OrientationFormula,
        Suite::Bounds,
        Suite::HookClosedForms,
        Suite::Laplace,
        Suite::ZeroBlock,
        Suite::StarDegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Characters => "characters",
            Suite::OraclePair => "oracle-pair",
            Suite::OrientationFormula => "orientation-formula",
            Suite::Bounds => "bounds",
            Suite::HookClosedForms => "hook-closed-forms",
            Suite::Laplace => "laplace",
            Suite::ZeroBlock => "zero-block",
            Suite::StarDegree => "star-degree",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown suite {s:?}")))
    }
}

/// Knobs shared by all suites. `max_n`, when set, replaces every suite's
/// default order bound; `params`, when set, replaces the default
/// `(beta, gamma)` samples.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub atlas: Atlas,
    pub max_n: Option<usize>,
    pub params: Option<(Rational, Rational)>,
    pub seed: u64,
    pub matrix_samples: usize,
    pub graph_samples: usize,
    pub limits: Limits,
    /// Expected contents of the deviations file, compared verbatim.
    pub deviations_file: Option<String>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            atlas: Atlas::bundled(),
            max_n: None,
            params: None,
            seed: 0x5eed,
            matrix_samples: 200,
            graph_samples: 500,
            limits: Limits::default(),
            deviations_file: None,
        }
    }
}

impl VerifyConfig {
    fn bound(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    fn params_or(&self, defaults: &[(i64, i64, i64, i64)]) -> Vec<(Rational, Rational)> {
        match &self.params {
            Some(p) => vec![p.clone()],
            None => defaults
                .iter()
                .map(|&(bn, bd, gn, gd)| (ratio(bn, bd), ratio(gn, gd)))
                .collect(),
        }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// A named property with its case count and counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    /// Up to [`MAX_WITNESSES`] counterexamples.
    pub witnesses: Vec<String>,
    /// Reported but never fails the suite.
    pub informational: bool,
}

pub const MAX_WITNESSES: usize = 5;

impl Check {
    pub fn passed(&self) -> bool {
        self.informational || self.failures == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deviations: Option<Vec<DeviationRecord>>,
}

impl SuiteReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Accumulates checks in first-seen order.
#[derive(Debug, Default, Clone)]
struct Tally {
    checks: Vec<Check>,
}

impl Tally {
    fn slot(&mut self, name: &str, informational: bool) -> &mut Check {
        if let Some(i) = self.checks.iter().position(|c| c.name == name) {
            return &mut self.checks[i];
        }
        self.checks.push(Check {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            witnesses: Vec::new(),
            informational,
        });
        self.checks.last_mut().unwrap()
    }

    fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let c = self.slot(name, false);
        c.cases += 1;
        if !ok {
            c.failures += 1;
            if c.witnesses.len() < MAX_WITNESSES {
                c.witnesses.push(witness());
            }
        }
    }

    fn note(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.slot(name, true);
        self.record(name, ok, witness);
    }

    fn merge(mut self, other: Tally) -> Tally {
        for c in other.checks {
            let s = self.slot(&c.name, c.informational);
            s.cases += c.cases;
            s.failures += c.failures;
            for w in c.witnesses {
                if s.witnesses.len() < MAX_WITNESSES {
                    s.witnesses.push(w);
                }
            }
        }
        self
    }

    fn finish(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite,
            passed: self.checks.iter().all(Check::passed),
            checks: self.checks,
            deviations: None,
        }
    }
}

/// Runs `f` on every item in parallel and merges the tallies in input order.
fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Tally> + Sync + Send) -> Result<Tally> {
    let parts = items.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(Tally::default(), Tally::merge))
}

fn fr(x: &Rational) -> String {
    format_rational(x)
}

fn g6(g: &Graph) -> String {
    emit_graph6(g)
}

/// Runs one suite.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    match suite {
        Suite::Characters => characters(cfg),
        Suite::OraclePair => oracle_pair(cfg),
        Suite::OrientationFormula => orientation_formula(cfg),
        Suite::Bounds => bounds(cfg),
        Suite::HookClosedForms => hook_closed_forms(cfg),
        Suite::Laplace => laplace(cfg),
        Suite::ZeroBlock => zero_block(cfg),
        Suite::StarDegree => star_degree(cfg),
    }
}

// ---------------------------------------------------------------- characters

fn characters(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let top = cfg.bound(7);
    let mut t = Tally::default();
    let table = CharacterTable::global();
    for n in 1..=top {
        let parts = enumerate_partitions(n);
        let nf = factorial(n);
        let mut chi = Vec::with_capacity(parts.len());
        for l in &parts {
            chi.push(
                parts
                    .iter()
                    .map(|m| table.character(l, m))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let sizes: Vec<BigInt> = parts.iter().map(Partition::class_size).collect();
        for a in 0..parts.len() {
            for b in 0..parts.len() {
                let s: BigInt = (0..parts.len())
                    .map(|j| &sizes[j] * &chi[a][j] * &chi[b][j])
                    .sum();
                let want = if a == b { nf.clone() } else { BigInt::zero() };
                t.record("row orthogonality", s == want, || {
                    format!("n={n} {} {}: {s}", parts[a], parts[b])
                });
                let s: BigInt = (0..parts.len()).map(|i| &chi[i][a] * &chi[i][b]).sum();
                let ok = if a == b {
                    &s * &sizes[a] == nf
                } else {
                    s.is_zero()
                };
                t.record("column orthogonality", ok, || {
                    format!("n={n} classes {} {}: {s}", parts[a], parts[b])
                });
            }
        }
    }
    // closed forms run two orders further: they are cheap
    for n in 1..=top + 2 {
        for k in 1..=n {
            let hook = Partition::hook(n, k)?;
            let class = |v: Vec<usize>| Partition::from_unsorted(v);
            let ones = |c: usize| vec![1; c];
            t.record(
                "hook closed form: identity",
                hook_character_identity(n, k)? == character(&hook, &Partition::column(n))?,
                || format!("n={n} k={k}"),
            );
            for l in 2..=n {
                let mut v = vec![l];
                v.extend(ones(n - l));
                let want = character(&hook, &class(v))?;
                t.record(
                    "hook closed form: l-cycle",
                    hook_character_lcycle(n, k, l)? == want,
                    || format!("n={n} k={k} l={l}"),
                );
            }
            for i in 1..=n / 2 {
                let mut v = vec![2; i];
                v.extend(ones(n - 2 * i));
                let want = character(&hook, &class(v))?;
                t.record(
                    "hook closed form: involution",
                    hook_character_involution(n, k, i)? == want,
                    || format!("n={n} k={k} i={i}"),
                );
            }
            if n >= 5 {
                let mut v = vec![3, 2];
                v.extend(ones(n - 5));
                let want = character(&hook, &class(v))?;
                t.record(
                    "hook closed form: (3,2,1^(n-5))",
                    hook_character_32(n, k)? == want,
                    || format!("n={n} k={k}"),
                );
            }
        }
    }
    Ok(t.finish(Suite::Characters))
}

// ---------------------------------------------------------------- oracle pair

/// Random square matrix with entries `p/q`, `|p| <= 5`, `1 <= q <= 4`, and
/// roughly a quarter of them zero.
pub fn random_matrix(rng: &mut impl Rng, n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, |_, _| {
        if rng.gen_ratio(1, 4) {
            Rational::zero()
        } else {
            ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
        }
    })
}

fn oracle_pair(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let top = cfg.bound(6);
    let mut kinds = vec![
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
        MatrixKind::Adjacency,
        MatrixKind::AAlpha(ratio(1, 3)),
        MatrixKind::LinComb(rat(2), rat(3)),
    ];
    if let Some((b, g)) = &cfg.params {
        kinds.push(MatrixKind::LinComb(b.clone(), g.clone()));
    }
    let mut graphs = Vec::new();
    for n in 1..=top {
        graphs.extend(cfg.atlas.connected(n)?);
    }
    let mut t = sweep(&graphs, |g| {
        let mut t = Tally::default();
        for kind in &kinds {
            let m = kind.matrix(g);
            let profile = CoefficientProfile::new(&m, &cfg.limits)?;
            for lam in enumerate_partitions(g.order()) {
                let a = profile.polynomial(&lam)?;
                let b = imm_poly_interpolated_with(&m, &lam, &cfg.limits)?;
                t.record("subset expansion = interpolation", a == b, || {
                    format!("graph6={} matrix={kind} lambda={lam}", g6(g))
                });
            }
        }
        Ok(t)
    })?;

    // determinant and permanent on random matrices
    let mut rng = cfg.rng(2);
    let mats: Vec<ExactMatrix> = (0..cfg.matrix_samples)
        .map(|i| random_matrix(&mut rng, 1 + i % 7))
        .collect();
    t = t.merge(sweep(&mats, |m| {
        let mut t = Tally::default();
        let n = m.order();
        let det = immanant_with(m, &Partition::column(n), &cfg.limits)?;
        t.record(
            "immanant (1^n) = determinant",
            det == determinant(m),
            || format!("{m:?}"),
        );
        let per = immanant_with(m, &Partition::row(n), &cfg.limits)?;
        t.record("immanant (n) = permanent", per == permanent(m), || {
            format!("{m:?}")
        });
        Ok(t)
    })?);

    // shifting the matrix shifts the polynomial
    let shifts: Vec<(ExactMatrix, Rational)> = (0..20)
        .map(|i| {
            (
                random_matrix(&mut rng, 1 + i % 5),
                ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
            )
        })
        .collect();
    t = t.merge(sweep(&shifts, |(m, c)| {
        let mut t = Tally::default();
        let base = CoefficientProfile::new(m, &cfg.limits)?;
        let moved = CoefficientProfile::new(&m.shifted(c), &cfg.limits)?;
        for lam in enumerate_partitions(m.order()) {
            let want = base.polynomial(&lam)?.to_polynomial().shift(c);
            let got = moved.polynomial(&lam)?.to_polynomial();
            t.record("shift identity", got == want, || {
                format!("{m:?} c={} lambda={lam}", fr(c))
            });
        }
        Ok(t)
    })?);
    Ok(t.finish(Suite::OraclePair))
}

// ---------------------------------------------------------------- orientations

const ORIENTATION_PARAMS: [(i64, i64, i64, i64); 4] =
    [(1, 1, -1, 1), (1, 1, 1, 1), (2, 1, 3, 1), (1, 2, 1, 2)];

fn orientation_formula(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let top = cfg.bound(5);
    let params = cfg.params_or(&ORIENTATION_PARAMS);
    let mut graphs = Vec::new();
    for n in 1..=top {
        graphs.extend(cfg.atlas.graphs(n)?);
    }
    let mut t = sweep(&graphs, |g| {
        let mut t = Tally::default();
        let n = g.order();
        let censuses = (0..=n).map(|r| census(g, r)).collect::<Result<Vec<_>>>()?;
        let e = crate::invariants::elementary_symmetric_all(&g.degrees());
        for c in &censuses {
            t.record(
                "census total = e_r(degrees)",
                BigInt::from(c.total()) == e[c.r],
                || format!("graph6={} r={}", g6(g), c.r),
            );
            if g.is_bipartite() {
                let ok = c
                    .counts
                    .keys()
                    .all(|ty| ty.partition().parts().iter().all(|&x| x == 1 || x % 2 == 0));
                t.record("bipartite types have even cycles", ok, || {
                    format!("graph6={} r={}", g6(g), c.r)
                });
            }
        }
        for (beta, gamma) in &params {
            let profile = CoefficientProfile::new(&lincomb_matrix(g, beta, gamma), &cfg.limits)?;
            for lam in enumerate_partitions(n) {
                for c in &censuses {
                    let via = coeff_from_census(c, &lam, beta, gamma)?;
                    let want = profile.coefficient(&lam, c.r)?;
                    t.record("orientation formula = oracle", via == want, || {
                        format!(
                            "graph6={} lambda={lam} r={} beta={} gamma={}: {} vs {}",
                            g6(g),
                            c.r,
                            fr(beta),
                            fr(gamma),
                            fr(&via),
                            fr(&want)
                        )
                    });
                }
            }
        }
        for e in g.edges() {
            for r in 0..=n {
                let rep = check_edge_monotonicity(g, e, r)?;
                t.record("edge deletion lowers every census count", rep.holds, || {
                    format!("graph6={} edge={e:?} r={r}", g6(g))
                });
            }
        }
        Ok(t)
    })?;

    let mut trees = Vec::new();
    for n in 1..=top + 2 {
        trees.extend(cfg.atlas.trees(n)?);
    }
    t = t.merge(sweep(&trees, |tree| {
        let mut t = Tally::default();
        for r in 0..=tree.order() {
            let rep = check_tree_census_bounds(tree, r)?;
            t.record("star <= tree <= path census", rep.holds, || {
                format!("graph6={} r={r}", g6(tree))
            });
        }
        Ok(t)
    })?);

    // complete bipartite graphs: moving a vertex to the larger side loses
    // orientations of every type
    for total in 4..=(top + 2).min(7) {
        for q in 2..=total / 2 {
            let p = total - q;
            let big = census_all(&Family::CompleteBipartite(p, q).build()?)?;
            let small = census_all(&Family::CompleteBipartite(p + 1, q - 1).build()?)?;
            for r in 1..=total {
                for (ty, &count) in &small[r].counts {
                    let other = big[r].get(ty.partition());
                    t.record("K_{p,q} census exceeds K_{p+1,q-1}", other > count, || {
                        format!("p={p} q={q} r={r} type={ty}: {other} vs {count}")
                    });
                }
            }
        }
    }

    // sign of the per-type weight with beta = gamma = 1
    let table = CharacterTable::global();
    for n in 1..=top + 1 {
        for lam in enumerate_partitions(n) {
            for r in 0..=n {
                for nu in enumerate_partitions(r) {
                    let w = type_weight(table, &lam, &nu, &Rational::one(), &Rational::one())?;
                    t.note(
                        "per-type character sum is nonnegative",
                        !w.is_negative(),
                        || format!("lambda={lam} nu={nu}: {}", fr(&w)),
                    );
                }
            }
        }
    }
    Ok(t.finish(Suite::OrientationFormula))
}

fn census_all(g: &Graph) -> Result<Vec<crate::orientation::OrientationCensus>> {
    (0..=g.order()).map(|r| census(g, r)).collect()
}

// ---------------------------------------------------------------- bounds

const BOUND_PARAMS: [(i64, i64, i64, i64); 3] = [(1, 1, 1, 1), (1, 1, -1, 1), (2, 1, -1, 1)];

/// One regime over `graphs` (grouped by order) for every partition.
fn bound_sweep(
    regime: Regime,
    graphs: &[Graph],
    params: &[(Rational, Rational)],
    limits: &Limits,
) -> Result<Tally> {
    let mut tally = Tally::default();
    let mut orders: Vec<usize> = graphs.iter().map(Graph::order).collect();
    orders.sort_unstable();
    orders.dedup();
    for (beta, gamma) in params {
        for &n in &orders {
            let checker = BoundChecker::new(regime, n, beta, gamma, limits)?;
            let these: Vec<&Graph> = graphs.iter().filter(|g| g.order() == n).collect();
            let name = format!("{regime} sandwich");
            tally = tally.merge(sweep(&these, |g| {
                let mut t = Tally::default();
                for rep in checker.check_all_partitions(g)? {
                    match rep.verdict {
                        BoundVerdict::Skipped(reason) => {
                            t.note(&format!("{regime} skipped (hypothesis)"), true, || reason);
                        }
                        v => t.record(&name, v == BoundVerdict::Holds, || {
                            format!(
                                "graph6={} lambda={} r={} beta={} gamma={}: {:?} <= {:?} <= {:?}",
                                g6(g),
                                rep.partition,
                                rep.r,
                                rep.beta,
                                rep.gamma,
                                rep.lower,
                                rep.value,
                                rep.upper
                            )
                        }),
                    }
                }
                Ok(t)
            })?);
        }
    }
    Ok(tally)
}

fn bounds(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let params = cfg.params_or(&BOUND_PARAMS);
    let mut general = Vec::new();
    for n in 1..=cfg.bound(6) {
        general.extend(cfg.atlas.connected(n)?);
    }
    let mut trees = Vec::new();
    for n in 1..=cfg.bound(8) {
        trees.extend(cfg.atlas.trees(n)?);
    }
    let mut bip = Vec::new();
    for n in 1..=cfg.bound(7) {
        bip.extend(cfg.atlas.connected_bipartite(n)?);
    }
    let t = bound_sweep(Regime::General, &general, &params, &cfg.limits)?
        .merge(bound_sweep(Regime::Tree, &trees, &params, &cfg.limits)?)
        .merge(bound_sweep(Regime::Bipartite, &bip, &params, &cfg.limits)?);
    Ok(t.finish(Suite::Bounds))
}

// ---------------------------------------------------------------- hook forms

const HOOK_PARAMS: [(i64, i64, i64, i64); 4] =
    [(1, 1, -1, 1), (1, 1, 1, 1), (0, 1, 1, 1), (2, 1, 3, 1)];

/// Closed forms against the oracle on one graph, every `k >= 2` and `r <= 5`
/// the side conditions allow.
fn hook_graph(g: &Graph, params: &[(Rational, Rational)], limits: &Limits) -> Result<Tally> {
    let mut t = Tally::default();
    let n = g.order();
    let f = HookFormulas::new(g);
    for (beta, gamma) in params {
        let profile = CoefficientProfile::new(&lincomb_matrix(g, beta, gamma), limits)?;
        for k in 2..=n {
            let lam = Partition::hook(n, k)?;
            for r in (0..=5).filter(|&r| n >= min_order(r)) {
                let closed = f.coefficient(k, r, beta, gamma)?;
                let want = profile.coefficient(&lam, r)?;
                t.record(
                    &format!("closed form c_{r} = oracle"),
                    closed == want,
                    || {
                        format!(
                            "graph6={} k={k} beta={} gamma={}: {} vs {}",
                            g6(g),
                            fr(beta),
                            fr(gamma),
                            fr(&closed),
                            fr(&want)
                        )
                    },
                );
            }
        }
    }
    Ok(t)
}

fn hook_closed_forms(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let params = cfg.params_or(&HOOK_PARAMS);
    let top = cfg.bound(7);
    let exhaustive_top = top.min(6);
    let mut graphs = Vec::new();
    for n in 2..=exhaustive_top {
        graphs.extend(cfg.atlas.connected(n)?);
    }
    if top >= 7 {
        let mut seven = cfg.atlas.connected(7)?;
        seven.shuffle(&mut cfg.rng(4));
        seven.truncate(cfg.graph_samples);
        graphs.extend(seven);
    }
    let mut t = sweep(&graphs, |g| hook_graph(g, &params, &cfg.limits))?;

    // named matrices: closed form at the right parameters, and the oracle
    let kinds = [
        (SpecializedKind::Laplacian, MatrixKind::Laplacian),
        (
            SpecializedKind::SignlessLaplacian,
            MatrixKind::SignlessLaplacian,
        ),
        (SpecializedKind::Adjacency, MatrixKind::Adjacency),
        (
            SpecializedKind::AAlpha(ratio(1, 3)),
            MatrixKind::AAlpha(ratio(1, 3)),
        ),
    ];
    let small: Vec<Graph> = graphs
        .iter()
        .filter(|g| g.order() <= exhaustive_top)
        .cloned()
        .collect();
    t = t.merge(sweep(&small, |g| {
        let mut t = Tally::default();
        let n = g.order();
        let f = HookFormulas::new(g);
        for (spec, kind) in &kinds {
            let (beta, gamma) = kind.coefficients();
            let profile = CoefficientProfile::new(&kind.matrix(g), &cfg.limits)?;
            for k in 2..=n {
                for r in (0..=5).filter(|&r| n >= min_order(r)) {
                    let s = specialized_coeffs(g, k, r, spec)?;
                    let ok = s == f.coefficient(k, r, &beta, &gamma)?
                        && s == profile.coefficient(&Partition::hook(n, k)?, r)?;
                    t.record("named-matrix specialization", ok, || {
                        format!("graph6={} matrix={kind} k={k} r={r}", g6(g))
                    });
                }
            }
        }
        Ok(t)
    })?);

    // second immanantal (k = 2, Laplacian) and permanental (k = n, adjacency)
    // forms on every graph, connected or not
    let mut every = Vec::new();
    for n in 2..=top {
        every.extend(cfg.atlas.graphs(n)?);
    }
    t = t.merge(sweep(&every, |g| {
        let mut t = Tally::default();
        let n = g.order();
        let f = HookFormulas::new(g);
        let lap = CoefficientProfile::new(&MatrixKind::Laplacian.matrix(g), &cfg.limits)?;
        let adj = CoefficientProfile::new(&MatrixKind::Adjacency.matrix(g), &cfg.limits)?;
        let (one, minus) = (rat(1), rat(-1));
        for r in (0..=3).filter(|&r| n >= min_order(r)) {
            let v = specialized_coeffs(g, 2, r, &SpecializedKind::SecondImmanantal)?;
            let ok = v == lap.coefficient(&Partition::hook(n, 2)?, r)?
                && v == f.coefficient(2, r, &one, &minus)?;
            t.record("second immanantal form", ok, || {
                format!("graph6={} r={r}", g6(g))
            });
        }
        for r in 0..=4.min(n) {
            let v = specialized_coeffs(g, n, r, &SpecializedKind::Permanental)?;
            let mut ok = v == adj.coefficient(&Partition::row(n), r)?;
            if n >= min_order(r) {
                ok &= v == f.coefficient(n, r, &Rational::zero(), &one)?;
            }
            t.record("permanental form", ok, || format!("graph6={} r={r}", g6(g)));
        }
        Ok(t)
    })?);

    // regular graphs: adjacency equality iff linear-combination equality
    for n in [6, 8] {
        if cfg.max_n.is_some_and(|m| n > m) {
            continue;
        }
        let cubic = cfg.atlas.cubic(n)?;
        let pairs: Vec<(usize, usize)> = (0..cubic.len())
            .flat_map(|i| (i + 1..cubic.len()).map(move |j| (i, j)))
            .collect();
        let reg_params = cfg.params_or(&[(1, 1, -1, 1), (1, 1, 1, 1)]);
        t = t.merge(sweep(&pairs, |&(i, j)| {
            let mut t = Tally::default();
            for k in [2, 3] {
                for (beta, gamma) in &reg_params {
                    let rep = regular_equivalence_check(
                        &cubic[i],
                        &cubic[j],
                        k,
                        beta,
                        gamma,
                        &cfg.limits,
                    )?;
                    let ok = matches!(rep, RegularEquivalence::Checked { holds: true, .. });
                    t.record("regular-graph biconditional", ok, || {
                        format!("{} vs {} k={k}: {rep:?}", g6(&cubic[i]), g6(&cubic[j]))
                    });
                }
            }
            Ok(t)
        })?);
    }

    // printed readings: every disagreement carries a witness
    let records = deviation_records()?;
    for rec in &records {
        let witnessed = rec.printed == rec.oracle || rec.witness_graph6.is_some();
        t.record("deviation witnesses", witnessed, || rec.term_id.clone());
    }
    if let Some(expected) = &cfg.deviations_file {
        let got = render_deviations(&records);
        t.record("deviations file is current", &got == expected, || {
            got.clone()
        });
    }
    let mut report = t.finish(Suite::HookClosedForms);
    report.deviations = Some(records);
    Ok(report)
}

// ---------------------------------------------------------------- laplace

fn random_rows(rng: &mut impl Rng, n: usize, size: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    idx.truncate(size);
    idx.sort_unstable();
    idx
}

fn laplace(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let top = cfg.bound(6);
    let mut rng = cfg.rng(5);
    // (matrix, rows, whether M[R, R'] was zeroed)
    let mut cases = Vec::new();
    for n in 2..=top {
        for size in 1..=3.min(n - 1) {
            for _ in 0..4 {
                let m = random_matrix(&mut rng, n);
                let rows = random_rows(&mut rng, n, size);
                let mut blocked = m.clone();
                for &i in &rows {
                    for j in (0..n).filter(|j| !rows.contains(j)) {
                        blocked.set(i, j, Rational::zero());
                    }
                }
                cases.push((m, rows.clone(), false));
                cases.push((blocked, rows, true));
            }
        }
    }
    let t = sweep(&cases, |(m, rows, blocked)| {
        let mut t = Tally::default();
        let profile = immanant_profile(m, &cfg.limits)?;
        for lam in enumerate_partitions(m.order()) {
            let direct = contract(&profile, &lam)?;
            let expanded = laplace_expand(m, &lam, rows)?;
            let ok = direct == expanded;
            let w = || {
                format!(
                    "{m:?} rows={rows:?} lambda={lam}: {} vs {}",
                    fr(&expanded),
                    fr(&direct)
                )
            };
            t.record("expansion = immanant", ok, w);
            if *blocked {
                t.record("expansion = immanant, M[R,R'] = 0", ok, w);
            } else {
                t.record("expansion = immanant, general matrices", ok, w);
            }
            if lam == Partition::row(m.order()) {
                t.record("expansion = permanent", ok, w);
            }
        }
        Ok(t)
    })?;
    Ok(t.finish(Suite::Laplace))
}

// ---------------------------------------------------------------- zero blocks

fn zero_block(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let top = cfg.bound(6);
    let mut rng = cfg.rng(6);
    // half planted blocks with y + z = n + 1, half sparse random
    let mut cases = Vec::new();
    for i in 0..100 {
        let n = 2 + i % (top - 1).max(1);
        let mut m = random_matrix(&mut rng, n);
        let planted = i % 2 == 0;
        if planted {
            let y = rng.gen_range(1..=n);
            let rows = random_rows(&mut rng, n, y);
            let cols = random_rows(&mut rng, n, n + 1 - y);
            for &r in &rows {
                for &c in &cols {
                    m.set(r, c, Rational::zero());
                }
            }
        } else {
            for r in 0..n {
                for c in 0..n {
                    if rng.gen_ratio(1, 3) {
                        m.set(r, c, Rational::zero());
                    }
                }
            }
        }
        cases.push((m, planted));
    }
    let t = sweep(&cases, |(m, planted)| {
        let mut t = Tally::default();
        let n = m.order();
        let witness = vanishes_by_zero_block(m);
        if *planted {
            t.record("planted block is found", witness.is_some(), || {
                format!("{m:?}")
            });
        }
        if let Some(w) = &witness {
            let valid = w.y + w.z == n + 1
                && w.rows.len() == w.y
                && w.cols.len() == w.z
                && w.rows
                    .iter()
                    .all(|&i| w.cols.iter().all(|&j| m.is_zero_at(i, j)));
            t.record("witness is a zero block with y + z = n + 1", valid, || {
                format!("{m:?} {w:?}")
            });
            let profile = immanant_profile(m, &cfg.limits)?;
            for lam in enumerate_partitions(n) {
                let v = contract(&profile, &lam)?;
                t.record(
                    "witness implies every immanant vanishes",
                    v.is_zero(),
                    || format!("{m:?} lambda={lam}: {}", fr(&v)),
                );
            }
        } else {
            // no witness: a perfect matching exists, so the permanent of the
            // 0/1 support is positive
            let support = ExactMatrix::from_fn(n, |i, j| {
                if m.is_zero_at(i, j) {
                    Rational::zero()
                } else {
                    Rational::one()
                }
            });
            t.record(
                "no witness implies full term rank",
                permanent(&support).is_positive(),
                || format!("{m:?}"),
            );
        }
        Ok(t)
    })?;
    Ok(t.finish(Suite::ZeroBlock))
}

// ---------------------------------------------------------------- star degree

const STAR_PARAMS: [(i64, i64, i64, i64); 4] =
    [(1, 1, -1, 1), (1, 1, 1, 1), (1, 2, 1, 2), (3, 1, 2, 1)];

fn star_degree(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let params = cfg.params_or(&STAR_PARAMS);
    let mut graphs = Vec::new();
    for n in 1..=cfg.bound(7) {
        graphs.extend(cfg.atlas.connected(n)?);
    }
    let t = sweep(&graphs, |g| {
        let mut t = Tally::default();
        let sd = crate::invariants::star_degree(g);
        for (beta, gamma) in &params {
            let profile = CoefficientProfile::new(&lincomb_matrix(g, beta, gamma), &cfg.limits)?;
            for lam in enumerate_partitions(g.order()) {
                let mult = root_multiplicity(&profile.polynomial(&lam)?, beta).count(g.order());
                t.record("star degree <= multiplicity of beta", mult >= sd, || {
                    format!(
                        "graph6={} lambda={lam} beta={} gamma={}: multiplicity {mult} < star degree {sd}",
                        g6(g),
                        fr(beta),
                        fr(gamma)
                    )
                });
            }
        }
        Ok(t)
    })?;
    Ok(t.finish(Suite::StarDegree))
}

/// Rejects configurations no suite can honour.
pub fn validate(cfg: &VerifyConfig) -> Result<()> {
    if cfg.max_n == Some(0) {
        return arg("max-n must be positive");
    }
    Ok(())
}
