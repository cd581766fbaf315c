//! Identity sweeps: each [`Identity`] checks one closed form against an
//! independent route (direct construction plus exact characteristic
//! polynomial, brute-force enumeration, or matrix powers) over a graph
//! population.
//!
//! Every sweep includes all labeled graphs on at most four vertices (or fewer
//! when `max_n` is smaller) plus a seeded sample; see [`crate::population`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{char_poly, sum_adjugate_ratio, Polynomial, Rational, RationalFunction};
use crate::formulas::{
    complement_qpoly_regular, complement_qspectrum_regular, corona_qpoly, corona_qpoly_explicit,
    edge_corona_qpoly, edge_corona_qpoly_explicit, genfun_complement, genfun_direct_sum,
    genfun_join, genfun_join_with, join_coronal_regular, join_qpoly, join_qpoly_regular,
    multipartite_coronal, multipartite_genfun, EdgeCoronaReading, JoinGenfunReading,
    RegularGraphStats,
};
use crate::graph::{complete_multipartite, path, Graph};
use crate::population::{all_graphs_up_to, regular_catalog, seeded_sample};
use crate::spectral::{
    q1_limit_estimate, q_spectrum, verify_multiplicity_bound, verify_walk_decomposition,
};
use crate::walks::{
    coronal_series_check, enumerate_semi_edge_walks, q_coronal, q_generating_function,
    q_polynomials, walk_counts_via_power,
};

/// The identities that can be swept. CLI names are the `Display` strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// Enumerated semi-edge walks equal `sum(Q^k)`.
    WalkEnumeration,
    /// Series of the closed-form generating function equals `N_0..N_K`.
    GeneratingFunction,
    /// Closed-form coronal equals the adjugate-sum ratio; its `1/λ` expansion carries `N_k`.
    Coronal,
    /// Complement of a regular graph: polynomial and spectrum maps.
    RegularComplement,
    /// Join polynomial from the four Q-polynomials.
    Join,
    /// Join polynomial of two regular graphs.
    RegularJoin,
    /// `N_k = Σ γ_l q_l^k`.
    WalkDecomposition,
    /// `(N_k / n)^{1/k}` approaches the spectral radius.
    SpectralRadiusLimit,
    /// Complement multiplicities stay within one of the original.
    MultiplicityBound,
    /// Corona polynomial through the coronal and in coronal-free form.
    Corona,
    /// Edge-corona polynomial through the coronal and in coronal-free form.
    EdgeCorona,
    /// Coronal of the join of two regular graphs.
    RegularJoinCoronal,
    /// Generating-function transforms for complement, direct sum and join.
    GeneratingFunctionTransforms,
    /// Complete multipartite generating function and coronal.
    Multipartite,
}

impl Identity {
    pub const ALL: [Identity; 14] = [
        Identity::WalkEnumeration,
        Identity::GeneratingFunction,
        Identity::Coronal,
        Identity::RegularComplement,
        Identity::Join,
        Identity::RegularJoin,
        Identity::WalkDecomposition,
        Identity::SpectralRadiusLimit,
        Identity::MultiplicityBound,
        Identity::Corona,
        Identity::EdgeCorona,
        Identity::RegularJoinCoronal,
        Identity::GeneratingFunctionTransforms,
        Identity::Multipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::WalkEnumeration => "walks",
            Identity::GeneratingFunction => "prop2.1",
            Identity::Coronal => "prop2.10",
            Identity::RegularComplement => "thm2.2",
            Identity::Join => "thm2.3",
            Identity::RegularJoin => "cor2.4",
            Identity::WalkDecomposition => "thm2.5",
            Identity::SpectralRadiusLimit => "thm2.6",
            Identity::MultiplicityBound => "thm2.7",
            Identity::Corona => "thm2.8",
            Identity::EdgeCorona => "thm2.9",
            Identity::RegularJoinCoronal => "prop2.13",
            Identity::GeneratingFunctionTransforms => "thm2.14",
            Identity::Multipartite => "ex2.16",
        }
    }

    fn alias(self) -> &'static str {
        match self {
            Identity::WalkEnumeration => "walk-enumeration",
            Identity::GeneratingFunction => "genfun",
            Identity::Coronal => "coronal",
            Identity::RegularComplement => "regular-complement",
            Identity::Join => "join",
            Identity::RegularJoin => "regular-join",
            Identity::WalkDecomposition => "walk-decomposition",
            Identity::SpectralRadiusLimit => "radius-limit",
            Identity::MultiplicityBound => "multiplicity",
            Identity::Corona => "corona",
            Identity::EdgeCorona => "edge-corona",
            Identity::RegularJoinCoronal => "join-coronal",
            Identity::GeneratingFunctionTransforms => "genfun-transforms",
            Identity::Multipartite => "multipartite",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().to_ascii_lowercase();
        // thm2.11 and thm2.12 are the coronal-free forms checked by thm2.8 / thm2.9.
        let s = match s.as_str() {
            "thm2.11" => "thm2.8",
            "thm2.12" => "thm2.9",
            "eq1" => "prop2.10",
            "remark2.15" => "thm2.14",
            other => other,
        };
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s || id.alias() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Identity::ALL.iter().map(|i| i.name()).collect();
                format!(
                    "unknown identity {s:?}; expected one of {}",
                    names.join(", ")
                )
            })
    }
}

/// Sweep parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    /// Largest order of sampled graphs.
    pub max_n: usize,
    pub seed: u64,
    /// Number of seeded random graphs (or pairs) beyond the exhaustive part.
    pub samples: usize,
    /// Series order / largest walk length for exact checks.
    pub order: usize,
    /// Relative tolerance for floating checks.
    pub tol: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 6,
            seed: 1,
            samples: 100,
            order: 12,
            tol: 1e-9,
        }
    }
}

impl SweepConfig {
    fn exhaustive_n(&self) -> usize {
        self.max_n.min(4)
    }

    /// Exhaustive small graphs followed by `samples` random graphs of order
    /// `min(5, max_n)..=max_n`.
    pub fn population(&self) -> Vec<Graph> {
        let mut graphs = all_graphs_up_to(self.exhaustive_n());
        if self.samples > 0 && self.max_n >= 1 {
            let lo = self.max_n.min(5);
            graphs.extend(seeded_sample(self.seed, self.samples, lo, self.max_n));
        }
        graphs
    }

    /// Seeded pairs of graphs with orders in `1..=min(max_n, 4)`.
    fn sampled_pairs(&self) -> Vec<(Graph, Graph)> {
        let hi = self.exhaustive_n().max(1);
        let a = seeded_sample(self.seed, self.samples, 1, hi);
        let b = seeded_sample(self.seed.wrapping_add(1), self.samples, 1, hi);
        a.into_iter().zip(b).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// The offending graph (or `A B` pair) in graph6.
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub identity: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
    /// Informational lines (e.g. which reading of an alternative form matched).
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn g6(g: &Graph) -> String {
    g.to_graph6()
        .unwrap_or_else(|| format!("<n={}>", g.order()))
}

fn fq(g: &Graph) -> Polynomial {
    char_poly(&g.signless_laplacian())
}

fn int_series(counts: &[num_bigint::BigUint]) -> Vec<Rational> {
    counts
        .iter()
        .map(|c| Rational::from_integer(BigInt::from(c.clone())))
        .collect()
}

/// Runs `check` on each item in parallel; `Err(detail)` marks a failure.
fn sweep<T: Sync>(
    items: &[T],
    label: impl Fn(&T) -> String + Sync,
    check: impl Fn(&T) -> Result<(), String> + Sync,
) -> (usize, Vec<Failure>) {
    let failures: Vec<Failure> = items
        .par_iter()
        .filter_map(|it| {
            check(it).err().map(|detail| Failure {
                graph6: label(it),
                detail,
            })
        })
        .collect();
    (items.len(), failures)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn check_walk_enumeration(g: &Graph, max_len: usize) -> Result<(), String> {
    let counts = walk_counts_via_power(g, max_len);
    for k in 0..=max_len {
        let brute = enumerate_semi_edge_walks(g, k);
        ensure(&brute == counts.get(k), || {
            format!("k={k}: enumeration {brute} vs sum(Q^k) {}", counts.get(k))
        })?;
    }
    Ok(())
}

pub fn check_generating_function(g: &Graph, order: usize) -> Result<(), String> {
    let w = q_generating_function(g);
    let series = w.series(order).map_err(|e| e.to_string())?;
    let want = int_series(walk_counts_via_power(g, order).counts());
    ensure(series.coeffs() == &want[..], || {
        format!(
            "series of W_Q = {} differs from N_0..N_{order}",
            w.display("t")
        )
    })
}

pub fn check_coronal(g: &Graph, order: usize) -> Result<(), String> {
    let closed = q_coronal(g);
    let adj = sum_adjugate_ratio(&g.signless_laplacian());
    ensure(closed == adj, || {
        format!(
            "closed form {} vs adjugate sum {}",
            closed.display("λ"),
            adj.display("λ")
        )
    })?;
    ensure(coronal_series_check(g, order), || {
        "1/λ expansion does not carry N_k".into()
    })
}

pub fn check_regular_complement(g: &Graph, tol: f64) -> Result<(), String> {
    let stats = RegularGraphStats::from_graph(g).map_err(|e| e.to_string())?;
    let comp = g.complement();
    let got = complement_qpoly_regular(&fq(g), stats)
        .into_polynomial()
        .map_err(|e| e.to_string())?;
    let want = fq(&comp);
    ensure(got == want, || {
        format!(
            "formula {} vs direct {}",
            got.display("λ"),
            want.display("λ")
        )
    })?;
    if g.order() == 0 {
        return Ok(());
    }
    let mapped = complement_qspectrum_regular(&q_spectrum(g).eigenvalues, stats)
        .map_err(|e| e.to_string())?;
    let direct = q_spectrum(&comp).eigenvalues;
    ensure(
        mapped
            .iter()
            .zip(&direct)
            .all(|(a, b)| (a - b).abs() <= tol.max(1e-8)),
        || format!("spectrum map {mapped:?} vs direct {direct:?}"),
    )
}

pub fn check_join(g1: &Graph, g2: &Graph) -> Result<(), String> {
    let (a, abar) = q_polynomials(g1);
    let (b, bbar) = q_polynomials(g2);
    let got = join_qpoly(&a, &abar, &b, &bbar, g1.order(), g2.order());
    let join = g1.join(g2);
    let want = fq(&join);
    ensure(got == want, || {
        format!(
            "formula {} vs direct {}",
            got.display("λ"),
            want.display("λ")
        )
    })?;
    let via_complement = g1
        .complement()
        .disjoint_union(&g2.complement())
        .complement();
    ensure(join == via_complement, || {
        "join differs from complement of union of complements".into()
    })
}

pub fn check_regular_join(g1: &Graph, g2: &Graph) -> Result<(), String> {
    let s1 = RegularGraphStats::from_graph(g1).map_err(|e| e.to_string())?;
    let s2 = RegularGraphStats::from_graph(g2).map_err(|e| e.to_string())?;
    let got = join_qpoly_regular(&fq(g1), &fq(g2), s1, s2).map_err(|e| e.to_string())?;
    let want = fq(&g1.join(g2));
    ensure(got == want, || {
        format!(
            "formula {} vs direct {}",
            got.display("λ"),
            want.display("λ")
        )
    })
}

pub fn check_regular_join_coronal(g1: &Graph, g2: &Graph) -> Result<(), String> {
    let s1 = RegularGraphStats::from_graph(g1).map_err(|e| e.to_string())?;
    let s2 = RegularGraphStats::from_graph(g2).map_err(|e| e.to_string())?;
    let got = join_coronal_regular(s1, s2);
    let want = q_coronal(&g1.join(g2));
    ensure(got == want, || {
        format!(
            "formula {} vs direct {}",
            got.display("λ"),
            want.display("λ")
        )
    })
}

pub fn check_corona(g1: &Graph, g2: &Graph) -> Result<(), String> {
    let f1 = fq(g1);
    let want = fq(&g1.corona(g2).map_err(|e| e.to_string())?);
    let via_coronal = corona_qpoly(&f1, g1.order(), g2).map_err(|e| e.to_string())?;
    ensure(via_coronal == want, || {
        format!(
            "coronal form {} vs direct {}",
            via_coronal.display("λ"),
            want.display("λ")
        )
    })?;
    let (f2, fbar2) = q_polynomials(g2);
    let explicit = corona_qpoly_explicit(&f1, g1.order(), &f2, &fbar2, g2.order(), g2.order())
        .map_err(|e| e.to_string())?;
    ensure(explicit == want, || {
        format!(
            "coronal-free form {} vs direct {}",
            explicit.display("λ"),
            want.display("λ")
        )
    })
}

/// Which coronal-free edge-corona readings reproduce the direct polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReadingComparison {
    pub derived_matches: bool,
    pub printed_matches: bool,
}

pub fn check_edge_corona(g1: &Graph, g2: &Graph) -> Result<ReadingComparison, String> {
    let s1 = RegularGraphStats::from_graph(g1).map_err(|e| e.to_string())?;
    let f1 = fq(g1);
    let want = fq(&g1.edge_corona(g2).map_err(|e| e.to_string())?);
    let via_coronal = edge_corona_qpoly(&f1, s1, g2).map_err(|e| e.to_string())?;
    ensure(via_coronal == want, || {
        format!(
            "coronal form {} vs direct {}",
            via_coronal.display("λ"),
            want.display("λ")
        )
    })?;
    let (f2, fbar2) = q_polynomials(g2);
    let reading = |r| {
        edge_corona_qpoly_explicit(&f1, s1, &f2, &fbar2, g2.order(), r)
            .map(|x| x == RationalFunction::from_poly(want.clone()))
            .unwrap_or(false)
    };
    let cmp = ReadingComparison {
        derived_matches: reading(EdgeCoronaReading::Derived),
        printed_matches: reading(EdgeCoronaReading::Printed),
    };
    ensure(cmp.derived_matches, || {
        "derived coronal-free form differs from direct".into()
    })?;
    Ok(cmp)
}

pub fn check_genfun_transforms(g: &Graph) -> Result<(), String> {
    let n = g.order();
    let w = q_generating_function(g);
    let wc = genfun_complement(&w, n).map_err(|e| e.to_string())?;
    let direct = q_generating_function(&g.complement());
    ensure(wc == direct, || {
        format!(
            "complement transform {} vs direct {}",
            wc.display("t"),
            direct.display("t")
        )
    })?;
    let back = genfun_complement(&wc, n).map_err(|e| e.to_string())?;
    ensure(back == w, || {
        "complement transform is not an involution".into()
    })
}

/// Checks the direct-sum and join transforms on a pair; the comparison records
/// which join reading reproduced the direct generating function.
pub fn check_genfun_pair(g1: &Graph, g2: &Graph) -> Result<ReadingComparison, String> {
    let w1 = q_generating_function(g1);
    let w2 = q_generating_function(g2);
    let sum = genfun_direct_sum(&w1, &w2);
    ensure(sum == q_generating_function(&g1.disjoint_union(g2)), || {
        "direct-sum transform differs".into()
    })?;
    let parts = [(w1, g1.order()), (w2, g2.order())];
    let direct = q_generating_function(&g1.join(g2));
    let join = genfun_join(&parts).map_err(|e| e.to_string())?;
    ensure(join == direct, || {
        format!(
            "join transform {} vs direct {}",
            join.display("t"),
            direct.display("t")
        )
    })?;
    let printed = genfun_join_with(&parts, JoinGenfunReading::Printed)
        .map(|w| w == direct)
        .unwrap_or(false);
    Ok(ReadingComparison {
        derived_matches: true,
        printed_matches: printed,
    })
}

pub fn check_multipartite(parts: &[usize]) -> Result<(), String> {
    let g = complete_multipartite(parts).map_err(|e| e.to_string())?;
    let edgeless: Vec<_> = parts
        .iter()
        .map(|&p| (RationalFunction::from_int(p as i64), p))
        .collect();
    let via_join = genfun_join(&edgeless).map_err(|e| e.to_string())?;
    let closed = multipartite_genfun(parts).map_err(|e| e.to_string())?;
    let direct = q_generating_function(&g);
    ensure(via_join == direct && closed == direct, || {
        format!(
            "join {} / closed {} vs direct {}",
            via_join.display("t"),
            closed.display("t"),
            direct.display("t")
        )
    })?;
    let coronal = multipartite_coronal(parts).map_err(|e| e.to_string())?;
    let direct = q_coronal(&g);
    ensure(coronal == direct, || {
        format!(
            "coronal {} vs direct {}",
            coronal.display("λ"),
            direct.display("λ")
        )
    })
}

/// Checks the spectral-radius estimate: `estimate <= q_1` always, and for
/// `r`-regular graphs the estimate is `2r` to `1e-12`.
pub fn check_radius_limit(g: &Graph, lengths: &[usize]) -> Result<(), String> {
    if g.size() == 0 {
        return Ok(());
    }
    let q1 = q_spectrum(g).eigenvalues[0];
    for &k in lengths {
        let est = q1_limit_estimate(g, k).map_err(|e| e.to_string())?;
        ensure(est <= q1 * (1.0 + 1e-9) + 1e-12, || {
            format!("k={k}: estimate {est} above q1 {q1}")
        })?;
        if let Some(r) = g.regular_degree() {
            let want = 2.0 * r as f64;
            ensure((est - want).abs() <= 1e-12, || {
                format!("k={k}: estimate {est} vs 2r = {want}")
            })?;
        }
    }
    Ok(())
}

/// All compositions (ordered part lists) with positive parts and total at most `max_total`.
pub fn part_lists(max_total: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for p in 1..=left {
            cur.push(p);
            rec(left - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_total, &mut Vec::new(), &mut out);
    out
}

fn regular_pairs(max_total: usize) -> Vec<(Graph, Graph)> {
    let cat: Vec<Graph> = regular_catalog().into_iter().map(|(_, g)| g).collect();
    let mut out = Vec::new();
    for a in &cat {
        for b in &cat {
            if a.order() + b.order() <= max_total {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn pair_label((a, b): &(Graph, Graph)) -> String {
    format!("{} {}", g6(a), g6(b))
}

/// Runs one identity sweep.
pub fn run(identity: Identity, cfg: &SweepConfig) -> SweepReport {
    let mut notes = Vec::new();
    let (checked, failures) = match identity {
        Identity::WalkEnumeration => {
            let k = cfg.order.min(4);
            sweep(&cfg.population(), g6, |g| check_walk_enumeration(g, k))
        }
        Identity::GeneratingFunction => sweep(&cfg.population(), g6, |g| {
            check_generating_function(g, cfg.order)
        }),
        Identity::Coronal => sweep(&cfg.population(), g6, |g| check_coronal(g, cfg.order)),
        Identity::RegularComplement => {
            let mut graphs: Vec<Graph> = regular_catalog().into_iter().map(|(_, g)| g).collect();
            graphs.extend(
                cfg.population()
                    .into_iter()
                    .filter(|g| g.regular_degree().is_some()),
            );
            sweep(&graphs, g6, |g| check_regular_complement(g, cfg.tol))
        }
        Identity::Join => {
            let small = all_graphs_up_to(cfg.exhaustive_n().min(3));
            let mut pairs: Vec<(Graph, Graph)> = small
                .iter()
                .flat_map(|a| small.iter().map(move |b| (a.clone(), b.clone())))
                .collect();
            pairs.extend(cfg.sampled_pairs());
            sweep(&pairs, pair_label, |(a, b)| check_join(a, b))
        }
        Identity::RegularJoin => {
            let pairs = regular_pairs(cfg.max_n.max(2) * 2);
            sweep(&pairs, pair_label, |(a, b)| check_regular_join(a, b))
        }
        Identity::RegularJoinCoronal => {
            let pairs = regular_pairs(cfg.max_n.max(2) * 2);
            sweep(&pairs, pair_label, |(a, b)| {
                check_regular_join_coronal(a, b)
            })
        }
        Identity::WalkDecomposition => {
            let k = cfg.order.min(10);
            sweep(&cfg.population(), g6, |g| {
                ensure(verify_walk_decomposition(g, k, cfg.tol), || {
                    format!(
                        "Σγ q^k differs from N_k beyond {} for some k <= {k}",
                        cfg.tol
                    )
                })
            })
        }
        Identity::SpectralRadiusLimit => {
            let p3 = path(3);
            let est = q1_limit_estimate(&p3, 1000).unwrap_or(f64::NAN);
            notes.push(format!(
                "P3 at k=1000: {est:.8} (|est - 3| = {:.2e})",
                (est - 3.0).abs()
            ));
            let mut graphs: Vec<Graph> = regular_catalog().into_iter().map(|(_, g)| g).collect();
            graphs.extend(cfg.population());
            let (c, mut f) = sweep(&graphs, g6, |g| check_radius_limit(g, &[1, 2, 5, 50, 1000]));
            if est.is_nan() || (est - 3.0).abs() > 4e-4 {
                f.push(Failure {
                    graph6: g6(&p3),
                    detail: format!("estimate {est} not within 4e-4 of 3"),
                });
            }
            (c + 1, f)
        }
        Identity::MultiplicityBound => sweep(&cfg.population(), g6, |g| {
            let report = verify_multiplicity_bound(g);
            ensure(report.passed(), || {
                format!("multiplicity bound violated: {report:?}")
            })
        }),
        Identity::Corona => {
            let small = all_graphs_up_to(cfg.exhaustive_n().min(3));
            let pairs: Vec<(Graph, Graph)> = small
                .iter()
                .flat_map(|a| small.iter().map(move |b| (a.clone(), b.clone())))
                .collect();
            sweep(&pairs, pair_label, |(a, b)| check_corona(a, b))
        }
        Identity::EdgeCorona => {
            let firsts: Vec<Graph> = regular_catalog()
                .into_iter()
                .map(|(_, g)| g)
                .filter(|g| g.size() > 0 && g.order() <= 4)
                .collect();
            let seconds = all_graphs_up_to(cfg.exhaustive_n().min(3));
            let pairs: Vec<(Graph, Graph)> = firsts
                .iter()
                .flat_map(|a| seconds.iter().map(move |b| (a.clone(), b.clone())))
                .collect();
            let results: Vec<_> = pairs
                .par_iter()
                .map(|(a, b)| check_edge_corona(a, b))
                .collect();
            let printed = results
                .iter()
                .filter(|r| matches!(r, Ok(c) if c.printed_matches))
                .count();
            let derived = results
                .iter()
                .filter(|r| matches!(r, Ok(c) if c.derived_matches))
                .count();
            notes.push(format!(
                "coronal-free edge-corona form: f_Q2(λ-2) reading matched {derived}/{n}, f_Q2(λ) reading matched {printed}/{n}",
                n = pairs.len()
            ));
            let failures = pairs
                .iter()
                .zip(results)
                .filter_map(|(p, r)| {
                    r.err().map(|detail| Failure {
                        graph6: pair_label(p),
                        detail,
                    })
                })
                .collect();
            (pairs.len(), failures)
        }
        Identity::GeneratingFunctionTransforms => {
            let (c1, mut f1) = sweep(&cfg.population(), g6, check_genfun_transforms);
            let pairs = cfg.sampled_pairs();
            let results: Vec<_> = pairs
                .par_iter()
                .map(|(a, b)| check_genfun_pair(a, b))
                .collect();
            let printed = results
                .iter()
                .filter(|r| matches!(r, Ok(c) if c.printed_matches))
                .count();
            notes.push(format!(
                "join transform: W_i(t/((n_i-n)t+1)) reading matched {}/{n}, W_i(t) reading matched {printed}/{n}",
                results.iter().filter(|r| r.is_ok()).count(),
                n = pairs.len()
            ));
            f1.extend(pairs.iter().zip(results).filter_map(|(p, r)| {
                r.err().map(|detail| Failure {
                    graph6: pair_label(p),
                    detail,
                })
            }));
            (c1 + pairs.len(), f1)
        }
        Identity::Multipartite => {
            let lists = part_lists(cfg.max_n.max(1));
            sweep(&lists, |p| format!("{p:?}"), |p| check_multipartite(p))
        }
    };
    SweepReport {
        identity: identity.name().to_string(),
        checked,
        failures,
        notes,
    }
}
