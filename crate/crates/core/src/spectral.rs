//! Floating-point Q-spectrum with walk weights, the spectral-radius estimate
//! from walk counts, and the exact multiplicity check between a graph and its
//! complement.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{squarefree_decomposition, Polynomial, PolynomialJson};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::walks::{complement_reflection, q_polynomials, walk_count, walk_counts_via_power};

/// Largest walk length accepted by [`q1_limit_estimate`].
pub const MAX_LIMIT_LENGTH: usize = 10_000;

/// Eigenvalues `q_1 ≥ ... ≥ q_n` of `Q` with weights
/// `γ_l = (Σ_i x_il)²` of the matching orthonormal eigenvectors, so that
/// `N_k = Σ γ_l q_l^k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub gammas: Vec<f64>,
}

impl SpectralDecomposition {
    /// `Σ γ_l q_l^k`.
    pub fn walk_sum(&self, k: usize) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&self.gammas)
            .map(|(q, g)| g * q.powi(k as i32))
            .sum()
    }
}

/// Cyclic Jacobi rotations on a dense symmetric matrix. Returns eigenvalues
/// and the eigenvectors as columns of `v` (`v[i][l]`), unsorted.
fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let scale: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale.max(1.0) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                let (row_p, row_q) = (a[p].clone(), a[q].clone());
                for k in 0..n {
                    a[p][k] = c * row_p[k] - s * row_q[k];
                    a[q][k] = s * row_p[k] + c * row_q[k];
                }
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[i][i]).collect(), v)
}

/// Symmetric eigen-decomposition of `Q(G)` with walk weights.
pub fn q_spectrum(g: &Graph) -> SpectralDecomposition {
    let n = g.order();
    let (vals, vecs) = jacobi_eigen(g.signless_laplacian().to_f64_rows());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]));
    let eigenvalues = order.iter().map(|&l| vals[l]).collect();
    let gammas = order
        .iter()
        .map(|&l| {
            let s: f64 = vecs.iter().map(|row| row[l]).sum();
            s * s
        })
        .collect();
    SpectralDecomposition {
        eigenvalues,
        gammas,
    }
}

/// Checks `|Σ γ_l q_l^k - N_k| <= tol * max(1, N_k)` for `k <= max_len`.
pub fn verify_walk_decomposition(g: &Graph, max_len: usize, tol: f64) -> bool {
    let spec = q_spectrum(g);
    let counts = walk_counts_via_power(g, max_len);
    counts.counts().iter().enumerate().all(|(k, nk)| {
        let nk = nk.to_f64().unwrap_or(f64::INFINITY);
        (spec.walk_sum(k) - nk).abs() <= tol * nk.max(1.0)
    })
}

/// Natural logarithm of a positive big integer.
fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit prefix");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `(N_k / n)^{1/k}`, computed in the log domain from the exact `N_k`.
pub fn q1_limit_estimate(g: &Graph, k: usize) -> Result<f64> {
    if k == 0 || k > MAX_LIMIT_LENGTH {
        return Err(Error::Precondition(format!(
            "a walk length in 1..={MAX_LIMIT_LENGTH}, got {k}"
        )));
    }
    if g.size() == 0 {
        return Err(Error::Precondition("a graph with at least one edge".into()));
    }
    let nk = walk_count(g, k);
    let ln = (ln_big(&nk) - (g.order() as f64).ln()) / k as f64;
    Ok(ln.exp())
}

/// One repeated eigenvalue block of `f_Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityRow {
    /// Monic square-free polynomial whose roots have multiplicity `s` in `f_Q`.
    pub factor: Polynomial,
    pub s: usize,
    /// Every root also occurs in `(-1)ⁿ f_Q̄(n - 2 - λ)` with multiplicity in `s-1..=s+1`.
    pub t_range_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub rows: Vec<MultiplicityRow>,
}

impl MultiplicityReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.t_range_ok)
    }

    pub fn to_json(&self) -> Vec<MultiplicityRowJson> {
        self.rows
            .iter()
            .map(|r| MultiplicityRowJson {
                factor: r.factor.to_json("lambda"),
                s: r.s,
                t_range_ok: r.t_range_ok,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityRowJson {
    pub factor: PolynomialJson,
    pub s: usize,
    pub t_range_ok: bool,
}

/// For each eigenvalue of multiplicity `s >= 2` in `Q(G)`, checks exactly that
/// `n - 2 - q` is an eigenvalue of `Q(Ḡ)` with multiplicity in `s-1..=s+1`.
///
/// Write `f_Q = c Π u_j^j` and `h(λ) = (-1)ⁿ f_Q̄(n - 2 - λ) = c' Π v_j^j`
/// (square-free decompositions). Roots of `h` are the `λ` with `n - 2 - λ`
/// in the complement spectrum, so the claim is `u_s | v_{s-1} v_s v_{s+1}`.
pub fn verify_multiplicity_bound(g: &Graph) -> MultiplicityReport {
    let (f, f_bar) = q_polynomials(g);
    let h = complement_reflection(&f_bar, g.order());
    let fu = squarefree_decomposition(&f);
    let hv = squarefree_decomposition(&h);
    let rows = fu
        .factors
        .iter()
        .filter(|(_, s)| *s >= 2)
        .map(|(u, s)| {
            let window = &(&hv.part(s - 1) * &hv.part(*s)) * &hv.part(s + 1);
            MultiplicityRow {
                factor: u.clone(),
                s: *s,
                t_range_ok: u.divides(&window),
            }
        })
        .collect();
    MultiplicityReport { rows }
}
