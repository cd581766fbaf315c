//! Semi-edge walks: exhaustive enumeration, exact counts from powers of `Q`,
//! the generating function `W_Q(t) = sum N_k t^k` and the Q-coronal
//! `Γ_Q(λ) = 1ᵀ(λI - Q)⁻¹1`.
//!
//! A semi-edge walk of length `k` picks, at each step, an edge incident to the
//! current vertex and then moves to either endpoint of that edge (staying put
//! is allowed). `N_k` counts them over all start vertices.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{char_poly, rat, Polynomial, Rational, RationalFunction};
use crate::graph::Graph;

/// Exact totals `N_0..N_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkCounts {
    n: usize,
    counts: Vec<BigUint>,
}

impl WalkCounts {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn max_length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.counts[k]
    }

    pub fn to_json(&self) -> WalkCountsJson {
        WalkCountsJson {
            n: self.n,
            counts: self.counts.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkCountsJson {
    pub n: usize,
    pub counts: Vec<String>,
}

/// Counts semi-edge walks of length `k` by depth-first enumeration.
///
/// Cost grows like `n (2Δ)^k`; meant for small graphs and short walks.
pub fn enumerate_semi_edge_walks(g: &Graph, k: usize) -> BigUint {
    fn extend(
        v: usize,
        remaining: usize,
        incident: &[Vec<usize>],
        edges: &[(usize, usize)],
        total: &mut BigUint,
    ) {
        if remaining == 0 {
            *total += 1u32;
            return;
        }
        for &e in &incident[v] {
            let (a, b) = edges[e];
            extend(a, remaining - 1, incident, edges, total);
            extend(b, remaining - 1, incident, edges, total);
        }
    }

    let incident = g.incident_edges();
    let mut total = BigUint::zero();
    for v in 0..g.order() {
        extend(v, k, &incident, g.edges(), &mut total);
    }
    total
}

/// `N_k = sum(Q^k)` for `k = 0..=max_len`, from exact integer matrix powers.
pub fn walk_counts_via_power(g: &Graph, max_len: usize) -> WalkCounts {
    let q = g.signless_laplacian();
    let mut power = crate::matrix::IntMatrix::identity(g.order());
    let mut counts = Vec::with_capacity(max_len + 1);
    for k in 0..=max_len {
        if k > 0 {
            power = power.mul(&q);
        }
        counts.push(power.sum().to_biguint().expect("Q has non-negative powers"));
    }
    WalkCounts {
        n: g.order(),
        counts,
    }
}

/// `N_k` alone, as `1ᵀ Q^k 1` by repeated matrix-vector products.
pub fn walk_count(g: &Graph, k: usize) -> BigUint {
    let q = g.signless_laplacian();
    let mut x = vec![BigInt::one(); g.order()];
    for _ in 0..k {
        x = q.apply(&x);
    }
    x.into_iter()
        .sum::<BigInt>()
        .to_biguint()
        .expect("Q has non-negative powers")
}

/// `f_Q` and the polynomial of the complement, `f_Q̄`.
pub fn q_polynomials(g: &Graph) -> (Polynomial, Polynomial) {
    (
        char_poly(&g.signless_laplacian()),
        char_poly(&g.complement().signless_laplacian()),
    )
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// `(-1)^n f_Q̄(n - 2 - λ)`.
pub fn complement_reflection(f_bar: &Polynomial, n: usize) -> Polynomial {
    f_bar
        .affine_substitute(&rat(-1), &rat(n as i64 - 2))
        .scale(&sign(n))
}

/// `W_Q(t)` from `f_Q` and `f_Q̄` of a graph on `n` vertices.
///
/// With `D(t) = tⁿ f_Q(1/t)` and `A(t) = (-1)ⁿ tⁿ f_Q̄(n - 2 - 1/t)`, both with
/// constant term 1, `W_Q = (A - D) / (t D)`. The factor `t` is divided out of
/// `A - D` before reduction.
pub fn generating_function_from_polys(
    f: &Polynomial,
    f_bar: &Polynomial,
    n: usize,
) -> RationalFunction {
    let d = f.reversed(n);
    let a = complement_reflection(f_bar, n).reversed(n);
    let num = (&a - &d)
        .shift_down(1)
        .expect("A(0) = D(0) = 1 for monic inputs");
    RationalFunction::new(num, d).expect("D(0) = 1")
}

/// `W_Q(t)` of `g` as an exact rational function of `t`.
pub fn q_generating_function(g: &Graph) -> RationalFunction {
    let (f, f_bar) = q_polynomials(g);
    generating_function_from_polys(&f, &f_bar, g.order())
}

/// `Γ_Q(λ) = -1 + (-1)ⁿ f_Q̄(n - 2 - λ) / f_Q(λ)` from the two polynomials.
pub fn coronal_from_polys(f: &Polynomial, f_bar: &Polynomial, n: usize) -> RationalFunction {
    let h = complement_reflection(f_bar, n);
    RationalFunction::new(&h - f, f.clone()).expect("f_Q is monic")
}

/// The Q-coronal of `g`.
pub fn q_coronal(g: &Graph) -> RationalFunction {
    let (f, f_bar) = q_polynomials(g);
    coronal_from_polys(&f, &f_bar, g.order())
}

/// Checks that the expansion of `Γ_Q` in powers of `1/λ` is `Σ N_k λ^{-(k+1)}`
/// for `k <= max_len`, with `N_k` from matrix powers.
pub fn coronal_series_check(g: &Graph, max_len: usize) -> bool {
    // Γ(1/t) = t W(t); expand to t^{K+1} and drop the (zero) constant term.
    let Ok(series) = q_coronal(g).reciprocal_substitute().series(max_len + 1) else {
        return false;
    };
    let counts = walk_counts_via_power(g, max_len);
    series.coeff(0).is_zero()
        && counts
            .counts()
            .iter()
            .enumerate()
            .all(|(k, nk)| *series.coeff(k + 1) == Rational::from_integer(BigInt::from(nk.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(n), Polynomial::from_ints(d)).unwrap()
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_semi_edge_walks(&complete(2), 1),
            BigUint::from(4u32)
        );
        assert_eq!(enumerate_semi_edge_walks(&path(3), 2), BigUint::from(24u32));
        assert_eq!(enumerate_semi_edge_walks(&cycle(5), 0), BigUint::from(5u32));
        assert_eq!(
            enumerate_semi_edge_walks(&Graph::empty(3), 2),
            BigUint::zero()
        );
    }

    #[test]
    fn power_examples() {
        assert_eq!(
            walk_counts_via_power(&path(3), 2).counts(),
            big(&[3, 8, 24])
        );
        assert_eq!(
            walk_counts_via_power(&complete(3), 3).counts(),
            big(&[3, 12, 48, 192])
        );
        assert_eq!(
            walk_counts_via_power(&Graph::empty(4), 2).counts(),
            big(&[4, 0, 0])
        );
        assert_eq!(walk_count(&path(3), 2), BigUint::from(24u32));
        assert_eq!(
            walk_counts_via_power(&path(3), 2).to_json(),
            WalkCountsJson {
                n: 3,
                counts: vec!["3".into(), "8".into(), "24".into()]
            }
        );
    }

    #[test]
    fn generating_function_examples() {
        assert_eq!(q_generating_function(&complete(3)), rf(&[3], &[1, -4]));
        assert_eq!(q_generating_function(&complete(2)), rf(&[2], &[1, -2]));
        let series = q_generating_function(&path(3)).series(4).unwrap();
        let want: Vec<Rational> = walk_counts_via_power(&path(3), 4)
            .counts()
            .iter()
            .map(|c| Rational::from_integer(c.clone().into()))
            .collect();
        assert_eq!(series.coeffs(), &want[..]);
        assert_eq!(
            q_generating_function(&Graph::empty(1)),
            RationalFunction::from_int(1)
        );
        assert_eq!(
            q_generating_function(&Graph::empty(0)),
            RationalFunction::zero()
        );
    }

    #[test]
    fn coronal_examples() {
        assert_eq!(q_coronal(&complete(2)), rf(&[2], &[-2, 1]));
        assert_eq!(q_coronal(&path(3)), rf(&[-1, 3], &[0, -3, 1]));
        assert_eq!(q_coronal(&Graph::empty(1)), rf(&[1], &[0, 1]));
    }

    #[test]
    fn coronal_series_examples() {
        assert!(coronal_series_check(&path(3), 2));
        assert!(coronal_series_check(&complete(2), 5));
        assert!(coronal_series_check(&Graph::empty(1), 3));
    }
}
