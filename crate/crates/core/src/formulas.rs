//! Closed-form Q-polynomials, Q-coronals and generating functions of graphs
//! built by complement, join, corona, edge corona and complete multipartite
//! constructions.
//!
//! Every formula here is expressed in exact rational-function arithmetic.
//! Formulas that should produce a polynomial return an error when a
//! denominator survives reduction; for well-formed inputs that never happens.
//!
//! Entry points taking [`RegularGraphStats`] trust the caller that the
//! underlying graph really is regular. Use [`RegularGraphStats::from_graph`]
//! to validate.

use crate::algebra::{rat, Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::walks::q_coronal;

/// Order, degree and size of an `r`-regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RegularGraphStats {
    pub n: usize,
    pub r: usize,
    pub m: usize,
}

impl RegularGraphStats {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if !(n * r).is_multiple_of(2) || (n > 0 && r >= n) {
            return Err(Error::Precondition(format!(
                "a valid (n, r) pair, got ({n}, {r})"
            )));
        }
        Ok(RegularGraphStats { n, r, m: n * r / 2 })
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        let r = g.regular_degree().ok_or(Error::NotRegular)?;
        Self::new(g.order(), r)
    }
}

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// `p(λ + shift)`.
fn shifted(p: &Polynomial, shift: i64) -> Polynomial {
    p.affine_substitute(&rat(1), &rat(shift))
}

/// `p(c - λ)`.
fn reflected(p: &Polynomial, c: i64) -> Polynomial {
    p.affine_substitute(&rat(-1), &rat(c))
}

/// `λ - c` as a rational function.
fn lambda_minus(c: i64) -> RationalFunction {
    Polynomial::from_ints(&[-c, 1]).into()
}

fn into_monic_polynomial(r: RationalFunction, degree: usize) -> Result<Polynomial> {
    let p = r.into_polynomial()?;
    if !p.is_monic() || p.degree() != Some(degree) {
        return Err(Error::NotPolynomial(format!(
            "expected a monic polynomial of degree {degree}, got {}",
            p.display("λ")
        )));
    }
    Ok(p)
}

/// Q-polynomial of the complement of an `r`-regular graph:
/// `(-1)ⁿ (1 + n / (n - 2 - 2r - λ)) f_Q(n - 2 - λ)`.
///
/// The result is returned unreduced to a polynomial; for a genuinely regular
/// input the pole cancels and [`RationalFunction::into_polynomial`] succeeds.
pub fn complement_qpoly_regular(f_q: &Polynomial, stats: RegularGraphStats) -> RationalFunction {
    let (n, r) = (stats.n as i64, stats.r as i64);
    let pole = Polynomial::from_ints(&[n - 2 - 2 * r, -1]);
    let factor = &RationalFunction::one()
        + &RationalFunction::new(Polynomial::from_int(n), pole).expect("linear denominator");
    let body = RationalFunction::from_poly(reflected(f_q, n - 2).scale(&sign(stats.n)));
    &factor * &body
}

/// Maps the Q-spectrum `2r ≥ q_2 ≥ ... ≥ q_n` of an `r`-regular graph to the
/// spectrum of its complement: `{2(n - r - 1)} ∪ {n - 2 - q_i : i ≥ 2}`,
/// sorted descending.
pub fn complement_qspectrum_regular(
    spectrum: &[f64],
    stats: RegularGraphStats,
) -> Result<Vec<f64>> {
    let expected = 2.0 * stats.r as f64;
    let found = spectrum.first().copied().unwrap_or(f64::NAN);
    if spectrum.len() != stats.n || (found - expected).abs() > 1e-8 * (1.0 + expected) {
        return Err(Error::PerronMismatch { expected, found });
    }
    let n = stats.n as f64;
    let mut out: Vec<f64> = std::iter::once(2.0 * (n - stats.r as f64 - 1.0))
        .chain(spectrum[1..].iter().map(|q| n - 2.0 - q))
        .collect();
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

/// Q-polynomial of `G1 ∨ G2` from the Q-polynomials of `G1`, `Ḡ1`, `G2`, `Ḡ2`.
pub fn join_qpoly(
    f_q1: &Polynomial,
    f_qbar1: &Polynomial,
    f_q2: &Polynomial,
    f_qbar2: &Polynomial,
    n1: usize,
    n2: usize,
) -> Polynomial {
    let n = n1 + n2;
    let c = n as i64 - 2;
    let bar1 = reflected(f_qbar1, c);
    let bar2 = reflected(f_qbar2, c);
    let t1 = (&shifted(f_q1, -(n2 as i64)) * &bar2).scale(&sign(n2));
    let t2 = (&shifted(f_q2, -(n1 as i64)) * &bar1).scale(&sign(n1));
    let t3 = (&bar1 * &bar2).scale(&sign(n));
    &(&t1 + &t2) - &t3
}

/// Q-polynomial of the join of two regular graphs:
/// `(1 - n1 n2 / ((λ - n1 - 2r2)(λ - n2 - 2r1))) f_Q1(λ - n2) f_Q2(λ - n1)`.
pub fn join_qpoly_regular(
    f_q1: &Polynomial,
    f_q2: &Polynomial,
    s1: RegularGraphStats,
    s2: RegularGraphStats,
) -> Result<Polynomial> {
    let (n1, n2, r1, r2) = (s1.n as i64, s2.n as i64, s1.r as i64, s2.r as i64);
    let den =
        &Polynomial::from_ints(&[-(n1 + 2 * r2), 1]) * &Polynomial::from_ints(&[-(n2 + 2 * r1), 1]);
    let factor = &RationalFunction::one()
        - &RationalFunction::new(Polynomial::from_int(n1 * n2), den).expect("nonzero");
    let body = &shifted(f_q1, -n2) * &shifted(f_q2, -n1);
    into_monic_polynomial(&factor * &RationalFunction::from_poly(body), s1.n + s2.n)
}

/// Q-polynomial of the corona `G1 ∘ G2` via the coronal of `G2`:
/// `f_Q2(λ - 1)^{n1} · f_Q1(λ - n2 - Γ_Q2(λ - 1))`.
pub fn corona_qpoly(f_q1: &Polynomial, n1: usize, g2: &Graph) -> Result<Polynomial> {
    let n2 = g2.order();
    if n2 == 0 {
        return Err(Error::Precondition("a nonempty corona factor".into()));
    }
    let f_q2 = crate::algebra::char_poly(&g2.signless_laplacian());
    let gamma = q_coronal(g2).affine_substitute(&rat(1), &rat(-1));
    let arg = &lambda_minus(n2 as i64) - &gamma;
    corona_from_argument(f_q1, n1, &f_q2, n2, &arg)
}

fn corona_from_argument(
    f_q1: &Polynomial,
    n1: usize,
    f_q2: &Polynomial,
    n2: usize,
    arg: &RationalFunction,
) -> Result<Polynomial> {
    let inner = RationalFunction::compose_poly(f_q1, arg);
    let outer = RationalFunction::from_poly(shifted(f_q2, -1).pow(n1 as u32));
    into_monic_polynomial(&outer * &inner, n1 * (1 + n2))
}

/// Coronal-free corona formula:
/// `f_Q2(λ - 1)^{n1} · f_Q1(λ - n2 + 1 - (-1)^{n2} f_Q̄2(s - λ - 1) / f_Q2(λ - 1))`.
///
/// `shift` is the order `s` used inside `f_Q̄2`; the identity holds with
/// `s = n2`, the order of `G2`.
pub fn corona_qpoly_explicit(
    f_q1: &Polynomial,
    n1: usize,
    f_q2: &Polynomial,
    f_qbar2: &Polynomial,
    n2: usize,
    shift: usize,
) -> Result<Polynomial> {
    let ratio = RationalFunction::new(
        reflected(f_qbar2, shift as i64 - 1).scale(&sign(n2)),
        shifted(f_q2, -1),
    )?;
    let arg = &lambda_minus(n2 as i64 - 1) - &ratio;
    corona_from_argument(f_q1, n1, f_q2, n2, &arg)
}

/// Q-polynomial of the edge corona `G1 ⋄ G2` for `r1`-regular `G1`:
/// `f_Q2(λ - 2)^{m1} · f_Q1((λ - r1 n2) / (1 + Γ_Q2(λ - 2))) · (1 + Γ_Q2(λ - 2))^{n1}`.
pub fn edge_corona_qpoly(
    f_q1: &Polynomial,
    s1: RegularGraphStats,
    g2: &Graph,
) -> Result<Polynomial> {
    if s1.m == 0 {
        return Err(Error::Precondition(
            "the first edge-corona factor to have an edge".into(),
        ));
    }
    if g2.order() == 0 {
        return Err(Error::Precondition("a nonempty edge-corona factor".into()));
    }
    let f_q2 = crate::algebra::char_poly(&g2.signless_laplacian());
    let one_plus_gamma =
        &RationalFunction::one() + &q_coronal(g2).affine_substitute(&rat(1), &rat(-2));
    edge_corona_from_factor(f_q1, s1, &f_q2, g2.order(), &one_plus_gamma)
        .and_then(|r| into_monic_polynomial(r, s1.n + s1.m * g2.order()))
}

fn edge_corona_from_factor(
    f_q1: &Polynomial,
    s1: RegularGraphStats,
    f_q2: &Polynomial,
    n2: usize,
    one_plus_gamma: &RationalFunction,
) -> Result<RationalFunction> {
    let arg = lambda_minus((s1.r * n2) as i64).checked_div(one_plus_gamma)?;
    let inner = RationalFunction::compose_poly(f_q1, &arg);
    let outer = RationalFunction::from_poly(shifted(f_q2, -2).pow(s1.m as u32));
    Ok(&(&outer * &inner) * &one_plus_gamma.pow(s1.n as u32))
}

/// Which argument of `f_Q2` appears in the coronal-free edge-corona formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeCoronaReading {
    /// `1 + Γ_Q2(λ - 2) = (-1)^{n2} f_Q̄2(n2 - λ) / f_Q2(λ - 2)`, which follows
    /// from substituting the coronal closed form.
    Derived,
    /// `f_Q2(λ)` in place of `f_Q2(λ - 2)` inside the ratio.
    Printed,
}

/// Coronal-free edge-corona formula under the given reading. Returned as a
/// rational function so a reading that fails to cancel can be inspected.
pub fn edge_corona_qpoly_explicit(
    f_q1: &Polynomial,
    s1: RegularGraphStats,
    f_q2: &Polynomial,
    f_qbar2: &Polynomial,
    n2: usize,
    reading: EdgeCoronaReading,
) -> Result<RationalFunction> {
    let inner_f_q2 = match reading {
        EdgeCoronaReading::Derived => shifted(f_q2, -2),
        EdgeCoronaReading::Printed => f_q2.clone(),
    };
    let one_plus_gamma =
        RationalFunction::new(reflected(f_qbar2, n2 as i64).scale(&sign(n2)), inner_f_q2)?;
    edge_corona_from_factor(f_q1, s1, f_q2, n2, &one_plus_gamma)
}

/// Q-coronal of the join of an `r1`-regular graph on `n1` vertices and an
/// `r2`-regular graph on `n2` vertices.
pub fn join_coronal_regular(s1: RegularGraphStats, s2: RegularGraphStats) -> RationalFunction {
    let (n1, n2, r1, r2) = (s1.n as i64, s2.n as i64, s1.r as i64, s2.r as i64);
    let a = Polynomial::from_ints(&[-(n2 + 2 * r1), 1]);
    let b = Polynomial::from_ints(&[-(n1 + 2 * r2), 1]);
    let num = &(&a.scale(&rat(n2)) + &b.scale(&rat(n1))) + &Polynomial::from_int(2 * n1 * n2);
    let den = &(&a * &b) - &Polynomial::from_int(n1 * n2);
    RationalFunction::new(num, den).expect("monic quadratic denominator")
}

/// Generating function of the complement of a graph on `n` vertices:
/// `-W(s) / ((n - 2)t - 1 + t W(s))` with `s = t / ((n - 2)t - 1)`.
pub fn genfun_complement(w: &RationalFunction, n: usize) -> Result<RationalFunction> {
    let c = n as i64 - 2;
    let base = Polynomial::from_ints(&[-1, c]);
    let s = RationalFunction::new(Polynomial::x(), base.clone())?;
    let ws = w.compose(&s)?;
    let den = &RationalFunction::from_poly(base) + &(&RationalFunction::x() * &ws);
    if den.is_zero() {
        return Err(Error::DegenerateDenominator(
            "complement generating function",
        ));
    }
    (-&ws).checked_div(&den)
}

/// Generating function of a disjoint union.
pub fn genfun_direct_sum(w1: &RationalFunction, w2: &RationalFunction) -> RationalFunction {
    w1 + w2
}

/// Where each part's generating function is evaluated inside the join formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinGenfunReading {
    /// `W_i(t / ((n_i - n)t + 1))`, which follows from applying the complement
    /// transform to each part with its own order `n_i`.
    Derived,
    /// `W_i(t)`. Agrees with `Derived` when every part is edgeless.
    Printed,
}

/// Generating function of `G_1 ∨ ... ∨ G_k` from `(W_i, n_i)` pairs:
/// `M / (1 - tM)` with `M = Σ W_i(s_i) / ((n_i - n)t + 1 + t W_i(s_i))` and
/// `s_i = t / ((n_i - n)t + 1)`.
///
/// A single part returns its own generating function.
pub fn genfun_join(parts: &[(RationalFunction, usize)]) -> Result<RationalFunction> {
    genfun_join_with(parts, JoinGenfunReading::Derived)
}

pub fn genfun_join_with(
    parts: &[(RationalFunction, usize)],
    reading: JoinGenfunReading,
) -> Result<RationalFunction> {
    if parts.is_empty() {
        return Err(Error::Precondition("at least one join part".into()));
    }
    let n: usize = parts.iter().map(|(_, ni)| ni).sum();
    let t = RationalFunction::x();
    let mut m = RationalFunction::zero();
    for (w, ni) in parts {
        let lin = Polynomial::from_ints(&[1, *ni as i64 - n as i64]);
        let w = match reading {
            JoinGenfunReading::Derived => {
                w.compose(&RationalFunction::new(Polynomial::x(), lin.clone())?)?
            }
            JoinGenfunReading::Printed => w.clone(),
        };
        let den = &RationalFunction::from_poly(lin) + &(&t * &w);
        if den.is_zero() {
            return Err(Error::DegenerateDenominator("join generating function"));
        }
        m = &m + &w.checked_div(&den)?;
    }
    let den = &RationalFunction::one() - &(&t * &m);
    if den.is_zero() {
        return Err(Error::DegenerateDenominator("join generating function"));
    }
    m.checked_div(&den)
}

/// Generating function of the complete multipartite graph with the given
/// part sizes: `((Σ n_i / ((n_i - n)t + 1 + t n_i))^{-1} - t)^{-1}`.
pub fn multipartite_genfun(parts: &[usize]) -> Result<RationalFunction> {
    validate_parts(parts)?;
    let n = parts.iter().sum::<usize>() as i64;
    let sum = parts.iter().fold(RationalFunction::zero(), |acc, &ni| {
        let ni = ni as i64;
        let den = Polynomial::from_ints(&[1, 2 * ni - n]);
        &acc + &RationalFunction::new(Polynomial::from_int(ni), den).expect("constant term 1")
    });
    (&sum.recip()? - &RationalFunction::x()).recip()
}

/// Q-coronal of the complete multipartite graph:
/// `((Σ n_i / (λ - n + 2n_i))^{-1} - 1)^{-1}`.
pub fn multipartite_coronal(parts: &[usize]) -> Result<RationalFunction> {
    validate_parts(parts)?;
    let n = parts.iter().sum::<usize>() as i64;
    let sum = parts.iter().fold(RationalFunction::zero(), |acc, &ni| {
        let ni = ni as i64;
        &acc + &RationalFunction::new(
            Polynomial::from_int(ni),
            Polynomial::from_ints(&[2 * ni - n, 1]),
        )
        .expect("monic")
    });
    (&sum.recip()? - &RationalFunction::one()).recip()
}

fn validate_parts(parts: &[usize]) -> Result<()> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::Precondition(
            "nonempty list of positive part sizes".into(),
        ));
    }
    Ok(())
}
