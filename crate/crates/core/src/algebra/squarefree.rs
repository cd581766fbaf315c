use serde::Serialize;

use super::poly::Polynomial;
use super::Rational;

/// `p = unit * prod factors[i].0 ^ factors[i].1` with monic, squarefree,
/// pairwise coprime factors listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    pub factors: Vec<(Polynomial, usize)>,
}

impl SquarefreeDecomposition {
    /// The factor of multiplicity `j`, or `1` when no root has that multiplicity.
    pub fn part(&self, j: usize) -> Polynomial {
        self.factors
            .iter()
            .find(|(_, m)| *m == j)
            .map(|(u, _)| u.clone())
            .unwrap_or_else(Polynomial::one)
    }

    pub fn expand(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(self.unit.clone()), |acc, (u, m)| {
                &acc * &u.pow(*m as u32)
            })
    }
}

#[derive(Serialize)]
struct Row {
    factor: Vec<String>,
    multiplicity: usize,
}

impl Serialize for SquarefreeDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.factors
            .iter()
            .map(|(u, m)| Row {
                factor: u.coeffs().iter().map(ToString::to_string).collect(),
                multiplicity: *m,
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

/// Yun's square-free decomposition over the rationals. Panics on the zero
/// polynomial.
pub fn squarefree_decomposition(p: &Polynomial) -> SquarefreeDecomposition {
    let unit = p
        .leading()
        .expect("square-free decomposition of zero")
        .clone();
    let f = p.monic();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return SquarefreeDecomposition { unit, factors };
    }
    let df = f.derivative();
    let a0 = Polynomial::gcd(&f, &df);
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut j = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = Polynomial::gcd(&b, &d);
        if a.degree().is_some_and(|deg| deg > 0) {
            factors.push((a.clone(), j));
        }
        b = b.exact_div(&a).expect("gcd divides b");
        let c = d.exact_div(&a).expect("gcd divides d");
        d = &c - &b.derivative();
        j += 1;
        debug_assert!(j <= p.degree().unwrap_or(0) + 1);
    }
    SquarefreeDecomposition { unit, factors }
}
