use num_traits::Zero;
use serde::Serialize;

use super::ratfun::RationalFunction;
use super::Rational;
use crate::error::{Error, Result};

/// Truncated power series `c_0 + c_1 t + ... + c_K t^K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Taylor expansion of `r` at `t = 0` up to `t^order`, by long division.
    pub fn expand(r: &RationalFunction, order: usize) -> Result<PowerSeries> {
        let den = r.den().coeffs();
        let d0 = den
            .first()
            .filter(|c| !c.is_zero())
            .ok_or(Error::PoleAtOrigin)?;
        let d0_inv = d0.recip();
        let num = r.num().coeffs();
        let mut coeffs: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
            for (j, d) in den.iter().enumerate().skip(1).take(k) {
                acc -= d * &coeffs[k - j];
            }
            coeffs.push(acc * &d0_inv);
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least c_0");
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(n), Polynomial::from_ints(d)).unwrap()
    }

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(
            ints(&rf(&[2], &[1, -2]).series(3).unwrap()),
            vec![2, 4, 8, 16]
        );
        assert_eq!(
            ints(&rf(&[1], &[1, -2, 1]).series(3).unwrap()),
            vec![1, 2, 3, 4]
        );
        assert_eq!(rf(&[1], &[0, 1]).series(3), Err(Error::PoleAtOrigin));
    }

    #[test]
    fn polynomial_passthrough_and_order() {
        let s = rf(&[1, 2, 3], &[1]).series(5).unwrap();
        assert_eq!(ints(&s), vec![1, 2, 3, 0, 0, 0]);
        assert_eq!(s.order(), 5);
        assert_eq!(rf(&[7], &[1]).series(0).unwrap().order(), 0);
    }

    #[test]
    fn non_monic_constant_term() {
        // 1/(2 - t) = 1/2 + t/4 + t^2/8
        let s = rf(&[1], &[2, -1]).series(2).unwrap();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(
            s.coeffs(),
            &[half.clone(), &half * &half, &half * &half * &half]
        );
    }
}
