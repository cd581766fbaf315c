use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::ratfun::RationalFunction;
use super::Rational;
use crate::matrix::IntMatrix;

/// `det(λI - M)` by the Faddeev–LeVerrier recursion over the integers.
///
/// With `M_0 = 0`, `c_n = 1`:
/// `M_k = A M_{k-1} + c_{n-k+1} I` and `c_{n-k} = -tr(A M_k) / k`.
/// Each division is exact because the coefficients are integers.
pub fn char_poly(m: &IntMatrix) -> Polynomial {
    let n = m.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix::zeros(n);
    for k in 1..=n {
        mk = m.mul(&mk).add_scalar_diagonal(&coeffs[n - k + 1]);
        let tr = m.mul(&mk).trace();
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible by {k}");
        coeffs[n - k] = -q;
    }
    Polynomial::new(coeffs.into_iter().map(Rational::from_integer).collect())
}

/// `sum(adj(λI - Q)) / det(λI - Q)`, i.e. the entry sum of `(λI - Q)^{-1}`.
///
/// Uses `det(B + J) = det B + sum(adj B)` with `B = λI - Q`, so the numerator
/// is `det(λI - (Q - J)) - det(λI - Q)`.
pub fn sum_adjugate_ratio(q: &IntMatrix) -> RationalFunction {
    let f = char_poly(q);
    let g = char_poly(&q.sub_all_ones(&BigInt::one()));
    RationalFunction::new(&g - &f, f).expect("characteristic polynomial is monic")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Determinant of `λI - M` by cofactor expansion with polynomial entries.
    fn cofactor_char_poly(m: &IntMatrix) -> Polynomial {
        let n = m.order();
        let entries: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = Polynomial::constant(Rational::from_integer(-m.get(i, j).clone()));
                        if i == j {
                            &c + &Polynomial::x()
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        fn det(rows: &[Vec<Polynomial>], cols: &[usize]) -> Polynomial {
            if rows.is_empty() {
                return Polynomial::one();
            }
            let mut acc = Polynomial::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = &rows[0][c] * &det(&rows[1..], &rest);
                acc = if pos % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
        det(&entries, &(0..n).collect::<Vec<_>>())
    }

    #[test]
    fn examples() {
        let k2 = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(char_poly(&k2), Polynomial::from_ints(&[0, -2, 1]));
        let k3 = IntMatrix::from_rows(&[vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
        assert_eq!(char_poly(&k3), Polynomial::from_ints(&[-4, 9, -6, 1]));
        assert_eq!(char_poly(&k3), Polynomial::from_roots(&[4, 1, 1]));
        assert_eq!(
            char_poly(&IntMatrix::zeros(3)),
            Polynomial::from_ints(&[0, 0, 0, 1])
        );
        assert_eq!(char_poly(&IntMatrix::zeros(0)), Polynomial::one());
    }

    #[test]
    fn matches_cofactor_expansion() {
        let mats = [
            IntMatrix::from_rows(&[vec![3, -1, 4], vec![1, 5, -9], vec![2, 6, 5]]),
            IntMatrix::from_rows(&[
                vec![2, 1, 0, 1],
                vec![1, 3, 1, 1],
                vec![0, 1, 1, 0],
                vec![1, 1, 0, 2],
            ]),
            IntMatrix::from_rows(&[
                vec![0, 7, -2, 1, 1],
                vec![-3, 1, 0, 4, 2],
                vec![5, 5, 5, -1, 0],
                vec![1, 0, 2, 2, -6],
                vec![0, 1, 1, 3, 8],
            ]),
        ];
        for m in &mats {
            assert_eq!(char_poly(m), cofactor_char_poly(m));
        }
    }

    #[test]
    fn adjugate_ratio_examples() {
        let k2 = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        let want = RationalFunction::new(Polynomial::from_int(2), Polynomial::from_ints(&[-2, 1]));
        assert_eq!(sum_adjugate_ratio(&k2), want.unwrap());

        let p3 = IntMatrix::from_rows(&[vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]);
        let want = RationalFunction::new(
            Polynomial::from_ints(&[-1, 3]),
            Polynomial::from_ints(&[0, -3, 1]),
        );
        assert_eq!(sum_adjugate_ratio(&p3), want.unwrap());

        let k1 = IntMatrix::zeros(1);
        let want = RationalFunction::new(Polynomial::one(), Polynomial::x());
        assert_eq!(sum_adjugate_ratio(&k1), want.unwrap());
    }
}
