use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; panics if the rows do not form a square.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            assert_eq!(row.len(), order, "matrix must be square");
            entries.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix { order, entries }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.order + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        // chunks(0) panics, so guard the empty matrix.
        self.entries.chunks(self.order.max(1))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Sum of all entries.
    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, rhs.order, "order mismatch");
        let n = self.order;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self + c * I`
    pub fn add_scalar_diagonal(&self, c: &BigInt) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..self.order {
            out.entries[i * self.order + i] += c;
        }
        out
    }

    /// `self - c * J` where `J` is the all-ones matrix.
    pub fn sub_all_ones(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            order: self.order,
            entries: self.entries.iter().map(|e| e - c).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.order);
        self.rows()
            .take(self.order)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        self.rows()
            .take(self.order)
            .map(|row| row.iter().map(|e| e.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows().take(self.order) {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
