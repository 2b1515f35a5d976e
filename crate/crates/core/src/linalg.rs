//! Dense exact linear algebra over the coefficient field.

use crate::field::{Field, Scalar};

/// Row-major dense matrix over a field.
#[derive(Clone, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix {
            field,
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce()
    }

    /// In-place reduction to row echelon form; returns the rank.
    fn row_reduce(&mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(p, rank);
            let inv = self.get(rank, col).inv();
            for j in col..self.cols {
                let x = self.get(rank, j) * &inv;
                self.set(rank, j, x);
            }
            for r in rank + 1..self.rows {
                let f = self.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let x = self.get(r, j) - &(&f * self.get(rank, j));
                    self.set(r, j, x);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn ranks() {
        let q = Field::Rational;
        assert_eq!(m(q, &[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(q, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).rank(), 3);
        assert_eq!(Matrix::zeros(q, 3, 4).rank(), 0);
        assert_eq!(Matrix::zeros(q, 0, 4).rank(), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let rows: &[&[i64]] = &[&[1, 1], &[1, 3]];
        assert_eq!(m(Field::Rational, rows).rank(), 2);
        assert_eq!(m(Field::prime(2).unwrap(), rows).rank(), 1);
    }
}
