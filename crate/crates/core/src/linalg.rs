//! Small dense linear algebra over a scalar field.
//!
//! Elimination is exact over [`CQ`](crate::scalar::CQ); over floats it uses
//! partial pivoting with a relative tolerance.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(S::zero(), |acc, j| acc.plus(&self.get(i, j).times(&v[j]))))
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_of(&self) -> f64 {
        self.data.iter().map(|x| x.magnitude()).fold(0.0, f64::max)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let tol = if S::EXACT {
            0.0
        } else {
            1e-12 * self.scale_of().max(1.0)
        };
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let candidate = if S::EXACT {
                (row..self.rows).find(|&r| !self.get(r, col).is_zero())
            } else {
                (row..self.rows)
                    .map(|r| (r, self.get(r, col).magnitude()))
                    .filter(|(_, m)| *m > tol)
                    .max_by(|a, b| a.1.total_cmp(&b.1))
                    .map(|(r, _)| r)
            };
            let Some(p) = candidate else { continue };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inverse().expect("nonzero pivot");
            for j in 0..self.cols {
                let v = self.get(row, j).times(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in 0..self.cols {
                    let v = self.get(r, j).minus(&factor.times(self.get(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

/// Basis of `{x : M x = 0}`, one vector per free column.
pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<S>> {
    let mut r = m.clone();
    let pivots = r.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); m.cols()];
            v[f] = S::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(row, f).negated();
            }
            v
        })
        .collect()
}

/// Solves the square system `A x = b`.
pub fn solve<S: Scalar>(a: &Matrix<S>, b: &[S]) -> Result<Vec<S>> {
    let n = a.rows();
    if a.cols() != n || b.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: b.len(),
        });
    }
    let mut aug = Matrix::zeros(n, n + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, bi.clone());
    }
    let pivots = aug.rref();
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(Error::Domain("singular linear system".into()));
    }
    Ok((0..n).map(|i| aug.get(i, n).clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cq, Ring, CQ};

    #[test]
    fn exact_nullspace() {
        // x + y + z = 0 has a two-dimensional nullspace
        let mut m = Matrix::<CQ>::zeros(1, 3);
        for j in 0..3 {
            m.set(0, j, cq(1, 0));
        }
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.apply(&v)[0].is_zero());
        }
    }

    #[test]
    fn exact_solve() {
        let mut a = Matrix::<CQ>::zeros(2, 2);
        a.set(0, 0, cq(1, 1));
        a.set(0, 1, cq(2, 0));
        a.set(1, 0, cq(0, -1));
        a.set(1, 1, cq(3, 0));
        let b = vec![cq(1, 0), cq(0, 1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.apply(&x), b);
    }

    #[test]
    fn singular_is_reported() {
        let a = Matrix::<CQ>::zeros(2, 2);
        assert!(solve(&a, &[cq(1, 0), cq(0, 0)]).is_err());
    }
}
