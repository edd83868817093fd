//! Dense matrices over a field, just enough for char-poly interpolation,
//! shape-lemma solves, and Hessian ranks.

use crate::field::Field;

#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    pub field: F,
    pub rows: usize,
    pub cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols);
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.rows {
            acc = f.add(&acc, self.at(i, i));
        }
        acc
    }

    /// Row-reduces a working copy; returns (rank, det) where det is only
    /// meaningful for square matrices.
    fn eliminate(&self) -> (usize, F::Elem) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut det = f.one();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| !f.is_zero(m.at(r, col))) else {
                det = f.zero();
                continue;
            };
            if piv != row {
                for j in 0..m.cols {
                    let a = m.at(row, j).clone();
                    let b = m.at(piv, j).clone();
                    m.set(row, j, b);
                    m.set(piv, j, a);
                }
                det = f.neg(&det);
            }
            let pv = m.at(row, col).clone();
            det = f.mul(&det, &pv);
            let pinv = f.inv(&pv).expect("pivot nonzero");
            for r in (row + 1)..m.rows {
                let factor = f.mul(m.at(r, col), &pinv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.at(r, j), &f.mul(&factor, m.at(row, j)));
                    m.set(r, j, v);
                }
            }
            row += 1;
            rank += 1;
        }
        if rank < m.rows.min(m.cols) || m.rows != m.cols {
            det = f.zero();
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().0
    }

    pub fn det(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols);
        self.eliminate().1
    }

    /// Solves A x = b for square A; `None` when A is singular.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let f = self.field.clone();
        let n = self.rows;
        // augmented elimination
        let mut m = Matrix::zero(&f, n, n + 1);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.at(i, j).clone());
            }
            m.set(i, n, b[i].clone());
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| !f.is_zero(m.at(r, col)))?;
            if piv != col {
                for j in 0..=n {
                    let a = m.at(col, j).clone();
                    let bb = m.at(piv, j).clone();
                    m.set(col, j, bb);
                    m.set(piv, j, a);
                }
            }
            let pinv = f.inv(m.at(col, col)).ok()?;
            for j in col..=n {
                let v = f.mul(m.at(col, j), &pinv);
                m.set(col, j, v);
            }
            for r in 0..n {
                if r == col || f.is_zero(m.at(r, col)) {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..=n {
                    let v = f.sub(m.at(r, j), &f.mul(&factor, m.at(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        Some((0..n).map(|i| m.at(i, n).clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn det_rank_solve() {
        let f = PrimeField::new(101).unwrap();
        let mut m = Matrix::zero(&f, 2, 2);
        m.set(0, 0, 2);
        m.set(0, 1, 3);
        m.set(1, 0, 1);
        m.set(1, 1, 4);
        assert_eq!(m.det(), 5);
        assert_eq!(m.rank(), 2);
        let x = m.solve(&[5, 6]).unwrap();
        // 2a + 3b = 5, a + 4b = 6 -> a = 2/5, b = 7/5 mod 101
        assert_eq!(m.mul_vec(&x), vec![5, 6]);

        let mut s = Matrix::zero(&f, 2, 2);
        s.set(0, 0, 1);
        s.set(0, 1, 2);
        s.set(1, 0, 2);
        s.set(1, 1, 4);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.det(), 0);
        assert!(s.solve(&[1, 0]).is_none());
    }
}
