//! Exact dense linear algebra over an arbitrary field: just enough for the
//! undetermined-coefficient solves used across the crate.

use crate::field::Field;


#[derive(Clone, Debug)]
pub struct Mat<F> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    fn row_echelon(mut self) -> (Self, Vec<usize>) {
        let mut pivots = vec![];
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut piv = None;
            for r in row..self.rows {
                if !self.at(r, col).is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            for c in 0..self.cols {
                let tmp = self.at(row, c).clone();
                let v = self.at(piv, c).clone();
                self.set(row, c, v);
                self.set(piv, c, tmp);
            }
            let inv = self.at(row, col).inv();
            for c in col..self.cols {
                let v = self.at(row, c).clone() * inv.clone();
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = self.at(r, c).clone() - factor.clone() * self.at(row, c).clone();
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (self, pivots)
    }

    /// Solve A x = b. Returns one solution if consistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (e, pivots) = aug.row_echelon();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = e.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of the nullspace of A.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (e, pivots) = self.clone().row_echelon();
        let mut basis = vec![];
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = num_traits::One::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -e.at(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{rat_i, Rat};

    #[test]
    fn solve_and_nullspace() {
        // x + y = 3, x - y = 1 -> (2, 1)
        let mut a = Mat::<Rat>::zero(2, 2);
        a.set(0, 0, rat_i(1));
        a.set(0, 1, rat_i(1));
        a.set(1, 0, rat_i(1));
        a.set(1, 1, rat_i(-1));
        let x = a.solve(&[rat_i(3), rat_i(1)]).unwrap();
        assert_eq!(x, vec![rat_i(2), rat_i(1)]);

        // x + y = 1, x + y = 2 inconsistent
        let mut a = Mat::<Rat>::zero(2, 2);
        a.set(0, 0, rat_i(1));
        a.set(0, 1, rat_i(1));
        a.set(1, 0, rat_i(1));
        a.set(1, 1, rat_i(1));
        assert!(a.solve(&[rat_i(1), rat_i(2)]).is_none());

        // nullspace of [1 1] is spanned by (-1, 1)
        let mut a = Mat::<Rat>::zero(1, 2);
        a.set(0, 0, rat_i(1));
        a.set(0, 1, rat_i(1));
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![rat_i(-1), rat_i(1)]);
    }
}
