
use super::matrix::{Matrix, Scalar};
use crate::error::Result;

/// Smith normal form `left * B * right = diag(diagonal)`.
///
/// `left_inverse` is carried along so callers can transport automorphisms
/// into the diagonal coordinates without a separate inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<T> {
    pub diagonal: Vec<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
    pub left_inverse: Matrix<T>,
}

impl<T: Scalar> SnfResult<T> {
    /// The diagonal matrix with the shape of the input.
    pub fn diagonal_matrix(&self) -> Matrix<T> {
        let mut d = Matrix::zeros(self.left.rows(), self.right.cols());
        for (t, x) in self.diagonal.iter().enumerate() {
            d.set(t, t, x.clone());
        }
        d
    }
}

struct Reducer<T> {
    d: Matrix<T>,
    left: Matrix<T>,
    left_inv: Matrix<T>,
    right: Matrix<T>,
}

impl<T: Scalar> Reducer<T> {
    // row[i] += c * row[j]; inverse side gets col[j] -= c * col[i]
    fn row_add(&mut self, i: usize, j: usize, c: &T) -> Result<()> {
        self.d.add_row_multiple(i, j, c)?;
        self.left.add_row_multiple(i, j, c)?;
        self.left_inv.add_col_multiple(j, i, &-c.clone())
    }

    fn col_add(&mut self, i: usize, j: usize, c: &T) -> Result<()> {
        self.d.add_col_multiple(i, j, c)?;
        self.right.add_col_multiple(i, j, c)
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.d.swap_rows(i, j);
        self.left.swap_rows(i, j);
        self.left_inv.swap_cols(i, j);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.d.swap_cols(i, j);
        self.right.swap_cols(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        self.d.negate_row(i);
        self.left.negate_row(i);
        self.left_inv.negate_col(i);
    }

    /// Smallest nonzero entry (by absolute value) in the trailing block.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, T)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let v = self.d.get(i, j).abs();
                if !v.is_zero() && best.as_ref().map_or(true, |(_, _, b)| v < *b) {
                    best = Some((i, j, v));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn reduce(&mut self) -> Result<()> {
        let steps = self.d.rows().min(self.d.cols());
        for t in 0..steps {
            loop {
                let Some((pi, pj)) = self.pivot(t) else {
                    return Ok(());
                };
                self.row_swap(t, pi);
                self.col_swap(t, pj);
                let p = self.d.get(t, t).clone();
                let mut clean = true;
                for i in t + 1..self.d.rows() {
                    let q = self.d.get(i, t).div_floor(&p);
                    if !q.is_zero() {
                        self.row_add(i, t, &-q)?;
                    }
                    clean &= self.d.get(i, t).is_zero();
                }
                for j in t + 1..self.d.cols() {
                    let q = self.d.get(t, j).div_floor(&p);
                    if !q.is_zero() {
                        self.col_add(j, t, &-q)?;
                    }
                    clean &= self.d.get(t, j).is_zero();
                }
                if !clean {
                    continue;
                }
                let offender = (t + 1..self.d.rows()).find(|&i| {
                    (t + 1..self.d.cols()).any(|j| !self.d.get(i, j).is_multiple_of(&p))
                });
                match offender {
                    Some(i) => self.row_add(t, i, &T::one())?,
                    None => break,
                }
            }
            if self.d.get(t, t).is_negative() {
                self.row_negate(t);
            }
        }
        Ok(())
    }
}

/// Smith normal form over the integers with unimodular transforms.
///
/// The diagonal satisfies `d_1 | d_2 | ...`, all entries non-negative.
pub fn smith_normal_form<T: Scalar>(b: &Matrix<T>) -> Result<SnfResult<T>> {
    let mut r = Reducer {
        d: b.clone(),
        left: Matrix::identity(b.rows()),
        left_inv: Matrix::identity(b.rows()),
        right: Matrix::identity(b.cols()),
    };
    r.reduce()?;
    let diagonal = (0..b.rows().min(b.cols()))
        .map(|t| r.d.get(t, t).clone())
        .collect();
    Ok(SnfResult {
        diagonal,
        left: r.left,
        right: r.right,
        left_inverse: r.left_inv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn check<T: Scalar>(b: &Matrix<T>) -> SnfResult<T> {
        let s = smith_normal_form(b).unwrap();
        let back = s.left.checked_mul(b).unwrap().checked_mul(&s.right).unwrap();
        assert_eq!(back, s.diagonal_matrix());
        assert_eq!(
            s.left.checked_mul(&s.left_inverse).unwrap(),
            Matrix::identity(b.rows())
        );
        assert!(s.left.determinant().unwrap().abs().is_one());
        assert!(s.right.determinant().unwrap().abs().is_one());
        for w in s.diagonal.windows(2) {
            assert!(w[0].is_zero() && w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&Matrix::<i64>::identity(2));
        assert_eq!(s.diagonal, vec![1, 1]);
    }

    #[test]
    fn elementary_divisors_recombine() {
        let s = check(&Matrix::<i64>::from_i64_rows(&[vec![6, 0], vec![0, 4]]).unwrap());
        assert_eq!(s.diagonal, vec![2, 12]);
    }

    #[test]
    fn cube_of_alpha_minus_one_at_three() {
        let b = Matrix::<i64>::from_i64_rows(&[vec![3, -6], vec![6, -3]]).unwrap();
        assert_eq!(check(&b).diagonal, vec![3, 9]);
        let big = Matrix::<BigInt>::from_i64_rows(&[vec![3, -6], vec![6, -3]]).unwrap();
        let d: Vec<i64> = check(&big)
            .diagonal
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(d, vec![3, 9]);
    }

    #[test]
    fn rectangular_and_singular() {
        let b = Matrix::<i64>::from_i64_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])
            .unwrap();
        assert_eq!(check(&b).diagonal, vec![2, 6, 12]);
        let r = Matrix::<i64>::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        assert_eq!(check(&r).diagonal, vec![1, 0]);
    }
}
