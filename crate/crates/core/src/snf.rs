//! Integer matrices and Smith normal form with checked arithmetic.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::AbelianGroup;

/// A dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::MatrixShape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(IntegerMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows of equal length. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::MatrixShape {
                    rows: rows.len(),
                    cols,
                    len: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in entries.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &IntegerMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::MatrixShape {
                rows: other.rows,
                cols: self.cols,
                len: other.data.len(),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self::new(self.rows + other.rows, self.cols, data)
    }

    /// Checked matrix product.
    pub fn mul(&self, other: &IntegerMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape {
                rows: other.rows,
                cols: other.cols,
                len: self.cols,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0i64;
                for k in 0..self.cols {
                    acc = mul_add(acc, self.get(i, k), other.get(k, j))?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: i64) -> Result<()> {
        for j in 0..self.cols {
            let v = mul_add(self.get(dst, j), factor, self.get(src, j))?;
            self.set(dst, j, v);
        }
        Ok(())
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: i64) -> Result<()> {
        for i in 0..self.rows {
            let v = mul_add(self.get(i, dst), factor, self.get(i, src))?;
            self.set(i, dst, v);
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        for j in 0..self.cols {
            let v = self.get(i, j).checked_neg().ok_or(Error::MatrixOverflow)?;
            self.set(i, j, v);
        }
        Ok(())
    }
}

fn mul_add(acc: i64, a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b)
        .and_then(|x| acc.checked_add(x))
        .ok_or(Error::MatrixOverflow)
}

/// Result of [`smith_normal_form`]: `left * M * right = diag(diagonal)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `min(rows, cols)` entries `d1 | d2 | ...`, nonnegative, zeros last.
    pub diagonal: Vec<i64>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|&&d| d != 0).count()
    }
}

/// Smith normal form by unimodular row and column operations.
pub fn smith_normal_form(m: &IntegerMatrix) -> Result<SmithForm> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntegerMatrix::identity(rows);
    let mut right = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = a.get(i, j);
                    if v != 0
                        && pivot
                            .is_none_or(|(pi, pj)| v.unsigned_abs() < a.get(pi, pj).unsigned_abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return Ok(finish(a, left, right));
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let d = a.get(t, t);
            let mut clean = true;
            for i in t + 1..rows {
                let q = a.get(i, t) / d;
                if q != 0 {
                    a.add_row(i, t, -q)?;
                    left.add_row(i, t, -q)?;
                }
                clean &= a.get(i, t) == 0;
            }
            for j in t + 1..cols {
                let q = a.get(t, j) / d;
                if q != 0 {
                    a.add_col(j, t, -q)?;
                    right.add_col(j, t, -q)?;
                }
                clean &= a.get(t, j) == 0;
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a.get(i, j) % d != 0));
            match offender {
                Some(i) => {
                    a.add_row(t, i, 1)?;
                    left.add_row(t, i, 1)?;
                }
                None => break,
            }
        }
        if a.get(t, t) < 0 {
            a.negate_row(t)?;
            left.negate_row(t)?;
        }
    }
    Ok(finish(a, left, right))
}

fn finish(a: IntegerMatrix, left: IntegerMatrix, right: IntegerMatrix) -> SmithForm {
    let diagonal = (0..a.rows.min(a.cols)).map(|i| a.get(i, i)).collect();
    SmithForm {
        diagonal,
        left,
        right,
    }
}

/// `Z^cols / rowspace(M)`, which must be finite.
pub fn group_from_relations(m: &IntegerMatrix) -> Result<AbelianGroup> {
    let snf = smith_normal_form(m)?;
    let free = m.cols - snf.rank();
    if free > 0 {
        return Err(Error::InfiniteGroup(free));
    }
    let orders: Vec<u64> = snf.diagonal.iter().map(|d| d.unsigned_abs()).collect();
    AbelianGroup::from_cyclic_factors(&orders)
}

/// A basis (as rows) of the left kernel `{x : x M = 0}`.
pub fn left_kernel(m: &IntegerMatrix) -> Result<IntegerMatrix> {
    let snf = smith_normal_form(m)?;
    let rank = snf.rank();
    let rows: Vec<Vec<i64>> = (rank..m.rows).map(|i| snf.left.row(i).to_vec()).collect();
    IntegerMatrix::from_rows(m.rows, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntegerMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        IntegerMatrix::from_rows(cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn check_transforms(m: &IntegerMatrix) -> SmithForm {
        let snf = smith_normal_form(m).unwrap();
        let prod = snf.left.mul(m).unwrap().mul(&snf.right).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let want = if i == j { snf.diagonal[i] } else { 0 };
                assert_eq!(prod.get(i, j), want, "{m:?}");
            }
        }
        snf
    }

    #[test]
    fn snf_examples() {
        assert_eq!(
            check_transforms(&IntegerMatrix::diagonal(&[4, 2])).diagonal,
            vec![2, 4]
        );
        assert_eq!(
            check_transforms(&mat(&[&[2, 1], &[0, 2]])).diagonal,
            vec![1, 4]
        );
        assert_eq!(
            check_transforms(&IntegerMatrix::zeros(2, 2)).diagonal,
            vec![0, 0]
        );
        assert!(smith_normal_form(&IntegerMatrix::zeros(0, 0))
            .unwrap()
            .diagonal
            .is_empty());
    }

    #[test]
    fn snf_divisibility_chain_on_awkward_matrix() {
        let m = mat(&[&[6, 4, 0], &[0, 10, 15], &[9, 0, -12]]);
        let snf = check_transforms(&m);
        let d = &snf.diagonal;
        for w in d.windows(2) {
            if w[0] != 0 {
                assert_eq!(w[1] % w[0], 0, "{d:?}");
            }
        }
        assert!(d.iter().all(|&x| x >= 0));
    }

    #[test]
    fn relations_examples() {
        let g = group_from_relations(&IntegerMatrix::diagonal(&[2, 4])).unwrap();
        assert_eq!(g, AbelianGroup::from_cyclic_factors(&[2, 4]).unwrap());
        assert_eq!(
            group_from_relations(&mat(&[&[1]])).unwrap(),
            AbelianGroup::trivial()
        );
        assert_eq!(
            group_from_relations(&mat(&[&[2, 0], &[1, 3]])).unwrap(),
            AbelianGroup::cyclic(6)
        );
    }

    #[test]
    fn infinite_cokernel_is_an_error() {
        assert_eq!(
            group_from_relations(&mat(&[&[2, 0]])),
            Err(Error::InfiniteGroup(1))
        );
        assert_eq!(
            group_from_relations(&IntegerMatrix::zeros(0, 2)),
            Err(Error::InfiniteGroup(2))
        );
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = mat(&[&[2, 2], &[4, 0], &[0, 4], &[1, 3]]);
        let k = left_kernel(&m).unwrap();
        assert_eq!(k.rows(), 2);
        let z = k.mul(&m).unwrap();
        assert!((0..z.rows()).all(|i| z.row(i).iter().all(|&x| x == 0)));
    }

    #[test]
    fn shape_errors() {
        assert!(IntegerMatrix::new(2, 2, vec![1, 2, 3]).is_err());
        assert!(IntegerMatrix::from_rows(2, &[vec![1]]).is_err());
    }
}
