//! Dense exact matrices over a [`Field`], with deterministic Gaussian
//! elimination (first-nonzero pivoting, no magnitude heuristics) so that
//! kernels, solutions, and canonical representatives are reproducible.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Row-major dense matrix. A linear map `V → W` with `dim V = cols` and
/// `dim W = rows`, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of solving `A·x = b`: one particular solution plus a basis of
/// the kernel, or a certificate that the system is unsolvable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved {
        particular: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
    Unsolvable,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for entry in row {
                if !field.validate(entry) {
                    return Err(Error::DimensionMismatch(
                        "entry not in canonical form for the field".into(),
                    ));
                }
            }
            data.extend(row.iter().cloned());
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Single-column matrix from a vector.
    pub fn column(v: &[Scalar]) -> Matrix {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    /// Columns assembled into a matrix.
    pub fn from_cols(field: &Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for i in 0..rows {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if field.is_zero(b) {
                        continue;
                    }
                    out[(i, j)] = field.add(&out[(i, j)], &field.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| field.add(a, b))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| field.sub(a, b))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, field: &Field, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| field.mul(a, s)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Applies the map to a column vector.
    pub fn apply(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if field.is_zero(x) {
                continue;
            }
            for i in 0..self.rows {
                let a = &self[(i, j)];
                if !field.is_zero(a) {
                    out[i] = field.add(&out[i], &field.mul(a, x));
                }
            }
        }
        out
    }

    /// Kronecker product; indices pair as (slow = self, fast = other),
    /// matching the basis ordering of tensor-product algebras.
    pub fn kron(&self, field: &Field, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(field, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = &self[(i1, j1)];
                if field.is_zero(a) {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = &other[(i2, j2)];
                        if field.is_zero(b) {
                            continue;
                        }
                        out[(i1 * other.rows + i2, j1 * other.cols + j2)] = field.mul(a, b);
                    }
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    /// Pivot choice is the first row with a nonzero entry, scanning
    /// columns left to right.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let found = (pivot_row..self.rows).find(|&r| !field.is_zero(&self[(r, col)]));
            let Some(r) = found else { continue };
            self.swap_rows(pivot_row, r);
            let inv = field
                .inv(&self[(pivot_row, col)])
                .expect("pivot is nonzero");
            self.scale_row(field, pivot_row, &inv);
            for r2 in 0..self.rows {
                if r2 != pivot_row && !field.is_zero(&self[(r2, col)]) {
                    let factor = self[(r2, col)].clone();
                    self.sub_scaled_row(field, r2, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut work = self.clone();
        work.rref(field).len()
    }

    /// Basis of `{x | A·x = 0}`. One vector per free column, in increasing
    /// column order, with the free coordinate set to 1.
    pub fn kernel(&self, field: &Field) -> Vec<Vec<Scalar>> {
        let mut work = self.clone();
        let pivots = work.rref(field);
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![field.zero(); self.cols];
            vec[free] = field.one();
            for (r, &c) in pivots.iter().enumerate() {
                vec[c] = field.neg(&work[(r, free)]);
            }
            basis.push(vec);
        }
        basis
    }

    /// Solves `A·x = b` exactly.
    pub fn solve(&self, field: &Field, b: &[Scalar]) -> Result<SolveOutcome> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} vs {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref(field);
        if pivots.contains(&self.cols) {
            return Ok(SolveOutcome::Unsolvable);
        }
        let mut particular = vec![field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = aug[(r, self.cols)].clone();
        }
        Ok(SolveOutcome::Solved {
            particular,
            kernel: self.kernel(field),
        })
    }

    /// Solves `A·X = B` column by column; `None` if any column is unsolvable.
    pub fn solve_matrix(&self, field: &Field, rhs: &Matrix) -> Result<Option<Matrix>> {
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs has {} rows, lhs {}",
                rhs.rows, self.rows
            )));
        }
        let mut cols = Vec::with_capacity(rhs.cols);
        for j in 0..rhs.cols {
            match self.solve(field, &rhs.col(j))? {
                SolveOutcome::Solved { particular, .. } => cols.push(particular),
                SolveOutcome::Unsolvable => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_cols(field, self.cols, &cols)))
    }

    /// Two-sided inverse, or `None` when singular. Errors on non-square input.
    pub fn inverse(&self, field: &Field) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = field.one();
        }
        let pivots = aug.rref(field);
        if pivots.iter().filter(|&&c| c < n).count() < n {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(Some(inv))
    }

    pub fn is_zero(&self, field: &Field) -> bool {
        self.data.iter().all(|a| field.is_zero(a))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, field: &Field, r: usize, s: &Scalar) {
        for j in 0..self.cols {
            self[(r, j)] = field.mul(&self[(r, j)], s);
        }
    }

    fn sub_scaled_row(&mut self, field: &Field, dst: usize, src: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let t = field.mul(&self[(src, j)], factor);
            self[(dst, j)] = field.sub(&self[(dst, j)], &t);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols, &self.data).cmp(&(other.rows, other.cols, &other.data))
    }
}

/// Componentwise vector sum.
pub fn vec_add(field: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub fn vec_sub(field: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
}

pub fn vec_scale(field: &Field, a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| field.mul(x, s)).collect()
}

pub fn vec_is_zero(field: &Field, a: &[Scalar]) -> bool {
    a.iter().all(|x| field.is_zero(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn fp_vec(f: &Field, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| f.from_int(x)).collect()
    }

    fn fp_mat(f: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            f,
            rows.iter().map(|r| fp_vec(f, r)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        let q = Field::rational();
        assert_eq!(Matrix::identity(&q, 3).rank(&q), 3);
        assert_eq!(Matrix::zeros(&q, 2, 5).rank(&q), 0);
        // proportional rows
        let m = fp_mat(&q, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(&q), 1);
    }

    #[test]
    fn solve_identity_and_zero() {
        let f = f3();
        let id = Matrix::identity(&f, 2);
        match id.solve(&f, &fp_vec(&f, &[1, 2])).unwrap() {
            SolveOutcome::Solved { particular, kernel } => {
                assert_eq!(particular, fp_vec(&f, &[1, 2]));
                assert!(kernel.is_empty());
            }
            SolveOutcome::Unsolvable => panic!(),
        }
        let z = Matrix::zeros(&f, 2, 2);
        match z.solve(&f, &fp_vec(&f, &[0, 0])).unwrap() {
            SolveOutcome::Solved { particular, kernel } => {
                assert_eq!(particular, fp_vec(&f, &[0, 0]));
                assert_eq!(kernel.len(), 2);
            }
            SolveOutcome::Unsolvable => panic!(),
        }
    }

    #[test]
    fn solve_rank_deficient() {
        // ((1,1),(2,2)) over 𝔽₃ with rhs (1,2); checked by substitution
        let f = f3();
        let a = fp_mat(&f, &[&[1, 1], &[2, 2]]);
        match a.solve(&f, &fp_vec(&f, &[1, 2])).unwrap() {
            SolveOutcome::Solved { particular, kernel } => {
                assert_eq!(particular, fp_vec(&f, &[1, 0]));
                assert_eq!(kernel, vec![fp_vec(&f, &[2, 1])]);
                // substitution oracle on particular + any kernel combination
                for t in 0..3 {
                    let tt = f.from_int(t);
                    let x = vec_add(&f, &particular, &vec_scale(&f, &kernel[0], &tt));
                    assert_eq!(a.apply(&f, &x), fp_vec(&f, &[1, 2]));
                }
            }
            SolveOutcome::Unsolvable => panic!(),
        }
        // inconsistent rhs
        assert_eq!(
            a.solve(&f, &fp_vec(&f, &[1, 1])).unwrap(),
            SolveOutcome::Unsolvable
        );
    }

    #[test]
    fn inverse_examples() {
        let f = f3();
        let id = Matrix::identity(&f, 4);
        assert_eq!(id.inverse(&f).unwrap().unwrap(), id);

        let swap = fp_mat(&f, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse(&f).unwrap().unwrap(), swap);

        let m = fp_mat(&f, &[&[1, 1], &[0, 1]]);
        let inv = m.inverse(&f).unwrap().unwrap();
        assert_eq!(inv, fp_mat(&f, &[&[1, 2], &[0, 1]]));
        assert_eq!(m.mul(&f, &inv), Matrix::identity(&f, 2));
        assert_eq!(inv.mul(&f, &m), Matrix::identity(&f, 2));

        let sing = fp_mat(&f, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse(&f).unwrap().is_none());
        assert!(sing.rank(&f) < 2);

        let rect = Matrix::zeros(&f, 2, 3);
        assert!(matches!(rect.inverse(&f), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn kron_pairs_slow_fast() {
        let f = f3();
        let a = fp_mat(&f, &[&[1, 2], &[0, 1]]);
        let id2 = Matrix::identity(&f, 2);
        let k = a.kron(&f, &id2);
        assert_eq!(k.rows, 4);
        // entry ((i1,i2),(j1,j2)) = a[i1,j1]·δ_{i2,j2}
        assert_eq!(k[(0, 2)], f.from_int(2));
        assert_eq!(k[(1, 3)], f.from_int(2));
        assert_eq!(k[(0, 3)], f.zero());
    }
}
