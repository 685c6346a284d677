//! Fast prime-field kernels used by the enumeration hot loops.
//!
//! Coordinate vectors are plain `Vec<u64>` with entries in `[0, p)`.
//! All heavy scans (cocycle searches, unit-group filters) run here;
//! results are lifted back into [`crate::field::Scalar`] form at
//! the boundary. Multiplications accumulate in `u64` with a deferred
//! reduction, valid because enumeration primes stay below 2^16.

use crate::field::{mod_inverse, Field, Scalar};
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy)]
pub struct Fp {
    pub p: u64,
    /// Barrett constant `⌊2^64 / p⌋` for division-free reduction.
    magic: u64,
}

impl Fp {
    pub fn new(field: &Field) -> Option<Fp> {
        match field {
            Field::Prime(p) => Some(Fp::from_prime(*p)),
            Field::Rational => None,
        }
    }

    pub fn from_prime(p: u64) -> Fp {
        Fp { p, magic: ((1u128 << 64) / p as u128) as u64 }
    }

    /// `x mod p` by Barrett reduction (one high multiply, one correction).
    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.magic as u128) >> 64) as u64;
        let r = x - q * self.p;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        // enumeration primes are < 2^16, so products stay inside u64;
        // fall back to u128 for verification-only large primes
        if self.p <= u32::MAX as u64 {
            self.reduce(a * b)
        } else {
            (a as u128 * b as u128 % self.p as u128) as u64
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        mod_inverse(a, self.p)
    }
}

/// Column-sparse matrix for fast matrix–vector products.
#[derive(Debug, Clone)]
pub struct FpSparseMat {
    pub rows: usize,
    pub cols: usize,
    // cols_data[j] lists (row, value) with value ≠ 0
    cols_data: Vec<Vec<(u32, u64)>>,
}

impl FpSparseMat {
    pub fn from_matrix(m: &Matrix) -> FpSparseMat {
        let mut cols_data = vec![Vec::new(); m.cols];
        for j in 0..m.cols {
            for i in 0..m.rows {
                if let Scalar::Fp(v) = m[(i, j)] {
                    if v != 0 {
                        cols_data[j].push((i as u32, v));
                    }
                } else {
                    panic!("rational entry in prime-field fast path");
                }
            }
        }
        FpSparseMat { rows: m.rows, cols: m.cols, cols_data }
    }

    /// `out = M·x`; `out` must be zeroed by the caller.
    pub fn apply_into(&self, fp: Fp, x: &[u64], out: &mut [u64]) {
        debug_assert_eq!(x.len(), self.cols);
        debug_assert_eq!(out.len(), self.rows);
        if fp.p <= 1 << 16 && self.cols < 1 << 30 {
            // products < 2^32 and at most 2^30 summands: defer reduction
            for (j, &xj) in x.iter().enumerate() {
                if xj == 0 {
                    continue;
                }
                for &(i, v) in &self.cols_data[j] {
                    out[i as usize] += v * xj;
                }
            }
            for cell in out.iter_mut() {
                *cell = fp.reduce(*cell);
            }
            return;
        }
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for &(i, v) in &self.cols_data[j] {
                let cell = &mut out[i as usize];
                *cell = fp.add(*cell, fp.mul(v, xj));
            }
        }
    }

    pub fn apply(&self, fp: Fp, x: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.rows];
        self.apply_into(fp, x, &mut out);
        out
    }
}

/// Sparse structure constants of a finite-dimensional algebra:
/// `entry[i·dim + j]` lists the nonzero coordinates of `e_i · e_j`.
#[derive(Debug, Clone)]
pub struct FpMulTable {
    pub dim: usize,
    entries: Vec<Vec<(u32, u64)>>,
    pub unit: Vec<u64>,
}

impl FpMulTable {
    pub fn new(dim: usize, entries: Vec<Vec<(u32, u64)>>, unit: Vec<u64>) -> FpMulTable {
        assert_eq!(entries.len(), dim * dim);
        FpMulTable { dim, entries, unit }
    }

    /// `out = a·b`; `out` must be zeroed by the caller.
    pub fn mul_into(&self, fp: Fp, a: &[u64], b: &[u64], out: &mut [u64]) {
        if fp.p <= 1 << 16 && self.dim < 1 << 7 {
            // v·(ai·bj) < 2^48 with at most 2^14 summands: defer reduction
            for (i, &ai) in a.iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                let row = i * self.dim;
                for (j, &bj) in b.iter().enumerate() {
                    if bj == 0 {
                        continue;
                    }
                    // ai·bj < 2^32 stays unreduced; v·(ai·bj) < 2^48
                    let c = ai * bj;
                    for &(k, v) in &self.entries[row + j] {
                        out[k as usize] += v * c;
                    }
                }
            }
            for cell in out.iter_mut() {
                *cell = fp.reduce(*cell);
            }
            return;
        }
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = i * self.dim;
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = fp.mul(ai, bj);
                for &(k, v) in &self.entries[row + j] {
                    let cell = &mut out[k as usize];
                    *cell = fp.add(*cell, fp.mul(v, c));
                }
            }
        }
    }

    pub fn mul(&self, fp: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.dim];
        self.mul_into(fp, a, b, &mut out);
        out
    }

    /// Dense left-multiplication matrix of `a`.
    pub fn left_mul_dense(&self, fp: Fp, a: &[u64]) -> FpDense {
        let mut m = FpDense::zeros(self.dim, self.dim);
        let mut col = vec![0u64; self.dim];
        for j in 0..self.dim {
            col.iter_mut().for_each(|c| *c = 0);
            let mut ej = vec![0u64; self.dim];
            ej[j] = 1;
            self.mul_into(fp, a, &ej, &mut col);
            for i in 0..self.dim {
                m.data[i * self.dim + j] = col[i];
            }
        }
        m
    }

    /// Two-sided inverse of `a`, if any: solves `L_a·x = 1` then verifies
    /// `x·a = 1`.
    pub fn inverse(&self, fp: Fp, a: &[u64]) -> Option<Vec<u64>> {
        let la = self.left_mul_dense(fp, a);
        let x = la.solve_unique(fp, &self.unit)?;
        let back = self.mul(fp, &x, a);
        if back == self.unit {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self, fp: Fp, a: &[u64]) -> bool {
        self.inverse(fp, a).is_some()
    }
}

/// Structure constants regrouped by output coordinate: for each `k`, the
/// triples `(i, j, v)` with `v = c[i][j][k] ≠ 0`. Lets a quadratic
/// relation check bail out on the first mismatched coordinate.
#[derive(Debug, Clone)]
pub struct ProductByOutput {
    pub dim: usize,
    offsets: Vec<u32>,
    triples: Vec<(u32, u32, u64)>,
}

impl ProductByOutput {
    pub fn from_table(table: &FpMulTable) -> ProductByOutput {
        let dim = table.dim;
        let mut grouped: Vec<Vec<(u32, u32, u64)>> = vec![Vec::new(); dim];
        for i in 0..dim {
            for j in 0..dim {
                for &(k, v) in &table.entries[i * dim + j] {
                    grouped[k as usize].push((i as u32, j as u32, v));
                }
            }
        }
        let mut offsets = Vec::with_capacity(dim + 1);
        let mut triples = Vec::new();
        offsets.push(0);
        for group in grouped {
            triples.extend(group);
            offsets.push(triples.len() as u32);
        }
        ProductByOutput { dim, offsets, triples }
    }

    /// True iff `a·b = rhs` coordinate-wise, stopping at the first
    /// mismatch. Requires reduced inputs and `p ≤ 2^16` with at most a
    /// few thousand triples per output (the deferred sums stay in `u64`).
    pub fn product_equals(&self, fp: Fp, a: &[u64], b: &[u64], rhs: &[u64]) -> bool {
        debug_assert!(fp.p <= 1 << 16);
        for k in 0..self.dim {
            let mut acc = 0u64;
            let lo = self.offsets[k] as usize;
            let hi = self.offsets[k + 1] as usize;
            for &(i, j, v) in &self.triples[lo..hi] {
                acc += v * (a[i as usize] * b[j as usize]);
            }
            if fp.reduce(acc) != rhs[k] {
                return false;
            }
        }
        true
    }
}

/// Dense matrix over `𝔽_p` with row-major `u64` storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpDense {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl FpDense {
    pub fn zeros(rows: usize, cols: usize) -> FpDense {
        FpDense { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_matrix(m: &Matrix) -> FpDense {
        let data = m
            .data()
            .iter()
            .map(|s| match s {
                Scalar::Fp(v) => *v,
                Scalar::Q(_) => panic!("rational entry in prime-field fast path"),
            })
            .collect();
        FpDense { rows: m.rows, cols: m.cols, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    /// Gaussian elimination; returns the rank. Destroys `self`.
    pub fn rank_in_place(&mut self, fp: Fp) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank >= self.rows {
                break;
            }
            let Some(r) = (rank..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            if r != rank {
                for j in 0..self.cols {
                    self.data.swap(rank * self.cols + j, r * self.cols + j);
                }
            }
            let inv = fp.inv(self.at(rank, col));
            for j in col..self.cols {
                self.data[rank * self.cols + j] = fp.mul(self.data[rank * self.cols + j], inv);
            }
            for r2 in 0..self.rows {
                if r2 == rank {
                    continue;
                }
                let f = self.at(r2, col);
                if f == 0 {
                    continue;
                }
                for j in col..self.cols {
                    let t = fp.mul(self.data[rank * self.cols + j], f);
                    self.data[r2 * self.cols + j] = fp.sub(self.data[r2 * self.cols + j], t);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solves `A·x = b` when `A` is square with full rank; `None` otherwise.
    pub fn solve_unique(&self, fp: Fp, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let w = n + 1;
        let mut aug = vec![0u64; n * w];
        for i in 0..n {
            aug[i * w..i * w + n].copy_from_slice(&self.data[i * n..(i + 1) * n]);
            aug[i * w + n] = b[i];
        }
        let mut rank = 0;
        for col in 0..n {
            let Some(r) = (rank..n).find(|&r| aug[r * w + col] != 0) else {
                return None;
            };
            if r != rank {
                for j in 0..w {
                    aug.swap(rank * w + j, r * w + j);
                }
            }
            let inv = fp.inv(aug[rank * w + col]);
            for j in col..w {
                aug[rank * w + j] = fp.mul(aug[rank * w + j], inv);
            }
            for r2 in 0..n {
                if r2 == rank {
                    continue;
                }
                let f = aug[r2 * w + col];
                if f == 0 {
                    continue;
                }
                for j in col..w {
                    let t = fp.mul(aug[rank * w + j], f);
                    aug[r2 * w + j] = fp.sub(aug[r2 * w + j], t);
                }
            }
            rank += 1;
        }
        Some((0..n).map(|i| aug[i * w + n]).collect())
    }

    pub fn is_invertible(&self, fp: Fp) -> bool {
        if self.rows != self.cols {
            return false;
        }
        self.clone().rank_in_place(fp) == self.rows
    }
}

/// Deterministic parallel scan over `0..total`: the index space is split
/// into one contiguous chunk per worker, per-chunk results keep index
/// order, and chunks are concatenated in order — output is identical for
/// any worker count.
pub fn par_scan<T, F>(total: u64, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync,
{
    par_scan_with(total, threads, || (), move |_, n| f(n))
}

/// [`par_scan`] with per-worker scratch state, so hot loops can reuse
/// buffers instead of allocating per candidate.
pub fn par_scan_with<T, S, I, F>(total: u64, threads: usize, init: I, f: F) -> Vec<T>
where
    T: Send,
    I: Fn() -> S + Sync,
    F: Fn(&mut S, u64) -> Option<T> + Sync,
{
    let threads = threads.max(1);
    if threads == 1 || total < 1024 {
        let mut state = init();
        return (0..total).filter_map(|n| f(&mut state, n)).collect();
    }
    let chunk = total.div_ceil(threads as u64);
    let mut out = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads as u64 {
            let lo = t * chunk;
            let hi = ((t + 1) * chunk).min(total);
            let f = &f;
            let init = &init;
            handles.push(scope.spawn(move || {
                let mut state = init();
                (lo..hi).filter_map(|n| f(&mut state, n)).collect::<Vec<T>>()
            }));
        }
        for h in handles {
            out.extend(h.join().expect("scan worker panicked"));
        }
    });
    out
}

/// Decodes scan index `n` into base-`p` digits, first digit slowest
/// (lexicographic order of the digit vector follows the index order).
pub fn decode_digits(mut n: u64, p: u64, len: usize, out: &mut [u64]) {
    debug_assert_eq!(out.len(), len);
    for i in (0..len).rev() {
        out[i] = n % p;
        n /= p;
    }
    debug_assert_eq!(n, 0);
}

/// Lifts a fast-path vector back into scalar form.
pub fn to_scalars(v: &[u64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::Fp(x)).collect()
}

/// Lowers a scalar vector into the fast path; panics on rationals.
pub fn from_scalars(v: &[Scalar]) -> Vec<u64> {
    v.iter()
        .map(|s| match s {
            Scalar::Fp(x) => *x,
            Scalar::Q(_) => panic!("rational entry in prime-field fast path"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_are_lexicographic() {
        let mut prev = vec![0u64; 3];
        let mut cur = vec![0u64; 3];
        decode_digits(0, 3, 3, &mut prev);
        for n in 1..27 {
            decode_digits(n, 3, 3, &mut cur);
            assert!(cur > prev, "{cur:?} after {prev:?}");
            prev.copy_from_slice(&cur);
        }
    }

    #[test]
    fn par_scan_deterministic() {
        let f = |n: u64| if n % 7 == 0 { Some(n * n) } else { None };
        let a = par_scan(100_000, 1, f);
        let b = par_scan(100_000, 3, f);
        let c = par_scan(100_000, 8, f);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn dense_solve_roundtrip() {
        let fp = Fp::from_prime(5);
        let m = FpDense { rows: 2, cols: 2, data: vec![1, 1, 0, 1] };
        let x = m.solve_unique(fp, &[3, 4]).unwrap();
        assert_eq!(x, vec![4, 4]); // (x+y, y) = (3,4) → x = 4 mod 5
        let sing = FpDense { rows: 2, cols: 2, data: vec![1, 2, 2, 4] };
        assert!(sing.solve_unique(fp, &[1, 0]).is_none());
        assert!(!sing.is_invertible(fp));
    }
}
