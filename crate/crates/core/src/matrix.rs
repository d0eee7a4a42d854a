//! Dense matrices over a [`FiniteField`] with exact Gaussian elimination.
//!
//! Storage is row-major and *packed*: each entry occupies `field.degree()`
//! consecutive `u64` coefficients. The exhaustive classification suites rank
//! tens of thousands of prime-field block matrices, so the elimination loops
//! work directly on coefficient windows instead of boxed elements;
//! [`FieldElement`] appears only at the API surface.
//!
//! All outputs are canonical: `rref` is the reduced row echelon form, kernel
//! bases come from the standard free-column parametrization of the rref, and
//! column-space bases are rref-reduced. Equal inputs therefore always produce
//! byte-identical outputs — the report stability tests rely on this.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::poly::Polynomial;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    /// len == rows * cols * field.degree()
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(field: &FiniteField, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols * field.degree()],
        }
    }

    pub fn identity(field: &FiniteField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        let one = field.one();
        for i in 0..n {
            m.set(i, i, &one);
        }
        m
    }

    pub fn from_fn(
        field: &FiniteField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                m.set(i, j, &e);
            }
        }
        m
    }

    /// Build from integer entries reduced into the field.
    pub fn from_scalar_rows(field: &FiniteField, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(field, r, c, |i, j| field.from_u64(rows[i][j]))
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn deg(&self) -> usize {
        self.field.degree()
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> std::ops::Range<usize> {
        let d = self.deg();
        let start = (i * self.cols + j) * d;
        start..start + d
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.field.element(&self.data[self.idx(i, j)])
    }

    pub fn set(&mut self, i: usize, j: usize, value: &FieldElement) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        assert!(value.field() == &self.field, "mixed-field entry");
        let range = self.idx(i, j);
        self.data[range].copy_from_slice(value.coeffs());
    }

    pub fn entry_is_zero(&self, i: usize, j: usize) -> bool {
        FiniteField::slice_is_zero(&self.data[self.idx(i, j)])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.field == other.field, "mixed-field add");
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch in add"
        );
        let mut out = self.clone();
        let d = self.deg();
        for (chunk, rhs) in out.data.chunks_mut(d).zip(other.data.chunks(d)) {
            self.field.slice_add_assign(chunk, rhs);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        let d = self.deg();
        for chunk in out.data.chunks_mut(d) {
            let n = self.field.slice_neg(chunk);
            chunk.copy_from_slice(&n);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = self.clone();
        let d = self.deg();
        for chunk in out.data.chunks_mut(d) {
            let prod = self.field.slice_mul(chunk, c.coeffs());
            chunk.copy_from_slice(&prod);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.field == other.field, "mixed-field mul");
        assert!(self.cols == other.rows, "shape mismatch in mul");
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[self.idx(i, k)];
                if FiniteField::slice_is_zero(a) {
                    continue;
                }
                let a = a.to_vec();
                for j in 0..other.cols {
                    let b = &other.data[other.idx(k, j)];
                    if FiniteField::slice_is_zero(b) {
                        continue;
                    }
                    let prod = self.field.slice_mul(&a, b);
                    let range = out.idx(i, j);
                    self.field.slice_add_assign(&mut out.data[range], &prod);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let src = self.idx(i, j);
                let dst = out.idx(j, i);
                let v = self.data[src].to_vec();
                out.data[dst].copy_from_slice(&v);
            }
        }
        out
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert!(self.field == other.field && self.cols == other.cols, "vstack shape");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Place `self` left of `other`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert!(self.field == other.field && self.rows == other.rows, "hstack shape");
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(0, self.cols, other);
        out
    }

    /// Copy `block` into position with top-left corner (r0, c0).
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(block.field == self.field, "mixed-field paste");
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "paste overflow");
        for i in 0..block.rows {
            for j in 0..block.cols {
                let src = block.idx(i, j);
                let dst = self.idx(r0 + i, c0 + j);
                let v = block.data[src].to_vec();
                self.data[dst].copy_from_slice(&v);
            }
        }
    }

    /// Extract the sub-matrix with given row/column index sets.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Self::from_fn(&self.field, row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j])
        })
    }

    pub fn column(&self, j: usize) -> Self {
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &[j])
    }

    // ----- elimination -------------------------------------------------------

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.cols * self.deg();
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    fn scale_row(&mut self, r: usize, c: &[u64]) {
        let w = self.cols * self.deg();
        let d = self.deg();
        let row = &mut self.data[r * w..(r + 1) * w];
        for chunk in row.chunks_mut(d) {
            let prod = self.field.slice_mul(chunk, c);
            chunk.copy_from_slice(&prod);
        }
    }

    /// row[dst] += λ · row[src]
    fn row_axpy(&mut self, dst: usize, lambda: &[u64], src: usize) {
        let w = self.cols * self.deg();
        let d = self.deg();
        // Split borrows via raw copy of the source row.
        let src_row = self.data[src * w..(src + 1) * w].to_vec();
        let dst_row = &mut self.data[dst * w..(dst + 1) * w];
        for (dchunk, schunk) in dst_row.chunks_mut(d).zip(src_row.chunks(d)) {
            self.field.slice_axpy(dchunk, lambda, schunk);
        }
    }

    /// Reduced row echelon form plus pivot column indices.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // Find pivot in this column at or below `row`.
            let pivot_row = (row..m.rows).find(|&r| !m.entry_is_zero(r, col));
            let Some(pr) = pivot_row else { continue };
            m.swap_rows(row, pr);
            let pivot = m.data[m.idx(row, col)].to_vec();
            let inv = m.field.slice_inv(&pivot);
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r == row || m.entry_is_zero(r, col) {
                    continue;
                }
                let lambda = m.field.slice_neg(&m.data[m.idx(r, col)]);
                m.row_axpy(r, &lambda, row);
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical kernel basis, one *column* per basis vector: for each free
    /// column f of the rref, the vector with 1 at f and minus the rref
    /// entries at the pivot positions.
    pub fn kernel(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(&self.field, self.cols, free.len());
        let one = self.field.one();
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, &one);
            for (prow, &pcol) in pivots.iter().enumerate() {
                let v = r.get(prow, f).neg();
                out.set(pcol, k, &v);
            }
        }
        out
    }

    /// Solve `self · x = rhs` (any shape of rhs); `None` if inconsistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert!(self.rows == rhs.rows, "solve shape mismatch");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        // Inconsistent iff some pivot lands in the rhs block.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(&self.field, self.cols, rhs.cols);
        for (prow, &pcol) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                let v = r.get(prow, self.cols + j);
                x.set(pcol, j, &v);
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix; `None` when singular. (A singular
    /// `A·X = I` system is inconsistent, so `solve` already answers `None`.)
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        self.solve(&Self::identity(&self.field, self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Canonical basis of the column space, one column per basis vector,
    /// in rref-of-transpose form (pivot coordinates carry leading ones).
    pub fn column_space_basis(&self) -> Self {
        let (r, pivots) = self.transpose().rref();
        let mut out = Self::zeros(&self.field, self.rows, pivots.len());
        for k in 0..pivots.len() {
            for j in 0..self.rows {
                let v = r.get(k, j);
                out.set(j, k, &v);
            }
        }
        out
    }

    /// Minimal polynomial via per-vector Krylov annihilators and their lcm.
    pub fn min_poly(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "minimal polynomial needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let field = self.field.clone();
        if n == 0 {
            return Ok(Polynomial::one(&field));
        }
        let mut m = Polynomial::one(&field);
        for start in 0..n {
            if m.degree() == Some(n) {
                break;
            }
            // Krylov chain from e_start.
            let mut v = Self::zeros(&field, n, 1);
            v.set(start, 0, &field.one());
            let mut chain = v.clone();
            let mut current = v;
            let local = loop {
                let next = self.mul(&current);
                // Is `next` in the span of the chain? Solve chain · x = next.
                if let Some(x) = chain.solve(&next) {
                    // Local annihilator: x^k - Σ x_i x^i where k = chain cols.
                    let k = chain.cols();
                    let mut coeffs = Vec::with_capacity(k + 1);
                    for i in 0..k {
                        coeffs.push(x.get(i, 0).neg());
                    }
                    coeffs.push(field.one());
                    break Polynomial::from_coeffs(&field, coeffs);
                }
                chain = chain.hstack(&next);
                current = next;
            };
            // m = lcm(m, local)
            let g = m.gcd(&local);
            m = m.mul(&local.div_rem(&g).0).monic();
        }
        Ok(m)
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let d = self.deg();
        for i in 0..self.rows {
            for k in 0..d {
                let ia = (i * self.cols + a) * d + k;
                let ib = (i * self.cols + b) * d + k;
                self.data.swap(ia, ib);
            }
        }
    }

    /// col[dst] += λ · col[src]
    fn col_axpy(&mut self, dst: usize, lambda: &[u64], src: usize) {
        for i in 0..self.rows {
            let s = self.data[self.idx(i, src)].to_vec();
            let tmp = self.field.slice_mul(lambda, &s);
            let range = self.idx(i, dst);
            let field = self.field.clone();
            field.slice_add_assign(&mut self.data[range], &tmp);
        }
    }

    /// Invertible transforms L, R with `L · self · R = [[I_r, 0], [0, 0]]`.
    ///
    /// Gauss–Jordan that records its row operations in L and column
    /// operations in R. Inputs already in block-identity form come back with
    /// identity transforms.
    pub fn rank_normal_form(&self) -> RankNormalForm {
        let mut b = self.clone();
        let mut left = Self::identity(&self.field, self.rows);
        let mut right = Self::identity(&self.field, self.cols);
        let mut r = 0usize;
        while r < b.rows && r < b.cols {
            // First nonzero entry of the remaining block, scanned row-major.
            let pivot = (r..b.rows)
                .flat_map(|i| (r..b.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !b.entry_is_zero(i, j));
            let Some((pi, pj)) = pivot else { break };
            b.swap_rows(r, pi);
            left.swap_rows(r, pi);
            b.swap_cols(r, pj);
            right.swap_cols(r, pj);
            let inv = self.field.slice_inv(&b.data[b.idx(r, r)]);
            b.scale_row(r, &inv);
            left.scale_row(r, &inv);
            for i in 0..b.rows {
                if i == r || b.entry_is_zero(i, r) {
                    continue;
                }
                let lambda = self.field.slice_neg(&b.data[b.idx(i, r)]);
                b.row_axpy(i, &lambda, r);
                left.row_axpy(i, &lambda, r);
            }
            for j in r + 1..b.cols {
                if b.entry_is_zero(r, j) {
                    continue;
                }
                let lambda = self.field.slice_neg(&b.data[b.idx(r, j)]);
                b.col_axpy(j, &lambda, r);
                right.col_axpy(j, &lambda, r);
            }
            r += 1;
        }
        debug_assert!({
            let one = self.field.one();
            (0..b.rows).all(|i| {
                (0..b.cols).all(|j| {
                    if i == j && i < r {
                        b.get(i, j) == one
                    } else {
                        b.entry_is_zero(i, j)
                    }
                })
            })
        });
        RankNormalForm {
            rank: r,
            left,
            right,
        }
    }

    /// Evaluate a polynomial at this (square) matrix.
    pub fn eval_poly(&self, p: &Polynomial) -> Self {
        assert!(self.rows == self.cols, "eval_poly needs square");
        let n = self.rows;
        let mut acc = Self::zeros(&self.field, n, n);
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc);
            for i in 0..n {
                let v = acc.get(i, i).add(c);
                acc.set(i, i, &v);
            }
        }
        acc
    }
}

/// Result of [`Matrix::rank_normal_form`]: `left · A · right` is the
/// block-identity matrix of the recorded rank.
#[derive(Clone, Debug)]
pub struct RankNormalForm {
    pub rank: usize,
    pub left: Matrix,
    pub right: Matrix,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?} [", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FiniteField {
        FiniteField::prime(5).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = f5();
        assert_eq!(Matrix::identity(&f, 3).rank(), 3);
        assert_eq!(Matrix::zeros(&f, 2, 3).rank(), 0);
        // All-ones 2x2 has rank 1.
        assert_eq!(Matrix::from_scalar_rows(&f, &[vec![1, 1], vec![1, 1]]).rank(), 1);
    }

    #[test]
    fn rank_over_extension_with_cube_root() {
        // [[1, w], [w^2, 1]] with w a primitive cube root of unity has rank 1:
        // row 2 = w^2 · row 1.
        let f25 = FiniteField::extension(5, 2).unwrap();
        let w = f25
            .elements()
            .find(|e| !e.is_one() && e.pow(3).is_one())
            .expect("F_25 contains primitive cube roots");
        let m = Matrix::from_fn(&f25, 2, 2, |i, j| match (i, j) {
            (0, 0) | (1, 1) => f25.one(),
            (0, 1) => w.clone(),
            (1, 0) => w.mul(&w),
            _ => unreachable!(),
        });
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_dimensions() {
        let f = f5();
        assert_eq!(Matrix::identity(&f, 4).kernel().cols(), 0);
        assert_eq!(Matrix::zeros(&f, 2, 3).kernel().cols(), 3);
    }

    #[test]
    fn rank_plus_kernel_is_cols() {
        let f = f5();
        // A few fixed matrices; randomized versions live in the proptest suite.
        let samples = [
            Matrix::from_scalar_rows(&f, &[vec![1, 2, 3], vec![2, 4, 6]]),
            Matrix::from_scalar_rows(&f, &[vec![0, 1], vec![1, 0], vec![1, 1]]),
            Matrix::from_scalar_rows(&f, &[vec![3]]),
        ];
        for m in samples {
            let k = m.kernel();
            assert_eq!(m.rank() + k.cols(), m.cols());
            assert!(m.mul(&k).is_zero());
        }
    }

    #[test]
    fn solve_and_inverse() {
        let f = f5();
        let a = Matrix::from_scalar_rows(&f, &[vec![1, 2], vec![3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(&f, 2));
        assert_eq!(inv.mul(&a), Matrix::identity(&f, 2));
        let singular = Matrix::from_scalar_rows(&f, &[vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
        // Inconsistent system.
        let rhs = Matrix::from_scalar_rows(&f, &[vec![1], vec![3]]);
        assert!(singular.solve(&rhs).is_none());
    }

    #[test]
    fn min_poly_examples() {
        let f = f5();
        let id = Matrix::identity(&f, 3);
        assert_eq!(id.min_poly().unwrap(), Polynomial::from_scalar_coeffs(&f, &[4, 1]));
        let zero = Matrix::zeros(&f, 2, 2);
        assert_eq!(zero.min_poly().unwrap(), Polynomial::x(&f));
        let swap = Matrix::from_scalar_rows(&f, &[vec![0, 1], vec![1, 0]]);
        // x^2 - 1
        assert_eq!(
            swap.min_poly().unwrap(),
            Polynomial::from_scalar_coeffs(&f, &[4, 0, 1])
        );
        // Minimal polynomial annihilates.
        assert!(swap.eval_poly(&swap.min_poly().unwrap()).is_zero());
    }

    #[test]
    fn min_poly_differs_from_char_poly() {
        // Diagonal (1, 1): char poly (x-1)^2, min poly x-1.
        let f = f5();
        let m = Matrix::identity(&f, 2);
        assert_eq!(m.min_poly().unwrap().degree(), Some(1));
    }

    #[test]
    fn column_space_basis_is_canonical() {
        let f = f5();
        let a = Matrix::from_scalar_rows(&f, &[vec![1, 2], vec![2, 4], vec![0, 0]]);
        let b = Matrix::from_scalar_rows(&f, &[vec![2, 1], vec![4, 2], vec![0, 0]]);
        // Same column space, different generators → same canonical basis.
        assert_eq!(a.column_space_basis(), b.column_space_basis());
        assert_eq!(a.column_space_basis().cols(), 1);
    }

    #[test]
    fn rank_normal_form_examples() {
        let f = f5();
        // Already normal: identity transforms.
        let a = Matrix::from_scalar_rows(&f, &[vec![1, 0], vec![0, 0]]);
        let nf = a.rank_normal_form();
        assert_eq!(nf.rank, 1);
        assert_eq!(nf.left, Matrix::identity(&f, 2));
        assert_eq!(nf.right, Matrix::identity(&f, 2));
        // All-ones: rank 1 with genuine operations.
        let a = Matrix::from_scalar_rows(&f, &[vec![1, 1], vec![1, 1]]);
        let nf = a.rank_normal_form();
        assert_eq!(nf.rank, 1);
        let normal = nf.left.mul(&a).mul(&nf.right);
        assert_eq!(normal, Matrix::from_scalar_rows(&f, &[vec![1, 0], vec![0, 0]]));
        assert!(nf.left.is_invertible() && nf.right.is_invertible());
        // Invertible input: full rank.
        let a = Matrix::from_scalar_rows(&f, &[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.rank_normal_form().rank, 2);
        // Non-square.
        let a = Matrix::from_scalar_rows(&f, &[vec![0, 0, 2], vec![0, 0, 4]]);
        let nf = a.rank_normal_form();
        assert_eq!(nf.rank, 1);
        let normal = nf.left.mul(&a).mul(&nf.right);
        assert_eq!(normal, Matrix::from_scalar_rows(&f, &[vec![1, 0, 0], vec![0, 0, 0]]));
    }

    #[test]
    fn rref_reproducibility() {
        let f = f5();
        let a = Matrix::from_scalar_rows(&f, &[vec![2, 1, 4], vec![1, 3, 0]]);
        assert_eq!(a.rref(), a.rref());
    }
}
