//! Dense matrices over a finite field, plus the GL(n, q) stream, polynomial
//! arithmetic and the rational canonical form built on top of them.

pub mod gl;
pub mod poly;
pub mod rcf;

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};
use poly::PolyGF;

/// A dense rows x cols matrix with entries in a fixed field.
#[derive(Clone)]
pub struct MatrixGF {
    spec: FieldRef,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Outcome of a reduced-row-echelon-form computation.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: MatrixGF,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl PartialEq for MatrixGF {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
            && (std::sync::Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec)
    }
}

impl Eq for MatrixGF {}

impl Hash for MatrixGF {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.entries.hash(state);
        self.spec.hash(state);
    }
}

impl PartialOrd for MatrixGF {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MatrixGF {
    /// Canonical order by shape, then entry indices: the sort key used for
    /// deterministic serialization. Only meaningful within one field.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rows, self.cols)
            .cmp(&(other.rows, other.cols))
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MatrixGF {}x{} over {} ",
            self.rows, self.cols, self.spec
        )?;
        f.debug_list()
            .entries(
                (0..self.rows).map(|i| self.row(i).iter().map(|e| e.index()).collect::<Vec<_>>()),
            )
            .finish()
    }
}

impl fmt::Display for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl MatrixGF {
    pub fn zeros(spec: &FieldRef, rows: usize, cols: usize) -> Self {
        MatrixGF {
            spec: spec.clone(),
            rows,
            cols,
            entries: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(spec: &FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// A scalar matrix `lambda * I`.
    pub fn scalar(spec: &FieldRef, n: usize, lambda: FieldElement) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.set(i, i, lambda);
        }
        m
    }

    /// Builds a matrix from rows of element indices, validating each index.
    pub fn from_rows(spec: &FieldRef, rows: &[Vec<u32>]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(height * width);
        for row in rows {
            if row.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "ragged rows: expected width {width}, found {}",
                    row.len()
                )));
            }
            for &idx in row {
                entries.push(spec.element(idx)?);
            }
        }
        Ok(MatrixGF {
            spec: spec.clone(),
            rows: height,
            cols: width,
            entries,
        })
    }

    pub(crate) fn from_entries(
        spec: &FieldRef,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        MatrixGF {
            spec: spec.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn spec(&self) -> &FieldRef {
        &self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: FieldElement) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    self.get(i, j)
                        == if i == j {
                            FieldElement::ONE
                        } else {
                            FieldElement::ZERO
                        }
                })
            })
    }

    fn check_same_spec(&self, other: &Self) -> Result<()> {
        if std::sync::Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "add: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.spec.add(a, b))
            .collect();
        Ok(MatrixGF {
            spec: self.spec.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "sub: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.spec.sub(a, b))
            .collect();
        Ok(MatrixGF {
            spec: self.spec.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = vec![FieldElement::ZERO; self.rows * other.cols];
        mat_mul_into(
            &self.spec,
            &self.entries,
            self.rows,
            self.cols,
            &other.entries,
            other.cols,
            &mut entries,
        );
        Ok(MatrixGF {
            spec: self.spec.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn scalar_mul(&self, lambda: FieldElement) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|&a| self.spec.mul(a, lambda))
            .collect();
        MatrixGF {
            spec: self.spec.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(&self.spec, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Square-and-multiply power of a square matrix.
    pub fn pow(&self, mut e: u64) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "pow of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let mut acc = Self::identity(&self.spec, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Applies `x -> x^(p^j)` to every entry; the exponent reduces mod m.
    pub fn frobenius_entrywise(&self, j: u32) -> Self {
        let phi = self.spec.frobenius(j);
        if phi.is_identity() {
            return self.clone();
        }
        let entries = self
            .entries
            .iter()
            .map(|&a| self.spec.frobenius_apply(phi, a))
            .collect();
        MatrixGF {
            spec: self.spec.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn rref(&self) -> Rref {
        let mut entries = self.entries.clone();
        let (rank, pivots) = rref_in_place(&self.spec, &mut entries, self.rows, self.cols);
        Rref {
            matrix: MatrixGF {
                spec: self.spec.clone(),
                rows: self.rows,
                cols: self.cols,
                entries,
            },
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut entries = self.entries.clone();
        rref_in_place(&self.spec, &mut entries, self.rows, self.cols).0
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "inverse of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Self::zeros(&self.spec, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, FieldElement::ONE);
        }
        let (rank, pivots) = rref_in_place(&self.spec, &mut aug.entries, n, 2 * n);
        // The identity block keeps the augmented rank at n; A is invertible
        // exactly when every pivot lands in the left block.
        if rank < n || pivots.last().is_some_and(|&c| c >= n) {
            return Err(Error::SingularMatrix);
        }
        let mut out = Self::zeros(&self.spec, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(out)
    }

    /// Rows spanning the right kernel `{ v : M v^T = 0 }`, read off the RREF
    /// free columns. Returns a (cols - rank) x cols matrix.
    pub fn null_space(&self) -> Self {
        let Rref {
            matrix: r,
            rank,
            pivots,
        } = self.rref();
        let n = self.cols;
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; n];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Self::zeros(&self.spec, n - rank, n);
        let free_cols = (0..n).filter(|&c| !is_pivot[c]);
        for (row_idx, free) in free_cols.enumerate() {
            basis.set(row_idx, free, FieldElement::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(row_idx, pc, self.spec.neg(r.get(pr, free)));
            }
        }
        basis
    }

    /// Rows spanning the left kernel `{ x : x M = 0 }`.
    pub fn left_kernel(&self) -> Self {
        self.transpose().null_space()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack: {} vs {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = Self::zeros(&self.spec, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        Ok(out)
    }

    /// Vertical concatenation of `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack: {} vs {} cols",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(MatrixGF {
            spec: self.spec.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(&self.spec, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j));
            }
        }
        out
    }

    /// Keeps the first `rows` rows.
    pub fn top_rows(&self, rows: usize) -> Self {
        MatrixGF {
            spec: self.spec.clone(),
            rows,
            cols: self.cols,
            entries: self.entries[..rows * self.cols].to_vec(),
        }
    }

    /// Order of an invertible matrix in GL(n, q), by iterated powering;
    /// the cycle is capped at the group order.
    pub fn multiplicative_order(&self) -> Result<u64> {
        if !self.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        let bound = gl::gl_order(self.spec.order() as u64, self.rows);
        let mut acc = self.clone();
        let mut ord: u64 = 1;
        while !acc.is_identity() {
            acc = acc.mul(self)?;
            ord += 1;
            if (ord as u128) > bound {
                unreachable!("element order divides the group order");
            }
        }
        Ok(ord)
    }
}

/// The companion matrix of a monic polynomial of degree k >= 1: ones on the
/// superdiagonal of rows 0..k-1 and last row `(-c_0, ..., -c_{k-1})`. Its
/// characteristic polynomial is the input.
pub fn companion_matrix(p: &PolyGF) -> Result<MatrixGF> {
    let k = match p.degree() {
        Some(k) if k >= 1 && p.is_monic() => k,
        _ => return Err(Error::NotMonic),
    };
    let spec = p.spec().clone();
    let mut m = MatrixGF::zeros(&spec, k, k);
    for i in 0..k - 1 {
        m.set(i, i + 1, FieldElement::ONE);
    }
    for j in 0..k {
        m.set(k - 1, j, spec.neg(p.coeff(j)));
    }
    Ok(m)
}

/// In-place Gauss-Jordan elimination to reduced row echelon form on a raw
/// row-major buffer. Returns the rank and the pivot columns. This is the
/// single elimination routine behind `rref`, `rank`, `inverse` and the hot
/// stabilizer search paths.
pub(crate) fn rref_in_place(
    spec: &FieldRef,
    data: &mut [FieldElement],
    rows: usize,
    cols: usize,
) -> (usize, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // First nonzero entry at or below row r.
        let Some(pivot_row) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if pivot_row != r {
            for j in 0..cols {
                data.swap(r * cols + j, pivot_row * cols + j);
            }
        }
        let inv = spec
            .inv(data[r * cols + c])
            .expect("pivot is nonzero by construction");
        if inv != FieldElement::ONE {
            for j in c..cols {
                data[r * cols + j] = spec.mul(data[r * cols + j], inv);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = data[i * cols + c];
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                let scaled = spec.mul(factor, data[r * cols + j]);
                data[i * cols + j] = spec.sub(data[i * cols + j], scaled);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, pivots)
}

/// Row-major matrix product `out = a * b` on raw buffers; `out` must have
/// length `a_rows * b_cols`.
pub(crate) fn mat_mul_into(
    spec: &FieldRef,
    a: &[FieldElement],
    a_rows: usize,
    a_cols: usize,
    b: &[FieldElement],
    b_cols: usize,
    out: &mut [FieldElement],
) {
    out.fill(FieldElement::ZERO);
    for i in 0..a_rows {
        for t in 0..a_cols {
            let coeff = a[i * a_cols + t];
            if coeff.is_zero() {
                continue;
            }
            let brow = &b[t * b_cols..(t + 1) * b_cols];
            let orow = &mut out[i * b_cols..(i + 1) * b_cols];
            for j in 0..b_cols {
                orow[j] = spec.add(orow[j], spec.mul(coeff, brow[j]));
            }
        }
    }
}
