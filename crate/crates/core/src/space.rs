//! Points of the projective geometry PG(q, n): canonical subspaces of
//! F_q^n of every dimension, their lattice operations and the two channel
//! metrics.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::linalg::MatrixGF;

/// Which distance on PG(q, n) to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// dim(U + V) - dim(U ∩ V)
    Subspace,
    /// max(dim U, dim V) - dim(U ∩ V)
    Injection,
}

/// A subspace of F_q^n, stored as its unique reduced-row-echelon basis.
///
/// The representation is canonical: two values are equal exactly when they
/// are the same subspace, so hashing and ordering work on the flattened
/// entry sequence of the basis. `dim = 0` encodes the zero subspace (a
/// 0 x n basis) and `dim = n` the full space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: MatrixGF,
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    /// Lexicographic on the flattened RREF entries, then shape: the
    /// canonical order behind code serialization and the choice of a
    /// distinguished codeword.
    fn cmp(&self, other: &Self) -> Ordering {
        self.basis
            .entries()
            .cmp(other.basis.entries())
            .then_with(|| self.basis.rows().cmp(&other.basis.rows()))
            .then_with(|| self.basis.cols().cmp(&other.basis.cols()))
    }
}

impl Subspace {
    /// Canonicalizes the row space of an arbitrary matrix: RREF, then the
    /// nonzero rows. Rows may be dependent.
    pub fn from_rows(matrix: MatrixGF) -> Subspace {
        let r = matrix.rref();
        Subspace {
            basis: r.matrix.top_rows(r.rank),
        }
    }

    /// The zero subspace of F_q^n.
    pub fn zero(spec: &FieldRef, ambient: usize) -> Subspace {
        Subspace {
            basis: MatrixGF::zeros(spec, 0, ambient),
        }
    }

    /// The full space F_q^n.
    pub fn full(spec: &FieldRef, ambient: usize) -> Subspace {
        Subspace {
            basis: MatrixGF::identity(spec, ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn spec(&self) -> &FieldRef {
        self.basis.spec()
    }

    /// The canonical RREF basis, one row per dimension.
    pub fn basis(&self) -> &MatrixGF {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.spec() != other.spec() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// U + V: the row space of the stacked bases.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_rows(self.basis.vstack(&other.basis)?))
    }

    /// U ∩ V via the left kernel of the stacked bases: a row (x, y) with
    /// x B_U + y B_V = 0 projects to the intersection vector x B_U, and
    /// every intersection vector arises this way exactly once, so the
    /// dimension formula dim U + dim V = dim(U+V) + dim(U∩V) holds by
    /// construction.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        let kernel = stacked.left_kernel();
        let x_part = kernel.submatrix(0, 0, kernel.rows(), self.dim());
        Ok(Subspace::from_rows(x_part.mul(&self.basis)?))
    }

    /// d_S or d_I between two points of PG(q, n). Both reduce to the single
    /// rank of the stacked bases:
    /// d_S = 2 dim(U+V) - dim U - dim V, d_I = dim(U+V) - min(dim U, dim V).
    pub fn distance(&self, other: &Subspace, metric: Metric) -> Result<usize> {
        self.check_compatible(other)?;
        let sum_dim = self.basis.vstack(&other.basis)?.rank();
        Ok(match metric {
            Metric::Subspace => 2 * sum_dim - self.dim() - other.dim(),
            Metric::Injection => sum_dim - self.dim().min(other.dim()),
        })
    }
}
