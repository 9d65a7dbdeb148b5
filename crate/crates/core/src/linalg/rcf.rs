//! Frobenius (rational) canonical form.
//!
//! The invariant factors of a square matrix A are read off the Smith normal
//! form of the polynomial matrix xI - A over GF(q)[x], computed by explicit
//! pivoting on minimal-degree nonzero entries (ties broken by smallest row,
//! then column). Elementary divisors come from exhaustive trial-division
//! factorization of each invariant factor.

use crate::error::{Error, Result};
use crate::linalg::poly::PolyGF;
use crate::linalg::{companion_matrix, MatrixGF};

/// The complete similarity invariant of a square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcfReport {
    /// Monic nonunit diagonal entries of the Smith form of xI - A, each
    /// dividing the next; the last one is the minimal polynomial.
    pub invariant_factors: Vec<PolyGF>,
    /// Prime-power splitting of the invariant factors, as a sorted multiset
    /// of (irreducible, exponent) pairs.
    pub elementary_divisors: Vec<(PolyGF, u32)>,
    /// Block diagonal of the companion matrices of the invariant factors,
    /// in chain order. Similar to the input matrix.
    pub rcf: MatrixGF,
}

pub fn rational_canonical_form(a: &MatrixGF) -> Result<RcfReport> {
    if a.rows() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "rational canonical form of non-square {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let spec = a.spec().clone();

    // xI - A as a dense polynomial matrix.
    let x = PolyGF::x(&spec);
    let mut grid: Vec<Vec<PolyGF>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = PolyGF::constant(&spec, a.spec().neg(a.get(i, j)));
                    if i == j {
                        x.add(&c)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();

    smith_diagonalize(&mut grid)?;

    let mut invariant_factors: Vec<PolyGF> = (0..n)
        .map(|t| grid[t][t].clone())
        .filter(|d| d.degree().is_some_and(|deg| deg >= 1))
        .collect();
    invariant_factors.sort();

    let total_degree: usize = invariant_factors.iter().map(|f| f.degree().unwrap()).sum();
    debug_assert_eq!(total_degree, n, "invariant factor degrees must sum to n");
    debug_assert!(invariant_factors.windows(2).all(|w| w[0].divides(&w[1])));

    let mut elementary_divisors = Vec::new();
    for f in &invariant_factors {
        elementary_divisors.extend(f.factor()?);
    }
    elementary_divisors.sort();

    let mut rcf = MatrixGF::zeros(&spec, n, n);
    let mut offset = 0;
    for f in &invariant_factors {
        let block = companion_matrix(f)?;
        rcf.set_block(offset, offset, &block);
        offset += block.rows();
    }

    Ok(RcfReport {
        invariant_factors,
        elementary_divisors,
        rcf,
    })
}

/// In-place Smith diagonalization over GF(q)[x]. Leaves a diagonal of monic
/// polynomials d_0 | d_1 | ... (units included as the constant 1).
#[allow(clippy::needless_range_loop)]
fn smith_diagonalize(grid: &mut [Vec<PolyGF>]) -> Result<()> {
    let n = grid.len();
    for t in 0..n {
        loop {
            // Minimal-degree nonzero entry in the trailing submatrix, ties
            // by (row, col).
            let mut pivot: Option<(usize, usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if let Some(d) = grid[i][j].degree() {
                        if pivot.is_none_or(|(_, _, best)| d < best) {
                            pivot = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else {
                return Ok(()); // trailing block entirely zero
            };
            grid.swap(t, pi);
            for row in grid.iter_mut() {
                row.swap(t, pj);
            }

            // Clear the pivot column with polynomial division.
            for i in t + 1..n {
                if grid[i][t].is_zero() {
                    continue;
                }
                let (quo, _) = grid[i][t].div_rem(&grid[t][t])?;
                for j in t..n {
                    let delta = quo.mul(&grid[t][j]);
                    grid[i][j] = grid[i][j].sub(&delta);
                }
            }
            // Clear the pivot row.
            for j in t + 1..n {
                if grid[t][j].is_zero() {
                    continue;
                }
                let (quo, _) = grid[t][j].div_rem(&grid[t][t])?;
                for i in t..n {
                    let delta = quo.mul(&grid[i][t]);
                    grid[i][j] = grid[i][j].sub(&delta);
                }
            }

            let row_clear = (t + 1..n).all(|i| grid[i][t].is_zero());
            let col_clear = (t + 1..n).all(|j| grid[t][j].is_zero());
            if !row_clear || !col_clear {
                continue; // residues of smaller degree became the new pivot
            }

            // Divisibility fix: fold a violating row into row t and repeat.
            let violator = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| {
                    !grid[i][j].is_zero()
                        && !grid[i][j]
                            .rem(&grid[t][t])
                            .map(|r| r.is_zero())
                            .unwrap_or(true)
                });
            if let Some((vi, _)) = violator {
                for j in t..n {
                    grid[t][j] = grid[t][j].add(&grid[vi][j]);
                }
                continue;
            }

            grid[t][t] = grid[t][t].monic()?;
            break;
        }
    }
    Ok(())
}
