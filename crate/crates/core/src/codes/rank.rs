//! Rank-metric codes and their lifting to constant dimension codes.

use std::collections::HashSet;

use crate::action::gl_filter;
use crate::codes::{Provenance, SubspaceCode};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};
use crate::linalg::gl::GlStream;
use crate::linalg::MatrixGF;
use crate::space::Subspace;

/// A set of k x m matrices (k <= m) under the rank distance, kept sorted
/// and duplicate-free.
#[derive(Clone, Debug)]
pub struct RankMetricCode {
    spec: FieldRef,
    rows: usize,
    cols: usize,
    words: Vec<MatrixGF>,
}

impl PartialEq for RankMetricCode {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.spec == other.spec
            && self.words == other.words
    }
}

impl Eq for RankMetricCode {}

impl RankMetricCode {
    pub fn from_words(
        spec: &FieldRef,
        rows: usize,
        cols: usize,
        words: impl IntoIterator<Item = MatrixGF>,
    ) -> Result<RankMetricCode> {
        if rows > cols {
            return Err(Error::RankShape { k: rows, m: cols });
        }
        let mut words: Vec<MatrixGF> = words.into_iter().collect();
        for w in &words {
            if w.spec() != spec {
                return Err(Error::FieldMismatch);
            }
            if w.rows() != rows || w.cols() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "rank codeword is {}x{}, code shape is {}x{}",
                    w.rows(),
                    w.cols(),
                    rows,
                    cols
                )));
            }
        }
        words.sort();
        words.dedup();
        Ok(RankMetricCode {
            spec: spec.clone(),
            rows,
            cols,
            words,
        })
    }

    pub fn spec(&self) -> &FieldRef {
        &self.spec
    }

    /// (k, m) word shape.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn words(&self) -> &[MatrixGF] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &MatrixGF) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// The image code `{ X A : X in C }` under right multiplication.
    pub fn apply_right(&self, a: &MatrixGF) -> Result<RankMetricCode> {
        let words = self
            .words
            .iter()
            .map(|w| w.mul(a))
            .collect::<Result<Vec<_>>>()?;
        RankMetricCode::from_words(&self.spec, self.rows, self.cols, words)
    }

    /// Minimum rank distance over all unordered pairs; undefined below two
    /// words, never reported as 0.
    pub fn min_rank_distance(&self) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::UndefinedMinimum);
        }
        let mut min = usize::MAX;
        for (i, x) in self.words.iter().enumerate() {
            for y in &self.words[i + 1..] {
                min = min.min(rank_distance(x, y)?);
            }
        }
        Ok(min)
    }
}

/// `d_R(X, Y) = rank(X - Y)`.
pub fn rank_distance(x: &MatrixGF, y: &MatrixGF) -> Result<usize> {
    Ok(x.sub(y)?.rank())
}

/// Lifts a k x m rank-metric code to the constant dimension code
/// `{ rs[I_k A] }` in G_q(k, k + m); cardinality is preserved and the
/// minimum subspace distance doubles the minimum rank distance.
pub fn lift(code: &RankMetricCode) -> Result<SubspaceCode> {
    let (k, m) = code.shape();
    let identity = MatrixGF::identity(code.spec(), k);
    let words = code
        .words()
        .iter()
        .map(|a| Ok(Subspace::from_rows(identity.hstack(a)?)))
        .collect::<Result<Vec<_>>>()?;
    let lifted = SubspaceCode::from_words(code.spec(), k + m, words, Provenance::Lifted { k, m })?;
    debug_assert_eq!(lifted.len(), code.len());
    Ok(lifted)
}

/// The right-multiplication automorphisms `{ A in GL_m(q) : C A = C }`, by
/// brute-force filter of the GL stream. Sorted canonically.
pub fn rank_automorphisms(code: &RankMetricCode, cap: u64) -> Result<Vec<MatrixGF>> {
    let (_, m) = code.shape();
    let stream = GlStream::new(code.spec(), m, cap)?;
    let keys: HashSet<Vec<FieldElement>> =
        code.words().iter().map(|w| w.entries().to_vec()).collect();
    let words = code.words().to_vec();
    let mut hits = gl_filter(&stream, |a| {
        words.iter().all(|x| {
            x.mul(a)
                .map(|img| keys.contains(img.entries()))
                .unwrap_or(false)
        })
    });
    hits.sort();
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::analyze;
    use crate::field::FieldSpec;
    use crate::space::Metric;
    use crate::testrng::SplitMix;
    use crate::DEFAULT_CAP;

    fn gf2() -> FieldRef {
        FieldSpec::make(2, 1, None).unwrap()
    }

    fn mat(spec: &FieldRef, rows: &[&[u32]]) -> MatrixGF {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        MatrixGF::from_rows(spec, &rows).unwrap()
    }

    /// The four-word binary 2x2 code with minimum rank distance 1 whose
    /// lifted automorphism group has order 192.
    pub(crate) fn four_word_code(spec: &FieldRef) -> RankMetricCode {
        RankMetricCode::from_words(
            spec,
            2,
            2,
            vec![
                mat(spec, &[&[1, 0], &[0, 1]]),
                mat(spec, &[&[1, 1], &[0, 1]]),
                mat(spec, &[&[0, 1], &[0, 1]]),
                mat(spec, &[&[0, 0], &[0, 1]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rank_distance_cases() {
        let f2 = gf2();
        let x = mat(&f2, &[&[1, 0], &[0, 1]]);
        assert_eq!(rank_distance(&x, &x).unwrap(), 0);
        let y = mat(&f2, &[&[1, 1], &[0, 1]]);
        assert_eq!(rank_distance(&x, &y).unwrap(), 1);
        let z = MatrixGF::zeros(&f2, 2, 2);
        assert_eq!(rank_distance(&x, &z).unwrap(), 2);
        let bad = MatrixGF::zeros(&f2, 2, 3);
        assert!(rank_distance(&x, &bad).is_err());
    }

    #[test]
    fn shape_constraint() {
        let f2 = gf2();
        assert_eq!(
            RankMetricCode::from_words(&f2, 3, 2, vec![]).unwrap_err(),
            Error::RankShape { k: 3, m: 2 }
        );
    }

    #[test]
    fn four_word_code_profile() {
        let f2 = gf2();
        let code = four_word_code(&f2);
        assert_eq!(code.len(), 4);
        assert_eq!(code.min_rank_distance().unwrap(), 1);
    }

    #[test]
    fn lift_doubles_the_minimum_distance() {
        let f2 = gf2();
        let code = four_word_code(&f2);
        let lifted = lift(&code).unwrap();
        assert_eq!(lifted.len(), 4);
        assert_eq!(lifted.ambient(), 4);
        assert_eq!(lifted.min_distance(Metric::Subspace).unwrap(), 2);
        assert_eq!(analyze(&lifted).unwrap().subspace_distance.min, Some(2));
        // Every lifted word carries the identity in its leading block.
        for w in lifted.words() {
            assert_eq!(w.dim(), 2);
            assert!(w.basis().submatrix(0, 0, 2, 2).is_identity());
        }
        // The lifted code is not a spread: 4 * 3 != 15.
        assert!(!crate::codes::is_spread(&lifted).unwrap());
    }

    #[test]
    fn lift_of_singleton() {
        let f2 = gf2();
        let code = RankMetricCode::from_words(&f2, 2, 2, vec![MatrixGF::zeros(&f2, 2, 2)]).unwrap();
        let lifted = lift(&code).unwrap();
        assert_eq!(lifted.len(), 1);
        let expected = Subspace::from_rows(mat(&f2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert!(lifted.contains(&expected));
        assert_eq!(
            code.min_rank_distance().unwrap_err(),
            Error::UndefinedMinimum
        );
        assert_eq!(
            lifted.min_distance(Metric::Subspace).unwrap_err(),
            Error::UndefinedMinimum
        );
    }

    #[test]
    fn rank_automorphisms_of_the_four_word_code() {
        let f2 = gf2();
        let code = four_word_code(&f2);
        let auts = rank_automorphisms(&code, DEFAULT_CAP).unwrap();
        let expected = vec![mat(&f2, &[&[1, 0], &[0, 1]]), mat(&f2, &[&[1, 1], &[0, 1]])];
        assert_eq!(auts, expected);
        // Identity present, order divides |GL_2(2)| = 6.
        assert!(auts.iter().any(MatrixGF::is_identity));
        assert_eq!(6 % auts.len(), 0);
    }

    #[test]
    fn diagonal_embedding_of_rank_automorphisms_stabilizes_the_lift() {
        use crate::action::{is_automorphism, SemilinearMap};
        let f2 = gf2();
        let code = four_word_code(&f2);
        let lifted = lift(&code).unwrap();
        let auts = rank_automorphisms(&code, DEFAULT_CAP).unwrap();
        // diag(I, A) is an automorphism of the lift exactly when A is a
        // rank automorphism; exhaustive over GL_2(2).
        let stream = GlStream::new(&f2, 2, DEFAULT_CAP).unwrap();
        for a in stream.iter() {
            let mut g = MatrixGF::identity(&f2, 4);
            g.set_block(2, 2, &a);
            let lifted_aut = is_automorphism(&lifted, &SemilinearMap::linear(g).unwrap()).unwrap();
            assert_eq!(lifted_aut, auts.contains(&a));
        }
    }

    #[test]
    fn block_diagonal_maps_send_lifts_to_lifts() {
        use crate::action::{act, SemilinearMap};
        // The image of a lifted code under diag(I_k, A) is again a lifted
        // code with the same parameters, for every invertible A.
        let f2 = gf2();
        let code = four_word_code(&f2);
        let lifted = lift(&code).unwrap();
        for a in GlStream::new(&f2, 2, DEFAULT_CAP).unwrap().iter() {
            let mut g = MatrixGF::identity(&f2, 4);
            g.set_block(2, 2, &a);
            let g = SemilinearMap::linear(g).unwrap();
            let mut image_words = Vec::new();
            for w in lifted.words() {
                let img = act(w, &g).unwrap();
                assert!(img.basis().submatrix(0, 0, 2, 2).is_identity());
                image_words.push(img.basis().submatrix(0, 2, 2, 2));
            }
            let image_rank = RankMetricCode::from_words(&f2, 2, 2, image_words).unwrap();
            assert_eq!(image_rank.len(), code.len());
            assert_eq!(
                image_rank.min_rank_distance().unwrap(),
                code.min_rank_distance().unwrap()
            );
            // Direct route: the image rank code is C_R A.
            assert_eq!(image_rank, code.apply_right(&a).unwrap());
        }
    }

    #[test]
    fn random_lifts_double_distance() {
        let mut rng = SplitMix::new(4242);
        for p in [2u32, 3] {
            let spec = FieldSpec::make(p, 1, None).unwrap();
            for _ in 0..10 {
                let size = 2 + rng.below(4) as usize;
                let words: Vec<MatrixGF> = (0..size)
                    .map(|_| {
                        let rows: Vec<Vec<u32>> = (0..2)
                            .map(|_| (0..2).map(|_| rng.below(p as u64) as u32).collect())
                            .collect();
                        MatrixGF::from_rows(&spec, &rows).unwrap()
                    })
                    .collect();
                let code = RankMetricCode::from_words(&spec, 2, 2, words).unwrap();
                if code.len() < 2 {
                    continue;
                }
                let lifted = lift(&code).unwrap();
                assert_eq!(
                    lifted.min_distance(Metric::Subspace).unwrap(),
                    2 * code.min_rank_distance().unwrap()
                );
            }
        }
    }
}
