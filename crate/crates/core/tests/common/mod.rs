//! Shared helpers for the integration suites: a deterministic RNG, random
//! samplers over fields / matrices / subspaces, and the fixture codes with
//! known automorphism groups.

#![allow(dead_code)]

use std::collections::HashSet;

use subcode::{
    desarguesian_spread, FieldRef, FieldSpec, MatrixGF, PolyGF, RankMetricCode, SemilinearMap,
    Subspace, SubspaceCode,
};

/// SplitMix64: deterministic across platforms, seedable per test.
pub struct SplitMix(u64);

impl SplitMix {
    pub fn new(seed: u64) -> SplitMix {
        SplitMix(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

pub fn gf(p: u32, m: u32) -> FieldRef {
    FieldSpec::make(p, m, None).unwrap()
}

pub fn poly(spec: &FieldRef, indices: &[u32]) -> PolyGF {
    PolyGF::from_indices(spec, indices).unwrap()
}

pub fn mat(spec: &FieldRef, rows: &[&[u32]]) -> MatrixGF {
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    MatrixGF::from_rows(spec, &rows).unwrap()
}

pub fn lin(spec: &FieldRef, rows: &[&[u32]]) -> SemilinearMap {
    SemilinearMap::linear(mat(spec, rows)).unwrap()
}

pub fn random_matrix(spec: &FieldRef, rows: usize, cols: usize, rng: &mut SplitMix) -> MatrixGF {
    let q = spec.order() as u64;
    let rows: Vec<Vec<u32>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.below(q) as u32).collect())
        .collect();
    MatrixGF::from_rows(spec, &rows).unwrap()
}

pub fn random_invertible(spec: &FieldRef, n: usize, rng: &mut SplitMix) -> MatrixGF {
    loop {
        let m = random_matrix(spec, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A uniform-ish random point of PG(q, n): random dimension, random rows.
pub fn random_subspace(spec: &FieldRef, ambient: usize, rng: &mut SplitMix) -> Subspace {
    let k = rng.below(ambient as u64 + 1) as usize;
    if k == 0 {
        return Subspace::zero(spec, ambient);
    }
    Subspace::from_rows(random_matrix(spec, k, ambient, rng))
}

pub fn random_semilinear(spec: &FieldRef, n: usize, rng: &mut SplitMix) -> SemilinearMap {
    let mat = random_invertible(spec, n, rng);
    let j = rng.below(spec.degree() as u64) as u32;
    SemilinearMap::new(mat, j).unwrap()
}

/// Every k-dimensional subspace of F_q^n, by exhausting all k x n matrices
/// and canonicalizing. Only sensible for tiny parameters.
pub fn enumerate_grassmannian(spec: &FieldRef, k: usize, n: usize) -> Vec<Subspace> {
    let q = spec.order() as u64;
    let total = q.pow((k * n) as u32);
    let mut seen = HashSet::new();
    for idx in 0..total {
        let mut rest = idx;
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let d = (rest % q) as u32;
                        rest /= q;
                        d
                    })
                    .collect()
            })
            .collect();
        let s = Subspace::from_rows(MatrixGF::from_rows(spec, &rows).unwrap());
        if s.dim() == k {
            seen.insert(s);
        }
    }
    let mut out: Vec<Subspace> = seen.into_iter().collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Fixture codes.

/// The binary 2-in-4 spread built from x^2 + x + 1.
pub fn binary_spread(spec: &FieldRef) -> SubspaceCode {
    desarguesian_spread(spec, 2, 4, &poly(spec, &[1, 1, 1])).unwrap()
}

/// Its four published automorphism generators: block swap, companion-block
/// scaling, companion-block shear, and the blockwise subfield automorphism.
pub fn binary_spread_generators(spec: &FieldRef) -> Vec<SemilinearMap> {
    vec![
        lin(
            spec,
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
        ),
        lin(
            spec,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 1]],
        ),
        lin(
            spec,
            &[&[1, 0, 0, 1], &[0, 1, 1, 1], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        ),
        lin(
            spec,
            &[&[1, 0, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 1, 1]],
        ),
    ]
}

/// The ternary 2-in-4 spread built from x^2 + x + 2.
pub fn ternary_spread(spec: &FieldRef) -> SubspaceCode {
    desarguesian_spread(spec, 2, 4, &poly(spec, &[2, 1, 1])).unwrap()
}

pub fn ternary_spread_generators(spec: &FieldRef) -> Vec<SemilinearMap> {
    vec![
        lin(
            spec,
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
        ),
        lin(
            spec,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 2]],
        ),
        lin(
            spec,
            &[&[1, 0, 0, 1], &[0, 1, 1, 2], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        ),
        lin(
            spec,
            &[&[1, 0, 0, 0], &[2, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 2, 2]],
        ),
    ]
}

/// The four-word binary 2x2 rank-metric code with minimum rank distance 1.
pub fn four_word_rank_code(spec: &FieldRef) -> RankMetricCode {
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
