//! Built-in reference fixtures: the two small Desarguesian spreads with
//! published automorphism generator sets, and the four-word rank-metric
//! code whose lift has automorphism group of order 192. The verification
//! harness reconstructs everything from these, so it needs no input files.

use subcode::{
    desarguesian_spread, FieldRef, FieldSpec, MatrixGF, PolyGF, RankMetricCode, SemilinearMap,
    Subspace, SubspaceCode,
};

pub fn gf2() -> FieldRef {
    FieldSpec::make(2, 1, None).expect("GF(2)")
}

pub fn gf3() -> FieldRef {
    FieldSpec::make(3, 1, None).expect("GF(3)")
}

pub fn mat(spec: &FieldRef, rows: &[&[u32]]) -> MatrixGF {
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    MatrixGF::from_rows(spec, &rows).expect("fixture matrix")
}

fn lin(spec: &FieldRef, rows: &[&[u32]]) -> SemilinearMap {
    SemilinearMap::linear(mat(spec, rows)).expect("fixture generator")
}

/// The binary 2-in-4 spread built from x^2 + x + 1.
pub fn binary_spread() -> SubspaceCode {
    let f2 = gf2();
    let poly = PolyGF::from_indices(&f2, &[1, 1, 1]).unwrap();
    desarguesian_spread(&f2, 2, 4, &poly).unwrap()
}

/// Its five codewords, written out explicitly.
pub fn binary_spread_words() -> Vec<Subspace> {
    let f2 = gf2();
    [
        [[1u32, 0, 0, 0], [0, 1, 0, 0]], // [I | 0]
        [[1, 0, 1, 0], [0, 1, 0, 1]],    // [I | I]
        [[1, 0, 0, 1], [0, 1, 1, 1]],    // [I | P]
        [[1, 0, 1, 1], [0, 1, 1, 0]],    // [I | P^2]
        [[0, 0, 1, 0], [0, 0, 0, 1]],    // [0 | I]
    ]
    .iter()
    .map(|rows| Subspace::from_rows(mat(&f2, &[&rows[0], &rows[1]])))
    .collect()
}

/// The published generating set of its automorphism group: block swap,
/// companion-block scaling, companion-block shear, and the blockwise
/// subfield automorphism.
pub fn binary_spread_generators() -> Vec<SemilinearMap> {
    let f2 = gf2();
    vec![
        lin(
            &f2,
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
        ),
        lin(
            &f2,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 1]],
        ),
        lin(
            &f2,
            &[&[1, 0, 0, 1], &[0, 1, 1, 1], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        ),
        lin(
            &f2,
            &[&[1, 0, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 1, 1]],
        ),
    ]
}

/// The ternary 2-in-4 spread built from x^2 + x + 2.
pub fn ternary_spread() -> SubspaceCode {
    let f3 = gf3();
    let poly = PolyGF::from_indices(&f3, &[2, 1, 1]).unwrap();
    desarguesian_spread(&f3, 2, 4, &poly).unwrap()
}

pub fn ternary_spread_generators() -> Vec<SemilinearMap> {
    let f3 = gf3();
    vec![
        lin(
            &f3,
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
        ),
        lin(
            &f3,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 2]],
        ),
        lin(
            &f3,
            &[&[1, 0, 0, 1], &[0, 1, 1, 2], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        ),
        lin(
            &f3,
            &[&[1, 0, 0, 0], &[2, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 2, 2]],
        ),
    ]
}

/// The published generating set of the lifted code's order-192
/// automorphism group.
pub fn lifted_code_generators() -> Vec<SemilinearMap> {
    let f2 = gf2();
    vec![
        lin(
            &f2,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]],
        ),
        lin(
            &f2,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 1]],
        ),
        lin(
            &f2,
            &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 1, 1, 1]],
        ),
        lin(
            &f2,
            &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]],
        ),
    ]
}

/// The four-word binary 2x2 rank-metric code with minimum rank distance 1.
pub fn four_word_rank_code() -> RankMetricCode {
    let f2 = gf2();
    RankMetricCode::from_words(
        &f2,
        2,
        2,
        vec![
            mat(&f2, &[&[1, 0], &[0, 1]]),
            mat(&f2, &[&[1, 1], &[0, 1]]),
            mat(&f2, &[&[0, 1], &[0, 1]]),
            mat(&f2, &[&[0, 0], &[0, 1]]),
        ],
    )
    .unwrap()
}
