use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use subcode::{
    analyze, automorphism_group, desarguesian_spread, AutMode, AutStrategy, FieldSpec, GlStream,
    GroupClosure, MatrixGF, PolyGF, SemilinearMap, Subspace, DEFAULT_CAP,
};

fn field_mul(c: &mut Criterion) {
    let f9 = FieldSpec::make(3, 2, Some(&[2, 1])).unwrap();
    let elements: Vec<_> = f9.elements().collect();
    c.bench_function("gf9_mul_table", |b| {
        b.iter(|| {
            let mut acc = f9.one();
            for &x in &elements[1..] {
                acc = f9.mul(black_box(acc), black_box(x));
            }
            acc
        })
    });
}

fn rref_4x8(c: &mut Criterion) {
    let f3 = FieldSpec::make(3, 1, None).unwrap();
    let rows: Vec<Vec<u32>> = (0..4)
        .map(|i| (0..8).map(|j| ((i * 7 + j * 5 + 3) % 3) as u32).collect())
        .collect();
    let m = MatrixGF::from_rows(&f3, &rows).unwrap();
    c.bench_function("rref_4x8_gf3", |b| b.iter(|| black_box(&m).rref().rank));
}

fn enumerate_gl_4_2(c: &mut Criterion) {
    let f2 = FieldSpec::make(2, 1, None).unwrap();
    let stream = GlStream::new(&f2, 4, DEFAULT_CAP).unwrap();
    c.bench_function("enumerate_gl_4_2", |b| b.iter(|| stream.iter().count()));
}

fn spread_and_analyze(c: &mut Criterion) {
    let f3 = FieldSpec::make(3, 1, None).unwrap();
    let poly = PolyGF::from_indices(&f3, &[2, 1, 1]).unwrap();
    c.bench_function("spread_3_2_4_construct", |b| {
        b.iter(|| desarguesian_spread(&f3, 2, 4, &poly).unwrap().len())
    });
    let code = desarguesian_spread(&f3, 2, 4, &poly).unwrap();
    c.bench_function("analyze_spread_3_2_4", |b| {
        b.iter(|| analyze(black_box(&code)).unwrap().cardinality)
    });
}

fn act_on_subspace(c: &mut Criterion) {
    let f3 = FieldSpec::make(3, 1, None).unwrap();
    let u = Subspace::from_rows(
        MatrixGF::from_rows(&f3, &[vec![1, 0, 2, 1], vec![0, 1, 1, 1]]).unwrap(),
    );
    let g = SemilinearMap::linear(
        MatrixGF::from_rows(
            &f3,
            &[
                vec![1, 1, 0, 2],
                vec![0, 1, 0, 0],
                vec![2, 0, 1, 0],
                vec![0, 0, 1, 1],
            ],
        )
        .unwrap(),
    )
    .unwrap();
    c.bench_function("act_2_in_4_gf3", |b| {
        b.iter(|| subcode::act(black_box(&u), &g).unwrap())
    });
}

fn closure_360(c: &mut Criterion) {
    let f2 = FieldSpec::make(2, 1, None).unwrap();
    let gens: Vec<SemilinearMap> = [
        vec![
            vec![0u32, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
        ],
        vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 1],
        ],
        vec![
            vec![1, 0, 0, 1],
            vec![0, 1, 1, 1],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ],
        vec![
            vec![1, 0, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 1, 1],
        ],
    ]
    .iter()
    .map(|rows| SemilinearMap::linear(MatrixGF::from_rows(&f2, rows).unwrap()).unwrap())
    .collect();
    c.bench_function("closure_order_360", |b| {
        b.iter(|| {
            GroupClosure::generate(&f2, 4, &gens, DEFAULT_CAP)
                .unwrap()
                .order()
        })
    });
}

fn brute_aut_gl_4_2(c: &mut Criterion) {
    let f2 = FieldSpec::make(2, 1, None).unwrap();
    let poly = PolyGF::from_indices(&f2, &[1, 1, 1]).unwrap();
    let code = desarguesian_spread(&f2, 2, 4, &poly).unwrap();
    c.bench_function("brute_aut_spread_2_2_4", |b| {
        b.iter(|| {
            automorphism_group(&code, AutMode::Linear, &AutStrategy::Brute, DEFAULT_CAP)
                .unwrap()
                .group
                .order()
        })
    });
}

criterion_group!(
    benches,
    field_mul,
    rref_4x8,
    enumerate_gl_4_2,
    spread_and_analyze,
    act_on_subspace,
    closure_360,
    brute_aut_gl_4_2
);
criterion_main!(benches);
