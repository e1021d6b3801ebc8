use criterion::{black_box, criterion_group, criterion_main, Criterion};
use lrc_core::availability::verify_availability;
use lrc_core::bounds::{find_crossing, BoundName, BoundParams, SweepVariable};
use lrc_core::code::{covering_radius, weight_enumerator};
use lrc_core::constructions::{
    graph_code, platonic, projective_line_system, transpose_transform, PlatonicSolid,
};
use lrc_core::search::enumerate_exact_covering_systems;
use lrc_core::{BitMatrix, Guards, LinearCode};

fn bench_weight_enumerator(c: &mut Criterion) {
    let guards = Guards::default();
    let icosa = graph_code(platonic(PlatonicSolid::Icosahedron).graph());
    c.bench_function("weight_enumerator icosahedron [30,19]", |b| {
        b.iter(|| weight_enumerator(black_box(&icosa), &guards).unwrap())
    });
}

fn bench_covering_radius(c: &mut Criterion) {
    let guards = Guards::default();
    let lines = projective_line_system(4).unwrap();
    let transposed = transpose_transform(&lines.to_matrix()).unwrap();
    let code = LinearCode::from_parity(&transposed).unwrap();
    c.bench_function("covering_radius [35,24]", |b| {
        b.iter(|| covering_radius(black_box(&code), &guards).unwrap())
    });
}

fn bench_rank(c: &mut Criterion) {
    // Deterministic dense-ish 64x64 matrix.
    let mut m = BitMatrix::zeros(64, 64);
    let mut state = 0x2545_f491_4f6c_dd1du64;
    for i in 0..64 {
        for j in 0..64 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state & 1 == 1 {
                m.set(i, j, true);
            }
        }
    }
    c.bench_function("rank 64x64", |b| b.iter(|| black_box(&m).rank()));
}

fn bench_availability(c: &mut Criterion) {
    let guards = Guards::default();
    let dodeca = graph_code(platonic(PlatonicSolid::Dodecahedron).graph());
    c.bench_function("verify_availability dodecahedron (2,2)", |b| {
        b.iter(|| verify_availability(black_box(&dodeca), 2, 2, &guards).unwrap())
    });
}

fn bench_search(c: &mut Criterion) {
    let guards = Guards::default();
    c.bench_function("enumerate systems (7,2,3)", |b| {
        b.iter(|| enumerate_exact_covering_systems(7, 2, 3, &guards).unwrap())
    });
}

fn bench_crossing(c: &mut Criterion) {
    let fixed = BoundParams {
        r: Some(2),
        t: None,
        n: None,
    };
    c.bench_function("find_crossing thm3_entropy/tbf1", |b| {
        b.iter(|| {
            find_crossing(
                BoundName::Thm3Entropy,
                BoundName::Tbf1,
                SweepVariable::T,
                2..=100,
                black_box(&fixed),
            )
            .unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_weight_enumerator,
    bench_covering_radius,
    bench_rank,
    bench_availability,
    bench_search,
    bench_crossing
);
criterion_main!(benches);
