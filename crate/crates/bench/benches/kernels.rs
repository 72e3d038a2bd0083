use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rankmetric::bounds::table::covering_table;
use rankmetric::oracle::{exhaustive_min_covering, greedy_covering, random_linear_code, SearchBudget};
use rankmetric::rankgeom::kernels::ball_volume;
use rankmetric::rankgeom::DEFAULT_GUARD;
use rankmetric::wenum::macwilliams_qproduct;
use rankmetric::{macwilliams, rank_of, Field, RankEnumerator};

// xorshift, enough to spread test vectors over the field
fn vectors(f: &Field, n: usize, count: usize) -> Vec<Vec<u32>> {
    let mut s = 0x9e3779b97f4a7c15u64;
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    s ^= s << 13;
                    s ^= s >> 7;
                    s ^= s << 17;
                    (s % f.size() as u64) as u32
                })
                .collect()
        })
        .collect()
}

fn field_mul(c: &mut Criterion) {
    let mut g = c.benchmark_group("field_mul");
    for (q, m) in [(2, 8), (3, 5), (2, 16), (2, 20)] {
        let f = Field::gf(q, m);
        let xs: Vec<u32> = vectors(&f, 1, 1024).into_iter().map(|v| v[0]).collect();
        g.bench_function(BenchmarkId::new("mul", format!("{q}^{m}")), |b| {
            b.iter(|| xs.windows(2).fold(0u32, |acc, w| acc ^ f.mul(w[0], w[1])))
        });
    }
    g.finish();
}

fn rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank");
    for (q, m, n) in [(2, 8, 8), (3, 6, 6), (2, 16, 12)] {
        let f = Field::gf(q, m);
        let vs = vectors(&f, n, 256);
        g.bench_function(BenchmarkId::from_parameter(format!("{q}^{m}x{n}")), |b| {
            b.iter(|| vs.iter().map(|v| rank_of(&f, black_box(v))).sum::<usize>())
        });
    }
    g.finish();
}

fn distributions(c: &mut Criterion) {
    let f = Field::gf(2, 4);
    let code = random_linear_code(&f, 4, 3, 1).unwrap();
    c.bench_function("rank_distribution 2^4 [4,3]", |b| b.iter(|| code.rank_distribution(DEFAULT_GUARD).unwrap()));
    let a = RankEnumerator::from_counts(2, 4, &code.rank_distribution(DEFAULT_GUARD).unwrap().counts).unwrap();
    c.bench_function("macwilliams krawtchouk", |b| b.iter(|| macwilliams(black_box(&a)).unwrap()));
    c.bench_function("macwilliams q-product", |b| b.iter(|| macwilliams_qproduct(black_box(&a)).unwrap()));
}

fn bounds(c: &mut Criterion) {
    c.bench_function("ball_volume 2^64 x 64, r=32", |b| b.iter(|| ball_volume(2, black_box(64), 64, 32)));
    c.bench_function("table I", |b| b.iter(|| covering_table(2, 2..=7, 2..=7, 1..=6).unwrap()));
}

fn searches(c: &mut Criterion) {
    let budget = SearchBudget::default();
    let f4 = Field::gf(2, 2);
    c.bench_function("exhaustive covering GF(4)^2 K=2", |b| {
        b.iter(|| exhaustive_min_covering(&f4, 2, 1, 2, &budget).unwrap())
    });
    let f8 = Field::gf(2, 3);
    c.bench_function("greedy covering GF(8)^3 rho=1", |b| b.iter(|| greedy_covering(&f8, 3, 1, &budget).unwrap()));
}

criterion_group!(benches, field_mul, rank, distributions, bounds, searches);
criterion_main!(benches);
