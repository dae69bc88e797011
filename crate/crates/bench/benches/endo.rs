use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use nakayama::endo::{drop_check, end_algebra, gldim_over};
use nakayama::tilting::build_tc;
use nakayama::AdmissibleSequence;

fn end_tc(c: &mut Criterion) {
    let a = AdmissibleSequence::cyclic(&[3, 2, 3, 4, 3]).unwrap();
    let tc = build_tc(&a).unwrap();
    c.bench_function("End(T_C) sharp", |b| b.iter(|| end_algebra(black_box(&a), &tc).unwrap()));
    let e = end_algebra(&a, &tc).unwrap();
    c.bench_function("gldim End(T_C) sharp", |b| b.iter(|| gldim_over(black_box(&e), 30).unwrap()));
}

fn drop(c: &mut Criterion) {
    let a = AdmissibleSequence::cyclic(&[2, 2, 2, 2, 2, 2, 2, 3]).unwrap();
    c.bench_function("drop check cyclic n=8", |b| b.iter(|| drop_check(black_box(&a), 30).unwrap()));
}

criterion_group!(benches, end_tc, drop);
criterion_main!(benches);
