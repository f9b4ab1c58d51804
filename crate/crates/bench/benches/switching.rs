use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use tabkit::jdt::rectify;
use tabkit::switching::switch_tableaux;
use tabkit::Order;

fn bench_switching(c: &mut Criterion) {
    let pairs = tabkit_bench::switching_pairs("7,5,3,1", "4,2", 3, 64);
    c.bench_function("switch 16 cells", |b| {
        b.iter(|| {
            for (s, t) in &pairs {
                black_box(switch_tableaux(s, t, Order::Standard).expect("switch"));
            }
        })
    });
    c.bench_function("rectify 10 cells", |b| {
        b.iter(|| {
            for (_, t) in &pairs {
                black_box(rectify(t).expect("rectify"));
            }
        })
    });
}

criterion_group!(benches, bench_switching);
criterion_main!(benches);
