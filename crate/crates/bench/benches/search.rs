use blowdown_bench::case;
use blowdown_core::blowdown::run_case;
use criterion::{criterion_group, criterion_main, Criterion};

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("run_case");
    g.sample_size(10);
    for (name, k) in [("Ak", Some(2)), ("Dk", Some(3)), ("Dhat", None), ("Ohat", None), ("E7", None)] {
        let cs = case(name, k);
        let opts = cs.run_options(None);
        g.bench_function(cs.label(), |b| b.iter(|| run_case(&cs.spec, &opts).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, search);
criterion_main!(benches);
