use std::hint::black_box;

use agtrellis::hermitian::hermitian_code;
use agtrellis::search::{absolute_complexity_search, SearchConfig, Strategy};
use agtrellis::verify::random_code_corpus;
use agtrellis::{Execution, StateProfile};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn random_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_search");
    group.sample_size(10);
    for (q, m) in [(3, 14), (4, 36)] {
        let code = hermitian_code(q, m).unwrap().code;
        for (name, exec) in MODES {
            let cfg = SearchConfig::new(Strategy::Random, 500, 7).with_execution(exec);
            group.bench_with_input(
                BenchmarkId::new(name, format!("q{q}_m{m}")),
                &cfg,
                |b, cfg| b.iter(|| absolute_complexity_search(black_box(&code), cfg).unwrap()),
            );
        }
    }
    group.finish();
}

fn corpus_profiles(c: &mut Criterion) {
    let corpus = random_code_corpus(300, 1);
    let mut group = c.benchmark_group("corpus_profiles");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                exec.map(corpus.len(), |i| {
                    let dual = corpus[i].dual().unwrap();
                    StateProfile::of(&corpus[i]).s_max + StateProfile::of(&dual).s_max
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, random_search, corpus_profiles);
criterion_main!(benches);
