use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use promaton::constructions::{evenodd_afa_rt, evenodd_problem, trios_lasvegas_pfa, trios_problem, up_pfa};
use promaton::conversions::{dfa_minimize, nfa_to_dfa, unary_afa_to_dfa};
use promaton::criteria::evenodd_search_length;
use promaton::lab::{min_unary_dfa_size, MachineKind, SearchSpec};
use promaton::probabilistic::{expeq_compose, expeq_params, lasvegas_success, monte_carlo, trios_success_bound};
use promaton::rational::rat;
use promaton_bench::nth_from_last;

fn conversions(c: &mut Criterion) {
    let nfa = nth_from_last(10);
    c.bench_function("subset nth-from-last 10", |b| b.iter(|| nfa_to_dfa(black_box(&nfa)).unwrap()));
    let afa = evenodd_afa_rt(4).unwrap();
    c.bench_function("unary afa to dfa k=4 + minimize", |b| {
        b.iter(|| dfa_minimize(&unary_afa_to_dfa(black_box(&afa)).unwrap()))
    });
}

fn probability(c: &mut Criterion) {
    let pfa = trios_lasvegas_pfa(2, 2).unwrap();
    let problem = trios_problem(2, 2).unwrap();
    let bound = trios_success_bound(2, 2).unwrap();
    c.bench_function("lasvegas trios(2,2)", |b| b.iter(|| lasvegas_success(&pfa, &problem, 14, &bound).unwrap()));
    let model = expeq_params(3, 1, 2).unwrap().extremal_yes().unwrap();
    c.bench_function("expeq compose c=3 m+n=3", |b| b.iter(|| expeq_compose(black_box(&model)).unwrap()));
    let up = up_pfa(&rat(9, 10)).unwrap();
    c.bench_function("monte carlo 1e5", |b| b.iter(|| monte_carlo(&up, "aaaaa", 100_000, 1).unwrap()));
}

fn search(c: &mut Criterion) {
    let spec = SearchSpec {
        kind: MachineKind::UnaryDfa,
        max_states: 18,
        problem: evenodd_problem(3).unwrap(),
        max_length: evenodd_search_length(3),
    };
    c.bench_function("min unary dfa evenodd k=3", |b| b.iter(|| min_unary_dfa_size(&spec).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = conversions, probability, search
}
criterion_main!(benches);
