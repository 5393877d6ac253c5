// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use symcol::automorphism::{automorphisms_with, AutCaps};
use symcol::constructive::{dist_edge_coloring_central, tdc_central, total_dist_coloring_central_regular, total_dist_coloring_subdivision};
use symcol::generators::{complete, cycle, star};
use symcol::oracle::{exact_parameter, ParamKind, SearchOptions};
use symcol::transforms::central;
use symcol_bench::fixtures;

fn automorphism_groups(c: &mut Criterion) {
    let mut group = c.benchmark_group("aut central");
    for (name, g) in fixtures() {
        let cg = central(&g).graph;
        group.bench_function(name, |b| b.iter(|| automorphisms_with(black_box(&cg), AutCaps::wide()).unwrap()));
    }
    group.finish();
}

fn oracle_searches(c: &mut Criterion) {
    let opts = SearchOptions { budget: 1_000_000_000, workers: 1 };
    let c5 = central(&cycle(5)).graph;
    let k14 = central(&star(4)).graph;
    c.bench_function("oracle chi2 C(C5)", |b| b.iter(|| exact_parameter(black_box(&c5), ParamKind::Total, 6, opts).unwrap()));
    c.bench_function("oracle D C(K1,4)", |b| b.iter(|| exact_parameter(black_box(&k14), ParamKind::D, 4, opts).unwrap()));
}

fn constructions(c: &mut Criterion) {
    let k7 = complete(7);
    let c9 = cycle(9);
    c.bench_function("edge distinguishing C(K7)", |b| b.iter(|| dist_edge_coloring_central(black_box(&k7)).unwrap()));
    c.bench_function("total distinguishing C(C9)", |b| b.iter(|| total_dist_coloring_central_regular(black_box(&c9)).unwrap()));
    c.bench_function("total distinguishing S(K7)", |b| b.iter(|| total_dist_coloring_subdivision(black_box(&k7)).unwrap()));
    c.bench_function("dominator C(C9)", |b| b.iter(|| tdc_central(black_box(&c9)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = automorphism_groups, oracle_searches, constructions
}
criterion_main!(benches);
