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

//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so every line is printed; exits nonzero if any criterion fails.
//! All numeric comparisons are exact.

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symcol::automorphism::{automorphisms_with, check_aut_chain, AutCaps};
use symcol::coloring::{is_avd_total, is_distinguishing_in, is_proper, is_tdc, Kind, TotalColoring};
use symcol::constructive::*;
use symcol::enumerate::{connected_graphs, regular_graphs, trees};
use symcol::generators::*;
use symcol::latin::{check_structure, icls, search_icls};
use symcol::oracle::{exact_parameter, lower_bound_certificate, upper_bound_witness, ParamKind, SearchOptions};
use symcol::transforms::{central, middle};
use symcol::Graph;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn exact(g: &Graph, kind: ParamKind, cap: u32) -> Option<u32> {
    exact_parameter(g, kind, cap, opts()).unwrap().value
}

fn distinguishing(g: &Graph, f: &TotalColoring, kind: Kind) -> bool {
    let group = automorphisms_with(g, AutCaps::wide()).unwrap();
    is_distinguishing_in(&group, g, f, kind)
}

fn ceil_sqrt(x: usize) -> usize {
    (0..).find(|d| d * d >= x).unwrap()
}

fn automorphism_chain() -> Outcome {
    let mut checked = 0;
    for n in 5..=7 {
        for g in connected_graphs(n).unwrap() {
            if g.is_cycle() {
                continue;
            }
            let r = check_aut_chain(&g).unwrap();
            ensure(r.applicable && r.holds, || format!("chain breaks on {g:?}: {r:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} connected non-cycle graphs of order 5..=7"))
}

fn central_distinguishing() -> Outcome {
    let mut checked = 0;
    for n in 4..=7 {
        for g in connected_graphs(n).unwrap() {
            let bound = ceil_sqrt(g.max_degree());
            let e = dist_edge_coloring_central(&g).map_err(|e| format!("{g:?}: {e}"))?;
            ensure(e.coloring.palette_size() <= bound && distinguishing(&e.graph, &e.coloring, Kind::Edge), || {
                format!("edge coloring of C(G) fails for {g:?}")
            })?;
            let v = dist_vertex_coloring_central(&g).map_err(|e| format!("{g:?}: {e}"))?;
            ensure(v.coloring.palette_size() <= bound && distinguishing(&v.graph, &v.coloring, Kind::Vertex), || {
                format!("vertex coloring of C(G) fails for {g:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} connected graphs of order 4..=7, edge and vertex colorings"))
}

fn star_sharpness() -> Outcome {
    let mut got = Vec::new();
    for r in [4, 5] {
        let c = central(&star(r)).graph;
        got.push((r, exact(&c, ParamKind::DPrime, 6), exact(&c, ParamKind::D, 6)));
    }
    let want = vec![(4, Some(2), Some(2)), (5, Some(3), Some(3))];
    let detail = got.iter().map(|(r, dp, d)| format!("K1,{r}: D'={dp:?} D={d:?}")).collect::<Vec<_>>().join("; ");
    ensure(got == want, || format!("expected D'=D=2 for K1,4 and D'=D=3 for K1,5; got {detail}"))?;
    Ok(detail)
}

fn middle_graphs() -> Outcome {
    let mut checked = 0;
    for n in 3..=6 {
        for g in connected_graphs(n).unwrap() {
            let r = dist_vertex_coloring_middle(&g).map_err(|e| format!("{g:?}: {e}"))?;
            ensure(r.coloring.palette_size() <= g.max_degree() && distinguishing(&r.graph, &r.coloring, Kind::Vertex), || {
                format!("vertex coloring of M(G) fails for {g:?}")
            })?;
            let m = middle(&g).graph;
            let w = upper_bound_witness(&m, ParamKind::DPrime, 3, opts()).unwrap();
            ensure(w.is_some_and(|w| distinguishing(&m, &w, Kind::Edge)), || format!("no 3-color distinguishing edge coloring of M(G) for {g:?}"))?;
            checked += 1;
        }
    }
    for n in 3..=6 {
        let d = exact(&middle(&cycle(n)).graph, ParamKind::D, 4);
        ensure(d == Some(2), || format!("D(M(C{n})) = {d:?}, expected 2"))?;
    }
    Ok(format!("{checked} connected graphs of order 3..=6; D(M(C_n)) = 2 for n = 3..=6"))
}

fn latin_table() -> Outcome {
    let table: [[u32; 7]; 7] = [
        [1, 5, 2, 6, 3, 7, 4],
        [5, 2, 6, 3, 7, 4, 1],
        [2, 6, 3, 7, 4, 1, 5],
        [6, 3, 7, 4, 1, 5, 2],
        [3, 7, 4, 1, 5, 2, 6],
        [7, 4, 1, 5, 2, 6, 3],
        [4, 1, 5, 2, 6, 3, 7],
    ];
    let m = icls(4);
    for i in 0..7 {
        ensure(m.row(i + 1) == table[i], || format!("row {} differs: {:?}", i + 1, m.row(i + 1)))?;
    }
    for k in 1..=50 {
        let f = check_structure(&icls(k));
        ensure(f.latin && f.commutative && f.idempotent && f.anticirculant, || format!("structure flags fail for k = {k}: {f:?}"))?;
    }
    ensure(search_icls(2).is_none() && search_icls(4).is_none(), || "found an ICLS of even order".into())?;
    Ok("order-7 square matches cell for cell; flags hold for k <= 50; none of order 2 or 4".into())
}

fn regular_total_distinguishing() -> Outcome {
    let mut graphs = vec![cycle(5), complete(5), cycle(7)];
    for n in [5, 7] {
        for d in 1..n {
            graphs.extend(regular_graphs(d, n).unwrap());
        }
    }
    for g in &graphs {
        let r = total_dist_coloring_central_regular(g).map_err(|e| format!("{g:?}: {e}"))?;
        let target = r.graph.max_degree() + 1;
        ensure(is_proper(&r.graph, &r.coloring, Kind::Total).unwrap(), || format!("improper on {g:?}"))?;
        ensure(r.coloring.palette_size() == target, || format!("{} colors on {g:?}, expected {target}", r.coloring.palette_size()))?;
        ensure(distinguishing(&r.graph, &r.coloring, Kind::Total), || format!("not distinguishing on {g:?}"))?;
    }
    for g in [cycle(5), complete(5)] {
        let c = central(&g).graph;
        let v = exact(&c, ParamKind::TotalDistinguishing, 7);
        ensure(v == Some(c.max_degree() as u32 + 1), || format!("oracle chi''_D(C(G)) = {v:?} for {g:?}"))?;
    }
    Ok(format!("{} regular graphs of odd order; oracle chi''_D = 5 for C(C5) and C(K5)", graphs.len()))
}

fn total_bounds_small() -> Outcome {
    let mut count = 0;
    for n in 3..=5 {
        for g in connected_graphs(n).unwrap() {
            let c = central(&g).graph;
            let d = c.max_degree() as u32;
            let v = exact(&c, ParamKind::TotalDistinguishing, d + 3);
            ensure(v == Some(d + 1) || v == Some(d + 2), || format!("chi''_D(C(G)) = {v:?} for {g:?}, Δ = {d}"))?;
            count += 1;
        }
    }
    let mut tcc = 0;
    for n in 3..=6 {
        for g in connected_graphs(n).unwrap() {
            let c = central(&g).graph;
            let d = c.max_degree() as u32;
            let w = upper_bound_witness(&c, ParamKind::Total, d + 2, opts()).unwrap();
            ensure(w.is_some_and(|w| is_proper(&c, &w, Kind::Total).unwrap()), || format!("no (Δ+2)-total coloring of C(G) for {g:?}"))?;
            tcc += 1;
        }
    }
    Ok(format!("chi''_D in {{Δ+1, Δ+2}} on {count} graphs; chi'' <= Δ+2 on {tcc} graphs"))
}

fn avd_central_regular() -> Outcome {
    let mut graphs = Vec::new();
    for d in 2..=4 {
        graphs.extend(regular_graphs(d, 6).unwrap());
    }
    for g in &graphs {
        let r = avd_coloring_central_regular(g).map_err(|e| format!("{g:?}: {e}"))?;
        let target = r.graph.max_degree() + 2;
        ensure(is_avd_total(&r.graph, &r.coloring).unwrap(), || format!("not AVD on {g:?}"))?;
        ensure(r.coloring.palette_size() == target, || format!("{} colors on {g:?}, expected {target}", r.coloring.palette_size()))?;
    }
    let mut certs = Vec::new();
    for (name, g) in [("C6", cycle(6)), ("K6", complete(6))] {
        let c = central(&g).graph;
        let cert = lower_bound_certificate(&c, ParamKind::TotalAvd, c.max_degree() as u32 + 2, opts()).unwrap();
        certs.push(format!("{name}: {cert}"));
        ensure(cert, || format!("C({name}) has an AVD-total coloring with Δ+1 colors, so no certificate for Δ+2 ({} constructions passed)", graphs.len()))?;
    }
    Ok(format!("{} regular graphs of order 6 colored with Δ+2; certificates {}", graphs.len(), certs.join(", ")))
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
        if g.is_connected() {
            return g;
        }
    }
}

fn spider(legs: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, &edges).unwrap()
}

fn avd_subdivision() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let ok_degree = |g: &Graph| (5..=6).contains(&g.max_degree());
    let mut graphs = vec![star(5), star(6), broom(7), broom(8), spider(&[3, 2, 1, 1, 1]), spider(&[3, 3, 2, 1, 1, 1])];
    while graphs.len() < 14 {
        let n = rng.gen_range(9..=14);
        let t = random_tree(&mut rng, n);
        if ok_degree(&t) {
            graphs.push(t);
        }
    }
    while graphs.len() < 20 {
        let g = random_connected(&mut rng, 9, 0.35);
        if ok_degree(&g) {
            graphs.push(g);
        }
    }
    let mut total = SubdivisionCases::default();
    for g in &graphs {
        let (r, cases) = avd_coloring_subdivision_cases(g).map_err(|e| format!("{g:?}: {e}"))?;
        let target = g.max_degree() + 1;
        ensure(is_avd_total(&r.graph, &r.coloring).unwrap(), || format!("not AVD on {g:?}"))?;
        ensure(r.coloring.palette_size() == target, || format!("{} colors on {g:?}, expected {target}", r.coloring.palette_size()))?;
        total.a += cases.a;
        total.b += cases.b;
        total.c += cases.c;
    }
    ensure(total.a >= 3 && total.b >= 3 && total.c >= 3, || format!("case coverage too thin: {total:?}"))?;
    Ok(format!("{} graphs with Δ in {{5, 6}}; cases A={} B={} C={}", graphs.len(), total.a, total.b, total.c))
}

fn shifted(f: TotalColoring, by: u32) -> TotalColoring {
    let shift = |v: Option<Vec<u32>>| v.map(|c| c.into_iter().map(|k| k + by).collect());
    TotalColoring { vertex_colors: shift(f.vertex_colors), edge_colors: shift(f.edge_colors) }
}

fn avd_join() -> Outcome {
    let avd = |g: &Graph| {
        let c = central(g).graph;
        upper_bound_witness(&c, ParamKind::TotalAvd, c.max_degree() as u32 + 3, opts()).unwrap().expect("AVD-total coloring within Δ+3")
    };
    let mut pairs: Vec<(Graph, Graph)> = Vec::new();
    for m in 2..=3 {
        for r in 2..=3 {
            pairs.push((Graph::empty(r), Graph::empty(m)));
        }
    }
    pairs.push((path(3), path(3)));
    pairs.push((complete(3), complete(3)));
    for (g1, g2) in &pairs {
        let m = g2.order() as u32;
        let f = avd_coloring_central_join(g1, g2, &shifted(avd(g1), m), &avd(g2)).map_err(|e| format!("{e}"))?;
        let bound = f.graph.max_degree() + 3;
        ensure(is_avd_total(&f.graph, &f.coloring).unwrap() && f.coloring.palette_size() <= bound, || {
            format!("join of {g1:?} and {g2:?} fails with {} colors", f.coloring.palette_size())
        })?;
    }
    Ok(format!("{} joins within Δ+3 colors", pairs.len()))
}

fn dominator() -> Outcome {
    let mut count = 0;
    for n in 5..=6 {
        for g in connected_graphs(n).unwrap() {
            if g.max_degree() + 3 > n {
                continue;
            }
            let r = tdc_central(&g).map_err(|e| format!("{g:?}: {e}"))?;
            let p = r.partition.clone().unwrap();
            ensure(p.len() == n && is_tdc(&r.graph, &p).unwrap(), || format!("tdc_central fails on {g:?}"))?;
            let q = tdc_to_complement(&p, &g).map_err(|e| format!("{g:?}: {e}"))?;
            ensure(is_tdc(&g.complement(), &q).unwrap() && q.len() <= p.len(), || format!("complement transfer fails on {g:?}"))?;
            count += 1;
        }
    }
    let c = central(&cycle_complement(6)).graph;
    let v = exact(&c, ParamKind::TotalDominator, 7);
    ensure(v == Some(6), || format!("chi^t_d of the central graph of K6 minus a 6-cycle is {v:?}"))?;
    let mut tree_count = 0;
    for n in 5..=6 {
        for t in trees(n).unwrap() {
            let r = tdc_central_tree(&t).map_err(|e| format!("{t:?}: {e}"))?;
            let p = r.partition.clone().unwrap();
            ensure(p.len() <= n && is_tdc(&r.graph, &p).unwrap(), || format!("tdc_central_tree fails on {t:?}"))?;
            tree_count += 1;
        }
    }
    Ok(format!("{count} graphs via tdc_central and complement; optimum 6 confirmed; {tree_count} trees"))
}

fn oracle_consistency() -> Outcome {
    let mut graphs: Vec<Graph> = (2..=5).flat_map(|n| connected_graphs(n).unwrap()).collect();
    graphs.extend([central(&path(4)).graph, central(&star(3)).graph]);
    for g in &graphs {
        let cap = g.max_degree() as u32 + 4;
        let t = exact(g, ParamKind::Total, cap);
        let a = exact(g, ParamKind::TotalAvd, cap);
        let d = exact(g, ParamKind::TotalDistinguishing, cap);
        ensure(t.is_some() && a.is_some() && d.is_some(), || format!("cap {cap} too small for {g:?}"))?;
        ensure(t <= a && t <= d, || format!("chi''={t:?} chi''_a={a:?} chi''_D={d:?} on {g:?}"))?;
    }
    let (k4, k5) = (exact(&complete(4), ParamKind::TotalAvd, 8), exact(&complete(5), ParamKind::TotalAvd, 8));
    ensure(k4 == Some(5) && k5 == Some(7), || format!("chi''_a(K4) = {k4:?}, chi''_a(K5) = {k5:?}"))?;
    for g in [central(&star(4)).graph, petersen(), central(&cycle(5)).graph] {
        for kind in [ParamKind::D, ParamKind::DPrime, ParamKind::TotalAvd, ParamKind::TotalDominator] {
            let one = exact_parameter(&g, kind, 12, SearchOptions { workers: 1, ..opts() }).unwrap();
            let four = exact_parameter(&g, kind, 12, SearchOptions { workers: 4, ..opts() }).unwrap();
            ensure(one.value == four.value && one.witness == four.witness, || format!("{kind} differs across worker counts on {g:?}"))?;
        }
    }
    Ok(format!("orderings hold on {} graphs; chi''_a(K4)=5, chi''_a(K5)=7; witnesses identical for 1 and 4 workers", graphs.len()))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("automorphism chain through L, S, C, M and endline lifts", automorphism_chain),
        ("distinguishing edge and vertex colorings of central graphs", central_distinguishing),
        ("star sharpness of the central distinguishing bounds", star_sharpness),
        ("middle graph distinguishing colorings", middle_graphs),
        ("Latin square table and structure", latin_table),
        ("total distinguishing colorings of central graphs of regular graphs", regular_total_distinguishing),
        ("total chromatic bounds of central graphs", total_bounds_small),
        ("AVD colorings of central graphs of even regular graphs", avd_central_regular),
        ("AVD colorings of subdivision graphs", avd_subdivision),
        ("AVD colorings of central graphs of joins", avd_join),
        ("total dominator colorings", dominator),
        ("oracle self-consistency", oracle_consistency),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:2} PASS [{name}] {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:2} FAIL [{name}] {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
