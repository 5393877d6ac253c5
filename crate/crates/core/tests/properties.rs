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

//! Randomized and exhaustive structural properties.

use proptest::prelude::*;
use symcol::automorphism::{automorphisms, automorphisms_with, lift_to_central, lift_to_endline, AutCaps};
use symcol::coloring::{is_distinguishing_in, is_proper, preserves, preserving_automorphisms, Color, Kind, TotalColoring};
use symcol::enumerate::connected_graphs;
use symcol::oracle::{exact_parameter, ParamKind, SearchOptions};
use symcol::transforms::{central, endline, middle, subdivision};
use symcol::{encode_graph6, parse_graph6, Graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut adj = vec![vec![false; n]; n];
            for j in 1..n {
                for i in 0..j {
                    let b = it.next().unwrap();
                    adj[i][j] = b;
                    adj[j][i] = b;
                }
            }
            Graph::from_fn(n, |i, j| adj[i][j])
        })
    })
}

fn connected_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(max_n).prop_filter("connected", move |g| g.order() >= min_n && g.is_connected())
}

/// Greedy proper total coloring in a seed-dependent element order.
fn greedy_total(g: &Graph, seed: u64) -> TotalColoring {
    let n = g.order();
    let m = g.size();
    let mut order: Vec<usize> = (0..n + m).collect();
    let mut s = seed | 1;
    for i in (1..order.len()).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        order.swap(i, (s % (i as u64 + 1)) as usize);
    }
    let mut vc = vec![0 as Color; n];
    let mut ec = vec![0 as Color; m];
    for x in order {
        let mut used = Vec::new();
        if x < n {
            for &u in g.neighbors(x) {
                used.push(vc[u]);
                used.push(ec[g.edge_id(x, u).unwrap()]);
            }
        } else {
            let (a, b) = g.edges()[x - n];
            used.extend([vc[a], vc[b]]);
            for v in [a, b] {
                used.extend(g.neighbors(v).iter().map(|&u| ec[g.edge_id(v, u).unwrap()]));
            }
        }
        let c = (1..).find(|c| !used.contains(c)).unwrap();
        if x < n { vc[x] = c } else { ec[x - n] = c }
    }
    TotalColoring::total(vc, ec)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(9)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_edge_count(g in graph_strategy(6), h in graph_strategy(6)) {
        prop_assert_eq!(g.join(&h).size(), g.size() + h.size() + g.order() * h.order());
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn transform_orders_and_sizes(g in graph_strategy(7)) {
        let (n, m) = (g.order(), g.size());
        let pairs = |k: usize| k * k.saturating_sub(1) / 2;
        let s = subdivision(&g);
        let c = central(&g);
        let md = middle(&g);
        let e = endline(&g);
        prop_assert_eq!((s.graph.order(), s.graph.size()), (n + m, 2 * m));
        prop_assert_eq!((c.graph.order(), c.graph.size()), (n + m, pairs(n) + m));
        let wedge: usize = g.degrees().into_iter().map(pairs).sum();
        prop_assert_eq!((md.graph.order(), md.graph.size()), (n + m, 2 * m + wedge));
        prop_assert_eq!((e.graph.order(), e.graph.size()), (2 * n, m + n));
        prop_assert_eq!(&s.origin, &c.origin);
        prop_assert_eq!(&s.origin, &md.origin);
        prop_assert_eq!(s.part2(), c.part2());
    }

    #[test]
    fn transforms_keep_connectivity(g in connected_strategy(1, 8)) {
        for t in [subdivision(&g), central(&g), middle(&g), endline(&g)] {
            prop_assert!(t.graph.is_connected());
        }
    }

    #[test]
    fn lifts_are_automorphisms(g in graph_strategy(6)) {
        let group = automorphisms(&g).unwrap();
        let c = central(&g).graph;
        let e = endline(&g).graph;
        for alpha in &group.elements {
            prop_assert!(lift_to_central(alpha, &g).unwrap().is_automorphism_of(&c));
            prop_assert!(lift_to_endline(alpha, &g).unwrap().is_automorphism_of(&e));
        }
    }

    #[test]
    fn enumerated_group_is_closed(g in graph_strategy(6)) {
        let group = automorphisms(&g).unwrap();
        for a in &group.elements {
            for b in &group.elements {
                prop_assert!(group.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn preserving_automorphisms_are_closed(g in graph_strategy(6), seed in any::<u64>()) {
        let group = automorphisms(&g).unwrap();
        let colors: Vec<Color> = (0..g.order()).map(|v| ((seed >> (v % 32)) & 1) as Color + 1).collect();
        let f = TotalColoring::vertices(colors);
        let keep = preserving_automorphisms(&group, &g, &f, Kind::Vertex);
        for a in &keep {
            for b in &keep {
                let ab = a.compose(b);
                prop_assert!(preserves(&ab, &g, &f).unwrap());
                prop_assert!(ab.is_identity() || keep.contains(&ab));
            }
        }
    }

    #[test]
    fn refinement_keeps_distinguishing(g in graph_strategy(7), seed in any::<u64>(), pick in any::<u64>()) {
        let group = automorphisms(&g).unwrap();
        let n = g.order();
        let colors: Vec<Color> = (0..n).map(|v| ((seed >> (2 * v)) & 3) as Color + 1).collect();
        let f = TotalColoring::vertices(colors.clone());
        if is_distinguishing_in(&group, &g, &f, Kind::Vertex) {
            let class = colors[(pick as usize) % n];
            let split: Vec<Color> = (0..n)
                .map(|v| if colors[v] == class && (pick >> (v + 8)) & 1 == 1 { 9 } else { colors[v] })
                .collect();
            prop_assert!(is_distinguishing_in(&group, &g, &TotalColoring::vertices(split), Kind::Vertex));
        }
    }

    #[test]
    fn proper_total_coloring_needs_delta_plus_one(g in graph_strategy(8), seed in any::<u64>()) {
        let f = greedy_total(&g, seed);
        prop_assert!(is_proper(&g, &f, Kind::Total).unwrap());
        prop_assert!(f.palette_size() > g.max_degree());
    }
}

#[test]
fn central_automorphisms_preserve_parts_and_are_rigid_on_sources() {
    for n in 4..=7 {
        for g in connected_graphs(n).unwrap() {
            let c = central(&g).graph;
            let group = automorphisms_with(&c, AutCaps::wide()).unwrap();
            for psi in &group.elements {
                assert!((0..n).all(|v| psi.apply(v) < n), "{g:?}");
                if (0..n).all(|v| psi.apply(v) == v) {
                    assert!(psi.is_identity(), "{g:?}");
                }
            }
        }
    }
}

#[test]
fn endline_automorphisms_preserve_sources_and_are_rigid_on_them() {
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            let e = endline(&g).graph;
            let group = automorphisms_with(&e, AutCaps::wide()).unwrap();
            for psi in &group.elements {
                assert!((0..n).all(|v| psi.apply(v) < n), "{g:?}");
                if (0..n).all(|v| psi.apply(v) == v) {
                    assert!(psi.is_identity(), "{g:?}");
                }
            }
        }
    }
}

#[test]
fn oracle_values_agree_across_worker_counts() {
    let graphs = [symcol::generators::petersen(), central(&symcol::generators::star(4)).graph, symcol::generators::complete(5)];
    for g in &graphs {
        for kind in ParamKind::ALL {
            let values: Vec<Option<u32>> = [1, 2, 8]
                .iter()
                .map(|&w| exact_parameter(g, kind, 12, SearchOptions { workers: w, ..SearchOptions::default() }).unwrap().value)
                .collect();
            assert!(values.windows(2).all(|p| p[0] == p[1]), "{kind} on {g:?}: {values:?}");
        }
    }
}
