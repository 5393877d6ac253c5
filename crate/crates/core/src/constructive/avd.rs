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

//! Adjacent-vertex-distinguishing total colorings of central, subdivision
//! and join-central graphs.

use std::collections::BTreeSet;

use crate::coloring::{is_avd_total, is_proper, Color, Kind, TotalColoring};
use crate::constructive::bipartite::konig;
use crate::constructive::total::icls_scheme;
use crate::constructive::{mex, require_connected, ConstructionResult};
use crate::error::{contract, precondition, Error, Result};
use crate::graph::Graph;
use crate::transforms::{central, subdivision};

/// AVD-total coloring of `C(G)` for a connected regular `G` of order
/// `n ≥ 5`, with `n + 1` colors for even `n` and `n + 2` for odd `n`.
///
/// Uses the Latin square scheme on a square one or two orders larger than
/// needed, so the entries left out of each row differ between source
/// vertices.
pub fn avd_coloring_central_regular(g: &Graph) -> Result<ConstructionResult> {
    require_connected(g, 5)?;
    if g.regular_degree().is_none() {
        return precondition("graph is not regular");
    }
    let n = g.order();
    let order = if n.is_multiple_of(2) { n + 1 } else { n + 2 };
    let (c, f) = icls_scheme(g, order)?;
    let ok = is_avd_total(&c.graph, &f)?;
    Ok(ConstructionResult::new("5.1", c.graph, f, order, "icls-galvin", ok))
}

/// How often each case picked the color of a subdivision vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SubdivisionCases {
    /// Neither endpoint has degree 2.
    pub a: usize,
    /// Both endpoints have degree 2.
    pub b: usize,
    /// Exactly one endpoint has degree 2.
    pub c: usize,
    /// Smallest candidate set seen.
    pub min_choices: usize,
}

/// AVD-total coloring of `S(G)` with `Δ(G) + 1` colors for connected `G`
/// with `Δ(G) ≥ 5`. Smaller degrees are out of scope; the general bipartite
/// bound `Δ + 2` applies there.
pub fn avd_coloring_subdivision(g: &Graph) -> Result<ConstructionResult> {
    avd_coloring_subdivision_cases(g).map(|(r, _)| r)
}

/// As [`avd_coloring_subdivision`], also reporting which cases fired.
pub fn avd_coloring_subdivision_cases(g: &Graph) -> Result<(ConstructionResult, SubdivisionCases)> {
    require_connected(g, 2)?;
    let delta = g.max_degree();
    if delta < 5 {
        return precondition(format!("Δ = {delta} is below 5"));
    }
    let s = subdivision(g);
    let sg = &s.graph;
    let top = delta as Color + 1;
    let edge = konig(sg);
    let ec = |x: usize, y: usize| edge[sg.edge_id(x, y).unwrap()];
    let mut vertex = vec![top; s.n()];
    let mut cases = SubdivisionCases { min_choices: usize::MAX, ..Default::default() };
    for w in s.part2() {
        let (v, u) = (sg.neighbors(w)[0], sg.neighbors(w)[1]);
        let mut excluded = BTreeSet::from([top, ec(v, w), ec(u, w)]);
        let mut low = 0;
        for x in [v, u] {
            if sg.degree(x) == 2 {
                low += 1;
                let other = sg.neighbors(x).iter().copied().find(|&y| y != w).unwrap();
                excluded.insert(ec(x, other));
            }
        }
        match low {
            0 => cases.a += 1,
            2 => cases.b += 1,
            _ => cases.c += 1,
        }
        let choices: Vec<Color> = (1..=top).filter(|k| !excluded.contains(k)).collect();
        debug_assert!(choices.len() + 5 > top as usize);
        cases.min_choices = cases.min_choices.min(choices.len());
        vertex.push(choices[0]);
    }
    let f = TotalColoring::total(vertex, edge);
    let ok = is_avd_total(sg, &f)?;
    Ok((ConstructionResult::new("5.3", s.graph, f, top as usize, "konig", ok), cases))
}

fn check_palette(f: &TotalColoring, g: &Graph, lo: Color, hi: Color, what: &str) -> Result<()> {
    if !is_proper(g, f, Kind::Total)? {
        return contract(format!("{what} is not a proper total coloring"));
    }
    if let Some(k) = f.palette().into_iter().find(|k| !(lo..=hi).contains(k)) {
        return contract(format!("{what} uses color {k} outside {lo}..={hi}"));
    }
    Ok(())
}

/// Colors of `C(G1 + G2)` inherited from colorings of `C(G1)` and `C(G2)`,
/// which sit inside it as induced subgraphs; `cross(q, i)` gives the colors
/// of the edges `u_i w` and `w v_q` for the subdivision vertex `w` of the
/// join edge `v_q u_i` (both indices from 0).
fn join_coloring(
    g1: &Graph,
    g2: &Graph,
    f1: &TotalColoring,
    f2: &TotalColoring,
    palette: Color,
    cross: impl Fn(usize, usize) -> (Color, Color),
) -> Result<(Graph, TotalColoring)> {
    let (n, m) = (g1.order(), g2.order());
    let (c1, c2) = (central(g1), central(g2));
    let c = central(&g1.join(g2));
    let cg = &c.graph;
    // position of each join vertex inside C(G1) or C(G2)
    let side = |x: usize| -> (bool, usize) {
        if x < n {
            return (true, x);
        }
        if x < n + m {
            return (false, x - n);
        }
        match c.origin_of(x) {
            Some(crate::transforms::Origin::Edge(a, b)) if b < n => (true, c1.subdivision_vertex(a, b).unwrap()),
            Some(crate::transforms::Origin::Edge(a, b)) if a >= n => (false, c2.subdivision_vertex(a - n, b - n).unwrap()),
            _ => unreachable!("cross subdivision vertices are handled separately"),
        }
    };
    let is_cross = |x: usize| matches!(c.origin_of(x), Some(crate::transforms::Origin::Edge(a, b)) if a < n && b >= n);
    let mut edge = vec![0; cg.size()];
    for (e, &(x, y)) in cg.edges().iter().enumerate() {
        edge[e] = if is_cross(y) {
            let Some(crate::transforms::Origin::Edge(q, i)) = c.origin_of(y) else { unreachable!() };
            let (at_u, at_v) = cross(q, i - n);
            if x == q { at_v } else { at_u }
        } else {
            let ((s1, a), (_, b)) = (side(x), side(y));
            if s1 {
                f1.edge(c1.graph.edge_id(a, b).unwrap())
            } else {
                f2.edge(c2.graph.edge_id(a, b).unwrap())
            }
        };
    }
    let mut vertex = vec![0; cg.order()];
    for x in 0..cg.order() {
        if !is_cross(x) {
            let (s1, a) = side(x);
            vertex[x] = if s1 { f1.vertex(a) } else { f2.vertex(a) };
        }
    }
    for x in (0..cg.order()).filter(|&x| is_cross(x)) {
        let mut used: Vec<Color> = cg.neighbors(x).iter().map(|&y| vertex[y]).collect();
        used.extend(cg.neighbors(x).iter().map(|&y| edge[cg.edge_id(x, y).unwrap()]));
        let k = mex(used);
        if k > palette {
            return Err(Error::ConstructionDefect(format!("no free color for subdivision vertex {x}")));
        }
        vertex[x] = k;
    }
    Ok((c.graph, TotalColoring::total(vertex, edge)))
}

/// AVD-total coloring of `C(G1 + G2)` with at most `m + n + 2` colors,
/// where `n = |G1|` and `m = |G2|`, from AVD-total colorings `avd1` of
/// `C(G1)` on `m+1..=m+n+2` and `avd2` of `C(G2)` on `1..=m+2`.
///
/// The edge from `u_i` to the subdivision vertex of `v_q u_i` gets
/// `m + 2 + q` and the edge on to `v_q` gets `i`, so all `u_i` see the same
/// cross colors and so do all `v_q`.
pub fn avd_coloring_central_join(g1: &Graph, g2: &Graph, avd1: &TotalColoring, avd2: &TotalColoring) -> Result<ConstructionResult> {
    let (n, m) = (g1.order() as Color, g2.order() as Color);
    let (c1, c2) = (central(g1), central(g2));
    check_palette(avd1, &c1.graph, m + 1, m + n + 2, "coloring of C(G1)")?;
    check_palette(avd2, &c2.graph, 1, m + 2, "coloring of C(G2)")?;
    if !is_avd_total(&c1.graph, avd1)? || !is_avd_total(&c2.graph, avd2)? {
        return contract("input colorings must be AVD-total");
    }
    let palette = m + n + 2;
    let (graph, f) = join_coloring(g1, g2, avd1, avd2, palette, |q, i| (m + 2 + q as Color + 1, i as Color + 1))?;
    let ok = is_avd_total(&graph, &f)?;
    Ok(ConstructionResult::new("5.5", graph, f, palette as usize, "join", ok))
}

/// AVD-total coloring of `C(G1 + G2)` with at most `2n + 2` colors for
/// `|G1| = |G2| = n`, from proper total colorings `t1` of `C(G1)` on
/// `n+2..=2n+2` and `t2` of `C(G2)` on `1..=n+1`.
///
/// The cross edges are shifted so that `v_i` misses color `i` and `u_i`
/// misses color `n + 1 + i`; neither input needs to be AVD.
pub fn avd_coloring_central_join_equal_order(g1: &Graph, g2: &Graph, t1: &TotalColoring, t2: &TotalColoring) -> Result<ConstructionResult> {
    if g1.order() != g2.order() {
        return precondition(format!("orders {} and {} differ", g1.order(), g2.order()));
    }
    let n = g1.order() as Color;
    check_palette(t1, &central(g1).graph, n + 2, 2 * n + 2, "coloring of C(G1)")?;
    check_palette(t2, &central(g2).graph, 1, n + 1, "coloring of C(G2)")?;
    let palette = 2 * n + 2;
    let cross = |q: usize, i: usize| {
        let (q, i) = (q as Color + 1, i as Color + 1);
        if q == i { (2 * n + 2, n + 1) } else { (n + 1 + q, i) }
    };
    let (graph, f) = join_coloring(g1, g2, t1, t2, palette, cross)?;
    let ok = is_avd_total(&graph, &f)?;
    Ok(ConstructionResult::new("5.5", graph, f, palette as usize, "join-equal-order", ok))
}
