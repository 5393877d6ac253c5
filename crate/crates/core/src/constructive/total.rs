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

//! Total and total distinguishing colorings of central and subdivision
//! graphs.

use std::collections::BTreeSet;

use crate::automorphism::{automorphisms_with, AutCaps};
use crate::coloring::{is_distinguishing_in, is_proper, Color, Kind, TotalColoring};
use crate::constructive::bipartite::{konig, list_edge_coloring_bipartite};
use crate::constructive::{distinguishes, mex, require_connected, ConstructionResult};
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;
use crate::latin::icls;
use crate::oracle::{upper_bound_witness, ParamKind, SearchOptions};
use crate::transforms::{central, subdivision, TaggedGraph};

/// Colors `C(G)` from the leading `n × n` block of the square of the given
/// odd order: `u_i` gets `m(i, i)`, the complement edge `u_i u_j` gets
/// `m(i, j)`, the subdivision edges at `u_i` are list colored from
/// `{m(i, j) : j ∈ N_G(i)}`, and each subdivision vertex takes the
/// smallest color its neighbours and edges leave free.
pub(crate) fn icls_scheme(g: &Graph, order: usize) -> Result<(TaggedGraph, TotalColoring)> {
    let n = g.order();
    debug_assert!(order % 2 == 1 && order >= n);
    let sq = icls(order.div_ceil(2));
    let m = |i: usize, j: usize| sq.get(i + 1, j + 1);
    let c = central(g);
    let b = subdivision(g).graph;
    let lists: Vec<BTreeSet<Color>> = b
        .edges()
        .iter()
        .map(|&(a, _)| g.neighbors(a).iter().map(|&j| m(a, j)).collect())
        .collect();
    let fb = list_edge_coloring_bipartite(&b, &lists)?;
    let mut edge = vec![0; c.graph.size()];
    for (e, &(x, y)) in c.graph.edges().iter().enumerate() {
        edge[e] = if y < n { m(x, y) } else { fb.edge(b.edge_id(x, y).unwrap()) };
    }
    let mut vertex: Vec<Color> = (0..n).map(|i| m(i, i)).collect();
    for w in c.part2() {
        let (x, y) = (c.graph.neighbors(w)[0], c.graph.neighbors(w)[1]);
        let used = [vertex[x], vertex[y], fb.edge(b.edge_id(x, w).unwrap()), fb.edge(b.edge_id(y, w).unwrap())];
        let k = mex(used);
        if k as usize > order {
            return Err(Error::ConstructionDefect(format!("no free color for subdivision vertex {w}")));
        }
        vertex.push(k);
    }
    Ok((c, TotalColoring::total(vertex, edge)))
}

fn regular_central(g: &Graph) -> Result<usize> {
    require_connected(g, 5)?;
    match g.regular_degree() {
        Some(d) => Ok(d),
        None => precondition("graph is not regular"),
    }
}

/// Proper total coloring of `C(G)` with `n` colors for a connected regular
/// graph of odd order `n ≥ 5`.
pub fn total_coloring_central_regular_odd(g: &Graph) -> Result<ConstructionResult> {
    regular_central(g)?;
    let n = g.order();
    if n.is_multiple_of(2) {
        return precondition(format!("order {n} is even"));
    }
    let (c, f) = icls_scheme(g, n)?;
    let ok = is_proper(&c.graph, &f, Kind::Total)?;
    Ok(ConstructionResult::new("4.5", c.graph, f, n, "icls-galvin", ok))
}

/// Total distinguishing coloring of `C(G)` with `Δ(C(G)) + 1 = n` colors.
///
/// Odd orders reuse the Latin square coloring, whose source vertices all
/// get distinct colors. Even orders need `G ≠ K_n` and
/// `6Δ(G) + 29 ≤ 2n`, and go through [`total_dist_coloring_central_even`].
pub fn total_dist_coloring_central_regular(g: &Graph) -> Result<ConstructionResult> {
    let d = regular_central(g)?;
    let n = g.order();
    let r = if n % 2 == 1 {
        let (c, f) = icls_scheme(g, n)?;
        let ok = is_proper(&c.graph, &f, Kind::Total)? && distinguishes(&c.graph, &f, Kind::Total)?;
        ConstructionResult::new("4.5", c.graph, f, n, "icls-galvin", ok)
    } else {
        if g.is_complete() {
            return precondition("even order complete graph");
        }
        if 6 * d + 29 > 2 * n {
            return precondition(format!("Δ = {d} exceeds (2n - 29)/6 for n = {n}"));
        }
        total_dist_coloring_central_even(g)?
    };
    if !r.verified {
        return Err(Error::ConstructionDefect(format!("coloring via {} is not total distinguishing", r.route)));
    }
    Ok(r)
}

/// The complement-first coloring of `C(G)` for a regular non-complete `G`:
/// a total distinguishing coloring of `Ḡ` with `Δ(Ḡ) + 1` colors, or
/// `Δ(Ḡ) + 2` when none exists, found by search; fresh König colors on the
/// subdivision edges; edges that landed on color `n + 1` moved into the
/// complement palette; subdivision vertices last.
///
/// Applies to any order; the degree bound of the theorem only guarantees
/// that the complement coloring exists.
pub fn total_dist_coloring_central_even(g: &Graph) -> Result<ConstructionResult> {
    regular_central(g)?;
    if g.is_complete() {
        return precondition("graph is complete");
    }
    let n = g.order();
    let gbar = g.complement();
    let dbar = gbar.max_degree() as Color;
    let opts = SearchOptions::default();
    let (f1, p, case) = match upper_bound_witness(&gbar, ParamKind::TotalDistinguishing, dbar + 1, opts)? {
        Some(f) => (f, dbar + 1, "i"),
        None => match upper_bound_witness(&gbar, ParamKind::TotalDistinguishing, dbar + 2, opts)? {
            Some(f) => (f, dbar + 2, "ii"),
            None => return Err(Error::ConstructionDefect(format!("complement has no total distinguishing coloring with {} colors", dbar + 2))),
        },
    };
    let c = central(g);
    let b = subdivision(g).graph;
    let mut fb: Vec<Color> = konig(&b).into_iter().map(|k| k + p).collect();
    let mut vertex: Vec<Color> = (0..n).map(|v| f1.vertex(v)).collect();
    let comp_at = |u: usize| gbar.neighbors(u).iter().map(|&x| f1.edge(gbar.edge_id(u, x).unwrap())).collect::<Vec<_>>();
    for (e, &(u, _)) in b.edges().iter().enumerate() {
        if fb[e] == n as Color + 1 {
            let mut used = comp_at(u);
            used.push(vertex[u]);
            let k = mex(used);
            if k > dbar + 2 {
                return Err(Error::ConstructionDefect(format!("no complement color left at vertex {u}")));
            }
            fb[e] = k;
        }
    }
    for w in c.part2() {
        let (x, y) = (c.graph.neighbors(w)[0], c.graph.neighbors(w)[1]);
        let k = mex([vertex[x], vertex[y], fb[b.edge_id(x, w).unwrap()], fb[b.edge_id(y, w).unwrap()]]);
        vertex.push(k);
    }
    let edge = c
        .graph
        .edges()
        .iter()
        .map(|&(x, y)| if y < n { f1.edge(gbar.edge_id(x, y).unwrap()) } else { fb[b.edge_id(x, y).unwrap()] })
        .collect();
    let f = TotalColoring::total(vertex, edge);
    let ok = is_proper(&c.graph, &f, Kind::Total)? && distinguishes(&c.graph, &f, Kind::Total)?;
    Ok(ConstructionResult::new("4.5", c.graph, f, n, format!("complement-search case {case}"), ok))
}

/// Assigns source vertices of `S(G)` colors from their leftover sets,
/// backtracking until every subdivision vertex has a free color in
/// `1..=top`. `pinned` carries a vertex forced to color `top + 1`.
fn leftover_vertex_colors(s: &TaggedGraph, edge: &[Color], top: Color, pinned: Option<usize>) -> Option<Vec<Color>> {
    const NODE_LIMIT: u64 = 200_000;
    let n = s.n();
    let g = &s.graph;
    let at = |v: usize| g.neighbors(v).iter().map(|&w| edge[g.edge_id(v, w).unwrap()]).collect::<Vec<_>>();
    let options: Vec<Vec<Color>> = (0..n)
        .map(|v| {
            if pinned == Some(v) {
                return vec![top + 1];
            }
            let used = at(v);
            (1..=top).filter(|k| !used.contains(k)).collect()
        })
        .collect();
    let free_at = |w: usize, colors: &[Color]| {
        let (x, y) = (g.neighbors(w)[0], g.neighbors(w)[1]);
        let mut used = at(w);
        used.extend([colors[x], colors[y]]);
        (1..=top).find(|k| !used.contains(k))
    };
    let mut colors = vec![0; n];
    let mut nodes = 0u64;
    fn go(
        v: usize,
        colors: &mut Vec<Color>,
        options: &[Vec<Color>],
        nodes: &mut u64,
        ok: &dyn Fn(usize, &[Color]) -> bool,
    ) -> bool {
        if v == options.len() {
            return true;
        }
        for &k in &options[v] {
            *nodes += 1;
            if *nodes > NODE_LIMIT {
                return false;
            }
            colors[v] = k;
            if ok(v, colors) && go(v + 1, colors, options, nodes, ok) {
                return true;
            }
        }
        colors[v] = 0;
        false
    }
    // every subdivision vertex whose endpoints are both colored keeps a free color
    let ok = |v: usize, colors: &[Color]| {
        g.neighbors(v).iter().all(|&w| {
            let (x, y) = (g.neighbors(w)[0], g.neighbors(w)[1]);
            colors[x + y - v] == 0 || (x + y - v) > v || free_at(w, colors).is_some()
        })
    };
    go(0, &mut colors, &options, &mut nodes, &ok).then(|| {
        let tail: Vec<Color> = s.part2().map(|w| free_at(w, &colors).unwrap()).collect();
        colors.extend(tail);
        colors
    })
}

/// Total distinguishing coloring of `S(G)` with `Δ(S(G)) + 1` colors when
/// `Aut(G)` fixes a vertex, `Δ(S(G)) + 2` otherwise.
///
/// The edges get a König coloring; source vertices pick from the colors
/// their edges leave free so that every subdivision vertex can be colored.
/// Without a fixed vertex one source vertex is recolored `Δ(S(G)) + 2`,
/// trying vertices in label order. When no such choice exists (paths and
/// cycles leave only three colors for four constraints) the coloring is
/// found by search, which the `route` field reports.
pub fn total_dist_coloring_subdivision(g: &Graph) -> Result<ConstructionResult> {
    require_connected(g, 5)?;
    let n = g.order();
    let s = subdivision(g);
    let d = s.graph.max_degree() as Color;
    let fixed = !automorphisms_with(g, AutCaps::wide())?.fixed_vertices().is_empty();
    let bound = if fixed { d + 1 } else { d + 2 };
    let group = automorphisms_with(&s.graph, AutCaps::wide())?;
    let edge = konig(&s.graph);
    let pins: Vec<Option<usize>> = if fixed { vec![None] } else { (0..n).map(Some).collect() };
    for pin in pins {
        let Some(vertex) = leftover_vertex_colors(&s, &edge, d + 1, pin) else { continue };
        let f = TotalColoring::total(vertex, edge.clone());
        if is_proper(&s.graph, &f, Kind::Total)? && is_distinguishing_in(&group, &s.graph, &f, Kind::Total) {
            let route = match pin {
                None => "konig-leftover".to_string(),
                Some(x) => format!("konig-leftover pinned {x}"),
            };
            return Ok(ConstructionResult::new("4.9", s.graph, f, bound as usize, route, true));
        }
    }
    let f = upper_bound_witness(&s.graph, ParamKind::TotalDistinguishing, bound, SearchOptions::default())?
        .ok_or_else(|| Error::ConstructionDefect(format!("no total distinguishing coloring of S(G) with {bound} colors")))?;
    let ok = is_proper(&s.graph, &f, Kind::Total)? && is_distinguishing_in(&group, &s.graph, &f, Kind::Total);
    Ok(ConstructionResult::new("4.9", s.graph, f, bound as usize, "search", ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn odd_regular_examples() {
        for g in [cycle(5), complete(5), cycle(7)] {
            let r = total_coloring_central_regular_odd(&g).unwrap();
            assert!(r.passes());
            assert_eq!(r.palette_size, g.order());
        }
        assert!(matches!(total_coloring_central_regular_odd(&cycle(6)), Err(Error::Precondition(_))));
        assert!(matches!(total_coloring_central_regular_odd(&path(5)), Err(Error::Precondition(_))));
    }

    #[test]
    fn colors_at_source_vertex_come_from_its_row() {
        let g = cycle(5);
        let (c, f) = icls_scheme(&g, 5).unwrap();
        let sq = icls(3);
        for u in 0..5 {
            let mut at = vec![f.vertex(u)];
            at.extend(c.graph.neighbors(u).iter().map(|&x| f.edge(c.graph.edge_id(u, x).unwrap())));
            let set: BTreeSet<Color> = at.iter().copied().collect();
            assert_eq!(set.len(), at.len());
            assert!(set.iter().all(|k| sq.row(u + 1).contains(k)));
        }
    }

    #[test]
    fn distinguishing_regular() {
        for g in [cycle(5), complete(5)] {
            let r = total_dist_coloring_central_regular(&g).unwrap();
            assert!(r.passes());
            let v: BTreeSet<Color> = (0..5).map(|i| r.coloring.vertex(i)).collect();
            assert_eq!(v.len(), 5);
        }
        assert!(matches!(total_dist_coloring_central_regular(&cycle(6)), Err(Error::Precondition(_))));
        assert!(matches!(total_dist_coloring_central_regular(&complete(6)), Err(Error::Precondition(_))));
    }

    #[test]
    fn even_complement_route() {
        for g in [cycle(6), cycle(8)] {
            let r = total_dist_coloring_central_even(&g).unwrap();
            assert!(r.passes(), "{g:?} via {}", r.route);
        }
    }

    #[test]
    fn subdivision_examples() {
        let r = total_dist_coloring_subdivision(&star(4)).unwrap();
        assert!(r.passes());
        assert_eq!(r.promised_bound, 5);
        let r = total_dist_coloring_subdivision(&path(5)).unwrap();
        assert!(r.passes());
        assert_eq!(r.promised_bound, 3);
        let r = total_dist_coloring_subdivision(&complete(5)).unwrap();
        assert!(r.passes());
        assert_eq!(r.promised_bound, 6);
    }
}
