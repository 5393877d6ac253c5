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

//! Distinguishing colorings of central, endline and middle graphs.

use std::collections::VecDeque;

use crate::coloring::{check_coverage, Color, Kind, TotalColoring};
use crate::constructive::{ceil_sqrt, distinguishes, require_connected, ConstructionResult};
use crate::error::{contract, Error, Result};
use crate::graph::Graph;
use crate::oracle::{exact_parameter, upper_bound_witness, ParamKind, SearchOptions};
use crate::transforms::{central, endline, middle, TaggedGraph};

/// Breadth-first spanning forest from one or more roots, visiting
/// neighbours in increasing label order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsFrame {
    pub roots: Vec<usize>,
    /// Distance to the nearest root.
    pub dist: Vec<usize>,
    /// `layers[k]` holds the vertices at distance `k`.
    pub layers: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl BfsFrame {
    pub fn new(g: &Graph, root: usize) -> BfsFrame {
        BfsFrame::from_roots(g, &[root])
    }

    pub fn from_roots(g: &Graph, roots: &[usize]) -> BfsFrame {
        let n = g.order();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut queue = VecDeque::new();
        for &r in roots {
            dist[r] = 0;
            queue.push_back(r);
        }
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = Some(u);
                    children[u].push(v);
                    queue.push_back(v);
                }
            }
        }
        let depth = dist.iter().filter(|&&d| d != usize::MAX).max().map_or(0, |&d| d + 1);
        let mut layers = vec![Vec::new(); depth];
        for v in 0..n {
            if dist[v] != usize::MAX {
                layers[dist[v]].push(v);
            }
        }
        BfsFrame { roots: roots.to_vec(), dist, layers, parent, children }
    }

    pub fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }
}

/// Edge colors of `C(G)` described on `G`: `half[v][u]` colors the edge
/// between `v` and the subdivision vertex of `{v, u}`, `comp` colors the
/// complement edges.
struct Halves {
    n: usize,
    half: Vec<Color>,
    comp: Vec<Color>,
}

impl Halves {
    fn new(n: usize, half: Color, comp: Color) -> Halves {
        Halves { n, half: vec![half; n * n], comp: vec![comp; n * n] }
    }

    fn set_pair(&mut self, v: usize, u: usize, (a, b): (Color, Color)) {
        self.half[v * self.n + u] = a;
        self.half[u * self.n + v] = b;
    }

    fn pair(&self, v: usize, u: usize) -> (Color, Color) {
        (self.half[v * self.n + u], self.half[u * self.n + v])
    }

    fn set_comp(&mut self, u: usize, v: usize, c: Color) {
        self.comp[u * self.n + v] = c;
        self.comp[v * self.n + u] = c;
    }

    fn assemble(&self, c: &TaggedGraph) -> TotalColoring {
        let n = self.n;
        let colors = c
            .graph
            .edges()
            .iter()
            .map(|&(a, b)| {
                if b < n {
                    self.comp[a * n + b]
                } else {
                    let other = match c.origin_of(b) {
                        Some(crate::transforms::Origin::Edge(x, y)) => x + y - a,
                        _ => unreachable!("part2 of a central graph holds subdivision vertices"),
                    };
                    self.half[a * n + other]
                }
            })
            .collect();
        TotalColoring::edges(colors)
    }
}

/// All pairs over `1..=d` in lexicographic order, without `skip` and with
/// `last` moved to the end.
fn codes(d: Color, skip: &[(Color, Color)], last: Option<(Color, Color)>) -> Vec<(Color, Color)> {
    let mut out: Vec<_> = (1..=d)
        .flat_map(|a| (1..=d).map(move |b| (a, b)))
        .filter(|p| !skip.contains(p) && Some(*p) != last)
        .collect();
    if let Some(p) = last.filter(|p| !skip.contains(p)) {
        out.push(p);
    }
    out
}

fn give_codes(h: &mut Halves, v: usize, kids: &[usize], list: &[(Color, Color)]) -> Option<()> {
    for (k, &u) in kids.iter().enumerate() {
        h.set_pair(v, u, *list.get(k)?);
    }
    Some(())
}

fn is_bridge(g: &Graph, u: usize, v: usize) -> bool {
    let h = Graph::from_fn(g.order(), |i, j| g.has_edge(i, j) && (i, j) != (u.min(v), u.max(v)));
    !h.is_connected()
}

/// Central vertex or central edge of a tree.
fn tree_center(g: &Graph) -> Vec<usize> {
    let ecc: Vec<usize> = (0..g.order()).map(|v| g.distances(v).into_iter().flatten().max().unwrap_or(0)).collect();
    let r = *ecc.iter().min().unwrap();
    (0..g.order()).filter(|&v| ecc[v] == r).collect()
}

fn tree_route(g: &Graph, d: Color) -> Option<Halves> {
    let mut h = Halves::new(g.order(), 0, 1);
    let centre = tree_center(g);
    let frame = BfsFrame::from_roots(g, &centre);
    if let [x, y] = centre[..] {
        h.set_pair(x, y, (1, 2));
    }
    let all = codes(d, &[], None);
    for v in 0..g.order() {
        give_codes(&mut h, v, &frame.children[v], &all)?;
    }
    Some(h)
}

/// The cycle-rooted route: a root on a cycle with vertices at distance 2,
/// two of its children sharing the pair `(1, 1)`, and complement edges
/// from the root telling those two children apart.
fn cycle_root_route(g: &Graph, d: Color) -> Option<(Halves, usize)> {
    let n = g.order();
    let on_cycle = |v: usize| g.neighbors(v).iter().any(|&u| !is_bridge(g, v, u));
    let v0 = (0..n).find(|&v| on_cycle(v) && g.distances(v).contains(&Some(2)))?;
    let frame = BfsFrame::new(g, v0);
    let s1 = &frame.layers[1];
    let v1 = *s1.iter().find(|&&v| !frame.children[v].is_empty())?;
    let v2 = *s1.iter().find(|&&v| v != v1)?;
    let mut h = Halves::new(n, 2, 2);
    let rest = codes(d, &[(1, 1)], Some((2, 2)));
    let mut k = 0;
    for &u in &frame.children[v0] {
        if u == v1 || u == v2 {
            h.set_pair(v0, u, (1, 1));
        } else {
            h.set_pair(v0, u, *rest.get(k)?);
            k += 1;
        }
    }
    for v in (0..n).filter(|&v| v != v0) {
        give_codes(&mut h, v, &frame.children[v], &rest)?;
    }
    for &u in &frame.children[v1] {
        h.set_comp(v0, u, 1);
    }
    Some((h, v0))
}

/// Number of tree pairs seen from `v` that equal `(1, 1)`.
fn doubled_ones(g: &Graph, frame: &BfsFrame, h: &Halves, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&u| frame.is_tree_edge(v, u) && h.pair(v, u) == (1, 1)).count()
}

/// The root-signature route: every complement edge at the root is colored
/// 1 and all other complement edges 2.
fn root_signature_route(g: &Graph, d: Color) -> Option<Halves> {
    let n = g.order();
    let v0 = (0..n).find(|&v| n - 1 - g.degree(v) >= 2).unwrap_or(0);
    let frame = BfsFrame::new(g, v0);
    let mut h = Halves::new(n, 2, 2);
    give_codes(&mut h, v0, &frame.children[v0], &codes(d, &[], Some((2, 2))))?;
    let rest = codes(d, &[(2, 2)], None);
    for v in (0..n).filter(|&v| v != v0) {
        give_codes(&mut h, v, &frame.children[v], &rest)?;
    }
    for u in (0..n).filter(|&u| u != v0 && !g.has_edge(v0, u)) {
        h.set_comp(v0, u, 1);
    }
    Some(h)
}

/// Distinguishing edge coloring of `C(G)` with at most `⌈√Δ(G)⌉` colors.
///
/// Trees color pairs outward from the centre. Other graphs first try the
/// cycle-rooted route and fall back to the root-signature route when the
/// check against `Aut(C(G))` rejects it; complete graphs and cycles use the
/// root-signature route directly. The `route` field records the outcome.
pub fn dist_edge_coloring_central(g: &Graph) -> Result<ConstructionResult> {
    require_connected(g, 4)?;
    let d = ceil_sqrt(g.max_degree()) as Color;
    let c = central(g);
    let mut tried = Vec::new();
    let mut candidates: Vec<(&str, Option<Halves>)> = Vec::new();
    if g.is_tree() {
        candidates.push(("tree-center", tree_route(g, d)));
    } else {
        if !g.is_complete() && !g.is_cycle() {
            let cyc = cycle_root_route(g, d).map(|(h, v0)| {
                let frame = BfsFrame::new(g, v0);
                let unique = (0..g.order()).all(|v| (doubled_ones(g, &frame, &h, v) >= 2) == (v == v0));
                debug_assert!(unique, "root must be the only vertex with (1,1) twice");
                h
            });
            candidates.push(("cycle-root", cyc));
        }
        candidates.push(("root-signature", root_signature_route(g, d)));
    }
    for (route, h) in candidates {
        let Some(h) = h else {
            tried.push(route);
            continue;
        };
        let f = h.assemble(&c);
        if distinguishes(&c.graph, &f, Kind::Edge)? {
            let route = if tried.is_empty() { route.to_string() } else { format!("{route} (after {})", tried.join(", ")) };
            return Ok(ConstructionResult::new("3.2", c.graph, f, d as usize, route, true));
        }
        tried.push(route);
    }
    Err(Error::ConstructionDefect(format!("no edge coloring route distinguished C(G); tried {}", tried.join(", "))))
}

/// Distinguishing vertex coloring of `C(G)` with at most `⌈√Δ(G)⌉` colors:
/// a total distinguishing coloring of `G` found by search, copied to the
/// source vertices, with each edge color moved to its subdivision vertex.
pub fn dist_vertex_coloring_central(g: &Graph) -> Result<ConstructionResult> {
    require_connected(g, 4)?;
    let d = ceil_sqrt(g.max_degree()) as u32;
    let f = upper_bound_witness(g, ParamKind::DDoublePrime, d, SearchOptions::default())?
        .ok_or_else(|| Error::ConstructionDefect(format!("no total distinguishing coloring of G with {d} colors")))?;
    let mut colors = f.vertex_colors.clone().unwrap();
    colors.extend(f.edge_colors.clone().unwrap());
    let c = central(g);
    let lifted = TotalColoring::vertices(colors);
    let ok = distinguishes(&c.graph, &lifted, Kind::Vertex)?;
    Ok(ConstructionResult::new("3.4", c.graph, lifted, d as usize, "search-lift", ok))
}

/// An edge coloring of `G⁺` and whether only the identity preserves it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndlineColoring {
    pub graph: Graph,
    pub coloring: TotalColoring,
    pub distinguishing: bool,
}

/// Extends a distinguishing edge coloring of `G` to `G⁺` by coloring every
/// pendant edge 1.
pub fn dist_edge_coloring_endline(g: &Graph, coloring: &TotalColoring) -> Result<EndlineColoring> {
    check_coverage(g, coloring, Kind::Edge)?;
    if !distinguishes(g, coloring, Kind::Edge)? {
        return contract("edge coloring of G is not distinguishing");
    }
    let n = g.order();
    let e = endline(g);
    let colors = e
        .graph
        .edges()
        .iter()
        .map(|&(a, b)| if b < n { coloring.edge(g.edge_id(a, b).unwrap()) } else { 1 })
        .collect();
    let f = TotalColoring::edges(colors);
    let distinguishing = distinguishes(&e.graph, &f, Kind::Edge)?;
    Ok(EndlineColoring { graph: e.graph, coloring: f, distinguishing })
}

/// Distinguishing vertex coloring of `M(G)` with at most `Δ(G)` colors.
///
/// For cycles the root, its first subdivision vertex and nothing else get
/// color 2. Otherwise a minimum distinguishing edge coloring of `G` is
/// found by search, extended to `G⁺`, and carried over to `M(G)`: the
/// source vertex `v` takes the color of its pendant edge and the
/// subdivision vertex of `e` takes the color of `e`.
pub fn dist_vertex_coloring_middle(g: &Graph) -> Result<ConstructionResult> {
    require_connected(g, 3)?;
    let n = g.order();
    let m = middle(g);
    let delta = g.max_degree();
    let (colors, route) = if g.is_cycle() {
        let w01 = m.subdivision_vertex(0, 1).unwrap();
        let colors = (0..m.graph.order()).map(|v| if v == 0 || v == w01 { 2 } else { 1 }).collect();
        (colors, "cycle")
    } else {
        let r = exact_parameter(g, ParamKind::DPrime, delta as u32, SearchOptions::default())?;
        let base = r.witness.ok_or_else(|| Error::ConstructionDefect(format!("no distinguishing edge coloring of G with Δ = {delta} colors")))?;
        let plus = dist_edge_coloring_endline(g, &base)?;
        let pendant = |v: usize| plus.coloring.edge(plus.graph.edge_id(v, n + v).unwrap());
        let mut colors: Vec<Color> = (0..n).map(pendant).collect();
        colors.extend(base.edge_colors.unwrap());
        (colors, "search-endline")
    };
    let f = TotalColoring::vertices(colors);
    let ok = distinguishes(&m.graph, &f, Kind::Vertex)?;
    Ok(ConstructionResult::new("3.6", m.graph, f, delta, route, ok))
}

/// Distinguishing edge coloring of `M(G)` with at most three colors, found
/// by search.
pub fn dist_edge_coloring_middle(g: &Graph) -> Result<ConstructionResult> {
    require_connected(g, 1)?;
    let m = middle(g);
    let f = upper_bound_witness(&m.graph, ParamKind::DPrime, 3, SearchOptions::default())?
        .ok_or_else(|| Error::ConstructionDefect("no distinguishing 3-edge-coloring of M(G)".into()))?;
    let ok = distinguishes(&m.graph, &f, Kind::Edge)?;
    Ok(ConstructionResult::new("3.6", m.graph, f, 3, "search", ok))
}
