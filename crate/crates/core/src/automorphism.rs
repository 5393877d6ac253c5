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

//! Automorphism groups, isomorphism search and lifts of automorphisms to
//! transformed graphs.
//!
//! Both searches use individualization-refinement: the left side follows a
//! fixed chain of individualized vertices, the right side branches over
//! every vertex of the matching cell, and branches whose refinement trace
//! differs from the left trace are cut.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{contract, Error, Result};
use crate::graph::Graph;
use crate::transforms::{central, endline, line_graph, middle, subdivision};

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Permutation {
    pub image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    /// Checks that `image` is a bijection.
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Input(format!("{image:?} is not a permutation")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.len() == g.order()
            && g.edges().iter().all(|&(u, v)| g.has_edge(self.image[u], self.image[v]))
    }
}

/// Limits on automorphism enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutCaps {
    pub max_vertices: usize,
    pub max_order: u64,
}

impl Default for AutCaps {
    fn default() -> Self {
        AutCaps { max_vertices: 24, max_order: 10_000_000 }
    }
}

impl AutCaps {
    /// Caps used by constructions and oracles, which routinely handle
    /// transformed graphs with more than 24 vertices.
    pub fn wide() -> Self {
        AutCaps { max_vertices: 64, max_order: 10_000_000 }
    }
}

/// The full automorphism group, sorted lexicographically by image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutGroup {
    pub n: usize,
    pub elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Vertices fixed by every automorphism.
    pub fn fixed_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.elements.iter().all(|p| p.apply(v) == v)).collect()
    }

    /// Orbit representative (smallest member) of each vertex.
    pub fn orbit_reps(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.elements.iter().map(|p| p.apply(v)).min().unwrap_or(v)).collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Vertex colouring by cell index; cells are numbered in a label-free order.
#[derive(Clone)]
struct Cells {
    color: Vec<usize>,
    count: usize,
}

impl Cells {
    fn unit(g: &Graph) -> Cells {
        Cells { color: vec![0; g.order()], count: usize::from(g.order() > 0) }
    }

    fn discrete(&self) -> bool {
        self.count == self.color.len()
    }

    fn members(&self, c: usize) -> Vec<usize> {
        (0..self.color.len()).filter(|&v| self.color[v] == c).collect()
    }

    /// Smallest non-singleton cell, lowest index on ties.
    fn target(&self) -> usize {
        let mut size = vec![0usize; self.count];
        for &c in &self.color {
            size[c] += 1;
        }
        (0..self.count).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c)).unwrap()
    }

    fn individualize(&self, v: usize) -> Cells {
        let c = self.color[v];
        let color = self
            .color
            .iter()
            .enumerate()
            .map(|(u, &d)| if d > c || (d == c && u != v) { d + 1 } else { d })
            .collect();
        Cells { color, count: self.count + 1 }
    }

    /// Iterated neighbour-colour refinement; returns a hash of the trace.
    fn refine(&mut self, g: &Graph) -> u64 {
        let n = g.order();
        let mut h = DefaultHasher::new();
        loop {
            let mut keys: Vec<(usize, Vec<usize>, usize)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| self.color[u]).collect();
                    nb.sort_unstable();
                    (self.color[v], nb, v)
                })
                .collect();
            keys.sort_unstable();
            let mut next = 0;
            for k in 0..n {
                let fresh = k == 0 || (keys[k].0, &keys[k].1) != (keys[k - 1].0, &keys[k - 1].1);
                if fresh {
                    if k > 0 {
                        next += 1;
                    }
                    (k, keys[k].0, &keys[k].1).hash(&mut h);
                }
                self.color[keys[k].2] = next;
            }
            let count = if n == 0 { 0 } else { next + 1 };
            count.hash(&mut h);
            if count == self.count {
                return h.finish();
            }
            self.count = count;
        }
    }
}

struct Level {
    cells: Cells,
    trace: u64,
}

/// The fixed left chain: refined partitions after each individualization.
fn left_chain(g: &Graph) -> (Vec<Level>, Vec<usize>) {
    let mut cells = Cells::unit(g);
    let trace = cells.refine(g);
    let mut levels = vec![Level { cells, trace }];
    let mut targets = Vec::new();
    while !levels.last().unwrap().cells.discrete() {
        let cur = &levels.last().unwrap().cells;
        let t = cur.target();
        targets.push(t);
        let v = cur.members(t)[0];
        let mut next = cur.individualize(v);
        let trace = next.refine(g);
        levels.push(Level { cells: next, trace });
    }
    (levels, targets)
}

struct Search<'a> {
    left: &'a Graph,
    right: &'a Graph,
    levels: &'a [Level],
    targets: &'a [usize],
    found: &'a AtomicU64,
    max_order: u64,
    first_only: bool,
}

impl Search<'_> {
    fn leaf(&self, right: &Cells) -> Option<Permutation> {
        let left = &self.levels.last().unwrap().cells;
        let mut by_color = vec![0; right.color.len()];
        for (v, &c) in right.color.iter().enumerate() {
            by_color[c] = v;
        }
        let image: Vec<usize> = left.color.iter().map(|&c| by_color[c]).collect();
        let p = Permutation { image };
        let ok = self.left.size() == self.right.size()
            && self.left.edges().iter().all(|&(u, v)| self.right.has_edge(p.apply(u), p.apply(v)));
        ok.then_some(p)
    }

    fn descend(&self, depth: usize, right: Cells, out: &mut Vec<Permutation>) -> Result<()> {
        if depth + 1 == self.levels.len() {
            if let Some(p) = self.leaf(&right) {
                let k = self.found.fetch_add(1, Ordering::Relaxed) + 1;
                if k > self.max_order {
                    return Err(Error::CapExceeded {
                        what: "automorphism group order".into(),
                        cap: self.max_order,
                    });
                }
                out.push(p);
            }
            return Ok(());
        }
        for v in right.members(self.targets[depth]) {
            if self.first_only && !out.is_empty() {
                break;
            }
            self.branch(depth, &right, v, out)?;
        }
        Ok(())
    }

    fn branch(&self, depth: usize, right: &Cells, v: usize, out: &mut Vec<Permutation>) -> Result<()> {
        let mut next = right.individualize(v);
        if next.refine(self.right) == self.levels[depth + 1].trace {
            self.descend(depth + 1, next, out)?;
        }
        Ok(())
    }
}

fn check_caps(g: &Graph, caps: AutCaps) -> Result<()> {
    if g.order() > caps.max_vertices {
        return Err(Error::CapExceeded { what: format!("order {}", g.order()), cap: caps.max_vertices as u64 });
    }
    Ok(())
}

/// All automorphisms of `g` under the default caps.
pub fn automorphisms(g: &Graph) -> Result<AutGroup> {
    automorphisms_with(g, AutCaps::default())
}

pub fn automorphisms_with(g: &Graph, caps: AutCaps) -> Result<AutGroup> {
    check_caps(g, caps)?;
    let (levels, targets) = left_chain(g);
    let found = AtomicU64::new(0);
    let search = Search {
        left: g,
        right: g,
        levels: &levels,
        targets: &targets,
        found: &found,
        max_order: caps.max_order,
        first_only: false,
    };
    let root = levels[0].cells.clone();
    let mut elements = if levels.len() == 1 {
        let mut out = Vec::new();
        search.descend(0, root, &mut out)?;
        out
    } else {
        let parts: Vec<Result<Vec<Permutation>>> = root
            .members(targets[0])
            .into_par_iter()
            .map(|v| {
                let mut out = Vec::new();
                search.branch(0, &root, v, &mut out)?;
                Ok(out)
            })
            .collect();
        let mut all = Vec::new();
        for p in parts {
            all.extend(p?);
        }
        all
    };
    elements.sort_unstable();
    Ok(AutGroup { n: g.order(), elements })
}

/// An isomorphism `p` from `g` to `h` (`{u,v} ∈ E(g)` iff `{p(u),p(v)} ∈ E(h)`).
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
    find_isomorphism_with(g, h, AutCaps::default())
}

pub fn find_isomorphism_with(g: &Graph, h: &Graph, caps: AutCaps) -> Result<Option<Permutation>> {
    check_caps(g, caps)?;
    check_caps(h, caps)?;
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(None);
    }
    let (levels, targets) = left_chain(g);
    let mut root = Cells::unit(h);
    if root.refine(h) != levels[0].trace {
        return Ok(None);
    }
    let found = AtomicU64::new(0);
    let search = Search {
        left: g,
        right: h,
        levels: &levels,
        targets: &targets,
        found: &found,
        max_order: u64::MAX,
        first_only: true,
    };
    let mut out = Vec::new();
    search.descend(0, root, &mut out)?;
    Ok(out.into_iter().next())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism_with(g, h, AutCaps::wide())?.is_some())
}

fn require_automorphism(alpha: &Permutation, g: &Graph) -> Result<()> {
    if alpha.is_automorphism_of(g) {
        Ok(())
    } else {
        contract(format!("{:?} is not an automorphism of the source graph", alpha.image))
    }
}

/// Lift of `alpha ∈ Aut(G)` to the central graph: source vertices move by
/// `alpha`, the subdivision vertex of `{x,y}` goes to that of
/// `{alpha(x), alpha(y)}`. The same map is an automorphism of the
/// subdivision and middle graphs, which share the label layout.
pub fn lift_to_central(alpha: &Permutation, g: &Graph) -> Result<Permutation> {
    require_automorphism(alpha, g)?;
    let n = g.order();
    let mut image: Vec<usize> = alpha.image.clone();
    for &(x, y) in g.edges() {
        let k = g.edge_id(alpha.apply(x), alpha.apply(y)).expect("automorphism maps edges to edges");
        image.push(n + k);
    }
    Ok(Permutation { image })
}

/// Lift of `alpha ∈ Aut(G)` to the endline graph: the pendant of `v`
/// follows `v`.
pub fn lift_to_endline(alpha: &Permutation, g: &Graph) -> Result<Permutation> {
    require_automorphism(alpha, g)?;
    let n = g.order();
    let mut image = alpha.image.clone();
    image.extend(alpha.image.iter().map(|&y| n + y));
    Ok(Permutation { image })
}

/// Group orders along the chain of transforms plus the lift checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutChainReport {
    pub applicable: bool,
    pub reason: Option<String>,
    pub graph: usize,
    pub line: usize,
    pub subdivision: usize,
    pub central: usize,
    pub middle: usize,
    pub endline: usize,
    /// Lifts of `Aut(G)` coincide with the enumerated groups of `C(G)`,
    /// `S(G)`, `M(G)` and `G⁺`, and restrict back to the original maps.
    pub lifts_exhaust: bool,
    pub holds: bool,
}

/// Compares `|Aut|` of `G`, `L(G)`, `S(G)`, `C(G)`, `M(G)` and `G⁺`.
///
/// Graphs that are disconnected, have fewer than 5 vertices, or are
/// cycles are reported as not applicable.
pub fn check_aut_chain(g: &Graph) -> Result<AutChainReport> {
    let reason = if !g.is_connected() {
        Some("graph is disconnected")
    } else if g.order() < 5 {
        Some("order below 5")
    } else if g.is_cycle() {
        Some("graph is a cycle")
    } else {
        None
    };
    if let Some(r) = reason {
        return Ok(AutChainReport {
            applicable: false,
            reason: Some(r.into()),
            graph: 0,
            line: 0,
            subdivision: 0,
            central: 0,
            middle: 0,
            endline: 0,
            lifts_exhaust: false,
            holds: false,
        });
    }
    let caps = AutCaps::wide();
    let n = g.order();
    let base = automorphisms_with(g, caps)?;
    let line = automorphisms_with(&line_graph(g).0, caps)?;
    let s = subdivision(g);
    let c = central(g);
    let m = middle(g);
    let e = endline(g);
    let gs = automorphisms_with(&s.graph, caps)?;
    let gc = automorphisms_with(&c.graph, caps)?;
    let gm = automorphisms_with(&m.graph, caps)?;
    let ge = automorphisms_with(&e.graph, caps)?;

    let mut edge_lifts = Vec::with_capacity(base.order());
    let mut pendant_lifts = Vec::with_capacity(base.order());
    let mut restrict_ok = true;
    for alpha in &base.elements {
        let l = lift_to_central(alpha, g)?;
        let p = lift_to_endline(alpha, g)?;
        restrict_ok &= l.image[..n] == alpha.image[..] && p.image[..n] == alpha.image[..];
        edge_lifts.push(l);
        pendant_lifts.push(p);
    }
    edge_lifts.sort_unstable();
    pendant_lifts.sort_unstable();
    let lifts_exhaust = restrict_ok
        && edge_lifts == gc.elements
        && edge_lifts == gs.elements
        && edge_lifts == gm.elements
        && pendant_lifts == ge.elements;
    let orders = [line.order(), gs.order(), gc.order(), gm.order(), ge.order()];
    let holds = lifts_exhaust && orders.iter().all(|&o| o == base.order());
    Ok(AutChainReport {
        applicable: true,
        reason: None,
        graph: base.order(),
        line: line.order(),
        subdivision: gs.order(),
        central: gc.order(),
        middle: gm.order(),
        endline: ge.order(),
        lifts_exhaust,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn classic_orders() {
        for n in 1..7 {
            assert_eq!(automorphisms(&complete(n)).unwrap().order(), factorial(n));
            assert_eq!(automorphisms(&Graph::empty(n)).unwrap().order(), factorial(n));
        }
        for n in 2..9 {
            assert_eq!(automorphisms(&path(n)).unwrap().order(), 2);
        }
        for n in 3..9 {
            assert_eq!(automorphisms(&cycle(n)).unwrap().order(), 2 * n);
        }
        assert_eq!(automorphisms(&complete_bipartite(2, 3)).unwrap().order(), 12);
    }

    #[test]
    fn elements_are_sorted_and_start_with_identity() {
        let g = automorphisms(&cycle(5)).unwrap();
        assert!(g.elements[0].is_identity());
        assert!(g.elements.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn caps_are_enforced() {
        let err = automorphisms(&Graph::empty(25)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 24, .. }));
        let small = AutCaps { max_vertices: 24, max_order: 100 };
        assert!(matches!(automorphisms_with(&complete(6), small), Err(Error::CapExceeded { cap: 100, .. })));
    }

    #[test]
    fn isomorphism_examples() {
        let k4 = complete(4);
        assert!(find_isomorphism(&k4, &k4).unwrap().is_some());
        let c5 = cycle(5);
        let p = find_isomorphism(&c5, &c5.complement()).unwrap().unwrap();
        assert!(c5.edges().iter().all(|&(u, v)| c5.complement().has_edge(p.apply(u), p.apply(v))));
        assert!(find_isomorphism(&complete(3), &path(3)).unwrap().is_none());
        assert!(find_isomorphism(&cycle(6), &complete_bipartite(3, 3).complement()).unwrap().is_none());
    }

    #[test]
    fn lifts_are_automorphisms() {
        let g = star(3);
        let swap = Permutation::new(vec![0, 2, 1, 3]).unwrap();
        let lifted = lift_to_central(&swap, &g).unwrap();
        // leaves 1,2 swap, so do their subdivision vertices 4 and 5
        assert_eq!(lifted.image, vec![0, 2, 1, 3, 5, 4, 6]);
        assert!(lifted.is_automorphism_of(&central(&g).graph));
        let bad = Permutation::new(vec![1, 0, 2, 3]).unwrap();
        assert!(matches!(lift_to_central(&bad, &g), Err(Error::Contract(_))));
        let rot = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        let up = lift_to_endline(&rot, &cycle(4)).unwrap();
        assert_eq!(up.image, vec![1, 2, 3, 0, 5, 6, 7, 4]);
    }

    #[test]
    fn chain_examples() {
        let r = check_aut_chain(&star(4)).unwrap();
        assert!(r.holds && r.graph == 24 && r.central == 24 && r.line == 24);
        let r = check_aut_chain(&path(5)).unwrap();
        assert!(r.holds && r.middle == 2);
        assert!(!check_aut_chain(&cycle(5)).unwrap().applicable);
    }
}
