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

//! Edge colorings of bipartite graphs: König's Δ-coloring by alternating
//! paths and Galvin's list coloring by kernels of an oriented line graph.

use std::collections::BTreeSet;

use crate::coloring::{Color, TotalColoring};
use crate::error::{contract, input, Result};
use crate::graph::Graph;

fn sides(g: &Graph) -> Result<Vec<bool>> {
    match g.bipartition() {
        Some(s) => Ok(s),
        None => input("graph is not bipartite"),
    }
}

/// Proper edge coloring with exactly `Δ(G)` colors `1..=Δ`.
pub fn bipartite_edge_coloring(g: &Graph) -> Result<TotalColoring> {
    sides(g)?;
    Ok(TotalColoring::edges(konig(g)))
}

/// König's construction; returns colors indexed by edge id.
pub(crate) fn konig(g: &Graph) -> Vec<Color> {
    let n = g.order();
    let d = g.max_degree();
    // at[v][c] = edge with color c at v, if any
    let mut at = vec![vec![usize::MAX; d + 1]; n];
    let mut color = vec![0usize; g.size()];
    let free = |at: &Vec<Vec<usize>>, v: usize| (1..=d).find(|&c| at[v][c] == usize::MAX).unwrap();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let a = free(&at, u);
        if at[v][a] != usize::MAX {
            let b = free(&at, v);
            // swap a and b along the alternating path from v; it cannot reach u
            let mut path = Vec::new();
            let mut x = v;
            let mut want = a;
            while at[x][want] != usize::MAX {
                let f = at[x][want];
                path.push(f);
                let (p, q) = g.edges()[f];
                x = if p == x { q } else { p };
                want = if want == a { b } else { a };
            }
            for &f in &path {
                let (p, q) = g.edges()[f];
                at[p][color[f]] = usize::MAX;
                at[q][color[f]] = usize::MAX;
            }
            for &f in &path {
                let (p, q) = g.edges()[f];
                color[f] = if color[f] == a { b } else { a };
                at[p][color[f]] = f;
                at[q][color[f]] = f;
            }
        }
        color[e] = a;
        at[u][a] = e;
        at[v][a] = e;
    }
    color.into_iter().map(|c| c as Color).collect()
}

/// Proper edge coloring choosing each edge's color from its list.
///
/// Needs `|lists[e]| ≥ Δ(G)` for every edge. Lists are indexed by edge id.
pub fn list_edge_coloring_bipartite(g: &Graph, lists: &[BTreeSet<Color>]) -> Result<TotalColoring> {
    let side = sides(g)?;
    if lists.len() != g.size() {
        return input(format!("{} lists for {} edges", lists.len(), g.size()));
    }
    let d = g.max_degree();
    if let Some(e) = (0..g.size()).find(|&e| lists[e].len() < d) {
        let (u, v) = g.edges()[e];
        return contract(format!("list of edge {{{u}, {v}}} has {} colors, fewer than Δ = {d}", lists[e].len()));
    }
    Ok(TotalColoring::edges(galvin(g, &side, lists)))
}

/// Repeatedly colors a stable matching among the edges whose lists hold the
/// smallest remaining color. Edges at an `X` vertex prefer higher König
/// colors and at a `Y` vertex lower ones, which keeps every list longer
/// than the out-degree of its edge.
fn galvin(g: &Graph, side: &[bool], lists: &[BTreeSet<Color>]) -> Vec<Color> {
    let rank = konig(g);
    let edges = g.edges();
    let xy = |e: usize| {
        let (u, v) = edges[e];
        if side[u] { (v, u) } else { (u, v) }
    };
    let mut lists: Vec<BTreeSet<Color>> = lists.to_vec();
    let mut out = vec![0; g.size()];
    let mut left: BTreeSet<usize> = (0..g.size()).collect();
    while !left.is_empty() {
        let kappa = left.iter().filter_map(|&e| lists[e].first().copied()).min().expect("lists stay nonempty");
        let pool: Vec<usize> = left.iter().copied().filter(|&e| lists[e].contains(&kappa)).collect();
        for e in stable_matching(g.order(), &pool, &rank, xy) {
            out[e] = kappa;
            left.remove(&e);
        }
        for &e in &pool {
            lists[e].remove(&kappa);
        }
    }
    out
}

/// Gale–Shapley with `X` proposing in decreasing rank and `Y` keeping the
/// lowest rank offered.
fn stable_matching(n: usize, pool: &[usize], rank: &[Color], xy: impl Fn(usize) -> (usize, usize)) -> Vec<usize> {
    let mut offers: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in pool {
        offers[xy(e).0].push(e);
    }
    for o in offers.iter_mut() {
        o.sort_by_key(|&e| rank[e]);
    }
    let mut holder: Vec<Option<usize>> = vec![None; n];
    let mut queue: Vec<usize> = (0..n).filter(|&x| !offers[x].is_empty()).collect();
    while let Some(x) = queue.pop() {
        let Some(e) = offers[x].pop() else { continue };
        let y = xy(e).1;
        match holder[y] {
            None => holder[y] = Some(e),
            Some(f) if rank[e] < rank[f] => {
                holder[y] = Some(e);
                queue.push(xy(f).0);
            }
            Some(_) => queue.push(x),
        }
    }
    let mut m: Vec<usize> = holder.into_iter().flatten().collect();
    m.sort_unstable();
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_proper, Kind};
    use crate::generators::*;
    use crate::transforms::subdivision;

    #[test]
    fn konig_uses_delta_colors() {
        for g in [complete_bipartite(3, 3), path(4), subdivision(&complete(4)).graph, complete_bipartite(2, 5)] {
            let f = bipartite_edge_coloring(&g).unwrap();
            assert!(is_proper(&g, &f, Kind::Edge).unwrap());
            assert_eq!(f.palette_size(), g.max_degree());
        }
        assert!(bipartite_edge_coloring(&cycle(5)).is_err());
    }

    #[test]
    fn list_coloring_on_c4() {
        let g = cycle(4);
        // edges in column order: 01, 12, 23, 03
        let lists: Vec<BTreeSet<Color>> = vec![[1, 2].into(), [2, 3].into(), [3, 4].into(), [4, 1].into()];
        let f = list_edge_coloring_bipartite(&g, &lists).unwrap();
        assert!(is_proper(&g, &f, Kind::Edge).unwrap());
        for e in 0..4 {
            assert!(lists[e].contains(&f.edge(e)));
        }
    }

    #[test]
    fn short_lists_are_a_contract_violation() {
        let g = star(3);
        let lists: Vec<BTreeSet<Color>> = vec![[1, 2].into(), [1, 2].into(), [1, 2].into()];
        assert!(matches!(list_edge_coloring_bipartite(&g, &lists), Err(crate::Error::Contract(_))));
    }
}
