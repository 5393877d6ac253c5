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

//! Small graphs up to isomorphism: connected graphs, trees and regular
//! graphs, grown one vertex at a time and deduplicated by an invariant
//! bucket followed by an isomorphism test.

use std::collections::HashMap;

use crate::automorphism::{find_isomorphism_with, AutCaps};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode_graph6;

/// Largest order for which [`connected_graphs`] enumerates.
pub const MAX_CONNECTED_ORDER: usize = 8;
/// Largest order for which [`trees`] enumerates.
pub const MAX_TREE_ORDER: usize = 10;

fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>, usize)> {
    let mut key: Vec<_> = (0..g.order())
        .map(|v| {
            let nb = g.neighbors(v);
            let mut degs: Vec<usize> = nb.iter().map(|&u| g.degree(u)).collect();
            degs.sort_unstable();
            let tri = nb.iter().enumerate().map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count()).sum();
            (nb.len(), degs, tri)
        })
        .collect();
    key.sort_unstable();
    key
}

/// Keeps the first representative of every isomorphism class, in input
/// order.
fn dedup(candidates: impl IntoIterator<Item = Graph>) -> Result<Vec<Graph>> {
    let mut buckets: HashMap<(usize, Vec<(usize, Vec<usize>, usize)>), Vec<usize>> = HashMap::new();
    let mut out: Vec<Graph> = Vec::new();
    for g in candidates {
        let bucket = buckets.entry((g.size(), invariant(&g))).or_default();
        let mut seen = false;
        for &i in bucket.iter() {
            if find_isomorphism_with(&out[i], &g, AutCaps::wide())?.is_some() {
                seen = true;
                break;
            }
        }
        if !seen {
            bucket.push(out.len());
            out.push(g);
        }
    }
    Ok(out)
}

fn sorted(mut gs: Vec<Graph>) -> Result<Vec<Graph>> {
    let mut keyed = Vec::with_capacity(gs.len());
    for g in gs.drain(..) {
        keyed.push(((g.size(), encode_graph6(&g)?), g));
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

fn extend(g: &Graph, attach: &[usize]) -> Graph {
    let n = g.order();
    Graph::from_fn(n + 1, |i, j| if j == n { attach.contains(&i) } else { g.has_edge(i, j) })
}

/// All connected graphs of order `n ≤ 8`, one per isomorphism class,
/// sorted by size and then graph6 string.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CONNECTED_ORDER {
        return Err(Error::CapExceeded { what: format!("connected graph enumeration of order {n}"), cap: MAX_CONNECTED_ORDER as u64 });
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        // every connected graph has a vertex whose removal keeps it connected
        let candidates = level.iter().flat_map(|g| {
            (1u32..1 << k).map(move |mask| {
                let attach: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
                extend(g, &attach)
            })
        });
        level = dedup(candidates)?;
    }
    sorted(level)
}

/// All trees of order `n ≤ 10`, one per isomorphism class.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::CapExceeded { what: format!("tree enumeration of order {n}"), cap: MAX_TREE_ORDER as u64 });
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let candidates = level.iter().flat_map(|g| (0..k).map(move |v| extend(g, &[v])));
        level = dedup(candidates)?;
    }
    sorted(level)
}

/// All connected `d`-regular graphs of order `n ≤ 8`.
pub fn regular_graphs(d: usize, n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs(n)?.into_iter().filter(|g| g.regular_degree() == Some(d)).collect())
}
