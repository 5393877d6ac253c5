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

//! Subdivision, central, middle, endline and line graphs.
//!
//! Transformed graphs keep the source vertices at labels `0..n` and place
//! the added vertices at `n..`. The subdivision vertex of the `k`-th edge
//! of the source (column-major order) is `n + k`; the pendant attached to
//! `v` in the endline graph is `n + v`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::encode_graph6;

/// Where an added vertex comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Origin {
    /// Subdivision vertex of the source edge `{u, v}`, `u < v`.
    Edge(usize, usize),
    /// Pendant attached to the source vertex.
    Vertex(usize),
}

/// A transformed graph with its split into source and added vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedGraph {
    pub graph: Graph,
    pub source: Graph,
    /// Origins of the added vertices; `origin[k]` belongs to vertex `n + k`.
    pub origin: Vec<Origin>,
}

impl TaggedGraph {
    /// Number of source vertices; they occupy labels `0..n`.
    pub fn n(&self) -> usize {
        self.source.order()
    }

    pub fn part1(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn part2(&self) -> std::ops::Range<usize> {
        self.n()..self.graph.order()
    }

    pub fn in_part1(&self, v: usize) -> bool {
        v < self.n()
    }

    pub fn origin_of(&self, v: usize) -> Option<Origin> {
        v.checked_sub(self.n()).and_then(|k| self.origin.get(k).copied())
    }

    /// The subdivision vertex of source edge `{u, v}`.
    pub fn subdivision_vertex(&self, u: usize, v: usize) -> Option<usize> {
        match self.origin.first() {
            Some(Origin::Edge(..)) => self.source.edge_id(u, v).map(|k| self.n() + k),
            _ => None,
        }
    }

    /// `{graph6, part1, origin}` as used by the command line tools.
    pub fn to_json(&self) -> Result<Value> {
        let origin: Vec<Value> = self
            .origin
            .iter()
            .enumerate()
            .map(|(k, o)| match *o {
                Origin::Edge(u, v) => json!({"vertex": self.n() + k, "edge": [u, v]}),
                Origin::Vertex(v) => json!({"vertex": self.n() + k, "base": v}),
            })
            .collect();
        Ok(json!({
            "graph6": encode_graph6(&self.graph)?,
            "part1": self.part1().collect::<Vec<_>>(),
            "origin": origin,
        }))
    }
}

fn with_subdivision(g: &Graph, extra: impl Fn(usize, usize) -> bool) -> TaggedGraph {
    let n = g.order();
    let edges = g.edges();
    let graph = Graph::from_fn(n + edges.len(), |i, j| {
        if j < n {
            extra(i, j)
        } else if i < n {
            let (a, b) = edges[j - n];
            i == a || i == b
        } else {
            extra(i, j)
        }
    });
    TaggedGraph {
        graph,
        source: g.clone(),
        origin: edges.iter().map(|&(u, v)| Origin::Edge(u, v)).collect(),
    }
}

/// `S(G)`: every edge replaced by a path of length two.
pub fn subdivision(g: &Graph) -> TaggedGraph {
    with_subdivision(g, |_, _| false)
}

/// `C(G)`: `S(G)` plus the edges of the complement on the source vertices.
pub fn central(g: &Graph) -> TaggedGraph {
    let n = g.order();
    with_subdivision(g, |i, j| j < n && !g.has_edge(i, j))
}

/// `M(G)`: `S(G)` plus an edge between subdivision vertices of adjacent edges.
pub fn middle(g: &Graph) -> TaggedGraph {
    let n = g.order();
    let edges = g.edges();
    with_subdivision(g, |i, j| {
        if i < n {
            return false;
        }
        let (a, b) = edges[i - n];
        let (c, d) = edges[j - n];
        a == c || a == d || b == c || b == d
    })
}

/// `G⁺`: one pendant `n + v` attached to every vertex `v`.
pub fn endline(g: &Graph) -> TaggedGraph {
    let n = g.order();
    let graph = Graph::from_fn(2 * n, |i, j| if j < n { g.has_edge(i, j) } else { j == i + n });
    TaggedGraph { graph, source: g.clone(), origin: (0..n).map(Origin::Vertex).collect() }
}

/// The line graph; vertex `k` stands for `g.edges()[k]`, which is also
/// returned as the labelling map.
pub fn line_graph(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges = g.edges().to_vec();
    let l = Graph::from_fn(edges.len(), |i, j| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d
    });
    (l, edges)
}
