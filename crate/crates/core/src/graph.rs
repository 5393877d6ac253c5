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

//! Simple undirected graphs on the dense vertex set `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{input, Result};

/// A simple undirected graph with vertices `0..n`.
///
/// Edges are kept in column-major upper-triangle order: `(i, j)` with
/// `i < j`, sorted by `j` and then by `i`. Edge indices returned by
/// [`Graph::edge_id`] refer to positions in that list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    nbrs: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| false)
    }

    /// Builds a graph from a symmetric predicate evaluated on pairs `i < j`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if adjacent(i, j) {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                    rows[j * words + i / 64] |= 1 << (i % 64);
                    edges.push((i, j));
                }
            }
        }
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| rows[u * words + v / 64] >> (v % 64) & 1 == 1).collect())
            .collect();
        Graph { n, words, rows, nbrs, edges }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![false; n * n];
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Graph::from_fn(n, |i, j| adj[i * n + j]))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbours of `u` in increasing order.
    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.nbrs[u]
    }

    /// Adjacency row of `u` as a bitset of `self.words()` words.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.nbrs[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// Edges as `(i, j)` with `i < j`, in column-major order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search_by(|&(a, b)| (b, a).cmp(&(j, i))).ok()
    }

    /// Distances from `src`; `None` marks unreachable vertices.
    pub fn distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.nbrs[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// The empty graph counts as disconnected, `K_1` as connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.distances(0).iter().all(Option::is_some)
    }

    /// A 2-coloring `side[v]` if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &v in &self.nbrs[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    /// The common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.nbrs.first()?.len();
        self.nbrs.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.regular_degree() == Some(2) && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.has_edge(i, j))
    }

    /// Disjoint union plus all cross edges; `other` is shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.n;
        Graph::from_fn(n1 + other.n, |i, j| match (i < n1, j < n1) {
            (true, true) => self.has_edge(i, j),
            (false, false) => other.has_edge(i - n1, j - n1),
            _ => true,
        })
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut inv = vec![0; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        Graph::from_fn(self.n, |i, j| self.has_edge(inv[i], inv[j]))
    }

    /// Subgraph induced by `keep`, relabelled in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        Graph::from_fn(keep.len(), |i, j| self.has_edge(keep[i], keep[j]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
