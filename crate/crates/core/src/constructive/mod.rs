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

//! Explicit colorings of transformed graphs, each checked against the
//! property it promises before being returned.

pub mod avd;
pub mod bipartite;
pub mod distinguishing;
pub mod tdc;
pub mod total;

use serde_json::{json, Value};

use crate::automorphism::{automorphisms_with, AutCaps};
use crate::coloring::{is_distinguishing_in, Kind, TdcPartition, TotalColoring};
use crate::error::{input, Result};
use crate::graph::Graph;

pub use avd::{
    avd_coloring_central_join, avd_coloring_central_join_equal_order, avd_coloring_central_regular,
    avd_coloring_subdivision, avd_coloring_subdivision_cases, SubdivisionCases,
};
pub use bipartite::{bipartite_edge_coloring, list_edge_coloring_bipartite};
pub use distinguishing::{
    dist_edge_coloring_central, dist_edge_coloring_endline, dist_edge_coloring_middle, dist_vertex_coloring_central,
    dist_vertex_coloring_middle, BfsFrame, EndlineColoring,
};
pub use tdc::{tdc_central, tdc_central_tree, tdc_to_complement};
pub use total::{
    total_coloring_central_regular_odd, total_dist_coloring_central_even, total_dist_coloring_central_regular,
    total_dist_coloring_subdivision,
};

/// A coloring produced by one of the constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult {
    /// Short tag of the statement the construction realizes, e.g. `"3.2"`.
    pub theorem: &'static str,
    /// The graph the coloring lives on (usually a transformed graph).
    pub graph: Graph,
    pub coloring: TotalColoring,
    /// Color classes, for dominator colorings.
    pub partition: Option<TdcPartition>,
    pub palette_size: usize,
    pub promised_bound: usize,
    /// Which procedure produced the coloring.
    pub route: String,
    /// The matching verifier accepted the coloring.
    pub verified: bool,
}

impl ConstructionResult {
    pub(crate) fn new(
        theorem: &'static str,
        graph: Graph,
        coloring: TotalColoring,
        promised_bound: usize,
        route: impl Into<String>,
        verified: bool,
    ) -> Self {
        let palette_size = coloring.palette_size();
        ConstructionResult { theorem, graph, coloring, partition: None, palette_size, promised_bound, route: route.into(), verified }
    }

    /// Verified and within the promised bound.
    pub fn passes(&self) -> bool {
        self.verified && self.palette_size <= self.promised_bound
    }

    pub fn to_json(&self) -> Result<Value> {
        Ok(json!({
            "theorem": self.theorem,
            "coloring": self.coloring.to_json(&self.graph)?,
            "partition": self.partition.as_ref().map(|p| &p.classes),
            "palette_size": self.palette_size,
            "promised_bound": self.promised_bound,
            "route": self.route,
            "verified": self.verified,
        }))
    }
}

pub(crate) fn ceil_sqrt(x: usize) -> usize {
    let mut d = 0;
    while d * d < x {
        d += 1;
    }
    d
}

pub(crate) fn require_connected(g: &Graph, min_order: usize) -> Result<()> {
    if g.order() < min_order {
        return input(format!("order {} is below {min_order}", g.order()));
    }
    if !g.is_connected() {
        return input("graph is disconnected");
    }
    Ok(())
}

pub(crate) fn distinguishes(g: &Graph, f: &TotalColoring, kind: Kind) -> Result<bool> {
    let group = automorphisms_with(g, AutCaps::wide())?;
    Ok(is_distinguishing_in(&group, g, f, kind))
}

/// Smallest color not in `used`.
pub(crate) fn mex(used: impl IntoIterator<Item = u32>) -> u32 {
    let used: std::collections::BTreeSet<u32> = used.into_iter().collect();
    (1..).find(|c| !used.contains(c)).unwrap()
}
