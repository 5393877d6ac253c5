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

//! Exact graph parameters by exhaustive search.

mod engine;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::automorphism::{automorphisms_with, AutCaps};
use crate::coloring::{Color, TdcPartition, TotalColoring};
use crate::error::{input, Error, Result};
use crate::graph::Graph;
use engine::{Avd, Model, Outcome, Tdc};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// The parameters the oracle can compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParamKind {
    /// Distinguishing number: vertex colorings.
    #[serde(rename = "D")]
    D,
    /// Distinguishing index: edge colorings.
    #[serde(rename = "Dp")]
    DPrime,
    /// Total distinguishing number: vertex and edge colorings, not proper.
    #[serde(rename = "Dpp")]
    DDoublePrime,
    /// Total chromatic number.
    #[serde(rename = "chi2")]
    Total,
    /// Proper total colorings preserved only by the identity.
    #[serde(rename = "chi2D")]
    TotalDistinguishing,
    /// Adjacent-vertex-distinguishing total colorings.
    #[serde(rename = "chi2a")]
    TotalAvd,
    /// Total dominator colorings (minimum number of classes).
    #[serde(rename = "chitd")]
    TotalDominator,
}

impl ParamKind {
    pub const ALL: [ParamKind; 7] = [
        ParamKind::D,
        ParamKind::DPrime,
        ParamKind::DDoublePrime,
        ParamKind::Total,
        ParamKind::TotalDistinguishing,
        ParamKind::TotalAvd,
        ParamKind::TotalDominator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParamKind::D => "D",
            ParamKind::DPrime => "Dp",
            ParamKind::DDoublePrime => "Dpp",
            ParamKind::Total => "chi2",
            ParamKind::TotalDistinguishing => "chi2D",
            ParamKind::TotalAvd => "chi2a",
            ParamKind::TotalDominator => "chitd",
        }
    }

    fn colors_vertices(self) -> bool {
        self != ParamKind::DPrime
    }

    fn colors_edges(self) -> bool {
        !matches!(self, ParamKind::D | ParamKind::TotalDominator)
    }

    fn distinguishing(self) -> bool {
        matches!(self, ParamKind::D | ParamKind::DPrime | ParamKind::DDoublePrime | ParamKind::TotalDistinguishing)
    }

    fn proper(self) -> bool {
        matches!(self, ParamKind::Total | ParamKind::TotalDistinguishing | ParamKind::TotalAvd | ParamKind::TotalDominator)
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ParamKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown parameter {s:?}; expected one of D, Dp, Dpp, chi2, chi2D, chi2a, chitd")))
    }
}

/// Node budget and worker count for a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    pub workers: usize,
}

impl Default for SearchOptions {
    /// Budget from `SYMCOL_BUDGET` when set, otherwise `10^9` nodes; one
    /// worker per thread of the global pool.
    fn default() -> Self {
        let budget = std::env::var("SYMCOL_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET);
        SearchOptions { budget, workers: rayon::current_num_threads() }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions { budget, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub wall_ms: u64,
}

/// Result of [`exact_parameter`]. `value` is `None` when no valid coloring
/// with at most `cap` colors exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub kind: ParamKind,
    pub value: Option<u32>,
    pub cap: u32,
    pub witness: Option<TotalColoring>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<TdcPartition>,
    pub stats: SearchStats,
}

struct Layout {
    n: usize,
    vertices: bool,
    edge_base: usize,
    m: usize,
}

impl Layout {
    fn new(g: &Graph, kind: ParamKind) -> Layout {
        let vertices = kind.colors_vertices();
        Layout {
            n: g.order(),
            vertices,
            edge_base: if vertices { g.order() } else { 0 },
            m: if kind.colors_edges() { g.size() } else { 0 },
        }
    }

    fn len(&self) -> usize {
        self.edge_base + self.m
    }

    fn vertex(&self, v: usize) -> Option<usize> {
        self.vertices.then_some(v)
    }

    fn edge(&self, e: usize) -> Option<usize> {
        (self.m > 0).then_some(self.edge_base + e)
    }

    fn coloring(&self, colors: &[u8]) -> TotalColoring {
        let c = |x: &u8| *x as Color;
        TotalColoring {
            vertex_colors: self.vertices.then(|| colors[..self.n].iter().map(c).collect()),
            edge_colors: (self.m > 0).then(|| colors[self.edge_base..].iter().map(c).collect()),
        }
    }
}

fn build_model(g: &Graph, kind: ParamKind, colors: usize) -> Result<(Model, Layout)> {
    if colors > 62 {
        return input("at most 62 colors are supported");
    }
    let lay = Layout::new(g, kind);
    let n_elems = lay.len();
    let edges = g.edges();

    let conflicts = kind.proper().then(|| {
        let mut c = vec![Vec::new(); n_elems];
        let mut link = |a: Option<usize>, b: Option<usize>| {
            if let (Some(a), Some(b)) = (a, b) {
                c[a].push(b as u32);
                c[b].push(a as u32);
            }
        };
        for (e, &(u, v)) in edges.iter().enumerate() {
            link(lay.vertex(u), lay.vertex(v));
            link(lay.vertex(u), lay.edge(e));
            link(lay.vertex(v), lay.edge(e));
        }
        for u in 0..g.order() {
            let nb = g.neighbors(u);
            for (a, &x) in nb.iter().enumerate() {
                for &y in &nb[a + 1..] {
                    link(lay.edge(g.edge_id(u, x).unwrap()), lay.edge(g.edge_id(u, y).unwrap()));
                }
            }
        }
        c
    });

    let perms = if kind.distinguishing() {
        let group = automorphisms_with(g, AutCaps::wide())?;
        group
            .elements
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| {
                let mut img = vec![0u32; n_elems];
                if lay.vertices {
                    for v in 0..g.order() {
                        img[v] = p.apply(v) as u32;
                    }
                }
                if lay.m > 0 {
                    for (e, &(u, v)) in edges.iter().enumerate() {
                        img[lay.edge_base + e] = (lay.edge_base + g.edge_id(p.apply(u), p.apply(v)).unwrap()) as u32;
                    }
                }
                img
            })
            .collect()
    } else {
        Vec::new()
    };

    let avd = (kind == ParamKind::TotalAvd).then(|| {
        let members: Vec<Vec<u32>> = (0..g.order())
            .map(|u| {
                let mut m = vec![u as u32];
                m.extend(g.neighbors(u).iter().map(|&v| lay.edge(g.edge_id(u, v).unwrap()).unwrap() as u32));
                m
            })
            .collect();
        let mut owners = vec![Vec::new(); n_elems];
        for (u, ms) in members.iter().enumerate() {
            for &x in ms {
                owners[x as usize].push(u as u32);
            }
        }
        let adj = (0..g.order()).map(|u| g.neighbors(u).iter().map(|&v| v as u32).collect()).collect();
        Avd { members, owners, adj }
    });

    let tdc = (kind == ParamKind::TotalDominator).then(|| Tdc {
        non_nbrs: (0..g.order()).map(|u| (0..g.order()).filter(|&v| !g.has_edge(u, v)).map(|v| v as u32).collect()).collect(),
    });

    Ok((Model { n_elems, colors, conflicts, perms, avd, tdc }, lay))
}

/// Outcome of a single bounded search.
enum Probe {
    Found(TotalColoring),
    None,
    Budget,
}

fn probe(g: &Graph, kind: ParamKind, colors: usize, opts: SearchOptions, nodes: &mut u64) -> Result<Probe> {
    if colors == 0 {
        return Ok(Probe::None);
    }
    let (model, lay) = build_model(g, kind, colors)?;
    let (out, stats) = engine::solve(&model, opts.budget.saturating_sub(*nodes), opts.workers.max(1));
    *nodes += stats.nodes;
    Ok(match out {
        Outcome::Found(c) => Probe::Found(lay.coloring(&c)),
        Outcome::Exhausted => Probe::None,
        Outcome::Budget => Probe::Budget,
    })
}

/// Chromatic number by the same search (vertex colorings only).
pub fn chromatic_number(g: &Graph, opts: SearchOptions) -> Result<u32> {
    if g.order() == 0 {
        return Ok(0);
    }
    let mut nodes = 0;
    for k in 1..=g.order() {
        // the dominator model without the domination constraint is a plain proper vertex coloring
        let (mut model, lay) = build_model(g, ParamKind::TotalDominator, k)?;
        model.tdc = None;
        let (out, stats) = engine::solve(&model, opts.budget.saturating_sub(nodes), opts.workers.max(1));
        nodes += stats.nodes;
        match out {
            Outcome::Found(_) => return Ok(k as u32),
            Outcome::Exhausted => {}
            Outcome::Budget => {
                let _ = lay;
                return Err(Error::BudgetExhausted { budget: opts.budget, lower: k as u32, upper: g.order() as u32 });
            }
        }
    }
    unreachable!("n colors always suffice")
}

/// The trivial lower bound the search starts from.
pub fn trivial_lower_bound(g: &Graph, kind: ParamKind, opts: SearchOptions) -> Result<u32> {
    Ok(match kind {
        ParamKind::D | ParamKind::DPrime | ParamKind::DDoublePrime => 1,
        ParamKind::Total | ParamKind::TotalDistinguishing | ParamKind::TotalAvd => g.max_degree() as u32 + 1,
        ParamKind::TotalDominator => chromatic_number(g, opts)?.max(2),
    })
}

/// The least number of colors admitting a valid coloring, searching from
/// the trivial lower bound up to `cap`.
pub fn exact_parameter(g: &Graph, kind: ParamKind, cap: u32, opts: SearchOptions) -> Result<OracleResult> {
    let start = Instant::now();
    let lower = trivial_lower_bound(g, kind, opts)?;
    let mut nodes = 0;
    let mut k = lower;
    while k <= cap {
        match probe(g, kind, k as usize, opts, &mut nodes)? {
            Probe::Found(w) => {
                let partition = (kind == ParamKind::TotalDominator).then(|| TdcPartition::from_colors(w.vertex_colors.as_ref().unwrap()));
                return Ok(OracleResult {
                    kind,
                    value: Some(k),
                    cap,
                    witness: Some(w),
                    partition,
                    stats: SearchStats { nodes, wall_ms: start.elapsed().as_millis() as u64 },
                });
            }
            Probe::None => k += 1,
            Probe::Budget => return Err(Error::BudgetExhausted { budget: opts.budget, lower: k, upper: cap }),
        }
    }
    Ok(OracleResult {
        kind,
        value: None,
        cap,
        witness: None,
        partition: None,
        stats: SearchStats { nodes, wall_ms: start.elapsed().as_millis() as u64 },
    })
}

/// A valid coloring with at most `colors` colors, if one exists.
pub fn upper_bound_witness(g: &Graph, kind: ParamKind, colors: u32, opts: SearchOptions) -> Result<Option<TotalColoring>> {
    let mut nodes = 0;
    match probe(g, kind, colors as usize, opts, &mut nodes)? {
        Probe::Found(w) => Ok(Some(w)),
        Probe::None => Ok(None),
        Probe::Budget => Err(Error::BudgetExhausted { budget: opts.budget, lower: 0, upper: colors }),
    }
}

/// True iff no valid coloring with `value - 1` colors exists.
pub fn lower_bound_certificate(g: &Graph, kind: ParamKind, value: u32, opts: SearchOptions) -> Result<bool> {
    if value == 0 {
        return input("value must be positive");
    }
    Ok(upper_bound_witness(g, kind, value - 1, opts)?.is_none())
}
