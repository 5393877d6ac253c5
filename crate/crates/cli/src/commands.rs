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

use std::path::Path;

use serde_json::{json, Value};
use symcol::automorphism::{automorphisms_with, check_aut_chain, AutCaps};
use symcol::coloring::{is_avd_total, is_distinguishing_in, is_proper, is_tdc, Kind, TdcPartition, TotalColoring};
use symcol::constructive::*;
use symcol::generators::generate;
use symcol::latin::icls;
use symcol::oracle::{exact_parameter, upper_bound_witness, ParamKind, SearchOptions};
use symcol::transforms::{central, endline, line_graph, middle, subdivision};
use symcol::{encode_graph6, parse_graph6, FamilySpec, Graph};

use crate::{Failure, OnGraph, Property, TransformKind};

/// A graph6 string, or a family such as `star:5` when the argument has a colon.
pub fn load_graph(s: &str) -> Result<Graph, Failure> {
    let s = s.trim();
    if s.contains(':') && !s.starts_with(">>graph6<<") {
        let spec: FamilySpec = s.parse()?;
        return Ok(generate(spec)?);
    }
    Ok(parse_graph6(s)?)
}

pub fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

pub fn transform(kind: TransformKind, input: &str) -> Result<(), Failure> {
    let g = load_graph(input)?;
    let out = match kind {
        TransformKind::Subdivision => subdivision(&g).to_json()?,
        TransformKind::Central => central(&g).to_json()?,
        TransformKind::Middle => middle(&g).to_json()?,
        TransformKind::Endline => endline(&g).to_json()?,
        TransformKind::Line => {
            let (l, edges) = line_graph(&g);
            json!({"graph6": encode_graph6(&l)?, "edges": edges})
        }
    };
    print(&out);
    Ok(())
}

pub fn aut(input: &str, wide: bool, chain: bool) -> Result<(), Failure> {
    let g = load_graph(input)?;
    if chain {
        let r = check_aut_chain(&g)?;
        print(&serde_json::to_value(&r).unwrap());
        return if !r.applicable || r.holds { Ok(()) } else { Err(Failure::Rejected) };
    }
    let caps = if wide { AutCaps::wide() } else { AutCaps::default() };
    let group = automorphisms_with(&g, caps)?;
    let mut out = json!({"graph6": encode_graph6(&g)?, "group_order": group.order()});
    if group.order() <= 10_000 {
        out["elements"] = json!(group.elements.iter().map(|p| &p.image).collect::<Vec<_>>());
    }
    print(&out);
    Ok(())
}

fn shifted(f: TotalColoring, by: u32) -> TotalColoring {
    let shift = |v: Option<Vec<u32>>| v.map(|c| c.into_iter().map(|k| k + by).collect());
    TotalColoring { vertex_colors: shift(f.vertex_colors), edge_colors: shift(f.edge_colors) }
}

fn witness_on_central(g: &Graph, kind: ParamKind, colors: u32) -> Result<TotalColoring, Failure> {
    upper_bound_witness(&central(g).graph, kind, colors, SearchOptions::default())?
        .ok_or_else(|| Failure::Runtime(format!("C(G) has no {kind} coloring with {colors} colors")))
}

fn join_construction(g1: &Graph, g2: &Graph, equal_order: bool) -> Result<ConstructionResult, Failure> {
    let (n, m) = (g1.order() as u32, g2.order() as u32);
    if equal_order {
        let t1 = witness_on_central(g1, ParamKind::Total, n + 1)?;
        let t2 = witness_on_central(g2, ParamKind::Total, n + 1)?;
        return Ok(avd_coloring_central_join_equal_order(g1, g2, &shifted(t1, n + 1), &t2)?);
    }
    let a1 = witness_on_central(g1, ParamKind::TotalAvd, n + 2)?;
    let a2 = witness_on_central(g2, ParamKind::TotalAvd, m + 2)?;
    Ok(avd_coloring_central_join(g1, g2, &shifted(a1, m), &a2)?)
}

pub fn construct(theorem: &str, input: &str, with: Option<&str>, equal_order: bool, edges: bool, out: Option<&Path>) -> Result<(), Failure> {
    let g = load_graph(input)?;
    let mut extra = None;
    let r = match theorem {
        "3.2" => dist_edge_coloring_central(&g)?,
        "3.4" => dist_vertex_coloring_central(&g)?,
        "3.6" if edges => dist_edge_coloring_middle(&g)?,
        "3.6" => dist_vertex_coloring_middle(&g)?,
        "4.5" => total_dist_coloring_central_regular(&g)?,
        "4.9" => total_dist_coloring_subdivision(&g)?,
        "5.1" => avd_coloring_central_regular(&g)?,
        "5.3" => avd_coloring_subdivision(&g)?,
        "5.5" => {
            let h = load_graph(with.ok_or_else(|| Failure::Usage("theorem 5.5 needs --with <graph>".into()))?)?;
            join_construction(&g, &h, equal_order)?
        }
        "6.1" if g.is_tree() => tdc_central_tree(&g)?,
        "6.1" => {
            let mut r = tdc_central(&g)?;
            r.theorem = "6.1";
            let p = tdc_to_complement(r.partition.as_ref().unwrap(), &g)?;
            extra = Some(json!({"complement_partition": p.classes}));
            r
        }
        "6.2" => tdc_central(&g)?,
        "appendix-tree" => tdc_central_tree(&g)?,
        other => return Err(Failure::Usage(format!("unknown theorem {other:?}"))),
    };
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&r.coloring.to_json(&r.graph)?).unwrap();
        std::fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let pass = r.passes();
    let mut doc = r.to_json()?;
    doc["verdict"] = json!(if pass { "pass" } else { "fail" });
    if let Some(Value::Object(map)) = extra {
        for (k, v) in map {
            doc[k] = v;
        }
    }
    print(&doc);
    if pass { Ok(()) } else { Err(Failure::Rejected) }
}

pub fn verify(property: Property, path: &Path) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let (g, f) = TotalColoring::from_json(&value)?;
    let kind = match (&f.vertex_colors, &f.edge_colors) {
        (Some(_), Some(_)) => Kind::Total,
        (Some(_), None) => Kind::Vertex,
        _ => Kind::Edge,
    };
    let holds = match property {
        Property::ProperTotal => is_proper(&g, &f, Kind::Total)?,
        Property::Avd => is_proper(&g, &f, Kind::Total)? && is_avd_total(&g, &f)?,
        Property::Tdc => {
            let colors = f.vertex_colors.as_ref().ok_or_else(|| Failure::Usage("a dominator coloring needs vertex colors".into()))?;
            is_tdc(&g, &TdcPartition::from_colors(colors)).unwrap_or(false)
        }
        Property::Distinguishing => {
            let group = automorphisms_with(&g, AutCaps::wide())?;
            is_distinguishing_in(&group, &g, &f, kind)
        }
    };
    let name = match property {
        Property::ProperTotal => "proper-total",
        Property::Avd => "avd",
        Property::Tdc => "tdc",
        Property::Distinguishing => "distinguishing",
    };
    print(&json!({"graph6": encode_graph6(&g)?, "property": name, "holds": holds}));
    if holds { Ok(()) } else { Err(Failure::Rejected) }
}

pub fn on_graph(g: &Graph, on: OnGraph) -> Graph {
    match on {
        OnGraph::Graph => g.clone(),
        OnGraph::Subdivision => subdivision(g).graph,
        OnGraph::Central => central(g).graph,
        OnGraph::Middle => middle(g).graph,
        OnGraph::Endline => endline(g).graph,
        OnGraph::Line => line_graph(g).0,
    }
}

pub fn oracle(param: ParamKind, input: &str, on: OnGraph, cap: Option<u32>, budget: Option<u64>, workers: Option<usize>) -> Result<(), Failure> {
    let g = on_graph(&load_graph(input)?, on);
    let mut opts = SearchOptions::default();
    if let Some(b) = budget {
        opts.budget = b;
    }
    if let Some(w) = workers {
        opts.workers = w.max(1);
    }
    let cap = cap.unwrap_or((g.order() + g.size()).max(1) as u32);
    let r = exact_parameter(&g, param, cap, opts)?;
    let mut doc = serde_json::to_value(&r).unwrap();
    doc["graph6"] = json!(encode_graph6(&g)?);
    if let Some(w) = &r.witness {
        doc["witness"] = w.to_json(&g)?;
    }
    print(&doc);
    Ok(())
}

pub fn latin(k: usize) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::Usage("k must be at least 1".into()));
    }
    print!("{}", icls(k).to_csv());
    Ok(())
}
