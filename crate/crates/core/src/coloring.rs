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

//! Colorings of vertices and edges, and the property verifiers.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::automorphism::{automorphisms_with, AutCaps, AutGroup, Permutation};
use crate::error::{contract, input, Error, Result};
use crate::graph::Graph;
use crate::graph6::{encode_graph6, parse_graph6};

pub type Color = u32;

/// Which elements a coloring is judged on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Vertex,
    Edge,
    Total,
}

impl Kind {
    fn vertices(self) -> bool {
        self != Kind::Edge
    }

    fn edges(self) -> bool {
        self != Kind::Vertex
    }
}

/// Vertex colors indexed by vertex and edge colors indexed by edge id
/// (the position in [`Graph::edges`]). Colors are positive integers and
/// need not be contiguous.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TotalColoring {
    pub vertex_colors: Option<Vec<Color>>,
    pub edge_colors: Option<Vec<Color>>,
}

impl TotalColoring {
    pub fn vertices(colors: Vec<Color>) -> Self {
        TotalColoring { vertex_colors: Some(colors), edge_colors: None }
    }

    pub fn edges(colors: Vec<Color>) -> Self {
        TotalColoring { vertex_colors: None, edge_colors: Some(colors) }
    }

    pub fn total(vertex: Vec<Color>, edge: Vec<Color>) -> Self {
        TotalColoring { vertex_colors: Some(vertex), edge_colors: Some(edge) }
    }

    pub fn vertex(&self, v: usize) -> Color {
        self.vertex_colors.as_ref().expect("vertex colors present")[v]
    }

    pub fn edge(&self, e: usize) -> Color {
        self.edge_colors.as_ref().expect("edge colors present")[e]
    }

    /// Distinct colors used.
    pub fn palette(&self) -> BTreeSet<Color> {
        let v = self.vertex_colors.iter().flatten();
        let e = self.edge_colors.iter().flatten();
        v.chain(e).copied().collect()
    }

    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }

    /// `{"graph6", "vertex_colors", "edge_colors": [[u, v, c], ...]}`.
    pub fn to_json(&self, g: &Graph) -> Result<Value> {
        let edges = self.edge_colors.as_ref().map(|cs| {
            g.edges().iter().zip(cs).map(|(&(u, v), &c)| json!([u, v, c])).collect::<Vec<_>>()
        });
        Ok(json!({
            "graph6": encode_graph6(g)?,
            "vertex_colors": self.vertex_colors,
            "edge_colors": edges,
        }))
    }

    /// Reads the JSON form written by [`TotalColoring::to_json`].
    pub fn from_json(value: &Value) -> Result<(Graph, TotalColoring)> {
        let bad = |m: &str| Error::Input(format!("coloring JSON: {m}"));
        let g6 = value.get("graph6").and_then(Value::as_str).ok_or_else(|| bad("missing graph6"))?;
        let g = parse_graph6(g6)?;
        let color = |x: &Value| -> Result<Color> {
            x.as_u64().and_then(|c| Color::try_from(c).ok()).ok_or_else(|| bad("colors must be non-negative integers"))
        };
        let vertex_colors = match value.get("vertex_colors") {
            None | Some(Value::Null) => None,
            Some(Value::Array(a)) => Some(a.iter().map(color).collect::<Result<Vec<_>>>()?),
            Some(_) => return Err(bad("vertex_colors must be an array")),
        };
        let edge_colors = match value.get("edge_colors") {
            None | Some(Value::Null) => None,
            Some(Value::Array(a)) => {
                let mut cs = vec![0; g.size()];
                for item in a {
                    let t = item.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("edge entries are [u, v, c]"))?;
                    let u = t[0].as_u64().ok_or_else(|| bad("edge endpoint"))? as usize;
                    let v = t[1].as_u64().ok_or_else(|| bad("edge endpoint"))? as usize;
                    let e = g.edge_id(u, v).ok_or_else(|| bad(&format!("{{{u}, {v}}} is not an edge")))?;
                    cs[e] = color(&t[2])?;
                }
                Some(cs)
            }
            Some(_) => return Err(bad("edge_colors must be an array")),
        };
        Ok((g, TotalColoring { vertex_colors, edge_colors }))
    }
}

/// Errors out unless `f` colors every element demanded by `kind` with a
/// positive color.
pub fn check_coverage(g: &Graph, f: &TotalColoring, kind: Kind) -> Result<()> {
    let mut missing = Vec::new();
    if kind.vertices() {
        match &f.vertex_colors {
            None => missing.push("all vertices".to_string()),
            Some(cs) => {
                missing.extend((0..g.order()).filter(|&v| cs.get(v).is_none_or(|&c| c == 0)).map(|v| format!("vertex {v}")));
                if cs.len() > g.order() {
                    return input(format!("{} vertex colors for {} vertices", cs.len(), g.order()));
                }
            }
        }
    }
    if kind.edges() {
        match &f.edge_colors {
            None => missing.push("all edges".to_string()),
            Some(cs) => {
                missing.extend(
                    g.edges().iter().enumerate().filter(|&(e, _)| cs.get(e).is_none_or(|&c| c == 0)).map(|(_, (u, v))| format!("edge {{{u}, {v}}}")),
                );
                if cs.len() > g.size() {
                    return input(format!("{} edge colors for {} edges", cs.len(), g.size()));
                }
            }
        }
    }
    if missing.is_empty() {
        Ok(())
    } else {
        input(format!("coloring does not cover: {}", missing.join(", ")))
    }
}

/// Properness for the chosen kind: adjacent vertices differ, edges sharing
/// an endpoint differ, and (for total colorings) an edge differs from both
/// of its ends.
pub fn is_proper(g: &Graph, f: &TotalColoring, kind: Kind) -> Result<bool> {
    check_coverage(g, f, kind)?;
    let edges = g.edges();
    if kind.vertices() && edges.iter().any(|&(u, v)| f.vertex(u) == f.vertex(v)) {
        return Ok(false);
    }
    if kind.edges() {
        for u in 0..g.order() {
            let mut seen = BTreeSet::new();
            for &v in g.neighbors(u) {
                let c = f.edge(g.edge_id(u, v).unwrap());
                if !seen.insert(c) || (kind == Kind::Total && c == f.vertex(u)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `C(u)`: the color of `u` together with the colors of its edges.
pub fn profiles(g: &Graph, f: &TotalColoring) -> Result<Vec<BTreeSet<Color>>> {
    check_coverage(g, f, Kind::Total)?;
    Ok((0..g.order())
        .map(|u| {
            let mut s: BTreeSet<Color> = g.neighbors(u).iter().map(|&v| f.edge(g.edge_id(u, v).unwrap())).collect();
            s.insert(f.vertex(u));
            s
        })
        .collect())
}

/// Adjacent vertices have different profiles. `f` must be a proper total
/// coloring.
pub fn is_avd_total(g: &Graph, f: &TotalColoring) -> Result<bool> {
    if !is_proper(g, f, Kind::Total)? {
        return input("coloring is not a proper total coloring");
    }
    let p = profiles(g, f)?;
    Ok(g.edges().iter().all(|&(u, v)| p[u] != p[v]))
}

/// Ordered color classes of a vertex coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdcPartition {
    pub classes: Vec<Vec<usize>>,
}

impl TdcPartition {
    /// Classes from a vertex coloring, in increasing color order.
    pub fn from_colors(colors: &[Color]) -> TdcPartition {
        let palette: BTreeSet<Color> = colors.iter().copied().collect();
        let classes = palette
            .into_iter()
            .map(|c| (0..colors.len()).filter(|&v| colors[v] == c).collect())
            .collect();
        TdcPartition { classes }
    }

    /// Vertex colors `1..=l` by class position.
    pub fn colors(&self, n: usize) -> Vec<Color> {
        let mut out = vec![0; n];
        for (k, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = k as Color + 1;
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Each vertex is adjacent to every member of some class. The partition
/// must cover the vertex set with nonempty disjoint independent classes.
pub fn is_tdc(g: &Graph, p: &TdcPartition) -> Result<bool> {
    let n = g.order();
    let mut owner = vec![usize::MAX; n];
    for (k, class) in p.classes.iter().enumerate() {
        if class.is_empty() {
            return input(format!("class {} is empty", k + 1));
        }
        for &v in class {
            if v >= n {
                return input(format!("vertex {v} is out of range"));
            }
            if owner[v] != usize::MAX {
                return input(format!("vertex {v} lies in two classes"));
            }
            owner[v] = k;
        }
    }
    if let Some(v) = owner.iter().position(|&k| k == usize::MAX) {
        return input(format!("vertex {v} is in no class"));
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| owner[u] == owner[v]) {
        return input(format!("adjacent vertices {u} and {v} share a class"));
    }
    Ok((0..n).all(|v| p.classes.iter().any(|c| c.iter().all(|&x| g.has_edge(v, x)))))
}

fn preserves_unchecked(phi: &Permutation, g: &Graph, f: &TotalColoring, kind: Kind) -> bool {
    if kind.vertices() {
        if let Some(vc) = &f.vertex_colors {
            if (0..g.order()).any(|v| vc[v] != vc[phi.apply(v)]) {
                return false;
            }
        }
    }
    if kind.edges() {
        if let Some(ec) = &f.edge_colors {
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if ec[e] != ec[g.edge_id(phi.apply(u), phi.apply(v)).unwrap()] {
                    return false;
                }
            }
        }
    }
    true
}

/// `f(x) = f(phi(x))` on every colored vertex and edge.
pub fn preserves(phi: &Permutation, g: &Graph, f: &TotalColoring) -> Result<bool> {
    if !phi.is_automorphism_of(g) {
        return contract("map is not an automorphism");
    }
    Ok(preserves_unchecked(phi, g, f, Kind::Total))
}

/// Only the identity preserves `f`, with the group enumerated under the
/// default caps.
pub fn is_distinguishing(g: &Graph, f: &TotalColoring, kind: Kind) -> Result<bool> {
    check_coverage(g, f, kind)?;
    let group = automorphisms_with(g, AutCaps::default())?;
    Ok(is_distinguishing_in(&group, g, f, kind))
}

/// As [`is_distinguishing`] against an already enumerated group.
pub fn is_distinguishing_in(group: &AutGroup, g: &Graph, f: &TotalColoring, kind: Kind) -> bool {
    !group.elements.par_iter().any(|phi| !phi.is_identity() && preserves_unchecked(phi, g, f, kind))
}

/// The non-identity automorphisms that preserve `f`.
pub fn preserving_automorphisms(group: &AutGroup, g: &Graph, f: &TotalColoring, kind: Kind) -> Vec<Permutation> {
    group
        .elements
        .iter()
        .filter(|phi| !phi.is_identity() && preserves_unchecked(phi, g, f, kind))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn k2_examples() {
        let k2 = complete(2);
        let f = TotalColoring::total(vec![1, 2], vec![3]);
        assert!(is_proper(&k2, &f, Kind::Total).unwrap());
        assert!(is_avd_total(&k2, &f).unwrap());
        assert!(!is_proper(&k2, &TotalColoring::vertices(vec![1, 1]), Kind::Vertex).unwrap());
        assert!(!is_distinguishing(&k2, &TotalColoring::vertices(vec![1, 1]), Kind::Vertex).unwrap());
        let p = TdcPartition { classes: vec![vec![0], vec![1]] };
        assert!(is_tdc(&k2, &p).unwrap());
    }

    #[test]
    fn coverage_errors_list_elements() {
        let g = path(3);
        let err = is_proper(&g, &TotalColoring::total(vec![1, 0, 1], vec![2]), Kind::Total).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("vertex 1") && msg.contains("edge {1, 2}"), "{msg}");
    }

    #[test]
    fn edgeless_has_no_tdc() {
        let g = Graph::empty(3);
        assert!(!is_tdc(&g, &TdcPartition { classes: vec![vec![0, 1, 2]] }).unwrap());
        assert!(!is_tdc(&g, &TdcPartition { classes: vec![vec![0], vec![1], vec![2]] }).unwrap());
    }

    #[test]
    fn tdc_rejects_bad_partitions() {
        let g = path(3);
        assert!(is_tdc(&g, &TdcPartition { classes: vec![vec![0, 1], vec![2]] }).is_err());
        assert!(is_tdc(&g, &TdcPartition { classes: vec![vec![0], vec![2]] }).is_err());
        assert!(is_tdc(&g, &TdcPartition { classes: vec![vec![0], vec![], vec![1, 2]] }).is_err());
    }

    #[test]
    fn star_tdc() {
        let s = star(3);
        let p = TdcPartition { classes: vec![vec![0], vec![1], vec![2], vec![3]] };
        assert!(is_tdc(&s, &p).unwrap());
    }

    #[test]
    fn preservation() {
        let g = path(3);
        let rev = Permutation::new(vec![2, 1, 0]).unwrap();
        assert!(!preserves(&rev, &g, &TotalColoring::vertices(vec![1, 1, 2])).unwrap());
        assert!(preserves(&rev, &g, &TotalColoring::vertices(vec![3, 1, 3])).unwrap());
        let bad = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(preserves(&bad, &g, &TotalColoring::vertices(vec![1, 1, 1])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = cycle(4);
        let f = TotalColoring::total(vec![1, 2, 1, 2], vec![3, 4, 3, 4]);
        let (h, f2) = TotalColoring::from_json(&f.to_json(&g).unwrap()).unwrap();
        assert_eq!((h, f2), (g, f));
    }
}
