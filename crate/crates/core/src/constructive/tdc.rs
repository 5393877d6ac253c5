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

//! Total dominator colorings of central graphs and their transfer to the
//! complement.

use crate::coloring::{is_tdc, Color, TdcPartition, TotalColoring};
use crate::constructive::{require_connected, ConstructionResult};
use crate::error::{contract, input, precondition, Error, Result};
use crate::graph::Graph;
use crate::transforms::central;

fn tdc_result(theorem: &'static str, g: &Graph, colors: Vec<Color>, route: &str) -> ConstructionResult {
    let c = central(g).graph;
    let p = TdcPartition::from_colors(&colors);
    let ok = matches!(is_tdc(&c, &p), Ok(true));
    let mut r = ConstructionResult::new(theorem, c, TotalColoring::vertices(colors), g.order(), route, ok);
    r.partition = Some(p);
    r
}

/// Total dominator coloring of `C(G)` with `n` classes for connected `G`
/// with `n ≥ 5` and `Δ(G) ≤ n - 3`.
///
/// Source vertices `0..n-1` get their own color, the last vertex shares
/// the class of its smallest neighbour and all subdivision vertices form
/// class `n`.
pub fn tdc_central(g: &Graph) -> Result<ConstructionResult> {
    require_connected(g, 5)?;
    let n = g.order();
    if g.max_degree() + 3 > n {
        return input(format!("Δ = {} exceeds n - 3 = {}; trees are handled by tdc_central_tree", g.max_degree(), n - 3));
    }
    let k = g.neighbors(n - 1)[0];
    let mut colors: Vec<Color> = (0..n as Color).map(|i| i + 1).collect();
    colors[n - 1] = k as Color + 1;
    colors.resize(n + g.size(), n as Color);
    Ok(tdc_result("6.2", g, colors, "singletons"))
}

/// Total dominator coloring of `C(T)` with at most `n` classes for a tree
/// `T` with `n ≥ 5`.
///
/// Trees with `Δ ≤ n - 3` go through [`tdc_central`]. For a star the last
/// leaf joins the centre's class. When `Δ = n - 2` the centre shares a
/// class with the neighbour `p` of the one vertex `o` it misses, `o` takes
/// color 1 and the remaining neighbours take `2..=n-2`. In both cases the
/// subdivision vertices form class `n`.
pub fn tdc_central_tree(t: &Graph) -> Result<ConstructionResult> {
    if !t.is_tree() {
        return input("graph is not a tree");
    }
    let n = t.order();
    if n < 5 {
        return input(format!("order {n} is below 5"));
    }
    let delta = t.max_degree();
    if delta + 3 <= n {
        let mut r = tdc_central(t)?;
        r.theorem = "6.1";
        return Ok(r);
    }
    let centre = (0..n).find(|&v| t.degree(v) == delta).unwrap();
    let mut colors = vec![0 as Color; n];
    let route = if delta == n - 1 {
        let leaves: Vec<usize> = (0..n).filter(|&v| v != centre).collect();
        colors[centre] = 1;
        for (k, &v) in leaves[..n - 2].iter().enumerate() {
            colors[v] = k as Color + 2;
        }
        colors[leaves[n - 2]] = 1;
        "star"
    } else {
        let o = (0..n).find(|&v| v != centre && !t.has_edge(v, centre)).unwrap();
        let p = t.neighbors(o)[0];
        let rest: Vec<usize> = t.neighbors(centre).iter().copied().filter(|&v| v != p).collect();
        for (k, &v) in rest.iter().enumerate() {
            colors[v] = k as Color + 2;
        }
        colors[p] = n as Color - 1;
        colors[centre] = n as Color - 1;
        colors[o] = 1;
        "near-star"
    };
    colors.resize(n + t.size(), n as Color);
    Ok(tdc_result("6.1", t, colors, route))
}

/// Turns a total dominator coloring of `C(G)` into one of `Ḡ` with no more
/// classes: subdivision vertices are dropped, and a source vertex left
/// dominated only by emptied classes borrows its smallest complement
/// neighbour from a class of size at least two into one of them. If no
/// emptied class is left to borrow into, a new class is opened and the
/// result reports a defect when that pushes the count past the input.
pub fn tdc_to_complement(f: &TdcPartition, g: &Graph) -> Result<TdcPartition> {
    require_connected(g, 5)?;
    let n = g.order();
    if g.max_degree() + 3 > n {
        return precondition(format!("Δ = {} exceeds n - 3", g.max_degree()));
    }
    let c = central(g).graph;
    if !matches!(is_tdc(&c, f), Ok(true)) {
        return contract("partition is not a total dominator coloring of C(G)");
    }
    let gbar = g.complement();
    let mut w: Vec<Vec<usize>> = f.classes.iter().map(|x| x.iter().copied().filter(|&v| v < n).collect()).collect();
    let dominated = |w: &[Vec<usize>], v: usize| w.iter().any(|x| !x.is_empty() && x.iter().all(|&y| gbar.has_edge(v, y)));
    for v in 0..n {
        if dominated(&w, v) {
            continue;
        }
        let Some(&m1) = gbar
            .neighbors(v)
            .iter()
            .find(|&&m| w.iter().any(|x| x.len() >= 2 && x.contains(&m)))
        else {
            return Err(Error::ConstructionDefect(format!("vertex {v} has no complement neighbour to borrow")));
        };
        for x in w.iter_mut() {
            x.retain(|&y| y != m1);
        }
        match w.iter().position(|x| x.is_empty()) {
            Some(k) => w[k] = vec![m1],
            None => w.push(vec![m1]),
        }
    }
    w.retain(|x| !x.is_empty());
    let p = TdcPartition { classes: w };
    if p.len() > f.len() || !matches!(is_tdc(&gbar, &p), Ok(true)) {
        return Err(Error::ConstructionDefect(format!("repair produced {} classes from {}", p.len(), f.len())));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::oracle::{exact_parameter, ParamKind, SearchOptions};

    #[test]
    fn central_examples() {
        for g in [cycle(5), path(6), cycle_complement(6)] {
            let r = tdc_central(&g).unwrap();
            assert!(r.passes(), "{g:?}");
            assert_eq!(r.partition.unwrap().len(), g.order());
        }
        assert!(matches!(tdc_central(&star(4)), Err(Error::Input(_))));
    }

    #[test]
    fn fig5_graph_needs_six_classes() {
        let c = central(&cycle_complement(6)).graph;
        let r = exact_parameter(&c, ParamKind::TotalDominator, 6, SearchOptions::default()).unwrap();
        assert_eq!(r.value, Some(6));
    }

    #[test]
    fn tree_cases() {
        let r = tdc_central_tree(&star(4)).unwrap();
        assert!(r.passes());
        assert_eq!((r.route.as_str(), r.partition.unwrap().len()), ("star", 5));
        let r = tdc_central_tree(&broom(6)).unwrap();
        assert!(r.passes());
        assert_eq!((r.route.as_str(), r.partition.unwrap().len()), ("near-star", 6));
        let r = tdc_central_tree(&path(6)).unwrap();
        assert_eq!(r.route, "singletons");
        assert!(r.passes());
        assert!(matches!(tdc_central_tree(&cycle(5)), Err(Error::Input(_))));
    }

    #[test]
    fn complement_transfer() {
        for g in [cycle(5), path(6)] {
            let f = tdc_central(&g).unwrap().partition.unwrap();
            let p = tdc_to_complement(&f, &g).unwrap();
            assert!(is_tdc(&g.complement(), &p).unwrap());
            assert!(p.len() <= f.len());
        }
    }
}
