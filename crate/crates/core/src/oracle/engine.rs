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

//! Backtracking engine shared by all oracle parameters.
//!
//! Elements are vertices `0..n` followed by edges `n..n+m` (only those the
//! parameter colors are present). Colors are introduced in canonical order:
//! an element may take a used color or the next unused one. Proper-coloring
//! models pick the element with the fewest remaining colors; the others
//! follow a fixed order.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

pub(crate) struct Avd {
    /// Elements forming the profile of each vertex.
    pub members: Vec<Vec<u32>>,
    /// Vertices whose profile contains each element.
    pub owners: Vec<Vec<u32>>,
    pub adj: Vec<Vec<u32>>,
}

pub(crate) struct Tdc {
    /// For each vertex, the vertices that are not its neighbours (itself included).
    pub non_nbrs: Vec<Vec<u32>>,
}

pub(crate) struct Model {
    pub n_elems: usize,
    pub colors: usize,
    pub conflicts: Option<Vec<Vec<u32>>>,
    /// Element images under each non-identity automorphism that must be broken.
    pub perms: Vec<Vec<u32>>,
    pub avd: Option<Avd>,
    pub tdc: Option<Tdc>,
}

pub(crate) enum Outcome {
    Found(Vec<u8>),
    Exhausted,
    Budget,
}

struct Shared<'a> {
    budget: u64,
    used: &'a AtomicU64,
    stop_after: &'a AtomicUsize,
}

struct Solver<'a> {
    m: &'a Model,
    inv: &'a [Vec<u32>],
    /// For each element, the automorphisms moving it.
    moving: &'a [Vec<u32>],
    color: Vec<u8>,
    assigned: usize,
    max_used: u8,
    forb: Vec<u16>,
    remaining: Vec<u32>,
    broken: Vec<u32>,
    avd_left: Vec<u32>,
    class_size: Vec<u32>,
    bad: Vec<u32>,
    local: u64,
    index: usize,
}

impl<'a> Solver<'a> {
    fn new(m: &'a Model, inv: &'a [Vec<u32>], moving: &'a [Vec<u32>], support: &'a [u32], index: usize) -> Self {
        let k = m.colors + 1;
        let n = m.tdc.as_ref().map_or(0, |t| t.non_nbrs.len());
        Solver {
            m,
            inv,
            moving,
            color: vec![0; m.n_elems],
            assigned: 0,
            max_used: 0,
            forb: vec![0; if m.conflicts.is_some() { m.n_elems * k } else { 0 }],
            remaining: support.to_vec(),
            broken: vec![0; m.perms.len()],
            avd_left: m.avd.as_ref().map_or(Vec::new(), |a| a.members.iter().map(|x| x.len() as u32).collect()),
            class_size: vec![0; k],
            bad: vec![0; n * k],
            local: 0,
            index,
        }
    }

    fn allowed(&self, x: usize, c: u8) -> bool {
        self.m.conflicts.is_none() || self.forb[x * (self.m.colors + 1) + c as usize] == 0
    }

    fn limit(&self) -> u8 {
        (self.max_used as usize + 1).min(self.m.colors) as u8
    }

    fn next_element(&self) -> Option<usize> {
        if self.m.conflicts.is_none() {
            return self.color.iter().position(|&c| c == 0);
        }
        let lim = self.limit();
        let mut best: Option<(u32, usize)> = None;
        for x in 0..self.m.n_elems {
            if self.color[x] != 0 {
                continue;
            }
            let free = (1..=lim).filter(|&c| self.allowed(x, c)).count() as u32;
            if best.is_none_or(|(f, _)| free < f) {
                best = Some((free, x));
                if free == 0 {
                    break;
                }
            }
        }
        best.map(|(_, x)| x)
    }

    fn profile(&self, v: usize) -> u64 {
        let a = self.m.avd.as_ref().unwrap();
        a.members[v].iter().fold(0, |acc, &x| acc | 1u64 << self.color[x as usize])
    }

    /// Records `x := c`; returns false if a constraint is now violated.
    /// Counters are always fully updated so `unassign` can mirror them.
    fn assign(&mut self, x: usize, c: u8) -> bool {
        let mut ok = true;
        self.color[x] = c;
        self.assigned += 1;
        let depth = self.assigned as u32;
        self.max_used = self.max_used.max(c);
        let k = self.m.colors + 1;
        if let Some(conf) = &self.m.conflicts {
            for &y in &conf[x] {
                self.forb[y as usize * k + c as usize] += 1;
            }
        }
        for &p in &self.moving[x] {
            let p = p as usize;
            if self.broken[p] == 0 {
                let y = self.m.perms[p][x] as usize;
                let z = self.inv[p][x] as usize;
                let cy = self.color[y];
                let cz = self.color[z];
                if (cy != 0 && cy != c) || (cz != 0 && cz != c) {
                    self.broken[p] = depth;
                }
            }
            self.remaining[p] -= 1;
            if self.remaining[p] == 0 && self.broken[p] == 0 {
                ok = false;
            }
        }
        if let Some(a) = &self.m.avd {
            for &u in &a.owners[x] {
                let u = u as usize;
                self.avd_left[u] -= 1;
                if self.avd_left[u] == 0 {
                    let pu = self.profile(u);
                    for &v in &a.adj[u] {
                        if self.avd_left[v as usize] == 0 && self.profile(v as usize) == pu {
                            ok = false;
                        }
                    }
                }
            }
        }
        if let Some(t) = &self.m.tdc {
            self.class_size[c as usize] += 1;
            for &v in &t.non_nbrs[x] {
                self.bad[v as usize * k + c as usize] += 1;
            }
            // a vertex with every class already spoiled can never be dominated
            for &v in &t.non_nbrs[x] {
                let row = &self.bad[v as usize * k..(v as usize + 1) * k];
                if row[1..].iter().all(|&b| b > 0) {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, x: usize, prev_max: u8) {
        let c = self.color[x];
        let depth = self.assigned as u32;
        let k = self.m.colors + 1;
        if let Some(conf) = &self.m.conflicts {
            for &y in &conf[x] {
                self.forb[y as usize * k + c as usize] -= 1;
            }
        }
        for &p in &self.moving[x] {
            let p = p as usize;
            self.remaining[p] += 1;
            if self.broken[p] == depth {
                self.broken[p] = 0;
            }
        }
        if let Some(a) = &self.m.avd {
            for &u in &a.owners[x] {
                self.avd_left[u as usize] += 1;
            }
        }
        if let Some(t) = &self.m.tdc {
            self.class_size[c as usize] -= 1;
            for &v in &t.non_nbrs[x] {
                self.bad[v as usize * k + c as usize] -= 1;
            }
        }
        self.color[x] = 0;
        self.assigned -= 1;
        self.max_used = prev_max;
    }

    fn complete_ok(&self) -> bool {
        let Some(t) = &self.m.tdc else { return true };
        let k = self.m.colors + 1;
        (0..t.non_nbrs.len()).all(|v| (1..k).any(|c| self.class_size[c] > 0 && self.bad[v * k + c] == 0))
    }

    fn tick(&mut self, sh: &Shared) -> bool {
        self.local += 1;
        if self.local >= (sh.budget / 64).clamp(1, 4096) {
            let total = sh.used.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if total > sh.budget {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, sh: &Shared) -> Outcome {
        if sh.stop_after.load(Ordering::Relaxed) < self.index {
            return Outcome::Exhausted;
        }
        let Some(x) = self.next_element() else {
            return if self.complete_ok() { Outcome::Found(self.color.clone()) } else { Outcome::Exhausted };
        };
        let prev = self.max_used;
        for c in 1..=self.limit() {
            if !self.allowed(x, c) {
                continue;
            }
            if !self.tick(sh) {
                return Outcome::Budget;
            }
            let ok = self.assign(x, c);
            if ok {
                match self.dfs(sh) {
                    Outcome::Exhausted => {}
                    other => {
                        self.unassign(x, prev);
                        return other;
                    }
                }
            }
            self.unassign(x, prev);
        }
        Outcome::Exhausted
    }

    /// Enumerates the consistent partial assignments at `depth` in DFS order.
    fn frontier(&mut self, depth: usize, prefix: &mut Vec<(usize, u8)>, out: &mut Vec<Vec<(usize, u8)>>, found: &mut Option<Vec<u8>>) {
        if found.is_some() {
            return;
        }
        let Some(x) = self.next_element() else {
            if self.complete_ok() {
                // a solution shallower than the split depth; keep it as its own subproblem
                out.push(prefix.clone());
            }
            return;
        };
        if depth == 0 {
            out.push(prefix.clone());
            return;
        }
        let prev = self.max_used;
        for c in 1..=self.limit() {
            if !self.allowed(x, c) {
                continue;
            }
            if self.assign(x, c) {
                prefix.push((x, c));
                self.frontier(depth - 1, prefix, out, found);
                prefix.pop();
            }
            self.unassign(x, prev);
        }
    }
}

pub(crate) struct RunStats {
    pub nodes: u64,
}

/// Runs the search; the first solution in DFS order is returned no matter
/// how many workers take part.
pub(crate) fn solve(m: &Model, budget: u64, workers: usize) -> (Outcome, RunStats) {
    if m.perms.iter().any(|p| p.iter().enumerate().all(|(x, &y)| x == y as usize)) {
        // an automorphism that fixes every colored element preserves everything
        return (Outcome::Exhausted, RunStats { nodes: 0 });
    }
    let inv: Vec<Vec<u32>> = m
        .perms
        .iter()
        .map(|p| {
            let mut q = vec![0u32; p.len()];
            for (x, &y) in p.iter().enumerate() {
                q[y as usize] = x as u32;
            }
            q
        })
        .collect();
    let mut moving = vec![Vec::new(); m.n_elems];
    let mut support = Vec::with_capacity(m.perms.len());
    for (i, p) in m.perms.iter().enumerate() {
        let mut s = 0;
        for (x, &y) in p.iter().enumerate() {
            if x != y as usize {
                moving[x].push(i as u32);
                s += 1;
            }
        }
        support.push(s);
    }
    let used = AtomicU64::new(0);
    let stop_after = AtomicUsize::new(usize::MAX);
    let sh = Shared { budget, used: &used, stop_after: &stop_after };

    let outcome = if workers <= 1 {
        let mut s = Solver::new(m, &inv, &moving, &support, 0);
        let out = s.dfs(&sh);
        used.fetch_add(s.local, Ordering::Relaxed);
        out
    } else {
        let mut root = Solver::new(m, &inv, &moving, &support, 0);
        let mut subs = Vec::new();
        let mut depth = 1;
        loop {
            subs.clear();
            root.frontier(depth, &mut Vec::new(), &mut subs, &mut None);
            if subs.len() >= 8 * workers || depth >= 8 || depth >= m.n_elems {
                break;
            }
            depth += 1;
        }
        let results: Vec<Outcome> = subs
            .par_iter()
            .enumerate()
            .map(|(i, prefix)| {
                if stop_after.load(Ordering::Relaxed) < i {
                    return Outcome::Exhausted;
                }
                let mut s = Solver::new(m, &inv, &moving, &support, i);
                for &(x, c) in prefix {
                    s.assign(x, c);
                }
                let out = s.dfs(&sh);
                used.fetch_add(s.local, Ordering::Relaxed);
                if matches!(out, Outcome::Found(_)) {
                    stop_after.fetch_min(i, Ordering::Relaxed);
                }
                out
            })
            .collect();
        let mut outcome = Outcome::Exhausted;
        for r in results {
            match r {
                Outcome::Exhausted => continue,
                other => {
                    outcome = other;
                    break;
                }
            }
        }
        outcome
    };
    let nodes = used.load(Ordering::Relaxed);
    (outcome, RunStats { nodes })
}
