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

//! Standard graph families and a few fixed small graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::Graph;

/// A member of one of the standard families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, r: usize },
    /// `K_{1,r}` with the center at vertex 0.
    Star { r: usize },
    Empty { n: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } | FamilySpec::Empty { n } => n >= 1,
            FamilySpec::Cycle { n } => n >= 3,
            FamilySpec::CompleteBipartite { m, r } => m >= 1 && r >= 1,
            FamilySpec::Star { r } => r >= 1,
        };
        if ok {
            Ok(())
        } else {
            input(format!("invalid family parameters: {self}"))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite { m, r } => write!(f, "complete_bipartite:{m},{r}"),
            FamilySpec::Star { r } => write!(f, "star:{r}"),
            FamilySpec::Empty { n } => write!(f, "empty:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `kind:params`, e.g. `cycle:5` or `complete_bipartite:2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = params
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| p.trim().parse().map_err(|_| Error::Input(format!("bad family parameter {p:?}"))))
            .collect::<Result<_>>()?;
        let spec = match (kind, nums.as_slice()) {
            ("path", &[n]) => FamilySpec::Path { n },
            ("cycle", &[n]) => FamilySpec::Cycle { n },
            ("complete", &[n]) => FamilySpec::Complete { n },
            ("complete_bipartite", &[m, r]) => FamilySpec::CompleteBipartite { m, r },
            ("star", &[r]) => FamilySpec::Star { r },
            ("empty", &[n]) => FamilySpec::Empty { n },
            _ => return input(format!("unknown family {s:?}")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the family member with its canonical labelling: paths and cycles
/// run consecutively, stars have center 0, bipartite blocks are contiguous.
pub fn generate(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Path { n } => path(n),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Complete { n } => complete(n),
        FamilySpec::CompleteBipartite { m, r } => complete_bipartite(m, r),
        FamilySpec::Star { r } => star(r),
        FamilySpec::Empty { n } => Graph::empty(n),
    })
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1)
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j + 1 == n && n >= 3))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn complete_bipartite(m: usize, r: usize) -> Graph {
    Graph::from_fn(m + r, |i, j| i < m && j >= m)
}

pub fn star(r: usize) -> Graph {
    complete_bipartite(1, r)
}

/// `K_{1,n-2}` with one extra pendant on leaf 1: center 0, new pendant `n-1`.
pub fn broom(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| (i == 0 && j + 1 < n) || (i == 1 && j + 1 == n && n >= 4))
}

pub fn petersen() -> Graph {
    Graph::from_fn(10, |i, j| {
        (j < 5 && (j == i + 1 || (i == 0 && j == 4)))
            || (j == i + 5)
            || (i >= 5 && (j - i == 2 || j - i == 3))
    })
}

/// Triangle `{0,1,2}` with a pendant `3` on vertex 2 (the paw).
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
}

/// `K_4` minus the edge `{0,3}`; this is the line graph of the paw.
pub fn diamond() -> Graph {
    Graph::from_fn(4, |i, j| !(i == 0 && j == 3))
}

/// Complement of the cycle `0,1,...,n-1`.
pub fn cycle_complement(n: usize) -> Graph {
    cycle(n).complement()
}
