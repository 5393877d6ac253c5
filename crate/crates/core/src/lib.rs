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

//! Graph transforms, automorphism groups and symmetry-breaking colorings.
//!
//! The crate covers the subdivision, central, middle and endline
//! transforms, exact automorphism enumeration, verifiers for proper,
//! total, adjacent-vertex-distinguishing, dominator and distinguishing
//! colorings, explicit colouring constructions with their promised bounds,
//! and exhaustive search oracles for the matching graph parameters.

pub mod automorphism;
pub mod coloring;
pub mod enumerate;
pub mod constructive;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod latin;
pub mod oracle;
pub mod transforms;

pub use automorphism::{automorphisms, find_isomorphism, AutCaps, AutGroup, Permutation};
pub use error::{Error, Result};
pub use generators::FamilySpec;
pub use graph::Graph;
pub use graph6::{encode_graph6, parse_graph6};
pub use transforms::{Origin, TaggedGraph};
pub use coloring::{Kind, TdcPartition, TotalColoring};
