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

//! Benchmark inputs shared by the criterion targets.

use symcol::generators::{complete, cycle, petersen, star};
use symcol::Graph;

/// Named graphs used across the benchmarks.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![("K5", complete(5)), ("C7", cycle(7)), ("K1,6", star(6)), ("Petersen", petersen())]
}
