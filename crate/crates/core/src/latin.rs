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

//! Latin squares, with the idempotent commutative family used for total
//! colorings of central graphs.

use serde::Serialize;

use crate::error::{input, Result};

/// A square array with entries in `1..=order`; `get(i, j)` is 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatinSquare {
    pub order: usize,
    pub cells: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub latin: bool,
    pub commutative: bool,
    pub idempotent: bool,
    pub anticirculant: bool,
}

impl LatinSquare {
    /// Wraps a square array, checking its shape and entry range only.
    pub fn new(cells: Vec<Vec<u32>>) -> Result<LatinSquare> {
        let k = cells.len();
        if cells.iter().any(|r| r.len() != k) {
            return input("rows must all have length equal to the number of rows");
        }
        if cells.iter().flatten().any(|&c| c == 0 || c as usize > k) {
            return input(format!("entries must lie in 1..={k}"));
        }
        Ok(LatinSquare { order: k, cells })
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i - 1][j - 1]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.cells[i - 1]
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for r in &self.cells {
            let line: Vec<String> = r.iter().map(u32::to_string).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }
}

/// The idempotent commutative square of order `2k - 1` with
/// `m(i, j) = ((i + j) k - 1 mod (2k - 1)) + 1`.
pub fn icls(k: usize) -> LatinSquare {
    assert!(k >= 1, "icls needs k >= 1");
    let order = 2 * k - 1;
    let cells = (1..=order)
        .map(|i| (1..=order).map(|j| (((i + j) * k - 1) % order + 1) as u32).collect())
        .collect();
    LatinSquare { order, cells }
}

pub fn check_structure(m: &LatinSquare) -> StructureFlags {
    let k = m.order;
    let perm = |line: Vec<u32>| {
        let mut seen = vec![false; k + 1];
        line.into_iter().all(|c| (1..=k).contains(&(c as usize)) && !std::mem::replace(&mut seen[c as usize], true))
    };
    let latin = (1..=k).all(|i| perm(m.row(i).to_vec()) && perm((1..=k).map(|r| m.get(r, i)).collect()));
    let commutative = (1..=k).all(|i| (1..=k).all(|j| m.get(i, j) == m.get(j, i)));
    let idempotent = (1..=k).all(|i| m.get(i, i) as usize == i);
    let anticirculant = (1..k).all(|i| (1..=k).all(|j| m.get(i + 1, j) == m.get(i, j % k + 1)));
    StructureFlags { latin, commutative, idempotent, anticirculant }
}

/// Exhaustive search for an idempotent commutative Latin square of the
/// given order; the first one found in row-major backtracking order.
pub fn search_icls(order: usize) -> Option<LatinSquare> {
    let k = order;
    let mut cells = vec![vec![0u32; k]; k];
    for (i, row) in cells.iter_mut().enumerate() {
        row[i] = i as u32 + 1;
    }
    let slots: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();

    fn fill(cells: &mut Vec<Vec<u32>>, slots: &[(usize, usize)], at: usize) -> bool {
        let Some(&(i, j)) = slots.get(at) else {
            return true;
        };
        let k = cells.len() as u32;
        for c in 1..=k {
            let clash = cells[i].contains(&c) || cells[j].contains(&c);
            if !clash {
                cells[i][j] = c;
                cells[j][i] = c;
                if fill(cells, slots, at + 1) {
                    return true;
                }
                cells[i][j] = 0;
                cells[j][i] = 0;
            }
        }
        false
    }

    fill(&mut cells, &slots, 0).then_some(LatinSquare { order: k, cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one() {
        assert_eq!(icls(1).cells, vec![vec![1]]);
    }

    #[test]
    fn two_by_two() {
        let m = LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).unwrap();
        let f = check_structure(&m);
        assert!(f.latin && f.commutative && !f.idempotent);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(LatinSquare::new(vec![vec![1, 3], vec![2, 1]]).is_err());
        assert!(LatinSquare::new(vec![vec![1], vec![2, 1]]).is_err());
    }

    #[test]
    fn search_small_orders() {
        for order in [1, 3, 5] {
            let m = search_icls(order).unwrap();
            let f = check_structure(&m);
            assert!(f.latin && f.commutative && f.idempotent);
        }
        assert!(search_icls(2).is_none());
        assert!(search_icls(4).is_none());
    }

    #[test]
    fn csv() {
        assert_eq!(icls(2).to_csv(), "1,3,2\n3,2,1\n2,1,3\n");
    }
}
