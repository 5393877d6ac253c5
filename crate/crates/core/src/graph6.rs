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

//! graph6 reading and writing for graphs of order at most 62.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_ORDER: usize = 62;

fn parse_err<T>(offset: usize, reason: impl Into<String>) -> Result<T> {
    Err(Error::Graph6 { offset, reason: reason.into() })
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted; byte offsets in errors are relative to the
/// encoded graph itself.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let Some(&head) = bytes.first() else {
        return parse_err(0, "empty input");
    };
    if !(63..=126).contains(&head) {
        return parse_err(0, format!("byte 0x{head:02x} is not a graph6 character"));
    }
    if head == 126 {
        return parse_err(0, "multi-byte order header (order above 62) is not supported");
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return parse_err(0, "order 0 is not supported");
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    for (k, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return parse_err(k, format!("byte 0x{b:02x} is not a graph6 character"));
        }
    }
    if bytes.len() < 1 + nbytes {
        return parse_err(bytes.len(), format!("expected {nbytes} edge bytes for order {n}"));
    }
    if bytes.len() > 1 + nbytes {
        return parse_err(1 + nbytes, "unexpected trailing bytes");
    }
    let bit = |k: usize| (bytes[1 + k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..nbytes * 6 {
        if bit(k) {
            return parse_err(1 + k / 6, "padding bits are not zero");
        }
    }
    let mut k = 0;
    let mut set = vec![false; nbits];
    for j in 1..n {
        for i in 0..j {
            set[j * (j - 1) / 2 + i] = bit(k);
            k += 1;
        }
    }
    Ok(Graph::from_fn(n, |i, j| set[j * (j - 1) / 2 + i]))
}

/// Encodes a graph of order 1..=62 as graph6 without a trailing newline.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
