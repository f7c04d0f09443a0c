//! Finite simple graphs on `0..n` and their text file format.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph stored as adjacency bitmasks, one row per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        assert!(
            n <= MAX_VERTICES,
            "graphs are limited to {MAX_VERTICES} vertices"
        );
        Graph {
            n,
            rows: vec![0; n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.set_edge(i, j, true);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.set_edge(i - 1, i, true);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if i == j {
            return Err(Error::InvalidMap(format!("loop at vertex {i}")));
        }
        self.set_edge(i, j, true);
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, i: usize, j: usize, on: bool) {
        if on {
            self.rows[i] |= 1 << j;
            self.rows[j] |= 1 << i;
        } else {
            self.rows[i] &= !(1 << j);
            self.rows[j] &= !(1 << i);
        }
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Graph on `0..n` with `i ~ j` iff `perm[i] ~ perm[j]` here.
    pub fn pull_back(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(perm.len());
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if self.adjacent(perm[i], perm[j]) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Induced subgraph on `0..k`.
    pub fn prefix(&self, k: usize) -> Graph {
        let perm: Vec<usize> = (0..k).collect();
        self.pull_back(&perm)
    }

    /// Bits of the upper triangle, row by row; a labelled graph's fingerprint.
    pub fn edge_mask(&self) -> u128 {
        let mut mask = 0u128;
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.adjacent(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    /// Inverse of [`Graph::edge_mask`]; only for `n <= 16`.
    pub fn from_edge_mask(n: usize, mask: u128) -> Graph {
        assert!(n <= 16);
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    g.set_edge(i, j, true);
                }
                bit += 1;
            }
        }
        g
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (i, j) in self.edges() {
            writeln!(f, "e {i} {j}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// `n <count>` then `e <i> <j>` lines with `i < j < count`; `#` starts a comment line.
    fn from_str(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let bad = |message: String| Error::GraphFormat { line, message };
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match (fields.as_slice(), graph.as_mut()) {
                (["n", count], None) => {
                    let n: usize = count
                        .parse()
                        .map_err(|_| bad(format!("bad vertex count `{count}`")))?;
                    if n > MAX_VERTICES {
                        return Err(bad(format!(
                            "at most {MAX_VERTICES} vertices are supported"
                        )));
                    }
                    graph = Some(Graph::empty(n));
                }
                (["n", _], Some(_)) => return Err(bad("repeated `n` line".into())),
                (["e", a, b], Some(g)) => {
                    let i: usize = a.parse().map_err(|_| bad(format!("bad vertex `{a}`")))?;
                    let j: usize = b.parse().map_err(|_| bad(format!("bad vertex `{b}`")))?;
                    if !(i < j && j < g.n) {
                        return Err(bad(format!("edge `{i} {j}` needs 0 <= i < j < {}", g.n)));
                    }
                    if g.adjacent(i, j) {
                        return Err(bad(format!("duplicate edge `{i} {j}`")));
                    }
                    g.set_edge(i, j, true);
                }
                (["e", ..], None) => return Err(bad("edge before the `n` line".into())),
                _ => return Err(bad(format!("unrecognised line `{trimmed}`"))),
            }
        }
        graph.ok_or(Error::GraphFormat {
            line: 0,
            message: "missing `n` line".into(),
        })
    }
}
