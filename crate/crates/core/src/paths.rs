//! Exact simple-path counting between node pairs.
//!
//! Counting is depth-first backtracking with an on-path membership mask;
//! paths are counted, never materialised. The work is exponential in the
//! node count, so uncapped enumeration is refused above
//! [`ENUMERATION_GUARD`] nodes unless the caller forces it.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::topology::{NodeId, Topology};

/// Largest node count enumerated without a length cap or `force`.
pub const ENUMERATION_GUARD: usize = 14;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PathQuery {
    /// Only count paths with at most this many edges.
    pub max_length: Option<usize>,
    /// Enumerate above the guard without a cap.
    pub force: bool,
}

impl PathQuery {
    pub fn capped(max_length: usize) -> Self {
        Self {
            max_length: Some(max_length),
            force: false,
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.max_length == Some(0) {
            return Err(Error::Range {
                metric: "max_length",
                reason: "cap must be a positive number of hops".into(),
            });
        }
        if n > ENUMERATION_GUARD && self.max_length.is_none() && !self.force {
            return Err(Error::Guard {
                n,
                guard: ENUMERATION_GUARD,
            });
        }
        Ok(())
    }
}

struct Enumerator<'a> {
    adj: &'a [Vec<usize>],
    target: usize,
    cap: usize,
    track_binding: bool,
    on_path: Vec<bool>,
    count: u64,
    binding: bool,
}

impl<'a> Enumerator<'a> {
    fn new(adj: &'a [Vec<usize>], target: usize, max_length: Option<usize>) -> Self {
        let n = adj.len();
        let longest = n.saturating_sub(1);
        Self {
            adj,
            target,
            cap: max_length.map_or(longest, |m| m.min(longest)),
            track_binding: max_length.is_some_and(|m| m < longest),
            on_path: vec![false; n],
            count: 0,
            binding: false,
        }
    }

    fn run(mut self, source: usize) -> (u64, bool) {
        self.on_path[source] = true;
        self.extend(source, 0);
        (self.count, self.binding)
    }

    // `depth` is the number of edges on the path ending at `x`.
    fn extend(&mut self, x: usize, depth: usize) {
        let adj = self.adj;
        for &y in &adj[x] {
            if y == self.target {
                self.count += 1;
            } else if self.on_path[y] {
                continue;
            } else if depth + 1 < self.cap {
                self.on_path[y] = true;
                self.extend(y, depth + 1);
                self.on_path[y] = false;
            } else if self.track_binding && !self.binding && self.reaches_target(y) {
                // A simple continuation through `y` exists but is longer than the cap.
                self.binding = true;
            }
        }
    }

    fn reaches_target(&self, start: usize) -> bool {
        let mut seen = self.on_path.clone();
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if y == self.target {
                    return true;
                }
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

fn check_pair(t: &Topology, u: NodeId, v: NodeId) -> Result<()> {
    let n = t.node_count();
    if u.index() >= n || v.index() >= n {
        return Err(Error::InvalidPair {
            u: u.index(),
            v: v.index(),
            reason: "node outside the topology",
        });
    }
    if u == v {
        return Err(Error::InvalidPair {
            u: u.index(),
            v: v.index(),
            reason: "endpoints must differ",
        });
    }
    Ok(())
}

/// Number of simple paths between `u` and `v`.
pub fn count_simple_paths(t: &Topology, u: NodeId, v: NodeId, query: PathQuery) -> Result<u64> {
    check_pair(t, u, v)?;
    query.check(t.node_count())?;
    let adj = t.adjacency();
    Ok(Enumerator::new(&adj, v.index(), query.max_length)
        .run(u.index())
        .0)
}

/// Symmetric table of simple-path counts for every node pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountMatrix {
    n: usize,
    counts: Vec<u64>,
    capped: bool,
}

impl PathCountMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u64 {
        self.counts[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.counts[u * self.n..(u + 1) * self.n]
    }

    /// Whether the length cap excluded at least one path.
    pub fn capped(&self) -> bool {
        self.capped
    }

    /// Off-diagonal entries with `u < v`.
    pub fn pair_counts(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| self.get(u, v)))
    }
}

pub fn path_count_matrix(t: &Topology, query: PathQuery) -> Result<PathCountMatrix> {
    let n = t.node_count();
    query.check(n)?;
    let adj = t.adjacency();

    // One task per source row; each writes only its own upper-triangle cells.
    let rows: Vec<(Vec<u64>, bool)> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut capped = false;
            let row = (u + 1..n)
                .map(|v| {
                    let (count, binding) = Enumerator::new(&adj, v, query.max_length).run(u);
                    capped |= binding;
                    count
                })
                .collect();
            (row, capped)
        })
        .collect();

    let mut counts = vec![0; n * n];
    let mut capped = false;
    for (u, (row, row_capped)) in rows.into_iter().enumerate() {
        capped |= row_capped;
        for (offset, count) in row.into_iter().enumerate() {
            let v = u + 1 + offset;
            counts[u * n + v] = count;
            counts[v * n + u] = count;
        }
    }
    Ok(PathCountMatrix { n, counts, capped })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathStats {
    pub min_pairs: u64,
    pub max_pairs: u64,
    pub mean_pairs: f64,
}

/// Min, max and mean path count over the unordered node pairs.
pub fn summarize(m: &PathCountMatrix) -> Result<PathStats> {
    if m.n < 2 {
        return Err(Error::EmptyMatrix { n: m.n });
    }
    let (mut min, mut max, mut sum, mut pairs) = (u64::MAX, 0u64, 0u128, 0u64);
    for c in m.pair_counts() {
        min = min.min(c);
        max = max.max(c);
        sum += u128::from(c);
        pairs += 1;
    }
    Ok(PathStats {
        min_pairs: min,
        max_pairs: max,
        mean_pairs: sum as f64 / pairs as f64,
    })
}
