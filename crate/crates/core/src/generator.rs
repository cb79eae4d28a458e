//! Seeded construction of sparse, partial-mesh and full-mesh topologies.
//!
//! Sparse and partial-mesh graphs start from a uniformly random labelled
//! spanning tree (decoded from a random Prüfer sequence), which fixes
//! connectivity up front. The remaining edges are drawn uniformly without
//! replacement from the pairs the tree does not use: one chord for sparse,
//! enough to reach the class edge count for partial mesh.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::rng::{Stream, StreamRng};
use crate::topology::{edge_count, pair_count, Edge, Topology, TopologyClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub class: TopologyClass,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(class: TopologyClass, n: usize, seed: u64) -> Self {
        Self { class, n, seed }
    }
}

pub fn generate_topology(cfg: &GeneratorConfig) -> Result<Topology> {
    let target = edge_count(cfg.class, cfg.n)?;
    if target > pair_count(cfg.n) || target + 1 < cfg.n {
        return Err(Error::Infeasible {
            n: cfg.n,
            edges: target,
        });
    }

    if cfg.class == TopologyClass::FullMesh {
        return Ok(Topology::complete(cfg.n));
    }

    let mut rng = StreamRng::new(cfg.seed, Stream::Topology);
    let tree = random_spanning_tree(cfg.n, &mut rng);
    let extra = sample_non_tree_edges(cfg.n, &tree, target - tree.len(), &mut rng);

    let edges = tree.into_iter().chain(extra);
    Ok(Topology::from_parts(cfg.class, cfg.n, edges))
}

/// Uniformly random labelled tree on `n` nodes, returned in sorted order.
pub fn random_spanning_tree(n: usize, rng: &mut StreamRng) -> Vec<Edge> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![Edge::new(0, 1)],
        _ => {}
    }

    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();

    let mut degree = vec![1usize; n];
    for &x in &prufer {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&i| degree[i] == 1).map(Reverse).collect();

    let mut edges = Vec::with_capacity(n - 1);
    for &x in &prufer {
        let Reverse(leaf) = leaves.pop().expect("prufer decoding always has a leaf");
        edges.push(Edge::new(leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push(Edge::new(a, b));

    edges.sort_unstable();
    edges
}

/// Picks `k` distinct pairs outside `tree`, uniformly without replacement.
fn sample_non_tree_edges(n: usize, tree: &[Edge], k: usize, rng: &mut StreamRng) -> Vec<Edge> {
    if k == 0 {
        return Vec::new();
    }
    let used: BTreeSet<Edge> = tree.iter().copied().collect();
    let mut candidates: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
        .filter(|e| !used.contains(e))
        .collect();
    debug_assert!(k <= candidates.len());

    // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
    for i in 0..k {
        let j = i + rng.below((candidates.len() - i) as u64) as usize;
        candidates.swap(i, j);
    }
    candidates.truncate(k);
    candidates
}
