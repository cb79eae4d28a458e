//! Test-only oracles. Nothing here calls into the code paths it checks.
#![allow(dead_code)]

use itertools::Itertools;
use sdnbench::{Edge, Topology, TopologyClass};

/// SplitMix64, used to draw random fixtures independently of the crate's streams.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn coin(&mut self, p: f64) -> bool {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64 <= p
    }
}

pub fn adjacency_matrix(t: &Topology) -> Vec<Vec<bool>> {
    let n = t.node_count();
    let mut m = vec![vec![false; n]; n];
    for e in t.edges() {
        let (u, v) = e.endpoints();
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Counts u-v simple paths by trying every ordered selection of distinct
/// intermediate vertices and keeping those that form a walk.
pub fn brute_force_paths(t: &Topology, u: usize, v: usize) -> u64 {
    brute_force_paths_within(t, u, v, usize::MAX)
}

/// As [`brute_force_paths`], keeping only paths of at most `max_len` edges.
pub fn brute_force_paths_within(t: &Topology, u: usize, v: usize, max_len: usize) -> u64 {
    let n = t.node_count();
    let adj = adjacency_matrix(t);
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    let mut total = 0;
    for k in (0..=others.len()).take_while(|&k| k < max_len) {
        for middle in others.iter().copied().permutations(k) {
            let walk: Vec<usize> = std::iter::once(u)
                .chain(middle)
                .chain(std::iter::once(v))
                .collect();
            if walk.windows(2).all(|w| adj[w[0]][w[1]]) {
                total += 1;
            }
        }
    }
    total
}

/// Number of simple paths between two nodes of K_n.
pub fn complete_graph_paths(n: usize) -> u64 {
    let m = (n - 2) as u64;
    // sum over k intermediates of m!/(m-k)!
    (0..=m).map(|k| ((m - k + 1)..=m).product::<u64>()).sum()
}

/// Union-find component count.
pub fn components(n: usize, edges: &[Edge]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    let mut count = n;
    for e in edges {
        let (u, v) = e.endpoints();
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

pub fn random_graph(rng: &mut Lcg, n: usize, p: f64) -> Topology {
    let edges: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.coin(p))
        .map(|(u, v)| Edge::new(u, v))
        .collect();
    Topology::from_parts(TopologyClass::PartialMesh, n, edges)
}

/// Random recursive tree: node i attaches to a uniformly chosen earlier node.
pub fn random_tree(rng: &mut Lcg, n: usize) -> Topology {
    let edges: Vec<Edge> = (1..n)
        .map(|i| Edge::new(i, rng.below(i as u64) as usize))
        .collect();
    Topology::from_parts(TopologyClass::Sparse, n, edges)
}

pub fn ring(n: usize) -> Topology {
    Topology::from_parts(
        TopologyClass::Sparse,
        n,
        (0..n).map(|i| Edge::new(i, (i + 1) % n)),
    )
}
