//! Graph model for evaluation topologies and the per-class edge-count rules.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a node within its topology, `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected link stored with `u <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: NodeId,
    v: NodeId,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Self {
            u: NodeId(u),
            v: NodeId(v),
        }
    }

    pub fn u(self) -> NodeId {
        self.u
    }

    pub fn v(self) -> NodeId {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u.0, self.v.0)
    }

    pub fn is_loop(self) -> bool {
        self.u == self.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// The three density classes of evaluation topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TopologyClass {
    /// Worst case: `E = N`, one cycle on top of a spanning tree.
    Sparse,
    /// Intermediate density: `E = floor((N(N-1)/2 + N) / 2)`.
    PartialMesh,
    /// Every pair of nodes linked: `E = N(N-1)/2`.
    FullMesh,
}

impl TopologyClass {
    pub const ALL: [TopologyClass; 3] = [
        TopologyClass::Sparse,
        TopologyClass::PartialMesh,
        TopologyClass::FullMesh,
    ];

    /// Smallest node count for which the class yields a simple connected graph.
    pub fn min_nodes(self) -> usize {
        match self {
            TopologyClass::Sparse | TopologyClass::PartialMesh => 3,
            TopologyClass::FullMesh => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TopologyClass::Sparse => "sparse",
            TopologyClass::PartialMesh => "partial-mesh",
            TopologyClass::FullMesh => "full-mesh",
        }
    }
}

impl fmt::Display for TopologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TopologyClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "sparse" => Ok(TopologyClass::Sparse),
            "partial-mesh" => Ok(TopologyClass::PartialMesh),
            "full-mesh" => Ok(TopologyClass::FullMesh),
            other => Err(format!(
                "unknown topology class {other:?} (expected sparse, partial-mesh or full-mesh)"
            )),
        }
    }
}

/// Number of unordered node pairs, `N(N-1)/2`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Exact edge count a topology of `class` on `n` nodes must have.
///
/// The partial-mesh value `(N(N-1)/2 + N) / 2` is floored when odd, e.g.
/// `N = 5` gives 7.
pub fn edge_count(class: TopologyClass, n: usize) -> Result<usize> {
    let min = class.min_nodes();
    if n < min {
        return Err(Error::InvalidSize { class, n, min });
    }
    Ok(match class {
        TopologyClass::Sparse => n,
        TopologyClass::PartialMesh => (pair_count(n) + n) / 2,
        TopologyClass::FullMesh => pair_count(n),
    })
}

/// An undirected simple graph tagged with its class.
///
/// Construction through [`Topology::new`] enforces every class invariant;
/// [`Topology::from_parts`] accepts arbitrary input so it can be inspected
/// with [`validate_topology`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    class: TopologyClass,
    n: usize,
    edges: Vec<Edge>,
}

impl Topology {
    pub fn new(
        class: TopologyClass,
        n: usize,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let t = Self::from_parts(class, n, edges);
        let report = validate_topology(&t);
        match report.violations.first() {
            None => Ok(t),
            Some(v) => Err(Error::Structural(v.to_string())),
        }
    }

    /// Builds a topology without checking any invariant. Edges are kept in
    /// canonical sorted order, duplicates included.
    pub fn from_parts(
        class: TopologyClass,
        n: usize,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        Self { class, n, edges }
    }

    pub fn class(&self) -> TopologyClass {
        self.class
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Edges sorted lexicographically by `(min, max)` endpoint.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&Edge::new(a, b)).is_ok()
    }

    /// Sorted neighbour lists. Out-of-range endpoints and self-loops are skipped.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            let (u, v) = e.endpoints();
            if u != v && v < self.n {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Number of connected components, counting isolated nodes.
    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut components = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        components
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)));
        Self::from_parts(TopologyClass::FullMesh, n, edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BelowMinimumSize {
        class: TopologyClass,
        n: usize,
        min: usize,
    },
    SelfLoop {
        node: usize,
    },
    NodeOutOfRange {
        edge: Edge,
        n: usize,
    },
    DuplicateEdge {
        edge: Edge,
    },
    Disconnected {
        components: usize,
    },
    WrongEdgeCount {
        expected: usize,
        actual: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BelowMinimumSize { class, n, min } => {
                write!(f, "{class} topology needs at least {min} nodes, got {n}")
            }
            Violation::SelfLoop { node } => write!(f, "self-loop on node {node}"),
            Violation::NodeOutOfRange { edge, n } => {
                write!(f, "edge {edge} references a node outside 0..{n}")
            }
            Violation::DuplicateEdge { edge } => write!(f, "duplicate edge {edge}"),
            Violation::Disconnected { components } => {
                write!(f, "graph is disconnected ({components} components)")
            }
            Violation::WrongEdgeCount { expected, actual } => {
                write!(
                    f,
                    "expected {expected} edges for this class, found {actual}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists every broken topology invariant. Never fails.
pub fn validate_topology(t: &Topology) -> ValidationReport {
    let mut violations = Vec::new();
    let n = t.node_count();

    let min = t.class().min_nodes();
    if n < min {
        violations.push(Violation::BelowMinimumSize {
            class: t.class(),
            n,
            min,
        });
    }

    let mut seen = BTreeSet::new();
    let mut reported_dups = BTreeSet::new();
    for &edge in t.edges() {
        let (u, v) = edge.endpoints();
        if edge.is_loop() {
            violations.push(Violation::SelfLoop { node: u });
        }
        if v >= n {
            violations.push(Violation::NodeOutOfRange { edge, n });
        }
        if !seen.insert(edge) && reported_dups.insert(edge) {
            violations.push(Violation::DuplicateEdge { edge });
        }
    }

    let components = t.component_count();
    if components > 1 {
        violations.push(Violation::Disconnected { components });
    }

    if let Ok(expected) = edge_count(t.class(), n) {
        if expected != t.edge_count() {
            violations.push(Violation::WrongEdgeCount {
                expected,
                actual: t.edge_count(),
            });
        }
    }

    ValidationReport { violations }
}
