//! Undirected simple graph with dense node indices and sorted adjacency sets.
//!
//! Every structure in this crate operates on [`Graph`]: an unweighted,
//! undirected graph with no self-loops and no multi-edges. Adjacency is kept
//! as one sorted set per node, which gives deterministic iteration order and
//! therefore reproducible tie-breaking everywhere an argmin/argmax over edges
//! or nodes is taken.
//!
//! Distances are hop counts; unreachable pairs carry an explicit
//! [`Distance::Infinite`] sentinel rather than a large magic number, so that
//! quantities derived from them (detour distances, rewiring scores) stay
//! honest when an edge removal disconnects the graph.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Dense node index in `[0, node_count)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected edge stored in canonical `(min, max)` order, usable as an
/// ordered map key. The two endpoints are always distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey {
    u: NodeId,
    v: NodeId,
}

impl EdgeKey {
    /// Canonical edge between two distinct nodes.
    ///
    /// Panics if `a == b`; self-loop inputs must be rejected before keys are
    /// built (see [`EdgeKey::try_new`]).
    pub fn new(a: NodeId, b: NodeId) -> EdgeKey {
        assert!(a != b, "self-loop edge key ({a}, {b})");
        if a < b {
            EdgeKey { u: a, v: b }
        } else {
            EdgeKey { u: b, v: a }
        }
    }

    pub fn try_new(a: NodeId, b: NodeId) -> Result<EdgeKey, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(EdgeKey::new(a, b))
    }

    #[inline]
    pub fn u(self) -> NodeId {
        self.u
    }

    #[inline]
    pub fn v(self) -> NodeId {
        self.v
    }

    /// The endpoint that is not `n`. Panics if `n` is not an endpoint.
    pub fn other(self, n: NodeId) -> NodeId {
        if n == self.u {
            self.v
        } else if n == self.v {
            self.u
        } else {
            panic!("{n} is not an endpoint of {self}")
        }
    }

    pub fn has_endpoint(self, n: NodeId) -> bool {
        n == self.u || n == self.v
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Geodesic hop distance, with an explicit sentinel for unreachable pairs.
///
/// The derived ordering places every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    #[inline]
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl std::ops::Add for Distance {
    type Output = Distance;
    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Extended non-negative real: a score or bound that may be infinite.
///
/// Ordering places every finite value below `Infinite`, so an argmin over
/// scores picks an infinite one only when no finite candidate exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinite,
}

impl ExtReal {
    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    #[inline]
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(x) => Some(x),
            ExtReal::Infinite => None,
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        use ExtReal::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.partial_cmp(b),
            (Finite(_), Infinite) => Some(std::cmp::Ordering::Less),
            (Infinite, Finite(_)) => Some(std::cmp::Ordering::Greater),
            (Infinite, Infinite) => Some(std::cmp::Ordering::Equal),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(x) => write!(f, "{x}"),
            ExtReal::Infinite => write!(f, "inf"),
        }
    }
}

/// All-pairs geodesic distances, one row per source node.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    rows: Vec<Vec<Distance>>,
}

impl DistanceMatrix {
    pub fn compute(g: &Graph) -> DistanceMatrix {
        let rows = g
            .nodes()
            .map(|s| g.bfs_distances(s).expect("source in range"))
            .collect();
        DistanceMatrix { rows }
    }

    #[inline]
    pub fn get(&self, s: NodeId, t: NodeId) -> Distance {
        self.rows[s.index()][t.index()]
    }

    pub fn node_count(&self) -> usize {
        self.rows.len()
    }

    pub fn all_finite(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.iter().all(|d| d.is_finite()))
    }

    /// Sum of hops over unordered pairs, or `None` if any pair is unreachable.
    pub fn unordered_hop_sum(&self) -> Option<u64> {
        let n = self.rows.len();
        let mut sum = 0u64;
        for l in 0..n {
            for m in (l + 1)..n {
                sum += u64::from(self.rows[l][m].finite()?);
            }
        }
        Some(sum)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("SelfLoop: node {0} cannot connect to itself")]
    SelfLoop(NodeId),
    #[error("DuplicateEdge: edge ({0}, {1}) listed more than once")]
    DuplicateEdge(NodeId, NodeId),
    #[error("NodeOutOfRange: node {node} outside [0, {node_count})")]
    NodeOutOfRange { node: usize, node_count: usize },
    #[error("EdgeNotFound: edge {0} not present")]
    EdgeNotFound(EdgeKey),
    #[error("EdgeAlreadyExists: edge {0} already present")]
    EdgeAlreadyExists(EdgeKey),
    #[error("DisconnectedGraph: operation requires a connected graph")]
    DisconnectedGraph,
}

/// Undirected simple graph on nodes `0..node_count`.
///
/// Adjacency lists are kept sorted ascending, which gives set semantics,
/// deterministic iteration, and contiguous traversal in the BFS-heavy inner
/// loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from `(u, v)` pairs.
    ///
    /// Rejects self-loops and out-of-range endpoints. With `strict` set, a
    /// repeated pair (in either orientation) is a [`GraphError::DuplicateEdge`];
    /// otherwise repeats collapse silently.
    pub fn from_edge_list(
        n: usize,
        edges: &[(usize, usize)],
        strict: bool,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::NodeOutOfRange {
                        node: x,
                        node_count: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(NodeId(u)));
            }
            let key = EdgeKey::new(NodeId(u), NodeId(v));
            match g.add_edge(key) {
                Ok(()) => {}
                Err(GraphError::EdgeAlreadyExists(_)) if !strict => {}
                Err(GraphError::EdgeAlreadyExists(_)) => {
                    return Err(GraphError::DuplicateEdge(NodeId(u), NodeId(v)));
                }
                Err(e) => return Err(e),
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count()).map(NodeId)
    }

    pub fn check_node(&self, v: NodeId) -> Result<(), GraphError> {
        if v.index() >= self.node_count() {
            return Err(GraphError::NodeOutOfRange {
                node: v.index(),
                node_count: self.node_count(),
            });
        }
        Ok(())
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v.index()].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.adjacency[v.index()].iter().copied()
    }

    /// Neighbors of `v` as a sorted slice.
    pub fn neighbor_slice(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v.index()]
    }

    #[inline]
    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u != v
            && u.index() < self.node_count()
            && v.index() < self.node_count()
            && self.adjacency[u.index()].binary_search(&v).is_ok()
    }

    #[inline]
    pub fn contains(&self, e: EdgeKey) -> bool {
        self.has_edge(e.u(), e.v())
    }

    /// All edges in canonical ascending order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeKey> + '_ {
        self.nodes().flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| u < v)
                .map(move |v| EdgeKey::new(u, v))
        })
    }

    pub fn add_edge(&mut self, e: EdgeKey) -> Result<(), GraphError> {
        self.check_node(e.u())?;
        self.check_node(e.v())?;
        let first = match self.adjacency[e.u().index()].binary_search(&e.v()) {
            Ok(_) => return Err(GraphError::EdgeAlreadyExists(e)),
            Err(at) => at,
        };
        let second = self.adjacency[e.v().index()]
            .binary_search(&e.u())
            .expect_err("adjacency symmetric");
        self.adjacency[e.u().index()].insert(first, e.v());
        self.adjacency[e.v().index()].insert(second, e.u());
        self.edge_count += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, e: EdgeKey) -> Result<(), GraphError> {
        self.check_node(e.u())?;
        self.check_node(e.v())?;
        let first = match self.adjacency[e.u().index()].binary_search(&e.v()) {
            Ok(at) => at,
            Err(_) => return Err(GraphError::EdgeNotFound(e)),
        };
        let second = self.adjacency[e.v().index()]
            .binary_search(&e.u())
            .expect("adjacency symmetric");
        self.adjacency[e.u().index()].remove(first);
        self.adjacency[e.v().index()].remove(second);
        self.edge_count -= 1;
        Ok(())
    }

    /// Hop distances from `source` to every node; unreachable nodes are
    /// [`Distance::Infinite`].
    pub fn bfs_distances(&self, source: NodeId) -> Result<Vec<Distance>, GraphError> {
        self.check_node(source)?;
        let mut dist = vec![Distance::Infinite; self.node_count()];
        dist[source.index()] = Distance::Finite(0);
        let mut queue = VecDeque::with_capacity(self.node_count());
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = match dist[u.index()] {
                Distance::Finite(d) => d,
                Distance::Infinite => unreachable!(),
            };
            for v in self.neighbors(u) {
                if dist[v.index()] == Distance::Infinite {
                    dist[v.index()] = Distance::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Distance between one pair, by BFS from `s` (stops early at `t`).
    pub fn distance(&self, s: NodeId, t: NodeId) -> Result<Distance, GraphError> {
        self.check_node(t)?;
        if s == t {
            self.check_node(s)?;
            return Ok(Distance::Finite(0));
        }
        let mut dist = vec![Distance::Infinite; self.node_count()];
        dist[s.index()] = Distance::Finite(0);
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[u.index()].finite().expect("visited");
            for v in self.neighbors(u) {
                if dist[v.index()] == Distance::Infinite {
                    if v == t {
                        return Ok(Distance::Finite(du + 1));
                    }
                    dist[v.index()] = Distance::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(Distance::Infinite)
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::compute(self)
    }

    /// Mean hop distance over all ordered node pairs.
    ///
    /// The hop total is accumulated as an exact integer and divided once, so
    /// the result is exact to one floating-point rounding. Errors with
    /// [`GraphError::DisconnectedGraph`] if any pair is unreachable. A graph
    /// with fewer than two nodes has no pairs and reports `0.0`.
    pub fn average_distance(&self) -> Result<f64, GraphError> {
        let n = self.node_count();
        if n < 2 {
            return Ok(0.0);
        }
        let mut sum = 0u64;
        for s in self.nodes() {
            let row = self.bfs_distances(s)?;
            for d in row {
                match d {
                    Distance::Finite(h) => sum += u64::from(h),
                    Distance::Infinite => return Err(GraphError::DisconnectedGraph),
                }
            }
        }
        // `sum` covers ordered pairs (each unordered pair twice).
        Ok(sum as f64 / (n as f64 * (n as f64 - 1.0)))
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Connected components as sorted node lists; the partition covers every
    /// node. A zero-node graph has no components.
    pub fn connected_components(&self) -> Vec<Vec<NodeId>> {
        let n = self.node_count();
        let mut label = vec![usize::MAX; n];
        let mut components: Vec<Vec<NodeId>> = Vec::new();
        for start in self.nodes() {
            if label[start.index()] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            label[start.index()] = id;
            let mut queue = VecDeque::new();
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if label[v.index()] == usize::MAX {
                        label[v.index()] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort();
            components.push(members);
        }
        components
    }

    /// Per-node component labels, plus the component count.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let comps = self.connected_components();
        let mut labels = vec![0usize; self.node_count()];
        for (id, members) in comps.iter().enumerate() {
            for &v in members {
                labels[v.index()] = id;
            }
        }
        (comps.len(), labels)
    }

    /// Degrees sorted in non-increasing order. The sum is always `2 * |E|`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(|a| a.len()).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    /// Mean local clustering coefficient. Nodes of degree below two
    /// contribute zero.
    pub fn clustering_coefficient(&self) -> f64 {
        let n = self.node_count();
        if n == 0 {
            return 0.0;
        }
        let mut total = 0.0;
        for v in self.nodes() {
            let k = self.degree(v);
            if k < 2 {
                continue;
            }
            let neighbors: Vec<NodeId> = self.neighbors(v).collect();
            let mut links = 0usize;
            for (i, &x) in neighbors.iter().enumerate() {
                for &y in &neighbors[i + 1..] {
                    if self.has_edge(x, y) {
                        links += 1;
                    }
                }
            }
            total += 2.0 * links as f64 / (k as f64 * (k as f64 - 1.0));
        }
        total / n as f64
    }

    /// Order-independent structural fingerprint (FNV-1a over the node count
    /// and the canonical edge list). Stable across platforms and runs.
    pub fn fingerprint(&self) -> u64 {
        const OFFSET: u64 = 0xcbf29ce484222325;
        const PRIME: u64 = 0x100000001b3;
        let mut h = OFFSET;
        let mut mix = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(PRIME);
            }
        };
        mix(self.node_count() as u64);
        for e in self.edges() {
            mix(e.u().index() as u64);
            mix(e.v().index() as u64);
        }
        h
    }

    /// Debug check of the structural invariants: adjacency symmetry, no
    /// self-loops, cached edge count consistent with the degree sum.
    pub fn validate(&self) -> Result<(), String> {
        let mut degree_sum = 0usize;
        for u in self.nodes() {
            for v in self.neighbors(u) {
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if !self.adjacency[v.index()].contains(&u) {
                    return Err(format!("asymmetric edge ({u}, {v})"));
                }
            }
            degree_sum += self.degree(u);
        }
        if degree_sum != 2 * self.edge_count {
            return Err(format!(
                "degree sum {degree_sum} != 2 * edge count {}",
                self.edge_count
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges, true).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges, true).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Graph::from_edge_list(n, &edges, true).unwrap()
    }

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)], true).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.node_count(), 3);
        g.validate().unwrap();
    }

    #[test]
    fn self_loop_rejected() {
        let err = Graph::from_edge_list(2, &[(0, 0)], true).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop(NodeId(0)));
    }

    #[test]
    fn duplicate_edge_strict_vs_collapse() {
        let err = Graph::from_edge_list(4, &[(0, 1), (0, 1)], true).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(NodeId(0), NodeId(1)));
        // Reversed orientation is the same edge.
        let err = Graph::from_edge_list(4, &[(0, 1), (1, 0)], true).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(NodeId(1), NodeId(0)));
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1)], false).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn out_of_range_rejected() {
        let err = Graph::from_edge_list(2, &[(0, 5)], true).unwrap_err();
        assert!(matches!(err, GraphError::NodeOutOfRange { node: 5, .. }));
    }

    #[test]
    fn bfs_on_path_cycle_and_disconnected() {
        let g = path(3);
        let d = g.bfs_distances(NodeId(0)).unwrap();
        assert_eq!(
            d,
            vec![
                Distance::Finite(0),
                Distance::Finite(1),
                Distance::Finite(2)
            ]
        );

        let c4 = cycle(4);
        let d = c4.bfs_distances(NodeId(0)).unwrap();
        assert_eq!(
            d,
            vec![
                Distance::Finite(0),
                Distance::Finite(1),
                Distance::Finite(2),
                Distance::Finite(1)
            ]
        );

        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)], true).unwrap();
        let d = two_k2.bfs_distances(NodeId(0)).unwrap();
        assert_eq!(
            d,
            vec![
                Distance::Finite(0),
                Distance::Finite(1),
                Distance::Infinite,
                Distance::Infinite
            ]
        );

        assert!(matches!(
            g.bfs_distances(NodeId(7)),
            Err(GraphError::NodeOutOfRange { .. })
        ));
    }

    #[test]
    fn average_distance_examples() {
        for n in 2..6 {
            assert_eq!(complete(n).average_distance().unwrap(), 1.0);
        }
        let c4 = cycle(4);
        assert!((c4.average_distance().unwrap() - 4.0 / 3.0).abs() < 1e-12);
        // P4 unordered hop sum: 1+1+1+2+2+3 = 10 over 6 pairs.
        let p4 = path(4);
        assert!((p4.average_distance().unwrap() - 5.0 / 3.0).abs() < 1e-12);

        let disconnected = Graph::from_edge_list(4, &[(0, 1), (2, 3)], true).unwrap();
        assert_eq!(
            disconnected.average_distance().unwrap_err(),
            GraphError::DisconnectedGraph
        );
    }

    #[test]
    fn connectivity_and_components() {
        assert!(complete(3).is_connected());
        assert_eq!(complete(3).connected_components().len(), 1);

        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)], true).unwrap();
        assert!(!two.is_connected());
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], vec![NodeId(0), NodeId(1)]);
        assert_eq!(comps[1], vec![NodeId(2), NodeId(3)]);

        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn degree_sequence_examples() {
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)], true).unwrap();
        assert_eq!(star.degree_sequence(), vec![3, 1, 1, 1]);
        assert_eq!(cycle(4).degree_sequence(), vec![2, 2, 2, 2]);
        let g = cycle(7);
        assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(complete(3).clustering_coefficient(), 1.0);
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)], true).unwrap();
        assert_eq!(star.clustering_coefficient(), 0.0);
        // K4 minus edge (2,3): the degree-3 nodes sit in two of the two
        // remaining triangles (local 2/3), the degree-2 nodes in one of one
        // (local 1), so the mean is (2/3 + 2/3 + 1 + 1) / 4 = 5/6.
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], true).unwrap();
        assert!((g.clustering_coefficient() - 5.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn remove_and_add_edges() {
        let mut c4 = cycle(4);
        let e = EdgeKey::new(NodeId(0), NodeId(1));
        c4.remove_edge(e).unwrap();
        assert_eq!(c4.edge_count(), 3);
        assert_eq!(
            c4.remove_edge(e).unwrap_err(),
            GraphError::EdgeNotFound(e)
        );
        c4.add_edge(e).unwrap();
        assert_eq!(c4, cycle(4));

        let mut p3 = path(3);
        p3.add_edge(EdgeKey::new(NodeId(0), NodeId(2))).unwrap();
        assert_eq!(p3.edge_count(), 3);

        let mut tri = complete(3);
        let err = tri.add_edge(EdgeKey::new(NodeId(0), NodeId(1))).unwrap_err();
        assert_eq!(err, GraphError::EdgeAlreadyExists(EdgeKey::new(NodeId(0), NodeId(1))));
    }

    #[test]
    fn edge_key_canonical_order() {
        let a = EdgeKey::new(NodeId(5), NodeId(2));
        assert_eq!(a.u(), NodeId(2));
        assert_eq!(a.v(), NodeId(5));
        assert_eq!(a.other(NodeId(2)), NodeId(5));
        assert!(EdgeKey::new(NodeId(0), NodeId(9)) < EdgeKey::new(NodeId(1), NodeId(2)));
        assert!(EdgeKey::try_new(NodeId(3), NodeId(3)).is_err());
    }

    #[test]
    fn distance_ordering_and_sum() {
        assert!(Distance::Finite(7) < Distance::Infinite);
        assert!(Distance::Finite(2) < Distance::Finite(3));
        assert_eq!(
            Distance::Finite(2) + Distance::Infinite,
            Distance::Infinite
        );
        assert_eq!(
            Distance::Finite(2) + Distance::Finite(3),
            Distance::Finite(5)
        );
    }

    #[test]
    fn fingerprint_ignores_insertion_order() {
        let a = Graph::from_edge_list(3, &[(0, 1), (1, 2)], true).unwrap();
        let b = Graph::from_edge_list(3, &[(2, 1), (0, 1)], true).unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), complete(3).fingerprint());
    }
}
