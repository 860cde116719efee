//! Shortest-path counting and edge betweenness.
//!
//! Edge betweenness here follows a specific convention: the sum runs over
//! *ordered* node pairs `(l, m)`, `l != m`, and for an edge `e(a, b)` the
//! pair `{a, b}` itself is excluded. Relative to the conventional ordered
//! edge betweenness (which includes the endpoint pair, whose unique geodesic
//! is the edge itself), every existing edge satisfies
//! `B_conventional(e) = B(e) + 2`.
//!
//! Values are accumulated with Brandes-style dependency propagation, one BFS
//! per source, so a full map costs `O(|V| * (|V| + |E|))` and a single edge
//! query costs the same but stores only a scalar.
//!
//! The local compression modulus `psi` ranks rewiring candidates: for a cut,
//! the product of the edge's betweenness and the detour distance its removal
//! leaves between its endpoints (infinite for bridges); for an addition, the
//! product of the new edge's betweenness in the augmented graph and the prior
//! distance between its endpoints.

use std::collections::{BTreeMap, VecDeque};

use crate::graph::{Distance, EdgeKey, ExtReal, Graph, GraphError, NodeId};

/// Per-edge betweenness under the ordered-pair, endpoint-excluded convention.
pub type EdgeBetweennessMap = BTreeMap<EdgeKey, f64>;

/// Shortest-path multiplicities and predecessor DAG from a fixed source.
#[derive(Debug, Clone)]
pub struct PathCounts {
    pub source: NodeId,
    /// Exact geodesic multiplicity `sigma(source, t)` per target.
    pub sigma: Vec<u64>,
    pub dist: Vec<Distance>,
    /// Predecessors of each node on shortest paths from the source.
    pub predecessors: Vec<Vec<NodeId>>,
}

impl PathCounts {
    /// Number of shortest paths from the source to `t`; zero if unreachable.
    pub fn count(&self, t: NodeId) -> u64 {
        self.sigma[t.index()]
    }
}

/// BFS with path counting (the forward phase of Brandes' algorithm).
pub fn shortest_path_counts(g: &Graph, source: NodeId) -> Result<PathCounts, GraphError> {
    g.check_node(source)?;
    let n = g.node_count();
    let mut sigma = vec![0u64; n];
    let mut dist = vec![Distance::Infinite; n];
    let mut predecessors = vec![Vec::new(); n];

    sigma[source.index()] = 1;
    dist[source.index()] = Distance::Finite(0);
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u.index()].finite().expect("visited");
        for v in g.neighbors(u) {
            if dist[v.index()] == Distance::Infinite {
                dist[v.index()] = Distance::Finite(du + 1);
                queue.push_back(v);
            }
            if dist[v.index()] == Distance::Finite(du + 1) {
                sigma[v.index()] += sigma[u.index()];
                predecessors[v.index()].push(u);
            }
        }
    }
    Ok(PathCounts {
        source,
        sigma,
        dist,
        predecessors,
    })
}

/// Reusable buffers for repeated Brandes passes. One workspace serves every
/// source of a graph in turn, which keeps the per-source cost at the BFS
/// itself instead of allocation churn; betweenness queries inside the
/// rewiring loop run thousands of passes.
pub(crate) struct BrandesWorkspace {
    sigma: Vec<u64>,
    dist: Vec<u32>,
    order: Vec<NodeId>,
    predecessors: Vec<Vec<NodeId>>,
    delta: Vec<f64>,
    queue: VecDeque<NodeId>,
}

const UNVISITED: u32 = u32::MAX;

impl BrandesWorkspace {
    pub(crate) fn new(n: usize) -> BrandesWorkspace {
        BrandesWorkspace {
            sigma: vec![0; n],
            dist: vec![UNVISITED; n],
            order: Vec::with_capacity(n),
            predecessors: vec![Vec::new(); n],
            delta: vec![0.0; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    /// One source's dependency accumulation; calls `visit(p, w, c)` for each
    /// DAG edge `(p, w)` with the pair-fraction flowing over it (summed over
    /// targets behind `w`).
    pub(crate) fn accumulate(
        &mut self,
        g: &Graph,
        source: NodeId,
        mut visit: impl FnMut(NodeId, NodeId, f64),
    ) {
        // Reset only what the previous source touched.
        for &w in &self.order {
            self.sigma[w.index()] = 0;
            self.dist[w.index()] = UNVISITED;
            self.delta[w.index()] = 0.0;
            self.predecessors[w.index()].clear();
        }
        self.order.clear();

        self.sigma[source.index()] = 1;
        self.dist[source.index()] = 0;
        self.queue.push_back(source);
        while let Some(u) = self.queue.pop_front() {
            self.order.push(u);
            let du = self.dist[u.index()];
            for v in g.neighbors(u) {
                if self.dist[v.index()] == UNVISITED {
                    self.dist[v.index()] = du + 1;
                    self.queue.push_back(v);
                }
                if self.dist[v.index()] == du + 1 {
                    self.sigma[v.index()] += self.sigma[u.index()];
                    self.predecessors[v.index()].push(u);
                }
            }
        }

        for &w in self.order.iter().rev() {
            let sigma_w = self.sigma[w.index()] as f64;
            let delta_w = self.delta[w.index()];
            for i in 0..self.predecessors[w.index()].len() {
                let p = self.predecessors[w.index()][i];
                let c = self.sigma[p.index()] as f64 / sigma_w * (1.0 + delta_w);
                visit(p, w, c);
                self.delta[p.index()] += c;
            }
        }
    }
}

/// Betweenness of every edge. Disconnected graphs are allowed;
/// cross-component pairs contribute nothing.
pub fn edge_betweenness_all(g: &Graph) -> EdgeBetweennessMap {
    let n = g.node_count();
    let edges: Vec<EdgeKey> = g.edges().collect();
    // Dense symmetric (node, node) -> edge index lookup for the inner loop.
    let mut index = vec![u32::MAX; n * n];
    for (i, e) in edges.iter().enumerate() {
        index[e.u().index() * n + e.v().index()] = i as u32;
        index[e.v().index() * n + e.u().index()] = i as u32;
    }
    let mut values = vec![0.0f64; edges.len()];
    let mut workspace = BrandesWorkspace::new(n);
    for s in g.nodes() {
        workspace.accumulate(g, s, |p, w, c| {
            values[index[p.index() * n + w.index()] as usize] += c;
        });
    }
    // Strip each edge's own endpoint pair (one unit per direction).
    edges
        .into_iter()
        .zip(values)
        .map(|(e, v)| (e, v - 2.0))
        .collect()
}

/// All-pairs distances and geodesic multiplicities, flattened row-major.
/// Unreachable pairs carry the `PAIR_INF` distance sentinel (safe to add).
pub(crate) struct PairData {
    n: usize,
    dist: Vec<u64>,
    sigma: Vec<u64>,
}

pub(crate) const PAIR_INF: u64 = u64::MAX / 8;

impl PairData {
    #[inline]
    fn dist(&self, l: usize, m: usize) -> u64 {
        self.dist[l * self.n + m]
    }

    #[inline]
    fn sigma(&self, l: usize, m: usize) -> u64 {
        self.sigma[l * self.n + m]
    }
}

pub(crate) fn all_pairs_counts(g: &Graph) -> PairData {
    let n = g.node_count();
    let mut data = PairData {
        n,
        dist: vec![PAIR_INF; n * n],
        sigma: vec![0; n * n],
    };
    let mut workspace = BrandesWorkspace::new(n);
    for s in g.nodes() {
        // A forward pass fills the workspace; no dependency accumulation is
        // needed here.
        workspace.accumulate(g, s, |_, _, _| {});
        let row = s.index() * n;
        for &w in &workspace.order {
            data.dist[row + w.index()] = u64::from(workspace.dist[w.index()]);
            data.sigma[row + w.index()] = workspace.sigma[w.index()];
        }
    }
    data
}

/// Exact betweenness of the absent edge `e(a, v)` as it would be in
/// `g + e`, computed from the pair data of `g` alone: a geodesic of `g + e`
/// crosses the new edge exactly when it splits as
/// `l -> a, e, v -> m` (or mirrored) with the right total length, and those
/// segments live entirely in `g`. Endpoint-pair contributions are excluded,
/// matching [`edge_betweenness_all`]'s convention.
pub(crate) fn augmenting_edge_betweenness(pairs: &PairData, a: NodeId, v: NodeId) -> f64 {
    let n = pairs.n;
    let (a, v) = (a.index(), v.index());
    let mut total = 0.0f64;
    for l in 0..n {
        for m in 0..n {
            if l == m || (l.min(m) == a.min(v) && l.max(m) == a.max(v)) {
                continue;
            }
            let direct = pairs.dist(l, m);
            let via_av = pairs.dist(l, a) + 1 + pairs.dist(v, m);
            let via_va = pairs.dist(l, v) + 1 + pairs.dist(a, m);
            let new_dist = direct.min(via_av).min(via_va);
            if new_dist >= PAIR_INF {
                continue;
            }
            let mut through: u128 = 0;
            if via_av == new_dist {
                through += u128::from(pairs.sigma(l, a)) * u128::from(pairs.sigma(v, m));
            }
            if via_va == new_dist {
                through += u128::from(pairs.sigma(l, v)) * u128::from(pairs.sigma(a, m));
            }
            if through == 0 {
                continue;
            }
            let mut count = through;
            if direct == new_dist {
                count += u128::from(pairs.sigma(l, m));
            }
            total += through as f64 / count as f64;
        }
    }
    total
}

/// Betweenness of one existing edge, without materializing the full map.
pub fn edge_betweenness_single(g: &Graph, e: EdgeKey) -> Result<f64, GraphError> {
    if !g.contains(e) {
        return Err(GraphError::EdgeNotFound(e));
    }
    let (a, b) = (e.u(), e.v());
    let mut value = 0.0;
    let mut workspace = BrandesWorkspace::new(g.node_count());
    for s in g.nodes() {
        workspace.accumulate(g, s, |p, w, c| {
            if (p == a && w == b) || (p == b && w == a) {
                value += c;
            }
        });
    }
    Ok(value - 2.0)
}

/// Removal modulus `psi` of an existing edge `e(u, v)`: betweenness of `e`
/// times the distance between `u` and `v` once `e` is gone. Infinite exactly
/// when `e` is a bridge.
pub fn psi_removal(g: &Graph, e: EdgeKey) -> Result<ExtReal, GraphError> {
    let betweenness = edge_betweenness_single(g, e)?;
    let mut cut = g.clone();
    cut.remove_edge(e)?;
    Ok(match cut.distance(e.u(), e.v())? {
        Distance::Finite(d) => ExtReal::Finite(betweenness * f64::from(d)),
        Distance::Infinite => ExtReal::Infinite,
    })
}

/// Addition modulus `psi` of a candidate edge `e(a, v)` absent from `g_cut`:
/// betweenness of `e` in `g_cut + e` times the prior distance between `a`
/// and `v`. When the endpoints sit in different components the prior
/// distance is infinite and carries no ranking information, so the distance
/// factor degrades to one and the candidates are ranked by betweenness
/// alone; the result is always finite.
pub fn psi_addition(g_cut: &Graph, e: EdgeKey) -> Result<f64, GraphError> {
    if g_cut.contains(e) {
        return Err(GraphError::EdgeAlreadyExists(e));
    }
    let pair_distance = match g_cut.distance(e.u(), e.v())? {
        Distance::Finite(d) => f64::from(d),
        Distance::Infinite => 1.0,
    };
    let mut augmented = g_cut.clone();
    augmented.add_edge(e)?;
    let betweenness = edge_betweenness_single(&augmented, e)?;
    Ok(betweenness * pair_distance)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges, true).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        graph(n, &edges)
    }

    fn key(a: usize, b: usize) -> EdgeKey {
        EdgeKey::new(NodeId(a), NodeId(b))
    }

    #[test]
    fn path_count_examples() {
        // Two geodesics across C4.
        let counts = shortest_path_counts(&cycle(4), NodeId(0)).unwrap();
        assert_eq!(counts.count(NodeId(2)), 2);
        assert_eq!(counts.dist[2], Distance::Finite(2));

        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let counts = shortest_path_counts(&p3, NodeId(0)).unwrap();
        assert_eq!(counts.count(NodeId(2)), 1);

        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let counts = shortest_path_counts(&k4, NodeId(0)).unwrap();
        assert_eq!(counts.count(NodeId(1)), 1);
        assert_eq!(counts.dist[1], Distance::Finite(1));
    }

    #[test]
    fn sigma_recurrence_holds() {
        let g = graph(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]);
        let counts = shortest_path_counts(&g, NodeId(0)).unwrap();
        for v in g.nodes() {
            if v == NodeId(0) || counts.dist[v.index()] == Distance::Infinite {
                continue;
            }
            let from_preds: u64 = counts.predecessors[v.index()]
                .iter()
                .map(|p| counts.sigma[p.index()])
                .sum();
            assert_eq!(counts.sigma[v.index()], from_preds);
        }
    }

    #[test]
    fn betweenness_small_graph_values() {
        // Triangle: no foreign pair routes over any edge.
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        for (_, b) in edge_betweenness_all(&tri) {
            assert!(b.abs() < 1e-12);
        }

        // P3: ordered pairs (0,2) and (2,0) each put one full unit on each edge.
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let map = edge_betweenness_all(&p3);
        assert!((map[&key(0, 1)] - 2.0).abs() < 1e-12);
        assert!((map[&key(1, 2)] - 2.0).abs() < 1e-12);

        // C4: four ordered pairs contribute one half each to every edge.
        let map = edge_betweenness_all(&cycle(4));
        for (_, b) in map {
            assert!((b - 2.0).abs() < 1e-12);
        }

        // Star K1,3: leaf-to-leaf ordered pairs ride the two incident spokes.
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let map = edge_betweenness_all(&star);
        for (_, b) in map {
            assert!((b - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn single_matches_all() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]);
        let map = edge_betweenness_all(&g);
        for (e, b) in map {
            let single = edge_betweenness_single(&g, e).unwrap();
            assert!((single - b).abs() < 1e-9, "{e}: {single} vs {b}");
        }
        assert!(matches!(
            edge_betweenness_single(&g, key(0, 2)),
            Err(GraphError::EdgeNotFound(_))
        ));
    }

    #[test]
    fn disconnected_pairs_contribute_nothing() {
        // Two P3 components: each edge only carries its own component's pairs.
        let g = graph(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]);
        let map = edge_betweenness_all(&g);
        for (_, b) in map {
            assert!((b - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn psi_removal_examples() {
        // C4: betweenness 2, detour distance 3.
        let c4 = cycle(4);
        assert_eq!(
            psi_removal(&c4, key(0, 1)).unwrap(),
            ExtReal::Finite(6.0)
        );

        // Bridge: infinite.
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(psi_removal(&p3, key(0, 1)).unwrap(), ExtReal::Infinite);

        // Triangle: zero betweenness, finite detour.
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(psi_removal(&tri, key(0, 1)).unwrap(), ExtReal::Finite(0.0));

        // An edge that is not in the graph (endpoint out of range counts).
        assert!(matches!(
            psi_removal(&tri, key(0, 3)),
            Err(GraphError::EdgeNotFound(_))
        ));
    }

    #[test]
    fn psi_addition_examples() {
        // P3 + (0,2) closes a triangle whose new edge carries no foreign pairs.
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(psi_addition(&p3, key(0, 2)).unwrap(), 0.0);

        // C6 chord (0,3): betweenness of the chord in the chorded cycle is
        // 16/3 (four ordered pairs at 1/2 each, four at 1/3), distance 3.
        let c6 = cycle(6);
        let psi = psi_addition(&c6, key(0, 3)).unwrap();
        assert!((psi - 16.0).abs() < 1e-9, "psi = {psi}");

        // Cross-component candidate: ranked by betweenness alone.
        let split = graph(4, &[(0, 1), (2, 3)]);
        let psi = psi_addition(&split, key(1, 2)).unwrap();
        let mut joined = split.clone();
        joined.add_edge(key(1, 2)).unwrap();
        let b = edge_betweenness_single(&joined, key(1, 2)).unwrap();
        assert!((psi - b).abs() < 1e-12);

        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(
            psi_addition(&tri, key(0, 1)),
            Err(GraphError::EdgeAlreadyExists(_))
        ));
    }

    #[test]
    fn endpoint_identity_against_conventional() {
        // Conventional ordered betweenness = accumulate without the -2 strip.
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]);
        let mut conventional: EdgeBetweennessMap = g.edges().map(|e| (e, 0.0)).collect();
        let mut workspace = BrandesWorkspace::new(g.node_count());
        for s in g.nodes() {
            workspace.accumulate(&g, s, |p, w, c| {
                *conventional.get_mut(&EdgeKey::new(p, w)).unwrap() += c;
            });
        }
        let map = edge_betweenness_all(&g);
        for (e, b) in map {
            assert!((conventional[&e] - (b + 2.0)).abs() < 1e-9);
        }
    }
}
