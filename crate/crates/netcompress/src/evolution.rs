//! The guided rewiring chain that compresses a network's average distance
//! while conserving its node set, edge count, connectivity, and degree
//! sequence.
//!
//! A run is a sequence of cut/add half-steps threaded on shared endpoints.
//! The opening cut removes the edge of minimum betweenness; its smaller-degree
//! endpoint becomes the first addition source and the other endpoint becomes
//! the *anchor* that the final added edge must close on, which is what
//! restores the degree sequence exactly. In between, every cut takes the edge
//! of minimum removal modulus among those incident to the chain tip (never
//! the edge just added), and every addition takes the node of maximum
//! addition modulus among the admissible set. If a cut disconnects the graph,
//! the following addition is restricted to the far component, so each full
//! step leaves the graph connected with the original edge count.
//!
//! The final step closes the chain on the anchor. When the closing edge would
//! be a duplicate, a self-loop, or would fail to reconnect a split graph, the
//! chain tip is relocated by extra add/cut rounds (bounded by the node count)
//! until a valid closure exists.
//!
//! Addition sources can optionally be restricted by per-node constraints
//! (for example a radio range over node coordinates); an unsatisfiable
//! constraint falls back to the unconstrained admissible set and the step is
//! flagged in the trajectory.
//!
//! All tie-breaking is canonical (smallest edge key, then smallest node id),
//! so a run is a pure function of the input graph and configuration.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::centrality::{
    all_pairs_counts, augmenting_edge_betweenness, edge_betweenness_all, psi_addition, psi_removal,
};
use crate::graph::{Distance, EdgeKey, ExtReal, Graph, GraphError, NodeId};
use crate::spectral::fiedler_value;

/// Absolute tolerance for comparing modulus scores; candidates closer than
/// this are ties and resolve to the canonical (smallest) key.
pub const SCORE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvolutionError {
    #[error("InvalidConfig: {0}")]
    InvalidConfig(String),
    #[error("GraphTooSmall: rewiring needs at least 2 edges")]
    GraphTooSmall,
    #[error("DisconnectedInput: the input graph must be connected")]
    DisconnectedInput,
    #[error("NoRemovalCandidate: every edge at pivot {pivot} is forbidden")]
    NoRemovalCandidate { pivot: NodeId },
    #[error("EmptyAdmissibleSet: no admissible addition target for node {node}")]
    EmptyAdmissibleSet { node: NodeId },
    #[error("EmptyCandidates: the candidate set is empty")]
    EmptyCandidates,
    #[error("MissingAttributes: constraint covers {attributes} nodes, graph has {nodes}")]
    MissingAttributes { nodes: usize, attributes: usize },
    #[error("ClosureExhausted: no valid closing edge after {attempts} relocations")]
    ClosureExhausted { attempts: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Pairwise scoring function over node attribute vectors.
pub type ConstraintFn = Box<dyn Fn(&[f64], &[f64]) -> f64 + Send + Sync>;

/// Per-node predicate gating which nodes may receive a new edge from a given
/// source: target `v` is admissible from `a` when `f(attr[a], attr[v]) <
/// threshold[a]`.
pub struct NodeConstraint {
    attributes: Vec<Vec<f64>>,
    thresholds: Vec<f64>,
    function: ConstraintFn,
}

impl std::fmt::Debug for NodeConstraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NodeConstraint")
            .field("nodes", &self.attributes.len())
            .finish()
    }
}

impl NodeConstraint {
    pub fn new(
        attributes: Vec<Vec<f64>>,
        thresholds: Vec<f64>,
        function: impl Fn(&[f64], &[f64]) -> f64 + Send + Sync + 'static,
    ) -> NodeConstraint {
        assert_eq!(
            attributes.len(),
            thresholds.len(),
            "one threshold per attributed node"
        );
        NodeConstraint {
            attributes,
            thresholds,
            function: Box::new(function),
        }
    }

    /// Euclidean-distance constraint over node coordinate vectors.
    pub fn euclidean(attributes: Vec<Vec<f64>>, thresholds: Vec<f64>) -> NodeConstraint {
        NodeConstraint::new(attributes, thresholds, |a, b| {
            a.iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt()
        })
    }

    pub fn node_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn admits(&self, from: NodeId, to: NodeId) -> bool {
        (self.function)(&self.attributes[from.index()], &self.attributes[to.index()])
            < self.thresholds[from.index()]
    }
}

/// Parameters of one rewiring run.
#[derive(Debug)]
pub struct EvolutionConfig {
    /// Fraction of the edge count to rewire; the step count is
    /// `ceil(fraction * |E|)` and must come out above one.
    pub rewiring_fraction: f64,
    /// Optional gate on addition targets.
    pub constraint: Option<NodeConstraint>,
    /// Snapshot interval for the heavier metrics (clustering, Fiedler);
    /// zero records only the initial and final snapshots. The average
    /// distance is recorded after every step regardless.
    pub record_metrics_every: usize,
    /// Drives the random baseline's choices; the guided evolution is fully
    /// deterministic and ignores it.
    pub seed: u64,
    /// Include the Fiedler value in metric snapshots.
    pub compute_fiedler: bool,
}

impl EvolutionConfig {
    pub fn new(rewiring_fraction: f64) -> EvolutionConfig {
        EvolutionConfig {
            rewiring_fraction,
            constraint: None,
            record_metrics_every: 1,
            seed: 0,
            compute_fiedler: false,
        }
    }
}

/// One completed cut/add pair.
#[derive(Debug, Clone)]
pub struct EvolutionStep {
    /// 1-based step index; indices beyond the planned count are relocation
    /// rounds appended while closing the chain.
    pub index: usize,
    pub cut_edge: EdgeKey,
    pub added_edge: EdgeKey,
    /// Removal modulus of the cut edge (infinite when a bridge was cut).
    pub psi_cut: ExtReal,
    /// Addition modulus of the added edge.
    pub psi_add: f64,
    /// Whether the cut split the graph (the add then reconnected it).
    pub disconnected_after_cut: bool,
    /// Whether the constrained candidate set was empty and the step fell
    /// back to the unconstrained admissible set.
    pub constraint_relaxed: bool,
    /// Ordered-pair mean distance after the step completed.
    pub avg_distance: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct MetricSnapshot {
    /// Step after which the snapshot was taken (zero = input graph).
    pub step: usize,
    pub avg_distance: f64,
    pub clustering: f64,
    pub fiedler: Option<f64>,
}

/// Conservation booleans comparing a run's output against its input.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ConservationReport {
    pub nodes_preserved: bool,
    pub edges_preserved: bool,
    pub connected: bool,
    pub degree_sequence_preserved: bool,
}

impl ConservationReport {
    pub fn all_hold(&self) -> bool {
        self.nodes_preserved && self.edges_preserved && self.connected
            && self.degree_sequence_preserved
    }
}

/// Complete record of one rewiring run.
#[derive(Debug, Clone)]
pub struct EvolutionTrajectory {
    /// Structural fingerprint of the input graph.
    pub initial_fingerprint: u64,
    pub node_count: usize,
    pub initial_edge_count: usize,
    pub initial_degree_sequence: Vec<usize>,
    pub initial_avg_distance: f64,
    /// Far endpoint of the opening cut; the last added edge closes on it.
    pub anchor: NodeId,
    /// Planned step count `ceil(fraction * |E|)`.
    pub planned_steps: usize,
    /// Relocation rounds spent closing the chain (zero in the common case).
    pub extension_steps: usize,
    pub steps: Vec<EvolutionStep>,
    pub snapshots: Vec<MetricSnapshot>,
    pub final_graph: Graph,
}

impl EvolutionTrajectory {
    pub fn final_avg_distance(&self) -> f64 {
        self.steps
            .last()
            .map(|s| s.avg_distance)
            .unwrap_or(self.initial_avg_distance)
    }

    pub fn conservation(&self) -> ConservationReport {
        ConservationReport {
            nodes_preserved: self.final_graph.node_count() == self.node_count,
            edges_preserved: self.final_graph.edge_count() == self.initial_edge_count,
            connected: self.final_graph.is_connected(),
            degree_sequence_preserved: self.final_graph.degree_sequence()
                == self.initial_degree_sequence,
        }
    }

    /// Steps whose constrained candidate set was empty.
    pub fn constraint_fallback_steps(&self) -> Vec<usize> {
        self.steps
            .iter()
            .filter(|s| s.constraint_relaxed)
            .map(|s| s.index)
            .collect()
    }
}

fn ext_strictly_less(a: ExtReal, b: ExtReal) -> bool {
    match (a, b) {
        (ExtReal::Finite(x), ExtReal::Finite(y)) => x < y - SCORE_TOL,
        (ExtReal::Finite(_), ExtReal::Infinite) => true,
        (ExtReal::Infinite, _) => false,
    }
}

/// Opening selection: the edge of minimum betweenness (ties to the smallest
/// canonical key) and its smaller-degree endpoint (ties to the smaller id) as
/// the first addition source.
pub fn select_initial_edge(g: &Graph) -> Result<(EdgeKey, NodeId), EvolutionError> {
    if g.edge_count() < 2 {
        return Err(EvolutionError::GraphTooSmall);
    }
    let map = edge_betweenness_all(g);
    let mut best: Option<(EdgeKey, f64)> = None;
    for (&e, &b) in &map {
        match best {
            Some((_, current)) if b >= current - SCORE_TOL => {}
            _ => best = Some((e, b)),
        }
    }
    let (edge, _) = best.expect("graph has edges");
    let source = if g.degree(edge.u()) <= g.degree(edge.v()) {
        edge.u()
    } else {
        edge.v()
    };
    Ok((edge, source))
}

/// Cut selection at the chain tip: over the edges incident to `pivot` except
/// `forbidden` (the edge added in the previous step), the one of minimum
/// removal modulus. A bridge (infinite modulus) is taken only if every
/// candidate is a bridge.
pub fn select_removal_edge(
    g: &Graph,
    pivot: NodeId,
    forbidden: EdgeKey,
    ) -> Result<(EdgeKey, ExtReal), EvolutionError> {
    g.check_node(pivot)?;
    let excluded = if forbidden.has_endpoint(pivot) {
        Some(forbidden.other(pivot))
    } else {
        None
    };
    let candidates: Vec<NodeId> = g
        .neighbors(pivot)
        .filter(|&v| Some(v) != excluded)
        .collect();
    if candidates.is_empty() {
        return Err(EvolutionError::NoRemovalCandidate { pivot });
    }
    let map = edge_betweenness_all(g);
    let mut scratch = g.clone();
    let mut best: Option<(EdgeKey, ExtReal)> = None;
    // Ascending neighbor order is ascending canonical-key order here, so the
    // first of any tie group wins.
    for v in candidates {
        let edge = EdgeKey::new(pivot, v);
        scratch.remove_edge(edge)?;
        let detour = scratch.distance(pivot, v)?;
        scratch.add_edge(edge)?;
        let psi = match detour {
            Distance::Finite(d) => ExtReal::Finite(map[&edge] * f64::from(d)),
            Distance::Infinite => ExtReal::Infinite,
        };
        match best {
            Some((_, current)) if !ext_strictly_less(psi, current) => {}
            _ => best = Some((edge, psi)),
        }
    }
    Ok(best.expect("candidates nonempty"))
}

/// Admissible targets for an addition from `add_source` in the post-cut
/// graph. `cut_other` is the other endpoint of the edge just cut.
///
/// Connected case: every node except the source and its neighbors in the
/// pre-cut graph (which include `cut_other`, so the cut edge cannot come
/// straight back). Split case: the component not containing the source,
/// minus `cut_other`, so the addition is forced to reconnect the graph.
/// `anchor` (the chain's reserved closing endpoint) is excluded when given;
/// the opening step passes it so the anchor cannot be consumed early.
pub fn admissible_addition_set(
    g_cut: &Graph,
    add_source: NodeId,
    cut_other: NodeId,
    anchor: Option<NodeId>,
) -> Result<BTreeSet<NodeId>, EvolutionError> {
    g_cut.check_node(add_source)?;
    let (component_count, labels) = g_cut.component_labels();
    let mut set: BTreeSet<NodeId> = if component_count == 1 {
        let blocked: BTreeSet<NodeId> = g_cut.neighbors(add_source).collect();
        g_cut
            .nodes()
            .filter(|&v| v != add_source && v != cut_other && !blocked.contains(&v))
            .collect()
    } else {
        let own = labels[add_source.index()];
        g_cut
            .nodes()
            .filter(|&v| labels[v.index()] != own && v != cut_other)
            .collect()
    };
    if let Some(anchor) = anchor {
        set.remove(&anchor);
    }
    if set.is_empty() {
        return Err(EvolutionError::EmptyAdmissibleSet { node: add_source });
    }
    Ok(set)
}

/// Filters addition candidates through the node constraint of `add_source`.
/// An empty constrained set falls back to the unconstrained input (flagged by
/// the returned boolean) so the run can always terminate with its
/// conservation guarantees intact.
pub fn apply_node_constraint(
    candidates: &BTreeSet<NodeId>,
    add_source: NodeId,
    constraint: &NodeConstraint,
    node_count: usize,
) -> Result<(BTreeSet<NodeId>, bool), EvolutionError> {
    if constraint.node_count() < node_count {
        return Err(EvolutionError::MissingAttributes {
            nodes: node_count,
            attributes: constraint.node_count(),
        });
    }
    let kept: BTreeSet<NodeId> = candidates
        .iter()
        .copied()
        .filter(|&v| constraint.admits(add_source, v))
        .collect();
    if kept.is_empty() {
        Ok((candidates.clone(), true))
    } else {
        Ok((kept, false))
    }
}

/// Addition selection: the candidate maximizing the addition modulus of
/// `e(add_source, candidate)`, ties to the smallest node id.
///
/// The per-candidate modulus evaluations are independent pure computations;
/// they run in parallel and are reduced in ascending candidate order, so the
/// result (including tie-breaking) is identical to a sequential sweep.
pub fn select_addition_node(
    g_cut: &Graph,
    add_source: NodeId,
    candidates: &BTreeSet<NodeId>,
) -> Result<(NodeId, f64), EvolutionError> {
    if candidates.is_empty() {
        return Err(EvolutionError::EmptyCandidates);
    }
    let from_source = g_cut.bfs_distances(add_source)?;
    let pairs = all_pairs_counts(g_cut);
    let ordered: Vec<NodeId> = candidates.iter().copied().collect();
    let scored: Vec<(NodeId, f64)> = ordered
        .par_iter()
        .map(|&v| {
            let betweenness = augmenting_edge_betweenness(&pairs, add_source, v);
            let distance_factor = match from_source[v.index()] {
                Distance::Finite(d) => f64::from(d),
                // Cross-component candidate: the prior distance is infinite
                // for the whole candidate set, so it carries no ranking
                // information.
                Distance::Infinite => 1.0,
            };
            (v, betweenness * distance_factor)
        })
        .collect();
    let mut best: Option<(NodeId, f64)> = None;
    for (v, psi) in scored {
        match best {
            Some((_, current)) if psi <= current + SCORE_TOL => {}
            _ => best = Some((v, psi)),
        }
    }
    Ok(best.expect("candidates nonempty"))
}

/// How each choice point is resolved: by modulus, or uniformly at random
/// (the baseline). Both modes see identical candidate sets.
enum Selector {
    Guided,
    Uniform(Box<ChaCha8Rng>),
}

impl Selector {
    fn initial_edge(&mut self, g: &Graph) -> Result<(EdgeKey, NodeId), EvolutionError> {
        match self {
            Selector::Guided => select_initial_edge(g),
            Selector::Uniform(rng) => {
                if g.edge_count() < 2 {
                    return Err(EvolutionError::GraphTooSmall);
                }
                let edges: Vec<EdgeKey> = g.edges().collect();
                let edge = *edges.choose(rng).expect("graph has edges");
                let source = if g.degree(edge.u()) <= g.degree(edge.v()) {
                    edge.u()
                } else {
                    edge.v()
                };
                Ok((edge, source))
            }
        }
    }

    fn removal_edge(
        &mut self,
        g: &Graph,
        pivot: NodeId,
        forbidden: EdgeKey,
    ) -> Result<(EdgeKey, ExtReal), EvolutionError> {
        match self {
            Selector::Guided => select_removal_edge(g, pivot, forbidden),
            Selector::Uniform(rng) => {
                let excluded = forbidden.other(pivot);
                let candidates: Vec<NodeId> =
                    g.neighbors(pivot).filter(|&v| v != excluded).collect();
                let v = *candidates
                    .choose(rng)
                    .ok_or(EvolutionError::NoRemovalCandidate { pivot })?;
                let edge = EdgeKey::new(pivot, v);
                let psi = psi_removal(g, edge)?;
                Ok((edge, psi))
            }
        }
    }

    fn addition_node(
        &mut self,
        g_cut: &Graph,
        add_source: NodeId,
        candidates: &BTreeSet<NodeId>,
    ) -> Result<(NodeId, f64), EvolutionError> {
        match self {
            Selector::Guided => select_addition_node(g_cut, add_source, candidates),
            Selector::Uniform(rng) => {
                let pool: Vec<NodeId> = candidates.iter().copied().collect();
                let v = *pool.choose(rng).ok_or(EvolutionError::EmptyCandidates)?;
                let psi = psi_addition(g_cut, EdgeKey::new(add_source, v))?;
                Ok((v, psi))
            }
        }
    }
}

/// Guided compression run. See the module docs for the chain mechanics.
pub fn compress(g: &Graph, config: &EvolutionConfig) -> Result<EvolutionTrajectory, EvolutionError> {
    run_evolution(g, config, Selector::Guided)
}

pub(crate) fn run_random_baseline(
    g: &Graph,
    config: &EvolutionConfig,
) -> Result<EvolutionTrajectory, EvolutionError> {
    use rand::SeedableRng;
    run_evolution(
        g,
        config,
        Selector::Uniform(Box::new(ChaCha8Rng::seed_from_u64(config.seed))),
    )
}

fn run_evolution(
    g: &Graph,
    config: &EvolutionConfig,
    mut selector: Selector,
) -> Result<EvolutionTrajectory, EvolutionError> {
    let node_count = g.node_count();
    let edge_count = g.edge_count();
    if edge_count < 2 {
        return Err(EvolutionError::GraphTooSmall);
    }
    if !g.is_connected() {
        return Err(EvolutionError::DisconnectedInput);
    }
    let fraction = config.rewiring_fraction;
    if !fraction.is_finite() || fraction * edge_count as f64 <= 1.0 {
        return Err(EvolutionError::InvalidConfig(format!(
            "rewiring fraction {fraction} must exceed 1/|E| = {}",
            1.0 / edge_count as f64
        )));
    }
    if let Some(constraint) = &config.constraint {
        if constraint.node_count() < node_count {
            return Err(EvolutionError::MissingAttributes {
                nodes: node_count,
                attributes: constraint.node_count(),
            });
        }
    }
    let planned_steps = (fraction * edge_count as f64).ceil() as usize;
    debug_assert!(planned_steps >= 2);

    let initial_avg_distance = g.average_distance()?;
    let mut work = g.clone();
    let mut steps: Vec<EvolutionStep> = Vec::with_capacity(planned_steps);
    let mut snapshots = vec![MetricSnapshot {
        step: 0,
        avg_distance: initial_avg_distance,
        clustering: g.clustering_coefficient(),
        fiedler: config.compute_fiedler.then(|| fiedler_value(g)),
    }];

    let choose_addition = |selector: &mut Selector,
                           work: &Graph,
                           add_source: NodeId,
                           cut_other: NodeId,
                           anchor: Option<NodeId>|
     -> Result<(NodeId, f64, bool), EvolutionError> {
        let admissible = admissible_addition_set(work, add_source, cut_other, anchor)?;
        let (candidates, relaxed) = match &config.constraint {
            Some(constraint) => {
                apply_node_constraint(&admissible, add_source, constraint, work.node_count())?
            }
            None => (admissible, false),
        };
        let (target, psi) = selector.addition_node(work, add_source, &candidates)?;
        Ok((target, psi, relaxed))
    };

    // Opening step: cut the chosen initial edge, remember its far endpoint as
    // the anchor, and add from the smaller-degree endpoint.
    let (initial_edge, add_source) = selector.initial_edge(&work)?;
    let anchor = initial_edge.other(add_source);
    let psi_cut = psi_removal(&work, initial_edge)?;
    work.remove_edge(initial_edge)?;
    let disconnected = !work.is_connected();
    let (target, psi_add, relaxed) =
        choose_addition(&mut selector, &work, add_source, anchor, Some(anchor))?;
    let added_edge = EdgeKey::new(add_source, target);
    work.add_edge(added_edge)?;
    steps.push(EvolutionStep {
        index: 1,
        cut_edge: initial_edge,
        added_edge,
        psi_cut,
        psi_add,
        disconnected_after_cut: disconnected,
        constraint_relaxed: relaxed,
        avg_distance: work.average_distance()?,
    });
    maybe_snapshot(&mut snapshots, &work, steps.last().unwrap(), config);

    let mut tip = target;
    let mut prev_add_source = add_source;
    let mut extension_steps = 0usize;

    for step_index in 2..=planned_steps {
        let forbidden = EdgeKey::new(prev_add_source, tip);
        let (cut_edge, psi_cut) = selector.removal_edge(&work, tip, forbidden)?;
        let far = cut_edge.other(tip);
        work.remove_edge(cut_edge)?;
        let disconnected = !work.is_connected();

        if step_index < planned_steps {
            let (target, psi_add, relaxed) =
                choose_addition(&mut selector, &work, far, tip, None)?;
            let added_edge = EdgeKey::new(far, target);
            work.add_edge(added_edge)?;
            steps.push(EvolutionStep {
                index: step_index,
                cut_edge,
                added_edge,
                psi_cut,
                psi_add,
                disconnected_after_cut: disconnected,
                constraint_relaxed: relaxed,
                avg_distance: work.average_distance()?,
            });
            maybe_snapshot(&mut snapshots, &work, steps.last().unwrap(), config);
            prev_add_source = far;
            tip = target;
            continue;
        }

        // Closing step: try to land the last edge on the anchor, relocating
        // the chain tip while the closure would be invalid.
        let mut pending = (cut_edge, psi_cut, disconnected);
        let mut source = far;
        let mut cut_pivot = tip;
        let mut closed = false;
        for attempt in 0..node_count {
            if closable(&work, source, cut_pivot, anchor) {
                let closing = EdgeKey::new(source, anchor);
                let psi_add = psi_addition(&work, closing)?;
                work.add_edge(closing)?;
                steps.push(EvolutionStep {
                    index: step_index + attempt,
                    cut_edge: pending.0,
                    added_edge: closing,
                    psi_cut: pending.1,
                    psi_add,
                    disconnected_after_cut: pending.2,
                    constraint_relaxed: false,
                    avg_distance: work.average_distance()?,
                });
                maybe_snapshot(&mut snapshots, &work, steps.last().unwrap(), config);
                closed = true;
                break;
            }
            // Relocate: add from the stranded tip, then cut at the new tip.
            let (target, psi_add, relaxed) =
                choose_addition(&mut selector, &work, source, cut_pivot, None)?;
            let added_edge = EdgeKey::new(source, target);
            work.add_edge(added_edge)?;
            steps.push(EvolutionStep {
                index: step_index + attempt,
                cut_edge: pending.0,
                added_edge,
                psi_cut: pending.1,
                psi_add,
                disconnected_after_cut: pending.2,
                constraint_relaxed: relaxed,
                avg_distance: work.average_distance()?,
            });
            maybe_snapshot(&mut snapshots, &work, steps.last().unwrap(), config);
            extension_steps += 1;

            let (next_cut, next_psi) = selector.removal_edge(&work, target, added_edge)?;
            let next_far = next_cut.other(target);
            work.remove_edge(next_cut)?;
            pending = (next_cut, next_psi, !work.is_connected());
            cut_pivot = target;
            source = next_far;
        }
        if !closed {
            return Err(EvolutionError::ClosureExhausted {
                attempts: node_count,
            });
        }
    }

    // Conservation postconditions; violations are driver bugs.
    assert_eq!(work.node_count(), node_count, "node count drifted");
    assert_eq!(work.edge_count(), edge_count, "edge count drifted");
    assert!(work.is_connected(), "run ended disconnected");
    assert_eq!(
        work.degree_sequence(),
        g.degree_sequence(),
        "degree sequence drifted"
    );
    work.validate().expect("simple-graph invariants");

    let last_step = steps.len();
    if snapshots.last().map(|s| s.step) != Some(last_step) {
        let step = steps.last().expect("at least two steps");
        snapshots.push(snapshot_for(&work, last_step, step.avg_distance, config));
    }

    Ok(EvolutionTrajectory {
        initial_fingerprint: g.fingerprint(),
        node_count,
        initial_edge_count: edge_count,
        initial_degree_sequence: g.degree_sequence(),
        initial_avg_distance,
        anchor,
        planned_steps,
        extension_steps,
        steps,
        snapshots,
        final_graph: work,
    })
}

/// A closing edge to the anchor is valid when it is not a self-loop, not a
/// duplicate, not a re-add of the edge just cut (which happens when the
/// chain tip reached the anchor, making `cut_pivot == anchor`), and
/// reconnects the graph if the last cut split it.
fn closable(work: &Graph, source: NodeId, cut_pivot: NodeId, anchor: NodeId) -> bool {
    if source == anchor || cut_pivot == anchor || work.has_edge(source, anchor) {
        return false;
    }
    let (count, labels) = work.component_labels();
    count == 1 || labels[source.index()] != labels[anchor.index()]
}

fn snapshot_for(
    work: &Graph,
    step: usize,
    avg_distance: f64,
    config: &EvolutionConfig,
) -> MetricSnapshot {
    MetricSnapshot {
        step,
        avg_distance,
        clustering: work.clustering_coefficient(),
        fiedler: config.compute_fiedler.then(|| fiedler_value(work)),
    }
}

fn maybe_snapshot(
    snapshots: &mut Vec<MetricSnapshot>,
    work: &Graph,
    step: &EvolutionStep,
    config: &EvolutionConfig,
) {
    let every = config.record_metrics_every;
    if every > 0 && step.index.is_multiple_of(every) {
        snapshots.push(snapshot_for(work, step.index, step.avg_distance, config));
    }
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct MeanStd {
    pub mean: f64,
    pub std: f64,
}

impl MeanStd {
    pub fn from_samples(samples: &[f64]) -> MeanStd {
        let n = samples.len() as f64;
        let mean = samples.iter().sum::<f64>() / n;
        let std = if samples.len() < 2 {
            0.0
        } else {
            (samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        };
        MeanStd { mean, std }
    }
}

/// Aggregated final metrics for one rewiring fraction.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ProfileRow {
    pub rewiring_fraction: f64,
    pub avg_distance: MeanStd,
    pub clustering: MeanStd,
    pub fiedler: Option<MeanStd>,
}

/// Runs the guided compression once per `(fraction, input)` pair and
/// aggregates the final metrics per fraction. A zero fraction is the
/// identity: the input's own metrics. `fractions` must be sorted ascending.
pub fn compression_profile(
    inputs: &[Graph],
    fractions: &[f64],
    compute_fiedler: bool,
) -> Result<Vec<ProfileRow>, EvolutionError> {
    if inputs.is_empty() {
        return Err(EvolutionError::InvalidConfig("no input graphs".into()));
    }
    if fractions.windows(2).any(|w| w[0] > w[1]) {
        return Err(EvolutionError::InvalidConfig(
            "fractions must be sorted ascending".into(),
        ));
    }
    let mut rows = Vec::with_capacity(fractions.len());
    for &fraction in fractions {
        let mut distances = Vec::with_capacity(inputs.len());
        let mut clusterings = Vec::with_capacity(inputs.len());
        let mut fiedlers = Vec::with_capacity(inputs.len());
        for input in inputs {
            let final_graph;
            let graph = if fraction == 0.0 {
                input
            } else {
                let mut config = EvolutionConfig::new(fraction);
                config.record_metrics_every = 0;
                final_graph = compress(input, &config)?.final_graph;
                &final_graph
            };
            distances.push(graph.average_distance()?);
            clusterings.push(graph.clustering_coefficient());
            if compute_fiedler {
                fiedlers.push(fiedler_value(graph));
            }
        }
        rows.push(ProfileRow {
            rewiring_fraction: fraction,
            avg_distance: MeanStd::from_samples(&distances),
            clustering: MeanStd::from_samples(&clusterings),
            fiedler: compute_fiedler.then(|| MeanStd::from_samples(&fiedlers)),
        });
    }
    Ok(rows)
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
    fn initial_edge_selection() {
        // Star K1,3 plus the (1,2) leaf link: that edge carries no foreign
        // pairs, the spokes do.
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        let (edge, source) = select_initial_edge(&g).unwrap();
        assert_eq!(edge, key(1, 2));
        assert_eq!(source, NodeId(1));

        // C4 ties everywhere: smallest key, smaller-id endpoint.
        let (edge, source) = select_initial_edge(&cycle(4)).unwrap();
        assert_eq!(edge, key(0, 1));
        assert_eq!(source, NodeId(0));

        let (edge, source) = select_initial_edge(&graph(3, &[(0, 1), (1, 2), (0, 2)])).unwrap();
        assert_eq!(edge, key(0, 1));
        assert_eq!(source, NodeId(0));

        assert_eq!(
            select_initial_edge(&graph(2, &[(0, 1)])).unwrap_err(),
            EvolutionError::GraphTooSmall
        );
    }

    #[test]
    fn removal_edge_selection() {
        // Degree-1 pivot whose single edge is forbidden.
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            select_removal_edge(&p3, NodeId(0), key(0, 1)).unwrap_err(),
            EvolutionError::NoRemovalCandidate { pivot: NodeId(0) }
        );

        // C4 pivot 0 with (0,1) forbidden leaves only (0,3).
        let (edge, _) = select_removal_edge(&cycle(4), NodeId(0), key(0, 1)).unwrap();
        assert_eq!(edge, key(0, 3));

        // A finite-modulus cycle edge beats a bridge: pivot 0 sits on a
        // triangle (0,1,2) and a pendant bridge (0,3); forbid (0,1).
        let g = graph(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let (edge, psi) = select_removal_edge(&g, NodeId(0), key(0, 1)).unwrap();
        assert_eq!(edge, key(0, 2));
        assert!(psi.is_finite());

        // All candidates bridges: the bridge is taken.
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let (edge, psi) = select_removal_edge(&star, NodeId(0), key(0, 1)).unwrap();
        assert_eq!(edge, key(0, 2));
        assert_eq!(psi, ExtReal::Infinite);
    }

    #[test]
    fn admissible_sets() {
        // C4 after cutting (0,1): still connected; source 1 may only reach 3.
        let mut g = cycle(4);
        g.remove_edge(key(0, 1)).unwrap();
        let set = admissible_addition_set(&g, NodeId(1), NodeId(0), None).unwrap();
        assert_eq!(set, BTreeSet::from([NodeId(3)]));

        // Split case: targets come from the far component only.
        let mut g = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]);
        g.remove_edge(key(2, 3)).unwrap();
        let set = admissible_addition_set(&g, NodeId(3), NodeId(2), None).unwrap();
        assert_eq!(set, BTreeSet::from([NodeId(0), NodeId(1)]));

        // Source adjacent to everything: nothing admissible.
        let mut tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        tri.remove_edge(key(0, 1)).unwrap();
        assert_eq!(
            admissible_addition_set(&tri, NodeId(0), NodeId(1), None).unwrap_err(),
            EvolutionError::EmptyAdmissibleSet { node: NodeId(0) }
        );

        // The anchor is carved out when reserved.
        let mut c5 = cycle(5);
        c5.remove_edge(key(0, 1)).unwrap();
        let set = admissible_addition_set(&c5, NodeId(1), NodeId(0), None).unwrap();
        assert_eq!(set, BTreeSet::from([NodeId(3), NodeId(4)]));
        let set = admissible_addition_set(&c5, NodeId(1), NodeId(0), Some(NodeId(3))).unwrap();
        assert_eq!(set, BTreeSet::from([NodeId(4)]));
    }

    #[test]
    fn constraint_filtering_and_fallback() {
        let attrs = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0], vec![5.0, 0.0]];
        let thresholds = vec![1.5, 1.5, 1.5, 1.5];
        let constraint = NodeConstraint::euclidean(attrs, thresholds);
        let candidates = BTreeSet::from([NodeId(1), NodeId(2), NodeId(3)]);

        let (kept, relaxed) =
            apply_node_constraint(&candidates, NodeId(0), &constraint, 4).unwrap();
        assert_eq!(kept, BTreeSet::from([NodeId(1)]));
        assert!(!relaxed);

        // Unreachable threshold: every candidate violates, fall back.
        let tight = NodeConstraint::euclidean(
            vec![vec![0.0], vec![9.0], vec![9.0], vec![9.0]],
            vec![0.5; 4],
        );
        let (kept, relaxed) = apply_node_constraint(&candidates, NodeId(0), &tight, 4).unwrap();
        assert_eq!(kept, candidates);
        assert!(relaxed);

        // Infinite threshold admits everything.
        let open = NodeConstraint::euclidean(
            vec![vec![0.0], vec![1.0], vec![2.0], vec![3.0]],
            vec![f64::INFINITY; 4],
        );
        let (kept, relaxed) = apply_node_constraint(&candidates, NodeId(0), &open, 4).unwrap();
        assert_eq!(kept, candidates);
        assert!(!relaxed);

        let short = NodeConstraint::euclidean(vec![vec![0.0]; 2], vec![1.0; 2]);
        assert!(matches!(
            apply_node_constraint(&candidates, NodeId(0), &short, 4),
            Err(EvolutionError::MissingAttributes { .. })
        ));
    }

    #[test]
    fn addition_selection() {
        // Single candidate comes back unconditionally.
        let mut g = cycle(4);
        g.remove_edge(key(0, 1)).unwrap();
        let (v, _) = select_addition_node(&g, NodeId(1), &BTreeSet::from([NodeId(3)])).unwrap();
        assert_eq!(v, NodeId(3));

        // C6 after cutting (0,1): source 1 choosing among {3, 4}; exhaustive
        // check that the winner attains the maximum modulus.
        let mut g = cycle(6);
        g.remove_edge(key(0, 1)).unwrap();
        let candidates = BTreeSet::from([NodeId(3), NodeId(4)]);
        let (chosen, best_psi) = select_addition_node(&g, NodeId(1), &candidates).unwrap();
        for &v in &candidates {
            let psi = psi_addition(&g, EdgeKey::new(NodeId(1), v)).unwrap();
            assert!(psi <= best_psi + SCORE_TOL);
            if v == chosen {
                assert!((psi - best_psi).abs() < 1e-12);
            }
        }

        assert_eq!(
            select_addition_node(&g, NodeId(1), &BTreeSet::new()).unwrap_err(),
            EvolutionError::EmptyCandidates
        );

        // All candidates score zero on a star (no foreign pair would use a
        // leaf-to-leaf edge): smallest id wins.
        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let (v, psi) =
            select_addition_node(&star, NodeId(1), &BTreeSet::from([NodeId(2), NodeId(3)]))
                .unwrap();
        assert_eq!(v, NodeId(2));
        assert!(psi.abs() < 1e-12);
    }

    #[test]
    fn compress_rejects_bad_configs() {
        let c6 = cycle(6);
        // fraction * |E| <= 1 leaves no room for a chain.
        let err = compress(&c6, &EvolutionConfig::new(0.1)).unwrap_err();
        assert!(matches!(err, EvolutionError::InvalidConfig(_)));

        let split = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            compress(&split, &EvolutionConfig::new(0.9)).unwrap_err(),
            EvolutionError::DisconnectedInput
        );

        let tiny = graph(2, &[(0, 1)]);
        assert_eq!(
            compress(&tiny, &EvolutionConfig::new(0.9)).unwrap_err(),
            EvolutionError::GraphTooSmall
        );
    }

    #[test]
    fn compress_c6_three_steps() {
        let c6 = cycle(6);
        let traj = compress(&c6, &EvolutionConfig::new(0.34)).unwrap();
        assert_eq!(traj.planned_steps, 3);
        assert!(traj.steps.len() >= 3);
        let report = traj.conservation();
        assert!(report.all_hold(), "{report:?}");
        // Chain structure: each cut shares an endpoint (the pivot) with the
        // previous add, and each add starts from its own cut's far end.
        for pair in traj.steps.windows(2) {
            assert!(
                pair[1].cut_edge.has_endpoint(pair[0].added_edge.u())
                    || pair[1].cut_edge.has_endpoint(pair[0].added_edge.v()),
                "cut {} does not continue add {}",
                pair[1].cut_edge,
                pair[0].added_edge
            );
        }
        for step in &traj.steps {
            assert_ne!(step.cut_edge, step.added_edge);
            assert!(
                step.added_edge.has_endpoint(step.cut_edge.u())
                    || step.added_edge.has_endpoint(step.cut_edge.v()),
                "add {} does not continue cut {}",
                step.added_edge,
                step.cut_edge
            );
        }
        // The closing edge lands on the anchor.
        assert!(traj.steps.last().unwrap().added_edge.has_endpoint(traj.anchor));
    }

    #[test]
    fn compress_never_recuts_previous_add() {
        let g = crate::generators::ws_network(30, 4, 0.5, 3).unwrap();
        let traj = compress(&g, &EvolutionConfig::new(0.25)).unwrap();
        for pair in traj.steps.windows(2) {
            assert_ne!(pair[1].cut_edge, pair[0].added_edge);
        }
        assert!(traj.conservation().all_hold());
    }

    #[test]
    fn profile_identity_row_and_shape() {
        let inputs: Vec<Graph> = (0..3)
            .map(|s| crate::generators::ws_network(24, 4, 0.5, s).unwrap())
            .collect();
        let rows = compression_profile(&inputs, &[0.0, 0.2], false).unwrap();
        assert_eq!(rows.len(), 2);
        let identity = &rows[0];
        let mean_input: f64 = inputs
            .iter()
            .map(|g| g.average_distance().unwrap())
            .sum::<f64>()
            / 3.0;
        assert!((identity.avg_distance.mean - mean_input).abs() < 1e-12);
        assert!(rows[1].avg_distance.mean <= identity.avg_distance.mean);

        assert!(matches!(
            compression_profile(&inputs, &[0.3, 0.2], false),
            Err(EvolutionError::InvalidConfig(_))
        ));
    }

    #[test]
    fn constrained_run_conserves_and_flags_fallbacks() {
        let g = crate::generators::ws_network(24, 4, 0.5, 7).unwrap();
        // Ring coordinates; a tight radius leaves few admissible targets.
        let attrs: Vec<Vec<f64>> = (0..24)
            .map(|i| {
                let t = i as f64 / 24.0 * std::f64::consts::TAU;
                vec![t.cos(), t.sin()]
            })
            .collect();
        let mut config = EvolutionConfig::new(0.3);
        config.constraint = Some(NodeConstraint::euclidean(attrs, vec![0.6; 24]));
        let traj = compress(&g, &config).unwrap();
        assert!(traj.conservation().all_hold());
        // Every non-fallback added edge respects the radius.
        let in_range = |a: NodeId, b: NodeId| {
            let ta = a.index() as f64 / 24.0 * std::f64::consts::TAU;
            let tb = b.index() as f64 / 24.0 * std::f64::consts::TAU;
            let (dx, dy) = (ta.cos() - tb.cos(), ta.sin() - tb.sin());
            (dx * dx + dy * dy).sqrt() < 0.6
        };
        for step in &traj.steps {
            let closing = step.added_edge.has_endpoint(traj.anchor)
                && step.index >= traj.planned_steps;
            if !step.constraint_relaxed && !closing {
                assert!(in_range(step.added_edge.u(), step.added_edge.v()));
            }
        }
    }
}
