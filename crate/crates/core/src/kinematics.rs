//! Exact collision detection.
//!
//! Two cars collide when they occupy the same vertex at the same exact time
//! arriving on perpendicular roads. Same-axis coincidences are not collisions.
//! Cars are never stopped by a collision; every schedule runs to completion.

use std::collections::{BTreeSet, HashMap};

use crate::model::{Axis, Rational, TrafficConfig, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CollisionEvent {
    /// Lower car index (0-based).
    pub car_a: usize,
    pub car_b: usize,
    pub vertex: VertexId,
    pub time: Rational,
}

/// Cars as nodes, one undirected edge per colliding pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConflictGraph {
    node_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl ConflictGraph {
    pub fn new(node_count: usize) -> ConflictGraph {
        ConflictGraph {
            node_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(node_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> ConflictGraph {
        let mut graph = ConflictGraph::new(node_count);
        for (a, b) in edges {
            graph.add_edge(a, b);
        }
        graph
    }

    /// Adds `{a, b}`; self-loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.node_count && b < self.node_count, "edge out of range");
        if a != b {
            self.edges.insert((a.min(b), a.max(b)));
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_independent(&self, nodes: &[usize]) -> bool {
        nodes
            .iter()
            .enumerate()
            .all(|(k, &a)| nodes[k + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    /// Induced subgraph on `nodes`, relabeled `0..nodes.len()` in order.
    pub fn induced(&self, nodes: &[usize]) -> ConflictGraph {
        let mut sub = ConflictGraph::new(nodes.len());
        for (x, &a) in nodes.iter().enumerate() {
            for (y, &b) in nodes.iter().enumerate().skip(x + 1) {
                if self.has_edge(a, b) {
                    sub.add_edge(x, y);
                }
            }
        }
        sub
    }
}

/// Every orthogonal same-vertex same-time coincidence, sorted by
/// `(time, car_a, car_b, vertex)`.
pub fn detect_collisions(tc: &TrafficConfig) -> Vec<CollisionEvent> {
    let mut occupancy: HashMap<(VertexId, Rational), Vec<(usize, Axis)>> = HashMap::new();
    for (car, schedule) in tc.schedules().into_iter().enumerate() {
        for arrival in schedule {
            occupancy
                .entry((arrival.vertex, arrival.time))
                .or_default()
                .push((car, arrival.axis));
        }
    }

    let mut events = Vec::new();
    for ((vertex, time), visitors) in occupancy {
        for (k, &(a, axis_a)) in visitors.iter().enumerate() {
            for &(b, axis_b) in &visitors[k + 1..] {
                if axis_a != axis_b && a != b {
                    events.push(CollisionEvent {
                        car_a: a.min(b),
                        car_b: a.max(b),
                        vertex,
                        time: time.clone(),
                    });
                }
            }
        }
    }
    events.sort_by(|x, y| {
        (&x.time, x.car_a, x.car_b, x.vertex).cmp(&(&y.time, y.car_a, y.car_b, y.vertex))
    });
    events
}

pub fn conflict_graph(tc: &TrafficConfig) -> ConflictGraph {
    conflict_graph_of(tc.len(), &detect_collisions(tc))
}

pub fn conflict_graph_of(node_count: usize, events: &[CollisionEvent]) -> ConflictGraph {
    ConflictGraph::from_edges(node_count, events.iter().map(|e| (e.car_a, e.car_b)))
}

pub fn is_collision_free(tc: &TrafficConfig) -> bool {
    detect_collisions(tc).is_empty()
}
