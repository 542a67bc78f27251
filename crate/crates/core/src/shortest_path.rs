//! Shortest paths in the one-way metric and their turn structure.
//!
//! Edge weights are geometric lengths, so non-uniform road spacing is
//! supported. A turn is an axis change between consecutive edges; since roads
//! are one-way, the heading of a car changes exactly at turns.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::model::{Axis, Owrn, PathSeq, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurnPath {
    pub path: PathSeq,
    pub length: i64,
    pub turns: Vec<Turn>,
}

impl TurnPath {
    fn from_vertices(net: &Owrn, vertices: Vec<VertexId>) -> TurnPath {
        let path = PathSeq::new(vertices).expect("search paths are non-empty");
        TurnPath {
            length: net.path_length_unchecked(&path),
            turns: turn_sequence(net, &path),
            path,
        }
    }
}

/// One entry per axis change, handed by the sign of the cross product of
/// the two edge vectors (positive is a left turn).
pub fn turn_sequence(net: &Owrn, path: &PathSeq) -> Vec<Turn> {
    let vector = |a: VertexId, b: VertexId| {
        let (ax, ay) = net.position(a);
        let (bx, by) = net.position(b);
        (bx - ax, by - ay)
    };
    path.vertices()
        .windows(3)
        .filter_map(|w| {
            if Owrn::edge_axis(w[0], w[1]) == Owrn::edge_axis(w[1], w[2]) {
                return None;
            }
            let (x1, y1) = vector(w[0], w[1]);
            let (x2, y2) = vector(w[1], w[2]);
            Some(if x1 * y2 - y1 * x2 > 0 { Turn::Left } else { Turn::Right })
        })
        .collect()
}

pub fn perimeter(net: &Owrn) -> i64 {
    let width = net.column(net.columns()).offset - net.column(1).offset;
    let height = net.row(net.rows()).offset - net.row(1).offset;
    2 * (width + height)
}

/// Distances from `source` to every vertex (dense index), `None` if unreachable.
pub fn distances_from(net: &Owrn, source: VertexId) -> Vec<Option<i64>> {
    dijkstra(net, source, |v| net.successors(v).collect())
}

/// Distances from every vertex to `target`.
pub fn distances_to(net: &Owrn, target: VertexId) -> Vec<Option<i64>> {
    dijkstra(net, target, |v| net.predecessors(v).collect())
}

fn dijkstra(net: &Owrn, source: VertexId, next: impl Fn(VertexId) -> Vec<VertexId>) -> Vec<Option<i64>> {
    let mut dist = vec![None; net.vertex_count()];
    let mut heap = BinaryHeap::new();
    dist[net.index_of(source)] = Some(0);
    heap.push(Reverse((0i64, net.index_of(source))));
    while let Some(Reverse((d, k))) = heap.pop() {
        if dist[k].is_some_and(|best| best < d) {
            continue;
        }
        let v = net.vertex_at(k);
        for w in next(v) {
            let nd = d + net.edge_length(v, w);
            let slot = &mut dist[net.index_of(w)];
            if slot.is_none_or(|old| nd < old) {
                *slot = Some(nd);
                heap.push(Reverse((nd, net.index_of(w))));
            }
        }
    }
    dist
}

/// Minimum-length directed path; ties go to the lexicographically smallest
/// vertex sequence. `None` if `to` is unreachable.
pub fn dijkstra_shortest(net: &Owrn, from: VertexId, to: VertexId) -> Option<TurnPath> {
    let to_target = distances_to(net, to);
    let mut remaining = to_target[net.index_of(from)]?;
    let mut vertices = vec![from];
    let mut at = from;
    while at != to {
        let next = net
            .successors(at)
            .filter(|&w| to_target[net.index_of(w)] == Some(remaining - net.edge_length(at, w)))
            .min()
            .expect("a tight successor exists on every shortest path");
        remaining -= net.edge_length(at, next);
        vertices.push(next);
        at = next;
    }
    Some(TurnPath::from_vertices(net, vertices))
}

/// Axis of the last edge taken, or `Start` before the first edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Heading {
    Start,
    Along(Axis),
}

impl Heading {
    fn slot(self) -> usize {
        match self {
            Heading::Start => 0,
            Heading::Along(Axis::Horizontal) => 1,
            Heading::Along(Axis::Vertical) => 2,
        }
    }
}

struct TurnSearch {
    /// Indexed by `(vertex * 3 + heading) * (max_turns + 1) + turns`.
    dist: Vec<Option<i64>>,
    parent: Vec<Option<usize>>,
    layers: usize,
}

impl TurnSearch {
    fn state(&self, vertex: usize, heading: Heading, turns: usize) -> usize {
        (vertex * 3 + heading.slot()) * self.layers + turns
    }

    fn decode(&self, state: usize) -> usize {
        state / self.layers / 3
    }
}

// The heading only needs the axis: a road carries traffic in one direction,
// so two states on the same road and axis always move the same way.
fn turn_search(net: &Owrn, from: VertexId, max_turns: usize) -> TurnSearch {
    let layers = max_turns + 1;
    let states = net.vertex_count() * 3 * layers;
    let mut search = TurnSearch {
        dist: vec![None; states],
        parent: vec![None; states],
        layers,
    };
    let start = search.state(net.index_of(from), Heading::Start, 0);
    search.dist[start] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, start)));
    while let Some(Reverse((d, s))) = heap.pop() {
        if search.dist[s].is_some_and(|best| best < d) {
            continue;
        }
        let turns = s % layers;
        let heading = match (s / layers) % 3 {
            0 => Heading::Start,
            1 => Heading::Along(Axis::Horizontal),
            _ => Heading::Along(Axis::Vertical),
        };
        let v = net.vertex_at(search.decode(s));
        for w in net.successors(v) {
            let axis = Owrn::edge_axis(v, w);
            let next_turns = match heading {
                Heading::Along(a) if a != axis => turns + 1,
                _ => turns,
            };
            if next_turns > max_turns {
                continue;
            }
            let t = search.state(net.index_of(w), Heading::Along(axis), next_turns);
            let nd = d + net.edge_length(v, w);
            if search.dist[t].is_none_or(|old| nd < old) {
                search.dist[t] = Some(nd);
                search.parent[t] = Some(s);
                heap.push(Reverse((nd, t)));
            }
        }
    }
    search
}

/// Best length to every vertex using at most `max_turns` turns.
pub fn turn_bounded_distances(net: &Owrn, from: VertexId, max_turns: usize) -> Vec<Option<i64>> {
    let search = turn_search(net, from, max_turns);
    (0..net.vertex_count())
        .map(|k| {
            (0..3 * search.layers)
                .filter_map(|h| search.dist[k * 3 * search.layers + h])
                .min()
        })
        .collect()
}

/// Shortest path among those with at most `max_turns` turns.
pub fn turn_bounded_shortest(net: &Owrn, from: VertexId, to: VertexId, max_turns: usize) -> Option<TurnPath> {
    let search = turn_search(net, from, max_turns);
    let base = net.index_of(to) * 3 * search.layers;
    let (best, _) = (base..base + 3 * search.layers)
        .filter_map(|s| search.dist[s].map(|d| (s, d)))
        .min_by_key(|&(s, d)| (d, s))?;
    let mut vertices = Vec::new();
    let mut at = Some(best);
    while let Some(s) = at {
        vertices.push(net.vertex_at(search.decode(s)));
        at = search.parent[s];
    }
    vertices.reverse();
    Some(TurnPath::from_vertices(net, vertices))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::VecDeque;

    fn v(i: usize, j: usize) -> VertexId {
        VertexId::new(i, j)
    }

    fn fix_a() -> Owrn {
        Owrn::from_bits(&[1, 0], &[0, 1]).unwrap()
    }

    fn path(vs: &[(usize, usize)]) -> PathSeq {
        PathSeq::new(vs.iter().map(|&(i, j)| v(i, j)).collect()).unwrap()
    }

    #[test]
    fn fixture_a_paths() {
        let net = fix_a();
        let p = dijkstra_shortest(&net, v(1, 1), v(1, 2)).unwrap();
        assert_eq!((p.length, p.turns.len()), (1, 0));
        let p = dijkstra_shortest(&net, v(1, 2), v(1, 1)).unwrap();
        assert_eq!((p.length, p.turns.len()), (3, 2));
        let p = dijkstra_shortest(&net, v(2, 2), v(2, 2)).unwrap();
        assert_eq!(p.length, 0);
        let p = turn_bounded_shortest(&net, v(1, 2), v(1, 1), 4).unwrap();
        assert_eq!(p.length, 3);
        assert!(turn_bounded_shortest(&net, v(1, 2), v(1, 1), 1).is_none());
    }

    #[test]
    fn turn_handedness() {
        let net = fix_a();
        assert_eq!(turn_sequence(&net, &path(&[(1, 1), (1, 2)])), vec![]);
        assert_eq!(
            turn_sequence(&net, &path(&[(1, 2), (2, 2), (2, 1), (1, 1)])),
            vec![Turn::Left, Turn::Left]
        );
        assert_eq!(turn_sequence(&net, &path(&[(1, 1), (1, 2), (2, 2)])), vec![Turn::Left]);
    }

    #[test]
    fn perimeters() {
        assert_eq!(perimeter(&fix_a()), 4);
        assert_eq!(perimeter(&Owrn::from_bits(&[1, 1, 0], &[0, 0, 1]).unwrap()), 8);
        assert_eq!(perimeter(&Owrn::from_bits(&[1, 0], &[0, 1, 1, 1, 1]).unwrap()), 10);
    }

    #[test]
    fn zero_turns_is_straight_line() {
        let net = Owrn::from_bits(&[1, 1, 0], &[0, 0, 1]).unwrap();
        let p = turn_bounded_shortest(&net, v(2, 1), v(2, 3), 0).unwrap();
        assert_eq!(p.length, 2);
        assert!(p.turns.is_empty());
    }

    #[test]
    fn dijkstra_matches_hop_count_on_unit_grid() {
        let net = Owrn::from_bits(&[1, 0, 1, 0], &[0, 1, 0, 1]).unwrap();
        for s in net.vertices() {
            let mut hops = vec![None; net.vertex_count()];
            hops[net.index_of(s)] = Some(0i64);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let d = hops[net.index_of(x)].unwrap();
                for w in net.successors(x) {
                    if hops[net.index_of(w)].is_none() {
                        hops[net.index_of(w)] = Some(d + 1);
                        queue.push_back(w);
                    }
                }
            }
            assert_eq!(distances_from(&net, s), hops);
        }
    }

    #[test]
    fn lexicographic_tie_break() {
        // all roads positive: from v11 to v22 both v12 and v21 routes tie
        let net = Owrn::from_bits(&[1, 1], &[1, 1]).unwrap();
        let p = dijkstra_shortest(&net, v(1, 1), v(2, 2)).unwrap();
        assert_eq!(p.path.vertices(), &[v(1, 1), v(1, 2), v(2, 2)]);
        assert!(dijkstra_shortest(&net, v(2, 2), v(1, 1)).is_none());
    }
}
