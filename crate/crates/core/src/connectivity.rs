//! Strong connectivity of a road network.
//!
//! A network is strongly connected exactly when its four boundary roads
//! circulate around the perimeter. [`boundary_forms_cycle`] reads that off the
//! four boundary direction bits; [`strongly_connected`] is an independent
//! check by Tarjan's algorithm on the explicit vertex digraph.

use crate::model::{Direction, Owrn, VertexId};

/// Boundary direction tuples `(d(X_1), d(X_n), d(Y_1), d(Y_m))` under which
/// the perimeter is a directed cycle: counter-clockwise, then clockwise.
/// Derived by exhaustive SCC search on the 2x2 grid (see the tests).
pub const CYCLIC_BOUNDARY_TUPLES: [[u8; 4]; 2] = [[1, 0, 0, 1], [0, 1, 1, 0]];

/// `(d(X_1), d(X_n), d(Y_1), d(Y_m))`.
pub fn boundary_tuple(net: &Owrn) -> [u8; 4] {
    [
        net.row(1).direction.bit(),
        net.row(net.rows()).direction.bit(),
        net.column(1).direction.bit(),
        net.column(net.columns()).direction.bit(),
    ]
}

pub fn boundary_forms_cycle(net: &Owrn) -> bool {
    CYCLIC_BOUNDARY_TUPLES.contains(&boundary_tuple(net))
}

/// Strongly connected components of the vertex digraph, as dense vertex
/// indices (see [`Owrn::index_of`]).
pub fn strongly_connected_components(net: &Owrn) -> Vec<Vec<usize>> {
    let size = net.vertex_count();
    let succ: Vec<Vec<usize>> = (0..size)
        .map(|k| {
            net.successors(net.vertex_at(k))
                .map(|w| net.index_of(w))
                .collect()
        })
        .collect();

    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; size];
    let mut low = vec![0; size];
    let mut on_stack = vec![false; size];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next = 0;

    for root in 0..size {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, next successor slot)
        let mut frames = vec![(root, 0usize)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(v, slot)) = frames.last() {
            if let Some(&w) = succ[v].get(slot) {
                if let Some(top) = frames.last_mut() {
                    top.1 += 1;
                }
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    components
}

pub fn strongly_connected(net: &Owrn) -> bool {
    strongly_connected_components(net).len() == 1
}

/// Boundary vertices `v(i, e)` and `v(f, j)` attached to a vertex `v(i, j)`
/// along its row and its column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryWitness {
    /// Column index of the boundary vertex on row `i`; 1 or m.
    pub e: usize,
    /// Row index of the boundary vertex on column `j`; 1 or n.
    pub f: usize,
}

/// Boundary vertices reached from `v` by driving straight along its row and
/// along its column.
pub fn reach_boundary_from(net: &Owrn, v: VertexId) -> BoundaryWitness {
    let e = match net.row(v.i).direction {
        Direction::Positive => net.columns(),
        Direction::Negative => 1,
    };
    let f = match net.column(v.j).direction {
        Direction::Positive => net.rows(),
        Direction::Negative => 1,
    };
    debug_assert!(straight_run(net, v, VertexId::new(v.i, e)));
    debug_assert!(straight_run(net, v, VertexId::new(f, v.j)));
    BoundaryWitness { e, f }
}

/// Boundary vertices from which `v` is reached by driving straight along
/// its row and along its column.
pub fn reachable_from_boundary(net: &Owrn, v: VertexId) -> BoundaryWitness {
    let e = match net.row(v.i).direction {
        Direction::Positive => 1,
        Direction::Negative => net.columns(),
    };
    let f = match net.column(v.j).direction {
        Direction::Positive => 1,
        Direction::Negative => net.rows(),
    };
    debug_assert!(straight_run(net, VertexId::new(v.i, e), v));
    debug_assert!(straight_run(net, VertexId::new(f, v.j), v));
    BoundaryWitness { e, f }
}

/// True iff `to` is reached from `from` by following a single road.
pub fn straight_run(net: &Owrn, from: VertexId, to: VertexId) -> bool {
    if from.i != to.i && from.j != to.j {
        return false;
    }
    let mut at = from;
    while at != to {
        let next = if from.i == to.i {
            let step = if to.j > at.j { 1 } else { -1isize };
            VertexId::new(at.i, (at.j as isize + step) as usize)
        } else {
            let step = if to.i > at.i { 1 } else { -1isize };
            VertexId::new((at.i as isize + step) as usize, at.j)
        };
        if !net.has_directed_edge(at, next) {
            return false;
        }
        at = next;
    }
    true
}

/// Direction bits for a network of `rows x columns` roads with the given
/// boundary tuple and interior bits (rows 2..n-1 then columns 2..m-1).
pub fn with_boundary(boundary: [u8; 4], interior_rows: &[u8], interior_columns: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let mut rows = vec![boundary[0]];
    rows.extend_from_slice(interior_rows);
    rows.push(boundary[1]);
    let mut columns = vec![boundary[2]];
    columns.extend_from_slice(interior_columns);
    columns.push(boundary[3]);
    (rows, columns)
}
