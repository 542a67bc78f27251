//! Maximum collision-free subsets of a traffic configuration.
//!
//! Picking the largest collision-free set of cars is maximum independent set
//! on the conflict graph. The general case is solved exactly by branch and
//! bound (capped at [`EXACT_CAP`] cars). When every car drives straight, the
//! conflict graph is bipartite (horizontal movers vs vertical movers) and the
//! answer follows from a maximum matching through König's theorem.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::kinematics::{conflict_graph, is_collision_free, ConflictGraph};
use crate::model::{Axis, Owrn, TrafficConfig, Vehicle};

/// Largest car count accepted by the exact and brute-force searches.
pub const EXACT_CAP: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveMethod {
    ExactSearch,
    BipartiteKonig,
    BruteForce,
}

impl SolveMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveMethod::ExactSearch => "exact-search",
            SolveMethod::BipartiteKonig => "bipartite-konig",
            SolveMethod::BruteForce => "brute-force",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSolution {
    /// Selected car indices, ascending.
    pub selected: Vec<usize>,
    pub size: usize,
    pub method: SolveMethod,
}

impl SubsetSolution {
    fn new(mut selected: Vec<usize>, method: SolveMethod) -> SubsetSolution {
        selected.sort_unstable();
        SubsetSolution {
            size: selected.len(),
            selected,
            method,
        }
    }
}

/// Which solver `max_collision_free_subset_with` should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Exact,
    Bipartite,
}

fn masks(graph: &ConflictGraph) -> Result<Vec<u32>> {
    let n = graph.node_count();
    if n > EXACT_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: EXACT_CAP,
        });
    }
    let mut adj = vec![0u32; n];
    for &(a, b) in graph.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    Ok(adj)
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Maximum independent set by include-first search in index order. The first
/// maximum set met is the lexicographically smallest one.
pub fn brute_force_mis(graph: &ConflictGraph) -> Result<SubsetSolution> {
    let adj = masks(graph)?;
    let all = if adj.is_empty() { 0 } else { u32::MAX >> (32 - adj.len()) };

    fn walk(adj: &[u32], candidates: u32, chosen: u32, best: &mut (u32, u32)) {
        if candidates == 0 {
            if chosen.count_ones() > best.0 {
                *best = (chosen.count_ones(), chosen);
            }
            return;
        }
        if chosen.count_ones() + candidates.count_ones() <= best.0 {
            return;
        }
        let v = candidates.trailing_zeros();
        let bit = 1u32 << v;
        walk(adj, candidates & !bit & !adj[v as usize], chosen | bit, best);
        walk(adj, candidates & !bit, chosen, best);
    }

    // (size, set)
    let mut best = (0u32, 0u32);
    walk(&adj, all, 0, &mut best);
    Ok(SubsetSolution::new(mask_to_vec(best.1), SolveMethod::BruteForce))
}

/// Size of a maximum independent set within `candidates`, by branching on a
/// vertex of maximum degree.
fn mis_size(adj: &[u32], candidates: u32) -> u32 {
    fn search(adj: &[u32], candidates: u32, size: u32, best: &mut u32) {
        if size + candidates.count_ones() <= *best {
            return;
        }
        let mut pivot = None;
        let mut pivot_degree = 0;
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let degree = (adj[v as usize] & candidates).count_ones();
            if degree > pivot_degree {
                pivot_degree = degree;
                pivot = Some(v);
            }
        }
        let Some(v) = pivot else {
            // no edges left: take everything
            *best = (*best).max(size + candidates.count_ones());
            return;
        };
        let bit = 1u32 << v;
        search(adj, candidates & !bit & !adj[v as usize], size + 1, best);
        search(adj, candidates & !bit, size, best);
    }
    let mut best = 0;
    search(adj, candidates, 0, &mut best);
    best
}

/// Exact maximum independent set with the lexicographically smallest optimum.
pub fn exact_mis(graph: &ConflictGraph) -> Result<SubsetSolution> {
    let adj = masks(graph)?;
    let n = adj.len();
    let mut candidates: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut remaining = mis_size(&adj, candidates);
    let mut chosen = Vec::new();
    for v in 0..n {
        if remaining == 0 {
            break;
        }
        let bit = 1u32 << v;
        if candidates & bit == 0 {
            continue;
        }
        let with_v = candidates & !bit & !adj[v];
        if 1 + mis_size(&adj, with_v) == remaining {
            chosen.push(v);
            candidates = with_v;
            remaining -= 1;
        } else {
            candidates &= !bit;
        }
    }
    Ok(SubsetSolution::new(chosen, SolveMethod::ExactSearch))
}

/// Axis of a car whose path stays on one road, `None` if it turns.
pub fn straight_axis(vehicle: &Vehicle) -> Option<Axis> {
    let vs = vehicle.path.vertices();
    let first = Owrn::edge_axis(vs[0], *vs.get(1)?);
    vs.windows(2)
        .all(|w| Owrn::edge_axis(w[0], w[1]) == first)
        .then_some(first)
}

pub fn is_straight_line_tc(tc: &TrafficConfig) -> bool {
    tc.vehicles().iter().all(|v| straight_axis(v).is_some())
}

/// Maximum matching, minimum vertex cover and maximum independent set of a
/// bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KonigDecomposition {
    /// Matched pairs `(left, right)`.
    pub matching: Vec<(usize, usize)>,
    pub cover: Vec<usize>,
    pub independent: Vec<usize>,
}

/// Augmenting-path matching plus König's cover construction. `is_left`
/// gives the side of each node; every edge must join the two sides.
pub fn konig(graph: &ConflictGraph, is_left: &[bool]) -> Result<KonigDecomposition> {
    let n = graph.node_count();
    assert_eq!(is_left.len(), n, "one side flag per node");
    if let Some(&(a, b)) = graph.edges().iter().find(|&&(a, b)| is_left[a] == is_left[b]) {
        return Err(Error::InvalidGraph(format!(
            "edge ({a}, {b}) joins two nodes on the same side"
        )));
    }
    let adj = graph.adjacency();
    const FREE: usize = usize::MAX;
    let mut mate = vec![FREE; n];

    fn augment(v: usize, adj: &[Vec<usize>], mate: &mut [usize], seen: &mut [bool]) -> bool {
        for &w in &adj[v] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if mate[w] == FREE || augment(mate[w], adj, mate, seen) {
                mate[w] = v;
                mate[v] = w;
                return true;
            }
        }
        false
    }

    for v in (0..n).filter(|&v| is_left[v]) {
        let mut seen = vec![false; n];
        augment(v, &adj, &mut mate, &mut seen);
    }

    // alternating reachability from free left nodes
    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| is_left[v] && mate[v] == FREE).collect();
    for &v in &queue {
        reached[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if reached[w] || mate[v] == w {
                continue;
            }
            reached[w] = true;
            let back = mate[w];
            if back != FREE && !reached[back] {
                reached[back] = true;
                queue.push_back(back);
            }
        }
    }

    let matching = (0..n)
        .filter(|&v| is_left[v] && mate[v] != FREE)
        .map(|v| (v, mate[v]))
        .collect();
    let in_cover = |v: usize| if is_left[v] { !reached[v] } else { reached[v] };
    let cover = (0..n).filter(|&v| in_cover(v)).collect();
    let independent = (0..n).filter(|&v| !in_cover(v)).collect();
    Ok(KonigDecomposition {
        matching,
        cover,
        independent,
    })
}

/// Maximum collision-free subset of a straight-line configuration via König.
pub fn bipartite_max_subset(tc: &TrafficConfig) -> Result<SubsetSolution> {
    Ok(bipartite_decomposition(tc)?.0)
}

/// Like [`bipartite_max_subset`], also returning the matching and cover.
pub fn bipartite_decomposition(tc: &TrafficConfig) -> Result<(SubsetSolution, KonigDecomposition)> {
    let is_left = tc
        .vehicles()
        .iter()
        .enumerate()
        .map(|(car, v)| {
            straight_axis(v)
                .map(|axis| axis == Axis::Horizontal)
                .ok_or(Error::NotStraightLine { car })
        })
        .collect::<Result<Vec<_>>>()?;
    let graph = conflict_graph(tc);
    let decomposition = konig(&graph, &is_left)?;
    let solution = SubsetSolution::new(decomposition.independent.clone(), SolveMethod::BipartiteKonig);
    verify_selection(tc, &solution)?;
    Ok((solution, decomposition))
}

fn verify_selection(tc: &TrafficConfig, solution: &SubsetSolution) -> Result<()> {
    if is_collision_free(&tc.restrict(&solution.selected)) {
        Ok(())
    } else {
        Err(Error::InfeasibleSelection)
    }
}

/// Largest collision-free subset; straight-line configurations go through
/// König, everything else through exact search.
pub fn max_collision_free_subset(tc: &TrafficConfig) -> Result<SubsetSolution> {
    max_collision_free_subset_with(tc, Strategy::Auto)
}

pub fn max_collision_free_subset_with(tc: &TrafficConfig, strategy: Strategy) -> Result<SubsetSolution> {
    let use_bipartite = match strategy {
        Strategy::Auto => is_straight_line_tc(tc),
        Strategy::Bipartite => true,
        Strategy::Exact => false,
    };
    if use_bipartite {
        return bipartite_max_subset(tc);
    }
    let solution = exact_mis(&conflict_graph(tc))?;
    verify_selection(tc, &solution)?;
    Ok(solution)
}
