//! Maximum independent set to collision-free traffic: instance generator and
//! per-instance verifier.
//!
//! The construction runs in three stages.
//!
//! 1. [`complete_graph_tc`] builds the complete-graph gadget: `2n` horizontal
//!    and `n` vertical roads spaced `delta` apart, and one car per node. Car
//!    `c_i` drives down column `i` from row `n+i-1` to row `q = n-i+1`, then
//!    right along row `q` to column `n`. Cars `c_i` and `c_j` (`i < j`) meet
//!    at `v(n-i+1, j)` after both travelled `(i+j-2)*delta`, so every pair
//!    collides.
//! 2. [`refine_network`] inserts four roads at spacing `fine = delta/5`
//!    between every adjacent pair of roads, giving room for detours.
//! 3. [`reduce`] removes the collisions of non-adjacent pairs by inserting
//!    detours. A detour replaces one fine edge by a three-edge U and delays
//!    every later arrival by `2*fine/omega`. Before meeting `c_i`, car `c_j`
//!    carries `i` detours when `{i, j}` is an edge and `i-1` otherwise, while
//!    `c_i` carries exactly `i` detours on its whole horizontal leg.
//!
//! Freedom from unintended collisions is certified by [`verify_reduction`],
//! which simulates the produced instance.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::kinematics::{detect_collisions, ConflictGraph};
use crate::model::{integer, Direction, Owrn, PathSeq, Rational, Road, TrafficConfig, Vehicle, VertexId};

/// Fine edges per coarse edge after refinement.
pub const REFINEMENT: usize = 5;

/// Directions of the four inserted roads by increasing offset
/// (`+g, +2g, +3g, +4g` above or right of the lower road).
pub const FINE_PATTERN: [Direction; 4] = [
    Direction::Positive,
    Direction::Negative,
    Direction::Positive,
    Direction::Negative,
];

/// Ceiling on total path vertices, as a multiple of `N^2` (`N` the gadget
/// size). Car `c_j` has at most `5(2N-2)` fine edges plus `2j` detour edges.
pub const PATH_VERTEX_FACTOR: usize = 12;

/// Undirected graph on nodes `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<SimpleGraph> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one node".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop on node {a}")));
            }
            if !(1..=n).contains(&a) || !(1..=n).contains(&b) {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) outside 1..={n}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn complete(n: usize) -> Result<SimpleGraph> {
        SimpleGraph::new(n, (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))))
    }

    /// Graph on `n` nodes whose edges are selected by the bits of `mask`,
    /// in lexicographic pair order `(1,2), (1,3), ..., (n-1,n)`.
    pub fn from_mask(n: usize, mask: u64) -> Result<SimpleGraph> {
        let pairs: Vec<_> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        SimpleGraph::new(
            n,
            pairs
                .into_iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, p)| p),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Same graph with 0-based labels.
    pub fn to_conflict_graph(&self) -> ConflictGraph {
        ConflictGraph::from_edges(self.n, self.edges.iter().map(|&(a, b)| (a - 1, b - 1)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductionParams {
    delta: i64,
    fine: i64,
    omega: Rational,
}

impl ReductionParams {
    /// `delta` must be a positive multiple of 5, `omega` positive.
    pub fn new(delta: i64, omega: Rational) -> Result<ReductionParams> {
        if delta <= 0 || delta % REFINEMENT as i64 != 0 {
            return Err(Error::InvalidParams(format!(
                "delta must be a positive multiple of {REFINEMENT}, got {delta}"
            )));
        }
        if !omega.is_positive() {
            return Err(Error::InvalidParams("omega must be positive".into()));
        }
        Ok(ReductionParams {
            delta,
            fine: delta / REFINEMENT as i64,
            omega,
        })
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn fine(&self) -> i64 {
        self.fine
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    /// Delay added by one detour: `2 * fine / omega`.
    pub fn delay_quantum(&self) -> Rational {
        integer(2 * self.fine) / &self.omega
    }
}

impl Default for ReductionParams {
    fn default() -> Self {
        ReductionParams::new(5, integer(1)).expect("defaults are valid")
    }
}

/// Roads per axis family used by the gadget for `n` cars; a single car still
/// needs two vertical roads.
pub fn gadget_size(n: usize) -> usize {
    n.max(2)
}

/// Coarse-grid vertex where `c_i` meets `c_j`.
///
/// `i = 0` gives the start of `c_j`; `1 <= i < j` gives `v(N-i+1, j)`; `i = j`
/// applies the same formula and lands on the turn vertex of `c_j`.
pub fn coarse_collision_vertex(gadget: usize, i: usize, j: usize) -> VertexId {
    assert!(i <= j && (1..=gadget).contains(&j), "need 0 <= i <= j <= N");
    if i == 0 {
        VertexId::new(gadget + j - 1, j)
    } else {
        VertexId::new(gadget - i + 1, j)
    }
}

/// Coarse vertex to refined vertex.
pub fn lift(v: VertexId) -> VertexId {
    VertexId::new(REFINEMENT * (v.i - 1) + 1, REFINEMENT * (v.j - 1) + 1)
}

/// Inverse of [`lift`] for vertices on coarse roads at both indices.
pub fn project(v: VertexId) -> Option<VertexId> {
    ((v.i - 1).is_multiple_of(REFINEMENT) && (v.j - 1).is_multiple_of(REFINEMENT))
        .then(|| VertexId::new((v.i - 1) / REFINEMENT + 1, (v.j - 1) / REFINEMENT + 1))
}

/// The complete-graph gadget for `n` cars (unrefined).
pub fn complete_graph_tc(n: usize, params: &ReductionParams) -> Result<TrafficConfig> {
    if n == 0 {
        return Err(Error::InvalidGraph("gadget needs at least one car".into()));
    }
    let size = gadget_size(n);
    let offset = |k: usize| (k as i64 - 1) * params.delta;
    let horizontal = (1..=2 * size)
        .map(|k| {
            let d = if k == 1 { Direction::Negative } else { Direction::Positive };
            Road::horizontal(d, offset(k))
        })
        .collect();
    let vertical = (1..=size)
        .map(|k| {
            let d = if k == 1 { Direction::Positive } else { Direction::Negative };
            Road::vertical(d, offset(k))
        })
        .collect();
    let network = Owrn::new(horizontal, vertical)?;

    let vehicles = (1..=n)
        .map(|i| {
            let top = size + i - 1;
            let turn = size - i + 1;
            let down = (turn..=top).rev().map(|row| VertexId::new(row, i));
            let right = (i + 1..=size).map(|col| VertexId::new(turn, col));
            let path = PathSeq::new(down.chain(right).collect())?;
            Vehicle::new(integer(0), params.omega.clone(), path)
        })
        .collect::<Result<Vec<_>>>()?;
    TrafficConfig::new(network, vehicles)
}

/// Inserts four roads with directions [`FINE_PATTERN`] between every pair of
/// adjacent roads and re-expresses each path edge as five fine edges.
pub fn refine_network(tc: &TrafficConfig, params: &ReductionParams) -> Result<TrafficConfig> {
    let refine_family = |roads: &[Road]| -> Result<Vec<Road>> {
        let mut fine = Vec::with_capacity(REFINEMENT * roads.len());
        for (k, road) in roads.iter().enumerate() {
            fine.push(*road);
            let Some(next) = roads.get(k + 1) else { break };
            if next.offset - road.offset != params.delta {
                return Err(Error::InvalidParams(format!(
                    "roads at {} and {} are not {} apart",
                    road.offset, next.offset, params.delta
                )));
            }
            for (s, &direction) in FINE_PATTERN.iter().enumerate() {
                fine.push(Road {
                    axis: road.axis,
                    direction,
                    offset: road.offset + (s as i64 + 1) * params.fine,
                });
            }
        }
        Ok(fine)
    };
    let net = tc.network();
    let network = Owrn::new(refine_family(net.horizontal())?, refine_family(net.vertical())?)?;

    let vehicles = tc
        .vehicles()
        .iter()
        .map(|car| {
            let coarse = car.path.vertices();
            let mut fine = vec![lift(coarse[0])];
            for w in coarse.windows(2) {
                let (a, b) = (lift(w[0]), lift(w[1]));
                let di = b.i as isize - a.i as isize;
                let dj = b.j as isize - a.j as isize;
                for s in 1..=REFINEMENT as isize {
                    fine.push(VertexId::new(
                        (a.i as isize + di * s / REFINEMENT as isize) as usize,
                        (a.j as isize + dj * s / REFINEMENT as isize) as usize,
                    ));
                }
            }
            Vehicle::new(car.start_time.clone(), car.speed.clone(), PathSeq::new(fine)?)
        })
        .collect::<Result<Vec<_>>>()?;
    TrafficConfig::new(network, vehicles)
}

/// U-shaped replacement `(g1, e1, e2, g2)` for the edge `g1 -> g2`, if the
/// network has the three edges on one side.
fn detour_for(net: &Owrn, from: VertexId, to: VertexId) -> Option<(VertexId, VertexId)> {
    let sidestep = |v: VertexId, s: isize| -> Option<VertexId> {
        let (i, j) = if from.i == to.i {
            (v.i as isize + s, v.j as isize)
        } else {
            (v.i as isize, v.j as isize + s)
        };
        (i >= 1 && j >= 1).then(|| VertexId::new(i as usize, j as usize))
    };
    [1isize, -1].into_iter().find_map(|s| {
        let e1 = sidestep(from, s)?;
        let e2 = sidestep(to, s)?;
        (net.has_directed_edge(from, e1) && net.has_directed_edge(e1, e2) && net.has_directed_edge(e2, to))
            .then_some((e1, e2))
    })
}

/// Inserts `count` detours into `path` strictly after position `alpha` and
/// no later than position `beta`, each on the first admissible fine edge
/// after the previous one. Returns the new position of `beta`.
pub fn delay(net: &Owrn, path: &mut PathSeq, alpha: usize, beta: usize, count: usize) -> Result<usize> {
    let no_room = Error::NoRoom { alpha, beta, count };
    let vertices = path.vertices_mut();
    let mut beta_pos = beta;
    let mut k = alpha + 1;
    let mut placed = 0;
    while placed < count {
        if k + 1 > beta_pos || k + 1 >= vertices.len() {
            return Err(no_room);
        }
        let (g1, g2) = (vertices[k], vertices[k + 1]);
        if !net.has_directed_edge(g1, g2) {
            return Err(Error::InvalidDirection { from: g1, to: g2 });
        }
        match detour_for(net, g1, g2) {
            Some((e1, e2)) => {
                vertices.splice(k + 1..k + 1, [e1, e2]);
                beta_pos += 2;
                placed += 1;
                // next detour starts after g2
                k += 4;
            }
            None => k += 1,
        }
    }
    Ok(beta_pos)
}

/// Generated traffic configuration for an input graph plus bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub input: SimpleGraph,
    pub params: ReductionParams,
    pub tc: TrafficConfig,
    /// Refined vertex where `c_i` and `c_j` (`i < j`) are meant to meet.
    pub collision_vertices: BTreeMap<(usize, usize), VertexId>,
    /// Detours on `P_j` before `collision_vertices[(i, j)]`.
    pub delay_counts: BTreeMap<(usize, usize), usize>,
}

impl ReductionInstance {
    pub fn gadget_size(&self) -> usize {
        gadget_size(self.input.n())
    }

    /// Refined form of [`coarse_collision_vertex`].
    pub fn collision_vertex(&self, i: usize, j: usize) -> VertexId {
        lift(coarse_collision_vertex(self.gadget_size(), i, j))
    }

    /// Adds `count` detours to car `car` (1-based) between `alpha` and `beta`.
    pub fn insert_delay(&mut self, car: usize, alpha: VertexId, beta: VertexId, count: usize) -> Result<()> {
        let (network, mut vehicles) = self.tc.clone().into_parts();
        let path = &mut vehicles[car - 1].path;
        let a = path.position(alpha).ok_or(Error::VertexOutOfRange(alpha))?;
        let b = path.vertices()[a..]
            .iter()
            .position(|&v| v == beta)
            .map(|p| p + a)
            .ok_or(Error::VertexOutOfRange(beta))?;
        delay(&network, path, a, b, count)?;
        self.tc = TrafficConfig::new(network, vehicles)?;
        Ok(())
    }
}

/// Builds the traffic configuration whose conflict graph is `graph`.
pub fn reduce(graph: &SimpleGraph, params: &ReductionParams) -> Result<ReductionInstance> {
    let n = graph.n();
    let size = gadget_size(n);
    let refined = refine_network(&complete_graph_tc(n, params)?, params)?;
    let (network, mut vehicles) = refined.into_parts();
    let cv = |i: usize, j: usize| lift(coarse_collision_vertex(size, i, j));

    let mut collision_vertices = BTreeMap::new();
    let mut delay_counts = BTreeMap::new();
    for j in 1..=n {
        let path = &mut vehicles[j - 1].path;
        let locate = |path: &PathSeq, v: VertexId| path.position(v).ok_or(Error::VertexOutOfRange(v));
        let mut alpha = locate(path, cv(0, j))?;
        let mut before = 0;
        for i in 1..j {
            let target = if graph.has_edge(i, j) { i } else { i - 1 };
            let beta = locate(path, cv(i, j))?;
            delay(&network, path, alpha, beta, target - before)?;
            alpha = locate(path, cv(i, j))?;
            collision_vertices.insert((i, j), cv(i, j));
            delay_counts.insert((i, j), target);
            before = target;
        }
        // every car enters its horizontal leg carrying j detours; c_1 has no
        // vertical leg and takes its detour before its first meeting vertex
        let end = if j == 1 { lift(VertexId::new(size, 2)) } else { cv(j, j) };
        let beta = locate(path, end)?;
        delay(&network, path, alpha, beta, j - before)?;
    }

    Ok(ReductionInstance {
        input: graph.clone(),
        params: params.clone(),
        tc: TrafficConfig::new(network, vehicles)?,
        collision_vertices,
        delay_counts,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingCollision { i: usize, j: usize },
    SpuriousCollision { i: usize, j: usize },
    IncidentalCollision { i: usize, j: usize, vertex: VertexId, time: Rational },
    PrefixDelay { i: usize, j: usize, expected: usize, measured: usize },
    RecordedDelay { i: usize, j: usize, recorded: Option<usize>, measured: usize },
    LengthExcess { car: usize, at: VertexId, expected: i64, measured: i64 },
    TotalDelay { car: usize, expected: usize, measured: usize },
    LateDelay { car: usize },
    BlockOverflow { car: usize, from: VertexId, to: VertexId, count: usize },
    RoadCount { expected: (usize, usize), actual: (usize, usize) },
    VehicleCount { expected: usize, actual: usize },
    PathSize { total: usize, bound: usize },
    MissingVertex { car: usize, vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            MissingCollision { i, j } => write!(f, "conflict: edge {{{i},{j}}} has no collision"),
            SpuriousCollision { i, j } => write!(f, "conflict: cars {i},{j} collide without an edge"),
            IncidentalCollision { i, j, vertex, time } => write!(
                f,
                "conflict: cars {i},{j} collide at {vertex} t={} away from their meeting vertex",
                crate::model::format_rational(time)
            ),
            PrefixDelay { i, j, expected, measured } => write!(
                f,
                "delay: car {j} carries {measured} detours before meeting car {i}, expected {expected}"
            ),
            RecordedDelay { i, j, recorded, measured } => write!(
                f,
                "delay: recorded delay count {recorded:?} for ({i},{j}) differs from measured {measured}"
            ),
            LengthExcess { car, at, expected, measured } => write!(
                f,
                "delay: car {car} prefix length excess at {at} is {measured}, expected {expected}"
            ),
            TotalDelay { car, expected, measured } => {
                write!(f, "delay: car {car} carries {measured} detours in total, expected {expected}")
            }
            LateDelay { car } => write!(f, "delay: car {car} has a detour on its horizontal leg"),
            BlockOverflow { car, from, to, count } => {
                write!(f, "block: car {car} has {count} detours between {from} and {to}")
            }
            RoadCount { expected, actual } => {
                write!(f, "size: road counts {actual:?}, expected {expected:?}")
            }
            VehicleCount { expected, actual } => {
                write!(f, "size: {actual} vehicles, expected {expected}")
            }
            PathSize { total, bound } => write!(f, "size: {total} path vertices exceed {bound}"),
            MissingVertex { car, vertex } => write!(f, "path: car {car} never visits {vertex}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub roads: (usize, usize),
    pub total_path_vertices: usize,
    pub collisions: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "reduction n={} roads={}x{} path_vertices={} collisions={}",
            self.n, self.roads.0, self.roads.1, self.total_path_vertices, self.collisions
        )?;
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Start positions of U-shaped detours: three edges whose first and last are
/// antiparallel and whose middle one is perpendicular to them. Matches are
/// taken left to right without overlap, since two adjacent detours enclose
/// an inverted U of their own.
pub fn detour_starts(path: &PathSeq) -> Vec<usize> {
    let vs = path.vertices();
    let step = |a: VertexId, b: VertexId| (b.i as isize - a.i as isize, b.j as isize - a.j as isize);
    let mut starts = Vec::new();
    let mut k = 0;
    while k + 3 < vs.len() {
        let s1 = step(vs[k], vs[k + 1]);
        let s2 = step(vs[k + 1], vs[k + 2]);
        let s3 = step(vs[k + 2], vs[k + 3]);
        if s1 == (-s3.0, -s3.1) && s1.0 * s2.0 + s1.1 * s2.1 == 0 {
            starts.push(k);
            k += 3;
        } else {
            k += 1;
        }
    }
    starts
}

/// Simulates the instance and checks it against its input graph.
pub fn verify_reduction(inst: &ReductionInstance) -> VerificationReport {
    let n = inst.input.n();
    let size = inst.gadget_size();
    let net = inst.tc.network();
    let params = &inst.params;
    let mut violations = Vec::new();

    // conflict graph equals the input, and only at the meeting vertices
    let events = detect_collisions(&inst.tc);
    let mut seen = BTreeSet::new();
    for e in &events {
        let (i, j) = (e.car_a + 1, e.car_b + 1);
        if e.vertex != lift(coarse_collision_vertex(size, i, j)) {
            violations.push(Violation::IncidentalCollision {
                i,
                j,
                vertex: e.vertex,
                time: e.time.clone(),
            });
        }
        seen.insert((i, j));
    }
    for &(i, j) in inst.input.edges() {
        if !seen.contains(&(i, j)) {
            violations.push(Violation::MissingCollision { i, j });
        }
    }
    for &(i, j) in &seen {
        if !inst.input.has_edge(i, j) {
            violations.push(Violation::SpuriousCollision { i, j });
        }
    }

    if inst.tc.len() != n {
        violations.push(Violation::VehicleCount {
            expected: n,
            actual: inst.tc.len(),
        });
        return finish(inst, events.len(), violations);
    }

    // detour counts, measured from path shape and cross-checked by length
    let detours: Vec<Vec<usize>> = inst.tc.vehicles().iter().map(|c| detour_starts(&c.path)).collect();
    let before = |car: usize, pos: usize| detours[car - 1].iter().filter(|&&k| k + 3 <= pos).count();
    let check_length = |car: usize, pos: usize, coarse_distance: i64, count: usize, violations: &mut Vec<Violation>| {
        let vs = &inst.tc.vehicles()[car - 1].path.vertices()[..=pos];
        let prefix = PathSeq::new(vs.to_vec()).expect("non-empty prefix");
        let measured = net.path_length_unchecked(&prefix) - coarse_distance;
        let expected = 2 * params.fine() * count as i64;
        if measured != expected {
            violations.push(Violation::LengthExcess {
                car,
                at: vs[pos],
                expected,
                measured,
            });
        }
    };
    for j in 1..=n {
        let path = &inst.tc.vehicles()[j - 1].path;
        for i in 1..j {
            let vertex = lift(coarse_collision_vertex(size, i, j));
            let Some(pos_j) = path.position(vertex) else {
                violations.push(Violation::MissingVertex { car: j, vertex });
                continue;
            };
            let Some(pos_i) = inst.tc.vehicles()[i - 1].path.position(vertex) else {
                violations.push(Violation::MissingVertex { car: i, vertex });
                continue;
            };
            let measured = before(j, pos_j);
            let expected = if inst.input.has_edge(i, j) { i } else { i - 1 };
            if measured != expected {
                violations.push(Violation::PrefixDelay { i, j, expected, measured });
            }
            let recorded = inst.delay_counts.get(&(i, j)).copied();
            if recorded != Some(measured) {
                violations.push(Violation::RecordedDelay { i, j, recorded, measured });
            }
            let coarse_distance = (i + j - 2) as i64 * params.delta();
            check_length(j, pos_j, coarse_distance, measured, &mut violations);
            check_length(i, pos_i, coarse_distance, before(i, pos_i), &mut violations);
        }
    }

    // c_i carries i detours, all before its horizontal leg (for
    // c_1, before its first meeting vertex)
    for (k, car) in inst.tc.vehicles().iter().enumerate() {
        let label = k + 1;
        let total = detours[k].len();
        if total != label {
            violations.push(Violation::TotalDelay {
                car: label,
                expected: label,
                measured: total,
            });
        }
        let end = if label == 1 {
            lift(VertexId::new(size, 2))
        } else {
            lift(coarse_collision_vertex(size, label, label))
        };
        match car.path.position(end) {
            Some(pos) if before(label, pos) == total => {}
            Some(_) => violations.push(Violation::LateDelay { car: label }),
            None => violations.push(Violation::MissingVertex { car: label, vertex: end }),
        }
    }

    // at most two detours between consecutive coarse vertices
    for (k, car) in inst.tc.vehicles().iter().enumerate() {
        let vs = car.path.vertices();
        let coarse: Vec<usize> = (0..vs.len()).filter(|&p| project(vs[p]).is_some()).collect();
        for w in coarse.windows(2) {
            let count = detours[k].iter().filter(|&&d| d >= w[0] && d < w[1]).count();
            if count > 2 {
                violations.push(Violation::BlockOverflow {
                    car: k + 1,
                    from: vs[w[0]],
                    to: vs[w[1]],
                    count,
                });
            }
        }
    }

    finish(inst, events.len(), violations)
}

fn finish(inst: &ReductionInstance, collisions: usize, mut violations: Vec<Violation>) -> VerificationReport {
    // sizes
    let size = inst.gadget_size();
    let net = inst.tc.network();
    let roads = (net.rows(), net.columns());
    let expected = (10 * size - 4, 5 * size - 4);
    if roads != expected {
        violations.push(Violation::RoadCount { expected, actual: roads });
    }
    let total_path_vertices: usize = inst.tc.vehicles().iter().map(|c| c.path.len()).sum();
    let bound = PATH_VERTEX_FACTOR * size * size;
    if total_path_vertices > bound {
        violations.push(Violation::PathSize {
            total: total_path_vertices,
            bound,
        });
    }
    VerificationReport {
        n: inst.input.n(),
        roads,
        total_path_vertices,
        collisions,
        violations,
    }
}
