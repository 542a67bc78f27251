//! Network model: roads, the directed grid they form, vehicle paths and
//! exact arrival schedules.
//!
//! Vertices are addressed as `v(i, j)`: `i` indexes the horizontal roads
//! (rows, sorted by offset) and `j` the vertical roads (columns), both 1-based.
//! The vertex `v(i, j)` sits at `(x, y) = (offset(Y_j), offset(X_i))`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational used for every time and speed.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    Horizontal,
    Vertical,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::Horizontal => Axis::Vertical,
            Axis::Vertical => Axis::Horizontal,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Horizontal => f.write_str("horizontal"),
            Axis::Vertical => f.write_str("vertical"),
        }
    }
}

/// Travel direction along a road. `Negative` is direction bit 0
/// (toward the negative axis), `Positive` is bit 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Negative,
    Positive,
}

impl Direction {
    pub fn from_bit(bit: u8) -> Option<Direction> {
        match bit {
            0 => Some(Direction::Negative),
            1 => Some(Direction::Positive),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Direction::Negative => 0,
            Direction::Positive => 1,
        }
    }

    pub fn flipped(self) -> Direction {
        match self {
            Direction::Negative => Direction::Positive,
            Direction::Positive => Direction::Negative,
        }
    }

    /// Index step taken when moving along a road in this direction.
    fn step(self) -> isize {
        match self {
            Direction::Negative => -1,
            Direction::Positive => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Road {
    pub axis: Axis,
    pub direction: Direction,
    pub offset: i64,
}

impl Road {
    pub fn horizontal(direction: Direction, offset: i64) -> Road {
        Road {
            axis: Axis::Horizontal,
            direction,
            offset,
        }
    }

    pub fn vertical(direction: Direction, offset: i64) -> Road {
        Road {
            axis: Axis::Vertical,
            direction,
            offset,
        }
    }
}

/// Intersection of horizontal road `i` and vertical road `j` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub i: usize,
    pub j: usize,
}

impl VertexId {
    pub const fn new(i: usize, j: usize) -> VertexId {
        VertexId { i, j }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({},{})", self.i, self.j)
    }
}

/// A one-way road network: `n` horizontal and `m` vertical roads, each
/// family sorted by strictly increasing offset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Owrn {
    horizontal: Vec<Road>,
    vertical: Vec<Road>,
}

impl Owrn {
    /// Validates and canonicalizes the two road families.
    pub fn new(horizontal: Vec<Road>, vertical: Vec<Road>) -> Result<Owrn> {
        let horizontal = canonical_family(horizontal, Axis::Horizontal)?;
        let vertical = canonical_family(vertical, Axis::Vertical)?;
        Ok(Owrn {
            horizontal,
            vertical,
        })
    }

    /// Network with unit spacing built from direction bits, rows first.
    pub fn from_bits(rows: &[u8], columns: &[u8]) -> Result<Owrn> {
        let family = |bits: &[u8], axis: Axis| -> Result<Vec<Road>> {
            bits.iter()
                .enumerate()
                .map(|(k, &b)| {
                    let direction = Direction::from_bit(b).ok_or_else(|| {
                        Error::parse(format!("{axis} road {}", k + 1), "direction must be 0 or 1")
                    })?;
                    Ok(Road {
                        axis,
                        direction,
                        offset: k as i64,
                    })
                })
                .collect()
        };
        Owrn::new(
            family(rows, Axis::Horizontal)?,
            family(columns, Axis::Vertical)?,
        )
    }

    pub fn rows(&self) -> usize {
        self.horizontal.len()
    }

    pub fn columns(&self) -> usize {
        self.vertical.len()
    }

    pub fn horizontal(&self) -> &[Road] {
        &self.horizontal
    }

    pub fn vertical(&self) -> &[Road] {
        &self.vertical
    }

    /// Horizontal road `X_i` (1-based).
    pub fn row(&self, i: usize) -> &Road {
        &self.horizontal[i - 1]
    }

    /// Vertical road `Y_j` (1-based).
    pub fn column(&self, j: usize) -> &Road {
        &self.vertical[j - 1]
    }

    pub fn vertex_count(&self) -> usize {
        self.rows() * self.columns()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (1..=self.rows()).contains(&v.i) && (1..=self.columns()).contains(&v.j)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// Geometric position `(x, y)`.
    pub fn position(&self, v: VertexId) -> (i64, i64) {
        (self.column(v.j).offset, self.row(v.i).offset)
    }

    /// Dense index in `0..vertex_count()`, row-major.
    pub fn index_of(&self, v: VertexId) -> usize {
        (v.i - 1) * self.columns() + (v.j - 1)
    }

    pub fn vertex_at(&self, index: usize) -> VertexId {
        VertexId::new(index / self.columns() + 1, index % self.columns() + 1)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (1..=self.rows()).flat_map(move |i| (1..=self.columns()).map(move |j| VertexId::new(i, j)))
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        v.i == 1 || v.i == self.rows() || v.j == 1 || v.j == self.columns()
    }

    /// True iff `u` and `v` are consecutive on one road and that road
    /// points from `u` to `v`.
    pub fn has_directed_edge(&self, u: VertexId, v: VertexId) -> bool {
        if !self.contains(u) || !self.contains(v) {
            return false;
        }
        if u.i == v.i {
            let step = self.row(u.i).direction.step();
            v.j as isize - u.j as isize == step
        } else if u.j == v.j {
            let step = self.column(u.j).direction.step();
            v.i as isize - u.i as isize == step
        } else {
            false
        }
    }

    /// Successors of `v`: at most one along its row and one along its column.
    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let along_row = offset_index(v.j, self.row(v.i).direction.step(), self.columns())
            .map(|j| VertexId::new(v.i, j));
        let along_column = offset_index(v.i, self.column(v.j).direction.step(), self.rows())
            .map(|i| VertexId::new(i, v.j));
        along_row.into_iter().chain(along_column)
    }

    pub fn predecessors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let along_row = offset_index(v.j, -self.row(v.i).direction.step(), self.columns())
            .map(|j| VertexId::new(v.i, j));
        let along_column = offset_index(v.i, -self.column(v.j).direction.step(), self.rows())
            .map(|i| VertexId::new(i, v.j));
        along_row.into_iter().chain(along_column)
    }

    /// Length of the (adjacent) edge `u -> v`; caller guarantees adjacency.
    pub fn edge_length(&self, u: VertexId, v: VertexId) -> i64 {
        let (ux, uy) = self.position(u);
        let (vx, vy) = self.position(v);
        (ux - vx).abs() + (uy - vy).abs()
    }

    /// Axis of the road carrying the edge `u -> v`.
    pub fn edge_axis(u: VertexId, v: VertexId) -> Axis {
        if u.i == v.i {
            Axis::Horizontal
        } else {
            Axis::Vertical
        }
    }

    /// Checks every consecutive pair of `path` against the network.
    pub fn validate_path(&self, path: &PathSeq) -> Result<()> {
        for &v in path.vertices() {
            self.check_vertex(v)?;
        }
        for (index, pair) in path.vertices().windows(2).enumerate() {
            if !self.has_directed_edge(pair[0], pair[1]) {
                return Err(Error::BrokenEdge {
                    index,
                    from: pair[0],
                    to: pair[1],
                });
            }
        }
        Ok(())
    }

    pub fn path_length(&self, path: &PathSeq) -> Result<i64> {
        self.validate_path(path)?;
        Ok(self.path_length_unchecked(path))
    }

    pub(crate) fn path_length_unchecked(&self, path: &PathSeq) -> i64 {
        path.vertices()
            .windows(2)
            .map(|w| self.edge_length(w[0], w[1]))
            .sum()
    }

    /// Times at which `vehicle` occupies each vertex of its path, with the
    /// axis it arrives on (the first vertex takes the axis of the first edge).
    pub fn arrival_schedule(&self, vehicle: &Vehicle) -> Result<Vec<Arrival>> {
        self.validate_path(&vehicle.path)?;
        let vertices = vehicle.path.vertices();
        if vertices.len() < 2 {
            return Err(Error::DegeneratePath);
        }
        let mut schedule = Vec::with_capacity(vertices.len());
        schedule.push(Arrival {
            vertex: vertices[0],
            time: vehicle.start_time.clone(),
            axis: Owrn::edge_axis(vertices[0], vertices[1]),
        });
        let mut travelled = 0i64;
        for w in vertices.windows(2) {
            travelled += self.edge_length(w[0], w[1]);
            schedule.push(Arrival {
                vertex: w[1],
                time: &vehicle.start_time + integer(travelled) / &vehicle.speed,
                axis: Owrn::edge_axis(w[0], w[1]),
            });
        }
        Ok(schedule)
    }
}

fn offset_index(index: usize, step: isize, len: usize) -> Option<usize> {
    let next = index as isize + step;
    (next >= 1 && next as usize <= len).then_some(next as usize)
}

fn canonical_family(mut roads: Vec<Road>, axis: Axis) -> Result<Vec<Road>> {
    if let Some(road) = roads.iter().find(|r| r.axis != axis) {
        return Err(Error::AxisMismatch {
            expected: axis,
            found: road.axis,
        });
    }
    if roads.len() < 2 {
        return Err(Error::TooFewRoads {
            axis,
            count: roads.len(),
        });
    }
    roads.sort_by_key(|r| r.offset);
    if let Some(w) = roads.windows(2).find(|w| w[0].offset == w[1].offset) {
        return Err(Error::DuplicateOffset {
            axis,
            offset: w[0].offset,
        });
    }
    Ok(roads)
}

/// Ordered list of vertices travelled by a vehicle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathSeq(Vec<VertexId>);

impl PathSeq {
    pub fn new(vertices: Vec<VertexId>) -> Result<PathSeq> {
        if vertices.is_empty() {
            return Err(Error::EmptyPath);
        }
        Ok(PathSeq(vertices))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.0.iter().position(|&w| w == v)
    }

    pub(crate) fn vertices_mut(&mut self) -> &mut Vec<VertexId> {
        &mut self.0
    }
}

impl From<PathSeq> for Vec<VertexId> {
    fn from(path: PathSeq) -> Self {
        path.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vehicle {
    pub start_time: Rational,
    pub speed: Rational,
    pub path: PathSeq,
}

impl Vehicle {
    pub fn new(start_time: Rational, speed: Rational, path: PathSeq) -> Result<Vehicle> {
        if !speed.is_positive() {
            return Err(Error::NonPositiveSpeed);
        }
        Ok(Vehicle {
            start_time,
            speed,
            path,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrival {
    pub vertex: VertexId,
    pub time: Rational,
    pub axis: Axis,
}

/// A network together with its vehicles; car identity is the index into
/// `vehicles` (0-based in the API, printed 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrafficConfig {
    network: Owrn,
    vehicles: Vec<Vehicle>,
}

impl TrafficConfig {
    pub fn new(network: Owrn, vehicles: Vec<Vehicle>) -> Result<TrafficConfig> {
        for vehicle in &vehicles {
            network.validate_path(&vehicle.path)?;
            if vehicle.path.len() < 2 {
                return Err(Error::DegeneratePath);
            }
        }
        Ok(TrafficConfig { network, vehicles })
    }

    pub fn network(&self) -> &Owrn {
        &self.network
    }

    pub fn vehicles(&self) -> &[Vehicle] {
        &self.vehicles
    }

    pub fn len(&self) -> usize {
        self.vehicles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vehicles.is_empty()
    }

    /// Sub-configuration keeping only `cars`, in the given order.
    pub fn restrict(&self, cars: &[usize]) -> TrafficConfig {
        TrafficConfig {
            network: self.network.clone(),
            vehicles: cars.iter().map(|&c| self.vehicles[c].clone()).collect(),
        }
    }

    pub fn schedules(&self) -> Vec<Vec<Arrival>> {
        self.vehicles
            .iter()
            .map(|v| {
                self.network
                    .arrival_schedule(v)
                    .expect("vehicles are validated on construction")
            })
            .collect()
    }

    pub(crate) fn into_parts(self) -> (Owrn, Vec<Vehicle>) {
        (self.network, self.vehicles)
    }
}
