//! JSON scenario and graph documents, report serialization and DOT export.
//!
//! Scenario document:
//!
//! ```json
//! {
//!   "roads": {
//!     "horizontal": [{"dir": 1, "offset": 0}, {"dir": 0, "offset": 1}],
//!     "vertical":   [{"dir": 0, "offset": 0}, {"dir": 1, "offset": 1}]
//!   },
//!   "vehicles": [{"start_time": "0", "speed": "1/2", "path": [[1, 1], [1, 2]]}]
//! }
//! ```
//!
//! Rationals are written as strings (`"3"`, `"1/2"`); plain JSON integers are
//! accepted on input. Path indices refer to roads after sorting by offset.
//! Car labels in every report are 1-based.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kinematics::{CollisionEvent, ConflictGraph};
use crate::model::{
    format_rational, parse_rational, Axis, Direction, Owrn, PathSeq, Rational, Road, TrafficConfig, Vehicle,
    VertexId,
};
use crate::reduction::{SimpleGraph, VerificationReport};
use crate::shortest_path::{Turn, TurnPath};
use crate::solver::SubsetSolution;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDoc {
    pub roads: RoadsDoc,
    #[serde(default)]
    pub vehicles: Vec<VehicleDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoadsDoc {
    pub horizontal: Vec<RoadDoc>,
    pub vertical: Vec<RoadDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoadDoc {
    pub dir: u8,
    pub offset: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VehicleDoc {
    pub start_time: RationalDoc,
    pub speed: RationalDoc,
    pub path: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalDoc {
    Integer(i64),
    Text(String),
}

impl RationalDoc {
    fn to_rational(&self, context: &str) -> Result<Rational> {
        match self {
            RationalDoc::Integer(v) => Ok(crate::model::integer(*v)),
            RationalDoc::Text(s) => {
                parse_rational(s).ok_or_else(|| Error::parse(context, format!("`{s}` is not a rational")))
            }
        }
    }
}

impl From<&Rational> for RationalDoc {
    fn from(value: &Rational) -> Self {
        RationalDoc::Text(format_rational(value))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

fn json_error(err: serde_json::Error) -> Error {
    Error::parse(
        format!("line {} column {}", err.line(), err.column()),
        err.to_string(),
    )
}

impl ScenarioDoc {
    pub fn from_tc(tc: &TrafficConfig) -> ScenarioDoc {
        let road = |r: &Road| RoadDoc {
            dir: r.direction.bit(),
            offset: r.offset,
        };
        let net = tc.network();
        ScenarioDoc {
            roads: RoadsDoc {
                horizontal: net.horizontal().iter().map(road).collect(),
                vertical: net.vertical().iter().map(road).collect(),
            },
            vehicles: tc
                .vehicles()
                .iter()
                .map(|v| VehicleDoc {
                    start_time: (&v.start_time).into(),
                    speed: (&v.speed).into(),
                    path: v.path.vertices().iter().map(|p| [p.i, p.j]).collect(),
                })
                .collect(),
        }
    }

    pub fn network(&self) -> Result<Owrn> {
        let family = |docs: &[RoadDoc], axis: Axis, name: &str| -> Result<Vec<Road>> {
            docs.iter()
                .enumerate()
                .map(|(k, d)| {
                    let direction = Direction::from_bit(d.dir)
                        .ok_or_else(|| Error::parse(format!("roads.{name}[{k}].dir"), "must be 0 or 1"))?;
                    Ok(Road {
                        axis,
                        direction,
                        offset: d.offset,
                    })
                })
                .collect()
        };
        Owrn::new(
            family(&self.roads.horizontal, Axis::Horizontal, "horizontal")?,
            family(&self.roads.vertical, Axis::Vertical, "vertical")?,
        )
    }

    pub fn to_tc(&self) -> Result<TrafficConfig> {
        let network = self.network()?;
        let vehicles = self
            .vehicles
            .iter()
            .enumerate()
            .map(|(k, doc)| {
                let start = doc.start_time.to_rational(&format!("vehicles[{k}].start_time"))?;
                let speed = doc.speed.to_rational(&format!("vehicles[{k}].speed"))?;
                let path = PathSeq::new(doc.path.iter().map(|&[i, j]| VertexId::new(i, j)).collect())
                    .map_err(|_| Error::parse(format!("vehicles[{k}].path"), "path is empty"))?;
                Vehicle::new(start, speed, path)
            })
            .collect::<Result<Vec<_>>>()?;
        TrafficConfig::new(network, vehicles)
    }
}

pub fn parse_scenario_doc(text: &str) -> Result<ScenarioDoc> {
    serde_json::from_str(text).map_err(json_error)
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<TrafficConfig> {
    parse_scenario_doc(text)?.to_tc()
}

/// Network part of a scenario; vehicles are ignored.
pub fn parse_network(text: &str) -> Result<Owrn> {
    parse_scenario_doc(text)?.network()
}

/// Canonical scenario text (sorted roads, rationals in lowest terms).
pub fn write_scenario(tc: &TrafficConfig) -> String {
    to_pretty(&ScenarioDoc::from_tc(tc))
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(json_error)?;
    SimpleGraph::new(doc.n, doc.edges.iter().map(|&[a, b]| (a, b)))
}

pub fn write_graph(graph: &SimpleGraph) -> String {
    to_pretty(&GraphDoc {
        n: graph.n(),
        edges: graph.edges().iter().map(|&(a, b)| [a, b]).collect(),
    })
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

#[derive(Debug, Serialize)]
struct EventDoc {
    car_a: usize,
    car_b: usize,
    vertex: [usize; 2],
    time: String,
}

#[derive(Debug, Serialize)]
struct EventsDoc {
    cars: usize,
    collision_free: bool,
    events: Vec<EventDoc>,
}

pub fn events_json(cars: usize, events: &[CollisionEvent]) -> String {
    to_pretty(&EventsDoc {
        cars,
        collision_free: events.is_empty(),
        events: events
            .iter()
            .map(|e| EventDoc {
                car_a: e.car_a + 1,
                car_b: e.car_b + 1,
                vertex: [e.vertex.i, e.vertex.j],
                time: format_rational(&e.time),
            })
            .collect(),
    })
}

pub fn events_text(cars: usize, events: &[CollisionEvent]) -> String {
    let mut out = format!("{cars} cars, {} collisions\n", events.len());
    for e in events {
        let _ = writeln!(
            out,
            "t={} {} c{} x c{}",
            format_rational(&e.time),
            e.vertex,
            e.car_a + 1,
            e.car_b + 1
        );
    }
    out
}

#[derive(Debug, Serialize)]
struct SolutionDoc<'a> {
    method: &'a str,
    size: usize,
    selected: Vec<usize>,
}

pub fn solution_json(solution: &SubsetSolution) -> String {
    to_pretty(&SolutionDoc {
        method: solution.method.as_str(),
        size: solution.size,
        selected: solution.selected.iter().map(|c| c + 1).collect(),
    })
}

#[derive(Debug, Serialize)]
struct VerificationDoc {
    passed: bool,
    n: usize,
    roads: [usize; 2],
    path_vertices: usize,
    collisions: usize,
    violations: Vec<String>,
}

pub fn verification_json(report: &VerificationReport) -> String {
    to_pretty(&VerificationDoc {
        passed: report.passed(),
        n: report.n,
        roads: [report.roads.0, report.roads.1],
        path_vertices: report.total_path_vertices,
        collisions: report.collisions,
        violations: report.violations.iter().map(|v| v.to_string()).collect(),
    })
}

pub fn verification_text(report: &VerificationReport) -> String {
    format!("{report}\n")
}

#[derive(Debug, Serialize)]
struct TurnPathDoc {
    length: i64,
    turns: Vec<&'static str>,
    path: Vec<[usize; 2]>,
}

pub fn turn_path_json(path: &TurnPath) -> String {
    to_pretty(&TurnPathDoc {
        length: path.length,
        turns: path
            .turns
            .iter()
            .map(|t| match t {
                Turn::Left => "left",
                Turn::Right => "right",
            })
            .collect(),
        path: path.path.vertices().iter().map(|v| [v.i, v.j]).collect(),
    })
}

/// Conflict graph as an undirected DOT graph, cars labelled `c1..ck`.
pub fn conflict_dot(graph: &ConflictGraph) -> String {
    let mut out = String::from("graph conflicts {\n");
    for v in 0..graph.node_count() {
        let _ = writeln!(out, "  c{};", v + 1);
    }
    for &(a, b) in graph.edges() {
        let _ = writeln!(out, "  c{} -- c{};", a + 1, b + 1);
    }
    out.push_str("}\n");
    out
}

/// Network as a directed DOT graph with pinned vertex positions.
pub fn network_dot(net: &Owrn) -> String {
    let mut out = String::from("digraph owrn {\n  node [shape=point];\n");
    for v in net.vertices() {
        let (x, y) = net.position(v);
        let _ = writeln!(out, "  v{}_{} [pos=\"{x},{y}!\" label=\"{v}\"];", v.i, v.j);
    }
    for v in net.vertices() {
        for w in net.successors(v) {
            let _ = writeln!(out, "  v{}_{} -> v{}_{};", v.i, v.j, w.i, w.j);
        }
    }
    out.push_str("}\n");
    out
}
