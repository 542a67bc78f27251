#![allow(dead_code)]

use owrn::model::{integer, rational, Axis, Direction, Owrn, PathSeq, Rational, Road, TrafficConfig, Vehicle, VertexId};
use owrn::reduction::SimpleGraph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn bits(rng: &mut StdRng, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(0..=1)).collect()
}

/// Strictly increasing offsets with gaps in `1..=max_gap`.
pub fn offsets(rng: &mut StdRng, len: usize, max_gap: i64) -> Vec<i64> {
    let mut at = rng.gen_range(-3..=3);
    (0..len)
        .map(|_| {
            at += rng.gen_range(1..=max_gap);
            at
        })
        .collect()
}

pub fn network(rows: &[u8], row_offsets: &[i64], columns: &[u8], column_offsets: &[i64]) -> Owrn {
    let road = |axis: Axis, bit: u8, offset: i64| Road {
        axis,
        direction: Direction::from_bit(bit).unwrap(),
        offset,
    };
    Owrn::new(
        rows.iter().zip(row_offsets).map(|(&b, &o)| road(Axis::Horizontal, b, o)).collect(),
        columns.iter().zip(column_offsets).map(|(&b, &o)| road(Axis::Vertical, b, o)).collect(),
    )
    .unwrap()
}

pub fn random_network(rng: &mut StdRng, rows: usize, columns: usize, max_gap: i64) -> Owrn {
    let (r, c) = (bits(rng, rows), bits(rng, columns));
    let (ro, co) = (offsets(rng, rows, max_gap), offsets(rng, columns, max_gap));
    network(&r, &ro, &c, &co)
}

pub fn small_rational(rng: &mut StdRng, max: i64) -> Rational {
    rational(rng.gen_range(0..=2 * max), 2)
}

pub fn speed(rng: &mut StdRng) -> Rational {
    [integer(1), integer(1), integer(2), rational(1, 2), rational(3, 2)]
        .choose(rng)
        .unwrap()
        .clone()
}

/// Random walk of `1..=max_edges` edges; `None` from a sink.
pub fn random_walk(rng: &mut StdRng, net: &Owrn, max_edges: usize) -> Option<PathSeq> {
    let mut at = net.vertex_at(rng.gen_range(0..net.vertex_count()));
    let mut vertices = vec![at];
    for _ in 0..rng.gen_range(1..=max_edges) {
        let next: Vec<VertexId> = net.successors(at).collect();
        let Some(&w) = next.choose(rng) else { break };
        vertices.push(w);
        at = w;
    }
    (vertices.len() >= 2).then(|| PathSeq::new(vertices).unwrap())
}

pub fn random_tc(rng: &mut StdRng, net: Owrn, cars: usize, max_edges: usize) -> TrafficConfig {
    let mut vehicles = Vec::new();
    while vehicles.len() < cars {
        if let Some(path) = random_walk(rng, &net, max_edges) {
            vehicles.push(Vehicle::new(small_rational(rng, 4), speed(rng), path).unwrap());
        }
    }
    TrafficConfig::new(net, vehicles).unwrap()
}

/// Cars that each drive along a single road.
pub fn random_straight_tc(rng: &mut StdRng, net: Owrn, cars: usize) -> TrafficConfig {
    let mut vehicles = Vec::new();
    while vehicles.len() < cars {
        let start = net.vertex_at(rng.gen_range(0..net.vertex_count()));
        let horizontal = rng.gen_bool(0.5);
        let mut vertices = vec![start];
        let mut at = start;
        for _ in 0..rng.gen_range(1..=6) {
            let next = net.successors(at).find(|&w| (w.i == at.i) == horizontal);
            let Some(w) = next else { break };
            vertices.push(w);
            at = w;
        }
        if vertices.len() >= 2 {
            let path = PathSeq::new(vertices).unwrap();
            vehicles.push(Vehicle::new(integer(rng.gen_range(0..=6)), integer(1), path).unwrap());
        }
    }
    TrafficConfig::new(net, vehicles).unwrap()
}

/// Multiplies offsets, speeds and start times by the given factors.
pub fn scaled(tc: &TrafficConfig, offsets: i64, speeds: i64, starts: i64) -> TrafficConfig {
    let scale_roads = |roads: &[Road]| {
        roads
            .iter()
            .map(|r| Road {
                offset: r.offset * offsets,
                ..*r
            })
            .collect()
    };
    let net = tc.network();
    let network = Owrn::new(scale_roads(net.horizontal()), scale_roads(net.vertical())).unwrap();
    let vehicles = tc
        .vehicles()
        .iter()
        .map(|v| Vehicle::new(&v.start_time * integer(starts), &v.speed * integer(speeds), v.path.clone()).unwrap())
        .collect();
    TrafficConfig::new(network, vehicles).unwrap()
}

pub fn random_graph(rng: &mut StdRng, n: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    SimpleGraph::new(n, edges).unwrap()
}

/// All graphs on 5 nodes followed by 100 random graphs on 6 to 8 nodes.
pub fn graph_corpus(seed: u64) -> Vec<SimpleGraph> {
    let mut corpus: Vec<SimpleGraph> = (0..1u64 << 10).map(|mask| SimpleGraph::from_mask(5, mask).unwrap()).collect();
    let mut rng = rng(seed);
    for _ in 0..100 {
        let n = rng.gen_range(6..=8);
        corpus.push(random_graph(&mut rng, n));
    }
    corpus
}

/// Every subset of `0..n` as a sorted index list.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1usize << n).map(move |mask| (0..n).filter(|&k| mask >> k & 1 == 1).collect())
}
