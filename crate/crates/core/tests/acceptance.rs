//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use owrn::connectivity::{boundary_forms_cycle, strongly_connected, with_boundary};
use owrn::kinematics::{conflict_graph, detect_collisions, is_collision_free};
use owrn::model::{integer, Axis, VertexId};
use owrn::reduction::{
    complete_graph_tc, reduce, verify_reduction, ReductionParams, SimpleGraph, PATH_VERTEX_FACTOR,
};
use owrn::shortest_path::{distances_from, perimeter, turn_bounded_distances};
use owrn::solver::{
    bipartite_decomposition, brute_force_mis, max_collision_free_subset, straight_axis, EXACT_CAP,
};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn boundary_sweep() -> Outcome {
    let mut rng = common::rng(1);
    let mut checked = 0;
    for rows in 2..=5 {
        for columns in 2..=5 {
            for tuple in 0..16u8 {
                let boundary = [tuple >> 3 & 1, tuple >> 2 & 1, tuple >> 1 & 1, tuple & 1];
                for _ in 0..50 {
                    let interior_rows = common::bits(&mut rng, rows - 2);
                    let interior_columns = common::bits(&mut rng, columns - 2);
                    let (r, c) = with_boundary(boundary, &interior_rows, &interior_columns);
                    let net = owrn::model::Owrn::from_bits(&r, &c).unwrap();
                    ensure(boundary_forms_cycle(&net) == strongly_connected(&net), || {
                        format!("disagreement on rows {r:?} columns {c:?}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} networks agree"))
}

fn gadget() -> Outcome {
    let params = ReductionParams::default();
    for n in 2..=8 {
        let tc = complete_graph_tc(n, &params).unwrap();
        let events = detect_collisions(&tc);
        ensure(events.len() == n * (n - 1) / 2, || {
            format!("n={n}: {} collisions", events.len())
        })?;
        for e in &events {
            let (i, j) = (e.car_a + 1, e.car_b + 1);
            let expected = VertexId::new(n - i + 1, j);
            ensure(e.vertex == expected, || format!("n={n}: pair ({i},{j}) met at {}", e.vertex))?;
            let distance = (i + j - 2) as i64 * params.delta();
            for car in [i, j] {
                let path = &tc.vehicles()[car - 1].path;
                let pos = path.position(expected).unwrap();
                let prefix = owrn::model::PathSeq::new(path.vertices()[..=pos].to_vec()).unwrap();
                let length = tc.network().path_length(&prefix).unwrap();
                ensure(length == distance, || {
                    format!("n={n}: car {car} reaches {expected} after {length}, expected {distance}")
                })?;
            }
        }
    }
    Ok("n = 2..8 exact".into())
}

fn reduction_exactness(corpus: &[SimpleGraph]) -> Outcome {
    let params = ReductionParams::default();
    for g in corpus {
        let inst = reduce(g, &params).map_err(|e| format!("{g:?}: {e}"))?;
        let report = verify_reduction(&inst);
        ensure(report.passed(), || format!("{g:?}\n{report}"))?;
    }
    Ok(format!("{} graphs verified", corpus.len()))
}

fn end_to_end(corpus: &[SimpleGraph]) -> Outcome {
    let params = ReductionParams::default();
    let mut families = 0;
    for g in corpus {
        let tc = reduce(g, &params).unwrap().tc;
        let conflicts = g.to_conflict_graph();
        let expected = brute_force_mis(&conflicts).unwrap().size;
        let solved = max_collision_free_subset(&tc).map_err(|e| e.to_string())?.size;
        ensure(solved == expected, || format!("{g:?}: solver {solved}, independence number {expected}"))?;
        if g.n() <= 5 {
            for subset in common::subsets(g.n()) {
                let free = is_collision_free(&tc.restrict(&subset));
                ensure(free == conflicts.is_independent(&subset), || {
                    format!("{g:?}: subset {subset:?} collision-free={free}")
                })?;
            }
            families += 1;
        }
    }
    Ok(format!("{} sizes match, {families} subset families match", corpus.len()))
}

fn bipartite() -> Outcome {
    let mut rng = common::rng(5);
    let (mut compared, mut edges) = (0, 0);
    for round in 0..200 {
        let (rows, columns) = (rng.gen_range(3..=10), rng.gen_range(3..=10));
        let net = common::random_network(&mut rng, rows, columns, 1);
        let cars = rng.gen_range(1..=100);
        let tc = common::random_straight_tc(&mut rng, net, cars);
        let axes: Vec<Axis> = tc.vehicles().iter().map(|v| straight_axis(v).unwrap()).collect();
        let graph = conflict_graph(&tc);
        edges += graph.edges().len();
        for &(a, b) in graph.edges() {
            ensure(axes[a] != axes[b], || format!("round {round}: cars {a},{b} share an axis"))?;
        }
        let (solution, konig) = bipartite_decomposition(&tc).map_err(|e| e.to_string())?;
        ensure(konig.matching.len() + solution.size == tc.len(), || {
            format!("round {round}: matching {} + {} != {}", konig.matching.len(), solution.size, tc.len())
        })?;
        let sample: Vec<usize> = (0..tc.len().min(EXACT_CAP)).collect();
        let sub = tc.restrict(&sample);
        let (sub_solution, _) = bipartite_decomposition(&sub).unwrap();
        let brute = brute_force_mis(&conflict_graph(&sub)).unwrap();
        ensure(sub_solution.size == brute.size, || {
            format!("round {round}: bipartite {} vs brute force {}", sub_solution.size, brute.size)
        })?;
        compared += 1;
    }
    Ok(format!("{compared} configurations, {edges} conflict edges"))
}

fn turn_bound() -> Outcome {
    let mut rng = common::rng(6);
    let mut pairs = 0usize;
    for round in 0..100 {
        let (rows, columns) = (rng.gen_range(2..=8), rng.gen_range(2..=8));
        let boundary = if rng.gen_bool(0.5) { [1, 0, 0, 1] } else { [0, 1, 1, 0] };
        let (r, c) = with_boundary(
            boundary,
            &common::bits(&mut rng, rows - 2),
            &common::bits(&mut rng, columns - 2),
        );
        let max_gap = if round % 2 == 0 { 1 } else { 4 };
        let ro = common::offsets(&mut rng, rows, max_gap);
        let co = common::offsets(&mut rng, columns, max_gap);
        let net = common::network(&r, &ro, &c, &co);
        ensure(strongly_connected(&net), || format!("round {round}: not strongly connected"))?;
        let bound = perimeter(&net);
        for source in net.vertices() {
            let exact = distances_from(&net, source);
            let bounded = turn_bounded_distances(&net, source, 4);
            for (k, (d, b)) in exact.iter().zip(&bounded).enumerate() {
                let target = net.vertex_at(k);
                ensure(d == b, || {
                    format!("round {round}: {source} -> {target}: shortest {d:?}, four turns {b:?}")
                })?;
                let d = d.ok_or_else(|| format!("round {round}: {target} unreachable"))?;
                ensure(d <= bound, || format!("round {round}: {source} -> {target} = {d} > {bound}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn complexity_shape() -> Outcome {
    let params = ReductionParams::default();
    let sizes = [4usize, 8, 16, 32];
    let mut points = Vec::new();
    let mut constant: f64 = 0.0;
    for &n in &sizes {
        let g = SimpleGraph::complete(n).unwrap();
        let inst = reduce(&g, &params).unwrap();
        let vertices: usize = inst.tc.vehicles().iter().map(|v| v.path.len()).sum();
        constant = constant.max(vertices as f64 / (n * n) as f64);
        ensure(vertices <= PATH_VERTEX_FACTOR * n * n, || {
            format!("n={n}: {vertices} path vertices > {PATH_VERTEX_FACTOR}n^2")
        })?;
        let mut runs = 0u32;
        let started = Instant::now();
        while runs < 3 || started.elapsed() < Duration::from_millis(200) {
            std::hint::black_box(reduce(&g, &params).unwrap());
            runs += 1;
        }
        let per_run = started.elapsed().as_secs_f64() / runs as f64;
        points.push(((n as f64).ln(), per_run.ln()));
    }
    let k = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / k;
    let slope = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum::<f64>()
        / points.iter().map(|p| (p.0 - mean_x).powi(2)).sum::<f64>();
    ensure(slope <= 2.5, || format!("growth exponent {slope:.2}"))?;
    Ok(format!("growth exponent {slope:.2}, path vertices <= {constant:.2} n^2"))
}

fn scaling() -> Outcome {
    let mut rng = common::rng(8);
    let mut corpus = Vec::new();
    for _ in 0..60 {
        let (rows, columns) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
        let net = common::random_network(&mut rng, rows, columns, 2);
        let cars = rng.gen_range(4..=24);
        corpus.push(common::random_tc(&mut rng, net, cars, 8));
    }
    for n in 2..=5 {
        let g = common::random_graph(&mut rng, n);
        corpus.push(reduce(&g, &ReductionParams::default()).unwrap().tc);
    }
    let mut total = 0;
    for (k, tc) in corpus.iter().enumerate() {
        let events = detect_collisions(tc);
        total += events.len();
        let solution = max_collision_free_subset(tc).unwrap();

        let same_times = common::scaled(tc, 7, 7, 1);
        ensure(detect_collisions(&same_times) == events, || format!("case {k}: events changed"))?;
        ensure(max_collision_free_subset(&same_times).unwrap() == solution, || {
            format!("case {k}: solver output changed")
        })?;

        let stretched = common::scaled(tc, 7, 1, 7);
        let moved = detect_collisions(&stretched);
        let expected: Vec<_> = events
            .iter()
            .map(|e| owrn::kinematics::CollisionEvent {
                time: &e.time * integer(7),
                ..e.clone()
            })
            .collect();
        ensure(moved == expected, || format!("case {k}: stretched events differ"))?;
        ensure(conflict_graph(&stretched) == conflict_graph(tc), || format!("case {k}: graph changed"))?;
        ensure(max_collision_free_subset(&stretched).unwrap() == solution, || {
            format!("case {k}: solver output changed under stretch")
        })?;
    }
    Ok(format!("{} configurations, {total} collision events", corpus.len()))
}

fn main() -> ExitCode {
    let corpus = common::graph_corpus(3);
    let criteria: Vec<Criterion> = vec![
        ("1 boundary cycle iff strongly connected", Duration::from_secs(5), Box::new(boundary_sweep)),
        ("2 complete-graph gadget", Duration::from_secs(1), Box::new(gadget)),
        ("3 reduction exactness", Duration::from_secs(60), Box::new(|| reduction_exactness(&corpus))),
        ("4 subset size equals independence number", Duration::from_secs(120), Box::new(|| end_to_end(&corpus))),
        ("5 bipartite straight-line solver", Duration::from_secs(10), Box::new(bipartite)),
        ("6 four turns suffice, perimeter bound", Duration::from_secs(30), Box::new(turn_bound)),
        ("7 reduction growth", Duration::MAX, Box::new(complexity_shape)),
        ("8 scaling invariance", Duration::from_secs(5), Box::new(scaling)),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= *limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {elapsed:.2?}, limit {limit:.0?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({elapsed:.2?})"),
            Err(reason) => {
                failed += 1;
                println!("FAIL criterion {name}: {reason} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
