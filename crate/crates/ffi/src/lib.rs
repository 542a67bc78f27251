//! C ABI over the `owrn` library.
//!
//! Every function returns an [`OwrnStatus`] and writes results through out
//! pointers. On failure a message is available from [`owrn_last_error`] on
//! the same thread. Handles are opaque and must be released with their
//! matching `*_free` function; strings returned by the library are released
//! with [`owrn_string_free`]. Car indices are 0-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use owrn::connectivity::{boundary_forms_cycle, strongly_connected};
use owrn::io;
use owrn::kinematics::detect_collisions;
use owrn::model::{rational, TrafficConfig, VertexId};
use owrn::reduction::{reduce, verify_reduction, ReductionInstance, ReductionParams};
use owrn::shortest_path::{dijkstra_shortest, turn_bounded_shortest};
use owrn::solver::{max_collision_free_subset_with, Strategy, SubsetSolution};
use owrn::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OwrnStatus {
    Ok = 0,
    NullArg = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    TooLarge = 5,
    NotFound = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OwrnStrategy {
    Auto = 0,
    Exact = 1,
    Bipartite = 2,
}

/// Parsed traffic configuration.
pub struct OwrnScenario(TrafficConfig);

/// Result of a subset solve.
pub struct OwrnSolution(SubsetSolution);

/// Output of the graph-to-scenario construction.
pub struct OwrnReduction(ReductionInstance);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

struct Failure(OwrnStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let status = match err {
            Error::Parse { .. } => OwrnStatus::Parse,
            Error::TooLarge { .. } => OwrnStatus::TooLarge,
            _ => OwrnStatus::Validation,
        };
        Failure(status, err.to_string())
    }
}

fn null(name: &str) -> Failure {
    Failure(OwrnStatus::NullArg, format!("`{name}` is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> OwrnStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => OwrnStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            OwrnStatus::Panic
        }
    }
}

unsafe fn text<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|e| Failure(OwrnStatus::InvalidUtf8, format!("`{name}`: {e}")))
}

unsafe fn handle<'a, T>(ptr: *const T, name: &str) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or_else(|| null(name))
}

unsafe fn put<T>(out: *mut T, value: T, name: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(value: String) -> *mut c_char {
    CString::new(value).expect("reports contain no NUL").into_raw()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into the library on this thread.
#[no_mangle]
pub extern "C" fn owrn_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn owrn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a scenario JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_scenario_parse(json: *const c_char, out: *mut *mut OwrnScenario) -> OwrnStatus {
    guard(|| {
        let json = text(json, "json")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let tc = io::parse_scenario(json)?;
        put(out, Box::into_raw(Box::new(OwrnScenario(tc))), "out")
    })
}

/// # Safety
/// `scenario` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn owrn_scenario_free(scenario: *mut OwrnScenario) {
    if !scenario.is_null() {
        drop(Box::from_raw(scenario));
    }
}

/// Canonical JSON text of the scenario.
///
/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_scenario_to_json(scenario: *const OwrnScenario, out: *mut *mut c_char) -> OwrnStatus {
    guard(|| {
        let s = handle(scenario, "scenario")?;
        put(out, into_c_string(io::write_scenario(&s.0)), "out")
    })
}

/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_scenario_vehicle_count(scenario: *const OwrnScenario, out: *mut usize) -> OwrnStatus {
    guard(|| put(out, handle(scenario, "scenario")?.0.len(), "out"))
}

/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_strongly_connected(scenario: *const OwrnScenario, out: *mut bool) -> OwrnStatus {
    guard(|| put(out, strongly_connected(handle(scenario, "scenario")?.0.network()), "out"))
}

/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_boundary_forms_cycle(scenario: *const OwrnScenario, out: *mut bool) -> OwrnStatus {
    guard(|| put(out, boundary_forms_cycle(handle(scenario, "scenario")?.0.network()), "out"))
}

/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_collision_count(scenario: *const OwrnScenario, out: *mut usize) -> OwrnStatus {
    guard(|| put(out, detect_collisions(&handle(scenario, "scenario")?.0).len(), "out"))
}

/// Collision report as JSON (car labels 1-based, as in the CLI).
///
/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_collisions_json(scenario: *const OwrnScenario, out: *mut *mut c_char) -> OwrnStatus {
    guard(|| {
        let tc = &handle(scenario, "scenario")?.0;
        put(out, into_c_string(io::events_json(tc.len(), &detect_collisions(tc))), "out")
    })
}

/// # Safety
/// `scenario` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_solve(
    scenario: *const OwrnScenario,
    strategy: OwrnStrategy,
    out: *mut *mut OwrnSolution,
) -> OwrnStatus {
    guard(|| {
        let tc = &handle(scenario, "scenario")?.0;
        if out.is_null() {
            return Err(null("out"));
        }
        let strategy = match strategy {
            OwrnStrategy::Auto => Strategy::Auto,
            OwrnStrategy::Exact => Strategy::Exact,
            OwrnStrategy::Bipartite => Strategy::Bipartite,
        };
        let solution = max_collision_free_subset_with(tc, strategy)?;
        put(out, Box::into_raw(Box::new(OwrnSolution(solution))), "out")
    })
}

/// # Safety
/// `solution` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn owrn_solution_free(solution: *mut OwrnSolution) {
    if !solution.is_null() {
        drop(Box::from_raw(solution));
    }
}

/// # Safety
/// `solution` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_solution_size(solution: *const OwrnSolution, out: *mut usize) -> OwrnStatus {
    guard(|| put(out, handle(solution, "solution")?.0.size, "out"))
}

/// Copies up to `capacity` selected car indices into `buffer` and writes the
/// full count to `count`. `buffer` may be NULL when `capacity` is 0.
///
/// # Safety
/// `buffer` must have room for `capacity` elements; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_solution_selected(
    solution: *const OwrnSolution,
    buffer: *mut usize,
    capacity: usize,
    count: *mut usize,
) -> OwrnStatus {
    guard(|| {
        let selected = &handle(solution, "solution")?.0.selected;
        if capacity > 0 && buffer.is_null() {
            return Err(null("buffer"));
        }
        let n = selected.len().min(capacity);
        if n > 0 {
            ptr::copy_nonoverlapping(selected.as_ptr(), buffer, n);
        }
        put(count, selected.len(), "count")
    })
}

/// Shortest path length and turn count between `v(from_i, from_j)` and
/// `v(to_i, to_j)` (1-based). A negative `max_turns` means unbounded.
/// Returns `OWRN_STATUS_NOT_FOUND` when no path exists.
///
/// # Safety
/// `scenario` must be a live handle; `length` and `turns` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_shortest_path(
    scenario: *const OwrnScenario,
    from_i: usize,
    from_j: usize,
    to_i: usize,
    to_j: usize,
    max_turns: i32,
    length: *mut i64,
    turns: *mut usize,
) -> OwrnStatus {
    guard(|| {
        let net = handle(scenario, "scenario")?.0.network();
        if length.is_null() || turns.is_null() {
            return Err(null("length/turns"));
        }
        let (from, to) = (VertexId::new(from_i, from_j), VertexId::new(to_i, to_j));
        net.check_vertex(from)?;
        net.check_vertex(to)?;
        let found = if max_turns < 0 {
            dijkstra_shortest(net, from, to)
        } else {
            turn_bounded_shortest(net, from, to, max_turns as usize)
        };
        let path = found.ok_or_else(|| Failure(OwrnStatus::NotFound, format!("no path from {from} to {to}")))?;
        put(length, path.length, "length")?;
        put(turns, path.turns.len(), "turns")
    })
}

/// Builds the scenario whose conflict graph is the given graph document
/// (`{"n": 3, "edges": [[1, 2]]}`), with road spacing `delta` and speed
/// `omega_num / omega_den`.
///
/// # Safety
/// `graph_json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_reduce(
    graph_json: *const c_char,
    delta: i64,
    omega_num: i64,
    omega_den: i64,
    out: *mut *mut OwrnReduction,
) -> OwrnStatus {
    guard(|| {
        let json = text(graph_json, "graph_json")?;
        if out.is_null() {
            return Err(null("out"));
        }
        if omega_den == 0 {
            return Err(Failure(OwrnStatus::Validation, "omega denominator is zero".into()));
        }
        let graph = io::parse_graph(json)?;
        let params = ReductionParams::new(delta, rational(omega_num, omega_den))?;
        let inst = reduce(&graph, &params)?;
        put(out, Box::into_raw(Box::new(OwrnReduction(inst))), "out")
    })
}

/// # Safety
/// `reduction` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn owrn_reduction_free(reduction: *mut OwrnReduction) {
    if !reduction.is_null() {
        drop(Box::from_raw(reduction));
    }
}

/// Simulates the construction and checks it; on failure the report text is
/// available from `owrn_last_error` and `passed` is false.
///
/// # Safety
/// `reduction` must be a live handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_reduction_verify(reduction: *const OwrnReduction, passed: *mut bool) -> OwrnStatus {
    clear_error();
    let mut report_text = None;
    let status = guard(|| {
        let report = verify_reduction(&handle(reduction, "reduction")?.0);
        if !report.passed() {
            report_text = Some(report.to_string());
        }
        put(passed, report.passed(), "passed")
    });
    if let Some(text) = report_text {
        set_error(text);
    }
    status
}

/// Copy of the generated scenario as a new handle.
///
/// # Safety
/// `reduction` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn owrn_reduction_scenario(
    reduction: *const OwrnReduction,
    out: *mut *mut OwrnScenario,
) -> OwrnStatus {
    guard(|| {
        let tc = handle(reduction, "reduction")?.0.tc.clone();
        put(out, Box::into_raw(Box::new(OwrnScenario(tc))), "out")
    })
}
