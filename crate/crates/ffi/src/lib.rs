//! C ABI over `graphcurve`.
//!
//! Graphs and tables cross the boundary as opaque handles that must be
//! released with their `_free` function. Every fallible call returns a
//! [`GcStatus`]; on failure a description is available from
//! [`gc_last_error`] until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use graphcurve::formula::table_for_graph;
use graphcurve::graph::validate_assumption;
use graphcurve::oracle::{oracle_for_graph, OracleOptions};
use graphcurve::{BettiTable, FieldConfig, FormulaError, Graph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGraph = 3,
    NoClosedForm = 4,
    OracleFailed = 5,
    Panic = 6,
}

/// Opaque graph handle.
pub struct GcGraph(Graph);

/// Opaque Betti table handle.
pub struct GcTable(BettiTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: GcStatus, msg: impl Into<String>) -> GcStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> GcStatus) -> GcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(GcStatus::Panic, "internal panic"),
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn gc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`
/// (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be NULL
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_new(
    vertex_count: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut GcGraph,
) -> GcStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return fail(GcStatus::NullPointer, "null pointer argument");
        }
        let flat = if edge_count == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        match Graph::new(vertex_count, &pairs) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(GcGraph(g)));
                GcStatus::Ok
            }
            Err(e) => fail(GcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Parses a graph from JSON (`{"vertices": d, "edges": [[u, v], ...]}`) or
/// an edge list with one `u v` pair per line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_parse(text: *const c_char, out: *mut *mut GcGraph) -> GcStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(GcStatus::NullPointer, "null pointer argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(GcStatus::InvalidArgument, "graph text is not UTF-8");
        };
        match Graph::parse(s) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(GcGraph(g)));
                GcStatus::Ok
            }
            Err(e) => fail(GcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_free(g: *mut GcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_vertex_count(g: *const GcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_edge_count(g: *const GcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Writes whether the graph meets every standing assumption.
///
/// # Safety
/// `g` must be a live graph handle and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_validate(g: *const GcGraph, valid: *mut bool) -> GcStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), valid.is_null()) else {
            return fail(GcStatus::NullPointer, "null pointer argument");
        };
        let report = validate_assumption(&g.0);
        *valid = report.passes();
        if !report.passes() {
            set_error(report.failures().join("; "));
        }
        GcStatus::Ok
    })
}

/// Closed-form Betti table. Fails with `NoClosedForm` for graphs of genus at
/// least two that are not trees of cycles.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_formula_table(g: *const GcGraph, out: *mut *mut GcTable) -> GcStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(GcStatus::NullPointer, "null pointer argument");
        };
        match table_for_graph(&g.0, None) {
            Ok((t, _)) => {
                *out = Box::into_raw(Box::new(GcTable(t)));
                GcStatus::Ok
            }
            Err(e @ FormulaError::CubicStrandUnknown { .. }) => fail(GcStatus::NoClosedForm, e.to_string()),
            Err(e @ FormulaError::InvalidGraph(_)) => fail(GcStatus::InvalidGraph, e.to_string()),
            Err(e) => fail(GcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Exact Betti table over F_p. `prime` 0 selects the default (32003).
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gc_oracle_table(g: *const GcGraph, prime: u64, seed: u64, out: *mut *mut GcTable) -> GcStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(GcStatus::NullPointer, "null pointer argument");
        };
        let report = validate_assumption(&g.0);
        if !report.passes() {
            return fail(GcStatus::InvalidGraph, report.failures().join("; "));
        }
        let mut cfg = FieldConfig::default().with_seed(seed);
        if prime != 0 {
            cfg.p = prime;
        }
        match oracle_for_graph(&g.0, &cfg, &OracleOptions::default()) {
            Ok((_, t)) => {
                *out = Box::into_raw(Box::new(GcTable(t)));
                GcStatus::Ok
            }
            Err(e) => fail(GcStatus::OracleFailed, e.to_string()),
        }
    })
}

/// Ambient dimension `n` of the table's curve.
///
/// # Safety
/// `t` must be a live table handle.
#[no_mangle]
pub unsafe extern "C" fn gc_table_n(t: *const GcTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.n)
}

/// `b_{i,j}`; zero outside the table.
///
/// # Safety
/// `t` must be a live table handle.
#[no_mangle]
pub unsafe extern "C" fn gc_table_get(t: *const GcTable, i: usize, j: usize) -> u64 {
    t.as_ref().map_or(0, |t| t.0.get(i, j))
}

/// Column total `sum_j b_{i,j}`.
///
/// # Safety
/// `t` must be a live table handle.
#[no_mangle]
pub unsafe extern "C" fn gc_table_total(t: *const GcTable, i: usize) -> u64 {
    t.as_ref().map_or(0, |t| t.0.total(i))
}

/// Table as JSON; release with [`gc_string_free`]. NULL on failure.
///
/// # Safety
/// `t` must be a live table handle.
#[no_mangle]
pub unsafe extern "C" fn gc_table_to_json(t: *const GcTable) -> *mut c_char {
    t.as_ref()
        .and_then(|t| CString::new(t.0.to_json()).ok())
        .map_or(ptr::null_mut(), CString::into_raw)
}

/// Table in the text layout (zeros as `-`, totals row `T`); release with
/// [`gc_string_free`].
///
/// # Safety
/// `t` must be a live table handle.
#[no_mangle]
pub unsafe extern "C" fn gc_table_render(t: *const GcTable) -> *mut c_char {
    t.as_ref()
        .and_then(|t| CString::new(t.0.render_text()).ok())
        .map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `t` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_table_free(t: *mut GcTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
