//! C ABI over the `ascfs` deciders.
//!
//! Graphs cross the boundary as opaque `AscfsGraph` handles created by one
//! of the constructors and released with [`ascfs_graph_free`]. Every
//! fallible call returns an [`AscfsStatus`]; on failure the message is
//! available from [`ascfs_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ascfs::analytic::{self, ThresholdKind};
use ascfs::{CoxeterLabel, Error, GenSpec, Graph};

/// Opaque graph handle.
pub struct AscfsGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscfsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    Resource = 4,
    Domain = 5,
    Utf8 = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscfsCoxeterLabel {
    ThickOfOrderExactly1 = 0,
    NontrivialJoin = 1,
    Inconclusive = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscfsThresholdKind {
    Connectivity = 0,
    As = 1,
    CfsUpper = 2,
    CfsLower = 3,
    CfsConjectured = 4,
}

impl From<AscfsThresholdKind> for ThresholdKind {
    fn from(k: AscfsThresholdKind) -> Self {
        match k {
            AscfsThresholdKind::Connectivity => ThresholdKind::Connectivity,
            AscfsThresholdKind::As => ThresholdKind::AS,
            AscfsThresholdKind::CfsUpper => ThresholdKind::CfsUpper,
            AscfsThresholdKind::CfsLower => ThresholdKind::CfsLower,
            AscfsThresholdKind::CfsConjectured => ThresholdKind::CfsConjectured,
        }
    }
}

/// Result of the AS decider. `end_a`/`end_b` are meaningful only when
/// `verdict` is true.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct AscfsAsReport {
    pub verdict: bool,
    pub blocks_examined: u64,
    pub end_a: usize,
    pub end_b: usize,
    pub core_size: usize,
}

/// Result of the CFS decider. `support_size` is the size of the covering
/// component (0 when `verdict` is false).
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct AscfsCfsReport {
    pub verdict: bool,
    pub clique_factor_size: usize,
    pub support_size: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AscfsStatus {
    match e {
        Error::InvalidInput(_) | Error::Invariant(_) => AscfsStatus::InvalidInput,
        Error::Parse { .. } => AscfsStatus::Parse,
        Error::Resource(_) | Error::Io(_) => AscfsStatus::Resource,
        Error::Domain(_) => AscfsStatus::Domain,
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), (AscfsStatus, String)>) -> AscfsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AscfsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside ascfs".to_owned());
            AscfsStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (AscfsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (AscfsStatus, String) {
    (AscfsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const AscfsGraph) -> Result<&'a Graph, (AscfsStatus, String)> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (AscfsStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_handle(g: Graph) -> *mut AscfsGraph {
    Box::into_raw(Box::new(AscfsGraph { inner: g }))
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ascfs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Samples G(n, p) with the given seed.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ascfs_graph_generate(
    n: usize,
    p: f64,
    seed: u64,
    out: *mut *mut AscfsGraph,
) -> AscfsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let g = ascfs::generate_gnp(GenSpec::new(n, p, seed)).map_err(lib_err)?;
        write_out(out, into_handle(g), "out")
    })
}

/// Parses the `n m` / `u v` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_graph_parse(text: *const c_char, out: *mut *mut AscfsGraph) -> AscfsStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (AscfsStatus::Utf8, e.to_string()))?;
        let g = ascfs::read_graph(s).map_err(lib_err)?;
        write_out(out, into_handle(g), "out")
    })
}

/// Builds a graph from `m` edges given as `2m` consecutive endpoints.
///
/// # Safety
/// `endpoints` must point to `2 * m` readable values (may be null when
/// `m == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut AscfsGraph,
) -> AscfsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[usize] = if m == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null("endpoints"));
        } else {
            std::slice::from_raw_parts(endpoints, 2 * m)
        };
        let g = Graph::from_edges(n, flat.chunks_exact(2).map(|e| (e[0], e[1]))).map_err(lib_err)?;
        write_out(out, into_handle(g), "out")
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ascfs_graph_free(g: *mut AscfsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ascfs_graph_vertex_count(g: *const AscfsGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.vertex_count())
}

/// Edge count; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ascfs_graph_edge_count(g: *const AscfsGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// Serializes a graph in canonical text form. Free the string with
/// [`ascfs_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_graph_write(g: *const AscfsGraph, out: *mut *mut c_char) -> AscfsStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let text = CString::new(ascfs::write_graph(g)).expect("graph text has no NUL");
        write_out(out, text.into_raw(), "out")
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ascfs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_is_as(g: *const AscfsGraph, out: *mut AscfsAsReport) -> AscfsStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let r = ascfs::is_as(g);
        let mut report = AscfsAsReport {
            verdict: r.verdict,
            blocks_examined: r.blocks_examined,
            ..Default::default()
        };
        if let Some(b) = r.witness {
            report.end_a = b.ends.lo();
            report.end_b = b.ends.hi();
            report.core_size = b.core.len();
        }
        write_out(out, report, "out")
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_is_cfs(g: *const AscfsGraph, out: *mut AscfsCfsReport) -> AscfsStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let mut r = ascfs::is_cfs(g);
        let support_size = match r.witness_component(g) {
            Some(id) => r
                .complex
                .as_ref()
                .and_then(|cx| cx.component(id))
                .map_or(0, |c| c.support.len()),
            None => 0,
        };
        let report = AscfsCfsReport {
            verdict: r.verdict,
            clique_factor_size: r.clique_factor.len(),
            support_size,
        };
        write_out(out, report, "out")
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_largest_support_fraction(g: *const AscfsGraph, out: *mut f64) -> AscfsStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write_out(out, ascfs::largest_support_fraction(g), "out")
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_is_nontrivial_join(g: *const AscfsGraph, out: *mut bool) -> AscfsStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write_out(out, ascfs::is_nontrivial_join(g).is_some(), "out")
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_coxeter_label(g: *const AscfsGraph, out: *mut AscfsCoxeterLabel) -> AscfsStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let label = match ascfs::coxeter_label(g) {
            CoxeterLabel::ThickOfOrderExactly1 => AscfsCoxeterLabel::ThickOfOrderExactly1,
            CoxeterLabel::NontrivialJoin => AscfsCoxeterLabel::NontrivialJoin,
            CoxeterLabel::Inconclusive => AscfsCoxeterLabel::Inconclusive,
        };
        write_out(out, label, "out")
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_contains_clique_of_order(
    g: *const AscfsGraph,
    t: usize,
    out: *mut bool,
) -> AscfsStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write_out(out, ascfs::contains_clique_of_order(g, t), "out")
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_threshold(kind: AscfsThresholdKind, n: usize, out: *mut f64) -> AscfsStatus {
    guard(|| {
        let v = analytic::threshold(kind.into(), n).map_err(lib_err)?;
        write_out(out, v, "out")
    })
}

/// # Safety
/// `lo` and `hi` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ascfs_wilson_interval(
    successes: u64,
    trials: u64,
    confidence: f64,
    lo: *mut f64,
    hi: *mut f64,
) -> AscfsStatus {
    guard(|| {
        if lo.is_null() || hi.is_null() {
            return Err(null("lo/hi"));
        }
        let (a, b) = analytic::wilson_interval(successes, trials, confidence).map_err(lib_err)?;
        write_out(lo, a, "lo")?;
        write_out(hi, b, "hi")
    })
}
