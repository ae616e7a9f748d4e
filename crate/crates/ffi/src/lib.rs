//! C ABI for `dismantle`.
//!
//! Objects cross the boundary as opaque handles created by `*_parse` or
//! `dm_graph_named` and released with the matching `*_free`. Every fallible
//! call returns a [`DmStatus`]; on failure `dm_last_error` describes the
//! problem until the next call on the same thread. Strings returned through
//! `char **` out-parameters are owned by the caller and released with
//! `dm_string_free`. Certificates and reports are JSON.
//!
//! All pointer arguments must be null or valid for the access described;
//! strings must be NUL-terminated UTF-8.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};

use dismantle::functors::{self, Object};
use dismantle::{graph, hom, hom_complex, poset, simplicial, text};
use dismantle::{Budget, Certificate, Error, Graph, Mode, Poset, SimplicialComplex};
use serde_json::json;

/// Result of a call. `DM_STATUS_NO` is a definite negative answer, not an
/// error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DmStatus {
    Ok = 0,
    No = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    UnknownElement = 4,
    SameElement = 5,
    Parse = 6,
    Validation = 7,
    NotDominated = 8,
    IllegalStep = 9,
    StaleCertificate = 10,
    WrongCategory = 11,
    Budget = 12,
    Precondition = 13,
    Input = 14,
    Internal = 15,
    Panic = 16,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DmMode {
    Strict = 0,
    Weak = 1,
}

/// Limits for the exponential enumerations. A null `const DmBudget *`
/// means the defaults.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct DmBudget {
    pub max_cliques: u64,
    pub max_morphisms: u64,
    pub max_iso_nodes: u64,
}

pub struct DmGraph(Graph);
pub struct DmPoset(Poset);
pub struct DmComplex(SimplicialComplex);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(DmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::UnknownElement(_) => DmStatus::UnknownElement,
            Error::SameElement(_) => DmStatus::SameElement,
            Error::Parse { .. } => DmStatus::Parse,
            Error::Validation(_) => DmStatus::Validation,
            Error::NotDominated { .. } => DmStatus::NotDominated,
            Error::IllegalStep { .. } => DmStatus::IllegalStep,
            Error::StaleCertificate { .. } => DmStatus::StaleCertificate,
            Error::WrongCategory { .. } => DmStatus::WrongCategory,
            Error::Budget { .. } => DmStatus::Budget,
            Error::Precondition(_) => DmStatus::Precondition,
            Error::Input(_) => DmStatus::Input,
            Error::Internal(_) => DmStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

type Outcome = Result<DmStatus, Failure>;

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Outcome) -> DmStatus {
    set_error("");
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside dismantle");
            DmStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(DmStatus::NullArgument, "null argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(DmStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

/// Hands a new handle to the caller, checking `out` before allocating.
unsafe fn give<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(DmStatus::Internal, "string contains NUL".into()))?;
    if out.is_null() {
        return Err(null());
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn budget_arg(b: *const DmBudget) -> Budget {
    match b.as_ref() {
        Some(b) => Budget { max_cliques: b.max_cliques, max_morphisms: b.max_morphisms, max_iso_nodes: b.max_iso_nodes },
        None => Budget::default(),
    }
}

fn core_report(elements: &[dismantle::Label], cert: &Certificate) -> String {
    let elements: Vec<&str> = elements.iter().map(|l| l.as_str()).collect();
    json!({ "core_elements": elements, "certificate": cert }).to_string()
}

/// Replays `cert_json`; on an illegal step writes its index to `out_step`
/// (if non-null) and returns `DM_STATUS_ILLEGAL_STEP`.
unsafe fn verify_with(cert_json: *const c_char, out_step: *mut usize, replay: impl FnOnce(&Certificate) -> dismantle::Result<()>) -> Outcome {
    let cert = Certificate::from_json(str_arg(cert_json)?)?;
    match replay(&cert) {
        Ok(()) => Ok(DmStatus::Ok),
        Err(Error::IllegalStep { step, reason }) => {
            if !out_step.is_null() {
                out_step.write(step);
            }
            Err(Failure(DmStatus::IllegalStep, format!("certificate rejected at step {step}: {reason}")))
        }
        Err(e) => Err(e.into()),
    }
}

fn functor_report(name: &str, input: &Object, budget: &Budget) -> dismantle::Result<String> {
    let image = functors::apply(name, input, budget)?;
    let members: Vec<_> = image
        .members
        .iter()
        .map(|(l, m)| json!({ "element": l.as_str(), "members": m.iter().map(|x| x.as_str()).collect::<Vec<_>>() }))
        .collect();
    Ok(json!({ "category": image.object.category_name(), "text": image.object.to_text(), "correspondence": members }).to_string())
}

// ---------- misc ----------

#[no_mangle]
pub extern "C" fn dm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn dm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub unsafe extern "C" fn dm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn dm_budget_default() -> DmBudget {
    let b = Budget::default();
    DmBudget { max_cliques: b.max_cliques, max_morphisms: b.max_morphisms, max_iso_nodes: b.max_iso_nodes }
}

// ---------- graphs ----------

#[no_mangle]
pub unsafe extern "C" fn dm_graph_parse(text: *const c_char, out: *mut *mut DmGraph) -> DmStatus {
    guard(|| {
        let g = text::parse_graph(str_arg(text)?)?;
        give(out, DmGraph(g))?;
        Ok(DmStatus::Ok)
    })
}

/// Builds a graph from a name such as `P3`, `K4`, `C5°` or `C5o`.
#[no_mangle]
pub unsafe extern "C" fn dm_graph_named(name: *const c_char, out: *mut *mut DmGraph) -> DmStatus {
    guard(|| {
        let g = Graph::named(str_arg(name)?)?;
        give(out, DmGraph(g))?;
        Ok(DmStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dm_graph_free(g: *mut DmGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn dm_graph_vertex_count(g: *const DmGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn dm_graph_to_text(g: *const DmGraph, out: *mut *mut c_char) -> DmStatus {
    guard(|| {
        write_string(out, handle(g)?.0.to_text())?;
        Ok(DmStatus::Ok)
    })
}

/// Whether `N(x) ⊆ N(a)`.
#[no_mangle]
pub unsafe extern "C" fn dm_graph_dominates(g: *const DmGraph, a: *const c_char, x: *const c_char, out: *mut bool) -> DmStatus {
    guard(|| {
        let yes = graph::dominates(&handle(g)?.0, str_arg(a)?, str_arg(x)?)?;
        write(out, yes)?;
        Ok(DmStatus::Ok)
    })
}

/// Writes `{"core_elements": [...], "certificate": {...}}`.
#[no_mangle]
pub unsafe extern "C" fn dm_graph_core(g: *const DmGraph, out_json: *mut *mut c_char) -> DmStatus {
    guard(|| {
        let (core, cert) = graph::dismantle_core(&handle(g)?.0);
        write_string(out_json, core_report(core.labels(), &cert))?;
        Ok(DmStatus::Ok)
    })
}

/// On `DM_STATUS_OK` writes a certificate onto the subgraph induced by the
/// `n` labels in `keep`; `DM_STATUS_NO` means no dismantling exists and
/// leaves `out_json` untouched.
#[no_mangle]
pub unsafe extern "C" fn dm_graph_onto(
    g: *const DmGraph,
    keep: *const *const c_char,
    n: usize,
    out_json: *mut *mut c_char,
) -> DmStatus {
    guard(|| {
        let g = handle(g)?;
        if keep.is_null() && n > 0 {
            return Err(null());
        }
        let labels: Vec<&str> = (0..n).map(|i| str_arg(*keep.add(i))).collect::<Result<_, _>>()?;
        match graph::dismantles_onto(&g.0, &labels)? {
            Some(cert) => {
                write_string(out_json, cert.to_json())?;
                Ok(DmStatus::Ok)
            }
            None => Ok(DmStatus::No),
        }
    })
}

/// Same d-homotopy type (isomorphic stiff cores).
#[no_mangle]
pub unsafe extern "C" fn dm_graph_equivalent(g: *const DmGraph, h: *const DmGraph, budget: *const DmBudget, out: *mut bool) -> DmStatus {
    guard(|| {
        let yes = graph::same_d_homotopy_type(&handle(g)?.0, &handle(h)?.0, &budget_arg(budget))?;
        write(out, yes)?;
        Ok(DmStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dm_graph_verify(g: *const DmGraph, cert_json: *const c_char, out_step: *mut usize) -> DmStatus {
    guard(|| {
        let g = handle(g)?;
        verify_with(cert_json, out_step, |c| graph::replay_certificate(&g.0, c).map(drop))
    })
}

/// Applies a functor by name (`comp`, `clique-poset`, `bd`, ...) and writes
/// the image as JSON with its text form and element correspondence.
#[no_mangle]
pub unsafe extern "C" fn dm_graph_functor(
    g: *const DmGraph,
    name: *const c_char,
    budget: *const DmBudget,
    out_json: *mut *mut c_char,
) -> DmStatus {
    guard(|| {
        let report = functor_report(str_arg(name)?, &Object::Graph(handle(g)?.0.clone()), &budget_arg(budget))?;
        write_string(out_json, report)?;
        Ok(DmStatus::Ok)
    })
}

/// Number of morphisms `G → H` and of cells of the Hom complex.
#[no_mangle]
pub unsafe extern "C" fn dm_hom_counts(
    g: *const DmGraph,
    h: *const DmGraph,
    budget: *const DmBudget,
    out_morphisms: *mut usize,
    out_cells: *mut usize,
) -> DmStatus {
    guard(|| {
        let (g, h, b) = (&handle(g)?.0, &handle(h)?.0, budget_arg(budget));
        let morphisms = hom::enumerate_morphisms(g, h, &b)?.len();
        let cells = hom_complex::hom_cells(g, h, &b)?.len();
        write(out_morphisms, morphisms)?;
        write(out_cells, cells)?;
        Ok(DmStatus::Ok)
    })
}

// ---------- posets ----------

#[no_mangle]
pub unsafe extern "C" fn dm_poset_parse(text: *const c_char, out: *mut *mut DmPoset) -> DmStatus {
    guard(|| {
        let p = text::parse_poset(str_arg(text)?)?;
        give(out, DmPoset(p))?;
        Ok(DmStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dm_poset_free(p: *mut DmPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

#[no_mangle]
pub unsafe extern "C" fn dm_poset_element_count(p: *const DmPoset) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn dm_poset_core(p: *const DmPoset, mode: DmMode, out_json: *mut *mut c_char) -> DmStatus {
    guard(|| {
        let mode = match mode {
            DmMode::Strict => Mode::Strict,
            DmMode::Weak => Mode::Weak,
        };
        let (core, cert) = poset::poset_core(&handle(p)?.0, mode);
        write_string(out_json, core_report(core.labels(), &cert))?;
        Ok(DmStatus::Ok)
    })
}

/// The certificate's category (`poset` or `poset-weak`) selects the rule.
#[no_mangle]
pub unsafe extern "C" fn dm_poset_verify(p: *const DmPoset, cert_json: *const c_char, out_step: *mut usize) -> DmStatus {
    guard(|| {
        let p = handle(p)?;
        verify_with(cert_json, out_step, |c| poset::replay_certificate(&p.0, c).map(drop))
    })
}

#[no_mangle]
pub unsafe extern "C" fn dm_poset_functor(
    p: *const DmPoset,
    name: *const c_char,
    budget: *const DmBudget,
    out_json: *mut *mut c_char,
) -> DmStatus {
    guard(|| {
        let report = functor_report(str_arg(name)?, &Object::Poset(handle(p)?.0.clone()), &budget_arg(budget))?;
        write_string(out_json, report)?;
        Ok(DmStatus::Ok)
    })
}

// ---------- complexes ----------

#[no_mangle]
pub unsafe extern "C" fn dm_complex_parse(text: *const c_char, out: *mut *mut DmComplex) -> DmStatus {
    guard(|| {
        let k = text::parse_complex(str_arg(text)?)?;
        give(out, DmComplex(k))?;
        Ok(DmStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dm_complex_free(k: *mut DmComplex) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

#[no_mangle]
pub unsafe extern "C" fn dm_complex_vertex_count(k: *const DmComplex) -> usize {
    k.as_ref().map_or(0, |k| k.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn dm_complex_core(k: *const DmComplex, out_json: *mut *mut c_char) -> DmStatus {
    guard(|| {
        let (core, cert) = simplicial::strong_collapse_core(&handle(k)?.0);
        write_string(out_json, core_report(core.labels(), &cert))?;
        Ok(DmStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dm_complex_verify(k: *const DmComplex, cert_json: *const c_char, out_step: *mut usize) -> DmStatus {
    guard(|| {
        let k = handle(k)?;
        verify_with(cert_json, out_step, |c| simplicial::replay_certificate(&k.0, c).map(drop))
    })
}

#[no_mangle]
pub unsafe extern "C" fn dm_complex_functor(
    k: *const DmComplex,
    name: *const c_char,
    budget: *const DmBudget,
    out_json: *mut *mut c_char,
) -> DmStatus {
    guard(|| {
        let report = functor_report(str_arg(name)?, &Object::Complex(handle(k)?.0.clone()), &budget_arg(budget))?;
        write_string(out_json, report)?;
        Ok(DmStatus::Ok)
    })
}
