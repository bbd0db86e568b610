//! C ABI over the classifier and witness construction.
//!
//! Networks and verdicts are opaque handles owned by the caller and released
//! with their `_free` functions. Every entry point returns a `CrnmsStatus`;
//! on failure the message is available from `crnms_last_error` until the next
//! call on the same thread. Strings returned through out-parameters are
//! released with `crnms_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use crnms::classify::{classify, Capacity, Verdict};
use crnms::network::{parse_inline, parse_network, Network};
use crnms::witness::{build_witness, certify, WitnessError};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrnmsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    OutOfScope = 4,
    WitnessFailed = 5,
    InvalidArgument = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrnmsCapacityKind {
    Exact = 0,
    AtLeast = 1,
    Infinite = 2,
    Unknown = 3,
}

/// A capacity; `value` is meaningful for `Exact` and `AtLeast`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrnmsCapacity {
    pub kind: CrnmsCapacityKind,
    pub value: u64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrnmsCapacityWhich {
    Positive = 0,
    Nondegenerate = 1,
    Stable = 2,
}

/// Opaque parsed network.
pub struct CrnmsNetwork(Network);

/// Opaque classification result.
pub struct CrnmsVerdict(Verdict);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), (CrnmsStatus, String)>) -> CrnmsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CrnmsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_error(format!("internal error: {}", msg));
            CrnmsStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, (CrnmsStatus, String)> {
    if p.is_null() {
        return Err((CrnmsStatus::NullArgument, "null string".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|e| (CrnmsStatus::InvalidUtf8, e.to_string()))
}

fn null(what: &str) -> (CrnmsStatus, String) {
    (CrnmsStatus::NullArgument, format!("null {}", what))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (CrnmsStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s).map_err(|e| (CrnmsStatus::InvalidArgument, e.to_string()))?.into_raw();
    Ok(())
}

/// Parses a network. With `semicolons` nonzero, reactions are separated by
/// `;`; otherwise one reaction per line.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crnms_network_parse(text: *const c_char, semicolons: i32, out: *mut *mut CrnmsNetwork) -> CrnmsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let text = read_str(text)?;
        let parsed = if semicolons != 0 { parse_inline(text) } else { parse_network(text) };
        let net = parsed.map_err(|e| (CrnmsStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(CrnmsNetwork(net)));
        Ok(())
    })
}

/// # Safety
/// `net` must come from `crnms_network_parse` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn crnms_network_free(net: *mut CrnmsNetwork) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// # Safety
/// `net` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn crnms_network_num_species(net: *const CrnmsNetwork) -> usize {
    net.as_ref().map_or(0, |n| n.0.num_species())
}

/// # Safety
/// `net` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn crnms_network_num_reactions(net: *const CrnmsNetwork) -> usize {
    net.as_ref().map_or(0, |n| n.0.num_reactions())
}

/// Classifies a network. Out-of-scope networks still produce a verdict and
/// return `Ok`; check `crnms_verdict_out_of_scope`.
///
/// # Safety
/// `net` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crnms_classify(net: *const CrnmsNetwork, out: *mut *mut CrnmsVerdict) -> CrnmsStatus {
    guard(|| {
        let net = net.as_ref().ok_or_else(|| null("network"))?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = Box::into_raw(Box::new(CrnmsVerdict(classify(&net.0))));
        Ok(())
    })
}

/// # Safety
/// `v` must come from `crnms_classify` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn crnms_verdict_free(v: *mut CrnmsVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// `which` is a `CrnmsCapacityWhich` value.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crnms_verdict_capacity(v: *const CrnmsVerdict, which: i32, out: *mut CrnmsCapacity) -> CrnmsStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(|| null("verdict"))?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        let c = match which {
            w if w == CrnmsCapacityWhich::Positive as i32 => v.0.cap_pss,
            w if w == CrnmsCapacityWhich::Nondegenerate as i32 => v.0.cap_npss,
            w if w == CrnmsCapacityWhich::Stable as i32 => v.0.cap_stable,
            w => return Err((CrnmsStatus::InvalidArgument, format!("no capacity selector {}", w))),
        };
        *out = match c {
            Capacity::Exact(n) => CrnmsCapacity { kind: CrnmsCapacityKind::Exact, value: n },
            Capacity::AtLeast(n) => CrnmsCapacity { kind: CrnmsCapacityKind::AtLeast, value: n },
            Capacity::Infinite => CrnmsCapacity { kind: CrnmsCapacityKind::Infinite, value: 0 },
            Capacity::Unknown => CrnmsCapacity { kind: CrnmsCapacityKind::Unknown, value: 0 },
        };
        Ok(())
    })
}

fn tri(b: Option<bool>) -> i32 {
    match b {
        Some(true) => 1,
        Some(false) => 0,
        None => -1,
    }
}

/// 1 if multistationary, 0 if not, -1 if undecided or `v` is null.
///
/// # Safety
/// `v` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn crnms_verdict_multistationary(v: *const CrnmsVerdict) -> i32 {
    v.as_ref().map_or(-1, |v| tri(v.0.multistationary()))
}

/// # Safety
/// `v` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn crnms_verdict_nondegenerately_multistationary(v: *const CrnmsVerdict) -> i32 {
    v.as_ref().map_or(-1, |v| tri(v.0.nondegenerately_multistationary()))
}

/// # Safety
/// `v` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn crnms_verdict_multistable(v: *const CrnmsVerdict) -> i32 {
    v.as_ref().map_or(-1, |v| tri(v.0.multistable))
}

/// 1 when the network is outside the decided shapes, 0 otherwise, -1 for null.
///
/// # Safety
/// `v` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn crnms_verdict_out_of_scope(v: *const CrnmsVerdict) -> i32 {
    v.as_ref().map_or(-1, |v| v.0.is_out_of_scope() as i32)
}

/// Verdict as JSON.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crnms_verdict_json(v: *const CrnmsVerdict, out: *mut *mut c_char) -> CrnmsStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(|| null("verdict"))?;
        write_string(out, v.0.to_json().to_string())
    })
}

/// Builds and certifies a witness with `count` nondegenerate steady states,
/// or the classifier's lower bound when `count` is negative. Writes the
/// witness JSON with a `certification` field.
///
/// # Safety
/// `net` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crnms_witness_json(net: *const CrnmsNetwork, count: i64, out: *mut *mut c_char) -> CrnmsStatus {
    guard(|| {
        let net = net.as_ref().ok_or_else(|| null("network"))?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let count = (count >= 0).then_some(count as usize);
        let w = build_witness(&net.0, count, None).map_err(|e| match e {
            WitnessError::OutOfScope => (CrnmsStatus::OutOfScope, e.to_string()),
            e => (CrnmsStatus::WitnessFailed, e.to_string()),
        })?;
        let report = certify(&net.0, &w).map_err(|e| (CrnmsStatus::WitnessFailed, e.to_string()))?;
        let mut j = w.to_json(&net.0);
        j["certification"] = report.to_json();
        write_string(out, j.to_string())
    })
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn crnms_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn crnms_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
