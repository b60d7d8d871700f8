//! C ABI for `scx`.
//!
//! Complexes cross the boundary as opaque [`ScxComplex`] handles. Every
//! fallible function returns an [`ScxStatus`]; on failure a message is kept
//! per thread and can be read with [`scx_last_error`]. Strings returned by
//! the library must be released with [`scx_string_free`], handles with
//! [`scx_complex_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use scx::banner::{banner_number, classify};
use scx::generators::{catalog_specs, GeneratorSpec};
use scx::graph::{skeleton, vertex_connectivity};
use scx::verify::{analyze, report_json};
use scx::{Error, SimplicialComplex};

/// Result codes. `Ok` is zero.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotPure = 4,
    InvalidArgument = 5,
    Undefined = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// An immutable simplicial complex.
pub struct ScxComplex {
    inner: SimplicialComplex,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScxBannerClass {
    pub flag: bool,
    pub strongly_banner: bool,
    pub banner: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> ScxStatus {
    match e {
        Error::Parse { .. } | Error::EmptyComplex | Error::MalformedFace(_) => ScxStatus::Parse,
        Error::NotPure => ScxStatus::NotPure,
        Error::UndefinedBannerNumber { .. } => ScxStatus::Undefined,
        _ => ScxStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> ScxStatus {
    set_error(e.to_string());
    status_of(&e)
}

/// Runs `f`, turning a panic into [`ScxStatus::Panic`].
fn guard(f: impl FnOnce() -> ScxStatus) -> ScxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            ScxStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ScxStatus> {
    if s.is_null() {
        set_error("null string");
        return Err(ScxStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string is not UTF-8");
        ScxStatus::InvalidUtf8
    })
}

unsafe fn complex<'a>(c: *const ScxComplex) -> Result<&'a SimplicialComplex, ScxStatus> {
    c.as_ref().map(|c| &c.inner).ok_or_else(|| {
        set_error("null complex");
        ScxStatus::NullPointer
    })
}

fn give_string(s: String, out: *mut *mut c_char) -> ScxStatus {
    match CString::new(s) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            ScxStatus::Ok
        }
        Err(_) => {
            set_error("string contains a nul byte");
            ScxStatus::InvalidArgument
        }
    }
}

fn give_complex(c: SimplicialComplex, out: *mut *mut ScxComplex) {
    unsafe { *out = Box::into_raw(Box::new(ScxComplex { inner: c })) };
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! check_out {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            set_error("null output pointer");
            return ScxStatus::NullPointer;
        })+
    };
}

/// The message of the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn scx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses facet-list text (one facet per line, `#` comments).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_complex_parse(
    text: *const c_char,
    out: *mut *mut ScxComplex,
) -> ScxStatus {
    guard(|| {
        check_out!(out);
        let text = try_ffi!(read_str(text));
        match SimplicialComplex::parse(text) {
            Ok(c) => {
                give_complex(c, out);
                ScxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds a complex from a generator spec such as `"susp:cyclic(7,4)"`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_complex_generate(
    spec: *const c_char,
    out: *mut *mut ScxComplex,
) -> ScxStatus {
    guard(|| {
        check_out!(out);
        let spec = try_ffi!(read_str(spec));
        match spec.parse::<GeneratorSpec>().and_then(|s| s.generate()) {
            Ok(c) => {
                give_complex(c, out);
                ScxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `c` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn scx_complex_free(c: *mut ScxComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn scx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_complex_dim(c: *const ScxComplex, out: *mut usize) -> ScxStatus {
    guard(|| {
        check_out!(out);
        let c = try_ffi!(complex(c));
        *out = c.dim();
        ScxStatus::Ok
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_complex_num_vertices(
    c: *const ScxComplex,
    out: *mut usize,
) -> ScxStatus {
    guard(|| {
        check_out!(out);
        let c = try_ffi!(complex(c));
        *out = c.num_vertices();
        ScxStatus::Ok
    })
}

/// Writes `(f₋₁, f₀, …, f_d)` into `buf`. `len` always receives the number of
/// entries; if it exceeds `cap` nothing is written and
/// [`ScxStatus::BufferTooSmall`] is returned.
///
/// # Safety
/// `c` must be a live handle; `buf` must hold `cap` entries (may be null
/// when `cap` is 0); `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_complex_f_vector(
    c: *const ScxComplex,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> ScxStatus {
    guard(|| {
        check_out!(len);
        let c = try_ffi!(complex(c));
        let f = c.f_vector();
        let counts = f.counts();
        *len = counts.len();
        if counts.len() > cap {
            set_error(format!("f-vector has {} entries", counts.len()));
            return ScxStatus::BufferTooSmall;
        }
        check_out!(buf);
        ptr::copy_nonoverlapping(counts.as_ptr(), buf, counts.len());
        ScxStatus::Ok
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_classify(c: *const ScxComplex, out: *mut ScxBannerClass) -> ScxStatus {
    guard(|| {
        check_out!(out);
        let c = try_ffi!(complex(c));
        match classify(c) {
            Ok(k) => {
                *out = ScxBannerClass {
                    flag: k.flag,
                    strongly_banner: k.strongly_banner,
                    banner: k.banner,
                };
                ScxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// [`ScxStatus::Undefined`] when no `j < d` qualifies.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_banner_number(c: *const ScxComplex, out: *mut usize) -> ScxStatus {
    guard(|| {
        check_out!(out);
        let c = try_ffi!(complex(c));
        match banner_number(c) {
            Ok(b) => {
                *out = b.value;
                ScxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Vertex connectivity of the 1-skeleton.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_connectivity(c: *const ScxComplex, out: *mut usize) -> ScxStatus {
    guard(|| {
        check_out!(out);
        let c = try_ffi!(complex(c));
        *out = vertex_connectivity(&skeleton(c)).kappa;
        ScxStatus::Ok
    })
}

/// The `scx-report/1` JSON report. Free the result with [`scx_string_free`].
///
/// # Safety
/// `c` must be a live handle; `name` a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn scx_analyze_json(
    c: *const ScxComplex,
    name: *const c_char,
    out: *mut *mut c_char,
) -> ScxStatus {
    guard(|| {
        check_out!(out);
        let c = try_ffi!(complex(c));
        let name = try_ffi!(read_str(name));
        match analyze(name, c) {
            Ok(r) => give_string(report_json(&r), out),
            Err(e) => fail(e),
        }
    })
}

/// Facet-list text of a complex. Free the result with [`scx_string_free`].
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_complex_to_text(
    c: *const ScxComplex,
    out: *mut *mut c_char,
) -> ScxStatus {
    guard(|| {
        check_out!(out);
        let c = try_ffi!(complex(c));
        give_string(c.to_scx(), out)
    })
}

/// Number of entries in the default corpus.
#[no_mangle]
pub extern "C" fn scx_catalog_len() -> usize {
    catalog_specs().len()
}

/// The generator spec of corpus entry `i`; pass it to
/// [`scx_complex_generate`]. Free the result with [`scx_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn scx_catalog_spec(i: usize, out: *mut *mut c_char) -> ScxStatus {
    guard(|| {
        check_out!(out);
        match catalog_specs().get(i) {
            Some(s) => give_string(s.to_string(), out),
            None => {
                set_error(format!("catalog index {i} out of range"));
                ScxStatus::InvalidArgument
            }
        }
    })
}
