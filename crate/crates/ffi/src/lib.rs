//! C ABI for `rsk-reverse`.
//!
//! Permutations and tableaux cross the boundary as opaque handles that the
//! caller frees with the matching `*_free` function. Every fallible call
//! returns an [`RskStatus`]; on failure a description is available from
//! [`rsk_last_error_message`] on the same thread. Strings returned by the
//! library are released with [`rsk_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rsk_reverse::enumeration::{self, CheckSelection, SweepConfig};
use rsk_reverse::reverse_maps::satisfies_first_row_property;
use rsk_reverse::{Error, Permutation, PhiParameters, Tableau, TableauPair};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RskStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    OutOfRange = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

/// Opaque permutation handle.
pub struct RskPermutation(Permutation);

/// Opaque standard Young tableau handle.
pub struct RskTableau(Tableau);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(message).ok());
}

fn status_of(error: &Error) -> RskStatus {
    match error {
        Error::Parse(_) | Error::TableauSyntax(_) => RskStatus::ParseError,
        Error::ValueOutOfRange { .. }
        | Error::TooLarge { .. }
        | Error::RankOutOfRange { .. }
        | Error::EntryOutOfRange { .. }
        | Error::SizeOutOfRange { .. }
        | Error::ListTooLarge { .. } => RskStatus::OutOfRange,
        _ => RskStatus::InvalidArgument,
    }
}

fn fail(status: RskStatus, message: impl Into<String>) -> RskStatus {
    set_last_error(message);
    status
}

struct Failure(RskStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn null(what: &str) -> Failure {
    Failure(RskStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, turning errors and panics into a status code.
fn guard(body: impl FnOnce() -> Outcome) -> RskStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => RskStatus::Ok,
        Ok(Err(Failure(status, message))) => fail(status, message),
        Err(_) => fail(RskStatus::Panic, "internal panic"),
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(RskStatus::ParseError, format!("{what} is not UTF-8")))
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(RskStatus::InvalidArgument, "interior NUL in output".into()))
}

unsafe fn out_permutation(out: *mut *mut RskPermutation, w: Permutation) -> Outcome {
    write_out(out, Box::into_raw(Box::new(RskPermutation(w))))
}

unsafe fn out_tableau(out: *mut *mut RskTableau, t: Tableau) -> Outcome {
    write_out(out, Box::into_raw(Box::new(RskTableau(t))))
}

/// Copies `values` into `buf`, reporting the full length through `out_len`.
unsafe fn copy_out(values: &[u32], buf: *mut u32, cap: usize, out_len: *mut usize) -> Outcome {
    if !out_len.is_null() {
        out_len.write(values.len());
    }
    if values.len() > cap {
        return Err(Failure(
            RskStatus::BufferTooSmall,
            format!("buffer holds {cap} values, {} needed", values.len()),
        ));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(null("buffer"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(())
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rsk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rsk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// Permutations

/// Builds a permutation of `1..=len` from one-line notation.
#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_new(
    values: *const u32,
    len: usize,
    out: *mut *mut RskPermutation,
) -> RskStatus {
    guard(|| {
        let values: &[u32] = if len == 0 {
            &[]
        } else if values.is_null() {
            return Err(null("values"));
        } else {
            std::slice::from_raw_parts(values, len)
        };
        let w = Permutation::new(values.iter().map(|&v| v as usize).collect())?;
        out_permutation(out, w)
    })
}

/// Parses `"52314"`, `"5 2 3 1 4"` or `"5,2,3,1,4"`.
#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_parse(
    text: *const c_char,
    out: *mut *mut RskPermutation,
) -> RskStatus {
    guard(|| {
        let w: Permutation = str_arg(text, "text")?.parse()?;
        out_permutation(out, w)
    })
}

/// The permutation of rank `rank` in lexicographic order on `S_n`.
#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_unrank(
    n: usize,
    rank: u64,
    out: *mut *mut RskPermutation,
) -> RskStatus {
    guard(|| out_permutation(out, Permutation::unrank(n, rank)?))
}

#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_free(p: *mut RskPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Length of `p`, or 0 when `p` is null.
#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_len(p: *const RskPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Copies the one-line notation into `buf`. `out_len` (optional) receives
/// the length even when `buf` is too small.
#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_entries(
    p: *const RskPermutation,
    buf: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> RskStatus {
    guard(|| {
        let p = borrow(p, "permutation")?;
        let values: Vec<u32> = p.0.entries().iter().map(|&v| v as u32).collect();
        copy_out(&values, buf, cap, out_len)
    })
}

/// Space-separated one-line notation; free with [`rsk_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_to_string(
    p: *const RskPermutation,
    out: *mut *mut c_char,
) -> RskStatus {
    guard(|| {
        let p = borrow(p, "permutation")?;
        write_out(out, into_c_string(p.0.to_string())?)
    })
}

/// Lexicographic rank of `p` in `S_n`.
#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_rank(
    p: *const RskPermutation,
    out: *mut u64,
) -> RskStatus {
    guard(|| write_out(out, borrow(p, "permutation")?.0.rank()))
}

#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_reverse(
    p: *const RskPermutation,
    out: *mut *mut RskPermutation,
) -> RskStatus {
    guard(|| out_permutation(out, borrow(p, "permutation")?.0.reverse()))
}

#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_complement(
    p: *const RskPermutation,
    out: *mut *mut RskPermutation,
) -> RskStatus {
    guard(|| out_permutation(out, borrow(p, "permutation")?.0.complement()))
}

#[no_mangle]
pub unsafe extern "C" fn rsk_permutation_inverse(
    p: *const RskPermutation,
    out: *mut *mut RskPermutation,
) -> RskStatus {
    guard(|| out_permutation(out, borrow(p, "permutation")?.0.inverse()))
}

/// `phi_{a,b}(p)`, a permutation of length `len(p) + 2`.
#[no_mangle]
pub unsafe extern "C" fn rsk_phi(
    p: *const RskPermutation,
    a: usize,
    b: usize,
    out: *mut *mut RskPermutation,
) -> RskStatus {
    guard(|| {
        let w = &borrow(p, "permutation")?.0;
        let params = PhiParameters::new(a, b, w.len())?;
        out_permutation(out, rsk_reverse::phi(params, w)?)
    })
}

/// `theta(p)`, a permutation of length `len(p) - 2`; needs `len(p) >= 3`.
#[no_mangle]
pub unsafe extern "C" fn rsk_theta(
    p: *const RskPermutation,
    out: *mut *mut RskPermutation,
) -> RskStatus {
    guard(|| out_permutation(out, rsk_reverse::theta(&borrow(p, "permutation")?.0)?))
}

// RSK

/// Insertion tableau `P(p)` and recording tableau `Q(p)`.
#[no_mangle]
pub unsafe extern "C" fn rsk_insertion_recording(
    p: *const RskPermutation,
    out_p: *mut *mut RskTableau,
    out_q: *mut *mut RskTableau,
) -> RskStatus {
    guard(|| {
        let w = &borrow(p, "permutation")?.0;
        if out_p.is_null() || out_q.is_null() {
            return Err(null("output pointer"));
        }
        let pair = rsk_reverse::rsk(w);
        out_tableau(out_p, pair.p)?;
        out_tableau(out_q, pair.q)
    })
}

/// The permutation with insertion tableau `p` and recording tableau `q`.
#[no_mangle]
pub unsafe extern "C" fn rsk_inverse(
    p: *const RskTableau,
    q: *const RskTableau,
    out: *mut *mut RskPermutation,
) -> RskStatus {
    guard(|| {
        let pair = TableauPair::new(borrow(p, "P")?.0.clone(), borrow(q, "Q")?.0.clone())?;
        out_permutation(out, rsk_reverse::inverse_rsk(&pair))
    })
}

// Tableaux

/// Parses `[[1,3,5],[2],[4]]` or `{"rows": [[1,3,5],[2],[4]]}`.
#[no_mangle]
pub unsafe extern "C" fn rsk_tableau_from_json(
    json: *const c_char,
    out: *mut *mut RskTableau,
) -> RskStatus {
    guard(|| {
        let t = Tableau::from_json(str_arg(json, "json")?)?;
        out_tableau(out, t)
    })
}

/// `{"rows": [...]}`; free with [`rsk_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rsk_tableau_to_json(
    t: *const RskTableau,
    out: *mut *mut c_char,
) -> RskStatus {
    guard(|| {
        let t = borrow(t, "tableau")?;
        write_out(out, into_c_string(t.0.to_json())?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_tableau_free(t: *mut RskTableau) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of cells, or 0 when `t` is null.
#[no_mangle]
pub unsafe extern "C" fn rsk_tableau_size(t: *const RskTableau) -> usize {
    t.as_ref().map_or(0, |t| t.0.size())
}

/// Row lengths, longest first.
#[no_mangle]
pub unsafe extern "C" fn rsk_tableau_shape(
    t: *const RskTableau,
    buf: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> RskStatus {
    guard(|| {
        let t = borrow(t, "tableau")?;
        let parts: Vec<u32> = t.0.shape().parts().iter().map(|&v| v as u32).collect();
        copy_out(&parts, buf, cap, out_len)
    })
}

#[no_mangle]
pub unsafe extern "C" fn rsk_tableau_transpose(
    t: *const RskTableau,
    out: *mut *mut RskTableau,
) -> RskStatus {
    guard(|| out_tableau(out, borrow(t, "tableau")?.0.transpose()))
}

/// Schützenberger evacuation.
#[no_mangle]
pub unsafe extern "C" fn rsk_tableau_evacuation(
    t: *const RskTableau,
    out: *mut *mut RskTableau,
) -> RskStatus {
    guard(|| out_tableau(out, rsk_reverse::evacuation(&borrow(t, "tableau")?.0)))
}

// Membership

/// Whether `Q(p) = Q(p^r)`.
#[no_mangle]
pub unsafe extern "C" fn rsk_is_in_r(p: *const RskPermutation, out: *mut bool) -> RskStatus {
    guard(|| write_out(out, rsk_reverse::is_in_r(&borrow(p, "permutation")?.0)))
}

/// Whether `Q(p)` has symmetric hook shape.
#[no_mangle]
pub unsafe extern "C" fn rsk_is_in_h(p: *const RskPermutation, out: *mut bool) -> RskStatus {
    guard(|| write_out(out, rsk_reverse::is_in_h(&borrow(p, "permutation")?.0)))
}

/// Whether the transpose of the evacuation of `t` is `t` itself.
#[no_mangle]
pub unsafe extern "C" fn rsk_tableau_is_in_m(t: *const RskTableau, out: *mut bool) -> RskStatus {
    guard(|| write_out(out, rsk_reverse::is_in_m(&borrow(t, "tableau")?.0)))
}

/// Whether every `i > 1` in the first row has `n - i + 2` in the first column.
#[no_mangle]
pub unsafe extern "C" fn rsk_tableau_first_row_property(
    t: *const RskTableau,
    out: *mut bool,
) -> RskStatus {
    guard(|| write_out(out, satisfies_first_row_property(&borrow(t, "tableau")?.0)))
}

// Sweeps

fn sweep_config(workers: usize) -> SweepConfig {
    SweepConfig::with_workers(workers.max(1))
}

/// `|R_n|` by exhaustive sweep over `S_n` (`n <= 11`).
#[no_mangle]
pub unsafe extern "C" fn rsk_count_r(n: usize, workers: usize, out: *mut u64) -> RskStatus {
    guard(|| write_out(out, enumeration::count_r(n, &sweep_config(workers))?))
}

/// `|H_n|` by exhaustive sweep over `S_n` (`n <= 11`).
#[no_mangle]
pub unsafe extern "C" fn rsk_count_h(n: usize, workers: usize, out: *mut u64) -> RskStatus {
    guard(|| write_out(out, enumeration::count_h(n, &sweep_config(workers))?))
}

/// `|M_n|` for the symmetric hook of size `n`; 0 for even `n`.
#[no_mangle]
pub unsafe extern "C" fn rsk_count_m(n: usize, workers: usize, out: *mut u64) -> RskStatus {
    guard(|| write_out(out, enumeration::count_m(n, &sweep_config(workers))?))
}

fn parse_selection(list: &str) -> Result<CheckSelection, Failure> {
    let mut selection = CheckSelection::default();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name {
            "all" => selection = CheckSelection::all(),
            "count" => selection.count = true,
            "characterization" => selection.characterization = true,
            "symmetry" => selection.symmetry = true,
            "phi-theta" => selection.phi_theta = true,
            "transport" => selection.transport = true,
            "m-set" => selection.m_set = true,
            other => {
                return Err(Failure(
                    RskStatus::InvalidArgument,
                    format!("unknown check {other:?}"),
                ))
            }
        }
    }
    if selection.is_empty() {
        return Err(Failure(
            RskStatus::InvalidArgument,
            "no checks selected".into(),
        ));
    }
    Ok(selection)
}

/// Runs verification sweeps and returns the reports as a JSON array.
///
/// `checks` is a comma-separated list drawn from `count`,
/// `characterization`, `symmetry`, `phi-theta`, `transport`, `m-set`, or
/// `all`. `out_all_passed` may be null.
#[no_mangle]
pub unsafe extern "C" fn rsk_verify_json(
    checks: *const c_char,
    n_max: usize,
    workers: usize,
    out_json: *mut *mut c_char,
    out_all_passed: *mut bool,
) -> RskStatus {
    guard(|| {
        let selection = parse_selection(str_arg(checks, "checks")?)?;
        if out_json.is_null() {
            return Err(null("output pointer"));
        }
        let reports = enumeration::run_checks(selection, n_max, &sweep_config(workers))?;
        let json = serde_json::to_string(&reports).expect("reports serialize");
        if !out_all_passed.is_null() {
            out_all_passed.write(reports.iter().all(|r| r.passed));
        }
        write_out(out_json, into_c_string(json)?)
    })
}
