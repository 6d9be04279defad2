use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use chvlab_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { chv_string_free(s) };
    out
}

#[test]
fn matrix_round_trip() {
    let json = CString::new(r#"{"n":2,"entries":[["a","b"],["c","d"]]}"#).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { chv_matrix_from_json(json.as_ptr(), &mut m) }, ChvStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { chv_matrix_det(m, &mut s) }, ChvStatus::Ok);
    assert_eq!(take(s), "a*d - b*c");
    assert_eq!(unsafe { chv_matrix_permanent(m, &mut s) }, ChvStatus::Ok);
    assert_eq!(take(s), "a*d + b*c");
    assert_eq!(unsafe { chv_matrix_to_json(m, &mut s) }, ChvStatus::Ok);
    assert!(take(s).contains(r#""entries""#));
    unsafe { chv_matrix_free(m) };
}

#[test]
fn error_codes() {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { chv_matrix_from_json(ptr::null(), &mut m) }, ChvStatus::NullPointer);
    let bad = CString::new("{").unwrap();
    assert_eq!(unsafe { chv_matrix_from_json(bad.as_ptr(), &mut m) }, ChvStatus::Parse);
    assert!(take(chv_last_error()).starts_with("json"));
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { chv_matrix_det(ptr::null(), &mut s) }, ChvStatus::NullPointer);
    let strat = CString::new("no-such").unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(
        unsafe { chv_family_generate(strat.as_ptr(), 2, 2, 0, false, 5, &mut f) },
        ChvStatus::InvalidArgument
    );
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { chv_verify_lemmas(ptr::null(), 1, 1, &mut r) }, ChvStatus::NullPointer);
}

#[test]
fn hypothesis_violations_are_reported() {
    // A_1 = I, A_2 = M, B_1 = M, B_2 = I breaks the constraint
    let json = CString::new(
        r#"{"n":2,"k":2,"a":[{"n":2,"entries":[["1","0"],["0","1"]]},{"n":2,"entries":[["1","2"],["3","4"]]}],
            "b":[{"n":2,"entries":[["1","2"],["3","4"]]},{"n":2,"entries":[["1","0"],["0","1"]]}]}"#,
    )
    .unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { chv_family_from_json(json.as_ptr(), &mut f) }, ChvStatus::Ok);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { chv_verify_phillips(f, &mut r) }, ChvStatus::Ok);
    let mut st = ChvReportStatus::Pass;
    assert_eq!(unsafe { chv_report_status(r, &mut st) }, ChvStatus::Ok);
    assert_eq!(st, ChvReportStatus::HypothesisViolation);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { chv_report_to_json(r, &mut s) }, ChvStatus::Ok);
    assert!(take(s).contains("hypothesis_violation"));
    unsafe {
        chv_report_free(r);
        chv_family_free(f);
    }
}

#[test]
fn generated_families_verify() {
    let strat = CString::new("powers-of-one").unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { chv_family_generate(strat.as_ptr(), 3, 2, 3, false, 4, &mut f) }, ChvStatus::Ok);
    for (b, e) in [(1, 1), (2, 3)] {
        let mut r = ptr::null_mut();
        assert_eq!(unsafe { chv_verify_lemmas(f, b, e, &mut r) }, ChvStatus::Ok);
        let mut st = ChvReportStatus::Fail;
        unsafe { chv_report_status(r, &mut st) };
        assert_eq!(st, ChvReportStatus::Pass);
        unsafe { chv_report_free(r) };
    }
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { chv_verify_lemmas(f, 0, 1, &mut r) }, ChvStatus::Dimension);
    unsafe { chv_family_free(f) };

    let mut m = ptr::null_mut();
    assert_eq!(unsafe { chv_mixed_family_generate(strat.as_ptr(), 2, 2, 1, false, 4, &mut m) }, ChvStatus::Ok);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { chv_verify_mixed(m, &mut r) }, ChvStatus::Ok);
    let mut st = ChvReportStatus::Fail;
    unsafe { chv_report_status(r, &mut st) };
    assert_eq!(st, ChvReportStatus::Pass);
    unsafe {
        chv_report_free(r);
        chv_mixed_family_free(m);
    }
}

#[test]
fn mixed_discriminant_value() {
    let json = CString::new(
        r#"{"n":2,"mats":[{"n":2,"entries":[["1","2"],["3","4"]]},{"n":2,"entries":[["0","1"],["1","0"]]}]}"#,
    )
    .unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { chv_mixed_discriminant(json.as_ptr(), &mut s) }, ChvStatus::Ok);
    assert_eq!(take(s), "-5/2");
    assert!(unsafe { CStr::from_ptr(chv_version()) }.to_str().unwrap().starts_with("0."));
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/chvlab.h")).unwrap();
    for name in ["chv_matrix_from_json", "chv_verify_phillips", "chv_string_free", "CHV_STATUS_HYPOTHESIS", "typedef struct ChvReport ChvReport"] {
        assert!(h.contains(name), "{name}");
    }
}

fn cc_available() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn c_program_links_and_runs() {
    if !cc_available() {
        eprintln!("no C compiler on PATH; C smoke program not built");
        return;
    }
    let target_dir: PathBuf = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = target_dir.join("libchvlab_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = env!("CARGO_MANIFEST_DIR");
    let exe = tempfile::tempdir().unwrap();
    let bin = exe.path().join("smoke");
    let status = Command::new("cc")
        .arg(format!("{dir}/tests/c/smoke.c"))
        .arg(format!("-I{dir}/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
