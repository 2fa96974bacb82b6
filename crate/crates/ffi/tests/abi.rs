use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use unitary_radon_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ur_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn parse(json: &str) -> *mut UrPolynomial {
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { ur_polynomial_parse(cstr(json).as_ptr(), &mut p) },
        UrStatus::Ok
    );
    p
}

fn to_json(p: *const UrPolynomial) -> String {
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { ur_polynomial_to_json(p, &mut s) }, UrStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { ur_string_free(s) };
    out
}

fn run(args: &[&str], document: Option<&str>) -> (UrStatus, *mut UrReport) {
    let owned: Vec<CString> = args.iter().map(|a| cstr(a)).collect();
    let argv: Vec<*const c_char> = owned.iter().map(|a| a.as_ptr()).collect();
    let doc = document.map(cstr);
    let mut report = ptr::null_mut();
    let status = unsafe {
        ur_run(
            argv.as_ptr(),
            argv.len(),
            doc.as_ref().map_or(ptr::null(), |d| d.as_ptr()),
            &mut report,
        )
    };
    (status, report)
}

const Z1: &str = r#"{"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":1.0,"im":0.0}]}"#;

#[test]
fn polynomials_round_trip_through_handles() {
    let p = parse(Z1);
    assert_eq!(unsafe { ur_polynomial_dimension(p) }, 2);
    assert_eq!(to_json(p), Z1);
    unsafe { ur_polynomial_free(p) };
}

#[test]
fn ball_dual_and_inverse() {
    let p = parse(Z1);
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { ur_ball_dual(p, &mut d) }, UrStatus::Ok);
    assert_eq!(
        to_json(d),
        r#"{"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":0.5,"im":0.0}]}"#
    );
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { ur_ball_invert_holomorphic(d, &mut back) }, UrStatus::Ok);
    assert_eq!(to_json(back), Z1);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { ur_ball_reconstruct(p, &mut r) }, UrStatus::Ok);
    assert_eq!(to_json(r), Z1);
    unsafe {
        ur_polynomial_free(p);
        ur_polynomial_free(d);
        ur_polynomial_free(back);
        ur_polynomial_free(r);
    }
}

#[test]
fn fock_round_trip_and_contract_errors() {
    let p = parse(Z1);
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { ur_fock_dual(p, &mut d) }, UrStatus::Ok);
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { ur_fock_invert(d, &mut back) }, UrStatus::Ok);
    assert_eq!(to_json(back), Z1);
    let bar = parse(r#"{"n":2,"terms":[{"alpha":[0,0],"beta":[1,0],"re":1,"im":0}]}"#);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ur_fock_dual(bar, &mut out) }, UrStatus::Contract);
    assert!(out.is_null());
    assert!(!last_error().is_empty());
    unsafe {
        ur_polynomial_free(p);
        ur_polynomial_free(d);
        ur_polynomial_free(back);
        ur_polynomial_free(bar);
    }
}

#[test]
fn bad_arguments_are_reported() {
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { ur_polynomial_parse(ptr::null(), &mut p) },
        UrStatus::NullArgument
    );
    assert_eq!(
        unsafe { ur_polynomial_parse(cstr("{}").as_ptr(), ptr::null_mut()) },
        UrStatus::NullArgument
    );
    let bad = cstr(r#"{"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":1,"im":0,"x":1}]}"#);
    assert_eq!(unsafe { ur_polynomial_parse(bad.as_ptr(), &mut p) }, UrStatus::Contract);
    assert!(last_error().contains("terms[0]"), "{}", last_error());
    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { ur_polynomial_parse(invalid.as_ptr().cast(), &mut p) },
        UrStatus::InvalidUtf8
    );
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { ur_ball_dual(ptr::null(), &mut d) }, UrStatus::NullArgument);
    unsafe {
        ur_polynomial_free(ptr::null_mut());
        ur_report_free(ptr::null_mut());
        ur_string_free(ptr::null_mut());
        assert!(ur_report_text(ptr::null()).is_null());
        assert_eq!(ur_report_exit_code(ptr::null()), -1);
    }
}

#[test]
fn run_matches_the_command_line() {
    let (status, report) = run(&["transform", "--space", "fock", "--tuple", "axis:0,1"], Some(Z1));
    assert_eq!(status, UrStatus::Ok);
    let text = unsafe { CStr::from_ptr(ur_report_text(report)) }
        .to_str()
        .unwrap()
        .to_owned();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["coefficients"][0]["key"], 1);
    assert_eq!(unsafe { ur_report_exit_code(report) }, 0);
    unsafe { ur_report_free(report) };

    let (status, report) = run(&["frobnicate"], None);
    assert_eq!(status, UrStatus::Contract);
    assert!(report.is_null());

    let (status, report) = run(
        &["dual", "--space", "ball-harmonic", "--in", "/nonexistent/input.json"],
        None,
    );
    assert_eq!(status, UrStatus::Io);
    assert!(report.is_null());
}

#[test]
fn strict_verify_reports_an_invariant_failure() {
    let args = [
        "verify",
        "--space",
        "hermitian",
        "--n",
        "2",
        "--max-degree",
        "1",
        "--trials",
        "1",
        "--strict",
    ];
    let (status, report) = run(&args, None);
    assert_eq!(status, UrStatus::Invariant);
    assert!(!report.is_null());
    assert_eq!(unsafe { ur_report_exit_code(report) }, 3);
    unsafe { ur_report_free(report) };
}

#[test]
fn c_program_links_against_the_header() {
    let Ok(status) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(status.status.success());
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // tests run from target/<profile>/deps; the static library sits one level up
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().unwrap().parent().unwrap();
    let lib = lib_dir.join("libunitary_radon_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("smoke");
    let built = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests").join("smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&out)
        .status()
        .unwrap();
    assert!(built.success());
    let ran = Command::new(&out).output().unwrap();
    assert!(ran.status.success(), "{}", String::from_utf8_lossy(&ran.stderr));
    assert_eq!(
        String::from_utf8_lossy(&ran.stdout).trim(),
        r#"{"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":0.5,"im":0.0}]}"#
    );
}
