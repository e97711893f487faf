use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ore_diamond_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn text(p: *const OdSkew) -> String {
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(od_skew_to_string(p, &mut s), OdStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    od_string_free(s);
    out
}

unsafe fn ring(field: &str, q: Option<&str>, ch: u32) -> *mut OdRing {
    let mut r = ptr::null_mut();
    let q = q.map(cstr);
    let status = od_ring_new(cstr(field).as_ptr(), q.as_ref().map_or(ptr::null(), |q| q.as_ptr()), ch, &mut r);
    assert_eq!(status, OdStatus::Ok);
    r
}

unsafe fn parse(r: *const OdRing, s: &str) -> *mut OdSkew {
    let mut p = ptr::null_mut();
    assert_eq!(od_skew_parse(r, cstr(s).as_ptr(), &mut p), OdStatus::Ok);
    p
}

unsafe fn last_error() -> String {
    CStr::from_ptr(od_last_error()).to_str().unwrap().to_string()
}

#[test]
fn multiply_and_divide() {
    unsafe {
        let r = ring("q", None, 0);
        let (theta, x) = (parse(r, "theta"), parse(r, "X"));
        let mut prod = ptr::null_mut();
        assert_eq!(od_skew_mul(r, theta, x, &mut prod), OdStatus::Ok);
        assert_eq!(text(prod), "(q*X)*theta^1");
        let mut deg = 0;
        assert_eq!(od_skew_degree(prod, &mut deg), OdStatus::Ok);
        assert_eq!(deg, 1);

        let (mut q, mut rem) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(od_skew_right_divide(r, prod, theta, &mut q, &mut rem), OdStatus::Ok);
        assert_eq!(text(q), "(q*X)");
        assert_eq!(text(rem), "0");
        for p in [theta, x, prod, q, rem] {
            od_skew_free(p);
        }
        od_ring_free(r);
    }
}

#[test]
fn gcrd_lclm_and_classification() {
    unsafe {
        let r = ring("fp:7", Some("3"), 0);
        let a = parse(r, "(theta+X)*(theta+1)");
        let b = parse(r, "(theta+2)*(theta+1)");
        let (mut g, mut l) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(od_skew_gcrd(r, a, b, &mut g), OdStatus::Ok);
        assert_eq!(text(g), "(1) + (1)*theta^1");
        assert_eq!(od_skew_lclm(r, a, b, &mut l), OdStatus::Ok);
        let mut deg = 0;
        od_skew_degree(l, &mut deg);
        assert_eq!(deg, 3);

        let mut t = OdType::Zero;
        let v = parse(r, "1+X+theta+X*theta^2");
        assert_eq!(od_classify(v, &mut t), OdStatus::Ok);
        assert_eq!(t, OdType::C);
        let w = parse(r, "1-X+X*theta");
        assert_eq!(od_classify(w, &mut t), OdStatus::Ok);
        assert_eq!(t, OdType::B);
        for p in [a, b, g, l, v, w] {
            od_skew_free(p);
        }
        od_ring_free(r);
    }
}

#[test]
fn commutativity_report() {
    unsafe {
        let r = ring("q:2", None, 0);
        let (c, b) = (parse(r, "1+X+theta+X*theta^2"), parse(r, "1-X+X*theta"));
        let mut refuted = -1;
        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(od_check_commutativity(r, c, b, 1, &mut refuted, &mut json), OdStatus::Ok);
        assert_eq!(refuted, 1);
        let s = CStr::from_ptr(json).to_str().unwrap();
        assert!(s.contains("\"no_solution_up_to_bound\""));
        od_string_free(json);
        od_skew_free(c);
        od_skew_free(b);
        od_ring_free(r);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(od_ring_new(cstr("bogus").as_ptr(), ptr::null(), 0, &mut r), OdStatus::Config);
        assert!(last_error().contains("bogus"));
        assert_eq!(od_ring_new(ptr::null(), ptr::null(), 0, &mut r), OdStatus::NullPointer);

        let r = ring("q", None, 0);
        let mut p = ptr::null_mut();
        assert_eq!(od_skew_parse(r, cstr("theta*").as_ptr(), &mut p), OdStatus::Parse);
        assert!(!last_error().is_empty());

        let (a, zero) = (parse(r, "theta"), parse(r, "0"));
        let (mut q, mut rem) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(od_skew_right_divide(r, a, zero, &mut q, &mut rem), OdStatus::DivisionByZero);

        let other = ring("fp:5", None, 0);
        let mut out = ptr::null_mut();
        assert_eq!(od_skew_mul(other, a, a, &mut out), OdStatus::RingMismatch);
        assert_eq!(od_skew_mul(r, a, ptr::null(), &mut out), OdStatus::NullPointer);
        assert_eq!(od_skew_mul(r, a, a, ptr::null_mut()), OdStatus::NullPointer);

        assert_eq!(od_skew_mul(r, a, a, &mut out), OdStatus::Ok);
        assert!(last_error().is_empty());
        for x in [a, zero, out] {
            od_skew_free(x);
        }
        od_skew_free(ptr::null_mut());
        od_ring_free(r);
        od_ring_free(other);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(od_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/ore_diamond.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 12);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let Some(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let exe = std::env::current_exe().unwrap();
    let target_dir = exe.parent().unwrap().parent().unwrap();
    let lib = target_dir.join("libore_diamond_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let dir = env!("CARGO_MANIFEST_DIR");
    let out = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("smoke");
    let status = std::process::Command::new(cc)
        .args([&format!("{dir}/tests/c/smoke.c"), "-I", &format!("{dir}/include"), "-o"])
        .arg(&out)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success());
    let run = std::process::Command::new(&out).output().unwrap();
    assert!(run.status.success());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "(q*X)*theta^1");
}

fn which_cc() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|cc| std::process::Command::new(cc).arg("--version").output().is_ok_and(|o| o.status.success()))
}
