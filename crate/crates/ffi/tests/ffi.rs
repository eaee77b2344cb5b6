use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use domdim_ffi::*;

fn parse(text: &str) -> *mut DdKupisch {
    let c = CString::new(text).unwrap();
    let mut k = ptr::null_mut();
    assert_eq!(unsafe { dd_kupisch_parse(c.as_ptr(), &mut k) }, DdStatus::Ok);
    assert!(!k.is_null());
    k
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(dd_last_error()) }.to_str().unwrap().to_owned()
}

fn finite(v: u64) -> DdExtNat {
    DdExtNat { kind: DdExtNatKind::Finite, value: v }
}

#[test]
fn invariants_of_a_family_member() {
    let k = parse("linear:3,3,3,2,1");
    let (mut n, mut dim) = (0, 0);
    assert_eq!(unsafe { dd_kupisch_dims(k, &mut n, &mut dim) }, DdStatus::Ok);
    assert_eq!((n, dim), (5, 12));
    let (mut d, mut g) = (finite(99), finite(99));
    assert_eq!(unsafe { dd_kupisch_invariants(k, &mut d, &mut g, ptr::null_mut()) }, DdStatus::Ok);
    assert_eq!((d, g), (finite(2), finite(3)));
    let mut hom = 0;
    assert_eq!(unsafe { dd_hom_dim(k, 0, 3, 0, 3, &mut hom) }, DdStatus::Ok);
    assert_eq!(hom, 1);
    unsafe { dd_kupisch_free(k) };
}

#[test]
fn infinite_global_dimension() {
    let k = parse("cyclic:4,5");
    let mut g = finite(0);
    assert_eq!(unsafe { dd_kupisch_invariants(k, ptr::null_mut(), &mut g, ptr::null_mut()) }, DdStatus::Ok);
    assert_eq!(g.kind, DdExtNatKind::Infinity);
    unsafe { dd_kupisch_free(k) };
}

#[test]
fn errors_carry_status_and_message() {
    let bad = CString::new("linear:3,1").unwrap();
    let mut k = ptr::null_mut();
    assert_eq!(unsafe { dd_kupisch_parse(bad.as_ptr(), &mut k) }, DdStatus::ParseError);
    assert!(k.is_null());
    assert!(last_error().contains("exceeds"), "{}", last_error());
    assert_eq!(unsafe { dd_kupisch_parse(ptr::null(), &mut k) }, DdStatus::NullPointer);

    let k = parse("linear:2,1");
    let mut hom = 0;
    assert_eq!(unsafe { dd_hom_dim(k, 0, 3, 0, 1, &mut hom) }, DdStatus::InvalidModule);
    assert_eq!(unsafe { dd_hom_dim(k, 0, 1, 0, 1, ptr::null_mut()) }, DdStatus::NullPointer);
    unsafe { dd_kupisch_free(k) };

    let k = parse("cyclic:2,2");
    let (mut d, mut has) = (finite(0), 0);
    assert_eq!(unsafe { dd_property_star(k, &mut d, &mut has) }, DdStatus::Unsupported);
    unsafe { dd_kupisch_free(k) };
    unsafe { dd_kupisch_free(ptr::null_mut()) };
}

#[test]
fn property_star_and_endo_handles() {
    let k = parse("linear:3,3,3,3,2,1");
    let (mut d, mut has) = (finite(0), -2);
    assert_eq!(unsafe { dd_property_star(k, &mut d, &mut has) }, DdStatus::Ok);
    assert_eq!((d, has), (finite(3), 1));

    let mut e = ptr::null_mut();
    assert_eq!(unsafe { dd_endo_tilting(k, 1, &mut e) }, DdStatus::Ok);
    let mut dom = finite(9);
    assert_eq!(unsafe { dd_endo_domdim(e, &mut dom) }, DdStatus::Ok);
    assert_eq!(dom, finite(1));
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { dd_endo_json(e, &mut json) }, DdStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    assert!(v["labels"].is_array() && v["summands"].is_array());
    unsafe {
        dd_string_free(json);
        dd_endo_free(e);
    }

    let mods = CString::new("M(0,3) + M(5,1)").unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { dd_endo_modules(k, mods.as_ptr(), &mut e) }, DdStatus::Ok);
    let (mut dim, mut vertices) = (0, 0);
    assert_eq!(unsafe { dd_endo_dims(e, &mut dim, &mut vertices) }, DdStatus::Ok);
    assert_eq!(vertices, 2);
    assert_eq!(dim, 2);
    unsafe { dd_endo_free(e) };

    let mods = CString::new("M(0,9)").unwrap();
    assert_eq!(unsafe { dd_endo_modules(k, mods.as_ptr(), &mut e) }, DdStatus::InvalidModule);
    unsafe { dd_kupisch_free(k) };
}

#[test]
fn verification_report_over_the_boundary() {
    let (mut json, mut passed) = (ptr::null_mut(), 0);
    assert_eq!(unsafe { dd_verify_json(1, &mut json, &mut passed) }, DdStatus::Ok);
    assert_eq!(passed, 1);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    unsafe { dd_string_free(json) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["passed"], serde_json::json!(true));
    assert_eq!(unsafe { dd_verify_json(0, &mut json, &mut passed) }, DdStatus::Unsupported);
}

#[test]
fn version_matches_the_crate() {
    let v = unsafe { CStr::from_ptr(dd_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export_and_compiles() {
    let header_path = concat!(env!("CARGO_MANIFEST_DIR"), "/include/domdim.h");
    let header = std::fs::read_to_string(header_path).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> =
        source.lines().filter_map(|l| l.split("extern \"C\" fn ").nth(1)).map(|rest| rest.split('(').next().unwrap()).collect();
    assert!(exports.len() >= 15);
    for f in &exports {
        assert!(header.contains(&format!("{f}(")), "{f} missing from the header");
    }
    for cc in ["cc", "clang"] {
        let Ok(status) = Command::new(cc).args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header_path]).status() else {
            continue;
        };
        assert!(status.success(), "{cc} rejected the header");
        return;
    }
}
