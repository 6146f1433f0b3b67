use std::ffi::{CStr, CString};
use std::ptr;

use gla_core::admissibility::{btheta_metric, Involution};
use gla_core::io::AlgebraDocument;
use gla_core::registry;
use gla_ffi::*;

fn load(name: &str) -> *mut GlaAlgebra {
    let name = CString::new(name).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { gla_algebra_from_registry(name.as_ptr(), &mut h) }, GlaStatus::Ok);
    assert!(!h.is_null());
    h
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(gla_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn registry_handle_lifecycle() {
    let h = load("heis3");
    let mut dim = 0;
    let mut valid = false;
    unsafe {
        assert_eq!(gla_algebra_dim(h, &mut dim), GlaStatus::Ok);
        assert_eq!(gla_algebra_validate(h, true, &mut valid), GlaStatus::Ok);
        gla_algebra_free(h);
        gla_algebra_free(ptr::null_mut());
    }
    assert_eq!(dim, 4);
    assert!(valid);
}

#[test]
fn unknown_name_and_nulls() {
    let name = CString::new("no-such-algebra").unwrap();
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(gla_algebra_from_registry(name.as_ptr(), &mut h), GlaStatus::Parse);
        assert!(!last_error().is_empty());
        assert_eq!(gla_algebra_from_registry(ptr::null(), &mut h), GlaStatus::NullPointer);
        assert_eq!(gla_algebra_dim(ptr::null(), ptr::null_mut()), GlaStatus::NullPointer);
    }
    assert!(h.is_null());
}

#[test]
fn json_round_trip_through_handles() {
    let h = load("sl2-graded");
    let mut text = ptr::null_mut();
    unsafe {
        assert_eq!(gla_algebra_to_json(h, &mut text), GlaStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(gla_algebra_from_json(text, &mut back), GlaStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(gla_algebra_to_json(back, &mut again), GlaStatus::Ok);
        assert_eq!(CStr::from_ptr(text), CStr::from_ptr(again));
        gla_string_free(text);
        gla_string_free(again);
        gla_algebra_free(back);
        gla_algebra_free(h);
    }
}

#[test]
fn malformed_json_is_a_parse_error() {
    let bad = CString::new("{\"name\": 3}").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { gla_algebra_from_json(bad.as_ptr(), &mut h) }, GlaStatus::Parse);
    assert!(last_error().starts_with("malformed document"));
}

#[test]
fn cohomology_and_admissibility() {
    let h = load("sl2-graded");
    let (mut h1_0, mut h1_1, mut adm) = (9, 9, false);
    unsafe {
        assert_eq!(gla_cohomology_dim(h, 1, 0, &mut h1_0), GlaStatus::Ok);
        assert_eq!(gla_cohomology_dim(h, 1, 1, &mut h1_1), GlaStatus::Ok);
        assert_eq!(gla_check_admissible(h, &mut adm), GlaStatus::Ok);
        gla_algebra_free(h);
    }
    assert_eq!((h1_0, h1_1), (0, 0));
    // The identity metric is not admissible on sl2; -B(., θ.) is.
    assert!(!adm);

    let g = registry::get("sl2-graded").unwrap();
    let theta = Involution::new(&g, registry::standard_involution("sl2-graded").unwrap()).unwrap();
    let doc = AlgebraDocument::from_algebra(&g).with_metric(&btheta_metric(&g, &theta).unwrap());
    let text = CString::new(doc.emit()).unwrap();
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(gla_algebra_from_json(text.as_ptr(), &mut h), GlaStatus::Ok);
        assert_eq!(gla_check_admissible(h, &mut adm), GlaStatus::Ok);
        gla_algebra_free(h);
    }
    assert!(adm);
}

#[test]
fn prolongation_buffer_protocol() {
    let h = load("heis3");
    let mut len = 0;
    let mut finite = false;
    unsafe {
        assert_eq!(gla_prolongation_dims(h, 4, ptr::null_mut(), 0, &mut len, &mut finite), GlaStatus::BufferTooSmall);
        assert!(len > 0);
        let mut buf = vec![usize::MAX; len];
        assert_eq!(gla_prolongation_dims(h, 4, buf.as_mut_ptr(), buf.len(), &mut len, &mut finite), GlaStatus::Ok);
        assert!(buf.iter().all(|&d| d == 0));
        assert!(finite);
        gla_algebra_free(h);
    }
}

#[test]
fn cotangent_and_ctg_report() {
    let g = load("nonab-g0");
    let mut t = ptr::null_mut();
    let mut json = ptr::null_mut();
    let mut agree = false;
    let mut dim = 0;
    unsafe {
        assert_eq!(gla_algebra_cotangent(g, &mut t), GlaStatus::Ok);
        assert_eq!(gla_algebra_dim(t, &mut dim), GlaStatus::Ok);
        assert_eq!(gla_ctg_report_json(g, &mut json, &mut agree), GlaStatus::Ok);
        let value: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert!(value["rows"].is_array());
        gla_string_free(json);
        gla_algebra_free(t);
        gla_algebra_free(g);
    }
    assert!(agree);
    let mut n = 0;
    let g = load("nonab-g0");
    unsafe {
        gla_algebra_dim(g, &mut n);
        gla_algebra_free(g);
    }
    assert_eq!(dim, 2 * n);
}
