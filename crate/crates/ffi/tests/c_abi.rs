use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use orbcoh_ffi::*;
use serde_json::Value;

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    orb_string_free(p);
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(orb_last_error_message()) }.to_str().unwrap().to_string()
}

#[test]
fn group_handle_lifecycle() {
    let name = CString::new("q8").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(orb_group_from_catalog(name.as_ptr(), &mut g), OrbStatus::Ok);
        assert_eq!(orb_group_order(g), 8);
        assert_eq!(orb_group_dimension(g), 2);
        assert_eq!(orb_group_class_count(g), 5);
        assert!(orb_group_is_sl(g));

        let mut s = ptr::null_mut();
        assert_eq!(orb_sectors_json(g, &mut s), OrbStatus::Ok);
        let v: Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["sectors"].as_array().unwrap().len(), 5);

        assert_eq!(orb_hodge_linear_json(g, &mut s), OrbStatus::Ok);
        let v: Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["entries"]["1,1"], 4);

        let mut r = ptr::null_mut();
        assert_eq!(orb_ring_linear(g, &mut r), OrbStatus::Ok);
        assert_eq!(orb_ring_dim(r), 5);
        assert_eq!(orb_ring_verify(r, ptr::null_mut()), OrbStatus::Ok);
        orb_ring_free(r);
        orb_group_free(g);
    }
}

#[test]
fn errors_carry_status_and_message() {
    let bad = CString::new(r#"{"conductor":1,"dimension":1,"generators":[[["1//2"]]]}"#).unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(orb_group_from_json(bad.as_ptr(), 0, &mut g), OrbStatus::Parse);
        assert!(g.is_null());
    }
    assert!(last_error().contains("generators[0][0][0]"), "{}", last_error());

    let q8 = CString::new(orbcoh::catalog::group_json("q8").unwrap()).unwrap();
    unsafe {
        assert_eq!(orb_group_from_json(q8.as_ptr(), 4, &mut g), OrbStatus::CapExceeded);
    }

    let s3 = CString::new("s3").unwrap();
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(orb_group_from_catalog(s3.as_ptr(), &mut g), OrbStatus::Ok);
        assert_eq!(orb_ring_linear(g, &mut r), OrbStatus::Validation);
        orb_group_free(g);
    }
    assert!(last_error().contains("SL"));

    let (mut h11, mut h21) = (0u64, 0u64);
    unsafe {
        assert_eq!(orb_catalog_bv(10, 8, 0, &mut h11, &mut h21), OrbStatus::Validation);
        assert_eq!(orb_catalog_bv(18, 4, 1, &mut h11, &mut h21), OrbStatus::Ok);
    }
    assert_eq!((h11, h21), (51, 3));
}

#[test]
fn rings_and_tables() {
    let mut r = ptr::null_mut();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(orb_ring_wp(2, 3, &mut r), OrbStatus::Ok);
        assert_eq!(orb_ring_verify(r, &mut s), OrbStatus::Ok);
        let report: Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(report["passed"], true);
        assert_eq!(orb_ring_to_json(r, &mut s), OrbStatus::Ok);
        let v: Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["basis"], serde_json::json!(["1", "a^1", "b^1", "b^2", "t"]));
        orb_ring_free(r);

        assert_eq!(orb_catalog_wp_json(2, 4, &mut s), OrbStatus::Validation);
        assert_eq!(orb_catalog_wp_json(1, 4, &mut s), OrbStatus::Ok);
        let v: Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["total"], 5);

        let kummer = CString::new(orbcoh::catalog::torus_json("kummer").unwrap()).unwrap();
        assert_eq!(orb_torus_betti_json(kummer.as_ptr(), 0, &mut s), OrbStatus::Ok);
        let v: Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["entries"]["2"], 22);
    }
}

#[test]
fn orbicurve_chi() {
    let marks = [CString::new("3:1,2").unwrap()];
    let ptrs: Vec<_> = marks.iter().map(|m| m.as_ptr()).collect();
    let c = CString::new("1").unwrap();
    let mut chi = 99i64;
    unsafe {
        assert_eq!(orb_orbicurve_chi(1, 2, ptrs.as_ptr(), 1, c.as_ptr(), &mut chi), OrbStatus::Ok);
        assert_eq!(chi, 0);
        let half = CString::new("1/2").unwrap();
        let status = orb_orbicurve_chi(1, 2, ptrs.as_ptr(), 1, half.as_ptr(), &mut chi);
        assert_eq!(status, OrbStatus::Validation);
        assert_eq!(orb_orbicurve_chi(0, 3, ptr::null(), 0, c.as_ptr(), &mut chi), OrbStatus::Ok);
        assert_eq!(chi, 4);
    }
}

/// Directory holding the library artifacts of this build.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let dir = artifact_dir();
    let lib = dir.join("liborbcoh_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let tmp = std::env::temp_dir().join(format!("orbcoh_ffi_c_{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let exe = tmp.join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "order 6 classes 3\nverify 0\nbv 15 15\nbad 2\n");
    let _ = std::fs::remove_dir_all(&tmp);
}
