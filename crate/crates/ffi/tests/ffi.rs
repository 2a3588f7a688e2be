use std::ffi::{c_char, CStr, CString};
use std::ptr;

use peakalg_ffi::*;

fn take_string(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { peakalg_string_free(s) };
    out
}

fn parse(text: &str, n: u32) -> *mut PeakalgElement {
    let c = CString::new(text).unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { peakalg_element_parse(c.as_ptr(), n, &mut e) }, PEAKALG_OK);
    e
}

fn equal(a: *const PeakalgElement, b: *const PeakalgElement) -> bool {
    let mut eq = -1;
    assert_eq!(unsafe { peakalg_element_equal(a, b, &mut eq) }, PEAKALG_OK);
    eq == 1
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(peakalg_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn zeta_two_is_the_logarithm() {
    let mut z = ptr::null_mut();
    assert_eq!(unsafe { peakalg_zeta(2, 0, &mut z) }, PEAKALG_OK);
    let want = parse("S2 - 1/2 S11", 2);
    assert!(equal(z, want));

    // Lie idempotent: ζ_2 ∗ ζ_2 = ζ_2.
    let mut zz = ptr::null_mut();
    assert_eq!(unsafe { peakalg_element_product(z, z, &mut zz) }, PEAKALG_OK);
    assert!(equal(zz, z));

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { peakalg_element_to_json(z, &mut json) }, PEAKALG_OK);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["weight"], 2);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);

    unsafe {
        peakalg_element_free(z);
        peakalg_element_free(zz);
        peakalg_element_free(want);
    }
}

#[test]
fn idempotent_systems_have_the_right_size() {
    for (family, n, r, size) in [(PEAKALG_FAMILY_A, 5, 0, 7), (PEAKALG_FAMILY_B, 2, 0, 4), (PEAKALG_FAMILY_PEAK, 5, 2, 6)] {
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { peakalg_idempotents(family, n, r, &mut s) }, PEAKALG_OK);
        let mut len = 0;
        assert_eq!(unsafe { peakalg_system_len(s, &mut len) }, PEAKALG_OK);
        assert_eq!(len, size);

        let mut total = 0;
        for i in 0..len {
            let mut e = ptr::null_mut();
            assert_eq!(unsafe { peakalg_system_get(s, i, &mut e) }, PEAKALG_OK);
            let mut sq = ptr::null_mut();
            assert_eq!(unsafe { peakalg_element_product(e, e, &mut sq) }, PEAKALG_OK);
            assert!(equal(sq, e));
            let mut terms = 0;
            assert_eq!(unsafe { peakalg_element_len(e, &mut terms) }, PEAKALG_OK);
            total += terms;
            unsafe {
                peakalg_element_free(e);
                peakalg_element_free(sq);
            }
        }
        assert!(total > 0);
        let mut e = ptr::null_mut();
        assert_eq!(unsafe { peakalg_system_get(s, len, &mut e) }, PEAKALG_ERR_RANGE);
        unsafe { peakalg_system_free(s) };
    }
}

#[test]
fn cartan_four_two() {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { peakalg_cartan_new(4, 2, &mut c) }, PEAKALG_OK);
    let mut size = 0;
    assert_eq!(unsafe { peakalg_cartan_size(c, &mut size) }, PEAKALG_OK);
    assert_eq!(size, 4);

    let mut label = ptr::null_mut();
    assert_eq!(unsafe { peakalg_cartan_label(c, 0, &mut label) }, PEAKALG_OK);
    assert_eq!(take_string(label), "4;");

    let mut len = 0;
    assert_eq!(unsafe { peakalg_cartan_entry(c, 0, 1, ptr::null_mut(), 0, &mut len) }, PEAKALG_ERR_RANGE);
    assert_eq!(len, 2);
    let mut coeffs = [7i64; 4];
    assert_eq!(unsafe { peakalg_cartan_entry(c, 0, 1, coeffs.as_mut_ptr(), 4, &mut len) }, PEAKALG_OK);
    assert_eq!(&coeffs[..len], &[0, 1]);
    assert_eq!(unsafe { peakalg_cartan_entry(c, 1, 0, coeffs.as_mut_ptr(), 4, &mut len) }, PEAKALG_OK);
    assert_eq!(len, 0);

    let mut trace = 0;
    for i in 0..size {
        let mut v = 0;
        assert_eq!(unsafe { peakalg_cartan_at_one(c, i, i, &mut v) }, PEAKALG_OK);
        trace += v;
    }
    assert_eq!(trace, 4);
    unsafe { peakalg_cartan_free(c) };
}

#[test]
fn errors_are_reported_as_codes() {
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { peakalg_zeta(0, 0, &mut e) }, PEAKALG_ERR_ARGUMENT);
    assert_eq!(unsafe { peakalg_zeta(3, 1, &mut e) }, PEAKALG_ERR_ARGUMENT);
    assert_eq!(unsafe { peakalg_zeta(3, 0, ptr::null_mut()) }, PEAKALG_ERR_NULL);

    let bad = CString::new("S2 + S3").unwrap();
    assert_eq!(unsafe { peakalg_element_parse(bad.as_ptr(), 2, &mut e) }, PEAKALG_ERR_ARGUMENT);
    assert!(e.is_null());

    let a = parse("S2", 2);
    let b = parse("S3", 3);
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { peakalg_element_product(a, b, &mut p) }, PEAKALG_ERR_ALGEBRA);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { peakalg_idempotents(9, 3, 0, &mut s) }, PEAKALG_ERR_ARGUMENT);
    assert_eq!(unsafe { peakalg_idempotents(PEAKALG_FAMILY_PEAK, 3, 1, &mut s) }, PEAKALG_ERR_ARGUMENT);
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { peakalg_cartan_new(3, 0, &mut c) }, PEAKALG_ERR_ARGUMENT);

    unsafe {
        peakalg_element_free(a);
        peakalg_element_free(b);
        peakalg_element_free(ptr::null_mut());
        peakalg_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/peakalg.h")).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() > 10);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from the header");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let src = std::env::temp_dir().join(format!("peakalg_ffi_{}.c", std::process::id()));
    std::fs::write(&src, "#include \"peakalg.h\"\nint main(void) { return peakalg_version() == 0; }\n").unwrap();
    let status = std::process::Command::new(cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I", concat!(env!("CARGO_MANIFEST_DIR"), "/include")])
        .arg(&src)
        .status()
        .unwrap();
    std::fs::remove_file(&src).ok();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
        .ok_or(())
}
