use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use patience_lab::report::RunReport;
use patience_lab::shadow::ShadowDiagram;
use patience_lab::Tableau;
use patience_lab_ffi::*;

fn parse(s: &str) -> *mut PlPermutation {
    let text = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { pl_permutation_parse(text.as_ptr(), &mut out) },
        PlStatus::Ok
    );
    out
}

fn take(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { pl_string_free(s) };
    owned
}

fn last_error() -> String {
    let p = pl_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn columns(c: *const PlPileConfig) -> Vec<Vec<usize>> {
    unsafe {
        (0..pl_piles_count(c))
            .map(|j| {
                let mut len = 0;
                assert_eq!(pl_piles_column_len(c, j, &mut len), PlStatus::Ok);
                (0..len)
                    .map(|i| {
                        let mut v = 0;
                        assert_eq!(pl_piles_get(c, j, i, &mut v), PlStatus::Ok);
                        v
                    })
                    .collect()
            })
            .collect()
    }
}

#[test]
fn xps_round_trip_through_handles() {
    let p = parse("64518723");
    let (mut r, mut s) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(pl_permutation_len(p), 8);
        assert_eq!(pl_xps(p, &mut r, &mut s), PlStatus::Ok);
        assert_eq!(columns(r), vec![vec![6, 4, 1], vec![5, 2], vec![8, 7, 3]]);
        assert_eq!(columns(s), vec![vec![4, 2, 1], vec![7, 3], vec![8, 6, 5]]);

        let mut back = ptr::null_mut();
        assert_eq!(pl_xps_inverse(r, s, &mut back), PlStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(pl_permutation_to_string(back, &mut text), PlStatus::Ok);
        assert_eq!(take(text), "6 4 5 1 8 7 2 3");

        let mut word = ptr::null_mut();
        assert_eq!(pl_rpw(r, &mut word), PlStatus::Ok);
        let got: Vec<usize> = (0..8)
            .map(|i| {
                let mut v = 0;
                assert_eq!(pl_permutation_get(word, i, &mut v), PlStatus::Ok);
                v
            })
            .collect();
        assert_eq!(got, vec![6, 4, 1, 5, 2, 8, 7, 3]);

        let mut avoids = false;
        assert_eq!(pl_avoids_3bar142(word, &mut avoids), PlStatus::Ok);
        assert!(avoids);
        let mut legal = false;
        assert_eq!(pl_piles_is_legal(r, &mut legal), PlStatus::Ok);
        assert!(legal);

        pl_permutation_free(word);
        pl_permutation_free(back);
        pl_piles_free(r);
        pl_piles_free(s);
        pl_permutation_free(p);
    }
}

#[test]
fn array_constructor_validates() {
    let mut out = ptr::null_mut();
    unsafe {
        let ok = [2usize, 3, 1];
        assert_eq!(
            pl_permutation_from_array(ok.as_ptr(), 3, &mut out),
            PlStatus::Ok
        );
        pl_permutation_free(out);

        let bad = [2usize, 2, 1];
        assert_eq!(
            pl_permutation_from_array(bad.as_ptr(), 3, &mut out),
            PlStatus::NotAPermutation
        );
        assert!(last_error().contains("not a permutation"));

        assert_eq!(
            pl_permutation_from_array(ptr::null(), 0, &mut out),
            PlStatus::Ok
        );
        assert_eq!(pl_permutation_len(out), 0);
        pl_permutation_free(out);
        assert_eq!(
            pl_permutation_from_array(ptr::null(), 2, &mut out),
            PlStatus::NullPointer
        );
    }
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    let garbage = CString::new("1 x 3").unwrap();
    unsafe {
        assert_eq!(
            pl_permutation_parse(garbage.as_ptr(), &mut out),
            PlStatus::Parse
        );
        assert_eq!(
            pl_permutation_parse(ptr::null(), &mut out),
            PlStatus::NullPointer
        );
        let invalid = [0xffu8, 0];
        assert_eq!(
            pl_permutation_parse(invalid.as_ptr().cast(), &mut out),
            PlStatus::InvalidUtf8
        );

        let p = parse("21");
        let mut v = 0;
        assert_eq!(pl_permutation_get(p, 2, &mut v), PlStatus::OutOfRange);
        assert!(last_error().contains("out of range"));
        assert_eq!(
            pl_permutation_get(p, 0, ptr::null_mut()),
            PlStatus::NullPointer
        );
        pl_permutation_free(p);

        // R = S = [3,1],[2] has equal shapes but no preimage
        let json = CString::new(r#"{"columns":[[3,1],[2]]}"#).unwrap();
        let (mut r, mut s) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(pl_piles_from_json(json.as_ptr(), &mut r), PlStatus::Ok);
        assert_eq!(pl_piles_from_json(json.as_ptr(), &mut s), PlStatus::Ok);
        assert_eq!(pl_xps_inverse(r, s, &mut out), PlStatus::NoPreimage);
        pl_piles_free(s);

        let other = CString::new(r#"{"columns":[[3,2,1]]}"#).unwrap();
        assert_eq!(pl_piles_from_json(other.as_ptr(), &mut s), PlStatus::Ok);
        assert_eq!(pl_xps_inverse(r, s, &mut out), PlStatus::ShapeMismatch);
        let mut len = 0;
        assert_eq!(pl_piles_column_len(s, 1, &mut len), PlStatus::OutOfRange);
        pl_piles_free(r);
        pl_piles_free(s);

        let bad = CString::new(r#"{"columns":[[1,3]]}"#).unwrap();
        assert_eq!(
            pl_piles_from_json(bad.as_ptr(), &mut r),
            PlStatus::Malformed
        );

        // NULL handles are tolerated where documented
        assert_eq!(pl_permutation_len(ptr::null()), 0);
        assert_eq!(pl_piles_count(ptr::null()), 0);
        pl_permutation_free(ptr::null_mut());
        pl_piles_free(ptr::null_mut());
        pl_string_free(ptr::null_mut());
    }
}

#[test]
fn json_outputs_parse_back() {
    let p = parse("45312");
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(pl_rsk_json(p, &mut out), PlStatus::Ok);
        let (ip, rq): (Tableau, Tableau) = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(ip, rq);

        assert_eq!(pl_sw_iterates_json(p, &mut out), PlStatus::Ok);
        let sw: Vec<ShadowDiagram> = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(sw.len(), 3);

        assert_eq!(pl_ne_iterates_json(p, &mut out), PlStatus::Ok);
        let ne: Vec<ShadowDiagram> = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(ne[0].lines().len(), 2);

        assert_eq!(pl_run_json(p, &mut out), PlStatus::Ok);
        let report: RunReport = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(report.insertion_piles, report.recording_piles);

        let mut r = ptr::null_mut();
        let mut s = ptr::null_mut();
        assert_eq!(pl_xps(p, &mut r, &mut s), PlStatus::Ok);
        assert_eq!(pl_piles_to_json(r, &mut out), PlStatus::Ok);
        assert_eq!(take(out), r#"{"columns":[[4,3,1],[5,2]]}"#);

        let mut free = true;
        assert_eq!(pl_crossing_free(p, &mut free), PlStatus::Ok);
        assert!(!free);

        pl_piles_free(r);
        pl_piles_free(s);
        pl_permutation_free(p);
    }
}

#[test]
fn errors_are_per_thread() {
    let mut out = ptr::null_mut();
    let garbage = CString::new("zz").unwrap();
    assert_eq!(
        unsafe { pl_permutation_parse(garbage.as_ptr(), &mut out) },
        PlStatus::Parse
    );
    let other = std::thread::spawn(|| pl_last_error().is_null())
        .join()
        .unwrap();
    assert!(other);
    assert!(!pl_last_error().is_null());
}
