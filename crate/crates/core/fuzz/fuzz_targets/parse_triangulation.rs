#![no_main]

use ktri_core::bijection::psi;
use ktri_core::format::{parse_triangulation, write_triangulation};
use ktri_core::gentree_k::parent_k;
use ktri_core::KTriangulation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(set) = parse_triangulation(text) else { return };
    assert_eq!(parse_triangulation(&write_triangulation(&set)).unwrap(), set);
    if set.ctx().n() > 24 {
        return;
    }
    let Ok(t) = KTriangulation::new(set) else { return };
    if t.ctx().k() == 2 {
        psi(&t).unwrap();
    }
    if !t.is_root() {
        parent_k(&t).unwrap();
    }
});
