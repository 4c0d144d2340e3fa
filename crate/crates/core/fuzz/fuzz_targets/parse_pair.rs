#![no_main]

use ktri_core::bijection::{psi, psi_inverse};
use ktri_core::dyck::dominates;
use ktri_core::format::{parse_pair, write_pair};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok((p, q)) = parse_pair(text) else { return };
    assert_eq!(parse_pair(&write_pair(&p, &q)).unwrap(), (p.clone(), q.clone()));
    if p.semilength() > 20 || !dominates(&p, &q).unwrap() {
        return;
    }
    let t = psi_inverse(&p, &q).unwrap();
    assert_eq!(psi(&t).unwrap(), (p, q));
});
