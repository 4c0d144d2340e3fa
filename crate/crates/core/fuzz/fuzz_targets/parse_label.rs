#![no_main]

use ktri_core::format::parse_label;
use ktri_core::gentree2::label_children;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(label) = parse_label(text) else { return };
    assert_eq!(parse_label(&label.to_string()).unwrap(), label);
    if label.0.len() <= 64 && label.0.iter().all(|&d| d <= 64) {
        let _ = label_children(&label);
    }
});
