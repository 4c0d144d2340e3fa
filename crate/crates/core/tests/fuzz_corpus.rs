//! Replays the fuzz corpus seeds through the same round-trip checks the
//! fuzz targets make.

use std::path::PathBuf;

use ktri_core::bijection::{psi, psi_inverse};
use ktri_core::dyck::{dominates, DyckPath};
use ktri_core::format::{
    parse_label, parse_pair, parse_paths, parse_triangulation, parse_tuple, write_pair, write_triangulation,
    write_tuple,
};

fn seeds(target: &str) -> Vec<String> {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fuzz", "corpus", target].iter().collect();
    let mut entries: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    entries.sort();
    assert!(!entries.is_empty(), "no seeds for {target}");
    entries.iter().map(|p| std::fs::read_to_string(p).unwrap()).collect()
}

#[test]
fn triangulation_seeds() {
    for text in seeds("parse_triangulation") {
        let set = parse_triangulation(&text).unwrap();
        assert_eq!(write_triangulation(&set), text);
    }
}

#[test]
fn pair_seeds() {
    let mut dominating = 0;
    for text in seeds("parse_pair") {
        let (p, q) = parse_pair(&text).unwrap();
        assert_eq!(write_pair(&p, &q), text);
        if dominates(&p, &q).unwrap() {
            dominating += 1;
            assert_eq!(psi(&psi_inverse(&p, &q).unwrap()).unwrap(), (p, q));
        }
    }
    assert!(dominating > 0);
}

#[test]
fn tuple_seeds() {
    for text in seeds("parse_tuple") {
        assert_eq!(write_tuple(&parse_tuple(&text).unwrap()), text);
    }
}

#[test]
fn label_seeds() {
    for text in seeds("parse_label") {
        assert_eq!(parse_label(&text).unwrap().to_string(), text);
    }
}

#[test]
fn path_seeds() {
    for text in seeds("dyck_path") {
        if let Ok(p) = text.parse::<DyckPath>() {
            assert_eq!(p.to_string(), text);
        }
        let _ = parse_paths(&text);
    }
}
