//! Line-oriented text formats.
//!
//! * Triangulation: `k=<k> n=<n>` then the comma-separated diagonals `a-b`
//!   in `(a, b)` order, or `-` for the empty set.
//! * Pair: two step strings, `P` then `Q`.
//! * Tuple: `k` step strings, top path first.
//! * Label: `(d1,d2,...)`.
//!
//! Every parser accepts an optional final newline and nothing else extra.

use crate::dyck::{DyckPath, PathTuple};
use crate::error::{Error, Result};
use crate::gentree2::TreeLabel;
use crate::polygon::{Diagonal, DiagonalSet, PolygonContext};

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn split_lines(text: &str) -> Vec<&str> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    body.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect()
}

fn parse_number(s: &str, line: usize) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return Err(err(line, format!("expected a number, found {s:?}")));
    }
    s.parse().map_err(|_| err(line, format!("number out of range: {s}")))
}

pub fn parse_triangulation(text: &str) -> Result<DiagonalSet> {
    let lines = split_lines(text);
    if lines.len() != 2 {
        return Err(err(lines.len().min(3), format!("expected 2 lines, found {}", lines.len())));
    }
    let header: Vec<&str> = lines[0].split(' ').collect();
    let (k, n) = match header.as_slice() {
        [k, n] => match (k.strip_prefix("k="), n.strip_prefix("n=")) {
            (Some(k), Some(n)) => (parse_number(k, 1)?, parse_number(n, 1)?),
            _ => return Err(err(1, "expected `k=<k> n=<n>`")),
        },
        _ => return Err(err(1, "expected `k=<k> n=<n>`")),
    };
    let ctx = PolygonContext::new(n, k).map_err(|e| err(1, e.to_string()))?;
    let mut diagonals = Vec::new();
    if lines[1] != "-" {
        for item in lines[1].split(',') {
            let Some((a, b)) = item.split_once('-') else {
                return Err(err(2, format!("expected `a-b`, found {item:?}")));
            };
            let (a, b) = (parse_number(a, 2)?, parse_number(b, 2)?);
            if a >= b {
                return Err(err(2, format!("diagonal {item} must have a < b")));
            }
            if !ctx.is_cell(a, b) {
                return Err(err(2, format!("{item} is not a nontrivial diagonal of the {n}-gon for k={k}")));
            }
            let d = Diagonal { a, b };
            if diagonals.last().is_some_and(|last: &Diagonal| *last >= d) {
                return Err(err(2, "diagonals must be strictly increasing in (a, b) order"));
            }
            diagonals.push(d);
        }
    }
    DiagonalSet::new(ctx, diagonals)
}

pub fn write_triangulation(set: &DiagonalSet) -> String {
    let body = if set.is_empty() {
        "-".to_string()
    } else {
        set.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    };
    format!("{}\n{}\n", set.ctx(), body)
}

/// The diagonal list alone, as on the second line of the triangulation format.
pub fn diagonal_list(set: &DiagonalSet) -> String {
    if set.is_empty() {
        "-".to_string()
    } else {
        set.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// One Dyck path per line, all of the same semilength.
pub fn parse_paths(text: &str) -> Result<Vec<DyckPath>> {
    let lines = split_lines(text);
    let mut paths: Vec<DyckPath> = Vec::with_capacity(lines.len());
    for (i, l) in lines.iter().enumerate() {
        let p: DyckPath = l.parse().map_err(|e: Error| err(i + 1, e.to_string()))?;
        if let Some(first) = paths.first() {
            if first.semilength() != p.semilength() {
                return Err(err(i + 1, "paths have different semilengths"));
            }
        }
        paths.push(p);
    }
    Ok(paths)
}

/// Parses a pair file. Domination is not checked here.
pub fn parse_pair(text: &str) -> Result<(DyckPath, DyckPath)> {
    let mut paths = parse_paths(text)?;
    if paths.len() != 2 {
        return Err(err(paths.len().min(3), format!("expected 2 paths, found {}", paths.len())));
    }
    let q = paths.pop().expect("two paths");
    let p = paths.pop().expect("two paths");
    Ok((p, q))
}

pub fn write_pair(p: &DyckPath, q: &DyckPath) -> String {
    format!("{p}\n{q}\n")
}

pub fn parse_tuple(text: &str) -> Result<PathTuple> {
    PathTuple::new(parse_paths(text)?)
}

pub fn write_tuple(t: &PathTuple) -> String {
    t.paths().iter().map(|p| format!("{p}\n")).collect()
}

pub fn parse_label(text: &str) -> Result<TreeLabel> {
    let inner = text
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err(1, "label must be written `(d1,d2,...)`"))?;
    if inner.is_empty() {
        return Ok(TreeLabel(Vec::new()));
    }
    inner
        .split(',')
        .map(|x| {
            parse_number(x, 1).and_then(|v| u32::try_from(v).map_err(|_| err(1, "label entry out of range")))
        })
        .collect::<Result<Vec<u32>>>()
        .map(TreeLabel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangulation_round_trip() {
        let text = "k=2 n=6\n1-4,2-5\n";
        let set = parse_triangulation(text).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(write_triangulation(&set), text);
        let empty = parse_triangulation("k=2 n=5\n-").unwrap();
        assert_eq!(write_triangulation(&empty), "k=2 n=5\n-\n");
    }

    #[test]
    fn triangulation_rejections() {
        for bad in [
            "",
            "k=2 n=6",
            "k=2 n=6\n1-4\nextra",
            "k=2  n=6\n1-4",
            "n=6 k=2\n1-4",
            "k=2 n=4\n-",
            "k=2 n=6\n2-5,1-4",
            "k=2 n=6\n1-4,1-4",
            "k=2 n=6\n1-3",
            "k=2 n=6\n4-1",
            "k=2 n=6\n1-4,",
            "k=2 n=6\n+1-4",
            "k=2 n=6\n",
            "k=2 n=99999999999999999999999\n-",
        ] {
            assert!(parse_triangulation(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn pair_and_tuple() {
        let (p, q) = parse_pair("NNEE\nNENE\n").unwrap();
        assert_eq!(write_pair(&p, &q), "NNEE\nNENE\n");
        assert!(parse_pair("NNEE\nNE\n").is_err());
        assert!(parse_pair("NNEE\n").is_err());
        let t = parse_tuple("NNEE\nNNEE\nNENE").unwrap();
        assert_eq!(write_tuple(&t), "NNEE\nNNEE\nNENE\n");
        assert_eq!(parse_tuple("NENE\nNNEE"), Err(Error::NotDominating));
    }

    #[test]
    fn labels() {
        assert_eq!(parse_label("(0,1,3,2)").unwrap(), TreeLabel(vec![0, 1, 3, 2]));
        assert_eq!(parse_label("(0,1,3,2)").unwrap().to_string(), "(0,1,3,2)");
        assert!(parse_label("0,1").is_err());
        assert!(parse_label("(0,,1)").is_err());
        assert!(parse_label("(0, 1)").is_err());
    }
}
