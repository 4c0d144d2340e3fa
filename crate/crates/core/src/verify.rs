//! Exhaustive invariant checks over small ranges.
//!
//! Each check walks a collection of objects and stops at the first
//! counterexample, which it reports in the text formats of [`crate::format`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::bijection::{
    color_diagram_with, column_counts_from_pair, psi, psi_inverse, psi_tree, Coloring, TieBreak,
};
use crate::dyck::{enumerate_tuples, determinant_count, PairEncoding, PathTuple};
use crate::error::Result;
use crate::format::diagonal_list;
use crate::gentree2::{
    children2, corner, label2, label_children, pair_children, pair_label, pair_parent, parent2, TreeLabel,
};
use crate::gentree_k::{a_sequence, children_k, corner_k, enumerate_levels, parent_k};
use crate::guard::Guard;
use crate::polygon::{check_structure_lemmas, enumerate_brute, KTriangulation, PolygonContext};

/// Result of one property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub property: String,
    pub checked: usize,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "pass {} ({} checked)", self.property, self.checked),
            Some(c) => write!(f, "FAIL {}: {c}", self.property),
        }
    }
}

fn check<T>(
    property: impl Into<String>,
    items: impl IntoIterator<Item = T>,
    mut f: impl FnMut(T) -> std::result::Result<(), String>,
) -> Outcome {
    let mut checked = 0;
    for item in items {
        if let Err(e) = f(item) {
            return Outcome {
                property: property.into(),
                checked,
                failure: Some(e),
            };
        }
        checked += 1;
    }
    Outcome {
        property: property.into(),
        checked,
        failure: None,
    }
}

fn show(t: &KTriangulation) -> String {
    format!("{} {}", t.ctx(), diagonal_list(t))
}

fn show_pair(e: &PairEncoding) -> String {
    let (p, q) = e.to_paths();
    format!("{p}/{q}")
}

fn ok_or<E: fmt::Display>(r: std::result::Result<(), E>, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    r.map_err(|e| format!("{}: {e}", what()))
}

/// Cardinality, crossing-freeness and maximality.
pub fn triangulation_validity(ts: &[KTriangulation]) -> Outcome {
    check("triangulation validity", ts, |t| {
        if t.is_k_triangulation() && t.len() == t.ctx().diagonal_count() {
            Ok(())
        } else {
            Err(show(t))
        }
    })
}

/// Tree count, determinant and (when within the guard) brute force agree.
pub fn count_agreement(n: usize, k: usize, tree_count: usize, guard: &Guard) -> Outcome {
    let det = determinant_count(n, k).ok();
    let brute = PolygonContext::new(n, k)
        .ok()
        .and_then(|ctx| enumerate_brute(ctx, guard).ok())
        .map(|v| v.len());
    let mut out = check(format!("count agreement k={k} n={n}"), [()], |_| {
        let tree = BigUint::from(tree_count);
        if det.as_ref() != Some(&tree) {
            return Err(format!("tree {tree_count} vs determinant {det:?}"));
        }
        match brute {
            Some(b) if b != tree_count => Err(format!("tree {tree_count} vs brute {b}")),
            _ => Ok(()),
        }
    });
    if brute.is_none() && out.passed() {
        out.property.push_str(" (brute skipped)");
    }
    out
}

/// The structural lemmas on every triangulation.
pub fn structure_lemmas(ts: &[KTriangulation]) -> Outcome {
    check("structure lemmas", ts, |t| {
        let report = check_structure_lemmas(t);
        match report.checks.iter().find(|c| !c.passed()) {
            None => Ok(()),
            Some(c) => Err(format!("{} fails on {}: {:?}", c.lemma.name(), show(t), c.witness)),
        }
    })
}

/// `parent2(child) == T` for every child; `T` occurs once among its
/// parent's children.
pub fn tree2_round_trip(ts: &[KTriangulation]) -> Outcome {
    check("2-triangulation tree round trip", ts, |t| {
        for (choice, c) in children2(t).map_err(|e| format!("{}: {e}", show(t)))? {
            if parent2(&c).as_ref() != Ok(t) {
                return Err(format!("child {choice} of {}", show(t)));
            }
        }
        if !t.is_root() {
            let p = parent2(t).map_err(|e| format!("{}: {e}", show(t)))?;
            let hits = children2(&p)
                .map_err(|e| format!("{}: {e}", show(&p)))?
                .iter()
                .filter(|(_, c)| c == t)
                .count();
            if hits != 1 {
                return Err(format!("{} appears {hits} times among its parent's children", show(t)));
            }
        }
        Ok(())
    })
}

fn partition<P, T: Ord + Clone, F>(property: &str, prev: &[P], level: &[T], children: F) -> Outcome
where
    F: Fn(&P) -> Result<Vec<T>>,
{
    let mut images = Vec::new();
    let mut failure = None;
    for p in prev {
        match children(p) {
            Ok(c) => images.extend(c),
            Err(e) => {
                failure = Some(e.to_string());
                break;
            }
        }
    }
    images.sort();
    let mut expected = level.to_vec();
    expected.sort();
    if failure.is_none() && images != expected {
        let dup = images.windows(2).any(|w| w[0] == w[1]);
        failure = Some(format!(
            "{} images for {} objects{}",
            images.len(),
            expected.len(),
            if dup { ", with repeats" } else { "" }
        ));
    }
    Outcome {
        property: property.to_string(),
        checked: level.len(),
        failure,
    }
}

/// The children of level `n-1` are exactly level `n`, each once.
pub fn tree2_partition(prev: &[KTriangulation], level: &[KTriangulation]) -> Outcome {
    partition("2-triangulation tree partition", prev, level, |t| {
        Ok(children2(t)?.into_iter().map(|(_, c)| c).collect())
    })
}

/// Children labels follow the succession rule, in order, and are distinct.
pub fn label_coherence(ts: &[KTriangulation]) -> Outcome {
    check("2-triangulation label coherence", ts, |t| {
        let label = label2(t).map_err(|e| e.to_string())?;
        let kids = children2(t).map_err(|e| e.to_string())?;
        let got: Vec<TreeLabel> = kids.iter().map(|(_, c)| label2(c)).collect::<Result<_>>().map_err(|e| e.to_string())?;
        if got != label_children(&label) {
            return Err(format!("children of {} labeled {label}", show(t)));
        }
        for (choice, c) in &kids {
            let r = corner(c).map_err(|e| e.to_string())?;
            if r != choice.u || r < corner(t).map_err(|e| e.to_string())? {
                return Err(format!("child {choice} of {} has corner {r}", show(t)));
            }
        }
        Ok(())
    })
}

/// Round trip, label coherence and `s` monotonicity for pairs.
pub fn pair_tree(pairs: &[PairEncoding]) -> Outcome {
    check("pair tree round trip and labels", pairs, |e| {
        let kids = pair_children(e).map_err(|x| x.to_string())?;
        let mut got: Vec<TreeLabel> = Vec::new();
        for (choice, c) in &kids {
            if pair_parent(c).as_ref() != Ok(e) {
                return Err(format!("child {choice} of {}", show_pair(e)));
            }
            if c.s_param() != choice.t + 1 || c.s_param() > e.s_param() + 1 {
                return Err(format!("child {choice} of {} has s={}", show_pair(e), c.s_param()));
            }
            got.push(pair_label(c));
        }
        let mut want = label_children(&pair_label(e));
        got.sort();
        want.sort();
        if got != want {
            return Err(format!("children labels of {}", show_pair(e)));
        }
        Ok(())
    })
}

pub fn pair_partition(prev: &[PairEncoding], level: &[PairEncoding]) -> Outcome {
    partition("pair tree partition", prev, level, |e| {
        Ok(pair_children(e)?.into_iter().map(|(_, c)| c).collect())
    })
}

/// Both trees carry the same multiset of labels on a level.
pub fn label_multisets(ts: &[KTriangulation], pairs: &[PairEncoding]) -> Outcome {
    let mut a: Vec<TreeLabel> = Vec::new();
    let mut failure = None;
    for t in ts {
        match label2(t) {
            Ok(l) => a.push(l),
            Err(e) => {
                failure = Some(e.to_string());
                break;
            }
        }
    }
    let mut b: Vec<TreeLabel> = pairs.iter().map(pair_label).collect();
    a.sort();
    b.sort();
    if failure.is_none() && a != b {
        failure = Some(format!("{} vs {} labels differ", a.len(), b.len()));
    }
    Outcome {
        property: "tree label multisets".into(),
        checked: ts.len(),
        failure,
    }
}

pub fn pairs_of(tuples: &[PathTuple]) -> Result<Vec<PairEncoding>> {
    let mut out: Vec<PairEncoding> = tuples
        .iter()
        .map(|t| PairEncoding::from_paths(&t.paths()[0], &t.paths()[1]))
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// The coloring image of `ts` is exactly `pairs`, without repeats.
pub fn bijectivity(ts: &[KTriangulation], pairs: &[PairEncoding]) -> Outcome {
    partition("psi bijectivity", &[()], pairs, |_| {
        ts.iter()
            .map(|t| {
                let (p, q) = psi(t)?;
                PairEncoding::from_paths(&p, &q)
            })
            .collect()
    })
}

/// `psi == psi_tree` and `psi_inverse(psi(T)) == T`.
pub fn psi_agreement(ts: &[KTriangulation]) -> Outcome {
    check("psi agrees with the tree map and inverts", ts, |t| {
        let direct = psi(t).map_err(|e| format!("{}: {e}", show(t)))?;
        let tree = psi_tree(t).map_err(|e| format!("{}: {e}", show(t)))?;
        if direct != tree {
            return Err(format!("{} maps to {}/{} and {}/{}", show(t), direct.0, direct.1, tree.0, tree.1));
        }
        match psi_inverse(&direct.0, &direct.1) {
            Ok(back) if back == *t => Ok(()),
            _ => Err(format!("inverse fails on {}", show(t))),
        }
    })
}

/// `psi(psi_inverse(P, Q)) == (P, Q)`.
pub fn inverse_round_trip(pairs: &[PairEncoding]) -> Outcome {
    check("psi inverse round trip", pairs, |e| {
        let (p, q) = e.to_paths();
        let t = psi_inverse(&p, &q).map_err(|x| format!("{}: {x}", show_pair(e)))?;
        if psi(&t).map_err(|x| x.to_string())? == (p, q) {
            Ok(())
        } else {
            Err(show_pair(e))
        }
    })
}

/// Per-column blue and red counts do not depend on tie-breaking.
pub fn tie_break_independence(ts: &[KTriangulation]) -> Outcome {
    check("coloring tie-break independence", ts, |t| {
        let a = color_diagram_with(t, TieBreak::Standard).map_err(|e| e.to_string())?;
        let b = color_diagram_with(t, TieBreak::Opposite).map_err(|e| e.to_string())?;
        match t.ctx().columns().find(|&j| a.alpha(j) != b.alpha(j) || a.beta(j) != b.beta(j)) {
            None => Ok(()),
            Some(j) => Err(format!("column {j} of {}", show(t))),
        }
    })
}

/// After each coloring step the crosses, read by row and block, form the
/// diagram of the next ancestor.
pub fn block_tree_correspondence(ts: &[KTriangulation]) -> Outcome {
    check("coloring blocks follow the ancestors", ts, |t| {
        let mut coloring = Coloring::new(t, TieBreak::Standard).map_err(|e| e.to_string())?;
        let mut ancestor = t.clone();
        loop {
            let pattern = coloring.pattern();
            let want: Vec<(usize, usize)> = ancestor.iter().map(|d| (d.a, d.b - 3)).collect();
            if pattern != want {
                return Err(format!("{} against ancestor {}", show(t), show(&ancestor)));
            }
            if coloring.step().map_err(|e| e.to_string())?.is_none() {
                return Ok(());
            }
            ancestor = parent2(&ancestor).map_err(|e| e.to_string())?;
        }
    })
}

/// Column counts of `T` are recovered from the exponents of `psi(T)`.
pub fn column_identity(ts: &[KTriangulation]) -> Outcome {
    check("column counts from the path pair", ts, |t| {
        let (p, q) = psi(t).map_err(|e| e.to_string())?;
        let e = PairEncoding::from_paths(&p, &q).map_err(|e| e.to_string())?;
        let h: Vec<u32> = t.ctx().columns().map(|j| t.column_count(j) as u32).collect();
        if h == column_counts_from_pair(&e) {
            Ok(())
        } else {
            Err(show(t))
        }
    })
}

/// `parent_k(child) == T` for every child; the selectors exist for every
/// non-root triangulation.
pub fn ktree_round_trip(ts: &[KTriangulation]) -> Outcome {
    let k = ts.first().map_or(0, |t| t.ctx().k());
    check(format!("k-triangulation tree round trip k={k}"), ts, |t| {
        if !t.is_root() {
            ok_or(a_sequence(t).map(|_| ()), || show(t))?;
        }
        let r = corner_k(t).map_err(|e| e.to_string())?;
        for (choice, c) in children_k(t).map_err(|e| format!("{}: {e}", show(t)))? {
            if parent_k(&c).as_ref() != Ok(t) {
                return Err(format!("child {choice} of {}", show(t)));
            }
            if corner_k(&c).ok() != Some(choice.u) || choice.u < r {
                return Err(format!("child {choice} of {} has the wrong corner", show(t)));
            }
        }
        Ok(())
    })
}

pub fn ktree_partition(prev: &[KTriangulation], level: &[KTriangulation]) -> Outcome {
    let k = level.first().map_or(0, |t| t.ctx().k());
    partition(&format!("k-triangulation tree partition k={k}"), prev, level, |t| {
        Ok(children_k(t)?.into_iter().map(|(_, c)| c).collect())
    })
}

/// For `k = 2` the general tree coincides with the 2-triangulation tree.
pub fn ktree_specialization(ts: &[KTriangulation]) -> Outcome {
    check("k-tree specializes to the 2-triangulation tree", ts, |t| {
        if corner_k(t).ok() != corner(t).ok() {
            return Err(format!("corner of {}", show(t)));
        }
        if !t.is_root() {
            if parent_k(t).ok() != parent2(t).ok() {
                return Err(format!("parent of {}", show(t)));
            }
            let frame = a_sequence(t).map_err(|e| e.to_string())?;
            let j = t.column(frame.r + 1).into_iter().chain([frame.r - 1]).min();
            if Some(frame.a[0]) != j {
                return Err(format!("selector of {}", show(t)));
            }
        }
        let mut a: Vec<KTriangulation> = children_k(t).map_err(|e| e.to_string())?.into_iter().map(|(_, c)| c).collect();
        let mut b: Vec<KTriangulation> = children2(t).map_err(|e| e.to_string())?.into_iter().map(|(_, c)| c).collect();
        a.sort();
        b.sort();
        if a != b {
            return Err(format!("children of {}", show(t)));
        }
        Ok(())
    })
}

/// `|enumerate_tuples(m, k)|` equals the determinant count.
pub fn tuple_count(m: usize, k: usize, guard: &Guard) -> Outcome {
    check(format!("tuple count k={k} m={m}"), [()], |_| {
        let tuples = enumerate_tuples(m, k, guard).map_err(|e| e.to_string())?;
        let det = determinant_count(m + 2 * k, k).map_err(|e| e.to_string())?;
        if BigUint::from(tuples.len()) == det {
            Ok(())
        } else {
            Err(format!("{} tuples, determinant {det}", tuples.len()))
        }
    })
}

/// Every property for `k` over the polygons up to `n_max` sides.
pub fn run_suite(k: usize, n_max: usize, guard: &Guard) -> Result<Vec<Outcome>> {
    let levels = enumerate_levels(n_max, k, guard)?;
    let mut out = Vec::new();
    let mut pair_levels: BTreeMap<usize, Vec<PairEncoding>> = BTreeMap::new();
    for (idx, level) in levels.iter().enumerate() {
        let n = 2 * k + 1 + idx;
        let tag = |o: Outcome| Outcome {
            property: format!("{} [n={n}]", o.property),
            ..o
        };
        out.push(tag(triangulation_validity(level)));
        out.push(count_agreement(n, k, level.len(), guard));
        out.push(tag(structure_lemmas(level)));
        out.push(tag(ktree_round_trip(level)));
        if idx > 0 {
            out.push(tag(ktree_partition(&levels[idx - 1], level)));
        }
        out.push(tuple_count(n - 2 * k, k, guard));
        if k != 2 {
            continue;
        }
        out.push(tag(ktree_specialization(level)));
        out.push(tag(tree2_round_trip(level)));
        out.push(tag(label_coherence(level)));
        if idx > 0 {
            out.push(tag(tree2_partition(&levels[idx - 1], level)));
        }
        let pairs = pairs_of(&enumerate_tuples(n - 4, 2, guard)?)?;
        out.push(tag(pair_tree(&pairs)));
        if let Some(prev) = pair_levels.get(&(n - 1)) {
            out.push(tag(pair_partition(prev, &pairs)));
        }
        out.push(tag(label_multisets(level, &pairs)));
        out.push(tag(bijectivity(level, &pairs)));
        out.push(tag(psi_agreement(level)));
        out.push(tag(inverse_round_trip(&pairs)));
        out.push(tag(tie_break_independence(level)));
        out.push(tag(block_tree_correspondence(level)));
        out.push(tag(column_identity(level)));
        pair_levels.insert(n, pairs);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_small_polygons() {
        for k in 2..=3 {
            let outcomes = run_suite(k, 2 * k + 4, &Guard::default()).unwrap();
            for o in &outcomes {
                assert!(o.passed(), "{o}");
            }
        }
    }

    #[test]
    fn outcome_display() {
        let o = check("demo", [1, 2, 3], |x| if x < 3 { Ok(()) } else { Err(format!("x={x}")) });
        assert_eq!(o.to_string(), "FAIL demo: x=3");
        assert_eq!(o.checked, 2);
    }
}
