//! Two isomorphic generating trees: one on 2-triangulations (level `l`
//! holds the `(l+5)`-gon), one on pairs of non-crossing Dyck paths (level
//! `l` holds semilength `l+1`). Both obey the succession rule implemented
//! by [`label_children`].

use std::collections::BTreeSet;
use std::fmt;

use crate::dyck::PairEncoding;
use crate::error::{Error, Result};
use crate::polygon::{Diagonal, DiagonalSet, KTriangulation, PolygonContext};

/// A node label `(d_1, ..., d_s)` of the succession rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeLabel(pub Vec<u32>);

impl TreeLabel {
    pub fn root() -> Self {
        TreeLabel(vec![0, 0])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of children under the succession rule.
    pub fn arity(&self) -> usize {
        self.0.iter().map(|&d| d as usize).sum::<usize>() + self.0.len() + 1
    }
}

impl fmt::Display for TreeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// The succession rule: children of `(d_1, ..., d_s)` in canonical order.
pub fn label_children(label: &TreeLabel) -> Vec<TreeLabel> {
    let d = &label.0;
    let s = d.len();
    let mut out = Vec::with_capacity(label.arity());
    for j in 0..s.saturating_sub(1) {
        for i in 0..=d[j] {
            let mut child = vec![i, d[j] - i + 1, d[j + 1] + 1];
            child.extend_from_slice(&d[j + 2..]);
            out.push(TreeLabel(child));
        }
    }
    if let Some(&last) = d.last() {
        for i in 0..=last + 1 {
            out.push(TreeLabel(vec![i, last + 1 - i]));
        }
    }
    out
}

fn require_k2(t: &DiagonalSet) -> Result<()> {
    match t.ctx().k() {
        2 => Ok(()),
        got => Err(Error::UnsupportedK { expected: 2, got }),
    }
}

/// Largest `r` with the short diagonal `(r, r+3)` present; 2 for the pentagon.
pub fn corner(t: &KTriangulation) -> Result<usize> {
    require_k2(t)?;
    let n = t.ctx().n();
    if n == 5 {
        return Ok(2);
    }
    (1..=n - 3)
        .rev()
        .find(|&r| t.contains(r, r + 3))
        .ok_or_else(|| Error::Structural(format!("no short diagonal in {}", crate::format::diagonal_list(t))))
}

/// `(h_{r+1}, ..., h_{n-1})`, the cross counts of the columns right of the corner.
pub fn label2(t: &KTriangulation) -> Result<TreeLabel> {
    let r = corner(t)?;
    let n = t.ctx().n();
    Ok(TreeLabel(
        (r + 1..n).map(|j| t.column_count(j) as u32).collect(),
    ))
}

/// Parent in the 2-triangulation tree, computed on the diagram: drop the
/// squares `(a, a+3)` for `a >= r-1`, then merge columns `r+1` and `r+2`.
pub fn parent2(t: &KTriangulation) -> Result<KTriangulation> {
    require_k2(t)?;
    let n = t.ctx().n();
    if n == 5 {
        return Err(Error::Root);
    }
    let r = corner(t)?;
    let ctx = PolygonContext::new(n - 1, 2)?;
    let mut out = BTreeSet::new();
    for d in t.iter() {
        if d.b == d.a + 3 && d.a + 1 >= r {
            continue;
        }
        if d.a > r {
            return Err(Error::Structural(format!("cross {d} below the corner row {r}")));
        }
        let b = match d.b {
            b if b <= r + 1 => b,
            b if b == r + 2 => r + 1,
            b => b - 1,
        };
        // the one square that leaves the staircase is (1, r+1) when r = n-3
        if ctx.is_cell(d.a, b) {
            out.insert(Diagonal { a: d.a, b });
        }
    }
    if out.len() + 2 != t.len() {
        return Err(Error::Structural(format!(
            "parent of {} lost {} diagonals instead of 2",
            crate::format::diagonal_list(t),
            t.len() - out.len()
        )));
    }
    KTriangulation::new(DiagonalSet::from_trusted(ctx, out)).map_err(|e| Error::Structural(e.to_string()))
}

/// Selects a child of a 2-triangulation: the new corner `u` and the split
/// point `i` of column `u+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChildChoice2T {
    pub u: usize,
    pub i: usize,
}

impl fmt::Display for ChildChoice2T {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={} i={}", self.u, self.i)
    }
}

/// All children of `t`, ordered by `(u, i)`. Every child is checked to be a
/// 2-triangulation of the `(n+1)`-gon.
pub fn children2(t: &KTriangulation) -> Result<Vec<(ChildChoice2T, KTriangulation)>> {
    let r = corner(t)?;
    let n = t.ctx().n();
    let ctx = PolygonContext::new(n + 1, 2)?;
    let mut out = Vec::new();
    for u in r..=n - 2 {
        // rows of column u+1, bottom to top: a_1 > ... > a_h
        let mut split: Vec<usize> = t.column(u + 1);
        split.reverse();
        let h = split.len();
        let mut base: BTreeSet<Diagonal> = t
            .iter()
            .filter(|d| d.b != u + 1)
            .map(|d| Diagonal {
                a: d.a,
                b: if d.b >= u + 2 { d.b + 1 } else { d.b },
            })
            .collect();
        base.insert(Diagonal { a: u, b: u + 3 });
        let last = if u == n - 2 { h + 1 } else { h };
        for i in 0..=last {
            let mut set = base.clone();
            if i == h + 1 {
                set.extend(split.iter().map(|&a| Diagonal { a, b: u + 1 }));
                set.insert(Diagonal { a: 1, b: u + 1 });
            } else {
                set.extend(split[..i].iter().map(|&a| Diagonal { a, b: u + 1 }));
                let joint = if i > 0 { split[i - 1] } else { u - 1 };
                set.insert(Diagonal { a: joint, b: u + 2 });
                set.extend(split[i..].iter().map(|&a| Diagonal { a, b: u + 2 }));
            }
            let choice = ChildChoice2T { u, i };
            let child = DiagonalSet::new(ctx, set)
                .and_then(KTriangulation::new)
                .map_err(|e| {
                    Error::Structural(format!(
                        "child {choice} of {}: {e}",
                        crate::format::diagonal_list(t)
                    ))
                })?;
            out.push((choice, child));
        }
    }
    Ok(out)
}

/// Which of the three child rules of the pair tree produced a child.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairRule {
    /// Splits the top entry `p_{t+1}` at `i`.
    SplitTop,
    /// Moves the whole column.
    Shift,
    /// Splits the bottom entry `q_t` at `j`.
    SplitBottom,
}

/// Selects a child of a pair: the column parameter `t`, the rule, and the
/// split index for the splitting rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChildChoicePair {
    pub t: usize,
    pub rule: PairRule,
    pub index: Option<u32>,
}

impl fmt::Display for ChildChoicePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = match self.rule {
            PairRule::SplitTop => "ch1",
            PairRule::Shift => "ch2",
            PairRule::SplitBottom => "ch3",
        };
        write!(f, "t={} rule={rule}", self.t)?;
        match (self.rule, self.index) {
            (PairRule::SplitTop, Some(i)) => write!(f, " i={i}"),
            (PairRule::SplitBottom, Some(j)) => write!(f, " j={j}"),
            _ => Ok(()),
        }
    }
}

/// `(p_{s+1} + q_s, p_s + q_{s-1}, ..., p_2 + q_1)`.
pub fn pair_label(e: &PairEncoding) -> TreeLabel {
    let s = e.s_param();
    TreeLabel((1..=s).rev().map(|c| e.p(c + 1) + e.q(c)).collect())
}

fn encoding_from_full(p: &[i64], q: &[i64], m: usize) -> Result<PairEncoding> {
    // p[j] for 1 <= j <= m+2, q[j] for 0 <= j <= m+1
    let bad = |what: &str| Error::InvalidEncoding(what.to_string());
    if p.iter().chain(q).any(|&x| x < 0) {
        return Err(bad("negative exponent"));
    }
    if p[m + 1] != 0 || p[m + 2] != 0 || q[m + 1] != 0 || q[0] != 0 {
        return Err(bad("nonzero padding entry"));
    }
    let conv = |v: &[i64]| v.iter().map(|&x| x as u32).collect::<Vec<u32>>();
    PairEncoding::from_exponents(&conv(&p[1..=m]), &conv(&q[1..=m]))
}

fn full_rows(e: &PairEncoding, extra: usize) -> (Vec<i64>, Vec<i64>) {
    let m = e.semilength();
    let p = (0..=m + 2 + extra).map(|j| i64::from(e.p(j))).collect();
    let q = (0..=m + 1 + extra).map(|j| i64::from(e.q(j))).collect();
    (p, q)
}

/// Parent in the pair tree: merges the columns around position `s`.
pub fn pair_parent(e: &PairEncoding) -> Result<PairEncoding> {
    let m = e.semilength();
    if m < 2 {
        return Err(Error::Root);
    }
    let s = e.s_param();
    let (p, q) = full_rows(e, 0);
    let m2 = m - 1;
    let mut np = vec![0i64; m2 + 3];
    let mut nq = vec![0i64; m2 + 2];
    for j in 1..=m2 + 2 {
        np[j] = match j {
            j if j + 2 <= s => p[j],
            j if j + 1 == s => p[j] - 1,
            j if j == s => p[s] + p[s + 1],
            j => p[j + 1],
        };
    }
    for j in 1..=m2 + 1 {
        nq[j] = match j {
            j if j + 2 <= s => q[j],
            j if j + 1 == s => q[s] + q[s - 1] - 1,
            j => q[j + 1],
        };
    }
    encoding_from_full(&np, &nq, m2).map_err(|err| Error::Structural(format!("parent of pair: {err}")))
}

/// All children of a pair, ordered by `t`, then rule, then index.
pub fn pair_children(e: &PairEncoding) -> Result<Vec<(ChildChoicePair, PairEncoding)>> {
    let m = e.semilength();
    let s = e.s_param();
    let (p, q) = full_rows(e, 1);
    let mut out = Vec::new();
    for t in 1..=s {
        let (pt1, qt) = (p[t + 1], q[t]);
        // (top of right column, top of left column, bottom of right, bottom of left)
        let mut splits: Vec<(ChildChoicePair, [i64; 4])> = Vec::new();
        for i in 1..=pt1 {
            let choice = ChildChoicePair {
                t,
                rule: PairRule::SplitTop,
                index: Some(i as u32),
            };
            splits.push((choice, [i, pt1 - i, qt + 1, 0]));
        }
        let shift = ChildChoicePair {
            t,
            rule: PairRule::Shift,
            index: None,
        };
        splits.push((shift, [0, pt1, qt + 1, 0]));
        let top_j = if t == 1 { qt + 1 } else { qt };
        for j in 1..=top_j {
            let choice = ChildChoicePair {
                t,
                rule: PairRule::SplitBottom,
                index: Some(j as u32),
            };
            splits.push((choice, [0, pt1, qt - j + 1, j]));
        }
        for (choice, [top_right, top_left, bottom_right, bottom_left]) in splits {
            let m2 = m + 1;
            let mut np = vec![0i64; m2 + 3];
            let mut nq = vec![0i64; m2 + 2];
            for c in 1..=m2 + 2 {
                np[c] = match c {
                    c if c < t => p[c],
                    c if c == t => p[t] + 1,
                    c if c == t + 1 => top_right,
                    c if c == t + 2 => top_left,
                    c => p[c - 1],
                };
            }
            for c in 1..=m2 + 1 {
                nq[c] = match c {
                    c if c < t => q[c],
                    c if c == t => bottom_right,
                    c if c == t + 1 => bottom_left,
                    c => q[c - 1],
                };
            }
            let child = encoding_from_full(&np, &nq, m2)
                .map_err(|err| Error::Structural(format!("child {choice} of pair: {err}")))?;
            out.push((choice, child));
        }
    }
    Ok(out)
}
