//! Generating tree for k-triangulations, any `k >= 2`.
//!
//! Level `l` holds the k-triangulations of the `(l + 2k + 1)`-gon; the root
//! is the empty k-triangulation of the `(2k+1)`-gon. The parent of `T` is
//! obtained from its diagram around the corner `r`, guided by the selectors
//! `a_1 < ... < a_{k-1}` of [`KTreeFrame`]. Children are indexed by `u` and
//! an increasing choice `b_1 < ... < b_{k-1}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::dyck::determinant_count;
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::polygon::{Diagonal, DiagonalSet, KTriangulation, PolygonContext};

/// Corner and selectors of a non-root k-triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTreeFrame {
    pub r: usize,
    pub a: Vec<usize>,
}

/// One child choice: the new corner `u` and the selectors `b_1 < ... < b_{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChildChoiceK {
    pub u: usize,
    pub b: Vec<usize>,
}

impl fmt::Display for ChildChoiceK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.b.iter().map(|x| x.to_string()).collect();
        write!(f, "u={} b=({})", self.u, b.join(","))
    }
}

fn structural(t: &DiagonalSet, msg: impl fmt::Display) -> Error {
    Error::Structural(format!("{msg} in {}", crate::format::diagonal_list(t)))
}

type Columns = BTreeMap<usize, BTreeSet<usize>>;

fn columns_of(t: &DiagonalSet) -> Columns {
    let mut cols = Columns::new();
    for d in t.iter() {
        cols.entry(d.b).or_default().insert(d.a);
    }
    cols
}

fn build(ctx: PolygonContext, cols: &Columns) -> Result<DiagonalSet> {
    DiagonalSet::new(
        ctx,
        cols.iter()
            .flat_map(|(&b, rows)| rows.iter().map(move |&a| Diagonal { a, b })),
    )
}

/// Largest `r` with the short diagonal `(r, r+k+1)`. The root gets `r = k`.
pub fn corner_k(t: &KTriangulation) -> Result<usize> {
    let ctx = t.ctx();
    let (n, k) = (ctx.n(), ctx.k());
    if t.is_root() {
        return Ok(k);
    }
    let r = (1..n - k)
        .rev()
        .find(|&r| t.contains(r, r + k + 1))
        .ok_or_else(|| structural(t, "no short diagonal"))?;
    if r < k {
        return Err(structural(t, format_args!("corner {r} below {k}")));
    }
    if let Some(d) = t.iter().find(|d| d.a > r) {
        return Err(structural(t, format_args!("cross {d} below corner row {r}")));
    }
    Ok(r)
}

/// The corner together with the minimal increasing selectors `a_i`.
pub fn a_sequence(t: &KTriangulation) -> Result<KTreeFrame> {
    if t.is_root() {
        return Err(Error::Root);
    }
    let ctx = t.ctx();
    let k = ctx.k();
    let r = corner_k(t)?;
    let mut a: Vec<usize> = Vec::with_capacity(k - 1);
    for i in 1..k {
        let prev = a.last().copied().unwrap_or(0);
        let ai = t
            .column(r + i)
            .into_iter()
            .chain([r + i - k])
            .filter(|&x| x > prev)
            .min()
            .ok_or_else(|| structural(t, format_args!("no selector a_{i} for corner {r}")))?;
        if ai > r + i - k {
            return Err(structural(t, format_args!("selector a_{i}={ai} above bound {}", r + i - k)));
        }
        if ctx.is_cell(ai, r + i + 1) && !t.contains(ai, r + i + 1) {
            return Err(structural(
                t,
                format_args!("selector a_{i}={ai}: diagonal {ai}-{} missing", r + i + 1),
            ));
        }
        a.push(ai);
    }
    let last = a.last().copied().unwrap_or(r);
    if let Some(x) = t.column(r + k).into_iter().find(|&x| x > last) {
        return Err(structural(t, format_args!("column {} has cross in row {x} below {last}", r + k)));
    }
    Ok(KTreeFrame { r, a })
}

/// Parent in the k-triangulation tree, over the `(n-1)`-gon.
pub fn parent_k(t: &KTriangulation) -> Result<KTriangulation> {
    let frame = a_sequence(t)?;
    let ctx = t.ctx();
    let (n, k, r) = (ctx.n(), ctx.k(), frame.r);
    let mut cols = columns_of(t);
    let take = |cols: &mut Columns, b: usize| cols.remove(&b).unwrap_or_default();

    if let Some(col) = cols.get_mut(&(r + k + 1)) {
        col.remove(&r);
    }
    for (idx, &ai) in frame.a.iter().enumerate() {
        let i = idx + 1;
        let here = take(&mut cols, r + i);
        let mut next = take(&mut cols, r + i + 1);
        let mut merged: BTreeSet<usize> = here.into_iter().filter(|&x| x >= ai).collect();
        merged.extend(next.iter().copied().filter(|&x| x < ai));
        next.retain(|&x| x > ai);
        cols.insert(r + i, merged);
        cols.insert(r + i + 1, next);
    }
    let emptied = take(&mut cols, r + k);
    if !emptied.is_empty() {
        return Err(structural(t, format_args!("column {} not empty before deletion", r + k)));
    }
    let mut shifted: Columns = cols
        .into_iter()
        .map(|(b, rows)| (if b > r + k { b - 1 } else { b }, rows))
        .collect();
    for a in 1..=(r + 2 * k).saturating_sub(n) {
        if let Some(col) = shifted.get_mut(&(n - k - 1 + a)) {
            col.remove(&a);
        }
    }
    let pctx = PolygonContext::new(n - 1, k)?;
    build(pctx, &shifted)
        .and_then(KTriangulation::new)
        .map_err(|e| structural(t, format_args!("parent invalid: {e}")))
}

fn increasing_choices(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn go(sets: &[Vec<usize>], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((first, rest)) = sets.split_first() else {
            out.push(prefix.clone());
            return;
        };
        let floor = prefix.last().copied().unwrap_or(0);
        for &x in first.iter().filter(|&&x| x > floor) {
            prefix.push(x);
            go(rest, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(sets, &mut Vec::new(), &mut out);
    out
}

/// All children of `t`, ordered by `(u, b)`. Every child is checked to be a
/// k-triangulation of the `(n+1)`-gon.
pub fn children_k(t: &KTriangulation) -> Result<Vec<(ChildChoiceK, KTriangulation)>> {
    let ctx = t.ctx();
    let (n, k) = (ctx.n(), ctx.k());
    let r = corner_k(t)?;
    let cctx = PolygonContext::new(n + 1, k)?;
    let mut out = Vec::new();
    for u in r..=n - k {
        let sets: Vec<Vec<usize>> = (1..k)
            .map(|i| {
                let mut s: BTreeSet<usize> = t.column(u + i).into_iter().collect();
                s.insert(u + i - k);
                if u == n - k {
                    s.insert(i);
                }
                s.into_iter().collect()
            })
            .collect();
        let mut base: Columns = columns_of(t)
            .into_iter()
            .map(|(b, rows)| (if b >= u + k { b + 1 } else { b }, rows))
            .collect();
        base.entry(u + k + 1).or_default().insert(u);
        for b in increasing_choices(&sets) {
            let mut cols = base.clone();
            for i in (1..k).rev() {
                let bi = b[i - 1];
                let here = cols.entry(u + i).or_default();
                let moved: Vec<usize> = here.range(..bi).copied().collect();
                for x in &moved {
                    here.remove(x);
                }
                if u == n - k && bi == i {
                    here.insert(i);
                }
                let next = cols.entry(u + i + 1).or_default();
                next.extend(moved);
                if !(u == n - k && bi == i) {
                    next.insert(bi);
                }
            }
            let choice = ChildChoiceK { u, b };
            let child = build(cctx, &cols)
                .and_then(KTriangulation::new)
                .map_err(|e| structural(t, format_args!("child {choice}: {e}")))?;
            out.push((choice, child));
        }
    }
    Ok(out)
}

/// Every level from the root down to the `n`-gon, each in sorted order.
pub fn enumerate_levels(n: usize, k: usize, guard: &Guard) -> Result<Vec<Vec<KTriangulation>>> {
    PolygonContext::new(n, k)?;
    let total = determinant_count(n, k)?;
    let size = u64::try_from(&total).unwrap_or(u64::MAX);
    Guard::check("tree enumeration count", size, guard.max_tree_count)?;
    let mut levels = vec![vec![KTriangulation::root(k)?]];
    for _ in 2 * k + 1..n {
        let prev = levels.last().expect("root level");
        let mut next = Vec::new();
        for t in prev {
            next.extend(children_k(t)?.into_iter().map(|(_, c)| c));
        }
        next.sort();
        levels.push(next);
    }
    Ok(levels)
}

/// The k-triangulations of the `n`-gon, generated through the tree, sorted.
pub fn enumerate_tree(n: usize, k: usize, guard: &Guard) -> Result<Vec<KTriangulation>> {
    Ok(enumerate_levels(n, k, guard)?.pop().expect("at least the root level"))
}
