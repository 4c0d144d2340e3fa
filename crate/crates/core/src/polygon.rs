//! Diagonals of a labeled convex polygon and their staircase diagrams.
//!
//! Vertices are labeled `1..=n` clockwise. A diagonal `(a, b)` is stored
//! with `a < b`. Trivial diagonals (those joining vertices with fewer than
//! `k` vertices between them) never take part in a `(k+1)`-crossing, so a
//! [`DiagonalSet`] only holds cells of the staircase
//! `{(a, b) : 1 <= a < b - k <= n - k, a > b - n + k}`, drawn with rows
//! `1..=n-k-1` and columns `k+2..=n`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Deref, RangeInclusive};

use crate::error::{Error, Result};
use crate::guard::{Guard, MAX_BITMASK_CELLS};

/// The pair `(n, k)`: an `n`-gon and the crossing parameter `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolygonContext {
    n: usize,
    k: usize,
}

impl PolygonContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || n <= 2 * k {
            return Err(Error::InvalidContext { n, k });
        }
        Ok(PolygonContext { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of nontrivial diagonals in every k-triangulation of the polygon.
    pub fn diagonal_count(&self) -> usize {
        self.k * (self.n - 2 * self.k - 1)
    }

    pub fn is_cell(&self, a: usize, b: usize) -> bool {
        a >= 1 && a + self.k < b && b <= self.n && a + self.n > b + self.k
    }

    pub fn columns(&self) -> RangeInclusive<usize> {
        self.k + 2..=self.n
    }

    pub fn rows(&self) -> RangeInclusive<usize> {
        1..=self.n - self.k - 1
    }

    /// Rows of the staircase cells in column `b`, top to bottom.
    pub fn column_rows(&self, b: usize) -> RangeInclusive<usize> {
        if b < self.k + 2 || b > self.n {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        let lo = (b + self.k + 1).saturating_sub(self.n).max(1);
        lo..=b - self.k - 1
    }

    /// All staircase cells, ordered by column and then by row.
    pub fn lambda_cells(&self) -> Vec<Diagonal> {
        self.columns()
            .flat_map(|b| self.column_rows(b).map(move |a| Diagonal { a, b }))
            .collect()
    }

    pub fn trivial_diagonals(&self) -> BTreeSet<Diagonal> {
        let n = self.n;
        let mut out = BTreeSet::new();
        for a in 1..=n {
            for j in 2..=self.k {
                if a + j <= n {
                    out.insert(Diagonal::new(a, a + j));
                } else {
                    out.insert(Diagonal::new(a + j - n, a));
                }
            }
        }
        out
    }

    /// Reduces a vertex label modulo `n` into `1..=n`.
    pub fn wrap(&self, v: isize) -> usize {
        (v - 1).rem_euclid(self.n as isize) as usize + 1
    }
}

impl fmt::Display for PolygonContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} n={}", self.k, self.n)
    }
}

/// A chord `(a, b)` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    pub a: usize,
    pub b: usize,
}

impl Diagonal {
    /// Builds the canonical form of the chord joining `x` and `y`.
    pub fn new(x: usize, y: usize) -> Self {
        assert_ne!(x, y, "a diagonal needs two distinct endpoints");
        Diagonal {
            a: x.min(y),
            b: x.max(y),
        }
    }

    /// Whether the two chords intersect in their interiors.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (l, r) = if self.a <= other.a {
            (self, other)
        } else {
            (other, self)
        };
        l.a < r.a && r.a < l.b && l.b < r.b
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Whether the diagonals form a `t`-crossing, `t` being their number.
///
/// Sorted by `(a, b)`, `t` diagonals cross pairwise exactly when
/// `a_1 < ... < a_t < b_1 < ... < b_t`.
pub fn is_t_crossing(diagonals: &[Diagonal]) -> bool {
    let mut sorted = diagonals.to_vec();
    sorted.sort();
    let (Some(first), Some(last)) = (sorted.first(), sorted.last()) else {
        return true;
    };
    sorted.windows(2).all(|w| w[0].a < w[1].a && w[0].b < w[1].b) && last.a < first.b
}

/// Finds a `t`-crossing among diagonals sorted by `(a, b)`.
fn find_crossing(sorted: &[Diagonal], t: usize) -> Option<Vec<Diagonal>> {
    fn extend(sorted: &[Diagonal], start: usize, chain: &mut Vec<Diagonal>, t: usize) -> bool {
        if chain.len() == t {
            return true;
        }
        for i in start..sorted.len() {
            if chain.len() + (sorted.len() - i) < t {
                break;
            }
            let d = sorted[i];
            if let Some(first) = chain.first() {
                // left endpoints only grow from here on
                if d.a >= first.b {
                    break;
                }
            }
            if let Some(last) = chain.last() {
                if d.a <= last.a || d.b <= last.b {
                    continue;
                }
            }
            chain.push(d);
            if extend(sorted, i + 1, chain, t) {
                return true;
            }
            chain.pop();
        }
        false
    }

    let mut chain = Vec::with_capacity(t);
    extend(sorted, 0, &mut chain, t).then_some(chain)
}

/// A set of nontrivial diagonals of a polygon.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalSet {
    ctx: PolygonContext,
    diagonals: BTreeSet<Diagonal>,
}

impl DiagonalSet {
    pub fn new(ctx: PolygonContext, diagonals: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        let diagonals: BTreeSet<Diagonal> = diagonals.into_iter().collect();
        if let Some(d) = diagonals.iter().find(|d| !ctx.is_cell(d.a, d.b)) {
            return Err(Error::NotACell(*d, ctx.n, ctx.k));
        }
        Ok(DiagonalSet { ctx, diagonals })
    }

    pub fn from_pairs(ctx: PolygonContext, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(ctx, pairs.iter().map(|&(a, b)| Diagonal::new(a, b)))
    }

    pub fn empty(ctx: PolygonContext) -> Self {
        DiagonalSet {
            ctx,
            diagonals: BTreeSet::new(),
        }
    }

    pub fn ctx(&self) -> PolygonContext {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    /// Diagonals in `(a, b)` order.
    pub fn iter(&self) -> impl Iterator<Item = &Diagonal> + '_ {
        self.diagonals.iter()
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        a < b && self.diagonals.contains(&Diagonal { a, b })
    }

    /// Rows holding a cross in column `b`, ascending.
    pub fn column(&self, b: usize) -> Vec<usize> {
        self.diagonals.iter().filter(|d| d.b == b).map(|d| d.a).collect()
    }

    pub fn column_count(&self, b: usize) -> usize {
        self.diagonals.iter().filter(|d| d.b == b).count()
    }

    /// Number of diagonals incident to `vertex`.
    pub fn degree(&self, vertex: usize) -> usize {
        self.diagonals.iter().filter(|d| d.has_endpoint(vertex)).count()
    }

    pub fn has_crossing(&self, t: usize) -> bool {
        self.find_crossing(t).is_some()
    }

    pub fn find_crossing(&self, t: usize) -> Option<Vec<Diagonal>> {
        let sorted: Vec<Diagonal> = self.diagonals.iter().copied().collect();
        find_crossing(&sorted, t)
    }

    /// Whether adding `d` would complete a `t`-crossing.
    pub fn creates_crossing(&self, d: Diagonal, t: usize) -> bool {
        let crossing: Vec<Diagonal> = self.diagonals.iter().filter(|e| e.crosses(&d)).copied().collect();
        find_crossing(&crossing, t.saturating_sub(1)).is_some()
    }

    /// Cells outside the set that can be added without creating a
    /// `(k+1)`-crossing.
    pub fn addable_cells(&self) -> Vec<Diagonal> {
        let t = self.ctx.k + 1;
        self.ctx
            .lambda_cells()
            .into_iter()
            .filter(|d| !self.diagonals.contains(d) && !self.creates_crossing(*d, t))
            .collect()
    }

    pub fn is_k_triangulation(&self) -> bool {
        let ok = !self.has_crossing(self.ctx.k + 1) && self.addable_cells().is_empty();
        if ok {
            assert_eq!(
                self.len(),
                self.ctx.diagonal_count(),
                "maximal set with the wrong number of diagonals"
            );
        }
        ok
    }

    pub(crate) fn from_trusted(ctx: PolygonContext, diagonals: BTreeSet<Diagonal>) -> Self {
        DiagonalSet { ctx, diagonals }
    }
}

/// A maximal `(k+1)`-crossing-free set of nontrivial diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KTriangulation(DiagonalSet);

impl KTriangulation {
    pub fn new(set: DiagonalSet) -> Result<Self> {
        let t = set.ctx.k + 1;
        if let Some(c) = set.find_crossing(t) {
            let list: Vec<String> = c.iter().map(|d| d.to_string()).collect();
            return Err(Error::NotTriangulation(format!(
                "contains the {t}-crossing {}",
                list.join(",")
            )));
        }
        if let Some(d) = set.addable_cells().first() {
            return Err(Error::NotTriangulation(format!("diagonal {d} can still be added")));
        }
        assert_eq!(set.len(), set.ctx.diagonal_count());
        Ok(KTriangulation(set))
    }

    /// The empty k-triangulation of the `(2k+1)`-gon.
    pub fn root(k: usize) -> Result<Self> {
        Ok(KTriangulation(DiagonalSet::empty(PolygonContext::new(2 * k + 1, k)?)))
    }

    pub fn from_pairs(ctx: PolygonContext, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(DiagonalSet::from_pairs(ctx, pairs)?)
    }

    pub fn is_root(&self) -> bool {
        self.0.ctx.n == 2 * self.0.ctx.k + 1
    }

    pub fn as_set(&self) -> &DiagonalSet {
        &self.0
    }

    pub fn into_set(self) -> DiagonalSet {
        self.0
    }
}

impl Deref for KTriangulation {
    type Target = DiagonalSet;

    fn deref(&self) -> &DiagonalSet {
        &self.0
    }
}

/// Greedily adds staircase cells, in column-then-row order, until maximal.
pub fn complete_to_maximal(set: &DiagonalSet) -> Result<KTriangulation> {
    let t = set.ctx.k + 1;
    if set.has_crossing(t) {
        return Err(Error::HasCrossing(t));
    }
    let mut out = set.clone();
    for d in set.ctx.lambda_cells() {
        if !out.diagonals.contains(&d) && !out.creates_crossing(d, t) {
            out.diagonals.insert(d);
        }
    }
    KTriangulation::new(out)
}

/// Staircase cells with their pairwise crossing relation as bitmasks.
struct CellSpace {
    cells: Vec<Diagonal>,
    cross: Vec<u64>,
}

impl CellSpace {
    fn new(cells: Vec<Diagonal>) -> Self {
        debug_assert!(cells.len() <= MAX_BITMASK_CELLS);
        let cross = cells
            .iter()
            .map(|c| {
                cells
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| c.crosses(d))
                    .fold(0u64, |m, (j, _)| m | (1 << j))
            })
            .collect();
        CellSpace { cells, cross }
    }

    /// Whether `candidates` holds `t` pairwise crossing cells.
    fn has_clique(&self, candidates: u64, t: usize) -> bool {
        if t == 0 {
            return true;
        }
        if (candidates.count_ones() as usize) < t {
            return false;
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.has_clique(rest & self.cross[v], t - 1) {
                return true;
            }
        }
        false
    }
}

struct BruteSearch<'a> {
    space: &'a CellSpace,
    k: usize,
    found: Vec<u64>,
}

impl BruteSearch<'_> {
    fn blocked(&self, within: u64, cell: usize) -> bool {
        self.space.has_clique(within & self.space.cross[cell], self.k)
    }

    fn run(&mut self, i: usize, included: u64, excluded: u64) {
        let total = self.space.cells.len();
        if i == total {
            if bits(excluded).all(|e| self.blocked(included, e)) {
                self.found.push(included);
            }
            return;
        }
        let bit = 1u64 << i;
        if !self.blocked(included, i) {
            self.run(i + 1, included | bit, excluded);
        }
        // an excluded cell must stay blockable by what may still be chosen
        let undecided = if i + 1 >= 64 { 0 } else { !0u64 << (i + 1) } & mask_of(total);
        let potential = included | undecided;
        let excluded = excluded | bit;
        if bits(excluded).all(|e| self.blocked(potential, e)) {
            self.run(i + 1, included, excluded);
        }
    }
}

fn mask_of(len: usize) -> u64 {
    if len >= 64 {
        !0
    } else {
        (1u64 << len) - 1
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Every k-triangulation of the polygon, by exhaustive backtracking over
/// staircase cells, in lexicographic order of the sorted diagonal lists.
pub fn enumerate_brute(ctx: PolygonContext, guard: &Guard) -> Result<Vec<KTriangulation>> {
    let cells = ctx.lambda_cells();
    let limit = guard.max_cells.min(MAX_BITMASK_CELLS);
    Guard::check("staircase", cells.len() as u64, limit as u64)?;
    let space = CellSpace::new(cells);
    let mut search = BruteSearch {
        space: &space,
        k: ctx.k,
        found: Vec::new(),
    };
    search.run(0, 0, 0);
    let mut out: Vec<KTriangulation> = search
        .found
        .iter()
        .map(|&m| {
            let set: BTreeSet<Diagonal> = bits(m).map(|i| space.cells[i]).collect();
            assert_eq!(
                set.len(),
                ctx.diagonal_count(),
                "maximal set with the wrong number of diagonals"
            );
            KTriangulation(DiagonalSet::from_trusted(ctx, set))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The structural facts about k-triangulations that the tree constructions
/// rely on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureLemma {
    /// `(a, b)` with `a < b-k-1` comes with `(a, b-1)` or some `(a', b)`,
    /// `a < a' <= b-k-1`.
    ShorterOrInner,
    /// Every `(a, b)` has a short diagonal `(i, i+k+1)` with `a <= i <= b-k-1`.
    ShortBeneath,
    /// `k = 2`: if `(a, a+3)` is missing, vertices `a+1` and `a+2` have
    /// positive degree.
    MissingShortDegrees,
    /// `k = 2`: a vertex `a` of degree 0 forces `(a-2, a+1)` and `(a-1, a+2)`.
    IsolatedVertex,
}

impl StructureLemma {
    pub fn name(&self) -> &'static str {
        match self {
            StructureLemma::ShorterOrInner => "shorter-or-inner",
            StructureLemma::ShortBeneath => "short-beneath",
            StructureLemma::MissingShortDegrees => "missing-short-degrees",
            StructureLemma::IsolatedVertex => "isolated-vertex",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub lemma: StructureLemma,
    /// How many hypothesis instances were evaluated.
    pub instances: usize,
    /// First failing instance, if any.
    pub witness: Option<String>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(LemmaCheck::passed)
    }

    pub fn get(&self, lemma: StructureLemma) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.lemma == lemma)
    }
}

/// Evaluates every applicable instance of the structure lemmas on `set`.
///
/// The set is not required to be maximal; on genuine k-triangulations every
/// check passes.
pub fn check_structure_lemmas(set: &DiagonalSet) -> LemmaReport {
    let ctx = set.ctx;
    let k = ctx.k;
    let mut checks = Vec::new();

    let mut inner = LemmaCheck {
        lemma: StructureLemma::ShorterOrInner,
        instances: 0,
        witness: None,
    };
    for d in set.iter().filter(|d| d.a + k + 1 < d.b) {
        inner.instances += 1;
        let ok = set.contains(d.a, d.b - 1)
            || set.iter().any(|e| e.b == d.b && d.a < e.a && e.a + k < d.b);
        if !ok && inner.witness.is_none() {
            inner.witness = Some(format!("{d}"));
        }
    }
    checks.push(inner);

    let mut short = LemmaCheck {
        lemma: StructureLemma::ShortBeneath,
        instances: 0,
        witness: None,
    };
    for d in set.iter() {
        short.instances += 1;
        let ok = (d.a..=d.b - k - 1).any(|i| set.contains(i, i + k + 1));
        if !ok && short.witness.is_none() {
            short.witness = Some(format!("{d}"));
        }
    }
    checks.push(short);

    if k == 2 && ctx.n >= 6 {
        let n = ctx.n as isize;
        let at = |v: isize| ctx.wrap(v);
        let has = |x: usize, y: usize| {
            let d = Diagonal::new(x, y);
            set.contains(d.a, d.b)
        };

        let mut degrees = LemmaCheck {
            lemma: StructureLemma::MissingShortDegrees,
            instances: 0,
            witness: None,
        };
        for a in 1..=n {
            if has(at(a), at(a + 3)) {
                continue;
            }
            degrees.instances += 1;
            let (v1, v2) = (at(a + 1), at(a + 2));
            if (set.degree(v1) == 0 || set.degree(v2) == 0) && degrees.witness.is_none() {
                degrees.witness = Some(format!(
                    "{} missing but deg({v1})={} deg({v2})={}",
                    Diagonal::new(at(a), at(a + 3)),
                    set.degree(v1),
                    set.degree(v2)
                ));
            }
        }
        checks.push(degrees);

        let mut isolated = LemmaCheck {
            lemma: StructureLemma::IsolatedVertex,
            instances: 0,
            witness: None,
        };
        for a in 1..=n {
            if set.degree(at(a)) != 0 {
                continue;
            }
            isolated.instances += 1;
            let ok = has(at(a - 2), at(a + 1)) && has(at(a - 1), at(a + 2));
            if !ok && isolated.witness.is_none() {
                isolated.witness = Some(format!("vertex {} has degree 0", at(a)));
            }
        }
        checks.push(isolated);
    }

    LemmaReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, k: usize) -> PolygonContext {
        PolygonContext::new(n, k).unwrap()
    }

    fn d(a: usize, b: usize) -> Diagonal {
        Diagonal::new(a, b)
    }

    #[test]
    fn context_bounds() {
        assert!(PolygonContext::new(5, 2).is_ok());
        assert_eq!(PolygonContext::new(4, 2), Err(Error::InvalidContext { n: 4, k: 2 }));
        assert!(PolygonContext::new(5, 0).is_err());
        assert_eq!(ctx(14, 2).diagonal_count(), 18);
        assert_eq!(ctx(11, 3).diagonal_count(), 12);
    }

    #[test]
    fn trivial_diagonals_examples() {
        let got: Vec<Diagonal> = ctx(8, 2).trivial_diagonals().into_iter().collect();
        let want: BTreeSet<Diagonal> = [(1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (6, 8), (1, 7), (2, 8)]
            .iter()
            .map(|&(a, b)| d(a, b))
            .collect();
        assert_eq!(got, want.into_iter().collect::<Vec<_>>());
        assert_eq!(ctx(5, 2).trivial_diagonals().len(), 5);
        assert!(ctx(7, 1).trivial_diagonals().is_empty());
        assert_eq!(ctx(11, 3).trivial_diagonals().len(), 22);
    }

    #[test]
    fn lambda_cells_examples() {
        let cells = ctx(8, 2).lambda_cells();
        let want = [
            (1, 4),
            (1, 5),
            (2, 5),
            (1, 6),
            (2, 6),
            (3, 6),
            (2, 7),
            (3, 7),
            (4, 7),
            (3, 8),
            (4, 8),
            (5, 8),
        ];
        assert_eq!(cells, want.iter().map(|&(a, b)| d(a, b)).collect::<Vec<_>>());
        assert!(ctx(5, 2).lambda_cells().is_empty());
        assert_eq!(ctx(6, 2).lambda_cells(), vec![d(1, 4), d(2, 5), d(3, 6)]);
        assert!(!ctx(8, 2).is_cell(1, 7));
        assert!(!ctx(8, 2).is_cell(1, 3));
    }

    #[test]
    fn staircase_size_formula() {
        for k in 1..=4 {
            for n in 2 * k + 1..2 * k + 9 {
                let c = ctx(n, k);
                assert_eq!(c.lambda_cells().len(), n * (n - 2 * k - 1) / 2);
            }
        }
    }

    #[test]
    fn t_crossing_examples() {
        assert!(is_t_crossing(&[d(1, 5), d(2, 6), d(3, 7)]));
        assert!(!is_t_crossing(&[d(1, 4), d(2, 5), d(4, 7)]));
        assert!(is_t_crossing(&[d(1, 4)]));
        assert!(is_t_crossing(&[d(3, 7), d(1, 5), d(2, 6)]));
    }

    #[test]
    fn has_crossing_examples() {
        let full = DiagonalSet::from_pairs(ctx(6, 2), &[(1, 4), (2, 5), (3, 6)]).unwrap();
        assert!(full.has_crossing(3));
        let two = DiagonalSet::from_pairs(ctx(6, 2), &[(1, 4), (2, 5)]).unwrap();
        assert!(!two.has_crossing(3));
        assert!(two.has_crossing(2));
        assert!(DiagonalSet::empty(ctx(6, 2)).has_crossing(0));
        assert!(!DiagonalSet::empty(ctx(6, 2)).has_crossing(1));
    }

    #[test]
    fn rejects_non_cells() {
        let err = DiagonalSet::from_pairs(ctx(6, 2), &[(1, 3)]).unwrap_err();
        assert_eq!(err, Error::NotACell(d(1, 3), 6, 2));
        assert!(DiagonalSet::from_pairs(ctx(6, 2), &[(1, 5)]).is_err());
    }

    #[test]
    fn k_triangulation_examples() {
        let c = ctx(6, 2);
        assert!(DiagonalSet::from_pairs(c, &[(1, 4), (2, 5)]).unwrap().is_k_triangulation());
        assert!(!DiagonalSet::from_pairs(c, &[(1, 4)]).unwrap().is_k_triangulation());
        assert!(!DiagonalSet::from_pairs(c, &[(1, 4), (2, 5), (3, 6)])
            .unwrap()
            .is_k_triangulation());
        assert!(DiagonalSet::empty(ctx(5, 2)).is_k_triangulation());
        let err = KTriangulation::from_pairs(c, &[(1, 4)]).unwrap_err();
        assert!(matches!(err, Error::NotTriangulation(_)));
    }

    #[test]
    fn completion_examples() {
        let t = complete_to_maximal(&DiagonalSet::empty(ctx(6, 2))).unwrap();
        assert_eq!(t.diagonals().iter().copied().collect::<Vec<_>>(), vec![d(1, 4), d(2, 5)]);
        let t8 = complete_to_maximal(&DiagonalSet::empty(ctx(8, 2))).unwrap();
        assert_eq!(t8.len(), 6);
        let again = complete_to_maximal(t8.as_set()).unwrap();
        assert_eq!(again, t8);
        let bad = DiagonalSet::from_pairs(ctx(6, 2), &[(1, 4), (2, 5), (3, 6)]).unwrap();
        assert_eq!(complete_to_maximal(&bad), Err(Error::HasCrossing(3)));
    }

    #[test]
    fn brute_small_cases() {
        let g = Guard::default();
        assert_eq!(enumerate_brute(ctx(5, 2), &g).unwrap().len(), 1);
        let hex: Vec<Vec<Diagonal>> = enumerate_brute(ctx(6, 2), &g)
            .unwrap()
            .iter()
            .map(|t| t.iter().copied().collect())
            .collect();
        assert_eq!(
            hex,
            vec![vec![d(1, 4), d(2, 5)], vec![d(1, 4), d(3, 6)], vec![d(2, 5), d(3, 6)]]
        );
        assert_eq!(enumerate_brute(ctx(8, 2), &g).unwrap().len(), 84);
    }

    #[test]
    fn brute_guard() {
        let g = Guard {
            max_cells: 10,
            ..Guard::default()
        };
        assert!(matches!(
            enumerate_brute(ctx(8, 2), &g),
            Err(Error::GuardExceeded { size: 12, limit: 10, .. })
        ));
    }

    #[test]
    fn degree_examples() {
        let s = DiagonalSet::from_pairs(ctx(6, 2), &[(1, 4), (2, 5)]).unwrap();
        assert_eq!(s.degree(4), 1);
        assert_eq!(s.degree(6), 0);
        assert_eq!(DiagonalSet::empty(ctx(6, 2)).degree(3), 0);
    }

    #[test]
    fn lemmas_on_non_maximal_set() {
        let s = DiagonalSet::from_pairs(ctx(6, 2), &[(1, 4)]).unwrap();
        let report = check_structure_lemmas(&s);
        assert!(!report.all_pass());
        assert!(!report.get(StructureLemma::MissingShortDegrees).unwrap().passed());
    }

    #[test]
    fn lemmas_vacuous_on_pentagon() {
        let report = check_structure_lemmas(&DiagonalSet::empty(ctx(5, 2)));
        assert!(report.all_pass());
        assert!(report.checks.iter().all(|c| c.instances == 0));
        assert!(report.get(StructureLemma::IsolatedVertex).is_none());
    }

    #[test]
    fn lemmas_hold_on_octagon() {
        for t in enumerate_brute(ctx(8, 2), &Guard::default()).unwrap() {
            let report = check_structure_lemmas(t.as_set());
            assert!(report.all_pass(), "{report:?}");
        }
    }
}
