//! Dyck paths, non-crossing tuples of them, and exact Catalan counting.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::guard::Guard;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `(0, 1)`; sorts before `E`.
    N,
    /// `(1, 0)`
    E,
}

/// A lattice path of `N` and `E` steps from `(0, 0)` to `(m, m)` that never
/// goes below `y = x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::N => 1,
                Step::E => -1,
            };
            if height < 0 {
                return Err(Error::InvalidPath(format!("goes below the diagonal at step {}", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath("unequal numbers of N and E steps".into()));
        }
        Ok(DyckPath { steps })
    }

    /// `(NE)^m`, the lowest path of semilength `m`.
    pub fn lowest(m: usize) -> Self {
        DyckPath {
            steps: (0..m).flat_map(|_| [Step::N, Step::E]).collect(),
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// The unique `(p_1, ..., p_m)` with `P = N E^{p_m} ... N E^{p_1} E`.
    pub fn to_exponents(&self) -> ExponentForm {
        let m = self.semilength();
        let mut runs = Vec::with_capacity(m);
        for s in &self.steps {
            match s {
                Step::N => runs.push(0u32),
                Step::E => {
                    // a Dyck path starts with N, so a run is always open
                    *runs.last_mut().expect("Dyck path starts with N") += 1;
                }
            }
        }
        if let Some(last) = runs.last_mut() {
            *last -= 1;
        }
        runs.reverse();
        ExponentForm { p: runs }
    }

    /// Number of `E` steps taken before each `N` step.
    fn e_counts_by_n_prefix(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.semilength());
        let mut e = 0;
        for s in &self.steps {
            match s {
                Step::N => out.push(e),
                Step::E => e += 1,
            }
        }
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                other => Err(Error::InvalidPath(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if steps.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        DyckPath::new(steps)
    }
}

/// Exponents `(p_1, ..., p_m)` of a Dyck path, stored as `p[0] = p_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentForm {
    p: Vec<u32>,
}

impl ExponentForm {
    pub fn new(p: Vec<u32>) -> Result<Self> {
        let m = p.len();
        if m == 0 {
            return Err(Error::InvalidPath("empty exponent sequence".into()));
        }
        let mut sum = 0u64;
        for (t, &x) in p.iter().enumerate() {
            sum += u64::from(x);
            if sum < t as u64 {
                return Err(Error::InvalidPath(format!("prefix sum below {t} at position {}", t + 1)));
            }
        }
        if sum != m as u64 - 1 {
            return Err(Error::InvalidPath(format!("exponents sum to {sum}, expected {}", m - 1)));
        }
        Ok(ExponentForm { p })
    }

    pub fn semilength(&self) -> usize {
        self.p.len()
    }

    /// `p_j` for `1 <= j <= m`, zero beyond.
    pub fn get(&self, j: usize) -> u32 {
        if j == 0 {
            return 0;
        }
        self.p.get(j - 1).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.p
    }

    pub fn to_path(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * self.p.len());
        for &x in self.p.iter().rev() {
            steps.push(Step::N);
            steps.extend(std::iter::repeat_n(Step::E, x as usize));
        }
        steps.push(Step::E);
        DyckPath { steps }
    }
}

pub fn from_exponents(e: &ExponentForm) -> DyckPath {
    e.to_path()
}

/// Whether `p` never goes below `q`.
pub fn dominates(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    let (m, mq) = (p.semilength(), q.semilength());
    if m != mq {
        return Err(Error::SemilengthMismatch(m, mq));
    }
    let (ep, eq) = (p.to_exponents(), q.to_exponents());
    let mut sp = 0u64;
    let mut sq = 0u64;
    for t in 1..=m {
        sp += u64::from(ep.get(t));
        sq += u64::from(eq.get(t));
        if sp < sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Step-level domination: at every `N` step, `p` has taken no more `E`
/// steps than `q`.
pub fn dominates_by_steps(p: &DyckPath, q: &DyckPath) -> Result<bool> {
    let (m, mq) = (p.semilength(), q.semilength());
    if m != mq {
        return Err(Error::SemilengthMismatch(m, mq));
    }
    Ok(p.e_counts_by_n_prefix()
        .iter()
        .zip(q.e_counts_by_n_prefix())
        .all(|(a, b)| *a <= b))
}

/// A `k`-tuple of Dyck paths of equal semilength, each never below the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathTuple {
    paths: Vec<DyckPath>,
}

impl PathTuple {
    pub fn new(paths: Vec<DyckPath>) -> Result<Self> {
        if paths.is_empty() {
            return Err(Error::InvalidPath("empty tuple".into()));
        }
        for w in paths.windows(2) {
            if !dominates(&w[0], &w[1])? {
                return Err(Error::NotDominating);
            }
        }
        Ok(PathTuple { paths })
    }

    pub fn paths(&self) -> &[DyckPath] {
        &self.paths
    }

    pub fn semilength(&self) -> usize {
        self.paths[0].semilength()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `C_m = binom(2m, m) / (m + 1)`.
pub fn catalan(m: usize) -> BigUint {
    // running product C_{j} = C_{j-1} * 2(2j-1) / (j+1), exact at each step
    let mut c = BigUint::one();
    for j in 1..=m {
        c = c * BigUint::from(2 * (2 * j - 1)) / BigUint::from(j + 1);
    }
    c
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let size = matrix.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..size - 1 {
        if a[p][p].is_zero() {
            match (p + 1..size).find(|&i| !a[i][p].is_zero()) {
                Some(i) => {
                    a.swap(p, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in p + 1..size {
            for j in p + 1..size {
                let v = &a[i][j] * &a[p][p] - &a[i][p] * &a[p][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[p][p].clone();
    }
    sign * &a[size - 1][size - 1]
}

/// Number of k-triangulations of an `n`-gon: `det(C_{n-i-j})_{i,j=1..k}`.
pub fn determinant_count(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || (n <= 2 * k && !(k == 1 && n >= 2)) {
        return Err(Error::InvalidContext { n, k });
    }
    let matrix: Vec<Vec<BigInt>> = (1..=k)
        .map(|i| (1..=k).map(|j| BigInt::from(catalan(n - i - j))).collect())
        .collect();
    let det = bareiss_determinant(&matrix);
    assert!(!det.is_negative(), "negative count {det}");
    Ok(det.magnitude().clone())
}

/// All Dyck paths of semilength `m` in lexicographic order (`N < E`).
pub fn enumerate_paths(m: usize) -> Vec<DyckPath> {
    fn go(m: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == m && downs == m {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < m {
            cur.push(Step::N);
            go(m, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::E);
            go(m, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        go(m, 0, 0, &mut Vec::with_capacity(2 * m), &mut out);
    }
    out
}

/// All `k`-tuples of semilength-`m` Dyck paths with each path dominating the
/// next, ordered lexicographically by their step strings.
pub fn enumerate_tuples(m: usize, k: usize, guard: &Guard) -> Result<Vec<PathTuple>> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidPath(format!("need m >= 1 and k >= 1, got m={m} k={k}")));
    }
    Guard::check("tuple enumeration m*k", (m * k) as u64, guard.max_tuple_size as u64)?;
    let paths = enumerate_paths(m);
    // below[i] = indices j with paths[i] dominating paths[j], ascending
    let below: Vec<Vec<usize>> = paths
        .iter()
        .map(|p| {
            paths
                .iter()
                .enumerate()
                .filter(|(_, q)| dominates(p, q).expect("equal semilengths"))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    fn go(
        paths: &[DyckPath],
        below: &[Vec<usize>],
        k: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<PathTuple>,
    ) {
        if cur.len() == k {
            out.push(PathTuple {
                paths: cur.iter().map(|&i| paths[i].clone()).collect(),
            });
            return;
        }
        let choices: Vec<usize> = match cur.last() {
            None => (0..paths.len()).collect(),
            Some(&last) => below[last].clone(),
        };
        for j in choices {
            cur.push(j);
            go(paths, below, k, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    go(&paths, &below, k, &mut Vec::with_capacity(k), &mut out);
    Ok(out)
}

/// The matrix encoding of a pair `(P, Q)` with `P` never below `Q`.
///
/// Exponents are held 1-based: `p[j] = p_j` for `1 <= j <= m + 2` with
/// `p_{m+1} = p_{m+2} = 0`, and `q[j] = q_j` for `0 <= j <= m + 1` with
/// `q_0 = q_{m+1} = 0`. Slot `p[0]` is unused.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairEncoding {
    m: usize,
    p: Vec<u32>,
    q: Vec<u32>,
}

impl PairEncoding {
    pub fn root() -> Self {
        PairEncoding {
            m: 1,
            p: vec![0; 4],
            q: vec![0; 3],
        }
    }

    /// Builds an encoding from 1-based exponent sequences `p_1..p_m`,
    /// `q_1..q_m`, checking every invariant.
    pub fn from_exponents(p: &[u32], q: &[u32]) -> Result<Self> {
        let m = p.len();
        if m == 0 || q.len() != m {
            return Err(Error::InvalidEncoding(format!(
                "exponent rows of lengths {} and {}",
                p.len(),
                q.len()
            )));
        }
        ExponentForm::new(p.to_vec()).map_err(|e| Error::InvalidEncoding(format!("top row: {e}")))?;
        ExponentForm::new(q.to_vec()).map_err(|e| Error::InvalidEncoding(format!("bottom row: {e}")))?;
        let (mut sp, mut sq) = (0u64, 0u64);
        for t in 0..m {
            sp += u64::from(p[t]);
            sq += u64::from(q[t]);
            if sp < sq {
                return Err(Error::NotDominating);
            }
        }
        let mut pv = vec![0; m + 3];
        pv[1..=m].copy_from_slice(p);
        let mut qv = vec![0; m + 2];
        qv[1..=m].copy_from_slice(q);
        Ok(PairEncoding { m, p: pv, q: qv })
    }

    /// Parses the printed matrix: top row `p_{m+2} .. p_1`, bottom row
    /// `q_{m+1} .. q_1, 0`.
    pub fn from_matrix(top: &[u32], bottom: &[u32]) -> Result<Self> {
        let w = top.len();
        if w < 3 || bottom.len() != w {
            return Err(Error::InvalidEncoding(format!(
                "rows of widths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        if top[0] != 0 || top[1] != 0 || bottom[0] != 0 || bottom[w - 1] != 0 {
            return Err(Error::InvalidEncoding("padding entries must be zero".into()));
        }
        let p: Vec<u32> = top[2..].iter().rev().copied().collect();
        let q: Vec<u32> = bottom[1..w - 1].iter().rev().copied().collect();
        Self::from_exponents(&p, &q)
    }

    pub fn from_paths(p: &DyckPath, q: &DyckPath) -> Result<Self> {
        if !dominates(p, q)? {
            return Err(Error::NotDominating);
        }
        Self::from_exponents(p.to_exponents().as_slice(), q.to_exponents().as_slice())
    }

    pub fn semilength(&self) -> usize {
        self.m
    }

    /// `p_j` for `1 <= j <= m + 2`.
    pub fn p(&self, j: usize) -> u32 {
        self.p.get(j).copied().unwrap_or(0)
    }

    /// `q_j` for `0 <= j <= m + 1`.
    pub fn q(&self, j: usize) -> u32 {
        self.q.get(j).copied().unwrap_or(0)
    }

    pub fn p_exponents(&self) -> &[u32] {
        &self.p[1..=self.m]
    }

    pub fn q_exponents(&self) -> &[u32] {
        &self.q[1..=self.m]
    }

    /// The 2 x (m+2) matrix as printed, left to right.
    pub fn matrix(&self) -> [Vec<u32>; 2] {
        let top = (1..=self.m + 2).rev().map(|j| self.p[j]).collect();
        let bottom = (0..=self.m + 1).rev().map(|j| self.q[j]).collect();
        [top, bottom]
    }

    pub fn to_paths(&self) -> (DyckPath, DyckPath) {
        let p = ExponentForm {
            p: self.p_exponents().to_vec(),
        };
        let q = ExponentForm {
            p: self.q_exponents().to_vec(),
        };
        (p.to_path(), q.to_path())
    }

    /// `s = min { j >= 2 : p_j q_j = 0 }`.
    pub fn s_param(&self) -> usize {
        (2..=self.m + 1)
            .find(|&j| self.p[j] == 0 || self.q[j] == 0)
            .expect("p_{m+1} = 0 bounds s")
    }
}

pub fn encode_pair(p: &DyckPath, q: &DyckPath) -> Result<PairEncoding> {
    PairEncoding::from_paths(p, q)
}
