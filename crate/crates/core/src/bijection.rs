//! The bijection between 2-triangulations of an `n`-gon and pairs of
//! non-crossing Dyck paths of semilength `n-4`.
//!
//! [`psi`] is the direct coloring construction. [`psi_tree`] computes the
//! same map by walking up the triangulation tree and down the pair tree,
//! matching labels; [`psi_inverse`] walks the other way.
//!
//! Coloring works on the diagram, columns `4..=n`, grouped into blocks of
//! adjacent columns. Block `j` starts out as column `j+3`. Each of the
//! `n-5` iterations:
//!
//! 1. takes the largest `r` such that row `r` has a cross, colored or not, in
//!    block `r`;
//! 2. colors blue the leftmost uncolored cross of block `r`;
//! 3. merges blocks `r-2` and `r-1` (for `r = 2`, block 1 is dropped);
//! 4. colors red the rightmost uncolored cross of the merged block.
//!
//! `P` takes its `E`-runs from the blue counts of columns `5..=n`, `Q` from
//! the red counts of columns `4..=n-1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::dyck::{DyckPath, PairEncoding};
use crate::error::{Error, Result};
use crate::gentree2::{children2, label2, pair_children, pair_label, pair_parent, parent2, TreeLabel};
use crate::polygon::{Diagonal, KTriangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Uncolored,
    Blue,
    Red,
}

/// How ties between equally left (blue) or right (red) crosses are broken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Blue takes the lowest cross, red the highest.
    #[default]
    Standard,
    /// Blue takes the highest cross, red the lowest.
    Opposite,
}

/// A contiguous range of diagram columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub first: usize,
    pub last: usize,
}

impl Block {
    pub fn contains(&self, column: usize) -> bool {
        self.first <= column && column <= self.last
    }
}

/// The ordered blocks; block `j` (1-based) has `j-1` blocks to its left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockState {
    blocks: Vec<Block>,
}

impl BlockState {
    fn initial(n: usize) -> Self {
        BlockState {
            blocks: (4..=n).map(|c| Block { first: c, last: c }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block `j`, 1-based.
    pub fn get(&self, j: usize) -> Option<Block> {
        j.checked_sub(1).and_then(|i| self.blocks.get(i)).copied()
    }

    /// 1-based index of the block holding `column`.
    pub fn block_of(&self, column: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(column)).map(|i| i + 1)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }
}

/// One iteration of the coloring, as reported by `--trace`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoringStep {
    pub iteration: usize,
    pub r: usize,
    pub blue: Diagonal,
    pub red: Diagonal,
    /// The merged block indices `(r-2, r-1)` before merging.
    pub merged: (usize, usize),
}

impl fmt::Display for ColoringStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "iter={} r={} blue={} red={} merged={}+{}",
            self.iteration, self.r, self.blue, self.red, self.merged.0, self.merged.1
        )
    }
}

/// Coloring in progress; [`Coloring::step`] runs one iteration.
#[derive(Debug, Clone)]
pub struct Coloring {
    triangulation: KTriangulation,
    tie: TieBreak,
    colors: BTreeMap<Diagonal, Color>,
    blocks: BlockState,
    steps: Vec<ColoringStep>,
}

impl Coloring {
    pub fn new(t: &KTriangulation, tie: TieBreak) -> Result<Self> {
        if t.ctx().k() != 2 {
            return Err(Error::UnsupportedK {
                expected: 2,
                got: t.ctx().k(),
            });
        }
        Ok(Coloring {
            triangulation: t.clone(),
            tie,
            colors: t.iter().map(|d| (*d, Color::Uncolored)).collect(),
            blocks: BlockState::initial(t.ctx().n()),
            steps: Vec::new(),
        })
    }

    pub fn blocks(&self) -> &BlockState {
        &self.blocks
    }

    pub fn color(&self, d: &Diagonal) -> Option<Color> {
        self.colors.get(d).copied()
    }

    pub fn is_done(&self) -> bool {
        self.steps.len() + 5 >= self.triangulation.ctx().n()
    }

    fn uncolored_in(&self, block: Block) -> impl Iterator<Item = Diagonal> + '_ {
        self.colors
            .iter()
            .filter(move |(d, c)| **c == Color::Uncolored && block.contains(d.b))
            .map(|(d, _)| *d)
    }

    /// Distinct `(row, block)` positions holding a cross that are cells of
    /// the current ancestor's staircase, where block `b` stands for column
    /// `b+3`.
    pub fn pattern(&self) -> Vec<(usize, usize)> {
        let ancestor = self.blocks.len() + 3;
        let cells: BTreeSet<(usize, usize)> = self
            .colors
            .keys()
            .filter_map(|d| self.blocks.block_of(d.b).map(|b| (d.a, b)))
            .filter(|&(a, b)| a <= b && a + ancestor > b + 5)
            .collect();
        cells.into_iter().collect()
    }

    pub fn step(&mut self) -> Result<Option<ColoringStep>> {
        if self.is_done() {
            return Ok(None);
        }
        let iteration = self.steps.len() + 1;
        let r = (1..=self.blocks.len())
            .rev()
            .find(|&r| {
                let block = self.blocks.get(r).expect("index in range");
                self.colors.keys().any(|d| d.a == r && block.contains(d.b))
            })
            .ok_or_else(|| Error::Structural(format!("iteration {iteration}: no corner row found")))?;
        if r < 2 {
            return Err(Error::Structural(format!("iteration {iteration}: corner {r} below 2")));
        }

        let block_r = self.blocks.get(r).expect("index in range");
        let blue = self
            .uncolored_in(block_r)
            .min_by_key(|d| {
                let row_key = match self.tie {
                    TieBreak::Standard => usize::MAX - d.a,
                    TieBreak::Opposite => d.a,
                };
                (d.b, row_key)
            })
            .ok_or_else(|| Error::Structural(format!("iteration {iteration}: block {r} has no cross for blue")))?;
        self.colors.insert(blue, Color::Blue);

        let merged_block = if r == 2 {
            self.blocks.blocks.remove(0)
        } else {
            let left = self.blocks.blocks[r - 3];
            let right = self.blocks.blocks.remove(r - 2);
            let joined = Block {
                first: left.first,
                last: right.last,
            };
            self.blocks.blocks[r - 3] = joined;
            joined
        };
        let red = self
            .uncolored_in(merged_block)
            .max_by_key(|d| {
                let row_key = match self.tie {
                    TieBreak::Standard => usize::MAX - d.a,
                    TieBreak::Opposite => d.a,
                };
                (d.b, row_key)
            })
            .ok_or_else(|| {
                Error::Structural(format!("iteration {iteration}: merged block has no cross for red"))
            })?;
        self.colors.insert(red, Color::Red);

        let step = ColoringStep {
            iteration,
            r,
            blue,
            red,
            merged: (r - 2, r - 1),
        };
        self.steps.push(step);
        Ok(Some(step))
    }

    pub fn finish(mut self) -> Result<ColoredDiagram> {
        while self.step()?.is_some() {}
        if let Some((d, _)) = self.colors.iter().find(|(_, c)| **c == Color::Uncolored) {
            return Err(Error::Structural(format!("cross {d} left uncolored")));
        }
        Ok(ColoredDiagram {
            triangulation: self.triangulation,
            colors: self.colors,
            blocks: self.blocks,
            steps: self.steps,
        })
    }
}

/// A 2-triangulation with every cross colored blue or red.
#[derive(Debug, Clone)]
pub struct ColoredDiagram {
    triangulation: KTriangulation,
    colors: BTreeMap<Diagonal, Color>,
    blocks: BlockState,
    steps: Vec<ColoringStep>,
}

impl ColoredDiagram {
    pub fn triangulation(&self) -> &KTriangulation {
        &self.triangulation
    }

    pub fn color(&self, d: &Diagonal) -> Option<Color> {
        self.colors.get(d).copied()
    }

    pub fn steps(&self) -> &[ColoringStep] {
        &self.steps
    }

    pub fn blocks(&self) -> &BlockState {
        &self.blocks
    }

    fn count(&self, column: usize, color: Color) -> u32 {
        self.colors.iter().filter(|(d, c)| d.b == column && **c == color).count() as u32
    }

    /// Blue crosses in `column`.
    pub fn alpha(&self, column: usize) -> u32 {
        self.count(column, Color::Blue)
    }

    /// Red crosses in `column`.
    pub fn beta(&self, column: usize) -> u32 {
        self.count(column, Color::Red)
    }

    /// `P = N E^{alpha_5} ... N E^{alpha_n} E` and
    /// `Q = N E^{beta_4} ... N E^{beta_{n-1}} E`.
    pub fn paths(&self) -> Result<(DyckPath, DyckPath)> {
        let n = self.triangulation.ctx().n();
        if self.alpha(4) != 0 || self.beta(n) != 0 {
            return Err(Error::Structural("blue cross in column 4 or red cross in column n".into()));
        }
        let m = n - 4;
        let p: Vec<u32> = (1..=m).map(|j| self.alpha(n + 1 - j)).collect();
        let q: Vec<u32> = (1..=m).map(|j| self.beta(n - j)).collect();
        let enc = PairEncoding::from_exponents(&p, &q)
            .map_err(|e| Error::Structural(format!("colored counts do not give a valid pair: {e}")))?;
        Ok(enc.to_paths())
    }
}

/// Column counts `(h_4, ..., h_n)` that a pair forces on its triangulation:
/// `(q_m, p_m + q_{m-1}, ..., p_2 + q_1, p_1)`.
pub fn column_counts_from_pair(e: &PairEncoding) -> Vec<u32> {
    let m = e.semilength();
    let mut h = vec![e.q(m)];
    h.extend((1..m).rev().map(|j| e.p(j + 1) + e.q(j)));
    h.push(e.p(1));
    h
}

pub fn color_diagram(t: &KTriangulation) -> Result<ColoredDiagram> {
    color_diagram_with(t, TieBreak::Standard)
}

pub fn color_diagram_with(t: &KTriangulation, tie: TieBreak) -> Result<ColoredDiagram> {
    Coloring::new(t, tie)?.finish()
}

/// The bijection, computed by coloring.
pub fn psi(t: &KTriangulation) -> Result<(DyckPath, DyckPath)> {
    color_diagram(t)?.paths()
}

/// Labels from the root down to `t` in the 2-triangulation tree.
pub fn label_chain(t: &KTriangulation) -> Result<Vec<TreeLabel>> {
    let mut chain = vec![label2(t)?];
    let mut cur = t.clone();
    while !cur.is_root() {
        cur = parent2(&cur)?;
        chain.push(label2(&cur)?);
    }
    chain.reverse();
    Ok(chain)
}

/// Labels from the root down to the pair in the pair tree.
pub fn pair_label_chain(e: &PairEncoding) -> Result<Vec<TreeLabel>> {
    let mut chain = vec![pair_label(e)];
    let mut cur = e.clone();
    while cur.semilength() > 1 {
        cur = pair_parent(&cur)?;
        chain.push(pair_label(&cur));
    }
    chain.reverse();
    Ok(chain)
}

fn pick_unique<T>(candidates: impl Iterator<Item = T>, label: &TreeLabel) -> Result<T> {
    let mut it = candidates;
    let first = it
        .next()
        .ok_or_else(|| Error::Structural(format!("no child labeled {label}")))?;
    if it.next().is_some() {
        return Err(Error::Structural(format!("several children labeled {label}")));
    }
    Ok(first)
}

fn check_root(chain: &[TreeLabel]) -> Result<()> {
    if chain.first() != Some(&TreeLabel::root()) {
        return Err(Error::Structural("root label is not (0,0)".into()));
    }
    Ok(())
}

/// The bijection, computed through the two generating trees.
pub fn psi_tree(t: &KTriangulation) -> Result<(DyckPath, DyckPath)> {
    let chain = label_chain(t)?;
    check_root(&chain)?;
    let mut node = PairEncoding::root();
    for label in &chain[1..] {
        let kids = pair_children(&node)?;
        node = pick_unique(
            kids.into_iter().filter(|(_, c)| pair_label(c) == *label).map(|(_, c)| c),
            label,
        )?;
    }
    Ok(node.to_paths())
}

/// Inverse of the bijection, computed through the two generating trees.
pub fn psi_inverse(p: &DyckPath, q: &DyckPath) -> Result<KTriangulation> {
    let enc = PairEncoding::from_paths(p, q)?;
    let chain = pair_label_chain(&enc)?;
    check_root(&chain)?;
    let mut node = KTriangulation::root(2)?;
    for label in &chain[1..] {
        let kids = children2(&node)?;
        let mut matching = Vec::new();
        for (_, c) in kids {
            if label2(&c)? == *label {
                matching.push(c);
            }
        }
        node = pick_unique(matching.into_iter(), label)?;
    }
    Ok(node)
}
