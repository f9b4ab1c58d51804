use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::StrictPartition;

/// A box in 1-based matrix coordinates. Orders row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Cell {
        Cell { row, col }
    }

    pub fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn south(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn west(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    pub fn north(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }

    pub fn diagonal_next(self) -> Cell {
        Cell::new(self.row + 1, self.col + 1)
    }

    pub fn on_diagonal(self) -> bool {
        self.row == self.col
    }

    fn neighbours(self) -> impl Iterator<Item = Cell> {
        [Some(self.east()), Some(self.south()), self.west(), self.north()].into_iter().flatten()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The skew shifted shape `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct SkewShiftedShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl SkewShiftedShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeNotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShiftedShape { outer, inner })
    }

    pub fn normal(outer: StrictPartition) -> Self {
        SkewShiftedShape { outer, inner: StrictPartition::empty() }
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn is_normal(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.outer.contains_cell(c) && !self.inner.contains_cell(c)
    }

    /// Row-major list of the cells of the shape.
    pub fn cells(&self) -> Vec<Cell> {
        self.outer.cells().into_iter().filter(|&c| !self.inner.contains_cell(c)).collect()
    }

    pub fn cell_set(&self) -> BTreeSet<Cell> {
        self.cells().into_iter().collect()
    }

    pub fn is_border_strip(&self) -> bool {
        is_border_strip(&self.cell_set())
    }

    pub fn is_double_border_strip(&self) -> bool {
        is_double_border_strip(&self.cell_set())
    }

    pub fn components(&self) -> Vec<BTreeSet<Cell>> {
        components(&self.cell_set())
    }

    /// Cells with neither a south nor an east neighbour in the shape.
    pub fn removable_corners(&self) -> Vec<Cell> {
        self.cells()
            .into_iter()
            .filter(|c| !self.contains(c.east()) && !self.contains(c.south()))
            .collect()
    }

    /// Cells `B` of the inner shape such that `self` extends the single box `B`.
    pub fn inner_corners(&self) -> Vec<Cell> {
        self.inner
            .cells()
            .into_iter()
            .filter(|c| !self.inner.contains_cell(c.east()) && !self.inner.contains_cell(c.south()))
            .collect()
    }

    /// True when `self = λ/μ` and `other = μ/ν` for some `ν ⊆ μ ⊆ λ`.
    pub fn extends(&self, other: &SkewShiftedShape) -> bool {
        extends_cells(&other.cell_set(), &self.cell_set())
    }

    /// The tightest skew shifted shape whose cells are exactly `cells`.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Result<Self> {
        let closure = down_closure(cells);
        let inner_cells: BTreeSet<Cell> = closure.difference(cells).copied().collect();
        let outer = StrictPartition::from_cells(&closure).ok_or(Error::NotASkewShape)?;
        let inner = StrictPartition::from_cells(&inner_cells).ok_or(Error::NotASkewShape)?;
        SkewShiftedShape::new(outer, inner)
    }

    /// The shape `(inner ∪ cells) / inner`, failing unless the union is a shifted diagram.
    pub fn over(inner: StrictPartition, cells: &BTreeSet<Cell>) -> Result<Self> {
        let mut all: BTreeSet<Cell> = inner.cells().into_iter().collect();
        for &c in cells {
            if !all.insert(c) {
                return Err(Error::NotASkewShape);
            }
        }
        let outer = StrictPartition::from_cells(&all).ok_or(Error::NotASkewShape)?;
        SkewShiftedShape::new(outer, inner)
    }
}

impl fmt::Display for SkewShiftedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// No `{(i,j), (i+1,j+1)}` among the cells.
pub fn is_border_strip(cells: &BTreeSet<Cell>) -> bool {
    cells.iter().all(|c| !cells.contains(&c.diagonal_next()))
}

/// No `{(i,j), (i+1,j+1), (i+2,j+2)}` among the cells.
pub fn is_double_border_strip(cells: &BTreeSet<Cell>) -> bool {
    cells.iter().all(|c| {
        let d = c.diagonal_next();
        !(cells.contains(&d) && cells.contains(&d.diagonal_next()))
    })
}

/// Maximal edge-connected subsets, ordered by their first cell.
pub fn components(cells: &BTreeSet<Cell>) -> Vec<BTreeSet<Cell>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(c) = queue.pop_front() {
            comp.insert(c);
            for n in c.neighbours() {
                if cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// All shifted-plane cells weakly north-west of some cell in `cells`.
pub fn down_closure(cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    let max_row = cells.iter().map(|c| c.row).max().unwrap_or(0);
    for i in 1..=max_row {
        let reach = cells.iter().filter(|c| c.row >= i).map(|c| c.col).max().unwrap_or(0);
        out.extend((i..=reach).map(|j| Cell::new(i, j)));
    }
    out
}

fn is_lower_set(cells: &BTreeSet<Cell>) -> bool {
    cells.iter().all(|c| {
        let west_ok = c.col == c.row || cells.contains(&Cell::new(c.row, c.col - 1));
        let north_ok = c.row == 1 || cells.contains(&Cell::new(c.row - 1, c.col));
        west_ok && north_ok
    })
}

/// True when `outer` extends `inner` as skew shapes.
pub fn extends_cells(inner: &BTreeSet<Cell>, outer: &BTreeSet<Cell>) -> bool {
    if !inner.is_disjoint(outer) {
        return false;
    }
    let all: BTreeSet<Cell> = inner.union(outer).copied().collect();
    let mid: BTreeSet<Cell> = down_closure(&all).difference(outer).copied().collect();
    if !inner.is_subset(&mid) || !is_lower_set(&mid) {
        return false;
    }
    let bottom: BTreeSet<Cell> = mid.difference(inner).copied().collect();
    is_lower_set(&bottom)
}
