use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::partition::StrictPartition;
use crate::shape::{Cell, SkewShiftedShape};
use crate::word::Word;

/// Which tableau conditions to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Mode {
    /// Shifted Young tableau over the primed alphabet.
    Syt,
    /// Additionally no primed letter on the main diagonal.
    Ssyt,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    /// Entry is smaller than its west neighbour.
    RowOrder(Cell),
    /// Entry is smaller than its north neighbour.
    ColumnOrder(Cell),
    /// A second unprimed letter of the same value in one column.
    ColumnRepeat(Cell),
    /// A second primed letter of the same value in one row.
    RowPrimeRepeat(Cell),
    PrimedDiagonal(Cell),
}

impl Violation {
    pub fn cell(&self) -> Cell {
        match *self {
            Violation::RowOrder(c)
            | Violation::ColumnOrder(c)
            | Violation::ColumnRepeat(c)
            | Violation::RowPrimeRepeat(c)
            | Violation::PrimedDiagonal(c) => c,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A filling of a skew shifted shape by letters.
///
/// Equality compares the entries only, so two descriptions of the same
/// cell set (say `(4,2)/(3,2)` and `(4)/(3)`) give equal tableaux.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct ShiftedTableau {
    shape: SkewShiftedShape,
    entries: BTreeMap<Cell, Letter>,
}

impl PartialEq for ShiftedTableau {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for ShiftedTableau {}

impl Hash for ShiftedTableau {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl ShiftedTableau {
    pub fn new(shape: SkewShiftedShape, entries: BTreeMap<Cell, Letter>) -> Result<Self> {
        let cells = shape.cell_set();
        if cells.len() != entries.len() || !entries.keys().all(|c| cells.contains(c)) {
            return Err(Error::EntriesMismatch(format!("{} cells in {}, {} entries", cells.len(), shape, entries.len())));
        }
        Ok(ShiftedTableau { shape, entries })
    }

    pub fn empty() -> Self {
        ShiftedTableau::default()
    }

    /// Builds a tableau on the tightest shape holding `entries`.
    pub fn from_entries(entries: BTreeMap<Cell, Letter>) -> Result<Self> {
        let cells: BTreeSet<Cell> = entries.keys().copied().collect();
        let shape = SkewShiftedShape::from_cells(&cells)?;
        Ok(ShiftedTableau { shape, entries })
    }

    /// Builds a tableau on `(inner ∪ cells) / inner`.
    pub fn over(inner: StrictPartition, entries: BTreeMap<Cell, Letter>) -> Result<Self> {
        let cells: BTreeSet<Cell> = entries.keys().copied().collect();
        let shape = SkewShiftedShape::over(inner, &cells)?;
        Ok(ShiftedTableau { shape, entries })
    }

    /// Convenience constructor from `(row, col, "letter")` triples.
    pub fn from_triples(triples: &[(usize, usize, &str)]) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for &(r, c, s) in triples {
            entries.insert(Cell::new(r, c), s.parse()?);
        }
        Self::from_entries(entries)
    }

    pub fn shape(&self) -> &SkewShiftedShape {
        &self.shape
    }

    pub fn entries(&self) -> &BTreeMap<Cell, Letter> {
        &self.entries
    }

    pub fn into_entries(self) -> BTreeMap<Cell, Letter> {
        self.entries
    }

    pub fn get(&self, c: Cell) -> Option<Letter> {
        self.entries.get(&c).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn cell_set(&self) -> BTreeSet<Cell> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.entries.iter().map(|(&c, &l)| (c, l))
    }

    /// Same entries, different description of the shape.
    pub fn with_shape(&self, shape: SkewShiftedShape) -> Result<Self> {
        Self::new(shape, self.entries.clone())
    }

    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Self {
        let entries = self.entries.iter().map(|(&c, &l)| (c, f(l))).collect();
        ShiftedTableau { shape: self.shape.clone(), entries }
    }

    pub fn validate(&self, mode: Mode) -> ValidityReport {
        let mut violations = Vec::new();
        let mut unprimed_in_col: BTreeSet<(usize, Letter)> = BTreeSet::new();
        let mut primed_in_row: BTreeSet<(usize, Letter)> = BTreeSet::new();
        for (&c, &l) in &self.entries {
            if let Some(w) = c.west().and_then(|w| self.entries.get(&w)) {
                if *w > l {
                    violations.push(Violation::RowOrder(c));
                }
            }
            if let Some(n) = c.north().and_then(|n| self.entries.get(&n)) {
                if *n > l {
                    violations.push(Violation::ColumnOrder(c));
                }
            }
            if !l.is_primed() && !unprimed_in_col.insert((c.col, l)) {
                violations.push(Violation::ColumnRepeat(c));
            }
            if l.is_primed() && !primed_in_row.insert((c.row, l)) {
                violations.push(Violation::RowPrimeRepeat(c));
            }
            if mode == Mode::Ssyt && l.is_primed() && c.on_diagonal() {
                violations.push(Violation::PrimedDiagonal(c));
            }
        }
        ValidityReport { violations }
    }

    pub fn is_valid(&self, mode: Mode) -> bool {
        self.validate(mode).is_ok()
    }

    pub fn is_syt(&self) -> bool {
        self.is_valid(Mode::Syt)
    }

    pub fn is_ssyt(&self) -> bool {
        self.is_valid(Mode::Ssyt)
    }

    pub fn has_positive_letters(&self) -> bool {
        self.entries.values().all(|l| l.value() > 0)
    }

    /// `wt_i` = number of `i` and `i'`; trailing zeros trimmed.
    pub fn weight(&self) -> Result<Vec<usize>> {
        if !self.has_positive_letters() {
            return Err(Error::UnsupportedAlphabet);
        }
        Ok(self.reading_word().content())
    }

    /// Distinct letter values in increasing order.
    pub fn values(&self) -> Vec<i32> {
        let set: BTreeSet<i32> = self.entries.values().map(|l| l.value()).collect();
        set.into_iter().collect()
    }

    pub fn min_value(&self) -> Option<i32> {
        self.entries.values().map(|l| l.value()).min()
    }

    pub fn max_value(&self) -> Option<i32> {
        self.entries.values().map(|l| l.value()).max()
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Word {
        let mut rows: BTreeMap<usize, Vec<Letter>> = BTreeMap::new();
        for (c, &l) in &self.entries {
            rows.entry(c.row).or_default().push(l);
        }
        Word(rows.into_values().flat_map(|r| r.into_iter().rev()).collect())
    }

    /// The subtableau of letters with value `v`, placed over everything smaller.
    pub fn layer(&self, v: i32) -> Result<ShiftedTableau> {
        let mut below: BTreeSet<Cell> = self.shape.inner().cells().into_iter().collect();
        let mut entries = BTreeMap::new();
        for (&c, &l) in &self.entries {
            match l.value().cmp(&v) {
                std::cmp::Ordering::Less => {
                    below.insert(c);
                }
                std::cmp::Ordering::Equal => {
                    entries.insert(c, l);
                }
                std::cmp::Ordering::Greater => {}
            }
        }
        let inner = StrictPartition::from_cells(&below).ok_or(Error::InvalidTableau("SYT"))?;
        ShiftedTableau::over(inner, entries).map_err(|_| Error::InvalidTableau("SYT"))
    }

    /// `T^(1), …, T^(max)`; empty layers are kept so index `i-1` holds value `i`.
    pub fn layers(&self) -> Result<Vec<ShiftedTableau>> {
        if !self.has_positive_letters() {
            return Err(Error::UnsupportedAlphabet);
        }
        let max = self.max_value().unwrap_or(0);
        (1..=max)
            .map(|v| {
                let layer = self.layer(v)?;
                if !layer.shape.is_border_strip() {
                    return Err(Error::LayerNotBorderStrip(v));
                }
                Ok(layer)
            })
            .collect()
    }

    /// Primed copies of each value numbered top to bottom, then unprimed ones left to right.
    pub fn standardize(&self) -> ShiftedTableau {
        let mut order: Vec<(Cell, Letter)> = self.iter().collect();
        order.sort_by_key(|&(c, l)| {
            let (major, minor) = if l.is_primed() { (c.row, c.col) } else { (c.col, c.row) };
            (l, major, minor)
        });
        let entries = order
            .into_iter()
            .enumerate()
            .map(|(k, (c, _))| (c, Letter::plain(k as i32 + 1)))
            .collect();
        ShiftedTableau { shape: self.shape.clone(), entries }
    }

    /// Replaces entry `i` of the standardization by `|T| - i + 1`.
    pub fn reverse_standardize(&self) -> ShiftedTableau {
        let n = self.len() as i32;
        self.standardize().map_letters(|l| Letter::plain(n - l.value() + 1))
    }

    /// `R_μ`: row `i` filled with unprimed `i`.
    pub fn r_tableau(mu: &StrictPartition) -> ShiftedTableau {
        let entries = mu.cells().into_iter().map(|c| (c, Letter::plain(c.row as i32))).collect();
        ShiftedTableau { shape: SkewShiftedShape::normal(mu.clone()), entries }
    }

    /// Cells restricted to `keep`, on the tightest shape.
    pub fn restrict(&self, keep: &BTreeSet<Cell>) -> Result<ShiftedTableau> {
        let entries = self.entries.iter().filter(|(c, _)| keep.contains(c)).map(|(&c, &l)| (c, l)).collect();
        ShiftedTableau::from_entries(entries)
    }

    /// Disjoint union, keeping this tableau's inner shape when possible.
    pub fn union(&self, other: &ShiftedTableau) -> Result<ShiftedTableau> {
        let mut entries = self.entries.clone();
        for (&c, &l) in &other.entries {
            if entries.insert(c, l).is_some() {
                return Err(Error::Precondition(format!("tableaux overlap at {c}")));
            }
        }
        ShiftedTableau::over(self.shape.inner().clone(), entries.clone()).or_else(|_| ShiftedTableau::from_entries(entries))
    }

    /// ASCII picture with each row shifted one slot per row; inner cells print as `.`.
    pub fn render(&self) -> String {
        let width = self.entries.values().map(|l| l.to_string().len()).max().unwrap_or(1) + 1;
        let outer = self.shape.outer();
        let mut out = String::new();
        for i in 1..=outer.len() {
            let mut line = " ".repeat(width * (i - 1));
            for j in i..i + outer.part(i) {
                let text = match self.entries.get(&Cell::new(i, j)) {
                    Some(l) => l.to_string(),
                    None => ".".to_string(),
                };
                line.push_str(&format!("{text:>width$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct RawCell {
    row: usize,
    col: usize,
    value: i32,
    primed: bool,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    outer: StrictPartition,
    inner: StrictPartition,
    cells: Vec<RawCell>,
}

impl TryFrom<RawTableau> for ShiftedTableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        let shape = SkewShiftedShape::new(raw.outer, raw.inner)?;
        let mut entries = BTreeMap::new();
        for c in raw.cells {
            let cell = Cell::new(c.row, c.col);
            if entries.insert(cell, Letter::try_new(c.value, c.primed)?).is_some() {
                return Err(Error::EntriesMismatch(format!("duplicate cell {cell}")));
            }
        }
        ShiftedTableau::new(shape, entries)
    }
}

impl From<ShiftedTableau> for RawTableau {
    fn from(t: ShiftedTableau) -> Self {
        let cells = t
            .entries
            .iter()
            .map(|(c, l)| RawCell { row: c.row, col: c.col, value: l.value(), primed: l.is_primed() })
            .collect();
        RawTableau { outer: t.shape.outer().clone(), inner: t.shape.inner().clone(), cells }
    }
}
