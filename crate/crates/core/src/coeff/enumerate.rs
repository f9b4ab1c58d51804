use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::letter::Letter;
use crate::shape::{Cell, SkewShiftedShape};
use crate::tableau::{Mode, ShiftedTableau};

/// Bound on the letters used by [`enumerate_tableaux`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Constraint {
    /// Every value lies in `1..=n`.
    MaxEntry(usize),
    /// Value `k` appears exactly `weight[k-1]` times.
    Weight(Vec<usize>),
}

struct Search<'a> {
    shape: &'a SkewShiftedShape,
    cells: Vec<Cell>,
    mode: Mode,
    max: usize,
    remaining: Option<Vec<usize>>,
    filling: BTreeMap<Cell, Letter>,
}

impl Search<'_> {
    fn fits(&self, cell: Cell, x: Letter) -> bool {
        if self.mode == Mode::Ssyt && cell.on_diagonal() && x.is_primed() {
            return false;
        }
        if let Some(w) = cell.west().filter(|w| self.shape.contains(*w)) {
            let l = self.filling[&w];
            if l > x || (l == x && x.is_primed()) {
                return false;
            }
        }
        if let Some(n) = cell.north().filter(|n| self.shape.contains(*n)) {
            let u = self.filling[&n];
            if u > x || (u == x && !x.is_primed()) {
                return false;
            }
        }
        true
    }

    fn go(&mut self, k: usize, out: &mut Vec<ShiftedTableau>) {
        if k == self.cells.len() {
            let t = ShiftedTableau::new(self.shape.clone(), self.filling.clone()).expect("filling covers shape");
            out.push(t);
            return;
        }
        let cell = self.cells[k];
        for v in 1..=self.max {
            if let Some(rem) = &self.remaining {
                if rem[v - 1] == 0 {
                    continue;
                }
            }
            for primed in [true, false] {
                let x = Letter::new(v as i32, primed);
                if !self.fits(cell, x) {
                    continue;
                }
                if let Some(rem) = &mut self.remaining {
                    rem[v - 1] -= 1;
                }
                self.filling.insert(cell, x);
                self.go(k + 1, out);
                self.filling.remove(&cell);
                if let Some(rem) = &mut self.remaining {
                    rem[v - 1] += 1;
                }
            }
        }
    }
}

/// All tableaux of the given shape under `constraint`, by row-major
/// backtracking. The order is deterministic.
pub fn enumerate_tableaux(shape: &SkewShiftedShape, constraint: &Constraint, mode: Mode) -> Vec<ShiftedTableau> {
    let (max, remaining) = match constraint {
        Constraint::MaxEntry(n) => (*n, None),
        Constraint::Weight(w) => {
            if w.iter().sum::<usize>() != shape.size() {
                return Vec::new();
            }
            (w.len(), Some(w.clone()))
        }
    };
    let mut search = Search { shape, cells: shape.cells(), mode, max, remaining, filling: BTreeMap::new() };
    let mut out = Vec::new();
    search.go(0, &mut out);
    out
}

impl Search<'_> {
    /// Whether putting `x` in cell `k` leaves the rest fillable, by filling
    /// it greedily with the smallest letters allowed.
    fn completes(&self, k: usize, x: Letter) -> bool {
        let mut fill = self.filling.clone();
        fill.insert(self.cells[k], x);
        for &cell in &self.cells[k + 1..] {
            let mut lo = Letter::new(1, true);
            if let Some(l) = cell.west().and_then(|w| fill.get(&w)) {
                lo = lo.max(if l.is_primed() { l.unprime() } else { *l });
            }
            if let Some(u) = cell.north().and_then(|n| fill.get(&n)) {
                lo = lo.max(if u.is_primed() { *u } else { Letter::new(u.value() + 1, true) });
            }
            if self.mode == Mode::Ssyt && cell.on_diagonal() {
                lo = lo.unprime();
            }
            if lo.value() as usize > self.max {
                return false;
            }
            fill.insert(cell, lo);
        }
        true
    }

    fn random_fill<R: Rng + ?Sized>(&mut self, k: usize, rng: &mut R, budget: &mut usize) -> bool {
        if k == self.cells.len() {
            return true;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let cell = self.cells[k];
        let mut options: Vec<Letter> = (1..=self.max as i32)
            .flat_map(|v| [Letter::new(v, true), Letter::new(v, false)])
            .filter(|&x| self.fits(cell, x))
            .filter(|&x| self.completes(k, x))
            .collect();
        options.shuffle(rng);
        for x in options {
            self.filling.insert(cell, x);
            if self.random_fill(k + 1, rng, budget) {
                return true;
            }
        }
        self.filling.remove(&cell);
        false
    }
}

/// A random tableau of the shape with letters up to `max_entry`, found by
/// depth-first search with shuffled choices. Not uniform. `None` if no
/// tableau exists or the search gives up after `budget` steps.
pub fn random_tableau<R: Rng + ?Sized>(shape: &SkewShiftedShape, max_entry: usize, mode: Mode, rng: &mut R, budget: usize) -> Option<ShiftedTableau> {
    let mut search = Search { shape, cells: shape.cells(), mode, max: max_entry, remaining: None, filling: BTreeMap::new() };
    let mut budget = budget;
    search.random_fill(0, rng, &mut budget).then(|| ShiftedTableau::new(shape.clone(), search.filling).expect("filling covers shape"))
}
