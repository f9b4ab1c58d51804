//! Shifted tableau switching.
//!
//! A pair `(A, B)` of single-value fillings is switched one box at a time:
//! [`select_box`] picks the next a-box and [`apply_switch`] moves it past its
//! b-neighbours. Pairs of tableaux are switched layer pair by layer pair.

mod path;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

pub use path::{check_succession, PathType, SwitchPath};

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::partition::StrictPartition;
use crate::shape::{self, Cell};
use crate::tableau::{Mode, ShiftedTableau};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum SwitchKind {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S1m,
    S2m,
    S6m,
}

impl SwitchKind {
    pub fn is_modified(self) -> bool {
        matches!(self, SwitchKind::S1m | SwitchKind::S2m | SwitchKind::S6m)
    }

    pub fn is_diagonal_pair(self) -> bool {
        matches!(self, SwitchKind::S4 | SwitchKind::S7)
    }
}

impl fmt::Display for SwitchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One applied switch and the box it was applied to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SwitchStep {
    pub kind: SwitchKind,
    pub cell: Cell,
}

/// Layer-pair order for switching tableaux.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Order {
    /// Outer loop over layers of `S` from the top value down.
    #[default]
    Standard,
    /// Outer loop over layers of `T` from the bottom value up.
    Alternate,
}

pub type Filling = BTreeMap<Cell, Letter>;

/// Two disjoint single-value fillings of a double border strip.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PerforatedPair {
    pub a_part: Filling,
    pub b_part: Filling,
}

impl PerforatedPair {
    pub fn new(a_part: Filling, b_part: Filling) -> Result<Self> {
        if a_part.keys().any(|c| b_part.contains_key(c)) {
            return Err(Error::Precondition("the two parts overlap".into()));
        }
        Ok(PerforatedPair { a_part, b_part })
    }

    pub fn from_tableaux(a: &ShiftedTableau, b: &ShiftedTableau) -> Result<Self> {
        Self::new(a.entries().clone(), b.entries().clone())
    }

    pub fn occupant(&self, c: Cell) -> Option<(Family, Letter)> {
        if let Some(&l) = self.a_part.get(&c) {
            return Some((Family::A, l));
        }
        self.b_part.get(&c).map(|&l| (Family::B, l))
    }

    fn b_at(&self, c: Cell) -> Option<Letter> {
        self.b_part.get(&c).copied()
    }

    fn a_at(&self, c: Cell) -> Option<Letter> {
        self.a_part.get(&c).copied()
    }

    pub fn carrier(&self) -> BTreeSet<Cell> {
        self.a_part.keys().chain(self.b_part.keys()).copied().collect()
    }

    /// Both parts satisfy the perforated conditions.
    pub fn check(&self) -> Result<()> {
        check_perforated(&self.a_part).map_err(|e| Error::NotPerforated(format!("a-part: {e}")))?;
        check_perforated(&self.b_part).map_err(|e| Error::NotPerforated(format!("b-part: {e}")))
    }

    pub fn is_perforated(&self) -> bool {
        self.check().is_ok()
    }

    pub fn is_fully_switched(&self) -> bool {
        select_box(self).is_none()
    }

    fn put(&mut self, c: Cell, family: Family, l: Letter) {
        match family {
            Family::A => {
                self.b_part.remove(&c);
                self.a_part.insert(c, l);
            }
            Family::B => {
                self.a_part.remove(&c);
                self.b_part.insert(c, l);
            }
        }
    }

    fn swap(&mut self, x: Cell, y: Cell) {
        let (fx, lx) = self.occupant(x).expect("occupied");
        let (fy, ly) = self.occupant(y).expect("occupied");
        self.put(x, fy, ly);
        self.put(y, fx, lx);
    }
}

/// The perforated conditions on one single-value part.
pub fn check_perforated(part: &Filling) -> std::result::Result<(), String> {
    let mut values = part.values().map(|l| l.value());
    if let Some(v) = values.next() {
        if values.any(|w| w != v) {
            return Err("mixed values".into());
        }
    }
    let (primed, unprimed): (Vec<Cell>, Vec<Cell>) = part.iter().map(|(&c, _)| c).partition(|c| part[c].is_primed());
    for u in &unprimed {
        if let Some(p) = primed.iter().find(|p| p.row >= u.row && p.col >= u.col) {
            return Err(format!("primed box {p} south-east of unprimed box {u}"));
        }
    }
    let mut cols = BTreeSet::new();
    if let Some(c) = unprimed.iter().find(|c| !cols.insert(c.col)) {
        return Err(format!("second unprimed box in column {}", c.col));
    }
    let mut rows = BTreeSet::new();
    if let Some(c) = primed.iter().find(|c| !rows.insert(c.row)) {
        return Err(format!("second primed box in row {}", c.row));
    }
    if part.keys().filter(|c| c.on_diagonal()).count() > 1 {
        return Err("two boxes on the main diagonal".into());
    }
    Ok(())
}

/// The easternmost unprimed a-box with a b-box to its south or east, else
/// the southernmost primed one.
pub fn select_box(p: &PerforatedPair) -> Option<Cell> {
    let touching = |c: &Cell| p.b_part.contains_key(&c.east()) || p.b_part.contains_key(&c.south());
    let candidates: Vec<(Cell, Letter)> = p.a_part.iter().filter(|(c, _)| touching(c)).map(|(&c, &l)| (c, l)).collect();
    let unprimed = candidates.iter().filter(|(_, l)| !l.is_primed()).max_by_key(|(c, _)| (c.col, c.row));
    if let Some((c, _)) = unprimed {
        return Some(*c);
    }
    candidates.iter().filter(|(_, l)| l.is_primed()).max_by_key(|(c, _)| (c.row, c.col)).map(|(c, _)| *c)
}

/// A switch applied at `cell`: which rule, and the a-box moves in order.
struct Applied {
    kind: SwitchKind,
    moves: Vec<(Cell, Cell)>,
}

fn malformed(cell: Cell, detail: &str) -> Error {
    Error::MalformedPair { cell, detail: detail.into() }
}

fn modified_switch(p: &mut PerforatedPair, x: Cell, a: Letter) -> Option<Applied> {
    let east = p.b_at(x.east());
    let south = p.b_at(x.south());
    if x.on_diagonal() && !a.is_primed() {
        if let Some(b) = east.filter(|b| b.is_primed()) {
            if p.b_at(x.diagonal_next()).is_none() {
                p.put(x, Family::B, b.unprime());
                p.put(x.east(), Family::A, a.with_prime(true));
                return Some(Applied { kind: SwitchKind::S1m, moves: vec![(x, x.east())] });
            }
        }
    }
    let south_diag = x.south().on_diagonal();
    if a.is_primed() && south_diag {
        if let Some(b) = south {
            match east {
                None => {
                    p.put(x, Family::B, b.with_prime(true));
                    p.put(x.south(), Family::A, a.unprime());
                    return Some(Applied { kind: SwitchKind::S2m, moves: vec![(x, x.south())] });
                }
                Some(e) if !e.is_primed() => {
                    p.put(x, Family::B, b.with_prime(true));
                    p.put(x.south(), Family::A, a.unprime());
                    return Some(Applied { kind: SwitchKind::S6m, moves: vec![(x, x.south())] });
                }
                Some(_) => {}
            }
        }
    }
    None
}

fn standard_switch(p: &mut PerforatedPair, x: Cell, a: Letter) -> Result<Applied> {
    let east = p.b_at(x.east());
    let south = p.b_at(x.south());
    if x.on_diagonal() {
        let d = x.diagonal_next();
        return match (east, p.b_at(d)) {
            (Some(e), Some(bd)) if e.is_primed() => {
                p.put(x, Family::B, bd);
                p.put(x.east(), Family::B, e.unprime());
                p.put(d, Family::A, a);
                Ok(Applied { kind: SwitchKind::S3, moves: vec![(x, x.east()), (x.east(), d)] })
            }
            (Some(_), Some(_)) => Err(malformed(x, "unprimed b east of a diagonal box with b below it")),
            (Some(_), None) => {
                p.swap(x, x.east());
                Ok(Applied { kind: SwitchKind::S1, moves: vec![(x, x.east())] })
            }
            (None, _) => Err(malformed(x, "diagonal box without a b-box to the east")),
        };
    }
    let diag = Cell::new(x.row, x.row);
    if x.col == x.row + 1 && !a.is_primed() && p.a_at(diag).is_some() {
        if let Some(bs) = south {
            let kind = match east {
                None => Some(SwitchKind::S4),
                Some(e) if !e.is_primed() => Some(SwitchKind::S7),
                Some(_) => None,
            };
            if let Some(kind) = kind {
                let aw = p.a_at(diag).expect("checked");
                p.put(diag, Family::B, bs);
                p.put(x, Family::A, a.with_prime(true));
                p.put(x.south(), Family::A, aw);
                return Ok(Applied { kind, moves: vec![(x, x.south()), (diag, x)] });
            }
        }
    }
    match (east, south) {
        (Some(e), Some(_)) if e.is_primed() => {
            p.swap(x, x.east());
            Ok(Applied { kind: SwitchKind::S5, moves: vec![(x, x.east())] })
        }
        (Some(_), Some(_)) => {
            p.swap(x, x.south());
            Ok(Applied { kind: SwitchKind::S6, moves: vec![(x, x.south())] })
        }
        (Some(_), None) => {
            p.swap(x, x.east());
            Ok(Applied { kind: SwitchKind::S1, moves: vec![(x, x.east())] })
        }
        (None, Some(_)) => {
            p.swap(x, x.south());
            Ok(Applied { kind: SwitchKind::S2, moves: vec![(x, x.south())] })
        }
        (None, None) => Err(malformed(x, "no adjacent b-box")),
    }
}

fn switch_in_place(p: &mut PerforatedPair, x: Cell, modified: bool) -> Result<Applied> {
    let a = p.a_at(x).ok_or_else(|| malformed(x, "not an a-box"))?;
    if modified {
        if let Some(applied) = modified_switch(p, x, a) {
            return Ok(applied);
        }
    }
    standard_switch(p, x, a)
}

/// Applies the switch dictated by the configuration around `cell`.
pub fn apply_switch(p: &PerforatedPair, cell: Cell) -> Result<(PerforatedPair, SwitchKind)> {
    let mut out = p.clone();
    let applied = switch_in_place(&mut out, cell, false)?;
    Ok((out, applied.kind))
}

/// Outcome of switching one perforated pair.
#[derive(Clone, Debug)]
pub struct PairRun {
    pub pair: PerforatedPair,
    pub steps: Vec<SwitchStep>,
    pub paths: Vec<SwitchPath>,
}

pub(crate) fn check_pair_preconditions(p: &PerforatedPair, modified: bool) -> Result<()> {
    if !shape::is_double_border_strip(&p.carrier()) {
        return Err(Error::NotDoubleBorderStrip);
    }
    p.check()?;
    let a: BTreeSet<Cell> = p.a_part.keys().copied().collect();
    let b: BTreeSet<Cell> = p.b_part.keys().copied().collect();
    if !shape::extends_cells(&a, &b) {
        return Err(Error::NotExtending);
    }
    if modified {
        let primed_diag = p.a_part.iter().chain(&p.b_part).find(|(c, l)| c.on_diagonal() && l.is_primed());
        if let Some((c, _)) = primed_diag {
            return Err(Error::Precondition(format!("primed letter on the main diagonal at {c}")));
        }
    }
    Ok(())
}

/// Switches a perforated pair box by box, checking every invariant along the way.
pub(crate) fn run_pair(start: &PerforatedPair, modified: bool) -> Result<PairRun> {
    run_pair_observed(start, modified, &mut |_, _| {})
}

type Observer<'a> = dyn FnMut(&PerforatedPair, SwitchStep) + 'a;

fn run_pair_observed(start: &PerforatedPair, modified: bool, observe: &mut Observer) -> Result<PairRun> {
    check_pair_preconditions(start, modified)?;
    let mut p = start.clone();
    let mut ids: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut paths = Vec::new();
    for (&c, l) in &p.a_part {
        ids.insert(c, paths.len());
        paths.push(SwitchPath::start(c, l.is_primed()));
    }
    let mut steps = Vec::new();
    let limit = 4 * p.carrier().len() * p.carrier().len() + 4;
    while let Some(x) = select_box(&p) {
        if steps.len() > limit {
            return Err(Error::Invariant("switching did not terminate".into()));
        }
        let applied = switch_in_place(&mut p, x, modified)?;
        let step_no = steps.len();
        for (k, &(from, to)) in applied.moves.iter().enumerate() {
            let id = ids.remove(&from).expect("a-box tracked");
            ids.insert(to, id);
            let path = &mut paths[id];
            path.visited.push(to);
            if path.first_step.is_none() {
                path.first_step = Some(step_no);
                path.passive = k > 0 && applied.kind.is_diagonal_pair();
            }
            if applied.kind.is_diagonal_pair() {
                path.diagonal_switch = true;
            }
        }
        let step = SwitchStep { kind: applied.kind, cell: x };
        steps.push(step);
        observe(&p, step);
        p.check().map_err(|e| Error::Invariant(format!("after {} at {x}: {e}", applied.kind)))?;
        if modified && steps.iter().filter(|s| s.kind.is_modified()).count() > 1 {
            return Err(Error::Invariant("more than one modified switch in one pair".into()));
        }
    }
    for (&c, &id) in &ids {
        paths[id].end_primed = p.a_part[&c].is_primed();
    }
    for path in &paths {
        path.check_type()?;
    }
    Ok(PairRun { pair: p, steps, paths })
}

/// Result of switching a pair of tableaux or a perforated pair.
#[derive(Clone, Debug)]
pub struct Switched {
    /// The b-part, now inside: `^S T`.
    pub inner: ShiftedTableau,
    /// The a-part, now outside: `S_T`.
    pub outer: ShiftedTableau,
    pub steps: Vec<SwitchStep>,
    pub paths: Vec<SwitchPath>,
}

/// Places `first` over an inner shape and `second` over `first`.
fn stack(inner_hint: &StrictPartition, first: Filling, second: Filling) -> Result<(ShiftedTableau, ShiftedTableau)> {
    let all: BTreeSet<Cell> = first.keys().chain(second.keys()).copied().collect();
    let inner = match shape::SkewShiftedShape::over(inner_hint.clone(), &all) {
        Ok(_) => inner_hint.clone(),
        Err(_) => shape::SkewShiftedShape::from_cells(&all)?.inner().clone(),
    };
    let lo = ShiftedTableau::over(inner, first).map_err(|_| Error::Invariant("switched inner part is not a skew shape".into()))?;
    let hi = ShiftedTableau::over(lo.shape().outer().clone(), second)
        .map_err(|_| Error::Invariant("switched outer part does not extend the inner part".into()))?;
    Ok((lo, hi))
}

fn single_value(t: &ShiftedTableau) -> Result<()> {
    if t.values().len() > 1 {
        return Err(Error::Precondition("a perforated part must use a single value".into()));
    }
    Ok(())
}

pub(crate) fn switch_pair_impl(a: &ShiftedTableau, b: &ShiftedTableau, modified: bool) -> Result<Switched> {
    single_value(a)?;
    single_value(b)?;
    let run = run_pair(&PerforatedPair::from_tableaux(a, b)?, modified)?;
    let (inner, outer) = stack(a.shape().inner(), run.pair.b_part, run.pair.a_part)?;
    Ok(Switched { inner, outer, steps: run.steps, paths: run.paths })
}

/// Switches tableaux `A`, `B` of single values with `B` extending `A`.
/// Returns `(^A B, A_B)` with the trace and switching paths.
pub fn switch_pair(a: &ShiftedTableau, b: &ShiftedTableau) -> Result<Switched> {
    switch_pair_impl(a, b, false)
}

type Board = BTreeMap<Cell, (Family, Letter)>;

fn family_layer(board: &Board, family: Family, value: i32) -> Filling {
    board.iter().filter(|(_, &(f, l))| f == family && l.value() == value).map(|(&c, &(_, l))| (c, l)).collect()
}

/// The whole board after one switch of a tableau-pair run.
#[derive(Clone, Debug)]
pub struct TraceFrame {
    pub step: SwitchStep,
    /// Letters that started in `S`.
    pub a_part: Filling,
    /// Letters that started in `T`.
    pub b_part: Filling,
}

struct Run<'a> {
    order: Order,
    modified: bool,
    steps: Vec<SwitchStep>,
    paths: Vec<SwitchPath>,
    frames: Option<&'a mut Vec<TraceFrame>>,
}

fn switch_component(board: &mut Board, comp: &BTreeSet<Cell>, run: &mut Run) -> Result<()> {
    let values = |fam: Family| -> Vec<i32> {
        let set: BTreeSet<i32> =
            comp.iter().map(|c| board[c]).filter(|(f, _)| *f == fam).map(|(_, l)| l.value()).collect();
        set.into_iter().collect()
    };
    let s_vals: Vec<i32> = values(Family::A).into_iter().rev().collect();
    let t_vals = values(Family::B);
    let pairs: Vec<(i32, i32)> = match run.order {
        Order::Standard => s_vals.iter().flat_map(|&i| t_vals.iter().map(move |&j| (i, j))).collect(),
        Order::Alternate => t_vals.iter().flat_map(|&j| s_vals.iter().map(move |&i| (i, j))).collect(),
    };
    for (i, j) in pairs {
        let layer = |fam, v| -> Filling { family_layer(board, fam, v).into_iter().filter(|(c, _)| comp.contains(c)).collect() };
        let pair = PerforatedPair::new(layer(Family::A, i), layer(Family::B, j))?;
        let done = match run.frames.as_deref_mut() {
            None => run_pair(&pair, run.modified)?,
            Some(frames) => {
                let mut rest = board.clone();
                rest.retain(|c, _| !pair.a_part.contains_key(c) && !pair.b_part.contains_key(c));
                run_pair_observed(&pair, run.modified, &mut |p, step| {
                    let fam = |f: Family, own: &Filling| -> Filling {
                        rest.iter().filter(|(_, (g, _))| *g == f).map(|(&c, &(_, l))| (c, l)).chain(own.iter().map(|(&c, &l)| (c, l))).collect()
                    };
                    frames.push(TraceFrame { step, a_part: fam(Family::A, &p.a_part), b_part: fam(Family::B, &p.b_part) });
                })?
            }
        };
        for (c, l) in done.pair.a_part {
            board.insert(c, (Family::A, l));
        }
        for (c, l) in done.pair.b_part {
            board.insert(c, (Family::B, l));
        }
        run.steps.extend(done.steps);
        run.paths.extend(done.paths);
    }
    Ok(())
}

pub(crate) fn switch_tableaux_impl(s: &ShiftedTableau, t: &ShiftedTableau, order: Order, modified: bool) -> Result<Switched> {
    switch_tableaux_run(s, t, Run { order, modified, steps: Vec::new(), paths: Vec::new(), frames: None })
}

/// Switches `S` past `T` and records the board after every switch.
pub fn trace_tableaux(s: &ShiftedTableau, t: &ShiftedTableau, order: Order, modified: bool) -> Result<(Switched, Vec<TraceFrame>)> {
    let mut frames = Vec::new();
    let out = switch_tableaux_run(s, t, Run { order, modified, steps: Vec::new(), paths: Vec::new(), frames: Some(&mut frames) })?;
    Ok((out, frames))
}

fn switch_tableaux_run(s: &ShiftedTableau, t: &ShiftedTableau, mut run: Run) -> Result<Switched> {
    let modified = run.modified;
    let mode = if modified { Mode::Ssyt } else { Mode::Syt };
    let kind = if modified { "SSYT" } else { "SYT" };
    if !s.is_valid(mode) || !t.is_valid(mode) {
        return Err(Error::InvalidTableau(kind));
    }
    if !shape::extends_cells(&s.cell_set(), &t.cell_set()) {
        return Err(Error::NotExtending);
    }
    let mut board: Board = s.iter().map(|(c, l)| (c, (Family::A, l))).collect();
    board.extend(t.iter().map(|(c, l)| (c, (Family::B, l))));
    let all: BTreeSet<Cell> = board.keys().copied().collect();
    for comp in shape::components(&all) {
        switch_component(&mut board, &comp, &mut run)?;
    }
    let part = |fam: Family| -> Filling { board.iter().filter(|(_, (f, _))| *f == fam).map(|(&c, &(_, l))| (c, l)).collect() };
    let (inner, outer) = stack(s.shape().inner(), part(Family::B), part(Family::A))?;
    if !inner.is_valid(mode) || !outer.is_valid(mode) {
        return Err(Error::Invariant(format!("switching produced a tableau that is not a {kind}")));
    }
    Ok(Switched { inner, outer, steps: run.steps, paths: run.paths })
}

/// Switches `S` past `T` (with `T` extending `S`), giving `(^S T, S_T)`.
pub fn switch_tableaux(s: &ShiftedTableau, t: &ShiftedTableau, order: Order) -> Result<Switched> {
    switch_tableaux_impl(s, t, order, false)
}

/// The involution `Σ(S, T) = (^S T, S_T)`.
pub fn sigma(s: &ShiftedTableau, t: &ShiftedTableau) -> Result<(ShiftedTableau, ShiftedTableau)> {
    let out = switch_tableaux(s, t, Order::Standard)?;
    Ok((out.inner, out.outer))
}
