//! Shifted jeu de taquin and shifted Knuth equivalence.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::partition::StrictPartition;
use crate::shape::{Cell, SkewShiftedShape};
use crate::tableau::ShiftedTableau;
use crate::word::Word;

/// Where the hole went during one slide.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlideTrace {
    pub start_corner: Cell,
    /// Hole positions, starting with the corner and ending at the deleted cell.
    pub visited: Vec<Cell>,
    /// Whether the diagonal rule fired.
    pub special_used: bool,
}

/// One full slide into the inner corner `corner`.
pub fn shifted_slide(t: &ShiftedTableau, corner: Cell) -> Result<(ShiftedTableau, SlideTrace)> {
    if !t.shape().inner_corners().contains(&corner) {
        return Err(Error::NotInnerCorner { cell: corner });
    }
    let mut entries: BTreeMap<Cell, Letter> = t.entries().clone();
    let mut hole = corner;
    let mut trace = SlideTrace { start_corner: corner, visited: vec![corner], special_used: false };
    loop {
        let east = entries.get(&hole.east()).copied();
        let south = entries.get(&hole.south()).copied();
        if hole.on_diagonal() {
            if let Some(a) = east.filter(|a| a.is_primed()) {
                let diag = hole.diagonal_next();
                if let Some(b) = entries.get(&diag).copied().filter(|b| b.value() == a.value()) {
                    // {hole, a', a} -> {a, a, hole} and {hole, a', a'} -> {a', a, hole}
                    entries.insert(hole, b);
                    entries.insert(hole.east(), a.unprime());
                    entries.remove(&diag);
                    trace.visited.push(hole.east());
                    trace.visited.push(diag);
                    trace.special_used = true;
                    hole = diag;
                    continue;
                }
            }
        }
        let next = match (east, south) {
            (None, None) => break,
            (Some(_), None) => hole.east(),
            (None, Some(_)) => hole.south(),
            (Some(e), Some(s)) => {
                if e < s || (e == s && e.is_primed()) {
                    hole.east()
                } else {
                    hole.south()
                }
            }
        };
        let moved = entries.remove(&next).expect("neighbour present");
        entries.insert(hole, moved);
        hole = next;
        trace.visited.push(hole);
    }
    let mut outer: BTreeSet<Cell> = t.shape().outer().cells().into_iter().collect();
    outer.remove(&hole);
    let mut inner: BTreeSet<Cell> = t.shape().inner().cells().into_iter().collect();
    inner.remove(&corner);
    let outer = StrictPartition::from_cells(&outer).ok_or(Error::Invariant("slide broke the outer shape".into()))?;
    let inner = StrictPartition::from_cells(&inner).ok_or(Error::Invariant("slide broke the inner shape".into()))?;
    let out = ShiftedTableau::new(SkewShiftedShape::new(outer, inner)?, entries)?;
    Ok((out, trace))
}

/// Rectifies, letting `choose` pick the index of the next inner corner.
pub fn rectify_with(t: &ShiftedTableau, mut choose: impl FnMut(&[Cell]) -> usize) -> Result<(ShiftedTableau, Vec<SlideTrace>)> {
    let mut cur = t.clone();
    let mut traces = Vec::new();
    loop {
        let corners = cur.shape().inner_corners();
        if corners.is_empty() {
            return Ok((cur, traces));
        }
        let k = choose(&corners);
        let (next, trace) = shifted_slide(&cur, corners[k])?;
        traces.push(trace);
        cur = next;
    }
}

/// Rectification, always sliding at the row-major-last inner corner.
pub fn rectify(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    rectify_traced(t).map(|(r, _)| r)
}

pub fn rectify_traced(t: &ShiftedTableau) -> Result<(ShiftedTableau, Vec<SlideTrace>)> {
    rectify_with(t, |corners| corners.len() - 1)
}

/// Words reachable by one elementary shifted Knuth move.
pub fn knuth_neighbors(w: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let n = w.len();
    for p in 0..n.saturating_sub(2) {
        let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
        // xzy <-> zxy when x < y <= z
        if (a < c && c <= b) || (b < c && c <= a) {
            let mut v = w.0.clone();
            v.swap(p, p + 1);
            out.insert(Word(v));
        }
        // yxz <-> yzx when x <= y < z
        if (b <= a && a < c) || (c <= a && a < b) {
            let mut v = w.0.clone();
            v.swap(p + 1, p + 2);
            out.insert(Word(v));
        }
    }
    if n >= 2 {
        let (x, y) = (w[n - 2], w[n - 1]);
        if x.value() != y.value() {
            let mut v = w.0.clone();
            v.swap(n - 2, n - 1);
            out.insert(Word(v));
        }
        // xx <-> x'x with x unprimed
        if !y.is_primed() && x.value() == y.value() {
            let mut v = w.0.clone();
            v[n - 2] = x.toggle_prime();
            out.insert(Word(v));
        }
    }
    out.remove(w);
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Equivalence {
    Yes,
    No,
    /// The class of `u` has more than `budget` words.
    Inconclusive,
}

/// Bounded breadth-first search over shifted Knuth moves.
///
/// Words with repeated letters are standardized first: applied to primed
/// letters directly, the moves miss equivalences that jeu de taquin
/// realizes. Standardizing forgets which diagonal letters were primed, so
/// `1 1` and `1 1'` count as equivalent here.
pub fn knuth_equivalent(u: &Word, v: &Word, budget: usize) -> Equivalence {
    if u == v {
        return Equivalence::Yes;
    }
    if u.content() != v.content() {
        return Equivalence::No;
    }
    let (u, v) = (&u.standardize(), &v.standardize());
    if u == v {
        return Equivalence::Yes;
    }
    if budget == 0 {
        return Equivalence::Inconclusive;
    }
    let mut seen: HashSet<Word> = HashSet::from([u.clone()]);
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(w) = queue.pop_front() {
        for n in knuth_neighbors(&w) {
            if &n == v {
                return Equivalence::Yes;
            }
            if seen.insert(n.clone()) {
                if seen.len() > budget {
                    return Equivalence::Inconclusive;
                }
                queue.push_back(n);
            }
        }
    }
    Equivalence::No
}
