use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::Cell;

/// The cells an a-box visits while a pair is switched.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SwitchPath {
    pub origin: Cell,
    /// Starts with `origin`.
    pub visited: Vec<Cell>,
    pub origin_primed: bool,
    pub end_primed: bool,
    /// The box took part in an S4 or S7 switch.
    pub diagonal_switch: bool,
    #[serde(skip)]
    pub(crate) first_step: Option<usize>,
    #[serde(skip)]
    pub(crate) passive: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PathType {
    /// `(i,j), …, (i,j+y)` with `y ≥ 0`.
    T1,
    /// `(i,j), …, (i+x,j)` with `x ≥ 1`.
    T2,
    /// `(i,j), (i,j+1), (i+1,j+1)`.
    T3,
}

impl SwitchPath {
    pub(crate) fn start(origin: Cell, primed: bool) -> Self {
        SwitchPath {
            origin,
            visited: vec![origin],
            origin_primed: primed,
            end_primed: primed,
            diagonal_switch: false,
            first_step: None,
            passive: false,
        }
    }

    pub fn end(&self) -> Cell {
        *self.visited.last().expect("paths are never empty")
    }

    pub fn path_type(&self) -> Option<PathType> {
        let v = &self.visited;
        let o = self.origin;
        if v.iter().enumerate().all(|(k, c)| *c == Cell::new(o.row, o.col + k)) {
            return Some(PathType::T1);
        }
        if v.iter().enumerate().all(|(k, c)| *c == Cell::new(o.row + k, o.col)) {
            return Some(PathType::T2);
        }
        if v.as_slice() == [o, o.east(), o.east().south()] {
            return Some(PathType::T3);
        }
        None
    }

    pub fn check_type(&self) -> Result<PathType> {
        self.path_type().ok_or_else(|| Error::BadPath {
            origin: self.origin,
            detail: self.visited.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
        })
    }

    fn moved(&self) -> bool {
        self.visited.len() > 1
    }
}

fn west_of(path: &SwitchPath, c: Cell) -> bool {
    path.visited.iter().all(|p| p.col < c.col)
}

fn north_of(path: &SwitchPath, c: Cell) -> bool {
    path.visited.iter().all(|p| p.row < c.row)
}

/// Checks consecutive moved paths against the rules for where a path may
/// lie relative to the end of the one before it.
pub fn check_succession(paths: &[SwitchPath]) -> Result<()> {
    let mut moved: Vec<&SwitchPath> = paths.iter().filter(|p| p.moved()).collect();
    moved.sort_by_key(|p| (p.first_step, p.passive));
    for w in moved.windows(2) {
        let (first, next) = (w[0], w[1]);
        let end = first.end();
        let ok = match (first.origin_primed, next.origin_primed) {
            (false, false) => match (first.end_primed, next.end_primed) {
                (false, false) => west_of(next, end),
                (false, true) if first.diagonal_switch && next.diagonal_switch => north_of(next, end),
                (false, true) if next.diagonal_switch => west_of(next, end),
                _ => true,
            },
            (false, true) => match (first.end_primed, next.end_primed) {
                (false, true) => west_of(next, end) || north_of(next, end),
                (true, true) => north_of(next, end),
                _ => true,
            },
            (true, true) => north_of(next, end),
            (true, false) => true,
        };
        if !ok {
            return Err(Error::BadPath {
                origin: next.origin,
                detail: format!("path does not follow the path ending at {end} correctly"),
            });
        }
    }
    Ok(())
}
