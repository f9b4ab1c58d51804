//! The star map, the J-operation and generalized evacuation.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::jdt::rectify;
use crate::letter::Letter;
use crate::partition::StrictPartition;
use crate::shape::{Cell, SkewShiftedShape};
use crate::switching::{switch_tableaux, Order};
use crate::tableau::ShiftedTableau;

/// Cells of the staircase of size `n` outside `p`, reflected by `(i,j) -> (n-j+1, n-i+1)`.
fn reflected_complement(p: &StrictPartition, n: usize) -> Result<StrictPartition> {
    let cells: BTreeSet<Cell> = (1..=n)
        .flat_map(|i| (i..=n).map(move |j| Cell::new(i, j)))
        .filter(|&c| !p.contains_cell(c))
        .map(|c| Cell::new(n - c.col + 1, n - c.row + 1))
        .collect();
    StrictPartition::from_cells(&cells).ok_or(Error::Invariant("reflected staircase complement is not a shape".into()))
}

/// Reflects `T` in the anti-diagonal of the staircase of size `λ₁` and stars every letter.
pub fn star(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    let n = t.shape().outer().part(1);
    let outer = reflected_complement(t.shape().inner(), n)?;
    let inner = reflected_complement(t.shape().outer(), n)?;
    let entries = t.iter().map(|(c, l)| (Cell::new(n - c.col + 1, n - c.row + 1), l.star())).collect();
    ShiftedTableau::new(SkewShiftedShape::new(outer, inner)?, entries)
}

/// `T^J = Rect(T*)`.
pub fn j_operation(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    rectify(&star(t)?)
}

/// Generalized evacuation `S^E` of a normal-shape tableau with positive letters.
pub fn evacuate(s: &ShiftedTableau) -> Result<ShiftedTableau> {
    if !s.shape().is_normal() {
        return Err(Error::Precondition("evacuation needs a tableau of normal shape".into()));
    }
    if !s.has_positive_letters() {
        return Err(Error::UnsupportedAlphabet);
    }
    if !s.is_syt() {
        return Err(Error::InvalidTableau("SYT"));
    }
    let mut rest = s.clone();
    let mut done: BTreeMap<Cell, Letter> = BTreeMap::new();
    while let Some(a) = rest.min_value() {
        let corner = Cell::new(1, 1);
        let mut layer = BTreeMap::new();
        let mut remainder = BTreeMap::new();
        for (c, l) in rest.iter() {
            if l.value() != a {
                remainder.insert(c, l);
            } else if c == corner {
                layer.insert(c, if l.is_primed() { Letter::plain(-a) } else { Letter::primed(-a) });
            } else {
                layer.insert(c, Letter::plain(-a));
            }
        }
        let layer = ShiftedTableau::over(StrictPartition::empty(), layer)?;
        if remainder.is_empty() {
            done.extend(layer.into_entries());
            break;
        }
        let remainder = ShiftedTableau::over(layer.shape().outer().clone(), remainder)?;
        let switched = switch_tableaux(&layer, &remainder, Order::Standard)?;
        done.extend(switched.outer.into_entries());
        rest = switched.inner;
    }
    ShiftedTableau::new(s.shape().clone(), done)
}

/// Both sides of `(S^J ∪ T)^J = T^J ∪ S_T`, and of the commuting square.
#[derive(Clone, Debug)]
pub struct JSwitchReport {
    pub lhs: ShiftedTableau,
    pub rhs: ShiftedTableau,
    /// `(^S T)^J ∪ S_T`, the route through switching first.
    pub diagram: ShiftedTableau,
}

impl JSwitchReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.lhs.shape().outer() == self.rhs.shape().outer()
    }

    pub fn diagram_commutes(&self) -> bool {
        self.lhs == self.diagram
    }
}

/// `S` of normal shape `λ`, `T` on `ν/λ`.
pub fn check_thm_jswitch(s: &ShiftedTableau, t: &ShiftedTableau) -> Result<JSwitchReport> {
    if !s.shape().is_normal() {
        return Err(Error::Precondition("S must have normal shape".into()));
    }
    let lhs = j_operation(&j_operation(s)?.union(t)?)?;
    let switched = switch_tableaux(s, t, Order::Standard)?;
    let rhs = j_operation(t)?.union(&switched.outer)?;
    let diagram = j_operation(&switched.inner)?.union(&switched.outer)?;
    Ok(JSwitchReport { lhs, rhs, diagram })
}
