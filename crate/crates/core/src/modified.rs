//! The modified switching, which keeps primes off the main diagonal.

use crate::error::{Error, Result};
use crate::shape::Cell;
use crate::switching::{self, Order, Switched};
use crate::tableau::ShiftedTableau;

/// Toggles the prime of the south-westernmost box (largest row, then smallest column).
pub fn omega(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    let (&cell, &letter) = t
        .entries()
        .iter()
        .min_by_key(|(c, _)| (std::cmp::Reverse(c.row), c.col))
        .ok_or_else(|| Error::Precondition("omega of an empty tableau".into()))?;
    let endpoint = cell.west().is_none_or(|w| t.get(w).is_none()) && t.get(cell.south()).is_none();
    if !endpoint {
        return Err(Error::Invariant(format!("south-westernmost box {cell} is not a strip end")));
    }
    let mut entries = t.entries().clone();
    entries.insert(cell, letter.toggle_prime());
    ShiftedTableau::new(t.shape().clone(), entries)
}

#[allow(non_snake_case)]
pub fn Omega(a: &ShiftedTableau, b: &ShiftedTableau) -> Result<(ShiftedTableau, ShiftedTableau)> {
    Ok((omega(a)?, omega(b)?))
}

/// Modified switching of a single-value pair; at most one modified switch fires.
pub fn mswitch_pair(a: &ShiftedTableau, b: &ShiftedTableau) -> Result<Switched> {
    switching::switch_pair_impl(a, b, true)
}

/// Modified switching of semistandard `S`, `T` with `T` extending `S`.
pub fn mswitch_tableaux(s: &ShiftedTableau, t: &ShiftedTableau, order: Order) -> Result<Switched> {
    switching::switch_tableaux_impl(s, t, order, true)
}

/// The modified involution `Σ̃(S, T)`.
pub fn msigma(s: &ShiftedTableau, t: &ShiftedTableau) -> Result<(ShiftedTableau, ShiftedTableau)> {
    let out = mswitch_tableaux(s, t, Order::Standard)?;
    Ok((out.inner, out.outer))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OmegaReport {
    /// Whether the plain and modified switchings disagree on this pair.
    pub differs: bool,
    pub failures: Vec<String>,
}

impl OmegaReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// When `Σ(A,B) ≠ Σ̃(A,B)`, checks `Σ̃(A,B) = Σ(Ω(A,B))` and `Ω(Σ̃(A,B)) = Σ(A,B)`.
pub fn check_omega_relations(a: &ShiftedTableau, b: &ShiftedTableau) -> Result<OmegaReport> {
    let plain = switching::switch_pair(a, b)?;
    let modified = mswitch_pair(a, b)?;
    let plain = (plain.inner, plain.outer);
    let modified = (modified.inner, modified.outer);
    let mut report = OmegaReport { differs: plain != modified, failures: Vec::new() };
    if !report.differs {
        return Ok(report);
    }
    let (oa, ob) = Omega(a, b)?;
    let via_omega = switching::switch_pair(&oa, &ob)?;
    if (via_omega.inner, via_omega.outer) != modified {
        report.failures.push("modified switching differs from switching after Omega".into());
    }
    if Omega(&modified.0, &modified.1)? != plain {
        report.failures.push("Omega of the modified result differs from the plain result".into());
    }
    Ok(report)
}

/// The cell `omega` would toggle.
pub fn southwest_cell(t: &ShiftedTableau) -> Option<Cell> {
    t.entries().keys().min_by_key(|c| (std::cmp::Reverse(c.row), c.col)).copied()
}
