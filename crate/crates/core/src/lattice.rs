//! Hat words and the lattice property of words.

use crate::letter::Letter;
use crate::word::Word;

/// Reverse `w`, then send `k` to `(k+1)'` and `k'` to `k`.
pub fn hat_word(w: &Word) -> Word {
    Word(
        w.iter()
            .rev()
            .map(|l| if l.is_primed() { l.unprime() } else { Letter::primed(l.value() + 1) })
            .collect(),
    )
}

pub fn unprime_word(w: &Word) -> Word {
    Word(w.iter().map(|l| l.unprime()).collect())
}

/// The doubled word `w ŵ` and the counts `m_i(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeStats {
    pub doubled: Word,
    /// `m[i][j]`: number of unprimed `i` among the first `j` letters; row 0 is all zeros.
    pub m: Vec<Vec<usize>>,
}

impl LatticeStats {
    pub fn new(w: &Word) -> LatticeStats {
        let mut doubled = w.0.clone();
        doubled.extend(hat_word(w).0);
        let top = doubled.iter().map(|l| l.value() as usize).max().unwrap_or(0) + 1;
        let mut m = vec![vec![0usize; doubled.len() + 1]; top + 1];
        for (j, l) in doubled.iter().enumerate() {
            for (i, row) in m.iter_mut().enumerate() {
                let hit = !l.is_primed() && l.value() as usize == i;
                row[j + 1] = row[j] + usize::from(hit);
            }
        }
        LatticeStats { doubled: Word(doubled), m }
    }

    pub fn m(&self, i: usize, j: usize) -> usize {
        self.m.get(i).map_or(0, |row| row[j])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeCheck {
    pub lattice: bool,
    /// Smallest `(j, i)` with `m_i(j) = m_{i-1}(j)` and `a_{j+1} ∈ {i, i'}`.
    pub violation: Option<(usize, usize)>,
}

/// Whenever `m_i(j) = m_{i-1}(j)` for some `i ≥ 2`, the letter `a_{j+1}` is neither `i` nor `i'`.
///
/// Letters of value 1 are never constrained: there is no `m_0`.
pub fn is_lattice(w: &Word) -> LatticeCheck {
    if w.iter().any(|l| l.value() <= 0) {
        return LatticeCheck { lattice: false, violation: None };
    }
    let stats = LatticeStats::new(w);
    for (j, l) in stats.doubled.iter().enumerate() {
        let i = l.value() as usize;
        if i >= 2 && stats.m(i, j) == stats.m(i - 1, j) {
            return LatticeCheck { lattice: false, violation: Some((j, i)) };
        }
    }
    LatticeCheck { lattice: true, violation: None }
}

/// Lattice, and the rightmost occurrence of each value is unprimed.
pub fn is_lrs_word(w: &Word) -> bool {
    is_lattice(w).lattice && rightmost_unprimed(w)
}

pub fn rightmost_unprimed(w: &Word) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for l in w.iter().rev() {
        if seen.insert(l.value()) && l.is_primed() {
            return false;
        }
    }
    true
}
