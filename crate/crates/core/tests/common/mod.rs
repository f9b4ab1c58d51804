#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use tabkit::coeff::{enumerate_tableaux, random_tableau, Constraint};
use tabkit::switching::SwitchKind;
use tabkit::{Cell, Letter, Mode, ShiftedTableau, SkewShiftedShape, StrictPartition, Word};

pub fn tab(t: &[(usize, usize, &str)]) -> ShiftedTableau {
    ShiftedTableau::from_triples(t).unwrap()
}

pub fn part(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

pub fn skew(outer: &str, inner: &str) -> SkewShiftedShape {
    SkewShiftedShape::new(part(outer), part(inner)).unwrap()
}

/// Fills `outer/inner` from a reading word (rows from the top, each right to left).
pub fn from_word(outer: &str, inner: &str, word: &str) -> ShiftedTableau {
    let shape = skew(outer, inner);
    let w: Word = word.parse().unwrap();
    let mut cells = shape.cells();
    cells.sort_by_key(|c| (c.row, std::cmp::Reverse(c.col)));
    assert_eq!(cells.len(), w.len(), "word length");
    let entries = cells.into_iter().zip(w.iter().copied()).collect();
    ShiftedTableau::new(shape, entries).unwrap()
}

// Perforated pair over (6,3,2)/(2).
pub fn pair_a() -> ShiftedTableau {
    tab(&[(1, 3, "1'"), (1, 4, "1"), (2, 2, "1"), (2, 3, "1")])
}
pub fn pair_b() -> ShiftedTableau {
    tab(&[(1, 5, "1'"), (1, 6, "1"), (2, 4, "1'"), (3, 3, "1'"), (3, 4, "1")])
}
pub fn pair_inner() -> ShiftedTableau {
    tab(&[(1, 3, "1'"), (1, 4, "1"), (1, 5, "1"), (2, 2, "1'"), (2, 3, "1")])
}
pub fn pair_outer() -> ShiftedTableau {
    tab(&[(1, 6, "1"), (2, 4, "1'"), (3, 3, "1"), (3, 4, "1")])
}
pub fn pair_kinds() -> Vec<SwitchKind> {
    use SwitchKind::*;
    vec![S5, S1, S5, S2, S3, S5, S6]
}

// Pair of tableaux for switching.
pub fn stack_s() -> ShiftedTableau {
    tab(&[(1, 3, "1'"), (1, 4, "1"), (2, 2, "1"), (2, 3, "1"), (2, 4, "2'"), (3, 3, "2")])
}
pub fn stack_t() -> ShiftedTableau {
    tab(&[(1, 5, "1'"), (1, 6, "1"), (2, 5, "1'"), (3, 4, "1'"), (3, 5, "1"), (4, 4, "2"), (4, 5, "2")])
}
pub fn stack_inner() -> ShiftedTableau {
    tab(&[(1, 3, "1'"), (1, 4, "1"), (1, 5, "1"), (2, 2, "1'"), (2, 3, "1"), (2, 4, "2"), (3, 3, "2")])
}
pub fn stack_outer() -> ShiftedTableau {
    tab(&[(1, 6, "1"), (2, 5, "1'"), (3, 4, "1'"), (3, 5, "2'"), (4, 4, "1"), (4, 5, "2")])
}
pub fn stack_modified_inner() -> ShiftedTableau {
    tab(&[(1, 3, "1'"), (1, 4, "1"), (1, 5, "1"), (2, 2, "1"), (2, 3, "1"), (2, 4, "2"), (3, 3, "2")])
}
pub fn stack_modified_outer() -> ShiftedTableau {
    tab(&[(1, 6, "1"), (2, 5, "1'"), (3, 4, "1'"), (3, 5, "2'"), (4, 4, "1"), (4, 5, "2'")])
}

// Jeu de taquin example and its rectification.
pub fn jdt_example() -> ShiftedTableau {
    tab(&[(1, 3, "1'"), (1, 4, "2'"), (2, 3, "2'"), (2, 4, "3"), (3, 3, "2'")])
}
pub fn jdt_rect() -> ShiftedTableau {
    tab(&[(1, 1, "1'"), (1, 2, "2'"), (1, 3, "2"), (1, 4, "3"), (2, 2, "2'")])
}

/// The LR triple `ν = (6,5,2,1)`, `λ = (4,2)`, `μ = (4,3,1)`.
pub fn lr_triple() -> (StrictPartition, StrictPartition, StrictPartition) {
    (part("6,5,2,1"), part("4,2"), part("4,3,1"))
}

pub const LRS_WORDS: [&str; 4] = ["1 1' 2' 1 1 2 2 3", "1 1 2 2 1 2 1 3", "1 1 2 2' 1 2 1 3", "1 1 2 2' 1' 2 1 3"];

pub const MODIFIED_LRS_WORDS: [&str; 8] = [
    "1 1' 2' 1 1 2 2 3",
    "1 1 2 2 1 2 1 3",
    "1 1 2 2' 1 2 1 3",
    "1 1 2 2' 1' 2 1 3",
    "1 1' 2' 1 1' 2 2 3",
    "1 1 2 2 1 2' 1 3",
    "1 1 2 2' 1 2' 1 3",
    "1 1 2 2' 1' 2' 1 3",
];

pub fn lr_tableaux(words: &[&str]) -> Vec<ShiftedTableau> {
    words.iter().map(|w| from_word("6,5,2,1", "4,2", w)).collect()
}

/// All strict partitions of size at most `n`.
pub fn strict_upto(n: usize) -> Vec<StrictPartition> {
    (0..=n).flat_map(StrictPartition::all_of_size).collect()
}

/// Every triple `ρ ⊆ λ ⊆ ν` with `|ν| ≤ max_outer` and `|ν/ρ| ≤ max_cells`.
pub fn nested_triples(max_outer: usize, max_cells: usize) -> Vec<(StrictPartition, StrictPartition, StrictPartition)> {
    let mut out = Vec::new();
    for nu in strict_upto(max_outer) {
        for lambda in nu.subpartitions() {
            for rho in lambda.subpartitions() {
                if nu.size() - rho.size() <= max_cells {
                    out.push((rho, lambda.clone(), nu.clone()));
                }
            }
        }
    }
    out
}

pub fn all_tableaux(inner: &StrictPartition, outer: &StrictPartition, max: usize, mode: Mode) -> Vec<ShiftedTableau> {
    let shape = SkewShiftedShape::new(outer.clone(), inner.clone()).unwrap();
    enumerate_tableaux(&shape, &Constraint::MaxEntry(max), mode)
}

/// A random strict partition with `size` boxes.
pub fn random_strict(rng: &mut StdRng, size: usize) -> StrictPartition {
    let all = StrictPartition::all_of_size(size);
    all[rng.gen_range(0..all.len())].clone()
}

/// A random pair `(S, T)`: `S` on `λ/ρ`, `T` on `ν/λ`, redrawing shapes
/// that admit no tableau with letters up to `max_entry`.
pub fn random_pair(rng: &mut StdRng, outer_size: std::ops::RangeInclusive<usize>, max_entry: usize, mode: Mode) -> (ShiftedTableau, ShiftedTableau) {
    loop {
        let n = rng.gen_range(outer_size.clone());
        let nu = random_strict(rng, n);
        let subs = nu.subpartitions();
        let lambda = subs[rng.gen_range(0..subs.len())].clone();
        let subs = lambda.subpartitions();
        let rho = subs[rng.gen_range(0..subs.len())].clone();
        let s_shape = SkewShiftedShape::new(lambda.clone(), rho).unwrap();
        let t_shape = SkewShiftedShape::new(nu, lambda).unwrap();
        let s = random_tableau(&s_shape, max_entry, mode, rng, 100_000);
        let t = random_tableau(&t_shape, max_entry, mode, rng, 100_000);
        if let (Some(s), Some(t)) = (s, t) {
            return (s, t);
        }
    }
}

pub fn letter(s: &str) -> Letter {
    s.parse().unwrap()
}

pub fn cell(r: usize, c: usize) -> Cell {
    Cell::new(r, c)
}
