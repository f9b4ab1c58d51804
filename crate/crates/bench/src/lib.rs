//! Inputs shared by the benchmarks.

use rand::rngs::StdRng;
use rand::SeedableRng;
use tabkit::coeff::random_tableau;
use tabkit::{Mode, ShiftedTableau, SkewShiftedShape, StrictPartition};

fn part(s: &str) -> StrictPartition {
    s.parse().expect("strict partition")
}

/// Pairs `(S, T)` of tableaux, `S` on `λ` and `T` on `ν/λ`, drawn with a fixed seed.
pub fn switching_pairs(nu: &str, lambda: &str, max_entry: usize, count: usize) -> Vec<(ShiftedTableau, ShiftedTableau)> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let inner = SkewShiftedShape::normal(part(lambda));
    let outer = SkewShiftedShape::new(part(nu), part(lambda)).expect("λ ⊆ ν");
    (0..count)
        .map(|_| {
            let s = random_tableau(&inner, max_entry, Mode::Syt, &mut rng, 1000).expect("inner tableau");
            let t = random_tableau(&outer, max_entry, Mode::Syt, &mut rng, 1000).expect("outer tableau");
            (s, t)
        })
        .collect()
}

/// The worked triple `((6,5,2,1), (4,2), (4,3,1))`.
pub fn worked_triple() -> (StrictPartition, StrictPartition, StrictPartition) {
    (part("6,5,2,1"), part("4,2"), part("4,3,1"))
}
