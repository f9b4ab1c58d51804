use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::poly::{partitions_with_max_len, MonomialExpansion, SymPolynomial};
use crate::letter::Letter;
use crate::partition::StrictPartition;
use crate::shape::{self, SkewShiftedShape};
use crate::tableau::{Mode, ShiftedTableau};

/// `P` sums over semistandard tableaux, `Q` over all shifted tableaux.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    P,
    Q,
}

impl Kind {
    fn mode(self) -> Mode {
        match self {
            Kind::P => Mode::Ssyt,
            Kind::Q => Mode::Syt,
        }
    }
}

type StripKey = (StrictPartition, StrictPartition, Kind);
type ExpansionKey = (StrictPartition, StrictPartition, usize, Kind);

/// Memo tables shared by the oracle. Safe to share across threads.
#[derive(Default)]
pub struct SchurCache {
    strips: Mutex<HashMap<StripKey, u64>>,
    expansions: Mutex<HashMap<ExpansionKey, Arc<MonomialExpansion>>>,
}

impl SchurCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of ways to fill `outer/inner` with a single value `k`/`k'`.
    fn strip_count(&self, inner: &StrictPartition, outer: &StrictPartition, kind: Kind) -> u64 {
        let key = (inner.clone(), outer.clone(), kind);
        if let Some(&c) = self.strips.lock().expect("cache lock").get(&key) {
            return c;
        }
        let c = count_single_value_fillings(inner, outer, kind.mode());
        self.strips.lock().expect("cache lock").insert(key, c);
        c
    }

    /// Weight generating function of `shape` as coefficients of `x^α`, `α` a partition.
    pub fn expansion(&self, shape: &SkewShiftedShape, n: usize, kind: Kind) -> Arc<MonomialExpansion> {
        let key = (shape.outer().clone(), shape.inner().clone(), n, kind);
        if let Some(e) = self.expansions.lock().expect("cache lock").get(&key) {
            return Arc::clone(e);
        }
        let chain = Chain::new(self, shape, kind);
        let mut out = MonomialExpansion::zero(n);
        for alpha in partitions_with_max_len(shape.size(), n) {
            out.add_term(alpha.clone(), chain.count(&alpha));
        }
        let out = Arc::new(out);
        self.expansions.lock().expect("cache lock").insert(key, Arc::clone(&out));
        out
    }

    pub fn q(&self, nu: &StrictPartition, n: usize) -> Arc<MonomialExpansion> {
        self.expansion(&SkewShiftedShape::normal(nu.clone()), n, Kind::Q)
    }

    pub fn p(&self, nu: &StrictPartition, n: usize) -> Arc<MonomialExpansion> {
        self.expansion(&SkewShiftedShape::normal(nu.clone()), n, Kind::P)
    }
}

fn count_single_value_fillings(inner: &StrictPartition, outer: &StrictPartition, mode: Mode) -> u64 {
    let Ok(shape) = SkewShiftedShape::new(outer.clone(), inner.clone()) else {
        return 0;
    };
    let cells = shape.cells();
    if !shape::is_border_strip(&shape.cell_set()) {
        return 0;
    }
    let mut count = 0;
    for mask in 0u64..(1 << cells.len()) {
        let entries = cells.iter().enumerate().map(|(i, &c)| (c, Letter::new(1, mask >> i & 1 == 1))).collect();
        if ShiftedTableau::new(shape.clone(), entries).expect("cells match").is_valid(mode) {
            count += 1;
        }
    }
    count
}

/// Intermediate shapes between `inner` and `outer`, with the strip moves
/// from each one.
struct Chain {
    start: usize,
    end: usize,
    // (target, strip size, fillings)
    moves: Vec<Vec<(usize, usize, u64)>>,
}

impl Chain {
    fn new(cache: &SchurCache, shape: &SkewShiftedShape, kind: Kind) -> Chain {
        let states: Vec<StrictPartition> = shape.outer().subpartitions().into_iter().filter(|k| k.contains(shape.inner())).collect();
        let index: BTreeMap<&StrictPartition, usize> = states.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let moves = states
            .iter()
            .map(|a| {
                states
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| *b != a && b.contains(a))
                    .filter_map(|(j, b)| {
                        let c = cache.strip_count(a, b, kind);
                        (c > 0).then_some((j, b.size() - a.size(), c))
                    })
                    .collect()
            })
            .collect();
        Chain { start: index[shape.inner()], end: index[shape.outer()], moves }
    }

    /// Number of tableaux whose `k`-th layer has `alpha[k-1]` boxes.
    fn count(&self, alpha: &[usize]) -> BigInt {
        let mut cur: BTreeMap<usize, BigInt> = BTreeMap::from([(self.start, BigInt::one())]);
        for &a in alpha {
            let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&s, v) in &cur {
                for &(t, size, c) in &self.moves[s] {
                    if size == a {
                        *next.entry(t).or_default() += v * c;
                    }
                }
            }
            cur = next;
        }
        cur.remove(&self.end).unwrap_or_else(BigInt::zero)
    }

    fn polynomial(&self, n: usize) -> SymPolynomial {
        let mut cur: BTreeMap<usize, SymPolynomial> = BTreeMap::from([(self.start, SymPolynomial::one(n))]);
        for k in 0..n {
            let mut next: BTreeMap<usize, SymPolynomial> = BTreeMap::new();
            for (&s, poly) in &cur {
                let stay = next.entry(s).or_insert_with(|| SymPolynomial::zero(n));
                *stay = &*stay + poly;
                for &(t, size, c) in &self.moves[s] {
                    let mut e = vec![0u32; n];
                    e[k] = size as u32;
                    let step = &SymPolynomial::monomial(e, BigInt::from(c)) * poly;
                    let slot = next.entry(t).or_insert_with(|| SymPolynomial::zero(n));
                    *slot = &*slot + &step;
                }
            }
            cur = next;
        }
        cur.remove(&self.end).unwrap_or_else(|| SymPolynomial::zero(n))
    }
}

/// `P` or `Q` function of a skew shifted shape in `n` variables, as a full polynomial.
pub fn schur_poly(shape: &SkewShiftedShape, n: usize, kind: Kind) -> SymPolynomial {
    Chain::new(&SchurCache::new(), shape, kind).polynomial(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::enumerate::{enumerate_tableaux, Constraint};

    fn normal(s: &str) -> SkewShiftedShape {
        SkewShiftedShape::normal(s.parse().unwrap())
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_q_functions() {
        let q1 = schur_poly(&normal("1"), 2, Kind::Q);
        assert_eq!(q1.terms().len(), 2);
        assert_eq!(q1.coeff(&[1, 0]), big(2));
        assert_eq!(q1.coeff(&[0, 1]), big(2));
        let q2 = schur_poly(&normal("2"), 2, Kind::Q);
        assert_eq!(q2.coeff(&[2, 0]), big(2));
        assert_eq!(q2.coeff(&[1, 1]), big(4));
        assert_eq!(q2.coeff(&[0, 2]), big(2));
        assert_eq!(q2.terms().len(), 3);
    }

    #[test]
    fn q_is_power_of_two_times_p() {
        let s = normal("2,1");
        let q = schur_poly(&s, 3, Kind::Q);
        let p = schur_poly(&s, 3, Kind::P);
        assert_eq!(q, p.scale(&big(4)));
    }

    // Direct sum of x^T over enumerated tableaux.
    fn by_enumeration(shape: &SkewShiftedShape, n: usize, kind: Kind) -> SymPolynomial {
        let mut p = SymPolynomial::zero(n);
        for t in enumerate_tableaux(shape, &Constraint::MaxEntry(n), kind.mode()) {
            let mut e = vec![0u32; n];
            for (_, l) in t.iter() {
                e[l.value() as usize - 1] += 1;
            }
            p.add_term(e, BigInt::one());
        }
        p
    }

    #[test]
    fn agrees_with_enumeration() {
        let cache = SchurCache::new();
        for (o, i) in [("3,1", ""), ("4,2", "1"), ("4,3,1", "3"), ("5,2", "2"), ("3,2", "")] {
            let s = SkewShiftedShape::new(o.parse().unwrap(), i.parse().unwrap()).unwrap();
            for kind in [Kind::P, Kind::Q] {
                let full = schur_poly(&s, 3, kind);
                assert_eq!(full, by_enumeration(&s, 3, kind), "{s} {kind:?}");
                assert!(full.is_symmetric());
                let m = cache.expansion(&s, 3, kind);
                assert_eq!(*m, MonomialExpansion::from_polynomial(&full).unwrap());
            }
        }
    }
}
