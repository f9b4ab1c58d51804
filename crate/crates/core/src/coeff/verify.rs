use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::coeff::lrs::{f_coeff, g_coeff};
use crate::coeff::poly::MonomialExpansion;
use crate::coeff::schur::{Kind, SchurCache};
use crate::coeff::{expand_monomial_in_q_basis, QExpansion};
use crate::error::Error;
use crate::partition::StrictPartition;
use crate::shape::SkewShiftedShape;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Identity {
    /// `g = 2^(ℓ(λ)+ℓ(μ)-ℓ(ν)) f`, with a nonnegative exponent whenever `f > 0`.
    ProductF,
    /// `Q_λ Q_μ = Σ_ν g Q_ν`.
    ProductG,
    /// `Q_{ν/λ} = Σ_μ f Q_μ`.
    SkewQ,
    /// `P_{ν/λ} = Σ_μ g P_μ`.
    SkewP,
    /// `f` and `g` are symmetric in `λ, μ`.
    Symmetry,
}

impl Identity {
    pub const ALL: [Identity; 5] = [Identity::ProductF, Identity::ProductG, Identity::SkewQ, Identity::SkewP, Identity::Symmetry];

    pub fn name(self) -> &'static str {
        match self {
            Identity::ProductF => "product_f",
            Identity::ProductG => "product_g",
            Identity::SkewQ => "skew_q",
            Identity::SkewP => "skew_p",
            Identity::Symmetry => "symmetry",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Checked cases per identity.
    pub cases: BTreeMap<Identity, usize>,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_cases(&self) -> usize {
        self.cases.values().sum()
    }
}

fn strict_upto(n: usize) -> Vec<StrictPartition> {
    (0..=n).flat_map(StrictPartition::all_of_size).collect()
}

/// Pairs `(λ, μ)` with `|λ| + |μ| ≤ max`.
fn pairs(max: usize) -> Vec<(StrictPartition, StrictPartition)> {
    let all = strict_upto(max);
    let mut out = Vec::new();
    for l in &all {
        for m in &all {
            if l.size() + m.size() <= max {
                out.push((l.clone(), m.clone()));
            }
        }
    }
    out
}

/// Pairs `(ν, λ)` with `λ ⊆ ν` and `|ν| ≤ max`.
fn skew_pairs(max: usize) -> Vec<(StrictPartition, StrictPartition)> {
    strict_upto(max).into_iter().flat_map(|nu| nu.subpartitions().into_iter().map(move |l| (nu.clone(), l))).collect()
}

fn ell_exp(nu: &StrictPartition, l: &StrictPartition, m: &StrictPartition) -> i64 {
    l.len() as i64 + m.len() as i64 - nu.len() as i64
}

fn check_product_g(l: &StrictPartition, m: &StrictPartition, cache: &SchurCache) -> Option<String> {
    let n = l.size() + m.size();
    let prod = cache.q(l, n).mul(&cache.q(m, n));
    let oracle = match expand_monomial_in_q_basis(&prod, cache) {
        Ok(e) => e,
        Err(e) => return Some(format!("product_g Q{l}*Q{m}: {e}")),
    };
    let mut counted = QExpansion::default();
    for nu in StrictPartition::all_of_size(n) {
        let g = g_coeff(&nu, l, m);
        if g > 0 {
            counted.coeffs.insert(nu, BigInt::from(g));
        }
    }
    (oracle != counted).then(|| format!("product_g Q{l}*Q{m}: oracle {oracle}, counted {counted}"))
}

fn check_product_f(l: &StrictPartition, m: &StrictPartition) -> Vec<String> {
    let n = l.size() + m.size();
    let mut out = Vec::new();
    for nu in StrictPartition::all_of_size(n) {
        let f = f_coeff(&nu, l, m);
        let g = g_coeff(&nu, l, m);
        let e = ell_exp(&nu, l, m);
        let ok = if e < 0 { f == 0 && g == 0 } else { (f << e) == g };
        if !ok {
            out.push(format!("product_f at ({nu},{l},{m}): f={f} g={g} exponent {e}"));
        }
    }
    out
}

fn check_symmetry(l: &StrictPartition, m: &StrictPartition) -> Vec<String> {
    let n = l.size() + m.size();
    let mut out = Vec::new();
    for nu in StrictPartition::all_of_size(n) {
        let (f1, f2) = (f_coeff(&nu, l, m), f_coeff(&nu, m, l));
        let (g1, g2) = (g_coeff(&nu, l, m), g_coeff(&nu, m, l));
        if f1 != f2 || g1 != g2 {
            out.push(format!("symmetry at ({nu},{l},{m}): f {f1}/{f2}, g {g1}/{g2}"));
        }
    }
    out
}

fn check_skew(nu: &StrictPartition, l: &StrictPartition, kind: Kind, cache: &SchurCache) -> Option<String> {
    let n = nu.size();
    let shape = SkewShiftedShape::new(nu.clone(), l.clone()).expect("λ ⊆ ν");
    let lhs = cache.expansion(&shape, n, kind);
    let mut rhs = MonomialExpansion::zero(n);
    for mu in StrictPartition::all_of_size(n - l.size()) {
        let (c, basis) = match kind {
            Kind::Q => (f_coeff(nu, l, &mu), cache.q(&mu, n)),
            Kind::P => (g_coeff(nu, l, &mu), cache.p(&mu, n)),
        };
        if c > 0 {
            rhs = rhs.add(&basis.scale(&BigInt::from(c)));
        }
    }
    (*lhs != rhs).then(|| format!("skew {kind:?} at {nu}/{l}: expansions differ"))
}

enum Case {
    Pair(Identity, StrictPartition, StrictPartition),
    Skew(Identity, StrictPartition, StrictPartition),
}

/// Checks the chosen identities for every strict triple with `|ν| ≤ max_size`,
/// in `|ν|` variables. Runs on the current rayon pool.
pub fn verify_identities(max_size: usize, which: &[Identity]) -> VerifyReport {
    let mut cases = Vec::new();
    for &id in which {
        match id {
            Identity::ProductF | Identity::ProductG | Identity::Symmetry => {
                cases.extend(pairs(max_size).into_iter().map(|(l, m)| Case::Pair(id, l, m)));
            }
            Identity::SkewQ | Identity::SkewP => {
                cases.extend(skew_pairs(max_size).into_iter().map(|(nu, l)| Case::Skew(id, nu, l)));
            }
        }
    }
    let cache = SchurCache::new();
    let results: Vec<(Identity, Vec<String>)> = cases
        .par_iter()
        .map(|case| match case {
            Case::Pair(id, l, m) => {
                let fails = match id {
                    Identity::ProductG => check_product_g(l, m, &cache).into_iter().collect(),
                    Identity::ProductF => check_product_f(l, m),
                    _ => check_symmetry(l, m),
                };
                (*id, fails)
            }
            Case::Skew(id, nu, l) => {
                let kind = if *id == Identity::SkewQ { Kind::Q } else { Kind::P };
                (*id, check_skew(nu, l, kind, &cache).into_iter().collect())
            }
        })
        .collect();
    let mut report = VerifyReport::default();
    for (id, fails) in results {
        *report.cases.entry(id).or_default() += 1;
        report.failures.extend(fails);
    }
    report
}
