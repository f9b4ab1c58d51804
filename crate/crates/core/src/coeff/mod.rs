//! Tableau enumeration, Littlewood-Richardson coefficients and a
//! symmetric-polynomial oracle for them.

mod enumerate;
mod lrs;
mod poly;
mod schur;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::StrictPartition;

pub use enumerate::{enumerate_tableaux, random_tableau, Constraint};
pub use lrs::{f_coeff, g_coeff, lrs_tableaux, modified_lrs_tableaux, modified_rho_bijection, rho_bijection};
pub use poly::{partitions_with_max_len, MonomialExpansion, SymPolynomial};
pub use schur::{schur_poly, Kind, SchurCache};
pub use verify::{verify_identities, Identity, VerifyReport};

/// Coefficients in the basis of Schur `Q`-functions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QExpansion {
    pub coeffs: BTreeMap<StrictPartition, BigInt>,
}

impl QExpansion {
    pub fn coeff(&self, nu: &StrictPartition) -> BigInt {
        self.coeffs.get(nu).cloned().unwrap_or_default()
    }
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.coeffs.iter().rev().map(|(nu, c)| format!("{c}*Q{nu}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn leading_strict(alpha: &[usize], c: &BigInt) -> Result<(StrictPartition, BigInt)> {
    let nu = StrictPartition::new(alpha.to_vec()).map_err(|_| Error::NotInSpan(format!("leading exponent {alpha:?} is not strict")))?;
    let two_l = BigInt::one() << nu.len();
    if !(c % &two_l).is_zero() {
        return Err(Error::NotInSpan(format!("coefficient {c} of {nu} is not divisible by {two_l}")));
    }
    Ok((nu, c / two_l))
}

/// Writes a symmetric polynomial as a combination of `Q_ν` in the same
/// number of variables, peeling off the lexicographically leading term.
pub fn expand_in_q_basis(p: &SymPolynomial) -> Result<QExpansion> {
    let n = p.n_vars();
    let mut rest = p.clone();
    let mut out = QExpansion::default();
    while let Some((e, c)) = rest.leading() {
        let alpha: Vec<usize> = e.iter().filter(|&&k| k > 0).map(|&k| k as usize).collect();
        if e.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotInSpan(format!("polynomial is not symmetric at {e:?}")));
        }
        let (nu, k) = leading_strict(&alpha, c)?;
        let q = schur_poly(&crate::shape::SkewShiftedShape::normal(nu.clone()), n, Kind::Q);
        rest = &rest - &q.scale(&k);
        out.coeffs.insert(nu, k);
    }
    Ok(out)
}

/// Same peeling on the monomial-coefficient form, using cached `Q_ν`.
pub fn expand_monomial_in_q_basis(p: &MonomialExpansion, cache: &SchurCache) -> Result<QExpansion> {
    let n = p.n_vars();
    let mut rest = p.clone();
    let mut out = QExpansion::default();
    while let Some((alpha, c)) = rest.leading() {
        let (nu, k) = leading_strict(alpha, c)?;
        rest = rest.sub(&cache.q(&nu, n).scale(&k));
        out.coeffs.insert(nu, k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::SkewShiftedShape;

    fn p(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    fn q(s: &str, n: usize) -> SymPolynomial {
        schur_poly(&SkewShiftedShape::normal(p(s)), n, Kind::Q)
    }

    #[test]
    fn q1_squared() {
        let e = expand_in_q_basis(&(&q("1", 2) * &q("1", 2))).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(p("2"), BigInt::from(2))]));
        assert_eq!(g_coeff(&p("2"), &p("1"), &p("1")), 2);
        assert_eq!(f_coeff(&p("2"), &p("1"), &p("1")), 1);
    }

    #[test]
    fn q_expands_to_itself() {
        for nu in StrictPartition::all_of_size(5) {
            let e = expand_in_q_basis(&q(&nu.to_string(), 5)).unwrap();
            assert_eq!(e.coeffs, BTreeMap::from([(nu, BigInt::one())]));
        }
    }

    #[test]
    fn not_in_span() {
        let x = SymPolynomial::monomial(vec![1, 1], BigInt::one());
        assert!(matches!(expand_in_q_basis(&x), Err(Error::NotInSpan(_))));
        let e1 = &SymPolynomial::monomial(vec![1, 0], BigInt::one()) + &SymPolynomial::monomial(vec![0, 1], BigInt::one());
        assert!(matches!(expand_in_q_basis(&e1), Err(Error::NotInSpan(_))));
        assert!(expand_in_q_basis(&e1.scale(&BigInt::from(2))).is_ok());
    }

    #[test]
    fn worked_product() {
        let cache = SchurCache::new();
        let prod = cache.q(&p("4,2"), 14).mul(&cache.q(&p("4,3,1"), 14));
        let e = expand_monomial_in_q_basis(&prod, &cache).unwrap();
        assert_eq!(e.coeff(&p("6,5,2,1")), BigInt::from(8));
        for (nu, c) in &e.coeffs {
            assert_eq!(*c, BigInt::from(g_coeff(nu, &p("4,2"), &p("4,3,1"))), "{nu}");
        }
    }

    #[test]
    fn monomial_and_full_peeling_agree() {
        let cache = SchurCache::new();
        let full = &q("2,1", 5) * &q("2", 5);
        let a = expand_in_q_basis(&full).unwrap();
        let b = expand_monomial_in_q_basis(&MonomialExpansion::from_polynomial(&full).unwrap(), &cache).unwrap();
        assert_eq!(a, b);
    }
}
