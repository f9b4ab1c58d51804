use std::collections::HashSet;

use crate::coeff::enumerate::{enumerate_tableaux, Constraint};
use crate::error::{Error, Result};
use crate::lattice::{is_lattice, is_lrs_word};
use crate::modified::msigma;
use crate::partition::StrictPartition;
use crate::shape::SkewShiftedShape;
use crate::switching::sigma;
use crate::tableau::{Mode, ShiftedTableau};

fn skew(nu: &StrictPartition, lambda: &StrictPartition, mu: &StrictPartition) -> Option<SkewShiftedShape> {
    if !nu.contains(mu) || nu.size() != lambda.size() + mu.size() {
        return None;
    }
    SkewShiftedShape::new(nu.clone(), lambda.clone()).ok()
}

/// LRS tableaux of shape `ν/λ` and weight `μ`.
pub fn lrs_tableaux(nu: &StrictPartition, lambda: &StrictPartition, mu: &StrictPartition) -> Vec<ShiftedTableau> {
    let Some(shape) = skew(nu, lambda, mu) else {
        return Vec::new();
    };
    enumerate_tableaux(&shape, &Constraint::Weight(mu.parts().to_vec()), Mode::Syt)
        .into_iter()
        .filter(|t| is_lrs_word(&t.reading_word()))
        .collect()
}

pub fn f_coeff(nu: &StrictPartition, lambda: &StrictPartition, mu: &StrictPartition) -> usize {
    lrs_tableaux(nu, lambda, mu).len()
}

/// Semistandard tableaux of shape `ν/λ` and weight `μ` whose reading word is lattice.
pub fn modified_lrs_tableaux(nu: &StrictPartition, lambda: &StrictPartition, mu: &StrictPartition) -> Vec<ShiftedTableau> {
    let Some(shape) = skew(nu, lambda, mu) else {
        return Vec::new();
    };
    enumerate_tableaux(&shape, &Constraint::Weight(mu.parts().to_vec()), Mode::Ssyt)
        .into_iter()
        .filter(|t| is_lattice(&t.reading_word()).lattice)
        .collect()
}

pub fn g_coeff(nu: &StrictPartition, lambda: &StrictPartition, mu: &StrictPartition) -> usize {
    modified_lrs_tableaux(nu, lambda, mu).len()
}

fn bijection(
    nu: &StrictPartition,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    domain: Vec<ShiftedTableau>,
    codomain: Vec<ShiftedTableau>,
    switch: impl Fn(&ShiftedTableau, &ShiftedTableau) -> Result<(ShiftedTableau, ShiftedTableau)>,
) -> Result<Vec<(ShiftedTableau, ShiftedTableau)>> {
    let r_lambda = ShiftedTableau::r_tableau(lambda);
    let r_mu = ShiftedTableau::r_tableau(mu);
    let target: HashSet<&ShiftedTableau> = codomain.iter().collect();
    let mut seen = HashSet::new();
    let mut pairs = Vec::with_capacity(domain.len());
    for t in domain {
        let (inner, outer) = switch(&r_lambda, &t)?;
        if inner != r_mu {
            return Err(Error::Invariant(format!("switching R_{lambda} past an LR tableau of {nu}/{lambda} did not give R_{mu}")));
        }
        if !target.contains(&outer) {
            return Err(Error::Invariant(format!("image is not an LR tableau of {nu}/{mu} with weight {lambda}")));
        }
        if !seen.insert(outer.clone()) {
            return Err(Error::Invariant("map is not injective".into()));
        }
        pairs.push((t, outer));
    }
    if pairs.len() != codomain.len() {
        return Err(Error::Invariant(format!("{} tableaux map into a set of {}", pairs.len(), codomain.len())));
    }
    Ok(pairs)
}

/// The bijection `T ↦ (R_λ)_T` from LRS tableaux of `ν/λ`, weight `μ`,
/// onto those of `ν/μ`, weight `λ`.
pub fn rho_bijection(nu: &StrictPartition, lambda: &StrictPartition, mu: &StrictPartition) -> Result<Vec<(ShiftedTableau, ShiftedTableau)>> {
    bijection(nu, lambda, mu, lrs_tableaux(nu, lambda, mu), lrs_tableaux(nu, mu, lambda), sigma)
}

/// Same as [`rho_bijection`] for the modified LRS sets, through the modified switching.
pub fn modified_rho_bijection(nu: &StrictPartition, lambda: &StrictPartition, mu: &StrictPartition) -> Result<Vec<(ShiftedTableau, ShiftedTableau)>> {
    bijection(nu, lambda, mu, modified_lrs_tableaux(nu, lambda, mu), modified_lrs_tableaux(nu, mu, lambda), msigma)
}
