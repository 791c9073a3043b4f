//! `|β(H_ψ)| ≤ 1` for every weight `β` of the fundamental representation
//! attached to the special node and every root `ψ` of the strongly
//! orthogonal cascade: each `sl₂`-string along `ψ` has length at most 2.

use num_traits::Signed;

use super::DomainSpec;
use crate::error::{Error, Result};
use crate::repchar::{weyl_dimension, Characters};
use crate::rootsys::Root;
use crate::SmallRational;

/// Largest representation the bound is evaluated on.
pub const REPRESENTATION_GUARD: u128 = 10_000;

#[derive(Clone, Debug)]
pub struct BoundReport {
    /// `max |β(H_ψ)|` over all weights and all cascade roots.
    pub value: SmallRational,
    /// The same maximum for each cascade root separately, highest root first.
    pub per_root: Vec<(Root, SmallRational)>,
    pub representation_dimension: u128,
    pub distinct_weights: usize,
}

pub fn verify_weight_bound(spec: &DomainSpec) -> Result<BoundReport> {
    let group = &spec.group;
    let dim = weyl_dimension(group, &spec.representation)?;
    if dim > REPRESENTATION_GUARD {
        return Err(Error::GuardExceeded(format!(
            "{}: representation {} has dimension {dim} > {REPRESENTATION_GUARD}",
            spec.name(),
            spec.representation
        )));
    }
    let weights = Characters::new(group).weight_system(&spec.representation)?;
    let cascade = group.strongly_orthogonal_cascade(spec.special_node)?;
    if cascade.len() != spec.rank {
        return Err(Error::Inconsistent(format!(
            "{}: cascade has {} roots, rank is {}",
            spec.name(),
            cascade.len(),
            spec.rank
        )));
    }
    let mut per_root = Vec::with_capacity(cascade.len());
    for psi in cascade {
        let mut best = SmallRational::from_integer(0);
        for (beta, _) in weights.iter() {
            let v = group.coroot_pairing(beta, &psi)?.abs();
            if v > best {
                best = v;
            }
        }
        per_root.push((psi, best));
    }
    let value = per_root.iter().map(|(_, v)| *v).max().unwrap_or_else(|| SmallRational::from_integer(0));
    Ok(BoundReport { value, per_root, representation_dimension: dim, distinct_weights: weights.len() })
}
