//! Structural identities every catalog entry must satisfy, reported as a
//! list of violations rather than a panic so the CLI can print them.

use super::{image_j_k, kernel_i_k, sym_tangent, DomainSpec};
use crate::error::Result;
use crate::repchar::{weyl_dimension, Decomposition};

fn multichoose(n: u128, k: u128) -> u128 {
    // C(n + k − 1, k)
    (0..k).fold(1u128, |acc, i| acc * (n + i) / (i + 1))
}

/// Checks for degree `k`:
///
/// * exactness `S^k(T) = J_k ⊕ I_k`, with `dim S^k(T) = C(N+k−1, k)`;
/// * every summand of `S^k(T)` carries charge `2k`;
/// * `J_k` is irreducible for `1 ≤ k ≤ rank` and empty past the rank;
/// * at `k = 1`: `I_1` is empty and `J_1 = T`;
/// * the top Hodge level is one-dimensional and the level dimensions add up
///   to the dimension of the ambient representation.
pub fn structural_invariants(spec: &DomainSpec, k: usize) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let sym = sym_tangent(spec, k)?;
    let j = image_j_k(spec, k)?;
    let i = kernel_i_k(spec, k)?;
    if j.sum(&i) != sym {
        bad.push(format!("J_{k} ⊕ I_{k} = {} ≠ S^{k}(T) = {sym}", j.sum(&i)));
    }
    let dim = sym.dimension(&spec.ambient)?;
    let expected = multichoose(spec.dimension, k as u128);
    if dim != expected {
        bad.push(format!("dim S^{k}(T) = {dim}, expected {expected}"));
    }
    if let Some(l) = sym.labels().find(|l| l.charge() != 2 * k as i64) {
        bad.push(format!("summand {l} of S^{k}(T) has charge ≠ {}", 2 * k));
    }
    match (k, k <= spec.rank) {
        (0, _) => {}
        (_, true) if j.total_multiplicity() != 1 => bad.push(format!("J_{k} = {j} is not irreducible")),
        (_, false) if !j.is_empty() => bad.push(format!("J_{k} = {j} should vanish past rank {}", spec.rank)),
        _ => {}
    }
    if k == 1 {
        if !i.is_empty() {
            bad.push(format!("I_1 = {i} is not empty"));
        }
        if j != Decomposition::singleton(spec.tangent.clone()) {
            bad.push(format!("J_1 = {j} differs from T = {}", spec.tangent));
        }
    }
    let levels = spec.hodge.levels();
    let top = weyl_dimension(&spec.ambient, &levels[0])?;
    if top != 1 {
        bad.push(format!("top Hodge level {} has dimension {top}", levels[0]));
    }
    let total: u128 = levels.iter().map(|l| weyl_dimension(&spec.ambient, l)).sum::<Result<u128>>()?;
    let rep = weyl_dimension(&spec.group, &spec.representation)?;
    if total != rep {
        bad.push(format!("Hodge levels add up to {total}, representation has dimension {rep}"));
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pvhs::{catalog, family_range, generating_check, DomainFamily, DomainParams};
    use proptest::prelude::*;

    #[test]
    fn catalog_satisfies_invariants() {
        for (family, max_n) in [(DomainFamily::I, 3), (DomainFamily::II, 5), (DomainFamily::III, 3), (DomainFamily::IV, 6)] {
            for params in family_range(family, max_n) {
                let spec = catalog(family, params).unwrap();
                for k in 0..=spec.rank + 1 {
                    let bad = structural_invariants(&spec, k).unwrap();
                    assert!(bad.is_empty(), "{} k={k}: {bad:?}", spec.name());
                }
            }
        }
    }

    #[test]
    fn multichoose_small() {
        assert_eq!(multichoose(4, 2), 10);
        assert_eq!(multichoose(27, 0), 1);
        assert_eq!(multichoose(1, 5), 1);
    }

    fn arb_domain() -> impl Strategy<Value = (DomainFamily, DomainParams)> {
        prop_oneof![
            (1usize..=4, 1usize..=4).prop_map(|(p, q)| (DomainFamily::I, DomainParams::PQ { p, q })),
            (3usize..=6).prop_map(|n| (DomainFamily::II, DomainParams::N(n))),
            (2usize..=4).prop_map(|n| (DomainFamily::III, DomainParams::N(n))),
            (3usize..=8).prop_map(|n| (DomainFamily::IV, DomainParams::N(n))),
            Just((DomainFamily::V, DomainParams::None)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn random_domains_are_exact_and_generated((family, params) in arb_domain(), extra in 0usize..=1) {
            let spec = catalog(family, params).unwrap();
            let k = (spec.rank + extra).max(2);
            prop_assert!(structural_invariants(&spec, k).unwrap().is_empty());
            prop_assert!(generating_check(&spec, k).unwrap().contained);
        }
    }
}
