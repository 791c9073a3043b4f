//! Irreducible bounded symmetric domains, their canonical Calabi–Yau type
//! variations of Hodge structure, and the graded ideal `I = ⊕ I_k` cut out
//! by the iterated Higgs field `θ^k: S^k(T) → Hom(E^{n,0}, E^{n−k,k})`.
//!
//! Representations of the isotropy algebra `K` are labelled over its
//! semisimple part, with the centre recorded as an integer charge
//! normalised so that the tangent space has charge 2.

mod bound;
mod golden;
mod ideal;
mod invariants;
pub mod lemmas;
mod strata;

use std::fmt;
use std::str::FromStr;

pub use bound::{verify_weight_bound, BoundReport, REPRESENTATION_GUARD};
pub use golden::{golden_tables, load_golden, parse_golden, verify_golden, GoldenReport, GoldenTables, DEFAULT_GOLDEN};
pub use ideal::{generating_check, GradedIdealReport, Witness};
pub use invariants::structural_invariants;
pub use strata::{strata_closed_form, strata_dimension_type_a};
pub(crate) use strata::subsets;

use crate::error::{Error, Result};
use crate::repchar::{symmetric_power, weyl_dimension, Characters, Decomposition, IrrepLabel};
use crate::rootsys::{Family, RootSystem, SimpleType, WeightVector};
use crate::schur::{cauchy_sym, partition_to_sl_label, sym_of_ext, sym_of_sym, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainFamily {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl DomainFamily {
    pub const ALL: [DomainFamily; 6] =
        [DomainFamily::I, DomainFamily::II, DomainFamily::III, DomainFamily::IV, DomainFamily::V, DomainFamily::VI];
}

impl fmt::Display for DomainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DomainFamily::I => "I",
            DomainFamily::II => "II",
            DomainFamily::III => "III",
            DomainFamily::IV => "IV",
            DomainFamily::V => "V",
            DomainFamily::VI => "VI",
        };
        f.write_str(s)
    }
}

impl FromStr for DomainFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "A" => Ok(DomainFamily::I),
            "II" => Ok(DomainFamily::II),
            "III" | "C" => Ok(DomainFamily::III),
            "IV" => Ok(DomainFamily::IV),
            "V" | "E6" => Ok(DomainFamily::V),
            "VI" | "E7" => Ok(DomainFamily::VI),
            other => Err(Error::InvalidDomain(format!("unknown domain family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainParams {
    PQ { p: usize, q: usize },
    N(usize),
    None,
}

impl fmt::Display for DomainParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainParams::PQ { p, q } => write!(f, "p={p},q={q}"),
            DomainParams::N(n) => write!(f, "n={n}"),
            DomainParams::None => Ok(()),
        }
    }
}

/// How partitions label representations for the classical families, where
/// `S^k(T)` is multiplicity free with a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurModel {
    /// `T = V1 ⊗ V2` over `sl(p) ⊕ sl(q)`; components `𝕊_λ V1 ⊗ 𝕊_λ V2`.
    Paired { p: usize, q: usize },
    /// `T = S²V1` over `sl(n)`; components of `S^k(T)` have even rows.
    EvenRows { n: usize },
    /// `T = Λ²V1` over `sl(n)`; components of `S^k(T)` have even columns.
    EvenColumns { n: usize },
}

/// `K`-module structure of the Hodge bundles `E^{w−i,i}` at the base point,
/// level `i = 0..=w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeGrading {
    levels: Vec<IrrepLabel>,
}

impl HodgeGrading {
    pub fn levels(&self) -> &[IrrepLabel] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> Option<&IrrepLabel> {
        self.levels.get(i)
    }

    pub fn weight(&self) -> usize {
        self.levels.len() - 1
    }

    /// `Hom(E^{w,0}, E^{w−k,k})`. Level 0 is a character, so this is level `k`
    /// with the charge shifted.
    pub fn hom_from_top(&self, k: usize) -> Option<IrrepLabel> {
        let top = &self.levels[0];
        let target = self.levels.get(k)?;
        Some(target.with_charge(target.charge() - top.charge()))
    }
}

#[derive(Clone, Debug)]
pub struct DomainSpec {
    pub family: DomainFamily,
    pub params: DomainParams,
    pub rank: usize,
    pub dimension: u128,
    /// Semisimple part of the isotropy algebra `K`.
    pub ambient: RootSystem,
    pub tangent: IrrepLabel,
    /// The simple algebra `G` of the noncompact dual.
    pub group: RootSystem,
    /// Special node of `G` (1-based).
    pub special_node: usize,
    /// Highest weight of the fundamental representation of `G` carrying the
    /// canonical variation.
    pub representation: IrrepLabel,
    pub pvhs_weight: usize,
    pub hodge: HodgeGrading,
    pub schur: Option<SchurModel>,
}

impl DomainSpec {
    /// Short identifier such as `I(2,3)`, `IV(5)` or `VI`.
    pub fn name(&self) -> String {
        match self.params {
            DomainParams::PQ { p, q } => format!("{}({p},{q})", self.family),
            DomainParams::N(n) => format!("{}({n})", self.family),
            DomainParams::None => self.family.to_string(),
        }
    }

    /// Label of `𝕊_λ(V1)` (or `𝕊_λ V1 ⊗ 𝕊_λ V2` in type I) inside the
    /// symmetric algebra of the tangent space.
    pub fn schur_label(&self, lambda: &Partition) -> Option<IrrepLabel> {
        self.schur_pair_label(lambda, lambda)
    }

    /// Label of `𝕊_ν1 V1 ⊗ 𝕊_ν2 V2` for type I, or `𝕊_ν1 V1` otherwise
    /// (then `ν2` is ignored). The charge is that of the symmetric degree
    /// the partitions sit in.
    pub fn schur_pair_label(&self, nu1: &Partition, nu2: &Partition) -> Option<IrrepLabel> {
        match self.schur? {
            SchurModel::Paired { p, q } => {
                if nu1.size() != nu2.size() {
                    return None;
                }
                let mut coords = partition_to_sl_label(nu1, p)?;
                coords.extend(partition_to_sl_label(nu2, q)?);
                IrrepLabel::new(coords, 2 * nu1.size() as i64).ok()
            }
            SchurModel::EvenRows { n } | SchurModel::EvenColumns { n } => {
                IrrepLabel::new(partition_to_sl_label(nu1, n)?, nu1.size() as i64).ok()
            }
        }
    }

    /// Classical families: the partitions indexing `S^k(T)`.
    pub fn sym_tangent_partitions(&self, k: usize) -> Option<Vec<Partition>> {
        Some(match self.schur? {
            SchurModel::Paired { p, q } => cauchy_sym(k, p, q),
            SchurModel::EvenRows { n } => sym_of_sym(k, n),
            SchurModel::EvenColumns { n } => sym_of_ext(k, n),
        })
    }

    /// Classical families: the partition of `J_k` derived from the Hodge
    /// grading, `None` past the rank.
    pub fn image_partition(&self, k: usize) -> Option<Partition> {
        if k > self.rank {
            return None;
        }
        Some(match self.schur? {
            SchurModel::Paired { .. } => Partition::column(k),
            SchurModel::EvenRows { .. } => Partition::rectangle(2, k),
            SchurModel::EvenColumns { .. } => Partition::column(2 * k),
        })
    }

    /// Classical families: the partitions of `I_k`.
    pub fn kernel_partitions(&self, k: usize) -> Option<Vec<Partition>> {
        let j = self.image_partition(k);
        let mut all = self.sym_tangent_partitions(k)?;
        all.retain(|l| Some(l) != j.as_ref());
        Some(all)
    }
}

/// `so(n)` for `n ≥ 3` as a root system in Bourbaki numbering. The small
/// cases are `so(3) = A1` and `so(4) = A1 ⊕ A1`.
pub fn so_root_system(n: usize) -> Result<RootSystem> {
    let m = n / 2;
    match (n % 2, m) {
        (_, 0) | (0, 1) => Err(Error::InvalidDomain(format!("so({n}) is not semisimple"))),
        (1, 1) => RootSystem::simple(Family::A, 1),
        (1, _) => RootSystem::simple(Family::B, m),
        (_, 2) => RootSystem::product(&[SimpleType::new(Family::A, 1)?, SimpleType::new(Family::A, 1)?]),
        _ => RootSystem::simple(Family::D, m),
    }
}

/// Highest weight of `so(n)` given in orthogonal coordinates `Σ x_i ε_i`,
/// converted to Bourbaki labels of [`so_root_system`].
pub fn so_label(n: usize, eps: &[i64]) -> Result<Vec<i64>> {
    let m = n / 2;
    if m == 0 || eps.len() > m {
        return Err(Error::InvalidDomain(format!("{eps:?} is not a weight of so({n})")));
    }
    let x = |i: usize| eps.get(i).copied().unwrap_or(0);
    let mut a: Vec<i64> = (0..m.saturating_sub(1)).map(|i| x(i) - x(i + 1)).collect();
    if n % 2 == 1 {
        a.push(2 * x(m - 1));
    } else {
        if m < 2 {
            return Err(Error::InvalidDomain(format!("so({n}) is not semisimple")));
        }
        a.push(x(m - 2) + x(m - 1));
    }
    if a.iter().any(|&v| v < 0) {
        return Err(Error::NotDominant(format!("{eps:?} in so({n})")));
    }
    Ok(a)
}

fn fundamental(rank: usize, node: usize) -> Result<IrrepLabel> {
    IrrepLabel::from_weight(WeightVector::fundamental(rank, node)?)
}

fn expected_dimension(family: DomainFamily, params: DomainParams) -> u128 {
    match (family, params) {
        (_, DomainParams::PQ { p, q }) => (p * q) as u128,
        (DomainFamily::II, DomainParams::N(n)) => (n * (n - 1) / 2) as u128,
        (DomainFamily::III, DomainParams::N(n)) => (n * (n + 1) / 2) as u128,
        (DomainFamily::IV, DomainParams::N(n)) => n as u128,
        (DomainFamily::V, _) => 16,
        (DomainFamily::VI, _) => 27,
        _ => 0,
    }
}

/// Builds the catalog entry. `I` takes `p, q ≥ 1`; `II` and `IV` take
/// `n ≥ 3`; `III` takes `n ≥ 2`; `V` and `VI` take no parameters.
pub fn catalog(family: DomainFamily, params: DomainParams) -> Result<DomainSpec> {
    let bad = |why: &str| Err(Error::InvalidDomain(format!("{family} with {params:?}: {why}")));
    let schur_levels = |spec_schur: SchurModel, rank: usize, ambient: &RootSystem| -> Result<Vec<IrrepLabel>> {
        (0..=rank)
            .map(|i| {
                let lambda = match spec_schur {
                    SchurModel::Paired { .. } => Partition::column(i),
                    SchurModel::EvenRows { .. } => Partition::rectangle(2, i),
                    SchurModel::EvenColumns { .. } => Partition::column(2 * i),
                };
                let coords = schur_coords(spec_schur, &lambda);
                debug_assert_eq!(coords.len(), ambient.rank());
                IrrepLabel::new(coords, 2 * i as i64 - rank as i64)
            })
            .collect()
    };
    let spec = match (family, params) {
        (DomainFamily::I, DomainParams::PQ { p, q }) => {
            if p == 0 || q == 0 {
                return bad("p and q must be positive");
            }
            let factors: Vec<SimpleType> = [p, q]
                .iter()
                .filter(|&&m| m >= 2)
                .map(|&m| SimpleType::new(Family::A, m - 1))
                .collect::<Result<_>>()?;
            let ambient = RootSystem::product(&factors)?;
            let model = SchurModel::Paired { p, q };
            let rank = p.min(q);
            let coords = schur_coords(model, &Partition::row(1));
            let hodge = HodgeGrading { levels: schur_levels(model, rank, &ambient)? };
            let group = RootSystem::simple(Family::A, p + q - 1)?;
            let representation = fundamental(p + q - 1, p)?;
            DomainSpec {
                family,
                params,
                rank,
                dimension: 0,
                ambient,
                tangent: IrrepLabel::new(coords, 2)?,
                group,
                special_node: p,
                representation,
                pvhs_weight: rank,
                hodge,
                schur: Some(model),
            }
        }
        (DomainFamily::II | DomainFamily::III, DomainParams::N(n)) => {
            let (model, min_n) = if family == DomainFamily::II {
                (SchurModel::EvenColumns { n }, 3)
            } else {
                (SchurModel::EvenRows { n }, 2)
            };
            if n < min_n {
                return bad(&format!("n must be at least {min_n}"));
            }
            let ambient = RootSystem::simple(Family::A, n - 1)?;
            let rank = if family == DomainFamily::II { n / 2 } else { n };
            let t = if family == DomainFamily::II { Partition::column(2) } else { Partition::row(2) };
            let coords = schur_coords(model, &t);
            let hodge = HodgeGrading { levels: schur_levels(model, rank, &ambient)? };
            let (group, node) = if family == DomainFamily::II {
                (RootSystem::simple(Family::D, n)?, n)
            } else {
                (RootSystem::simple(Family::C, n)?, n)
            };
            DomainSpec {
                family,
                params,
                rank,
                dimension: 0,
                ambient,
                tangent: IrrepLabel::new(coords, 2)?,
                group,
                special_node: node,
                representation: fundamental(n, node)?,
                pvhs_weight: rank,
                hodge,
                schur: Some(model),
            }
        }
        (DomainFamily::IV, DomainParams::N(n)) => {
            if n < 3 {
                return bad("n must be at least 3");
            }
            let ambient = so_root_system(n)?;
            let vector = so_label(n, &[1])?;
            let trivial = vec![0; ambient.rank()];
            let hodge = HodgeGrading {
                levels: vec![
                    IrrepLabel::new(trivial.clone(), -2)?,
                    IrrepLabel::new(vector.clone(), 0)?,
                    IrrepLabel::new(trivial, 2)?,
                ],
            };
            let group = so_root_system(n + 2)?;
            let g_rank = group.rank();
            DomainSpec {
                family,
                params,
                rank: 2,
                dimension: 0,
                ambient,
                tangent: IrrepLabel::new(vector, 2)?,
                group,
                special_node: 1,
                representation: fundamental(g_rank, 1)?,
                pvhs_weight: 2,
                hodge,
                schur: None,
            }
        }
        (DomainFamily::V, DomainParams::None) => {
            let ambient = RootSystem::simple(Family::D, 5)?;
            let hodge = HodgeGrading {
                levels: vec![
                    IrrepLabel::new(vec![0; 5], -2)?,
                    IrrepLabel::new(vec![0, 0, 0, 1, 0], 0)?,
                    IrrepLabel::new(vec![1, 0, 0, 0, 0], 2)?,
                ],
            };
            DomainSpec {
                family,
                params,
                rank: 2,
                dimension: 0,
                ambient,
                tangent: IrrepLabel::new(vec![0, 0, 0, 1, 0], 2)?,
                group: RootSystem::simple(Family::E6, 6)?,
                special_node: 1,
                representation: fundamental(6, 1)?,
                pvhs_weight: 2,
                hodge,
                schur: None,
            }
        }
        (DomainFamily::VI, DomainParams::None) => {
            let ambient = RootSystem::simple(Family::E6, 6)?;
            let hodge = HodgeGrading {
                levels: vec![
                    IrrepLabel::new(vec![0; 6], -3)?,
                    IrrepLabel::new(vec![1, 0, 0, 0, 0, 0], -1)?,
                    IrrepLabel::new(vec![0, 0, 0, 0, 0, 1], 1)?,
                    IrrepLabel::new(vec![0; 6], 3)?,
                ],
            };
            DomainSpec {
                family,
                params,
                rank: 3,
                dimension: 0,
                ambient,
                tangent: IrrepLabel::new(vec![1, 0, 0, 0, 0, 0], 2)?,
                group: RootSystem::simple(Family::E7, 7)?,
                special_node: 7,
                representation: fundamental(7, 7)?,
                pvhs_weight: 3,
                hodge,
                schur: None,
            }
        }
        _ => return bad("parameters do not fit the family"),
    };
    let mut spec = spec;
    spec.dimension = weyl_dimension(&spec.ambient, &spec.tangent)?;
    let expected = expected_dimension(family, params);
    if spec.dimension != expected {
        return Err(Error::Inconsistent(format!(
            "{}: tangent dimension {} but the domain has dimension {expected}",
            spec.name(),
            spec.dimension
        )));
    }
    let top = &spec.hodge.levels[0];
    if weyl_dimension(&spec.ambient, top)? != 1 {
        return Err(Error::Inconsistent(format!("{}: top Hodge piece is not a line", spec.name())));
    }
    Ok(spec)
}

fn schur_coords(model: SchurModel, lambda: &Partition) -> Vec<i64> {
    match model {
        SchurModel::Paired { p, q } => {
            let mut c = partition_to_sl_label(lambda, p).expect("rows bounded by rank");
            c.extend(partition_to_sl_label(lambda, q).expect("rows bounded by rank"));
            c
        }
        SchurModel::EvenRows { n } | SchurModel::EvenColumns { n } => {
            partition_to_sl_label(lambda, n).expect("rows bounded by n")
        }
    }
}

pub fn catalog_pq(p: usize, q: usize) -> Result<DomainSpec> {
    catalog(DomainFamily::I, DomainParams::PQ { p, q })
}

pub fn catalog_n(family: DomainFamily, n: usize) -> Result<DomainSpec> {
    catalog(family, DomainParams::N(n))
}

pub fn catalog_exceptional(family: DomainFamily) -> Result<DomainSpec> {
    catalog(family, DomainParams::None)
}

/// `S^k(T)`. Classical families use the closed forms; type IV and the
/// exceptional domains go through characters.
pub fn sym_tangent(spec: &DomainSpec, k: usize) -> Result<Decomposition> {
    match spec.sym_tangent_partitions(k) {
        Some(parts) => parts
            .iter()
            .map(|l| {
                spec.schur_label(l)
                    .ok_or_else(|| Error::Inconsistent(format!("{}: no label for {l}", spec.name())))
            })
            .collect(),
        None => sym_tangent_via_characters(spec, k),
    }
}

/// `S^k(T)` by plethysm on weights followed by decomposition, for any family.
pub fn sym_tangent_via_characters(spec: &DomainSpec, k: usize) -> Result<Decomposition> {
    let chars = Characters::new(&spec.ambient);
    let t = chars.weight_system(&spec.tangent)?;
    chars.decompose(&symmetric_power(&t, k))
}

/// `J_k = θ^k(S^k T) ≅ Hom(E^{w,0}, E^{w−k,k})`, empty past the rank.
pub fn image_j_k(spec: &DomainSpec, k: usize) -> Result<Decomposition> {
    let Some(label) = spec.hodge.hom_from_top(k) else {
        return Ok(Decomposition::new());
    };
    let sym = sym_tangent(spec, k)?;
    if !sym.contains(&label) {
        return Err(Error::Inconsistent(format!(
            "{}: Hom(level 0, level {k}) = {label} is not a summand of S^{k}(T) = {sym}",
            spec.name()
        )));
    }
    Ok(Decomposition::singleton(label))
}

/// `I_k = ker θ^k = S^k(T) ⊖ J_k`.
pub fn kernel_i_k(spec: &DomainSpec, k: usize) -> Result<Decomposition> {
    let sym = sym_tangent(spec, k)?;
    let image = image_j_k(spec, k)?;
    sym.checked_difference(&image)
        .ok_or_else(|| Error::Inconsistent(format!("{}: J_{k} is not inside S^{k}(T)", spec.name())))
}

/// Parameter sets of the verification matrix for `family`, with `n` bounded
/// by `max_n` (or `p ≤ q ≤ max_n` in type I).
pub fn family_range(family: DomainFamily, max_n: usize) -> Vec<DomainParams> {
    match family {
        DomainFamily::I => (1..=max_n)
            .flat_map(|p| (p..=max_n).map(move |q| DomainParams::PQ { p, q }))
            .collect(),
        DomainFamily::II | DomainFamily::IV => (3..=max_n).map(DomainParams::N).collect(),
        DomainFamily::III => (2..=max_n).map(DomainParams::N).collect(),
        DomainFamily::V | DomainFamily::VI => vec![DomainParams::None],
    }
}
