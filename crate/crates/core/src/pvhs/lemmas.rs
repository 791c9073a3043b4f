//! The tabulated decompositions, stored as data, and the computations they
//! are compared against.
//!
//! Type IV lines are given in orthogonal coordinates and converted with
//! [`so_label`], so they apply to every `n ≥ 5`. Below that the shape
//! `2ε₁+ε₂` is no longer irreducible: in `so(4)` it splits as `2ε₁ ± ε₂`,
//! and in `so(3)` it is not a weight at all.

use std::fmt;

use super::{catalog_exceptional, kernel_i_k, so_label, sym_tangent, DomainFamily, DomainParams, DomainSpec};
use crate::error::{Error, Result};
use crate::repchar::{Characters, Decomposition, IrrepLabel};
use crate::schur::Partition;

/// Left-hand side of one tabulated isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    Tangent,
    Sym(usize),
    Ideal(usize),
    /// `I_2 ⊗ S^j(T)`.
    IdealTimesSym(usize),
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Tangent => f.write_str("T"),
            Statement::Sym(k) => write!(f, "S^{k}(T)"),
            Statement::Ideal(k) => write!(f, "I_{k}"),
            Statement::IdealTimesSym(1) => f.write_str("I_2⊗T"),
            Statement::IdealTimesSym(j) => write!(f, "I_2⊗S^{j}(T)"),
        }
    }
}

pub fn compute_statement(spec: &DomainSpec, st: Statement) -> Result<Decomposition> {
    match st {
        Statement::Tangent => Ok(Decomposition::singleton(spec.tangent.clone())),
        Statement::Sym(k) => sym_tangent(spec, k),
        Statement::Ideal(k) => kernel_i_k(spec, k),
        Statement::IdealTimesSym(j) => {
            let chars = Characters::new(&spec.ambient);
            chars.tensor_decompositions(&kernel_i_k(spec, 2)?, &sym_tangent(spec, j)?)
        }
    }
}

fn labels(items: &[(&[i64], i64)]) -> Result<Decomposition> {
    let mut d = Decomposition::new();
    for (c, q) in items {
        d.insert(IrrepLabel::new(c.to_vec(), *q)?, 1);
    }
    Ok(d)
}

fn so_labels(n: usize, items: &[(&[i64], i64)]) -> Result<Decomposition> {
    let mut d = Decomposition::new();
    for (eps, q) in items {
        d.insert(IrrepLabel::new(so_label(n, eps)?, *q)?, 1);
    }
    Ok(d)
}

/// The type IV lemma for `so(n)`, `n ≥ 5`.
pub fn formula_b(n: usize) -> Result<Vec<(Statement, Decomposition)>> {
    if n < 5 {
        return Err(Error::InvalidDomain(format!("the type IV lines need n ≥ 5, got {n}")));
    }
    Ok(vec![
        (Statement::Tangent, so_labels(n, &[(&[1], 2)])?),
        (Statement::Sym(2), so_labels(n, &[(&[2], 4), (&[], 4)])?),
        (Statement::Ideal(2), so_labels(n, &[(&[2], 4)])?),
        (Statement::IdealTimesSym(1), so_labels(n, &[(&[3], 6), (&[1], 6), (&[2, 1], 6)])?),
        (Statement::Sym(3), so_labels(n, &[(&[3], 6), (&[1], 6)])?),
    ])
}

pub fn formula_e6() -> Result<Vec<(Statement, Decomposition)>> {
    Ok(vec![
        (Statement::Tangent, labels(&[(&[0, 0, 0, 1, 0], 2)])?),
        (Statement::Sym(2), labels(&[(&[0, 0, 0, 2, 0], 4), (&[1, 0, 0, 0, 0], 4)])?),
        (Statement::Ideal(2), labels(&[(&[0, 0, 0, 2, 0], 4)])?),
        (
            Statement::IdealTimesSym(1),
            labels(&[(&[0, 0, 0, 3, 0], 6), (&[1, 0, 0, 1, 0], 6), (&[0, 0, 1, 1, 0], 6)])?,
        ),
        (Statement::Sym(3), labels(&[(&[0, 0, 0, 3, 0], 6), (&[1, 0, 0, 1, 0], 6)])?),
    ])
}

/// The `I_2 ⊗ S²(T)` line is transcribed term by term, so the repeated
/// summand `Γ_{2,0,0,0,0,1}` appears with multiplicity 2.
pub fn formula_e7() -> Result<Vec<(Statement, Decomposition)>> {
    Ok(vec![
        (Statement::Tangent, labels(&[(&[1, 0, 0, 0, 0, 0], 2)])?),
        (Statement::Sym(2), labels(&[(&[2, 0, 0, 0, 0, 0], 4), (&[0, 0, 0, 0, 0, 1], 4)])?),
        (Statement::Ideal(2), labels(&[(&[2, 0, 0, 0, 0, 0], 4)])?),
        (
            Statement::IdealTimesSym(1),
            labels(&[(&[1, 0, 0, 0, 0, 1], 6), (&[3, 0, 0, 0, 0, 0], 6), (&[1, 0, 1, 0, 0, 0], 6)])?,
        ),
        (
            Statement::Sym(3),
            labels(&[(&[1, 0, 0, 0, 0, 1], 6), (&[3, 0, 0, 0, 0, 0], 6), (&[0, 0, 0, 0, 0, 0], 6)])?,
        ),
        (Statement::Ideal(3), labels(&[(&[1, 0, 0, 0, 0, 1], 6), (&[3, 0, 0, 0, 0, 0], 6)])?),
        (
            Statement::IdealTimesSym(2),
            labels(&[
                (&[4, 0, 0, 0, 0, 0], 8),
                (&[2, 0, 0, 0, 0, 1], 8),
                (&[0, 0, 0, 0, 0, 2], 8),
                (&[2, 0, 1, 0, 0, 0], 8),
                (&[0, 0, 2, 0, 0, 0], 8),
                (&[0, 0, 1, 0, 0, 1], 8),
                (&[1, 0, 0, 0, 0, 0], 8),
                (&[1, 1, 0, 0, 0, 0], 8),
                (&[2, 0, 0, 0, 0, 1], 8),
            ])?,
        ),
        (
            Statement::Sym(4),
            labels(&[
                (&[4, 0, 0, 0, 0, 0], 8),
                (&[2, 0, 0, 0, 0, 1], 8),
                (&[0, 0, 0, 0, 0, 2], 8),
                (&[1, 0, 0, 0, 0, 0], 8),
            ])?,
        ),
    ])
}

/// Closed-form `S^k(T)` for the classical families, enumerated from the
/// lemma's description of the partitions (independently of the `schur`
/// closed forms).
pub fn classical_sym_expected(spec: &DomainSpec, k: usize) -> Result<Decomposition> {
    type Filter = Box<dyn Fn(&Partition) -> bool>;
    let (size, keep): (usize, Filter) = match (spec.family, spec.params) {
        (DomainFamily::I, DomainParams::PQ { p, q }) => (k, Box::new(move |l: &Partition| l.rows() <= p.min(q))),
        (DomainFamily::III, DomainParams::N(n)) => {
            (2 * k, Box::new(move |l: &Partition| l.rows() <= n && l.all_parts_even()))
        }
        (DomainFamily::II, DomainParams::N(n)) => {
            (2 * k, Box::new(move |l: &Partition| l.rows() <= n && l.conjugate().all_parts_even()))
        }
        _ => return Err(Error::InvalidDomain(format!("{} is not a classical Schur family", spec.name()))),
    };
    let mut d = Decomposition::new();
    for lambda in Partition::all(size, size).iter().filter(|l| keep(l)) {
        let label = spec
            .schur_label(lambda)
            .ok_or_else(|| Error::Inconsistent(format!("{}: no label for {lambda}", spec.name())))?;
        d.insert(label, 1);
    }
    Ok(d)
}

/// The commonly stated image partition for each classical family. For
/// type II this is `(k,k)`, which disagrees with the Hodge bundles
/// `Λ^{n−2q}F^{1,0}`: those give `(1^{2k})`.
pub fn stated_image_partition(family: DomainFamily, k: usize) -> Option<Partition> {
    match family {
        DomainFamily::I => Some(Partition::column(k)),
        DomainFamily::III => Some(Partition::rectangle(2, k)),
        DomainFamily::II => Some(Partition::rectangle(k, 2)),
        _ => None,
    }
}

/// The tabulated lines for the non-Schur families.
pub fn tabulated_lines(spec: &DomainSpec) -> Result<Vec<(Statement, Decomposition)>> {
    match (spec.family, spec.params) {
        (DomainFamily::IV, DomainParams::N(n)) => formula_b(n),
        (DomainFamily::V, _) => formula_e6(),
        (DomainFamily::VI, _) => formula_e7(),
        _ => Err(Error::InvalidDomain(format!("no tabulated lines for {}", spec.name()))),
    }
}

/// One compared line.
#[derive(Clone, Debug)]
pub struct LineCheck {
    pub statement: Statement,
    pub expected: Decomposition,
    pub computed: Decomposition,
}

impl LineCheck {
    pub fn pass(&self) -> bool {
        self.expected == self.computed
    }

    /// Labels whose multiplicities differ, as `(label, expected, computed)`.
    pub fn discrepancies(&self) -> Vec<(IrrepLabel, u64, u64)> {
        let mut labels: Vec<&IrrepLabel> = self.expected.labels().chain(self.computed.labels()).collect();
        labels.sort();
        labels.dedup();
        labels
            .into_iter()
            .filter_map(|l| {
                let (e, c) = (self.expected.multiplicity(l), self.computed.multiplicity(l));
                (e != c).then(|| (l.clone(), e, c))
            })
            .collect()
    }
}

pub fn reproduce(spec: &DomainSpec) -> Result<Vec<LineCheck>> {
    tabulated_lines(spec)?
        .into_iter()
        .map(|(statement, expected)| {
            Ok(LineCheck { statement, computed: compute_statement(spec, statement)?, expected })
        })
        .collect()
}

/// Convenience for the two exceptional domains.
pub fn reproduce_exceptional(family: DomainFamily) -> Result<Vec<LineCheck>> {
    reproduce(&catalog_exceptional(family)?)
}
