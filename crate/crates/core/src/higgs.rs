//! Matrix model of the type A Higgs field.
//!
//! `E = Λ^p(C^{p+q})` with `C^{p+q} = C^p ⊕ C^q`. Basis vectors are
//! lexicographically ordered `p`-subsets of `0..p+q`; indices `< p` span the
//! positive block, the rest the negative block, and the Hodge level of a basis
//! vector is the number of negative indices it contains. A tangent vector is
//! a `q × p` matrix acting by derivation, so it raises the level by one.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pvhs::subsets;
use crate::scalar::Scalar;

/// Largest `binomial(p+q, p)` the model agrees to build.
pub const WEDGE_GUARD: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeModel {
    p: usize,
    q: usize,
    graded_basis: Vec<Vec<Vec<usize>>>,
    // (level, position within level) of every subset
    index: HashMap<Vec<usize>, (usize, usize)>,
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

impl WedgeModel {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidDomain(format!("wedge model needs p, q >= 1, got ({p},{q})")));
        }
        let total = binomial((p + q) as u64, p as u64);
        if total > WEDGE_GUARD {
            return Err(Error::GuardExceeded(format!(
                "Λ^{p}(C^{}) has dimension {total} > {WEDGE_GUARD}",
                p + q
            )));
        }
        let mut graded_basis = vec![Vec::new(); p.min(q) + 1];
        for s in subsets(p + q, p) {
            let level = s.iter().filter(|&&i| i >= p).count();
            graded_basis[level].push(s);
        }
        let index = graded_basis
            .iter()
            .enumerate()
            .flat_map(|(l, basis)| basis.iter().enumerate().map(move |(j, s)| (s.clone(), (l, j))))
            .collect();
        Ok(WedgeModel { p, q, graded_basis, index })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Highest nonzero level, `min(p, q)`.
    pub fn top_level(&self) -> usize {
        self.graded_basis.len() - 1
    }

    pub fn level_basis(&self, level: usize) -> &[Vec<usize>] {
        self.graded_basis.get(level).map_or(&[], Vec::as_slice)
    }

    pub fn level_dims(&self) -> Vec<usize> {
        self.graded_basis.iter().map(Vec::len).collect()
    }

    pub fn dimension(&self) -> usize {
        self.graded_basis.iter().map(Vec::len).sum()
    }

    /// `v · e_S` as signed basis terms: each positive index `j` in `S` is
    /// replaced by every negative index `p + r`, and the sign counts the
    /// elements of `S` strictly between the old and the new position.
    fn act_on_basis<T: Scalar>(&self, v: &TangentMatrix<T>, s: &[usize]) -> Vec<(usize, T)> {
        let mut terms = Vec::new();
        for &j in s.iter().filter(|&&j| j < self.p) {
            for r in 0..self.q {
                let coeff = &v.entries[(r, j)];
                let target = self.p + r;
                if coeff.is_zero() || s.contains(&target) {
                    continue;
                }
                let between = s.iter().filter(|&&x| x > j && x < target).count();
                let mut t: Vec<usize> = s.iter().copied().filter(|&x| x != j).collect();
                t.push(target);
                t.sort_unstable();
                let (_, pos) = self.index[&t];
                let c = if between % 2 == 0 { coeff.clone() } else { -coeff.clone() };
                terms.push((pos, c));
            }
        }
        terms
    }
}

/// A tangent vector at the base point: a linear map from the positive block
/// to the negative block, stored as a `q × p` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentMatrix<T: Scalar> {
    entries: Matrix<T>,
}

impl<T: Scalar> TangentMatrix<T> {
    pub fn new(entries: Matrix<T>) -> Self {
        TangentMatrix { entries }
    }

    pub fn zeros(p: usize, q: usize) -> Self {
        TangentMatrix { entries: Matrix::zeros(q, p) }
    }

    pub fn entries(&self) -> &Matrix<T> {
        &self.entries
    }

    /// `(p, q)`: source and target block sizes.
    pub fn shape(&self) -> (usize, usize) {
        (self.entries.cols(), self.entries.rows())
    }

    pub fn rank(&self) -> usize {
        self.entries.rank()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(TangentMatrix { entries: self.entries.checked_add(&other.entries)? })
    }

    /// The action of `(A, B) ∈ GL(p) × GL(q)`: `v ↦ B v A⁻¹`.
    pub fn transform(&self, a: &Matrix<T>, b: &Matrix<T>) -> Result<Self> {
        let a_inv = a
            .inverse()
            .ok_or_else(|| Error::ShapeMismatch("positive-block change of basis is singular".into()))?;
        Ok(TangentMatrix { entries: b.checked_mul(&self.entries)?.checked_mul(&a_inv)? })
    }
}

/// `θ_v` as one block per level: `blocks[i]` maps level `i` to level `i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct HiggsField<T: Scalar> {
    blocks: Vec<Matrix<T>>,
}

impl<T: Scalar> HiggsField<T> {
    pub fn blocks(&self) -> &[Matrix<T>] {
        &self.blocks
    }

    pub fn block(&self, level: usize) -> Option<&Matrix<T>> {
        self.blocks.get(level)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.blocks.len() != other.blocks.len() {
            return Err(Error::ShapeMismatch("Higgs fields of different models".into()));
        }
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.checked_add(b)).collect::<Result<_>>()?;
        Ok(HiggsField { blocks })
    }

    /// `θ^k` restricted to level 0, as a `dim(level k) × 1` matrix. Past the
    /// top level the target space is zero and the result is `0 × 1`.
    pub fn iterate_from_top(&self, k: usize) -> Matrix<T> {
        let mut acc = Matrix::identity(1);
        for level in 0..k {
            match self.blocks.get(level) {
                Some(block) => acc = block * &acc,
                None => return Matrix::zeros(0, 1),
            }
        }
        acc
    }
}

pub fn theta_matrix<T: Scalar>(model: &WedgeModel, v: &TangentMatrix<T>) -> Result<HiggsField<T>> {
    if v.shape() != (model.p, model.q) {
        let (p, q) = v.shape();
        return Err(Error::ShapeMismatch(format!(
            "tangent matrix for ({p},{q}) used on the ({},{}) model",
            model.p, model.q
        )));
    }
    let blocks = (0..model.top_level())
        .map(|level| {
            let src = model.level_basis(level);
            let mut m = Matrix::<T>::zeros(model.level_basis(level + 1).len(), src.len());
            for (col, s) in src.iter().enumerate() {
                for (row, c) in model.act_on_basis(v, s) {
                    m[(row, col)] = m[(row, col)].clone() + c;
                }
            }
            m
        })
        .collect();
    Ok(HiggsField { blocks })
}

/// Rank of `θ_v^k` on the one-dimensional level 0, so 0 or 1.
pub fn iterated_rank<T: Scalar>(model: &WedgeModel, v: &TangentMatrix<T>, k: usize) -> Result<usize> {
    Ok(theta_matrix(model, v)?.iterate_from_top(k).rank())
}

/// `true` iff `v^k` lies in the degree `k` kernel ideal, i.e. `θ_v^k` kills
/// level 0.
pub fn membership_in_ik<T: Scalar>(model: &WedgeModel, v: &TangentMatrix<T>, k: usize) -> Result<bool> {
    Ok(iterated_rank(model, v, k)? == 0)
}

/// Seeded source of random rational tangent matrices with a prescribed rank.
pub struct MatrixSampler {
    rng: ChaCha8Rng,
    seed: u64,
}

impl MatrixSampler {
    pub fn new(seed: u64) -> Self {
        MatrixSampler { rng: ChaCha8Rng::seed_from_u64(seed), seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn entry<T: Scalar>(&mut self) -> T {
        T::from_fraction(self.rng.gen_range(-6..=6), self.rng.gen_range(1..=5))
    }

    fn dense<T: Scalar>(&mut self, rows: usize, cols: usize) -> Matrix<T> {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self.entry();
            }
        }
        m
    }

    /// A `q × p` matrix of exact rank `r`, built as a product `(q×r)(r×p)`
    /// and resampled until the rank is right.
    pub fn tangent_of_rank<T: Scalar>(&mut self, p: usize, q: usize, r: usize) -> Result<TangentMatrix<T>> {
        if r > p.min(q) {
            return Err(Error::ShapeMismatch(format!("no {q}x{p} matrix has rank {r}")));
        }
        loop {
            let left = self.dense::<T>(q, r);
            let right = self.dense::<T>(r, p);
            let m = if r == 0 { Matrix::zeros(q, p) } else { left.checked_mul(&right)? };
            if m.rank() == r {
                return Ok(TangentMatrix::new(m));
            }
        }
    }

    /// Rank drawn uniformly from `0..=min(p, q)`.
    pub fn tangent<T: Scalar>(&mut self, p: usize, q: usize) -> Result<TangentMatrix<T>> {
        let r = self.rng.gen_range(0..=p.min(q));
        self.tangent_of_rank(p, q, r)
    }

    pub fn invertible<T: Scalar>(&mut self, n: usize) -> Matrix<T> {
        loop {
            let m = self.dense::<T>(n, n);
            if m.rank() == n {
                return m;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub p: usize,
    pub q: usize,
    pub seed: u64,
    pub samples: usize,
    pub checked: usize,
    /// `(sample, k, matrix rank, membership)` for every disagreement.
    pub failures: Vec<(usize, usize, usize, bool)>,
    pub rank_histogram: Vec<usize>,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `membership_in_ik(v, k)` with `rank(v) < k` on `samples` seeded
/// random matrices for every `1 ≤ k ≤ min(p, q) + 1`.
pub fn rank_oracle<T: Scalar>(p: usize, q: usize, samples: usize, seed: u64) -> Result<OracleReport> {
    let model = WedgeModel::new(p, q)?;
    let mut sampler = MatrixSampler::new(seed);
    let top = p.min(q);
    let mut report = OracleReport {
        p,
        q,
        seed,
        samples,
        checked: 0,
        failures: Vec::new(),
        rank_histogram: vec![0; top + 1],
    };
    for sample in 0..samples {
        let v = sampler.tangent::<T>(p, q)?;
        let r = v.rank();
        report.rank_histogram[r] += 1;
        let field = theta_matrix(&model, &v)?;
        for k in 1..=top + 1 {
            let member = field.iterate_from_top(k).rank() == 0;
            report.checked += 1;
            if member != (r < k) {
                report.failures.push((sample, k, r, member));
            }
        }
    }
    Ok(report)
}
