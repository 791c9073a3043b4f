//! Root systems of the classical and `E6`/`E7` types, with Bourbaki node
//! numbering.
//!
//! Roots are integer vectors in the simple-root basis; weights are integer
//! vectors in the fundamental-weight basis together with a central `U(1)`
//! charge that never enters root-system arithmetic. The Gram matrix of the
//! simple roots is kept integral: simply-laced roots have squared length 2,
//! and in the doubly-laced families short roots have 2 and long roots 4.
//!
//! Node indices in the public API are 1-based, matching the usual labelling
//! of Dynkin diagrams.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::SmallRational;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            other => Err(Error::InvalidRootSystem {
                family: other.to_string(),
                rank: 0,
                reason: "unknown family (expected A, B, C, D, E6 or E7)".into(),
            }),
        }
    }
}

/// One simple factor, e.g. `D5`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reject = |reason: &str| {
            Err(Error::InvalidRootSystem {
                family: family.to_string(),
                rank,
                reason: reason.to_string(),
            })
        };
        match family {
            Family::A if rank < 1 => reject("type A needs rank >= 1"),
            Family::B | Family::C if rank < 2 => reject("types B and C need rank >= 2"),
            Family::D if rank < 3 => reject("type D needs rank >= 3"),
            Family::E6 if rank != 6 => reject("E6 has rank 6"),
            Family::E7 if rank != 7 => reject("E7 has rank 7"),
            _ => Ok(SimpleType { family, rank }),
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E6 => 36,
            Family::E7 => 63,
        }
    }

    /// Integral Gram matrix `(α_i, α_j)` of the simple roots.
    fn gram(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut g = vec![vec![0i64; l]; l];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                for i in 0..l.saturating_sub(1) {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                // α_i = ε_i − ε_{i+1} long, α_l = ε_l short
                for i in 0..l - 1 {
                    g[i][i] = 4;
                    link(&mut g, i, i + 1, -2);
                }
                g[l - 1][l - 1] = 2;
            }
            Family::C => {
                // α_i = ε_i − ε_{i+1} short, α_l = 2ε_l long
                for i in 0..l - 1 {
                    g[i][i] = 2;
                }
                for i in 0..l - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                g[l - 1][l - 1] = 4;
                link(&mut g, l - 2, l - 1, -2);
            }
            Family::D => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                for i in 0..l - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, l - 3, l - 1, -1);
            }
            Family::E6 | Family::E7 => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                // Bourbaki: 1-3-4-5-6(-7) with 2 attached to 4
                let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
                if self.family == Family::E7 {
                    edges.push((5, 6));
                }
                for (i, j) in edges {
                    link(&mut g, i, j, -1);
                }
            }
        }
        g
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::E6 | Family::E7 => write!(f, "{}", self.family),
            fam => write!(f, "{}{}", fam, self.rank),
        }
    }
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}α{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}α{}", i + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A weight in fundamental-weight coordinates plus a central charge.
///
/// Ordering is lexicographic on `(charge, coords)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub charge: i64,
    pub coords: Vec<i64>,
}

impl WeightVector {
    pub fn new(coords: Vec<i64>, charge: i64) -> Self {
        WeightVector { charge, coords }
    }

    pub fn zero(rank: usize) -> Self {
        WeightVector { charge: 0, coords: vec![0; rank] }
    }

    /// The `i`-th fundamental weight (1-based), charge zero.
    pub fn fundamental(rank: usize, node: usize) -> Result<Self> {
        if node == 0 || node > rank {
            return Err(Error::NodeOutOfRange { index: node, rank });
        }
        let mut coords = vec![0; rank];
        coords[node - 1] = 1;
        Ok(WeightVector { charge: 0, coords })
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&a| a >= 0)
    }

    pub fn with_charge(mut self, charge: i64) -> Self {
        self.charge = charge;
        self
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector {
            charge: self.charge + other.charge,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> WeightVector {
        WeightVector { charge: self.charge * k, coords: self.coords.iter().map(|a| a * k).collect() }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))?;
        if self.charge != 0 {
            write!(f, "[{}]", self.charge)?;
        }
        Ok(())
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Parses `a,b,c`, `(a,b,c)` or `(a,b,c)[charge]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, charge) = match s.find('[') {
            Some(i) => {
                let tail = s[i + 1..].trim_end_matches(']');
                let charge = tail
                    .trim()
                    .parse::<i64>()
                    .map_err(|e| Error::ShapeMismatch(format!("bad charge {tail:?}: {e}")))?;
                (&s[..i], charge)
            }
            None => (s, 0),
        };
        let body = body.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(WeightVector::new(Vec::new(), charge));
        }
        let coords = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::ShapeMismatch(format!("bad coordinate {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightVector::new(coords, charge))
    }
}

/// A semisimple root datum: a list of simple factors with block-diagonal
/// Cartan matrix. [`build_root_system`] produces the simple case.
#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<SimpleType>,
    offsets: Vec<usize>,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`; column `j` is `α_j` in weight coordinates.
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    positive_roots_as_weights: Vec<Vec<i64>>,
    root_set: HashSet<Vec<i64>>,
    highest_roots: Vec<Root>,
    height_form: Vec<i64>,
}

/// Builds the simple root system of the given family and rank.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::product(&[SimpleType::new(family, rank)?])
}

impl RootSystem {
    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        build_root_system(family, rank)
    }

    /// Direct sum of simple factors. An empty list gives the rank-0 algebra,
    /// whose only representation is one-dimensional.
    pub fn product(components: &[SimpleType]) -> Result<Self> {
        let rank: usize = components.iter().map(|c| c.rank).sum();
        let mut gram = vec![vec![0i64; rank]; rank];
        let mut offsets = Vec::with_capacity(components.len());
        let mut off = 0;
        for c in components {
            let c = SimpleType::new(c.family, c.rank)?;
            let g = c.gram();
            for i in 0..c.rank {
                for j in 0..c.rank {
                    gram[off + i][off + j] = g[i][j];
                }
            }
            offsets.push(off);
            off += c.rank;
        }
        let symmetrizer: Vec<i64> = (0..rank).map(|i| gram[i][i] / 2).collect();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();

        let mut rs = RootSystem {
            components: components.to_vec(),
            offsets,
            cartan,
            gram,
            symmetrizer,
            positive_roots: Vec::new(),
            positive_roots_as_weights: Vec::new(),
            root_set: HashSet::new(),
            highest_roots: Vec::new(),
            height_form: Vec::new(),
        };
        rs.generate_positive_roots();
        rs.height_form = rs.compute_height_form();
        rs.check_invariants()?;
        Ok(rs)
    }

    /// Breadth-first closure by height: `β + α_i` is a root iff the
    /// `α_i`-string through `β` extends upward, i.e. `p − ⟨β, α_i^∨⟩ > 0`.
    fn generate_positive_roots(&mut self) {
        let n = self.rank();
        let mut all: Vec<Vec<i64>> = Vec::new();
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        let mut level: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        while !level.is_empty() {
            for r in &level {
                set.insert(r.clone());
            }
            all.extend(level.iter().cloned());
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for beta in &level {
                for i in 0..n {
                    let pairing: i64 = (0..n).map(|j| self.cartan[i][j] * beta[j]).sum();
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !set.contains(&down) {
                            break;
                        }
                        p += 1;
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            level = next.into_iter().collect();
        }
        all.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        self.positive_roots_as_weights = all.iter().map(|r| self.root_coords_to_weight(r)).collect();
        self.highest_roots = self
            .offsets
            .iter()
            .zip(&self.components)
            .map(|(&off, c)| {
                let block = |r: &Vec<i64>| {
                    r.iter()
                        .enumerate()
                        .all(|(k, &x)| x == 0 || (k >= off && k < off + c.rank))
                };
                Root(
                    all.iter()
                        .filter(|r| block(r))
                        .max_by_key(|r| r.iter().sum::<i64>())
                        .cloned()
                        .expect("every simple factor has roots"),
                )
            })
            .collect();
        self.root_set = set;
        self.positive_roots = all.into_iter().map(Root).collect();
    }

    /// Integer multiple of the linear form `μ ↦ (μ, ρ)` on weight coordinates.
    /// It is strictly positive on every positive root.
    fn compute_height_form(&self) -> Vec<i64> {
        let n = self.rank();
        if n == 0 {
            return Vec::new();
        }
        let c = Matrix::<SmallRational>::from_fn(n, n, |i, j| {
            SmallRational::from_integer(self.cartan[i][j])
        });
        let inv = c.inverse().expect("Cartan matrices are invertible");
        // weight a = C·c  ⇒  c = C⁻¹a, and (μ, ρ) = Σ_j d_j c_j
        let h: Vec<SmallRational> = (0..n)
            .map(|i| {
                (0..n).fold(SmallRational::zero(), |acc, j| {
                    acc + inv[(j, i)] * SmallRational::from_integer(self.symmetrizer[j])
                })
            })
            .collect();
        let lcm = h.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
        h.iter().map(|x| (x * SmallRational::from_integer(lcm)).to_integer()).collect()
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.rank();
        let fail = |reason: String| {
            Err(Error::Inconsistent(format!("root system {self}: {reason}")))
        };
        for i in 0..n {
            if self.cartan[i][i] != 2 {
                return fail(format!("cartan[{i}][{i}] != 2"));
            }
            for j in 0..n {
                if i != j {
                    if self.cartan[i][j] > 0 {
                        return fail(format!("positive off-diagonal entry at ({i},{j})"));
                    }
                    if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0) {
                        return fail(format!("asymmetric zero pattern at ({i},{j})"));
                    }
                }
            }
        }
        let expected: usize = self.components.iter().map(SimpleType::positive_root_count).sum();
        if self.positive_roots.len() != expected {
            return fail(format!(
                "{} positive roots, expected {expected}",
                self.positive_roots.len()
            ));
        }
        // positive definiteness via leading principal minors of the Gram matrix
        for k in 1..=n {
            let m = Matrix::<SmallRational>::from_fn(k, k, |i, j| {
                SmallRational::from_integer(self.gram[i][j])
            });
            if m.determinant()? <= SmallRational::zero() {
                return fail(format!("Gram matrix not positive definite at minor {k}"));
            }
        }
        for r in &self.positive_roots {
            let Some(h) = self
                .highest_roots
                .iter()
                .find(|h| r.0.iter().zip(&h.0).any(|(&x, &y)| x != 0 && y != 0))
            else {
                return fail(format!("root {r} outside every simple factor"));
            };
            if r.0.iter().zip(&h.0).any(|(x, y)| x > y) {
                return fail(format!("highest root {h} does not dominate {r}"));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    /// Offset of each simple factor inside the concatenated coordinates.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// The family when the system is simple.
    pub fn family(&self) -> Option<Family> {
        match self.components.as_slice() {
            [c] => Some(c.family),
            _ => None,
        }
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `d_i = (α_i, α_i)/2`, so that `d_i · cartan[i][j]` is symmetric.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates, same order as
    /// [`RootSystem::positive_roots`].
    pub fn positive_roots_as_weights(&self) -> &[Vec<i64>] {
        &self.positive_roots_as_weights
    }

    /// Highest root of the first simple factor (the only one when simple).
    pub fn highest_root(&self) -> &Root {
        &self.highest_roots[0]
    }

    pub fn highest_roots(&self) -> &[Root] {
        &self.highest_roots
    }

    pub fn is_positive_root(&self, coeffs: &[i64]) -> bool {
        self.root_set.contains(coeffs)
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.root_set.contains(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.root_set.contains(&neg)
    }

    /// Simple-root coordinates to fundamental-weight coordinates.
    pub fn root_coords_to_weight(&self, coeffs: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.cartan[i][j] * coeffs[j]).sum()).collect()
    }

    /// `(Σ c_j α_j, μ) = Σ_j c_j d_j μ_j` for a weight `μ` in weight coordinates.
    pub fn root_weight_product(&self, coeffs: &[i64], weight: &[i64]) -> i64 {
        coeffs
            .iter()
            .zip(weight)
            .zip(&self.symmetrizer)
            .map(|((c, a), d)| c * d * a)
            .sum()
    }

    pub fn root_norm(&self, coeffs: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += coeffs[i] * coeffs[j] * self.gram[i][j];
            }
        }
        s
    }

    /// Integer height of a weight, proportional to `(μ, ρ)`.
    pub fn weight_height(&self, coords: &[i64]) -> i64 {
        coords.iter().zip(&self.height_form).map(|(a, h)| a * h).sum()
    }

    fn check_weight(&self, beta: &WeightVector) -> Result<()> {
        if beta.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: beta.rank() });
        }
        Ok(())
    }

    /// `β(H_α) = 2(β, α)/(α, α)`.
    pub fn coroot_pairing(&self, beta: &WeightVector, alpha: &Root) -> Result<SmallRational> {
        self.check_weight(beta)?;
        if alpha.0.len() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: alpha.0.len() });
        }
        if alpha.is_zero() {
            return Err(Error::ZeroRoot);
        }
        if !self.is_root(&alpha.0) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        let num = 2 * self.root_weight_product(&alpha.0, &beta.coords);
        let den = self.root_norm(&alpha.0);
        Ok(SmallRational::new(num, den))
    }

    /// `s_i(β) = β − ⟨β, α_i^∨⟩ α_i` for a 1-based node `i`.
    pub fn simple_reflection(&self, node: usize, beta: &WeightVector) -> Result<WeightVector> {
        self.check_weight(beta)?;
        if node == 0 || node > self.rank() {
            return Err(Error::NodeOutOfRange { index: node, rank: self.rank() });
        }
        let mut out = beta.clone();
        self.reflect_in_place(node - 1, &mut out.coords);
        Ok(out)
    }

    /// 0-based reflection on raw weight coordinates.
    pub(crate) fn reflect_in_place(&self, i: usize, coords: &mut [i64]) {
        let a = coords[i];
        if a != 0 {
            for (k, c) in coords.iter_mut().enumerate() {
                *c -= a * self.cartan[k][i];
            }
        }
    }

    /// Reflect a root (simple-root coordinates) by a 0-based simple reflection.
    pub fn reflect_root(&self, i: usize, coeffs: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * coeffs[j]).sum();
        let mut out = coeffs.to_vec();
        out[i] -= pairing;
        out
    }

    /// The dominant element of the Weyl orbit of `coords`.
    pub fn dominant_coords(&self, coords: &[i64]) -> Vec<i64> {
        let mut v = coords.to_vec();
        while let Some(i) = v.iter().position(|&a| a < 0) {
            self.reflect_in_place(i, &mut v);
        }
        v
    }

    pub fn dominant_representative(&self, beta: &WeightVector) -> WeightVector {
        WeightVector::new(self.dominant_coords(&beta.coords), beta.charge)
    }

    /// Orbit of `β` under the Weyl group, by closure under simple reflections.
    pub fn weyl_orbit(&self, beta: &WeightVector) -> Result<BTreeSet<WeightVector>> {
        self.check_weight(beta)?;
        Ok(self
            .orbit_coords(&beta.coords)
            .into_iter()
            .map(|c| WeightVector::new(c, beta.charge))
            .collect())
    }

    pub(crate) fn orbit_coords(&self, coords: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(coords.to_vec());
        queue.push_back(coords.to_vec());
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                if v[i] == 0 {
                    continue;
                }
                let mut w = v.clone();
                self.reflect_in_place(i, &mut w);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
            out.push(v);
        }
        out
    }

    /// Neither `α + β` nor `α − β` is a root (and `α ≠ ±β`).
    pub fn strongly_orthogonal(&self, a: &Root, b: &Root) -> bool {
        let sum: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        let diff: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect();
        sum.iter().any(|&x| x != 0)
            && diff.iter().any(|&x| x != 0)
            && !self.is_root(&sum)
            && !self.is_root(&diff)
    }

    /// 1-based nodes whose coefficient in the highest root is one.
    pub fn special_nodes(&self) -> Vec<usize> {
        let h = self.highest_root();
        let (off, r) = (self.offsets[0], self.components[0].rank);
        (off..off + r).filter(|&i| h.0[i] == 1).map(|i| i + 1).collect()
    }

    /// Positive roots whose coefficient at the (1-based) node is one.
    pub fn noncompact_roots(&self, node: usize) -> Vec<&Root> {
        self.positive_roots.iter().filter(|r| r.0[node - 1] == 1).collect()
    }

    /// Greedy cascade of strongly orthogonal non-compact positive roots:
    /// take the highest remaining candidate, discard everything not strongly
    /// orthogonal to it, repeat. The first element is the highest root.
    pub fn strongly_orthogonal_cascade(&self, special_node: usize) -> Result<Vec<Root>> {
        if special_node == 0 || special_node > self.rank() {
            return Err(Error::NodeOutOfRange { index: special_node, rank: self.rank() });
        }
        let family = self.family().map_or_else(|| self.to_string(), |f| f.to_string());
        if self.components.len() != 1 || !self.special_nodes().contains(&special_node) {
            return Err(Error::NonSpecialNode { family, node: special_node });
        }
        let mut candidates: Vec<&Root> = self.noncompact_roots(special_node);
        let mut chosen: Vec<Root> = Vec::new();
        while !candidates.is_empty() {
            let best = candidates
                .iter()
                .copied()
                .max_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)))
                .expect("non-empty")
                .clone();
            candidates.retain(|r| self.strongly_orthogonal(r, &best));
            chosen.push(best);
        }
        Ok(chosen)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

impl Eq for RootSystem {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn one() -> SmallRational {
        SmallRational::one()
    }

    fn rs(f: Family, r: usize) -> RootSystem {
        build_root_system(f, r).unwrap()
    }

    #[test]
    fn a2_has_three_positive_roots() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.highest_root(), &Root(vec![1, 1]));
    }

    #[test]
    fn exceptional_highest_roots() {
        assert_eq!(rs(Family::E6, 6).highest_root(), &Root(vec![1, 2, 2, 3, 2, 1]));
        assert_eq!(rs(Family::E7, 7).highest_root(), &Root(vec![2, 2, 3, 4, 3, 2, 1]));
    }

    #[test]
    fn positive_root_counts() {
        for l in 1..=6 {
            assert_eq!(rs(Family::A, l).positive_roots().len(), l * (l + 1) / 2);
        }
        for l in 2..=6 {
            assert_eq!(rs(Family::B, l).positive_roots().len(), l * l);
            assert_eq!(rs(Family::C, l).positive_roots().len(), l * l);
        }
        for l in 3..=7 {
            assert_eq!(rs(Family::D, l).positive_roots().len(), l * (l - 1));
        }
        assert_eq!(rs(Family::E6, 6).positive_roots().len(), 36);
        assert_eq!(rs(Family::E7, 7).positive_roots().len(), 63);
    }

    #[test]
    fn classical_highest_roots() {
        assert_eq!(rs(Family::B, 4).highest_root(), &Root(vec![1, 2, 2, 2]));
        assert_eq!(rs(Family::C, 4).highest_root(), &Root(vec![2, 2, 2, 1]));
        assert_eq!(rs(Family::D, 5).highest_root(), &Root(vec![1, 2, 2, 1, 1]));
    }

    #[test]
    fn invalid_family_rank_rejected() {
        assert!(build_root_system(Family::E6, 5).is_err());
        assert!(build_root_system(Family::E7, 6).is_err());
        assert!(build_root_system(Family::B, 1).is_err());
        assert!(build_root_system(Family::C, 1).is_err());
        assert!(build_root_system(Family::D, 2).is_err());
        assert!(build_root_system(Family::A, 0).is_err());
        assert!("F4".parse::<Family>().is_err());
    }

    #[test]
    fn coroot_pairings_match_exceptional_formulas() {
        let e6 = rs(Family::E6, 6);
        let top = e6.highest_root().clone();
        let w1 = WeightVector::fundamental(6, 1).unwrap();
        assert_eq!(e6.coroot_pairing(&w1, &top).unwrap(), one());
        let beta = WeightVector::new(vec![3, -1, 2, 5, -4, 7], 0);
        let expected = 3 + 2 * -1 + 2 * 2 + 3 * 5 + 2 * -4 + 7;
        assert_eq!(e6.coroot_pairing(&beta, &top).unwrap(), SmallRational::from_integer(expected));

        let e7 = rs(Family::E7, 7);
        let a7 = Root(vec![0, 0, 0, 0, 0, 0, 1]);
        let beta = WeightVector::new(vec![1, -2, 3, 0, 4, -1, -3], 0);
        assert_eq!(e7.coroot_pairing(&beta, &a7).unwrap(), SmallRational::from_integer(-3));
        assert_eq!(e7.coroot_pairing(&beta, &Root(vec![0; 7])), Err(Error::ZeroRoot));
    }

    #[test]
    fn highest_root_pairs_to_two_with_itself() {
        for (f, r) in [(Family::A, 4), (Family::B, 3), (Family::C, 3), (Family::D, 5), (Family::E6, 6), (Family::E7, 7)] {
            let s = rs(f, r);
            let h = s.highest_root().clone();
            let hw = WeightVector::new(s.root_coords_to_weight(&h.0), 0);
            assert_eq!(s.coroot_pairing(&hw, &h).unwrap(), SmallRational::from_integer(2));
        }
    }

    #[test]
    fn orbit_sizes() {
        for l in 1..=5 {
            let a = rs(Family::A, l);
            let w1 = WeightVector::fundamental(l, 1).unwrap();
            assert_eq!(a.weyl_orbit(&w1).unwrap().len(), l + 1);
        }
        let e6 = rs(Family::E6, 6);
        assert_eq!(e6.weyl_orbit(&WeightVector::fundamental(6, 1).unwrap()).unwrap().len(), 27);
        let e7 = rs(Family::E7, 7);
        assert_eq!(e7.weyl_orbit(&WeightVector::fundamental(7, 7).unwrap()).unwrap().len(), 56);
    }

    fn highest_root_orbit(s: &RootSystem) -> usize {
        let h = s.highest_root();
        s.weyl_orbit(&WeightVector::new(s.root_coords_to_weight(&h.0), 0)).unwrap().len()
    }

    #[test]
    fn highest_root_orbit_is_the_long_roots() {
        for l in 2..=5 {
            assert_eq!(highest_root_orbit(&rs(Family::B, l)), 2 * l * (l - 1));
            assert_eq!(highest_root_orbit(&rs(Family::C, l)), 2 * l);
        }
        for l in 3..=6 {
            assert_eq!(highest_root_orbit(&rs(Family::D, l)), 2 * l * (l - 1));
        }
        assert_eq!(highest_root_orbit(&rs(Family::E6, 6)), 72);
        assert_eq!(highest_root_orbit(&rs(Family::E7, 7)), 126);
    }

    // Oracle: in ε-coordinates the A_{l−1} roots are ε_i − ε_j; the orbit of
    // ε_1 − ε_l is every one of them.
    #[test]
    fn orbit_of_highest_root_in_type_a_is_all_roots() {
        for l in 2..=6usize {
            let s = rs(Family::A, l - 1);
            let mut expected = BTreeSet::new();
            for i in 0..l {
                for j in 0..l {
                    if i == j {
                        continue;
                    }
                    // ε_i − ε_j in weight coords: a_k = δ_{ik} − δ_{i,k+1} − δ_{jk} + δ_{j,k+1}
                    let coords: Vec<i64> = (0..l - 1)
                        .map(|k| {
                            let e = |t: usize| -> i64 { (t == k) as i64 - (t == k + 1) as i64 };
                            e(i) - e(j)
                        })
                        .collect();
                    expected.insert(WeightVector::new(coords, 0));
                }
            }
            let h = s.highest_root();
            let orbit = s.weyl_orbit(&WeightVector::new(s.root_coords_to_weight(&h.0), 0)).unwrap();
            assert_eq!(orbit.len(), l * (l - 1));
            assert_eq!(orbit, expected);
        }
    }

    #[test]
    fn reflections_fix_orthogonal_fundamentals() {
        let s = rs(Family::D, 5);
        for i in 1..=5 {
            for j in 1..=5 {
                let w = WeightVector::fundamental(5, j).unwrap();
                let r = s.simple_reflection(i, &w).unwrap();
                if i == j {
                    let alpha = s.root_coords_to_weight(&{
                        let mut v = vec![0; 5];
                        v[i - 1] = 1;
                        v
                    });
                    let expect: Vec<i64> = w.coords.iter().zip(&alpha).map(|(a, b)| a - b).collect();
                    assert_eq!(r.coords, expect);
                } else {
                    assert_eq!(r, w);
                }
            }
        }
        assert!(s.simple_reflection(0, &WeightVector::zero(5)).is_err());
        assert!(s.simple_reflection(6, &WeightVector::zero(5)).is_err());
    }

    #[test]
    fn e7_cascade_matches_the_known_strongly_orthogonal_set() {
        let e7 = rs(Family::E7, 7);
        let psi = e7.strongly_orthogonal_cascade(7).unwrap();
        assert_eq!(
            psi,
            vec![
                Root(vec![2, 2, 3, 4, 3, 2, 1]),
                Root(vec![0, 1, 1, 2, 2, 2, 1]),
                Root(vec![0, 0, 0, 0, 0, 0, 1]),
            ]
        );
    }

    #[test]
    fn cascade_lengths_equal_domain_rank() {
        assert_eq!(rs(Family::B, 4).strongly_orthogonal_cascade(1).unwrap().len(), 2);
        assert_eq!(rs(Family::D, 5).strongly_orthogonal_cascade(1).unwrap().len(), 2);
        assert_eq!(rs(Family::E6, 6).strongly_orthogonal_cascade(1).unwrap().len(), 2);
        assert_eq!(rs(Family::C, 4).strongly_orthogonal_cascade(4).unwrap().len(), 4);
        assert_eq!(rs(Family::D, 6).strongly_orthogonal_cascade(6).unwrap().len(), 3);
        assert_eq!(rs(Family::A, 6).strongly_orthogonal_cascade(3).unwrap().len(), 3);
        assert!(matches!(
            rs(Family::B, 4).strongly_orthogonal_cascade(2),
            Err(Error::NonSpecialNode { .. })
        ));
    }

    // Oracle: brute force over all pairs of non-compact positive roots of A3
    // with node 2, keeping pairs that are strongly orthogonal by definition.
    #[test]
    fn a3_node2_cascade_is_a_maximal_strongly_orthogonal_pair() {
        let s = rs(Family::A, 3);
        let nc: Vec<Root> = s.noncompact_roots(2).into_iter().cloned().collect();
        let mut best = 0;
        for a in &nc {
            for b in &nc {
                if a < b && s.strongly_orthogonal(a, b) {
                    best = 2;
                }
            }
        }
        let psi = s.strongly_orthogonal_cascade(2).unwrap();
        assert_eq!(psi.len(), best);
        assert!(s.strongly_orthogonal(&psi[0], &psi[1]));
        assert!(psi.iter().all(|r| r.0[1] == 1));
        assert_eq!(psi[0], s.highest_root().clone());
    }

    #[test]
    fn positive_roots_have_nonnegative_coordinates() {
        for (f, r) in [(Family::B, 5), (Family::C, 5), (Family::E7, 7)] {
            assert!(rs(f, r).positive_roots().iter().all(|x| x.0.iter().all(|&c| c >= 0)));
        }
    }

    #[test]
    fn product_systems_are_block_diagonal() {
        let s = RootSystem::product(&[
            SimpleType::new(Family::A, 1).unwrap(),
            SimpleType::new(Family::A, 2).unwrap(),
        ])
        .unwrap();
        assert_eq!(s.rank(), 3);
        assert_eq!(s.positive_roots().len(), 4);
        assert_eq!(s.highest_roots().len(), 2);
        assert_eq!(s.to_string(), "A1+A2");
        let trivial = RootSystem::product(&[]).unwrap();
        assert_eq!(trivial.rank(), 0);
    }

    fn arb_weight(rank: usize) -> impl Strategy<Value = WeightVector> {
        (proptest::collection::vec(-4i64..=4, rank), -3i64..=3)
            .prop_map(|(c, q)| WeightVector::new(c, q))
    }

    proptest! {
        #[test]
        fn reflections_are_involutions(beta in arb_weight(6), node in 1usize..=6) {
            let e6 = rs(Family::E6, 6);
            let once = e6.simple_reflection(node, &beta).unwrap();
            prop_assert_eq!(once.charge, beta.charge);
            prop_assert_eq!(e6.simple_reflection(node, &once).unwrap(), beta.clone());
            prop_assert_eq!(once == beta, beta.coords[node - 1] == 0);
        }

        #[test]
        fn pairing_is_weyl_invariant(beta in arb_weight(5), node in 1usize..=5, r in 0usize..20) {
            let s = rs(Family::B, 5);
            let alpha = s.positive_roots()[r].clone();
            let sb = s.simple_reflection(node, &beta).unwrap();
            let sa = Root(s.reflect_root(node - 1, &alpha.0));
            prop_assert_eq!(s.coroot_pairing(&sb, &sa).unwrap(), s.coroot_pairing(&beta, &alpha).unwrap());
        }

        #[test]
        fn orbits_are_closed_and_keep_charge(beta in arb_weight(4)) {
            let s = rs(Family::C, 4);
            let orbit = s.weyl_orbit(&beta).unwrap();
            prop_assert!(orbit.contains(&beta));
            for w in &orbit {
                prop_assert_eq!(w.charge, beta.charge);
                for i in 1..=4 {
                    prop_assert!(orbit.contains(&s.simple_reflection(i, w).unwrap()));
                }
            }
        }
    }
}
