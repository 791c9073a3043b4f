//! Characters of finite-dimensional irreducible representations.
//!
//! Multiplicities of dominant weights come from Freudenthal's recursion,
//! ordered by depth below the highest weight; full weight systems are
//! expanded by Weyl orbits. Symmetric and exterior powers act on weight
//! multisets through Adams operations and Newton's identities, and
//! [`decompose`] peels off irreducibles from the top.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, WeightVector};

/// Highest weight (dominant) with its central charge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub highest_weight: WeightVector,
}

impl IrrepLabel {
    pub fn new(coords: Vec<i64>, charge: i64) -> Result<Self> {
        Self::from_weight(WeightVector::new(coords, charge))
    }

    pub fn from_weight(w: WeightVector) -> Result<Self> {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(IrrepLabel { highest_weight: w })
    }

    pub fn trivial(rank: usize) -> Self {
        IrrepLabel { highest_weight: WeightVector::zero(rank) }
    }

    pub fn coords(&self) -> &[i64] {
        &self.highest_weight.coords
    }

    pub fn charge(&self) -> i64 {
        self.highest_weight.charge
    }

    pub fn rank(&self) -> usize {
        self.highest_weight.rank()
    }

    pub fn with_charge(&self, charge: i64) -> Self {
        IrrepLabel { highest_weight: self.highest_weight.clone().with_charge(charge) }
    }

    pub fn is_trivial(&self) -> bool {
        self.coords().iter().all(|&a| a == 0)
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(i64::to_string).collect();
        if self.charge() != 0 {
            write!(f, "ℂ({})⊗", self.charge())?;
        }
        write!(f, "Γ_{{{}}}", parts.join(","))
    }
}

/// A (possibly virtual) character: weight ↦ integer multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    rank: usize,
    entries: HashMap<WeightVector, i64>,
}

impl WeightMultiset {
    pub fn new(rank: usize) -> Self {
        WeightMultiset { rank, entries: HashMap::new() }
    }

    /// The character `{0 ↦ 1}` of the trivial representation.
    pub fn unit(rank: usize) -> Self {
        let mut m = Self::new(rank);
        m.add(WeightVector::zero(rank), 1);
        m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add(&mut self, w: WeightVector, mult: i64) {
        debug_assert_eq!(w.rank(), self.rank);
        if mult == 0 {
            return;
        }
        match self.entries.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(mult);
            }
        }
    }

    pub fn get(&self, w: &WeightVector) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ multiplicities: the dimension of the represented (virtual) module.
    pub fn mass(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, &i64)> {
        self.entries.iter()
    }

    /// Entries in the lexicographic `(charge, coords)` order.
    pub fn sorted(&self) -> BTreeMap<WeightVector, i64> {
        self.entries.iter().map(|(k, &v)| (k.clone(), v)).collect()
    }

    pub fn is_true_character(&self) -> bool {
        self.entries.values().all(|&m| m > 0)
    }

    /// Character of the tensor product.
    pub fn convolve(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out: HashMap<WeightVector, i64> = HashMap::new();
        for (a, &ma) in &self.entries {
            for (b, &mb) in &other.entries {
                *out.entry(a.add(b)).or_insert(0) += ma * mb;
            }
        }
        out.retain(|_, m| *m != 0);
        WeightMultiset { rank: self.rank, entries: out }
    }

    /// Adams operation `ψ^k`: every weight (and charge) scaled by `k`.
    pub fn adams(&self, k: i64) -> WeightMultiset {
        WeightMultiset {
            rank: self.rank,
            entries: self.entries.iter().map(|(w, &m)| (w.scaled(k), m)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &WeightMultiset, c: i64) {
        for (w, &m) in &other.entries {
            *self.entries.entry(w.clone()).or_insert(0) += c * m;
        }
        self.entries.retain(|_, m| *m != 0);
    }

    fn divide_exact(mut self, k: i64) -> WeightMultiset {
        for (w, m) in self.entries.iter_mut() {
            assert!(*m % k == 0, "Newton identity produced a non-integral multiplicity at {w}");
            *m /= k;
        }
        self
    }

    /// Weyl invariance: `m(s_i w) = m(w)` for every weight and simple reflection.
    pub fn check_weyl_invariant(&self, rs: &RootSystem) -> Result<()> {
        if rs.rank() != self.rank {
            return Err(Error::RankMismatch { expected: rs.rank(), got: self.rank });
        }
        for (w, &m) in &self.entries {
            for i in 0..rs.rank() {
                if w.coords[i] == 0 {
                    continue;
                }
                let mut r = w.clone();
                rs.reflect_in_place(i, &mut r.coords);
                if self.get(&r) != m {
                    return Err(Error::NotWeylInvariant(w.to_string()));
                }
            }
        }
        Ok(())
    }

    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        self.check_weyl_invariant(rs).is_ok()
    }
}

impl FromIterator<(WeightVector, i64)> for WeightMultiset {
    /// Panics on an empty iterator since the rank cannot be inferred.
    fn from_iter<I: IntoIterator<Item = (WeightVector, i64)>>(iter: I) -> Self {
        let mut it = iter.into_iter().peekable();
        let rank = it.peek().map(|(w, _)| w.rank()).expect("rank needs at least one weight");
        let mut m = WeightMultiset::new(rank);
        for (w, k) in it {
            *m.entries.entry(w).or_insert(0) += k;
        }
        m.entries.retain(|_, v| *v != 0);
        m
    }
}

/// Irreducible constituents with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    components: BTreeMap<IrrepLabel, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: IrrepLabel) -> Self {
        let mut d = Self::new();
        d.insert(label, 1);
        d
    }

    pub fn insert(&mut self, label: IrrepLabel, mult: u64) {
        if mult > 0 {
            *self.components.entry(label).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> u64 {
        self.components.get(label).copied().unwrap_or(0)
    }

    pub fn contains(&self, label: &IrrepLabel) -> bool {
        self.multiplicity(label) > 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IrrepLabel, u64)> {
        self.components.iter().map(|(k, &v)| (k, v))
    }

    pub fn labels(&self) -> impl Iterator<Item = &IrrepLabel> {
        self.components.keys()
    }

    /// Number of distinct irreducibles.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Σ multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.components.values().sum()
    }

    /// Multiset union.
    pub fn sum(&self, other: &Decomposition) -> Decomposition {
        let mut out = self.clone();
        for (l, m) in other.iter() {
            out.insert(l.clone(), m);
        }
        out
    }

    /// Multiset difference; `None` unless `other ⊆ self`.
    pub fn checked_difference(&self, other: &Decomposition) -> Option<Decomposition> {
        let mut out = self.clone();
        for (l, m) in other.iter() {
            let have = out.components.get_mut(l)?;
            if *have < m {
                return None;
            }
            *have -= m;
            if *have == 0 {
                out.components.remove(l);
            }
        }
        Some(out)
    }

    /// `true` when every constituent of `self` occurs in `other` at least as often.
    pub fn is_submultiset_of(&self, other: &Decomposition) -> bool {
        self.iter().all(|(l, m)| other.multiplicity(l) >= m)
    }

    pub fn dimension(&self, rs: &RootSystem) -> Result<u128> {
        self.iter().try_fold(0u128, |acc, (l, m)| Ok(acc + m as u128 * weyl_dimension(rs, l)?))
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(l, &m)| if m == 1 { l.to_string() } else { format!("{m}·{l}") })
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

impl FromIterator<IrrepLabel> for Decomposition {
    fn from_iter<I: IntoIterator<Item = IrrepLabel>>(iter: I) -> Self {
        let mut d = Decomposition::new();
        for l in iter {
            d.insert(l, 1);
        }
        d
    }
}

/// Dominant weights of one irreducible with their multiplicities, in order
/// of increasing depth below the highest weight.
#[derive(Clone, Debug)]
pub struct DominantCharacter {
    weights: Vec<(Vec<i64>, i64)>,
}

impl DominantCharacter {
    pub fn weights(&self) -> &[(Vec<i64>, i64)] {
        &self.weights
    }
}

/// Character computations over one root system with a shared memo of
/// dominant characters. The memo is behind a mutex, so a context can be
/// shared between threads.
pub struct Characters<'a> {
    rs: &'a RootSystem,
    cache: Mutex<HashMap<Vec<i64>, Arc<DominantCharacter>>>,
}

impl<'a> Characters<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Characters { rs, cache: Mutex::new(HashMap::new()) }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    fn check_label(&self, label: &IrrepLabel) -> Result<()> {
        if label.rank() != self.rs.rank() {
            return Err(Error::RankMismatch { expected: self.rs.rank(), got: label.rank() });
        }
        if !label.highest_weight.is_dominant() {
            return Err(Error::NotDominant(label.to_string()));
        }
        Ok(())
    }

    pub fn dominant_character(&self, label: &IrrepLabel) -> Result<Arc<DominantCharacter>> {
        self.check_label(label)?;
        let key = label.coords().to_vec();
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let computed = Arc::new(freudenthal(self.rs, &key));
        let mut cache = self.cache.lock().expect("cache poisoned");
        Ok(cache.entry(key).or_insert(computed).clone())
    }

    pub fn weight_system(&self, label: &IrrepLabel) -> Result<WeightMultiset> {
        let dom = self.dominant_character(label)?;
        let mut out = WeightMultiset::new(self.rs.rank());
        for (mu, m) in dom.weights() {
            for w in self.rs.orbit_coords(mu) {
                out.entries.insert(WeightVector::new(w, label.charge()), *m);
            }
        }
        Ok(out)
    }

    pub fn character(&self, d: &Decomposition) -> Result<WeightMultiset> {
        let mut out = WeightMultiset::new(self.rs.rank());
        for (l, m) in d.iter() {
            out.add_scaled(&self.weight_system(l)?, m as i64);
        }
        Ok(out)
    }

    /// Peels irreducibles off a Weyl-invariant character, highest first.
    pub fn decompose(&self, ws: &WeightMultiset) -> Result<Decomposition> {
        ws.check_weyl_invariant(self.rs)?;
        let mut dominant: HashMap<WeightVector, i64> = ws
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .map(|(w, &m)| (w.clone(), m))
            .collect();
        let mut out = Decomposition::new();
        loop {
            let top = dominant
                .iter()
                .filter(|(_, &m)| m != 0)
                .max_by(|(a, _), (b, _)| {
                    self.rs
                        .weight_height(&a.coords)
                        .cmp(&self.rs.weight_height(&b.coords))
                        .then_with(|| a.cmp(b))
                })
                .map(|(w, &m)| (w.clone(), m));
            let Some((w, m)) = top else { break };
            if m < 0 {
                return Err(Error::NotACharacter { weight: w.to_string(), multiplicity: m });
            }
            let label = IrrepLabel::from_weight(w.clone())?;
            let dom = self.dominant_character(&label)?;
            for (mu, k) in dom.weights() {
                let key = WeightVector::new(mu.clone(), w.charge);
                let slot = dominant.entry(key).or_insert(0);
                *slot -= m * k;
            }
            dominant.retain(|_, v| *v != 0);
            out.insert(label, m as u64);
        }
        Ok(out)
    }

    pub fn tensor_product(&self, a: &IrrepLabel, b: &IrrepLabel) -> Result<Decomposition> {
        let wa = self.weight_system(a)?;
        let wb = self.weight_system(b)?;
        self.decompose(&wa.convolve(&wb))
    }

    /// Decomposition of `A ⊗ B` for two decompositions.
    pub fn tensor_decompositions(&self, a: &Decomposition, b: &Decomposition) -> Result<Decomposition> {
        let ca = self.character(a)?;
        let cb = self.character(b)?;
        self.decompose(&ca.convolve(&cb))
    }
}

/// Freudenthal's recursion restricted to dominant weights; lookups of
/// non-dominant weights go through their dominant Weyl conjugate.
fn freudenthal(rs: &RootSystem, lambda: &[i64]) -> DominantCharacter {
    let n = rs.rank();
    let roots = rs.positive_roots();
    let roots_w = rs.positive_roots_as_weights();

    // dominant weights below λ, each with its depth vector c (λ − μ = Σ c_j α_j)
    let mut depth: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut order: Vec<Vec<i64>> = vec![lambda.to_vec()];
    depth.insert(lambda.to_vec(), vec![0; n]);
    let mut head = 0;
    while head < order.len() {
        let mu = order[head].clone();
        let c = depth[&mu].clone();
        head += 1;
        for (alpha, aw) in roots.iter().zip(roots_w) {
            let nu: Vec<i64> = mu.iter().zip(aw).map(|(x, y)| x - y).collect();
            if nu.iter().all(|&x| x >= 0) && !depth.contains_key(&nu) {
                let cn: Vec<i64> = c.iter().zip(&alpha.0).map(|(x, y)| x + y).collect();
                depth.insert(nu.clone(), cn);
                order.push(nu);
            }
        }
    }
    order.sort_by_key(|mu| depth[mu].iter().sum::<i64>());

    let norms: Vec<i64> = roots.iter().map(|a| rs.root_norm(&a.0)).collect();
    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut weights = Vec::with_capacity(order.len());
    for mu in order {
        let m = if mu == lambda {
            1
        } else {
            let c = &depth[&mu];
            let shifted: Vec<i64> = lambda.iter().zip(&mu).map(|(l, m)| l + m + 2).collect();
            let denom = rs.root_weight_product(c, &shifted);
            let mut num = 0i64;
            for ((alpha, aw), norm) in roots.iter().zip(roots_w).zip(&norms) {
                let base = rs.root_weight_product(&alpha.0, &mu);
                let mut nu = mu.clone();
                let mut k = 1;
                loop {
                    for (x, y) in nu.iter_mut().zip(aw) {
                        *x += y;
                    }
                    let m_nu = mult.get(&rs.dominant_coords(&nu)).copied().unwrap_or(0);
                    if m_nu == 0 {
                        break;
                    }
                    num += (base + k * norm) * m_nu;
                    k += 1;
                }
            }
            num *= 2;
            assert!(denom > 0 && num % denom == 0, "Freudenthal recursion is not integral at {mu:?}");
            num / denom
        };
        mult.insert(mu.clone(), m);
        weights.push((mu, m));
    }
    DominantCharacter { weights }
}

/// `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(rs: &RootSystem, label: &IrrepLabel) -> Result<u128> {
    if label.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), got: label.rank() });
    }
    if !label.highest_weight.is_dominant() {
        return Err(Error::NotDominant(label.to_string()));
    }
    let shifted: Vec<i64> = label.coords().iter().map(|a| a + 1).collect();
    let ones = vec![1i64; rs.rank()];
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in rs.positive_roots() {
        num *= rs.root_weight_product(&alpha.0, &shifted);
        den *= rs.root_weight_product(&alpha.0, &ones);
    }
    let (q, r) = (&num / &den, &num % &den);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!("Weyl dimension of {label} is not integral")));
    }
    q.to_u128().ok_or_else(|| Error::GuardExceeded(format!("dimension of {label} overflows u128")))
}

pub fn weight_system(rs: &RootSystem, label: &IrrepLabel) -> Result<WeightMultiset> {
    Characters::new(rs).weight_system(label)
}

pub fn decompose(rs: &RootSystem, ws: &WeightMultiset) -> Result<Decomposition> {
    Characters::new(rs).decompose(ws)
}

pub fn tensor_product(rs: &RootSystem, a: &IrrepLabel, b: &IrrepLabel) -> Result<Decomposition> {
    Characters::new(rs).tensor_product(a, b)
}

/// `S^k` via `k·h_k = Σ_{i=1..k} ψ^i(χ)·h_{k−i}`.
pub fn symmetric_power(ws: &WeightMultiset, k: usize) -> WeightMultiset {
    newton_power(ws, k, false)
}

/// `Λ^k` via `k·e_k = Σ_{i=1..k} (−1)^{i−1} ψ^i(χ)·e_{k−i}`. Empty for `k > dim`.
pub fn exterior_power(ws: &WeightMultiset, k: usize) -> WeightMultiset {
    newton_power(ws, k, true)
}

fn newton_power(ws: &WeightMultiset, k: usize, alternating: bool) -> WeightMultiset {
    let adams: Vec<WeightMultiset> = (1..=k).map(|i| ws.adams(i as i64)).collect();
    let mut powers = vec![WeightMultiset::unit(ws.rank())];
    for j in 1..=k {
        let mut acc = WeightMultiset::new(ws.rank());
        for i in 1..=j {
            let sign = if alternating && i % 2 == 0 { -1 } else { 1 };
            acc.add_scaled(&adams[i - 1].convolve(&powers[j - i]), sign);
        }
        powers.push(acc.divide_exact(j as i64));
    }
    powers.pop().expect("at least the unit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family};
    use proptest::prelude::*;

    fn label(c: &[i64], q: i64) -> IrrepLabel {
        IrrepLabel::new(c.to_vec(), q).unwrap()
    }

    fn binomial(n: u128, k: u128) -> u128 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn weyl_dimensions() {
        let e6 = build_root_system(Family::E6, 6).unwrap();
        assert_eq!(weyl_dimension(&e6, &label(&[1, 0, 0, 0, 0, 0], 0)).unwrap(), 27);
        assert_eq!(weyl_dimension(&e6, &label(&[0, 1, 0, 0, 0, 0], 0)).unwrap(), 78);
        let e7 = build_root_system(Family::E7, 7).unwrap();
        assert_eq!(weyl_dimension(&e7, &label(&[0, 0, 0, 0, 0, 0, 1], 0)).unwrap(), 56);
        assert_eq!(weyl_dimension(&e7, &label(&[1, 0, 0, 0, 0, 0, 0], 0)).unwrap(), 133);
        for (p, q) in [(1, 1), (2, 2), (2, 3), (3, 4), (4, 4)] {
            let a = build_root_system(Family::A, p + q - 1).unwrap();
            let mut c = vec![0; p + q - 1];
            c[p - 1] = 1;
            assert_eq!(weyl_dimension(&a, &label(&c, 0)).unwrap(), binomial((p + q) as u128, p as u128));
        }
        assert_eq!(weyl_dimension(&e6, &IrrepLabel::trivial(6)).unwrap(), 1);
        let bad = IrrepLabel { highest_weight: WeightVector::new(vec![-1, 0, 0, 0, 0, 0], 0) };
        assert!(weyl_dimension(&e6, &bad).is_err());
    }

    #[test]
    fn trivial_weight_system() {
        let d5 = build_root_system(Family::D, 5).unwrap();
        let ws = weight_system(&d5, &IrrepLabel::trivial(5)).unwrap();
        assert_eq!(ws.sorted().into_iter().collect::<Vec<_>>(), vec![(WeightVector::zero(5), 1)]);
    }

    #[test]
    fn adjoint_zero_weight_has_rank_multiplicity() {
        let e6 = build_root_system(Family::E6, 6).unwrap();
        let ws = weight_system(&e6, &label(&[0, 1, 0, 0, 0, 0], 0)).unwrap();
        assert_eq!(ws.get(&WeightVector::zero(6)), 6);
        assert_eq!(ws.mass(), 78);
        let b3 = build_root_system(Family::B, 3).unwrap();
        let ws = weight_system(&b3, &label(&[0, 1, 0], 0)).unwrap();
        assert_eq!(ws.get(&WeightVector::zero(3)), 3);
        assert_eq!(ws.mass(), 21);
    }

    #[test]
    fn freudenthal_mass_equals_weyl_dimension() {
        let cases: Vec<(Family, usize, Vec<i64>)> = vec![
            (Family::A, 3, vec![2, 1, 1]),
            (Family::B, 3, vec![1, 1, 1]),
            (Family::C, 3, vec![2, 0, 1]),
            (Family::D, 4, vec![1, 1, 0, 1]),
            (Family::D, 5, vec![0, 0, 1, 1, 0]),
            (Family::E6, 6, vec![2, 0, 0, 0, 0, 1]),
        ];
        for (f, r, c) in cases {
            let rs = build_root_system(f, r).unwrap();
            let l = label(&c, 3);
            let ws = weight_system(&rs, &l).unwrap();
            assert_eq!(ws.mass() as u128, weyl_dimension(&rs, &l).unwrap(), "{f}{r} {c:?}");
            assert_eq!(ws.get(&l.highest_weight), 1);
            assert!(ws.is_weyl_invariant(&rs));
            assert!(ws.iter().all(|(w, _)| w.charge == 3));
        }
    }

    #[test]
    fn decompose_round_trips_irreducibles() {
        let c3 = build_root_system(Family::C, 3).unwrap();
        for c in [[1, 0, 0], [0, 1, 1], [2, 1, 0], [0, 0, 2]] {
            let l = label(&c, -2);
            let d = decompose(&c3, &weight_system(&c3, &l).unwrap()).unwrap();
            assert_eq!(d, Decomposition::singleton(l));
        }
    }

    #[test]
    fn decompose_rejects_virtual_and_non_invariant_characters() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        let mut v = weight_system(&a1, &label(&[2], 0)).unwrap();
        v.add_scaled(&weight_system(&a1, &label(&[0], 0)).unwrap(), -2);
        match decompose(&a1, &v) {
            Err(Error::NotACharacter { weight, multiplicity }) => {
                assert_eq!(weight, "(0)");
                assert_eq!(multiplicity, -2);
            }
            other => panic!("expected NotACharacter, got {other:?}"),
        }
        let mut skew = WeightMultiset::new(1);
        skew.add(WeightVector::new(vec![1], 0), 1);
        assert!(matches!(decompose(&a1, &skew), Err(Error::NotWeylInvariant(_))));
    }

    #[test]
    fn exceptional_symmetric_squares() {
        let e6 = build_root_system(Family::E6, 6).unwrap();
        let t = weight_system(&e6, &label(&[1, 0, 0, 0, 0, 0], 2)).unwrap();
        let d = decompose(&e6, &symmetric_power(&t, 2)).unwrap();
        let expect: Decomposition =
            [label(&[2, 0, 0, 0, 0, 0], 4), label(&[0, 0, 0, 0, 0, 1], 4)].into_iter().collect();
        assert_eq!(d, expect);

        let d5 = build_root_system(Family::D, 5).unwrap();
        let t = weight_system(&d5, &label(&[0, 0, 0, 1, 0], 2)).unwrap();
        let d = decompose(&d5, &symmetric_power(&t, 2)).unwrap();
        let expect: Decomposition =
            [label(&[0, 0, 0, 2, 0], 4), label(&[1, 0, 0, 0, 0], 4)].into_iter().collect();
        assert_eq!(d, expect);
        let d = decompose(&d5, &symmetric_power(&t, 3)).unwrap();
        let expect: Decomposition =
            [label(&[0, 0, 0, 3, 0], 6), label(&[1, 0, 0, 1, 0], 6)].into_iter().collect();
        assert_eq!(d, expect);
    }

    #[test]
    fn e6_tensor_product() {
        let e6 = build_root_system(Family::E6, 6).unwrap();
        let d = tensor_product(&e6, &label(&[2, 0, 0, 0, 0, 0], 4), &label(&[1, 0, 0, 0, 0, 0], 2))
            .unwrap();
        let expect: Decomposition = [
            label(&[3, 0, 0, 0, 0, 0], 6),
            label(&[1, 0, 0, 0, 0, 1], 6),
            label(&[1, 0, 1, 0, 0, 0], 6),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expect);
    }

    // Oracle: Clebsch–Gordan by hand, V_2 ⊗ V_2 = V_4 ⊕ V_2 ⊕ V_0.
    #[test]
    fn sl2_clebsch_gordan() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        let d = tensor_product(&a1, &label(&[2], 0), &label(&[2], 0)).unwrap();
        let expect: Decomposition = [label(&[4], 0), label(&[2], 0), label(&[0], 0)].into_iter().collect();
        assert_eq!(d, expect);
        let trivial = IrrepLabel::trivial(1);
        let d = tensor_product(&a1, &label(&[3], 1), &trivial).unwrap();
        assert_eq!(d, Decomposition::singleton(label(&[3], 1)));
    }

    #[test]
    fn small_powers() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        let std = weight_system(&a1, &label(&[1], 0)).unwrap();
        assert_eq!(symmetric_power(&std, 1), std);
        assert_eq!(exterior_power(&std, 1), std);
        let s2 = symmetric_power(&std, 2).sorted();
        let expect: BTreeMap<WeightVector, i64> =
            [-2, 0, 2].into_iter().map(|a| (WeightVector::new(vec![a], 0), 1)).collect();
        assert_eq!(s2, expect);
        assert_eq!(symmetric_power(&std, 0), WeightMultiset::unit(1));
        assert!(exterior_power(&std, 3).is_empty());
    }

    // Oracle: the six 2-subsets of the four standard weights of A3.
    #[test]
    fn exterior_square_of_a3_standard() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        let std = weight_system(&a3, &label(&[1, 0, 0], 0)).unwrap();
        let ws: Vec<WeightVector> = std.sorted().into_keys().collect();
        let mut pairs = WeightMultiset::new(3);
        for i in 0..ws.len() {
            for j in i + 1..ws.len() {
                pairs.add(ws[i].add(&ws[j]), 1);
            }
        }
        let l2 = exterior_power(&std, 2);
        assert_eq!(l2, pairs);
        assert_eq!(l2.mass(), 6);
        assert_eq!(l2, weight_system(&a3, &label(&[0, 1, 0], 0)).unwrap());
        let top = exterior_power(&std, 4);
        assert_eq!(top, WeightMultiset::unit(3));
    }

    fn arb_b3_label() -> impl Strategy<Value = IrrepLabel> {
        (proptest::collection::vec(0i64..=2, 3), -2i64..=2).prop_map(|(c, q)| label(&c, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn square_splits_into_symmetric_and_exterior(l in arb_b3_label()) {
            let b3 = build_root_system(Family::B, 3).unwrap();
            let ws = weight_system(&b3, &l).unwrap();
            let mut sum = symmetric_power(&ws, 2);
            sum.add_scaled(&exterior_power(&ws, 2), 1);
            prop_assert_eq!(sum, ws.convolve(&ws));
        }

        #[test]
        fn powers_are_weyl_invariant_with_binomial_mass(l in arb_b3_label(), k in 0usize..=3) {
            let b3 = build_root_system(Family::B, 3).unwrap();
            let ws = weight_system(&b3, &l).unwrap();
            let dim = ws.mass() as u128;
            let s = symmetric_power(&ws, k);
            prop_assert!(s.is_weyl_invariant(&b3));
            prop_assert_eq!(s.mass() as u128, binomial(dim + k as u128 - 1, k as u128));
            prop_assert!(s.iter().all(|(w, _)| w.charge == l.charge() * k as i64));
            let e = exterior_power(&ws, k);
            prop_assert!(e.is_weyl_invariant(&b3));
            prop_assert_eq!(e.mass() as u128, binomial(dim, k as u128));
        }

        #[test]
        fn tensor_dimensions_multiply(a in arb_b3_label(), b in arb_b3_label()) {
            let b3 = build_root_system(Family::B, 3).unwrap();
            let d = tensor_product(&b3, &a, &b).unwrap();
            prop_assert_eq!(
                d.dimension(&b3).unwrap(),
                weyl_dimension(&b3, &a).unwrap() * weyl_dimension(&b3, &b).unwrap()
            );
            prop_assert!(d.labels().all(|l| l.charge() == a.charge() + b.charge()));
        }
    }
}
