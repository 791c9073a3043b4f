//! Partition combinatorics for Schur functors of `GL(m)`.
//!
//! Covers conjugation, hook-content dimensions, the two Pieri rules, a
//! brute-force Littlewood–Richardson enumerator, and the closed-form
//! decompositions of `S^k(V ⊗ W)`, `S^k(S²V)` and `S^k(Λ²V)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Boxes allowed in a Littlewood–Richardson enumeration.
pub const LR_BOX_GUARD: usize = 20;

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the zero partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; an increase anywhere is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Inconsistent(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 { Self::empty() } else { Partition(vec![k]) }
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    /// `(a^r)`.
    pub fn rectangle(a: usize, r: usize) -> Self {
        if a == 0 { Self::empty() } else { Partition(vec![a; r]) }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.rows() <= self.rows() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn all_parts_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Every part doubled.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }

    /// All partitions of `n` with at most `max_rows` rows, in decreasing
    /// lexicographic order.
    pub fn all(n: usize, max_rows: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if rows_left == 0 {
                return;
            }
            for first in (1..=cap.min(rest)).rev() {
                cur.push(first);
                go(rest - first, first, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Inconsistent(format!("bad partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// `dim 𝕊_λ(ℂ^m) = Π_boxes (m + content) / hook`.
pub fn schur_dimension(lambda: &Partition, m: usize) -> u128 {
    if lambda.rows() > m {
        return 0;
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            num *= m as i64 + j as i64 - i as i64;
            den *= (row - j) + (conj.part(j) - i) - 1;
        }
    }
    debug_assert!((&num % &den).is_zero());
    (num / den).to_u128().expect("Schur dimension overflows u128")
}

/// Ways to add a horizontal strip of `k` boxes to `mu`, each as the list of
/// new row lengths.
fn horizontal_strips(mu: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(mu: &[usize], i: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let old = mu.get(i).copied().unwrap_or(0);
        if i >= mu.len() {
            // at most one new row below the old shape, bounded by the row above
            let cap = if i == 0 { usize::MAX } else { mu.get(i - 1).copied().unwrap_or(0) };
            if rest <= cap {
                let mut v = cur.clone();
                if rest > 0 {
                    v.push(rest);
                }
                out.push(v);
            }
            return;
        }
        let cap = if i == 0 { usize::MAX } else { mu[i - 1] };
        let max_add = rest.min(cap.saturating_sub(old));
        for add in 0..=max_add {
            cur.push(old + add);
            go(mu, i + 1, rest - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(mu, 0, k, &mut Vec::new(), &mut out);
    out
}

/// `𝕊_μ ⊗ S^k`: all `ν ⊇ μ` with `ν/μ` a horizontal `k`-strip and at most
/// `max_rows` rows.
pub fn pieri_rows(mu: &Partition, k: usize, max_rows: usize) -> BTreeSet<Partition> {
    horizontal_strips(mu.parts(), k)
        .into_iter()
        .map(Partition)
        .filter(|nu| nu.rows() <= max_rows)
        .collect()
}

/// `𝕊_μ ⊗ Λ^k`: vertical strips, computed through conjugation.
pub fn pieri_cols(mu: &Partition, k: usize, max_rows: usize) -> BTreeSet<Partition> {
    horizontal_strips(mu.conjugate().parts(), k)
        .into_iter()
        .map(|v| Partition(v).conjugate())
        .filter(|nu| nu.rows() <= max_rows)
        .collect()
}

/// Littlewood–Richardson coefficients `c^ν_{λμ}` for all `ν` with at most
/// `max_rows` rows, by direct enumeration of LR skew tableaux of shape
/// `ν/λ` and content `μ`.
pub fn lr_coefficients(
    lambda: &Partition,
    mu: &Partition,
    max_rows: usize,
) -> Result<BTreeMap<Partition, u64>> {
    let boxes = lambda.size() + mu.size();
    if boxes > LR_BOX_GUARD {
        return Err(Error::GuardExceeded(format!(
            "Littlewood–Richardson enumeration of {lambda}⊗{mu} needs {boxes} boxes (limit {LR_BOX_GUARD})"
        )));
    }
    // counts[i][r] = number of boxes labelled r in row i
    fn go(
        shape: Vec<usize>,
        counts: Vec<Vec<usize>>,
        label: usize,
        mu: &[usize],
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if label == mu.len() {
            *out.entry(Partition(shape)).or_insert(0) += 1;
            return;
        }
        for next in horizontal_strips(&shape, mu[label]) {
            let mut c = counts.clone();
            c.resize(next.len(), vec![0; mu.len()]);
            for (i, row) in next.iter().enumerate() {
                c[i][label] = row - shape.get(i).copied().unwrap_or(0);
            }
            // lattice word: reading rows top to bottom, right to left
            let lattice = label == 0 || {
                let (mut above_prev, mut upto_cur) = (0, 0);
                c.iter().all(|row| {
                    upto_cur += row[label];
                    let ok = upto_cur <= above_prev;
                    above_prev += row[label - 1];
                    ok
                })
            };
            if lattice {
                go(next, c, label + 1, mu, out);
            }
        }
    }
    let mut out = BTreeMap::new();
    go(lambda.parts().to_vec(), vec![vec![0; mu.rows()]; lambda.rows()], 0, mu.parts(), &mut out);
    out.retain(|nu, _| nu.rows() <= max_rows);
    Ok(out)
}

/// `𝕊_λ ⊗ 𝕊_μ` through the Jacobi–Trudi determinant `s_λ = det h_{λ_i−i+j}`,
/// each `h` applied by Pieri. An independent route to the LR coefficients.
pub fn jacobi_trudi_product(lambda: &Partition, mu: &Partition, max_rows: usize) -> BTreeMap<Partition, i64> {
    let l = lambda.rows();
    let mut total: BTreeMap<Partition, i64> = BTreeMap::new();
    for (perm, sign) in permutations(l) {
        let mut terms: BTreeMap<Partition, i64> = BTreeMap::from([(mu.clone(), sign)]);
        let mut vanishes = false;
        for (i, &j) in perm.iter().enumerate() {
            let idx = lambda.part(i) as i64 - i as i64 + j as i64;
            if idx < 0 {
                vanishes = true;
                break;
            }
            let mut next = BTreeMap::new();
            for (nu, c) in &terms {
                for rho in pieri_rows(nu, idx as usize, usize::MAX) {
                    *next.entry(rho).or_insert(0) += c;
                }
            }
            terms = next;
        }
        if vanishes {
            continue;
        }
        for (nu, c) in terms {
            *total.entry(nu).or_insert(0) += c;
        }
    }
    total.retain(|nu, c| *c != 0 && nu.rows() <= max_rows);
    total
}

/// Permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        // insert n-1 at position pos: moves past (n-1-pos) entries
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let sign = if (n - 1 - pos).is_multiple_of(2) { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// `S^k(V ⊗ W) = ⊕ 𝕊_λ V ⊗ 𝕊_λ W` over partitions of `k` with at most
/// `min(p, q)` rows.
pub fn cauchy_sym(k: usize, p: usize, q: usize) -> Vec<Partition> {
    Partition::all(k, p.min(q))
}

/// `S^k(S²V)`: even-row partitions of `2k` with at most `n` rows.
pub fn sym_of_sym(k: usize, n: usize) -> Vec<Partition> {
    Partition::all(k, n).iter().map(Partition::doubled).collect()
}

/// `S^k(Λ²V)`: partitions of `2k` with even columns and at most `n` rows.
pub fn sym_of_ext(k: usize, n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = Partition::all(k, k)
        .iter()
        .map(|p| p.doubled().conjugate())
        .filter(|p| p.rows() <= n)
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `𝕊_λ(ℂ^m)` as an `sl(m)` label `a_i = λ_i − λ_{i+1}`; `None` past `m` rows.
pub fn partition_to_sl_label(lambda: &Partition, m: usize) -> Option<Vec<i64>> {
    if lambda.rows() > m || m == 0 {
        return None;
    }
    Some((0..m - 1).map(|i| lambda.part(i) as i64 - lambda.part(i + 1) as i64).collect())
}

/// Inverse of [`partition_to_sl_label`] once the total size is known.
pub fn sl_label_to_partition(label: &[i64], size: usize) -> Option<Partition> {
    let m = label.len() + 1;
    if label.iter().any(|&a| a < 0) {
        return None;
    }
    // size = m·λ_m + Σ_i i·a_i (1-based i)
    let weighted: i64 = label.iter().enumerate().map(|(i, a)| (i as i64 + 1) * a).sum();
    let rest = size as i64 - weighted;
    if rest < 0 || rest % m as i64 != 0 {
        return None;
    }
    let last = rest / m as i64;
    let mut parts = vec![last; m];
    for i in (0..m - 1).rev() {
        parts[i] = parts[i + 1] + label[i];
    }
    Partition::new(parts.into_iter().map(|x| x as usize).collect()).ok()
}
