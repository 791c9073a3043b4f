//! Rank strata of `M_{n,n}`: the locus of rank `k` matrices has dimension
//! `(2n−k)k`, read off here from the Jacobian of the `(k+1)`-minors at the
//! rank-`k` point `diag(I_k, 0)`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::Rational;

/// Subsets of `0..n` of size `k` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn strata_closed_form(n: usize, k: usize) -> usize {
    (2 * n - k) * k
}

/// `n² − rank J`, where `J` is the Jacobian of all `(k+1)×(k+1)` minors of
/// an `n×n` matrix at `diag(I_k, 0)`. For `k = n` there are no minors and
/// the whole space `n²` comes back.
pub fn strata_dimension_type_a(n: usize, k: usize) -> Result<usize> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::InvalidDomain(format!("rank stratum k={k} of M_{n},{n} needs 1 ≤ k ≤ n")));
    }
    let base = Matrix::<Rational>::from_fn(n, n, |i, j| {
        if i == j && i < k { Rational::from_integer(1.into()) } else { Rational::from_integer(0.into()) }
    });
    let minors = subsets(n, k + 1);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for r in &minors {
        for c in &minors {
            // ∂ det X[r,c] / ∂ x_{ij} is the signed complementary minor
            let mut grad = vec![Rational::from_integer(0.into()); n * n];
            for (a, &i) in r.iter().enumerate() {
                for (b, &j) in c.iter().enumerate() {
                    let rr: Vec<usize> = r.iter().copied().filter(|&x| x != i).collect();
                    let cc: Vec<usize> = c.iter().copied().filter(|&x| x != j).collect();
                    let sub = Matrix::from_fn(k, k, |x, y| base[(rr[x], cc[y])].clone());
                    let det = sub.determinant()?;
                    grad[i * n + j] = if (a + b) % 2 == 0 { det } else { -det };
                }
            }
            rows.push(grad);
        }
    }
    if rows.is_empty() {
        return Ok(n * n);
    }
    let jac = Matrix::from_rows(rows)?;
    Ok(n * n - jac.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(strata_dimension_type_a(2, 1).unwrap(), 3);
        assert_eq!(strata_dimension_type_a(3, 2).unwrap(), 8);
        assert_eq!(strata_dimension_type_a(3, 3).unwrap(), 9);
        assert!(strata_dimension_type_a(3, 0).is_err());
        assert!(strata_dimension_type_a(3, 4).is_err());
    }

    #[test]
    fn jacobian_matches_closed_form() {
        for n in 1..=4 {
            for k in 1..n {
                assert_eq!(strata_dimension_type_a(n, k).unwrap(), strata_closed_form(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
