//! Exact dense linear algebra over a generic [`Scalar`].

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Solves `A x = b` for a unit lower-triangular `A` given entrywise.
///
/// Only `entry(n, k)` with `k < n` is ever evaluated.
pub fn forward_substitute<T, F>(b: &[T], mut entry: F) -> Vec<T>
where
    T: Scalar,
    F: FnMut(usize, usize) -> T,
{
    let mut x: Vec<T> = Vec::with_capacity(b.len());
    for (n, rhs) in b.iter().enumerate() {
        let mut acc = rhs.clone();
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            let a = entry(n, k);
            if !a.is_zero() {
                acc = acc - a * xk.clone();
            }
        }
        x.push(acc);
    }
    x
}

/// Inverse of a unit lower-triangular matrix, column by column.
///
/// Entries on and above the diagonal of `a` are ignored.
pub fn unit_lower_inverse<T: Scalar>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    let mut inv = vec![vec![T::zero(); n]; n];
    for col in 0..n {
        let mut e = vec![T::zero(); n];
        e[col] = T::one();
        let x = forward_substitute(&e, |r, c| a[r][c].clone());
        for (row, v) in x.into_iter().enumerate() {
            inv[row][col] = v;
        }
    }
    inv
}

/// Entry `(k, m)`, `k > m`, of the inverse of a unit lower-triangular matrix
/// as an explicit signed sum over chains `m = l0 < l1 < ... < lj = k`:
///
/// ```text
/// inv(k, m) = sum_j (-1)^j sum_chains prod_i a(l_i, l_{i-1})
/// ```
///
/// The chains are enumerated one by one (subtrees through a zero entry are
/// skipped), so the cost is up to `2^(k - m - 1)` products. `max_span` bounds
/// `k - m`.
pub fn inverse_entry_multisum<T, F>(k: usize, m: usize, entry: F, max_span: usize) -> Result<T>
where
    T: Scalar,
    F: Fn(usize, usize) -> T,
{
    if k <= m {
        return Err(Error::NotBelowDiagonal { k, m });
    }
    if k - m > max_span {
        return Err(Error::ChainExplosion {
            span: k - m,
            limit: max_span,
        });
    }
    // Links a(next, cur) for m <= cur < next <= k, fetched once.
    let links: Vec<Vec<T>> = (m..k)
        .map(|cur| (cur + 1..=k).map(|next| entry(next, cur)).collect())
        .collect();
    let mut total = T::zero();
    let mut stack: Vec<(usize, T)> = vec![(m, T::one())];
    while let Some((cur, partial)) = stack.pop() {
        for (offset, a) in links[cur - m].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let next = cur + 1 + offset;
            let extended = -(partial.clone() * a.clone());
            if next == k {
                total = total + extended;
            } else {
                stack.push((next, extended));
            }
        }
    }
    Ok(total)
}

/// A square lower-Hessenberg matrix whose superdiagonal is all ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergMatrix<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> HessenbergMatrix<T> {
    /// Validates the shape: square, unit superdiagonal, zero above it.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotHessenberg { row: r, col: row.len() });
            }
            for (c, v) in row.iter().enumerate() {
                let ok = if c == r + 1 {
                    v.is_one()
                } else {
                    c <= r || v.is_zero()
                };
                if !ok {
                    return Err(Error::NotHessenberg { row: r, col: c });
                }
            }
        }
        Ok(HessenbergMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// Determinant via leading principal minors. Expanding the last row of
    /// the `r x r` minor gives
    ///
    /// ```text
    /// d_r = sum_{c < r} (-1)^(r-1-c) H(r-1, c) d_c,   d_0 = 1
    /// ```
    ///
    /// using that every superdiagonal entry is one. The empty matrix has
    /// determinant one.
    pub fn det(&self) -> T {
        let n = self.size();
        let mut minors: Vec<T> = Vec::with_capacity(n + 1);
        minors.push(T::one());
        for r in 1..=n {
            let row = &self.rows[r - 1];
            let mut acc = T::zero();
            for c in 0..r {
                if row[c].is_zero() || minors[c].is_zero() {
                    continue;
                }
                let term = row[c].clone() * minors[c].clone();
                acc = if (r - 1 - c) % 2 == 0 { acc + term } else { acc - term };
            }
            minors.push(acc);
        }
        minors.pop().unwrap()
    }
}

/// Gaussian elimination with first-nonzero pivoting. Returns `None` when the
/// square system is singular.
pub fn solve_linear<T: Field>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n), "system must be square");
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / p.clone();
            for c in col..n {
                let delta = factor.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - delta;
            }
            b[r] = b[r].clone() - factor * b[col].clone();
        }
    }
    let mut x = vec![T::zero(); n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..n {
            acc = acc - a[r][c].clone() * x[c].clone();
        }
        x[r] = acc / a[r][r].clone();
    }
    Some(x)
}
