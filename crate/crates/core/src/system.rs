//! The lower-triangular system obtained by substituting the kernel root into
//! the boundary equation, with unknowns `f(i, j)` packed by the diagonal
//! ordering `rho(i, j) = C(i + j + 1, 2) + j`.
//!
//! Equation `E(u, v)` reads `sum_{i,j} c(u, v, i, j) f(i, j) = [u = v = 1]`
//! where, for `i = u (mod 2)`,
//!
//! ```text
//! c(u, v, i, j) = C(-min(i,j), (u-i)/2) * C(-min(i,j), v - j - (u-i)/2)
//! ```
//!
//! and `c = 0` otherwise. Since `c(u, v, u, v) = 1` and `c` vanishes unless
//! `i <= u` and `j <= v`, any ordering monotone in both coordinates makes the
//! matrix unit lower-triangular.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::binom_general;
use crate::error::{Error, Result};
use crate::linalg::{forward_substitute, inverse_entry_multisum, HessenbergMatrix};
use crate::walks::{f_entry, WalkTable};
use crate::ExactInt;

/// Diagonal ordering of `N x N`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SystemIndexer;

impl SystemIndexer {
    pub fn rho(i: usize, j: usize) -> usize {
        let d = i + j;
        d * (d + 1) / 2 + j
    }

    pub fn rho_inv(n: usize) -> (usize, usize) {
        // Largest d with d (d + 1) / 2 <= n.
        let mut d = (((8 * n + 1) as f64).sqrt() as usize).saturating_sub(1) / 2;
        while (d + 1) * (d + 2) / 2 <= n {
            d += 1;
        }
        while d * (d + 1) / 2 > n {
            d -= 1;
        }
        let j = n - d * (d + 1) / 2;
        (d - j, j)
    }
}

/// `rho(1, 1)`: the row carrying the only nonzero right-hand side entry.
pub const PIVOT: usize = 4;

/// Coefficient of `f(i, j)` in equation `E(u, v)`.
pub fn coefficient_c(u: usize, v: usize, i: usize, j: usize) -> ExactInt {
    if (u + i) % 2 == 1 || i > u {
        return BigInt::zero();
    }
    let a = -(i.min(j) as i64);
    let t1 = ((u - i) / 2) as i64;
    let t2 = v as i64 - j as i64 - t1;
    if t2 < 0 {
        return BigInt::zero();
    }
    binom_general(a, t1) * binom_general(a, t2)
}

/// Entry access `a(n, k) = c(rho^-1(n), rho^-1(k))` with the binomials
/// `C(-s, t)` cached for every `s, t` the covered indices can need.
#[derive(Clone, Debug)]
pub struct SystemMatrix {
    // neg_binom[s][t] = C(-s, t)
    neg_binom: Vec<Vec<ExactInt>>,
}

impl SystemMatrix {
    /// Caches binomials for all packed indices up to `max_index`.
    pub fn new(max_index: usize) -> Self {
        let (i, j) = SystemIndexer::rho_inv(max_index);
        let bound = i + j + 1;
        let neg_binom = (0..=bound)
            .map(|s| (0..=bound).map(|t| binom_general(-(s as i64), t as i64)).collect())
            .collect();
        SystemMatrix { neg_binom }
    }

    fn neg_binom(&self, s: usize, t: i64) -> ExactInt {
        if t < 0 {
            return BigInt::zero();
        }
        match self.neg_binom.get(s).and_then(|row| row.get(t as usize)) {
            Some(v) => v.clone(),
            None => binom_general(-(s as i64), t),
        }
    }

    pub fn c(&self, u: usize, v: usize, i: usize, j: usize) -> ExactInt {
        if (u + i) % 2 == 1 || i > u || j > v {
            return BigInt::zero();
        }
        let s = i.min(j);
        let t1 = ((u - i) / 2) as i64;
        let t2 = v as i64 - j as i64 - t1;
        let first = self.neg_binom(s, t1);
        if first.is_zero() {
            return first;
        }
        first * self.neg_binom(s, t2)
    }

    pub fn a(&self, n: usize, k: usize) -> ExactInt {
        let (u, v) = SystemIndexer::rho_inv(n);
        let (i, j) = SystemIndexer::rho_inv(k);
        self.c(u, v, i, j)
    }

    /// Right-hand side `b(n)`: one at `rho(1, 1)`, zero elsewhere.
    pub fn rhs(n: usize) -> ExactInt {
        if n == PIVOT {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }

    /// The leading `(k_max + 1) x (k_max + 1)` block as dense rows.
    pub fn dense(&self, k_max: usize) -> Vec<Vec<ExactInt>> {
        (0..=k_max)
            .map(|n| (0..=k_max).map(|k| self.a(n, k)).collect())
            .collect()
    }
}

/// Solution of the leading block of the system.
#[derive(Clone, Debug)]
pub struct TriSystem {
    matrix: SystemMatrix,
    x: Vec<ExactInt>,
}

impl TriSystem {
    pub fn k_max(&self) -> usize {
        self.x.len() - 1
    }

    pub fn matrix(&self) -> &SystemMatrix {
        &self.matrix
    }

    pub fn x(&self) -> &[ExactInt] {
        &self.x
    }

    /// `f(i, j)` read off the solution vector, if within range.
    pub fn f(&self, i: usize, j: usize) -> Option<&ExactInt> {
        self.x.get(SystemIndexer::rho(i, j))
    }
}

/// Solves `A x = b` for the indices `0..=k_max` by forward substitution.
pub fn solve_forward(k_max: usize) -> TriSystem {
    let matrix = SystemMatrix::new(k_max);
    let b: Vec<ExactInt> = (0..=k_max).map(SystemMatrix::rhs).collect();
    let x = forward_substitute(&b, |n, k| matrix.a(n, k));
    TriSystem { matrix, x }
}

/// Rows `rho(1,1) + 1 ..= k` and columns `rho(1,1) ..= k - 1` of `A`: a
/// `(k - 4) x (k - 4)` lower-Hessenberg matrix with unit superdiagonal.
pub fn hessenberg_for(k: usize) -> Result<HessenbergMatrix<ExactInt>> {
    if k < PIVOT {
        return Err(Error::BelowPivot { k, pivot: PIVOT });
    }
    let matrix = SystemMatrix::new(k);
    let rows = (PIVOT + 1..=k)
        .map(|n| (PIVOT..k).map(|c| matrix.a(n, c)).collect())
        .collect();
    HessenbergMatrix::from_rows(rows)
}

/// `x(k)` by Cramer's rule: zero below the pivot, otherwise
/// `(-1)^k det H^(k)` (the sign comes from expanding along the replaced
/// column at row `rho(1,1)`).
pub fn solution_via_determinant(k: usize) -> ExactInt {
    if k < PIVOT {
        return BigInt::zero();
    }
    let det = hessenberg_for(k).expect("k >= pivot").det();
    if k % 2 == 0 {
        det
    } else {
        -det
    }
}

/// `F(2n; 0, 0) = f(2n+1, 2n+1) = det H^(rho(2n+1, 2n+1))`; the index is
/// always even so no sign correction applies.
pub fn gessel_via_determinant(n: usize) -> ExactInt {
    let k = SystemIndexer::rho(2 * n + 1, 2 * n + 1);
    hessenberg_for(k).expect("k >= pivot").det()
}

/// Default bound on `k - m` for chain enumeration.
pub const DEFAULT_MAX_SPAN: usize = 16;

/// `x(k) = inv(A)(k, rho(1,1))` evaluated as a signed sum over chains.
pub fn solution_via_multisum(k: usize, max_span: usize) -> Result<ExactInt> {
    match k.cmp(&PIVOT) {
        std::cmp::Ordering::Less => Ok(BigInt::zero()),
        std::cmp::Ordering::Equal => Ok(BigInt::one()),
        std::cmp::Ordering::Greater => {
            let matrix = SystemMatrix::new(k);
            inverse_entry_multisum(k, PIVOT, |r, c| matrix.a(r, c), max_span)
        }
    }
}

/// Nonzero segment of row `2i - 1` of the packed boundary matrix: columns
/// `i ..= 3i - 1`, ending in the Catalan number `C_{i-1}`.
///
/// The segment is the first maximal run of nonzero entries; anything nonzero
/// after it is reported as an error rather than skipped.
pub fn universal_sequence(i: usize) -> Result<Vec<ExactInt>> {
    if i == 0 {
        return Err(Error::Unsupported("universal sequences start at i = 1".into()));
    }
    let row = 2 * i - 1;
    let table = WalkTable::new(row - 1);
    let entries: Vec<ExactInt> = (0..=3 * i + 1).map(|j| f_entry(&table, row, j)).collect();
    let start = entries.iter().position(|v| !v.is_zero()).unwrap_or(entries.len());
    let len = entries[start..].iter().take_while(|v| !v.is_zero()).count();
    if entries[start + len..].iter().any(|v| !v.is_zero()) {
        return Err(Error::Unsupported(format!(
            "row {row} has more than one nonzero run"
        )));
    }
    Ok(entries[start..start + len].to_vec())
}

/// How a packed unknown `x(k)` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Forward substitution through `k`.
    Forward,
    /// Signed Hessenberg determinant.
    Determinant,
    /// Explicit chain sum for the inverse, with a bound on the span.
    Multisum { max_span: usize },
}

fn solution_entries(indices: &[usize], route: Route) -> Result<Vec<ExactInt>> {
    match route {
        Route::Forward => {
            let top = indices.iter().copied().max().unwrap_or(0);
            let sys = solve_forward(top);
            Ok(indices.iter().map(|&k| sys.x()[k].clone()).collect())
        }
        Route::Determinant => Ok(indices.iter().map(|&k| solution_via_determinant(k)).collect()),
        Route::Multisum { max_span } => indices
            .iter()
            .map(|&k| solution_via_multisum(k, max_span))
            .collect(),
    }
}

/// `F(m; n1, n2)` on a boundary line, recovered from the packed unknowns:
///
/// ```text
/// F(m; n1, 0) = f(m + 1 + n1, m + 1)
/// F(m; 0, n2) = sum_{t=0}^{n2} (-1)^t f(m + 1, m + 1 + n2 - t)
/// ```
///
/// The second line telescopes `F~(m+1; 0, s) = F(m; 0, s) + F(m; 0, s-1)`.
/// Interior points are not determined by the system.
pub fn boundary_count(m: usize, n1: usize, n2: usize, route: Route) -> Result<ExactInt> {
    if n1 != 0 && n2 != 0 {
        return Err(Error::Unsupported(format!(
            "({n1}, {n2}) is off the boundary; only n1 = 0 or n2 = 0 is covered by the system"
        )));
    }
    if n2 == 0 {
        let k = SystemIndexer::rho(m + 1 + n1, m + 1);
        return Ok(solution_entries(&[k], route)?.remove(0));
    }
    let indices: Vec<usize> = (0..=n2)
        .map(|t| SystemIndexer::rho(m + 1, m + 1 + n2 - t))
        .collect();
    let values = solution_entries(&indices, route)?;
    Ok(values
        .into_iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (t, v)| if t % 2 == 0 { acc + v } else { acc - v }))
}

/// Result of comparing the forward-substitution solution with the walk
/// table at every packed index up to `k_max`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CrossReport {
    pub k_max: usize,
    pub agree: bool,
    /// `(k, i, j, solved, from_walks)` at the first disagreement.
    pub first_mismatch: Option<(usize, usize, usize, String, String)>,
}

pub fn cross_check(k_max: usize) -> CrossReport {
    let sys = solve_forward(k_max);
    let (i, j) = SystemIndexer::rho_inv(k_max);
    let table = WalkTable::new(i + j);
    let first_mismatch = (0..=k_max).find_map(|k| {
        let (i, j) = SystemIndexer::rho_inv(k);
        let want = f_entry(&table, i, j);
        (sys.x()[k] != want).then(|| (k, i, j, sys.x()[k].to_string(), want.to_string()))
    });
    CrossReport {
        k_max,
        agree: first_mismatch.is_none(),
        first_mismatch,
    }
}
