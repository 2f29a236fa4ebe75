//! Desk-scale checks of the conjectured closed forms, the second-order
//! recurrence for `F(2n+1; 1, 0)`, and exact fits of the polynomial families
//! hidden in the hypergeometric ansatzes.
//!
//! Every fit divides the known prefactor out of the walk counts, interpolates
//! the claimed number of coefficients from consecutive `n = 0, 1, ...`, and
//! then confirms the result on [`HELD_OUT`] further points.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::arith::{gessel_closed_form, pochhammer, rat};
use crate::error::{Error, Result};
use crate::linalg::solve_linear;
use crate::poly::Poly;
use crate::walks::WalkTable;
use crate::{ExactInt, ExactRat};

/// Number of oracle points checked beyond those used for interpolation.
pub const HELD_OUT: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GesselReport {
    pub n_max: u64,
    pub agree: bool,
    pub first_mismatch: Option<u64>,
    /// `F(2n; 0, 0)` for `n = 0..=n_max`, as decimal strings.
    pub values: Vec<String>,
}

/// Compares the walk counts `F(2n; 0, 0)` with the Pochhammer closed form for
/// every `n <= n_max`.
pub fn verify_gessel(n_max: u64) -> GesselReport {
    let table = WalkTable::new(2 * n_max as usize);
    let mut values = Vec::new();
    let mut first_mismatch = None;
    for n in 0..=n_max {
        let count = table.get(2 * n as usize, 0, 0);
        values.push(count.to_string());
        if first_mismatch.is_none() && gessel_closed_form(n) != ExactRat::from_integer(count.clone()) {
            first_mismatch = Some(n);
        }
    }
    GesselReport {
        n_max,
        agree: first_mismatch.is_none(),
        first_mismatch,
        values,
    }
}

/// The recurrence
///
/// ```text
/// (n+3)(3n+7)(3n+8) g(n+1) - 8(2n+3)(18n^2+54n+35) g(n) + 256 n(3n+1)(3n+2) g(n-1) = 0
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceCheck {
    pub order: usize,
    /// Coefficients of `g(n+1)`, `g(n)`, `g(n-1)`, ascending in `n`.
    pub coeff_polys: [Vec<String>; 3],
    /// Largest `n` whose residual was evaluated.
    pub range_checked: u64,
    pub holds: bool,
    pub first_failure: Option<u64>,
}

fn int_poly(coeffs: &[i64]) -> Poly<ExactInt> {
    Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// The three coefficient polynomials, highest shift first.
pub fn recurrence_coefficients() -> [Poly<ExactInt>; 3] {
    [
        Poly::product([int_poly(&[3, 1]), int_poly(&[7, 3]), int_poly(&[8, 3])]),
        Poly::product([int_poly(&[-8]), int_poly(&[3, 2]), int_poly(&[35, 54, 18])]),
        Poly::product([
            int_poly(&[256]),
            int_poly(&[0, 1]),
            int_poly(&[1, 3]),
            int_poly(&[2, 3]),
        ]),
    ]
}

/// Evaluates the residual at every `n` with `n + 1 < g.len()`. At `n = 0`
/// the `g(n-1)` coefficient vanishes and no value is needed.
pub fn check_recurrence(g: &[ExactInt]) -> RecurrenceCheck {
    let coeffs = recurrence_coefficients();
    let mut first_failure = None;
    let last = g.len().saturating_sub(2);
    for n in 0..=last {
        if n + 1 >= g.len() {
            break;
        }
        let at = BigInt::from(n);
        let mut residual = coeffs[0].eval(&at) * &g[n + 1] + coeffs[1].eval(&at) * &g[n];
        if n > 0 {
            residual += coeffs[2].eval(&at) * &g[n - 1];
        }
        if !residual.is_zero() {
            first_failure = Some(n as u64);
            break;
        }
    }
    RecurrenceCheck {
        order: 2,
        coeff_polys: coeffs.map(|p| p.coeffs().iter().map(|c| c.to_string()).collect()),
        range_checked: last as u64,
        holds: g.len() >= 2 && first_failure.is_none(),
        first_failure,
    }
}

/// `g(n) = F(2n+1; 1, 0)` for `n <= n_max`.
pub fn odd_axis_sequence(n_max: u64) -> Vec<ExactInt> {
    let table = WalkTable::new(2 * n_max as usize + 1);
    (0..=n_max)
        .map(|n| table.get(2 * n as usize + 1, 1, 0).clone())
        .collect()
}

/// Checks the recurrence on `g(0..=n_max)`, i.e. residuals at `n < n_max`.
pub fn verify_recurrence_g(n_max: u64) -> RecurrenceCheck {
    check_recurrence(&odd_axis_sequence(n_max))
}

/// Polynomial families appearing in the hypergeometric ansatzes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `p_k` in `F(2n; 0, k)`, degree `2k - 2`.
    P,
    /// `q_k` in `F(2n; 0, k)`, degree `2k`.
    Q,
    /// `r_k` in `F(2n + 2k; 0, n) = 4^n (3/2)_n / (k+2)_n r_k(n)`, degree `2k - 1`.
    R,
    /// `s_k` in `F(n + 2k; n, 0) = s_k(n)`, degree `2k`.
    S,
    /// `r~_k` in `F~(2n + 2k + 1; 0, n) = 4^n (1/2)_n / (k+2)_n r~_k(n)`, degree `2k + 1`.
    #[serde(rename = "rt")]
    RTilde,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::P => "p",
            Family::Q => "q",
            Family::R => "r",
            Family::S => "s",
            Family::RTilde => "rt",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p" | "p_k" => Ok(Family::P),
            "q" | "q_k" => Ok(Family::Q),
            "r" | "r_k" => Ok(Family::R),
            "s" | "s_k" => Ok(Family::S),
            "rt" | "rt_k" | "rtilde" => Ok(Family::RTilde),
            other => Err(Error::Unsupported(format!("unknown family {other:?}"))),
        }
    }
}

impl Family {
    /// The conjectured degree of the `k`-th member, if it is a polynomial.
    pub fn claimed_degree(self, k: u32) -> Option<usize> {
        let k = k as usize;
        match self {
            Family::P => (2 * k).checked_sub(2),
            Family::Q | Family::S => Some(2 * k),
            Family::R => (2 * k).checked_sub(1),
            Family::RTilde => Some(2 * k + 1),
        }
    }
}

/// An exactly interpolated family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFit {
    pub family: Family,
    pub k: u32,
    pub poly: Poly<ExactRat>,
    pub sample_points: Vec<u64>,
    /// Held-out points that matched the oracle.
    pub verified_extra: usize,
}

fn ratio_of(count: &ExactInt) -> ExactRat {
    ExactRat::from_integer(count.clone())
}

fn power(base: u32, n: u64) -> ExactRat {
    ExactRat::from_integer(BigInt::from(base).pow(n))
}

/// Largest `m` a fit of `(family, k)` reads from the walk table.
pub fn table_extent(family: Family, k: u32) -> usize {
    let k = k as usize;
    let unknowns = match family {
        Family::P | Family::Q => (2 * k).saturating_sub(1) + 2 * k + 1,
        _ => family.claimed_degree(k as u32).unwrap_or(0) + 1,
    };
    let n_max = unknowns + HELD_OUT - 1;
    match family {
        Family::P | Family::Q => 2 * n_max,
        Family::R | Family::RTilde => 2 * n_max + 2 * k,
        Family::S => n_max + 2 * k,
    }
}

/// The prefactor-free target value for single-polynomial families.
fn single_target(table: &WalkTable, family: Family, k: u32, n: u64) -> ExactRat {
    let (k64, nu) = (k as u64, n as usize);
    match family {
        Family::S => ratio_of(table.get(nu + 2 * k as usize, n as i64, 0)),
        Family::R => {
            let count = ratio_of(table.get(2 * nu + 2 * k as usize, 0, n as i64));
            count * pochhammer(&rat(k as i64 + 2, 1), n)
                / (power(4, n) * pochhammer(&rat(3, 2), n))
        }
        Family::RTilde => {
            let count = ratio_of(&table.f_tilde(2 * nu + 2 * k as usize + 1, 0, nu));
            count * pochhammer(&rat(k64 as i64 + 2, 1), n)
                / (power(4, n) * pochhammer(&rat(1, 2), n))
        }
        Family::P | Family::Q => unreachable!("joint family"),
    }
}

/// Fits `(family, k)` against a fresh walk table.
pub fn fit_family(family: Family, k: u32) -> Result<PolyFit> {
    let table = WalkTable::new(table_extent(family, k));
    fit_family_with(&table, family, k)
}

/// Fits `(family, k)` against an existing table, which must reach far
/// enough.
pub fn fit_family_with(table: &WalkTable, family: Family, k: u32) -> Result<PolyFit> {
    assert!(
        table.m_max() >= table_extent(family, k),
        "walk table too short for ({family}, {k})"
    );
    match family {
        Family::P | Family::Q => {
            let (p, q) = fit_pq_with(table, k)?;
            match family {
                Family::P => p.ok_or_else(|| {
                    Error::Unsupported("p_0 is absent: the ansatz at k = 0 has a single term".into())
                }),
                _ => Ok(q),
            }
        }
        Family::R if k == 0 => Err(Error::Unsupported(
            "r_0(n) = 1/(2n+1) is not a polynomial; use verify_r0".into(),
        )),
        _ => {
            let degree = family.claimed_degree(k).expect("polynomial family");
            let samples: Vec<u64> = (0..=degree as u64).collect();
            let points: Vec<(ExactRat, ExactRat)> = samples
                .iter()
                .map(|&n| (rat(n as i64, 1), single_target(table, family, k, n)))
                .collect();
            let poly = Poly::interpolate(&points).ok_or_else(|| Error::SingularAnsatz {
                family: family.to_string(),
                k,
            })?;
            let start = samples.len() as u64;
            for n in start..start + HELD_OUT as u64 {
                if poly.eval(&rat(n as i64, 1)) != single_target(table, family, k, n) {
                    return Err(Error::HeldOutMismatch {
                        family: family.to_string(),
                        k,
                        n,
                    });
                }
            }
            Ok(PolyFit {
                family,
                k,
                poly,
                sample_points: samples,
                verified_extra: HELD_OUT,
            })
        }
    }
}

/// Fits `p_k` and `q_k` jointly from
///
/// ```text
/// F(2n; 0, k) (k+2)_n / (16^n (1/2)_n)
///     = (7/6)_n / ((3k+4)/3)_n p_k(n) + (5/6)_n / ((3k+5)/3)_n q_k(n).
/// ```
///
/// `p_0` does not exist, so the first component is `None` at `k = 0`.
pub fn fit_pq(k: u32) -> Result<(Option<PolyFit>, PolyFit)> {
    let table = WalkTable::new(table_extent(Family::Q, k));
    fit_pq_with(&table, k)
}

fn fit_pq_with(table: &WalkTable, k: u32) -> Result<(Option<PolyFit>, PolyFit)> {
    let kk = k as i64;
    let n_p = (2 * k as usize).saturating_sub(1);
    let n_q = 2 * k as usize + 1;
    let unknowns = n_p + n_q;
    let alpha = |n: u64| pochhammer(&rat(7, 6), n) / pochhammer(&rat(3 * kk + 4, 3), n);
    let beta = |n: u64| pochhammer(&rat(5, 6), n) / pochhammer(&rat(3 * kk + 5, 3), n);
    let target = |n: u64| {
        ratio_of(table.get(2 * n as usize, 0, kk)) * pochhammer(&rat(kk + 2, 1), n)
            / (power(16, n) * pochhammer(&rat(1, 2), n))
    };
    let row = |n: u64| -> Vec<ExactRat> {
        let (a, b) = (alpha(n), beta(n));
        let x = rat(n as i64, 1);
        let mut out = Vec::with_capacity(unknowns);
        let mut pw = ExactRat::one();
        for _ in 0..n_p {
            out.push(a.clone() * pw.clone());
            pw *= x.clone();
        }
        pw = ExactRat::one();
        for _ in 0..n_q {
            out.push(b.clone() * pw.clone());
            pw *= x.clone();
        }
        out
    };
    let samples: Vec<u64> = (0..unknowns as u64).collect();
    let solution = solve_linear(
        samples.iter().map(|&n| row(n)).collect(),
        samples.iter().map(|&n| target(n)).collect(),
    )
    .ok_or_else(|| Error::SingularAnsatz {
        family: "p/q".into(),
        k,
    })?;
    let p = Poly::new(solution[..n_p].to_vec());
    let q = Poly::new(solution[n_p..].to_vec());
    for n in unknowns as u64..(unknowns + HELD_OUT) as u64 {
        let x = rat(n as i64, 1);
        if alpha(n) * p.eval(&x) + beta(n) * q.eval(&x) != target(n) {
            return Err(Error::HeldOutMismatch {
                family: "p/q".into(),
                k,
                n,
            });
        }
    }
    let fit = |family, poly| PolyFit {
        family,
        k,
        poly,
        sample_points: samples.clone(),
        verified_extra: HELD_OUT,
    };
    let p_fit = (n_p > 0).then(|| fit(Family::P, p));
    Ok((p_fit, fit(Family::Q, q)))
}

/// `F(2n; 0, n) = 4^n (3/2)_n / (2)_n * 1/(2n+1)` for every `n <= n_max`.
pub fn verify_r0(n_max: u64) -> bool {
    let table = WalkTable::new(2 * n_max as usize);
    (0..=n_max).all(|n| {
        let lhs = ratio_of(table.get(2 * n as usize, 0, n as i64));
        let rhs = power(4, n) * pochhammer(&rat(3, 2), n)
            / pochhammer(&rat(2, 1), n)
            / rat(2 * n as i64 + 1, 1);
        lhs == rhs
    })
}

fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Outcome of one structural claim about a fitted member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub expected: String,
    pub actual: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyClaims {
    pub degree: Claim,
    /// Only claimed for `s_k`: `1 / (k! (k+1)!)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leading_coefficient: Option<Claim>,
    /// Claimed for `r_k` and `s_k` with `k >= 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisible_by_n_plus_1: Option<Claim>,
}

impl FamilyClaims {
    pub fn all_hold(&self) -> bool {
        self.degree.holds
            && self.leading_coefficient.as_ref().is_none_or(|c| c.holds)
            && self.divisible_by_n_plus_1.as_ref().is_none_or(|c| c.holds)
    }
}

pub fn verify_family_claims(fit: &PolyFit) -> FamilyClaims {
    let expected = fit.family.claimed_degree(fit.k);
    let actual = fit.poly.degree();
    let show = |d: Option<usize>| d.map_or_else(|| "none".to_string(), |d| d.to_string());
    let degree = Claim {
        expected: show(expected),
        actual: show(actual),
        holds: expected == actual,
    };
    let leading_coefficient = (fit.family == Family::S).then(|| {
        let k = fit.k as u64;
        let want = ExactRat::new(BigInt::one(), factorial(k) * factorial(k + 1));
        let got = fit.poly.leading();
        Claim {
            expected: want.to_string(),
            actual: got.to_string(),
            holds: want == got,
        }
    });
    let divisible_by_n_plus_1 = (matches!(fit.family, Family::R | Family::S) && fit.k >= 1).then(|| {
        let holds = fit.poly.divisible_by_n_plus_one();
        Claim {
            expected: "true".into(),
            actual: holds.to_string(),
            holds,
        }
    });
    FamilyClaims {
        degree,
        leading_coefficient,
        divisible_by_n_plus_1,
    }
}

/// Machine-readable summary of a fit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FitReport {
    pub family: Family,
    pub k: u32,
    pub degree: Option<usize>,
    pub coeffs: Vec<String>,
    pub claims: FamilyClaims,
    pub held_out_ok: bool,
}

impl PolyFit {
    pub fn report(&self) -> FitReport {
        FitReport {
            family: self.family,
            k: self.k,
            degree: self.poly.degree(),
            coeffs: self.poly.coeffs().iter().map(|c| c.to_string()).collect(),
            claims: verify_family_claims(self),
            held_out_ok: self.verified_extra >= HELD_OUT,
        }
    }
}
