//! Exact combinatorial primitives and the printed closed-form evaluators.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::{ExactInt, ExactRat};

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> ExactRat {
    ExactRat::new(num.into(), den.into())
}

/// Generalized binomial coefficient `a (a-1) ... (a-t+1) / t!`.
///
/// The upper index may be negative; the result vanishes whenever `t < 0`.
pub fn binom_general(a: i64, t: i64) -> ExactInt {
    if t < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for s in 0..t {
        // acc == binom(a, s) here, so the division is exact.
        acc = acc * BigInt::from(a - s) / BigInt::from(s + 1);
    }
    acc
}

/// Rising factorial `q (q+1) ... (q+n-1)`, with `(q)_0 = 1`.
pub fn pochhammer<T: Scalar>(q: &T, n: u64) -> T {
    let mut acc = T::one();
    let mut factor = q.clone();
    for _ in 0..n {
        acc = acc * factor.clone();
        factor = factor + T::one();
    }
    acc
}

pub fn catalan(n: u64) -> ExactInt {
    let n = n as i64;
    binom_general(2 * n, n) / BigInt::from(n + 1)
}

/// `16^n (1/2)_n (5/6)_n / ((2)_n (5/3)_n)`, the conjectured count of
/// `2n`-step walks returning to the origin.
pub fn gessel_closed_form(n: u64) -> ExactRat {
    let power = ExactRat::from_integer(BigInt::from(16u32).pow(n));
    power * pochhammer(&rat(1, 2), n) * pochhammer(&rat(5, 6), n)
        / (pochhammer(&rat(2, 1), n) * pochhammer(&rat(5, 3), n))
}

/// The explicitly printed closed forms beyond the origin sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// `F(2n; 0, 1)` as a sum of two hypergeometric terms.
    ZeroOne,
    /// `F(2n + 2k; 0, n)` for `k <= 3`.
    Vertical(u32),
    /// `F(n + 2k; n, 0)` for `k <= 3`.
    Horizontal(u32),
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::ZeroOne => write!(f, "F(2n;0,1)"),
            ClosedForm::Vertical(k) => write!(f, "F(2n+{};0,n)", 2 * k),
            ClosedForm::Horizontal(k) => write!(f, "F(n+{};n,0)", 2 * k),
        }
    }
}

impl ClosedForm {
    /// The lattice point `(m, n1, n2)` whose count this form gives at `n`.
    pub fn point(self, n: u64) -> (u64, u64, u64) {
        match self {
            ClosedForm::ZeroOne => (2 * n, 0, 1),
            ClosedForm::Vertical(k) => (2 * n + 2 * k as u64, 0, n),
            ClosedForm::Horizontal(k) => (n + 2 * k as u64, n, 0),
        }
    }

    /// Inverse of [`ClosedForm::point`]: every printed form covering `(m, n1, n2)`.
    pub fn covering(m: u64, n1: u64, n2: u64) -> Vec<(ClosedForm, u64)> {
        let mut out = Vec::new();
        if n1 == 0 && n2 == 1 && m % 2 == 0 {
            out.push((ClosedForm::ZeroOne, m / 2));
        }
        if n1 == 0 && m >= 2 * n2 && (m - 2 * n2) % 2 == 0 && (m - 2 * n2) / 2 <= 3 {
            out.push((ClosedForm::Vertical(((m - 2 * n2) / 2) as u32), n2));
        }
        if n2 == 0 && m >= n1 && (m - n1) % 2 == 0 && (m - n1) / 2 <= 3 {
            out.push((ClosedForm::Horizontal(((m - n1) / 2) as u32), n1));
        }
        out
    }
}

fn poly(coeffs: &[i64], n: u64) -> ExactRat {
    let x = BigInt::from(n);
    let value = coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, &c| acc * &x + BigInt::from(c));
    ExactRat::from_integer(value)
}

/// Evaluates one of the printed closed forms exactly.
pub fn conjectured_value(form: ClosedForm, n: u64) -> Result<ExactRat> {
    let four_n = ExactRat::from_integer(BigInt::from(4u32).pow(n));
    let three_halves = pochhammer(&rat(3, 2), n);
    let n_plus_1 = poly(&[1, 1], n);
    let value = match form {
        ClosedForm::ZeroOne => {
            let lead = ExactRat::from_integer(BigInt::from(16u32).pow(n)) * pochhammer(&rat(1, 2), n)
                / pochhammer(&rat(3, 1), n);
            let first = rat(5, 27) * pochhammer(&rat(7, 6), n) / pochhammer(&rat(7, 3), n);
            let second = poly(&[-50, 183, 111], n) / rat(270, 1) * pochhammer(&rat(5, 6), n)
                / pochhammer(&rat(8, 3), n);
            lead * (first + second)
        }
        ClosedForm::Vertical(0) => four_n * pochhammer(&rat(1, 2), n) / pochhammer(&rat(2, 1), n),
        ClosedForm::Vertical(1) => {
            rat(2, 1) * four_n * n_plus_1 * three_halves / pochhammer(&rat(3, 1), n)
        }
        ClosedForm::Vertical(2) => {
            four_n * n_plus_1 * poly(&[33, 32, 8], n) * three_halves
                / (rat(3, 1) * pochhammer(&rat(4, 1), n))
        }
        ClosedForm::Vertical(3) => {
            four_n / rat(4, 1) * n_plus_1 * poly(&[3060, 4641, 2648, 672, 64], n) * three_halves
                / (rat(9, 1) * pochhammer(&rat(5, 1), n))
        }
        ClosedForm::Horizontal(0) => ExactRat::one(),
        ClosedForm::Horizontal(1) => n_plus_1 * poly(&[4, 1], n) / rat(2, 1),
        ClosedForm::Horizontal(2) => n_plus_1 * poly(&[132, 74, 15, 1], n) / rat(12, 1),
        ClosedForm::Horizontal(3) => {
            n_plus_1 * poly(&[12240, 8604, 2620, 407, 32, 1], n) / rat(144, 1)
        }
        ClosedForm::Vertical(k) | ClosedForm::Horizontal(k) => {
            return Err(Error::NoClosedForm {
                family: form.to_string(),
                k,
            })
        }
    };
    Ok(value)
}
