//! Dense univariate polynomials in `n` with ascending coefficients.

use std::fmt;

use crate::linalg::solve_linear;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The linear polynomial `n + shift`.
    pub fn linear(shift: T) -> Self {
        Self::new(vec![shift, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, by: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * by.clone()).collect())
    }

    /// Product of linear and constant factors, e.g. `(n+3)(3n+7)(3n+8)`.
    pub fn product<I: IntoIterator<Item = Poly<T>>>(factors: I) -> Self {
        factors
            .into_iter()
            .fold(Self::constant(T::one()), |acc, f| acc.mul(&f))
    }

    /// `p(-1) == 0`.
    pub fn divisible_by_n_plus_one(&self) -> bool {
        self.eval(&-T::one()).is_zero()
    }
}

impl<T: Field> Poly<T> {
    /// The polynomial of degree `< points.len()` through `points`, or `None`
    /// if two abscissae coincide.
    pub fn interpolate(points: &[(T, T)]) -> Option<Self> {
        let rows = points
            .iter()
            .map(|(x, _)| {
                let mut row = Vec::with_capacity(points.len());
                let mut power = T::one();
                for _ in 0..points.len() {
                    row.push(power.clone());
                    power = power * x.clone();
                }
                row
            })
            .collect();
        let values = points.iter().map(|(_, y)| y.clone()).collect();
        solve_linear(rows, values).map(Self::new)
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*n")?,
                _ => write!(f, "({c})*n^{d}")?,
            }
        }
        Ok(())
    }
}
