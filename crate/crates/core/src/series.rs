//! Truncated trivariate power series in `x, y, z` and checks of the
//! functional equations satisfied by the walk generating function
//!
//! ```text
//! G(x, y, z) = sum F(m; n1, n2) x^m y^n1 z^n2.
//! ```
//!
//! A series keeps every monomial whose exponents are within its caps
//! (inclusive). Multiplying by a polynomial never needs coefficients above
//! the target exponent, so products of exact truncations are exact on the
//! whole cap box; the composition check is the only one with a narrower
//! comparison window.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::walks::WalkTable;
use crate::ExactInt;

pub type Exponents = [u32; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries3<T> {
    caps: Exponents,
    coeffs: BTreeMap<Exponents, T>,
}

fn within(e: &Exponents, caps: &Exponents) -> bool {
    e.iter().zip(caps).all(|(a, b)| a <= b)
}

fn min_caps(a: &Exponents, b: &Exponents) -> Exponents {
    [a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2])]
}

impl<T: Scalar> TruncSeries3<T> {
    pub fn zero(caps: Exponents) -> Self {
        TruncSeries3 {
            caps,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(caps: Exponents) -> Self {
        Self::monomial(caps, [0, 0, 0], T::one())
    }

    pub fn monomial(caps: Exponents, exps: Exponents, coef: T) -> Self {
        let mut s = Self::zero(caps);
        s.set_coeff(exps, coef);
        s
    }

    /// Builds a series from `(exponents, coefficient)` pairs, summing repeats
    /// and dropping anything beyond the caps.
    pub fn from_terms<I: IntoIterator<Item = (Exponents, T)>>(caps: Exponents, terms: I) -> Self {
        let mut s = Self::zero(caps);
        for (e, c) in terms {
            s.add_to(e, c);
        }
        s
    }

    pub fn caps(&self) -> Exponents {
        self.caps
    }

    pub fn coeff(&self, exps: Exponents) -> T {
        self.coeffs.get(&exps).cloned().unwrap_or_else(T::zero)
    }

    /// Overwrites a coefficient; exponents beyond the caps are ignored.
    pub fn set_coeff(&mut self, exps: Exponents, coef: T) {
        if !within(&exps, &self.caps) {
            return;
        }
        if coef.is_zero() {
            self.coeffs.remove(&exps);
        } else {
            self.coeffs.insert(exps, coef);
        }
    }

    fn add_to(&mut self, exps: Exponents, coef: T) {
        if coef.is_zero() || !within(&exps, &self.caps) {
            return;
        }
        let sum = self.coeff(exps) + coef;
        self.set_coeff(exps, sum);
    }

    /// Stored (nonzero) terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &T)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.caps != other.caps {
            return Err(Error::CapMismatch {
                left: self.caps,
                right: other.caps,
            });
        }
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_to(*e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries3 {
            caps: self.caps,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    /// Truncated product; the result keeps the componentwise minimum caps.
    pub fn mul(&self, other: &Self) -> Self {
        let caps = min_caps(&self.caps, &other.caps);
        let mut out = Self::zero(caps);
        for (ea, ca) in self.terms() {
            if !within(ea, &caps) {
                continue;
            }
            for (eb, cb) in other.terms() {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                if within(&e, &caps) {
                    out.add_to(e, ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// Drops terms and lowers caps to `caps` (componentwise minimum).
    pub fn truncate(&self, caps: Exponents) -> Self {
        let caps = min_caps(&self.caps, &caps);
        TruncSeries3 {
            caps,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| within(e, &caps))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms whose exponents satisfy `keep`; caps are unchanged.
    pub fn filter<P: Fn(&Exponents) -> bool>(&self, keep: P) -> Self {
        TruncSeries3 {
            caps: self.caps,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// `S(x, 0, z)`.
    pub fn at_y_zero(&self) -> Self {
        self.filter(|e| e[1] == 0)
    }

    /// `S(x, y, 0)`.
    pub fn at_z_zero(&self) -> Self {
        self.filter(|e| e[2] == 0)
    }

    /// `S(x, 0, 0)`.
    pub fn at_yz_zero(&self) -> Self {
        self.filter(|e| e[1] == 0 && e[2] == 0)
    }

    /// The coefficient of `x^ex` as a series in `y, z` (caps `[0, dy, dz]`).
    pub fn x_slice(&self, ex: u32) -> Self {
        TruncSeries3 {
            caps: [0, self.caps[1], self.caps[2]],
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| e[0] == ex)
                .map(|(e, c)| ([0, e[1], e[2]], c.clone()))
                .collect(),
        }
    }

    /// Substitutes the `y, z` series `inner` (no `x`, zero constant term) for
    /// `x`, by Horner's scheme over the slices in `x`. The result has caps
    /// `[0, min(dy), min(dz)]`.
    pub fn compose_x(&self, inner: &Self) -> Self {
        assert!(
            inner.terms().all(|(e, _)| e[0] == 0),
            "substituted series must not contain x"
        );
        assert!(
            inner.coeff([0, 0, 0]).is_zero(),
            "substituted series must vanish at the origin"
        );
        let caps = [
            0,
            self.caps[1].min(inner.caps[1]),
            self.caps[2].min(inner.caps[2]),
        ];
        let inner = inner.truncate(caps);
        let mut acc = Self::zero(caps);
        for ex in (0..=self.caps[0]).rev() {
            let slice = self.x_slice(ex).truncate(caps);
            acc = acc.mul(&inner).add(&slice).expect("caps aligned");
        }
        acc
    }

    /// `1 / (1 + w)` for `w` without constant term.
    pub fn one_plus_inverse(w: &Self) -> Self {
        assert!(w.coeff([0, 0, 0]).is_zero(), "w must vanish at the origin");
        let minus_w = w.neg();
        let mut power = Self::one(w.caps);
        let mut acc = Self::zero(w.caps);
        while !power.is_zero() {
            acc = acc.add(&power).expect("caps aligned");
            power = power.mul(&minus_w);
        }
        acc
    }

    /// JSON-friendly dump of the stored terms.
    pub fn dump(&self) -> Vec<SeriesTerm> {
        self.terms()
            .map(|(e, c)| SeriesTerm {
                ex: e[0],
                ey: e[1],
                ez: e[2],
                coef: c.to_string(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub ex: u32,
    pub ey: u32,
    pub ez: u32,
    pub coef: String,
}

/// A monomial where the two sides of a checked identity differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub exponents: Exponents,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of an identity check together with the box that was compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub holds: bool,
    /// Inclusive maximum exponents of the compared monomials.
    pub window: Exponents,
    /// Number of monomials compared, zeros included.
    pub compared: usize,
    pub first_discrepancy: Option<Discrepancy>,
}

/// Compares every monomial in the box `window`.
pub fn compare_on<T: Scalar>(
    lhs: &TruncSeries3<T>,
    rhs: &TruncSeries3<T>,
    window: Exponents,
) -> IdentityReport {
    let mut compared = 0;
    let mut first = None;
    for ex in 0..=window[0] {
        for ey in 0..=window[1] {
            for ez in 0..=window[2] {
                compared += 1;
                let e = [ex, ey, ez];
                let (a, b) = (lhs.coeff(e), rhs.coeff(e));
                if first.is_none() && a != b {
                    first = Some(Discrepancy {
                        exponents: e,
                        lhs: a.to_string(),
                        rhs: b.to_string(),
                    });
                }
            }
        }
    }
    IdentityReport {
        holds: first.is_none(),
        window,
        compared,
        first_discrepancy: first,
    }
}

/// `K(x, y, z) = x (1 + z)(1 + y^2 z) - y z`.
pub fn kernel<T: Scalar>(caps: Exponents) -> TruncSeries3<T> {
    TruncSeries3::from_terms(
        caps,
        [
            ([1, 0, 0], T::one()),
            ([1, 0, 1], T::one()),
            ([1, 2, 1], T::one()),
            ([1, 2, 2], T::one()),
            ([0, 1, 1], -T::one()),
        ],
    )
}

fn yz<T: Scalar>(caps: Exponents) -> TruncSeries3<T> {
    TruncSeries3::monomial(caps, [0, 1, 1], T::one())
}

fn x_times<T: Scalar>(s: &TruncSeries3<T>) -> TruncSeries3<T> {
    s.mul(&TruncSeries3::from_terms(s.caps(), [([1, 0, 0], T::one())]))
        .truncate(s.caps())
}

/// The generating function truncated to `caps`, read from `table`.
///
/// Panics if the table stops short of `caps[0]`.
pub fn build_g_from(table: &WalkTable, caps: Exponents) -> TruncSeries3<ExactInt> {
    assert!(table.m_max() >= caps[0] as usize, "walk table too short for caps");
    let mut g = TruncSeries3::zero(caps);
    for (m, n1, n2, value) in table.nonzero() {
        let e = [m as u32, n1 as u32, n2 as u32];
        if within(&e, &caps) {
            g.set_coeff(e, value.clone());
        }
    }
    g
}

pub fn build_g(caps: Exponents) -> TruncSeries3<ExactInt> {
    build_g_from(&WalkTable::new(caps[0] as usize), caps)
}

/// `H = K G + y z`; its coefficients are the boundary values `F~`.
pub fn build_h<T: Scalar>(g: &TruncSeries3<T>) -> TruncSeries3<T> {
    kernel(g.caps())
        .mul(g)
        .add(&yz(g.caps()))
        .expect("caps aligned")
}

/// Checks `K G = x(1+z) G(x,0,z) + x G(x,y,0) - x G(x,0,0) - y z` on the full
/// cap box of `g`.
pub fn verify_kernel_equation<T: Scalar>(g: &TruncSeries3<T>) -> IdentityReport {
    let caps = g.caps();
    let lhs = kernel(caps).mul(g);
    let one_plus_z = TruncSeries3::from_terms(caps, [([0, 0, 0], T::one()), ([0, 0, 1], T::one())]);
    let rhs = x_times(&g.at_y_zero())
        .mul(&one_plus_z)
        .add(&x_times(&g.at_z_zero()))
        .and_then(|s| s.sub(&x_times(&g.at_yz_zero())))
        .and_then(|s| s.sub(&yz(caps)))
        .expect("caps aligned");
    compare_on(&lhs, &rhs, caps)
}

/// Checks `H(x,y,z) = H(x,0,z) + H(x,y,0) - H(x,0,0)`, i.e. that no monomial
/// of `H` involves both `y` and `z`.
pub fn verify_h_equation<T: Scalar>(g: &TruncSeries3<T>) -> IdentityReport {
    let h = build_h(g);
    let rhs = h
        .at_y_zero()
        .add(&h.at_z_zero())
        .and_then(|s| s.sub(&h.at_yz_zero()))
        .expect("caps aligned");
    compare_on(&h, &rhs, g.caps())
}

/// Series of the kernel root `x(y, z) = y z / ((1 + z)(1 + y^2 z))`, caps
/// `[0, dy, dz]`.
pub fn x_of_yz<T: Scalar>(dy: u32, dz: u32) -> TruncSeries3<T> {
    let caps = [0, dy, dz];
    let z = TruncSeries3::monomial(caps, [0, 0, 1], T::one());
    let y2z = TruncSeries3::monomial(caps, [0, 2, 1], T::one());
    yz(caps)
        .mul(&TruncSeries3::one_plus_inverse(&z))
        .mul(&TruncSeries3::one_plus_inverse(&y2z))
}

/// Left-hand side of the root identity,
/// `H(x(y,z),0,z) + H(x(y,z),y,0) - H(x(y,z),0,0)`, with caps
/// `[0, dy, dz]` of `h`.
pub fn root_identity_lhs<T: Scalar>(h: &TruncSeries3<T>) -> TruncSeries3<T> {
    let caps = h.caps();
    let root = x_of_yz(caps[1], caps[2]);
    h.at_y_zero()
        .compose_x(&root)
        .add(&h.at_z_zero().compose_x(&root))
        .and_then(|s| s.sub(&h.at_yz_zero().compose_x(&root)))
        .expect("caps aligned")
}

/// Checks that the root identity's left side equals `y z`.
///
/// Every dropped term `x^m` with `m > dx` has `z`-order above `dx`, and the
/// dropped `z^n2` (resp. `y^n1`) terms of the sections have `z`-order above
/// `dz` (resp. `y`-order above `dy`), so the window is
/// `ey <= dy, ez <= min(dx, dz)`.
pub fn verify_root_identity<T: Scalar>(g: &TruncSeries3<T>) -> IdentityReport {
    let caps = g.caps();
    let lhs = root_identity_lhs(&build_h(g));
    let rhs = yz([0, caps[1], caps[2]]);
    compare_on(&lhs, &rhs, [0, caps[1], caps[0].min(caps[2])])
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = TruncSeries3<i64>;

    #[test]
    fn ring_basics() {
        let caps = [2, 0, 0];
        let a = S::from_terms(caps, [([0, 0, 0], 1), ([1, 0, 0], 1)]);
        let b = S::from_terms(caps, [([0, 0, 0], 1), ([1, 0, 0], -1)]);
        let p = a.mul(&b);
        assert_eq!(p, S::from_terms(caps, [([0, 0, 0], 1), ([2, 0, 0], -1)]));
        assert!(a.mul(&S::zero(caps)).is_zero());
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn add_requires_matching_caps() {
        let a = S::one([1, 1, 1]);
        let b = S::one([1, 1, 2]);
        assert!(matches!(a.add(&b), Err(Error::CapMismatch { .. })));
        assert_eq!(a.mul(&b).caps(), [1, 1, 1]);
    }

    #[test]
    fn truncation_drops_high_terms() {
        let s = S::from_terms([1, 1, 1], [([2, 0, 0], 5), ([1, 1, 1], 3)]);
        assert_eq!(s.num_terms(), 1);
        assert_eq!(s.coeff([1, 1, 1]), 3);
        assert_eq!(s.coeff([2, 0, 0]), 0);
    }

    #[test]
    fn g_coefficients() {
        let g = build_g([4, 4, 4]);
        assert_eq!(g.coeff([0, 0, 0]), 1.into());
        assert_eq!(g.coeff([2, 0, 1]), 1.into());
        assert_eq!(g.coeff([1, 1, 0]), 1.into());
        assert_eq!(g.mul(&TruncSeries3::one([4, 4, 4])).coeff([2, 0, 0]), 2.into());
    }

    #[test]
    fn kernel_has_five_monomials() {
        let k: S = kernel([3, 3, 3]);
        let terms: Vec<_> = k.terms().map(|(e, c)| (*e, *c)).collect();
        assert_eq!(
            terms,
            vec![
                ([0, 1, 1], -1),
                ([1, 0, 0], 1),
                ([1, 0, 1], 1),
                ([1, 2, 1], 1),
                ([1, 2, 2], 1)
            ]
        );
    }

    #[test]
    fn h_coefficients() {
        let h = build_h(&build_g([7, 5, 5]));
        for n in 0..3u32 {
            let walks = WalkTable::new(2 * n as usize);
            assert_eq!(h.coeff([2 * n + 1, 0, 0]), walks.get(2 * n as usize, 0, 0).clone());
        }
        assert_eq!(h.coeff([3, 0, 1]), 3.into());
        assert!(h.terms().all(|(e, _)| e[1] == 0 || e[2] == 0));
    }

    #[test]
    fn root_series_examples() {
        let x: S = x_of_yz(6, 6);
        assert_eq!(x.coeff([0, 0, 0]), 0);
        assert_eq!(x.coeff([0, 1, 1]), 1);
        assert_eq!(x.coeff([0, 2, 1]), 0);
        assert_eq!(x.coeff([0, 1, 2]), -1);
        // The (1 + y^2 z) factor contributes here.
        assert_eq!(x.coeff([0, 3, 2]), -1);
    }

    #[test]
    fn equations_hold_small() {
        for caps in [[1, 1, 1], [4, 3, 5], [6, 6, 6]] {
            let g = build_g(caps);
            assert!(verify_kernel_equation(&g).holds, "kernel at {caps:?}");
            assert!(verify_h_equation(&g).holds, "H at {caps:?}");
            assert!(verify_root_identity(&g).holds, "root at {caps:?}");
        }
    }

    #[test]
    fn windows_are_reported() {
        let g = build_g([5, 7, 9]);
        let r = verify_root_identity(&g);
        assert_eq!(r.window, [0, 7, 5]);
        assert_eq!(r.compared, 8 * 6);
        let k = verify_kernel_equation(&g);
        assert_eq!(k.window, [5, 7, 9]);
        assert_eq!(k.compared, 6 * 8 * 10);
    }

    #[test]
    fn dump_lists_terms() {
        let s = S::from_terms([1, 1, 1], [([1, 0, 1], -4)]);
        assert_eq!(
            serde_json::to_string(&s.dump()).unwrap(),
            r#"[{"ex":1,"ey":0,"ez":1,"coef":"-4"}]"#
        );
    }
}
