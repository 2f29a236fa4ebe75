//! Frozen reference data and test-only oracles shared by the integration tests.

#![allow(dead_code)]

use gessel::ExactInt;
use num_bigint::BigInt;
use num_traits::Zero;

/// Returns to the origin, `F(2n; 0, 0)` for `n = 0..=16`.
pub const GESSEL_NUMBERS: [u64; 17] = [
    1, 2, 11, 85, 782, 8004, 88044, 1020162, 12294260, 152787976, 1946310467,
    25302036071, 334560525538, 4488007049900, 60955295750460, 836838395382645,
    11597595644244186,
];

/// The packed boundary matrix `f(i, j)`, `0 <= i, j <= 13`.
pub const F_DISPLAY: [[i64; 14]; 14] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 2, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 5, 11, 19, 10, 2, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 9, 37, 85, 158, 103, 35, 5, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 14, 87, 332, 782, 1521, 1126, 499, 126],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 20, 172, 911, 3343, 8004, 16056, 12941],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 27, 305, 2096, 10147, 36350, 88044],
];

/// The Hessenberg matrix whose determinant is `F(2; 0, 0)`.
pub const H24_DISPLAY: [[i64; 20]; 20] = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0],
];

/// Nonzero segments of the odd rows of the packed matrix.
pub const UNIVERSAL: [&[u64]; 8] = [
    &[1, 1],
    &[1, 2, 3, 1],
    &[1, 5, 11, 19, 10, 2],
    &[1, 9, 37, 85, 158, 103, 35, 5],
    &[1, 14, 87, 332, 782, 1521, 1126, 499, 126, 14],
    &[1, 20, 172, 911, 3343, 8004, 16056, 12941, 6765, 2296, 462, 42],
    &[1, 27, 305, 2096, 10147, 36350, 88044, 180621, 154750, 90681, 37178, 10254, 1716, 132],
    &[1, 35, 501, 4300, 25927, 118472, 417565, 1020162, 2128824, 1910006, 1217523, 570409, 193137, 44913, 6435, 429],
];

pub fn int(v: i64) -> ExactInt {
    BigInt::from(v)
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<ExactInt>]) -> ExactInt {
    let n = m.len();
    if n == 0 {
        return int(1);
    }
    let mut total = BigInt::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ExactInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
