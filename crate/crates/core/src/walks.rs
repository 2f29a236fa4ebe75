//! Ground-truth enumeration of quarter-plane walks with steps
//! `E = (1,0)`, `W = (-1,0)`, `NE = (1,1)` and `SW = (-1,-1)`.
//!
//! [`WalkTable`] fills `F(m; n1, n2)` layer by layer in `m`. Each layer only
//! stores the box `0 <= n1, n2 <= m`, which contains the whole support.

use std::io::{BufRead, Write};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::binom_general;
use crate::error::{Error, Result};
use crate::ExactInt;

/// Necessary conditions for `F(m; n1, n2) != 0`: parity, `n1 <= m` and
/// `2 n2 <= n1 + m`, together with the quadrant itself.
pub fn reachable(m: i64, n1: i64, n2: i64) -> bool {
    m >= 0
        && n1 >= 0
        && n2 >= 0
        && (m - n1).rem_euclid(2) == 0
        && n1 <= m
        && 2 * n2 <= n1 + m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    // layers[m][n1 * (m + 1) + n2]
    layers: Vec<Vec<ExactInt>>,
}

impl WalkTable {
    /// Runs the step recurrence for every `m <= m_max`.
    pub fn new(m_max: usize) -> Self {
        let mut layers = Vec::with_capacity(m_max + 1);
        let mut origin = vec![BigInt::zero(); 1];
        origin[0] = BigInt::one();
        layers.push(origin);
        for m in 1..=m_max {
            let prev = &layers[m - 1];
            let at = |n1: i64, n2: i64| -> &ExactInt { lookup(prev, m - 1, n1, n2) };
            let width = m + 1;
            let mut layer = vec![BigInt::zero(); width * width];
            for n1 in 0..=m as i64 {
                for n2 in 0..=m as i64 {
                    if !reachable(m as i64, n1, n2) {
                        continue;
                    }
                    layer[n1 as usize * width + n2 as usize] = at(n1 + 1, n2)
                        + at(n1 - 1, n2)
                        + at(n1 + 1, n2 + 1)
                        + at(n1 - 1, n2 - 1);
                }
            }
            layers.push(layer);
        }
        WalkTable { layers }
    }

    pub fn m_max(&self) -> usize {
        self.layers.len() - 1
    }

    /// `F(m; n1, n2)`, or `None` when `m` exceeds the table.
    pub fn try_get(&self, m: usize, n1: i64, n2: i64) -> Option<&ExactInt> {
        self.layers.get(m).map(|layer| lookup(layer, m, n1, n2))
    }

    /// `F(m; n1, n2)`; coordinates outside the quadrant give zero.
    ///
    /// Panics if `m > self.m_max()`.
    pub fn get(&self, m: usize, n1: i64, n2: i64) -> &ExactInt {
        self.try_get(m, n1, n2)
            .unwrap_or_else(|| panic!("walk table built to m = {}, queried m = {m}", self.m_max()))
    }

    /// Boundary values `F~(m; n1, n2)` of `H = K G + y z`.
    ///
    /// Needs `m - 1 <= self.m_max()`.
    pub fn f_tilde(&self, m: usize, n1: usize, n2: usize) -> ExactInt {
        if m == 0 || (n1 != 0 && n2 != 0) {
            return BigInt::zero();
        }
        let (n1, n2) = (n1 as i64, n2 as i64);
        if n2 == 0 {
            self.get(m - 1, n1, 0).clone()
        } else {
            self.get(m - 1, 0, n2) + self.get(m - 1, 0, n2 - 1)
        }
    }

    /// Iterates over `(m, n1, n2, F)` for every nonzero entry, in
    /// lexicographic order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &ExactInt)> + '_ {
        self.layers.iter().enumerate().flat_map(|(m, layer)| {
            layer
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(idx, v)| (m, idx / (m + 1), idx % (m + 1), v))
        })
    }

    /// Writes one JSON record per nonzero entry.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for (m, n1, n2, value) in self.nonzero() {
            let record = WalkRecord {
                m: m as u64,
                n1: n1 as u64,
                n2: n2 as u64,
                count: value.to_string(),
            };
            serde_json::to_writer(&mut out, &record)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Reloads a table written by [`WalkTable::write_jsonl`].
    pub fn read_jsonl<R: BufRead>(input: R) -> Result<Self> {
        let mut records = Vec::new();
        for (idx, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |reason: String| Error::BadRecord {
                line: idx + 1,
                reason,
            };
            let record: WalkRecord = serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
            let value: ExactInt = record
                .count
                .parse()
                .map_err(|_| bad(format!("not a decimal integer: {:?}", record.count)))?;
            let (m, n1, n2) = (record.m as usize, record.n1 as usize, record.n2 as usize);
            if n1 > m || n2 > m {
                return Err(bad(format!("({m}; {n1}, {n2}) lies outside the support box")));
            }
            records.push((m, n1, n2, value));
        }
        let m_max = records
            .iter()
            .map(|r| r.0)
            .max()
            .ok_or_else(|| Error::BadRecord {
                line: 0,
                reason: "empty walk table".into(),
            })?;
        let mut layers: Vec<Vec<ExactInt>> = (0..=m_max)
            .map(|m| vec![BigInt::zero(); (m + 1) * (m + 1)])
            .collect();
        for (m, n1, n2, value) in records {
            layers[m][n1 * (m + 1) + n2] = value;
        }
        Ok(WalkTable { layers })
    }
}

fn lookup(layer: &[ExactInt], m: usize, n1: i64, n2: i64) -> &ExactInt {
    static ZERO: std::sync::OnceLock<ExactInt> = std::sync::OnceLock::new();
    let width = m as i64 + 1;
    if n1 < 0 || n2 < 0 || n1 >= width || n2 >= width {
        return ZERO.get_or_init(BigInt::zero);
    }
    &layer[(n1 * width + n2) as usize]
}

/// JSON-lines record of a single table entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkRecord {
    pub m: u64,
    pub n1: u64,
    pub n2: u64,
    #[serde(rename = "F")]
    pub count: String,
}

/// Number of `m`-step walks from the origin to `(n1, n2)`.
pub fn count_walks(m: usize, n1: i64, n2: i64) -> ExactInt {
    if !reachable(m as i64, n1, n2) {
        return BigInt::zero();
    }
    WalkTable::new(m).get(m, n1, n2).clone()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestWalk {
    pub length: u64,
    pub count: ExactInt,
}

/// Length and number of the shortest walks to `(n1, n2)`.
///
/// Below the diagonal only `E` and `NE` steps are used; above it only `W`
/// and `NE`, giving a ballot number.
pub fn shortest_walk(n1: u64, n2: u64) -> ShortestWalk {
    if n1 >= n2 {
        ShortestWalk {
            length: n1,
            count: binom_general(n1 as i64, n2 as i64),
        }
    } else {
        let (a, b) = (n1 as i64, n2 as i64);
        let len = 2 * b - a;
        ShortestWalk {
            length: len as u64,
            count: BigInt::from(a + 1) * binom_general(len + 1, b + 1) / BigInt::from(len + 1),
        }
    }
}

/// Same as [`shortest_walk`] but always through the upper-octant formula,
/// which is also valid on the diagonal.
pub fn shortest_walk_upper(n1: u64, n2: u64) -> ShortestWalk {
    let (a, b) = (n1 as i64, n2 as i64);
    let len = 2 * b - a;
    ShortestWalk {
        length: len as u64,
        count: BigInt::from(a + 1) * binom_general(len + 1, b + 1) / BigInt::from(len + 1),
    }
}

/// The packed boundary matrix: `f(i, j) = F~(i; 0, j - i)` on and above the
/// diagonal and `F~(j; i - j, 0)` below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMatrix {
    entries: Vec<Vec<ExactInt>>,
}

impl FMatrix {
    /// Entries `f(i, j)` for `0 <= i, j <= size`.
    pub fn from_table(table: &WalkTable, size: usize) -> Self {
        assert!(
            size == 0 || table.m_max() + 1 >= size,
            "f-matrix of size {size} needs the walk table to m = {}",
            size - 1
        );
        let entries = (0..=size)
            .map(|i| (0..=size).map(|j| f_entry(table, i, j)).collect())
            .collect();
        FMatrix { entries }
    }

    /// Largest index, i.e. the matrix is `(size + 1) x (size + 1)`.
    pub fn size(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactInt {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[ExactInt] {
        &self.entries[i]
    }

    pub fn rows(&self) -> &[Vec<ExactInt>] {
        &self.entries
    }
}

/// A single `f(i, j)` read from the walk table.
pub fn f_entry(table: &WalkTable, i: usize, j: usize) -> ExactInt {
    if i <= j {
        table.f_tilde(i, 0, j - i)
    } else {
        table.f_tilde(j, i - j, 0)
    }
}

pub fn build_f_matrix(size: usize) -> FMatrix {
    let table = WalkTable::new(size.saturating_sub(1));
    FMatrix::from_table(&table, size)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        BigInt::from(v)
    }

    #[test]
    fn counts_from_recurrence() {
        assert_eq!(count_walks(0, 0, 0), int(1));
        assert_eq!(count_walks(2, 0, 0), int(2));
        assert_eq!(count_walks(4, 0, 0), int(11));
        assert_eq!(count_walks(2, 0, 1), int(1));
        assert_eq!(count_walks(3, 0, 0), int(0));
        assert_eq!(count_walks(5, -1, 0), int(0));
        assert_eq!(count_walks(5, 2, -3), int(0));
    }

    #[test]
    fn reachability_examples() {
        assert!(reachable(3, 1, 0));
        assert!(!reachable(3, 0, 0));
        assert!(!reachable(2, 0, 2));
        assert!(!reachable(2, 3, 0));
        assert!(!reachable(2, -1, 0));
    }

    #[test]
    fn shortest_walk_examples() {
        assert_eq!(shortest_walk(3, 2), ShortestWalk { length: 3, count: int(3) });
        assert_eq!(shortest_walk(1, 2), ShortestWalk { length: 3, count: int(2) });
        for n in 0..8 {
            assert_eq!(shortest_walk(n, 0), ShortestWalk { length: n, count: int(1) });
            assert_eq!(
                shortest_walk(0, n),
                ShortestWalk { length: 2 * n, count: crate::arith::catalan(n) }
            );
            assert_eq!(shortest_walk(n, n), shortest_walk_upper(n, n));
        }
    }

    #[test]
    fn f_tilde_examples() {
        let table = WalkTable::new(8);
        for n in 0..4 {
            assert_eq!(table.f_tilde(2 * n + 1, 0, 0), *table.get(2 * n, 0, 0));
        }
        assert_eq!(table.f_tilde(1, 1, 1), int(0));
        assert_eq!(table.f_tilde(3, 0, 1), int(3));
        assert_eq!(table.f_tilde(0, 4, 0), int(0));
    }

    #[test]
    fn f_matrix_examples() {
        let f = build_f_matrix(5);
        assert_eq!(f.size(), 5);
        assert_eq!(*f.get(3, 3), int(2));
        assert_eq!(*f.get(5, 5), int(11));
        assert!(f.row(0).iter().all(|v| v.is_zero()));
        assert_eq!(
            f.row(3).to_vec(),
            [0, 0, 1, 2, 3, 1].map(int).to_vec()
        );
    }

    #[test]
    fn jsonl_round_trip() {
        let table = WalkTable::new(9);
        let mut buf = Vec::new();
        table.write_jsonl(&mut buf).unwrap();
        let first = std::str::from_utf8(&buf).unwrap().lines().next().unwrap();
        assert_eq!(first, r#"{"m":0,"n1":0,"n2":0,"F":"1"}"#);
        let back = WalkTable::read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(back, table);
    }

    #[test]
    fn jsonl_rejects_garbage() {
        let err = WalkTable::read_jsonl(&b"{\"m\":1,\"n1\":1,\"n2\":0,\"F\":\"x\"}\n"[..]).unwrap_err();
        assert!(matches!(err, Error::BadRecord { line: 1, .. }));
        assert!(WalkTable::read_jsonl(&b""[..]).is_err());
        assert!(WalkTable::read_jsonl(&b"{\"m\":1,\"n1\":3,\"n2\":0,\"F\":\"1\"}\n"[..]).is_err());
    }
}
