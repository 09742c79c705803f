use std::fmt;

use serde::{Deserialize, Serialize};

/// 3×3 matrix over the two-element field; row `i` is stored in the low
/// three bits of `rows[i]`, most significant bit first (`0b100` is `100`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BinaryMatrix3 {
    rows: [u8; 3],
}

impl BinaryMatrix3 {
    pub const IDENTITY: Self = Self {
        rows: [0b100, 0b010, 0b001],
    };

    pub fn from_rows(rows: [u8; 3]) -> Self {
        Self {
            rows: rows.map(|r| r & 0b111),
        }
    }

    /// Parses rows written as bit strings, e.g. `["100", "001", "010"]`.
    pub fn parse_rows(rows: [&str; 3]) -> Option<Self> {
        let mut out = [0u8; 3];
        for (slot, text) in out.iter_mut().zip(rows) {
            if text.len() != 3 {
                return None;
            }
            *slot = u8::from_str_radix(text, 2).ok()?;
        }
        Some(Self::from_rows(out))
    }

    pub fn rows(&self) -> [u8; 3] {
        self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        (self.rows[i] >> (2 - j)) & 1
    }

    pub fn transpose(&self) -> Self {
        let mut rows = [0u8; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..3 {
                *row |= self.entry(j, i) << (2 - j);
            }
        }
        Self { rows }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut rows = [0u8; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..3 {
                if self.entry(i, j) == 1 {
                    *row ^= other.rows[j];
                }
            }
        }
        Self { rows }
    }

    pub fn determinant(&self) -> u8 {
        let e = |i, j| self.entry(i, j);
        (e(0, 0) & (e(1, 1) & e(2, 2) ^ e(1, 2) & e(2, 1)))
            ^ (e(0, 1) & (e(1, 0) & e(2, 2) ^ e(1, 2) & e(2, 0)))
            ^ (e(0, 2) & (e(1, 0) & e(2, 1) ^ e(1, 1) & e(2, 0)))
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant() == 1
    }

    /// Multiplicative order; `None` for singular matrices.
    pub fn order(&self) -> Option<u64> {
        if !self.is_invertible() {
            return None;
        }
        let mut m = *self;
        let mut k = 1;
        while m != Self::IDENTITY {
            m = m.mul(self);
            k += 1;
        }
        Some(k)
    }
}

impl fmt::Display for BinaryMatrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:03b},{:03b},{:03b})",
            self.rows[0], self.rows[1], self.rows[2]
        )
    }
}

/// The 168 invertible matrices, in increasing row order.
pub fn gl32_elements() -> Vec<BinaryMatrix3> {
    (0u16..512)
        .map(|bits| BinaryMatrix3::from_rows([(bits >> 6) as u8, (bits >> 3) as u8, bits as u8]))
        .filter(BinaryMatrix3::is_invertible)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_of_order_168() {
        let all = gl32_elements();
        assert_eq!(all.len(), 168);
        assert!(all.contains(&BinaryMatrix3::IDENTITY));
        for a in &all[..20] {
            for b in &all {
                assert!(a.mul(b).is_invertible());
            }
            assert_eq!(a.mul(&BinaryMatrix3::IDENTITY), *a);
        }
    }

    #[test]
    fn printed_generator_orders() {
        let m1 = BinaryMatrix3::parse_rows(["100", "001", "010"]).unwrap();
        let m2 = BinaryMatrix3::parse_rows(["001", "101", "010"])
            .unwrap()
            .transpose();
        assert_eq!(m1.order(), Some(2));
        assert_eq!(m2.order(), Some(7));
        assert_eq!(m1.mul(&m2).order(), Some(3));
        assert_eq!(m1.transpose(), m1);
    }
}
