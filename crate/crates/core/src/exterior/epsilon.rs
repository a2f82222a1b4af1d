//! The Levi-Civita symbol and Kronecker delta on frame indices.

use super::tensor::{Basis, Slot, TensorForm};
use crate::field::ScalarField;

/// `ε_abc` with `ε_123 = +1` (0-based: `ε(0,1,2) = 1`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EpsilonSymbol;

impl EpsilonSymbol {
    pub fn get(a: usize, b: usize, c: usize) -> i64 {
        if a == b || b == c || a == c {
            return 0;
        }
        match (a, b, c) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            _ => -1,
        }
    }

    /// ε as a degree-0 frame tensor with the given slot variances.
    pub fn tensor(slots: [Slot; 3]) -> TensorForm {
        TensorForm::from_scalars(&slots, Basis::Frame, |i| ScalarField::int(Self::get(i[0], i[1], i[2])))
    }
}

pub fn eps(a: usize, b: usize, c: usize) -> i64 {
    EpsilonSymbol::get(a, b, c)
}

pub fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contractions() {
        let mut full = 0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    full += eps(a, b, c) * eps(a, b, c);
                }
            }
        }
        assert_eq!(full, 6);
        for c in 0..3 {
            for m in 0..3 {
                let s: i64 = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).map(|(a, b)| eps(a, b, c) * eps(a, b, m)).sum();
                assert_eq!(s, 2 * delta(c, m));
            }
        }
        for b in 0..3 {
            for c in 0..3 {
                for l in 0..3 {
                    for m in 0..3 {
                        let s: i64 = (0..3).map(|a| eps(a, b, c) * eps(a, l, m)).sum();
                        assert_eq!(s, delta(b, l) * delta(c, m) - delta(c, l) * delta(b, m));
                    }
                }
            }
        }
        for idx in 0..729usize {
            let d: Vec<usize> = (0..6).map(|k| (idx / 3usize.pow(k)) % 3).collect();
            let (a, b, c, k, l, m) = (d[0], d[1], d[2], d[3], d[4], d[5]);
            let det = delta(a, k) * (delta(b, l) * delta(c, m) - delta(b, m) * delta(c, l))
                - delta(a, l) * (delta(b, k) * delta(c, m) - delta(b, m) * delta(c, k))
                + delta(a, m) * (delta(b, k) * delta(c, l) - delta(b, l) * delta(c, k));
            assert_eq!(eps(a, b, c) * eps(k, l, m), det);
        }
    }
}
