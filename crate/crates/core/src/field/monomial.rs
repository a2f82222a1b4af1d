//! Packed exponent triples.

use std::fmt;

const FIELD_BITS: u32 = 16;
const MASK: u64 = (1 << FIELD_BITS) - 1;

/// A monomial x1^i x2^j x3^k packed into one word as `deg | i | j | k`.
///
/// The packing puts the total degree in the top field, so comparing the raw
/// words is exactly graded-lexicographic order with x1 > x2 > x3, and
/// multiplying two monomials is a single addition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn new(exps: [u32; 3]) -> Self {
        let deg: u32 = exps.iter().sum();
        assert!(deg <= MASK as u32, "monomial degree {deg} exceeds packing range");
        Monomial(
            (u64::from(deg) << 48)
                | (u64::from(exps[0]) << 32)
                | (u64::from(exps[1]) << 16)
                | u64::from(exps[2]),
        )
    }

    /// The coordinate monomial x_{axis+1}.
    pub fn var(axis: usize) -> Self {
        let mut e = [0; 3];
        e[axis] = 1;
        Monomial::new(e)
    }

    pub fn exps(self) -> [u32; 3] {
        [self.exp(0), self.exp(1), self.exp(2)]
    }

    pub fn exp(self, axis: usize) -> u32 {
        let shift = 32 - 16 * axis as u32;
        ((self.0 >> shift) & MASK) as u32
    }

    pub fn degree(self) -> u32 {
        (self.0 >> 48) as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        debug_assert!(self.degree() + other.degree() <= MASK as u32);
        Monomial(self.0 + other.0)
    }

    pub fn divides(self, other: Monomial) -> bool {
        (0..3).all(|i| self.exp(i) <= other.exp(i))
    }

    /// `other / self`; caller guarantees `self.divides(other)`.
    pub fn div_into(self, other: Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0 - self.0)
    }

    pub fn min(self, other: Monomial) -> Monomial {
        let a = self.exps();
        let b = other.exps();
        Monomial::new([a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2])])
    }

    /// Derivative with respect to `axis`: the lowered monomial and the exponent
    /// that comes down, or `None` when the variable is absent.
    pub fn derive(self, axis: usize) -> Option<(u32, Monomial)> {
        let e = self.exp(axis);
        if e == 0 {
            return None;
        }
        let mut ex = self.exps();
        ex[axis] -= 1;
        Some((e, Monomial::new(ex)))
    }

    pub(crate) fn fmt_with(self, f: &mut fmt::Formatter<'_>, names: &[&str; 3]) -> fmt::Result {
        let mut first = true;
        for (axis, name) in names.iter().enumerate() {
            let e = self.exp(axis);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}
