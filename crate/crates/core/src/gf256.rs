//! Arithmetic in GF(2^8) with the irreducible polynomial
//! x^8 + x^4 + x^3 + x^2 + 1 (0x11D).
//!
//! Elements are bytes; addition is XOR and multiplication goes through
//! log/antilog tables generated at compile time, so there is no runtime
//! initialization to race on. The field is fixed: byte-aligned symbols
//! cover every node count this crate supports (n <= 255).

use crate::error::{Error, Result};

/// Reduction mask for x^8 + x^4 + x^3 + x^2 + 1, low eight bits of 0x11D.
const POLY: u16 = 0x1D;

/// x itself generates the multiplicative group for this polynomial.
const GENERATOR: u8 = 0x02;

static LOG: [u8; 256] = build_log_table();
static EXP: [u8; 512] = build_exp_table();

const fn build_exp_table() -> [u8; 512] {
    let mut table = [0u8; 512];
    let mut val: u16 = 1;
    let mut i = 0usize;
    while i < 255 {
        table[i] = val as u8;
        table[i + 255] = val as u8; // doubled so EXP[a + b] needs no reduction
        val <<= 1;
        if val & 0x100 != 0 {
            val ^= 0x100 | POLY;
        }
        i += 1;
    }
    table[255] = 1;
    table[510] = 1;
    table
}

const fn build_log_table() -> [u8; 256] {
    let mut table = [0u8; 256];
    let mut val: u16 = 1;
    let mut i = 0u8;
    loop {
        table[val as usize] = i;
        val <<= 1;
        if val & 0x100 != 0 {
            val ^= 0x100 | POLY;
        }
        if i == 254 {
            break;
        }
        i += 1;
    }
    table
}

/// An element of GF(256).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
#[repr(transparent)]
pub struct Gf256(pub u8);

impl Gf256 {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    pub const ALPHA: Self = Self(GENERATOR);

    #[inline]
    pub const fn new(val: u8) -> Self {
        Self(val)
    }

    #[inline]
    pub const fn raw(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; zero has none.
    #[inline]
    pub fn inv(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(EXP[255 - LOG[self.0 as usize] as usize]))
    }

    /// `self^exp` with the usual convention 0^0 = 1.
    pub fn pow(self, exp: u32) -> Self {
        if exp == 0 {
            return Self::ONE;
        }
        if self.is_zero() {
            return Self::ZERO;
        }
        let log_a = u32::from(LOG[self.0 as usize]);
        Self(EXP[(log_a * exp % 255) as usize])
    }
}

impl std::fmt::Debug for Gf256 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Gf256({})", self.0)
    }
}

impl std::fmt::Display for Gf256 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::ops::Add for Gf256 {
    type Output = Self;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)] // addition is xor in characteristic 2
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl std::ops::Sub for Gf256 {
    type Output = Self;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl std::ops::Mul for Gf256 {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        if self.0 == 0 || rhs.0 == 0 {
            return Self::ZERO;
        }
        Self(EXP[LOG[self.0 as usize] as usize + LOG[rhs.0 as usize] as usize])
    }
}

impl std::ops::AddAssign for Gf256 {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl std::ops::MulAssign for Gf256 {
    #[inline]
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn additive_identity() {
        for a in 0u8..=255 {
            assert_eq!(Gf256(a) + Gf256::ZERO, Gf256(a));
        }
    }

    #[test]
    fn characteristic_two() {
        for a in 0u8..=255 {
            assert_eq!(Gf256(a) + Gf256(a), Gf256::ZERO);
        }
    }

    #[test]
    fn multiplicative_identity() {
        for a in 0u8..=255 {
            assert_eq!(Gf256(a) * Gf256::ONE, Gf256(a));
        }
    }

    #[test]
    fn inverse_exhaustive() {
        // Every nonzero g has g * inv(g) = 1; checked over all 255 elements.
        for g in 1u8..=255 {
            let h = Gf256(g).inv().unwrap();
            assert_eq!(Gf256(g) * h, Gf256::ONE, "g = {g}");
        }
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert!(matches!(Gf256::ZERO.inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn inverse_matches_exhaustive_search() {
        // Independent oracle: find the inverse by scanning all nonzero
        // elements, then compare with the table-based inverse.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = Gf256(rng.gen_range(1..=255u8));
            let by_search = (1u8..=255)
                .map(Gf256)
                .find(|&h| g * h == Gf256::ONE)
                .unwrap();
            assert_eq!(g.inv().unwrap(), by_search);
        }
    }

    #[test]
    fn associativity_and_distributivity_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10_000 {
            let a = Gf256(rng.gen());
            let b = Gf256(rng.gen());
            let c = Gf256(rng.gen());
            assert_eq!((a + b) + c, a + (b + c));
            assert_eq!((a * b) * c, a * (b * c));
            assert_eq!(a * (b + c), a * b + a * c);
        }
    }

    #[test]
    fn pow_agrees_with_repeated_multiplication() {
        for a in [Gf256(0), Gf256(1), Gf256(2), Gf256(37), Gf256(255)] {
            let mut acc = Gf256::ONE;
            for e in 0..20u32 {
                assert_eq!(a.pow(e), acc, "a = {a}, e = {e}");
                acc *= a;
            }
        }
    }

    #[test]
    fn generator_has_full_order() {
        let mut seen = [false; 256];
        let mut v = Gf256::ONE;
        for _ in 0..255 {
            assert!(!seen[v.raw() as usize]);
            seen[v.raw() as usize] = true;
            v *= Gf256::ALPHA;
        }
        assert_eq!(v, Gf256::ONE);
    }
}
