use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest modulus accepted. Entries fit in a half word, so a product of two
/// entries fits in `u32` and sums of up to 2^32 products fit in `u64`.
pub const MAX_MODULUS: u32 = 1 << 16;

/// Arithmetic context for GF(p).
///
/// Reduction of 32-bit values uses a precomputed 64-bit reciprocal
/// (Lemire's fastmod), which matters in the elimination inner loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
    magic: u64,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Self::new_unchecked(p))
    }

    pub(crate) fn new_unchecked(p: u32) -> Self {
        Fp { p, magic: (u64::MAX / p as u64).wrapping_add(1) }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u32) -> u32 {
        let low = self.magic.wrapping_mul(x as u64);
        ((low as u128 * self.p as u128) >> 64) as u32
    }

    #[inline]
    pub fn reduce64(&self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    #[inline]
    pub fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce(a * b)
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero in GF({})", self.p);
        // extended Euclid on signed integers
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        self.from_i64(t0)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// A single residue modulo a prime, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    p: u32,
}

impl FieldElement {
    pub fn new(value: i64, p: u32) -> Result<Self> {
        Fp::new(p)?;
        Ok(FieldElement { value: value.rem_euclid(p as i64) as u32, p })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let f = Fp::new_unchecked(self.p);
        Some(FieldElement { value: f.inv(self.value), p: self.p })
    }

    fn ctx(&self, other: &Self) -> Fp {
        assert_eq!(self.p, other.p, "mixed moduli");
        Fp::new_unchecked(self.p)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let f = self.ctx(&rhs);
        FieldElement { value: f.add(self.value, rhs.value), p: self.p }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let f = self.ctx(&rhs);
        FieldElement { value: f.sub(self.value, rhs.value), p: self.p }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let f = self.ctx(&rhs);
        FieldElement { value: f.mul(self.value, rhs.value), p: self.p }
    }
}

impl Div for FieldElement {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero")
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        FieldElement { value: Fp::new_unchecked(self.p).neg(self.value), p: self.p }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_composite_and_large_moduli() {
        assert!(Fp::new(4).is_err());
        assert!(Fp::new(1).is_err());
        assert!(Fp::new(65537).is_err());
        assert!(Fp::new(65521).is_ok());
    }

    #[test]
    fn fastmod_matches_remainder() {
        for p in [2u32, 3, 5, 7, 251, 65521] {
            let f = Fp::new(p).unwrap();
            for x in [0u32, 1, p - 1, p, p + 1, 12345, u32::MAX, u32::MAX - 1, (p - 1) * (p - 1)] {
                assert_eq!(f.reduce(x), x % p, "p={p} x={x}");
            }
        }
    }

    fn elem(p: u32) -> impl Strategy<Value = FieldElement> {
        (0..p as i64).prop_map(move |v| FieldElement::new(v, p).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(p in prop::sample::select(vec![2u32, 3, 5, 7, 11, 13, 101, 65521]),
                        seed in any::<[u16; 3]>()) {
            let a = FieldElement::new(seed[0] as i64, p).unwrap();
            let b = FieldElement::new(seed[1] as i64, p).unwrap();
            let c = FieldElement::new(seed[2] as i64, p).unwrap();
            let zero = FieldElement::new(0, p).unwrap();
            let one = FieldElement::new(1, p).unwrap();
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!(a + (-a), zero);
            prop_assert_eq!(a - b + b, a);
            if !a.is_zero() {
                prop_assert_eq!(a * a.inverse().unwrap(), one);
                prop_assert_eq!(b / a * a, b);
            }
        }

        #[test]
        fn fermat(a in elem(7)) {
            let f = Fp::new(7).unwrap();
            prop_assert_eq!(f.pow(a.value(), 7), a.value());
        }
    }
}
