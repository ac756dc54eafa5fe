//! Elements of the cyclic subalgebra `K<a>`, packed one coefficient per bit.
//!
//! Bit `i` of the word is the coefficient of `a^i`, so multiplication by `a^k`
//! is a rotation inside the low `2^(n-1)` bits.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::group::{Family, GroupSpec};

pub(crate) fn mask(half: usize) -> u128 {
    if half == 128 {
        u128::MAX
    } else {
        (1u128 << half) - 1
    }
}

/// `x * a^k` for `x` of width `half`.
#[inline]
pub(crate) fn rotate(x: u128, k: usize, half: usize) -> u128 {
    let k = k % half;
    if k == 0 {
        return x;
    }
    ((x << k) | (x >> (half - k))) & mask(half)
}

#[inline]
pub(crate) fn cyclic_mul(x: u128, y: u128, half: usize) -> u128 {
    let (mut x, y) = if x.count_ones() <= y.count_ones() {
        (x, y)
    } else {
        (y, x)
    };
    let mut acc = 0;
    while x != 0 {
        let i = x.trailing_zeros() as usize;
        acc ^= rotate(y, i, half);
        x &= x - 1;
    }
    acc
}

/// `a^i -> a^(-i)`.
#[inline]
fn invert_exponents(x: u128, half: usize) -> u128 {
    rotate(x.reverse_bits() >> (128 - half), 1, half)
}

/// `a^i -> a^(ic)` where `c` is the conjugation exponent of `spec`.
#[inline]
pub(crate) fn conjugate(x: u128, spec: &GroupSpec) -> u128 {
    let half = spec.half();
    let y = invert_exponents(x, half);
    match spec.family() {
        Family::Semidihedral => {
            // i * (2^(n-2) - 1) = -i + i * 2^(n-2): odd exponents pick up a shift
            const ODD: u128 = 0xAAAA_AAAA_AAAA_AAAA_AAAA_AAAA_AAAA_AAAA;
            let odd = y & ODD;
            (y & !ODD) | rotate(odd, half / 2, half)
        }
        _ => y,
    }
}

/// `x^2`, which in characteristic two sends `a^i` to `a^(2i)`.
#[inline]
pub(crate) fn square(x: u128, half: usize) -> u128 {
    let mut x = x;
    let mut acc = 0;
    while x != 0 {
        let i = x.trailing_zeros() as usize;
        acc ^= 1u128 << ((2 * i) % half);
        x &= x - 1;
    }
    acc
}

pub(crate) fn pow(x: u128, mut e: u64, half: usize) -> u128 {
    let mut base = x;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = cyclic_mul(acc, base, half);
        }
        base = square(base, half);
        e >>= 1;
    }
    acc
}

/// An element of `K<a>` for a fixed group.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicElement {
    spec: GroupSpec,
    bits: u128,
}

impl CyclicElement {
    pub fn from_bits(spec: GroupSpec, bits: u128) -> Self {
        CyclicElement {
            spec,
            bits: bits & mask(spec.half()),
        }
    }

    pub fn zero(spec: GroupSpec) -> Self {
        CyclicElement { spec, bits: 0 }
    }

    pub fn one(spec: GroupSpec) -> Self {
        CyclicElement { spec, bits: 1 }
    }

    /// `a^k`, exponent taken mod `2^(n-1)`.
    pub fn a_pow(spec: GroupSpec, k: i64) -> Self {
        let k = k.rem_euclid(spec.half() as i64) as usize;
        CyclicElement {
            spec,
            bits: 1u128 << k,
        }
    }

    /// Sum of the given powers of `a`; repeated exponents cancel.
    pub fn from_exponents(spec: GroupSpec, exps: impl IntoIterator<Item = i64>) -> Self {
        exps.into_iter()
            .map(|k| Self::a_pow(spec, k))
            .fold(Self::zero(spec), |acc, x| acc + x)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    pub fn augmentation(&self) -> u8 {
        (self.bits.count_ones() & 1) as u8
    }

    /// Exponents `i` with nonzero coefficient of `a^i`, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        (0..self.spec.half())
            .filter(|&i| self.bits >> i & 1 == 1)
            .collect()
    }

    /// `b^-1 x b`.
    pub fn bar(&self) -> Self {
        CyclicElement {
            spec: self.spec,
            bits: conjugate(self.bits, &self.spec),
        }
    }

    pub fn is_self_conjugated(&self) -> bool {
        self.bar() == *self
    }

    pub fn shift(&self, k: i64) -> Self {
        let half = self.spec.half();
        let k = k.rem_euclid(half as i64) as usize;
        CyclicElement {
            spec: self.spec,
            bits: rotate(self.bits, k, half),
        }
    }

    pub fn square(&self) -> Self {
        CyclicElement {
            spec: self.spec,
            bits: square(self.bits, self.spec.half()),
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        CyclicElement {
            spec: self.spec,
            bits: pow(self.bits, e, self.spec.half()),
        }
    }

    /// `x^-1 = x^(2^(n-1) - 1)`, valid for augmentation one.
    pub fn inverse(&self) -> Option<Self> {
        (self.augmentation() == 1).then(|| self.pow(self.spec.half() as u64 - 1))
    }

    /// Least `2^m` with `x^(2^m) = 1`, for an element of augmentation one.
    pub fn unit_order(&self) -> Option<u64> {
        if self.augmentation() != 1 {
            return None;
        }
        let mut x = *self;
        let mut order = 1;
        while !x.is_one() {
            x = x.square();
            order *= 2;
        }
        Some(order)
    }
}

impl Add for CyclicElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.spec, rhs.spec, "operands from different groups");
        CyclicElement {
            spec: self.spec,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl AddAssign for CyclicElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Mul for CyclicElement {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.spec, rhs.spec, "operands from different groups");
        CyclicElement {
            spec: self.spec,
            bits: cyclic_mul(self.bits, rhs.bits, self.spec.half()),
        }
    }
}

impl fmt::Display for CyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|i| if i == 0 { "1".into() } else { format!("a^{i}") })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for CyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.spec, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_matches_group_action() {
        for family in Family::ALL {
            for n in family.min_n()..=8 {
                let spec = GroupSpec::new(family, n).unwrap();
                for i in 0..spec.half() {
                    let x = CyclicElement::a_pow(spec, i as i64);
                    let expected = (i * spec.conj_exponent()) % spec.half();
                    assert_eq!(x.bar().exponents(), vec![expected], "{spec} a^{i}");
                }
            }
        }
    }

    #[test]
    fn rotation_is_multiplication_by_a() {
        let spec = GroupSpec::new(Family::Dihedral, 8).unwrap();
        let x = CyclicElement::from_exponents(spec, [0, 5, 127]);
        assert_eq!(x.shift(1).exponents(), vec![0, 1, 6]);
        assert_eq!(x * CyclicElement::a_pow(spec, 1), x.shift(1));
    }

    #[test]
    fn inverse_and_order() {
        let spec = GroupSpec::new(Family::Dihedral, 5).unwrap();
        let r = CyclicElement::from_exponents(spec, [0, 1, -1]);
        let inv = r.inverse().unwrap();
        assert!((r * inv).is_one());
        assert_eq!(r.unit_order(), Some(spec.derived_order() as u64));
        assert!(CyclicElement::from_exponents(spec, [0, 1]).inverse().is_none());
    }
}
