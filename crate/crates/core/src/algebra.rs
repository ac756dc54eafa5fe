//! The group algebra `KG` over the two-element field in component form.
//!
//! Every element is written uniquely as `x1 + x2 b` with `x1, x2` in `K<a>`.
//! Multiplication follows
//!
//! ```text
//! (f1 + f2 b)(h1 + h2 b) = (f1 h1 + f2 bar(h2) alpha) + (f2 bar(h1) + f1 h2) b
//! ```
//!
//! where `alpha = b^2` is `1` for the dihedral and semidihedral groups and the
//! central element `a^(2^(n-2))` for the quaternion group.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclic::{self, mask, rotate, CyclicElement};
use crate::error::{Error, Result};
use crate::group::{Family, GroupElement, GroupSpec};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    spec: GroupSpec,
    x1: u128,
    x2: u128,
}

impl AlgebraElement {
    pub fn zero(spec: GroupSpec) -> Self {
        AlgebraElement { spec, x1: 0, x2: 0 }
    }

    pub fn one(spec: GroupSpec) -> Self {
        AlgebraElement { spec, x1: 1, x2: 0 }
    }

    pub fn from_components(x1: CyclicElement, x2: CyclicElement) -> Self {
        assert_eq!(x1.spec(), x2.spec(), "components from different groups");
        AlgebraElement {
            spec: x1.spec(),
            x1: x1.bits(),
            x2: x2.bits(),
        }
    }

    pub fn from_bits(spec: GroupSpec, x1: u128, x2: u128) -> Self {
        let m = mask(spec.half());
        AlgebraElement {
            spec,
            x1: x1 & m,
            x2: x2 & m,
        }
    }

    pub fn monomial(spec: GroupSpec, g: GroupElement) -> Self {
        let bit = 1u128 << g.a_exp();
        if g.b_exp() == 0 {
            AlgebraElement { spec, x1: bit, x2: 0 }
        } else {
            AlgebraElement { spec, x1: 0, x2: bit }
        }
    }

    /// The element `a` of `KG`.
    pub fn a(spec: GroupSpec) -> Self {
        Self::monomial(spec, spec.a())
    }

    /// The element `b` of `KG`.
    pub fn b(spec: GroupSpec) -> Self {
        Self::monomial(spec, spec.b())
    }

    /// `x` viewed inside `KG`.
    pub fn from_cyclic(x: CyclicElement) -> Self {
        AlgebraElement {
            spec: x.spec(),
            x1: x.bits(),
            x2: 0,
        }
    }

    pub fn random<R: Rng + ?Sized>(spec: GroupSpec, rng: &mut R) -> Self {
        Self::from_bits(spec, rng.gen(), rng.gen())
    }

    /// Uniform element of augmentation one.
    pub fn random_unit<R: Rng + ?Sized>(spec: GroupSpec, rng: &mut R) -> Self {
        let mut x = Self::random(spec, rng);
        if x.augmentation() == 0 {
            x.x1 ^= 1;
        }
        x
    }

    /// Uniform self-conjugated element of augmentation one: each component is
    /// constant on the orbits `{i, ic}` of the exponents.
    pub fn random_self_conjugated_unit<R: Rng + ?Sized>(spec: GroupSpec, rng: &mut R) -> Self {
        let half = spec.half();
        let c = spec.conj_exponent();
        let mut words = [0u128; 2];
        for w in &mut words {
            for i in 0..half {
                let j = i * c % half;
                if j >= i && rng.gen::<bool>() {
                    *w |= 1 << i | 1 << j;
                }
            }
        }
        let mut x = Self::from_bits(spec, words[0], words[1]);
        if x.augmentation() == 0 {
            x.x1 ^= 1;
        }
        x
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn x1(&self) -> CyclicElement {
        CyclicElement::from_bits(self.spec, self.x1)
    }

    pub fn x2(&self) -> CyclicElement {
        CyclicElement::from_bits(self.spec, self.x2)
    }

    pub fn words(&self) -> [u128; 2] {
        [self.x1, self.x2]
    }

    pub fn from_words(spec: GroupSpec, w: [u128; 2]) -> Self {
        Self::from_bits(spec, w[0], w[1])
    }

    pub fn is_zero(&self) -> bool {
        self.x1 == 0 && self.x2 == 0
    }

    pub fn is_one(&self) -> bool {
        self.x1 == 1 && self.x2 == 0
    }

    pub fn augmentation(&self) -> u8 {
        ((self.x1.count_ones() + self.x2.count_ones()) & 1) as u8
    }

    /// Support in canonical order: `b`-free monomials first, ascending exponent of `a`.
    pub fn supp(&self) -> Vec<GroupElement> {
        let half = self.spec.half();
        let mut out = Vec::with_capacity((self.x1.count_ones() + self.x2.count_ones()) as usize);
        for (j, word) in [self.x1, self.x2].into_iter().enumerate() {
            for i in 0..half {
                if word >> i & 1 == 1 {
                    out.push(self.spec.element(i, j).expect("in range"));
                }
            }
        }
        out
    }

    fn check_spec(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch {
                left: self.spec.name(),
                right: other.spec.name(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        Ok(*self + *other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        Ok(*self * *other)
    }

    fn mul_unchecked(&self, h: &Self) -> Self {
        let spec = &self.spec;
        let half = spec.half();
        let e = spec.alpha_exponent();
        let h1_bar = cyclic::conjugate(h.x1, spec);
        let h2_bar = cyclic::conjugate(h.x2, spec);
        let first = cyclic::cyclic_mul(self.x1, h.x1, half)
            ^ rotate(cyclic::cyclic_mul(self.x2, h2_bar, half), e, half);
        let second =
            cyclic::cyclic_mul(self.x2, h1_bar, half) ^ cyclic::cyclic_mul(self.x1, h.x2, half);
        AlgebraElement {
            spec: *spec,
            x1: first,
            x2: second,
        }
    }

    /// `x * g` for a group element `g`; a permutation of coefficients.
    pub fn mul_monomial_right(&self, g: GroupElement) -> Self {
        let spec = &self.spec;
        let half = spec.half();
        let k = g.a_exp();
        // b a^k = a^(kc) b
        let kc = k * spec.conj_exponent() % half;
        let x1 = rotate(self.x1, k, half);
        let x2 = rotate(self.x2, kc, half);
        if g.b_exp() == 0 {
            AlgebraElement { spec: *spec, x1, x2 }
        } else {
            AlgebraElement {
                spec: *spec,
                x1: rotate(x2, spec.alpha_exponent(), half),
                x2: x1,
            }
        }
    }

    /// `g * x` for a group element `g`.
    pub fn mul_monomial_left(&self, g: GroupElement) -> Self {
        let spec = &self.spec;
        let half = spec.half();
        let (x1, x2) = if g.b_exp() == 0 {
            (self.x1, self.x2)
        } else {
            // b (x1 + x2 b) = bar(x2) b^2 + bar(x1) b
            (
                rotate(cyclic::conjugate(self.x2, spec), spec.alpha_exponent(), half),
                cyclic::conjugate(self.x1, spec),
            )
        };
        AlgebraElement {
            spec: *spec,
            x1: rotate(x1, g.a_exp(), half),
            x2: rotate(x2, g.a_exp(), half),
        }
    }

    /// Conjugation `x -> b^-1 x b`.
    pub fn bar(&self) -> Self {
        AlgebraElement {
            spec: self.spec,
            x1: cyclic::conjugate(self.x1, &self.spec),
            x2: cyclic::conjugate(self.x2, &self.spec),
        }
    }

    pub fn is_self_conjugated(&self) -> bool {
        self.bar() == *self
    }

    /// The norm `x1 bar(x1) + x2 bar(x2) alpha`.
    pub fn norm(&self) -> CyclicElement {
        let x1 = self.x1();
        let x2 = self.x2();
        x1 * x1.bar() + (x2 * x2.bar()).shift(self.spec.alpha_exponent() as i64)
    }

    /// Closed-form inverse `(bar(f1) + f2 b) R^-1` with `R` the norm of `f`.
    pub fn invert_unit(&self) -> Result<Self> {
        if self.augmentation() == 0 {
            return Err(Error::NotAUnit);
        }
        let r_inv = self.norm().inverse().ok_or(Error::NotAUnit)?;
        let adj = AlgebraElement::from_components(self.x1().bar(), self.x2());
        Ok(adj * AlgebraElement::from_cyclic(r_inv))
    }

    /// `x^e` by square-and-multiply on the full product.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::one(self.spec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// `x^(2^k)` via the closed form
    ///
    /// ```text
    /// x^(2^k) = x1^(2^k) + (x2 bar(x2))^(2^(k-1)) b^(2^k)
    ///         + sum_{i=1}^{k-1} (x2 bar(x2))^(2^(i-1)) (x1 + bar(x1))^(2^k - 2^i) b^(2^i)
    ///         + x2 (x1 + bar(x1))^(2^k - 1) b
    /// ```
    ///
    /// `k = 0` returns `x`.
    pub fn pow2k(&self, k: u32) -> Self {
        if k == 0 {
            return *self;
        }
        let spec = self.spec;
        let x1 = self.x1();
        let x2 = self.x2();
        let nrm = x2 * x2.bar();
        let trace = x1 + x1.bar();
        // b^(2^i) for i >= 1: alpha when i = 1, else 1
        let b_pow = |i: u32| -> i64 {
            if i == 1 {
                spec.alpha_exponent() as i64
            } else {
                0
            }
        };
        let big = 1u64 << k;
        let mut first = frobenius(x1, k) + frobenius(nrm, k - 1).shift(b_pow(k));
        for i in 1..k {
            first += (frobenius(nrm, i - 1) * trace.pow(big - (1 << i))).shift(b_pow(i));
        }
        let second = x2 * trace.pow(big - 1);
        AlgebraElement::from_components(first, second)
    }

    /// Parse `+`-separated monomials, e.g. `a + b + a^1*b`; `0` is the zero element.
    pub fn parse(spec: GroupSpec, s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "0" {
            return Ok(Self::zero(spec));
        }
        t.split('+').try_fold(Self::zero(spec), |acc, term| {
            Ok(acc + Self::monomial(spec, spec.parse_element(term)?))
        })
    }
}

fn frobenius(x: CyclicElement, times: u32) -> CyclicElement {
    (0..times).fold(x, |y, _| y.square())
}

impl Add for AlgebraElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.spec, rhs.spec, "operands from different groups");
        AlgebraElement {
            spec: self.spec,
            x1: self.x1 ^ rhs.x1,
            x2: self.x2 ^ rhs.x2,
        }
    }
}

impl AddAssign for AlgebraElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Mul for AlgebraElement {
    type Output = Self;

    /// Panics when the operands belong to different groups; see [`AlgebraElement::checked_mul`].
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.spec, rhs.spec, "operands from different groups");
        self.mul_unchecked(&rhs)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.supp().iter().map(|g| g.to_string()).collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.spec, self)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    family: Family,
    n: u32,
    element: String,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            family: self.spec.family(),
            n: self.spec.n(),
            element: self.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let spec = GroupSpec::new(w.family, w.n).map_err(serde::de::Error::custom)?;
        AlgebraElement::parse(spec, &w.element).map_err(serde::de::Error::custom)
    }
}

/// `sum_{y in X} y` for the cyclic subgroup `X = <g>` of `<a>`.
pub fn set_sum(spec: GroupSpec, g: GroupElement) -> Result<AlgebraElement> {
    if g.b_exp() != 0 {
        return Err(Error::InvalidParameter(format!(
            "{g} does not lie in <a>"
        )));
    }
    let mut acc = CyclicElement::zero(spec);
    let mut x = spec.identity();
    loop {
        acc += CyclicElement::a_pow(spec, x.a_exp() as i64);
        x = spec.mul(x, g);
        if x.is_identity() {
            break;
        }
    }
    Ok(AlgebraElement::from_cyclic(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn spec(f: Family, n: u32) -> GroupSpec {
        GroupSpec::new(f, n).unwrap()
    }

    fn big_a(s: GroupSpec) -> AlgebraElement {
        AlgebraElement::parse(s, "a + b + a*b").unwrap()
    }

    #[test]
    fn add_and_support() {
        let d8 = spec(Family::Dihedral, 3);
        let x = big_a(d8);
        assert!((x + x).is_zero());
        let names: Vec<String> = x.supp().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["a^1", "b", "a^1*b"]);
        assert_eq!(x.augmentation(), 1);
        assert_eq!(AlgebraElement::parse(d8, "1 + a + a^3").unwrap().augmentation(), 1);
        let q8 = spec(Family::Quaternion, 3);
        assert!(matches!(
            x.checked_add(&AlgebraElement::one(q8)),
            Err(Error::SpecMismatch { .. })
        ));
    }

    #[test]
    fn text_form() {
        let s = spec(Family::Semidihedral, 4);
        let x = AlgebraElement::parse(s, "a + b + a^1*b").unwrap();
        assert_eq!(x.to_string(), "a^1 + b + a^1*b");
        assert_eq!(AlgebraElement::parse(s, &x.to_string()).unwrap(), x);
        assert_eq!(AlgebraElement::zero(s).to_string(), "0");
        assert!(AlgebraElement::parse(s, "a + c").is_err());
    }

    #[test]
    fn quaternion_b_squared() {
        let q8 = spec(Family::Quaternion, 3);
        let b = AlgebraElement::b(q8);
        assert_eq!((b * b).to_string(), "a^2");
    }

    #[test]
    fn bar_examples() {
        let d8 = spec(Family::Dihedral, 3);
        assert_eq!(AlgebraElement::a(d8).bar().to_string(), "a^3");
        let s16 = spec(Family::Semidihedral, 4);
        assert_eq!(AlgebraElement::a(s16).bar().to_string(), "a^3");
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = AlgebraElement::random(s16, &mut rng);
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn norm_examples() {
        let d8 = spec(Family::Dihedral, 3);
        assert!(AlgebraElement::one(d8).norm().is_one());
        assert_eq!(big_a(d8).norm().to_string(), "1 + a^1 + a^3");
    }

    #[test]
    fn monomial_products_agree_with_full_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in Family::ALL {
            let s = spec(f, 5);
            for _ in 0..200 {
                let x = AlgebraElement::random(s, &mut rng);
                for g in s.elements() {
                    let m = AlgebraElement::monomial(s, g);
                    assert_eq!(x.mul_monomial_right(g), x * m);
                    assert_eq!(x.mul_monomial_left(g), m * x);
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        for f in Family::ALL {
            let s = spec(f, f.min_n());
            assert!(AlgebraElement::one(s).invert_unit().unwrap().is_one());
            let b = AlgebraElement::b(s);
            let expected = AlgebraElement::monomial(s, s.inv(s.b()));
            assert_eq!(b.invert_unit().unwrap(), expected);
            let zero_aug = AlgebraElement::parse(s, "1 + a").unwrap();
            assert!(matches!(zero_aug.invert_unit(), Err(Error::NotAUnit)));
        }
        let q8 = spec(Family::Quaternion, 3);
        assert_eq!(AlgebraElement::b(q8).invert_unit().unwrap().to_string(), "a^2*b");
    }

    #[test]
    fn pow2k_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for f in Family::ALL {
            for n in f.min_n()..=6 {
                let s = spec(f, n);
                assert!(AlgebraElement::one(s).pow2k(3).is_one());
                for _ in 0..300 {
                    let x = AlgebraElement::random(s, &mut rng);
                    let mut sq = x;
                    for k in 1..=4 {
                        sq = sq * sq;
                        assert_eq!(x.pow2k(k), sq, "{s} x = {x} k = {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn set_sum_examples() {
        let d8 = spec(Family::Dihedral, 3);
        assert_eq!(set_sum(d8, d8.a_pow(2)).unwrap().to_string(), "1 + a^2");
        let d16 = spec(Family::Dihedral, 4);
        let one_plus = AlgebraElement::parse(d16, "1 + a^2").unwrap();
        assert_eq!(one_plus.pow(3), set_sum(d16, d16.a_pow(2)).unwrap());
        assert_eq!(one_plus.pow(3).to_string(), "1 + a^2 + a^4 + a^6");
        let s2 = set_sum(d8, d8.a_pow(2)).unwrap();
        assert_eq!(AlgebraElement::a(d8) * s2 + s2, set_sum(d8, d8.a()).unwrap());
        assert!(set_sum(d8, d8.b()).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let s = spec(Family::Quaternion, 4);
        let x = AlgebraElement::parse(s, "1 + a^3 + a^5*b").unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<AlgebraElement>(&json).unwrap(), x);
    }
}
