//! Normalized units `U(KG) = 1 + Delta`, the subgroup `H(KG)`, closed-form
//! conjugation and the conjugates `b^(A^k)` of `b` by powers of the unit `A`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::cyclic::CyclicElement;
use crate::error::{Error, Result};
use crate::group::{Family, GroupSpec};

/// An algebra element of augmentation one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AlgebraElement", into = "AlgebraElement")]
pub struct Unit(AlgebraElement);

impl TryFrom<AlgebraElement> for Unit {
    type Error = Error;

    fn try_from(x: AlgebraElement) -> Result<Self> {
        Unit::new(x)
    }
}

impl From<Unit> for AlgebraElement {
    fn from(u: Unit) -> Self {
        u.0
    }
}

impl Unit {
    pub fn new(x: AlgebraElement) -> Result<Self> {
        if x.augmentation() == 1 {
            Ok(Unit(x))
        } else {
            Err(Error::NotAUnit)
        }
    }

    pub fn one(spec: GroupSpec) -> Self {
        Unit(AlgebraElement::one(spec))
    }

    pub fn b(spec: GroupSpec) -> Self {
        Unit(AlgebraElement::b(spec))
    }

    pub fn parse(spec: GroupSpec, s: &str) -> Result<Self> {
        Unit::new(AlgebraElement::parse(spec, s)?)
    }

    pub fn value(&self) -> AlgebraElement {
        self.0
    }

    pub fn spec(&self) -> GroupSpec {
        self.0.spec()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn inverse(&self) -> Unit {
        Unit(self.0.invert_unit().expect("units are invertible"))
    }

    pub fn pow(&self, e: u64) -> Unit {
        Unit(self.0.pow(e))
    }

    /// `x^k` for any integer `k`.
    pub fn zpow(&self, k: i64) -> Unit {
        if k >= 0 {
            self.pow(k as u64)
        } else {
            self.inverse().pow(k.unsigned_abs())
        }
    }

    /// `f^-1 self f`, computed directly.
    pub fn conjugate_by(&self, f: &Unit) -> Unit {
        f.inverse() * *self * *f
    }
}

impl Mul for Unit {
    type Output = Unit;

    fn mul(self, rhs: Unit) -> Unit {
        Unit(self.0 * rhs.0)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

fn require_ds(spec: GroupSpec) -> Result<()> {
    match spec.family() {
        Family::Quaternion => Err(Error::WrongFamily(Family::Quaternion)),
        _ => Ok(()),
    }
}

fn require_q(spec: GroupSpec) -> Result<()> {
    match spec.family() {
        Family::Quaternion => Ok(()),
        f => Err(Error::WrongFamily(f)),
    }
}

/// Membership in `H(KG) = { h1 + h2 b : h1 + h2 = 1 }` (dihedral and semidihedral only).
pub fn in_h(u: &Unit) -> Result<bool> {
    require_ds(u.spec())?;
    let x = u.value();
    Ok((x.x1() + x.x2()).is_one())
}

/// Norm restricted to `H(KG)`: `psi(h) = 1 + h1 + bar(h1)`.
pub fn psi(h: &Unit) -> Result<CyclicElement> {
    if !in_h(h)? {
        return Err(Error::NotInH);
    }
    let h1 = h.value().x1();
    Ok(CyclicElement::one(h.spec()) + h1 + h1.bar())
}

/// `f^-1 h f` for self-conjugated `h` via
/// `t1 = h1 + h2 (f1 f2 + bar(f1) bar(f2)) alpha R^-1`,
/// `t2 = h2 (bar(f1)^2 + f2^2 alpha) R^-1`.
pub fn conj_by(h: &Unit, f: &Unit) -> Result<Unit> {
    if h.spec() != f.spec() {
        return Err(Error::SpecMismatch {
            left: h.spec().name(),
            right: f.spec().name(),
        });
    }
    if !h.value().is_self_conjugated() {
        return Err(Error::NotSelfConjugated);
    }
    let alpha = h.spec().alpha_exponent() as i64;
    let (h1, h2) = (h.value().x1(), h.value().x2());
    let (f1, f2) = (f.value().x1(), f.value().x2());
    let r_inv = f.value().norm().inverse().ok_or(Error::NotAUnit)?;
    let t1 = h1 + (h2 * (f1 * f2 + f1.bar() * f2.bar())).shift(alpha) * r_inv;
    let t2 = h2 * (f1.bar().square() + f2.square().shift(alpha)) * r_inv;
    Unit::new(AlgebraElement::from_components(t1, t2))
}

/// Least `2^m` with `u^(2^m) = 1`. Fails once the order would exceed `cap`.
pub fn order_of_unit(u: &Unit, cap: u64) -> Result<u64> {
    let mut x = u.value();
    let mut order = 1u64;
    while !x.is_one() {
        if order >= cap {
            return Err(Error::CapExceeded {
                what: "unit order",
                cap,
            });
        }
        x = x * x;
        order *= 2;
    }
    Ok(order)
}

/// The unit `A` that generates the top group of the section:
/// `a + (1+a) b` for dihedral and semidihedral groups,
/// `a^(2^(n-3)+1) + (1+a) b` for the quaternion group.
pub fn standard_a(spec: GroupSpec) -> Unit {
    let lead = match spec.family() {
        Family::Quaternion => (1i64 << (spec.n() - 3)) + 1,
        _ => 1,
    };
    let x1 = CyclicElement::a_pow(spec, lead);
    let x2 = CyclicElement::from_exponents(spec, [0, 1]);
    Unit::new(AlgebraElement::from_components(x1, x2)).expect("A has augmentation one")
}

/// The norm `R` of [`standard_a`]: `1 + a + bar(a)` (D, S) or
/// `1 + a^(2^(n-2)+1) + a^(2^(n-2)-1)` (Q).
pub fn tower_norm(spec: GroupSpec) -> CyclicElement {
    match spec.family() {
        Family::Quaternion => {
            let e = spec.derived_order() as i64;
            CyclicElement::from_exponents(spec, [0, e + 1, e - 1])
        }
        _ => {
            let a = CyclicElement::a_pow(spec, 1);
            CyclicElement::one(spec) + a + a.bar()
        }
    }
}

fn check_tower_range(spec: GroupSpec, k: usize) -> Result<()> {
    let max = spec.derived_order();
    if k == 0 || k > max {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            min: 1,
            max: max as i64,
        });
    }
    Ok(())
}

/// `b^(A^k) = 1 + R^k + R^k b` for dihedral and semidihedral groups.
pub fn b_tower_ds(spec: GroupSpec, k: usize) -> Result<Unit> {
    require_ds(spec)?;
    check_tower_range(spec, k)?;
    let rk = tower_norm(spec).pow(k as u64);
    Unit::new(AlgebraElement::from_components(CyclicElement::one(spec) + rk, rk))
}

/// `beta = a^s + a^-s + a^(s+1) + a^-(s+1)` with `s = 2^(n-3) + 1`.
pub fn quaternion_beta(spec: GroupSpec) -> CyclicElement {
    let s = (1i64 << (spec.n() - 3)) + 1;
    CyclicElement::from_exponents(spec, [s, -s, s + 1, -s - 1])
}

/// `b^(A^k) = beta sum_{i=-1}^{k-2} (b^2 R)^i + (b^2 R)^k b` for the quaternion group.
///
/// The first component has exactly `k` terms: `b^A` starts from `beta (b^2 R)^-1`
/// and each further conjugation by `A` adds `beta (b^2 R)^(k-1)`.
pub fn b_tower_q(spec: GroupSpec, k: usize) -> Result<Unit> {
    require_q(spec)?;
    check_tower_range(spec, k)?;
    let step = tower_norm(spec).shift(spec.alpha_exponent() as i64);
    let step_inv = step.inverse().expect("b^2 R has augmentation one");
    let mut sum = step_inv;
    let mut p = CyclicElement::one(spec);
    for _ in 1..k {
        sum += p;
        p = p * step;
    }
    let second = p * step;
    let first = quaternion_beta(spec) * sum;
    Unit::new(AlgebraElement::from_components(first, second))
}

/// `b^(A^k)` from the closed form of the appropriate family.
pub fn b_tower(spec: GroupSpec, k: usize) -> Result<Unit> {
    match spec.family() {
        Family::Quaternion => b_tower_q(spec, k),
        _ => b_tower_ds(spec, k),
    }
}

/// `x^-1 y^-1 x y`.
pub fn group_commutator(x: &Unit, y: &Unit) -> Unit {
    x.inverse() * y.inverse() * *x * *y
}

/// Left-normed `(x, w1, w2, ...)`.
pub fn iterated_commutator(x: &Unit, ws: &[Unit]) -> Unit {
    ws.iter().fold(*x, |acc, w| group_commutator(&acc, w))
}

/// `(x, k.y) = (x, y, ..., y)` with `k` copies of `y`.
pub fn repeated_commutator(x: &Unit, y: &Unit, k: usize) -> Unit {
    let y_inv = y.inverse();
    let mut acc = *x;
    for _ in 0..k {
        acc = acc.inverse() * y_inv * acc * *y;
    }
    acc
}
