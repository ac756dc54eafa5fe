//! The dihedral, semidihedral and generalized quaternion groups of order `2^n`.
//!
//! Every element has a unique normal form `a^i b^j` with `0 <= i < 2^(n-1)` and
//! `j in {0, 1}`. The three families share `a^(2^(n-1)) = 1` and differ in the
//! square of `b` and in the action `b^-1 a b`:
//!
//! | family        | `b^2`           | `b^-1 a b`          |
//! |---------------|-----------------|---------------------|
//! | dihedral      | `1`             | `a^-1`              |
//! | semidihedral  | `1`             | `a^(-1 + 2^(n-2))`  |
//! | quaternion    | `a^(2^(n-2))`   | `a^-1`              |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported `n`. The cyclic part `K<a>` is packed into one `u128`.
pub const MAX_N: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Dihedral,
    Semidihedral,
    Quaternion,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Dihedral, Family::Semidihedral, Family::Quaternion];

    /// Smallest admissible `n`; `S_3` would coincide with `D_3` and is rejected.
    pub fn min_n(self) -> u32 {
        match self {
            Family::Semidihedral => 4,
            _ => 3,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::Dihedral => 'd',
            Family::Semidihedral => 's',
            Family::Quaternion => 'q',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Dihedral => "dihedral",
            Family::Semidihedral => "semidihedral",
            Family::Quaternion => "quaternion",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d" | "dihedral" => Ok(Family::Dihedral),
            "s" | "semidihedral" => Ok(Family::Semidihedral),
            "q" | "quaternion" => Ok(Family::Quaternion),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "expected d, s or q".into(),
            }),
        }
    }
}

/// A concrete group `D_n`, `S_n` or `Q_n` of order `2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    family: Family,
    n: u32,
}

impl GroupSpec {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n = {n}, need n >= 3")));
        }
        if n < family.min_n() {
            return Err(Error::InvalidParameter(format!(
                "{family} group needs n >= {} (S_3 is D_3)",
                family.min_n()
            )));
        }
        if n > MAX_N {
            return Err(Error::InvalidParameter(format!(
                "n = {n} exceeds supported maximum {MAX_N}"
            )));
        }
        Ok(GroupSpec { family, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `|G| = 2^n`.
    pub fn order(&self) -> usize {
        1 << self.n
    }

    /// Order of `a`, `2^(n-1)`; also the width of a component bit-vector.
    pub fn half(&self) -> usize {
        1 << (self.n - 1)
    }

    /// `|G'| = |<a^2>| = 2^(n-2)`.
    pub fn derived_order(&self) -> usize {
        1 << (self.n - 2)
    }

    /// Exponent `e` with `b^2 = a^e`.
    pub fn alpha_exponent(&self) -> usize {
        match self.family {
            Family::Quaternion => self.derived_order(),
            _ => 0,
        }
    }

    /// Exponent `c` with `b^-1 a b = a^c`. Always an involution mod `2^(n-1)`.
    pub fn conj_exponent(&self) -> usize {
        let half = self.half();
        match self.family {
            Family::Semidihedral => half / 2 - 1,
            _ => half - 1,
        }
    }

    /// Label such as `Q16`.
    pub fn name(&self) -> String {
        let prefix = match self.family {
            Family::Dihedral => 'D',
            Family::Semidihedral => 'S',
            Family::Quaternion => 'Q',
        };
        format!("{prefix}{}", self.order())
    }

    pub fn element(&self, i: usize, j: usize) -> Result<GroupElement> {
        if i >= self.half() || j > 1 {
            return Err(Error::InvalidParameter(format!(
                "a^{i} b^{j} is not a normal form in {}",
                self.name()
            )));
        }
        Ok(GroupElement { i: i as u32, j: j as u8 })
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { i: 0, j: 0 }
    }

    pub fn a(&self) -> GroupElement {
        GroupElement { i: 1, j: 0 }
    }

    pub fn b(&self) -> GroupElement {
        GroupElement { i: 0, j: 1 }
    }

    /// `a^k` with `k` reduced mod `2^(n-1)`.
    pub fn a_pow(&self, k: i64) -> GroupElement {
        GroupElement {
            i: k.rem_euclid(self.half() as i64) as u32,
            j: 0,
        }
    }

    /// All elements, `a^i` first, then `a^i b`.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..2u8).flat_map(move |j| (0..self.half() as u32).map(move |i| GroupElement { i, j }))
    }

    /// Product in normal form, using `b a^k = a^(kc) b`.
    pub fn mul(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        let half = self.half();
        let k = if g.j == 1 {
            h.i as usize * self.conj_exponent() % half
        } else {
            h.i as usize
        };
        let mut i = g.i as usize + k;
        let j = g.j + h.j;
        if j == 2 {
            i += self.alpha_exponent();
        }
        GroupElement {
            i: (i % half) as u32,
            j: j % 2,
        }
    }

    pub fn inv(&self, g: GroupElement) -> GroupElement {
        let half = self.half();
        if g.j == 0 {
            GroupElement {
                i: ((half - g.i as usize) % half) as u32,
                j: 0,
            }
        } else {
            // (a^i b)^2 = a^(i + ic + e), so (a^i b)^-1 = a^i b * a^-(i + ic + e).
            let sq = (g.i as usize * (1 + self.conj_exponent()) + self.alpha_exponent()) % half;
            if sq == 0 {
                g
            } else {
                self.mul(g, self.a_pow(-(sq as i64)))
            }
        }
    }

    pub fn pow(&self, g: GroupElement, mut e: u64) -> GroupElement {
        let mut base = g;
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 h^-1 g h`.
    pub fn commutator(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        let gi = self.inv(g);
        let hi = self.inv(h);
        self.mul(self.mul(gi, hi), self.mul(g, h))
    }

    /// `G' = <a^2>`, listed as `1, a^2, a^4, ...`.
    pub fn commutator_subgroup(&self) -> Vec<GroupElement> {
        (0..self.half() as u32)
            .step_by(2)
            .map(|i| GroupElement { i, j: 0 })
            .collect()
    }

    /// `G'` recomputed from scratch: the closure of all commutators `[g, h]`.
    pub fn commutator_closure(&self) -> Vec<GroupElement> {
        let mut seen = vec![false; self.order()];
        let mut out = vec![self.identity()];
        seen[self.identity().index(self)] = true;
        let gens: Vec<_> = self
            .elements()
            .flat_map(|g| self.elements().map(move |h| (g, h)))
            .map(|(g, h)| self.commutator(g, h))
            .collect();
        let mut cursor = 0;
        while cursor < out.len() {
            let x = out[cursor];
            cursor += 1;
            for &c in &gens {
                let y = self.mul(x, c);
                let idx = y.index(self);
                if !seen[idx] {
                    seen[idx] = true;
                    out.push(y);
                }
            }
        }
        out.sort();
        out
    }

    /// Parse the element syntax `1`, `a`, `a^i`, `b`, `a*b`, `a^i*b`.
    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "1" {
            return Ok(self.identity());
        }
        let (apart, j) = if t == "b" {
            return Ok(self.b());
        } else if let Some(rest) = t.strip_suffix("*b") {
            (rest, 1)
        } else {
            (t.as_str(), 0)
        };
        let i = if apart == "a" {
            1
        } else if let Some(exp) = apart.strip_prefix("a^") {
            exp.parse::<usize>().map_err(|_| err("bad exponent"))?
        } else {
            return Err(err("expected 1, a^i, b or a^i*b"));
        };
        if i >= self.half() {
            return Err(err("exponent out of range"));
        }
        self.element(i, j)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// `a^i b^j` in normal form. Only meaningful together with its [`GroupSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    // field order gives the canonical ordering: b-free monomials first
    j: u8,
    i: u32,
}

impl GroupElement {
    pub fn a_exp(&self) -> usize {
        self.i as usize
    }

    pub fn b_exp(&self) -> usize {
        self.j as usize
    }

    pub fn is_identity(&self) -> bool {
        self.i == 0 && self.j == 0
    }

    /// Position in [`GroupSpec::elements`].
    pub fn index(&self, spec: &GroupSpec) -> usize {
        self.j as usize * spec.half() + self.i as usize
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => f.write_str("1"),
            (0, _) => f.write_str("b"),
            (i, 0) => write!(f, "a^{i}"),
            (i, _) => write!(f, "a^{i}*b"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_specs(max_n: u32) -> Vec<GroupSpec> {
        Family::ALL
            .iter()
            .flat_map(|&f| (f.min_n()..=max_n).map(move |n| GroupSpec::new(f, n).unwrap()))
            .collect()
    }

    #[test]
    fn make_group_examples() {
        let d8 = GroupSpec::new(Family::Dihedral, 3).unwrap();
        assert_eq!(d8.alpha_exponent(), 0);
        assert_eq!(d8.order(), 8);

        let q8 = GroupSpec::new(Family::Quaternion, 3).unwrap();
        assert_eq!(q8.alpha_exponent(), 2);
        assert_eq!(q8.mul(q8.b(), q8.b()), q8.a_pow(2));

        assert!(matches!(
            GroupSpec::new(Family::Semidihedral, 3),
            Err(Error::InvalidParameter(_))
        ));
        assert!(GroupSpec::new(Family::Dihedral, 2).is_err());
        assert!(GroupSpec::new(Family::Quaternion, MAX_N + 1).is_err());
    }

    #[test]
    fn product_examples() {
        let d8 = GroupSpec::new(Family::Dihedral, 3).unwrap();
        let ab = d8.element(1, 1).unwrap();
        assert!(d8.mul(ab, ab).is_identity());

        let s16 = GroupSpec::new(Family::Semidihedral, 4).unwrap();
        let conj = s16.mul(s16.mul(s16.inv(s16.b()), s16.a()), s16.b());
        assert_eq!(conj, s16.a_pow(3));
    }

    #[test]
    fn group_axioms_exhaustive() {
        for spec in all_specs(6) {
            let els: Vec<_> = spec.elements().collect();
            assert_eq!(els.len(), spec.order());
            for &g in &els {
                assert!(spec.mul(g, spec.inv(g)).is_identity(), "{spec} {g}");
                assert!(spec.mul(spec.inv(g), g).is_identity(), "{spec} {g}");
                for &h in &els {
                    let gh = spec.mul(g, h);
                    for &k in &els {
                        assert_eq!(spec.mul(gh, k), spec.mul(g, spec.mul(h, k)));
                    }
                }
            }
        }
    }

    #[test]
    fn defining_relations() {
        for spec in all_specs(MAX_N) {
            let a = spec.a();
            let b = spec.b();
            assert!(spec.pow(a, spec.half() as u64).is_identity());
            assert!(!spec.pow(a, spec.half() as u64 / 2).is_identity());
            assert_eq!(spec.mul(b, b), spec.a_pow(spec.alpha_exponent() as i64));
            let conj = spec.mul(spec.mul(spec.inv(b), a), b);
            let expected = match spec.family() {
                Family::Semidihedral => spec.a_pow(-1 + spec.derived_order() as i64),
                _ => spec.a_pow(-1),
            };
            assert_eq!(conj, expected, "{spec}");
        }
    }

    #[test]
    fn commutator_subgroup_matches_brute_force() {
        for spec in all_specs(6) {
            let closure = spec.commutator_closure();
            let mut derived = spec.commutator_subgroup();
            derived.sort();
            assert_eq!(closure, derived, "{spec}");
            assert_eq!(derived.len(), spec.derived_order());
        }
        let q16 = GroupSpec::new(Family::Quaternion, 4).unwrap();
        let names: Vec<String> = q16.commutator_subgroup().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["1", "a^2", "a^4", "a^6"]);
    }

    #[test]
    fn text_form_round_trip() {
        let spec = GroupSpec::new(Family::Quaternion, 4).unwrap();
        for g in spec.elements() {
            assert_eq!(spec.parse_element(&g.to_string()).unwrap(), g);
        }
        assert_eq!(spec.parse_element("a").unwrap(), spec.a());
        assert_eq!(spec.parse_element("a * b").unwrap(), spec.element(1, 1).unwrap());
        assert!(spec.parse_element("a^8").is_err());
        assert!(spec.parse_element("c").is_err());
    }
}
