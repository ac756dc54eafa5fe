//! Explicit finite groups: multiplication tables, closures inside `U(KG)`,
//! subgroup generation, lower central series and quotients.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::units::Unit;

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 1 << 20;

/// Largest order for which a full multiplication table is materialized.
pub const TABLE_CAP: usize = 1 << 12;

/// A finite group given by its multiplication table. Index 0 is the identity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupTable {
    labels: Vec<String>,
    generators: Vec<usize>,
    mul: Vec<u32>,
    #[serde(skip)]
    inv: Vec<u32>,
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.generators == other.generators && self.mul == other.mul
    }
}

impl GroupTable {
    /// Builds the table from a product on indices `0..order`; index 0 must be the identity.
    pub fn from_fn(
        labels: Vec<String>,
        generators: Vec<usize>,
        mut product: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let order = labels.len();
        if order > TABLE_CAP {
            return Err(Error::SizeCap {
                order: order as u64,
                cap: TABLE_CAP as u64,
            });
        }
        let mut mul = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                mul.push(product(i, j) as u32);
            }
        }
        Self::from_parts(labels, generators, mul)
    }

    pub fn from_parts(labels: Vec<String>, generators: Vec<usize>, mul: Vec<u32>) -> Result<Self> {
        let order = labels.len();
        if mul.len() != order * order {
            return Err(Error::InvalidParameter(format!(
                "table of {} entries for {order} elements",
                mul.len()
            )));
        }
        let mut inv = vec![u32::MAX; order];
        for i in 0..order {
            for j in 0..order {
                if mul[i * order + j] == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        if (0..order).any(|i| mul[i] as usize != i || mul[i * order] as usize != i) {
            return Err(Error::InvalidParameter("index 0 is not the identity".into()));
        }
        if inv.contains(&u32::MAX) {
            return Err(Error::InvalidParameter("element without inverse".into()));
        }
        Ok(GroupTable {
            labels,
            generators,
            mul,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn raw_table(&self) -> &[u32] {
        &self.mul
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.order() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn pow(&self, i: usize, e: u64) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, i))
    }

    /// `x^-1 y^-1 x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// Rows and columns are permutations and the product is associative.
    pub fn is_valid_group(&self) -> bool {
        let n = self.order();
        let mut seen = vec![0u32; n];
        for (stamp, i) in (1u32..).zip(0..n) {
            for j in 0..n {
                let k = self.mul(i, j);
                if seen[k] == stamp {
                    return false;
                }
                seen[k] = stamp;
            }
        }
        for (stamp, j) in (n as u32 + 1..).zip(0..n) {
            for i in 0..n {
                let k = self.mul(i, j);
                if seen[k] == stamp {
                    return false;
                }
                seen[k] = stamp;
            }
        }
        (0..n).all(|i| {
            (0..n).all(|j| {
                let ij = self.mul(i, j);
                (0..n).all(|k| self.mul(ij, k) == self.mul(i, self.mul(j, k)))
            })
        })
    }

    pub fn element_order(&self, i: usize) -> u64 {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order())
            .map(|i| self.element_order(i))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    /// Number of elements of each order.
    pub fn order_statistics(&self) -> BTreeMap<u64, usize> {
        let mut hist = BTreeMap::new();
        for i in 0..self.order() {
            *hist.entry(self.element_order(i)).or_insert(0) += 1;
        }
        hist
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .all(|&x| g.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
            && self.generate(g.iter().copied()).len() == self.order()
    }

    pub fn is_elementary_abelian(&self) -> bool {
        (0..self.order()).all(|i| self.mul(i, i) == 0) && self.is_abelian_exhaustive()
    }

    fn is_abelian_exhaustive(&self) -> bool {
        (0..self.order()).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Sorted members of the subgroup generated by `gens`.
    pub fn generate(&self, gens: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut members = vec![0];
        let mut used: Vec<usize> = Vec::new();
        for s in gens {
            if member[s] {
                continue;
            }
            used.push(s);
            let mut cursor = 0;
            while cursor < members.len() {
                let x = members[cursor];
                cursor += 1;
                for &g in &used {
                    let y = self.mul(x, g);
                    if !member[y] {
                        member[y] = true;
                        members.push(y);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut set: Vec<usize> = gens.into_iter().collect();
        let group_gens = self.effective_generators();
        loop {
            let members = self.generate(set.iter().copied());
            let mut member = vec![false; self.order()];
            for &m in &members {
                member[m] = true;
            }
            let extra: Vec<usize> = set
                .iter()
                .flat_map(|&s| {
                    group_gens
                        .iter()
                        .map(move |&g| self.mul(self.mul(self.inv(g), s), g))
                })
                .filter(|&c| !member[c])
                .collect();
            if extra.is_empty() {
                return members;
            }
            set.extend(extra);
        }
    }

    fn effective_generators(&self) -> Vec<usize> {
        if self.generate(self.generators.iter().copied()).len() == self.order() {
            self.generators.clone()
        } else {
            (0..self.order()).collect()
        }
    }

    pub fn is_normal(&self, members: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &m in members {
            member[m] = true;
        }
        let gens = self.effective_generators();
        members.iter().all(|&x| {
            gens.iter()
                .all(|&g| member[self.mul(self.mul(self.inv(g), x), g)])
        })
    }

    /// `[N, G]` for a normal subgroup `N`.
    pub fn commutator_with_group(&self, members: &[usize]) -> Vec<usize> {
        let gens = self.effective_generators();
        let comms: Vec<usize> = members
            .iter()
            .flat_map(|&x| gens.iter().map(move |&g| self.commutator(x, g)))
            .collect();
        self.normal_closure(comms)
    }

    /// `G = gamma_1 > gamma_2 > ...` down to the point where it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Vec<usize>> {
        let mut series = vec![(0..self.order()).collect::<Vec<_>>()];
        loop {
            let next = self.commutator_with_group(series.last().expect("nonempty"));
            if next.len() == series.last().expect("nonempty").len() {
                return series;
            }
            let done = next.len() == 1;
            series.push(next);
            if done {
                return series;
            }
        }
    }

    /// Nilpotency class, or `None` if the group is not nilpotent. The trivial group has class 0.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        (series.last().map(Vec::len) == Some(1)).then(|| series.len() - 1)
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let comms = (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
        let gens: Vec<usize> = comms.map(|(i, j)| self.commutator(i, j)).collect();
        self.generate(gens)
    }

    pub fn center(&self) -> Vec<usize> {
        let gens = self.effective_generators();
        (0..self.order())
            .filter(|&x| gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect()
    }

    /// A generating set found by lifting a basis of `G / <squares, G'>`, largest
    /// element orders first. For 2-groups that quotient is the Frattini quotient,
    /// so the set has minimal size.
    pub fn minimal_generators(&self) -> Vec<usize> {
        let n = self.order();
        let mut frattini_gens: Vec<usize> = (0..n).map(|x| self.mul(x, x)).collect();
        frattini_gens.extend(self.derived_subgroup());
        let mut by_order: Vec<usize> = (1..n).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut chosen: Vec<usize> = Vec::new();
        let mut covered = self.generate(frattini_gens.iter().copied());
        for &x in &by_order {
            if covered.len() == n {
                break;
            }
            if covered.binary_search(&x).is_err() {
                chosen.push(x);
                covered = self.generate(frattini_gens.iter().chain(&chosen).copied());
            }
        }
        let mut generated = self.generate(chosen.iter().copied());
        for &x in &by_order {
            if generated.len() == n {
                break;
            }
            if generated.binary_search(&x).is_err() {
                chosen.push(x);
                generated = self.generate(chosen.iter().copied());
            }
        }
        chosen
    }

    /// Invariants of `G / G'` as sorted cyclic factor orders.
    pub fn abelianization_type(&self) -> Vec<u64> {
        let derived = self.derived_subgroup();
        let quotient = self.quotient(&derived).expect("derived subgroup is normal");
        abelian_invariants(&quotient.table)
    }

    /// Quotient by a normal subgroup given by its members. Coset representatives
    /// are the minimal indices; the identity coset comes first.
    pub fn quotient(&self, members: &[usize]) -> Result<Quotient> {
        if !self.is_normal(members) {
            return Err(Error::NotNormal(format!("{} elements", members.len())));
        }
        let n = self.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &m in members {
                coset_of[self.mul(x, m)] = id;
            }
        }
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let gens = self
            .generators
            .iter()
            .map(|&g| coset_of[g] as usize)
            .collect();
        let table = GroupTable::from_fn(labels, gens, |i, j| {
            coset_of[self.mul(reps[i], reps[j])] as usize
        })?;
        Ok(Quotient {
            table,
            coset_of,
            reps,
        })
    }

    /// JSON export: labels, generators and the flat row-major table.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order(),
            "elements": self.labels,
            "generators": self.generators,
            "mul_table": self.mul,
        })
    }

    /// Plain-text export: a header line followed by one row of indices per element.
    pub fn to_text(&self) -> String {
        let mut out = format!("order {}\n", self.order());
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("{i}: {l}\n"));
        }
        for i in 0..self.order() {
            let row: Vec<String> = (0..self.order()).map(|j| self.mul(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

pub struct Quotient {
    pub table: GroupTable,
    pub coset_of: Vec<u32>,
    pub reps: Vec<usize>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Cyclic factor orders of a finite abelian group, ascending, from counts of
/// elements of each order (the group need not be a p-group; factors are
/// merged per prime power).
fn abelian_invariants(t: &GroupTable) -> Vec<u64> {
    let stats = t.order_statistics();
    // for a p-group: #{x : x^(p^k) = 1} = prod_i p^min(k, e_i)
    let mut factors = Vec::new();
    let mut primes: Vec<u64> = Vec::new();
    let mut m = t.order() as u64;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    for p in primes {
        let count_dividing = |d: u64| -> u64 {
            stats
                .iter()
                .filter(|(o, _)| d.is_multiple_of(**o) && o.is_power_of(p))
                .map(|(_, c)| *c as u64)
                .sum()
        };
        let mut log = vec![0u32];
        let mut d = 1u64;
        loop {
            d *= p;
            let c = count_dividing(d);
            let l = c.ilog(p);
            if l == *log.last().expect("nonempty") {
                break;
            }
            log.push(l);
        }
        // number of factors of order >= p^k is log[k] - log[k-1]
        let k_max = log.len() - 1;
        for k in 1..=k_max {
            let at_least_k = log[k] - log[k - 1];
            let at_least_next = if k < k_max { log[k + 1] - log[k] } else { 0 };
            for _ in 0..(at_least_k - at_least_next) {
                factors.push(p.pow(k as u32));
            }
        }
    }
    factors.sort_unstable();
    factors
}

trait PowerOf {
    fn is_power_of(&self, p: u64) -> bool;
}

impl PowerOf for u64 {
    fn is_power_of(&self, p: u64) -> bool {
        let mut x = *self;
        while x.is_multiple_of(p) {
            x /= p;
        }
        x == 1
    }
}

/// A subgroup of `U(KG)` found by closure, elements in insertion order.
#[derive(Clone)]
pub struct UnitSubgroup {
    spec: GroupSpec,
    elements: Vec<Unit>,
    index: HashMap<Unit, u32>,
    generators: Vec<usize>,
}

impl UnitSubgroup {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Unit] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, u: &Unit) -> Option<usize> {
        self.index.get(u).map(|&i| i as usize)
    }

    pub fn contains(&self, u: &Unit) -> bool {
        self.index.contains_key(u)
    }

    pub fn is_abelian(&self) -> bool {
        let g: Vec<Unit> = self.generators.iter().map(|&i| self.elements[i]).collect();
        g.iter().all(|x| g.iter().all(|y| *x * *y == *y * *x))
    }

    /// Every element squares to one and the generators commute.
    pub fn is_elementary_abelian(&self) -> bool {
        self.is_abelian() && self.elements.iter().all(|x| (*x * *x).is_one())
    }

    /// Materializes the multiplication table (at most [`TABLE_CAP`] elements).
    pub fn to_table(&self) -> Result<GroupTable> {
        let labels = self.elements.iter().map(|u| u.to_string()).collect();
        GroupTable::from_fn(labels, self.generators.clone(), |i, j| {
            self.index[&(self.elements[i] * self.elements[j])] as usize
        })
    }
}

/// Breadth-first closure of `generators` under multiplication. The identity is
/// element 0; the remaining elements appear in discovery order.
pub fn generate_subgroup(generators: &[Unit], cap: usize) -> Result<UnitSubgroup> {
    let spec = generators
        .first()
        .map(|g| g.spec())
        .ok_or_else(|| Error::InvalidParameter("no generators".into()))?;
    if let Some(g) = generators.iter().find(|g| g.spec() != spec) {
        return Err(Error::SpecMismatch {
            left: spec.name(),
            right: g.spec().name(),
        });
    }
    let one = Unit::one(spec);
    let mut elements = vec![one];
    let mut index = HashMap::from([(one, 0u32)]);
    let mut cursor = 0;
    while cursor < elements.len() {
        let x = elements[cursor];
        cursor += 1;
        for g in generators {
            let y = x * *g;
            if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "subgroup closure",
                        cap: cap as u64,
                    });
                }
                slot.insert(elements.len() as u32);
                elements.push(y);
            }
        }
    }
    let generator_idx = generators.iter().map(|g| index[g] as usize).collect();
    Ok(UnitSubgroup {
        spec,
        elements,
        index,
        generators: generator_idx,
    })
}

/// All `2^(2^n - 1)` normalized units, identity first, then by packed coefficients.
/// The generator list is every element; see [`GroupTable::minimal_generators`].
pub fn full_unit_group(spec: GroupSpec, cap: usize) -> Result<UnitSubgroup> {
    use crate::algebra::AlgebraElement;
    let bits = spec.order() as u32;
    let count = 1u64 << (bits - 1);
    if count > cap as u64 {
        return Err(Error::CapExceeded {
            what: "unit group enumeration",
            cap: cap as u64,
        });
    }
    let half = spec.half();
    let mut elements = vec![Unit::one(spec)];
    for w in 0u64..(1u64 << bits) {
        if w.count_ones() % 2 == 1 && w != 1 {
            let x1 = (w & ((1 << half) - 1)) as u128;
            let x2 = (w >> half) as u128;
            elements.push(Unit::new(AlgebraElement::from_bits(spec, x1, x2))?);
        }
    }
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, u)| (*u, i as u32))
        .collect();
    Ok(UnitSubgroup {
        spec,
        generators: (0..elements.len()).collect(),
        elements,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;
    use crate::units::standard_a;

    fn cyclic(n: usize) -> GroupTable {
        GroupTable::from_fn((0..n).map(|i| i.to_string()).collect(), vec![1], |i, j| (i + j) % n)
            .unwrap()
    }

    #[test]
    fn cyclic_group_basics() {
        let c8 = cyclic(8);
        assert!(c8.is_valid_group());
        assert_eq!(c8.exponent(), 8);
        assert_eq!(c8.nilpotency_class(), Some(1));
        assert!(c8.is_abelian());
        assert!(!c8.is_elementary_abelian());
        assert_eq!(c8.abelianization_type(), vec![8]);
        assert_eq!(c8.generate([2]), vec![0, 2, 4, 6]);
    }

    #[test]
    fn abelian_invariants_of_products() {
        // C2 x C4 encoded as (i, j) -> i * 4 + j
        let t = GroupTable::from_fn((0..8).map(|i| i.to_string()).collect(), vec![4, 1], |x, y| {
            ((x / 4 + y / 4) % 2) * 4 + (x % 4 + y % 4) % 4
        })
        .unwrap();
        assert_eq!(t.abelianization_type(), vec![2, 4]);
        assert_eq!(cyclic(6).abelianization_type(), vec![2, 3]);
    }

    #[test]
    fn d8_units() {
        let d8 = GroupSpec::new(Family::Dihedral, 3).unwrap();
        let b = Unit::b(d8);
        let sub = generate_subgroup(&[b], 16).unwrap();
        assert_eq!(sub.order(), 2);
        let a = standard_a(d8);
        let tower = generate_subgroup(&[b, b.conjugate_by(&a)], 64).unwrap();
        assert_eq!(tower.order(), 4);
        assert!(tower.is_elementary_abelian());
        let t = tower.to_table().unwrap();
        assert!(t.is_valid_group());
        assert!(t.is_elementary_abelian());
        assert!(matches!(
            generate_subgroup(&[a, b], 4),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn full_unit_group_orders() {
        for f in [Family::Dihedral, Family::Quaternion] {
            let s = GroupSpec::new(f, 3).unwrap();
            let u = full_unit_group(s, 1 << 10).unwrap();
            assert_eq!(u.order(), 128);
            let t = u.to_table().unwrap();
            assert_eq!(t.nilpotency_class(), Some(2));
            let gens = t.minimal_generators();
            assert_eq!(t.generate(gens.iter().copied()).len(), 128);
        }
    }

    #[test]
    fn quotient_of_cyclic() {
        let c8 = cyclic(8);
        let q = c8.quotient(&[0, 4]).unwrap();
        assert_eq!(q.table.order(), 4);
        assert_eq!(q.reps, vec![0, 1, 2, 3]);
        assert!(q.table.is_valid_group());
    }
}
