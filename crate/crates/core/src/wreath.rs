//! The wreath product `C2 wr C_(2^m)` and the sections of `U(KG)` isomorphic to it.
//!
//! For `N = 2^(n-2)` the section is `F / K` with
//! `F = <b, b^A, ..., b^(A^(N-1)), A>`, `K = <A^N>` for D and S and
//! `K = <b^2, A^N>` for Q.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::group::{Family, GroupSpec};
use crate::iso::{find_isomorphism, Fingerprint, EXPLICIT_CAP};
use crate::report::Outcome;
use crate::table::{generate_subgroup, GroupTable, UnitSubgroup, DEFAULT_CLOSURE_CAP, TABLE_CAP};
use crate::units::{repeated_commutator, standard_a, Unit};

/// Order parameters of `C2 wr C_(2^m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathSpec {
    pub m: u32,
}

impl WreathSpec {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("wreath product needs m >= 1".into()));
        }
        Ok(WreathSpec { m })
    }

    pub fn base_rank(&self) -> usize {
        1 << self.m
    }

    pub fn order(&self) -> u128 {
        (1u128 << self.base_rank()) * self.base_rank() as u128
    }

    /// Equal to the nilpotency index of the augmentation ideal of `K C_(2^m)`.
    pub fn class(&self) -> usize {
        self.base_rank()
    }
}

/// Explicit table of `C2 wr C_(2^m)`. Element `(v, s)` has index `v + (s << 2^m)`;
/// the product is `(v, s)(w, t) = (v + rot^s(w), s + t)`.
pub fn build_wreath(m: u32) -> Result<GroupTable> {
    let ws = WreathSpec::new(m)?;
    let r = ws.base_rank();
    if ws.order() > TABLE_CAP as u128 {
        return Err(Error::SizeCap {
            order: u64::try_from(ws.order()).unwrap_or(u64::MAX),
            cap: TABLE_CAP as u64,
        });
    }
    let order = ws.order() as usize;
    let base_mask = (1usize << r) - 1;
    let rot = |w: usize, s: usize| {
        if s == 0 {
            w
        } else {
            ((w << s) | (w >> (r - s))) & base_mask
        }
    };
    let labels = (0..order)
        .map(|x| format!("({:0width$b}, {})", x & base_mask, x >> r, width = r))
        .collect();
    GroupTable::from_fn(labels, vec![1, 1 << r], |x, y| {
        let (v, s) = (x & base_mask, x >> r);
        let (w, t) = (y & base_mask, y >> r);
        (v ^ rot(w, s)) | (((s + t) % r) << r)
    })
}

/// A quotient of a subgroup of `U(KG)` by a normal subgroup.
#[derive(Clone)]
pub struct CosetTable {
    pub parent: UnitSubgroup,
    pub normal: UnitSubgroup,
    /// Coset number of each parent element.
    pub coset_of: Vec<u32>,
    /// Minimal parent index in each coset; coset 0 is the normal subgroup.
    pub reps: Vec<usize>,
    pub table: GroupTable,
}

impl CosetTable {
    /// Verifies `normal` is normal in `parent`, then tabulates the quotient.
    pub fn new(parent: UnitSubgroup, normal: UnitSubgroup) -> Result<Self> {
        for x in normal.elements() {
            if !parent.contains(x) {
                return Err(Error::NotNormal(format!("{x} is not in the parent group")));
            }
        }
        for &g in parent.generators() {
            let g = parent.elements()[g];
            for &k in normal.generators() {
                let k = normal.elements()[k];
                if !normal.contains(&k.conjugate_by(&g)) {
                    return Err(Error::NotNormal(format!("{k} conjugated by {g}")));
                }
            }
        }
        let mut coset_of = vec![u32::MAX; parent.order()];
        let mut reps = Vec::new();
        for x in 0..parent.order() {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for k in normal.elements() {
                let y = parent.index_of(&(parent.elements()[x] * *k)).expect("closed");
                coset_of[y] = id;
            }
        }
        let labels = reps
            .iter()
            .map(|&r| parent.elements()[r].to_string())
            .collect();
        let mut gens: Vec<usize> = parent
            .generators()
            .iter()
            .map(|&g| coset_of[g] as usize)
            .filter(|&c| c != 0)
            .collect();
        gens.dedup();
        let table = GroupTable::from_fn(labels, gens, |i, j| {
            let p = parent.elements()[reps[i]] * parent.elements()[reps[j]];
            coset_of[parent.index_of(&p).expect("closed")] as usize
        })?;
        Ok(CosetTable {
            parent,
            normal,
            coset_of,
            reps,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Coset of a unit, if it lies in the parent group.
    pub fn image(&self, u: &Unit) -> Option<usize> {
        self.parent.index_of(u).map(|i| self.coset_of[i] as usize)
    }

    /// Coset products do not depend on representatives: `(r_i k) r_j` lies in the
    /// coset of `r_i r_j` for every pair of representatives and every `k` in the
    /// normal subgroup.
    pub fn is_well_defined(&self) -> bool {
        let els = self.parent.elements();
        let idx: HashMap<Unit, usize> = self
            .reps
            .iter()
            .enumerate()
            .map(|(c, &r)| (els[r], c))
            .collect();
        debug_assert_eq!(idx.len(), self.order());
        for (i, &ri) in self.reps.iter().enumerate() {
            for k in self.normal.elements().iter().skip(1) {
                let shifted = els[ri] * *k;
                for (j, &rj) in self.reps.iter().enumerate() {
                    match self.image(&(shifted * els[rj])) {
                        Some(c) if c == self.table.mul(i, j) => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }
}

/// Generators `b, b^A, ..., b^(A^(N-1)), A` of `F`.
pub fn section_generators(spec: GroupSpec) -> Vec<Unit> {
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let mut gens: Vec<Unit> = (0..spec.derived_order())
        .map(|k| b.conjugate_by(&a.pow(k as u64)))
        .collect();
    gens.push(a);
    gens
}

/// `F / <A^N>` for dihedral and semidihedral groups.
pub fn construct_section_ds(spec: GroupSpec) -> Result<CosetTable> {
    if spec.family() == Family::Quaternion {
        return Err(Error::WrongFamily(spec.family()));
    }
    let parent = generate_subgroup(&section_generators(spec), DEFAULT_CLOSURE_CAP)?;
    let a_n = standard_a(spec).pow(spec.derived_order() as u64);
    let normal = generate_subgroup(&[a_n], DEFAULT_CLOSURE_CAP)?;
    CosetTable::new(parent, normal)
}

/// `F / <b^2, A^N>` for the generalized quaternion group.
pub fn construct_section_q(spec: GroupSpec) -> Result<CosetTable> {
    if spec.family() != Family::Quaternion {
        return Err(Error::WrongFamily(spec.family()));
    }
    let parent = generate_subgroup(&section_generators(spec), DEFAULT_CLOSURE_CAP)?;
    let b = Unit::b(spec);
    let a_n = standard_a(spec).pow(spec.derived_order() as u64);
    let normal = generate_subgroup(&[b * b, a_n], DEFAULT_CLOSURE_CAP)?;
    CosetTable::new(parent, normal)
}

pub fn construct_section(spec: GroupSpec) -> Result<CosetTable> {
    match spec.family() {
        Family::Quaternion => construct_section_q(spec),
        _ => construct_section_ds(spec),
    }
}

/// The subgroup `<b, b^A, ..., b^(A^(N-1))>` is normal in `F`.
pub fn tower_subgroup_is_normal(spec: GroupSpec) -> Result<bool> {
    let gens = section_generators(spec);
    let (towers, top) = gens.split_at(gens.len() - 1);
    let sub = generate_subgroup(towers, DEFAULT_CLOSURE_CAP)?;
    Ok(towers
        .iter()
        .all(|t| sub.contains(&t.conjugate_by(&top[0])) && sub.contains(&t.conjugate_by(&top[0].inverse()))))
}

/// Machine-readable record of one section computation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SectionCertificate {
    pub family: Family,
    pub n: u32,
    pub generators: Vec<String>,
    pub normal_generators: Vec<String>,
    pub parent_order: usize,
    pub normal_order: usize,
    pub section_order: usize,
    pub section_class: Option<usize>,
    pub wreath_m: u32,
    pub wreath_order: u128,
    pub wreath_class: usize,
    pub well_defined: bool,
    pub tower_subgroup_normal: bool,
    pub witness_nontrivial: bool,
    pub fingerprint: Fingerprint,
    pub fingerprint_matches_wreath: Option<bool>,
    /// Images in the wreath table of the section elements, when found explicitly.
    pub isomorphism: Option<Vec<usize>>,
}

/// Builds the section and compares it with `C2 wr G'`: explicitly when both
/// tables have at most [`EXPLICIT_CAP`] elements, by fingerprint otherwise.
pub fn certify_section(spec: GroupSpec) -> Result<SectionCertificate> {
    let section = construct_section(spec)?;
    let m = spec.n() - 2;
    let ws = WreathSpec::new(m)?;
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let witness = repeated_commutator(&b, &a, spec.derived_order() - 1);
    let witness_nontrivial = section.image(&witness).is_some_and(|c| c != 0);
    let fingerprint = Fingerprint::of(&section.table);
    let wreath = build_wreath(m).ok();
    let (fingerprint_matches_wreath, isomorphism) = match &wreath {
        Some(w) => {
            let matches = Fingerprint::of(w) == fingerprint;
            let iso = if matches && w.order() <= EXPLICIT_CAP {
                find_isomorphism(&section.table, w)?
            } else {
                None
            };
            (Some(matches), iso)
        }
        None => (None, None),
    };
    let gens = section_generators(spec);
    Ok(SectionCertificate {
        family: spec.family(),
        n: spec.n(),
        generators: gens.iter().map(|g| g.to_string()).collect(),
        normal_generators: section
            .normal
            .generators()
            .iter()
            .map(|&i| section.normal.elements()[i].to_string())
            .collect(),
        parent_order: section.parent.order(),
        normal_order: section.normal.order(),
        section_order: section.order(),
        section_class: fingerprint.class,
        wreath_m: m,
        wreath_order: ws.order(),
        wreath_class: ws.class(),
        well_defined: section.is_well_defined(),
        tower_subgroup_normal: tower_subgroup_is_normal(spec)?,
        witness_nontrivial,
        fingerprint,
        fingerprint_matches_wreath,
        isomorphism,
    })
}

/// Section order `2^(2^(n-2) + n - 2)`, class `2^(n-2)`, nontrivial witness
/// commutator, and isomorphism with `C2 wr G'` (explicit for orders up to 512).
pub fn section_check(spec: GroupSpec) -> Result<Outcome> {
    let cert = certify_section(spec)?;
    let expected_order = cert.wreath_order;
    let explicit_required = expected_order <= EXPLICIT_CAP as u128;
    let iso_ok = if explicit_required {
        cert.isomorphism.is_some()
    } else {
        cert.fingerprint_matches_wreath != Some(false)
    };
    let ok = cert.section_order as u128 == expected_order
        && cert.section_class == Some(cert.wreath_class)
        && cert.well_defined
        && cert.tower_subgroup_normal
        && cert.witness_nontrivial
        && iso_ok;
    let detail = json!({
        "parent_order": cert.parent_order,
        "section_order": cert.section_order,
        "class": cert.section_class,
        "isomorphism": if explicit_required { "explicit" } else { "fingerprint" },
    });
    Ok(Outcome::check(ok, detail, || serde_json::to_value(&cert).unwrap_or_default()))
}

/// `(b A^-1)^N` lies outside `<b^2, A^N>`, by explicit membership.
pub fn quaternion_nonmembership_check(spec: GroupSpec) -> Result<Outcome> {
    if spec.family() != Family::Quaternion {
        return Err(Error::WrongFamily(spec.family()));
    }
    let n = spec.derived_order() as u64;
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let k = generate_subgroup(&[b * b, a.pow(n)], DEFAULT_CLOSURE_CAP)?;
    let x = (b * a.inverse()).pow(n);
    let y = (a * b).pow(n);
    Ok(Outcome::check(
        !k.contains(&x) && !k.contains(&y),
        json!({"subgroup_order": k.order()}),
        || json!({"(bA^-1)^N": x.to_string(), "(Ab)^N": y.to_string()}),
    ))
}

/// Second components: `A^N` gives the sum over `<a>`, `(Ab)^N` the sum over
/// `<a^2>`, and both survive multiplication by `b^2`.
pub fn quaternion_components_check(spec: GroupSpec) -> Result<Outcome> {
    if spec.family() != Family::Quaternion {
        return Err(Error::WrongFamily(spec.family()));
    }
    let n = spec.derived_order() as u64;
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let sum_a = crate::algebra::set_sum(spec, spec.a())?.x1();
    let sum_a2 = crate::algebra::set_sum(spec, spec.a_pow(2))?.x1();
    let an = a.pow(n).value();
    let abn = (a * b).pow(n).value();
    let b2 = (b * b).value();
    let ok = an.x2() == sum_a
        && abn.x2() == sum_a2
        && (an * b2).x2() == sum_a
        && (abn * b2).x2() == sum_a2;
    Ok(Outcome::check(
        ok,
        json!({"A^N": an.x2().to_string(), "(Ab)^N": abn.x2().to_string()}),
        || json!({"expected_A^N": sum_a.to_string(), "expected_(Ab)^N": sum_a2.to_string()}),
    ))
}

/// `(b, A, A^2, ..., A^(N/2)) = (b, (N-1).A)`, `b b^A ... b^(A^(N-1)) = (b A^-1)^N A^N`,
/// and the first equals the second up to a factor `b^2`, which is recorded.
pub fn telescope_identity_check(spec: GroupSpec) -> Result<Outcome> {
    if spec.family() != Family::Quaternion {
        return Err(Error::WrongFamily(spec.family()));
    }
    let n = spec.derived_order();
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let mut powers = Vec::new();
    let mut p = 1u64;
    while p as usize <= n / 2 {
        powers.push(a.pow(p));
        p *= 2;
    }
    let chain = crate::units::iterated_commutator(&b, &powers);
    let witness = repeated_commutator(&b, &a, n - 1);
    let mut product = Unit::one(spec);
    for k in 0..n {
        product = product * b.conjugate_by(&a.pow(k as u64));
    }
    let closed = (b * a.inverse()).pow(n as u64) * a.pow(n as u64);
    let b2_factor = if chain == product {
        Some(false)
    } else if chain == b * b * product {
        Some(true)
    } else {
        None
    };
    Ok(Outcome::check(
        chain == witness && product == closed && b2_factor.is_some(),
        json!({"length": powers.len() + 1, "b2_factor": b2_factor}),
        || {
            json!({
                "chain": chain.to_string(),
                "collapsed": witness.to_string(),
                "product": product.to_string(),
                "closed": closed.to_string(),
            })
        },
    ))
}
