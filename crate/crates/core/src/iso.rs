//! Isomorphism testing for small groups given by tables: an invariant
//! fingerprint, and an explicit search over generator images.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::GroupTable;

/// Largest order accepted by the explicit search.
pub const EXPLICIT_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub exponent: u64,
    pub class: Option<usize>,
    pub derived_order: usize,
    pub abelianization: Vec<u64>,
    pub center_order: usize,
    pub order_statistics: BTreeMap<u64, usize>,
}

impl Fingerprint {
    pub fn of(t: &GroupTable) -> Self {
        Fingerprint {
            order: t.order(),
            exponent: t.exponent(),
            class: t.nilpotency_class(),
            derived_order: t.derived_subgroup().len(),
            abelianization: t.abelianization_type(),
            center_order: t.center().len(),
            order_statistics: t.order_statistics(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoMode {
    Invariants,
    Explicit,
}

/// Compares fingerprints, or in explicit mode searches for an isomorphism.
pub fn isomorphic(t1: &GroupTable, t2: &GroupTable, mode: IsoMode) -> Result<bool> {
    match mode {
        IsoMode::Invariants => Ok(Fingerprint::of(t1) == Fingerprint::of(t2)),
        IsoMode::Explicit => Ok(find_isomorphism(t1, t2)?.is_some()),
    }
}

/// An isomorphism `t1 -> t2` as the image of each index, or `None`.
///
/// Generators of `t1` are sent in turn to elements of `t2` with the same order
/// and centralizer size; each partial assignment is propagated along the
/// Cayley graph and pruned on the first clash or collision.
pub fn find_isomorphism(t1: &GroupTable, t2: &GroupTable) -> Result<Option<Vec<usize>>> {
    for t in [t1, t2] {
        if t.order() > EXPLICIT_CAP {
            return Err(Error::SizeCap {
                order: t.order() as u64,
                cap: EXPLICIT_CAP as u64,
            });
        }
    }
    if t1.order() != t2.order() {
        return Ok(None);
    }
    let gens = t1.minimal_generators();
    let key = |t: &GroupTable, x: usize| {
        let centralizer = (0..t.order()).filter(|&y| t.mul(x, y) == t.mul(y, x)).count();
        (t.element_order(x), centralizer)
    };
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = key(t1, g);
            (0..t2.order()).filter(|&y| key(t2, y) == k).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    let map = search(t1, t2, &gens, &candidates, &mut images);
    Ok(map.filter(|m| is_isomorphism(t1, t2, m)))
}

fn search(
    t1: &GroupTable,
    t2: &GroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let level = images.len();
    if level == gens.len() {
        let map = propagate(t1, t2, gens, images)?;
        return map.iter().all(|&x| x != usize::MAX).then_some(map);
    }
    for &c in &candidates[level] {
        images.push(c);
        if propagate(t1, t2, &gens[..=level], images).is_some() {
            if let Some(m) = search(t1, t2, gens, candidates, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}

// Extends x -> map(x) along right multiplication by the assigned generators.
// Fails if a product gets two images or two elements share an image.
fn propagate(t1: &GroupTable, t2: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = t1.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0];
    let mut cursor = 0;
    while cursor < queue.len() {
        let x = queue[cursor];
        cursor += 1;
        for (&g, &h) in gens.iter().zip(images) {
            let y = t1.mul(x, g);
            let img = t2.mul(map[x], h);
            if map[y] == usize::MAX {
                if used[img] {
                    return None;
                }
                map[y] = img;
                used[img] = true;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(map)
}

/// Full check that `map` is a bijective homomorphism.
pub fn is_isomorphism(t1: &GroupTable, t2: &GroupTable, map: &[usize]) -> bool {
    let n = t1.order();
    if t2.order() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    (0..n).all(|i| (0..n).all(|j| map[t1.mul(i, j)] == t2.mul(map[i], map[j])))
}
