//! Checks on `U(KG)`: the unit `A`, the towers `b^(A^k)`, the subgroup `H(KG)`
//! and the commutator identities used to build the wreath section.

use rand::Rng;
use serde_json::json;

use crate::algebra::{set_sum, AlgebraElement};
use crate::cyclic::CyclicElement;
use crate::error::{Error, Result};
use crate::group::{Family, GroupElement, GroupSpec};
use crate::report::Outcome;
use crate::table::generate_subgroup;
use crate::units::{
    b_tower, conj_by, group_commutator, in_h, order_of_unit, psi,
    standard_a, Unit,
};

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

/// Product of group elements as a monomial expansion; independent of the
/// component formulas.
pub fn convolution_product(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let spec = x.spec();
    let mut acc = AlgebraElement::zero(spec);
    for g in x.supp() {
        for h in y.supp() {
            acc += AlgebraElement::monomial(spec, spec.mul(g, h));
        }
    }
    acc
}

/// Component multiplication against monomial convolution: all monomial pairs
/// plus `samples` random pairs.
pub fn arithmetic_check<R: Rng + ?Sized>(spec: GroupSpec, samples: usize, rng: &mut R) -> Outcome {
    let els: Vec<GroupElement> = spec.elements().collect();
    for &g in &els {
        for &h in &els {
            let (x, y) = (AlgebraElement::monomial(spec, g), AlgebraElement::monomial(spec, h));
            if x * y != AlgebraElement::monomial(spec, spec.mul(g, h)) {
                return Outcome::fail(json!("monomial"), json!([g.to_string(), h.to_string()]));
            }
        }
    }
    for _ in 0..samples {
        let x = AlgebraElement::random(spec, rng);
        let y = AlgebraElement::random(spec, rng);
        if x * y != convolution_product(&x, &y) {
            return Outcome::fail(json!("random"), json!([x.to_string(), y.to_string()]));
        }
    }
    Outcome::pass(json!({"monomial_pairs": els.len() * els.len(), "random_pairs": samples}))
}

/// Closed-form inverse: exhaustive over all units at `n = 3`, random otherwise.
pub fn inverse_check<R: Rng + ?Sized>(spec: GroupSpec, samples: usize, rng: &mut R) -> Outcome {
    let one = AlgebraElement::one(spec);
    let test = |x: AlgebraElement| -> bool {
        match x.invert_unit() {
            Ok(y) => x * y == one && y * x == one,
            Err(_) => false,
        }
    };
    let mut tested = 0usize;
    if spec.n() == 3 {
        let bits = spec.order() as u32;
        for w in 0u32..(1 << bits) {
            if w.count_ones() % 2 == 0 {
                continue;
            }
            let half = spec.half() as u32;
            let x = AlgebraElement::from_bits(
                spec,
                (w & ((1 << half) - 1)) as u128,
                (w >> half) as u128,
            );
            tested += 1;
            if !test(x) {
                return Outcome::fail(json!({"tested": tested}), json!(x.to_string()));
            }
        }
    } else {
        for _ in 0..samples {
            let x = AlgebraElement::random_unit(spec, rng);
            tested += 1;
            if !test(x) {
                return Outcome::fail(json!({"tested": tested}), json!(x.to_string()));
            }
        }
    }
    Outcome::pass(json!({"tested": tested}))
}

/// `x^(2^k)` from the closed form against repeated squaring, `k = 0..n`.
pub fn power_formula_check<R: Rng + ?Sized>(spec: GroupSpec, samples: usize, rng: &mut R) -> Outcome {
    for _ in 0..samples {
        let x = AlgebraElement::random(spec, rng);
        let mut sq = x;
        for k in 0..=spec.n() {
            if x.pow2k(k) != sq {
                return Outcome::fail(json!({"samples": samples}), json!({"x": x.to_string(), "k": k}));
            }
            sq = sq * sq;
        }
    }
    Outcome::pass(json!({"samples": samples}))
}

/// Closed-form conjugation of self-conjugated units against `f^-1 h f`.
pub fn conjugation_check<R: Rng + ?Sized>(spec: GroupSpec, samples: usize, rng: &mut R) -> Outcome {
    for _ in 0..samples {
        let h = Unit::new(AlgebraElement::random_self_conjugated_unit(spec, rng)).expect("unit");
        let f = Unit::new(AlgebraElement::random_unit(spec, rng)).expect("unit");
        let closed = conj_by(&h, &f).expect("h is self-conjugated");
        if closed != h.conjugate_by(&f) {
            return Outcome::fail(
                json!({"samples": samples}),
                json!({"h": h.to_string(), "f": f.to_string()}),
            );
        }
    }
    Outcome::pass(json!({"samples": samples}))
}

/// `|A| = 2^(n-1)` and `A^(2^(n-2))` is the least power of `A` commuting with `b`.
pub fn order_of_a_check(spec: GroupSpec) -> Outcome {
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let order = order_of_unit(&a, spec.order() as u64).unwrap_or(0);
    let expected = spec.half() as u64;
    let mut p = a;
    let mut first_commuting = None;
    for k in 1..=expected {
        if p * b == b * p {
            first_commuting = Some(k);
            break;
        }
        p = p * a;
    }
    let n_tower = spec.derived_order() as u64;
    Outcome::check(
        order == expected && first_commuting == Some(n_tower),
        json!({"order": order, "first_power_commuting_with_b": first_commuting}),
        || json!({"A": a.to_string(), "order": order, "expected": expected}),
    )
}

/// The second component of `A^(2^(n-2))` is the sum of all powers of `a`.
pub fn second_component_check(spec: GroupSpec) -> Outcome {
    let an = standard_a(spec).pow(spec.derived_order() as u64);
    let sum_a = set_sum(spec, spec.a()).expect("a lies in <a>").x1();
    Outcome::check(an.value().x2() == sum_a, json!(an.value().x2().to_string()), || {
        json!({"A^N": an.to_string(), "expected_second_component": sum_a.to_string()})
    })
}

/// Closed-form towers against iterated conjugation by `A`, `k = 1..2^(n-2)`.
pub fn tower_closed_form_check(spec: GroupSpec) -> Outcome {
    let a = standard_a(spec);
    let mut x = Unit::b(spec);
    for k in 1..=spec.derived_order() {
        x = x.conjugate_by(&a);
        let closed = b_tower(spec, k).expect("k in range");
        if closed != x {
            return Outcome::fail(
                json!({"k": k}),
                json!({"closed_form": closed.to_string(), "iterated": x.to_string()}),
            );
        }
    }
    Outcome::pass(json!({"k_max": spec.derived_order()}))
}

/// Towers pairwise commute; in D and S each is an involution, and in every
/// family `(b, k.A)^2 = 1` for `k = 1..2^(n-1)`.
pub fn tower_relations_check(spec: GroupSpec) -> Outcome {
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let towers: Vec<Unit> = (0..spec.derived_order())
        .map(|k| b.conjugate_by(&a.pow(k as u64)))
        .collect();
    for (i, x) in towers.iter().enumerate() {
        for (j, y) in towers.iter().enumerate().skip(i + 1) {
            if *x * *y != *y * *x {
                return Outcome::fail(json!("commutativity"), json!([i, j]));
            }
        }
        if spec.family() != Family::Quaternion && !(*x * *x).is_one() {
            return Outcome::fail(json!("involution"), json!(i));
        }
    }
    let mut c = b;
    for k in 1..=spec.half() {
        c = group_commutator(&c, &a);
        if !(c * c).is_one() {
            return Outcome::fail(json!("commutator square"), json!(k));
        }
    }
    Outcome::pass(json!({"towers": towers.len(), "commutator_depth": spec.half()}))
}

/// `(b, k.A, A^(2^m)) = (b, (k + 2^m).A)` and `(b, A^(2^m)) = (b, 2^m.A)` for
/// `1 <= k <= 2^(n-2)`, `0 <= m <= n - 2`.
pub fn commutator_identities_check(spec: GroupSpec) -> Outcome {
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let depth = spec.derived_order() + spec.half();
    let mut chain = vec![b];
    for _ in 0..depth {
        let last = *chain.last().expect("nonempty");
        chain.push(group_commutator(&last, &a));
    }
    let mut evaluated = 0usize;
    for m in 0..=spec.n() - 2 {
        let p = 1usize << m;
        let ap = a.pow(p as u64);
        if group_commutator(&b, &ap) != chain[p] {
            return Outcome::fail(json!("power"), json!({"m": m}));
        }
        for k in 1..=spec.derived_order() {
            evaluated += 1;
            if group_commutator(&chain[k], &ap) != chain[k + p] {
                return Outcome::fail(json!("collapse"), json!({"k": k, "m": m}));
            }
        }
    }
    Outcome::pass(json!({"collapse_cases": evaluated}))
}

/// `H(KG)` is a subgroup, `ker psi = C_H(b)` and the kernel is elementary abelian.
/// Exhaustive over `H`; feasible for `n <= 5`.
pub fn h_kernel_check(spec: GroupSpec) -> Result<Outcome> {
    require_ds(spec)?;
    let half = spec.half() as u32;
    if half > 16 {
        return Err(Error::UnsupportedRange {
            check: "h_kernel".into(),
            n: spec.n(),
            min: 3,
            max: 5,
        });
    }
    let one = CyclicElement::one(spec);
    let h: Vec<Unit> = (0u128..(1 << half))
        .map(|bits| {
            let h1 = CyclicElement::from_bits(spec, bits);
            Unit::new(AlgebraElement::from_components(h1, h1 + one)).expect("augmentation one")
        })
        .collect();
    let b = Unit::b(spec);
    let mut kernel = Vec::new();
    for u in &h {
        let in_kernel = psi(u)?.is_one();
        if in_kernel != (*u * b == b * *u) {
            return Ok(Outcome::fail(json!("kernel"), json!(u.to_string())));
        }
        if !in_h(&u.inverse())? {
            return Ok(Outcome::fail(json!("inverse"), json!(u.to_string())));
        }
        if in_kernel {
            kernel.push(*u);
        }
    }
    // closure under products: exhaustive for |H| <= 256, generators otherwise
    let right: Vec<Unit> = if h.len() <= 256 {
        h.clone()
    } else {
        vec![standard_a(spec), b]
    };
    for x in &h {
        for y in &right {
            if !in_h(&(*x * *y))? {
                return Ok(Outcome::fail(json!("closure"), json!([x.to_string(), y.to_string()])));
            }
        }
    }
    for x in &kernel {
        if !(*x * *x).is_one() || kernel.iter().any(|y| *x * *y != *y * *x) {
            return Ok(Outcome::fail(json!("elementary abelian"), json!(x.to_string())));
        }
    }
    Ok(Outcome::pass(json!({"h_order": h.len(), "kernel_order": kernel.len()})))
}

/// `(b^A)^(i_1) ... (b^(A^(N-1)))^(i_(N-1))` never equals `1` or `b` for a
/// nonzero exponent vector, `N = 2^(n-2)`. Equivalently, products over all `N`
/// towers including `b` itself never vanish. Runs through a Gray code.
pub fn direct_decomposition_check(spec: GroupSpec) -> Result<Outcome> {
    require_ds(spec)?;
    let towers: Vec<Unit> = (0..spec.derived_order())
        .map(|k| Unit::b(spec).conjugate_by(&standard_a(spec).pow(k as u64)))
        .collect();
    let count = towers.len();
    if count > 20 {
        return Err(Error::UnsupportedRange {
            check: "direct_decomposition".into(),
            n: spec.n(),
            min: 3,
            max: 6,
        });
    }
    let mut x = Unit::one(spec);
    let mut mask = 0u32;
    for step in 1u32..(1 << count) {
        let bit = step.trailing_zeros() as usize;
        x = x * towers[bit];
        mask ^= 1 << bit;
        if x.is_one() {
            return Ok(Outcome::fail(json!({"products": step}), json!({"exponents": mask})));
        }
    }
    Ok(Outcome::pass(json!({"products": (1u64 << count) - 1})))
}

/// Quaternion: `<b^(A^i)> ∩ <b^(A^j)> = <b^2>` for `i < j < 2^(n-2)`, and the
/// towers generate an abelian group.
pub fn quaternion_intersection_check(spec: GroupSpec) -> Result<Outcome> {
    require_q(spec)?;
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let b2 = b * b;
    let cyclic: Vec<Vec<Unit>> = (0..spec.derived_order())
        .map(|k| {
            let t = b.conjugate_by(&a.pow(k as u64));
            (0..4).map(|e| t.pow(e)).collect()
        })
        .collect();
    let center = [Unit::one(spec), b2];
    for i in 0..cyclic.len() {
        for j in i + 1..cyclic.len() {
            let mut common: Vec<Unit> = cyclic[i]
                .iter()
                .filter(|x| cyclic[j].contains(x))
                .copied()
                .collect();
            common.dedup();
            if common.len() != 2 || !center.iter().all(|c| common.contains(c)) {
                return Ok(Outcome::fail(json!({"pair": [i, j]}), json!(common.len())));
            }
        }
    }
    let gens: Vec<Unit> = cyclic.iter().map(|c| c[1]).collect();
    let sub = generate_subgroup(&gens, 1 << 20)?;
    Ok(Outcome::check(
        sub.is_abelian(),
        json!({"pairs": cyclic.len() * (cyclic.len() - 1) / 2, "tower_subgroup_order": sub.order()}),
        || json!("tower subgroup is not abelian"),
    ))
}
