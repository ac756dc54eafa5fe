//! Lie powers of `KG`, the lower and upper Lie nilpotency indices, the
//! nilpotency index of augmentation ideals, and the class of `U(KG)`.
//!
//! `KG^[m]` is the ideal generated by the span `L_m` of left-normed brackets of
//! length `m`, with `L_1 = KG` and `L_(m+1) = [L_m, KG]`. `KG^(m)` is defined by
//! `KG^(1) = KG` and `KG^(m+1) = ideal([KG^(m), KG])`.

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::{set_sum, AlgebraElement};
use crate::cyclic::CyclicElement;
use crate::error::{Error, Result};
use crate::group::{Family, GroupElement, GroupSpec};
use crate::report::Outcome;
use crate::subspace::Subspace;
use crate::table::full_unit_group;
use crate::units::{order_of_unit, Unit};

/// `[x, y] = xy + yx`.
pub fn lie_bracket(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    Ok(x.checked_mul(y)? + *y * *x)
}

fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    *x * *y + *y * *x
}

/// `[x, g]` for a group element `g`.
pub fn bracket_monomial(x: &AlgebraElement, g: GroupElement) -> AlgebraElement {
    x.mul_monomial_right(g) + x.mul_monomial_left(g)
}

/// `[x, y, y, ..., y]` with `k` copies of `y`.
pub fn repeated_bracket(x: &AlgebraElement, y: &AlgebraElement, k: usize) -> AlgebraElement {
    (0..k).fold(*x, |acc, _| bracket(&acc, y))
}

/// Spans `L_1, L_2, ...` of left-normed brackets, ending with the first zero span.
pub fn lower_lie_spans(spec: GroupSpec) -> Vec<Subspace> {
    let group: Vec<GroupElement> = spec.elements().filter(|g| !g.is_identity()).collect();
    let mut spans = vec![Subspace::full(spec)];
    while !spans.last().expect("nonempty").is_zero() {
        let prev = spans.last().expect("nonempty");
        let mut next = Subspace::zero(spec);
        for u in prev.rows() {
            for &g in &group {
                next.insert(&bracket_monomial(&u, g));
            }
        }
        spans.push(next);
    }
    spans
}

/// `KG^[m]`.
pub fn lower_lie_power(spec: GroupSpec, m: usize) -> Result<Subspace> {
    if m == 0 {
        return Err(Error::InvalidParameter("Lie powers start at m = 1".into()));
    }
    let spans = lower_lie_spans(spec);
    Ok(spans
        .get(m - 1)
        .cloned()
        .unwrap_or_else(|| Subspace::zero(spec))
        .ideal_closure())
}

/// Lower Lie nilpotency index `t_L = min { m : KG^[m] = 0 }`.
pub fn t_lower(spec: GroupSpec) -> usize {
    lower_lie_spans(spec).len()
}

/// `KG^(1), KG^(2), ...`, ending with the first zero ideal.
pub fn upper_lie_powers(spec: GroupSpec) -> Vec<Subspace> {
    let gens = [spec.a(), spec.b()];
    let mut powers = vec![Subspace::full(spec)];
    while !powers.last().expect("nonempty").is_zero() {
        let prev = powers.last().expect("nonempty");
        // [u, gh] = [u, g] h + g [u, h], so generators suffice inside an ideal
        let mut next = Subspace::zero(spec);
        for u in prev.rows() {
            for &g in &gens {
                next.insert(&bracket_monomial(&u, g));
            }
        }
        powers.push(next.ideal_closure());
    }
    powers
}

/// `KG^(m)`.
pub fn upper_lie_power(spec: GroupSpec, m: usize) -> Result<Subspace> {
    if m == 0 {
        return Err(Error::InvalidParameter("Lie powers start at m = 1".into()));
    }
    Ok(upper_lie_powers(spec)
        .get(m - 1)
        .cloned()
        .unwrap_or_else(|| Subspace::zero(spec)))
}

/// Upper Lie nilpotency index `t^L = min { m : KG^(m) = 0 }`.
pub fn t_upper(spec: GroupSpec) -> usize {
    upper_lie_powers(spec).len()
}

/// `Delta(H), Delta(H)^2, ...` for `H = <g>` inside `<a>`, ending with zero.
pub fn augmentation_powers(spec: GroupSpec, g: GroupElement) -> Result<Vec<Subspace>> {
    if g.b_exp() != 0 {
        return Err(Error::InvalidParameter(format!("{g} does not lie in <a>")));
    }
    let one = AlgebraElement::one(spec);
    let mut members = vec![spec.identity()];
    let mut x = g;
    while !x.is_identity() {
        members.push(x);
        x = spec.mul(x, g);
    }
    let delta = Subspace::span(
        spec,
        members.iter().map(|&h| AlgebraElement::monomial(spec, h) + one),
    );
    let delta_rows: Vec<AlgebraElement> = delta.rows().collect();
    let mut powers = vec![delta];
    while !powers.last().expect("nonempty").is_zero() {
        let prev = powers.last().expect("nonempty");
        let next = Subspace::span(
            spec,
            prev.rows()
                .flat_map(|x| delta_rows.iter().map(move |y| x * *y)),
        );
        powers.push(next);
    }
    Ok(powers)
}

/// Nilpotency index `t(H)` of the augmentation ideal of `KH`, `H = <g>`.
pub fn t_aug(spec: GroupSpec, g: GroupElement) -> Result<usize> {
    Ok(augmentation_powers(spec, g)?.len())
}

/// `t(G')` with `G' = <a^2>`.
pub fn t_aug_derived(spec: GroupSpec) -> usize {
    t_aug(spec, spec.a_pow(2)).expect("a^2 lies in <a>")
}

/// Dimensions of `Delta^k(G') KG` for `k = 1, 2, ...` down to zero.
pub fn derived_series_dims(spec: GroupSpec) -> Vec<usize> {
    let powers = augmentation_powers(spec, spec.a_pow(2)).expect("a^2 lies in <a>");
    powers
        .iter()
        .map(|p| {
            Subspace::span(
                spec,
                p.rows()
                    .flat_map(|x| spec.elements().map(move |g| x.mul_monomial_right(g))),
            )
            .dim()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRow {
    pub family: Family,
    pub n: u32,
    pub t_lower: usize,
    pub t_upper: usize,
    pub t_aug: usize,
    /// Class of `U(KG)` implied by `cl U = t_L - 1`.
    pub cl_bound: usize,
}

pub fn index_row(spec: GroupSpec) -> IndexRow {
    let t_lower = t_lower(spec);
    IndexRow {
        family: spec.family(),
        n: spec.n(),
        t_lower,
        t_upper: t_upper(spec),
        t_aug: t_aug_derived(spec),
        cl_bound: t_lower - 1,
    }
}

/// Brute-force class of `U(KG)` from the full unit group (only feasible at `n = 3`).
pub fn unit_group_class(spec: GroupSpec) -> Result<usize> {
    let units = full_unit_group(spec, 1 << 8)?;
    let table = units.to_table()?;
    table
        .nilpotency_class()
        .ok_or_else(|| Error::InvalidParameter("unit group is not nilpotent".into()))
}

/// `cl U(G) = |G'|` for the generalized quaternion group, through the
/// nonvanishing bracket `[b, (2^(n-2) - 1) a] = a sum(<a^2>) b`.
pub fn verify_quaternion_class(spec: GroupSpec) -> Result<Outcome> {
    if spec.family() != Family::Quaternion {
        return Err(Error::WrongFamily(spec.family()));
    }
    let derived = spec.derived_order();
    let a = AlgebraElement::a(spec);
    let b = AlgebraElement::b(spec);
    let trace = CyclicElement::a_pow(spec, 1) + CyclicElement::a_pow(spec, -1);

    let mut bad_k = Vec::new();
    let mut x = b;
    for k in 1..derived {
        x = bracket(&x, &a);
        let expected = AlgebraElement::from_cyclic(trace.pow(k as u64)) * b;
        if x != expected {
            bad_k.push(k);
        }
    }
    let top = repeated_bracket(&b, &a, derived - 1);
    let closed = a * set_sum(spec, spec.a_pow(2))? * b;
    let t_l = t_lower(spec);
    let t_u = t_upper(spec);

    let mut parts = vec![
        (
            "power_bracket",
            Outcome::check(bad_k.is_empty(), json!(derived - 1), || json!(bad_k)),
        ),
        (
            "top_bracket",
            Outcome::check(!top.is_zero() && top == closed, json!(top.to_string()), || {
                json!({"bracket": top.to_string(), "expected": closed.to_string()})
            }),
        ),
        (
            "t_lower",
            Outcome::check(t_l == derived + 1, json!(t_l), || json!(t_l)),
        ),
        (
            "class_upper_bound",
            Outcome::check(t_l <= t_u && t_u <= derived + 1, json!(t_u), || {
                json!({"t_lower": t_l, "t_upper": t_u})
            }),
        ),
    ];
    if spec.n() == 3 {
        let cl = unit_group_class(spec)?;
        parts.push((
            "brute_force_class",
            Outcome::check(cl == derived, json!(cl), || json!(cl)),
        ));
    }
    Ok(Outcome::all(parts))
}

/// Every normalized unit has order dividing `exp G = 2^(n-1)`: exhaustive at
/// `n = 3`, `samples` random units otherwise. Also records `t^L <= 1 + 2^(e-1)`.
pub fn exponent_check<R: Rng + ?Sized>(spec: GroupSpec, samples: usize, rng: &mut R) -> Outcome {
    let exp_g = spec.half() as u64;
    let mut max_order = 1;
    let mut witness = None;
    let mut tested = 0usize;
    let mut visit = |u: Unit| {
        tested += 1;
        match order_of_unit(&u, exp_g) {
            Ok(o) => max_order = max_order.max(o),
            Err(_) => {
                if witness.is_none() {
                    witness = Some(u.to_string());
                }
            }
        }
    };
    visit(Unit::new(AlgebraElement::a(spec)).expect("group element"));
    if spec.n() == 3 {
        for u in full_unit_group(spec, 1 << 8).expect("n = 3").elements() {
            visit(*u);
        }
    } else {
        for _ in 0..samples {
            visit(Unit::new(AlgebraElement::random_unit(spec, rng)).expect("augmentation one"));
        }
    }
    let t_u = t_upper(spec);
    let bound = 1 + (exp_g / 2) as usize;
    let ok = witness.is_none() && max_order == exp_g && t_u <= bound;
    Outcome::check(
        ok,
        json!({"tested": tested, "max_order": max_order, "exp_g": exp_g, "t_upper": t_u, "bound": bound}),
        || json!({"unit": witness, "max_order": max_order, "t_upper": t_u}),
    )
}

/// `[[[x, y], [z, w]], v] = 0` for all group elements `x, y, z, w, v`.
pub fn lie_centrally_metabelian_check(spec: GroupSpec) -> Outcome {
    let els: Vec<GroupElement> = spec.elements().collect();
    let pairs: Vec<AlgebraElement> = els
        .iter()
        .flat_map(|&x| {
            els.iter()
                .map(move |&y| bracket_monomial(&AlgebraElement::monomial(spec, x), y))
        })
        .collect();
    let mut evaluations = 0u64;
    for p in &pairs {
        for q in &pairs {
            let inner = if p.is_zero() || q.is_zero() {
                AlgebraElement::zero(spec)
            } else {
                bracket(p, q)
            };
            for &v in &els {
                evaluations += 1;
                let outer = bracket_monomial(&inner, v);
                if !outer.is_zero() {
                    return Outcome::fail(
                        json!({"evaluations": evaluations}),
                        json!({"inner": inner.to_string(), "v": v.to_string()}),
                    );
                }
            }
        }
    }
    Outcome::pass(json!({"evaluations": evaluations}))
}
