//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::Oracle;
use maxclass::algebra::{set_sum, AlgebraElement};
use maxclass::group::{Family, GroupSpec};
use maxclass::iso::{is_isomorphism, Fingerprint};
use maxclass::lie;
use maxclass::table::{full_unit_group, generate_subgroup};
use maxclass::units::{b_tower, order_of_unit, repeated_commutator, standard_a, Unit};
use maxclass::wreath::{build_wreath, certify_section};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn spec(f: Family, n: u32) -> GroupSpec {
    GroupSpec::new(f, n).expect("valid group")
}

fn groups(n_max: u32) -> impl Iterator<Item = (Family, u32)> {
    Family::ALL
        .into_iter()
        .flat_map(move |f| (f.min_n()..=n_max).map(move |n| (f, n)))
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Result<(), String> {
    if elapsed > budget {
        Err(format!("{what} took {elapsed:.1?}, budget {budget:?}"))
    } else {
        Ok(())
    }
}

fn arithmetic_oracle() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut pairs = 0usize;
    for f in Family::ALL {
        let n = f.min_n();
        let o = Oracle::new(f, n);
        for g in 0..o.size() {
            for h in 0..o.size() {
                let (x, y) = (o.vector_from_bits(1 << g), o.vector_from_bits(1 << h));
                if o.element(&x) * o.element(&y) != o.element(&o.mul(&x, &y)) {
                    return Err(format!("{}: monomials {g}, {h}", o.spec));
                }
                pairs += 1;
            }
        }
        for _ in 0..100_000 {
            let (x, y) = (o.random(&mut rng), o.random(&mut rng));
            if o.element(&x) * o.element(&y) != o.element(&o.mul(&x, &y)) {
                return Err(format!("{}: {:?} * {:?}", o.spec, x, y));
            }
            pairs += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(10), "arithmetic")?;
    Ok(format!("{pairs} pairs, 0 mismatches"))
}

fn closed_inverse() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut tested = 0usize;
    for (f, n) in groups(6) {
        let o = Oracle::new(f, n);
        let units: Vec<Vec<u8>> = if n == 3 {
            (0u64..1 << o.size())
                .filter(|w| w.count_ones() % 2 == 1)
                .map(|w| o.vector_from_bits(w))
                .collect()
        } else {
            (0..10_000).map(|_| o.random_unit(&mut rng)).collect()
        };
        for u in units {
            let x = o.element(&u);
            let inv = x.invert_unit().map_err(|e| format!("{}: {x}: {e}", o.spec))?;
            if o.mul(&u, &o.vector(&inv)) != o.one() {
                return Err(format!("{}: {x}", o.spec));
            }
            tested += 1;
        }
    }
    Ok(format!("{tested} units"))
}

fn power_formula() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (f, n) in groups(6) {
        let s = spec(f, n);
        for _ in 0..10_000 {
            let x = AlgebraElement::random(s, &mut rng);
            let mut sq = x;
            for k in 0..=n {
                if x.pow2k(k) != sq {
                    return Err(format!("{s}: x = {x}, k = {k}"));
                }
                sq = sq * sq;
            }
        }
    }
    Ok("10^4 elements per group, k = 0..n".into())
}

fn order_of_a() -> Verdict {
    let mut problems = Vec::new();
    for (f, n) in groups(6) {
        let s = spec(f, n);
        let a = standard_a(s);
        let order = order_of_unit(&a, 1 << n).map_err(|e| e.to_string())?;
        if order != s.half() as u64 {
            problems.push(format!("{s}: |A| = {order}"));
        }
        let second = a.pow(s.derived_order() as u64).value().x2();
        let sum_a = set_sum(s, s.a()).map_err(|e| e.to_string())?.x1();
        if second != sum_a {
            problems.push(format!("{}: second component of A^{} is {second}", s.name(), s.derived_order()));
        }
    }
    if problems.is_empty() {
        Ok("|A| = 2^(n-1) and second component of A^N = sum(<a>), n = 3..6".into())
    } else {
        Err(problems.join("; "))
    }
}

fn tower_closed_forms() -> Verdict {
    let mut cases = 0usize;
    for (f, n) in groups(6) {
        let o = Oracle::new(f, n);
        let a = o.unit_a();
        let a_inv = o.inverse(&a);
        let mut x = o.monomial(0, 1);
        for k in 1..=o.spec.derived_order() {
            x = o.mul(&o.mul(&a_inv, &x), &a);
            let closed = b_tower(o.spec, k).map_err(|e| e.to_string())?;
            if closed.value() != o.element(&x) {
                return Err(format!("{} k = {k}", o.spec));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} towers, exact"))
}

fn direct_decomposition() -> Verdict {
    let start = Instant::now();
    let mut products = 0u64;
    for f in [Family::Dihedral, Family::Semidihedral] {
        for n in f.min_n()..=6 {
            let s = spec(f, n);
            let big_n = s.derived_order();
            // b^(A^1), ..., b^(A^N) with b^(A^N) = b
            let towers: Vec<Unit> = (1..=big_n).map(|k| b_tower(s, k).expect("in range")).collect();
            let b = Unit::b(s);
            let mut x = Unit::one(s);
            let mut mask = 0u64;
            for step in 1u64..(1 << big_n) {
                let bit = step.trailing_zeros() as usize;
                x = x * towers[bit];
                mask ^= 1 << bit;
                products += 1;
                if x.is_one() || (mask >> (big_n - 1) == 0 && x == b) {
                    return Err(format!("{s}: exponent vector {mask:b}"));
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60), "decomposition")?;
    Ok(format!("{products} products, n = 3..6"))
}

fn quaternion_class() -> Verdict {
    for n in 3..=8 {
        let s = spec(Family::Quaternion, n);
        let t = lie::t_lower(s);
        if t != s.derived_order() + 1 {
            return Err(format!("{s}: t_L = {t}"));
        }
        let o = Oracle::new(Family::Quaternion, n);
        let a = o.monomial(1, 0);
        let mut x = o.monomial(0, 1);
        for _ in 0..s.derived_order() - 1 {
            x = o.add(&o.mul(&x, &a), &o.mul(&a, &x));
        }
        let mut sum_a2 = vec![0u8; o.size()];
        for i in (0..s.half()).step_by(2) {
            sum_a2 = o.add(&sum_a2, &o.monomial(i, 0));
        }
        let expected = o.mul(&o.mul(&a, &sum_a2), &o.monomial(0, 1));
        if x != expected || x.iter().all(|&c| c == 0) {
            return Err(format!("{s}: top bracket {}", o.element(&x)));
        }
    }
    let q8 = spec(Family::Quaternion, 3);
    let units = full_unit_group(q8, 1 << 8).map_err(|e| e.to_string())?;
    let table = units.to_table().map_err(|e| e.to_string())?;
    let class = table.nilpotency_class();
    if units.order() != 128 || class != Some(2) {
        return Err(format!("U(Q8): order {}, class {class:?}", units.order()));
    }
    Ok("t_L = 2^(n-2)+1 for n = 3..8, cl U(Q8) = 2 over 128 units, top bracket exact".into())
}

fn index_identities() -> Verdict {
    for (f, n) in groups(6) {
        let s = spec(f, n);
        let row = lie::index_row(s);
        if row.t_lower != row.t_upper || row.t_aug + 1 != row.t_lower || row.t_aug != s.derived_order() {
            return Err(format!("{s}: {row:?}"));
        }
    }
    Ok("t_L = t^L = t(G') + 1 = |G'| + 1, n = 3..6".into())
}

fn wreath_section() -> Verdict {
    let mut notes = Vec::new();
    for (f, n) in groups(5) {
        let s = spec(f, n);
        let cert = certify_section(s).map_err(|e| e.to_string())?;
        let big_n = s.derived_order();
        let order = 1usize << (big_n + n as usize - 2);
        if cert.section_order != order || cert.section_class != Some(big_n) {
            return Err(format!("{s}: order {} class {:?}", cert.section_order, cert.section_class));
        }
        if !cert.well_defined || !cert.witness_nontrivial {
            return Err(format!("{s}: well defined {}, witness {}", cert.well_defined, cert.witness_nontrivial));
        }
        if n <= 4 {
            let map = cert.isomorphism.ok_or(format!("{s}: no explicit isomorphism"))?;
            let section = maxclass::wreath::construct_section(s).map_err(|e| e.to_string())?;
            let w = build_wreath(n - 2).map_err(|e| e.to_string())?;
            if !is_isomorphism(&section.table, &w, &map) {
                return Err(format!("{s}: map is not an isomorphism"));
            }
        } else {
            let w = build_wreath(n - 2).map_err(|e| e.to_string())?;
            if Fingerprint::of(&w) != cert.fingerprint {
                return Err(format!("{s}: fingerprints differ"));
            }
        }
        if f == Family::Quaternion {
            let a = standard_a(s);
            let b = Unit::b(s);
            let k = generate_subgroup(&[b * b, a.pow(big_n as u64)], 1 << 10).map_err(|e| e.to_string())?;
            let x = (b * a.inverse()).pow(big_n as u64);
            let witness = repeated_commutator(&b, &a, big_n - 1);
            if k.contains(&x) || k.contains(&witness) {
                return Err(format!("{s}: (bA^-1)^N lies in <b^2, A^N>"));
            }
        }
        notes.push(s.name());
    }
    Ok(format!("sections of {} match C2 wr G'", notes.join(" ")))
}

fn side_claims() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for (f, n) in groups(5) {
        let s = spec(f, n);
        let exp_g = s.half() as u64;
        let mut max_order = 1;
        let units: Vec<Unit> = if n == 3 {
            full_unit_group(s, 1 << 8).map_err(|e| e.to_string())?.elements().to_vec()
        } else {
            (0..10_000)
                .map(|_| Unit::new(AlgebraElement::random_unit(s, &mut rng)).expect("unit"))
                .chain([Unit::new(AlgebraElement::a(s)).expect("unit")])
                .collect()
        };
        for u in &units {
            let o = order_of_unit(u, exp_g).map_err(|_| format!("{s}: {u} has order above {exp_g}"))?;
            max_order = max_order.max(o);
        }
        if max_order != exp_g {
            return Err(format!("{s}: largest order {max_order}"));
        }
        let m = lie::lie_centrally_metabelian_check(s);
        if !m.passed() {
            return Err(format!("{s}: {:?}", m.witness));
        }
    }
    within(start.elapsed(), Duration::from_secs(300), "side claims")?;
    Ok(format!("exponent 2^(n-1) and Lie centrally metabelian, n = 3..5, {:.1?}", start.elapsed()))
}

fn end_to_end() -> Verdict {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("report.json");
    let run = Command::new(env!("CARGO_BIN_EXE_maxclass"))
        .args(["verify", "--family", "all", "--n-min", "3", "--n-max", "5", "--checks", "all", "--seed", "0", "--out"])
        .arg(&out)
        .output()
        .map_err(|e| e.to_string())?;
    within(start.elapsed(), Duration::from_secs(600), "verify")?;
    if !run.status.success() {
        return Err(format!("exit {:?}: {}", run.status.code(), String::from_utf8_lossy(&run.stderr).trim()));
    }
    Ok(format!("exit 0 in {:.1?}", start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("arithmetic oracle equivalence", arithmetic_oracle),
        ("closed-form inverse", closed_inverse),
        ("2^k-th power formula", power_formula),
        ("order of A", order_of_a),
        ("tower closed forms", tower_closed_forms),
        ("direct decomposition", direct_decomposition),
        ("class of U(KQ)", quaternion_class),
        ("index identities", index_identities),
        ("wreath section", wreath_section),
        ("exponent and Lie metabelian", side_claims),
        ("end-to-end verify", end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {:>2} {tag} {name} [{:.1?}]: {detail}", i + 1, start.elapsed());
        failed += verdict.is_err() as usize;
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
