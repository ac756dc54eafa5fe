//! Why the quaternion section has full class: the witness commutator
//! (b, (N-1).A) stays outside <b^2, A^N>.

use maxclass::group::{Family, GroupSpec};
use maxclass::table::generate_subgroup;
use maxclass::units::{iterated_commutator, repeated_commutator, standard_a, Unit};

fn main() -> maxclass::error::Result<()> {
    for n in 3..=6 {
        let spec = GroupSpec::new(Family::Quaternion, n)?;
        let big_n = spec.derived_order();
        let a = standard_a(spec);
        let b = Unit::b(spec);

        let k = generate_subgroup(&[b * b, a.pow(big_n as u64)], 1 << 10)?;
        let witness = repeated_commutator(&b, &a, big_n - 1);
        let powers: Vec<Unit> = (0..n - 2).map(|i| a.pow(1 << i)).collect();
        let chain = iterated_commutator(&b, &powers);
        let x = (b * a.inverse()).pow(big_n as u64);

        println!(
            "{:<4} |<b^2, A^N>| = {}  witness in it: {:<5}  (bA^-1)^N in it: {:<5}  chain = witness: {}",
            spec.name(),
            k.order(),
            k.contains(&witness),
            k.contains(&x),
            chain == witness
        );
        println!("      second component of (Ab)^N: {}", (a * b).pow(big_n as u64).value().x2());
    }
    Ok(())
}
