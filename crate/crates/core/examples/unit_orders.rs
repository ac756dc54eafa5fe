//! The unit A and its powers in every family.

use maxclass::group::{Family, GroupSpec};
use maxclass::units::{order_of_unit, standard_a, tower_norm, Unit};

fn main() -> maxclass::error::Result<()> {
    for family in Family::ALL {
        for n in family.min_n()..=6 {
            let spec = GroupSpec::new(family, n)?;
            let a = standard_a(spec);
            let order = order_of_unit(&a, 1 << n)?;
            let b = Unit::b(spec);
            let first = (1..=order)
                .find(|&k| {
                    let p = a.pow(k);
                    p * b == b * p
                })
                .expect("A^order = 1 commutes with b");
            println!(
                "{:<5} |A| = {:<3} least power commuting with b: {:<3} |R| = {}",
                spec.name(),
                order,
                first,
                tower_norm(spec).unit_order().unwrap_or(0)
            );
        }
    }
    let q16 = GroupSpec::new(Family::Quaternion, 4)?;
    println!("\nA in Q16 = {}", standard_a(q16));
    println!("A^4      = {}", standard_a(q16).pow(4));
    Ok(())
}
