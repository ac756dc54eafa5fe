//! Isomorphism testing by fingerprint and by generator-image search.

use maxclass::group::{Family, GroupSpec};
use maxclass::iso::{find_isomorphism, isomorphic, Fingerprint, IsoMode};
use maxclass::table::full_unit_group;
use maxclass::wreath::build_wreath;

fn main() -> maxclass::error::Result<()> {
    let w1 = build_wreath(1)?;
    let w2 = build_wreath(2)?;
    println!("C2 wr C2: {:?}", Fingerprint::of(&w1));
    println!("C2 wr C4: {:?}", Fingerprint::of(&w2));

    let map = find_isomorphism(&w1, &w1)?.expect("the identity is an isomorphism");
    println!("self map found: {map:?}");

    for family in [Family::Dihedral, Family::Quaternion] {
        let spec = GroupSpec::new(family, 3)?;
        let units = full_unit_group(spec, 1 << 8)?.to_table()?;
        let fp = Fingerprint::of(&units);
        println!(
            "U({}): order {}, class {:?}, exponent {}, |Z| = {}, G/G' = {:?}",
            spec.name(),
            fp.order,
            fp.class,
            fp.exponent,
            fp.center_order,
            fp.abelianization
        );
    }
    let d8 = full_unit_group(GroupSpec::new(Family::Dihedral, 3)?, 1 << 8)?.to_table()?;
    let q8 = full_unit_group(GroupSpec::new(Family::Quaternion, 3)?, 1 << 8)?.to_table()?;
    println!("U(D8) and U(Q8) share invariants: {}", isomorphic(&d8, &q8, IsoMode::Invariants)?);
    Ok(())
}
