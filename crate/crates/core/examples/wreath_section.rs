//! The section of U(KG) isomorphic to C2 wr G', with an explicit isomorphism for n = 4.

use maxclass::group::{Family, GroupSpec};
use maxclass::iso::is_isomorphism;
use maxclass::wreath::{build_wreath, certify_section, construct_section};

fn main() -> maxclass::error::Result<()> {
    for family in Family::ALL {
        for n in family.min_n()..=4 {
            let spec = GroupSpec::new(family, n)?;
            let cert = certify_section(spec)?;
            println!(
                "{:<4} |F| = {:<5} |K| = {}  |F/K| = {:<4} class {:?}  wreath order {} class {}  explicit map: {}",
                spec.name(),
                cert.parent_order,
                cert.normal_order,
                cert.section_order,
                cert.section_class,
                cert.wreath_order,
                cert.wreath_class,
                cert.isomorphism.is_some()
            );
        }
    }

    let spec = GroupSpec::new(Family::Semidihedral, 4)?;
    let section = construct_section(spec)?;
    let wreath = build_wreath(2)?;
    let map = certify_section(spec)?.isomorphism.expect("order 64 is searched explicitly");
    assert!(is_isomorphism(&section.table, &wreath, &map));
    println!("\nS16 section generators and their images in C2 wr C4:");
    for &g in section.table.generators() {
        println!("  {}  ->  {}", section.table.labels()[g], wreath.labels()[map[g]]);
    }
    Ok(())
}
