//! Subgroups of U(KG) by closure, and their multiplication tables.

use maxclass::group::{Family, GroupSpec};
use maxclass::table::{full_unit_group, generate_subgroup};
use maxclass::units::{standard_a, Unit};

fn main() -> maxclass::error::Result<()> {
    let spec = GroupSpec::new(Family::Dihedral, 3)?;
    let a = standard_a(spec);
    let b = Unit::b(spec);
    let f = generate_subgroup(&[b, b.conjugate_by(&a), a], 1 << 10)?;
    let table = f.to_table()?;
    println!("F in U(D8): order {}, class {:?}", table.order(), table.nilpotency_class());
    for (i, series) in table.lower_central_series().iter().enumerate() {
        println!("  gamma_{}: {} elements", i + 1, series.len());
    }
    println!("center: {:?}", table.center().iter().map(|&i| &table.labels()[i]).collect::<Vec<_>>());

    let path = std::env::temp_dir().join("maxclass-f-d8.json");
    std::fs::write(&path, table.to_json().to_string()).expect("writable temp dir");
    println!("table written to {}", path.display());

    let units = full_unit_group(spec, 1 << 8)?.to_table()?;
    println!("\nU(D8): order {}, class {:?}, minimal generators {}", units.order(), units.nilpotency_class(), units.minimal_generators().len());
    Ok(())
}
