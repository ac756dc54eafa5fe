//! A small verification campaign written to a report file.

use maxclass::campaign::{explain, run_campaign, write_report, Campaign, CheckSelection, Format};
use maxclass::group::Family;

fn main() -> maxclass::error::Result<()> {
    let campaign = Campaign {
        families: vec![Family::Dihedral, Family::Quaternion],
        n_min: 3,
        n_max: 4,
        checks: "order_of_A_ds,order_of_A_q,tower_closed_form,quaternion_class,wreath_section".parse::<CheckSelection>()?,
        seed: 2024,
    };
    let report = run_campaign(&campaign)?;
    print!("{}", report.to_text());

    let path = std::env::temp_dir().join("maxclass-report.json");
    write_report(&report, &path, Format::Json)?;
    println!("\nJSON report written to {}", path.display());
    println!("\n{}", explain("wreath_section")?);
    Ok(())
}
