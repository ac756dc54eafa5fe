//! Lie nilpotency indices of KG for every family and 3 <= n <= 8.

use std::time::Instant;

use maxclass::group::{Family, GroupSpec};
use maxclass::lie::{index_row, lie_centrally_metabelian_check};

fn main() {
    println!("{:<6} {:>4} {:>8} {:>8} {:>6} {:>9}", "group", "n", "t_L", "t^L", "t(G')", "cl U(KG)");
    for family in Family::ALL {
        for n in family.min_n()..=8 {
            let spec = GroupSpec::new(family, n).expect("valid");
            let start = Instant::now();
            let row = index_row(spec);
            println!(
                "{:<6} {:>4} {:>8} {:>8} {:>6} {:>9}   {:.2?}",
                spec.name(), n, row.t_lower, row.t_upper, row.t_aug, row.cl_bound, start.elapsed()
            );
        }
    }
    let spec = GroupSpec::new(Family::Quaternion, 4).expect("valid");
    let outcome = lie_centrally_metabelian_check(spec);
    println!("\n{} Lie centrally metabelian: {:?} {}", spec.name(), outcome.status, outcome.detail);
}
