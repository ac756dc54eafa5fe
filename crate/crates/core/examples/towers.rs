//! Conjugates b^(A^k), the subgroup H(KG) and the norm psi.

use maxclass::group::{Family, GroupSpec};
use maxclass::table::generate_subgroup;
use maxclass::units::{b_tower, conj_by, in_h, psi, standard_a, Unit};

fn main() -> maxclass::error::Result<()> {
    let d16 = GroupSpec::new(Family::Dihedral, 4)?;
    let a = standard_a(d16);
    let b = Unit::b(d16);
    println!("A = {a}  in H: {}  psi(A) = {}", in_h(&a)?, psi(&a)?);

    let mut towers = Vec::new();
    for k in 1..=d16.derived_order() {
        let t = b_tower(d16, k)?;
        assert_eq!(t, conj_by(&b, &a.pow(k as u64))?);
        println!("b^(A^{k}) = {t}");
        towers.push(t);
    }
    let sub = generate_subgroup(&towers, 1 << 10)?;
    println!("<b^A, ..., b^(A^4)>: order {}, elementary abelian: {}", sub.order(), sub.is_elementary_abelian());

    let q16 = GroupSpec::new(Family::Quaternion, 4)?;
    println!();
    for k in 1..=q16.derived_order() {
        println!("Q16 b^(A^{k}) = {}", b_tower(q16, k)?);
    }
    Ok(())
}
