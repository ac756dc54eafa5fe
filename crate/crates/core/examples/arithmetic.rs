//! Arithmetic in GF(2)[G] through the component form x = x1 + x2 b.

use maxclass::algebra::AlgebraElement;
use maxclass::group::{Family, GroupSpec};

fn main() -> maxclass::error::Result<()> {
    let spec = GroupSpec::new(Family::Semidihedral, 4)?;
    println!("{spec}: |G| = {}, b a b^-1 = {}", spec.order(), spec.mul(spec.mul(spec.b(), spec.a()), spec.inv(spec.b())));

    let x = AlgebraElement::parse(spec, "1 + a^2 + a^3*b")?;
    let y = AlgebraElement::parse(spec, "a + b")?;
    println!("x        = {x}");
    println!("y        = {y}");
    println!("x + y    = {}", x + y);
    println!("x y      = {}", x * y);
    println!("y x      = {}", y * x);
    println!("bar(x)   = {}", x.bar());
    println!("norm(x)  = {}", x.norm());

    let inv = x.invert_unit()?;
    println!("x^-1     = {inv}");
    assert!((x * inv).is_one());

    // 2^k-th powers in closed form agree with repeated squaring
    for k in 0..4 {
        println!("x^(2^{k}) = {}", x.pow2k(k));
        assert_eq!(x.pow2k(k), x.pow(1 << k));
    }

    let zero_divisor = AlgebraElement::parse(spec, "1 + b")?;
    println!("1 + b is a unit: {}", zero_divisor.invert_unit().is_ok());
    Ok(())
}
