//! The known constructions and the two combinators.

use gbf_core::gbf::{
    construct_boolean_bent, construct_even_even, construct_even_even_seeded,
    construct_mod4_from_bent, direct_sum, lift_modulus,
};
use gbf_core::is_gbf;

fn main() -> gbf_core::Result<()> {
    let b = construct_boolean_bent(4)?;
    println!("boolean bent {}: {:?} bent={}", b.gbf_type(), b.values(), is_gbf(&b));

    let e = construct_even_even(6, 2, None, None)?;
    println!("even/even {}: {:?} bent={}", e.gbf_type(), e.values(), is_gbf(&e));

    let r = construct_even_even_seeded(10, 4, 42)?;
    println!("seeded {}: bent={}", r.gbf_type(), is_gbf(&r));

    let z4 = construct_mod4_from_bent(&b)?;
    println!("from bent {}: {:?} bent={}", z4.gbf_type(), z4.values(), is_gbf(&z4));

    let lifted = lift_modulus(&z4, 3)?;
    println!("lifted {}: {:?} bent={}", lifted.gbf_type(), lifted.values(), is_gbf(&lifted));

    let sum = direct_sum(&z4, &z4)?;
    println!("direct sum {}: bent={}", sum.gbf_type(), is_gbf(&sum));
    Ok(())
}
