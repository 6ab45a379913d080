//! Exact arithmetic in Z[zeta_m].

use gbf_core::cyclotomic::cyclotomic_poly;
use gbf_core::CycInt;

fn main() -> gbf_core::Result<()> {
    for m in [1, 2, 4, 6, 12] {
        println!("Phi_{m} = {}", cyclotomic_poly(m));
    }

    let a = CycInt::zeta_pow(12, 0).add(&CycInt::zeta_pow(12, 1))?;
    let b = CycInt::zeta_pow(12, 5);
    println!("a = {a}, b = {b}");
    println!("a * b = {}", a.mul(&b)?);
    println!("|a|^2 = {}", a.abs_square());
    println!("sigma_5(a) = {}", a.galois(5)?);

    // Phi_12(z) vanishes once reduced.
    let phi = cyclotomic_poly(12);
    let mut padded: Vec<i64> = phi.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
    padded.resize(12, 0);
    println!("Phi_12(z) == 0: {}", CycInt::from_i64(12, &padded)?.is_zero());

    let i = CycInt::zeta_pow(4, 1);
    let two = i.add(&CycInt::one(4))?.abs_square();
    println!("|1 + i|^2 = {:?}", two.as_integer());
    Ok(())
}
