//! The elementary number theory the criteria are built from.

use gbf_core::numtheory::{
    class_number, factorize, jacobi, min_odd_r, mult_order_2, reduced_forms, semigroup_member,
    semiprimitive_check, QuadForm,
};

fn main() -> gbf_core::Result<()> {
    println!("637 = {}", factorize(637));
    println!("ord_199(2) = {}", mult_order_2(199)?);
    let check = semiprimitive_check(65)?;
    println!("65: 2^l = -1 for l = {:?}, valuations {:?}", check.l, check.primes);
    println!("(-199/59) = {}, (5/11) = {}", jacobi(-199, 59), jacobi(5, 11));
    println!("64 over <7 13>: {:?}", semigroup_member(64, &[7, 13]));
    println!("128 over <7 13>: {:?}", semigroup_member(128, &[7, 13]));
    println!("reduced forms of -23: {:?}", reduced_forms(-23));
    println!("h(-191) = {}", class_number(191)?);
    let sol = min_odd_r(QuadForm::Diagonal { a: 19, b: 29 }, 1, class_number(19 * 29)?);
    println!("19x^2 + 29y^2 = 2^(r+2): {sol:?}");
    Ok(())
}
