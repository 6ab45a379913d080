//! Walsh spectrum of a small Z_4-valued function and the bentness check.

use gbf_core::gbf::first_violation;
use gbf_core::{is_gbf, walsh, FunctionTable, GbfType};

fn main() -> gbf_core::Result<()> {
    let f = FunctionTable::new(GbfType::new(4, 2)?, vec![0, 1, 1, 2])?;
    let w = walsh(&f);
    for (y, v) in w.values().iter().enumerate() {
        println!("W({y:02b}) = {v:<12} |W|^2 = {}", v.abs_square());
    }
    println!("sum of |W|^2 = {}", w.energy());
    println!("bent: {}", is_gbf(&f));

    let g = FunctionTable::new(GbfType::new(4, 2)?, vec![0, 1, 2, 3])?;
    if let Some((y, sq)) = first_violation(&g) {
        println!("{:?} fails at y = {y}: |W|^2 = {sq}", g.values());
    }
    Ok(())
}
