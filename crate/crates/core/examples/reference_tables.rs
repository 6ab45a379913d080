//! Recompute the order/valuation table and the class-number table.

use gbf_core::tables::{render_p7, render_rp, table_p7, table_rp};

fn main() {
    println!("{}", render_rp(&table_rp()));
    let rows = table_p7();
    println!("{}", render_p7(&rows));
    for row in rows {
        let w = row.witness;
        println!("p={:<3} {}^2 + {}*{}^2 = 2^{}", row.p, w.x, row.p, w.y, w.r + 2);
    }
}
