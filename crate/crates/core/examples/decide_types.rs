//! Run the decision engine over a handful of types.

use gbf_core::cli::describe;
use gbf_core::{decide, GbfType};

fn main() -> gbf_core::Result<()> {
    for (m, n) in [(4, 5), (6, 2), (9, 3), (637, 4), (130, 3), (398, 7), (2 * 199 * 5, 3), (1102, 11), (14, 1)] {
        print!("{}", describe(&decide(GbfType::new(m, n)?)?));
    }
    Ok(())
}
