//! Exhaustive GBF counts for tiny types, compared with the engine.

use gbf_core::oracle::{enumerate, DEFAULT_BUDGET};
use gbf_core::{decide, GbfType};

fn main() -> gbf_core::Result<()> {
    for (m, n) in [(2, 2), (3, 1), (4, 1), (6, 1), (4, 2), (8, 1), (14, 1), (5, 3)] {
        let t = GbfType::new(m, n)?;
        let r = enumerate(t, DEFAULT_BUDGET)?;
        let v = decide(t)?;
        println!(
            "{t:>7}: {:>6} of {:>8} tables are GBFs; engine says {} {}",
            r.gbf_count,
            r.total_candidates,
            v.name(),
            v.citation()
        );
    }
    Ok(())
}
