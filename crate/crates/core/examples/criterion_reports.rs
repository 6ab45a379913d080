//! A nonexistence certificate as JSON, read back and replayed.

use gbf_core::criteria::Verdict;
use gbf_core::{decide, GbfType};

fn main() -> gbf_core::Result<()> {
    let v = decide(GbfType::new(2 * 19 * 29, 11)?)?;
    let json = serde_json::to_string_pretty(&v).expect("verdict serializes");
    println!("{json}");
    let back: Verdict = serde_json::from_str(&json).expect("round trip");
    match back.report() {
        Some(report) => match report.revalidate() {
            Ok(()) => println!("replayed {} for {}: ok", report.criterion, report.gbf_type),
            Err(e) => println!("replay failed: {e}"),
        },
        None => println!("no report"),
    }
    Ok(())
}
