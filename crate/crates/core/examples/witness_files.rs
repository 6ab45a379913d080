//! Write a witness file and check it again from disk.

use gbf_core::criteria::rule_exists;
use gbf_core::witness::WitnessFile;
use gbf_core::{is_gbf, GbfType};

fn main() -> gbf_core::Result<()> {
    let (f, rule) = rule_exists(GbfType::new(8, 3)?).expect("4 | 8");
    let path = std::env::temp_dir().join("gbf_8_3.json");
    WitnessFile::write(&path, &f)?;
    let back = WitnessFile::read(&path)?;
    println!("{rule}: {} -> {}", WitnessFile::to_json(&f), path.display());
    println!("read back equal: {}, bent: {}", back == f, is_gbf(&back));
    Ok(())
}
