//! Witness file format: one JSON object `{"m": .., "n": .., "values": [..]}`
//! holding `2^n` residues, index bit `j - 1` being `x_j`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gbf::{FunctionTable, GbfType};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessFile {
    pub m: u64,
    pub n: u32,
    pub values: Vec<u64>,
}

impl WitnessFile {
    pub fn parse(text: &str) -> Result<FunctionTable> {
        let w: WitnessFile =
            serde_json::from_str(text).map_err(|e| Error::Witness(e.to_string()))?;
        w.into_table()
    }

    pub fn into_table(self) -> Result<FunctionTable> {
        FunctionTable::new(GbfType::new(self.m, self.n)?, self.values)
    }

    pub fn to_json(table: &FunctionTable) -> String {
        serde_json::to_string(&WitnessFile::from(table)).expect("witness serializes")
    }

    pub fn read(path: &Path) -> Result<FunctionTable> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Witness(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn write(path: &Path, table: &FunctionTable) -> Result<()> {
        std::fs::write(path, Self::to_json(table) + "\n")
            .map_err(|e| Error::Witness(format!("{}: {e}", path.display())))
    }
}

impl From<&FunctionTable> for WitnessFile {
    fn from(t: &FunctionTable) -> Self {
        WitnessFile { m: t.gbf_type().m, n: t.gbf_type().n, values: t.values().to_vec() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reject() {
        let t = WitnessFile::parse(r#"{"m":4,"n":1,"values":[0,1]}"#).unwrap();
        assert_eq!(t.values(), &[0, 1]);
        assert_eq!(WitnessFile::parse(&WitnessFile::to_json(&t)).unwrap(), t);
        assert!(WitnessFile::parse(r#"{"m":4,"n":2,"values":[0,1]}"#).is_err());
        assert!(WitnessFile::parse(r#"{"m":4,"n":1,"values":[0,4]}"#).is_err());
        assert!(WitnessFile::parse(r#"{"m":4,"n":1,"val"#).is_err());
        assert!(WitnessFile::parse(r#"{"m":1,"n":1,"values":[0,0]}"#).is_err());
    }
}
