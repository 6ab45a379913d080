//! Function tables `Z_2^n -> Z_m`, their exact Walsh spectra, and the
//! bentness test.

mod construct;
mod walsh;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use construct::{
    construct_boolean_bent, construct_even_even, construct_even_even_seeded,
    construct_mod4_from_bent, direct_sum, lift_modulus,
};
pub use walsh::{fwht, walsh_columns};

use crate::cyclotomic::{self, CycInt};
use crate::error::{Error, Result};
use crate::witness::WitnessFile;

/// Largest `n` for which tables are materialized (`2^24` entries).
pub const MAX_TABLE_VARS: u32 = 24;

/// The type `{m, n}` of a function `Z_2^n -> Z_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GbfType {
    pub m: u64,
    pub n: u32,
}

impl GbfType {
    pub fn new(m: u64, n: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidType { m, n, reason: "m must be at least 2" });
        }
        if n < 1 {
            return Err(Error::InvalidType { m, n, reason: "n must be at least 1" });
        }
        Ok(GbfType { m, n })
    }

    /// `2^n`.
    pub fn domain_size(&self) -> usize {
        1usize << self.n
    }

    /// `m^(2^n)`, saturating at `u128::MAX`.
    pub fn table_count(&self) -> u128 {
        let mut acc = 1u128;
        for _ in 0..(1u128 << self.n.min(127)) {
            acc = match acc.checked_mul(self.m as u128) {
                Some(v) => v,
                None => return u128::MAX,
            };
        }
        acc
    }
}

impl std::fmt::Display for GbfType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.m, self.n)
    }
}

/// A function `Z_2^n -> Z_m` as its value table.
///
/// Index `i` encodes `x` with `x_j` = bit `j - 1` of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "WitnessFile", try_from = "WitnessFile")]
pub struct FunctionTable {
    gbf_type: GbfType,
    values: Vec<u64>,
}

impl FunctionTable {
    pub fn new(gbf_type: GbfType, values: Vec<u64>) -> Result<Self> {
        if gbf_type.n > MAX_TABLE_VARS {
            return Err(Error::OutOfRange { what: "table variables", value: gbf_type.n as u64 });
        }
        if values.len() != gbf_type.domain_size() {
            return Err(Error::BadLength { expected: gbf_type.domain_size(), got: values.len() });
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v >= gbf_type.m) {
            return Err(Error::ValueOutOfRange { index, value, m: gbf_type.m });
        }
        Ok(FunctionTable { gbf_type, values })
    }

    /// Builds the table from a rule on indices; outputs are reduced mod `m`.
    pub fn from_fn(gbf_type: GbfType, f: impl Fn(usize) -> u64) -> Result<Self> {
        if gbf_type.n > MAX_TABLE_VARS {
            return Err(Error::OutOfRange { what: "table variables", value: gbf_type.n as u64 });
        }
        let values = (0..gbf_type.domain_size()).map(|x| f(x) % gbf_type.m).collect();
        Ok(FunctionTable { gbf_type, values })
    }

    pub fn constant(gbf_type: GbfType, c: u64) -> Result<Self> {
        Self::from_fn(gbf_type, |_| c)
    }

    pub fn gbf_type(&self) -> GbfType {
        self.gbf_type
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, x: usize) -> u64 {
        self.values[x]
    }

    /// Adds `c` to every value.
    pub fn shifted(&self, c: u64) -> FunctionTable {
        let m = self.gbf_type.m;
        let c = c % m;
        FunctionTable {
            gbf_type: self.gbf_type,
            values: self.values.iter().map(|&v| ((v as u128 + c as u128) % m as u128) as u64).collect(),
        }
    }
}

impl From<FunctionTable> for WitnessFile {
    fn from(t: FunctionTable) -> Self {
        WitnessFile { m: t.gbf_type.m, n: t.gbf_type.n, values: t.values }
    }
}

impl TryFrom<WitnessFile> for FunctionTable {
    type Error = Error;
    fn try_from(w: WitnessFile) -> Result<Self> {
        w.into_table()
    }
}

/// `x . y` over `Z_2`, as a sign.
#[inline]
pub(crate) fn parity(x: usize, y: usize) -> bool {
    (x & y).count_ones() & 1 == 1
}

/// The Walsh values `W_f(y)`, indexed like the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalshSpectrum {
    values: Vec<CycInt>,
}

impl WalshSpectrum {
    pub fn values(&self) -> &[CycInt] {
        &self.values
    }

    pub fn get(&self, y: usize) -> &CycInt {
        &self.values[y]
    }

    /// `sum_y |W_f(y)|^2`, canonical.
    pub fn energy(&self) -> CycInt {
        let m = self.values[0].modulus();
        self.values
            .iter()
            .fold(CycInt::zero(m), |acc, w| acc.add(&w.abs_square()).expect("same modulus"))
            .canonical()
    }

    /// `sum_y (-1)^(x.y) W_f(y)`, which equals `2^n * zeta^f(x)`.
    pub fn invert_at(&self, x: usize) -> CycInt {
        let m = self.values[0].modulus();
        self.values.iter().enumerate().fold(CycInt::zero(m), |acc, (y, w)| {
            if parity(x, y) {
                acc.sub(w)
            } else {
                acc.add(w)
            }
            .expect("same modulus")
        })
    }
}

/// Exact Walsh spectrum of `f`.
pub fn walsh(f: &FunctionTable) -> WalshSpectrum {
    let m = f.gbf_type.m as usize;
    let size = f.gbf_type.domain_size();
    let cols = walsh_columns(f);
    let values = (0..size)
        .map(|y| {
            let mut c = vec![BigInt::from(0); m];
            for (k, col) in &cols {
                c[*k] = BigInt::from(col[y]);
            }
            CycInt::new(m, c).expect("length m")
        })
        .collect();
    WalshSpectrum { values }
}

/// `|W|^2 == 2^n`, through the fixed-width path when possible.
fn norm_is(m: usize, nz: &[(usize, i64)], target: i128) -> bool {
    if let Some(ok) = cyclotomic::norm_equals_small(m, nz, target) {
        return ok;
    }
    let mut c = vec![BigInt::from(0); m];
    for &(k, v) in nz {
        c[k] = BigInt::from(v);
    }
    let w = CycInt::new(m, c).expect("length m");
    w.abs_square().as_integer() == Some(BigInt::from(target))
}

/// The first `y` with `|W_f(y)|^2 != 2^n`, together with `|W_f(y)|^2`.
///
/// When every value is a multiple of some `d | m` the check runs on `f / d`
/// over `Z[zeta_(m/d)]`, which embeds into `Z[zeta_m]` and has the same
/// absolute values.
pub fn first_violation(f: &FunctionTable) -> Option<(usize, CycInt)> {
    let m = f.gbf_type.m;
    let n = f.gbf_type.n;
    let d = f.values.iter().fold(m, |g, &v| g.gcd(&v));
    let small_m = (m / d) as usize;
    if small_m == 1 {
        return Some((0, CycInt::from_integer(m as usize, BigInt::from(1) << (2 * n))));
    }
    let reduced: Vec<u64> = f.values.iter().map(|&v| v / d).collect();
    let target = 1i128 << n;
    let cols = walsh::columns_of(&reduced);
    let mut nz = Vec::with_capacity(cols.len());
    for y in 0..f.gbf_type.domain_size() {
        nz.clear();
        nz.extend(cols.iter().map(|(k, col)| (*k, col[y])).filter(|&(_, v)| v != 0));
        if !norm_is(small_m, &nz, target) {
            let mut c = vec![BigInt::from(0); small_m];
            for &(k, v) in &nz {
                c[k] = BigInt::from(v);
            }
            let sq = CycInt::new(small_m, c).expect("length m").abs_square();
            return Some((y, sq.embed(d as usize).canonical()));
        }
    }
    None
}

/// `|W_f(y)| = 2^(n/2)` for every `y`, decided exactly.
pub fn is_gbf(f: &FunctionTable) -> bool {
    first_violation(f).is_none()
}
