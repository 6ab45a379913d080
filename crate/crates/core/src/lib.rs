//! Decision engine for generalized bent functions `f: Z_2^n -> Z_m`.
//!
//! A function of type `{m, n}` is a generalized bent function (GBF) when
//! every value of its Walsh transform
//! `W_f(y) = sum_x (-1)^(x.y) * zeta_m^f(x)` has absolute value `2^(n/2)`.
//! Walsh values live in `Z[zeta_m]`, so the whole library works with exact
//! cyclotomic integers and never decides anything with floating point.
//!
//! Layout:
//!
//! - [`cyclotomic`]: exact arithmetic in `Z[zeta_m]`.
//! - [`numtheory`]: orders, valuations, residue symbols, semigroup
//!   membership, binary quadratic representations and class numbers.
//! - [`gbf`]: function tables, the Walsh transform, bentness checks and the
//!   known constructions.
//! - [`criteria`]: the [`decide`](criteria::decide) engine, which turns a type
//!   into a [`Verdict`](criteria::Verdict) with a replayable certificate.
//! - [`oracle`]: exhaustive enumeration of tiny types, used as an
//!   independent referee.
//! - [`witness`], [`tables`], [`cli`]: file format, reference tables and
//!   the command-line surface used by the `gbf` binary.
//!
//! Bit convention: a table index `i` encodes `x = (x_1, ..., x_n)` with
//! `x_j` equal to bit `j - 1` of `i`, so `x_1` is the least significant bit.

pub mod cli;
pub mod criteria;
pub mod cyclotomic;
mod error;
pub mod gbf;
pub mod numtheory;
pub mod oracle;
pub mod tables;
pub mod witness;


pub use criteria::{decide, CriterionId, CriterionReport, Verdict};
pub use cyclotomic::{CycInt, IntPoly};
pub use error::{Error, Result};
pub use oracle::{enumerate, OracleResult};
pub use gbf::{is_gbf, walsh, FunctionTable, GbfType, WalshSpectrum};

