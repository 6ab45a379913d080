//! Reference tables recomputed from scratch: the 2-adic valuation of the
//! order of 2 for some primes `p = 1 (mod 8)`, and `(s, h, r)` for the
//! primes `p = 7 (mod 8)` below 200 used by the descent criterion.

use serde::{Deserialize, Serialize};

use crate::numtheory::{class_number, min_odd_r, mult_order_2, QuadForm, QuadSolution};

pub const RP_PRIMES: [u64; 12] = [17, 41, 73, 89, 97, 113, 137, 193, 257, 1553, 1777, 65537];

pub const P7_PRIMES: [u64; 11] = [7, 23, 31, 47, 71, 79, 103, 127, 151, 191, 199];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RpRow {
    pub p: u64,
    /// Order of 2 modulo `p`.
    pub d_p: u64,
    /// `v2(d_p)`.
    pub r_p: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P7Row {
    pub p: u64,
    /// Half the index of `<2>` in `Z_p^*`.
    pub s: u64,
    /// Class number of `Q(sqrt(-p))`.
    pub h: u64,
    /// Least odd `r` with `x^2 + p y^2 = 2^(r+2)` solvable.
    pub r: u64,
    pub witness: QuadSolution,
}

pub fn rp_row(p: u64) -> RpRow {
    let d_p = mult_order_2(p).expect("odd prime");
    RpRow { p, d_p, r_p: d_p.trailing_zeros() }
}

pub fn p7_row(p: u64) -> P7Row {
    let f = mult_order_2(p).expect("odd prime");
    let h = class_number(p).expect("prime is squarefree");
    let witness = min_odd_r(QuadForm::Principal { d: p }, 1, h).expect("r is at most h");
    P7Row { p, s: (p - 1) / f / 2, h, r: witness.r, witness }
}

pub fn table_rp() -> Vec<RpRow> {
    RP_PRIMES.iter().map(|&p| rp_row(p)).collect()
}

pub fn table_p7() -> Vec<P7Row> {
    P7_PRIMES.iter().map(|&p| p7_row(p)).collect()
}

fn render(rows: &[(&str, Vec<String>)]) -> String {
    let cols = rows[0].1.len();
    let head = rows.iter().map(|(h, _)| h.len()).max().unwrap_or(0);
    let width: Vec<usize> =
        (0..cols).map(|c| rows.iter().map(|(_, r)| r[c].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for (h, r) in rows {
        out.push_str(&format!("{h:<head$} |"));
        for (cell, w) in r.iter().zip(&width) {
            out.push_str(&format!(" {cell:>w$}"));
        }
        out.push('\n');
    }
    out
}

pub fn render_rp(rows: &[RpRow]) -> String {
    render(&[
        ("p", rows.iter().map(|r| r.p.to_string()).collect()),
        ("d_p", rows.iter().map(|r| r.d_p.to_string()).collect()),
        ("r_p", rows.iter().map(|r| r.r_p.to_string()).collect()),
    ])
}

pub fn render_p7(rows: &[P7Row]) -> String {
    render(&[
        ("p", rows.iter().map(|r| r.p.to_string()).collect()),
        ("s", rows.iter().map(|r| r.s.to_string()).collect()),
        ("h", rows.iter().map(|r| r.h.to_string()).collect()),
        ("r", rows.iter().map(|r| r.r.to_string()).collect()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows() {
        assert_eq!(rp_row(257), RpRow { p: 257, d_p: 16, r_p: 4 });
        let row = p7_row(127);
        assert_eq!((row.s, row.h, row.r), (9, 5, 5));
        let row = p7_row(71);
        assert_eq!((row.s, row.h, row.r), (1, 7, 7));
        assert!(table_p7().iter().all(|r| r.witness.holds()));
    }

    #[test]
    fn rendering() {
        let text = render_rp(&table_rp()[..2]);
        assert_eq!(text, "p   | 17 41\nd_p |  8 20\nr_p |  3  2\n");
    }
}
