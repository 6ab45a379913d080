use super::FunctionTable;

/// In-place Walsh-Hadamard transform: `v[y] <- sum_x (-1)^(x.y) v[x]`.
pub fn fwht(v: &mut [i64]) {
    assert!(v.len().is_power_of_two(), "length must be a power of two");
    let mut h = 1;
    while h < v.len() {
        for block in v.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*a + *b, *a - *b);
                *a = s;
                *b = d;
            }
        }
        h *= 2;
    }
}

/// For each residue `k` taken by `f`, the column `y -> [zeta^k] W_f(y)`:
/// the transform of the indicator of `f^-1(k)`. Residues not taken have an
/// all-zero column and are omitted.
pub fn walsh_columns(f: &FunctionTable) -> Vec<(usize, Vec<i64>)> {
    columns_of(f.values())
}

pub(crate) fn columns_of(values: &[u64]) -> Vec<(usize, Vec<i64>)> {
    let mut present: Vec<u64> = values.to_vec();
    present.sort_unstable();
    present.dedup();
    present
        .into_iter()
        .map(|k| {
            let mut col: Vec<i64> = values.iter().map(|&v| i64::from(v == k)).collect();
            fwht(&mut col);
            (k as usize, col)
        })
        .collect()
}
