//! Dense matrices over GF(p) and exact rank computation.
//!
//! Rank runs classical row reduction with first-nonzero pivoting. Pivot rows
//! are normalized once, and the trailing updates are applied in panels of up
//! to 32 pivots with lazy reduction: products of reduced entries are
//! accumulated in u64 and reduced once per panel, which is safe whenever
//! `K * (p-1)^2 + p` fits in a u64 (for p = 31991 the limit is ~2^34 terms).
//! Fields too large for that fall back to the per-pivot scalar path.

use crate::field::PrimeField;

const MAX_PANEL: usize = 32;
const CHUNK: usize = 256;

/// Row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl DenseMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    /// Build from reduced entries; panics if `data` has the wrong length.
    pub fn from_data(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        debug_assert!(data.iter().all(|&v| v < field.p()));
        Self { field, rows, cols, data }
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().map(|&v| field.reduce(v as u64)));
        }
        Self { field, rows: rows.len(), cols, data }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = self.field.reduce(v as u64);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Rank over GF(p). The matrix itself is left untouched; elimination
    /// works on a copy.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminating along the shorter side is cheaper
        if self.rows > self.cols {
            let t = self.transpose();
            return rank_in_place(t.field, t.rows, t.cols, t.data);
        }
        rank_in_place(self.field, self.rows, self.cols, self.data.clone())
    }
}

fn rank_in_place(field: PrimeField, rows: usize, cols: usize, mut m: Vec<u32>) -> usize {
    let panel = (field.lazy_accumulation_limit() as usize).min(MAX_PANEL);
    if panel >= 2 {
        panel_rank(field, rows, cols, &mut m, panel)
    } else {
        scalar_rank(field, rows, cols, &mut m)
    }
}

/// Plain one-pivot-at-a-time elimination; correct for any field size.
fn scalar_rank(field: PrimeField, rows: usize, cols: usize, m: &mut [u32]) -> usize {
    let p = field.p();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
            continue;
        };
        swap_rows(m, cols, rank, pr);
        let inv = field.inv(m[rank * cols + col]);
        for j in col..cols {
            m[rank * cols + j] = field.mul(m[rank * cols + j], inv);
        }
        let (top, rest) = m.split_at_mut((rank + 1) * cols);
        let piv = &top[rank * cols + col..(rank + 1) * cols];
        for r in rank + 1..rows {
            let off = (r - rank - 1) * cols;
            let tgt = &mut rest[off + col..off + cols];
            let f = tgt[0];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (t, &s) in tgt.iter_mut().zip(piv) {
                *t = field.mul_add(*t, nf, s);
            }
        }
        rank += 1;
    }
    rank
}

/// Panel elimination: pivots are located with eager updates restricted to the
/// panel columns, then all trailing columns are updated in one lazily-reduced
/// pass per panel.
fn panel_rank(field: PrimeField, rows: usize, cols: usize, m: &mut [u32], panel: usize) -> usize {
    let p = field.p();
    let mut rank = 0;
    let mut col = 0;
    // multipliers of each row against the pivots of the current panel
    let mut mult = vec![0u32; rows * panel];
    while rank < rows && col < cols {
        let width = panel.min(cols - col);
        let mut pivots: Vec<usize> = Vec::with_capacity(width); // pivot columns
        for j in col..col + width {
            let found = pivots.len();
            let Some(pr) = (rank + found..rows).find(|&r| m[r * cols + j] != 0) else {
                continue;
            };
            let prow = rank + found;
            swap_rows(m, cols, prow, pr);
            mult.swap_ranges(prow, pr, panel);
            // normalize the pivot row on the panel columns only; the trailing
            // part is rescaled during fixup
            let inv = field.inv(m[prow * cols + j]);
            for jj in j..col + width {
                m[prow * cols + jj] = field.mul(m[prow * cols + jj], inv);
            }
            mult[prow * panel + found] = inv; // stash the scale for fixup
            // eliminate the panel columns of every row below, recording the
            // multiplier for the deferred trailing update
            for r in prow + 1..rows {
                let f = m[r * cols + j];
                mult[r * panel + found] = f;
                if f == 0 {
                    continue;
                }
                let nf = p - f;
                let (top, rest) = m.split_at_mut(r * cols);
                let piv = &top[prow * cols + j..prow * cols + col + width];
                let tgt = &mut rest[j..col + width];
                for (t, &s) in tgt.iter_mut().zip(piv) {
                    *t = field.mul_add(*t, nf, s);
                }
            }
            pivots.push(j);
            if rank + pivots.len() == rows {
                break;
            }
        }
        let found = pivots.len();
        let trailing = col + width;
        if found > 0 && trailing < cols {
            // fix up pivot rows: apply earlier panel pivots to each pivot
            // row's trailing part, then rescale it
            for k in 0..found {
                let prow = rank + k;
                let (upper, lower) = m.split_at_mut(prow * cols);
                let target = &mut lower[trailing..cols];
                let mut acc: Vec<u64> = target.iter().map(|&v| v as u64).collect();
                for j in 0..k {
                    let f = mult[prow * panel + j];
                    if f == 0 {
                        continue;
                    }
                    let nf = (p - f) as u64;
                    let urow = &upper[(rank + j) * cols + trailing..(rank + j) * cols + cols];
                    for (a, &u) in acc.iter_mut().zip(urow) {
                        *a += nf * u as u64;
                    }
                }
                let scale = mult[prow * panel + k] as u64;
                for (t, a) in target.iter_mut().zip(acc) {
                    *t = field.mul(field.reduce(a), scale as u32);
                }
            }
            // blocked trailing update of every row below the panel
            let (pivpart, tgtpart) = m.split_at_mut((rank + found) * cols);
            let mut acc = [0u64; CHUNK];
            for r in rank + found..rows {
                let toff = (r - rank - found) * cols;
                let rmult = &mult[r * panel..r * panel + found];
                if rmult.iter().all(|&f| f == 0) {
                    continue;
                }
                let mut j = trailing;
                while j < cols {
                    let w = CHUNK.min(cols - j);
                    let tgt = &mut tgtpart[toff + j..toff + j + w];
                    for (a, &t) in acc[..w].iter_mut().zip(tgt.iter()) {
                        *a = t as u64;
                    }
                    for (k, &f) in rmult.iter().enumerate() {
                        if f == 0 {
                            continue;
                        }
                        let nf = (p - f) as u64;
                        let urow = &pivpart[(rank + k) * cols + j..(rank + k) * cols + j + w];
                        for (a, &u) in acc[..w].iter_mut().zip(urow) {
                            *a += nf * u as u64;
                        }
                    }
                    for (t, &a) in tgt.iter_mut().zip(acc[..w].iter()) {
                        *t = field.reduce(a);
                    }
                    j += w;
                }
            }
        }
        for r in rank..rows {
            mult[r * panel..r * panel + width.min(panel)].fill(0);
        }
        rank += found;
        col = trailing;
    }
    rank
}

fn swap_rows(m: &mut [u32], cols: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    let (lo, hi) = (a.min(b), a.max(b));
    let (top, bottom) = m.split_at_mut(hi * cols);
    top[lo * cols..(lo + 1) * cols].swap_with_slice(&mut bottom[..cols]);
}

trait SwapRanges {
    fn swap_ranges(&mut self, a: usize, b: usize, width: usize);
}

impl SwapRanges for Vec<u32> {
    fn swap_ranges(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (top, bottom) = self.split_at_mut(hi * width);
        top[lo * width..(lo + 1) * width].swap_with_slice(&mut bottom[..width]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f() -> PrimeField {
        PrimeField::default_prime()
    }

    #[test]
    fn identity_has_full_rank() {
        for n in [1, 3, 10, 40] {
            assert_eq!(DenseMatrix::identity(f(), n).rank(), n);
        }
    }

    #[test]
    fn repeated_row_has_rank_one() {
        let m = DenseMatrix::from_rows(f(), 3, &[vec![1, 2, 3], vec![1, 2, 3]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn empty_and_zero_matrices() {
        assert_eq!(DenseMatrix::zeros(f(), 0, 5).rank(), 0);
        assert_eq!(DenseMatrix::zeros(f(), 5, 0).rank(), 0);
        assert_eq!(DenseMatrix::zeros(f(), 4, 7).rank(), 0);
    }

    #[test]
    fn rank_does_not_mutate_input() {
        let m = DenseMatrix::from_rows(f(), 2, &[vec![1, 2], vec![3, 4]]);
        let copy = m.clone();
        assert_eq!(m.rank(), 2);
        assert_eq!(m, copy);
    }

    #[test]
    fn singular_square_matrix() {
        // row3 = row1 + row2 mod p
        let m = DenseMatrix::from_rows(f(), 3, &[vec![1, 2, 3], vec![4, 5, 6], vec![5, 7, 9]]);
        assert_eq!(m.rank(), 2);
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> DenseMatrix {
        let data: Vec<u32> = (0..rows * cols).map(|_| rng.random_range(0..31991)).collect();
        DenseMatrix::from_data(f(), rows, cols, data)
    }

    /// Rank of a low-rank product A(r x k) * B(k x c) is at most k, and
    /// exactly k for random data.
    fn low_rank_product(rng: &mut ChaCha8Rng, rows: usize, cols: usize, k: usize) -> DenseMatrix {
        let field = f();
        let a = random_matrix(rng, rows, k);
        let b = random_matrix(rng, k, cols);
        let mut m = DenseMatrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = 0u32;
                for t in 0..k {
                    acc = field.mul_add(acc, a.get(i, t), b.get(t, j));
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    #[test]
    fn panel_and_scalar_paths_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..30 {
            let rows = rng.random_range(1..70);
            let cols = rng.random_range(1..70);
            let k = rng.random_range(0..rows.min(cols) + 1);
            let m = if k == 0 || k == rows.min(cols) {
                random_matrix(&mut rng, rows, cols)
            } else {
                low_rank_product(&mut rng, rows, cols, k)
            };
            let scalar = scalar_rank(f(), m.rows, m.cols, &mut m.data.clone());
            let panel = panel_rank(f(), m.rows, m.cols, &mut m.data.clone(), MAX_PANEL);
            assert_eq!(scalar, panel, "{}x{} rank-{k}", rows, cols);
            if k > 0 && k < rows.min(cols) {
                assert_eq!(scalar, k);
            }
        }
    }

    #[test]
    fn panel_handles_zero_columns_and_duplicate_rows() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let rows = rng.random_range(2..50);
            let cols = rng.random_range(2..50);
            let mut m = random_matrix(&mut rng, rows, cols);
            // punch a few zero columns and duplicate a few rows
            for _ in 0..cols / 3 {
                let c = rng.random_range(0..cols);
                for r in 0..rows {
                    m.data[r * cols + c] = 0;
                }
            }
            for _ in 0..rows / 3 {
                let (a, b) = (rng.random_range(0..rows), rng.random_range(0..rows));
                let row: Vec<u32> = m.row(a).to_vec();
                m.row_mut(b).copy_from_slice(&row);
            }
            let scalar = scalar_rank(f(), m.rows, m.cols, &mut m.data.clone());
            let panel = panel_rank(f(), m.rows, m.cols, &mut m.data.clone(), MAX_PANEL);
            assert_eq!(scalar, panel);
        }
    }

    #[test]
    fn rank_invariants_under_permutation_and_transpose() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..15 {
            let rows = rng.random_range(1..40);
            let cols = rng.random_range(1..40);
            let k = rng.random_range(0..rows.min(cols) + 1).max(1);
            let m = low_rank_product(&mut rng, rows, cols, k);
            let r = m.rank();
            assert_eq!(m.transpose().rank(), r);

            let mut perm = m.clone();
            for _ in 0..rows {
                let (a, b) = (rng.random_range(0..rows), rng.random_range(0..rows));
                swap_rows(&mut perm.data, cols, a, b);
            }
            assert_eq!(perm.rank(), r);
        }
    }

    #[test]
    fn stacking_copies_of_rows_preserves_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let rows = rng.random_range(1..25);
            let cols = rng.random_range(1..25);
            let m = random_matrix(&mut rng, rows, cols);
            assert_eq!(m.vstack(&m).rank(), m.rank());
        }
    }

    #[test]
    fn small_prime_field_rank() {
        let f2 = PrimeField::new(2).unwrap();
        let m = DenseMatrix::from_rows(f2, 2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rank(), 1);
        let m = DenseMatrix::from_rows(f2, 2, &[vec![1, 0], vec![1, 1]]);
        assert_eq!(m.rank(), 2);
    }
}
