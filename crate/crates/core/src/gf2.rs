//! Rank of sparse 0/1 matrices over the two-element field.
//!
//! Rows are sorted lists of column indices. The rank is computed by first
//! peeling fill-free reductions (weight-1 rows and columns used by a single
//! row), then eliminating the residue: dense bitsets when few columns
//! remain, otherwise sparse rows pivoted on their lowest column.

use std::collections::HashMap;

/// Columns at or below this count switch the residue to dense elimination.
pub const DENSE_COLUMN_LIMIT: usize = 4096;

/// Symmetric difference of two sorted index lists.
pub fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Rank of the rows over GF(2). Each row must be sorted and duplicate-free,
/// with entries below `columns`.
pub fn rank(rows: &[Vec<u32>], columns: usize) -> usize {
    let (peeled, residue) = peel(rows, columns);
    let live: Vec<u32> = {
        let mut cols: Vec<u32> = residue.iter().flatten().copied().collect();
        cols.sort_unstable();
        cols.dedup();
        cols
    };
    let rest = if live.len() <= DENSE_COLUMN_LIMIT {
        dense_rank(&residue, &live)
    } else {
        sparse_rank(residue)
    };
    peeled + rest
}

/// Fill-free reductions. Returns the rank they account for and the rows left.
fn peel(rows: &[Vec<u32>], columns: usize) -> (usize, Vec<Vec<u32>>) {
    let mut rows: Vec<Vec<u32>> = rows.to_vec();
    let mut alive = vec![true; rows.len()];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); columns];
    let mut col_count = vec![0u32; columns];
    for (r, row) in rows.iter().enumerate() {
        for &c in row {
            col_rows[c as usize].push(r as u32);
            col_count[c as usize] += 1;
        }
    }
    let mut rank = 0;
    let mut row_queue: Vec<u32> = Vec::new();
    let mut col_queue: Vec<u32> = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        if row.len() <= 1 {
            row_queue.push(r as u32);
        }
    }
    for (c, &count) in col_count.iter().enumerate() {
        if count == 1 {
            col_queue.push(c as u32);
        }
    }
    loop {
        if let Some(r) = row_queue.pop() {
            let r = r as usize;
            if !alive[r] || rows[r].len() > 1 {
                continue;
            }
            alive[r] = false;
            let Some(&c) = rows[r].first() else {
                continue;
            };
            // A unit row pivots its column: clear that column everywhere.
            rank += 1;
            for &s in &col_rows[c as usize] {
                let s = s as usize;
                if s != r && alive[s] {
                    if let Ok(pos) = rows[s].binary_search(&c) {
                        rows[s].remove(pos);
                        if rows[s].len() <= 1 {
                            row_queue.push(s as u32);
                        }
                    }
                }
            }
            col_count[c as usize] = 0;
            col_rows[c as usize].clear();
            continue;
        }
        if let Some(c) = col_queue.pop() {
            let c = c as usize;
            if col_count[c] != 1 {
                continue;
            }
            // The only row using this column is independent of the others.
            let owner = col_rows[c]
                .iter()
                .map(|&s| s as usize)
                .find(|&s| alive[s] && rows[s].binary_search(&(c as u32)).is_ok());
            let Some(r) = owner else {
                continue;
            };
            alive[r] = false;
            rank += 1;
            for &d in &rows[r] {
                let d = d as usize;
                col_count[d] -= 1;
                if col_count[d] == 1 {
                    col_queue.push(d as u32);
                }
            }
            continue;
        }
        break;
    }
    let residue = rows
        .into_iter()
        .zip(alive)
        .filter(|(row, a)| *a && !row.is_empty())
        .map(|(row, _)| row)
        .collect();
    (rank, residue)
}

fn dense_rank(rows: &[Vec<u32>], live: &[u32]) -> usize {
    if rows.is_empty() || live.is_empty() {
        return 0;
    }
    let index: HashMap<u32, usize> = live.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let words = live.len().div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; live.len()];
    let mut rank = 0;
    for row in rows {
        let mut bits = vec![0u64; words];
        for c in row {
            let i = index[c];
            bits[i / 64] ^= 1 << (i % 64);
        }
        while let Some(low) = lowest_bit(&bits) {
            match &pivots[low] {
                Some(p) => {
                    for (b, q) in bits.iter_mut().zip(p) {
                        *b ^= q;
                    }
                }
                None => {
                    pivots[low] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn sparse_rank(rows: Vec<Vec<u32>>) -> usize {
    let mut pivots: HashMap<u32, Vec<u32>> = HashMap::new();
    for mut row in rows {
        while let Some(&low) = row.first() {
            match pivots.get(&low) {
                Some(p) => row = xor_sorted(&row, p),
                None => {
                    pivots.insert(low, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Textbook dense elimination on `u128` rows.
    fn oracle_rank(rows: &[Vec<u32>]) -> usize {
        let mut m: Vec<u128> = rows.iter().map(|r| r.iter().fold(0u128, |a, &c| a | 1 << c)).collect();
        let mut rank = 0;
        for bit in 0..128 {
            if let Some(p) = (rank..m.len()).find(|&i| m[i] >> bit & 1 == 1) {
                m.swap(rank, p);
                for i in 0..m.len() {
                    if i != rank && m[i] >> bit & 1 == 1 {
                        m[i] ^= m[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn xor_merges() {
        assert_eq!(xor_sorted(&[1, 3, 5], &[3, 4]), vec![1, 4, 5]);
        assert!(xor_sorted(&[2, 7], &[2, 7]).is_empty());
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[], 5), 0);
        assert_eq!(rank(&[vec![0, 1], vec![1, 2], vec![0, 2]], 3), 2);
        assert_eq!(rank(&[vec![0], vec![0], vec![]], 3), 1);
    }

    #[test]
    fn sparse_path_agrees_with_dense() {
        let rows: Vec<Vec<u32>> = (0..50).map(|i| vec![i, i + 1, i + 7]).collect();
        let live: Vec<u32> = (0..57).collect();
        assert_eq!(sparse_rank(rows.clone()), dense_rank(&rows, &live));
    }

    fn arb_rows() -> impl Strategy<Value = Vec<Vec<u32>>> {
        proptest::collection::vec(proptest::collection::btree_set(0u32..40, 0..6), 0..60)
            .prop_map(|rows| rows.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    proptest! {
        #[test]
        fn rank_matches_oracle(rows in arb_rows()) {
            prop_assert_eq!(rank(&rows, 40), oracle_rank(&rows));
        }

        #[test]
        fn sparse_matches_oracle(rows in arb_rows()) {
            prop_assert_eq!(sparse_rank(rows.clone()), oracle_rank(&rows));
        }
    }
}
