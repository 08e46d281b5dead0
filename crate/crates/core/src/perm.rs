//! Permutations of `0..n` with lexicographic (Lehmer code) ranking.
//!
//! A permutation here is an arrangement: `map[chair] = person`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};

/// Largest `n` whose factorial fits in a `u64`.
pub const MAX_RANKABLE: usize = 20;

/// `n!`, or `None` on overflow.
pub fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return param(format!("not a permutation of 1..{n}: {:?}", one_based(&map)));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// Parses one-line notation with 1-based entries, e.g. `"2,1,3"` or `"213"`
    /// (the compact form needs every entry to be a single digit).
    pub fn parse_one_line(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<&str> = if s.contains(',') {
            s.split(',').map(str::trim).collect()
        } else if s.contains(' ') {
            s.split_whitespace().collect()
        } else {
            s.split("").filter(|t| !t.is_empty()).collect()
        };
        let mut map = Vec::with_capacity(parts.len());
        for p in parts {
            let v: usize = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad permutation entry {p:?} in {s:?}")))?;
            if v == 0 {
                return Err(Error::Parse(format!("permutation entries are 1-based, got 0 in {s:?}")));
            }
            map.push(v - 1);
        }
        Permutation::new(map)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return param("composing permutations of different sizes");
        }
        Ok(Permutation { map: other.map.iter().map(|&x| self.map[x]).collect() })
    }

    /// `self ∘ (a b)`: exchanges the entries at positions `a` and `b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Permutation {
        let mut map = self.map.clone();
        map.swap(a, b);
        Permutation { map }
    }

    /// Sign from the cycle decomposition: `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut even_cycles = 0usize;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.map[x];
                len += 1;
            }
            if len % 2 == 0 {
                even_cycles += 1;
            }
        }
        if even_cycles.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Lexicographic rank among all permutations of `0..n`.
    pub fn rank(&self) -> Result<u64> {
        if self.n() > MAX_RANKABLE {
            return param(format!("cannot rank permutations of more than {MAX_RANKABLE} points"));
        }
        let small: Vec<u8> = self.map.iter().map(|&v| v as u8).collect();
        Ok(rank_of(&small))
    }

    pub fn unrank(n: usize, rank: u64) -> Result<Permutation> {
        let total = factorial(n).filter(|_| n <= MAX_RANKABLE);
        match total {
            Some(t) if rank < t => {
                let mut small = vec![0u8; n];
                unrank_into(rank, &mut small);
                Ok(Permutation { map: small.into_iter().map(usize::from).collect() })
            }
            Some(t) => param(format!("rank {rank} out of range 0..{t}")),
            None => param(format!("cannot unrank permutations of more than {MAX_RANKABLE} points")),
        }
    }
}

fn one_based(map: &[usize]) -> Vec<usize> {
    map.iter().map(|v| v + 1).collect()
}

/// Lehmer rank of a permutation of `0..n` (`n <= 20`) in `O(n)`.
#[inline]
pub(crate) fn rank_of(p: &[u8]) -> u64 {
    let n = p.len();
    let mut used = 0u64;
    let mut rank = 0u64;
    for (i, &v) in p.iter().enumerate() {
        let v = v as u64;
        let smaller_free = v - (used & ((1u64 << v) - 1)).count_ones() as u64;
        used |= 1u64 << v;
        rank = rank * (n - i) as u64 + smaller_free;
    }
    rank
}

pub(crate) fn unrank_into(mut rank: u64, out: &mut [u8]) {
    let n = out.len();
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = (rank % base) as usize;
        rank /= base;
    }
    let mut free: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let v = free.remove(digits[i]);
        out[i] = v as u8;
    }
}

/// Advances to the next permutation in lexicographic order; false at the last.
#[inline]
pub(crate) fn next_permutation<T: Ord>(p: &mut [T]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

// Serialized as 1-based one-line notation.
impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        one_based(&p.map)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Permutation> {
        if v.contains(&0) {
            return param("permutation entries are 1-based");
        }
        Permutation::new(v.into_iter().map(|x| x - 1).collect())
    }
}
