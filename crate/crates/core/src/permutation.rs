//! One-line permutations of `1..=n` and lexicographic enumeration of `S_n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest permutation size accepted by the constructors. `20!` still fits
/// in a `u64`, so ranks never overflow.
pub const DEFAULT_MAX_SIZE: usize = 20;

/// A permutation `w = w_1 ... w_n` in one-line notation.
///
/// The empty permutation exists only as the base case of `S_0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates `entries` as a rearrangement of `1..=n`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n > DEFAULT_MAX_SIZE {
            return Err(Error::TooLarge {
                n,
                max: DEFAULT_MAX_SIZE,
            });
        }
        let mut seen = vec![false; n + 1];
        for (i, &v) in entries.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::ValueOutOfRange {
                    index: i + 1,
                    value: v as i64,
                    n,
                });
            }
            if seen[v] {
                return Err(Error::DuplicateValue {
                    index: i + 1,
                    value: v,
                });
            }
            seen[v] = true;
        }
        Ok(Permutation(entries))
    }

    /// Like [`Permutation::new`] but accepts signed input, so negative
    /// values are reported instead of wrapping.
    pub fn from_values(values: &[i64]) -> Result<Self> {
        let n = values.len();
        let mut entries = Vec::with_capacity(n);
        for (i, &v) in values.iter().enumerate() {
            if v <= 0 || v as u64 > n as u64 {
                return Err(Error::ValueOutOfRange {
                    index: i + 1,
                    value: v,
                    n,
                });
            }
            entries.push(v as usize);
        }
        Self::new(entries)
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }

    /// `w_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    /// `w^r = w_n ... w_1`
    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// `w^c = (n+1-w_1) ... (n+1-w_n)`
    pub fn complement(&self) -> Self {
        let n = self.len();
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// The `r`-th permutation of `S_n` in lexicographic order, counting from 0.
    pub fn unrank(n: usize, rank: u64) -> Result<Self> {
        let total = factorial(n).ok_or(Error::TooLarge {
            n,
            max: DEFAULT_MAX_SIZE,
        })?;
        if rank >= total {
            return Err(Error::RankOutOfRange { n, rank, total });
        }
        let mut out = vec![0; n];
        unrank_into(n, rank, &mut out);
        Ok(Permutation(out))
    }

    /// Position of `self` in the lexicographic order of `S_n`.
    pub fn rank(&self) -> u64 {
        let n = self.len();
        let mut used = vec![false; n + 1];
        let mut rank = 0u64;
        for (i, &v) in self.0.iter().enumerate() {
            let smaller_unused = (1..v).filter(|&u| !used[u]).count() as u64;
            rank += smaller_unused * factorial(n - 1 - i).expect("n bounded by constructor");
            used[v] = true;
        }
        rank
    }

    /// Digit-string form such as `52314`; only defined for `n <= 9`.
    pub fn to_compact_string(&self) -> Option<String> {
        (self.len() <= 9).then(|| self.0.iter().map(|v| v.to_string()).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"5 2 3 1 4"`, `"5,2,3,1,4"`, or the compact `"52314"`.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let values: Vec<i64> = match tokens.as_slice() {
            [] => Vec::new(),
            [single] if single.len() > 1 && single.bytes().all(|b| b.is_ascii_digit()) => {
                if single.len() > 9 {
                    return Err(Error::Parse(format!(
                        "compact form {single:?} is only accepted for n <= 9; separate entries with spaces or commas"
                    )));
                }
                single.bytes().map(|b| i64::from(b - b'0')).collect()
            }
            _ => tokens
                .iter()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("{t:?} is not an integer")))
                })
                .collect::<Result<_>>()?,
        };
        Self::from_values(&values)
    }
}

impl TryFrom<Vec<i64>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        Self::from_values(&values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// `n!`, or `None` if it does not fit in a `u64`.
pub fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Writes the `rank`-th permutation of `S_n` into `out[..n]`.
/// Caller guarantees `rank < n!`.
pub(crate) fn unrank_into(n: usize, mut rank: u64, out: &mut [usize]) {
    let mut pool: Vec<usize> = (1..=n).collect();
    for (i, slot) in out[..n].iter_mut().enumerate() {
        let block = factorial(n - 1 - i).unwrap_or(u64::MAX);
        let k = (rank / block) as usize;
        rank %= block;
        *slot = pool.remove(k);
    }
}

/// Advances `xs` to its lexicographic successor. Returns `false` (leaving
/// `xs` untouched) when `xs` is already the last arrangement.
pub(crate) fn next_lexicographic(xs: &mut [usize]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Lexicographic stream over all of `S_n`; yields the empty permutation once
/// for `n = 0`.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            current: Some((1..=n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.as_mut()?;
        let out = Permutation(cur.clone());
        if !next_lexicographic(cur) {
            self.current = None;
        }
        Some(out)
    }
}

/// All of `S_n` in lexicographic order.
pub fn iterate_sn(n: usize) -> Permutations {
    Permutations::new(n)
}
