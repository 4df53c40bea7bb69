//! Stirling numbers of the second kind and canonical `k`-partition streams.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// `S(n, k)` by the recurrence `S(n,k) = k·S(n-1,k) + S(n-1,k-1)`.
pub fn stirling(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    // row[j] = S(i, j) for the current i
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let carried = &row[j] * BigUint::from(j);
            row[j] = carried + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

/// The full table `S(i, j)` for `0 ≤ j ≤ i ≤ n`.
pub fn stirling_table(n: usize) -> Vec<Vec<BigUint>> {
    let mut table: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    table.push(vec![BigUint::one()]);
    for i in 1..=n {
        let prev = &table[i - 1];
        let mut row = vec![BigUint::zero(); i + 1];
        for j in 1..=i {
            let keep = if j < i {
                &prev[j] * BigUint::from(j)
            } else {
                BigUint::zero()
            };
            row[j] = keep + &prev[j - 1];
        }
        table.push(row);
    }
    table
}

/// `S(n, k) = (1/k!) Σ_j (-1)^j C(k, j) (k - j)^n`.
pub fn stirling_explicit(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one();
    let exp = u32::try_from(n).expect("exponent fits in u32");
    for j in 0..=k {
        let term = &binom * BigInt::from(k - j).pow(exp);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    let fact: BigInt = (1..=k).map(BigInt::from).product();
    let (q, r) = sum.div_rem(&fact);
    debug_assert!(r.is_zero() && !q.is_negative());
    q.to_biguint().expect("Stirling numbers are non-negative")
}

/// `⌈log₂ r⌉` for `r ≥ 1`.
pub fn ceil_log2(r: usize) -> u32 {
    assert!(r >= 1);
    usize::BITS - (r - 1).leading_zeros()
}

/// Parameters of the colorful Helly construction for Radon bound `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorfulParams {
    pub r: usize,
    /// Block count `k = r - 1`.
    pub k: usize,
    /// Index set size `n = k^⌈log₂ r⌉`.
    pub n: usize,
    /// Number of colour classes `m = S(n, k)`.
    #[serde(serialize_with = "crate::rational::natural::serialize")]
    pub m: BigUint,
}

pub fn colorful_params(r: usize) -> Result<ColorfulParams> {
    if r < 3 {
        return Err(Error::InvalidArgument(format!(
            "Radon bound must be at least 3, got {r}"
        )));
    }
    let k = r - 1;
    let n = k
        .checked_pow(ceil_log2(r))
        .ok_or_else(|| Error::InvalidArgument(format!("index set for r = {r} overflows")))?;
    let m = if (n as u128) * (k as u128) <= 1_000_000 {
        stirling(n, k)
    } else {
        stirling_explicit(n, k)
    };
    Ok(ColorfulParams { r, k, n, m })
}

/// Number of colour classes sufficient for colorful Helly at Radon bound `r`.
pub fn colorful_m(r: usize) -> Result<BigUint> {
    colorful_params(r).map(|p| p.m)
}

/// A partition of `{0, .., n-1}` into non-empty blocks ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct KPartition {
    pub blocks: Vec<ElementSet>,
}

impl KPartition {
    /// From a restricted growth string (`labels[i]` = block of `i`).
    pub fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![ElementSet::EMPTY; k];
        for (i, &b) in labels.iter().enumerate() {
            blocks[b].insert(i);
        }
        KPartition { blocks }
    }

    /// Block index containing `t`.
    pub fn block_of(&self, t: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(t))
    }
}

/// Restricted growth strings of length `n` with exactly `k` distinct labels,
/// in lexicographic order. Each one encodes a distinct `k`-partition.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    n: usize,
    k: usize,
    labels: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize, k: usize) -> Self {
        let feasible = (k >= 1 && k <= n) || (n == 0 && k == 0);
        let mut labels = vec![0; n];
        if feasible && k >= 1 {
            for (offset, slot) in labels[n - k + 1..].iter_mut().enumerate() {
                *slot = offset + 1;
            }
        }
        RestrictedGrowth {
            n,
            k,
            labels,
            started: false,
            done: !feasible,
        }
    }

    /// Advances to the next string; returns the current labels.
    pub fn next_labels(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.labels);
        }
        if !self.advance() {
            self.done = true;
            return None;
        }
        Some(&self.labels)
    }

    fn advance(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        if n < 2 {
            return false;
        }
        // prefix_max[i] = max(labels[0..=i])
        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.labels[i]);
        }
        for i in (1..n).rev() {
            let v = self.labels[i] + 1;
            if v > prefix_max[i - 1] + 1 || v >= k {
                continue;
            }
            let top = prefix_max[i - 1].max(v);
            let remaining = n - 1 - i;
            let missing = k - 1 - top;
            if remaining < missing {
                continue;
            }
            self.labels[i] = v;
            for slot in &mut self.labels[i + 1..n - missing] {
                *slot = 0;
            }
            for (offset, slot) in self.labels[n - missing..].iter_mut().enumerate() {
                *slot = top + 1 + offset;
            }
            return true;
        }
        false
    }
}

/// Every `k`-partition of `{0, .., n-1}` exactly once, canonically ordered.
pub fn enumerate_k_partitions(n: usize, k: usize) -> impl Iterator<Item = KPartition> {
    let mut gen = RestrictedGrowth::new(n, k);
    std::iter::from_fn(move || gen.next_labels().map(KPartition::from_labels))
}
