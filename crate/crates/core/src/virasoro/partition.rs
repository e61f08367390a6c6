use std::fmt;

use serde::Serialize;

use crate::error::contract;
use crate::Result;

/// Weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(contract(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part and the partition of the remaining parts.
    pub fn split_first(&self) -> Option<(u32, Partition)> {
        self.0.split_first().map(|(&a, rest)| (a, Partition(rest.to_vec())))
    }

    /// Puts `part` in front; it must be at least the current largest part.
    pub(crate) fn prepend(&self, part: u32) -> Partition {
        debug_assert!(part > 0 && self.0.first().is_none_or(|&a| part >= a));
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.0);
        Partition(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, in lexicographically descending order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn fill(remaining: usize, max_part: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part as u32);
            fill(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> u64 {
    // table[k] counts partitions of k using parts up to the current size
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            table[k] += table[k - part];
        }
    }
    table[n]
}
