//! Access counters, the α metric and run timings.

use std::fmt;
use std::time::Duration;

use crate::matrix::{DistanceMatrix, ParentMatrix};

/// Operation counts from one all-pairs run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AccessStats {
    /// Neighbor examinations (BFS, and PST at depth 1) plus tree-child
    /// examinations (PST beyond depth 1).
    pub accesses: u64,
    /// Dequeue-and-expand events.
    pub expansions: u64,
    pub n: usize,
}

impl AccessStats {
    pub fn new(n: usize) -> Self {
        AccessStats {
            accesses: 0,
            expansions: 0,
            n,
        }
    }

    pub fn alpha(&self) -> Alpha {
        alpha(self)
    }
}

/// α = accesses / n², kept as an exact ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alpha {
    pub accesses: u64,
    pub n: u64,
}

pub fn alpha(stats: &AccessStats) -> Alpha {
    assert!(stats.n >= 1, "alpha needs n >= 1");
    Alpha {
        accesses: stats.accesses,
        n: stats.n as u64,
    }
}

impl Alpha {
    pub fn value(&self) -> f64 {
        self.accesses as f64 / (self.n as f64 * self.n as f64)
    }

    /// α × 100 rounded half-up, computed in integers.
    pub fn hundredths(&self) -> u128 {
        round_ratio(self.accesses as u128 * 100, self.n as u128 * self.n as u128)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_hundredths(self.hundredths(), f)
    }
}

/// `num / den` rounded half-up.
pub(crate) fn round_ratio(num: u128, den: u128) -> u128 {
    (2 * num + den) / (2 * den)
}

pub(crate) fn fmt_hundredths(h: u128, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}.{:02}", h / 100, h % 100)
}

/// Wall-clock split between setup and the search loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Timings {
    pub init: Duration,
    pub main: Duration,
}

/// Everything an all-pairs run produces.
#[derive(Debug, Clone)]
pub struct ApspOutput {
    pub distances: DistanceMatrix,
    pub parents: ParentMatrix,
    pub stats: AccessStats,
    pub timings: Timings,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(accesses: u64, n: usize) -> Alpha {
        AccessStats {
            accesses,
            expansions: 0,
            n,
        }
        .alpha()
    }

    #[test]
    fn alpha_values() {
        assert_eq!(a(12, 4).to_string(), "0.75");
        assert_eq!(a(12, 4).value(), 0.75);
        assert_eq!(a(0, 1).to_string(), "0.00");
        // 22208 / 4096 = 5.421875
        assert_eq!(a(22208, 64).to_string(), "5.42");
        // 1/8 = 0.125 rounds half-up
        assert_eq!(a(2, 4).to_string(), "0.13");
        assert_eq!(a(1, 3).to_string(), "0.11");
    }

    #[test]
    #[should_panic]
    fn alpha_needs_vertices() {
        a(0, 0);
    }
}
