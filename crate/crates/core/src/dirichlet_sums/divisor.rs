use num_complex::Complex64;

use super::{phase, SumError};
use crate::summation::ComplexSum;

/// Largest table [`divisor_sieve`] will build.
pub const MAX_TABLE_SIZE: u64 = 50_000_000;

/// Divisor counts `d(n)` for `1 ≤ n ≤ max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    /// `counts[n] = d(n)`; `counts[0]` is unused and zero.
    counts: Vec<u32>,
}

impl DivisorTable {
    pub fn new(max_n: u64) -> Result<Self, SumError> {
        divisor_sieve(max_n)
    }

    pub fn max_n(&self) -> usize {
        self.counts.len() - 1
    }

    /// `d(n)`; panics if `n` is 0 or beyond the table.
    pub fn d(&self, n: usize) -> u32 {
        assert!(n >= 1, "d(0) is undefined");
        self.counts[n]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts[1..]
    }

    pub(crate) fn require(&self, n: u64) -> Result<(), SumError> {
        if n as usize > self.max_n() {
            Err(SumError::TableTooSmall {
                needed: n,
                available: self.max_n() as u64,
            })
        } else {
            Ok(())
        }
    }
}

/// Divisor counts by the additive sieve: every `m` adds one to each multiple.
pub fn divisor_sieve(max_n: u64) -> Result<DivisorTable, SumError> {
    if max_n < 1 {
        return Err(SumError::Domain("max_n must be at least 1".into()));
    }
    if max_n > MAX_TABLE_SIZE {
        return Err(SumError::Resource {
            requested: max_n,
            limit: MAX_TABLE_SIZE,
        });
    }
    let n = max_n as usize;
    let mut counts = vec![0u32; n + 1];
    for m in 1..=n {
        for k in (m..=n).step_by(m) {
            counts[k] += 1;
        }
    }
    Ok(DivisorTable { counts })
}

/// `Σ_{n ≤ u} d(n) n^{it}` by direct summation over the table.
pub fn divisor_phase_sum_direct(
    u: u64,
    t: f64,
    table: &DivisorTable,
) -> Result<Complex64, SumError> {
    table.require(u)?;
    let mut sum = ComplexSum::new();
    for n in 1..=u {
        sum.add(phase(n, t) * table.d(n as usize) as f64);
    }
    Ok(sum.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let t = divisor_sieve(1024).unwrap();
        assert_eq!(t.d(1), 1);
        assert_eq!(t.d(6), 4);
        assert_eq!(t.d(12), 6);
        assert_eq!(t.d(97), 2);
        assert_eq!(t.d(1024), 11);
        assert_eq!(t.counts()[..10].iter().sum::<u32>(), 27);
    }

    #[test]
    fn limits() {
        assert!(matches!(divisor_sieve(0), Err(SumError::Domain(_))));
        assert!(matches!(
            divisor_sieve(MAX_TABLE_SIZE + 1),
            Err(SumError::Resource { .. })
        ));
    }

    #[test]
    fn direct_sums() {
        let table = divisor_sieve(100).unwrap();
        assert_eq!(
            divisor_phase_sum_direct(10, 0.0, &table).unwrap(),
            Complex64::new(27.0, 0.0)
        );
        let one = divisor_phase_sum_direct(1, 4.2, &table).unwrap();
        assert_eq!(one, Complex64::new(1.0, 0.0));
        assert_eq!(
            divisor_phase_sum_direct(0, 4.2, &table).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        assert!(matches!(
            divisor_phase_sum_direct(101, 0.0, &table),
            Err(SumError::TableTooSmall { .. })
        ));
    }
}
