use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::GradedSeries;

/// Exact partition numbers `p(0..=N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    values: Vec<BigUint>,
}

impl PartitionTable {
    /// Builds `p(0..=max)` with Euler's pentagonal recurrence
    /// `p(n) = Σ_{k≥1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`.
    pub fn new(max: usize) -> Self {
        let mut values: Vec<BigInt> = Vec::with_capacity(max + 1);
        values.push(BigInt::one());
        for n in 1..=max {
            let mut acc = BigInt::zero();
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let g2 = k * (3 * k + 1) / 2;
                let mut term = values[n - g1].clone();
                if g2 <= n {
                    term += &values[n - g2];
                }
                if k % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            values.push(acc);
        }
        Self {
            values: values
                .into_iter()
                .map(|v| v.to_biguint().expect("partition numbers are nonnegative"))
                .collect(),
        }
    }

    /// Largest index held.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// `p(n)` with the convention `p(n) = 0` for negative `n`.
    ///
    /// Panics if `n` exceeds the table.
    pub fn get(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        BigInt::from(self.values[n as usize].clone())
    }

    /// `Σ p(m) q^m` over the whole table.
    pub fn to_series(&self) -> GradedSeries {
        GradedSeries::from_integers(0, self.values.iter().cloned().map(BigInt::from))
    }
}

pub fn partition_numbers(max: usize) -> PartitionTable {
    PartitionTable::new(max)
}
