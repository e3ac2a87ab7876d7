//! Small combinatorial number helpers.

use num_traits::{One, Zero};

use super::{ExactError, Int};

/// Binomial coefficient C(n, k); zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Stirling number of the second kind: partitions of an `n`-set into `k`
/// nonempty blocks. Requires `k <= n`.
pub fn stirling2(n: u64, k: u64) -> Result<Int, ExactError> {
    if k > n {
        return Err(ExactError::RangeError { n, k });
    }
    // Row-by-row recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1).
    let mut row: Vec<Int> = vec![Int::one()];
    for _ in 1..=n {
        let mut next = vec![Int::zero(); row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += Int::from(j as u64) * v;
            next[j + 1] += v;
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}
