use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{big, Rational};

/// Binomial coefficient `C(n, k)`, defined as zero whenever `k < 0` or
/// `k > n` so that sums over boundary indices need no special cases.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `e_k(j)`: the k-th elementary symmetric function of `1, 2, ..., j`.
pub fn elementary_symmetric_prefix(k: usize, j: usize) -> Rational {
    // e[i] after processing m numbers holds e_i(1..m)
    let mut e = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for m in 1..=j {
        for i in (1..=k.min(m)).rev() {
            let prev = e[i - 1].clone();
            e[i] += prev * m;
        }
    }
    big(e[k].clone())
}

/// `phi_k(j) = 1^k + 2^k + ... + j^k`.
pub fn power_sum(k: usize, j: usize) -> Rational {
    let s = (1..=j).fold(BigInt::zero(), |acc, m| acc + num_traits::pow(BigInt::from(m), k));
    big(s)
}
