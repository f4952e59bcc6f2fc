//! Exact integer helpers: factorials, falling factorials, binomials.
//!
//! Everything returns arbitrary-precision integers so that no computation
//! in the crate depends on `n` staying below a machine-word bound.

use num_bigint::BigInt;

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// The falling factorial `(n)_k = n (n-1) ... (n-k+1)`, with `(n)_0 = 1`.
///
/// Equals 0 whenever `0 <= n < k`; negative `n` follows the same product.
pub fn falling_factorial(n: i64, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k as i64 {
        acc *= n - i;
    }
    acc
}

/// The binomial coefficient `C(n, k)`, 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        // Exact at every step: i+1 consecutive integers contain a multiple
        // of every d <= i+1.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        // 21! overflows u64; make sure we are past that cliff.
        assert_eq!(factorial(21).to_string(), "51090942171709440000",);
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(5, 0), BigInt::from(1));
        assert_eq!(falling_factorial(0, 1), BigInt::from(0));
        assert_eq!(falling_factorial(3, 5), BigInt::from(0));
        assert_eq!(falling_factorial(4, 4), factorial(4));
        // Negative argument keeps the plain product definition.
        assert_eq!(falling_factorial(-2, 2), BigInt::from(6));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(5, 5), BigInt::from(1));
        assert_eq!(binomial(4, 6), BigInt::from(0));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn binomial_matches_factorial_ratio() {
        for n in 0..=12usize {
            for k in 0..=n {
                let by_ratio = factorial(n) / (factorial(k) * factorial(n - k));
                assert_eq!(binomial(n, k), by_ratio, "C({n},{k})");
            }
        }
    }
}
