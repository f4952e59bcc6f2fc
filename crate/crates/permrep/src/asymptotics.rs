//! Exact-rational norm and angle statistics for the conjugation characters:
//! the class-sum `F_k`, the sum of inverse class sizes it is sandwiched by,
//! squared cosines against the regular character, and per-partition
//! multiplicity ratios. No floating point anywhere; square roots are
//! avoided by reporting squared quantities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, falling_factorial};
use crate::characters::dimension;
use crate::classes::{centralizer_size, classes_of};
use crate::multiplicity::{beta_char, beta_mult, Family};
use crate::partition::{partitions_of, Partition};

/// `sum over classes of 1/|C|`, as the exact rational `sum z_C / n!`.
/// Approaches 1 from above as `n` grows.
pub fn sum_inverse_class_sizes(n: usize) -> BigRational {
    BigRational::new(sum_centralizers(n), factorial(n))
}

/// `sum over partitions of n of z_lambda`.
fn sum_centralizers(n: usize) -> BigInt {
    partitions_of(n).iter().map(centralizer_size).sum()
}

/// Numerators of `n! F_k(S_n)` for every `k` at once: index `k` holds
/// `sum over classes of ((n - supp)_k)^2 z_C`, accumulated with one
/// incremental falling-factorial sweep per partition.
pub fn f_k_numerators(n: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); n + 1];
    for lambda in partitions_of(n) {
        let z = centralizer_size(&lambda);
        let fixed = lambda.parts().iter().filter(|&&p| p == 1).count();
        let mut ff = BigInt::one();
        acc[0] += &ff * &ff * &z;
        for k in 1..=fixed {
            ff *= BigInt::from(fixed - k + 1);
            acc[k] += &ff * &ff * &z;
        }
    }
    acc
}

/// `F_k(S_n) = sum over classes of ((n - supp C)_k)^2 / |C|`, the squared
/// norm of the staircase conjugation character divided by `n!`.
pub fn f_k(n: usize, k: usize) -> BigRational {
    assert!(k <= n, "k exceeds n");
    let mut numerator = BigInt::zero();
    for class in classes_of(n) {
        let ff = falling_factorial((n - class.support) as i64, k);
        numerator += &ff * &ff * class.centralizer;
    }
    BigRational::new(numerator, factorial(n))
}

/// All of `F_0 .. F_n` from a single partition sweep.
pub fn f_k_all(n: usize) -> Vec<BigRational> {
    let order = factorial(n);
    f_k_numerators(n)
        .into_iter()
        .map(|num| BigRational::new(num, order.clone()))
        .collect()
}

/// The per-element scale of a family: its size divided by `n!`.
pub fn scale(family: Family, n: usize, k: usize) -> BigInt {
    let size = family.size(n, k);
    let order = factorial(n);
    assert!(
        (&size % &order).is_zero(),
        "family size is n! times the scale"
    );
    size / order
}

/// `(1/n!) sum over the group of chi_beta^2`: the exact squared norm of
/// the family's conjugation character, summed class-wise.
pub fn beta_norm_squared(family: Family, n: usize, k: usize) -> BigRational {
    let mut total = BigRational::zero();
    for class in classes_of(n) {
        let chi = beta_char(family, n, k, &class.cycle_type);
        total += BigRational::new(&chi * &chi, class.centralizer);
    }
    total
}

/// Squared cosine of the angle between the staircase conjugation character
/// and the regular character: `((n)_k)^2 / F_k(S_n)`. Lies in
/// `[1/sum(1/|C|), 1]` and tends to 1.
pub fn cosine_beta_regular(n: usize, k: usize) -> BigRational {
    let ff = falling_factorial(n as i64, k);
    BigRational::new(&ff * &ff, BigInt::one()) / f_k(n, k)
}

/// The same squared cosine for any family: `n! scale^2 / ||chi_beta||^2`.
pub fn cosine_squared(family: Family, n: usize, k: usize) -> BigRational {
    let s = scale(family, n, k);
    BigRational::new(factorial(n) * &s * &s, BigInt::one()) / beta_norm_squared(family, n, k)
}

/// One row of a multiplicity-ratio report.
#[derive(Clone, Debug)]
pub struct RatioEntry {
    /// The irreducible label.
    pub lambda: Partition,
    /// `m(lambda, beta) / (scale f^lambda)`, exact.
    pub ratio: BigRational,
    /// `max(lambda_1, lambda_1') / n`: small means balanced shape.
    pub balance: BigRational,
}

/// Per-partition ratios `m(lambda, beta)/(scale f^lambda)` for a family;
/// the ratios approach 1 for balanced shapes as `n` grows.
pub fn r1_ratio_report(family: Family, n: usize, k: usize) -> Vec<RatioEntry> {
    let s = scale(family, n, k);
    partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let m = beta_mult(family, &lambda, k);
            let ratio = BigRational::new(m, &s * dimension(&lambda));
            let widest = lambda.part(0).max(lambda.len());
            let balance = BigRational::new(BigInt::from(widest), BigInt::from(n));
            RatioEntry {
                lambda,
                ratio,
                balance,
            }
        })
        .collect()
}

/// The full exact statistics bundle for one `(family, n, k)`.
#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    /// The family described.
    pub family: Family,
    /// The symmetric-group degree.
    pub n: usize,
    /// The family parameter (ignored for `Bn`).
    pub k: usize,
    /// `sum 1/|C|` over the classes of `S_n`.
    pub sum_inverse_class_sizes: BigRational,
    /// `||chi_beta||^2 / n!`, the family analogue of `F_k`.
    pub f_value: BigRational,
    /// `||chi_beta||^2`, exact.
    pub norm_squared: BigRational,
    /// Squared cosine against the regular character.
    pub cosine_squared: BigRational,
    /// Whether `scale^2 <= f <= scale^2 sum(1/|C|)` held exactly.
    pub sandwich_ok: bool,
    /// Optional per-partition multiplicity ratios.
    pub per_lambda: Option<Vec<RatioEntry>>,
}

impl AsymptoticReport {
    /// Computes every field for the given family and parameters.
    pub fn build(family: Family, n: usize, k: usize, with_ratios: bool) -> Self {
        let sums = sum_inverse_class_sizes(n);
        let norm_squared = beta_norm_squared(family, n, k);
        let order = BigRational::new(factorial(n), BigInt::one());
        let f_value = &norm_squared / &order;
        let s = scale(family, n, k);
        let scale_squared = BigRational::new(&s * &s, BigInt::one());
        let sandwich_ok = scale_squared <= f_value && f_value <= &scale_squared * &sums;
        let cosine = &scale_squared / &f_value;
        let per_lambda = with_ratios.then(|| r1_ratio_report(family, n, k));
        AsymptoticReport {
            family,
            n,
            k,
            sum_inverse_class_sizes: sums,
            f_value,
            norm_squared,
            cosine_squared: cosine,
            sandwich_ok,
            per_lambda,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::ClassFunction;

    fn ratio(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn inverse_class_size_sums() {
        assert_eq!(sum_inverse_class_sizes(1), ratio(1, 1));
        assert_eq!(sum_inverse_class_sizes(2), ratio(2, 1));
        assert_eq!(sum_inverse_class_sizes(3), ratio(11, 6));
        // At least 1 everywhere; nonincreasing from n = 4 on.
        let sums: Vec<BigRational> = (1..=40).map(sum_inverse_class_sizes).collect();
        for s in &sums {
            assert!(*s >= ratio(1, 1));
        }
        for n in 4..40 {
            assert!(sums[n - 1] >= sums[n], "n={} to n={}", n, n + 1);
        }
        // Strictly decreasing across 10..=40.
        for n in 10..40 {
            assert!(sums[n - 1] > sums[n], "n={} to n={}", n, n + 1);
        }
    }

    #[test]
    fn f_k_values() {
        assert_eq!(f_k(3, 1), ratio(28, 3));
        // k = 0 collapses to the inverse-class-size sum.
        for n in 1..=8 {
            assert_eq!(f_k(n, 0), sum_inverse_class_sizes(n));
        }
        // The sweep agrees with the direct evaluation.
        for n in 1..=8 {
            let all = f_k_all(n);
            for (k, value) in all.iter().enumerate() {
                assert_eq!(*value, f_k(n, k));
            }
        }
    }

    #[test]
    fn sandwich_bounds_hold_exactly() {
        for n in 1..=30usize {
            let numerators = f_k_numerators(n);
            let order = factorial(n);
            let sum_z = sum_centralizers(n);
            for k in 0..=n {
                let ff = falling_factorial(n as i64, k);
                let lower = &ff * &ff * &order;
                let upper = &ff * &ff * &sum_z;
                assert!(lower <= numerators[k], "lower n={n} k={k}");
                assert!(numerators[k] <= upper, "upper n={n} k={k}");
            }
        }
    }

    #[test]
    fn norm_routes_agree() {
        // Closed-form class sum vs the generic class-function machinery.
        for n in 1..=7usize {
            for k in 0..=n {
                let closed = beta_norm_squared(Family::H, n, k);
                let by_f = f_k(n, k) * BigRational::new(factorial(n), BigInt::one());
                assert_eq!(closed, by_f, "n={n} k={k}");
                let function = ClassFunction::from_fn(n, |class| {
                    BigRational::new(beta_char(Family::H, n, k, &class.cycle_type), BigInt::one())
                });
                assert_eq!(function.norm_squared(), closed, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn norm_inequalities_other_families() {
        for n in 1..=7usize {
            let order = factorial(n);
            let sums = sum_inverse_class_sizes(n);
            for family in [Family::X, Family::Bn, Family::Y(3)] {
                for k in 0..=n {
                    let s = scale(family, n, k);
                    let norm = beta_norm_squared(family, n, k);
                    let lower = BigRational::new(&s * &s * &order, BigInt::one());
                    assert!(norm >= lower, "{family} n={n} k={k}");
                    assert!(norm <= &lower * &sums, "{family} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn cosines() {
        assert_eq!(cosine_beta_regular(3, 1), ratio(27, 28));
        for n in 1..=10usize {
            let sums = sum_inverse_class_sizes(n);
            for k in 0..=n {
                let c = cosine_beta_regular(n, k);
                assert!(c <= ratio(1, 1), "n={n} k={k}");
                assert!(c >= ratio(1, 1) / sums.clone(), "n={n} k={k}");
                // The generic version specializes to the staircase one.
                assert_eq!(c, cosine_squared(Family::H, n, k));
            }
        }
        // Close to 1 already at n = 30 for small k.
        for k in [1, 2] {
            assert!(cosine_beta_regular(30, k) >= ratio(99, 100), "k={k}");
        }
    }

    #[test]
    fn ratio_report_balanced_band() {
        let report = r1_ratio_report(Family::H, 12, 2);
        let third = ratio(1, 3);
        let mut balanced = 0;
        for entry in &report {
            if entry.balance <= third {
                balanced += 1;
                assert!(
                    entry.ratio > ratio(1, 2) && entry.ratio < ratio(3, 2),
                    "{} ratio {}",
                    entry.lambda,
                    entry.ratio
                );
            }
        }
        assert!(balanced > 0, "some shapes must be balanced at n = 12");
        // The widest shape sits far from 1: hooks escape the balanced band.
        let trivial = report
            .iter()
            .find(|e| e.lambda == Partition::new(vec![12]))
            .unwrap();
        assert_eq!(trivial.balance, ratio(1, 1));
        assert!(trivial.ratio >= ratio(3, 2) || trivial.ratio <= ratio(1, 2));
    }

    #[test]
    fn report_bundle() {
        let report = AsymptoticReport::build(Family::H, 6, 2, true);
        assert!(report.sandwich_ok);
        assert_eq!(report.f_value, f_k(6, 2));
        assert_eq!(
            report.norm_squared,
            report.f_value.clone() * BigRational::new(factorial(6), BigInt::one())
        );
        assert_eq!(report.cosine_squared, cosine_beta_regular(6, 2));
        let rows = report.per_lambda.as_ref().unwrap();
        assert_eq!(rows.len(), partitions_of(6).len());
        for family in [Family::X, Family::Bn, Family::Y(3)] {
            let report = AsymptoticReport::build(family, 5, 2, false);
            assert!(report.sandwich_ok, "{family}");
            assert!(report.per_lambda.is_none());
            assert!(report.cosine_squared <= ratio(1, 1));
        }
    }
}
