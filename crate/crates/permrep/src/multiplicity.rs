//! Closed-form characters of the two-sided action `alpha` and the
//! conjugation action `beta` on each orbit family, and the multiplicities
//! of irreducible constituents computed along several independent routes.
//!
//! Conventions: `alpha` is the `S_n x S_n` action `(pi, sigma) . A =
//! P_pi A P_sigma^{-1}`; `beta` is its restriction to the diagonal. The
//! permutation character of `alpha` vanishes on non-conjugate pairs and
//! equals the `beta` character on the diagonal, so everything reduces to
//! class-wise sums over cycle types.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, falling_factorial};
use crate::characters::{
    deletion_paths_count, dimension, kronecker_gamma, littlewood_richardson, restrict_to_product,
    restricted_inner_product, CharTable,
};
use crate::classes::{centralizer_size, class_size, classes_of};
use crate::partition::{partitions_of, Partition};

/// An orbit family of matrices under the two-sided action.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// Invertible (0,1)-matrices with the staircase profile, one orbit of
    /// size `n! (n)_k`.
    H,
    /// Signed permutation matrices with `k` minus entries, one orbit of
    /// size `n! C(n,k)`.
    X,
    /// All signed permutation matrices, `2^n n!` in total; the parameter
    /// `k` is ignored.
    Bn,
    /// Monomial matrices over the given modulus with `k` nontrivial
    /// entries, `n! C(n,k) (r-1)^k` in total.
    Y(usize),
}

impl Family {
    /// The number of matrices in the family.
    pub fn size(&self, n: usize, k: usize) -> BigInt {
        match self {
            Family::H => factorial(n) * falling_factorial(n as i64, k),
            Family::X => factorial(n) * binomial(n, k),
            Family::Bn => factorial(n) * BigInt::from(2).pow(n as u32),
            Family::Y(r) => {
                assert!(*r >= 1, "modulus must be positive");
                factorial(n) * binomial(n, k) * BigInt::from(r - 1).pow(k as u32)
            }
        }
    }

    /// Whether the `k` parameter selects anything for this family.
    pub fn uses_k(&self) -> bool {
        !matches!(self, Family::Bn)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::H => write!(f, "H"),
            Family::X => write!(f, "X"),
            Family::Bn => write!(f, "B"),
            Family::Y(r) => write!(f, "Y(r={r})"),
        }
    }
}

/// Number of ways to choose cycles of `mu` with lengths summing to `k`,
/// counting each chosen cycle with the given weight: the coefficient of
/// `x^k` in the product of `1 + weight x^{mu_i}` over all parts. Cycles of
/// equal length count as distinct.
fn cycle_subset_count(mu: &Partition, k: usize, weight: &BigInt) -> BigInt {
    let mut coeffs = vec![BigInt::zero(); k + 1];
    coeffs[0] = BigInt::one();
    for &part in mu.parts() {
        if part > k {
            continue;
        }
        for j in (part..=k).rev() {
            let add = &coeffs[j - part] * weight;
            coeffs[j] += add;
        }
    }
    coeffs.swap_remove(k)
}

/// Character of conjugation on the staircase family at the class `mu`:
/// `z_mu (n - supp)_k`, zero as soon as the support exceeds `n - k`.
pub fn beta_char_h(n: usize, k: usize, mu: &Partition) -> BigInt {
    assert_eq!(mu.sum(), n, "class size mismatch");
    assert!(k <= n, "k exceeds n");
    let support = n - mu.parts().iter().filter(|&&p| p == 1).count();
    centralizer_size(mu) * falling_factorial((n - support) as i64, k)
}

/// Character of conjugation on the signed family at the class `mu`:
/// `z_mu` times the number of cycle subsets of total length `k`.
pub fn beta_char_x(n: usize, k: usize, mu: &Partition) -> BigInt {
    assert_eq!(mu.sum(), n, "class size mismatch");
    assert!(k <= n, "k exceeds n");
    centralizer_size(mu) * cycle_subset_count(mu, k, &BigInt::one())
}

/// Character of conjugation on `Y_n^k` over modulus `r`: each chosen cycle
/// carries one of `r - 1` nontrivial colors.
pub fn beta_char_y(n: usize, r: usize, k: usize, mu: &Partition) -> BigInt {
    assert_eq!(mu.sum(), n, "class size mismatch");
    assert!(k <= n, "k exceeds n");
    assert!(r >= 1, "modulus must be positive");
    centralizer_size(mu) * cycle_subset_count(mu, k, &BigInt::from(r - 1))
}

/// Character of conjugation on all signed permutations: `z_mu 2^{l(mu)}`.
pub fn beta_char_bn(n: usize, mu: &Partition) -> BigInt {
    assert_eq!(mu.sum(), n, "class size mismatch");
    centralizer_size(mu) * BigInt::from(2).pow(mu.len() as u32)
}

/// Dispatches the conjugation character by family.
pub fn beta_char(family: Family, n: usize, k: usize, mu: &Partition) -> BigInt {
    match family {
        Family::H => beta_char_h(n, k, mu),
        Family::X => beta_char_x(n, k, mu),
        Family::Bn => beta_char_bn(n, mu),
        Family::Y(r) => beta_char_y(n, r, k, mu),
    }
}

/// Character of the two-sided action on the staircase family: zero on
/// non-conjugate pairs, the conjugation character on conjugate ones.
pub fn alpha_char_h(n: usize, k: usize, mu_pi: &Partition, mu_sigma: &Partition) -> BigInt {
    if mu_pi == mu_sigma {
        beta_char_h(n, k, mu_pi)
    } else {
        BigInt::zero()
    }
}

/// Character of the two-sided action on the signed family.
pub fn alpha_char_x(n: usize, k: usize, mu_pi: &Partition, mu_sigma: &Partition) -> BigInt {
    if mu_pi == mu_sigma {
        beta_char_x(n, k, mu_pi)
    } else {
        BigInt::zero()
    }
}

/// Two-sided character for any of the families: the sets are closed under
/// the two-sided action, so the character vanishes on non-conjugate pairs
/// and agrees with the diagonal character on conjugate ones.
pub fn alpha_char(
    family: Family,
    n: usize,
    k: usize,
    mu_pi: &Partition,
    mu_sigma: &Partition,
) -> BigInt {
    if mu_pi == mu_sigma {
        beta_char(family, n, k, mu_pi)
    } else {
        BigInt::zero()
    }
}

/// `(1/n!) sum_C |C| chi_lambda(C) chi_mu(C) w(C)` for a class-wise weight;
/// the common multiplicity pattern for two-sided actions whose character
/// is supported on conjugate pairs with diagonal value `z_C w(C)`.
fn paired_class_average<F>(lambda: &Partition, mu: &Partition, weight: F) -> BigInt
where
    F: Fn(&Partition) -> BigInt,
{
    let n = lambda.sum();
    assert_eq!(mu.sum(), n, "partitions must have equal size");
    let table = CharTable::for_n(n);
    let mut total = BigInt::zero();
    for class in classes_of(n) {
        total += class.size
            * table.chi(lambda, &class.cycle_type)
            * table.chi(mu, &class.cycle_type)
            * weight(&class.cycle_type);
    }
    let order = factorial(n);
    assert!((&total % &order).is_zero(), "multiplicity must be integral");
    let m = total / order;
    assert!(!m.is_negative(), "multiplicity must be nonnegative");
    m
}

/// Multiplicity of `chi_lambda` in the conjugation action on the
/// staircase family: the class-wise sum `sum_C chi_lambda(C) (n - supp)_k`.
///
/// Strictly positive with a single small-degree exception: at `n = 2`,
/// `k = 0` the action is conjugation of the abelian group `S_2` on itself,
/// which omits the sign character, so the value at `lambda = (1,1)` is 0.
/// For `n != 2` the conjugacy representation contains every irreducible,
/// and for `k >= 1` the extra weight keeps `n = 2` positive too.
pub fn beta_mult_h(lambda: &Partition, k: usize) -> BigInt {
    beta_mult_by_weight(lambda, |mu| {
        let n = lambda.sum();
        let support = n - mu.parts().iter().filter(|&&p| p == 1).count();
        falling_factorial((n - support) as i64, k)
    })
}

/// Multiplicity of `chi_lambda` in the conjugation action on the signed
/// family.
pub fn beta_mult_x(lambda: &Partition, k: usize) -> BigInt {
    beta_mult_by_weight(lambda, |mu| cycle_subset_count(mu, k, &BigInt::one()))
}

/// Multiplicity of `chi_lambda` in the conjugation action on `Y_n^k`.
pub fn beta_mult_y(lambda: &Partition, k: usize, r: usize) -> BigInt {
    assert!(r >= 1, "modulus must be positive");
    beta_mult_by_weight(lambda, |mu| cycle_subset_count(mu, k, &BigInt::from(r - 1)))
}

/// Multiplicity of `chi_lambda` in conjugation on all signed permutations.
pub fn beta_mult_bn(lambda: &Partition) -> BigInt {
    beta_mult_by_weight(lambda, |mu| BigInt::from(2).pow(mu.len() as u32))
}

/// Dispatches the conjugation multiplicity by family.
pub fn beta_mult(family: Family, lambda: &Partition, k: usize) -> BigInt {
    match family {
        Family::H => beta_mult_h(lambda, k),
        Family::X => beta_mult_x(lambda, k),
        Family::Bn => beta_mult_bn(lambda),
        Family::Y(r) => beta_mult_y(lambda, k, r),
    }
}

/// `sum_C chi_lambda(C) w(C)`: the inner product of `chi_lambda` with a
/// conjugation character whose value at `C` is `z_C w(C)`.
fn beta_mult_by_weight<F>(lambda: &Partition, weight: F) -> BigInt
where
    F: Fn(&Partition) -> BigInt,
{
    let n = lambda.sum();
    let table = CharTable::for_n(n);
    let mut total = BigInt::zero();
    for mu in partitions_of(n) {
        total += table.chi(lambda, &mu) * weight(&mu);
    }
    assert!(
        !total.is_negative(),
        "conjugation multiplicity must be nonnegative"
    );
    total
}

/// Multiplicity of `chi_lambda (x) chi_mu` in the two-sided action on the
/// staircase family, via direct class-wise averaging of the character.
pub fn alpha_mult_h_direct(lambda: &Partition, mu: &Partition, k: usize) -> BigInt {
    let n = lambda.sum();
    assert!(k <= n, "k exceeds n");
    paired_class_average(lambda, mu, |class| {
        let support = n - class.parts().iter().filter(|&&p| p == 1).count();
        falling_factorial((n - support) as i64, k)
    })
}

/// The same multiplicity as the inner product of the characters restricted
/// to `S_{n-k}` (the subgroup fixing the last `k` points).
pub fn alpha_mult_h_branching(lambda: &Partition, mu: &Partition, k: usize) -> BigInt {
    let n = lambda.sum();
    assert_eq!(mu.sum(), n, "partitions must have equal size");
    assert!(k <= n, "k exceeds n");
    restricted_inner_product(lambda, mu, n - k)
}

/// The same multiplicity as the number of pairs of `k`-step corner-removal
/// paths from `lambda` and `mu` to a common shape.
pub fn alpha_mult_h_paths(lambda: &Partition, mu: &Partition, k: usize) -> BigInt {
    deletion_paths_count(lambda, mu, k)
}

/// Character of the seed representation on `(S_k x S_{n-k})^2` whose
/// induction to `S_n x S_n` is the two-sided action on the staircase
/// family: supported where both `S_k` classes are trivial and the
/// `S_{n-k}` classes agree, with value `(k!)^2 z_d`.
pub fn omega_char(
    n: usize,
    k: usize,
    a: &Partition,
    b: &Partition,
    c: &Partition,
    d: &Partition,
) -> BigInt {
    assert!(k <= n, "k exceeds n");
    assert_eq!(a.sum(), k, "first component class must lie in S_k");
    assert_eq!(c.sum(), k, "third component class must lie in S_k");
    assert_eq!(
        b.sum(),
        n - k,
        "second component class must lie in the smaller factor"
    );
    assert_eq!(
        d.sum(),
        n - k,
        "fourth component class must lie in the smaller factor"
    );
    let identity = a.parts().iter().all(|&p| p == 1) && c.parts().iter().all(|&p| p == 1);
    if identity && b == d {
        factorial(k) * factorial(k) * centralizer_size(b)
    } else {
        BigInt::zero()
    }
}

/// The staircase multiplicity once more, by Frobenius reciprocity against
/// the induced seed character: an honest sum over all class four-tuples of
/// `(S_k x S_{n-k})^2`.
pub fn alpha_mult_h_induced(lambda: &Partition, mu: &Partition, k: usize) -> BigInt {
    let n = lambda.sum();
    assert_eq!(mu.sum(), n, "partitions must have equal size");
    assert!(k <= n, "k exceeds n");
    let table = CharTable::for_n(n);
    let mut total = BigInt::zero();
    for a in partitions_of(k) {
        for b in partitions_of(n - k) {
            for c in partitions_of(k) {
                for d in partitions_of(n - k) {
                    let w = omega_char(n, k, &a, &b, &c, &d);
                    if w.is_zero() {
                        continue;
                    }
                    total += class_size(&a)
                        * class_size(&b)
                        * class_size(&c)
                        * class_size(&d)
                        * w
                        * table.chi(lambda, &a.union(&b))
                        * table.chi(mu, &c.union(&d));
                }
            }
        }
    }
    let order = factorial(k) * factorial(n - k);
    let order_squared = &order * &order;
    assert!(
        (&total % &order_squared).is_zero(),
        "induced multiplicity must be integral"
    );
    let m = total / order_squared;
    assert!(!m.is_negative(), "multiplicity must be nonnegative");
    m
}

/// Multiplicity of `chi_lambda (x) chi_mu` in the two-sided action on the
/// signed family, as the Littlewood-Richardson sum
/// `sum_{rho, nu} c^lambda_{rho nu} c^mu_{rho nu}`.
pub fn alpha_mult_x_lr(lambda: &Partition, mu: &Partition, k: usize) -> BigInt {
    let n = lambda.sum();
    assert_eq!(mu.sum(), n, "partitions must have equal size");
    assert!(k <= n, "k exceeds n");
    let mut total = BigInt::zero();
    for rho in partitions_of(k) {
        for nu in partitions_of(n - k) {
            total +=
                littlewood_richardson(lambda, &rho, &nu) * littlewood_richardson(mu, &rho, &nu);
        }
    }
    total
}

/// The same multiplicity as the inner product of the restrictions to
/// `S_k x S_{n-k}`.
pub fn alpha_mult_x_restriction(lambda: &Partition, mu: &Partition, k: usize) -> BigInt {
    let n = lambda.sum();
    assert_eq!(mu.sum(), n, "partitions must have equal size");
    assert!(k <= n, "k exceeds n");
    let left = restrict_to_product(lambda, k);
    let right = restrict_to_product(mu, k);
    crate::characters::expect_integer(&left.inner_product(&right), "restriction inner product")
}

/// The signed-family multiplicity, computed along both routes; panics if
/// they ever disagree.
pub fn alpha_mult_x(lambda: &Partition, mu: &Partition, k: usize) -> BigInt {
    let lr = alpha_mult_x_lr(lambda, mu, k);
    let restriction = alpha_mult_x_restriction(lambda, mu, k);
    assert_eq!(lr, restriction, "signed multiplicity routes disagree");
    lr
}

/// Multiplicity of `chi_lambda (x) chi_mu` in the two-sided action on all
/// signed permutations: the sum over `k` of the signed-family values.
pub fn alpha_mult_bn(lambda: &Partition, mu: &Partition) -> BigInt {
    let n = lambda.sum();
    (0..=n).map(|k| alpha_mult_x(lambda, mu, k)).sum()
}

/// Two-sided multiplicity for any family, by that family's preferred
/// route: restriction for the staircase family, the cross-checked
/// Littlewood-Richardson routes for the signed families, and the
/// class-wise average for `Y`.
pub fn alpha_mult(family: Family, lambda: &Partition, mu: &Partition, k: usize) -> BigInt {
    match family {
        Family::H => alpha_mult_h_branching(lambda, mu, k),
        Family::X => alpha_mult_x(lambda, mu, k),
        Family::Bn => alpha_mult_bn(lambda, mu),
        Family::Y(r) => paired_class_average(lambda, mu, |class| {
            cycle_subset_count(class, k, &BigInt::from(r - 1))
        }),
    }
}

/// Sum of `chi_lambda` over the conjugacy classes: the multiplicity of
/// `chi_lambda` in the conjugation action on the group itself.
pub fn conjugacy_rep_multiplicity(lambda: &Partition) -> BigInt {
    let n = lambda.sum();
    let table = CharTable::for_n(n);
    let total: BigInt = partitions_of(n)
        .iter()
        .map(|mu| table.chi(lambda, mu))
        .sum();
    assert!(!total.is_negative(), "class sum must be nonnegative");
    total
}

/// Evaluates the Kronecker route to the staircase conjugation
/// multiplicity: `sum_{mu, nu} <chi_mu down, chi_nu down> g(lambda, mu,
/// nu)` over restrictions to `S_{n-k}`. Must equal [`beta_mult_h`].
pub fn gamma_decomposition_check(lambda: &Partition, k: usize) -> BigInt {
    let n = lambda.sum();
    assert!(k <= n, "k exceeds n");
    let mut total = BigInt::zero();
    for mu in partitions_of(n) {
        for nu in partitions_of(n) {
            let pairing = restricted_inner_product(&mu, &nu, n - k);
            if pairing.is_zero() {
                continue;
            }
            total += pairing * kronecker_gamma(lambda, &mu, &nu);
        }
    }
    total
}

/// Whether the conjugation multiplicity for the family dominates the
/// conjugacy-representation multiplicity and is strictly positive, as the
/// equivariant surjections onto the group predict. The small-degree
/// failures all sit at `n = 2`, `lambda = (1,1)`, at parameters where the
/// family reduces to conjugation on the group itself (or its central
/// twist): `k = 0` for every family, and additionally `k = n` for `X`
/// (see [`beta_mult_h`]).
pub fn beta_mult_lower_bound_check(family: Family, lambda: &Partition, k: usize) -> bool {
    let mult = beta_mult(family, lambda, k);
    mult > BigInt::zero() && mult >= conjugacy_rep_multiplicity(lambda)
}

/// A table of conjugation-action multiplicities, one row per partition.
#[derive(Clone, Debug)]
pub struct BetaTable {
    /// The family described.
    pub family: Family,
    /// The matrix size.
    pub n: usize,
    /// The family parameter (ignored for `Bn`).
    pub k: usize,
    /// Multiplicity of `chi_lambda`, keyed by `lambda`.
    pub entries: BTreeMap<Partition, BigInt>,
}

impl BetaTable {
    /// Computes the full table for a family.
    pub fn build(family: Family, n: usize, k: usize) -> Self {
        let entries = partitions_of(n)
            .into_iter()
            .map(|lambda| {
                let m = beta_mult(family, &lambda, k);
                (lambda, m)
            })
            .collect();
        BetaTable {
            family,
            n,
            k,
            entries,
        }
    }

    /// The multiplicity of `chi_lambda`.
    pub fn entry(&self, lambda: &Partition) -> &BigInt {
        &self.entries[lambda]
    }

    /// `sum m(lambda) f^lambda`, the dimension of the representation.
    pub fn dimension_sum(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(lambda, m)| m * dimension(lambda))
            .sum()
    }

    /// Whether the dimension sum equals the family size.
    pub fn dimension_identity_ok(&self) -> bool {
        self.dimension_sum() == self.family.size(self.n, self.k)
    }
}

/// A table of two-sided-action multiplicities, one entry per pair of
/// partitions.
#[derive(Clone, Debug)]
pub struct AlphaTable {
    /// The family described.
    pub family: Family,
    /// The matrix size.
    pub n: usize,
    /// The family parameter (ignored for `Bn`).
    pub k: usize,
    /// Multiplicity of `chi_lambda (x) chi_mu`, keyed by `(lambda, mu)`.
    pub entries: BTreeMap<(Partition, Partition), BigInt>,
}

impl AlphaTable {
    /// Computes the full table for a family. The staircase family uses the
    /// restriction route; the signed families check both of their routes on
    /// every cell; `Y` uses the class-wise average against its conjugation
    /// character.
    pub fn build(family: Family, n: usize, k: usize) -> Self {
        let partitions = partitions_of(n);
        let mut entries = BTreeMap::new();
        for lambda in &partitions {
            for mu in &partitions {
                entries.insert(
                    (lambda.clone(), mu.clone()),
                    alpha_mult(family, lambda, mu, k),
                );
            }
        }
        AlphaTable {
            family,
            n,
            k,
            entries,
        }
    }

    /// The multiplicity of `chi_lambda (x) chi_mu`.
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.entries[&(lambda.clone(), mu.clone())]
    }

    /// Checks `m(lambda, mu) = m(mu, lambda) = m(lambda', mu')` everywhere.
    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|((lambda, mu), m)| {
            *m == self.entries[&(mu.clone(), lambda.clone())]
                && *m == self.entries[&(lambda.conjugate(), mu.conjugate())]
        })
    }

    /// `sum m(lambda, mu) f^lambda f^mu`, the dimension of the
    /// representation.
    pub fn dimension_sum(&self) -> BigInt {
        self.entries
            .iter()
            .map(|((lambda, mu), m)| m * dimension(lambda) * dimension(mu))
            .sum()
    }

    /// Whether the dimension sum equals the family size.
    pub fn dimension_identity_ok(&self) -> bool {
        self.dimension_sum() == self.family.size(self.n, self.k)
    }
}
