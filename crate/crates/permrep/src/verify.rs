//! Brute-force oracles: orbit enumeration, literal fixed-point counting,
//! and identity suites. Every closed-form character and multiplicity in
//! this crate is cross-checked here against counts over actual matrices;
//! the oracle side works purely by acting on enumerated elements and never
//! reuses a closed form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::arith::{binomial, factorial, falling_factorial};
use crate::binary::{act, enumerate_h, is_member_h, t_map, BinaryMatrix};
use crate::characters::{
    dimension, kronecker_gamma, tensor, CharTable, ClassFunction, ProductClassFunction,
};
use crate::classes::classes_of;
use crate::colored::{
    act_colored, enumerate_x, enumerate_y_set, is_member_x, is_member_y, ColoredPermutation,
};
use crate::error::{Error, Result};
use crate::multiplicity::{
    alpha_char, alpha_mult_h_branching, alpha_mult_h_direct, alpha_mult_h_paths, alpha_mult_x_lr,
    alpha_mult_x_restriction, beta_char_x, beta_char_y, beta_mult_h, conjugacy_rep_multiplicity,
    gamma_decomposition_check, AlphaTable, BetaTable, Family,
};
use crate::partition::{partitions_of, Partition};
use crate::permutation::Permutation;

/// Default enumeration cap: large enough for every staircase orbit with
/// `n <= 6` and every colored set with `n <= 5`.
pub const DEFAULT_BUDGET: u64 = 600_000;

/// Largest `n` at which table-symmetry checks run inside the identity suite.
const SYMMETRY_CAP: usize = 6;
/// Largest `n` for the vanishing-criterion sweep.
const VANISHING_CAP: usize = 7;
/// Largest `n` for the triple-route decomposition agreement.
const GAMMA_ROUTE_CAP: usize = 5;
/// Largest `n` for the conjugacy-representation column identity.
const CONJUGACY_COLUMN_CAP: usize = 6;
/// Largest `n` for enumeration-backed fiber checks.
const FIBER_CAP: usize = 5;
/// Largest `n` for the three-route multiplicity agreement.
const THREE_ROUTE_CAP: usize = 7;
/// Largest `n` for boundary-table checks.
const BOUNDARY_CAP: usize = 6;
/// Largest `n` for the signed-family route agreement.
const X_ROUTE_CAP: usize = 5;
/// Largest `n` for dimension-sum identities over all families.
const DIMENSION_CAP: usize = 5;

/// One mismatch found by a verification suite.
#[derive(Clone, Debug)]
pub struct Failure {
    /// What was being checked, with enough context to reproduce it.
    pub input: String,
    /// The value the closed form (or identity) predicts.
    pub expected: String,
    /// The value the oracle produced.
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, got {}",
            self.input, self.expected, self.actual
        )
    }
}

/// Outcome of one verification run: it passes exactly when `failures`
/// is empty.
#[derive(Clone, Debug)]
pub struct VerificationResult {
    /// Name of the suite that produced this result.
    pub suite: String,
    /// The family under test, when the suite is family-specific.
    pub family: Option<Family>,
    /// The degree covered (the largest one, for aggregated runs).
    pub n: usize,
    /// The family parameter, when the run covered a single `k`.
    pub k: Option<usize>,
    /// Number of individual comparisons performed.
    pub checks_run: u64,
    /// Every mismatch found.
    pub failures: Vec<Failure>,
}

impl VerificationResult {
    fn new(suite: &str, family: Option<Family>, n: usize, k: Option<usize>) -> Self {
        VerificationResult {
            suite: suite.to_string(),
            family,
            n,
            k,
            checks_run: 0,
            failures: Vec::new(),
        }
    }

    /// True when every check passed.
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn check<T: PartialEq + fmt::Display>(
        &mut self,
        input: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        self.checks_run += 1;
        if expected != actual {
            self.failures.push(Failure {
                input: input(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn check_that(&mut self, input: impl FnOnce() -> String, requirement: &str, ok: bool) {
        self.checks_run += 1;
        if !ok {
            self.failures.push(Failure {
                input: input(),
                expected: requirement.to_string(),
                actual: "violated".to_string(),
            });
        }
    }

    fn merge(&mut self, other: VerificationResult) {
        self.n = self.n.max(other.n);
        if self.k != other.k {
            self.k = None;
        }
        self.checks_run += other.checks_run;
        self.failures.extend(other.failures);
    }
}

/// `#{A in orbit : act(pi, sigma, A) = A}` by literal counting.
pub fn fixed_points_alpha(orbit: &[BinaryMatrix], pi: &Permutation, sigma: &Permutation) -> u64 {
    orbit.iter().filter(|a| act(pi, sigma, a) == **a).count() as u64
}

/// The colored-set analogue of [`fixed_points_alpha`].
pub fn fixed_points_alpha_colored(
    set: &[ColoredPermutation],
    pi: &Permutation,
    sigma: &Permutation,
) -> u64 {
    set.iter()
        .filter(|a| act_colored(pi, sigma, a) == **a)
        .count() as u64
}

/// An enumerated family, in whichever concrete representation it uses.
enum FamilySet {
    Binary(Vec<BinaryMatrix>),
    Colored(Vec<ColoredPermutation>),
}

impl FamilySet {
    fn len(&self) -> usize {
        match self {
            FamilySet::Binary(v) => v.len(),
            FamilySet::Colored(v) => v.len(),
        }
    }

    fn fixed_points(&self, pi: &Permutation, sigma: &Permutation) -> u64 {
        match self {
            FamilySet::Binary(v) => fixed_points_alpha(v, pi, sigma),
            FamilySet::Colored(v) => fixed_points_alpha_colored(v, pi, sigma),
        }
    }
}

/// Enumerates the full matrix set of a family, within the budget.
fn enumerate_family(family: Family, n: usize, k: usize, budget: u64) -> Result<FamilySet> {
    let size = family.size(n, k);
    if size > BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: size.to_u128().unwrap_or(u128::MAX),
            budget,
        });
    }
    Ok(match family {
        Family::H => FamilySet::Binary(enumerate_h(n, k, budget)?),
        Family::X => FamilySet::Colored(enumerate_x(n, k, budget)?),
        Family::Y(r) => FamilySet::Colored(enumerate_y_set(n, k, r)),
        Family::Bn => {
            let mut all = Vec::new();
            for j in 0..=n {
                all.extend(enumerate_y_set(n, j, 2));
            }
            FamilySet::Colored(all)
        }
    })
}

/// Checks `|family set| = closed-form size`, that enumeration produced no
/// duplicates, and that every enumerated element satisfies the membership
/// predicate.
pub fn verify_orbit_sizes(
    family: Family,
    n: usize,
    k: usize,
    budget: u64,
) -> Result<VerificationResult> {
    let set = enumerate_family(family, n, k, budget)?;
    let mut result = VerificationResult::new("orbit-sizes", Some(family), n, Some(k));
    result.check(
        || format!("{family} n={n} k={k} size"),
        family.size(n, k),
        BigInt::from(set.len()),
    );
    match &set {
        FamilySet::Binary(v) => {
            let distinct: BTreeSet<&BinaryMatrix> = v.iter().collect();
            result.check(
                || format!("{family} n={n} k={k} distinct"),
                v.len(),
                distinct.len(),
            );
            result.check_that(
                || format!("{family} n={n} k={k} membership"),
                "every enumerated matrix satisfies the membership predicate",
                v.iter().all(|a| is_member_h(a, k)),
            );
        }
        FamilySet::Colored(v) => {
            let distinct: BTreeSet<(Vec<usize>, Vec<usize>)> = v
                .iter()
                .map(|a| (a.perm().one_line(), a.colors().to_vec()))
                .collect();
            result.check(
                || format!("{family} n={n} k={k} distinct"),
                v.len(),
                distinct.len(),
            );
            let member = |a: &ColoredPermutation| match family {
                Family::X => is_member_x(a, k),
                Family::Y(_) => is_member_y(a, k),
                Family::Bn => a.r() == 2,
                Family::H => unreachable!("binary family"),
            };
            result.check_that(
                || format!("{family} n={n} k={k} membership"),
                "every enumerated element satisfies the membership predicate",
                v.iter().all(member),
            );
        }
    }
    Ok(result)
}

/// Compares brute-force fixed-point counts with the closed-form two-sided
/// character on one representative pair per pair of conjugacy classes.
pub fn verify_alpha_char(
    family: Family,
    n: usize,
    k: usize,
    budget: u64,
) -> Result<VerificationResult> {
    let set = enumerate_family(family, n, k, budget)?;
    let mut result = VerificationResult::new("orbit-chars", Some(family), n, Some(k));
    let classes = classes_of(n);
    for mu in &classes {
        let pi = Permutation::class_representative(&mu.cycle_type);
        for nu in &classes {
            let sigma = Permutation::class_representative(&nu.cycle_type);
            let brute = set.fixed_points(&pi, &sigma);
            let closed = alpha_char(family, n, k, &mu.cycle_type, &nu.cycle_type);
            result.check(
                || {
                    format!(
                        "{family} n={n} k={k} classes ({}),({})",
                        mu.cycle_type, nu.cycle_type
                    )
                },
                closed,
                BigInt::from(brute),
            );
        }
    }
    Ok(result)
}

/// Decomposes the brute-force diagonal and two-sided permutation
/// characters into irreducibles by inner products and compares every
/// multiplicity with the closed-form tables.
pub fn verify_multiplicity_by_decomposition(
    family: Family,
    n: usize,
    k: usize,
    budget: u64,
) -> Result<VerificationResult> {
    let set = enumerate_family(family, n, k, budget)?;
    let mut result = VerificationResult::new("decomposition", Some(family), n, Some(k));
    let table = CharTable::for_n(n);
    let lambdas = partitions_of(n);

    let diag_char = ClassFunction::from_fn(n, |class| {
        let rep = Permutation::class_representative(&class.cycle_type);
        BigRational::from(BigInt::from(set.fixed_points(&rep, &rep)))
    });
    let beta_table = BetaTable::build(family, n, k);
    for lambda in &lambdas {
        let brute = diag_char.inner_product(&table.irreducible(lambda));
        result.check(
            || format!("{family} n={n} k={k} beta mult lambda={lambda}"),
            BigRational::from(beta_table.entry(lambda).clone()),
            brute,
        );
    }

    let two_sided_char = ProductClassFunction::from_fn(n, n, |a, b| {
        let pi = Permutation::class_representative(&a.cycle_type);
        let sigma = Permutation::class_representative(&b.cycle_type);
        BigRational::from(BigInt::from(set.fixed_points(&pi, &sigma)))
    });
    let alpha_table = AlphaTable::build(family, n, k);
    for lambda in &lambdas {
        let chi_lambda = table.irreducible(lambda);
        for mu in &lambdas {
            let product = tensor(&chi_lambda, &table.irreducible(mu));
            let brute = two_sided_char.inner_product(&product);
            result.check(
                || format!("{family} n={n} k={k} alpha mult ({lambda}),({mu})"),
                BigRational::from(alpha_table.entry(lambda, mu).clone()),
                brute,
            );
        }
    }
    Ok(result)
}

/// Direct class sum, restricted inner product, and corner-deletion path
/// count for the staircase family agree on every pair and every `k`.
pub fn verify_three_routes(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("three-routes", Some(Family::H), n, None);
    let lambdas = partitions_of(n);
    for lambda in &lambdas {
        for mu in &lambdas {
            for k in 0..=n {
                let direct = alpha_mult_h_direct(lambda, mu, k);
                let branching = alpha_mult_h_branching(lambda, mu, k);
                let paths = alpha_mult_h_paths(lambda, mu, k);
                result.check(
                    || format!("H n={n} k={k} direct vs branching ({lambda}),({mu})"),
                    direct.clone(),
                    branching,
                );
                result.check(
                    || format!("H n={n} k={k} direct vs paths ({lambda}),({mu})"),
                    direct,
                    paths,
                );
            }
        }
    }
    result
}

/// `sum over classes of |C| (n - supp)_k = n!` for every `k <= n`.
pub fn verify_sum_identity(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("sum-identity", None, n, None);
    let classes = classes_of(n);
    for k in 0..=n {
        let mut total = BigInt::from(0);
        for class in &classes {
            total += falling_factorial((n - class.support) as i64, k) * &class.size;
        }
        result.check(|| format!("n={n} k={k} sum identity"), factorial(n), total);
    }
    result
}

/// `m((n), (1^n))` vanishes for `k <= n-2` and equals 1 at the two
/// regular-representation boundary values of `k`.
pub fn verify_hook_extreme_multiplicity(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("hook-extreme", Some(Family::H), n, None);
    let row = Partition::new(vec![n]);
    let column = Partition::new(vec![1; n]);
    for k in 0..=n {
        let expected = BigInt::from(if k + 2 <= n { 0 } else { 1 });
        result.check(
            || format!("H n={n} k={k} m((n),(1^n))"),
            expected,
            alpha_mult_h_branching(&row, &column, k),
        );
    }
    result
}

/// The two-sided tables satisfy `m(λ,μ) = m(μ,λ) = m(λ',μ')`.
pub fn verify_symmetry(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("symmetry", None, n, None);
    for family in [Family::H, Family::X] {
        for k in 0..=n {
            let table = AlphaTable::build(family, n, k);
            result.check_that(
                || format!("{family} n={n} k={k} table symmetry"),
                "m(lambda,mu) = m(mu,lambda) = m(lambda',mu')",
                table.is_symmetric(),
            );
        }
    }
    result
}

/// `m(λ,μ,k) > 0` exactly when the diagram symmetric difference is at
/// most `2k`, in both directions, for the staircase family.
pub fn verify_vanishing(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("vanishing", Some(Family::H), n, None);
    let lambdas = partitions_of(n);
    for lambda in &lambdas {
        for mu in &lambdas {
            let difference = lambda.symmetric_difference(mu);
            for k in 0..=n {
                let positive = alpha_mult_h_branching(lambda, mu, k) > BigInt::from(0);
                result.check(
                    || format!("H n={n} k={k} vanishing ({lambda}),({mu})"),
                    difference <= 2 * k,
                    positive,
                );
            }
        }
    }
    result
}

/// `k = 0` gives the diagonal table; `k = n` gives the regular
/// representation of the square group, with entries `f^λ f^μ`.
pub fn verify_boundary_tables(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("boundary-tables", Some(Family::H), n, None);
    let lambdas = partitions_of(n);
    let smallest = AlphaTable::build(Family::H, n, 0);
    let largest = AlphaTable::build(Family::H, n, n);
    for lambda in &lambdas {
        for mu in &lambdas {
            let delta = BigInt::from(if lambda == mu { 1 } else { 0 });
            result.check(
                || format!("H n={n} k=0 entry ({lambda}),({mu})"),
                delta,
                smallest.entry(lambda, mu).clone(),
            );
            result.check(
                || format!("H n={n} k={n} entry ({lambda}),({mu})"),
                dimension(lambda) * dimension(mu),
                largest.entry(lambda, mu).clone(),
            );
        }
    }
    result
}

/// The Littlewood-Richardson route and the restriction route for the
/// signed family agree on every pair and every `k`.
pub fn verify_x_routes(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("x-routes", Some(Family::X), n, None);
    let lambdas = partitions_of(n);
    for lambda in &lambdas {
        for mu in &lambdas {
            for k in 0..=n {
                result.check(
                    || format!("X n={n} k={k} routes ({lambda}),({mu})"),
                    alpha_mult_x_lr(lambda, mu, k),
                    alpha_mult_x_restriction(lambda, mu, k),
                );
            }
        }
    }
    result
}

/// Multiplicity-weighted dimension sums reproduce each family's size, for
/// both the diagonal and the two-sided tables.
pub fn verify_dimension_identities(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("dimension-identities", None, n, None);
    for family in [Family::H, Family::X, Family::Bn, Family::Y(3)] {
        let ks: Vec<usize> = if family.uses_k() {
            (0..=n).collect()
        } else {
            vec![0]
        };
        for k in ks {
            result.check_that(
                || format!("{family} n={n} k={k} beta dimension sum"),
                "sum of m(lambda) f^lambda equals the family size",
                BetaTable::build(family, n, k).dimension_identity_ok(),
            );
            result.check_that(
                || format!("{family} n={n} k={k} alpha dimension sum"),
                "sum of m(lambda,mu) f^lambda f^mu equals the family size",
                AlphaTable::build(family, n, k).dimension_identity_ok(),
            );
        }
    }
    result
}

/// The product-pairing route through triple coefficients reproduces the
/// staircase diagonal multiplicities, and summing the diagonal triple
/// coefficients over one index reproduces the conjugacy-representation
/// multiplicities.
pub fn verify_gamma_identities(n_max: usize) -> VerificationResult {
    let mut result = VerificationResult::new("gamma-identities", None, n_max, None);
    for n in 1..=n_max.min(GAMMA_ROUTE_CAP) {
        for lambda in partitions_of(n) {
            for k in 0..=n {
                result.check(
                    || format!("n={n} k={k} gamma route lambda={lambda}"),
                    beta_mult_h(&lambda, k),
                    gamma_decomposition_check(&lambda, k),
                );
            }
        }
    }
    for n in 1..=n_max.min(CONJUGACY_COLUMN_CAP) {
        let lambdas = partitions_of(n);
        for lambda in &lambdas {
            let mut total = BigInt::from(0);
            for mu in &lambdas {
                total += kronecker_gamma(lambda, mu, mu);
            }
            result.check(
                || format!("n={n} conjugacy column lambda={lambda}"),
                conjugacy_rep_multiplicity(lambda),
                total,
            );
        }
    }
    result
}

/// Class-wise upper bounds for the colored diagonal characters: the value
/// on a class never exceeds the centralizer order times the identity
/// scale.
pub fn verify_char_bounds(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("char-bounds", None, n, None);
    for class in classes_of(n) {
        let mu = &class.cycle_type;
        for k in 0..=n {
            let x_scale = binomial(n, k);
            result.check_that(
                || format!("X n={n} k={k} class ({mu}) bound"),
                "beta character is at most C(n,k) times the centralizer order",
                beta_char_x(n, k, mu) <= &x_scale * &class.centralizer,
            );
            let y_scale = x_scale * BigInt::from(2).pow(k as u32);
            result.check_that(
                || format!("Y(r=3) n={n} k={k} class ({mu}) bound"),
                "beta character is at most C(n,k)(r-1)^k times the centralizer order",
                beta_char_y(n, 3, k, mu) <= y_scale * &class.centralizer,
            );
        }
    }
    result
}

/// The square-to-single projection has all fibers of size `(n)_k`, with
/// image all of `S_n`, checked over the full enumerated orbit.
pub fn verify_t_fibers(n: usize, k: usize, budget: u64) -> Result<VerificationResult> {
    let orbit = enumerate_h(n, k, budget)?;
    let mut result = VerificationResult::new("t-fibers", Some(Family::H), n, Some(k));
    let mut counts: BTreeMap<Permutation, u64> = BTreeMap::new();
    for a in &orbit {
        let image = t_map(a, k).expect("orbit members factor");
        *counts.entry(image).or_insert(0) += 1;
    }
    result.check(
        || format!("H n={n} k={k} image count"),
        factorial(n),
        BigInt::from(counts.len()),
    );
    let fiber = falling_factorial(n as i64, k);
    for (image, count) in counts {
        result.check(
            || format!("H n={n} k={k} fiber over {image}"),
            fiber.clone(),
            BigInt::from(count),
        );
    }
    Ok(result)
}

/// Character-table health: the identity column matches the hook-length
/// dimensions, rows are orthonormal, and squared dimensions sum to `n!`.
pub fn verify_char_table_health(n: usize) -> VerificationResult {
    let mut result = VerificationResult::new("char-health", None, n, None);
    let table = CharTable::for_n(n);
    let identity = Partition::new(vec![1; n]);
    let mut squares = BigInt::from(0);
    for lambda in table.partitions() {
        let f = dimension(lambda);
        result.check(
            || format!("n={n} identity column lambda={lambda}"),
            f.clone(),
            table.chi(lambda, &identity).clone(),
        );
        squares += &f * &f;
    }
    result.check(
        || format!("n={n} squared dimension sum"),
        factorial(n),
        squares,
    );
    for lambda in table.partitions() {
        let chi_lambda = table.irreducible(lambda);
        for mu in table.partitions() {
            let delta = BigRational::from(BigInt::from(if lambda == mu { 1 } else { 0 }));
            result.check(
                || format!("n={n} row orthogonality ({lambda}),({mu})"),
                delta,
                chi_lambda.inner_product(&table.irreducible(mu)),
            );
        }
    }
    result
}

/// The grab-bag identity suite: sum identity and extreme-hook vanishing up
/// to `n_max`, and symmetry, vanishing, triple-coefficient, and fiber
/// checks up to their module caps.
pub fn verify_identities(n_max: usize, budget: u64) -> Result<VerificationResult> {
    let mut result = VerificationResult::new("identities", None, n_max, None);
    for n in 1..=n_max {
        result.merge(verify_sum_identity(n));
        result.merge(verify_hook_extreme_multiplicity(n));
    }
    for n in 1..=n_max.min(SYMMETRY_CAP) {
        result.merge(verify_symmetry(n));
    }
    for n in 1..=n_max.min(VANISHING_CAP) {
        result.merge(verify_vanishing(n));
    }
    result.merge(verify_gamma_identities(n_max));
    for n in 1..=n_max.min(FIBER_CAP) {
        for k in 0..=n {
            if Family::H.size(n, k) > BigInt::from(budget) {
                continue;
            }
            result.merge(verify_t_fibers(n, k, budget)?);
        }
    }
    result.suite = "identities".to_string();
    result.n = n_max;
    result.k = None;
    Ok(result)
}

/// All families a ranged suite covers.
const SUITE_FAMILIES: [Family; 4] = [Family::H, Family::X, Family::Y(3), Family::Bn];

fn ranged_suite(
    suite: &str,
    n_max: usize,
    budget: u64,
    run: impl Fn(Family, usize, usize, u64) -> Result<VerificationResult>,
) -> Result<Vec<VerificationResult>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for family in SUITE_FAMILIES {
            let mut aggregate = VerificationResult::new(suite, Some(family), n, None);
            let ks: Vec<usize> = if family.uses_k() {
                (0..=n).collect()
            } else {
                vec![0]
            };
            let mut ran = false;
            for k in ks {
                if family.size(n, k) > BigInt::from(budget) {
                    continue;
                }
                aggregate.merge(run(family, n, k, budget)?);
                ran = true;
            }
            aggregate.k = None;
            if ran {
                out.push(aggregate);
            }
        }
    }
    Ok(out)
}

/// Closed-form cross-checks that need no enumeration: three-route and
/// signed-route agreement, boundary tables, dimension identities,
/// character bounds, and character-table health.
fn suite_closed_forms(n_max: usize) -> Vec<VerificationResult> {
    let mut out = Vec::new();
    for n in 1..=n_max.min(THREE_ROUTE_CAP) {
        out.push(verify_three_routes(n));
    }
    for n in 1..=n_max.min(BOUNDARY_CAP) {
        out.push(verify_boundary_tables(n));
    }
    for n in 1..=n_max.min(X_ROUTE_CAP) {
        out.push(verify_x_routes(n));
    }
    for n in 1..=n_max.min(DIMENSION_CAP) {
        out.push(verify_dimension_identities(n));
    }
    for n in 1..=n_max {
        out.push(verify_char_bounds(n));
        out.push(verify_char_table_health(n));
    }
    out
}

/// Runs a named suite up to `n_max`, skipping any enumeration whose
/// closed-form size exceeds `budget`.
///
/// Suites: `orbit-sizes`, `orbit-chars`, `decomposition`, `identities`,
/// `closed-forms`, and `all` (which runs every other suite in order).
pub fn run_suite(suite: &str, n_max: usize, budget: u64) -> Result<Vec<VerificationResult>> {
    match suite {
        "orbit-sizes" => ranged_suite("orbit-sizes", n_max, budget, verify_orbit_sizes),
        "orbit-chars" => ranged_suite("orbit-chars", n_max, budget, verify_alpha_char),
        "decomposition" => ranged_suite(
            "decomposition",
            n_max,
            budget,
            verify_multiplicity_by_decomposition,
        ),
        "identities" => Ok(vec![verify_identities(n_max, budget)?]),
        "closed-forms" => Ok(suite_closed_forms(n_max)),
        "all" => {
            let mut out = run_suite("orbit-sizes", n_max, budget)?;
            out.extend(run_suite("orbit-chars", n_max, budget)?);
            out.extend(run_suite("decomposition", n_max, budget)?);
            out.extend(run_suite("identities", n_max, budget)?);
            out.extend(run_suite("closed-forms", n_max, budget)?);
            Ok(out)
        }
        other => Err(Error::Unsupported(format!(
            "unknown suite '{other}'; valid suites are orbit-sizes, orbit-chars, decomposition, identities, closed-forms, all"
        ))),
    }
}
