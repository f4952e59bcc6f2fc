//! Exact character theory for symmetric groups.
//!
//! Character values come from the border-strip recursion, dimensions from
//! the hook-length formula, and everything downstream (inner products,
//! restriction pairings, deletion-path counts, Kronecker coefficients,
//! Littlewood-Richardson coefficients) is computed in exact rational
//! arithmetic. Quantities that must be integers are checked and returned
//! as integers; a failed check panics, because it means a bug rather than
//! bad input.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::factorial;
use crate::classes::{class_size, classes_of, ClassData};
use crate::partition::{partitions_of, Partition};

/// Asserts that an exactly computed rational is an integer and unwraps it.
pub(crate) fn expect_integer(r: &BigRational, context: &str) -> BigInt {
    assert!(r.is_integer(), "non-integer {context}: {r}");
    r.to_integer()
}

type Memo = HashMap<(Vec<usize>, Vec<usize>), BigInt>;

/// Border-strip recursion on shifted first-column lengths ("beta numbers"):
/// removing a strip of length `t` replaces one beta number `b` by `b - t`,
/// and the sign is `(-1)^(number of beta numbers crossed)`.
fn chi_rec(lambda: &[usize], mu: &[usize], memo: &mut Memo) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let t = mu[0];
    let rows = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (rows - 1 - i))
        .collect();
    let mut total = BigInt::zero();
    for i in 0..rows {
        if beta[i] < t {
            continue;
        }
        let target = beta[i] - t;
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&b| target < b && b < beta[i]).count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let smaller: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (rows - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sub = chi_rec(&smaller, &mu[1..], memo);
        if crossed % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// The irreducible character value `χ_λ(μ)`, for `λ, μ` partitions of the
/// same `n`. Cycles are consumed longest first.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> BigInt {
    assert_eq!(lambda.sum(), mu.sum(), "partition sizes differ");
    chi_rec(lambda.parts(), mu.parts(), &mut Memo::new())
}

/// The dimension `f^λ` by the hook-length formula.
pub fn dimension(lambda: &Partition) -> BigInt {
    let n = lambda.sum();
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 0..p {
            hooks *= p - j + conj.part(j) - i - 1;
        }
    }
    factorial(n) / hooks
}

/// The full character table of `S_n`, rows and columns in the canonical
/// partition order.
pub struct CharTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    classes: Vec<ClassData>,
    values: Vec<Vec<BigInt>>,
}

impl CharTable {
    /// Computes the table of `S_n`, sharing one memo across all entries.
    pub fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let classes = classes_of(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo = Memo::new();
        let values = partitions
            .iter()
            .map(|lam| {
                classes
                    .iter()
                    .map(|c| chi_rec(lam.parts(), c.cycle_type.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharTable {
            n,
            partitions,
            index,
            classes,
            values,
        }
    }

    /// The table of `S_n` from a process-wide cache.
    pub fn for_n(n: usize) -> Arc<CharTable> {
        static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
        let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = tables.lock().unwrap();
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(CharTable::new(n)))
            .clone()
    }

    /// The degree of the group.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels, in canonical order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Class data parallel to [`CharTable::partitions`].
    pub fn classes(&self) -> &[ClassData] {
        &self.classes
    }

    /// Position of a partition among the labels.
    pub fn index_of(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }

    /// `χ_λ(μ)`.
    pub fn chi(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.values[self.index[lambda]][self.index[mu]]
    }

    /// `χ_λ(μ)` by row and column position.
    pub fn chi_by_index(&self, lambda: usize, mu: usize) -> &BigInt {
        &self.values[lambda][mu]
    }

    /// The irreducible character `χ_λ` as a class function.
    pub fn irreducible(&self, lambda: &Partition) -> ClassFunction {
        let row = self.index[lambda];
        let values = self
            .partitions
            .iter()
            .enumerate()
            .map(|(c, mu)| (mu.clone(), BigRational::from(self.values[row][c].clone())))
            .collect();
        ClassFunction { n: self.n, values }
    }

    /// Checks both orthogonality relations exactly.
    pub fn orthogonality_ok(&self) -> bool {
        let count = self.partitions.len();
        let group_order = factorial(self.n);
        // Row orthogonality: sum_C |C| χ_λ(C) χ_ν(C) = n! δ_{λν}.
        for a in 0..count {
            for b in a..count {
                let mut acc = BigInt::zero();
                for (c, data) in self.classes.iter().enumerate() {
                    acc += &data.size * &self.values[a][c] * &self.values[b][c];
                }
                let expected = if a == b {
                    group_order.clone()
                } else {
                    BigInt::zero()
                };
                if acc != expected {
                    return false;
                }
            }
        }
        // Column orthogonality: sum_λ χ_λ(C) χ_λ(D) = z_C δ_{CD}.
        for c in 0..count {
            for d in c..count {
                let mut acc = BigInt::zero();
                for row in &self.values {
                    acc += &row[c] * &row[d];
                }
                let expected = if c == d {
                    self.classes[c].centralizer.clone()
                } else {
                    BigInt::zero()
                };
                if acc != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// A class function on `S_n` with exact rational values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    /// The zero function on `S_n`.
    pub fn zero(n: usize) -> Self {
        ClassFunction {
            n,
            values: BTreeMap::new(),
        }
    }

    /// Builds a class function by evaluating `f` on every class.
    pub fn from_fn(n: usize, mut f: impl FnMut(&ClassData) -> BigRational) -> Self {
        let values = classes_of(n)
            .iter()
            .map(|c| (c.cycle_type.clone(), f(c)))
            .collect();
        ClassFunction { n, values }
    }

    /// The degree of the group.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The value on the class labelled `mu` (zero when never set).
    pub fn value(&self, mu: &Partition) -> BigRational {
        assert_eq!(mu.sum(), self.n, "class of the wrong group");
        self.values
            .get(mu)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Sets the value on one class.
    pub fn set(&mut self, mu: Partition, value: BigRational) {
        assert_eq!(mu.sum(), self.n, "class of the wrong group");
        self.values.insert(mu, value);
    }

    /// The invariant pairing `(1/n!) sum_π φ(π) ψ(π)`, summed class-wise.
    ///
    /// Values of the characters in this crate are integers, so no
    /// conjugation is applied to either factor.
    pub fn inner_product(&self, other: &ClassFunction) -> BigRational {
        assert_eq!(self.n, other.n, "class functions on different groups");
        let mut acc = BigRational::zero();
        for data in classes_of(self.n) {
            let phi = self.value(&data.cycle_type);
            let psi = other.value(&data.cycle_type);
            acc += phi * psi * BigRational::from(data.size);
        }
        acc / BigRational::from(factorial(self.n))
    }

    /// `⟨φ, φ⟩`.
    pub fn norm_squared(&self) -> BigRational {
        self.inner_product(self)
    }
}

/// A class function on `S_k x S_m` with exact rational values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductClassFunction {
    k: usize,
    m: usize,
    values: BTreeMap<(Partition, Partition), BigRational>,
}

impl ProductClassFunction {
    /// Builds a class function on `S_k x S_m` by evaluating `f` on every
    /// pair of classes.
    pub fn from_fn(
        k: usize,
        m: usize,
        mut f: impl FnMut(&ClassData, &ClassData) -> BigRational,
    ) -> Self {
        let mut values = BTreeMap::new();
        for a in classes_of(k) {
            for b in classes_of(m) {
                values.insert((a.cycle_type.clone(), b.cycle_type.clone()), f(&a, &b));
            }
        }
        ProductClassFunction { k, m, values }
    }

    /// The factor degrees `(k, m)`.
    pub fn degrees(&self) -> (usize, usize) {
        (self.k, self.m)
    }

    /// The value on the class labelled `(alpha, beta)`.
    pub fn value(&self, alpha: &Partition, beta: &Partition) -> BigRational {
        self.values
            .get(&(alpha.clone(), beta.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The invariant pairing over `S_k x S_m`.
    pub fn inner_product(&self, other: &ProductClassFunction) -> BigRational {
        assert_eq!((self.k, self.m), (other.k, other.m), "different groups");
        let mut acc = BigRational::zero();
        for a in classes_of(self.k) {
            for b in classes_of(self.m) {
                let phi = self.value(&a.cycle_type, &b.cycle_type);
                let psi = other.value(&a.cycle_type, &b.cycle_type);
                acc += phi * psi * BigRational::from(&a.size * &b.size);
            }
        }
        acc / BigRational::from(factorial(self.k) * factorial(self.m))
    }
}

/// Restricts `χ_λ` to `S_k x S_{n-k}` embedded on `{1..k}` and `{k+1..n}`:
/// the value on `(alpha, beta)` is `χ_λ(alpha ∪ beta)`.
pub fn restrict_to_product(lambda: &Partition, k: usize) -> ProductClassFunction {
    let n = lambda.sum();
    assert!(k <= n, "k exceeds n");
    let table = CharTable::for_n(n);
    ProductClassFunction::from_fn(k, n - k, |a, b| {
        BigRational::from(
            table
                .chi(lambda, &a.cycle_type.union(&b.cycle_type))
                .clone(),
        )
    })
}

/// The outer tensor product of class functions on `S_k` and `S_m`.
pub fn tensor(f: &ClassFunction, g: &ClassFunction) -> ProductClassFunction {
    ProductClassFunction::from_fn(f.n(), g.n(), |a, b| {
        f.value(&a.cycle_type) * g.value(&b.cycle_type)
    })
}

/// `ν` padded with fixed points up to degree `ν.sum() + ones`.
fn pad_with_ones(nu: &Partition, ones: usize) -> Partition {
    nu.union(&Partition::new(vec![1; ones]))
}

/// The pairing `⟨χ_λ↓, χ_μ↓⟩` of two characters of `S_n` restricted to an
/// embedded `S_m` (the remaining `n - m` points held fixed).
pub fn restricted_inner_product(lambda: &Partition, mu: &Partition, m: usize) -> BigInt {
    let n = lambda.sum();
    assert_eq!(mu.sum(), n, "partition sizes differ");
    assert!(m <= n, "m exceeds n");
    let table = CharTable::for_n(n);
    let mut acc = BigRational::zero();
    for nu in partitions_of(m) {
        let padded = pad_with_ones(&nu, n - m);
        let product = table.chi(lambda, &padded) * table.chi(mu, &padded);
        acc += BigRational::from(product * class_size(&nu));
    }
    acc /= BigRational::from(factorial(m));
    expect_integer(&acc, "restricted inner product")
}

/// For every `ν` reachable from `λ` by deleting `k` corner cells one at a
/// time, the number of distinct deletion orders reaching it.
pub fn deletion_path_counts(lambda: &Partition, k: usize) -> BTreeMap<Partition, BigInt> {
    assert!(
        k <= lambda.sum(),
        "cannot delete more cells than the diagram has"
    );
    let mut current = BTreeMap::from([(lambda.clone(), BigInt::one())]);
    for _ in 0..k {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (shape, count) in current {
            for smaller in shape.removals() {
                *next.entry(smaller).or_insert_with(BigInt::zero) += &count;
            }
        }
        current = next;
    }
    current
}

/// `sum_ν P(λ→ν) P(μ→ν)` over partitions `ν` of `n - k`, where `P` counts
/// ordered `k`-step corner deletions.
pub fn deletion_paths_count(lambda: &Partition, mu: &Partition, k: usize) -> BigInt {
    assert_eq!(lambda.sum(), mu.sum(), "partition sizes differ");
    let from_lambda = deletion_path_counts(lambda, k);
    let from_mu = deletion_path_counts(mu, k);
    let mut acc = BigInt::zero();
    for (nu, a) in &from_lambda {
        if let Some(b) = from_mu.get(nu) {
            acc += a * b;
        }
    }
    acc
}

/// The Kronecker coefficient `γ_{λμν} = ⟨χ_λ χ_μ, χ_ν⟩`.
pub fn kronecker_gamma(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    let n = lambda.sum();
    assert!(mu.sum() == n && nu.sum() == n, "partition sizes differ");
    let table = CharTable::for_n(n);
    let mut acc = BigRational::zero();
    for data in table.classes() {
        let c = &data.cycle_type;
        let product = table.chi(lambda, c) * table.chi(mu, c) * table.chi(nu, c);
        acc += BigRational::from(product * &data.size);
    }
    acc /= BigRational::from(factorial(n));
    let out = expect_integer(&acc, "Kronecker coefficient");
    assert!(!out.is_negative(), "negative Kronecker coefficient");
    out
}

/// The Littlewood-Richardson coefficient `c^λ_{ρν}`, computed by pairing
/// `χ_λ` restricted to `S_k x S_{n-k}` with `χ_ρ ⊗ χ_ν`.
pub fn littlewood_richardson(lambda: &Partition, rho: &Partition, nu: &Partition) -> BigInt {
    let n = lambda.sum();
    let k = rho.sum();
    assert_eq!(k + nu.sum(), n, "inner shapes do not fill the outer shape");
    let restricted = restrict_to_product(lambda, k);
    let product = tensor(
        &CharTable::for_n(k).irreducible(rho),
        &CharTable::for_n(n - k).irreducible(nu),
    );
    let out = expect_integer(
        &restricted.inner_product(&product),
        "Littlewood-Richardson coefficient",
    );
    assert!(
        !out.is_negative(),
        "negative Littlewood-Richardson coefficient"
    );
    out
}
