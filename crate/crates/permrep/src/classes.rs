//! Conjugacy-class arithmetic for symmetric groups, keyed by cycle type.

use num_bigint::BigInt;

use crate::arith::factorial;
use crate::partition::{partitions_of, Partition};

/// Size data for one conjugacy class of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    /// The cycle type labelling the class.
    pub cycle_type: Partition,
    /// Number of elements in the class: `n! / centralizer`.
    pub size: BigInt,
    /// Order of the centralizer of any class member.
    pub centralizer: BigInt,
    /// Number of non-fixed points of any class member.
    pub support: usize,
}

/// The centralizer order `z_λ = prod_i i^{m_i} m_i!` for cycle type `λ`.
pub fn centralizer_size(cycle_type: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    for (value, count) in cycle_type.multiplicities() {
        for _ in 0..count {
            z *= value;
        }
        z *= factorial(count);
    }
    z
}

/// The number of permutations in `S_n` with the given cycle type.
pub fn class_size(cycle_type: &Partition) -> BigInt {
    factorial(cycle_type.sum()) / centralizer_size(cycle_type)
}

/// Bundles size, centralizer order and support for one cycle type.
pub fn class_data(cycle_type: &Partition) -> ClassData {
    let n = cycle_type.sum();
    let centralizer = centralizer_size(cycle_type);
    let fixed = cycle_type
        .multiplicities()
        .iter()
        .find(|&&(v, _)| v == 1)
        .map_or(0, |&(_, m)| m);
    ClassData {
        cycle_type: cycle_type.clone(),
        size: factorial(n) / &centralizer,
        centralizer,
        support: n - fixed,
    }
}

/// Class data for every class of `S_n`, in the canonical partition order.
pub fn classes_of(n: usize) -> Vec<ClassData> {
    partitions_of(n).iter().map(class_data).collect()
}
