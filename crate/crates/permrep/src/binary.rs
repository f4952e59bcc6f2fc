//! Invertible (0,1)-matrices over GF(2) under the two-sided action of
//! `S_n x S_n`, and the staircase family `H_n^k`.
//!
//! The pair `(pi, sigma)` acts by `A -> P_pi A P_sigma^{-1}`, which moves
//! row `i` to row `pi(i)` and column `j` to column `sigma(j)`. `H_n^k` is
//! the set of invertible matrices whose sorted row sums are
//! `(n, n-1, ..., n-k+1, 1, ..., 1)` and sorted column sums are
//! `(k+1, ..., k+1, k, k-1, ..., 1)`; it is exactly the orbit of the
//! staircase matrix [`u_matrix`] and has `n! (n)_k` elements.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{factorial, falling_factorial};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;

/// A square (0,1)-matrix with bit-packed rows; at most 64 columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BinaryMatrix {
    n: usize,
    /// Bit `j` of `rows[i]` is the entry in row `i`, column `j`.
    rows: Vec<u64>,
}

/// Row and column sums of a matrix, each sorted decreasingly with zero
/// sums dropped, so both sides partition the number of ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Profile {
    /// Sorted row sums.
    pub eta: Partition,
    /// Sorted column sums.
    pub theta: Partition,
}

/// Bits `lo..hi` set, for `hi <= 64`.
fn range_mask(lo: usize, hi: usize) -> u64 {
    if hi - lo == 64 {
        !0
    } else {
        ((1u64 << (hi - lo)) - 1) << lo
    }
}

impl BinaryMatrix {
    /// The `n x n` zero matrix.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1 && n <= 64, "supported sizes are 1..=64");
        BinaryMatrix {
            n,
            rows: vec![0; n],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows written as strings of `0`/`1` characters.
    ///
    /// Panics on ragged or non-binary input; use [`parse_matrix_file`] for
    /// untrusted text.
    pub fn from_bit_strings(rows: &[&str]) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has the wrong length");
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => panic!("entry must be 0 or 1, got {ch:?}"),
                }
            }
        }
        m
    }

    /// The number of rows (and columns).
    pub fn n(&self) -> usize {
        self.n
    }

    /// The entry in row `i`, column `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    /// Sets the entry in row `i`, column `j` (0-based).
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.n && j < self.n, "entry out of range");
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Row sums, in row order.
    pub fn row_sums(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// Column sums, in column order.
    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.n)
            .map(|j| self.rows.iter().filter(|r| *r >> j & 1 == 1).count())
            .collect()
    }

    /// The sorted row/column sums.
    pub fn profile(&self) -> Profile {
        let sort = |mut v: Vec<usize>| {
            v.retain(|&s| s > 0);
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v)
        };
        Profile {
            eta: sort(self.row_sums()),
            theta: sort(self.col_sums()),
        }
    }

    /// Whether the matrix is invertible over GF(2).
    pub fn is_invertible(&self) -> bool {
        let mut rows = self.rows.clone();
        for col in 0..self.n {
            let Some(pivot) = (col..self.n).find(|&r| rows[r] >> col & 1 == 1) else {
                return false;
            };
            rows.swap(col, pivot);
            for r in col + 1..self.n {
                if rows[r] >> col & 1 == 1 {
                    rows[r] ^= rows[col];
                }
            }
        }
        true
    }

    /// The GF(2) matrix product `self * other`.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "size mismatch");
        let rows = self
            .rows
            .iter()
            .map(|&row| {
                let mut acc = 0u64;
                let mut bits = row;
                while bits != 0 {
                    acc ^= other.rows[bits.trailing_zeros() as usize];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        BinaryMatrix { n: self.n, rows }
    }

    /// The inverse over GF(2), or `None` for singular matrices.
    pub fn inverse(&self) -> Option<Self> {
        let mut rows = self.rows.clone();
        let mut inv = Self::identity(self.n).rows;
        for col in 0..self.n {
            let pivot = (col..self.n).find(|&r| rows[r] >> col & 1 == 1)?;
            rows.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..self.n {
                if r != col && rows[r] >> col & 1 == 1 {
                    rows[r] ^= rows[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(BinaryMatrix {
            n: self.n,
            rows: inv,
        })
    }

    /// The transpose.
    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.n);
        for i in 0..self.n {
            let mut bits = self.rows[i];
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                m.set(j, i, true);
                bits &= bits - 1;
            }
        }
        m
    }

    /// Moves row `i` to row `pi(i)` for every `i`.
    pub fn permute_rows(&self, pi: &Permutation) -> Self {
        assert_eq!(pi.n(), self.n, "degree mismatch");
        let mut rows = vec![0u64; self.n];
        for (i, &row) in self.rows.iter().enumerate() {
            rows[pi.apply0(i)] = row;
        }
        BinaryMatrix { n: self.n, rows }
    }

    /// Moves column `j` to column `sigma(j)` for every `j`.
    pub fn permute_cols(&self, sigma: &Permutation) -> Self {
        assert_eq!(sigma.n(), self.n, "degree mismatch");
        let rows = self
            .rows
            .iter()
            .map(|&row| {
                let mut out = 0u64;
                let mut bits = row;
                while bits != 0 {
                    let j = bits.trailing_zeros() as usize;
                    out |= 1 << sigma.apply0(j);
                    bits &= bits - 1;
                }
                out
            })
            .collect();
        BinaryMatrix { n: self.n, rows }
    }

    /// Reads the matrix back as a permutation, if it is a permutation
    /// matrix. The convention matches [`permutation_matrix`]: a one in row
    /// `i`, column `j` means `j + 1` maps to `i + 1`.
    pub fn to_permutation(&self) -> Option<Permutation> {
        let mut images = vec![0usize; self.n];
        let mut seen = vec![false; self.n];
        for (i, &row) in self.rows.iter().enumerate() {
            if row.count_ones() != 1 {
                return None;
            }
            let j = row.trailing_zeros() as usize;
            if seen[j] {
                return None;
            }
            seen[j] = true;
            images[j] = i + 1;
        }
        Permutation::from_one_line(images).ok()
    }
}

impl fmt::Display for BinaryMatrix {
    /// Rows of contiguous `0`/`1` characters, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            if i + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// The matrix of `pi`: one at `(i, j)` exactly when `pi(j) = i`.
pub fn permutation_matrix(pi: &Permutation) -> BinaryMatrix {
    let mut m = BinaryMatrix::zero(pi.n());
    for j in 0..pi.n() {
        m.set(pi.apply0(j), j, true);
    }
    m
}

/// The action of `(pi, sigma)`: rows move by `pi`, columns by `sigma`.
pub fn act(pi: &Permutation, sigma: &Permutation, a: &BinaryMatrix) -> BinaryMatrix {
    a.permute_rows(pi).permute_cols(sigma)
}

/// The diagonal action of `pi`: conjugation `P_pi A P_pi^{-1}`.
pub fn conjugate(pi: &Permutation, a: &BinaryMatrix) -> BinaryMatrix {
    act(pi, pi, a)
}

/// The staircase matrix `U_{n,k}`: row `i < k` has ones from column `i`
/// rightwards; the remaining rows are identity rows.
pub fn u_matrix(n: usize, k: usize) -> BinaryMatrix {
    assert!(k <= n, "k exceeds n");
    let mut m = BinaryMatrix::zero(n);
    for i in 0..k {
        m.rows[i] = range_mask(i, n);
    }
    for j in k..n {
        m.set(j, j, true);
    }
    m
}

/// [`u_matrix`] with its upper-right `k x (n-k)` ones block zeroed, so row
/// `i < k` stops at column `k - 1`.
///
/// For `k != 1` the orbit of this matrix is equivariantly isomorphic to
/// `H_n^k` (both stabilizers are the diagonal copies of `S_{n-k}` on the
/// last points). For `k = 1` the construction degenerates: the single
/// shortened row becomes an identity row, the whole matrix collapses to the
/// identity, and the orbit is the set of permutation matrices of size `n!`
/// rather than `n! (n)_1`.
pub fn u_matrix_zero_variant(n: usize, k: usize) -> BinaryMatrix {
    assert!(k <= n, "k exceeds n");
    let mut m = BinaryMatrix::zero(n);
    for i in 0..k {
        m.rows[i] = range_mask(i, k);
    }
    for j in k..n {
        m.set(j, j, true);
    }
    m
}

/// The row/column profile shared by every member of `H_n^k`.
pub fn h_profile(n: usize, k: usize) -> Profile {
    assert!(k <= n, "k exceeds n");
    let mut eta: Vec<usize> = (n - k + 1..=n).rev().collect();
    eta.extend(std::iter::repeat(1).take(n - k));
    let mut theta: Vec<usize> = vec![k + 1; n - k];
    theta.extend((1..=k).rev());
    Profile {
        eta: Partition::new(eta),
        theta: Partition::new(theta),
    }
}

/// Membership in `H_n^k`: the profile matches and the matrix is invertible.
pub fn is_member_h(a: &BinaryMatrix, k: usize) -> bool {
    k <= a.n() && a.profile() == h_profile(a.n(), k) && a.is_invertible()
}

/// `|H_n^k| = n! (n)_k`.
pub fn orbit_size_h(n: usize, k: usize) -> BigInt {
    factorial(n) * falling_factorial(n as i64, k)
}

/// A factorization `A = P_pi U_{n,k} P_sigma` of a member of `H_n^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    /// Row-side witness.
    pub pi: Permutation,
    /// Column-side witness.
    pub sigma: Permutation,
    /// The staircase parameter.
    pub k: usize,
}

impl Factorization {
    /// Recomputes `P_pi U_{n,k} P_sigma`.
    pub fn reconstruct(&self) -> BinaryMatrix {
        // Right multiplication by P_sigma moves column j to sigma^{-1}(j).
        act(
            &self.pi,
            &self.sigma.invert(),
            &u_matrix(self.pi.n(), self.k),
        )
    }
}

/// Factors a member of `H_n^k` through the staircase matrix, reversing the
/// reduction that moves the unique all-ones row up and the unique
/// single-one column left, one staircase step at a time. The permutation
/// block left in the lower-right corner is absorbed into `sigma`, so
/// `canonicalize(u_matrix(n, k))` is a pair of identities.
pub fn canonicalize(a: &BinaryMatrix, k: usize) -> Result<Factorization> {
    let n = a.n();
    if k > n {
        return Err(Error::NotInFamily {
            family: format!("H_{n}^{k}"),
            reason: format!("k = {k} exceeds n = {n}"),
        });
    }
    let expected = h_profile(n, k);
    let profile = a.profile();
    if profile != expected {
        return Err(Error::NotInFamily {
            family: format!("H_{n}^{k}"),
            reason: format!(
                "profile is ({}; {}), members have ({}; {})",
                profile.eta, profile.theta, expected.eta, expected.theta
            ),
        });
    }
    if !a.is_invertible() {
        return Err(Error::NotInFamily {
            family: format!("H_{n}^{k}"),
            reason: "matrix is singular over GF(2)".into(),
        });
    }

    let mut m = a.clone();
    let mut p = Permutation::identity(n);
    let mut q = Permutation::identity(n);
    for step in 0..k {
        // The submatrix on rows/columns step.. is a member of
        // H_{n-step}^{k-step}; its all-ones row and single-one column are
        // unique because the profile pins one row of each length.
        let mask = range_mask(step, n);
        let row = (step..n).find(|&r| m.rows[r] & mask == mask);
        let row = row.expect("member matrix lost its full row");
        if row != step {
            m.rows.swap(step, row);
            p = Permutation::transposition(n, step + 1, row + 1).compose(&p);
        }
        let col = (step..n)
            .find(|&c| m.get(step, c) && (step + 1..n).all(|r| !m.get(r, c)))
            .expect("member matrix lost its single-one column");
        if col != step {
            for r in 0..n {
                let a_bit = m.get(r, step);
                let b_bit = m.get(r, col);
                m.set(r, step, b_bit);
                m.set(r, col, a_bit);
            }
            q = q.compose(&Permutation::transposition(n, step + 1, col + 1));
        }
    }

    // What remains below the staircase must be a permutation block.
    let u = u_matrix(n, k);
    for i in 0..k {
        assert_eq!(m.rows[i], u.rows[i], "staircase row {i} failed to form");
    }
    let mut residual_images = vec![0usize; n - k];
    let mut seen = vec![false; n - k];
    for j in k..n {
        let mut hit = None;
        for i in k..n {
            if m.get(i, j) {
                assert!(hit.is_none(), "residual block is not a permutation matrix");
                hit = Some(i);
            }
        }
        let i = hit.expect("residual block is not a permutation matrix");
        assert!(!seen[i - k], "residual block is not a permutation matrix");
        seen[i - k] = true;
        residual_images[j - k] = i - k;
    }
    let mut embedded: Vec<usize> = (1..=k).collect();
    embedded.extend(residual_images.iter().map(|&i| i + k + 1));
    let residual = Permutation::from_one_line(embedded).expect("residual block permutation");

    let fact = Factorization {
        pi: p.invert(),
        sigma: residual.compose(&q.invert()),
        k,
    };
    debug_assert_eq!(
        fact.reconstruct(),
        *a,
        "factorization failed to reconstruct"
    );
    Ok(fact)
}

/// The orbit-to-group map: the product `pi . sigma` of any factorization
/// `A = P_pi U_{n,k} P_sigma`. Every fiber has exactly `(n)_k` elements.
pub fn t_map(a: &BinaryMatrix, k: usize) -> Result<Permutation> {
    let fact = canonicalize(a, k)?;
    Ok(fact.pi.compose(&fact.sigma))
}

/// Breadth-first closure of `seed` under row and column swaps of adjacent
/// indices. Fails once more than `budget` matrices are found; the error's
/// `needed` field then reports the count reached, a lower bound on the
/// true orbit size.
pub fn enumerate_orbit(seed: &BinaryMatrix, budget: u64) -> Result<Vec<BinaryMatrix>> {
    let n = seed.n();
    let generators = Permutation::adjacent_transpositions(n);
    let identity = Permutation::identity(n);
    let mut visited = HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(m) = queue.pop_front() {
        for g in &generators {
            for next in [act(g, &identity, &m), act(&identity, g, &m)] {
                if visited.contains(&next) {
                    continue;
                }
                if visited.len() as u64 >= budget {
                    return Err(Error::BudgetExceeded {
                        needed: visited.len() as u128 + 1,
                        budget,
                    });
                }
                visited.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<BinaryMatrix> = visited.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Enumerates `H_n^k` by closing the staircase matrix under the action.
/// The exact size `n! (n)_k` is checked against `budget` before starting.
pub fn enumerate_h(n: usize, k: usize, budget: u64) -> Result<Vec<BinaryMatrix>> {
    let size = orbit_size_h(n, k);
    if size > BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: size.to_u128().unwrap_or(u128::MAX),
            budget,
        });
    }
    let orbit = enumerate_orbit(&u_matrix(n, k), budget)?;
    assert_eq!(
        BigInt::from(orbit.len()),
        size,
        "H_{n}^{k} enumeration size"
    );
    Ok(orbit)
}

/// Parses the plain-text matrix format: a header line `n k`, then `n`
/// lines of `n` contiguous `0`/`1` characters.
pub fn parse_matrix_file(text: &str) -> Result<(BinaryMatrix, usize)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!(
            "expected header `n k`, got {header:?}"
        )));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| Error::Parse(format!("bad n {:?}", fields[0])))?;
    let k: usize = fields[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad k {:?}", fields[1])))?;
    if n < 1 || n > 64 {
        return Err(Error::Unsupported(format!(
            "matrix size {n} outside supported range 1..=64"
        )));
    }
    if k > n {
        return Err(Error::Parse(format!("k = {k} exceeds n = {n}")));
    }
    let mut m = BinaryMatrix::zero(n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing matrix row {}", i + 1)))?
            .trim();
        if line.len() != n {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                line.len()
            )));
        }
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => m.set(i, j, true),
                _ => {
                    return Err(Error::Parse(format!(
                        "row {} column {} must be 0 or 1, got {ch:?}",
                        i + 1,
                        j + 1
                    )))
                }
            }
        }
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after matrix rows".into()));
    }
    Ok((m, k))
}

/// Renders the plain-text matrix format accepted by [`parse_matrix_file`].
pub fn render_matrix_file(a: &BinaryMatrix, k: usize) -> String {
    format!("{} {}\n{}\n", a.n(), k, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_member() -> BinaryMatrix {
        BinaryMatrix::from_bit_strings(&["1000", "1110", "0010", "1111"])
    }

    #[test]
    fn staircase_matrices() {
        assert_eq!(
            u_matrix(4, 2),
            BinaryMatrix::from_bit_strings(&["1111", "0111", "0010", "0001"]),
        );
        assert_eq!(u_matrix(3, 0), BinaryMatrix::identity(3));
        for n in 1..=10 {
            assert_eq!(u_matrix(n, n), u_matrix(n, n - 1));
            for k in 0..=n {
                assert!(is_member_h(&u_matrix(n, k), k), "U_{n}^{k}");
            }
        }
    }

    #[test]
    fn zero_variant_matrices() {
        assert_eq!(
            u_matrix_zero_variant(4, 2),
            BinaryMatrix::from_bit_strings(&["1100", "0100", "0010", "0001"]),
        );
        assert_eq!(u_matrix_zero_variant(4, 1), BinaryMatrix::identity(4));
    }

    #[test]
    fn profiles() {
        let a = sample_member();
        let profile = a.profile();
        assert_eq!(profile.eta, Partition::new(vec![4, 3, 1, 1]));
        assert_eq!(profile.theta, Partition::new(vec![3, 3, 2, 1]));
        assert!(a.is_invertible());
        assert!(is_member_h(&a, 2));
        for k in [0, 1, 3, 4] {
            assert!(!is_member_h(&a, k));
        }
        // Zero rows and columns drop out of the profile.
        let sparse = BinaryMatrix::from_bit_strings(&["10", "00"]);
        assert_eq!(sparse.profile().eta, Partition::new(vec![1]));
        assert_eq!(sparse.profile().theta, Partition::new(vec![1]));
    }

    #[test]
    fn invertibility_and_inverse() {
        assert!(BinaryMatrix::identity(5).is_invertible());
        assert!(!BinaryMatrix::from_bit_strings(&["11", "11"]).is_invertible());
        assert!(!BinaryMatrix::from_bit_strings(&["10", "00"]).is_invertible());
        let a = sample_member();
        let inv = a.inverse().unwrap();
        assert_eq!(a.multiply(&inv), BinaryMatrix::identity(4));
        assert_eq!(inv.multiply(&a), BinaryMatrix::identity(4));
        assert!(BinaryMatrix::from_bit_strings(&["11", "11"])
            .inverse()
            .is_none());
    }

    #[test]
    fn permutation_matrices_and_action() {
        let pi = Permutation::from_one_line(vec![2, 3, 1]).unwrap();
        let p = permutation_matrix(&pi);
        assert_eq!(p, BinaryMatrix::from_bit_strings(&["001", "100", "010"]));
        assert_eq!(p.to_permutation().unwrap(), pi);
        assert_eq!(
            act(&pi, &Permutation::identity(3), &BinaryMatrix::identity(3)),
            p
        );
        // Permutation matrices invert by transposing.
        assert_eq!(p.inverse().unwrap(), p.transpose());
        assert_eq!(permutation_matrix(&pi.invert()), p.transpose());

        // The action is a left action in both coordinates.
        let u = u_matrix(3, 1);
        for a in Permutation::all(3) {
            for b in Permutation::all(3) {
                for c in Permutation::all(3) {
                    for d in Permutation::all(3) {
                        assert_eq!(
                            act(&a, &b, &act(&c, &d, &u)),
                            act(&a.compose(&c), &b.compose(&d), &u),
                        );
                    }
                }
            }
        }
        // And matches matrix multiplication P_pi A P_sigma^{-1}.
        for pi in Permutation::all(3) {
            for sigma in Permutation::all(3) {
                let lhs = act(&pi, &sigma, &u);
                let rhs = permutation_matrix(&pi)
                    .multiply(&u)
                    .multiply(&permutation_matrix(&sigma.invert()));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn action_preserves_membership() {
        for k in 0..=3 {
            let u = u_matrix(3, k);
            for pi in Permutation::all(3) {
                for sigma in Permutation::all(3) {
                    assert!(is_member_h(&act(&pi, &sigma, &u), k));
                }
            }
        }
    }

    #[test]
    fn orbit_sizes_small() {
        for n in 1..=4usize {
            for k in 0..=n {
                let orbit = enumerate_h(n, k, 1_000_000).unwrap();
                assert_eq!(BigInt::from(orbit.len()), orbit_size_h(n, k), "H_{n}^{k}");
                // Every member passes the profile test.
                for m in &orbit {
                    assert!(is_member_h(m, k));
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        match enumerate_h(5, 5, 100) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, 14_400);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        match enumerate_orbit(&u_matrix(5, 5), 100) {
            Err(Error::BudgetExceeded { budget: 100, .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    // Oracle: every invertible matrix with the member profile, found by
    // scanning all 2^(n^2) candidates, lies in the closure of the
    // staircase matrix.
    #[test]
    fn orbits_match_exhaustive_profile_scan() {
        for n in 1..=4usize {
            let mut by_k: Vec<HashSet<BinaryMatrix>> = (0..=n)
                .map(|k| enumerate_h(n, k, 1_000_000).unwrap().into_iter().collect())
                .collect();
            // k = n and k = n-1 describe the same set; scan each matrix once.
            for code in 0u64..1 << (n * n) {
                let mut m = BinaryMatrix::zero(n);
                for i in 0..n {
                    for j in 0..n {
                        m.set(i, j, code >> (i * n + j) & 1 == 1);
                    }
                }
                let invertible = m.is_invertible();
                for k in 0..=n {
                    let is_member = invertible && m.profile() == h_profile(n, k);
                    assert_eq!(by_k[k].contains(&m), is_member, "n={n} k={k}\n{m}");
                    if is_member {
                        by_k[k].remove(&m);
                    }
                }
            }
            for (k, rest) in by_k.iter().enumerate() {
                assert!(rest.is_empty(), "orbit H_{n}^{k} overshoots the scan");
            }
        }
    }

    #[test]
    fn zero_variant_orbit_sizes() {
        for n in 1..=4usize {
            for k in 0..=n {
                let orbit = enumerate_orbit(&u_matrix_zero_variant(n, k), 1_000_000).unwrap();
                let expected = if k == 1 {
                    factorial(n)
                } else {
                    orbit_size_h(n, k)
                };
                assert_eq!(BigInt::from(orbit.len()), expected, "variant n={n} k={k}");
            }
        }
    }

    #[test]
    fn small_staircase_union_is_closed_under_products() {
        for n in 2..=5usize {
            let mut members: HashSet<BinaryMatrix> =
                enumerate_h(n, 0, 1_000_000).unwrap().into_iter().collect();
            members.extend(enumerate_h(n, 1, 1_000_000).unwrap());
            for a in &members {
                assert!(members.contains(&a.inverse().unwrap()));
            }
            let list: Vec<&BinaryMatrix> = members.iter().collect();
            for a in &list {
                for b in &list {
                    assert!(members.contains(&a.multiply(b)), "n={n}\n{a}\ntimes\n{b}");
                }
            }
        }
    }

    #[test]
    fn canonicalize_staircase_is_trivial() {
        for n in 1..=6 {
            for k in 0..=n {
                let fact = canonicalize(&u_matrix(n, k), k).unwrap();
                assert!(fact.pi.is_identity());
                assert!(fact.sigma.is_identity());
            }
        }
    }

    #[test]
    fn canonicalize_reconstructs_sample_member() {
        let a = sample_member();
        let fact = canonicalize(&a, 2).unwrap();
        assert_eq!(fact.reconstruct(), a);
        assert_eq!(t_map(&a, 2).unwrap(), fact.pi.compose(&fact.sigma));
    }

    #[test]
    fn canonicalize_reconstructs_all_members() {
        for n in 1..=4usize {
            for k in 0..=n {
                for m in enumerate_h(n, k, 1_000_000).unwrap() {
                    let fact = canonicalize(&m, k).unwrap();
                    assert_eq!(fact.reconstruct(), m, "n={n} k={k}\n{m}");
                }
            }
        }
    }

    #[test]
    fn canonicalize_rejects_non_members() {
        let b = BinaryMatrix::from_bit_strings(&["1100", "1010", "0100", "0001"]);
        for k in 0..=4 {
            match canonicalize(&b, k) {
                Err(Error::NotInFamily { reason, .. }) => {
                    assert!(reason.contains("profile"), "k={k}: {reason}");
                }
                other => panic!("expected membership error, got {other:?}"),
            }
        }
        // Right profile for k = 0 but singular.
        let singular = BinaryMatrix::from_bit_strings(&["10", "10"]);
        assert!(matches!(
            canonicalize(&singular, 0),
            Err(Error::NotInFamily { .. })
        ));
    }

    #[test]
    fn t_map_is_equivariant() {
        let u = u_matrix(3, 1);
        for pi in Permutation::all(3) {
            for sigma in Permutation::all(3) {
                let moved = act(&pi, &sigma, &u);
                let expected = pi.compose(&t_map(&u, 1).unwrap()).compose(&sigma.invert());
                assert_eq!(t_map(&moved, 1).unwrap(), expected);
            }
        }
    }

    #[test]
    fn t_map_fibers_are_uniform() {
        for n in 1..=4usize {
            for k in 0..=n {
                let mut counts: std::collections::HashMap<Permutation, usize> =
                    std::collections::HashMap::new();
                for m in enumerate_h(n, k, 1_000_000).unwrap() {
                    *counts.entry(t_map(&m, k).unwrap()).or_insert(0) += 1;
                }
                assert_eq!(BigInt::from(counts.len()), factorial(n));
                let fiber = falling_factorial(n as i64, k);
                for (p, count) in counts {
                    assert_eq!(BigInt::from(count), fiber, "n={n} k={k} fiber over {p}");
                }
            }
        }
    }

    #[test]
    fn t_map_on_staircase_is_identity() {
        for n in 1..=5 {
            for k in 0..=n {
                assert!(t_map(&u_matrix(n, k), k).unwrap().is_identity());
            }
        }
    }

    // The profile alone does not pin down an orbit: this pair shares
    // profile (2,2,1,1; 2,2,1,1) but lies in two different orbits.
    #[test]
    fn equal_profiles_can_split_into_orbits() {
        let a = BinaryMatrix::from_bit_strings(&["1001", "0110", "0100", "1000"]);
        let b = BinaryMatrix::from_bit_strings(&["1100", "1010", "0100", "0001"]);
        let profile = a.profile();
        assert_eq!(profile, b.profile());
        assert_eq!(profile.eta, Partition::new(vec![2, 2, 1, 1]));
        assert!(a.is_invertible() && b.is_invertible());
        let orbit_a = enumerate_orbit(&a, 1_000_000).unwrap();
        assert!(!orbit_a.contains(&b));
        // Exhaustive scan: the profile class strictly contains the orbit.
        let mut class_size = 0u64;
        for code in 0u64..1 << 16 {
            let mut m = BinaryMatrix::zero(4);
            for i in 0..4 {
                for j in 0..4 {
                    m.set(i, j, code >> (i * 4 + j) & 1 == 1);
                }
            }
            if m.is_invertible() && m.profile() == profile {
                class_size += 1;
            }
        }
        assert!(class_size > orbit_a.len() as u64);
    }

    #[test]
    fn matrix_file_round_trip() {
        let a = sample_member();
        let text = render_matrix_file(&a, 2);
        assert_eq!(text, "4 2\n1000\n1110\n0010\n1111\n");
        let (parsed, k) = parse_matrix_file(&text).unwrap();
        assert_eq!(parsed, a);
        assert_eq!(k, 2);

        assert!(parse_matrix_file("").is_err());
        assert!(parse_matrix_file("4\n").is_err());
        assert!(parse_matrix_file("2 3\n10\n01\n").is_err());
        assert!(parse_matrix_file("2 1\n10\n0\n").is_err());
        assert!(parse_matrix_file("2 1\n10\n0x\n").is_err());
        assert!(parse_matrix_file("2 1\n10\n01\n11\n").is_err());
        assert!(parse_matrix_file("65 1\n").is_err());
    }
}
