//! Monomial matrices over r-th roots of unity (the wreath product of a
//! cyclic group with `S_n`; signed permutations at r = 2), the families
//! `X_n^k` and `Y_n^k` of matrices with k nontrivial entries, and the
//! bridge from the staircase orbit onto the signed family.
//!
//! A value records the underlying permutation together with one color
//! exponent per column: the matrix has `omega^colors[j]` in row `perm(j)`,
//! column `j`, and zeros elsewhere. The two-sided action moves rows and
//! columns without ever changing a color value, so the multiset of colors
//! is invariant on every orbit.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;

use crate::arith::{binomial, factorial, falling_factorial};
use crate::binary::{canonicalize, BinaryMatrix};
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A monomial matrix over r-th roots of unity: entry `omega^colors[j]` at
/// `(perm(j), j)`. With r = 1 this is a plain permutation; r = 2 gives
/// signed permutations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredPermutation {
    perm: Permutation,
    colors: Vec<usize>,
    r: usize,
}

impl ColoredPermutation {
    /// Builds a colored permutation; panics when a color reaches `r` or the
    /// lengths disagree. Use [`parse_colored_file`] for untrusted input.
    pub fn new(perm: Permutation, colors: Vec<usize>, r: usize) -> Self {
        assert!(r >= 1, "modulus must be at least 1");
        assert_eq!(perm.n(), colors.len(), "one color per column");
        assert!(colors.iter().all(|&c| c < r), "colors must lie in 0..r");
        ColoredPermutation { perm, colors, r }
    }

    /// The identity matrix viewed with modulus `r`.
    pub fn identity(n: usize, r: usize) -> Self {
        Self::new(Permutation::identity(n), vec![0; n], r)
    }

    /// The matrix size.
    pub fn n(&self) -> usize {
        self.perm.n()
    }

    /// The underlying permutation.
    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// The color exponents, indexed by column.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The root-of-unity modulus.
    pub fn r(&self) -> usize {
        self.r
    }

    /// The number of columns whose entry differs from 0 and 1.
    pub fn nontrivial_color_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    /// The color values in sorted order; constant along every orbit.
    pub fn color_multiset(&self) -> Vec<usize> {
        let mut sorted = self.colors.clone();
        sorted.sort_unstable();
        sorted
    }
}

impl fmt::Display for ColoredPermutation {
    /// One line: the permutation, the colors, and the modulus.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let colors: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}; {}; r={}]", self.perm, colors.join(" "), self.r)
    }
}

/// The action of `(pi, sigma)`: the permutation becomes
/// `pi . perm . sigma^{-1}` and column `sigma(j)` inherits the color of
/// column `j`. Matches entrywise multiplication `P_pi M P_sigma^{-1}`.
pub fn act_colored(
    pi: &Permutation,
    sigma: &Permutation,
    a: &ColoredPermutation,
) -> ColoredPermutation {
    let n = a.n();
    assert!(pi.n() == n && sigma.n() == n, "degree mismatch");
    let perm = pi.compose(&a.perm).compose(&sigma.invert());
    let mut colors = vec![0; n];
    for j in 0..n {
        colors[sigma.apply0(j)] = a.colors[j];
    }
    ColoredPermutation::new(perm, colors, a.r)
}

/// The signed diagonal seed of `X_n^k`: identity permutation, minus signs
/// on the first `k` columns.
pub fn u_tilde(n: usize, k: usize) -> ColoredPermutation {
    assert!(k <= n, "k exceeds n");
    let mut colors = vec![0; n];
    for c in colors.iter_mut().take(k) {
        *c = 1;
    }
    ColoredPermutation::new(Permutation::identity(n), colors, 2)
}

/// Membership in `X_n^k`: a signed permutation with exactly `k` minus
/// entries.
pub fn is_member_x(a: &ColoredPermutation, k: usize) -> bool {
    a.r == 2 && a.nontrivial_color_count() == k
}

/// Membership in `Y_n^k` for the value's own modulus: exactly `k` entries
/// differ from 0 and 1.
pub fn is_member_y(a: &ColoredPermutation, k: usize) -> bool {
    a.nontrivial_color_count() == k
}

/// `|X_n^k| = n! C(n,k)`.
pub fn orbit_size_x(n: usize, k: usize) -> BigInt {
    factorial(n) * binomial(n, k)
}

/// `|Y_n^k| = n! C(n,k) (r-1)^k` for modulus `r`.
pub fn set_size_y(n: usize, k: usize, r: usize) -> BigInt {
    assert!(r >= 1);
    factorial(n) * binomial(n, k) * BigInt::from(r - 1).pow(k as u32)
}

/// A factorization `A = P_pi . u_tilde(n, k) . P_sigma` of a member of
/// `X_n^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedFactorization {
    /// Row-side witness.
    pub pi: Permutation,
    /// Column-side witness.
    pub sigma: Permutation,
    /// The number of minus entries.
    pub k: usize,
}

impl SignedFactorization {
    /// Recomputes `P_pi . u_tilde . P_sigma`.
    pub fn reconstruct(&self) -> ColoredPermutation {
        act_colored(
            &self.pi,
            &self.sigma.invert(),
            &u_tilde(self.pi.n(), self.k),
        )
    }
}

/// Factors a signed permutation with `k` minus entries through the signed
/// diagonal seed: split `A = Z P` into its sign part and permutation part,
/// move the minus rows `i_1 < ... < i_k` to the top with
/// `tau = (k, i_k) ... (1, i_1)`, and return `pi = tau^{-1}`,
/// `sigma = tau . P`.
pub fn canonicalize_signed(a: &ColoredPermutation, k: usize) -> Result<SignedFactorization> {
    let n = a.n();
    if a.r != 2 {
        return Err(Error::NotInFamily {
            family: format!("X_{n}^{k}"),
            reason: format!("modulus is {}, members have modulus 2", a.r),
        });
    }
    let count = a.nontrivial_color_count();
    if count != k {
        return Err(Error::NotInFamily {
            family: format!("X_{n}^{k}"),
            reason: format!("matrix has {count} minus entries, members have {k}"),
        });
    }
    // Minus rows, ascending: row perm(j) for each minus column j.
    let mut minus_rows: Vec<usize> = (0..n)
        .filter(|&j| a.colors[j] == 1)
        .map(|j| a.perm.apply0(j) + 1)
        .collect();
    minus_rows.sort_unstable();
    // tau sends i_j to j; the transposition (j, i_j) never disturbs the
    // earlier placements because i_j >= j.
    let mut tau = Permutation::identity(n);
    for (j, &row) in minus_rows.iter().enumerate() {
        tau = Permutation::transposition(n, j + 1, row).compose(&tau);
    }
    let fact = SignedFactorization {
        pi: tau.invert(),
        sigma: tau.compose(&a.perm),
        k,
    };
    debug_assert_eq!(fact.reconstruct(), *a, "signed factorization failed");
    Ok(fact)
}

/// Forgets the colors.
pub fn project(a: &ColoredPermutation) -> Permutation {
    a.perm.clone()
}

/// The bridge from the staircase orbit onto the signed family: the member
/// `P_pi U_{n,k} P_sigma` of `H_n^k` maps to `P_pi u_tilde(n,k) P_sigma`.
/// Well defined because every pair fixing the staircase matrix also fixes
/// the signed seed; for k = 0 this is the identity on permutation
/// matrices.
pub fn t_tilde(a: &BinaryMatrix, k: usize) -> Result<ColoredPermutation> {
    let fact = canonicalize(a, k)?;
    Ok(act_colored(
        &fact.pi,
        &fact.sigma.invert(),
        &u_tilde(a.n(), k),
    ))
}

/// The canonical member of the variant family with each of the colors
/// `1..=k` used exactly once: identity permutation, column `j <= k` colored
/// `j`, modulus `k + 1`.
pub fn appendix_variant_seed(n: usize, k: usize) -> ColoredPermutation {
    assert!(k <= n, "k exceeds n");
    let mut colors = vec![0; n];
    for (j, c) in colors.iter_mut().take(k).enumerate() {
        *c = j + 1;
    }
    ColoredPermutation::new(Permutation::identity(n), colors, k + 1)
}

/// Membership in the variant family over modulus `k + 1`: each color value
/// `1..=k` appears exactly once and every other column is colorless.
///
/// Panics when the modulus is not `k + 1`.
pub fn is_member_appendix_variant(a: &ColoredPermutation, k: usize) -> bool {
    assert_eq!(a.r, k + 1, "variant family lives at modulus k + 1");
    let mut counts = vec![0usize; k + 1];
    for &c in &a.colors {
        counts[c] += 1;
    }
    (1..=k).all(|c| counts[c] == 1)
}

/// `n! (n)_k`, the size of the variant family (and of `H_n^k`).
pub fn set_size_appendix_variant(n: usize, k: usize) -> BigInt {
    factorial(n) * falling_factorial(n as i64, k)
}

/// All color vectors of length `n` over `0..r`, in lexicographic order.
fn color_vectors(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..r).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Enumerates `Y_n^k` over modulus `r` directly (permutations times color
/// vectors with `k` nonzero entries); `X_n^k` is the case r = 2. Intended
/// for small n: the set has `n! C(n,k) (r-1)^k` elements.
pub fn enumerate_y_set(n: usize, k: usize, r: usize) -> Vec<ColoredPermutation> {
    let colorings: Vec<Vec<usize>> = color_vectors(n, r)
        .into_iter()
        .filter(|v| v.iter().filter(|&&c| c != 0).count() == k)
        .collect();
    let mut out = Vec::new();
    for perm in Permutation::all(n) {
        for colors in &colorings {
            out.push(ColoredPermutation::new(perm.clone(), colors.clone(), r));
        }
    }
    out
}

/// Enumerates the variant family over modulus `k + 1` directly.
pub fn enumerate_appendix_variant(n: usize, k: usize) -> Vec<ColoredPermutation> {
    let colorings: Vec<Vec<usize>> = color_vectors(n, k + 1)
        .into_iter()
        .filter(|v| {
            let mut counts = vec![0usize; k + 1];
            for &c in v {
                counts[c] += 1;
            }
            (1..=k).all(|c| counts[c] == 1)
        })
        .collect();
    let mut out = Vec::new();
    for perm in Permutation::all(n) {
        for colors in &colorings {
            out.push(ColoredPermutation::new(perm.clone(), colors.clone(), k + 1));
        }
    }
    out
}

/// Breadth-first closure of `seed` under adjacent row and column swaps,
/// with the same budget semantics as the binary enumeration.
pub fn enumerate_colored_orbit(
    seed: &ColoredPermutation,
    budget: u64,
) -> Result<Vec<ColoredPermutation>> {
    let n = seed.n();
    let generators = Permutation::adjacent_transpositions(n);
    let identity = Permutation::identity(n);
    let mut visited = HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(m) = queue.pop_front() {
        for g in &generators {
            for next in [act_colored(g, &identity, &m), act_colored(&identity, g, &m)] {
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
    let mut out: Vec<ColoredPermutation> = visited.into_iter().collect();
    out.sort_unstable_by(|a, b| (&a.perm, &a.colors).cmp(&(&b.perm, &b.colors)));
    Ok(out)
}

/// Enumerates `X_n^k` by closing the signed seed under the action; the
/// exact size `n! C(n,k)` is checked against `budget` before starting.
pub fn enumerate_x(n: usize, k: usize, budget: u64) -> Result<Vec<ColoredPermutation>> {
    let size = orbit_size_x(n, k);
    if size > BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: num_traits::ToPrimitive::to_u128(&size).unwrap_or(u128::MAX),
            budget,
        });
    }
    let orbit = enumerate_colored_orbit(&u_tilde(n, k), budget)?;
    assert_eq!(
        BigInt::from(orbit.len()),
        size,
        "X_{n}^{k} enumeration size"
    );
    Ok(orbit)
}

/// Parses the colored matrix text format: a header line `n r k`, then the
/// one-line permutation, then the `n` color exponents.
pub fn parse_colored_file(text: &str) -> Result<(ColoredPermutation, usize)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::Parse(format!(
            "expected header `n r k`, got {header:?}"
        )));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| Error::Parse(format!("bad n {:?}", fields[0])))?;
    let r: usize = fields[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad r {:?}", fields[1])))?;
    let k: usize = fields[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad k {:?}", fields[2])))?;
    if n < 1 {
        return Err(Error::Parse("n must be positive".into()));
    }
    if r < 1 {
        return Err(Error::Parse("r must be positive".into()));
    }
    if k > n {
        return Err(Error::Parse(format!("k = {k} exceeds n = {n}")));
    }
    let perm_line = lines
        .next()
        .ok_or_else(|| Error::Parse("missing permutation line".into()))?;
    let perm: Permutation = perm_line.trim().parse()?;
    if perm.n() != n {
        return Err(Error::Parse(format!(
            "permutation has degree {}, header says {n}",
            perm.n()
        )));
    }
    let color_line = lines
        .next()
        .ok_or_else(|| Error::Parse("missing color line".into()))?;
    let colors: Vec<usize> = color_line
        .split_whitespace()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad color {f:?}")))
        })
        .collect::<Result<_>>()?;
    if colors.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} colors, got {}",
            colors.len()
        )));
    }
    if let Some(&c) = colors.iter().find(|&&c| c >= r) {
        return Err(Error::Parse(format!("color {c} reaches the modulus {r}")));
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after color line".into()));
    }
    Ok((ColoredPermutation::new(perm, colors, r), k))
}

/// Renders the colored matrix text format accepted by
/// [`parse_colored_file`].
pub fn render_colored_file(a: &ColoredPermutation, k: usize) -> String {
    let colors: Vec<String> = a.colors.iter().map(|c| c.to_string()).collect();
    format!(
        "{} {} {}\n{}\n{}\n",
        a.n(),
        a.r,
        k,
        a.perm,
        colors.join(" ")
    )
}
