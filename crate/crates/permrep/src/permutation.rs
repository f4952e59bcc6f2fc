//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! Composition follows function application: `p.compose(&q)` maps `x` to
//! `p(q(x))`, so the transposition product `(1,2)(2,3)` is the 3-cycle
//! `(1,2,3)`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::partition::Partition;

/// A permutation of `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    /// `images[j]` is the image of `j + 1`, minus 1.
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of degree `n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its one-line notation `[p(1), ..., p(n)]`.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n {
                return Err(Error::Parse(format!("image {v} out of range 1..={n}")));
            }
            if seen[v - 1] {
                return Err(Error::Parse(format!("image {v} repeats")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|v| v - 1).collect(),
        })
    }

    /// One-line notation `[p(1), ..., p(n)]`.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// The degree `n`.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// The image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// The image of `j` in 0-based coordinates.
    pub(crate) fn apply0(&self, j: usize) -> usize {
        self.images[j]
    }

    /// Function composition: `(self.compose(&other))(x) = self(other(x))`.
    ///
    /// Panics if the degrees differ.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    /// The inverse permutation.
    pub fn invert(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (j, &v) in self.images.iter().enumerate() {
            images[v] = j;
        }
        Permutation { images }
    }

    /// True iff every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &v)| j == v)
    }

    /// The transposition swapping `a` and `b` (1-based) in degree `n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && a <= n && b >= 1 && b <= n, "points out of range");
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// The `n - 1` adjacent transpositions `(i, i+1)`.
    pub fn adjacent_transpositions(n: usize) -> Vec<Self> {
        (1..n).map(|i| Self::transposition(n, i, i + 1)).collect()
    }

    /// The cycles, each listed from its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    /// The cycle type as a partition of `n`, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths)
    }

    /// The number of non-fixed points.
    pub fn support_size(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(j, &v)| j != v)
            .count()
    }

    /// The canonical representative of a cycle type: cycles laid out on
    /// consecutive points, longest first.
    pub fn class_representative(cycle_type: &Partition) -> Self {
        let n = cycle_type.sum();
        let mut images: Vec<usize> = (0..n).collect();
        let mut base = 0;
        for &len in cycle_type.parts() {
            for offset in 0..len {
                images[base + offset] = base + (offset + 1) % len;
            }
            base += len;
        }
        Permutation { images }
    }

    /// All `n!` permutations of degree `n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if rest.is_empty() {
                out.push(Permutation {
                    images: prefix.clone(),
                });
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                prefix.push(v);
                go(rest, prefix, out);
                prefix.pop();
                rest.insert(i, v);
            }
        }
        let mut out = Vec::new();
        go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    /// Space-joined one-line notation, e.g. `3 6 5 4 9 2 1 8 7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for &v in &self.images {
            write!(f, "{sep}{}", v + 1)?;
            sep = " ";
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses whitespace-separated one-line notation.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut images = Vec::new();
        for tok in s.split_whitespace() {
            images.push(
                tok.parse()
                    .map_err(|_| Error::Parse(format!("bad image {tok:?}")))?,
            );
        }
        if images.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        Permutation::from_one_line(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_right_factor_first() {
        let t12 = Permutation::transposition(3, 1, 2);
        let t23 = Permutation::transposition(3, 2, 3);
        // (1,2)(2,3) = (1,2,3).
        assert_eq!(t12.compose(&t23).one_line(), vec![2, 3, 1]);
        assert_eq!(t23.compose(&t12).one_line(), vec![3, 1, 2]);
    }

    #[test]
    fn cycle_structure_of_a_nine_point_example() {
        let p: Permutation = "3 6 5 4 9 2 1 8 7".parse().unwrap();
        assert_eq!(
            p.cycles(),
            vec![vec![1, 3, 5, 9, 7], vec![2, 6], vec![4], vec![8]],
        );
        assert_eq!(p.cycle_type(), Partition::new(vec![5, 2, 1, 1]));
        assert_eq!(p.support_size(), 7);
        assert_eq!(p.to_string(), "3 6 5 4 9 2 1 8 7");
    }

    #[test]
    fn inverse_and_identity() {
        let p: Permutation = "2 4 1 3".parse().unwrap();
        assert!(p.compose(&p.invert()).is_identity());
        assert!(p.invert().compose(&p).is_identity());
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(Permutation::identity(4).support_size(), 0);
    }

    #[test]
    fn one_line_validation() {
        assert!(Permutation::from_one_line(vec![1, 1]).is_err());
        assert!(Permutation::from_one_line(vec![2, 3]).is_err());
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!("1 2 x".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn class_representatives() {
        let rep = Permutation::class_representative(&Partition::new(vec![2, 1]));
        assert_eq!(rep.one_line(), vec![2, 1, 3]);
        let rep = Permutation::class_representative(&Partition::new(vec![3, 2]));
        assert_eq!(rep.one_line(), vec![2, 3, 1, 5, 4]);
        for q in crate::partition::partitions_of(7) {
            assert_eq!(Permutation::class_representative(&q).cycle_type(), q);
        }
    }

    #[test]
    fn full_listing() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all.first().unwrap().one_line(), vec![1, 2, 3]);
        assert_eq!(all.last().unwrap().one_line(), vec![3, 2, 1]);
        let all4 = Permutation::all(4);
        assert_eq!(all4.len(), 24);
    }

    #[test]
    fn adjacent_transpositions_generate() {
        let gens = Permutation::adjacent_transpositions(4);
        assert_eq!(gens.len(), 3);
        // Closure of the generators reaches the whole group.
        let mut reached = std::collections::HashSet::new();
        let mut frontier = vec![Permutation::identity(4)];
        reached.insert(Permutation::identity(4));
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = g.compose(&p);
                if reached.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        assert_eq!(reached.len(), 24);
    }
}
