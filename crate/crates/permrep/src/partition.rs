//! Integer partitions and their diagram combinatorics.
//!
//! Wherever this crate lists the partitions of `n` it uses descending
//! lexicographic order: `(n)` first, `(1, 1, ..., 1)` last.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// An integer partition: a weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    ///
    /// Panics if a part is zero or the sequence increases.
    pub fn new(parts: Vec<usize>) -> Self {
        for w in parts.windows(2) {
            assert!(w[0] >= w[1], "parts must be weakly decreasing: {parts:?}");
        }
        if let Some(&last) = parts.last() {
            assert!(last > 0, "parts must be positive: {parts:?}");
        }
        Partition { parts }
    }

    /// The unique partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The number being partitioned: the sum of all parts.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the partition of 0.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or 0 past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition: the diagram reflected across its diagonal.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// `sum_i |λ_i - μ_i|`, padding the shorter partition with zeros.
    pub fn symmetric_difference(&self, other: &Partition) -> usize {
        let rows = self.len().max(other.len());
        (0..rows)
            .map(|i| self.part(i).abs_diff(other.part(i)))
            .sum()
    }

    /// The partitions reachable by deleting one corner cell, topmost first.
    pub fn removals(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// `(part value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((value, count)) if *value == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Merges the parts of two partitions into one partition.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    /// Comma-joined parts, e.g. `4,3,1,1`; the empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let mut sep = "";
        for p in &self.parts {
            write!(f, "{sep}{p}")?;
            sep = ",";
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-joined parts (`"4,3,1,1"`); `""` and `"-"` give the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {tok:?}")))?;
            if p == 0 {
                return Err(Error::Parse("partition parts must be positive".into()));
            }
            parts.push(p);
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Parse(format!(
                    "partition parts must be weakly decreasing: {s:?}"
                )));
            }
        }
        Ok(Partition { parts })
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
