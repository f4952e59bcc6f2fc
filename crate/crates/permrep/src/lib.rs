//! Exact computations with permutation representations of symmetric groups
//! on families of matrix orbits.
//!
//! The library studies four families of square matrices carrying an action
//! of `S_n x S_n` by independent row and column moves, together with the
//! diagonal restriction to conjugation:
//!
//! * the staircase orbit of invertible (0,1)-matrices ([`binary`]),
//! * signed permutation matrices with a prescribed number of minus entries
//!   and their r-colored generalization ([`colored`]),
//! * the full group of signed permutation matrices.
//!
//! For each family it computes characters in closed form, decomposes the
//! actions into irreducibles by several independent routes
//! ([`multiplicity`]), tracks the exact statistics that govern large-degree
//! behaviour ([`asymptotics`]), and cross-checks every closed form against
//! literal brute-force enumeration ([`verify`]). All arithmetic is exact:
//! big integers and big rationals throughout, floating point only in
//! display code.
//!
//! The [`cli`] module wires these pieces into the `permrep` binary with
//! JSON, CSV, and human-readable output; the JSON shape is published in
//! `schema/output.schema.json` at the repository root.

pub mod arith;
pub mod asymptotics;
pub mod binary;
pub mod characters;
pub mod classes;
pub mod cli;
pub mod colored;
pub mod error;
pub mod multiplicity;
pub mod partition;
pub mod permutation;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{partitions_of, Partition};
pub use permutation::Permutation;
