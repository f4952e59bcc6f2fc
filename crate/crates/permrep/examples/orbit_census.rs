//! Enumerate the small matrix families by breadth-first search and compare
//! the censuses against their closed-form sizes; then count fixed points of
//! a few group elements literally and compare with the character formulas.
//!
//!     cargo run --example orbit_census

use permrep::arith::{binomial, factorial, falling_factorial};
use permrep::binary::enumerate_h;
use permrep::classes::classes_of;
use permrep::multiplicity::alpha_char;
use permrep::multiplicity::Family;
use permrep::permutation::Permutation;
use permrep::verify::fixed_points_alpha;

fn main() {
    println!("family sizes by breadth-first search:");
    println!(
        "{:>3} {:>3} {:>10} {:>10}",
        "n", "k", "|H| found", "n!*(n)_k"
    );
    for n in 1..=5usize {
        for k in 0..=n {
            let orbit = enumerate_h(n, k, 1_000_000).unwrap();
            let expected = factorial(n) * falling_factorial(n as i64, k);
            println!("{:>3} {:>3} {:>10} {:>10}", n, k, orbit.len(), expected);
            assert_eq!(expected, orbit.len().into());
        }
    }
    println!(
        "(signed censuses follow n!*C(n,k): n=4, k=2 gives {})",
        factorial(4) * binomial(4, 2)
    );

    // Character values are literal fixed-point counts: pick the degree-4
    // staircase family with k = 2 and walk every pair of classes.
    let (n, k) = (4, 2);
    let orbit = enumerate_h(n, k, 1_000_000).unwrap();
    println!();
    println!("fixed points on the two-sided action of degree {n}, k={k}:");
    println!(
        "{:>8} {:>8} {:>8} {:>8}",
        "rows", "cols", "counted", "formula"
    );
    for row_class in classes_of(n) {
        for col_class in classes_of(n) {
            let pi = Permutation::class_representative(&row_class.cycle_type);
            let sigma = Permutation::class_representative(&col_class.cycle_type);
            let counted = fixed_points_alpha(&orbit, &pi, &sigma);
            let formula = alpha_char(
                Family::H,
                n,
                k,
                &row_class.cycle_type,
                &col_class.cycle_type,
            );
            println!(
                "{:>8} {:>8} {:>8} {:>8}",
                row_class.cycle_type.to_string(),
                col_class.cycle_type.to_string(),
                counted,
                formula.to_string()
            );
            assert_eq!(formula, counted.into());
        }
    }
    println!("all counts match the closed forms.");
}
