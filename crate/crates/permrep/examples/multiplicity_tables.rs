//! Decompose the two-sided and diagonal permutation representations on the
//! staircase family into irreducibles, and show the structure the tables
//! obey: route agreement, symmetry, the support-difference vanishing rule,
//! and the dimension count.
//!
//!     cargo run --example multiplicity_tables

use num_bigint::BigInt;

use permrep::characters::dimension;
use permrep::multiplicity::{
    alpha_mult_h_branching, alpha_mult_h_direct, alpha_mult_h_paths, AlphaTable, BetaTable, Family,
};
use permrep::partition::partitions_of;

fn main() {
    let (n, k) = (4, 2);
    let partitions = partitions_of(n);
    let alpha = AlphaTable::build(Family::H, n, k);
    let beta = BetaTable::build(Family::H, n, k);

    println!("two-sided multiplicities for the staircase family, n={n}, k={k}");
    print!("{:>10} |", "");
    for mu in &partitions {
        print!("{:>8}", mu.to_string());
    }
    println!("{:>11}", "| diagonal");
    for lambda in &partitions {
        print!("{:>10} |", lambda.to_string());
        for mu in &partitions {
            print!("{:>8}", alpha.entry(lambda, mu).to_string());
        }
        println!("{:>11}", beta.entry(lambda).to_string());
    }

    // Every entry is reachable by three independent computations.
    let sample = (&partitions[1], &partitions[2]);
    println!();
    println!(
        "routes for m(({}), ({})): direct={}, branching={}, corner-paths={}",
        sample.0,
        sample.1,
        alpha_mult_h_direct(sample.0, sample.1, k),
        alpha_mult_h_branching(sample.0, sample.1, k),
        alpha_mult_h_paths(sample.0, sample.1, k),
    );

    println!(
        "table symmetry m(l,m)=m(m,l)=m(l',m'): {}",
        alpha.is_symmetric()
    );

    // Entries vanish exactly when the diagrams differ in more than 2k cells.
    let mut vanishing_ok = true;
    for lambda in &partitions {
        for mu in &partitions {
            let positive = alpha.entry(lambda, mu) > &BigInt::from(0);
            vanishing_ok &= positive == (lambda.symmetric_difference(mu) <= 2 * k);
        }
    }
    println!("vanishing rule |diagram difference| <= 2k: {vanishing_ok}");

    let total: BigInt = alpha
        .entries
        .iter()
        .map(|((lambda, mu), m)| m * dimension(lambda) * dimension(mu))
        .sum();
    println!(
        "dimension sum {total} equals the family size {}",
        Family::H.size(n, k)
    );
}
