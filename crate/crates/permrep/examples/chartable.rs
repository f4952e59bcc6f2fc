//! Print the character table of the symmetric group on five points,
//! then confirm the orthogonality relations that make it a valid table.
//!
//!     cargo run --example chartable

use permrep::characters::CharTable;
use permrep::partition::partitions_of;

fn main() {
    let n = 5;
    let table = CharTable::for_n(n);
    let rows = partitions_of(n);
    let mut classes = partitions_of(n);
    classes.reverse(); // identity class first, largest cycles last

    // Header: one column per conjugacy class, labeled by cycle type.
    print!("{:>12} |", "lambda \\ mu");
    for mu in &classes {
        print!("{:>8}", mu.to_string());
    }
    println!();
    println!("{}", "-".repeat(14 + 8 * classes.len()));

    for lambda in &rows {
        print!("{:>12} |", lambda.to_string());
        for mu in &classes {
            print!("{:>8}", table.chi(lambda, mu).to_string());
        }
        println!();
    }

    println!();
    println!("orthogonality relations hold: {}", table.orthogonality_ok());
    let dim_sum: num_bigint::BigInt = rows
        .iter()
        .map(|lambda| {
            let f = permrep::characters::dimension(lambda);
            &f * &f
        })
        .sum();
    println!(
        "sum of squared dimensions: {dim_sum} (must equal {}! = {})",
        n,
        permrep::arith::factorial(n)
    );
}
