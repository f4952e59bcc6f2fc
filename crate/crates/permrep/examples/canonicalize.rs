//! Scramble the staircase seed matrix with a random-looking row/column pair,
//! factor the result back through the seed, and follow the two equivariant
//! maps out of the orbit: the image permutation T and its signed lift.
//!
//!     cargo run --example canonicalize

use permrep::binary::{act, canonicalize, is_member_h, render_matrix_file, t_map, u_matrix};
use permrep::colored::t_tilde;
use permrep::permutation::Permutation;

fn main() {
    let (n, k) = (5, 2);
    let pi = Permutation::from_one_line(vec![3, 5, 1, 2, 4]).unwrap();
    let sigma = Permutation::from_one_line(vec![2, 4, 5, 1, 3]).unwrap();

    let seed = u_matrix(n, k);
    let member = act(&pi, &sigma, &seed);

    println!("seed (n={n}, k={k}):");
    print!("{}", render_matrix_file(&seed, k));
    println!();
    println!("after moving rows by ({pi}) and columns by ({sigma}):");
    print!("{}", render_matrix_file(&member, k));
    println!();
    println!("member of the family: {}", is_member_h(&member, k));

    // The factorization may differ from (pi, sigma) when the seed has
    // stabilizer, but it must reconstruct the member exactly.
    let fact = canonicalize(&member, k).unwrap();
    println!("factored as pi = {}, sigma = {}", fact.pi, fact.sigma);
    println!("reconstruction exact: {}", fact.reconstruct() == member);

    let image = t_map(&member, k).unwrap();
    println!("image permutation T(A) = {image}");
    let lifted = t_tilde(&member, k).unwrap();
    println!(
        "signed lift: permutation {} with minus columns at colors {:?}",
        lifted.perm(),
        lifted.colors()
    );
}
