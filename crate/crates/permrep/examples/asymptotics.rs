//! Track the statistics that govern large-degree behaviour: the sum of
//! inverse class sizes, the norm-controlling value F_k, and the squared
//! cosine between the diagonal-action character and the regular character.
//! All arithmetic is exact; decimals shown are renderings only.
//!
//!     cargo run --example asymptotics

use num_bigint::BigInt;
use num_rational::BigRational;

use permrep::asymptotics::{cosine_beta_regular, f_k, sum_inverse_class_sizes};

fn approx(value: &BigRational) -> f64 {
    let numer = value.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let denom = value.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    numer / denom
}

fn main() {
    let k = 2;
    println!("degree sweep at k = {k}:");
    println!(
        "{:>4} {:>22} {:>14} {:>12}",
        "n", "sum 1/|C|", "F_k", "cos^2"
    );
    for n in 4..=16usize {
        let sum_inv = sum_inverse_class_sizes(n);
        let f_value = f_k(n, k);
        let cosine = cosine_beta_regular(n, k);
        println!(
            "{:>4} {:>22} {:>14.6} {:>12.8}",
            n,
            sum_inv.to_string(),
            approx(&f_value),
            approx(&cosine),
        );
    }

    // The trend the table shows: the class-size sum sinks toward 1, so the
    // squared cosine climbs toward 1 — the diagonal action looks more and
    // more like a stack of regular representations.
    let one = BigRational::from_integer(BigInt::from(1));
    let at_30 = cosine_beta_regular(30, k);
    println!();
    println!(
        "at n = 30 the squared cosine is {} ({:.8}), within {:.2e} of 1",
        at_30,
        approx(&at_30),
        approx(&(&one - &at_30))
    );
}
