//! Randomized algebraic laws: group axioms for permutations, functoriality
//! of the two-sided matrix action, canonicalization round-trips on random
//! orbit members, and parse/render inverses for both file formats.

use proptest::prelude::*;

use permrep::binary::{
    act, canonicalize, is_member_h, parse_matrix_file, render_matrix_file, u_matrix,
};
use permrep::colored::{
    act_colored, canonicalize_signed, is_member_x, parse_colored_file, render_colored_file,
    ColoredPermutation,
};
use permrep::partition::{partitions_of, Partition};
use permrep::permutation::Permutation;

/// Uniform-ish random permutation of degree `n` via key argsort.
fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    proptest::collection::vec(any::<u64>(), n).prop_map(move |keys| {
        let mut images: Vec<usize> = (1..=n).collect();
        images.sort_by_key(|&i| (keys[i - 1], i));
        Permutation::from_one_line(images).expect("argsort yields a bijection")
    })
}

/// A degree together with a pair of permutations of that degree.
fn degree_and_pair() -> impl Strategy<Value = (usize, Permutation, Permutation)> {
    (1usize..=7).prop_flat_map(|n| (Just(n), permutation(n), permutation(n)))
}

/// A degree with three permutations, for associativity-style laws.
fn degree_and_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1usize..=7).prop_flat_map(|n| (permutation(n), permutation(n), permutation(n)))
}

/// Random staircase-orbit data: degree, parameter, and a scrambling pair.
fn orbit_member() -> impl Strategy<Value = (usize, usize, Permutation, Permutation)> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, k)| (Just(n), Just(k), permutation(n), permutation(n)))
}

/// Random signed permutation with exactly `k` minus columns.
fn signed_member() -> impl Strategy<Value = (usize, ColoredPermutation)> {
    (1usize..=7)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, k)| {
            let columns: Vec<usize> = (0..n).collect();
            (
                Just(k),
                permutation(n),
                proptest::sample::subsequence(columns, k),
            )
        })
        .prop_map(|(k, perm, minus_columns)| {
            let n = perm.n();
            let mut colors = vec![0; n];
            for j in minus_columns {
                colors[j] = 1;
            }
            (k, ColoredPermutation::new(perm, colors, 2))
        })
}

/// Random partition of a random 1 ..= 9.
fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=9).prop_flat_map(|n| proptest::sample::select(partitions_of(n)))
}

proptest! {
    #[test]
    fn compose_is_associative((a, b, c) in degree_and_triple()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn inverses_cancel((n, a, _) in degree_and_pair()) {
        prop_assert_eq!(a.compose(&a.invert()), Permutation::identity(n));
        prop_assert_eq!(a.invert().compose(&a), Permutation::identity(n));
        prop_assert_eq!(a.invert().invert(), a);
    }

    #[test]
    fn one_line_round_trips((_, a, _) in degree_and_pair()) {
        prop_assert_eq!(Permutation::from_one_line(a.one_line()).unwrap(), a);
    }

    #[test]
    fn cycle_type_is_a_class_invariant((n, a, g) in degree_and_pair()) {
        let conjugated = g.compose(&a).compose(&g.invert());
        prop_assert_eq!(conjugated.cycle_type(), a.cycle_type());
        prop_assert_eq!(
            Permutation::class_representative(&a.cycle_type()).cycle_type(),
            a.cycle_type()
        );
        prop_assert_eq!(a.cycle_type().parts().iter().sum::<usize>(), n);
    }

    #[test]
    fn action_is_functorial((n, k, pi, sigma) in orbit_member()) {
        // Acting twice matches acting by the composites in one step.
        let seed = u_matrix(n, k);
        let once = act(&pi, &sigma, &seed);
        let id = Permutation::identity(n);
        prop_assert_eq!(act(&id, &id, &seed), seed.clone());
        let pi2 = pi.invert();
        let sigma2 = sigma.invert();
        prop_assert_eq!(
            act(&pi2, &sigma2, &once),
            act(&pi2.compose(&pi), &sigma2.compose(&sigma), &seed)
        );
    }

    #[test]
    fn orbit_members_canonicalize_back((n, k, pi, sigma) in orbit_member()) {
        let member = act(&pi, &sigma, &u_matrix(n, k));
        prop_assert!(is_member_h(&member, k));
        let fact = canonicalize(&member, k).unwrap();
        prop_assert_eq!(fact.reconstruct(), member);
    }

    #[test]
    fn matrix_files_round_trip((n, k, pi, sigma) in orbit_member()) {
        let member = act(&pi, &sigma, &u_matrix(n, k));
        let text = render_matrix_file(&member, k);
        let (parsed, parsed_k) = parse_matrix_file(&text).unwrap();
        prop_assert_eq!(parsed, member);
        prop_assert_eq!(parsed_k, k);
    }

    #[test]
    fn signed_members_canonicalize_back((k, a) in signed_member()) {
        prop_assert!(is_member_x(&a, k));
        let fact = canonicalize_signed(&a, k).unwrap();
        prop_assert_eq!(fact.reconstruct(), a);
    }

    #[test]
    fn colored_files_round_trip((k, a) in signed_member()) {
        let text = render_colored_file(&a, k);
        let (parsed, parsed_k) = parse_colored_file(&text).unwrap();
        prop_assert_eq!(parsed, a);
        prop_assert_eq!(parsed_k, k);
    }

    #[test]
    fn colored_action_is_functorial((k, a) in signed_member()) {
        let n = a.n();
        let id = Permutation::identity(n);
        prop_assert_eq!(act_colored(&id, &id, &a), a.clone());
        // Row moves and column moves commute with each other.
        let g = Permutation::transposition(n, 1, n);
        prop_assert_eq!(
            act_colored(&g, &id, &act_colored(&id, &g, &a)),
            act_colored(&g, &g, &a)
        );
        prop_assert_eq!(act_colored(&g, &g, &a).nontrivial_color_count(), k);
    }

    #[test]
    fn conjugation_on_partitions_is_an_involution(lambda in partition()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        let n: usize = lambda.parts().iter().sum();
        let conj_sum: usize = lambda.conjugate().parts().iter().sum();
        prop_assert_eq!(conj_sum, n);
        if let Some(&first) = lambda.conjugate().parts().first() {
            prop_assert_eq!(first, lambda.parts().len());
        }
    }

    #[test]
    fn partitions_enumerate_in_descending_order(n in 1usize..=9) {
        let list = partitions_of(n);
        for lambda in &list {
            prop_assert_eq!(lambda.parts().iter().sum::<usize>(), n);
        }
        for pair in list.windows(2) {
            prop_assert!(pair[0].parts() > pair[1].parts());
        }
    }
}
