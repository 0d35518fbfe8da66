//! Property tests over randomly generated commutation graphs and words.

use proptest::prelude::*;
use racg::{
    apply_step, find_witness, Ball, Gen, GenSet, MinimalityVerdict, Presentation, WitnessOutcome,
};

const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

#[allow(clippy::needless_range_loop)]
fn build(n: usize, bits: &[bool]) -> Presentation {
    let mut edges: Vec<(&str, &str)> = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if bits[k] {
                edges.push((NAMES[i], NAMES[j]));
            }
            k += 1;
        }
    }
    Presentation::new(&NAMES[..n], &edges).unwrap()
}

fn arb_system(max_n: usize) -> impl Strategy<Value = Presentation> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| build(n, &bits))
    })
}

/// A random system together with `count` random words of length at most
/// `max_len` over its generators.
fn arb_system_and_words(
    max_n: usize,
    max_len: usize,
    count: usize,
) -> impl Strategy<Value = (Presentation, Vec<Vec<Gen>>)> {
    (1..=max_n).prop_flat_map(move |n| {
        let bits = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        let words =
            proptest::collection::vec(proptest::collection::vec(0..n, 0..=max_len), count);
        (bits, words).prop_map(move |(bits, idx_words)| {
            let p = build(n, &bits);
            let gens: Vec<Gen> = p.gens().collect();
            let words = idx_words
                .into_iter()
                .map(|idx| idx.into_iter().map(|i| gens[i]).collect())
                .collect();
            (p, words)
        })
    })
}

/// A random system, one random word, and a random generator subset.
fn arb_system_word_subset(
    max_n: usize,
    max_len: usize,
) -> impl Strategy<Value = (Presentation, Vec<Gen>, GenSet)> {
    (1..=max_n).prop_flat_map(move |n| {
        let bits = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        let word = proptest::collection::vec(0..n, 0..=max_len);
        let mask = 0u32..(1u32 << n);
        (bits, word, mask).prop_map(move |(bits, idx, mask)| {
            let p = build(n, &bits);
            let gens: Vec<Gen> = p.gens().collect();
            let word: Vec<Gen> = idx.into_iter().map(|i| gens[i]).collect();
            let subset: GenSet = gens
                .iter()
                .copied()
                .filter(|g| mask >> g.index() & 1 == 1)
                .collect();
            (p, word, subset)
        })
    })
}

proptest! {
    #[test]
    fn reduction_shrinks_preserves_parity_and_is_idempotent(
        (p, words) in arb_system_and_words(6, 12, 4)
    ) {
        for w in &words {
            let nf = p.reduce(w);
            prop_assert!(nf.len() <= w.len());
            prop_assert_eq!(nf.len() % 2, w.len() % 2);
            prop_assert_eq!(&p.reduce(nf.letters()), &nf);
        }
    }

    #[test]
    fn inversion_is_a_length_preserving_involution(
        (p, words) in arb_system_and_words(6, 10, 4)
    ) {
        for w in &words {
            let u = p.reduce(w);
            let inv = p.invert(&u);
            prop_assert_eq!(inv.len(), u.len());
            prop_assert_eq!(&p.invert(&inv), &u);
            prop_assert!(p.multiply(&u, &inv).is_identity());
            prop_assert!(p.multiply(&inv, &u).is_identity());
        }
    }

    #[test]
    fn multiplication_obeys_the_length_window(
        (p, words) in arb_system_and_words(6, 8, 2)
    ) {
        let u = p.reduce(&words[0]);
        let v = p.reduce(&words[1]);
        let prod = p.multiply(&u, &v);
        prop_assert!(prod.len() >= u.len().abs_diff(v.len()));
        prop_assert!(prod.len() <= u.len() + v.len());
        prop_assert_eq!(prod.len() % 2, (u.len() + v.len()) % 2);
    }

    #[test]
    fn descents_are_cliques_in_the_support_and_mark_length_drops(
        (p, words) in arb_system_and_words(6, 10, 4)
    ) {
        for w in &words {
            let u = p.reduce(w);
            let d = p.right_descents(&u);
            prop_assert!(d.is_subset_of(u.support()));
            prop_assert!(p.is_spherical(d));
            prop_assert_eq!(d.is_empty(), u.is_identity());
            for s in p.gens() {
                let dropped = p.right_multiply(&u, s).len() < u.len();
                prop_assert_eq!(d.contains(s), dropped);
            }
        }
    }

    #[test]
    fn unreduced_words_admit_a_two_letter_deletion(
        (p, words) in arb_system_and_words(5, 7, 2)
    ) {
        for w in &words {
            let nf = p.reduce(w);
            if nf.len() == w.len() {
                continue;
            }
            let mut found = false;
            'pairs: for i in 0..w.len() {
                for j in (i + 1)..w.len() {
                    let shorter: Vec<Gen> = w
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != i && k != j)
                        .map(|(_, &g)| g)
                        .collect();
                    if p.reduce(&shorter) == nf {
                        found = true;
                        break 'pairs;
                    }
                }
            }
            prop_assert!(found, "no deletable pair in {}", p.word_string(w));
        }
    }

    #[test]
    fn coset_minimum_is_descent_free_and_factors_the_word(
        (p, word, t) in arb_system_word_subset(6, 10)
    ) {
        let u = p.reduce(&word);
        let rep = p.coset_min_rep(&u, t);
        prop_assert_eq!(p.right_descents(&rep) & t, GenSet::EMPTY);
        let tail = p.multiply(&p.invert(&rep), &u);
        prop_assert!(tail.support().is_subset_of(t));
        prop_assert_eq!(rep.len() + tail.len(), u.len());
    }

    #[test]
    fn maximal_spherical_subsets_cover_every_spherical_subset(
        p in arb_system(5)
    ) {
        let maxes = p.maximal_spherical_subsets();
        for &m in &maxes {
            prop_assert!(p.is_spherical(m));
            for s in p.gens() {
                prop_assert!(m.contains(s) || !p.is_spherical(m.with(s)));
            }
        }
        let gens: Vec<Gen> = p.gens().collect();
        for mask in 0u32..(1 << gens.len()) {
            let t: GenSet = gens
                .iter()
                .copied()
                .filter(|g| mask >> g.index() & 1 == 1)
                .collect();
            if p.is_spherical(t) {
                prop_assert!(maxes.iter().any(|&m| t.is_subset_of(m)));
            }
        }
    }

    #[test]
    fn components_partition_the_generators_and_commute_across(
        p in arb_system(6)
    ) {
        let d = p.irreducible_components();
        let mut union = GenSet::EMPTY;
        for &c in &d.components {
            prop_assert!(!c.is_empty());
            prop_assert_eq!(union & c, GenSet::EMPTY);
            union |= c;
        }
        prop_assert_eq!(union, p.all_gens());
        prop_assert_eq!(d.s_tilde | d.finite_part, p.all_gens());
        prop_assert_eq!(d.s_tilde & d.finite_part, GenSet::EMPTY);
        for &c1 in &d.components {
            for &c2 in &d.components {
                if c1 != c2 {
                    for s in c1.iter() {
                        for t in c2.iter() {
                            prop_assert!(p.commutes(s, t));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_density_is_monotone_in_the_subset(
        (p, _, t) in arb_system_word_subset(6, 0)
    ) {
        if p.parabolic_orbit_dense(t) {
            for s in p.gens() {
                prop_assert!(p.parabolic_orbit_dense(t.with(s)));
            }
        }
    }

    #[test]
    fn witness_outcome_matches_the_structural_verdict(
        p in arb_system(6)
    ) {
        match (p.boundary_minimal(), find_witness(&p)) {
            (MinimalityVerdict::EmptyBoundary, WitnessOutcome::FiniteGroup) => {}
            (
                MinimalityVerdict::NotMinimal { part_a, part_b },
                WitnessOutcome::Splitting { part_a: a, part_b: b },
            ) => {
                prop_assert_eq!(part_a, a);
                prop_assert_eq!(part_b, b);
            }
            (MinimalityVerdict::Minimal, WitnessOutcome::Witness(w)) => {
                prop_assert_eq!(w.trace.len(), w.chain.len() + 1);
                prop_assert_eq!(w.trace[0], w.start_clique);
                let mut v = w.start_clique;
                for (i, &a) in w.chain.iter().enumerate() {
                    v = apply_step(&p, v, a).unwrap();
                    prop_assert_eq!(v, w.trace[i + 1]);
                }
                prop_assert_eq!(v.sole_element(), Some(w.s0));
                let finite = p.irreducible_components().finite_part;
                prop_assert_eq!(
                    w.bound_n,
                    w.start_clique.len() + w.chain.len() + finite.len()
                );
            }
            (verdict, outcome) => {
                prop_assert!(false, "verdict {:?} vs outcome {:?}", verdict, outcome);
            }
        }
    }

    #[test]
    fn balls_are_closed_under_inversion(p in arb_system(4)) {
        let ball = Ball::build(&p, 3).unwrap();
        for w in ball.elements() {
            prop_assert!(ball.contains(&p.invert(w)));
        }
    }
}
