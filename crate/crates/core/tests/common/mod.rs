#![allow(dead_code)]

use num_integer::Integer;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rootloop_core::{
    fixtures, LaurentPoly, MutationWord, Permutation, Seed, Valuation, ValuedQuiver,
};

pub const CASES: u32 = 500;

pub fn config() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        ..ProptestConfig::default()
    }
}

/// Quivers on 2..=5 vertices with symmetrizer entries in 1..=3 and edge
/// multipliers 1..=2; the symmetrizer condition holds by construction.
pub fn valued_quiver() -> impl Strategy<Value = ValuedQuiver> {
    (2usize..=5).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec(1u64..=3, n),
            prop::collection::vec((0u8..3, 1u64..=2), pairs),
        )
            .prop_map(|(n, d, choices)| {
                let mut edges = Vec::new();
                let mut c = choices.into_iter();
                for i in 0..n {
                    for j in i + 1..n {
                        let (dir, mult) = c.next().unwrap();
                        let g = d[i].gcd(&d[j]);
                        let (dij, dji) = (mult * d[j] / g, mult * d[i] / g);
                        match dir {
                            0 => {}
                            1 => edges.push((i, j, Valuation::new(dij, dji))),
                            _ => edges.push((j, i, Valuation::new(dji, dij))),
                        }
                    }
                }
                ValuedQuiver::new(n, edges, Some(d), []).unwrap()
            })
    })
}

/// Finite-type quivers small enough for group computations.
pub fn small_finite() -> Vec<ValuedQuiver> {
    vec![
        fixtures::a2(),
        fixtures::b2(),
        fixtures::g2(),
        fixtures::a1_power(2),
        fixtures::a3(),
        fixtures::b3(),
        fixtures::c3(),
        fixtures::cycle3(),
        fixtures::a1_power(3),
    ]
}

pub fn rank_two_finite() -> Vec<ValuedQuiver> {
    small_finite().into_iter().filter(|q| q.n() == 2).collect()
}

pub fn shuffled(n: usize, seed: u64) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(&mut StdRng::seed_from_u64(seed));
    Permutation::from_images(images).unwrap()
}

/// A fixture, relabeled and moved along a short mutation walk.
pub fn random_root(quivers: Vec<ValuedQuiver>) -> impl Strategy<Value = Seed> {
    (
        0..quivers.len(),
        any::<u64>(),
        prop::collection::vec(any::<u8>(), 0..5),
    )
        .prop_map(move |(i, seed, walk)| {
            let q = quivers[i]
                .permuted(&shuffled(quivers[i].n(), seed))
                .unwrap();
            let w = MutationWord::new(walk.iter().map(|&k| k as usize % q.n()).collect());
            Seed::initial(&q.clone())
                .apply(&w)
                .map(|s| Seed::initial(&s.quiver))
                .unwrap()
        })
}

/// A root together with a word over its vertices.
pub fn root_and_word(
    quivers: Vec<ValuedQuiver>,
    max_len: usize,
) -> impl Strategy<Value = (Seed, MutationWord)> {
    (
        random_root(quivers),
        prop::collection::vec(any::<u8>(), 0..=max_len),
    )
        .prop_map(|(s, raw)| {
            let n = s.n();
            (
                s,
                MutationWord::new(raw.iter().map(|&k| k as usize % n).collect()),
            )
        })
}

/// Laurent polynomials in three variables; coefficients reach past 64 bits.
pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        (prop::collection::vec(-2i32..3, 3), any::<i128>(), 0u32..3),
        0..5,
    )
    .prop_map(|terms| {
        let mut p = LaurentPoly::zero(3);
        for (e, c, shrink) in terms {
            // mix huge and small coefficients
            let c = if shrink == 0 { c } else { c % 7 };
            p = &p + &LaurentPoly::monomial(e, c);
        }
        p
    })
}

pub fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}
