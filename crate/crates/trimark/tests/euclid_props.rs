mod common;

use common::*;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trimark::euclid::*;
use trimark::projmat::ProjectiveMatrix;
use trimark::wordcalc::{canonicalize, Gen};

fn check_trace(t: &EuclidTrace, q0: u64, q1: u64) {
    let q = &t.rests;
    let a = &t.coefficients;
    assert_eq!((q[0], q[1]), (q0, q1));
    for i in 0..a.len() {
        assert_eq!(q[i], a[i] * q[i + 1] + q[i + 2], "({q0}, {q1}) step {i}");
        assert!(q[i + 1] >= q[i + 2] && q[i + 2] > 0);
        if i >= 1 {
            assert!(a[i] > 0);
        }
    }
    let k = q.len();
    assert_eq!(q[k - 1], q[k - 2]);
    assert_eq!(t.gcd, q0.gcd(&q1));
    assert_eq!(!a.is_empty() && a[0] == 0, q0 < q1);
    let padded = t.padded_coefficients();
    assert_eq!(padded.len() % 2, 0);
    assert_eq!((t.orders[0], t.orders[1]), (1, 1));
    for (i, ai) in padded.iter().enumerate() {
        assert_eq!(t.orders[i + 2], ai * t.orders[i + 1] + t.orders[i]);
    }
}

#[test]
fn ninety_nine() {
    let t = euclid_trace(78, 21);
    assert_eq!(t.coefficients, vec![3, 1, 2, 1]);
    assert_eq!(&t.orders[2..], &[4, 5, 14, 19]);
    assert_eq!(t.gcd, 3);
    assert_eq!((19 + 14) * 3, 99);
    assert_eq!(period_identity(&t), (33, true));
    check_trace(&t, 78, 21);
}

#[test]
fn small_traces() {
    let t = euclid_trace(1, 1);
    assert!(t.coefficients.is_empty());
    assert_eq!(t.gcd, 1);
    assert_eq!(period_identity(&t), (2, true));
    let t = euclid_trace(5, 5);
    assert_eq!((t.gcd, t.coefficients.len()), (5, 0));
}

#[test]
fn period_identity_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let (q0, q1) = (rng.gen_range(1..=500u64), rng.gen_range(1..=500u64));
        let t = euclid_trace(q0, q1);
        check_trace(&t, q0, q1);
        let (period, holds) = period_identity(&t);
        assert!(holds, "({q0}, {q1})");
        assert_eq!(period, (q0 + q1) / q0.gcd(&q1));
    }
}

#[test]
fn sequence_examples() {
    let s = characteristic_sequences(7, 26).unwrap();
    assert_eq!((s.alpha.as_slice(), s.beta.as_slice()), (&[1, 1][..], &[2, 3][..]));
    assert_eq!(decompose_to_word(7, 26).unwrap().to_string(), "B^3 A B^2 A");
    let s = characteristic_sequences(1, 1).unwrap();
    assert_eq!((s.len(), s.alpha[0], s.beta[0]), (1, 0, 0));
    assert!(decompose_to_word(1, 1).unwrap().is_empty());
    assert_eq!(decompose_to_word(3, 10).unwrap().to_string(), "B^3 A^2");
    let w = characteristic_sequences(8, 13).unwrap().to_word();
    let m = oracle_phi(&w);
    assert_eq!((m[0][0] + m[0][1], m[1][0] + m[1][1]), (8, 13));
    assert_eq!(characteristic_sequences(6, 9), Err(EuclidError::NotCoprime { n: 6, p: 9 }));
    assert_eq!(decompose_to_word(0, 3), Err(EuclidError::NonPositive { n: 0, p: 3 }));
}

#[test]
fn decomposition_round_trip() {
    for n in 1..=200u64 {
        for p in 1..=200u64 {
            if n.gcd(&p) != 1 {
                assert!(decompose_to_word(n, p).is_err());
                continue;
            }
            let w = decompose_to_word(n, p).unwrap();
            let m = oracle_phi(&w);
            assert_eq!((m[0][0] + m[0][1], m[1][0] + m[1][1]), (n as i128, p as i128), "({n}, {p})");
            let s = characteristic_sequences(n, p).unwrap();
            assert_eq!(s.to_word(), w);
            let last = s.len() - 1;
            for i in 0..s.len() {
                assert!(s.alpha[i] > 0 || i == 0, "({n}, {p})");
                assert!(s.beta[i] > 0 || i == last, "({n}, {p})");
            }
        }
    }
}

// [[a, 1], [1, 0]]
fn step(a: u64) -> M {
    [[a as i128, 1], [1, 0]]
}

#[test]
fn coefficients_rebuild_the_matrix() {
    let s: M = [[0, 1], [1, 0]];
    for n in 1..40u64 {
        for p in 1..40u64 {
            if n.gcd(&p) != 1 {
                continue;
            }
            let m = oracle_phi(&decompose_to_word(n, p).unwrap());
            let a = euclid_trace(p, n).padded_coefficients();
            let prod = a.iter().fold(ID, |acc, &ai| mul(&acc, &step(ai)));
            if (n, p) == (1, 1) {
                assert!(a.is_empty());
                continue;
            }
            assert_eq!(mul(&mul(&s, &m), &s), prod, "({n}, {p})");
            // with the padding zero in place, the indices line up
            let seq = characteristic_sequences(n, p).unwrap();
            let big_n = seq.len();
            assert_eq!(a.len(), 2 * big_n, "({n}, {p})");
            for k in 0..big_n {
                assert_eq!(seq.beta[big_n - 1 - k], a[2 * k], "({n}, {p}) beta");
                assert_eq!(seq.alpha[big_n - 1 - k], a[2 * k + 1], "({n}, {p}) alpha");
            }
        }
    }
}

#[test]
fn factoring_examples() {
    let m = ProjectiveMatrix::new(1, 2, 3, 7).unwrap();
    assert_eq!(factor_positive_matrix(&m).unwrap().to_string(), "B^3 A^2");
    assert!(factor_positive_matrix(&ProjectiveMatrix::identity()).unwrap().is_empty());
    let m = ProjectiveMatrix::new(5, 3, 8, 5).unwrap();
    let w = factor_positive_matrix(&m).unwrap();
    assert!(agrees(&m, &oracle_phi(&w)));
    assert_eq!(factor_positive_matrix(&ProjectiveMatrix::new(1, -1, 0, 1).unwrap()), Err(EuclidError::NotPositive));
    assert_eq!(factor_positive_matrix(&ProjectiveMatrix::new(0, 1, 1, 0).unwrap()), Err(EuclidError::NotPositive));
}

#[test]
fn factoring_inverts_phi() {
    for len in 0..=10 {
        for w in all_words(&[(Gen::A, 1), (Gen::B, 1)], len) {
            let c = canonicalize(&w).unwrap();
            assert_eq!(factor_positive_matrix(&w.phi()).unwrap(), c.core_word(), "{w}");
        }
    }
}
