//! Independent reference arithmetic for the integration tests. Nothing here
//! calls into the library's matrix code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use trimark::projmat::ProjectiveMatrix;
use trimark::skeleton::{CrossingSequence, Excursion};
use trimark::wordcalc::{Gen, Syllable, Word};

pub type M = [[i128; 2]; 2];

pub const ID: M = [[1, 0], [0, 1]];

pub fn gen_matrix(g: Gen) -> M {
    match g {
        Gen::A => [[1, 1], [0, 1]],
        Gen::B => [[1, 0], [1, 1]],
        Gen::Z => [[0, 1], [-1, 0]],
        Gen::Y => [[-1, 0], [0, 1]],
    }
}

pub fn mul(x: &M, y: &M) -> M {
    let mut r = [[0i128; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    r
}

pub fn inv(x: &M) -> M {
    let det = x[0][0] * x[1][1] - x[0][1] * x[1][0];
    [[det * x[1][1], -det * x[0][1]], [-det * x[1][0], det * x[0][0]]]
}

/// Sign representative: positive trace, or zero trace and first nonzero of
/// `(a, b, c)` positive.
pub fn norm(x: &M) -> M {
    let t = x[0][0] + x[1][1];
    let lead = [x[0][0], x[0][1], x[1][0]].into_iter().find(|v| *v != 0).unwrap_or(0);
    if t < 0 || (t == 0 && lead < 0) {
        [[-x[0][0], -x[0][1]], [-x[1][0], -x[1][1]]]
    } else {
        *x
    }
}

pub fn same(x: &M, y: &M) -> bool {
    norm(x) == norm(y)
}

pub fn power(g: Gen, k: i64) -> M {
    let base = if k < 0 { inv(&gen_matrix(g)) } else { gen_matrix(g) };
    (0..k.unsigned_abs()).fold(ID, |acc, _| mul(&acc, &base))
}

pub fn oracle_phi(w: &Word) -> M {
    w.syllables().iter().fold(ID, |acc, s| mul(&acc, &power(s.gen, s.exp)))
}

pub fn from_lib(m: &ProjectiveMatrix) -> M {
    let e = m.entries();
    let c = |v: &BigInt| i128::try_from(v).expect("fits i128");
    [[c(e[0]), c(e[1])], [c(e[2]), c(e[3])]]
}

pub fn agrees(m: &ProjectiveMatrix, x: &M) -> bool {
    from_lib(m) == norm(x)
}

pub fn trace_abs(x: &M) -> i128 {
    (x[0][0] + x[1][1]).abs()
}

pub fn word_of(items: &[(Gen, i64)]) -> Word {
    Word::from_syllables(items.iter().map(|&(g, k)| Syllable::new(g, k)))
}

/// Random word of `len` letters over `A^±1`, `B^±1`, `Z`, `Y`.
pub fn random_word(rng: &mut impl Rng, len: usize, with_y: bool) -> Word {
    let mut w = Word::new();
    let kinds = if with_y { 6 } else { 5 };
    for _ in 0..len {
        match rng.gen_range(0..kinds) {
            0 => w.push(Gen::A, 1),
            1 => w.push(Gen::A, -1),
            2 => w.push(Gen::B, 1),
            3 => w.push(Gen::B, -1),
            4 => w.push(Gen::Z, 1),
            _ => w.push(Gen::Y, 1),
        }
    }
    w
}

pub fn random_positive(rng: &mut impl Rng, len: usize) -> Word {
    let mut w = Word::new();
    for _ in 0..len {
        w.push(if rng.gen_bool(0.5) { Gen::A } else { Gen::B }, 1);
    }
    w
}

/// Exponent sums of `A²` and `B²` blocks for a determinant-one matrix
/// congruent to the identity mod 2: the level-two congruence subgroup mod
/// sign is free on `A²` and `B²`, so the sums are well defined.
pub fn gamma2_exponent_sums(mut x: M) -> (i64, i64) {
    assert_eq!(x[0][0] * x[1][1] - x[0][1] * x[1][0], 1);
    let (mut na, mut nb) = (0i128, 0i128);
    loop {
        let (a, c) = (x[0][0], x[1][0]);
        if c == 0 {
            // ±[[1, 2m], [0, 1]]
            let m = x[0][1] * a;
            assert_eq!(m % 2, 0);
            na += m;
            break;
        }
        if a == 0 {
            unreachable!("a is odd");
        }
        if a.abs() > c.abs() {
            // row1 -= 2k row2, with |a - 2kc| < |c|
            let k = (a as f64 / (2.0 * c as f64)).round() as i128;
            na += 2 * k;
            x = mul(&[[1, -2 * k], [0, 1]], &x);
        } else {
            let k = (c as f64 / (2.0 * a as f64)).round() as i128;
            nb += 2 * k;
            x = mul(&[[1, 0], [-2 * k, 1]], &x);
        }
    }
    (na as i64, nb as i64)
}

/// Every word with `len` letters from `alphabet`, as syllable lists.
pub fn all_words(alphabet: &[(Gen, i64)], len: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for &(g, k) in alphabet {
                let mut v = w.clone();
                v.push(g, k);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// A rational strictly inside gap `g` (0 is left of everything) that the
/// sequence does not use yet.
pub fn fresh(rng: &mut impl Rng, marked: &[BigRational], used: &BTreeSet<BigRational>, g: usize) -> BigRational {
    loop {
        let t = BigRational::new(rng.gen_range(1..10_000).into(), 10_000.into());
        let x = if g == 0 {
            &marked[0] - BigRational::from_integer(BigInt::from(1)) * (BigRational::from_integer(1.into()) / &t)
        } else if g == marked.len() {
            &marked[g - 1] + BigRational::from_integer(1.into()) / &t
        } else {
            &marked[g - 1] + (&marked[g] - &marked[g - 1]) * &t
        };
        if !used.contains(&x) {
            return x;
        }
    }
}

/// Replaces a random excursion `(s, y)` by `(s, x'), (-s, x''), (s, y)` with
/// `x'` and `x''` in a common gap: a homotopically trivial wiggle.
pub fn insert_wiggle(rng: &mut impl Rng, cs: &CrossingSequence) -> CrossingSequence {
    let marked = cs.marked().to_vec();
    let mut exc = cs.excursions().to_vec();
    if exc.is_empty() {
        return cs.clone();
    }
    let mut used: BTreeSet<BigRational> = cs.points().into_iter().collect();
    let i = rng.gen_range(0..exc.len());
    let g = rng.gen_range(0..=marked.len());
    let a = fresh(rng, &marked, &used, g);
    used.insert(a.clone());
    let b = fresh(rng, &marked, &used, g);
    let s = exc[i].side;
    exc.insert(i, Excursion { side: -s, landing: b });
    exc.insert(i, Excursion { side: s, landing: a });
    CrossingSequence::new(marked, cs.start().clone(), exc).unwrap()
}
