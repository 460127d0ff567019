use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::projmat::{Generator, ProjectiveMatrix};

use super::canon::canonicalize;
use super::word::{Gen, Syllable, Word};
use super::WordError;

/// The type of a class, read off the absolute value of its trace.
#[derive(Debug, Clone, PartialEq)]
pub enum TraceClass {
    /// Trace 0: an involution.
    FiniteOrder2,
    /// Trace 1, orientation preserving.
    FiniteOrder3,
    /// Trace 2: conjugate to `letter^power`. The identity is `A^0`.
    Parabolic { letter: Gen, power: i64 },
    /// Trace at least 3, orientation preserving.
    Turbulent {
        conjugacy_representative: Word,
        lambda: f64,
        entropy: f64,
        nielsen_bound: BigInt,
    },
    /// Orientation-reversing class with nonzero trace.
    Reversing { conjugacy_representative: Word, trace_abs: BigInt },
}

impl TraceClass {
    pub fn tag(&self) -> &'static str {
        match self {
            TraceClass::FiniteOrder2 => "finite_order_2",
            TraceClass::FiniteOrder3 => "finite_order_3",
            TraceClass::Parabolic { .. } => "parabolic",
            TraceClass::Turbulent { .. } => "turbulent",
            TraceClass::Reversing { .. } => "reversing",
        }
    }
}

pub fn classify(w: &Word) -> Result<TraceClass, WordError> {
    let m = w.phi();
    let t = m.trace_abs();
    if m.det() == -1 {
        if t == BigInt::from(0) {
            return Ok(TraceClass::FiniteOrder2);
        }
        return Ok(TraceClass::Reversing { conjugacy_representative: conjugacy_reduce(w)?, trace_abs: t });
    }
    if t == BigInt::from(0) {
        return Ok(TraceClass::FiniteOrder2);
    }
    if t == BigInt::from(1) {
        return Ok(TraceClass::FiniteOrder3);
    }
    let rep = conjugacy_reduce(w)?;
    if t == BigInt::from(2) {
        let (letter, power) = match rep.syllables() {
            [] => (Gen::A, 0),
            [s] => (s.gen, s.exp),
            _ => unreachable!("parabolic representative is a single power"),
        };
        return Ok(TraceClass::Parabolic { letter, power });
    }
    let lambda = m.leading_eigenvalue().expect("trace at least 3");
    let entropy = m.entropy_lower_bound().expect("trace at least 3");
    Ok(TraceClass::Turbulent { conjugacy_representative: rep, lambda, entropy, nielsen_bound: t })
}

/// A conjugate of `w` in one of the shapes: positive word in `A` and `B`
/// (cyclically rotated to the smallest rotation, `A < B`), `A Z`, `B Z`,
/// `Z`, or empty. Orientation-reversing classes come out as
/// `W Z^e Y` with `W` positive.
pub fn conjugacy_reduce(w: &Word) -> Result<Word, WordError> {
    let c = canonicalize(w)?;
    if c.sigma() {
        // Z^a W Z^b Y ~ W Z^(a+b) Y
        let mut out = c.core_word();
        out.push(Gen::Z, (c.pre_z() ^ c.post_z()) as i64);
        out.push(Gen::Y, 1);
        return Ok(out);
    }
    let mut letters: VecDeque<(Gen, u64)> = c.core().iter().map(|s| (s.gen, s.exp as u64)).collect();
    if letters.is_empty() {
        return Ok(if c.pre_z() { Word::from_syllables([Syllable::new(Gen::Z, 1)]) } else { Word::new() });
    }
    // Z^a W Z^b ~ W Z^(a+b)
    let mut z = c.pre_z() ^ c.post_z();
    while z {
        let first = letters.front().map(|s| s.0);
        let last = letters.back().map(|s| s.0);
        match (first, last) {
            (None, _) | (_, None) => break,
            (Some(f), Some(_)) if letters.len() == 1 && letters[0].1 == 1 => {
                // A Z or B Z
                let mut out = Word::new();
                out.push(f, 1);
                out.push(Gen::Z, 1);
                return Ok(out);
            }
            (Some(f), Some(l)) => {
                pop_front(&mut letters);
                pop_back(&mut letters);
                if f == l {
                    // A w A Z ~ w B, B w B Z ~ w A
                    push_back(&mut letters, f.swap(), 1);
                    z = false;
                }
                // A w B Z ~ w Z, B w A Z ~ w Z
            }
        }
    }
    if z {
        return Ok(Word::from_syllables([Syllable::new(Gen::Z, 1)]));
    }
    Ok(min_rotation(letters))
}

fn pop_front(q: &mut VecDeque<(Gen, u64)>) {
    if let Some(f) = q.front_mut() {
        f.1 -= 1;
        if f.1 == 0 {
            q.pop_front();
        }
    }
}

fn pop_back(q: &mut VecDeque<(Gen, u64)>) {
    if let Some(b) = q.back_mut() {
        b.1 -= 1;
        if b.1 == 0 {
            q.pop_back();
        }
    }
}

fn push_back(q: &mut VecDeque<(Gen, u64)>, g: Gen, k: u64) {
    match q.back_mut() {
        Some(b) if b.0 == g => b.1 += k,
        _ => q.push_back((g, k)),
    }
}

// Smallest cyclic rotation of a positive word over A < B.
fn min_rotation(q: VecDeque<(Gen, u64)>) -> Word {
    let mut runs: Vec<(Gen, u64)> = q.into_iter().collect();
    if runs.len() > 1 && runs[0].0 == runs[runs.len() - 1].0 {
        let last = runs.pop().expect("nonempty");
        runs[0].1 += last.1;
    }
    if runs.len() == 1 {
        return Word::from_syllables([Syllable::new(runs[0].0, runs[0].1 as i64)]);
    }
    // Candidates start at an A run. Comparing letter strings: a longer
    // A run is smaller, a longer B run is larger.
    let key = |start: usize| -> Vec<i128> {
        (0..runs.len())
            .map(|k| {
                let (g, n) = runs[(start + k) % runs.len()];
                if g == Gen::A {
                    -(n as i128)
                } else {
                    n as i128
                }
            })
            .collect()
    };
    let best = (0..runs.len())
        .filter(|&i| runs[i].0 == Gen::A)
        .min_by_key(|&i| key(i))
        .expect("an A run exists");
    Word::from_syllables((0..runs.len()).map(|k| {
        let (g, n) = runs[(best + k) % runs.len()];
        Syllable::new(g, n as i64)
    }))
}

/// A single displacement of the middle marked point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    Left,
    Right,
}

/// Multiplies `A` (for `Left`) or `B` (for `Right`) on the left, starting
/// from `Id`, or from `Y` when the map reverses orientation.
pub fn turbulence_from_displacements(moves: &[Move], orientation_preserving: bool) -> ProjectiveMatrix {
    let start = if orientation_preserving {
        ProjectiveMatrix::identity()
    } else {
        ProjectiveMatrix::generator(Generator::Y)
    };
    moves.iter().fold(start, |m, mv| {
        let g = match mv {
            Move::Left => Generator::A,
            Move::Right => Generator::B,
        };
        ProjectiveMatrix::generator(g).mul(&m)
    })
}
