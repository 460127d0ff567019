//! Euclid's algorithm with remainders in `(0, q]`, characteristic
//! sequences of coprime pairs, and factoring of positive matrices into
//! words in `A` and `B`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::projmat::ProjectiveMatrix;
use crate::wordcalc::{Gen, Syllable, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EuclidError {
    #[error("{n} and {p} are not coprime")]
    NotCoprime { n: u64, p: u64 },
    #[error("parameters must be positive, got ({n}, {p})")]
    NonPositive { n: u64, p: u64 },
    #[error("matrix has no representative with nonnegative entries and determinant 1")]
    NotPositive,
}

impl EuclidError {
    pub fn code(&self) -> &'static str {
        match self {
            EuclidError::NotCoprime { .. } => "not_coprime",
            EuclidError::NonPositive { .. } => "non_positive",
            EuclidError::NotPositive => "not_positive",
        }
    }
}

/// Rests `q_i`, coefficients `a_i` and orders `u_i` of
/// `q_i = a_i q_{i+1} + q_{i+2}` with `0 < q_{i+2} ≤ q_{i+1}`, stopped at the
/// first repeated rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTrace {
    pub rests: Vec<u64>,
    pub coefficients: Vec<u64>,
    /// Whether a trailing `a = 0` was added to make the count even.
    pub padded: bool,
    pub orders: Vec<u64>,
    pub gcd: u64,
}

impl EuclidTrace {
    /// Coefficients including the padding zero, if any.
    pub fn padded_coefficients(&self) -> Vec<u64> {
        let mut a = self.coefficients.clone();
        if self.padded {
            a.push(0);
        }
        a
    }

    /// Half the number of padded coefficients.
    pub fn half_length(&self) -> usize {
        self.padded_coefficients().len() / 2
    }
}

/// # Panics
/// If either input is zero.
pub fn euclid_trace(q0: u64, q1: u64) -> EuclidTrace {
    assert!(q0 > 0 && q1 > 0, "rests must be positive");
    let mut rests = vec![q0, q1];
    let mut coefficients = Vec::new();
    if q0 != q1 {
        loop {
            let (x, y) = (rests[rests.len() - 2], rests[rests.len() - 1]);
            let (k, r) = x.div_rem(&y);
            let (a, r) = if r == 0 { (k - 1, y) } else { (k, r) };
            coefficients.push(a);
            rests.push(r);
            if r == y {
                break;
            }
        }
    }
    let padded = !coefficients.is_empty() && coefficients.len() % 2 == 1;
    let mut orders = vec![1u64, 1];
    let mut padded_coeffs = coefficients.clone();
    if padded {
        padded_coeffs.push(0);
    }
    for a in padded_coeffs {
        let n = orders.len();
        orders.push(a * orders[n - 1] + orders[n - 2]);
    }
    let gcd = *rests.last().expect("two rests");
    EuclidTrace { rests, coefficients, padded, orders, gcd }
}

/// `(q0 + q1) / d` and whether it equals the sum of the last two orders.
pub fn period_identity(t: &EuclidTrace) -> (u64, bool) {
    let total = t.rests[0] as u128 + t.rests[1] as u128;
    let period = (total / t.gcd as u128) as u64;
    let n = t.orders.len();
    let sum = t.orders[n - 1] as u128 + t.orders[n - 2] as u128;
    (period, sum * t.gcd as u128 == total)
}

/// Exponents of `(n, p) = B^β_N A^α_N ⋯ B^β_1 A^α_1 · (1, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicSequence {
    pub alpha: Vec<u64>,
    pub beta: Vec<u64>,
}

impl CharacteristicSequence {
    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn to_word(&self) -> Word {
        let mut w = Word::new();
        for i in (0..self.len()).rev() {
            w.push(Gen::B, self.beta[i] as i64);
            w.push(Gen::A, self.alpha[i] as i64);
        }
        w
    }
}

fn check_pair(n: u64, p: u64) -> Result<(), EuclidError> {
    if n == 0 || p == 0 {
        return Err(EuclidError::NonPositive { n, p });
    }
    if n.gcd(&p) != 1 {
        return Err(EuclidError::NotCoprime { n, p });
    }
    Ok(())
}

// Runs of letters in word order, peeled from the left.
fn peel(mut n: u64, mut p: u64) -> Vec<(Gen, u64)> {
    let mut runs = Vec::new();
    while (n, p) != (1, 1) {
        if p > n {
            let k = (p - 1) / n;
            p -= k * n;
            runs.push((Gen::B, k));
        } else {
            let k = (n - 1) / p;
            n -= k * p;
            runs.push((Gen::A, k));
        }
    }
    runs
}

pub fn characteristic_sequences(n: u64, p: u64) -> Result<CharacteristicSequence, EuclidError> {
    check_pair(n, p)?;
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let runs = peel(n, p);
    let mut iter = runs.iter().rev().peekable();
    // read right to left: A^α_1 B^β_1 A^α_2 ...
    loop {
        let a = match iter.peek() {
            Some((Gen::A, k)) => {
                let k = *k;
                iter.next();
                k
            }
            _ => 0,
        };
        let b = match iter.peek() {
            Some((Gen::B, k)) => {
                let k = *k;
                iter.next();
                k
            }
            _ => 0,
        };
        alpha.push(a);
        beta.push(b);
        if iter.peek().is_none() {
            break;
        }
    }
    Ok(CharacteristicSequence { alpha, beta })
}

/// The positive word `w` with `Φ(w)·(1, 1)ᵀ = (n, p)ᵀ`.
pub fn decompose_to_word(n: u64, p: u64) -> Result<Word, EuclidError> {
    check_pair(n, p)?;
    Ok(Word::from_syllables(peel(n, p).into_iter().map(|(g, k)| Syllable::new(g, k as i64))))
}

/// Writes a matrix with nonnegative entries and determinant 1 as a
/// positive word, peeling `A` while the first row dominates the second and
/// `B` while the second dominates.
pub fn factor_positive_matrix(m: &ProjectiveMatrix) -> Result<Word, EuclidError> {
    if m.det() != 1 || m.entries().iter().any(|x| *x < &BigInt::zero()) {
        return Err(EuclidError::NotPositive);
    }
    let [a, b, c, d] = m.entries().map(|x| x.clone());
    let mut rows = [[a, b], [c, d]];
    let mut w = Word::new();
    let one = BigInt::one();
    let zero = BigInt::zero();
    while !(rows[0] == [one.clone(), zero.clone()] && rows[1] == [zero.clone(), one.clone()]) {
        let top = if rows[0][0] >= rows[1][0] && rows[0][1] >= rows[1][1] {
            0
        } else if rows[1][0] >= rows[0][0] && rows[1][1] >= rows[0][1] {
            1
        } else {
            return Err(EuclidError::NotPositive);
        };
        let (hi, lo) = (&rows[top], &rows[1 - top]);
        // largest k with hi - k·lo ≥ 0 entrywise
        let k = (0..2)
            .filter(|&j| !lo[j].is_zero())
            .map(|j| &hi[j] / &lo[j])
            .min()
            .ok_or(EuclidError::NotPositive)?;
        if k.is_zero() {
            return Err(EuclidError::NotPositive);
        }
        let new = [&hi[0] - &k * &lo[0], &hi[1] - &k * &lo[1]];
        rows[top] = new;
        let k: i64 = i64::try_from(k).map_err(|_| EuclidError::NotPositive)?;
        w.push(if top == 0 { Gen::A } else { Gen::B }, k);
    }
    Ok(w)
}
