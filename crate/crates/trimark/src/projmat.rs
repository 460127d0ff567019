//! Exact 2×2 integer matrices of determinant ±1, taken up to sign.
//!
//! Every class is stored through one representative: positive trace, or
//! zero trace with the first nonzero of `(a, b, c)` positive. Equality of
//! classes is then plain equality of fields.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::json::int_value;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("determinant {det} is not +1 or -1")]
    DeterminantInvalid { det: BigInt },
    #[error("class with |trace| = {trace_abs} and determinant {det} is not hyperbolic")]
    NotHyperbolic { trace_abs: BigInt, det: i8 },
}

impl MatrixError {
    pub fn code(&self) -> &'static str {
        match self {
            MatrixError::DeterminantInvalid { .. } => "determinant_invalid",
            MatrixError::NotHyperbolic { .. } => "not_hyperbolic",
        }
    }
}

/// Named generators. `T` is the product `Y·Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    A,
    B,
    Z,
    Y,
    T,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::A,
        Generator::B,
        Generator::Z,
        Generator::Y,
        Generator::T,
    ];

    pub fn from_name(name: &str) -> Option<Generator> {
        match name {
            "A" => Some(Generator::A),
            "B" => Some(Generator::B),
            "Z" => Some(Generator::Z),
            "Y" => Some(Generator::Y),
            "T" => Some(Generator::T),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl ProjectiveMatrix {
    /// Builds the class of `[[a, b], [c, d]]`.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, MatrixError> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let det = &a * &d - &b * &c;
        if det.abs() != BigInt::one() {
            return Err(MatrixError::DeterminantInvalid { det });
        }
        Ok(Self::normalized(a, b, c, d))
    }

    // Caller guarantees |det| = 1.
    fn normalized(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let tr = &a + &d;
        let flip = if tr.is_zero() {
            let lead = [&a, &b, &c].into_iter().find(|x| !x.is_zero());
            lead.is_some_and(|x| x.is_negative())
        } else {
            tr.is_negative()
        };
        if flip {
            ProjectiveMatrix { a: -a, b: -b, c: -c, d: -d }
        } else {
            ProjectiveMatrix { a, b, c, d }
        }
    }

    pub fn identity() -> Self {
        Self::from_small(1, 0, 0, 1)
    }

    fn from_small(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::normalized(a.into(), b.into(), c.into(), d.into())
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::A => Self::from_small(1, 1, 0, 1),
            Generator::B => Self::from_small(1, 0, 1, 1),
            Generator::Z => Self::from_small(0, 1, -1, 0),
            Generator::Y => Self::from_small(-1, 0, 0, 1),
            Generator::T => &Self::generator(Generator::Y) * &Self::generator(Generator::Z),
        }
    }

    /// `A^k`, in closed form.
    pub fn a_pow(k: impl Into<BigInt>) -> Self {
        Self::normalized(BigInt::one(), k.into(), BigInt::zero(), BigInt::one())
    }

    /// `B^k`, in closed form.
    pub fn b_pow(k: impl Into<BigInt>) -> Self {
        Self::normalized(BigInt::one(), BigInt::zero(), k.into(), BigInt::one())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> i8 {
        if &self.a * &self.d - &self.b * &self.c == BigInt::one() {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.a * &other.a + &self.b * &other.c;
        let b = &self.a * &other.b + &self.b * &other.d;
        let c = &self.c * &other.a + &self.d * &other.c;
        let d = &self.c * &other.b + &self.d * &other.d;
        Self::normalized(a, b, c, d)
    }

    pub fn inverse(&self) -> Self {
        // adj(M) / det(M)
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        if self.det() == 1 {
            Self::normalized(d.clone(), -b, -c, a.clone())
        } else {
            Self::normalized(-d, b.clone(), c.clone(), -a)
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn trace_abs(&self) -> BigInt {
        (&self.a + &self.d).abs()
    }

    /// Lower bound on the number of Nielsen classes of fixed points.
    pub fn nielsen_lower_bound(&self) -> BigInt {
        self.trace_abs()
    }

    fn hyperbolic_trace(&self) -> Result<BigInt, MatrixError> {
        let t = self.trace_abs();
        if self.det() != 1 || t < BigInt::from(3) {
            return Err(MatrixError::NotHyperbolic { trace_abs: t, det: self.det() });
        }
        Ok(t)
    }

    /// `λ = (t + √(t² − 4)) / 2` for `t = |Tr|`, which must be at least 3.
    pub fn leading_eigenvalue(&self) -> Result<f64, MatrixError> {
        let t = self.hyperbolic_trace()?;
        let t = t.to_f64().unwrap_or(f64::INFINITY);
        Ok((t + (t * t - 4.0).sqrt()) / 2.0)
    }

    /// `ln λ`, the lower bound on topological entropy.
    pub fn entropy_lower_bound(&self) -> Result<f64, MatrixError> {
        let t = self.hyperbolic_trace()?;
        // ln λ = ln t + ln((1 + √(1 − 4/t²)) / 2), stable for any size of t.
        let (ln_t, tf) = ln_big(&t);
        let ratio = if tf.is_finite() {
            (1.0 + (1.0 - 4.0 / (tf * tf)).sqrt()) / 2.0
        } else {
            1.0
        };
        Ok(ln_t + ratio.ln())
    }

    pub fn reduce_mod2(&self) -> Mod2Matrix {
        let bit = |x: &BigInt| x.is_odd();
        Mod2Matrix {
            m: [[bit(&self.a), bit(&self.b)], [bit(&self.c), bit(&self.d)]],
        }
    }

    /// `M · (x, y)ᵀ` on column vectors.
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": int_value(&self.a),
            "b": int_value(&self.b),
            "c": int_value(&self.c),
            "d": int_value(&self.d),
            "det": self.det(),
            "trace_abs": int_value(&self.trace_abs()),
        })
    }
}

// Natural log of a positive integer, together with its f64 value.
fn ln_big(t: &BigInt) -> (f64, f64) {
    if let Some(f) = t.to_f64().filter(|f| f.is_finite()) {
        return (f.ln(), f);
    }
    let shift = t.bits().saturating_sub(64);
    let top = (t >> shift).to_f64().unwrap_or(f64::MAX);
    (top.ln() + shift as f64 * std::f64::consts::LN_2, f64::INFINITY)
}

impl Mul for &ProjectiveMatrix {
    type Output = ProjectiveMatrix;
    fn mul(self, rhs: &ProjectiveMatrix) -> ProjectiveMatrix {
        ProjectiveMatrix::mul(self, rhs)
    }
}

impl fmt::Display for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A 2×2 matrix over the field with two elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mod2Matrix {
    m: [[bool; 2]; 2],
}

impl Mod2Matrix {
    /// Returns `None` unless the matrix is invertible.
    pub fn new(a: u8, b: u8, c: u8, d: u8) -> Option<Self> {
        let m = Mod2Matrix {
            m: [[a & 1 == 1, b & 1 == 1], [c & 1 == 1, d & 1 == 1]],
        };
        m.is_invertible().then_some(m)
    }

    pub fn identity() -> Self {
        Mod2Matrix { m: [[true, false], [false, true]] }
    }

    fn is_invertible(&self) -> bool {
        (self.m[0][0] & self.m[1][1]) ^ (self.m[0][1] & self.m[1][0])
    }

    pub fn entries(&self) -> [u8; 4] {
        let [[a, b], [c, d]] = self.m;
        [a as u8, b as u8, c as u8, d as u8]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (x, y) = (&self.m, &other.m);
        let e = |i: usize, j: usize| (x[i][0] & y[0][j]) ^ (x[i][1] & y[1][j]);
        Mod2Matrix { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    // Row vector times matrix.
    fn act_row(&self, v: [bool; 2]) -> [bool; 2] {
        [
            (v[0] & self.m[0][0]) ^ (v[1] & self.m[1][0]),
            (v[0] & self.m[0][1]) ^ (v[1] & self.m[1][1]),
        ]
    }

    /// The permutation of the marked points `p1, p2, p3`, which are
    /// identified with the row vectors `[1,0]`, `[1,1]`, `[0,1]` and moved by
    /// `v ↦ v·M`. With this convention the permutation of `M1·M2` is the
    /// permutation of `M1` followed by that of `M2`.
    pub fn induced_permutation(&self) -> MarkedPermutation {
        const POINTS: [[bool; 2]; 3] = [[true, false], [true, true], [false, true]];
        let index = |v: [bool; 2]| POINTS.iter().position(|p| *p == v).expect("nonzero vector") as u8;
        let mut images = [0u8; 3];
        for (i, p) in POINTS.iter().enumerate() {
            images[i] = index(self.act_row(*p)) + 1;
        }
        MarkedPermutation { images }
    }
}

impl fmt::Display for Mod2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries();
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// A permutation of the three marked points, `images[i]` being the image of
/// `p_{i+1}` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedPermutation {
    images: [u8; 3],
}

impl MarkedPermutation {
    pub fn new(images: [u8; 3]) -> Option<Self> {
        let mut sorted = images;
        sorted.sort_unstable();
        (sorted == [1, 2, 3]).then_some(MarkedPermutation { images })
    }

    pub fn identity() -> Self {
        MarkedPermutation { images: [1, 2, 3] }
    }

    pub fn images(&self) -> [u8; 3] {
        self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images == [1, 2, 3]
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Self) -> Self {
        let mut images = [0u8; 3];
        for (i, img) in images.iter_mut().enumerate() {
            *img = next.images[(self.images[i] - 1) as usize];
        }
        MarkedPermutation { images }
    }
}

impl fmt::Display for MarkedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.images;
        write!(f, "(1;2;3) -> ({x};{y};{z})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negation_is_identified() {
        let m = ProjectiveMatrix::new(-1, 0, 0, -1).unwrap();
        assert!(m.is_identity());
        let z = ProjectiveMatrix::new(0, -1, 1, 0).unwrap();
        assert_eq!(z, ProjectiveMatrix::generator(Generator::Z));
    }

    #[test]
    fn bad_determinant() {
        let err = ProjectiveMatrix::new(2, 0, 0, 1).unwrap_err();
        assert_eq!(err, MatrixError::DeterminantInvalid { det: 2.into() });
    }

    #[test]
    fn t_is_the_swap() {
        let t = ProjectiveMatrix::generator(Generator::T);
        assert_eq!(t.entries(), [&0.into(), &1.into(), &1.into(), &0.into()]);
        assert_eq!(t.det(), -1);
    }

    #[test]
    fn zero_trace_tie_break() {
        // first nonzero of (a, b, c) decides the sign
        let m = ProjectiveMatrix::new(0, -1, -1, 0).unwrap();
        assert_eq!(*m.b(), 1.into());
        let m = ProjectiveMatrix::new(-2, 1, -5, 2).unwrap();
        assert_eq!(*m.a(), 2.into());
    }

    #[test]
    fn huge_entropy_is_finite() {
        let m = ProjectiveMatrix::a_pow(BigInt::from(10).pow(400)).mul(&ProjectiveMatrix::generator(Generator::B));
        let h = m.entropy_lower_bound().unwrap();
        assert!((h - 400.0 * 10f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn permutation_of_z() {
        let p = ProjectiveMatrix::generator(Generator::Z).reduce_mod2().induced_permutation();
        assert_eq!(p.images(), [3, 2, 1]);
    }
}
