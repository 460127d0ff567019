use std::fmt;
use std::str::FromStr;

use crate::projmat::{Generator, ProjectiveMatrix};

use super::WordError;

/// Largest accepted exponent magnitude in parsed text.
pub const MAX_EXPONENT: i64 = (1 << 53) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
    Z,
    Y,
}

impl Gen {
    pub fn is_involution(self) -> bool {
        matches!(self, Gen::Z | Gen::Y)
    }

    /// The other one of `A`, `B`.
    pub fn swap(self) -> Gen {
        match self {
            Gen::A => Gen::B,
            Gen::B => Gen::A,
            g => g,
        }
    }

    pub fn name(self) -> char {
        match self {
            Gen::A => 'A',
            Gen::B => 'B',
            Gen::Z => 'Z',
            Gen::Y => 'Y',
        }
    }

    pub fn matrix(self) -> ProjectiveMatrix {
        ProjectiveMatrix::generator(match self {
            Gen::A => Generator::A,
            Gen::B => Generator::B,
            Gen::Z => Generator::Z,
            Gen::Y => Generator::Y,
        })
    }
}

/// One power `gen^exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: Gen,
    pub exp: i64,
}

impl Syllable {
    pub fn new(gen: Gen, exp: i64) -> Self {
        Syllable { gen, exp }
    }

    pub fn matrix(&self) -> ProjectiveMatrix {
        match self.gen {
            Gen::A => ProjectiveMatrix::a_pow(self.exp),
            Gen::B => ProjectiveMatrix::b_pow(self.exp),
            g => g.matrix(),
        }
    }

    /// Conjugate by `Z`: `Z·A^k·Z = B^-k`, `Z·B^k·Z = A^-k`.
    pub(crate) fn conj_z(self) -> Self {
        match self.gen {
            Gen::A | Gen::B => Syllable::new(self.gen.swap(), -self.exp),
            _ => self,
        }
    }

    /// Conjugate by `Y`: `Y·A^k·Y = A^-k`, `Y·B^k·Y = B^-k`.
    pub(crate) fn conj_y(self) -> Self {
        match self.gen {
            Gen::A | Gen::B => Syllable::new(self.gen, -self.exp),
            _ => self,
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "{}", self.gen.name())
        } else {
            write!(f, "{}^{}", self.gen.name(), self.exp)
        }
    }
}

/// A freely reduced word in `A`, `B`, `Z`, `Y`.
///
/// Adjacent syllables always carry different generators, no exponent is
/// zero, and `Z`, `Y` only appear to the first power.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn new() -> Self {
        Word::default()
    }

    pub fn from_syllables(items: impl IntoIterator<Item = Syllable>) -> Self {
        let mut w = Word::new();
        for s in items {
            w.push(s.gen, s.exp);
        }
        w
    }

    /// Parses a word such as `"B^3 A^-2 * Z T"`.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        parse_word(text)
    }

    /// Appends `gen^exp` and reduces.
    pub fn push(&mut self, gen: Gen, exp: i64) {
        let exp = if gen.is_involution() { exp.rem_euclid(2) } else { exp };
        if exp == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.gen == gen {
                let sum = if gen.is_involution() {
                    0
                } else {
                    last.exp.checked_add(exp).expect("exponent overflow")
                };
                if sum == 0 {
                    self.syllables.pop();
                } else {
                    last.exp = sum;
                }
                return;
            }
        }
        self.syllables.push(Syllable::new(gen, exp));
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, counting `A^k` as `|k|` letters.
    pub fn letter_count(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for s in &other.syllables {
            w.push(s.gen, s.exp);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word::from_syllables(self.syllables.iter().rev().map(|s| Syllable::new(s.gen, -s.exp)))
    }

    pub fn contains(&self, gen: Gen) -> bool {
        self.syllables.iter().any(|s| s.gen == gen)
    }

    /// The product of the generator matrices in word order.
    pub fn phi(&self) -> ProjectiveMatrix {
        self.syllables
            .iter()
            .fold(ProjectiveMatrix::identity(), |m, s| m.mul(&s.matrix()))
    }
}

pub fn phi(w: &Word) -> ProjectiveMatrix {
    w.phi()
}

impl fmt::Display for Word {
    /// The empty word prints as `Id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "Id");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let bytes = text.as_bytes();
    let mut w = Word::new();
    let mut i = 0;
    let err = |offset: usize, message: &str| WordError::Syntax { offset, message: message.to_string() };
    while i < bytes.len() {
        let ch = bytes[i];
        if ch.is_ascii_whitespace() || ch == b'*' {
            i += 1;
            continue;
        }
        if text[i..].starts_with("Id") {
            i += 2;
            continue;
        }
        let gens: &[Gen] = match ch {
            b'A' => &[Gen::A],
            b'B' => &[Gen::B],
            b'Z' => &[Gen::Z],
            b'Y' => &[Gen::Y],
            b'T' => &[Gen::Y, Gen::Z],
            _ => return Err(err(i, "expected one of A, B, Z, Y, T")),
        };
        i += 1;
        let mut exp: i64 = 1;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let negative = i < bytes.len() && bytes[i] == b'-';
            if negative {
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(start, "expected digits after '^'"));
            }
            let magnitude: i64 = text[start..i]
                .parse()
                .ok()
                .filter(|m| *m <= MAX_EXPONENT)
                .ok_or_else(|| err(start, "exponent out of range"))?;
            exp = if negative { -magnitude } else { magnitude };
        }
        if i < bytes.len() && !(bytes[i].is_ascii_whitespace() || bytes[i] == b'*') && !b"ABZYTI".contains(&bytes[i]) {
            return Err(err(i, "unexpected character"));
        }
        match gens {
            [g] => w.push(*g, exp),
            _ => {
                // T = Y·Z is an involution
                if exp.rem_euclid(2) == 1 {
                    for g in gens {
                        w.push(*g, 1);
                    }
                }
            }
        }
    }
    Ok(w)
}
