use std::fmt;

use super::word::{Gen, Syllable, Word};
use super::WordError;

/// Relations used by the rewriter, as `(left, right)` word texts.
///
/// Each one is a matrix identity; the test suite checks all of them.
pub const RELATIONS: &[(&str, &str)] = &[
    // moving Y to the right
    ("Y A", "A^-1 Y"),
    ("Y B", "B^-1 Y"),
    ("Y Z", "Z Y"),
    ("Y Y", "Id"),
    // moving Z to the right
    ("Z A", "B^-1 Z"),
    ("Z B", "A^-1 Z"),
    ("Z Z", "Id"),
    // mixed-sign digrams
    ("A^-1 B", "Z A"),
    ("A B^-1", "B Z"),
    ("B^-1 A", "Z B"),
    ("B A^-1", "A Z"),
    // all-negative words
    ("Id", "Z Z"),
];

/// Normal form `Z^pre · core · Z^post · Y^sigma`, where `core` is a
/// positive word in `A` and `B`.
///
/// An empty core always has `post_z = false`, so `Id`, `Z`, `Y` and `Z·Y`
/// each have a single form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CanonicalForm {
    pre_z: bool,
    core: Vec<Syllable>,
    post_z: bool,
    sigma: bool,
}

impl CanonicalForm {
    pub fn identity() -> Self {
        CanonicalForm::default()
    }

    pub fn pre_z(&self) -> bool {
        self.pre_z
    }

    pub fn post_z(&self) -> bool {
        self.post_z
    }

    pub fn sigma(&self) -> bool {
        self.sigma
    }

    /// Alternating `A`/`B` syllables with positive exponents.
    pub fn core(&self) -> &[Syllable] {
        &self.core
    }

    pub fn core_word(&self) -> Word {
        Word::from_syllables(self.core.iter().copied())
    }

    pub fn is_identity(&self) -> bool {
        *self == CanonicalForm::identity()
    }

    pub fn render(&self) -> Word {
        let mut w = Word::new();
        if self.pre_z {
            w.push(Gen::Z, 1);
        }
        for s in &self.core {
            w.push(s.gen, s.exp);
        }
        if self.post_z {
            w.push(Gen::Z, 1);
        }
        if self.sigma {
            w.push(Gen::Y, 1);
        }
        w
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

struct Rewriter {
    steps: u64,
    budget: u64,
}

impl Rewriter {
    fn step(&mut self) -> Result<(), WordError> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(WordError::RewriteFuelExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }

    // Free reduction; every merge is one step.
    fn reduce(&mut self, body: Vec<Syllable>) -> Result<Vec<Syllable>, WordError> {
        let mut out: Vec<Syllable> = Vec::with_capacity(body.len());
        for s in body {
            if s.exp == 0 {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.gen == s.gen => {
                    self.step()?;
                    let sum = if s.gen.is_involution() { 0 } else { last.exp + s.exp };
                    if sum == 0 {
                        out.pop();
                    } else {
                        last.exp = sum;
                    }
                }
                _ => out.push(s),
            }
        }
        Ok(out)
    }

    // Moves every occurrence of `gen` (Z or Y) to the right end, conjugating
    // what it passes. Returns the parity of the moved letters.
    fn zip_all(&mut self, body: &mut Vec<Syllable>, gen: Gen) -> Result<bool, WordError> {
        let conj = match gen {
            Gen::Z => Syllable::conj_z,
            _ => Syllable::conj_y,
        };
        let mut parity = false;
        while let Some(i) = body.iter().position(|s| s.gen == gen) {
            self.step()?;
            body.remove(i);
            for s in &mut body[i..] {
                *s = conj(*s);
            }
            parity ^= true;
            *body = self.reduce(std::mem::take(body))?;
        }
        Ok(parity)
    }
}

pub fn canonicalize(w: &Word) -> Result<CanonicalForm, WordError> {
    let budget = 64u64.saturating_mul(w.letter_count().saturating_add(4));
    let mut rw = Rewriter { steps: 0, budget };
    let mut body = w.syllables().to_vec();

    let sigma = rw.zip_all(&mut body, Gen::Y)?;
    let mut post = rw.zip_all(&mut body, Gen::Z)?;

    // Eliminate the leftmost sign change until the word has one sign.
    while let Some(i) = (0..body.len().saturating_sub(1)).find(|&i| (body[i].exp > 0) != (body[i + 1].exp > 0)) {
        rw.step()?;
        let (x, y) = (body[i], body[i + 1]);
        let (sx, sy) = (x.exp.signum(), y.exp.signum());
        // x^sx·y^sy rewritten as either `Z·g` or `g·Z`
        let (z_first, g) = match (x.gen, sx) {
            (Gen::A, -1) => (true, Gen::A),
            (Gen::A, _) => (false, Gen::B),
            (Gen::B, -1) => (true, Gen::B),
            (_, _) => (false, Gen::A),
        };
        let mut head: Vec<Syllable> = body[..i].to_vec();
        head.push(Syllable::new(x.gen, x.exp - sx));
        let mut tail = Vec::with_capacity(body.len() - i + 1);
        if z_first {
            tail.push(Syllable::new(g, 1));
        } else {
            head.push(Syllable::new(g, 1));
        }
        tail.push(Syllable::new(y.gen, y.exp - sy));
        tail.extend_from_slice(&body[i + 2..]);
        // zip the new Z to the right end
        rw.step()?;
        head.extend(tail.into_iter().map(Syllable::conj_z));
        post ^= true;
        body = rw.reduce(head)?;
    }

    let mut pre = false;
    if body.first().is_some_and(|s| s.exp < 0) {
        // W = Z·conj(W)·Z
        rw.step()?;
        for s in &mut body {
            *s = s.conj_z();
        }
        pre = true;
        post ^= true;
    }
    if body.is_empty() {
        pre = post;
        post = false;
    }
    Ok(CanonicalForm { pre_z: pre, core: body, post_z: post, sigma })
}

pub fn compose(c1: &CanonicalForm, c2: &CanonicalForm) -> Result<CanonicalForm, WordError> {
    canonicalize(&c1.render().concat(&c2.render()))
}

pub fn invert(c: &CanonicalForm) -> Result<CanonicalForm, WordError> {
    canonicalize(&c.render().inverse())
}
