use std::fmt;
use std::str::FromStr;

use super::canon::canonicalize;
use super::word::{Gen, Syllable, Word};
use super::WordError;

/// Longest circulation code `word_to_code` will expand.
pub const MAX_TURNS: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    L,
    R,
}

/// Route of the middle point on the graph: optional leading `Z`, a list of
/// left/right turns, optional trailing `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CirculationCode {
    pub pre_z: bool,
    pub turns: Vec<Turn>,
    pub post_z: bool,
}

impl CirculationCode {
    /// Codes produced by `word_to_code`: a trailing `Z` needs some turns.
    pub fn is_well_formed(&self) -> bool {
        !(self.turns.is_empty() && self.post_z)
    }
}

impl fmt::Display for CirculationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens: Vec<&str> = Vec::new();
        if self.pre_z {
            tokens.push("Z");
        }
        tokens.extend(self.turns.iter().map(|t| match t {
            Turn::L => "l",
            Turn::R => "r",
        }));
        if self.post_z {
            tokens.push("Z");
        }
        write!(f, "{}", tokens.join(" "))
    }
}

impl FromStr for CirculationCode {
    type Err = WordError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut code = CirculationCode::default();
        let tokens: Vec<(usize, &str)> = text
            .split_whitespace()
            .map(|t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
            .collect();
        let last = tokens.len().saturating_sub(1);
        for (i, &(offset, tok)) in tokens.iter().enumerate() {
            match tok {
                "l" => code.turns.push(Turn::L),
                "r" => code.turns.push(Turn::R),
                "Z" if i == 0 => code.pre_z = true,
                "Z" if i == last => code.post_z = true,
                _ => {
                    return Err(WordError::Syntax {
                        offset,
                        message: format!("unexpected token {tok:?}"),
                    })
                }
            }
        }
        Ok(code)
    }
}

pub fn code_to_word(code: &CirculationCode) -> Word {
    let mut w = Word::new();
    if code.pre_z {
        w.push(Gen::Z, 1);
    }
    for t in &code.turns {
        w.push(if *t == Turn::L { Gen::A } else { Gen::B }, 1);
    }
    if code.post_z {
        w.push(Gen::Z, 1);
    }
    w
}

pub fn word_to_code(w: &Word) -> Result<CirculationCode, WordError> {
    let c = canonicalize(w)?;
    if c.sigma() {
        return Err(WordError::OrientationReversing);
    }
    let letters = c.core_word().letter_count();
    if letters > MAX_TURNS {
        return Err(WordError::TooLong { letters, limit: MAX_TURNS });
    }
    let mut turns = Vec::with_capacity(letters as usize);
    for s in c.core() {
        let t = if s.gen == Gen::A { Turn::L } else { Turn::R };
        turns.extend(std::iter::repeat(t).take(s.exp as usize));
    }
    Ok(CirculationCode { pre_z: c.pre_z(), turns, post_z: c.post_z() })
}

/// Rewrites a class acting trivially on the marked points as a product of
/// even powers of `A` and `B`.
pub fn even_decomposition(w: &Word) -> Result<Word, WordError> {
    let m = w.phi();
    if !m.reduce_mod2().is_identity() {
        return Err(WordError::NotPurePermutationTrivial);
    }
    if m.det() == -1 {
        return Err(WordError::OrientationReversing);
    }
    let c = canonicalize(w)?;
    let rendered = c.render();
    let budget = 64u64.saturating_mul(rendered.letter_count().saturating_add(4));
    let mut prefix: Vec<Syllable> = rendered.syllables().to_vec();
    let mut steps = 0u64;
    // value = prefix · Z^s · out
    let mut s = false;
    let mut out: Vec<Syllable> = Vec::new();
    let conj = |x: Syllable, s: bool| if s { x.conj_z() } else { x };
    while let Some(item) = prefix.pop() {
        steps += 1;
        if steps > budget {
            return Err(WordError::RewriteFuelExceeded { budget });
        }
        if item.gen == Gen::Z {
            s = !s;
            continue;
        }
        let k = item.exp;
        if k % 2 == 0 {
            out.push(conj(item, s));
            continue;
        }
        // Prefix exponents stay positive, so L^k = L^-1 · L^(k+1).
        debug_assert!(k > 0);
        out.push(conj(Syllable::new(item.gen, k + 1), s));
        let l = item.gen;
        match prefix.last().copied() {
            Some(left) if left.gen == l.swap() => {
                // L'^j L^-1 = L'^(j-1) · (L' L^-1) = L'^(j-1) L Z
                prefix.pop();
                push_reduced(&mut prefix, Syllable::new(left.gen, left.exp - 1));
                push_reduced(&mut prefix, Syllable::new(l, 1));
                push_reduced(&mut prefix, Syllable::new(Gen::Z, 1));
            }
            Some(left) if left.gen == Gen::Z => {
                // Z L^-1 = L' Z
                prefix.pop();
                push_reduced(&mut prefix, Syllable::new(l.swap(), 1));
                push_reduced(&mut prefix, Syllable::new(Gen::Z, 1));
            }
            _ => {
                // L^-1 = Z L' Z
                push_reduced(&mut prefix, Syllable::new(Gen::Z, 1));
                push_reduced(&mut prefix, Syllable::new(l.swap(), 1));
                push_reduced(&mut prefix, Syllable::new(Gen::Z, 1));
            }
        }
    }
    debug_assert!(!s, "trivial mod-2 image leaves no Z behind");
    out.reverse();
    Ok(Word::from_syllables(out))
}

fn push_reduced(stack: &mut Vec<Syllable>, x: Syllable) {
    if x.exp == 0 {
        return;
    }
    match stack.last_mut() {
        Some(top) if top.gen == x.gen => {
            let sum = if x.gen.is_involution() { 0 } else { top.exp + x.exp };
            if sum == 0 {
                stack.pop();
            } else {
                top.exp = sum;
            }
        }
        _ => stack.push(x),
    }
}

/// Linking numbers of the middle point with `p1` and `p3`: the sums of the
/// `A` and `B` exponents in the even decomposition.
pub fn linking_numbers(w: &Word) -> Result<(i64, i64), WordError> {
    let d = even_decomposition(w)?;
    let mut n = (0i64, 0i64);
    for s in d.syllables() {
        match s.gen {
            Gen::A => n.0 += s.exp,
            Gen::B => n.1 += s.exp,
            _ => unreachable!("even decomposition has no involutions"),
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn code_text() {
        let c: CirculationCode = "Z l l r r Z".parse().unwrap();
        assert_eq!(code_to_word(&c).to_string(), "Z A^2 B^2 Z");
        assert_eq!(c.to_string(), "Z l l r r Z");
        assert_eq!(word_to_code(&word("A B")).unwrap().to_string(), "l r");
        assert!("l Z r".parse::<CirculationCode>().is_err());
    }

    #[test]
    fn reversing_has_no_code() {
        assert_eq!(word_to_code(&word("A Y")), Err(WordError::OrientationReversing));
    }

    #[test]
    fn worked_linking_example() {
        let w = word("B A B A B A^2 B A B^5 A B^3 A^2");
        let d = even_decomposition(&w).unwrap();
        assert_eq!(d.to_string(), "B^2 A^-2 B^-2 A^4 B^-2 A^-6 B^4 A^2");
        assert_eq!(linking_numbers(&w).unwrap(), (-2, 2));
    }

    #[test]
    fn small_linking() {
        assert_eq!(linking_numbers(&Word::new()).unwrap(), (0, 0));
        assert_eq!(linking_numbers(&word("A^2")).unwrap(), (2, 0));
        assert_eq!(linking_numbers(&word("A")), Err(WordError::NotPurePermutationTrivial));
    }
}
