//! Arrow distributions on the two branches and the inner two-coloured tree.
//!
//! Each letter of a positive word rewrites the arrows of its colour class:
//!
//! ```text
//! B:  R- -> R+ G-    R+ -> G+ R-
//! A:  G- -> G+ R-    G+ -> R+ G-
//! ```
//!
//! Starting from `G+ | R-`, the counts of green and red arrows on each side
//! are the entries of the turbulence matrix.

use std::fmt;
use std::fmt::Write as _;

use crate::wordcalc::{Gen, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArrowError {
    #[error("word must be a positive product of A and B, got {0}")]
    NotPositiveCore(String),
}

impl ArrowError {
    pub fn code(&self) -> &'static str {
        match self {
            ArrowError::NotPositiveCore(_) => "not_positive_core",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Green,
    Red,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::Green => "green",
            Color::Red => "red",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrow {
    GPlus,
    GMinus,
    RPlus,
    RMinus,
}

impl Arrow {
    pub fn color(self) -> Color {
        match self {
            Arrow::GPlus | Arrow::GMinus => Color::Green,
            Arrow::RPlus | Arrow::RMinus => Color::Red,
        }
    }

    /// What `letter` turns this arrow into, or `None` when it is untouched.
    pub fn rewrite(self, letter: Letter) -> Option<[Arrow; 2]> {
        use Arrow::*;
        match (letter, self) {
            (Letter::B, RMinus) => Some([RPlus, GMinus]),
            (Letter::B, RPlus) => Some([GPlus, RMinus]),
            (Letter::A, GMinus) => Some([GPlus, RMinus]),
            (Letter::A, GPlus) => Some([RPlus, GMinus]),
            _ => None,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Arrow::GPlus => "G+",
            Arrow::GMinus => "G-",
            Arrow::RPlus => "R+",
            Arrow::RMinus => "R-",
        }
    }

    pub fn parse(s: &str) -> Option<Arrow> {
        Some(match s {
            "G+" => Arrow::GPlus,
            "G-" => Arrow::GMinus,
            "R+" => Arrow::RPlus,
            "R-" => Arrow::RMinus,
            _ => return None,
        })
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    /// Colour of the horizontal line this letter draws.
    pub fn color(self) -> Color {
        match self {
            Letter::A => Color::Red,
            Letter::B => Color::Green,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrowWord {
    pub left: Vec<Arrow>,
    pub right: Vec<Arrow>,
}

impl Default for ArrowWord {
    fn default() -> Self {
        ArrowWord::initial()
    }
}

impl ArrowWord {
    /// `G+ | R-`
    pub fn initial() -> Self {
        ArrowWord { left: vec![Arrow::GPlus], right: vec![Arrow::RMinus] }
    }

    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn count(side: &[Arrow], c: Color) -> u64 {
        side.iter().filter(|a| a.color() == c).count() as u64
    }

    /// Parses `"G+ R- | R+"` style text.
    pub fn parse(text: &str) -> Option<ArrowWord> {
        let (l, r) = text.split_once('|')?;
        let side = |s: &str| s.split_whitespace().map(Arrow::parse).collect::<Option<Vec<_>>>();
        Some(ArrowWord { left: side(l)?, right: side(r)? })
    }
}

impl fmt::Display for ArrowWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Arrow]| v.iter().map(|a| a.symbol()).collect::<Vec<_>>().join(" ");
        write!(f, "{} | {}", join(&self.left), join(&self.right))
    }
}

fn rewrite_side(side: &[Arrow], letter: Letter) -> Vec<Arrow> {
    let mut out = Vec::with_capacity(side.len() * 2);
    for &a in side {
        match a.rewrite(letter) {
            Some(pair) => out.extend(pair),
            None => out.push(a),
        }
    }
    out
}

pub fn substitute(aw: &ArrowWord, letter: Letter) -> ArrowWord {
    ArrowWord { left: rewrite_side(&aw.left, letter), right: rewrite_side(&aw.right, letter) }
}

/// Letters of a positive word in reading order.
pub fn letters(w: &Word) -> Result<Vec<Letter>, ArrowError> {
    let mut out = Vec::new();
    for s in w.syllables() {
        let l = match s.gen {
            Gen::A => Letter::A,
            Gen::B => Letter::B,
            _ => return Err(ArrowError::NotPositiveCore(w.to_string())),
        };
        if s.exp < 0 {
            return Err(ArrowError::NotPositiveCore(w.to_string()));
        }
        out.extend(std::iter::repeat(l).take(s.exp as usize));
    }
    Ok(out)
}

pub fn arrow_word(w: &Word) -> Result<ArrowWord, ArrowError> {
    Ok(letters(w)?.into_iter().fold(ArrowWord::initial(), |aw, l| substitute(&aw, l)))
}

/// `[[L_g, L_r], [R_g, R_r]]`
pub fn letter_counts(aw: &ArrowWord) -> [[u64; 2]; 2] {
    [
        [ArrowWord::count(&aw.left, Color::Green), ArrowWord::count(&aw.left, Color::Red)],
        [ArrowWord::count(&aw.right, Color::Green), ArrowWord::count(&aw.right, Color::Red)],
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Left,
    Right,
}

/// Where a leaf was born. Level 0 is the root of its branch; level `k` is
/// the line drawn by the `k`-th letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BranchPoint {
    pub branch: Branch,
    pub color: Color,
    pub level: usize,
    /// Leaf the new one split off from, `None` for a root.
    pub parent: Option<usize>,
    pub child: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Leaf {
    pub id: usize,
    pub arrow: Arrow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerTree {
    pub lines: Vec<Color>,
    pub branch_points: Vec<BranchPoint>,
    pub left: Vec<Leaf>,
    pub right: Vec<Leaf>,
}

impl InnerTree {
    pub fn arrow_word(&self) -> ArrowWord {
        ArrowWord {
            left: self.left.iter().map(|l| l.arrow).collect(),
            right: self.right.iter().map(|l| l.arrow).collect(),
        }
    }

    /// Branch points per side and colour, `[[L_g, L_r], [R_g, R_r]]`.
    pub fn branch_counts(&self) -> [[u64; 2]; 2] {
        let mut c = [[0u64; 2]; 2];
        for bp in &self.branch_points {
            let i = (bp.branch == Branch::Right) as usize;
            let j = (bp.color == Color::Red) as usize;
            c[i][j] += 1;
        }
        c
    }

    pub fn render_svg(&self) -> String {
        render_tree_svg(self)
    }
}

pub fn build_tree(w: &Word) -> Result<InnerTree, ArrowError> {
    let word = letters(w)?;
    let mut next = 0usize;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut points = Vec::new();
    let mut sides: Vec<(Branch, Vec<Leaf>)> = Vec::new();
    for (branch, arrow) in [(Branch::Left, Arrow::GPlus), (Branch::Right, Arrow::RMinus)] {
        let id = fresh();
        points.push(BranchPoint { branch, color: arrow.color(), level: 0, parent: None, child: id });
        sides.push((branch, vec![Leaf { id, arrow }]));
    }
    for (k, &letter) in word.iter().enumerate() {
        let level = k + 1;
        for (branch, leaves) in &mut sides {
            let mut out = Vec::with_capacity(leaves.len() * 2);
            for leaf in leaves.iter() {
                let Some(pair) = leaf.arrow.rewrite(letter) else {
                    out.push(*leaf);
                    continue;
                };
                // the arrow of the line's colour is new; the other carries on
                for a in pair {
                    if a.color() == letter.color() {
                        let id = fresh();
                        points.push(BranchPoint { branch: *branch, color: a.color(), level, parent: Some(leaf.id), child: id });
                        out.push(Leaf { id, arrow: a });
                    } else {
                        out.push(Leaf { id: leaf.id, arrow: a });
                    }
                }
            }
            *leaves = out;
        }
    }
    let right = sides.pop().expect("two sides").1;
    let left = sides.pop().expect("two sides").1;
    Ok(InnerTree { lines: word.iter().map(|l| l.color()).collect(), branch_points: points, left, right })
}

fn render_tree_svg(t: &InnerTree) -> String {
    let unit = 20.0;
    let cols = t.left.len() + t.right.len() + 1;
    let height = (t.lines.len() + 2) as f64 * unit;
    let width = (cols + 1) as f64 * unit;
    let mut x_of = std::collections::HashMap::new();
    for (i, leaf) in t.left.iter().enumerate() {
        x_of.insert(leaf.id, (i + 1) as f64 * unit);
    }
    for (i, leaf) in t.right.iter().enumerate() {
        x_of.insert(leaf.id, (t.left.len() + i + 2) as f64 * unit);
    }
    let y_of = |level: usize| height - (level as f64 + 0.5) * unit;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.6}" height="{height:.6}" viewBox="0 0 {width:.6} {height:.6}">"#
    );
    let _ = writeln!(
        s,
        "<style>.green{{stroke:#2a9d3a;fill:#2a9d3a}} .red{{stroke:#c8302c;fill:#c8302c}} line{{stroke-width:1.5}}</style>"
    );
    for (k, c) in t.lines.iter().enumerate() {
        let y = y_of(k + 1);
        let _ = writeln!(s, r#"<line class="{} level" x1="0" y1="{y:.6}" x2="{width:.6}" y2="{y:.6}" stroke-dasharray="2,3"/>"#, c.name());
    }
    let top = y_of(t.lines.len() + 1);
    for bp in &t.branch_points {
        let x = x_of[&bp.child];
        let y = y_of(bp.level);
        let class = bp.color.name();
        let _ = writeln!(s, r#"<line class="{class}" x1="{x:.6}" y1="{y:.6}" x2="{x:.6}" y2="{top:.6}"/>"#);
        if let Some(p) = bp.parent {
            let px = x_of[&p];
            let _ = writeln!(s, r#"<line class="{class}" x1="{px:.6}" y1="{y:.6}" x2="{x:.6}" y2="{y:.6}"/>"#);
        }
        let _ = writeln!(s, r#"<circle class="{class}" cx="{x:.6}" cy="{y:.6}" r="2.000000"/>"#);
    }
    for leaf in t.left.iter().chain(&t.right) {
        let x = x_of[&leaf.id];
        let _ = writeln!(
            s,
            r#"<text class="{}" x="{x:.6}" y="{:.6}" font-size="8" text-anchor="middle">{}</text>"#,
            leaf.arrow.color().name(),
            top - 4.0,
            leaf.arrow
        );
    }
    s.push_str("</svg>\n");
    s
}
