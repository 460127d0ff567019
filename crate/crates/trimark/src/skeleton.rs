//! Curves relative to marked points on a line, recorded by their axis
//! crossings, and their reduction to a normal form.
//!
//! A curve starts at a marked point and is a chain of excursions: half
//! planes visited between consecutive landings on the axis. An excursion
//! whose two ends are not separated by a marked point bounds an empty
//! bigon and can be pushed away; same-side neighbours then merge. The
//! normal form has no such bigons left and alternating sides between
//! visits to marked points.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::json::{parse_rational, rational_string};
use crate::snailgeom::{build_snail, crossing_sequence};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SkeletonError {
    #[error("invalid crossing sequence: {0}")]
    Invalid(String),
    #[error("the crossing sequence is not reduced")]
    NotReduced,
    #[error("expected 3 marked points, got {0}")]
    UnsupportedMarkedSet(usize),
}

impl SkeletonError {
    pub fn code(&self) -> &'static str {
        match self {
            SkeletonError::Invalid(_) => "invalid_crossing_sequence",
            SkeletonError::NotReduced => "not_reduced",
            SkeletonError::UnsupportedMarkedSet(_) => "unsupported_marked_set",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Excursion {
    /// `+1` above the axis, `-1` below.
    pub side: i8,
    pub landing: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossingSequence {
    marked: Vec<BigRational>,
    start: BigRational,
    excursions: Vec<Excursion>,
}

/// Location of an axis point relative to the marked set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Position {
    Marked(usize),
    /// Gap index, 0 being left of every marked point.
    Gap(usize),
}

/// Coordinate-free form of a sequence. Landings may slide freely inside a
/// gap without changing the homotopy class, so the order of landings within
/// a gap is not recorded: two reduced sequences have equal shapes exactly
/// when they are homotopic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    pub marked: usize,
    pub start: usize,
    pub steps: Vec<(i8, Position)>,
}

impl CrossingSequence {
    pub fn new(marked: Vec<BigRational>, start: BigRational, excursions: Vec<Excursion>) -> Result<Self, SkeletonError> {
        let bad = |m: &str| Err(SkeletonError::Invalid(m.to_string()));
        if marked.len() < 2 {
            return bad("at least two marked points are needed");
        }
        if marked.windows(2).any(|w| w[0] >= w[1]) {
            return bad("marked points must be strictly increasing");
        }
        if !marked.contains(&start) {
            return bad("the curve must start on a marked point");
        }
        let mut prev = &start;
        for e in &excursions {
            if e.side != 1 && e.side != -1 {
                return bad("sides are +1 or -1");
            }
            if e.landing == *prev {
                return bad("consecutive landings must differ");
            }
            prev = &e.landing;
        }
        if !marked.contains(prev) {
            return bad("the curve must end on a marked point");
        }
        Ok(CrossingSequence { marked, start, excursions })
    }

    pub fn marked(&self) -> &[BigRational] {
        &self.marked
    }

    pub fn start(&self) -> &BigRational {
        &self.start
    }

    pub fn excursions(&self) -> &[Excursion] {
        &self.excursions
    }

    pub fn end(&self) -> &BigRational {
        self.excursions.last().map_or(&self.start, |e| &e.landing)
    }

    /// Start followed by every landing.
    pub fn points(&self) -> Vec<BigRational> {
        points_of(&self.start, &self.excursions)
    }

    /// The same curve traversed backwards.
    pub fn reversed(&self) -> Self {
        let pts = self.points();
        let excursions = (0..self.excursions.len())
            .rev()
            .map(|i| Excursion { side: self.excursions[i].side, landing: pts[i].clone() })
            .collect();
        CrossingSequence { marked: self.marked.clone(), start: self.end().clone(), excursions }
    }

    /// Reflection across the axis.
    pub fn mirrored(&self) -> Self {
        let mut m = self.clone();
        for e in &mut m.excursions {
            e.side = -e.side;
        }
        m
    }

    pub fn position(&self, x: &BigRational) -> Position {
        match gap_index(&self.marked, x) {
            Ok(i) => Position::Marked(i),
            Err(g) => Position::Gap(g),
        }
    }

    pub fn shape(&self) -> Shape {
        let start = self.marked.iter().position(|m| *m == self.start).expect("start is marked");
        let steps = self.excursions.iter().map(|e| (e.side, self.position(&e.landing))).collect();
        Shape { marked: self.marked.len(), start, steps }
    }

    /// Moves landings to evenly spaced positions inside each gap, keeping
    /// their order. Outer gaps use unit spacing.
    pub fn normalized(&self) -> Self {
        let gaps = gap_coordinates(&self.marked, &self.points());
        let place = |x: &BigRational| -> BigRational {
            match gap_index(&self.marked, x) {
                Ok(i) => self.marked[i].clone(),
                Err(g) => {
                    let r = gaps[g].binary_search(x).expect("coordinate collected");
                    normal_coordinate(&self.marked, g, r, gaps[g].len())
                }
            }
        };
        CrossingSequence {
            marked: self.marked.clone(),
            start: self.start.clone(),
            excursions: self
                .excursions
                .iter()
                .map(|e| Excursion { side: e.side, landing: place(&e.landing) })
                .collect(),
        }
    }

    fn is_marked(&self, x: &BigRational) -> bool {
        self.marked.binary_search(x).is_ok()
    }

    /// Whether some marked point lies strictly between `x` and `y`.
    pub fn separated(&self, x: &BigRational, y: &BigRational) -> bool {
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        self.marked.iter().any(|m| lo < m && m < hi)
    }

    /// For each marked point the curve never lands on, the signed number of
    /// excursions on each side passing over it: `(above, below)`.
    pub fn span_counts(&self) -> Vec<Option<(i64, i64)>> {
        let pts = self.points();
        self.marked
            .iter()
            .map(|m| {
                if pts.contains(m) {
                    return None;
                }
                let mut c = (0i64, 0i64);
                for (i, e) in self.excursions.iter().enumerate() {
                    let (x, y) = (&pts[i], &pts[i + 1]);
                    let s = (y > m) as i64 - (x > m) as i64;
                    if e.side > 0 {
                        c.0 += s;
                    } else {
                        c.1 += s;
                    }
                }
                Some(c)
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "X": self.marked.iter().map(rational_string).collect::<Vec<_>>(),
            "start": rational_string(&self.start),
            "excursions": self.excursions.iter().map(|e| json!({
                "side": e.side,
                "landing": rational_string(&e.landing),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, SkeletonError> {
        let bad = |m: &str| SkeletonError::Invalid(m.to_string());
        let marked = v
            .get("X")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array \"X\""))?
            .iter()
            .map(|x| parse_rational(x).ok_or_else(|| bad("marked points must be rationals")))
            .collect::<Result<Vec<_>, _>>()?;
        let start = v
            .get("start")
            .and_then(parse_rational)
            .ok_or_else(|| bad("missing rational \"start\""))?;
        let excursions = v
            .get("excursions")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array \"excursions\""))?
            .iter()
            .map(|e| {
                let side = e.get("side").and_then(Value::as_i64).ok_or_else(|| bad("excursion side"))?;
                let landing = e.get("landing").and_then(parse_rational).ok_or_else(|| bad("excursion landing"))?;
                let side = i8::try_from(side).map_err(|_| bad("sides are +1 or -1"))?;
                Ok(Excursion { side, landing })
            })
            .collect::<Result<Vec<_>, SkeletonError>>()?;
        CrossingSequence::new(marked, start, excursions)
    }
}

impl fmt::Display for CrossingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rational_string(&self.start))?;
        for e in &self.excursions {
            let s = if e.side > 0 { '+' } else { '-' };
            write!(f, " {s} {}", rational_string(&e.landing))?;
        }
        Ok(())
    }
}

fn points_of(start: &BigRational, exc: &[Excursion]) -> Vec<BigRational> {
    std::iter::once(start.clone()).chain(exc.iter().map(|e| e.landing.clone())).collect()
}

fn gap_index(marked: &[BigRational], x: &BigRational) -> Result<usize, usize> {
    // Ok(i): x is marked[i]. Err(g): x lies in gap g.
    marked.binary_search(x)
}

// Distinct unmarked coordinates of each gap, sorted.
fn gap_coordinates(marked: &[BigRational], points: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut gaps: Vec<BTreeSet<BigRational>> = vec![BTreeSet::new(); marked.len() + 1];
    for x in points {
        if let Err(g) = gap_index(marked, x) {
            gaps[g].insert(x.clone());
        }
    }
    gaps.into_iter().map(|s| s.into_iter().collect()).collect()
}

fn normal_coordinate(marked: &[BigRational], g: usize, rank: usize, count: usize) -> BigRational {
    let r = BigInt::from(rank);
    if g == 0 {
        &marked[0] - BigRational::from_integer(BigInt::from(count) - r)
    } else if g == marked.len() {
        &marked[g - 1] + BigRational::from_integer(r + BigInt::one())
    } else {
        let width = &marked[g] - &marked[g - 1];
        &marked[g - 1] + width * BigRational::new(r + BigInt::one(), BigInt::from(count + 1))
    }
}

/// One applicable simplification, by excursion index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Redex {
    /// Excursion `i` returns to its own starting point.
    Degenerate(usize),
    /// Excursions `i` and `i + 1` lie on the same side.
    Merge(usize),
    /// Excursion `i` bounds an empty bigon between two opposite-side
    /// neighbours.
    Bigon(usize),
    /// Excursion `i` bounds an empty half disk against a marked end of its
    /// stretch.
    EndTrivial(usize),
}

fn redexes(cs: &CrossingSequence, exc: &[Excursion]) -> Vec<Redex> {
    let pts = points_of(&cs.start, exc);
    let n = exc.len();
    let marked = |x: &BigRational| cs.is_marked(x);
    let mut out = Vec::new();
    for i in 0..n {
        let (x, y) = (&pts[i], &pts[i + 1]);
        let s = exc[i].side;
        if x == y {
            out.push(Redex::Degenerate(i));
            continue;
        }
        if i + 1 < n && exc[i + 1].side == s && !marked(y) {
            out.push(Redex::Merge(i));
        }
        if cs.separated(x, y) {
            continue;
        }
        match (marked(x), marked(y)) {
            (false, false) => {
                if i >= 1 && i + 1 < n && exc[i - 1].side == -s && exc[i + 1].side == -s {
                    out.push(Redex::Bigon(i));
                }
            }
            (true, false) => {
                if i + 1 < n && exc[i + 1].side == -s {
                    out.push(Redex::EndTrivial(i));
                }
            }
            (false, true) => {
                if i >= 1 && exc[i - 1].side == -s {
                    out.push(Redex::EndTrivial(i));
                }
            }
            (true, true) => {}
        }
    }
    out
}

fn apply(cs: &CrossingSequence, exc: &mut Vec<Excursion>, r: Redex) {
    let pts = points_of(&cs.start, exc);
    match r {
        Redex::Degenerate(i) => {
            exc.remove(i);
        }
        Redex::Merge(i) => {
            exc.remove(i);
        }
        Redex::Bigon(i) => {
            // (-s, x) (s, y) (-s, z) -> (-s, z)
            exc.drain(i - 1..i + 1);
        }
        Redex::EndTrivial(i) => {
            if cs.is_marked(&pts[i]) {
                // (s, x) (-s, y) from a marked start -> (-s, y)
                exc.remove(i);
            } else {
                // (-s, x) (s, v) onto a marked end -> (-s, v)
                let side = exc[i - 1].side;
                exc.remove(i - 1);
                exc[i - 1].side = side;
            }
        }
    }
}

/// Applies redexes chosen by `choose` until none is left, then normalizes
/// segments and coordinates.
pub fn reduce_with(cs: &CrossingSequence, mut choose: impl FnMut(&[Redex]) -> usize) -> CrossingSequence {
    let mut exc = cs.excursions.clone();
    loop {
        let rs = redexes(cs, &exc);
        if rs.is_empty() {
            break;
        }
        let k = choose(&rs).min(rs.len() - 1);
        apply(cs, &mut exc, rs[k]);
    }
    // a lone unseparated excursion between two marked points is a segment
    let pts = points_of(&cs.start, &exc);
    for i in 0..exc.len() {
        if cs.is_marked(&pts[i]) && cs.is_marked(&pts[i + 1]) && !cs.separated(&pts[i], &pts[i + 1]) {
            exc[i].side = 1;
        }
    }
    CrossingSequence { marked: cs.marked.clone(), start: cs.start.clone(), excursions: exc }.normalized()
}

pub fn reduce(cs: &CrossingSequence) -> CrossingSequence {
    reduce_with(cs, |_| 0)
}

pub fn is_reduced(cs: &CrossingSequence) -> bool {
    reduce(cs).shape() == cs.shape()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bisector {
    /// Between `p1` and `p2`.
    D1,
    /// Between `p2` and `p3`.
    D2,
}

/// The fewest crossings of a vertical line through the bisector gap, over
/// all placements of the landings inside that gap. Excursions passing over
/// the whole gap always cross; a landing inside the gap costs one crossing
/// when its two excursions leave towards opposite sides, and none otherwise.
pub fn min_intersections(cs: &CrossingSequence, bisector: Bisector) -> Result<usize, SkeletonError> {
    if cs.marked.len() != 3 {
        return Err(SkeletonError::UnsupportedMarkedSet(cs.marked.len()));
    }
    if !is_reduced(cs) {
        return Err(SkeletonError::NotReduced);
    }
    Ok(min_crossings(cs, bisector))
}

fn min_crossings(cs: &CrossingSequence, bisector: Bisector) -> usize {
    let g = match bisector {
        Bisector::D1 => 1,
        Bisector::D2 => 2,
    };
    // -1 left of the gap, 1 right of it, 0 inside
    let side_of = |x: &BigRational| match gap_index(&cs.marked, x) {
        Ok(i) if i < g => -1,
        Ok(_) => 1,
        Err(h) => (h as i64 - g as i64).signum(),
    };
    let sides: Vec<i64> = cs.points().iter().map(side_of).collect();
    let spanning = sides.windows(2).filter(|w| w[0] * w[1] == -1).count();
    let turning = (1..sides.len().saturating_sub(1))
        .filter(|&i| sides[i] == 0 && sides[i - 1] * sides[i + 1] == -1)
        .count();
    spanning + turning
}

/// One stretch of a curve between two visits to marked points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stretch {
    pub from: usize,
    pub to: usize,
    /// Landings in each gap, gap 0 being left of every marked point.
    pub landings_per_gap: Vec<usize>,
    pub sides: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkeletonClass {
    /// The segment between `p_gap` and `p_{gap+1}` (1-based).
    Segment(usize),
    SimpleSnail { n: u64, p: u64, emerging_side: i8 },
    General(Vec<Stretch>),
}

fn stretches(cs: &CrossingSequence) -> Vec<Stretch> {
    let pts = cs.points();
    let mut out = Vec::new();
    let mut cur: Option<Stretch> = None;
    for (i, x) in pts.iter().enumerate() {
        let pos = gap_index(&cs.marked, x);
        let st = cur.get_or_insert_with(|| Stretch {
            from: pos.unwrap_or(0),
            to: 0,
            landings_per_gap: vec![0; cs.marked.len() + 1],
            sides: Vec::new(),
        });
        if i > 0 {
            st.sides.push(cs.excursions[i - 1].side);
        }
        match pos {
            Err(g) => st.landings_per_gap[g] += 1,
            Ok(m) if i > 0 => {
                st.to = m;
                out.push(cur.take().expect("open stretch"));
                if i + 1 < pts.len() {
                    cur = Some(Stretch {
                        from: m,
                        to: 0,
                        landings_per_gap: vec![0; cs.marked.len() + 1],
                        sides: Vec::new(),
                    });
                }
            }
            Ok(_) => {}
        }
    }
    out
}

pub fn recognize(cs: &CrossingSequence) -> Result<SkeletonClass, SkeletonError> {
    if cs.marked.len() != 3 {
        return Err(SkeletonError::UnsupportedMarkedSet(cs.marked.len()));
    }
    if !is_reduced(cs) {
        return Err(SkeletonError::NotReduced);
    }
    let parts = stretches(cs);
    if parts.len() != 1 {
        return Ok(SkeletonClass::General(parts));
    }
    if cs.excursions.len() == 1 && !cs.separated(&cs.start, cs.end()) {
        let lo = parts[0].from.min(parts[0].to);
        return Ok(SkeletonClass::Segment(lo + 1));
    }
    let n = min_crossings(cs, Bisector::D1) as u64;
    let p = min_crossings(cs, Bisector::D2) as u64;
    if n > 0 && p > 0 && n.gcd(&p) == 1 {
        if let (Ok(n_i), Ok(p_i)) = (i64::try_from(n), i64::try_from(p)) {
            let model = crossing_sequence(&build_snail(n_i, p_i).expect("positive parameters")).expect("coprime");
            let target = cs.shape();
            let candidates = [model.clone(), model.reversed(), model.mirrored(), model.reversed().mirrored()];
            if let Some(c) = candidates.iter().find(|c| c.shape() == target) {
                return Ok(SkeletonClass::SimpleSnail { n, p, emerging_side: c.excursions[widest(c)].side });
            }
        }
    }
    Ok(SkeletonClass::General(parts))
}

// Index of the first excursion of largest span.
fn widest(cs: &CrossingSequence) -> usize {
    let pts = cs.points();
    let width = |i: usize| {
        let d = &pts[i + 1] - &pts[i];
        if d < BigRational::from_integer(0.into()) {
            -d
        } else {
            d
        }
    };
    let mut best = 0;
    for i in 1..cs.excursions.len() {
        if width(i) > width(best) {
            best = i;
        }
    }
    best
}

/// Result of checking the shape constraints of simple snails.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SnailPropsReport {
    pub violations: Vec<String>,
}

impl SnailPropsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a reduced curve on three marked points against the snail shape:
/// one outermost arc containing all others, sustaining-side arcs passing
/// over exactly one of `p1`, `p3`, emerging-side arcs passing over `p2`.
pub fn validate_snail_props(cs: &CrossingSequence) -> SnailPropsReport {
    let mut report = SnailPropsReport::default();
    if cs.marked.len() != 3 {
        report.violations.push(format!("expected 3 marked points, got {}", cs.marked.len()));
        return report;
    }
    if cs.excursions.is_empty() {
        return report;
    }
    let pts = cs.points();
    let span = |i: usize| {
        let (x, y) = (&pts[i], &pts[i + 1]);
        if x < y {
            (x.clone(), y.clone())
        } else {
            (y.clone(), x.clone())
        }
    };
    let width = |i: usize| {
        let (a, b) = span(i);
        b - a
    };
    let widest = (0..cs.excursions.len()).map(width).max().expect("nonempty");
    let outer: Vec<usize> = (0..cs.excursions.len()).filter(|&i| width(i) == widest).collect();
    if outer.len() != 1 {
        report.violations.push(format!("{} outermost arcs instead of one", outer.len()));
    }
    let top = outer[0];
    let emerging = cs.excursions[top].side;
    let (lo, hi) = span(top);
    let inside = |x: &BigRational, i: usize| {
        let (a, b) = span(i);
        a < *x && *x < b
    };
    for i in 0..cs.excursions.len() {
        let (a, b) = span(i);
        if a < lo || b > hi {
            report.violations.push(format!("excursion {i} leaves the outermost arc"));
        }
        if cs.excursions[i].side == emerging {
            if !inside(&cs.marked[1], i) {
                report.violations.push(format!("emerging excursion {i} does not pass over p2"));
            }
        } else if inside(&cs.marked[0], i) == inside(&cs.marked[2], i) {
            report.violations.push(format!("sustaining excursion {i} is not separated by exactly one of p1, p3"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn x3() -> Vec<BigRational> {
        vec![q(-1, 1), q(0, 1), q(1, 1)]
    }

    fn cs(start: BigRational, steps: &[(i8, BigRational)]) -> CrossingSequence {
        let exc = steps.iter().map(|(s, x)| Excursion { side: *s, landing: x.clone() }).collect();
        CrossingSequence::new(x3(), start, exc).unwrap()
    }

    #[test]
    fn validation() {
        assert!(CrossingSequence::new(x3(), q(1, 2), vec![]).is_err());
        assert!(CrossingSequence::new(vec![q(0, 1), q(0, 1)], q(0, 1), vec![]).is_err());
        let e = vec![Excursion { side: 1, landing: q(1, 2) }];
        assert!(CrossingSequence::new(x3(), q(-1, 1), e).is_err());
        let e = vec![Excursion { side: 1, landing: q(-1, 1) }];
        assert!(CrossingSequence::new(x3(), q(-1, 1), e).is_err());
    }

    #[test]
    fn wiggle_on_a_segment() {
        // p1 to p2 with a back-and-forth in between
        let c = cs(q(-1, 1), &[(1, q(-1, 2)), (-1, q(-3, 4)), (1, q(0, 1))]);
        let r = reduce(&c);
        assert_eq!(r.excursions().len(), 1);
        assert_eq!(recognize(&r).unwrap(), SkeletonClass::Segment(1));
        assert!(!is_reduced(&c));
    }

    #[test]
    fn segment_side_is_normalized() {
        let c = cs(q(0, 1), &[(-1, q(1, 1))]);
        assert_eq!(reduce(&c).excursions()[0].side, 1);
        assert_eq!(recognize(&reduce(&c)).unwrap(), SkeletonClass::Segment(2));
        assert!(is_reduced(&cs(q(0, 1), &[])));
    }

    #[test]
    fn bare_excursion_is_the_unit_snail() {
        let c = cs(q(-1, 1), &[(1, q(1, 1))]);
        assert!(is_reduced(&c));
        assert_eq!(recognize(&c).unwrap(), SkeletonClass::SimpleSnail { n: 1, p: 1, emerging_side: 1 });
        assert_eq!(min_intersections(&c, Bisector::D1).unwrap(), 1);
        assert_eq!(min_intersections(&c, Bisector::D2).unwrap(), 1);
    }

    #[test]
    fn segment_crossings() {
        let c = cs(q(-1, 1), &[(1, q(0, 1))]);
        assert_eq!(min_intersections(&c, Bisector::D1).unwrap(), 1);
        assert_eq!(min_intersections(&c, Bisector::D2).unwrap(), 0);
    }

    #[test]
    fn reversal_round_trip() {
        let c = cs(q(-1, 1), &[(1, q(1, 2)), (-1, q(-1, 2)), (1, q(1, 1))]);
        assert_eq!(c.reversed().reversed(), c);
        assert_eq!(c.reversed().start(), &q(1, 1));
    }

    #[test]
    fn emerging_arc_missing_p2() {
        let c = cs(q(-1, 1), &[(1, q(1, 2)), (-1, q(3, 4)), (1, q(1, 1))]);
        let report = validate_snail_props(&c);
        assert!(!report.passed());
    }

    #[test]
    fn json_round_trip() {
        let c = cs(q(-1, 1), &[(1, q(1, 2)), (-1, q(-1, 2)), (1, q(1, 1))]);
        assert_eq!(CrossingSequence::from_json(&c.to_json()).unwrap(), c);
    }
}
