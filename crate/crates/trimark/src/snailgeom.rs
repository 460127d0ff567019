//! Topological snails `SN(n; p)` as explicit half-circles on an axis.
//!
//! With `z1 = -n/2`, `z2 = (p - n)/2`, `z3 = p/2` and `E` the integer part,
//! the arcs are
//!
//! * left sustaining arcs around `z1`, below the axis, radii
//!   `E(n/2) - n/2 + 1/2 + i` for `0 ≤ i ≤ E((n-1)/2)`;
//! * right sustaining arcs around `z3`, below, the same formula in `p`;
//! * emerging arcs around `z2`, above, the same formula in `n + p`.
//!
//! Radius-0 entries sit on a marked point and are kept as markers.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::euclid::decompose_to_word;
use crate::json::{int_value, rational_string};
use crate::skeleton::{CrossingSequence, Excursion};
use crate::wordcalc::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SnailError {
    #[error("no snail with parameters ({n}, {p})")]
    InvalidParams { n: i64, p: i64 },
    #[error("{n} and {p} are not coprime")]
    NotCoprime { n: u64, p: u64 },
}

impl SnailError {
    pub fn code(&self) -> &'static str {
        match self {
            SnailError::InvalidParams { .. } => "invalid_params",
            SnailError::NotCoprime { .. } => "not_coprime",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Left,
    Right,
    Emerging,
    /// The single arc of `SN(1; 0)` or `SN(0; 1)`.
    Segment,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcColor {
    Green,
    Red,
    /// The arc joining the two sub-snails: green on the half touching the
    /// green part, red on the other.
    Split,
    /// Arcs of a snail whose parameters are not coprime.
    Uncolored,
}

impl ArcColor {
    pub fn name(self) -> &'static str {
        match self {
            ArcColor::Green => "green",
            ArcColor::Red => "red",
            ArcColor::Split => "split",
            ArcColor::Uncolored => "uncolored",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfCircle {
    pub center: BigRational,
    pub radius: BigRational,
    /// `+1` above the axis, `-1` below.
    pub side: i8,
    pub color: ArcColor,
    pub family: Family,
}

impl HalfCircle {
    pub fn is_marker(&self) -> bool {
        self.radius.is_zero()
    }

    pub fn ends(&self) -> (BigRational, BigRational) {
        (&self.center - &self.radius, &self.center + &self.radius)
    }
}

/// Green and red sub-snails: the columns of the matrix of the word
/// decomposing `(n, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorSplit {
    pub green: (u64, u64),
    pub red: (u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snail {
    /// Absolute values of the parameters.
    pub n: u64,
    pub p: u64,
    /// Mirror image across the axis, for parameters of opposite signs.
    pub reflected: bool,
    /// `z1 < z2 < z3`.
    pub marked: [BigRational; 3],
    pub arcs: Vec<HalfCircle>,
    pub colors: Option<ColorSplit>,
    /// Traversal from the green end to the red end, when the curve is a
    /// simple arc.
    pub orientation: Option<(BigRational, BigRational)>,
}

fn half(x: i64) -> BigRational {
    BigRational::new(BigInt::from(x), BigInt::from(2))
}

fn int(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

// Radii E(m/2) - m/2 + 1/2 + i for 0 ≤ i ≤ E((m-1)/2).
fn radii(m: u64) -> Vec<BigRational> {
    if m == 0 {
        return Vec::new();
    }
    let base = int(m / 2) - half(m as i64) + half(1);
    (0..=(m - 1) / 2).map(|i| &base + int(i)).collect()
}

pub fn build_snail(n: i64, p: i64) -> Result<Snail, SnailError> {
    if n == 0 && p == 0 {
        return Err(SnailError::InvalidParams { n, p });
    }
    let reflected = (n < 0) != (p < 0) && n != 0 && p != 0;
    let (an, ap) = (n.unsigned_abs(), p.unsigned_abs());
    let mut snail = if an == 0 || ap == 0 {
        if an + ap != 1 {
            return Err(SnailError::InvalidParams { n, p });
        }
        segment_snail(an == 1)
    } else {
        general_snail(an, ap)
    };
    if reflected {
        snail.reflected = true;
        for a in &mut snail.arcs {
            a.side = -a.side;
        }
    }
    Ok(snail)
}

// SN(1; 0) is the segment [p1, p2], SN(0; 1) the segment [p2, p3].
fn segment_snail(left: bool) -> Snail {
    let marked = [half(-2), half(0), half(2)];
    let (center, color) = if left { (half(-1), ArcColor::Green) } else { (half(1), ArcColor::Red) };
    let arc = HalfCircle { center, radius: half(1), side: 1, color, family: Family::Segment };
    let (a, b) = arc.ends();
    let (n, p) = if left { (1, 0) } else { (0, 1) };
    let colors = if left {
        ColorSplit { green: (1, 0), red: (0, 0) }
    } else {
        ColorSplit { green: (0, 0), red: (0, 1) }
    };
    Snail { n, p, reflected: false, marked, arcs: vec![arc], colors: Some(colors), orientation: Some((a, b)) }
}

fn general_snail(n: u64, p: u64) -> Snail {
    let z1 = half(-(n as i64));
    let z3 = half(p as i64);
    let z2 = half(p as i64 - n as i64);
    let mut arcs = Vec::new();
    let families = [(&z1, n, -1, Family::Left), (&z3, p, -1, Family::Right), (&z2, n + p, 1, Family::Emerging)];
    for (center, m, side, family) in families {
        for r in radii(m) {
            arcs.push(HalfCircle { center: center.clone(), radius: r, side, color: ArcColor::Uncolored, family });
        }
    }
    let mut snail = Snail { n, p, reflected: false, marked: [z1, z2, z3], arcs, colors: None, orientation: None };
    if n.gcd(&p) == 1 {
        let split = split_colors(n, p).expect("coprime");
        color_snail(&mut snail, split);
    }
    snail
}

/// Axis points of the curve, each with the arcs (by index) that end there.
fn incidence(arcs: &[HalfCircle]) -> BTreeMap<BigRational, Vec<usize>> {
    let mut adj: BTreeMap<BigRational, Vec<usize>> = BTreeMap::new();
    for (i, a) in arcs.iter().enumerate() {
        if a.is_marker() {
            continue;
        }
        let (x, y) = a.ends();
        adj.entry(x).or_default().push(i);
        adj.entry(y).or_default().push(i);
    }
    adj
}

/// Walks a simple arc from `start`: visited points and the arcs between them.
fn walk(arcs: &[HalfCircle], adj: &BTreeMap<BigRational, Vec<usize>>, start: &BigRational) -> (Vec<BigRational>, Vec<usize>) {
    let mut points = vec![start.clone()];
    let mut used: Vec<usize> = Vec::new();
    let mut cur = start.clone();
    loop {
        let next = adj[&cur].iter().copied().find(|i| used.last() != Some(i));
        let Some(i) = next else { break };
        if used.contains(&i) {
            break;
        }
        let (x, y) = arcs[i].ends();
        cur = if x == cur { y } else { x };
        used.push(i);
        points.push(cur.clone());
    }
    (points, used)
}

fn color_snail(s: &mut Snail, split: ColorSplit) {
    let adj = incidence(&s.arcs);
    let ends: Vec<BigRational> = adj.iter().filter(|(_, v)| v.len() == 1).map(|(k, _)| k.clone()).collect();
    let (g1, g2) = split.green;
    let k = (g1 + g2) as usize;
    let zero = BigRational::zero();
    for e in &ends {
        let (points, used) = walk(&s.arcs, &adj, e);
        let left_in_green = points[..k].iter().filter(|x| **x < zero).count() as u64;
        if left_in_green != g1 {
            continue;
        }
        let mut point_color: HashMap<BigRational, ArcColor> = HashMap::new();
        for (i, x) in points.iter().enumerate() {
            point_color.insert(x.clone(), if i < k { ArcColor::Green } else { ArcColor::Red });
        }
        for (j, &arc) in used.iter().enumerate() {
            // arc j joins points j and j + 1
            s.arcs[arc].color = if j + 1 < k {
                ArcColor::Green
            } else if j + 1 == k {
                ArcColor::Split
            } else {
                ArcColor::Red
            };
        }
        for a in s.arcs.iter_mut().filter(|a| a.is_marker()) {
            a.color = point_color.get(&a.center).copied().unwrap_or(ArcColor::Uncolored);
        }
        s.colors = Some(split);
        s.orientation = Some((points[0].clone(), points[points.len() - 1].clone()));
        return;
    }
}

pub fn split_colors(n: u64, p: u64) -> Result<ColorSplit, SnailError> {
    let w = decompose_to_word(n, p).map_err(|_| SnailError::NotCoprime { n, p })?;
    let m = w.phi();
    let get = |x: &BigInt| x.to_u64().expect("entries of a positive matrix");
    Ok(ColorSplit { green: (get(m.a()), get(m.c())), red: (get(m.b()), get(m.d())) })
}

/// `Φ(w)·(n, p)ᵀ`, taken up to sign so that the first nonzero coordinate
/// is positive.
pub fn act(w: &Word, n: &BigInt, p: &BigInt) -> (BigInt, BigInt) {
    let (x, y) = w.phi().apply(n, p);
    let lead = if x.is_zero() { &y } else { &x };
    if lead.is_negative() {
        (-x, -y)
    } else {
        (x, y)
    }
}

/// `(connected, component_count)`. Connected means a single component that
/// is an open simple arc.
pub fn components(s: &Snail) -> (bool, usize) {
    let adj = incidence(&s.arcs);
    let index: HashMap<&BigRational, usize> = adj.keys().enumerate().map(|(i, k)| (k, i)).collect();
    let mut parent: Vec<usize> = (0..adj.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = 0;
    for a in s.arcs.iter().filter(|a| !a.is_marker()) {
        let (x, y) = a.ends();
        let (i, j) = (find(&mut parent, index[&x]), find(&mut parent, index[&y]));
        parent[i] = j;
        edges += 1;
    }
    let count = (0..adj.len()).filter(|&i| find(&mut parent, i) == i).count();
    let connected = count == 1 && edges + 1 == adj.len();
    (connected, count)
}

pub fn crossing_sequence(s: &Snail) -> Result<CrossingSequence, SnailError> {
    let Some((start, _)) = s.orientation.clone() else {
        return Err(SnailError::NotCoprime { n: s.n, p: s.p });
    };
    let adj = incidence(&s.arcs);
    let (points, used) = walk(&s.arcs, &adj, &start);
    let excursions = used
        .iter()
        .zip(&points[1..])
        .map(|(&i, x)| Excursion { side: s.arcs[i].side, landing: x.clone() })
        .collect();
    Ok(CrossingSequence::new(s.marked.to_vec(), start, excursions).expect("snail curves end on marked points"))
}

impl Snail {
    /// Axis points of the curve, left to right.
    pub fn points(&self) -> Vec<BigRational> {
        incidence(&self.arcs).into_keys().collect()
    }

    pub fn to_json(&self) -> Value {
        let arcs: Vec<Value> = self
            .arcs
            .iter()
            .map(|a| {
                json!({
                    "center": rational_string(&a.center),
                    "radius": rational_string(&a.radius),
                    "side": a.side,
                    "color": a.color.name(),
                })
            })
            .collect();
        let colors = self.colors.map(|c| {
            json!({
                "green": [int_value(&c.green.0.into()), int_value(&c.green.1.into())],
                "red": [int_value(&c.red.0.into()), int_value(&c.red.1.into())],
            })
        });
        json!({
            "n": int_value(&self.n.into()),
            "p": int_value(&self.p.into()),
            "reflected": self.reflected,
            "marked": self.marked.iter().map(rational_string).collect::<Vec<_>>(),
            "arcs": arcs,
            "colors": colors,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    /// User units per axis unit.
    pub scale: f64,
    /// Blank space around the drawing, in axis units.
    pub margin: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { scale: 20.0, margin: 1.0 }
    }
}

const STYLE: &str = ".axis{stroke:#888888;stroke-width:1}\
.green{stroke:#2e8b3a;fill:none;stroke-width:2}\
.red{stroke:#c0392b;fill:none;stroke-width:2}\
.uncolored{stroke:#333333;fill:none;stroke-width:2}\
.marked{fill:#000000}\
.split{fill:none;stroke-width:2}\
.puncture{fill:#ffffff;stroke:#000000;stroke-width:1}";

const GRADIENTS: &str = "<defs>\
<linearGradient id=\"green-left\" x1=\"0\" y1=\"0\" x2=\"1\" y2=\"0\">\
<stop offset=\"0.5\" stop-color=\"#2e8b3a\"/><stop offset=\"0.5\" stop-color=\"#c0392b\"/></linearGradient>\
<linearGradient id=\"green-right\" x1=\"0\" y1=\"0\" x2=\"1\" y2=\"0\">\
<stop offset=\"0.5\" stop-color=\"#c0392b\"/><stop offset=\"0.5\" stop-color=\"#2e8b3a\"/></linearGradient>\
</defs>\n";

fn f6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn fl(x: &BigRational) -> f64 {
    x.to_f64().expect("finite coordinate")
}

pub fn render_svg(s: &Snail, opts: &SvgOptions) -> String {
    let k = opts.scale;
    let mut xs: Vec<f64> = s.marked.iter().map(fl).collect();
    let mut rmax: f64 = 0.0;
    for a in &s.arcs {
        let (x, y) = a.ends();
        xs.push(fl(&x));
        xs.push(fl(&y));
        rmax = rmax.max(fl(&a.radius));
    }
    let xmin = xs.iter().cloned().fold(f64::INFINITY, f64::min) - opts.margin;
    let xmax = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + opts.margin;
    let height = 2.0 * (rmax + opts.margin);
    let sx = |x: f64| f6((x - xmin) * k);
    let y0 = (rmax + opts.margin) * k;
    let sy = |y: f64| f6(y0 - y * k);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = f6((xmax - xmin) * k),
        h = f6(height * k)
    );
    let _ = writeln!(out, "<style>{STYLE}</style>");
    out.push_str(GRADIENTS);
    let _ = writeln!(out, "<line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", sx(xmin), sy(0.0), sx(xmax), sy(0.0));

    let green_points: Vec<BigRational> = match (&s.orientation, s.colors) {
        (Some((start, _)), Some(c)) => {
            let adj = incidence(&s.arcs);
            let (points, _) = walk(&s.arcs, &adj, start);
            points.into_iter().take((c.green.0 + c.green.1) as usize).collect()
        }
        _ => Vec::new(),
    };

    for a in s.arcs.iter().filter(|a| !a.is_marker()) {
        let (x1, x2) = a.ends();
        let r = fl(&a.radius);
        let sweep = if a.side > 0 { 1 } else { 0 };
        let rr = f6(r * k);
        let class = a.color.name();
        let paint = if a.color == ArcColor::Split {
            // horizontal gradient, hard stop at the apex
            if green_points.contains(&x1) {
                " stroke=\"url(#green-left)\""
            } else {
                " stroke=\"url(#green-right)\""
            }
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "<path class=\"{class}\"{paint} d=\"M {} {} A {rr} {rr} 0 0 {sweep} {} {}\"/>",
            sx(fl(&x1)),
            sy(0.0),
            sx(fl(&x2)),
            sy(0.0)
        );
    }
    let dot = f6(0.15 * k);
    for a in s.arcs.iter().filter(|a| a.is_marker()) {
        let _ = writeln!(out, "<circle class=\"marked\" cx=\"{}\" cy=\"{}\" r=\"{dot}\"/>", sx(fl(&a.center)), sy(0.0));
    }
    for z in &s.marked {
        if !s.arcs.iter().any(|a| a.is_marker() && a.center == *z) {
            let _ = writeln!(out, "<circle class=\"puncture\" cx=\"{}\" cy=\"{}\" r=\"{dot}\"/>", sx(fl(z)), sy(0.0));
        }
    }
    out.push_str("</svg>\n");
    out
}
