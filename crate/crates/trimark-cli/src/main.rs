use std::fmt::Display;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};
use trimark::arrowtree::{arrow_word, build_tree, letter_counts, Arrow, ArrowError, ArrowWord, Color};
use trimark::euclid::{characteristic_sequences, decompose_to_word, euclid_trace, factor_positive_matrix, period_identity, EuclidError};
use trimark::json::int_value;
use trimark::projmat::{MatrixError, ProjectiveMatrix};
use trimark::skeleton::{self, min_intersections, Bisector, CrossingSequence, SkeletonClass, SkeletonError};
use trimark::snailgeom::{build_snail, components, render_svg, SnailError, SvgOptions};
use trimark::wordcalc::{
    canonicalize, classify, code_to_word, compose, linking_numbers, word_to_code, CanonicalForm, CirculationCode,
    TraceClass, Word, WordError,
};

/// Calculator for mapping classes of the plane with three marked points.
///
/// Words use the letters A, B, Z, Y and T with optional integer powers,
/// for example "B^3 A^2" or "A^-1 B Z". Separate letters with spaces or
/// "*". Multi-word arguments may be passed unquoted.
#[derive(Parser)]
#[command(name = "trimark", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form of a word.
    Canon {
        #[arg(required = true)]
        word: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// The class of the word in PSL2(Z).
    Matrix {
        #[arg(required = true)]
        word: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Trace type, conjugacy representative and entropy bound.
    Classify {
        #[arg(required = true)]
        word: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Positive word sending (1, 1) to (N, P).
    Decompose { n: u64, p: u64 },
    /// Positive word of a matrix with nonnegative entries.
    #[command(allow_negative_numbers = true)]
    Factor { a: BigInt, b: BigInt, c: BigInt, d: BigInt },
    /// The topological snail SN(N; P).
    #[command(allow_negative_numbers = true)]
    Snail {
        n: i64,
        p: i64,
        /// Write an SVG drawing to this file ("-" for standard output).
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Print the arcs as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Arrow distribution and inner tree of a positive word.
    Tree {
        #[arg(required = true)]
        word: Vec<String>,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Colour the arrows with ANSI escapes.
        #[arg(long)]
        color: bool,
    },
    /// Linking numbers around p1 and p3 of a pure class.
    Linking {
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Circulation code of a word, or the word of a code with --decode.
    Code {
        #[arg(required = true)]
        input: Vec<String>,
        #[arg(long)]
        decode: bool,
    },
    /// Permutation of the marked points.
    Perm {
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Crossing-sequence skeletons.
    Skeleton {
        #[command(subcommand)]
        action: SkeletonAction,
    },
    /// Euclidean algorithm modulo Q0 + Q1.
    Euclid {
        q0: u64,
        q1: u64,
        #[arg(long)]
        json: bool,
    },
    /// Canonical form of the product W1 W2.
    Compose { w1: String, w2: String },
}

#[derive(Subcommand)]
enum SkeletonAction {
    /// Reduce a crossing sequence read from FILE ("-" for standard input).
    Reduce { file: PathBuf },
    /// Name the class of a reduced crossing sequence.
    Recognize { file: PathBuf },
}

struct Failure {
    code: &'static str,
    message: String,
}

impl Failure {
    fn new(code: &'static str, message: impl Display) -> Self {
        Failure { code, message: message.to_string() }
    }
}

macro_rules! failure_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::new(e.code(), &e)
            }
        }
    )*};
}

failure_from!(WordError, MatrixError, EuclidError, SnailError, SkeletonError, ArrowError);

type Outcome = Result<String, Failure>;

fn parse(parts: &[String]) -> Result<Word, Failure> {
    Ok(Word::parse(&parts.join(" "))?)
}

fn json_line(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

fn canonical_json(c: &CanonicalForm) -> Value {
    json!({
        "canonical": c.to_string(),
        "pre_z": c.pre_z(),
        "core": c.core_word().to_string(),
        "post_z": c.post_z(),
        "sigma": c.sigma(),
        "matrix": c.render().phi().to_json(),
    })
}

fn write_output(path: &Path, text: &str) -> Result<Option<String>, Failure> {
    if path == Path::new("-") {
        return Ok(Some(text.trim_end().to_string()));
    }
    std::fs::write(path, text).map_err(|e| Failure::new("io_error", format!("{}: {e}", path.display())))?;
    Ok(None)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let io_err = |e: io::Error| Failure::new("io_error", format!("{}: {e}", path.display()));
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(io_err)
}

fn read_sequence(path: &Path) -> Result<CrossingSequence, Failure> {
    let text = read_input(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::new("invalid_json", e))?;
    Ok(CrossingSequence::from_json(&v)?)
}

fn classification(w: &Word, as_json: bool) -> Outcome {
    let cls = classify(w)?;
    let trace = w.phi().trace_abs();
    let mut v = json!({ "class": cls.tag(), "trace_abs": int_value(&trace) });
    let text = match &cls {
        TraceClass::FiniteOrder2 => "finite order 2".to_string(),
        TraceClass::FiniteOrder3 => "finite order 3".to_string(),
        TraceClass::Parabolic { letter, power } => {
            v["letter"] = json!(letter.name().to_string());
            v["power"] = json!(power);
            format!("parabolic, conjugate to {}^{power}", letter.name())
        }
        TraceClass::Turbulent { conjugacy_representative, lambda, entropy, nielsen_bound } => {
            v["representative"] = json!(conjugacy_representative.to_string());
            v["lambda"] = json!(lambda);
            v["entropy"] = json!(entropy);
            v["nielsen_bound"] = int_value(nielsen_bound);
            format!(
                "turbulent, representative {conjugacy_representative}, at least {nielsen_bound} fixed point classes, entropy >= {entropy:.12}"
            )
        }
        TraceClass::Reversing { conjugacy_representative, .. } => {
            v["representative"] = json!(conjugacy_representative.to_string());
            format!("orientation reversing, representative {conjugacy_representative}")
        }
    };
    if as_json {
        return Ok(json_line(&v));
    }
    Ok(format!("{text}\n|trace| = {trace}"))
}

fn snail(n: i64, p: i64, svg: Option<&Path>, as_json: bool) -> Outcome {
    let s = build_snail(n, p)?;
    let mut out = Vec::new();
    if as_json {
        out.push(json_line(&s.to_json()));
    } else {
        let (connected, count) = components(&s);
        let z: Vec<String> = s.marked.iter().map(trimark::json::rational_string).collect();
        out.push(format!("SN({n}; {p}): z1 = {}, z2 = {}, z3 = {}", z[0], z[1], z[2]));
        let shape = if connected { "simple arc".to_string() } else { format!("{count} components") };
        out.push(format!("{} half-circles, {shape}", s.arcs.iter().filter(|a| !a.is_marker()).count()));
        if let Some(c) = s.colors {
            out.push(format!("green ({}, {}), red ({}, {})", c.green.0, c.green.1, c.red.0, c.red.1));
        }
    }
    if let Some(path) = svg {
        if let Some(text) = write_output(path, &render_svg(&s, &SvgOptions::default()))? {
            out.push(text);
        }
    }
    Ok(out.join("\n"))
}

fn paint(aw: &ArrowWord, color: bool) -> String {
    let one = |a: &Arrow| {
        if !color {
            return a.symbol().to_string();
        }
        let code = match a.color() {
            Color::Green => 32,
            Color::Red => 31,
        };
        format!("\x1b[{code}m{}\x1b[0m", a.symbol())
    };
    let side = |v: &[Arrow]| v.iter().map(one).collect::<Vec<_>>().join(" ");
    format!("{} | {}", side(&aw.left), side(&aw.right))
}

fn tree(w: &Word, svg: Option<&Path>, color: bool) -> Outcome {
    let aw = arrow_word(w)?;
    let [[lg, lr], [rg, rr]] = letter_counts(&aw);
    let mut out = vec![paint(&aw, color), format!("[[{lg}, {lr}], [{rg}, {rr}]]")];
    if let Some(path) = svg {
        if let Some(text) = write_output(path, &build_tree(w)?.render_svg())? {
            out.push(text);
        }
    }
    Ok(out.join("\n"))
}

fn recognition(cs: &CrossingSequence) -> Outcome {
    let v = match skeleton::recognize(cs)? {
        SkeletonClass::Segment(g) => json!({ "class": "segment", "from": g, "to": g + 1 }),
        SkeletonClass::SimpleSnail { n, p, emerging_side } => {
            json!({ "class": "simple_snail", "n": n, "p": p, "emerging_side": emerging_side })
        }
        SkeletonClass::General(parts) => {
            let parts: Vec<Value> = parts
                .iter()
                .map(|s| {
                    json!({
                        "from": s.from + 1,
                        "to": s.to + 1,
                        "landings_per_gap": s.landings_per_gap,
                        "sides": s.sides,
                    })
                })
                .collect();
            json!({
                "class": "general",
                "d1": min_intersections(cs, Bisector::D1)?,
                "d2": min_intersections(cs, Bisector::D2)?,
                "stretches": parts,
            })
        }
    };
    Ok(json_line(&v))
}

fn euclid(q0: u64, q1: u64, as_json: bool) -> Outcome {
    if q0 == 0 || q1 == 0 {
        return Err(EuclidError::NonPositive { n: q0, p: q1 }.into());
    }
    let t = euclid_trace(q0, q1);
    let (period, holds) = period_identity(&t);
    if as_json {
        return Ok(json_line(&json!({
            "rests": t.rests,
            "coefficients": t.coefficients,
            "padded": t.padded,
            "orders": t.orders,
            "gcd": t.gcd,
            "period": period,
            "identity_holds": holds,
        })));
    }
    let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    Ok([
        format!("rests: {}", list(&t.rests)),
        format!("coefficients: {}", list(&t.coefficients)),
        format!("orders: {}", list(&t.orders)),
        format!("gcd: {}", t.gcd),
        format!("period: {period} ({})", if holds { "identity holds" } else { "identity fails" }),
    ]
    .join("\n"))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Canon { word, json } => {
            let c = canonicalize(&parse(&word)?)?;
            Ok(if json { json_line(&canonical_json(&c)) } else { c.to_string() })
        }
        Command::Matrix { word, json } => {
            let m = parse(&word)?.phi();
            Ok(if json { json_line(&m.to_json()) } else { m.to_string() })
        }
        Command::Classify { word, json } => classification(&parse(&word)?, json),
        Command::Decompose { n, p } => {
            let w = decompose_to_word(n, p)?;
            let s = characteristic_sequences(n, p)?;
            let v = json!({ "alpha": s.alpha, "beta": s.beta, "matrix": w.phi().to_json() });
            Ok(format!("{w}\n{}", json_line(&v)))
        }
        Command::Factor { a, b, c, d } => {
            let m = ProjectiveMatrix::new(a, b, c, d)?;
            Ok(factor_positive_matrix(&m)?.to_string())
        }
        Command::Snail { n, p, svg, json } => snail(n, p, svg.as_deref(), json),
        Command::Tree { word, svg, color } => tree(&parse(&word)?, svg.as_deref(), color),
        Command::Linking { word } => {
            let (p1, p3) = linking_numbers(&parse(&word)?)?;
            Ok(json_line(&json!({ "p1": p1, "p3": p3 })))
        }
        Command::Code { input, decode } => {
            if decode {
                let code: CirculationCode = input.join(" ").parse()?;
                Ok(code_to_word(&code).to_string())
            } else {
                Ok(word_to_code(&parse(&input)?)?.to_string())
            }
        }
        Command::Perm { word } => {
            let m = parse(&word)?.phi().reduce_mod2();
            Ok(format!("{}\n{m}", m.induced_permutation()))
        }
        Command::Skeleton { action } => match action {
            SkeletonAction::Reduce { file } => Ok(json_line(&skeleton::reduce(&read_sequence(&file)?).to_json())),
            SkeletonAction::Recognize { file } => recognition(&read_sequence(&file)?),
        },
        Command::Euclid { q0, q1, json } => euclid(q0, q1, json),
        Command::Compose { w1, w2 } => {
            let c1 = canonicalize(&Word::parse(&w1)?)?;
            let c2 = canonicalize(&Word::parse(&w2)?)?;
            Ok(compose(&c1, &c2)?.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            let mut out = io::stdout().lock();
            if writeln!(out, "{text}").is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", json_line(&json!({ "error": f.code, "message": f.message })));
            ExitCode::FAILURE
        }
    }
}
