//! The `gmn` command line. Parsing and dispatch live here so the binary is a
//! one-line wrapper and every command can be run in-process.
//!
//! Exit codes: 0 for success or a true verdict, 1 for a false verdict, 2 for
//! usage and parse errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::amalgam::{cyclic_decompose, embed, express_as_power, h_intersection, GElem};
use crate::automorphism::{is_automorphism, AutMap};
use crate::presentation::{aut_words_equal, canonicalize, parse_aut_word};
use crate::quotient::{fp_conjugate, is_normal_automorphism, project, NormalityVerdict, Quotient};
use crate::word::{parse, GroupParams};

#[derive(Debug, Parser)]
#[command(
    name = "gmn",
    version,
    about = "Computations in <a, b; [a^m, b^n] = 1>"
)]
struct Cli {
    /// Exponent of a in the relator (at least 2)
    #[arg(long, global = true, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Exponent of b in the relator (at least 2)
    #[arg(long, global = true, allow_hyphen_values = true)]
    n: Option<i64>,
    /// Emit one JSON object instead of plain lines
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form of a word
    Nf { word: String },
    /// Whether two words are equal in G
    Eq { w1: String, w2: String },
    /// Length of the reduced form
    Len { word: String },
    /// g = u v u^-1 with v cyclically reduced
    Cyc { word: String },
    /// Intersection of <g> with H
    Hint { word: String },
    /// Write v as a power of a generator of <u, v>
    Power { u: String, v: String },
    /// Whether a -> u, b -> v is an automorphism
    IsAuto { u: String, v: String },
    /// Canonical form of a word in L, M, E, A, B
    AutCanon { word: String },
    /// Whether two words in L, M, E, A, B are equal in Aut G
    AutEq { w1: String, w2: String },
    /// Whether a -> u, b -> v is a normal automorphism
    IsNormal { u: String, v: String },
    /// Normal form of the image in G/M or G/N
    QNf { which: QuotientArg, word: String },
    /// Whether the images of two words are conjugate in G/M or G/N
    QConj {
        which: QuotientArg,
        w1: String,
        w2: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum QuotientArg {
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "N", alias = "n")]
    N,
}

impl From<QuotientArg> for Quotient {
    fn from(q: QuotientArg) -> Self {
        match q {
            QuotientArg::M => Quotient::M,
            QuotientArg::N => Quotient::N,
        }
    }
}

struct Outcome {
    code: i32,
    plain: String,
    json: Value,
}

impl Outcome {
    fn ok(plain: String, json: Value) -> Self {
        Outcome {
            code: 0,
            plain,
            json,
        }
    }

    fn verdict(v: bool, plain: String, json: Value) -> Self {
        Outcome {
            code: if v { 0 } else { 1 },
            plain,
            json,
        }
    }
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Runs the command line given by `args` (including the program name) and
/// returns the exit code and the text to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string().trim_end().to_string());
        }
    };
    let json_mode = cli.json;
    match dispatch(cli) {
        Ok(out) if json_mode => (out.code, out.json.to_string()),
        Ok(out) => (out.code, out.plain),
        Err(UsageError(msg)) if json_mode => (2, json!({ "error": msg }).to_string()),
        Err(UsageError(msg)) => (2, format!("error: {msg}")),
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, UsageError> {
    let m = cli.m.ok_or_else(|| UsageError("--m is required".into()))?;
    let n = cli.n.ok_or_else(|| UsageError("--n is required".into()))?;
    let params = GroupParams::new(m, n)?;
    let elem = |s: &str| -> Result<GElem, UsageError> { Ok(embed(&parse(s, params)?, params)) };

    Ok(match cli.command {
        Command::Nf { word } => {
            let g = elem(&word)?;
            Outcome::ok(g.to_string(), json!({ "normal_form": g.to_string() }))
        }
        Command::Eq { w1, w2 } => {
            let equal = elem(&w1)? == elem(&w2)?;
            Outcome::verdict(equal, equal.to_string(), json!({ "equal": equal }))
        }
        Command::Len { word } => {
            let l = elem(&word)?.length();
            Outcome::ok(l.to_string(), json!({ "length": l }))
        }
        Command::Cyc { word } => {
            let d = cyclic_decompose(&elem(&word)?);
            Outcome::ok(
                format!("u={}\nv={}", d.u, d.v),
                json!({ "u": d.u.to_string(), "v": d.v.to_string() }),
            )
        }
        Command::Hint { word } => {
            let h = h_intersection(&elem(&word)?);
            Outcome::ok(h.to_string(), json!({ "intersection": h.to_string() }))
        }
        Command::Power { u, v } => match express_as_power(&elem(&u)?, &elem(&v)?) {
            Ok(p) => Outcome::ok(
                format!("generator={}\nexponent={}", p.generator, p.exponent),
                json!({ "generator": p.generator.to_string(), "exponent": p.exponent }),
            ),
            Err(e) => Outcome::verdict(
                false,
                format!("failed: {e}"),
                json!({ "error": e.to_string() }),
            ),
        },
        Command::IsAuto { u, v } => {
            match is_automorphism(&parse(&u, params)?, &parse(&v, params)?, params) {
                Ok(d) => Outcome::verdict(
                    true,
                    d.to_string(),
                    json!({
                        "automorphism": true,
                        "kappa": d.kappa.to_string(),
                        "inner": d.w.to_string(),
                    }),
                ),
                Err(r) => Outcome::verdict(
                    false,
                    format!("rejected: {r}"),
                    json!({ "automorphism": false, "reason": r.to_string() }),
                ),
            }
        }
        Command::AutCanon { word } => {
            let c = canonicalize(&parse_aut_word(&word)?, params)?;
            Outcome::ok(
                c.to_string(),
                json!({ "kappa": c.kappa.to_string(), "inner": c.g.to_string() }),
            )
        }
        Command::AutEq { w1, w2 } => {
            let equal = aut_words_equal(&parse_aut_word(&w1)?, &parse_aut_word(&w2)?, params)?;
            Outcome::verdict(equal, equal.to_string(), json!({ "equal": equal }))
        }
        Command::IsNormal { u, v } => {
            let verdict =
                AutMap::new(elem(&u)?, elem(&v)?).and_then(|phi| is_normal_automorphism(&phi));
            match verdict {
                Ok(NormalityVerdict::Normal { w }) => Outcome::verdict(
                    true,
                    format!("normal: inner automorphism by {w}"),
                    json!({ "normal": true, "inner": w.to_string() }),
                ),
                Ok(NormalityVerdict::NotNormal(cert)) => Outcome::verdict(
                    false,
                    format!("not normal\ncertificate: {cert}"),
                    json!({
                        "normal": false,
                        "quotient": cert.quotient().to_string(),
                        "certificate": cert.to_string(),
                    }),
                ),
                Err(r) => Outcome::verdict(
                    false,
                    format!("not an automorphism: {r}"),
                    json!({ "normal": false, "automorphism": false, "reason": r.to_string() }),
                ),
            }
        }
        Command::QNf { which, word } => {
            let e = project(&elem(&word)?, which.into());
            Outcome::ok(e.to_string(), json!({ "normal_form": e.to_string() }))
        }
        Command::QConj { which, w1, w2 } => {
            let which = Quotient::from(which);
            let c = fp_conjugate(&project(&elem(&w1)?, which), &project(&elem(&w2)?, which));
            Outcome::verdict(c, c.to_string(), json!({ "conjugate": c }))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, String) {
        run(std::iter::once("gmn").chain(args.iter().copied()))
    }

    #[test]
    fn relator_is_trivial() {
        assert_eq!(
            go(&["--m", "2", "--n", "3", "eq", "[a^2,b^3]", "1"]),
            (0, "true".into())
        );
        assert_eq!(go(&["--m", "2", "--n", "3", "eq", "a", "b"]).0, 1);
    }

    #[test]
    fn lambda_is_automorphism() {
        assert_eq!(
            go(&["--m", "2", "--n", "3", "is-auto", "a^-1", "b"]),
            (0, "kappa=L; inner=1".into())
        );
        let (code, out) = go(&["--m", "2", "--n", "3", "is-auto", "a^2", "b"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("rejected:"));
    }

    #[test]
    fn lambda_is_not_normal() {
        let (code, out) = go(&["--m", "2", "--n", "3", "is-normal", "a^-1", "b"]);
        assert_eq!(code, 1);
        assert!(out.contains("G/N"), "{out}");
        assert_eq!(
            go(&["--m", "2", "--n", "3", "is-normal", "b^-1 a b", "b"]).0,
            0
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(go(&["--m", "1", "--n", "3", "nf", "a"]).0, 2);
        assert_eq!(go(&["--m", "2", "nf", "a"]).0, 2);
        assert_eq!(go(&["--m", "2", "--n", "3", "nf", "a^"]).0, 2);
        assert_eq!(go(&["--m", "2", "--n", "3", "frobnicate"]).0, 2);
        assert_eq!(go(&["--m", "2", "--n", "3", "aut-canon", "E"]).0, 2);
        assert_eq!(go(&["--m", "2", "--n", "3", "q-nf", "X", "a"]).0, 2);
    }

    #[test]
    fn other_commands() {
        let p = ["--m", "2", "--n", "3"];
        let with = |rest: &[&str]| go(&[&p[..], rest].concat());
        assert_eq!(with(&["nf", "a^3"]), (0, "c | a".into()));
        assert_eq!(with(&["len", "a b a"]), (0, "3".into()));
        assert_eq!(
            with(&["cyc", "b a b^2 a^-1 b^-1"]),
            (0, "u=b | a\nv=b^2".into())
        );
        assert_eq!(
            with(&["hint", "a"]),
            (
                0,
                h_intersection(&GElem::a(GroupParams::new(2, 3).unwrap(), 1)).to_string()
            )
        );
        assert_eq!(
            with(&["aut-canon", "A L"]),
            (0, "kappa=L; inner=c^-1 | a".into())
        );
        assert_eq!(with(&["aut-eq", "L M", "M L"]).0, 0);
        assert_eq!(with(&["q-nf", "M", "b^2 a^4"]), (0, "y^2".into()));
        assert_eq!(with(&["q-conj", "M", "b", "b^-1"]).0, 1);
        assert_eq!(with(&["q-conj", "N", "a b", "b a"]).0, 0);
        let (code, out) = with(&["power", "a b", "a b a b"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("exponent=2"), "{out}");
    }

    #[test]
    fn json_output() {
        let (code, out) = go(&["--m", "2", "--n", "3", "--json", "is-normal", "a^-1", "b"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["normal"], false);
        assert_eq!(v["quotient"], "N");
        let (_, out) = go(&["--json", "--m", "2", "--n", "3", "nf", "a"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["normal_form"], "a");
    }
}
