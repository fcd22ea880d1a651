//! Line-oriented poset files.
//!
//! ```text
//! # two weak points in a chain
//! p 3
//! point a weak
//! point b weak
//! rel a b 1
//! augment
//! ```
//!
//! Statements may also be separated by `;`. `closure` completes the listed
//! relations to the least admissible equipment, `augment` adjoins the strong
//! bounds `0` and `m`. Reflexive relations come from the declared strengths.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::poset::{
    augment, is_prime, min_equipment_closure, AugmentError, ClosureError, EquippedPoset, Point,
    Strength,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unknown directive {0:?}")]
    UnknownDirective(String),
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("unexpected token {0:?}")]
    Unexpected(String),
    #[error("{0:?} is not a non-negative integer")]
    BadNumber(String),
    #[error("p = {0} is not prime")]
    NotPrime(u32),
    #[error("p is declared twice")]
    DuplicateP,
    #[error("no `p` line")]
    MissingP,
    #[error("strength {0:?} is neither weak nor strong")]
    BadStrength(String),
    #[error("point {0:?} is declared twice")]
    DuplicatePoint(String),
    #[error("point {0:?} is not declared")]
    UndeclaredPoint(String),
    #[error("relation {0} <= {1} is listed twice")]
    DuplicateRelation(String, String),
    #[error("relation {0} <= {0} is synthesized from the strength and may not be listed")]
    Reflexive(String),
    #[error("ell = {ell} outside 1..={p}")]
    EllOutOfRange { ell: u32, p: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.kind
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error(transparent)]
    Augment(#[from] AugmentError),
    #[error("invalid poset:\n  {}", .0.join("\n  "))]
    Invalid(Vec<String>),
}

impl ReadError {
    /// Whether the failure is about reaching the file rather than its content.
    pub fn is_io(&self) -> bool {
        matches!(self, ReadError::Io { .. })
    }
}

/// A whitespace-separated token with its 1-based column.
#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Statement<'a> {
    line: usize,
    tokens: Vec<Token<'a>>,
}

fn statements(text: &str) -> Vec<Statement<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut start = 0;
        for piece in body.split(';') {
            let mut tokens = Vec::new();
            let mut offset = 0;
            for word in piece.split_whitespace() {
                let at = piece[offset..]
                    .find(word)
                    .expect("token comes from the piece")
                    + offset;
                offset = at + word.len();
                let column = raw[..start + at].chars().count() + 1;
                tokens.push(Token { text: word, column });
            }
            if !tokens.is_empty() {
                out.push(Statement {
                    line: idx + 1,
                    tokens,
                });
            }
            start += piece.len() + 1;
        }
    }
    out
}

struct PendingRel<'a> {
    line: usize,
    x: Token<'a>,
    y: Token<'a>,
    ell: u32,
    ell_column: usize,
}

/// Parses, optionally closes and augments, and validates a poset file.
pub fn parse_poset(text: &str) -> Result<EquippedPoset, ReadError> {
    let mut p: Option<u32> = None;
    let mut points: Vec<Point> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut rels: Vec<PendingRel> = Vec::new();
    let mut closure = false;
    let mut do_augment = false;

    for st in statements(text) {
        let err = |column: usize, kind| ParseError {
            line: st.line,
            column,
            kind,
        };
        let head = st.tokens[0];
        let args = &st.tokens[1..];
        let end_column = {
            let last = st.tokens.last().unwrap();
            last.column + last.text.chars().count()
        };
        let arity = match head.text {
            "p" => 1,
            "point" => 2,
            "rel" => 3,
            "closure" | "augment" => 0,
            other => {
                return Err(err(head.column, ParseErrorKind::UnknownDirective(other.into())).into())
            }
        };
        if args.len() > arity {
            let extra = args[arity];
            return Err(err(extra.column, ParseErrorKind::Unexpected(extra.text.into())).into());
        }
        let what: &[&'static str] = match head.text {
            "p" => &["prime"],
            "point" => &["point name", "strength"],
            "rel" => &["lower point", "upper point", "ell"],
            _ => &[],
        };
        if args.len() < arity {
            return Err(err(end_column, ParseErrorKind::Missing(what[args.len()])).into());
        }
        let number = |t: Token| {
            t.text
                .parse::<u32>()
                .map_err(|_| err(t.column, ParseErrorKind::BadNumber(t.text.into())))
        };
        match head.text {
            "p" => {
                let value = number(args[0])?;
                if p.is_some() {
                    return Err(err(head.column, ParseErrorKind::DuplicateP).into());
                }
                if !is_prime(value) {
                    return Err(err(args[0].column, ParseErrorKind::NotPrime(value)).into());
                }
                p = Some(value);
            }
            "point" => {
                let name = args[0].text;
                let strength = match args[1].text {
                    "weak" => Strength::Weak,
                    "strong" => Strength::Strong,
                    other => {
                        return Err(
                            err(args[1].column, ParseErrorKind::BadStrength(other.into())).into(),
                        )
                    }
                };
                if index.contains_key(name) {
                    return Err(
                        err(args[0].column, ParseErrorKind::DuplicatePoint(name.into())).into(),
                    );
                }
                index.insert(name, points.len());
                points.push(Point::new(name, strength));
            }
            "rel" => {
                let ell = number(args[2])?;
                rels.push(PendingRel {
                    line: st.line,
                    x: args[0],
                    y: args[1],
                    ell,
                    ell_column: args[2].column,
                });
            }
            "closure" => closure = true,
            _ => do_augment = true,
        }
    }

    let p = p.ok_or(ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::MissingP,
    })?;
    let mut listed: Vec<(usize, usize, u32)> = Vec::new();
    for r in &rels {
        let err = |column: usize, kind| ParseError {
            line: r.line,
            column,
            kind,
        };
        let lookup = |t: Token| {
            index
                .get(t.text)
                .copied()
                .ok_or_else(|| err(t.column, ParseErrorKind::UndeclaredPoint(t.text.into())))
        };
        let (x, y) = (lookup(r.x)?, lookup(r.y)?);
        if x == y {
            return Err(err(r.x.column, ParseErrorKind::Reflexive(r.x.text.into())).into());
        }
        if r.ell == 0 || r.ell > p {
            return Err(err(
                r.ell_column,
                ParseErrorKind::EllOutOfRange { ell: r.ell, p },
            )
            .into());
        }
        if listed.iter().any(|&(a, b, _)| a == x && b == y) {
            return Err(err(
                r.x.column,
                ParseErrorKind::DuplicateRelation(r.x.text.into(), r.y.text.into()),
            )
            .into());
        }
        listed.push((x, y, r.ell));
    }

    let mut poset = if closure {
        min_equipment_closure(p, points, &listed)?
    } else {
        EquippedPoset::new(p, points, &listed)
    };
    if do_augment {
        poset = augment(&poset)?;
    } else {
        poset = poset.with_named_bounds_at_ends();
    }
    let report = poset.validate();
    if !report.is_valid() {
        return Err(ReadError::Invalid(report.lines(&poset)));
    }
    Ok(poset)
}

pub fn read_poset(path: impl AsRef<Path>) -> Result<EquippedPoset, ReadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_poset(&text)
}

/// Writes every point and every strict relation; parsing the output gives
/// back the same poset.
pub fn write_poset(poset: &EquippedPoset) -> String {
    let mut out = format!("p {}\n", poset.p());
    for pt in poset.points() {
        let s = match pt.strength {
            Strength::Weak => "weak",
            Strength::Strong => "strong",
        };
        out.push_str(&format!("point {} {}\n", pt.name, s));
    }
    for (x, y, l) in poset.relations() {
        if x != y {
            out.push_str(&format!("rel {} {} {}\n", poset.name(x), poset.name(y), l));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err(text: &str) -> ParseError {
        match parse_poset(text) {
            Err(ReadError::Parse(e)) => e,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn declared_top_is_reused() {
        let pos = parse_poset("p 3; point a weak; point m strong; rel a m 3; augment").unwrap();
        assert_eq!(pos.len(), 3);
        let names: Vec<_> = (0..3).map(|x| pos.name(x)).collect();
        assert_eq!(names, ["0", "a", "m"]);
        assert!(pos.relations().iter().all(|&(_, _, l)| l == 3));
    }

    #[test]
    fn weak_chain_is_augmented() {
        let pos = parse_poset("p 3\npoint a weak\npoint b weak\nrel a b 1\naugment\n").unwrap();
        let (a, b) = (pos.index_of("a").unwrap(), pos.index_of("b").unwrap());
        assert_eq!(pos.ell(a, b), Some(1));
        assert_eq!(pos.ell(a, pos.top()), Some(3));
        assert_eq!(pos.ell(pos.zero(), b), Some(3));
    }

    #[test]
    fn ell_out_of_range() {
        let e = parse_err("p 3\npoint a weak\npoint b weak\nrel a b 4\n");
        assert_eq!((e.line, e.column), (4, 9));
        assert_eq!(e.kind, ParseErrorKind::EllOutOfRange { ell: 4, p: 3 });
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_err("p 2\n  point a medium\n");
        assert_eq!((e.line, e.column), (2, 11));
        let e = parse_err("p 2; point a weak; pont b weak");
        assert_eq!((e.line, e.column), (1, 20));
        assert!(matches!(
            parse_err("p 2\npoint a weak\npoint a strong").kind,
            ParseErrorKind::DuplicatePoint(_)
        ));
        assert!(matches!(
            parse_err("p 2\npoint a weak\nrel a z 2").kind,
            ParseErrorKind::UndeclaredPoint(_)
        ));
        assert!(matches!(parse_err("p 4").kind, ParseErrorKind::NotPrime(4)));
        assert!(matches!(
            parse_err("point a weak").kind,
            ParseErrorKind::MissingP
        ));
        assert!(matches!(
            parse_err("p 2\npoint a").kind,
            ParseErrorKind::Missing("strength")
        ));
    }

    #[test]
    fn validation_failures_are_reported() {
        let text = "p 3\npoint x weak\npoint y weak\npoint z weak\nrel x y 2\nrel y z 2\nrel x z 2\naugment\n";
        assert!(matches!(parse_poset(text), Err(ReadError::Invalid(_))));
        let closed = text.replace("augment", "closure\naugment");
        let pos = parse_poset(&closed.replace("rel x z 2\n", "")).unwrap();
        let (x, z) = (pos.index_of("x").unwrap(), pos.index_of("z").unwrap());
        assert_eq!(pos.ell(x, z), Some(3));
    }

    #[test]
    fn write_round_trips() {
        let pos = parse_poset("p 3\npoint a weak\npoint b strong\nrel a b 3\naugment\n").unwrap();
        assert_eq!(parse_poset(&write_poset(&pos)).unwrap(), pos);
    }
}
