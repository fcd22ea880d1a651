//! The poset file format and the component emitters.

mod dot;
mod json;
mod parse;

pub use dot::to_dot;
pub use json::{to_json, to_json_value};
pub use parse::{parse_poset, read_poset, write_poset, ParseError, ParseErrorKind, ReadError};

/// Output format for knitted components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Json,
    Dot,
}

impl std::str::FromStr for EmitFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(EmitFormat::Json),
            "dot" => Ok(EmitFormat::Dot),
            other => Err(format!("unknown format {other:?}, expected json or dot")),
        }
    }
}

pub fn emit(graph: &crate::ComponentGraph, format: EmitFormat) -> String {
    match format {
        EmitFormat::Json => to_json(graph),
        EmitFormat::Dot => to_dot(graph),
    }
}
