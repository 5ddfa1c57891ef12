//! Line-oriented text formats: `.tg` temporal graphs, `.tl` timelines,
//! `.bud` budgets and `.bp` bin packing instances.
//!
//! All parsers accept LF and CRLF line endings, treat `#` as the start of a
//! comment and split tokens on whitespace. Renderers emit the canonical form,
//! so `parse(render(x)) == x` for every valid value.

mod bin_packing;
mod budget;
mod graph;
mod timeline;

pub use self::bin_packing::{parse_bin_packing, render_bin_packing};
pub use self::budget::{parse_budgets, render_budgets};
pub use self::graph::{parse_temporal_graph, render_temporal_graph, GraphFile};
pub use self::timeline::{parse_timeline, render_timeline};

use thiserror::Error;

/// A parse failure at a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `{0}`")]
    MissingHeader(&'static str),
    #[error("unsupported format version `{0}`")]
    UnsupportedVersion(String),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("`{0}` given twice")]
    RepeatedDirective(&'static str),
    #[error("missing `{0}`")]
    Missing(&'static str),
    #[error("`{directive}` expects {expected} argument(s)")]
    Arity { directive: String, expected: usize },
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("`{0}` must be positive")]
    NotPositive(&'static str),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(u32),
    #[error("layer {0} out of range")]
    LayerOutOfRange(u32),
    #[error("duplicate layer header {0}")]
    DuplicateLayer(u32),
    #[error("layer {0} after a later layer")]
    LayerOutOfOrder(u32),
    #[error("edge before any `layer` header")]
    EdgeOutsideLayer,
    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),
    #[error("edge {0} {1} repeated within the layer")]
    RepeatedEdge(u32, u32),
    #[error("interval {0} {1} {2} is malformed")]
    BadInterval(u32, u32, u32),
    #[error("interval {0} {1} {2} repeated")]
    RepeatedInterval(u32, u32, u32),
    #[error("budget lines mix `k`, `v` and `class` forms")]
    MixedBudgetForms,
    #[error("{0} {1} given twice")]
    RepeatedEntry(&'static str, u32),
    #[error("{0} ids must run from 1 without gaps; {1} is missing")]
    GapInIds(&'static str, u32),
    #[error("member of undeclared class {0}")]
    UnknownClass(u32),
    #[error("vertex {0} belongs to two classes")]
    VertexInTwoClasses(u32),
    #[error("empty file")]
    Empty,
}

/// Non-empty lines after comment removal, with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub(crate) fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses the arguments after the directive as exactly `N` numbers.
pub(crate) fn numbers<const N: usize>(line: usize, tokens: &[&str]) -> Result<[u32; N], ParseError> {
    if tokens.len() != N + 1 {
        return Err(err(line, ParseErrorKind::Arity { directive: tokens[0].to_owned(), expected: N }));
    }
    let mut out = [0; N];
    for (slot, tok) in out.iter_mut().zip(&tokens[1..]) {
        *slot = number(line, tok)?;
    }
    Ok(out)
}

pub(crate) fn number(line: usize, tok: &str) -> Result<u32, ParseError> {
    // `u32::from_str` also accepts a leading `+`
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, ParseErrorKind::BadNumber(tok.to_owned())));
    }
    tok.parse().map_err(|_| err(line, ParseErrorKind::BadNumber(tok.to_owned())))
}
