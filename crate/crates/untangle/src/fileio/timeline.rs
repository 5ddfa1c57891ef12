use std::fmt::Write;

use untangle_core::{Interval, Timeline};

use super::{content_lines, err, number, ParseError, ParseErrorKind as K};

/// One `v a b` triple per line, `v >= 1` and `1 <= a <= b`.
pub fn parse_timeline(text: &str) -> Result<Timeline, ParseError> {
    let mut t = Timeline::new();
    for (line, tokens) in content_lines(text) {
        if tokens.len() != 3 {
            return Err(err(line, K::Arity { directive: "interval".into(), expected: 3 }));
        }
        let [v, a, b] = [number(line, tokens[0])?, number(line, tokens[1])?, number(line, tokens[2])?];
        if v == 0 || a == 0 || a > b {
            return Err(err(line, K::BadInterval(v, a, b)));
        }
        if !t.insert(Interval::new(v, a, b)) {
            return Err(err(line, K::RepeatedInterval(v, a, b)));
        }
    }
    Ok(t)
}

/// Lines sorted by `(v, a, b)`.
pub fn render_timeline(t: &Timeline) -> String {
    let mut out = String::new();
    for iv in t.iter() {
        writeln!(out, "{} {} {}", iv.v, iv.a, iv.b).unwrap();
    }
    out
}
