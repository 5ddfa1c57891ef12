use std::fmt::Write;

use untangle_core::reductions::BinPackingInstance;

use super::{content_lines, err, number, numbers, ParseError, ParseErrorKind as K};

/// `bp 1`, then `sizes s_1 .. s_m`, `beta β` and `B b` in any order.
pub fn parse_bin_packing(text: &str) -> Result<BinPackingInstance, ParseError> {
    let mut lines = content_lines(text);
    let (line, tokens) = lines.next().ok_or(err(1, K::Empty))?;
    if tokens[0] != "bp" {
        return Err(err(line, K::MissingHeader("bp 1")));
    }
    if tokens.len() != 2 || tokens[1] != "1" {
        return Err(err(line, K::UnsupportedVersion(tokens[1..].join(" "))));
    }
    let mut last_line = line;
    let (mut sizes, mut beta, mut capacity) = (None, None, None);
    for (line, tokens) in lines {
        last_line = line;
        match tokens[0] {
            "sizes" => {
                let parsed = tokens[1..].iter().map(|t| number(line, t)).collect::<Result<Vec<_>, _>>()?;
                if parsed.is_empty() {
                    return Err(err(line, K::Missing("item sizes")));
                }
                if parsed.contains(&0) {
                    return Err(err(line, K::NotPositive("sizes")));
                }
                if sizes.replace(parsed).is_some() {
                    return Err(err(line, K::RepeatedDirective("sizes")));
                }
            }
            "beta" => {
                let [b] = numbers::<1>(line, &tokens)?;
                if b == 0 {
                    return Err(err(line, K::NotPositive("beta")));
                }
                if beta.replace(b).is_some() {
                    return Err(err(line, K::RepeatedDirective("beta")));
                }
            }
            "B" => {
                let [b] = numbers::<1>(line, &tokens)?;
                if capacity.replace(b).is_some() {
                    return Err(err(line, K::RepeatedDirective("B")));
                }
            }
            other => return Err(err(line, K::UnknownDirective(other.to_owned()))),
        }
    }
    Ok(BinPackingInstance {
        sizes: sizes.ok_or(err(last_line, K::Missing("sizes")))?,
        beta: beta.ok_or(err(last_line, K::Missing("beta")))?,
        capacity: capacity.ok_or(err(last_line, K::Missing("B")))?,
    })
}

pub fn render_bin_packing(bp: &BinPackingInstance) -> String {
    let mut out = String::from("bp 1\nsizes");
    for s in &bp.sizes {
        write!(out, " {s}").unwrap();
    }
    writeln!(out, "\nbeta {}\nB {}", bp.beta, bp.capacity).unwrap();
    out
}
