use std::collections::BTreeMap;
use std::fmt::Write;

use untangle_core::{BudgetSpec, Vertex};

use super::{content_lines, err, numbers, ParseError, ParseErrorKind as K};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Form {
    Uniform,
    PerVertex,
    Classes,
}

/// Parses one of three forms: a single `k K` line; `v <id> <k_v>` lines
/// for every vertex; or `class <i> <k_i>` lines plus `member <i> <v>` lines.
/// Ids are 1-based and must not skip values. Range checks against a graph
/// happen when the budget is used.
pub fn parse_budgets(text: &str) -> Result<BudgetSpec, ParseError> {
    let mut form = None;
    let mut uniform = None;
    let mut per_vertex: BTreeMap<u32, (u32, usize)> = BTreeMap::new();
    let mut classes: BTreeMap<u32, (u32, Vec<Vertex>, usize)> = BTreeMap::new();
    let mut members: Vec<(u32, Vertex, usize)> = Vec::new();
    let mut last_line = 1;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        let this = match tokens[0] {
            "k" => Form::Uniform,
            "v" => Form::PerVertex,
            "class" | "member" => Form::Classes,
            other => return Err(err(line, K::UnknownDirective(other.to_owned()))),
        };
        if *form.get_or_insert(this) != this {
            return Err(err(line, K::MixedBudgetForms));
        }
        match tokens[0] {
            "k" => {
                let [k] = numbers::<1>(line, &tokens)?;
                if uniform.replace(k).is_some() {
                    return Err(err(line, K::RepeatedDirective("k")));
                }
            }
            "v" => {
                let [v, k] = numbers::<2>(line, &tokens)?;
                if v == 0 {
                    return Err(err(line, K::VertexOutOfRange(v)));
                }
                if per_vertex.insert(v, (k, line)).is_some() {
                    return Err(err(line, K::RepeatedEntry("vertex", v)));
                }
            }
            "class" => {
                let [i, k] = numbers::<2>(line, &tokens)?;
                if i == 0 {
                    return Err(err(line, K::UnknownClass(i)));
                }
                if classes.insert(i, (k, Vec::new(), line)).is_some() {
                    return Err(err(line, K::RepeatedEntry("class", i)));
                }
            }
            _ => {
                let [i, v] = numbers::<2>(line, &tokens)?;
                if v == 0 {
                    return Err(err(line, K::VertexOutOfRange(v)));
                }
                members.push((i, v, line));
            }
        }
    }
    match form {
        None => Err(err(last_line, K::Empty)),
        Some(Form::Uniform) => Ok(BudgetSpec::Uniform(uniform.expect("form implies a k line"))),
        Some(Form::PerVertex) => {
            check_contiguous("vertex", per_vertex.keys().copied(), last_line)?;
            Ok(BudgetSpec::NonUniform(per_vertex.values().map(|&(k, _)| k).collect()))
        }
        Some(Form::Classes) => {
            let mut owner: BTreeMap<Vertex, u32> = BTreeMap::new();
            for (i, v, line) in members {
                let class = classes.get_mut(&i).ok_or(err(line, K::UnknownClass(i)))?;
                if owner.insert(v, i).is_some() {
                    return Err(err(line, K::VertexInTwoClasses(v)));
                }
                class.1.push(v);
            }
            check_contiguous("class", classes.keys().copied(), last_line)?;
            check_contiguous("member vertex", owner.keys().copied(), last_line)?;
            let (budgets, classes) = classes.into_values().map(|(k, vs, _)| (k, vs)).unzip();
            Ok(BudgetSpec::Multicolored { classes, budgets })
        }
    }
}

fn check_contiguous(what: &'static str, ids: impl Iterator<Item = u32>, line: usize) -> Result<(), ParseError> {
    for (expected, id) in (1..).zip(ids) {
        if id != expected {
            return Err(err(line, K::GapInIds(what, expected)));
        }
    }
    Ok(())
}

pub fn render_budgets(b: &BudgetSpec) -> String {
    let mut out = String::new();
    match b {
        BudgetSpec::Uniform(k) => writeln!(out, "k {k}").unwrap(),
        BudgetSpec::NonUniform(ks) => {
            for (i, k) in ks.iter().enumerate() {
                writeln!(out, "v {} {k}", i + 1).unwrap();
            }
        }
        BudgetSpec::Multicolored { classes, budgets } => {
            for (i, k) in budgets.iter().enumerate() {
                writeln!(out, "class {} {k}", i + 1).unwrap();
            }
            for (i, class) in classes.iter().enumerate() {
                for v in class {
                    writeln!(out, "member {} {v}", i + 1).unwrap();
                }
            }
        }
    }
    out
}
