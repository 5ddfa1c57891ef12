use std::fmt::Write;

use untangle_core::{TemporalGraph, Vertex};

use super::{content_lines, err, numbers, ParseError, ParseErrorKind as K};

/// A parsed graph with the line of each `layer` header, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: TemporalGraph,
    pub layer_lines: Vec<(u32, usize)>,
}

/// Parses a `.tg` file:
///
/// ```text
/// tg 1
/// n 3
/// tau 2
/// layer 1
/// e 1 2
/// layer 2
/// e 2 3
/// ```
///
/// Layers without a header are empty.
pub fn parse_temporal_graph(text: &str) -> Result<TemporalGraph, ParseError> {
    GraphFile::parse(text).map(|f| f.graph)
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = content_lines(text);
        let (line, tokens) = lines.next().ok_or(err(1, K::Empty))?;
        if tokens[0] != "tg" {
            return Err(err(line, K::MissingHeader("tg 1")));
        }
        if tokens.len() != 2 || tokens[1] != "1" {
            return Err(err(line, K::UnsupportedVersion(tokens[1..].join(" "))));
        }
        let mut last_line = line;
        let mut n = None;
        let mut tau = None;
        let mut layers: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
        let mut layer_lines = Vec::new();
        let mut current: Option<u32> = None;
        for (line, tokens) in lines {
            last_line = line;
            match tokens[0] {
                "n" | "tau" if current.is_some() => {
                    return Err(err(line, K::UnknownDirective(format!("{} inside a layer block", tokens[0]))));
                }
                "n" => {
                    let [v] = numbers::<1>(line, &tokens)?;
                    if n.replace(v).is_some() {
                        return Err(err(line, K::RepeatedDirective("n")));
                    }
                    if v == 0 {
                        return Err(err(line, K::NotPositive("n")));
                    }
                }
                "tau" => {
                    let [t] = numbers::<1>(line, &tokens)?;
                    if n.is_none() {
                        return Err(err(line, K::Missing("n")));
                    }
                    if tau.replace(t).is_some() {
                        return Err(err(line, K::RepeatedDirective("tau")));
                    }
                    if t == 0 {
                        return Err(err(line, K::NotPositive("tau")));
                    }
                    layers = vec![Vec::new(); t as usize];
                }
                "layer" => {
                    let [t] = numbers::<1>(line, &tokens)?;
                    let tau = tau.ok_or(err(line, K::Missing("tau")))?;
                    if t == 0 || t > tau {
                        return Err(err(line, K::LayerOutOfRange(t)));
                    }
                    match current {
                        Some(c) if c == t => return Err(err(line, K::DuplicateLayer(t))),
                        Some(c) if c > t => {
                            return Err(err(
                                line,
                                if layer_lines.iter().any(|&(l, _)| l == t) { K::DuplicateLayer(t) } else { K::LayerOutOfOrder(t) },
                            ))
                        }
                        _ => {}
                    }
                    current = Some(t);
                    layer_lines.push((t, line));
                }
                "e" => {
                    let [a, b] = numbers::<2>(line, &tokens)?;
                    let t = current.ok_or(err(line, K::EdgeOutsideLayer))?;
                    let n = n.expect("layer implies n");
                    for v in [a, b] {
                        if v == 0 || v > n {
                            return Err(err(line, K::VertexOutOfRange(v)));
                        }
                    }
                    if a == b {
                        return Err(err(line, K::SelfLoop(a)));
                    }
                    let edge = (a.min(b), a.max(b));
                    let layer = &mut layers[t as usize - 1];
                    if layer.contains(&edge) {
                        return Err(err(line, K::RepeatedEdge(edge.0, edge.1)));
                    }
                    layer.push(edge);
                }
                other => return Err(err(line, K::UnknownDirective(other.to_owned()))),
            }
        }
        let n = n.ok_or(err(last_line, K::Missing("n")))?;
        tau.ok_or(err(last_line, K::Missing("tau")))?;
        let graph = TemporalGraph::new(n, layers).expect("edges validated while parsing");
        Ok(GraphFile { graph, layer_lines })
    }
}

/// Canonical `.tg` text: edges sorted, empty layers omitted.
pub fn render_temporal_graph(g: &TemporalGraph) -> String {
    let mut out = format!("tg 1\nn {}\ntau {}\n", g.n(), g.tau());
    for (i, layer) in g.layers().iter().enumerate() {
        if layer.is_empty() {
            continue;
        }
        writeln!(out, "layer {}", i + 1).unwrap();
        for e in layer {
            writeln!(out, "e {} {}", e.u, e.v).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(text: &str) -> (usize, K) {
        let e = parse_temporal_graph(text).unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn minimal_and_defaults() {
        let g = parse_temporal_graph("tg 1\nn 2\ntau 1\nlayer 1\ne 1 2\n").unwrap();
        assert_eq!(g, TemporalGraph::new(2, [[(1, 2)]]).unwrap());
        let g = parse_temporal_graph("tg 1\nn 3\ntau 3\n").unwrap();
        assert_eq!(g, TemporalGraph::empty(3, 3).unwrap());
        let g = parse_temporal_graph("tg 1\r\nn 2\r\ntau 1 # one layer\r\nlayer 1\r\ne 2 1\r\n").unwrap();
        assert_eq!(g.layer(1)[0].u, 1);
    }

    #[test]
    fn distinct_errors_with_lines() {
        assert_eq!(kind("tg 1\nn 2\ntau 1\nfoo 3\n"), (4, K::UnknownDirective("foo".into())));
        assert_eq!(kind("tg 1\nn 2\ntau 1\nlayer 1\ne 1 3\n"), (5, K::VertexOutOfRange(3)));
        assert_eq!(kind("tg 1\nn 2\ntau 2\nlayer 1\nlayer 1\n"), (5, K::DuplicateLayer(1)));
        assert_eq!(kind("tg 1\nn 2\ntau 2\nlayer 2\nlayer 1\n"), (5, K::LayerOutOfOrder(1)));
        assert_eq!(kind("tg 1\nn 2\ntau 1\nlayer 1\ne 2 2\n"), (5, K::SelfLoop(2)));
        assert_eq!(kind("tg 1\nn 2\ntau 1\nlayer 1\ne 1 2\n\ne 2 1\n"), (7, K::RepeatedEdge(1, 2)));
        assert_eq!(kind("tg 1\nn 2\ntau 1\ne 1 2\n"), (4, K::EdgeOutsideLayer));
        assert_eq!(kind("tg 1\nn 2\ntau 1\nlayer 2\n"), (4, K::LayerOutOfRange(2)));
        assert_eq!(kind("tg 2\n"), (1, K::UnsupportedVersion("2".into())));
        assert_eq!(kind("n 2\n"), (1, K::MissingHeader("tg 1")));
        assert_eq!(kind("tg 1\nn 2\n"), (2, K::Missing("tau")));
        assert_eq!(kind("tg 1\nn x\n"), (2, K::BadNumber("x".into())));
        assert_eq!(kind("tg 1\nn 2\ntau 1\nlayer 1\ne 1\n"), (5, K::Arity { directive: "e".into(), expected: 2 }));
    }

    #[test]
    fn render_is_canonical() {
        let g = TemporalGraph::new(3, [vec![(2, 3), (1, 2)], vec![], vec![(1, 3)]]).unwrap();
        let text = render_temporal_graph(&g);
        assert_eq!(text, "tg 1\nn 3\ntau 3\nlayer 1\ne 1 2\ne 2 3\nlayer 3\ne 1 3\n");
        assert_eq!(parse_temporal_graph(&text).unwrap(), g);
    }
}
