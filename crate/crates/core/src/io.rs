//! Line-oriented text formats.
//!
//! ```text
//! p tss <n> <m>          p sc <n> <m>          s <size>
//! t <v> <tau>            s <e1> <e2> ...       w <v1> <v2> ...
//! e <u> <v>                                    i <key> <value>
//! b 1 <v...> / b 2 <v...>
//! ```
//!
//! Ids are 1-based on disk. Everything after `#` is ignored, as are blank
//! lines and lines whose first token is `c`.

use std::fmt::Write as _;

use crate::diffusion::ActivationTrace;
use crate::error::{ParseError, ParseErrorKind};
use crate::instance::{Bipartition, SetCoverInstance, SolveResult, TssInstance, VertexSet};

type ParseResult<T> = std::result::Result<T, ParseError>;

fn err<T>(line: usize, kind: ParseErrorKind) -> ParseResult<T> {
    Err(ParseError { line, kind })
}

/// Yields `(line_number, tokens)` for every non-comment line.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

fn number(line: usize, tok: &str) -> ParseResult<usize> {
    tok.parse::<usize>().or_else(|_| {
        err(
            line,
            ParseErrorKind::MalformedLine(format!("not a number: {tok}")),
        )
    })
}

fn vertex(line: usize, tok: &str, n: usize) -> ParseResult<usize> {
    let v = number(line, tok)?;
    if v == 0 || v > n {
        return err(line, ParseErrorKind::VertexOutOfRange(v));
    }
    Ok(v - 1)
}

fn header(line: usize, tokens: &[&str], tag: &str) -> ParseResult<(usize, usize)> {
    if tokens.len() != 4 || tokens[0] != "p" || tokens[1] != tag {
        return err(
            line,
            ParseErrorKind::MalformedHeader(format!("expected `p {tag} <n> <m>`")),
        );
    }
    let parse = |tok: &str| {
        tok.parse::<usize>().or_else(|_| {
            err(
                line,
                ParseErrorKind::MalformedHeader(format!("not a number: {tok}")),
            )
        })
    };
    Ok((parse(tokens[2])?, parse(tokens[3])?))
}

/// Parses a TSS instance. Input thresholds must be at least 1.
pub fn parse_tss(text: &str) -> ParseResult<TssInstance> {
    let mut lines = content_lines(text);
    let (header_line, tokens) = match lines.next() {
        Some(l) => l,
        None => return err(text.lines().count().max(1), ParseErrorKind::MissingHeader),
    };
    let (n, m) = header(header_line, &tokens, "tss")?;

    let mut thresholds: Vec<Option<usize>> = vec![None; n];
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut sides: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    let mut bipartition_line = None;
    let mut last_line = header_line;

    for (line, tokens) in lines {
        last_line = line;
        match tokens[0] {
            "t" => {
                if tokens.len() != 3 {
                    return err(
                        line,
                        ParseErrorKind::MalformedLine("expected `t <v> <tau>`".into()),
                    );
                }
                let v = vertex(line, tokens[1], n)?;
                let tau = number(line, tokens[2])?;
                if thresholds[v].is_some() {
                    return err(line, ParseErrorKind::DuplicateThreshold(v + 1));
                }
                if tau < 1 {
                    return err(line, ParseErrorKind::ThresholdTooSmall(v + 1));
                }
                thresholds[v] = Some(tau);
            }
            "e" => {
                if tokens.len() != 3 {
                    return err(
                        line,
                        ParseErrorKind::MalformedLine("expected `e <u> <v>`".into()),
                    );
                }
                let u = vertex(line, tokens[1], n)?;
                let v = vertex(line, tokens[2], n)?;
                if u == v {
                    return err(line, ParseErrorKind::SelfLoop(u + 1));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return err(line, ParseErrorKind::DuplicateEdge(u + 1, v + 1));
                }
                edges.push((u, v));
            }
            "b" => {
                let side = match tokens.get(1) {
                    Some(&"1") => 0,
                    Some(&"2") => 1,
                    _ => {
                        return err(
                            line,
                            ParseErrorKind::MalformedLine("expected `b 1|2 <v...>`".into()),
                        )
                    }
                };
                for tok in &tokens[2..] {
                    sides[side].push(vertex(line, tok, n)?);
                }
                bipartition_line.get_or_insert(line);
            }
            other => {
                return err(
                    line,
                    ParseErrorKind::MalformedLine(format!("unknown line type `{other}`")),
                )
            }
        }
    }

    if let Some(v) = thresholds.iter().position(Option::is_none) {
        return err(header_line, ParseErrorKind::MissingThreshold(v + 1));
    }
    if edges.len() != m {
        return err(
            last_line,
            ParseErrorKind::CountMismatch {
                what: "edges",
                expected: m,
                found: edges.len(),
            },
        );
    }
    let thresholds = thresholds.into_iter().map(Option::unwrap).collect();
    let instance = TssInstance::new(n, &edges, thresholds).map_err(|e| ParseError {
        line: last_line,
        kind: ParseErrorKind::MalformedLine(e.to_string()),
    })?;
    match bipartition_line {
        None => Ok(instance),
        Some(line) => {
            let [left, right] = sides;
            let bip = Bipartition {
                left: left.into(),
                right: right.into(),
            };
            instance.with_bipartition(bip).map_err(|e| ParseError {
                line,
                kind: ParseErrorKind::InvalidBipartition(e.to_string()),
            })
        }
    }
}

fn push_ids(out: &mut String, prefix: &str, ids: impl Iterator<Item = usize>) {
    out.push_str(prefix);
    for v in ids {
        let _ = write!(out, " {}", v + 1);
    }
    out.push('\n');
}

pub fn write_tss(instance: &TssInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "p tss {} {}",
        instance.vertex_count(),
        instance.edge_count()
    );
    for (v, tau) in instance.thresholds().iter().enumerate() {
        let _ = writeln!(out, "t {} {}", v + 1, tau);
    }
    for &(u, v) in instance.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    if let Some(bip) = instance.bipartition() {
        push_ids(&mut out, "b 1", bip.left.iter());
        push_ids(&mut out, "b 2", bip.right.iter());
    }
    out
}

/// Parses a set cover instance. Feasibility is not checked here; see
/// [`SetCoverInstance::uncovered_elements`].
pub fn parse_setcover(text: &str) -> ParseResult<SetCoverInstance> {
    let mut lines = content_lines(text);
    let (header_line, tokens) = match lines.next() {
        Some(l) => l,
        None => return err(text.lines().count().max(1), ParseErrorKind::MissingHeader),
    };
    let (n, m) = header(header_line, &tokens, "sc")?;
    let mut subsets = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, tokens) in lines {
        last_line = line;
        if tokens[0] != "s" {
            return err(
                line,
                ParseErrorKind::MalformedLine(format!("unknown line type `{}`", tokens[0])),
            );
        }
        let mut subset = Vec::with_capacity(tokens.len() - 1);
        for tok in &tokens[1..] {
            let e = number(line, tok)?;
            if e == 0 || e > n {
                return err(line, ParseErrorKind::ElementOutOfRange(e));
            }
            subset.push(e - 1);
        }
        subsets.push(subset);
    }
    if subsets.len() != m {
        return err(
            last_line,
            ParseErrorKind::CountMismatch {
                what: "subsets",
                expected: m,
                found: subsets.len(),
            },
        );
    }
    // Elements were range-checked above, so construction cannot fail.
    Ok(SetCoverInstance::new(n, subsets).expect("validated subsets"))
}

pub fn write_setcover(sc: &SetCoverInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p sc {} {}", sc.ground_size(), sc.subset_count());
    for s in sc.subsets() {
        push_ids(&mut out, "s", s.iter().copied());
    }
    out
}

/// Serializes a result: size line, sorted witness line, then one `i` line per
/// counter in alphabetical key order.
pub fn write_result(result: &SolveResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s {}", result.optimum_size);
    push_ids(&mut out, "w", result.witness.iter());
    for (k, v) in &result.stats {
        let _ = writeln!(out, "i {k} {v}");
    }
    out
}

pub fn parse_result(text: &str) -> ParseResult<SolveResult> {
    let mut size = None;
    let mut witness = None;
    let mut result = SolveResult::default();
    let mut last_line = 1;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        match tokens[0] {
            "s" if tokens.len() == 2 => size = Some((line, number(line, tokens[1])?)),
            "w" => witness = Some(parse_ids(line, &tokens[1..])?),
            "i" if tokens.len() == 3 => {
                let value = tokens[2].parse::<u64>().or_else(|_| {
                    err(
                        line,
                        ParseErrorKind::MalformedLine("bad counter value".into()),
                    )
                })?;
                result.stats.insert(tokens[1].to_string(), value);
            }
            _ => return err(line, ParseErrorKind::MalformedLine(tokens.join(" "))),
        }
    }
    let (size_line, size) = size.ok_or(ParseError {
        line: last_line,
        kind: ParseErrorKind::MalformedLine("missing `s` line".into()),
    })?;
    let witness = witness.ok_or(ParseError {
        line: last_line,
        kind: ParseErrorKind::MalformedLine("missing `w` line".into()),
    })?;
    if witness.len() != size {
        return err(
            size_line,
            ParseErrorKind::CountMismatch {
                what: "witness vertices",
                expected: size,
                found: witness.len(),
            },
        );
    }
    result.optimum_size = size;
    result.witness = witness;
    Ok(result)
}

fn parse_ids(line: usize, tokens: &[&str]) -> ParseResult<VertexSet> {
    tokens
        .iter()
        .map(|tok| {
            let v = number(line, tok)?;
            if v == 0 {
                return err(line, ParseErrorKind::VertexOutOfRange(0));
            }
            Ok(v - 1)
        })
        .collect()
}

/// Reads the first `w` line of a file as a vertex set. Used for seed,
/// witness and cover files, which may or may not carry the other result lines.
pub fn parse_vertex_list(text: &str) -> ParseResult<VertexSet> {
    for (line, tokens) in content_lines(text) {
        if tokens[0] == "w" {
            return parse_ids(line, &tokens[1..]);
        }
    }
    err(
        text.lines().count().max(1),
        ParseErrorKind::MalformedLine("no `w` line found".into()),
    )
}

pub fn write_vertex_list(set: &VertexSet) -> String {
    let mut out = String::new();
    push_ids(&mut out, "w", set.iter());
    out
}

/// One `r <i> <v...>` line per round, vertices sorted ascending.
pub fn write_trace(trace: &ActivationTrace) -> String {
    let mut out = String::new();
    for (i, round) in trace.rounds().iter().enumerate() {
        push_ids(&mut out, &format!("r {i}"), round.iter());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(s: &str) -> String {
        s.replace(" / ", "\n")
    }

    #[test]
    fn parses_smallest_instance() {
        let g = parse_tss(&lines("p tss 2 1 / t 1 1 / t 2 1 / e 1 2")).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.thresholds(), &[1, 1]);
    }

    #[test]
    fn parses_triangle() {
        let g = parse_tss(&lines(
            "p tss 3 3 / t 1 1 / t 2 2 / t 3 1 / e 1 2 / e 2 3 / e 1 3",
        ))
        .unwrap();
        assert_eq!(g.thresholds(), &[1, 2, 1]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_zero_threshold() {
        let e = parse_tss(&lines("p tss 1 0 / t 1 0")).unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::ThresholdTooSmall(1));
    }

    #[test]
    fn error_cases_carry_line_numbers() {
        let cases = [
            (
                "p tss x 0",
                1,
                ParseErrorKind::MalformedHeader("not a number: x".into()),
            ),
            (
                "p tss 2 1 / t 1 1 / t 2 1 / e 1 1",
                4,
                ParseErrorKind::SelfLoop(1),
            ),
            (
                "p tss 2 2 / t 1 1 / t 2 1 / e 1 2 / e 2 1",
                5,
                ParseErrorKind::DuplicateEdge(2, 1),
            ),
            ("p tss 2 0 / t 1 1", 1, ParseErrorKind::MissingThreshold(2)),
            (
                "p tss 2 0 / t 1 1 / t 3 1",
                3,
                ParseErrorKind::VertexOutOfRange(3),
            ),
        ];
        for (text, line, kind) in cases {
            let e = parse_tss(&lines(text)).unwrap_err();
            assert_eq!((e.line, e.kind), (line, kind), "{text}");
        }
    }

    #[test]
    fn comments_are_ignored() {
        let text = "c a comment\n# another\np tss 1 0 # trailing\n\nt 1 1\n";
        let g = parse_tss(text).unwrap();
        assert_eq!(g.vertex_count(), 1);
    }

    #[test]
    fn thresholds_above_degree_are_accepted() {
        let g = parse_tss(&lines("p tss 2 1 / t 1 5 / t 2 1 / e 1 2")).unwrap();
        assert_eq!(g.threshold(0), 5);
    }

    #[test]
    fn bipartition_annotation_round_trips() {
        let text = lines("p tss 3 2 / t 1 1 / t 2 2 / t 3 1 / e 1 2 / e 2 3 / b 1 1 3 / b 2 2");
        let g = parse_tss(&text).unwrap();
        let bip = g.bipartition().unwrap();
        assert_eq!(bip.left.as_slice(), &[0, 2]);
        assert_eq!(parse_tss(&write_tss(&g)).unwrap(), g);
        let bad = lines("p tss 3 2 / t 1 1 / t 2 2 / t 3 1 / e 1 2 / e 2 3 / b 1 1 2 / b 2 3");
        assert!(matches!(
            parse_tss(&bad).unwrap_err().kind,
            ParseErrorKind::InvalidBipartition(_)
        ));
    }

    #[test]
    fn set_cover_examples() {
        let sc = parse_setcover(&lines("p sc 3 2 / s 1 2 / s 2 3")).unwrap();
        assert_eq!(sc.subsets(), &[vec![0, 1], vec![1, 2]]);
        let sc = parse_setcover(&lines("p sc 2 1 / s 1")).unwrap();
        assert_eq!(sc.uncovered_elements(), vec![1]);
        let sc = parse_setcover("p sc 0 0").unwrap();
        assert!(sc.is_feasible());
        let sc = parse_setcover(&lines("p sc 2 2 / s / s 1 2")).unwrap();
        assert!(sc.subset(0).is_empty());
        let e = parse_setcover(&lines("p sc 2 1 / s 3")).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ElementOutOfRange(3));
    }

    #[test]
    fn result_format_examples() {
        assert_eq!(write_result(&SolveResult::default()), "s 0\nw\n");
        let mut r = SolveResult::new([2, 0].into());
        assert_eq!(write_result(&r), "s 2\nw 1 3\n");
        r.set_stat("guesses", 9);
        r.set_stat("cells", 4);
        r.set_stat("discarded", 1);
        assert_eq!(
            write_result(&r),
            "s 2\nw 1 3\ni cells 4\ni discarded 1\ni guesses 9\n"
        );
        assert_eq!(parse_result(&write_result(&r)).unwrap(), r);
    }

    #[test]
    fn result_size_must_match_witness() {
        assert!(parse_result("s 2\nw 1\n").is_err());
        assert_eq!(parse_vertex_list("w 3 1\n").unwrap().as_slice(), &[0, 2]);
    }
}
