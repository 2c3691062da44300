//! Line-oriented text formats.
//!
//! Set system:
//!
//! ```text
//! # comment
//! ground: 1 2 3 4
//! feasible: 2
//! feasible: 2 3 4
//! feasible:
//! ```
//!
//! Slide trace: one `slide: a b` per line. Matrix: `dim: n` followed by `n`
//! lines `row: 0 1 ...`. Graph: `vertices: n` followed by `edge: label u v`
//! lines with vertices numbered from 1.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf2rep::SymmetricBitMatrix;
use crate::setsystem::{GroundSet, SetSystem, SubsetMask};
use crate::slides::SlideTrace;

/// `(line number, key, rest)` for each content line.
fn content_lines(text: &str) -> impl Iterator<Item = Result<(usize, &str, &str)>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let number = i + 1;
        Some(match line.split_once(':') {
            Some((key, rest)) => Ok((number, key.trim(), rest.trim())),
            None => Err(Error::parse(number, format!("expected `key: value`, got `{line}`"))),
        })
    })
}

pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    let mut ground: Option<GroundSet> = None;
    let mut family = Vec::new();
    for item in content_lines(text) {
        let (line, key, rest) = item?;
        match (key, &ground) {
            ("ground", None) => {
                ground = Some(GroundSet::new(rest.split_whitespace()).map_err(|e| Error::parse(line, e.to_string()))?);
            }
            ("ground", Some(_)) => return Err(Error::parse(line, "second `ground:` line")),
            ("feasible", None) => return Err(Error::parse(line, "`feasible:` before `ground:`")),
            ("feasible", Some(g)) => {
                let mut m = SubsetMask::EMPTY;
                for label in rest.split_whitespace() {
                    let e = g.index_of(label).ok_or_else(|| Error::parse(line, format!("unknown element `{label}`")))?;
                    if m.contains(e) {
                        return Err(Error::parse(line, format!("element `{label}` repeated")));
                    }
                    m = m.insert(e);
                }
                family.push(m);
            }
            (other, _) => return Err(Error::parse(line, format!("unknown key `{other}`"))),
        }
    }
    let ground = ground.ok_or_else(|| Error::parse(1, "missing `ground:` line"))?;
    SetSystem::new(ground, family)
}

pub fn write_set_system(system: &SetSystem) -> String {
    let mut out = String::new();
    out.push_str("ground:");
    for label in system.ground().labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for &m in system.family() {
        out.push_str("feasible:");
        for label in system.ground().labels_of(m) {
            out.push(' ');
            out.push_str(label);
        }
        out.push('\n');
    }
    out
}

/// Parse a trace against the labels of `ground`.
pub fn parse_trace(text: &str, ground: &GroundSet) -> Result<SlideTrace> {
    let mut trace = SlideTrace::new();
    for item in content_lines(text) {
        let (line, key, rest) = item?;
        if key != "slide" {
            return Err(Error::parse(line, format!("unknown key `{key}`")));
        }
        let labels: Vec<&str> = rest.split_whitespace().collect();
        let [a, b] = labels[..] else {
            return Err(Error::parse(line, "expected `slide: a b`"));
        };
        let lookup = |l: &str| ground.index_of(l).ok_or_else(|| Error::parse(line, format!("unknown element `{l}`")));
        let (a, b) = (lookup(a)?, lookup(b)?);
        if a == b {
            return Err(Error::parse(line, "slide needs two distinct elements"));
        }
        trace.push(a, b);
    }
    Ok(trace)
}

pub fn write_trace(trace: &SlideTrace, ground: &GroundSet) -> String {
    let mut out = String::new();
    for &(a, b) in trace.steps() {
        let _ = writeln!(out, "slide: {} {}", ground.label(a), ground.label(b));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<SymmetricBitMatrix> {
    let mut dim: Option<usize> = None;
    let mut rows: Vec<u64> = Vec::new();
    let mut last_line = 0;
    for item in content_lines(text) {
        let (line, key, rest) = item?;
        last_line = line;
        match (key, dim) {
            ("dim", None) => {
                let n: usize = rest.parse().map_err(|_| Error::parse(line, format!("bad dimension `{rest}`")))?;
                if n > 64 {
                    return Err(Error::parse(line, "dimension exceeds 64"));
                }
                dim = Some(n);
            }
            ("dim", Some(_)) => return Err(Error::parse(line, "second `dim:` line")),
            ("row", None) => return Err(Error::parse(line, "`row:` before `dim:`")),
            ("row", Some(n)) => {
                let entries: Vec<&str> = rest.split_whitespace().collect();
                if entries.len() != n {
                    return Err(Error::parse(line, format!("expected {n} entries, got {}", entries.len())));
                }
                if rows.len() == n {
                    return Err(Error::parse(line, "too many rows"));
                }
                let mut bits = 0u64;
                for (w, entry) in entries.iter().enumerate() {
                    match *entry {
                        "0" => {}
                        "1" => bits |= 1 << w,
                        other => return Err(Error::parse(line, format!("entry `{other}` is not 0 or 1"))),
                    }
                }
                rows.push(bits);
            }
            (other, _) => return Err(Error::parse(line, format!("unknown key `{other}`"))),
        }
    }
    let n = dim.ok_or_else(|| Error::parse(1, "missing `dim:` line"))?;
    if rows.len() != n {
        return Err(Error::parse(last_line, format!("expected {n} rows, got {}", rows.len())));
    }
    SymmetricBitMatrix::from_row_bits(rows).map_err(|e| Error::parse(last_line, e.to_string()))
}

pub fn write_matrix(matrix: &SymmetricBitMatrix) -> String {
    let mut out = format!("dim: {}\n", matrix.dim());
    for v in 0..matrix.dim() {
        out.push_str("row:");
        for w in 0..matrix.dim() {
            out.push_str(if matrix.get(v, w) { " 1" } else { " 0" });
        }
        out.push('\n');
    }
    out
}

/// A graph as read from the graph format, with 0-based vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<(String, usize, usize)>,
}

pub fn parse_graph(text: &str) -> Result<GraphSpec> {
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    for item in content_lines(text) {
        let (line, key, rest) = item?;
        match (key, vertices) {
            ("vertices", None) => {
                vertices = Some(rest.parse().map_err(|_| Error::parse(line, format!("bad vertex count `{rest}`")))?);
            }
            ("vertices", Some(_)) => return Err(Error::parse(line, "second `vertices:` line")),
            ("edge", None) => return Err(Error::parse(line, "`edge:` before `vertices:`")),
            ("edge", Some(n)) => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [label, u, v] = parts[..] else {
                    return Err(Error::parse(line, "expected `edge: label u v`"));
                };
                let vertex = |s: &str| -> Result<usize> {
                    match s.parse::<usize>() {
                        Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                        _ => Err(Error::parse(line, format!("vertex `{s}` not in 1..={n}"))),
                    }
                };
                edges.push((label.to_string(), vertex(u)?, vertex(v)?));
            }
            (other, _) => return Err(Error::parse(line, format!("unknown key `{other}`"))),
        }
    }
    let vertices = vertices.ok_or_else(|| Error::parse(1, "missing `vertices:` line"))?;
    Ok(GraphSpec { vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "# worked example\nground: 1 2 3 4\nfeasible: 2 3 4\nfeasible: 1\nfeasible: 1 2 3\nfeasible: 2\nfeasible: 1 3 4\n\nfeasible: 1 2 4\n";

    #[test]
    fn set_system_round_trip() {
        let s = parse_set_system(EXAMPLE).unwrap();
        assert_eq!(s.len(), 6);
        let text = write_set_system(&s);
        assert_eq!(
            text,
            "ground: 1 2 3 4\nfeasible: 1\nfeasible: 2\nfeasible: 1 2 3\nfeasible: 1 2 4\nfeasible: 1 3 4\nfeasible: 2 3 4\n"
        );
        assert_eq!(parse_set_system(&text).unwrap(), s);
    }

    #[test]
    fn empty_member_line() {
        let s = parse_set_system("ground: a b\nfeasible:\n").unwrap();
        assert_eq!(s.family(), &[SubsetMask::EMPTY]);
        assert_eq!(write_set_system(&s), "ground: a b\nfeasible:\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_set_system("ground: a b\n\nfeasible: c\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "unknown element `c`".into() });
        let err = parse_set_system("feasible: a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_set_system("ground: a a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_set_system("ground: a\nnonsense\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_set_system("# nothing\n").is_err());
    }

    #[test]
    fn traces() {
        let g = GroundSet::numbered(4).unwrap();
        let t = parse_trace("slide: 1 2\n# c\nslide: 3 4\n", &g).unwrap();
        assert_eq!(t.steps(), &[(0, 1), (2, 3)]);
        assert_eq!(write_trace(&t, &g), "slide: 1 2\nslide: 3 4\n");
        assert!(matches!(parse_trace("slide: 1 1\n", &g), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_trace("slide: 1\n", &g), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn matrices() {
        let text = "dim: 2\nrow: 0 1\nrow: 1 1\n";
        let m = parse_matrix(text).unwrap();
        assert!(m.get(0, 1) && m.get(1, 1) && !m.get(0, 0));
        assert_eq!(write_matrix(&m), text);
        assert!(matches!(parse_matrix("dim: 2\nrow: 0 1\nrow: 0 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("dim: 2\nrow: 0 2\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn graphs() {
        let g = parse_graph("vertices: 3\nedge: a 1 2\nedge: b 2 3\n").unwrap();
        assert_eq!(g.vertices, 3);
        assert_eq!(g.edges[1], ("b".to_string(), 1, 2));
        assert!(matches!(parse_graph("vertices: 2\nedge: a 1 3\n"), Err(Error::Parse { line: 2, .. })));
    }
}
