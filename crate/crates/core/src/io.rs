//! The `.tri` text format and DOT output for group cubes.
//!
//! ```text
//! # comments run to end of line
//! trisection
//! genus 2
//! alpha a1 | a2
//! beta  b1 | b2
//! gamma a1 b2 | a2 b1
//! ```
//!
//! A `heegaard` file has only `alpha` and `beta` lines. Each family line
//! carries exactly `genus` curves separated by `|`; the empty word is `e`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::diagram::{CutSystem, DiagramError, Family, HeegaardDiagram, TrisectionDiagram};
use crate::group::{abelianize_presentation, vertex_name, GroupTrisectionCube};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {family} has {found} curves, genus is {expected}")]
    Arity {
        line: usize,
        family: Family,
        expected: usize,
        found: usize,
    },
    #[error("{family}: {error}")]
    Validation { family: Family, error: DiagramError },
}

impl IoError {
    fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        IoError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    Trisection,
    Heegaard,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedDiagram {
    Trisection(TrisectionDiagram),
    Heegaard(HeegaardDiagram),
}

struct Line<'a> {
    number: usize,
    /// byte offset of `text` in the original line
    offset: usize,
    text: &'a str,
}

fn significant_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let trimmed = body.trim_start();
            let offset = body.len() - trimmed.len();
            let trimmed = trimmed.trim_end();
            (!trimmed.is_empty()).then_some(Line {
                number: i + 1,
                offset,
                text: trimmed,
            })
        })
        .collect()
}

fn column(line: &Line<'_>, within: usize) -> usize {
    line.offset + within + 1
}

fn parse_curves(line: &Line<'_>, keyword_len: usize) -> Result<Vec<Word>, IoError> {
    let rest = &line.text[keyword_len..];
    if rest.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut words = Vec::new();
    let mut start = keyword_len;
    for part in rest.split('|') {
        let part_start = start;
        start += part.len() + 1;
        if part.trim().is_empty() {
            return Err(IoError::syntax(
                line.number,
                column(line, part_start),
                "empty curve (write `e` for the empty word)",
            ));
        }
        let mut tokens = Vec::new();
        let mut pos = part_start;
        for tok in part.split(' ') {
            let here = pos;
            pos += tok.len() + 1;
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            tokens.push((here, tok));
        }
        if tokens.len() == 1 && tokens[0].1 == "e" {
            words.push(Word::empty());
            continue;
        }
        let mut w = Vec::with_capacity(tokens.len());
        for (at, tok) in tokens {
            let t = tok.parse().map_err(|_| {
                IoError::syntax(line.number, column(line, at), format!("bad token `{tok}`"))
            })?;
            w.push(t);
        }
        words.push(Word::new(w));
    }
    Ok(words)
}

/// Parses a trisection or Heegaard diagram and validates every cut system.
pub fn parse(text: &str) -> Result<ParsedDiagram, IoError> {
    let lines = significant_lines(text);
    let mut it = lines.iter();

    let first = it
        .next()
        .ok_or_else(|| IoError::syntax(1, 1, "empty input; expected `trisection` or `heegaard`"))?;
    let kind = match first.text {
        "trisection" => DiagramKind::Trisection,
        "heegaard" => DiagramKind::Heegaard,
        _ => {
            return Err(IoError::syntax(
                first.number,
                column(first, 0),
                "expected kind line `trisection` or `heegaard`",
            ))
        }
    };

    let last_line = lines.last().map_or(1, |l| l.number);
    let gl = it
        .next()
        .ok_or_else(|| IoError::syntax(last_line + 1, 1, "missing `genus` line"))?;
    let mut parts = gl.text.split_whitespace();
    if parts.next() != Some("genus") {
        return Err(IoError::syntax(
            gl.number,
            column(gl, 0),
            "expected `genus <g>`",
        ));
    }
    let genus: usize = match (parts.next(), parts.next()) {
        (Some(g), None) => g.parse().map_err(|_| {
            IoError::syntax(
                gl.number,
                column(gl, gl.text.len() - g.len()),
                format!("bad genus `{g}`"),
            )
        })?,
        _ => {
            return Err(IoError::syntax(
                gl.number,
                column(gl, 0),
                "expected `genus <g>`",
            ))
        }
    };

    let allowed: &[Family] = match kind {
        DiagramKind::Trisection => &Family::ALL,
        DiagramKind::Heegaard => &[Family::Alpha, Family::Beta],
    };
    let mut systems: [Option<CutSystem>; 3] = [None, None, None];
    for line in it {
        let keyword = line.text.split_whitespace().next().unwrap_or("");
        let family: Family = keyword
            .parse()
            .ok()
            .filter(|f| allowed.contains(f))
            .ok_or_else(|| {
                IoError::syntax(
                    line.number,
                    column(line, 0),
                    format!("unexpected `{keyword}`"),
                )
            })?;
        if systems[family as usize].is_some() {
            return Err(IoError::syntax(
                line.number,
                column(line, 0),
                format!("duplicate {family} line"),
            ));
        }
        let words = parse_curves(line, keyword.len())?;
        if words.len() != genus {
            return Err(IoError::Arity {
                line: line.number,
                family,
                expected: genus,
                found: words.len(),
            });
        }
        let sys =
            CutSystem::new(&words, genus).map_err(|error| IoError::Validation { family, error })?;
        systems[family as usize] = Some(sys);
    }
    if let Some(missing) = allowed.iter().find(|f| systems[**f as usize].is_none()) {
        return Err(IoError::syntax(
            last_line + 1,
            1,
            format!("missing {missing} line"),
        ));
    }
    let [a, b, c] = systems;
    let (a, b) = (a.expect("present"), b.expect("present"));
    Ok(match kind {
        DiagramKind::Trisection => ParsedDiagram::Trisection(
            TrisectionDiagram::new(a, b, c.expect("present")).expect("systems share the genus"),
        ),
        DiagramKind::Heegaard => {
            ParsedDiagram::Heegaard(HeegaardDiagram::new(a, b).expect("systems share the genus"))
        }
    })
}

/// Parses a file that must hold a trisection diagram.
pub fn parse_trisection(text: &str) -> Result<TrisectionDiagram, IoError> {
    match parse(text)? {
        ParsedDiagram::Trisection(d) => Ok(d),
        ParsedDiagram::Heegaard(_) => Err(IoError::syntax(
            1,
            1,
            "expected a trisection diagram, found heegaard",
        )),
    }
}

fn family_line(out: &mut String, family: Family, sys: &CutSystem) {
    out.push_str(family.name());
    let curves: Vec<String> = sys.curves().iter().map(|c| c.word().to_string()).collect();
    if !curves.is_empty() {
        out.push(' ');
        out.push_str(&curves.join(" | "));
    }
    out.push('\n');
}

/// Canonical text: reduced words, fixed family order, trailing newline.
pub fn serialize_trisection(d: &TrisectionDiagram) -> String {
    let mut out = format!("trisection\ngenus {}\n", d.genus());
    for f in Family::ALL {
        family_line(&mut out, f, d.family(f));
    }
    out
}

pub fn serialize_heegaard(h: &HeegaardDiagram) -> String {
    let mut out = format!("heegaard\ngenus {}\n", h.genus());
    family_line(&mut out, Family::Alpha, h.first());
    family_line(&mut out, Family::Beta, h.second());
    out
}

pub fn serialize(d: &ParsedDiagram) -> String {
    match d {
        ParsedDiagram::Trisection(t) => serialize_trisection(t),
        ParsedDiagram::Heegaard(h) => serialize_heegaard(h),
    }
}

/// Directed graph of the cube; node labels give the abelianization and
/// relator count of each vertex.
pub fn emit_cube_dot(c: &GroupTrisectionCube) -> String {
    let mut out =
        String::from("digraph group_trisection {\n    rankdir=LR;\n    node [shape=box];\n");
    for (mask, p) in c.vertices.iter().enumerate() {
        let ab = abelianize_presentation(p);
        let torsion: Vec<String> = ab.torsion.iter().map(ToString::to_string).collect();
        let name = vertex_name(mask);
        writeln!(
            out,
            "    {name} [label=\"{name}: rank {}, torsion [{}], relators {}\"];",
            ab.free_rank,
            torsion.join(", "),
            p.relators().len()
        )
        .expect("write to string");
    }
    for e in &c.edges {
        writeln!(
            out,
            "    {} -> {};",
            vertex_name(e.source),
            vertex_name(e.target)
        )
        .expect("write to string");
    }
    out.push_str("}\n");
    out
}
