//! Native surface file format.
//!
//! ```text
//! plconvex 1
//! dim 3
//! mode euclidean
//! boundary closed
//! counts 4 4
//! 0 0 0
//! 1 0 0
//! 0 1 0
//! 0 0 1/2
//! 3 0 1 2
//! 3 0 1 3
//! 3 0 2 3
//! 3 1 2 3
//! ```
//!
//! Coordinates are exact rationals `p/q` (or integers); spherical vertices
//! carry `n + 1` coordinates and are stored as primitive integer rays.
//! Facet lines give a vertex count and 0-based indices. `#` starts a
//! comment. Lines end with LF.

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Vector};
use crate::surface::{Mode, PLSurface};

struct Token<'a> {
    text: &'a str,
    col: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    text.split('\n')
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim_end_matches('\r');
            let mut tokens = Vec::new();
            let mut start = None;
            for (j, ch) in content.char_indices().chain([(content.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(j),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            text: &content[s..j],
                            col: s + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                tokens,
            })
        })
        .collect()
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self, what: &str) -> Result<&Line<'a>> {
        let line = self.lines.get(self.pos).ok_or_else(|| {
            syntax(
                self.last_line + 1,
                1,
                format!("unexpected end of file, expected {what}"),
            )
        })?;
        self.pos += 1;
        Ok(line)
    }

    /// A `keyword value` header line.
    fn header(&mut self, keyword: &str) -> Result<(usize, Token<'a>)> {
        let line = self.next(keyword)?;
        let number = line.number;
        let t = &line.tokens;
        if t[0].text != keyword {
            return Err(syntax(number, t[0].col, format!("expected `{keyword}`")));
        }
        if t.len() != 2 {
            let col = t.get(2).map_or(t[0].col + keyword.len(), |x| x.col);
            return Err(syntax(number, col, format!("`{keyword}` takes one value")));
        }
        Ok((
            number,
            Token {
                text: t[1].text,
                col: t[1].col,
            },
        ))
    }
}

fn parse_count(line: usize, t: &Token) -> Result<usize> {
    t.text.parse().map_err(|_| {
        syntax(
            line,
            t.col,
            format!("expected a nonnegative integer, found `{}`", t.text),
        )
    })
}

/// Parses a surface file. `mode_override` replaces the header's mode.
pub fn parse_with_mode(text: &str, mode_override: Option<Mode>) -> Result<PLSurface> {
    let lines = tokenize(text);
    let last_line = text.lines().count();
    let mut cur = Cursor {
        lines,
        pos: 0,
        last_line,
    };

    let magic = cur.next("header")?;
    let words: Vec<&str> = magic.tokens.iter().map(|t| t.text).collect();
    if words != ["plconvex", "1"] {
        return Err(syntax(
            magic.number,
            magic.tokens[0].col,
            "expected `plconvex 1`",
        ));
    }
    let (l, t) = cur.header("dim")?;
    let n = parse_count(l, &t)?;
    if n == 0 {
        return Err(syntax(l, t.col, "dimension must be positive"));
    }
    let (l, t) = cur.header("mode")?;
    let mode = match t.text {
        "euclidean" => Mode::Euclidean,
        "spherical" => Mode::Spherical,
        "hyperbolic" => {
            return Err(Error::Unsupported(
                "hyperbolic mode is not supported".into(),
            ))
        }
        other => return Err(syntax(l, t.col, format!("unknown mode `{other}`"))),
    };
    let mode = mode_override.unwrap_or(mode);
    let (l, t) = cur.header("boundary")?;
    let allow_boundary = match t.text {
        "allowed" => true,
        "closed" => false,
        other => {
            return Err(syntax(
                l,
                t.col,
                format!("expected `allowed` or `closed`, found `{other}`"),
            ))
        }
    };
    let counts = cur.next("counts")?;
    let number = counts.number;
    let ct = &counts.tokens;
    if ct[0].text != "counts" || ct.len() != 3 {
        return Err(syntax(number, ct[0].col, "expected `counts <V> <F>`"));
    }
    let nv = parse_count(number, &ct[1])?;
    let nf = parse_count(number, &ct[2])?;

    let width = match mode {
        Mode::Euclidean => n,
        Mode::Spherical => n + 1,
    };
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let line = cur.next("a vertex line")?;
        if line.tokens.len() != width {
            let col = line.tokens.get(width).map_or(1, |t| t.col);
            return Err(syntax(
                line.number,
                col,
                format!("expected {width} coordinates, found {}", line.tokens.len()),
            ));
        }
        let coords = line
            .tokens
            .iter()
            .map(|t| {
                parse_rational(t.text).ok_or(Error::BadRational {
                    line: line.number,
                    col: t.col,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let v = Vector::new(coords);
        if mode == Mode::Spherical && v.is_zero() {
            return Err(syntax(line.number, 1, "zero vector is not a direction"));
        }
        vertices.push(v);
    }
    let mut facets = Vec::with_capacity(nf);
    for _ in 0..nf {
        let line = cur.next("a facet line")?;
        let k = parse_count(line.number, &line.tokens[0])?;
        if line.tokens.len() != k + 1 {
            let col = line.tokens.get(k + 1).map_or(line.tokens[0].col, |t| t.col);
            return Err(syntax(
                line.number,
                col,
                format!(
                    "facet announces {k} vertices, found {}",
                    line.tokens.len() - 1
                ),
            ));
        }
        let mut facet = Vec::with_capacity(k);
        for t in &line.tokens[1..] {
            let i = parse_count(line.number, t)?;
            if i >= nv {
                return Err(Error::BadIndex {
                    line: line.number,
                    index: i,
                });
            }
            facet.push(i);
        }
        facets.push(facet);
    }
    if let Some(extra) = cur.lines.get(cur.pos) {
        return Err(syntax(
            extra.number,
            extra.tokens[0].col,
            "trailing content after the last facet",
        ));
    }
    PLSurface::new(n, mode, vertices, facets, allow_boundary)
}

pub fn parse(text: &str) -> Result<PLSurface> {
    parse_with_mode(text, None)
}

/// Canonical text of a surface.
pub fn write(s: &PLSurface) -> String {
    let mut out = String::new();
    out.push_str("plconvex 1\n");
    out.push_str(&format!("dim {}\n", s.ambient_dim));
    out.push_str(&format!("mode {}\n", s.mode.name()));
    out.push_str(&format!(
        "boundary {}\n",
        if s.allow_boundary {
            "allowed"
        } else {
            "closed"
        }
    ));
    out.push_str(&format!("counts {} {}\n", s.vertices.len(), s.facets.len()));
    for v in &s.vertices {
        let coords: Vec<String> = v.coords().iter().map(format_rational).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    for f in &s.facets {
        out.push_str(&f.len().to_string());
        for i in f {
            out.push(' ');
            out.push_str(&i.to_string());
        }
        out.push('\n');
    }
    out
}
