//! Plain-text file formats.
//!
//! Triangulation files start with `triangles T` followed by `3T/2` lines
//! `glue t s t' s'` (0-based). Coloring files hold one line of
//! space-separated edge values in edge order. Blank lines and lines
//! starting with `#` are ignored in both.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::coloring::{Coloring, ColoringError};
use crate::surface::{Slot, Triangulation, TriangulationError};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, InputError> {
    token.parse().map_err(|_| InputError::Parse {
        line,
        message: format!("expected {what}, found `{token}`"),
    })
}

pub fn parse_triangulation(text: &str) -> Result<Triangulation, InputError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(InputError::Parse {
        line: 1,
        message: "missing `triangles T` header".into(),
    })?;
    let tokens: Vec<_> = header.split_whitespace().collect();
    let triangles: usize = match tokens.as_slice() {
        ["triangles", t] => parse_num(line, t, "a triangle count")?,
        _ => {
            return Err(InputError::Parse {
                line,
                message: format!("expected `triangles T`, found `{header}`"),
            })
        }
    };
    let mut pairs = Vec::new();
    for (line, text) in lines {
        let tokens: Vec<_> = text.split_whitespace().collect();
        match tokens.as_slice() {
            ["glue", t, s, t2, s2] => {
                let a = Slot::new(
                    parse_num(line, t, "a triangle index")?,
                    parse_num(line, s, "a side index")?,
                );
                let b = Slot::new(
                    parse_num(line, t2, "a triangle index")?,
                    parse_num(line, s2, "a side index")?,
                );
                pairs.push((a, b));
            }
            _ => {
                return Err(InputError::Parse {
                    line,
                    message: format!("expected `glue t s t' s'`, found `{text}`"),
                })
            }
        }
    }
    Ok(Triangulation::build(triangles, &pairs)?)
}

pub fn format_triangulation(tri: &Triangulation) -> String {
    let mut out = format!("triangles {}\n", tri.triangle_count());
    for (a, b) in tri.edges() {
        let _ = writeln!(out, "glue {} {} {} {}", a.triangle, a.side, b.triangle, b.side);
    }
    out
}

/// Edge values without validation against a triangulation.
pub fn parse_coloring_values(text: &str) -> Result<Vec<u64>, InputError> {
    let mut lines = content_lines(text);
    let (line, values) = lines.next().ok_or(InputError::Parse {
        line: 1,
        message: "missing coloring line".into(),
    })?;
    if let Some((extra, _)) = lines.next() {
        return Err(InputError::Parse {
            line: extra,
            message: "a coloring file holds a single line".into(),
        });
    }
    values
        .split_whitespace()
        .map(|t| parse_num(line, t, "a nonnegative integer"))
        .collect()
}

/// Edge values checked for length and admissibility.
pub fn parse_coloring(tri: &Triangulation, text: &str) -> Result<Coloring, InputError> {
    Ok(Coloring::admissible(tri, parse_coloring_values(text)?)?)
}

pub fn format_coloring(f: &Coloring) -> String {
    format!("{f}\n")
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_triangulation(path: &Path) -> Result<Triangulation, InputError> {
    parse_triangulation(&read(path)?)
}

pub fn load_coloring(tri: &Triangulation, path: &Path) -> Result<Coloring, InputError> {
    parse_coloring(tri, &read(path)?)
}

/// Load a triangulation and any number of colorings on it.
pub fn parse_inputs(
    triangulation: &Path,
    colorings: &[&Path],
) -> Result<(Triangulation, Vec<Coloring>), InputError> {
    let tri = load_triangulation(triangulation)?;
    let cols = colorings
        .iter()
        .map(|p| load_coloring(&tri, p))
        .collect::<Result<_, _>>()?;
    Ok((tri, cols))
}
