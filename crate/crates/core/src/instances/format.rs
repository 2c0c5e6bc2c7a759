//! Plain-text instance format.
//!
//! ```text
//! # optional comment lines start with '#'
//! 4 3 2 line
//! 0 0
//! 1 0
//! 2 0
//! 3 0
//! ```
//!
//! The header is `n k gamma mode` with mode `plane` or `line`, followed by
//! exactly `n` lines of `x y`. Blank lines are ignored. Canonical output has
//! no comments and prints each coordinate as the shortest decimal that reads
//! back to the same `f64`.

use std::io::{BufRead, BufReader, Read, Write};

use crate::error::{Error, Result};
use crate::geometry::{Gamma, Instance, Mode, Point};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_coord(token: &str, line: usize) -> Result<f64> {
    let v: f64 = token
        .parse()
        .map_err(|_| parse_err(line, format!("`{token}` is not a number")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("non-finite coordinate `{token}`")));
    }
    Ok(v)
}

struct Header {
    n: usize,
    k: usize,
    gamma: usize,
    mode: Mode,
}

fn parse_header(tokens: &[&str], line: usize) -> Result<Header> {
    if tokens.len() > 4 {
        return Err(parse_err(
            line,
            format!("unexpected extra header field `{}`", tokens[4]),
        ));
    }
    if tokens.len() < 4 {
        return Err(parse_err(line, "header must be `n k gamma mode`"));
    }
    let int = |name: &str, t: &str| -> Result<usize> {
        t.parse()
            .map_err(|_| parse_err(line, format!("{name} `{t}` is not a non-negative integer")))
    };
    Ok(Header {
        n: int("n", tokens[0])?,
        k: int("k", tokens[1])?,
        gamma: int("gamma", tokens[2])?,
        mode: tokens[3]
            .parse()
            .map_err(|_| parse_err(line, format!("mode `{}` is not plane or line", tokens[3])))?,
    })
}

pub fn read_instance(source: impl Read) -> Result<Instance<f64>> {
    let reader = BufReader::new(source);
    let mut header: Option<Header> = None;
    let mut points = Vec::new();
    let mut last_line = 0;
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match &header {
            None => header = Some(parse_header(&tokens, lineno)?),
            Some(h) if points.len() == h.n => {
                return Err(parse_err(
                    lineno,
                    format!("trailing content after {} points", h.n),
                ));
            }
            Some(_) => {
                if tokens.len() != 2 {
                    return Err(parse_err(
                        lineno,
                        format!("expected `x y`, found {} fields", tokens.len()),
                    ));
                }
                let x = parse_coord(tokens[0], lineno)?;
                let y = parse_coord(tokens[1], lineno)?;
                points.push(Point::new(x, y)?);
            }
        }
    }
    let header = header.ok_or_else(|| parse_err(last_line.max(1), "missing header"))?;
    if points.len() != header.n {
        return Err(parse_err(
            last_line,
            format!("expected {} points, found {}", header.n, points.len()),
        ));
    }
    let gamma = Gamma::try_from(header.gamma)?;
    Instance::new(points, header.k, gamma, header.mode)
}

pub fn write_instance(instance: &Instance<f64>, mut sink: impl Write) -> std::io::Result<()> {
    writeln!(
        sink,
        "{} {} {} {}",
        instance.n(),
        instance.k(),
        instance.gamma(),
        instance.mode()
    )?;
    for p in instance.points() {
        writeln!(sink, "{} {}", p.x(), p.y())?;
    }
    Ok(())
}

/// The canonical text of `instance`.
pub fn to_canonical_string(instance: &Instance<f64>) -> String {
    let mut buf = Vec::new();
    write_instance(instance, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}
