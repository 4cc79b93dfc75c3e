//! Plain-text design exchange format.
//!
//! ```text
//! v k b
//! p_1 p_2 ... p_k      (one block per line, ascending 0-based points)
//! ```

use std::io::{BufRead, Write};

use super::Design;
use crate::error::{Error, Result};

pub fn write_design<W: Write>(d: &Design, mut out: W) -> Result<()> {
    writeln!(out, "{} {} {}", d.points(), d.block_size(), d.num_blocks())?;
    for b in d.blocks() {
        let pts: Vec<String> = b.ones_iter().map(|p| p.to_string()).collect();
        writeln!(out, "{}", pts.join(" "))?;
    }
    Ok(())
}

pub fn design_to_string(d: &Design) -> String {
    let mut buf = Vec::new();
    write_design(d, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii")
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line_no: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("not a nonnegative integer: {tok:?}")))
        })
        .collect()
}

/// Parse a design; line numbers in errors are 1-based. Blank lines are
/// skipped.
pub fn read_design<R: BufRead>(input: R) -> Result<Design> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| l.as_ref().map_or(true, |s| !s.trim().is_empty()));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let header = numbers(hline, &header?)?;
    let [v, k, b] = header[..] else {
        return Err(parse_err(hline, "header must be \"v k b\""));
    };

    let mut blocks = Vec::with_capacity(b);
    let mut last_line = hline;
    for (line_no, text) in lines {
        let pts = numbers(line_no, &text?)?;
        if pts.len() != k {
            return Err(parse_err(
                line_no,
                format!("block has {} points, expected {k}", pts.len()),
            ));
        }
        if pts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(line_no, "points must be strictly ascending"));
        }
        if let Some(&p) = pts.iter().find(|&&p| p >= v) {
            return Err(parse_err(
                line_no,
                format!("point {p} out of range for {v} points"),
            ));
        }
        blocks.push(pts);
        last_line = line_no;
    }
    if blocks.len() != b {
        return Err(parse_err(
            last_line,
            format!("header announces {b} blocks, found {}", blocks.len()),
        ));
    }
    Design::from_point_lists(v, k, &blocks).map_err(|e| parse_err(last_line, e.to_string()))
}

pub fn design_from_str(text: &str) -> Result<Design> {
    read_design(text.as_bytes())
}
