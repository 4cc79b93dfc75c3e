//! Permutation exchange format: one permutation per line, written as the
//! 0-based images `i0 i1 ... i(n-1)`.

use std::io::{BufRead, Write};

use super::perm::Permutation;
use crate::error::{Error, Result};

pub fn write_permutations<W: Write>(perms: &[Permutation], mut out: W) -> Result<()> {
    for p in perms {
        let images: Vec<String> = p.images().iter().map(|i| i.to_string()).collect();
        writeln!(out, "{}", images.join(" "))?;
    }
    Ok(())
}

pub fn permutations_to_string(perms: &[Permutation]) -> String {
    let mut buf = Vec::new();
    write_permutations(perms, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii")
}

/// Blank lines are skipped; all permutations must share one degree.
pub fn read_permutations<R: BufRead>(input: R) -> Result<Vec<Permutation>> {
    let mut out: Vec<Permutation> = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let images = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("not a nonnegative integer: {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let p = Permutation::new(images).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        if let Some(first) = out.first() {
            if first.degree() != p.degree() {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("degree {} differs from {}", p.degree(), first.degree()),
                });
            }
        }
        out.push(p);
    }
    Ok(out)
}

pub fn permutations_from_str(text: &str) -> Result<Vec<Permutation>> {
    read_permutations(text.as_bytes())
}
