//! The `.bm` matroid text format.
//!
//! ```text
//! rank <r>
//! edges <v1> <v2> ... <vk>
//! ```
//!
//! Edge values are decimal, strictly ascending, each in `[1, 2^r − 1]`.

use crate::error::{Error, Result};
use crate::gf2::{space_size, PointSet, MAX_RANK};
use crate::matroid::Matroid;

fn parse_err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, column, message: message.into() })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split(' ')
        .scan(1usize, |col, tok| {
            let at = *col;
            *col += tok.len() + 1;
            Some((at, tok))
        })
        .filter(|(_, tok)| !tok.is_empty())
}

/// Parses the raw contents: rank and the edge list, with range and order
/// checks but without requiring the edges to span.
pub fn parse_edges(text: &str) -> Result<(u32, PointSet)> {
    let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));

    let header = lines.next().unwrap_or("");
    let mut toks = tokens(header);
    match toks.next() {
        Some((_, "rank")) => {}
        Some((col, tok)) => return parse_err(1, col, format!("expected `rank`, found `{tok}`")),
        None => return parse_err(1, 1, "expected `rank <r>`"),
    }
    let rank = match toks.next() {
        Some((col, tok)) => match tok.parse::<u32>() {
            Ok(r) if (1..=MAX_RANK).contains(&r) => r,
            Ok(r) => return parse_err(1, col, format!("rank {r} outside [1, {MAX_RANK}]")),
            Err(_) => return parse_err(1, col, format!("invalid rank `{tok}`")),
        },
        None => return parse_err(1, header.len() + 1, "missing rank value"),
    };
    if let Some((col, tok)) = toks.next() {
        return parse_err(1, col, format!("unexpected token `{tok}`"));
    }

    let body = match lines.next() {
        Some(l) => l,
        None => return parse_err(2, 1, "missing `edges` line"),
    };
    let mut toks = tokens(body);
    match toks.next() {
        Some((_, "edges")) => {}
        Some((col, tok)) => return parse_err(2, col, format!("expected `edges`, found `{tok}`")),
        None => return parse_err(2, 1, "expected `edges ...`"),
    }
    let limit = space_size(rank);
    let mut set = PointSet::empty(rank);
    let mut prev: Option<u64> = None;
    for (col, tok) in toks {
        let v: u64 = match tok.parse() {
            Ok(v) => v,
            Err(_) => return parse_err(2, col, format!("invalid edge `{tok}`")),
        };
        if v == 0 || v >= limit {
            return parse_err(2, col, format!("edge {v} outside [1, {}]", limit - 1));
        }
        if let Some(p) = prev {
            if v == p {
                return parse_err(2, col, format!("duplicate edge {v}"));
            }
            if v < p {
                return parse_err(2, col, format!("edge {v} is not ascending after {p}"));
            }
        }
        prev = Some(v);
        set.insert(v as u32);
    }

    for (i, rest) in lines.enumerate() {
        if !rest.trim().is_empty() {
            return parse_err(3 + i, 1, "unexpected content after `edges` line");
        }
    }
    Ok((rank, set))
}

/// Parses a spanning matroid.
pub fn parse_bm(text: &str) -> Result<Matroid> {
    let (_, edges) = parse_edges(text)?;
    Matroid::from_point_set(edges)
}

/// Canonical text: sorted ascending, single spaces, trailing newline.
pub fn write_bm(m: &Matroid) -> String {
    let mut out = format!("rank {}\nedges", m.rank());
    for e in m.edges().iter() {
        out.push(' ');
        out.push_str(&e.to_string());
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_sorted() {
        let m = Matroid::bose_burton(4, 3).unwrap();
        assert_eq!(write_bm(&m), "rank 4\nedges 1 2 3 5 6 7 9 10 11 13 14 15\n");
    }

    #[test]
    fn reads_back() {
        let text = "rank 3\nedges 1 2 4 7\n";
        let m = parse_bm(text).unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(write_bm(&m), text);
        assert!(parse_bm("rank 3\nedges 1 2 4").is_ok());
    }

    fn err_at(text: &str) -> (usize, usize) {
        match parse_bm(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn error_positions() {
        assert_eq!(err_at("rnk 3\nedges 1\n"), (1, 1));
        assert_eq!(err_at("rank x\nedges 1\n"), (1, 6));
        assert_eq!(err_at("rank 3\nedges 1 4 2\n"), (2, 11));
        assert_eq!(err_at("rank 3\nedges 1 1\n"), (2, 9));
        assert_eq!(err_at("rank 3\nedges 1 8\n"), (2, 9));
        assert_eq!(err_at("rank 3\nedges 0 1\n"), (2, 7));
        assert_eq!(err_at("rank 3\n"), (2, 1));
        assert_eq!(err_at("rank 3\nedges 1 2 4\nextra\n"), (3, 1));
    }

    #[test]
    fn non_spanning_is_rank_error() {
        assert!(matches!(parse_bm("rank 4\nedges 1 2 3\n"), Err(Error::Rank { span_dim: 2, .. })));
        assert!(parse_edges("rank 4\nedges 1 2 3\n").is_ok());
    }
}
