//! Line-oriented parser for the `.lmap` grammar.
//!
//! Parsing runs in two phases: a syntactic pass that turns each statement
//! into a record while collecting id tables, then a reference pass that
//! checks every `pair` entry against the double point table and every
//! `disk` entry against the pair table.  All failures carry the 1-based
//! line and column of the offending token.

use std::collections::HashSet;

use super::{DiskRecord, DoublePointRecord, LinkMapDocument, LinkedPair};
use crate::error::Error;
use crate::invariants::{DiskIntersection, DoublePoint, Sign, WhitneyDiskData};
use crate::wall::{PairingData, SphereClass, WallIntersection};

/// A token with its 1-based column.
struct Token<'a> {
    column: usize,
    text: &'a str,
}

/// A comment-stripped, non-blank input line.
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    /// Comment-stripped text, for rest-of-line fields.
    text: &'a str,
}

impl<'a> Line<'a> {
    fn keyword(&self) -> &'a str {
        self.tokens[0].text
    }

    fn end_column(&self) -> usize {
        let last = self.tokens.last().expect("non-blank line");
        last.column + last.text.chars().count()
    }

    /// The token at `index`, or an error at the end of the line.
    fn token(&self, index: usize, expected: &str) -> Result<&Token<'a>, Error> {
        self.tokens.get(index).ok_or_else(|| {
            Error::parse(
                self.number,
                self.end_column(),
                format!("expected {expected}"),
            )
        })
    }

    /// Rejects trailing tokens past `len`.
    fn finish(&self, len: usize) -> Result<(), Error> {
        match self.tokens.get(len) {
            None => Ok(()),
            Some(extra) => Err(Error::parse(
                self.number,
                extra.column,
                format!("unexpected token `{}`", extra.text),
            )),
        }
    }
}

fn split_lines(input: &str) -> Vec<Line<'_>> {
    let mut lines = Vec::new();
    for (index, raw) in input.lines().enumerate() {
        let text = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut start = None;
        for (offset, ch) in text.char_indices() {
            if ch.is_whitespace() {
                if let Some(begin) = start.take() {
                    tokens.push(Token {
                        column: begin + 1,
                        text: &text[begin..offset],
                    });
                }
            } else if start.is_none() {
                start = Some(offset);
            }
        }
        if let Some(begin) = start {
            tokens.push(Token {
                column: begin + 1,
                text: &text[begin..],
            });
        }
        if !tokens.is_empty() {
            lines.push(Line {
                number: index + 1,
                tokens,
                text,
            });
        }
    }
    lines
}

/// Splits a `key=value` token, checking the key.
fn key_value<'a>(line: &Line<'_>, token: &Token<'a>, key: &str) -> Result<&'a str, Error> {
    match token.text.split_once('=') {
        Some((name, value)) if name == key => Ok(value),
        _ => Err(Error::parse(
            line.number,
            token.column,
            format!("expected {key}=<value>, found `{}`", token.text),
        )),
    }
}

fn parse_sign(line: &Line<'_>, token: &Token<'_>, value: &str) -> Result<Sign, Error> {
    value.parse().map_err(|_| {
        Error::parse(
            line.number,
            token.column,
            format!("sign must be +1 or -1, found `{value}`"),
        )
    })
}

fn parse_int(line: &Line<'_>, token: &Token<'_>, value: &str, what: &str) -> Result<i64, Error> {
    value.parse().map_err(|_| {
        Error::parse(
            line.number,
            token.column,
            format!("{what} must be an integer, found `{value}`"),
        )
    })
}

fn parse_flag(line: &Line<'_>, token: &Token<'_>, value: &str, what: &str) -> Result<bool, Error> {
    match value {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(Error::parse(
            line.number,
            token.column,
            format!("{what} must be 0 or 1, found `{value}`"),
        )),
    }
}

/// Reads `sign=<s> <key>=<int>` at token positions `at` and `at + 1`.
fn sign_and_int(line: &Line<'_>, at: usize, key: &str) -> Result<(Sign, i64), Error> {
    let sign_token = line.token(at, "sign=<+1|-1>")?;
    let sign = parse_sign(line, sign_token, key_value(line, sign_token, "sign")?)?;
    let int_token = line.token(at + 1, &format!("{key}=<int>"))?;
    let value = parse_int(line, int_token, key_value(line, int_token, key)?, key)?;
    line.finish(at + 2)?;
    Ok((sign, value))
}

/// An id together with where it was declared, for the reference pass.
struct Located<T> {
    line: usize,
    column: usize,
    value: T,
}

fn claim_id(
    set: &mut HashSet<String>,
    line: &Line<'_>,
    token: &Token<'_>,
    namespace: &str,
) -> Result<String, Error> {
    let id = token.text.to_string();
    if !set.insert(id.clone()) {
        return Err(Error::parse(
            line.number,
            token.column,
            format!("duplicate {namespace} id `{id}`"),
        ));
    }
    Ok(id)
}

/// Parses a document, validating syntax, id uniqueness and references.
pub fn parse(input: &str) -> Result<LinkMapDocument, Error> {
    let lines = split_lines(input);
    let mut name: Option<String> = None;
    let mut dp_plus = Vec::new();
    let mut dp_minus = Vec::new();
    let mut pairs: Vec<Located<LinkedPair>> = Vec::new();
    let mut disks: Vec<Located<DiskRecord>> = Vec::new();
    let mut spheres = Vec::new();
    let mut handles: Option<usize> = None;

    let mut dp_ids = HashSet::new();
    let mut pair_ids = HashSet::new();
    let mut disk_ids = HashSet::new();
    let mut sphere_ids = HashSet::new();

    let mut index = 0;
    while index < lines.len() {
        let line = &lines[index];
        index += 1;
        let keyword_column = line.tokens[0].column;
        if name.is_none() && line.keyword() != "linkmap" {
            return Err(Error::parse(
                line.number,
                keyword_column,
                "missing linkmap header",
            ));
        }
        match line.keyword() {
            "linkmap" => {
                if name.is_some() {
                    return Err(Error::parse(
                        line.number,
                        keyword_column,
                        "duplicate linkmap header",
                    ));
                }
                let rest = line.text[line.tokens[0].column - 1 + "linkmap".len()..].trim();
                if rest.is_empty() {
                    return Err(Error::parse(
                        line.number,
                        line.end_column(),
                        "expected document name",
                    ));
                }
                name = Some(rest.to_string());
            }
            "dp+" | "dp-" => {
                let id_token = line.token(1, "double point id")?;
                let id = claim_id(&mut dp_ids, line, id_token, "double point")?;
                let (sign, n) = sign_and_int(line, 2, "n")?;
                let record = DoublePointRecord {
                    id,
                    point: DoublePoint { sign, n },
                };
                if line.keyword() == "dp+" {
                    dp_plus.push(record);
                } else {
                    dp_minus.push(record);
                }
            }
            "pair" => {
                let id_token = line.token(1, "pair id")?;
                let id = claim_id(&mut pair_ids, line, id_token, "pair")?;
                let eq = line.token(2, "`=`")?;
                if eq.text != "=" {
                    return Err(Error::parse(
                        line.number,
                        eq.column,
                        format!("expected `=`, found `{}`", eq.text),
                    ));
                }
                let first = line.token(3, "double point id")?;
                let second = line.token(4, "double point id")?;
                line.finish(5)?;
                pairs.push(Located {
                    line: line.number,
                    column: first.column,
                    value: LinkedPair {
                        id,
                        first: first.text.to_string(),
                        second: second.text.to_string(),
                    },
                });
            }
            "disk" => {
                let id_token = line.token(1, "disk id")?;
                let id = claim_id(&mut disk_ids, line, id_token, "disk")?;
                let pair_token = line.token(2, "pair=<id>")?;
                let pair = key_value(line, pair_token, "pair")?.to_string();
                let primary_token = line.token(3, "primary=<int>")?;
                let primary = parse_int(
                    line,
                    primary_token,
                    key_value(line, primary_token, "primary")?,
                    "primary",
                )?;
                let framed_token = line.token(4, "framed=<0|1>")?;
                let framed = parse_flag(
                    line,
                    framed_token,
                    key_value(line, framed_token, "framed")?,
                    "framed",
                )?;
                line.finish(5)?;
                let mut intersections = Vec::new();
                let pair_column = pair_token.column;
                loop {
                    let Some(body) = lines.get(index) else {
                        return Err(Error::parse(
                            line.number,
                            keyword_column,
                            format!("disk `{id}` block is never closed by `end`"),
                        ));
                    };
                    index += 1;
                    match body.keyword() {
                        "end" => {
                            body.finish(1)?;
                            break;
                        }
                        "x" => {
                            let (sign, m) = sign_and_int(body, 1, "m")?;
                            intersections.push(DiskIntersection { sign, m });
                        }
                        other => {
                            return Err(Error::parse(
                                body.number,
                                body.tokens[0].column,
                                format!(
                                    "expected `x` line or `end` in disk block, found `{other}`"
                                ),
                            ));
                        }
                    }
                }
                disks.push(Located {
                    line: line.number,
                    column: pair_column,
                    value: DiskRecord {
                        pair,
                        framed,
                        data: WhitneyDiskData {
                            id,
                            primary,
                            intersections,
                        },
                    },
                });
            }
            "sphere" => {
                let id_token = line.token(1, "sphere id")?;
                let id = claim_id(&mut sphere_ids, line, id_token, "sphere")?;
                let eps_token = line.token(2, "eps=<+1|-1>")?;
                let eps = parse_sign(line, eps_token, key_value(line, eps_token, "eps")?)?;
                let w2_token = line.token(3, "w2=<0|1>")?;
                let w2 = parse_flag(line, w2_token, key_value(line, w2_token, "w2")?, "w2")?;
                line.finish(4)?;
                let mut points = Vec::new();
                loop {
                    let Some(body) = lines.get(index) else {
                        return Err(Error::parse(
                            line.number,
                            keyword_column,
                            format!("sphere `{id}` block is never closed by `end`"),
                        ));
                    };
                    index += 1;
                    match body.keyword() {
                        "end" => {
                            body.finish(1)?;
                            break;
                        }
                        "d" => {
                            let (sign, exp) = sign_and_int(body, 1, "exp")?;
                            points.push(WallIntersection { sign, exp });
                        }
                        other => {
                            return Err(Error::parse(
                                body.number,
                                body.tokens[0].column,
                                format!(
                                    "expected `d` line or `end` in sphere block, found `{other}`"
                                ),
                            ));
                        }
                    }
                }
                spheres.push(SphereClass {
                    id: id.clone(),
                    pairing: PairingData {
                        disc_id: id,
                        points,
                        eps,
                    },
                    w2,
                });
            }
            "handles" => {
                if handles.is_some() {
                    return Err(Error::parse(
                        line.number,
                        keyword_column,
                        "duplicate handles line",
                    ));
                }
                let count_token = line.token(1, "handle count")?;
                let count = count_token.text.parse().map_err(|_| {
                    Error::parse(
                        line.number,
                        count_token.column,
                        format!(
                            "handle count must be a non-negative integer, found `{}`",
                            count_token.text
                        ),
                    )
                })?;
                line.finish(2)?;
                handles = Some(count);
            }
            "x" | "d" | "end" => {
                return Err(Error::parse(
                    line.number,
                    keyword_column,
                    format!("`{}` is only valid inside a block", line.keyword()),
                ));
            }
            other => {
                return Err(Error::parse(
                    line.number,
                    keyword_column,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    let Some(name) = name else {
        return Err(Error::parse(1, 1, "missing linkmap header"));
    };

    for pair in &pairs {
        for id in [&pair.value.first, &pair.value.second] {
            if !dp_ids.contains(id) {
                return Err(Error::parse(
                    pair.line,
                    pair.column,
                    format!(
                        "pair `{}` references unknown double point `{id}`",
                        pair.value.id
                    ),
                ));
            }
        }
    }
    for disk in &disks {
        if !pair_ids.contains(&disk.value.pair) {
            return Err(Error::parse(
                disk.line,
                disk.column,
                format!(
                    "disk `{}` references unknown pair `{}`",
                    disk.value.data.id, disk.value.pair
                ),
            ));
        }
    }

    Ok(LinkMapDocument {
        name,
        dp_plus,
        dp_minus,
        pairs: pairs.into_iter().map(|p| p.value).collect(),
        disks: disks.into_iter().map(|d| d.value).collect(),
        spheres,
        handles: handles.unwrap_or(0),
    })
}
