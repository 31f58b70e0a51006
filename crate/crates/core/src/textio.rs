//! Text formats for messages and codewords.
//!
//! Field elements are written as their enumeration indices in decimal.
//! A message file holds one index per line; a codeword file holds one line
//! per point (codeword order) with the `sigma` symbols of that point
//! separated by single spaces. When reading, `#` starts a comment and blank
//! lines are skipped.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::multiplicity::{Codeword, Message};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, line)| (k + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty())
}

fn parse_element(field: &Field, token: &str, line: usize) -> Result<FieldElement> {
    let index: u32 = token
        .parse()
        .map_err(|_| Error::Parse(format!("line {line}: `{token}` is not a field element index")))?;
    field
        .element(index)
        .map_err(|_| Error::Parse(format!("line {line}: {index} is not below q = {}", field.order())))
}

pub fn read_message(field: &Field, text: &str) -> Result<Message> {
    let mut symbols = Vec::new();
    for (line, content) in content_lines(text) {
        let mut tokens = content.split_whitespace();
        let token = tokens.next().expect("non-empty line");
        if tokens.next().is_some() {
            return Err(Error::Parse(format!("line {line}: expected one value per line")));
        }
        symbols.push(parse_element(field, token, line)?);
    }
    Ok(Message::new(symbols))
}

pub fn write_message(message: &Message) -> String {
    let mut out = String::with_capacity(message.len() * 3);
    for x in message.symbols() {
        out.push_str(&x.index().to_string());
        out.push('\n');
    }
    out
}

/// Reads `n` lines of `sigma` symbols each.
pub fn read_codeword(field: &Field, n: usize, sigma: usize, text: &str) -> Result<Codeword> {
    let mut symbols = Vec::with_capacity(n * sigma);
    let mut rows = 0;
    for (line, content) in content_lines(text) {
        let row: Vec<FieldElement> = content
            .split_whitespace()
            .map(|token| parse_element(field, token, line))
            .collect::<Result<_>>()?;
        if row.len() != sigma {
            return Err(Error::ShapeMismatch {
                positions: n,
                symbols: sigma,
                got_positions: rows + 1,
                got_symbols: row.len(),
            });
        }
        symbols.extend(row);
        rows += 1;
    }
    if rows != n {
        return Err(Error::ShapeMismatch {
            positions: n,
            symbols: sigma,
            got_positions: rows,
            got_symbols: sigma,
        });
    }
    Codeword::new(n, sigma, symbols)
}

pub fn write_codeword(codeword: &Codeword) -> String {
    let mut out = String::new();
    for r in 0..codeword.num_positions() {
        let row: Vec<String> = codeword
            .position(r)
            .iter()
            .map(|x| x.index().to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
