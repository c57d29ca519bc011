//! Codewords, codes and coalitions, plus the plain-text code file format.
//!
//! A code is written one codeword per line. The incidence-matrix convention
//! (codewords as columns) is the transpose of the file layout.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A length-`n` word over the canonical alphabet `0..q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Codeword(Vec<u32>);

impl Codeword {
    pub fn new(symbols: Vec<u32>) -> Self {
        Codeword(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, position: usize) -> Option<u32> {
        self.0.get(position).copied()
    }

    /// The word with `position` deleted.
    pub fn puncture(&self, position: usize) -> Codeword {
        let mut symbols = self.0.clone();
        symbols.remove(position);
        Codeword(symbols)
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&s| s < 2)
    }
}

impl From<Vec<u32>> for Codeword {
    fn from(symbols: Vec<u32>) -> Self {
        Codeword(symbols)
    }
}

impl<const N: usize> From<[u32; N]> for Codeword {
    fn from(symbols: [u32; N]) -> Self {
        Codeword(symbols.to_vec())
    }
}

impl std::ops::Index<usize> for Codeword {
    type Output = u32;

    fn index(&self, position: usize) -> &u32 {
        &self.0[position]
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Number of positions where `u` and `v` differ.
pub fn hamming(u: &Codeword, v: &Codeword) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(u.0.iter().zip(&v.0).filter(|(a, b)| a != b).count())
}

/// An `(n, M, q)` code: `M` distinct words of length `n` over `0..q`.
///
/// Words keep their insertion order so indices are stable, but every verdict
/// in this crate treats the code as a set.
#[derive(Debug, Clone)]
pub struct Code {
    length: usize,
    q: u32,
    words: Vec<Codeword>,
    index: HashMap<Codeword, usize>,
}

impl Code {
    pub fn new(length: usize, q: u32, words: Vec<Codeword>) -> Result<Self> {
        if length == 0 {
            return Err(Error::InvalidParameters("length must be at least 1".into()));
        }
        if q < 2 {
            return Err(Error::InvalidParameters(format!(
                "alphabet size must be at least 2, got {q}"
            )));
        }
        if words.is_empty() {
            return Err(Error::EmptyCodewordSet);
        }
        let mut index = HashMap::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            if w.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    found: w.len(),
                });
            }
            if let Some(&symbol) = w.symbols().iter().find(|&&s| s >= q) {
                return Err(Error::SymbolOutOfRange { symbol, q });
            }
            if let Some(first) = index.insert(w.clone(), i) {
                return Err(Error::DuplicateCodeword { first, second: i });
            }
        }
        Ok(Code {
            length,
            q,
            words,
            index,
        })
    }

    /// Builds a code from rows of symbols, inferring `n` from the first row.
    pub fn from_rows<R: AsRef<[u32]>>(q: u32, rows: &[R]) -> Result<Self> {
        let length = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let words = rows
            .iter()
            .map(|r| Codeword::new(r.as_ref().to_vec()))
            .collect();
        Code::new(length, q, words)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn word(&self, index: usize) -> Result<&Codeword> {
        self.words.get(index).ok_or(Error::IndexOutOfRange {
            index,
            size: self.words.len(),
        })
    }

    pub fn index_of(&self, word: &Codeword) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn is_binary(&self) -> bool {
        self.q == 2
    }

    /// Words selected by a list of indices, in the given order.
    pub fn select<'a>(&'a self, indices: &'a [usize]) -> impl Iterator<Item = &'a Codeword> + 'a {
        indices.iter().map(move |&i| &self.words[i])
    }

    /// Serializes to the text format: a `n M q` header, then one codeword per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.length, self.size(), self.q);
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the text format. `#` starts a comment; blank lines are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `n M q` header".into(),
        })?;
        let fields = parse_numbers(header_line, header)?;
        let [n, m, q] = fields[..] else {
            return Err(Error::Parse {
                line: header_line,
                message: format!("header needs 3 integers `n M q`, found {}", fields.len()),
            });
        };
        let q = u32::try_from(q).map_err(|_| Error::Parse {
            line: header_line,
            message: format!("alphabet size {q} too large"),
        })?;
        let (n, m) = (n as usize, m as usize);

        let mut words = Vec::with_capacity(m.min(1 << 16));
        let mut word_lines = Vec::with_capacity(m.min(1 << 16));
        let mut last_line = header_line;
        for (line, body) in lines {
            last_line = line;
            word_lines.push(line);
            let symbols = parse_numbers(line, body)?;
            if symbols.len() != n {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {n} symbols, found {}", symbols.len()),
                });
            }
            let mut word = Vec::with_capacity(n);
            for s in symbols {
                if s >= u64::from(q) {
                    return Err(Error::Parse {
                        line,
                        message: format!("symbol {s} outside 0..{q}"),
                    });
                }
                word.push(s as u32);
            }
            words.push(Codeword(word));
        }
        if words.len() != m {
            return Err(Error::Parse {
                line: last_line,
                message: format!("header declares {m} codewords, found {}", words.len()),
            });
        }
        Code::new(n, q, words).map_err(|e| {
            let line = match e {
                Error::DuplicateCodeword { second, .. } => word_lines[second],
                _ => header_line,
            };
            Error::Parse {
                line,
                message: e.to_string(),
            }
        })
    }
}

fn parse_numbers(line: usize, body: &str) -> Result<Vec<u64>> {
    body.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line,
                message: format!("`{tok}` is not a non-negative integer"),
            })
        })
        .collect()
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.length == other.length
            && self.q == other.q
            && self.size() == other.size()
            && self.words.iter().all(|w| other.index.contains_key(w))
    }
}

impl Eq for Code {}

impl FromStr for Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Code::parse_text(s)
    }
}

/// A non-empty set of codeword indices into a particular code.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Coalition(Vec<usize>);

impl Coalition {
    /// Sorts and deduplicates `members`, then checks them against `code`.
    pub fn new(code: &Code, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if let Some(&index) = members.iter().find(|&&i| i >= code.size()) {
            return Err(Error::IndexOutOfRange {
                index,
                size: code.size(),
            });
        }
        Ok(Coalition(members))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }
}
