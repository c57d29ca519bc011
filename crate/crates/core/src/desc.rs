//! Descendant codes in product form.
//!
//! `desc(W)` is the product `W(1) × … × W(n)` of per-position symbol sets, so
//! it is stored as those `n` sets and never expanded except by the bounded
//! [`FeasibleSet::enumerate`] helper.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::code::{Coalition, Code, Codeword};
use crate::error::{Error, Result};

/// A set of alphabet symbols, stored as a bitset with no trailing zero words.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolSet {
    bits: Vec<u64>,
}

impl SymbolSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(symbol: u32) -> Self {
        let mut s = Self::new();
        s.insert(symbol);
        s
    }

    pub fn insert(&mut self, symbol: u32) {
        let (word, bit) = ((symbol / 64) as usize, symbol % 64);
        if self.bits.len() <= word {
            self.bits.resize(word + 1, 0);
        }
        self.bits[word] |= 1 << bit;
    }

    pub fn contains(&self, symbol: u32) -> bool {
        let (word, bit) = ((symbol / 64) as usize, symbol % 64);
        self.bits.get(word).is_some_and(|w| w & (1 << bit) != 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_subset(&self, other: &SymbolSet) -> bool {
        self.bits.len() <= other.bits.len()
            && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64u32)
                .filter(move |b| bits & (1 << b) != 0)
                .map(move |b| w as u32 * 64 + b)
        })
    }

    /// The only member, if there is exactly one.
    pub fn sole(&self) -> Option<u32> {
        if self.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }
}

impl FromIterator<u32> for SymbolSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = SymbolSet::new();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for SymbolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for SymbolSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Per-position symbol sets `R(1), …, R(n)`; the product form of a descendant code.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FeasibleSet {
    positions: Vec<SymbolSet>,
}

impl FeasibleSet {
    pub fn new(positions: Vec<SymbolSet>) -> Result<Self> {
        if let Some(i) = positions.iter().position(SymbolSet::is_empty) {
            return Err(Error::EmptyPosition(i));
        }
        Ok(FeasibleSet { positions })
    }

    /// Parses a binary pattern such as `"**0"`: `0`, `1`, or `*` for `{0,1}`.
    /// Whitespace between tokens is ignored.
    pub fn from_pattern(pattern: &str) -> Result<Self> {
        let positions = pattern
            .chars()
            .filter(|c| !c.is_whitespace())
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(SymbolSet::singleton(0)),
                '1' => Ok(SymbolSet::singleton(1)),
                '*' => Ok([0, 1].into_iter().collect()),
                other => Err(Error::Parse {
                    line: 1,
                    message: format!("position {}: `{other}` is not one of 0, 1, *", i + 1),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        if positions.is_empty() {
            return Err(Error::Parse {
                line: 1,
                message: "empty pattern".into(),
            });
        }
        Ok(FeasibleSet { positions })
    }

    /// Renders a binary feasible set back into `0`/`1`/`*` form.
    pub fn to_pattern(&self) -> Result<String> {
        self.positions
            .iter()
            .map(|s| match (s.contains(0), s.contains(1), s.len()) {
                (true, false, 1) => Ok('0'),
                (false, true, 1) => Ok('1'),
                (true, true, 2) => Ok('*'),
                _ => Err(Error::NotBinary),
            })
            .collect()
    }

    pub fn length(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[SymbolSet] {
        &self.positions
    }

    pub fn position(&self, i: usize) -> &SymbolSet {
        &self.positions[i]
    }

    pub fn is_binary(&self) -> bool {
        self.positions.iter().all(|s| s.iter().all(|x| x < 2))
    }

    /// Number of words in the product, saturating at `u128::MAX`.
    pub fn cardinality(&self) -> u128 {
        self.positions
            .iter()
            .try_fold(1u128, |acc, s| acc.checked_mul(s.len() as u128))
            .unwrap_or(u128::MAX)
    }

    /// True iff every position set is contained in the corresponding set of `other`.
    pub fn is_subset(&self, other: &FeasibleSet) -> bool {
        self.length() == other.length()
            && self
                .positions
                .iter()
                .zip(&other.positions)
                .all(|(a, b)| a.is_subset(b))
    }

    /// Lists every word of the product, or `None` if there are more than `limit`.
    pub fn enumerate(&self, limit: u128) -> Option<Vec<Codeword>> {
        if self.cardinality() > limit {
            return None;
        }
        let mut out = vec![Vec::with_capacity(self.length())];
        for set in &self.positions {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    set.iter().map(move |s| {
                        let mut w = prefix.clone();
                        w.push(s);
                        w
                    })
                })
                .collect();
        }
        Some(out.into_iter().map(Codeword::new).collect())
    }

    /// Membership of `w` in the product, without the length check.
    pub(crate) fn admits(&self, w: &Codeword) -> bool {
        self.positions
            .iter()
            .zip(w.symbols())
            .all(|(set, &s)| set.contains(s))
    }
}

impl fmt::Debug for FeasibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("FeasibleSet").field(&self.positions).finish()
    }
}

/// Position sets of `words`: entry `i` is the set of `i`th symbols.
pub fn descendant<'a, I>(words: I) -> Result<FeasibleSet>
where
    I: IntoIterator<Item = &'a Codeword>,
{
    let mut iter = words.into_iter();
    let first = iter.next().ok_or(Error::EmptyCodewordSet)?;
    let mut positions: Vec<SymbolSet> = first
        .symbols()
        .iter()
        .map(|&s| SymbolSet::singleton(s))
        .collect();
    for w in iter {
        if w.len() != positions.len() {
            return Err(Error::LengthMismatch {
                expected: positions.len(),
                found: w.len(),
            });
        }
        for (set, &s) in positions.iter_mut().zip(w.symbols()) {
            set.insert(s);
        }
    }
    Ok(FeasibleSet { positions })
}

/// `descendant` over the members selected by `indices`; the caller guarantees
/// the indices are valid and non-empty.
pub(crate) fn descendant_of(code: &Code, indices: &[usize]) -> FeasibleSet {
    descendant(code.select(indices)).expect("non-empty selection from a uniform code")
}

/// Whether `w` lies in the product `R(1) × … × R(n)`.
pub fn desc_contains(r: &FeasibleSet, w: &Codeword) -> Result<bool> {
    if r.length() != w.len() {
        return Err(Error::LengthMismatch {
            expected: r.length(),
            found: w.len(),
        });
    }
    Ok(r.admits(w))
}

/// Indices of the codewords of `code` inside `r`, ascending.
pub(crate) fn members_within(code: &Code, r: &FeasibleSet) -> Vec<usize> {
    code.words()
        .iter()
        .enumerate()
        .filter(|(_, w)| r.admits(w))
        .map(|(i, _)| i)
        .collect()
}

/// `desc(S) ∩ C` as ascending codeword indices. Always a superset of `S`.
pub fn desc_intersect_code(code: &Code, coalition: &Coalition) -> Vec<usize> {
    members_within(code, &descendant_of(code, coalition.members()))
}

/// Shortened code at `position` (0-based): the words carrying `symbol` there,
/// with that position deleted. Duplicates collapse.
pub fn shortened(code: &Code, position: usize, symbol: u32) -> Result<BTreeSet<Codeword>> {
    if position >= code.length() {
        return Err(Error::PositionOutOfRange {
            position,
            length: code.length(),
        });
    }
    Ok(code
        .words()
        .iter()
        .filter(|w| w[position] == symbol)
        .map(|w| w.puncture(position))
        .collect())
}
