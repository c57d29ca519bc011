//! Frameproof, separable and strongly separable checks with witnesses.
//!
//! Every check enumerates coalitions in lexicographic order of their sorted
//! member indices and reports the first failure, so witnesses are stable
//! across runs and thread counts.
//!
//! [`is_ssc`] uses a delete-one reduction instead of enumerating `S(C0)`:
//! any `C'` with `desc(C') = desc(C0)` lies inside `D = desc(C0) ∩ C`, and
//! `desc` is monotone, so some member `x` of `C0` is missed by an element of
//! `S(C0)` exactly when `desc(D \ {x}) = desc(C0)`. [`is_ssc_naive`] is the
//! literal definition and is kept as its oracle.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::code::{hamming, Code, Codeword};
use crate::desc::{descendant_of, members_within, shortened};
use crate::error::{Error, Result};
use crate::subsets;

/// Enumeration limits shared by the verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted coalition bound `t`.
    pub max_strength: usize,
    /// Cap on the number of subsets hashed by the separability check.
    pub max_subsets: u128,
    /// Largest `|desc(C0) ∩ C|` the naive oracle will expand into subsets.
    pub oracle_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_strength: 4,
            max_subsets: 10_000_000,
            oracle_bound: 25,
        }
    }
}

impl Limits {
    fn check_strength(&self, t: usize) -> Result<()> {
        if t < 2 {
            return Err(Error::StrengthTooSmall(t));
        }
        if t > self.max_strength {
            return Err(Error::StrengthTooLarge {
                t,
                cap: self.max_strength,
            });
        }
        Ok(())
    }
}

/// The four length-3 configurations of `desc({c1, c2}) ∩ C` that break strong
/// separability of a separable code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ForbiddenType {
    I,
    II,
    III,
    IV,
}

/// Why a code fails a property. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `framed` lies in `desc(coalition)` but not in `coalition`.
    Framed {
        coalition: Vec<usize>,
        framed: usize,
    },
    /// Distinct sets with identical descendants.
    Inseparable {
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// `desc(alternative) = desc(coalition)` while `coalition ⊄ alternative`.
    NotStronglySeparable {
        coalition: Vec<usize>,
        alternative: Vec<usize>,
    },
    /// `desc({first, second}) ∩ C` has the shape of `pattern`, with `first`
    /// playing the role of `c1`.
    Forbidden {
        first: usize,
        second: usize,
        pattern: ForbiddenType,
    },
    /// Two shortened codes at `position` share more than one word.
    ShortenedOverlap {
        position: usize,
        symbols: (u32, u32),
        common: Vec<Codeword>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    holds: bool,
    witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }

    fn from_failure(failure: Option<Witness>) -> Self {
        failure.map_or_else(Verdict::pass, Verdict::fail)
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

pub fn is_fpc(code: &Code, t: usize) -> Result<Verdict> {
    is_fpc_with(code, t, &Limits::default())
}

/// `C` is a t-frameproof code iff `desc(S) ∩ C = S` for every `|S| ≤ t`.
pub fn is_fpc_with(code: &Code, t: usize, limits: &Limits) -> Result<Verdict> {
    limits.check_strength(t)?;
    let failure = subsets::first_hit(code.size(), t, |s| {
        let inside = members_within(code, &descendant_of(code, s));
        (inside.len() > s.len()).then(|| {
            let framed = inside
                .into_iter()
                .find(|i| s.binary_search(i).is_err())
                .expect("strictly larger superset has an outsider");
            Witness::Framed {
                coalition: s.to_vec(),
                framed,
            }
        })
    });
    Ok(Verdict::from_failure(failure))
}

pub fn is_sc(code: &Code, t: usize) -> Result<Verdict> {
    is_sc_with(code, t, &Limits::default())
}

/// `C` is t-separable iff distinct subsets of size `1..=t` have distinct
/// descendants. Each subset's position sets are hashed; the first repeat in
/// lexicographic order is the witness.
pub fn is_sc_with(code: &Code, t: usize, limits: &Limits) -> Result<Verdict> {
    limits.check_strength(t)?;
    let count = subsets::count_up_to(code.size(), t);
    if count > limits.max_subsets {
        return Err(Error::InstanceTooLarge {
            count,
            cap: limits.max_subsets,
        });
    }
    let mut seen = HashMap::with_capacity(count as usize);
    let failure = subsets::walk(code.size(), t, |s| {
        match seen.entry(descendant_of(code, s)) {
            std::collections::hash_map::Entry::Occupied(prev) => {
                ControlFlow::Break(Witness::Inseparable {
                    first: Vec::clone(prev.get()),
                    second: s.to_vec(),
                })
            }
            std::collections::hash_map::Entry::Vacant(slot) => {
                slot.insert(s.to_vec());
                ControlFlow::Continue(())
            }
        }
    });
    Ok(Verdict::from_failure(failure))
}

pub fn is_ssc(code: &Code, t: usize) -> Result<Verdict> {
    is_ssc_with(code, t, &Limits::default())
}

/// Strong separability via the delete-one test on `D = desc(C0) ∩ C`.
///
/// The witness alternative is `D \ {x}` for the first failing `x`, shrunk by
/// dropping members from the highest index down while the descendant is kept.
pub fn is_ssc_with(code: &Code, t: usize, limits: &Limits) -> Result<Verdict> {
    limits.check_strength(t)?;
    let failure = subsets::first_hit(code.size(), t, |s| {
        let target = descendant_of(code, s);
        let inside = members_within(code, &target);
        s.iter().find_map(|&x| {
            let rest: Vec<usize> = inside.iter().copied().filter(|&i| i != x).collect();
            (!rest.is_empty() && descendant_of(code, &rest) == target).then(|| {
                Witness::NotStronglySeparable {
                    coalition: s.to_vec(),
                    alternative: shrink(code, rest, &target),
                }
            })
        })
    });
    Ok(Verdict::from_failure(failure))
}

fn shrink(code: &Code, mut set: Vec<usize>, target: &crate::desc::FeasibleSet) -> Vec<usize> {
    for k in (0..set.len()).rev() {
        let removed = set.remove(k);
        if set.is_empty() || descendant_of(code, &set) != *target {
            set.insert(k, removed);
        }
    }
    set
}

pub fn is_ssc_naive(code: &Code, t: usize) -> Result<Verdict> {
    is_ssc_naive_with(code, t, &Limits::default())
}

/// Literal strong separability: for each `C0`, enumerate every subset `C'` of
/// `D = desc(C0) ∩ C`, keep those with `desc(C') = desc(C0)` and intersect.
///
/// The witness is the smallest such `C'` missing part of `C0` (ties broken
/// lexicographically).
pub fn is_ssc_naive_with(code: &Code, t: usize, limits: &Limits) -> Result<Verdict> {
    limits.check_strength(t)?;
    let outcome = subsets::first_hit(code.size(), t, |s| {
        let target = descendant_of(code, s);
        let inside = members_within(code, &target);
        if inside.len() > limits.oracle_bound {
            return Some(Err(Error::OracleBound {
                size: inside.len(),
                bound: limits.oracle_bound,
            }));
        }
        let coalition_mask = inside
            .iter()
            .enumerate()
            .filter(|(_, i)| s.binary_search(i).is_ok())
            .fold(0u32, |m, (bit, _)| m | 1 << bit);

        let mut common = u32::MAX;
        let mut best: Option<Vec<usize>> = None;
        for mask in 1u32..(1u32 << inside.len()) {
            let chosen: Vec<usize> = (0..inside.len())
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| inside[b])
                .collect();
            if descendant_of(code, &chosen) != target {
                continue;
            }
            common &= mask;
            if mask & coalition_mask != coalition_mask {
                let better = best
                    .as_ref()
                    .is_none_or(|b| (chosen.len(), &chosen) < (b.len(), b));
                if better {
                    best = Some(chosen);
                }
            }
        }
        debug_assert_eq!(common & coalition_mask, common);
        (common != coalition_mask).then(|| {
            Ok(Witness::NotStronglySeparable {
                coalition: s.to_vec(),
                alternative: best.expect("intersection below C0 needs a non-superset member"),
            })
        })
    });
    Ok(Verdict::from_failure(outcome.transpose()?))
}

fn require_length_three(code: &Code) -> Result<()> {
    match code.length() {
        3 => Ok(()),
        n => Err(Error::RequiresLengthThree(n)),
    }
}

/// Scans distance-3 pairs for the four forbidden configurations.
///
/// Only meaningful on 2-separable codes of length 3, where the verdict agrees
/// with `is_ssc(code, 2)`.
pub fn forbidden_type_scan(code: &Code) -> Result<Verdict> {
    require_length_three(code)?;
    let words = code.words();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if hamming(&words[i], &words[j])? != 3 {
                continue;
            }
            let inside: BTreeSet<&Codeword> = members_within(code, &descendant_of(code, &[i, j]))
                .into_iter()
                .map(|k| &words[k])
                .collect();
            for (first, second) in [(i, j), (j, i)] {
                if let Some(pattern) = classify(&words[first], &words[second], &inside) {
                    return Ok(Verdict::fail(Witness::Forbidden {
                        first,
                        second,
                        pattern,
                    }));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// Matches `inside` against the four shapes built around `c1`'s three
/// single-coordinate neighbours towards `c2`.
fn classify(c1: &Codeword, c2: &Codeword, inside: &BTreeSet<&Codeword>) -> Option<ForbiddenType> {
    let (a1, b1, e1) = (c1[0], c1[1], c1[2]);
    let (a2, b2, e2) = (c2[0], c2[1], c2[2]);
    let n3 = Codeword::from([a1, b1, e2]);
    let n4 = Codeword::from([a1, b2, e1]);
    let n5 = Codeword::from([a2, b1, e1]);
    let shapes = [
        (ForbiddenType::I, vec![&n3, &n4]),
        (ForbiddenType::II, vec![&n3, &n5]),
        (ForbiddenType::III, vec![&n4, &n5]),
        (ForbiddenType::IV, vec![&n3, &n4, &n5]),
    ];
    for (kind, extra) in shapes {
        let shape: BTreeSet<&Codeword> = [c1, c2].into_iter().chain(extra).collect();
        if shape == *inside {
            return Some(kind);
        }
    }
    None
}

/// Length-3 separability test: for every position and symbol pair, the two
/// shortened codes share at most one word. Agrees with `is_sc(code, 2)`.
pub fn shortened_sc_check(code: &Code) -> Result<Verdict> {
    require_length_three(code)?;
    for position in 0..3 {
        let symbols: BTreeSet<u32> = code.words().iter().map(|w| w[position]).collect();
        let shortened_codes = symbols
            .iter()
            .map(|&g| Ok((g, shortened(code, position, g)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        for (&g1, a1) in &shortened_codes {
            for (&g2, a2) in shortened_codes.range(g1 + 1..) {
                let common: Vec<Codeword> = a1.intersection(a2).cloned().collect();
                if common.len() > 1 {
                    return Ok(Verdict::fail(Witness::ShortenedOverlap {
                        position,
                        symbols: (g1, g2),
                        common,
                    }));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// Largest `|desc(C0) ∩ C|` over coalitions of size at most 2. A value of at
/// most 3 is sufficient for `is_ssc(code, 2)`.
pub fn desc_cap_bound(code: &Code) -> Result<usize> {
    require_length_three(code)?;
    let m = code.size();
    let mut best = 1;
    for i in 0..m {
        for j in i + 1..m {
            best = best.max(members_within(code, &descendant_of(code, &[i, j])).len());
        }
    }
    Ok(best)
}
