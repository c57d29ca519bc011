//! Test-only fixtures and brute-force oracles.
//!
//! The oracles work on raw symbol vectors and `BTreeSet`s and never call the
//! library's descendant or verifier code, so they stay independent of the
//! paths they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepcode::{Code, Codeword, Witness};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn weight1() -> Code {
    Code::from_rows(2, &[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
}

pub fn weight1_ones() -> Code {
    Code::from_rows(2, &[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]).unwrap()
}

/// `m` distinct uniform words of length `n` over `0..q` (fewer if `q^n < m`).
pub fn random_code(rng: &mut ChaCha8Rng, n: usize, m: usize, q: u32) -> Code {
    let space = (q as usize).pow(n as u32);
    let m = m.min(space).max(1);
    let mut seen = BTreeSet::new();
    let mut words = Vec::with_capacity(m);
    while words.len() < m {
        let w: Vec<u32> = (0..n).map(|_| rng.random_range(0..q)).collect();
        if seen.insert(w.clone()) {
            words.push(Codeword::new(w));
        }
    }
    Code::new(n, q, words).unwrap()
}

pub type Positions = Vec<BTreeSet<u32>>;

pub fn raw_desc(code: &Code, members: &[usize]) -> Positions {
    let n = code.length();
    (0..n)
        .map(|i| {
            members
                .iter()
                .map(|&j| code.words()[j].symbols()[i])
                .collect()
        })
        .collect()
}

pub fn raw_admits(r: &Positions, w: &Codeword) -> bool {
    r.iter().zip(w.symbols()).all(|(set, s)| set.contains(s))
}

/// All non-empty subsets of `0..m` as sorted index lists, via bitmasks.
pub fn subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(m < 31, "bitmask enumeration only");
    (1u32..(1u32 << m)).map(move |mask| (0..m).filter(|b| mask & (1 << b) != 0).collect())
}

pub fn subsets_up_to(m: usize, t: usize) -> Vec<Vec<usize>> {
    subsets(m).filter(|s| s.len() <= t).collect()
}

pub fn oracle_fpc(code: &Code, t: usize) -> bool {
    subsets_up_to(code.size(), t).into_iter().all(|s| {
        let r = raw_desc(code, &s);
        (0..code.size()).all(|x| s.contains(&x) || !raw_admits(&r, &code.words()[x]))
    })
}

/// Pairwise comparison of all small subsets, no hashing.
pub fn oracle_sc(code: &Code, t: usize) -> bool {
    let small = subsets_up_to(code.size(), t);
    let descs: Vec<Positions> = small.iter().map(|s| raw_desc(code, s)).collect();
    for i in 0..small.len() {
        for j in i + 1..small.len() {
            if descs[i] == descs[j] {
                return false;
            }
        }
    }
    true
}

/// Literal strong separability over every subset of the whole code.
pub fn oracle_ssc(code: &Code, t: usize) -> bool {
    let m = code.size();
    let all: Vec<(Vec<usize>, Positions)> = subsets(m)
        .map(|s| {
            let d = raw_desc(code, &s);
            (s, d)
        })
        .collect();
    all.iter().filter(|(s, _)| s.len() <= t).all(|(c0, d0)| {
        let mut common: BTreeSet<usize> = (0..m).collect();
        for (c, d) in &all {
            if d == d0 {
                let here: BTreeSet<usize> = c.iter().copied().collect();
                common = common.intersection(&here).copied().collect();
            }
        }
        common == c0.iter().copied().collect()
    })
}

/// Checks a witness against the raw definition it claims to violate.
pub fn witness_is_valid(code: &Code, t: usize, w: &Witness) -> bool {
    match w {
        Witness::Framed { coalition, framed } => {
            coalition.len() <= t
                && !coalition.contains(framed)
                && raw_admits(&raw_desc(code, coalition), &code.words()[*framed])
        }
        Witness::Inseparable { first, second } => {
            first != second
                && first.len() <= t
                && second.len() <= t
                && raw_desc(code, first) == raw_desc(code, second)
        }
        Witness::NotStronglySeparable {
            coalition,
            alternative,
        } => {
            coalition.len() <= t
                && !alternative.is_empty()
                && !coalition.iter().all(|c| alternative.contains(c))
                && raw_desc(code, coalition) == raw_desc(code, alternative)
        }
        Witness::Forbidden { first, second, .. } => {
            let (a, b) = (&code.words()[*first], &code.words()[*second]);
            a.symbols().iter().zip(b.symbols()).all(|(x, y)| x != y)
                && !oracle_ssc_pair(code, *first, *second)
        }
        Witness::ShortenedOverlap {
            position,
            symbols: (g1, g2),
            common,
        } => {
            let short = |g: u32| -> BTreeSet<Vec<u32>> {
                code.words()
                    .iter()
                    .filter(|w| w.symbols()[*position] == g)
                    .map(|w| {
                        let mut v = w.symbols().to_vec();
                        v.remove(*position);
                        v
                    })
                    .collect()
            };
            let (a, b) = (short(*g1), short(*g2));
            g1 != g2
                && common.len() > 1
                && common
                    .iter()
                    .all(|w| a.contains(w.symbols()) && b.contains(w.symbols()))
        }
    }
}

/// Whether the pair `{i, j}` is pinned down by its descendant (strong
/// separability restricted to this one coalition).
pub fn oracle_ssc_pair(code: &Code, i: usize, j: usize) -> bool {
    let c0 = vec![i.min(j), i.max(j)];
    let d0 = raw_desc(code, &c0);
    subsets(code.size())
        .filter(|c| raw_desc(code, c) == d0)
        .all(|c| c.contains(&i) && c.contains(&j))
}
