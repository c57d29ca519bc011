//! Code constructions: one-hot composition to binary and the length-3
//! family over `Z_{q-s}` extended by `s` absorbing infinity symbols.

use serde::Serialize;

use crate::code::{Code, Codeword};
use crate::error::{Error, Result};

/// A letter of the mixed alphabet `{∞_0, …, ∞_{s-1}} ∪ Z_{q-s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Finite(u32),
    Infinity(u32),
}

/// Residue arithmetic modulo `q - s` with `s` absorbing infinities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixedAlphabet {
    modulus: u32,
    infinities: u32,
}

impl MixedAlphabet {
    pub fn new(q: u32, s: u32) -> Result<Self> {
        if 2 * s > q {
            return Err(Error::InfinityCountOutOfRange { q, s });
        }
        Ok(MixedAlphabet {
            modulus: q - s,
            infinities: s,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn infinities(&self) -> u32 {
        self.infinities
    }

    pub fn finite(&self, value: u64) -> Symbol {
        Symbol::Finite((value % u64::from(self.modulus)) as u32)
    }

    pub fn infinity(&self, index: u32) -> Option<Symbol> {
        (index < self.infinities).then_some(Symbol::Infinity(index))
    }

    /// `None` when both operands are infinite, which the construction never needs.
    pub fn add(&self, a: Symbol, b: Symbol) -> Option<Symbol> {
        match (a, b) {
            (Symbol::Finite(x), Symbol::Finite(y)) => {
                Some(self.finite(u64::from(x) + u64::from(y)))
            }
            (Symbol::Infinity(i), Symbol::Finite(_)) | (Symbol::Finite(_), Symbol::Infinity(i)) => {
                Some(Symbol::Infinity(i))
            }
            (Symbol::Infinity(_), Symbol::Infinity(_)) => None,
        }
    }

    pub fn mul(&self, a: Symbol, b: Symbol) -> Option<Symbol> {
        match (a, b) {
            (Symbol::Finite(x), Symbol::Finite(y)) => {
                Some(self.finite(u64::from(x) * u64::from(y)))
            }
            (Symbol::Infinity(i), Symbol::Finite(_)) | (Symbol::Finite(_), Symbol::Infinity(i)) => {
                Some(Symbol::Infinity(i))
            }
            (Symbol::Infinity(_), Symbol::Infinity(_)) => None,
        }
    }

    /// Canonical label in `0..q`: `u ↦ u`, `∞_i ↦ (q - s) + i`.
    pub fn relabel(&self, symbol: Symbol) -> u32 {
        match symbol {
            Symbol::Finite(u) => u,
            Symbol::Infinity(i) => self.modulus + i,
        }
    }
}

/// Replaces each symbol `i` of a q-ary code by the `q`-bit unit vector with
/// a 1 in slot `i`. Block `j` of the output encodes position `j` of the input.
pub fn one_hot_compose(code: &Code) -> Code {
    let q = code.q() as usize;
    let words = code
        .words()
        .iter()
        .map(|w| {
            let mut bits = vec![0u32; w.len() * q];
            for (j, &s) in w.symbols().iter().enumerate() {
                bits[j * q + s as usize] = 1;
            }
            Codeword::new(bits)
        })
        .collect();
    Code::new(code.length() * q, 2, words).expect("one-hot images of distinct words are distinct")
}

fn check_length3_params(q: u32, s: u32) -> Result<()> {
    if 2 * s > q {
        return Err(Error::InfinityCountOutOfRange { q, s });
    }
    if (q - s).is_multiple_of(2) {
        return Err(Error::EvenFiniteModulus { q, s });
    }
    Ok(())
}

/// `q² + sq − 2s²`, the size of [`build_length3`]`(q, s)`.
pub fn predicted_size(q: u32, s: u32) -> Result<u64> {
    check_length3_params(q, s)?;
    let (q, s) = (u64::from(q), u64::from(s));
    Ok(q * q + s * q - 2 * s * s)
}

/// Builds the length-3 code of size `q² + sq − 2s²` whose every pair has at
/// most three codewords in its descendant, hence a 2̄-SSC.
///
/// Orbits are generated under the shift `c ↦ c + g`, `g ∈ Z_{q−s}`:
/// first the `s` orbits of `(∞_i, 0, i), (i, ∞_i, 0), (0, i, ∞_i)` for
/// `i = 0..s`, then the orbit of the columns `(0, j, 2j)`. Within an orbit,
/// base columns come in order and shifts ascend.
pub fn build_length3(q: u32, s: u32) -> Result<Code> {
    check_length3_params(q, s)?;
    let alphabet = MixedAlphabet::new(q, s)?;
    let modulus = alphabet.modulus();

    let mut bases: Vec<Vec<[Symbol; 3]>> = (0..s)
        .map(|i| {
            let inf = Symbol::Infinity(i);
            let zero = Symbol::Finite(0);
            let fin = Symbol::Finite(i);
            vec![[inf, zero, fin], [fin, inf, zero], [zero, fin, inf]]
        })
        .collect();
    bases.push(
        (0..modulus)
            .map(|j| {
                let j = alphabet.finite(u64::from(j));
                let two_j = alphabet
                    .mul(alphabet.finite(2), j)
                    .expect("finite operands");
                [Symbol::Finite(0), j, two_j]
            })
            .collect(),
    );

    let mut words = Vec::with_capacity(predicted_size(q, s)? as usize);
    let mut seen = std::collections::HashSet::new();
    for orbit in &bases {
        for column in orbit {
            for g in 0..modulus {
                let shift = Symbol::Finite(g);
                let word: Vec<u32> = column
                    .iter()
                    .map(|&c| alphabet.relabel(alphabet.add(c, shift).expect("one finite operand")))
                    .collect();
                if !seen.insert(word.clone()) {
                    return Err(Error::ConstructionCollision(word));
                }
                words.push(Codeword::new(word));
            }
        }
    }
    Code::new(3, q, words)
}

/// Construction parameters chosen by the residue of `q` modulo 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionPlan {
    pub q: u32,
    pub s: u32,
    /// `q mod 8`.
    pub m: u32,
    /// Defect: the size is `(9q² − w²) / 8`.
    pub w: u32,
    pub predicted_m: u64,
}

/// The `s` maximizing `q² + sq − 2s²` subject to `0 ≤ s ≤ q/2` and `q − s` odd.
pub fn optimal_s(q: u32) -> Result<ConstructionPlan> {
    if q < 4 {
        return Err(Error::AlphabetTooSmall(q));
    }
    let m = q % 8;
    let s = match m {
        0 => (q - 4) / 4,
        1 => (q - 1) / 4,
        2 => (q + 2) / 4,
        3 => (q - 3) / 4,
        4 => q / 4,
        5 => q.div_ceil(4),
        6 => (q - 2) / 4,
        _ => (q + 1) / 4,
    };
    let w = if m.is_multiple_of(4) {
        4 - m
    } else {
        m.min(8 - m)
    };
    let q64 = u64::from(q);
    let w64 = u64::from(w);
    let predicted_m = (9 * q64 * q64 - w64 * w64) / 8;
    debug_assert_eq!(predicted_size(q, s), Ok(predicted_m));
    Ok(ConstructionPlan {
        q,
        s,
        m,
        w,
        predicted_m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absorbing_arithmetic() {
        let a = MixedAlphabet::new(7, 2).unwrap();
        assert_eq!(a.modulus(), 5);
        let inf = a.infinity(1).unwrap();
        assert_eq!(a.infinity(2), None);
        for g in 0..5 {
            let g = Symbol::Finite(g);
            assert_eq!(a.add(g, inf), Some(inf));
            assert_eq!(a.add(inf, g), Some(inf));
            assert_eq!(a.mul(g, inf), Some(inf));
            assert_eq!(a.mul(inf, g), Some(inf));
        }
        assert_eq!(
            a.add(Symbol::Finite(3), Symbol::Finite(4)),
            Some(Symbol::Finite(2))
        );
        assert_eq!(
            a.mul(Symbol::Finite(3), Symbol::Finite(4)),
            Some(Symbol::Finite(2))
        );
        assert_eq!(a.add(inf, inf), None);
        assert_eq!(a.relabel(inf), 6);
        assert_eq!(a.relabel(Symbol::Finite(4)), 4);
        assert_eq!(a.finite(12), Symbol::Finite(2));
    }

    #[test]
    fn one_hot_examples() {
        let code = Code::from_rows(3, &[[0, 2]]).unwrap();
        let bin = one_hot_compose(&code);
        assert_eq!((bin.length(), bin.size(), bin.q()), (6, 1, 2));
        assert_eq!(bin.words()[0], Codeword::from([1, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn build_sizes() {
        assert_eq!(build_length3(4, 1).unwrap().size(), 18);
        assert_eq!(build_length3(5, 2).unwrap().size(), 27);
        let c = build_length3(3, 0).unwrap();
        assert_eq!(c.size(), 9);
        for w in c.words() {
            // (g, j + g, 2j + g) over Z_3
            let j = (w[1] + 3 - w[0]) % 3;
            assert_eq!(w[2], (2 * j + w[0]) % 3);
        }
    }

    #[test]
    fn build_orbit_order() {
        // q = 4, s = 1: modulus 3, ∞_0 relabels to 3.
        let c = build_length3(4, 1).unwrap();
        let first: Vec<Vec<u32>> = c.words()[..4]
            .iter()
            .map(|w| w.symbols().to_vec())
            .collect();
        assert_eq!(
            first,
            vec![vec![3, 0, 0], vec![3, 1, 1], vec![3, 2, 2], vec![0, 3, 0]]
        );
        assert_eq!(c.words()[9].symbols(), &[0, 0, 0]);
        assert_eq!(c.words()[17].symbols(), &[2, 1, 0]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            build_length3(4, 2).unwrap_err(),
            Error::EvenFiniteModulus { q: 4, s: 2 }
        );
        assert_eq!(
            build_length3(5, 3).unwrap_err(),
            Error::InfinityCountOutOfRange { q: 5, s: 3 }
        );
        assert_eq!(
            build_length3(4, 0).unwrap_err(),
            Error::EvenFiniteModulus { q: 4, s: 0 }
        );
        assert!(predicted_size(4, 2).is_err());
    }

    #[test]
    fn predicted_size_examples() {
        assert_eq!(predicted_size(4, 1), Ok(18));
        assert_eq!(predicted_size(7, 0), Ok(49));
        assert_eq!(predicted_size(20, 5), Ok(450));
    }

    #[test]
    fn optimal_s_examples() {
        let p = optimal_s(12).unwrap();
        assert_eq!((p.s, p.predicted_m), (3, 162));
        let p = optimal_s(4).unwrap();
        assert_eq!((p.s, p.predicted_m, p.w), (1, 18, 0));
        let p = optimal_s(8).unwrap();
        assert_eq!((p.s, p.predicted_m, p.m, p.w), (1, 70, 0, 4));
        assert_eq!(optimal_s(3), Err(Error::AlphabetTooSmall(3)));
    }
}
