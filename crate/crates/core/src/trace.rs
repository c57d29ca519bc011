//! Colluder identification on binary codes from a feasible set `R`.
//!
//! Both tracers start from the same filter: keep the codewords that carry a 1
//! wherever `R = {1}` and a 0 wherever `R = {0}`. The frameproof tracer stops
//! there. The strong-separability tracer then, position by position, accepts
//! any candidate that is the only one carrying some bit.

use serde::Serialize;

use crate::code::{Coalition, Code};
use crate::desc::{descendant_of, FeasibleSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Identified {
        colluders: Vec<usize>,
    },
    /// The recovered set is larger than `t`.
    Overflow {
        message: String,
        recovered: Vec<usize>,
    },
}

/// A position where exactly one candidate carries `bit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub position: usize,
    pub bit: u32,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub outcome: Outcome,
    /// Codewords consistent with every pinned position of `R`.
    pub candidates: Vec<usize>,
    pub evidence: Vec<Evidence>,
    /// Codeword-cell visits, one per (row, codeword) pair touched.
    pub operations: u64,
}

impl TraceReport {
    fn conclude(
        recovered: Vec<usize>,
        t: usize,
        candidates: Vec<usize>,
        evidence: Vec<Evidence>,
        operations: u64,
    ) -> Self {
        let outcome = if recovered.len() <= t {
            Outcome::Identified {
                colluders: recovered,
            }
        } else {
            Outcome::Overflow {
                message: format!("the set of colluders has size at least {}", t + 1),
                recovered,
            }
        };
        TraceReport {
            outcome,
            candidates,
            evidence,
            operations,
        }
    }

    pub fn identified(&self) -> Option<&[usize]> {
        match &self.outcome {
            Outcome::Identified { colluders } => Some(colluders),
            Outcome::Overflow { .. } => None,
        }
    }

    pub fn recovered(&self) -> &[usize] {
        match &self.outcome {
            Outcome::Identified { colluders } => colluders,
            Outcome::Overflow { recovered, .. } => recovered,
        }
    }
}

/// What the noiseless detector reveals about a coalition: the set of bits at
/// each position.
pub fn coalition_feasible_set(code: &Code, coalition: &Coalition) -> Result<FeasibleSet> {
    if !code.is_binary() {
        return Err(Error::NotBinary);
    }
    Ok(descendant_of(code, coalition.members()))
}

/// Positions pinned to a single bit: `(position, bit)`.
fn pinned(code: &Code, r: &FeasibleSet) -> Result<Vec<(usize, u32)>> {
    if !code.is_binary() || !r.is_binary() {
        return Err(Error::NotBinary);
    }
    if r.length() != code.length() {
        return Err(Error::LengthMismatch {
            expected: code.length(),
            found: r.length(),
        });
    }
    Ok(r.positions()
        .iter()
        .enumerate()
        .filter_map(|(k, set)| set.sole().map(|b| (k, b)))
        .collect())
}

/// Multiplies the indicator `phi` by row `k` (or its complement when `bit` is 0).
fn mask_row(code: &Code, phi: &mut [bool], k: usize, bit: u32, ops: &mut u64) {
    for (flag, w) in phi.iter_mut().zip(code.words()) {
        *flag &= w[k] == bit;
    }
    *ops += code.size() as u64;
}

fn indices(phi: &[bool]) -> Vec<usize> {
    phi.iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(i, _)| i)
        .collect()
}

/// Frameproof tracer: `U = U₁ ∩ U₂` where `U₁` agrees with every `R = {1}`
/// row and `U₂` with every `R = {0}` row. Exact on a t-FPC when at most `t`
/// users collude.
pub fn lacc_identify(code: &Code, r: &FeasibleSet, t: usize) -> Result<TraceReport> {
    let pins = pinned(code, r)?;
    let mut ops = 0;
    let mut ones = vec![true; code.size()];
    for &(k, _) in pins.iter().filter(|(_, b)| *b == 1) {
        mask_row(code, &mut ones, k, 1, &mut ops);
    }
    let mut zeros = vec![true; code.size()];
    for &(k, _) in pins.iter().filter(|(_, b)| *b == 0) {
        mask_row(code, &mut zeros, k, 0, &mut ops);
    }
    let both: Vec<bool> = ones.iter().zip(&zeros).map(|(a, b)| *a && *b).collect();
    ops += code.size() as u64;
    let recovered = indices(&both);
    Ok(TraceReport::conclude(
        recovered.clone(),
        t,
        recovered,
        Vec::new(),
        ops,
    ))
}

/// Strong-separability tracer. Exact on a t̄-SSC when `R` is the descendant of
/// a coalition of at most `t` users.
///
/// Uniqueness of a bit is judged separately at every position.
pub fn ssc_trace(code: &Code, r: &FeasibleSet, t: usize) -> Result<TraceReport> {
    let pins = pinned(code, r)?;
    let mut ops = 0;
    let mut phi = vec![true; code.size()];
    for &(k, bit) in &pins {
        mask_row(code, &mut phi, k, bit, &mut ops);
    }
    let candidates = indices(&phi);
    if candidates.is_empty() {
        return Err(Error::InfeasibleR);
    }

    let mut found = vec![false; code.size()];
    let mut evidence = Vec::new();
    for k in 0..code.length() {
        for bit in [1, 0] {
            let mut only = None;
            let mut count = 0usize;
            for (i, w) in code.words().iter().enumerate() {
                if phi[i] && w[k] == bit {
                    count += 1;
                    only = Some(i);
                }
            }
            ops += code.size() as u64;
            if count == 1 {
                let index = only.expect("count is one");
                found[index] = true;
                evidence.push(Evidence {
                    position: k,
                    bit,
                    index,
                });
            }
        }
    }
    Ok(TraceReport::conclude(
        indices(&found),
        t,
        candidates,
        evidence,
        ops,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weight1() -> Code {
        Code::from_rows(2, &[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    fn unit3() -> Code {
        Code::from_rows(2, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    fn r(p: &str) -> FeasibleSet {
        FeasibleSet::from_pattern(p).unwrap()
    }

    #[test]
    fn feasible_set_of_coalitions() {
        let c = weight1();
        let fs =
            |m: Vec<usize>| coalition_feasible_set(&c, &Coalition::new(&c, m).unwrap()).unwrap();
        assert_eq!(fs(vec![1, 2]), r("**0"));
        assert_eq!(fs(vec![0]), r("000"));
        assert_eq!(fs(vec![1, 2, 3]), r("***"));
        let ternary = Code::from_rows(3, &[[0, 2]]).unwrap();
        let s = Coalition::new(&ternary, vec![0]).unwrap();
        assert_eq!(coalition_feasible_set(&ternary, &s), Err(Error::NotBinary));
    }

    #[test]
    fn lacc_examples() {
        let rep = lacc_identify(&unit3(), &r("**0"), 2).unwrap();
        assert_eq!(rep.identified(), Some(&[0, 1][..]));
        let rep = lacc_identify(&unit3(), &r("001"), 2).unwrap();
        assert_eq!(rep.identified(), Some(&[2][..]));
        let rep = lacc_identify(&weight1(), &r("**0"), 2).unwrap();
        assert_eq!(rep.identified(), None);
        assert_eq!(rep.recovered(), &[0, 1, 2]);
        assert!(matches!(rep.outcome, Outcome::Overflow { .. }));
    }

    #[test]
    fn ssc_trace_small_code() {
        let c = weight1();
        let rep = ssc_trace(&c, &r("**0"), 2).unwrap();
        assert_eq!(rep.identified(), Some(&[1, 2][..]));
        assert_eq!(rep.candidates, vec![0, 1, 2]);
        assert_eq!(
            rep.evidence,
            vec![
                Evidence {
                    position: 0,
                    bit: 1,
                    index: 1
                },
                Evidence {
                    position: 1,
                    bit: 1,
                    index: 2
                },
            ]
        );

        let rep = ssc_trace(&c, &r("000"), 2).unwrap();
        assert_eq!(rep.identified(), Some(&[0][..]));
        assert_eq!(rep.candidates, vec![0]);

        let rep = ssc_trace(&c, &r("***"), 2).unwrap();
        assert_eq!(rep.identified(), None);
        assert_eq!(rep.recovered(), &[1, 2, 3]);
        match &rep.outcome {
            Outcome::Overflow { message, .. } => assert!(message.contains("at least 3")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trace_errors() {
        let c = weight1();
        assert_eq!(ssc_trace(&c, &r("11*"), 2), Err(Error::InfeasibleR));
        assert!(matches!(
            ssc_trace(&c, &r("**"), 2),
            Err(Error::LengthMismatch { .. })
        ));
        let ternary = Code::from_rows(3, &[[0, 2, 1]]).unwrap();
        assert_eq!(ssc_trace(&ternary, &r("000"), 2), Err(Error::NotBinary));
        assert_eq!(lacc_identify(&ternary, &r("000"), 2), Err(Error::NotBinary));
    }
}
