//! Noiseless spread-spectrum simulation: additive embedding over an
//! orthonormal basis, the equal-weight averaging attack, and the correlation
//! detector that turns a pirate copy back into a feasible set.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::code::Codeword;
use crate::desc::{FeasibleSet, SymbolSet};
use crate::error::{Error, Result};

/// Largest tolerated `|⟨u_i, u_j⟩ − δ_ij|`.
pub const ORTHONORMAL_TOLERANCE: f64 = 1e-9;
const PIVOT_FLOOR: f64 = 1e-12;

/// Default detector threshold.
pub const DEFAULT_EPS: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingContext {
    basis: Vec<Vec<f64>>,
    host: Vec<f64>,
    alpha: f64,
    seed: u64,
}

impl EmbeddingContext {
    pub fn dim(&self) -> usize {
        self.host.len()
    }

    pub fn length(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<f64>] {
        &self.basis
    }

    pub fn host(&self) -> &[f64] {
        &self.host
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Max-norm distance of the basis Gram matrix from the identity.
    pub fn orthonormality_error(&self) -> f64 {
        gram_deviation(&self.basis)
    }
}

/// Correlation statistics `T(1), …, T(n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct DetectionStatistics(pub Vec<f64>);

impl DetectionStatistics {
    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gram_deviation(basis: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot(u, v) - want).abs());
        }
    }
    worst
}

/// Projects out `accepted` from `v` twice (classical Gram-Schmidt with one
/// re-orthogonalization pass) and normalizes. `None` if the residual is too
/// small to trust.
fn orthonormalize_against(mut v: Vec<f64>, accepted: &[Vec<f64>]) -> Option<Vec<f64>> {
    for _ in 0..2 {
        for u in accepted {
            let c = dot(&v, u);
            v.iter_mut().zip(u).for_each(|(x, y)| *x -= c * y);
        }
    }
    let norm = dot(&v, &v).sqrt();
    if norm < PIVOT_FLOOR {
        return None;
    }
    v.iter_mut().for_each(|x| *x /= norm);
    Some(v)
}

/// Seeded host signal of dimension `dim` and `length` orthonormal carriers.
pub fn make_context(dim: usize, length: usize, alpha: f64, seed: u64) -> Result<EmbeddingContext> {
    if length > dim {
        return Err(Error::DimensionTooSmall { dim, length });
    }
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidStrength(alpha));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<f64> {
        (0..dim).map(|_| StandardNormal.sample(rng)).collect()
    };

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(length);
    while basis.len() < length {
        if let Some(u) = orthonormalize_against(draw(&mut rng), &basis) {
            basis.push(u);
        }
    }
    if gram_deviation(&basis) > ORTHONORMAL_TOLERANCE {
        let mut again = Vec::with_capacity(length);
        for u in basis {
            let u =
                orthonormalize_against(u, &again).expect("nearly orthonormal input keeps its norm");
            again.push(u);
        }
        basis = again;
    }
    let host = draw(&mut rng);
    Ok(EmbeddingContext {
        basis,
        host,
        alpha,
        seed,
    })
}

/// `x + α Σ_i b_i u_i`.
pub fn embed(ctx: &EmbeddingContext, codeword: &Codeword) -> Result<Vec<f64>> {
    if codeword.len() != ctx.length() {
        return Err(Error::LengthMismatch {
            expected: ctx.length(),
            found: codeword.len(),
        });
    }
    if !codeword.is_binary() {
        return Err(Error::NotBinary);
    }
    let mut y = ctx.host.clone();
    for (u, &b) in ctx.basis.iter().zip(codeword.symbols()) {
        if b == 1 {
            y.iter_mut().zip(u).for_each(|(y, u)| *y += ctx.alpha * u);
        }
    }
    Ok(y)
}

/// Componentwise mean of the colluders' copies.
pub fn averaging_attack(signals: &[Vec<f64>]) -> Result<Vec<f64>> {
    let first = signals.first().ok_or(Error::NoSignals)?;
    let mut sum = vec![0.0; first.len()];
    for s in signals {
        if s.len() != sum.len() {
            return Err(Error::DimensionMismatch {
                expected: sum.len(),
                found: s.len(),
            });
        }
        sum.iter_mut().zip(s).for_each(|(a, b)| *a += b);
    }
    let t = signals.len() as f64;
    sum.iter_mut().for_each(|x| *x /= t);
    Ok(sum)
}

/// `T(i) = ⟨(y − x)/α, u_i⟩`.
pub fn correlate(ctx: &EmbeddingContext, y: &[f64]) -> Result<DetectionStatistics> {
    if y.len() != ctx.dim() {
        return Err(Error::DimensionMismatch {
            expected: ctx.dim(),
            found: y.len(),
        });
    }
    let residual: Vec<f64> = y
        .iter()
        .zip(&ctx.host)
        .map(|(y, x)| (y - x) / ctx.alpha)
        .collect();
    Ok(DetectionStatistics(
        ctx.basis.iter().map(|u| dot(&residual, u)).collect(),
    ))
}

/// `{1}` where `T ≥ 1 − eps`, `{0}` where `T ≤ eps`, `{0, 1}` in between.
///
/// `eps` must be below `1/(2t)` for the largest coalition size `t` of
/// interest; only `0 < eps < 1/2` is enforced here.
pub fn threshold(stats: &DetectionStatistics, eps: f64) -> Result<FeasibleSet> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::ThresholdOutOfRange(eps));
    }
    let positions = stats
        .0
        .iter()
        .map(|&t| {
            if t >= 1.0 - eps {
                SymbolSet::singleton(1)
            } else if t <= eps {
                SymbolSet::singleton(0)
            } else {
                [0, 1].into_iter().collect()
            }
        })
        .collect();
    FeasibleSet::new(positions)
}
