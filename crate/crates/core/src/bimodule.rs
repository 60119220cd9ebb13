//! Translation bimodules: finite-dimensional ∂z-invariant subspaces of
//! ⟨v₁, v₂⟩-valued quasi-polynomials, assembled per exponent from a pure-v₁
//! block, a pure-v₂ block, and a tail of mixed vectors whose coefficients
//! come from an exact factorial formula.
//!
//! The abstract basis (v₁, v₂) is instantiated by the caller: (θ∂θ, 1) for
//! the even catalog, (θ∂z, θ) or (∂θ, θ) for odd subspaces and (1, θ) for
//! function modules.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::quasipoly::QuasiPoly;
use crate::scalar::Scalar;
use crate::verify::SpanBasis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BimoduleError {
    /// k exceeds the supplied seed count.
    BadIndex { k: usize, seeds: usize },
    /// Parameter combination outside the formula's domain.
    BadParams(String),
}

impl fmt::Display for BimoduleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BimoduleError::BadIndex { k, seeds } => {
                write!(f, "mixed coefficient index {k} exceeds seed count {seeds}")
            }
            BimoduleError::BadParams(msg) => write!(f, "invalid bimodule parameters: {msg}"),
        }
    }
}

impl std::error::Error for BimoduleError {}

/// Parameters of one exponent block: top degrees of the two pure parts
/// (−1 = block absent), the number of mixed vectors, and their seeds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentBlock {
    pub exponent: Scalar,
    /// Top degree of the pure-v₁ part; −1 when absent.
    pub top1: i64,
    /// Top degree of the pure-v₂ part; −1 when absent.
    pub top2: i64,
    /// Number of mixed vectors.
    #[serde(default)]
    pub mixed: i64,
    /// Mixed seeds c^{μ,1..r}; the first must be nonzero when mixed ≥ 1.
    #[serde(default)]
    pub seeds: Vec<Scalar>,
}

impl ExponentBlock {
    pub fn pure(exponent: Scalar, top1: i64, top2: i64) -> Self {
        ExponentBlock {
            exponent,
            top1,
            top2,
            mixed: 0,
            seeds: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), BimoduleError> {
        if self.top1 < -1 || self.top2 < -1 || self.mixed < 0 {
            return Err(BimoduleError::BadParams(
                "indices below their conventions".into(),
            ));
        }
        if self.mixed >= 1 {
            if (self.seeds.len() as i64) < self.mixed {
                return Err(BimoduleError::BadIndex {
                    k: self.mixed as usize,
                    seeds: self.seeds.len(),
                });
            }
            if self.seeds[0].is_zero() {
                return Err(BimoduleError::BadParams(
                    "first mixed seed must be nonzero".into(),
                ));
            }
            // Mixed vectors with no pure-v₁ block but a nonempty v₂ block
            // fall outside the coefficient formula's stated domain.
            if self.top1 == -1 && self.top2 >= 0 {
                return Err(BimoduleError::BadParams(
                    "mixed vectors require a pure-v1 block when a v2 block is present".into(),
                ));
            }
        }
        Ok(())
    }

    /// Number of generators this block contributes.
    pub fn generator_count(&self) -> i64 {
        (self.top1 + 1) + (self.top2 + 1) + self.mixed
    }
}

/// Parameters of a whole bimodule: a finite set of exponents with one block
/// each.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct BimoduleParams {
    pub blocks: Vec<ExponentBlock>,
}

impl BimoduleParams {
    pub fn validate(&self) -> Result<(), BimoduleError> {
        for (i, b) in self.blocks.iter().enumerate() {
            b.validate().map_err(|e| match e {
                BimoduleError::BadParams(msg) => {
                    BimoduleError::BadParams(format!("block {i}: {msg}"))
                }
                other => other,
            })?;
        }
        for (i, b) in self.blocks.iter().enumerate() {
            for other in &self.blocks[i + 1..] {
                if b.exponent == other.exponent {
                    return Err(BimoduleError::BadParams("duplicate exponent".into()));
                }
            }
        }
        Ok(())
    }

    /// The single-exponent family at μ = 0 with seeds (c, 0, …, 0).
    pub fn single_zero(top1: i64, top2: i64, mixed: i64, c: Scalar) -> Self {
        let mut seeds = vec![Scalar::zero(); mixed.max(0) as usize];
        if !seeds.is_empty() {
            seeds[0] = c;
        }
        BimoduleParams {
            blocks: vec![ExponentBlock {
                exponent: Scalar::zero(),
                top1,
                top2,
                mixed,
                seeds,
            }],
        }
    }
}

fn factorial(n: i64) -> BigRational {
    assert!(n >= 0, "factorial of negative argument");
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// Coefficients of the k-th mixed vector: for j = 1..k
///   c_j = (m+k)!·(n+1)! / ((n+j)!·(m+k−j+1)!) · seed[k−j+1].
///
/// With −1 ≤ m, n and 1 ≤ j ≤ k every factorial argument is nonnegative.
pub fn mixed_coefficients(
    m: i64,
    n: i64,
    k: usize,
    seeds: &[Scalar],
) -> Result<Vec<Scalar>, BimoduleError> {
    if k == 0 {
        return Err(BimoduleError::BadParams(
            "mixed index k must be at least 1".into(),
        ));
    }
    if seeds.len() < k {
        return Err(BimoduleError::BadIndex {
            k,
            seeds: seeds.len(),
        });
    }
    if m < -1 || n < -1 {
        return Err(BimoduleError::BadParams("degrees below -1".into()));
    }
    let k_i = k as i64;
    let mut out = Vec::with_capacity(k);
    for j in 1..=k_i {
        let num = factorial(m + k_i) * factorial(n + 1);
        let den = factorial(n + j) * factorial(m + k_i - j + 1);
        let ratio = Scalar::new(num / den, BigRational::from_integer(0.into()));
        out.push(&ratio * &seeds[(k_i - j) as usize]);
    }
    Ok(out)
}

/// One generator, as its components over the abstract basis: value is
/// `v1_part·v₁ + v2_part·v₂`.
pub type BimoduleVector = (QuasiPoly, QuasiPoly);

/// Generators of the bimodule: per exponent μ, the pure blocks
/// z^k e^{μz} v₁ (k ≤ top1) and z^k e^{μz} v₂ (k ≤ top2), then mixed vectors
///   z^{top1+k} v₁ + z^{top2} Σ_j c_j z^j v₂ (times e^{μz}), k = 1..mixed.
pub fn build_translation_bimodule(
    params: &BimoduleParams,
) -> Result<Vec<BimoduleVector>, BimoduleError> {
    params.validate()?;
    let mut out = Vec::new();
    for block in &params.blocks {
        let mu = &block.exponent;
        for k in 0..=block.top1 {
            out.push((
                QuasiPoly::monomial(Scalar::one(), k as usize, mu.clone()),
                QuasiPoly::zero(),
            ));
        }
        for k in 0..=block.top2 {
            out.push((
                QuasiPoly::zero(),
                QuasiPoly::monomial(Scalar::one(), k as usize, mu.clone()),
            ));
        }
        for k in 1..=block.mixed {
            let coeffs = mixed_coefficients(block.top1, block.top2, k as usize, &block.seeds)?;
            let v1 = QuasiPoly::monomial(Scalar::one(), (block.top1 + k) as usize, mu.clone());
            let mut v2 = QuasiPoly::zero();
            for (j, c) in (1..=k).zip(&coeffs) {
                v2 = v2.add(&QuasiPoly::monomial(
                    c.clone(),
                    (block.top2 + j) as usize,
                    mu.clone(),
                ));
            }
            out.push((v1, v2));
        }
    }
    Ok(out)
}

/// True iff d/dz maps the span of the generators into itself (exact span
/// membership componentwise). The empty set is invariant.
pub fn check_translation_invariance(generators: &[BimoduleVector]) -> bool {
    let (span, _) = SpanBasis::spanning(generators);
    generators
        .iter()
        .all(|(a, b)| span.contains(&(a.derive(), b.derive())))
}
