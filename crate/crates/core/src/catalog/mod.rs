//! The classification tables as executable data: parameterized families of
//! even algebras, odd subspaces and invariant function modules, with full
//! rule validation.
//!
//! Families come in four kinds: the general even families (l0–l3), the even
//! algebras admitting odd subspaces (s0_0–s0_3), the odd-subspace cases
//! (tiers 0–3, with a/b sub-cases where the module tables split a row), and
//! the module shapes (n0.0–n3.3).

mod aconst;
mod families;
pub mod grid;
mod info;
mod modules;

pub use aconst::{compute_a_constants, signed_a_constants};
pub use info::{list_families, FamilyInfo, FamilyKind};
pub use modules::case_1_4_module_with_constants;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bimodule::ExponentBlock;
use crate::quasipoly::{QuasiPoly, SuperFunction};
use crate::scalar::Scalar;
use crate::superop::SuperOperator;
use crate::verify::{self, SpanBasis, VerificationReport};

/// Identifier of one catalog entry.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
#[allow(non_camel_case_types)]
pub enum FamilyId {
    // general even families
    L0,
    L1,
    L2,
    L3,
    // even algebras that can carry a nonzero odd subspace
    S0_0,
    S0_1,
    S0_2,
    S0_3,
    // odd cases, one per classification row
    O0_1,
    O0_2,
    O1_1,
    O1_2,
    O1_3,
    O1_4,
    O2_1,
    O2_2,
    O2_3,
    O2_4,
    O2_5,
    O2_6,
    O2_7,
    O3_1,
    O3_2,
    O3_3,
    O3_4,
    O3_5,
    O3_6,
    // sub-cases distinguished by the module tables
    O0_2a,
    O0_2b,
    O1_2a,
    O1_2b,
    O2_2a,
    O2_2b,
    O3_4a,
    O3_4b,
    // function-module shapes
    N0_0,
    N0_1,
    N1_0,
    N1_1,
    N2_0,
    N2_1,
    N3_0,
    N3_1,
    N3_2,
    N3_3,
}

impl FamilyId {
    pub fn label(&self) -> &'static str {
        use FamilyId::*;
        match self {
            L0 => "l0",
            L1 => "l1",
            L2 => "l2",
            L3 => "l3",
            S0_0 => "s0_0",
            S0_1 => "s0_1",
            S0_2 => "s0_2",
            S0_3 => "s0_3",
            O0_1 => "0_1",
            O0_2 => "0_2",
            O0_2a => "0_2a",
            O0_2b => "0_2b",
            O1_1 => "1_1",
            O1_2 => "1_2",
            O1_2a => "1_2a",
            O1_2b => "1_2b",
            O1_3 => "1_3",
            O1_4 => "1_4",
            O2_1 => "2_1",
            O2_2 => "2_2",
            O2_2a => "2_2a",
            O2_2b => "2_2b",
            O2_3 => "2_3",
            O2_4 => "2_4",
            O2_5 => "2_5",
            O2_6 => "2_6",
            O2_7 => "2_7",
            O3_1 => "3_1",
            O3_2 => "3_2",
            O3_3 => "3_3",
            O3_4 => "3_4",
            O3_4a => "3_4a",
            O3_4b => "3_4b",
            O3_5 => "3_5",
            O3_6 => "3_6",
            N0_0 => "n0.0",
            N0_1 => "n0.1",
            N1_0 => "n1.0",
            N1_1 => "n1.1",
            N2_0 => "n2.0",
            N2_1 => "n2.1",
            N3_0 => "n3.0",
            N3_1 => "n3.1",
            N3_2 => "n3.2",
            N3_3 => "n3.3",
        }
    }

    pub fn all() -> Vec<FamilyId> {
        use FamilyId::*;
        vec![
            L0, L1, L2, L3, S0_0, S0_1, S0_2, S0_3, O0_1, O0_2, O0_2a, O0_2b, O1_1, O1_2, O1_2a,
            O1_2b, O1_3, O1_4, O2_1, O2_2, O2_2a, O2_2b, O2_3, O2_4, O2_5, O2_6, O2_7, O3_1, O3_2,
            O3_3, O3_4, O3_4a, O3_4b, O3_5, O3_6, N0_0, N0_1, N1_0, N1_1, N2_0, N2_1, N3_0, N3_1,
            N3_2, N3_3,
        ]
    }

    pub fn is_odd_case(&self) -> bool {
        self.label()
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_digit())
    }

    pub fn is_module(&self) -> bool {
        self.label().starts_with('n')
    }

    pub fn is_even_family(&self) -> bool {
        self.label().starts_with('l') || self.label().starts_with("s0")
    }

    /// Tier of the underlying even algebra (0–3), where applicable.
    pub fn tier(&self) -> Option<u8> {
        let l = self.label();
        let c = if l.starts_with("s0_") {
            l.chars().nth(3)
        } else if let Some(stripped) = l.strip_prefix('l').or_else(|| l.strip_prefix('n')) {
            stripped.chars().next()
        } else {
            l.chars().next()
        };
        c.and_then(|c| c.to_digit(10)).map(|d| d as u8)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl FromStr for FamilyId {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::all()
            .into_iter()
            .find(|f| f.label() == s)
            .ok_or_else(|| CatalogError::UnknownFamily(s.to_string()))
    }
}

impl Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for FamilyId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug)]
pub enum CatalogError {
    UnknownFamily(String),
    InvalidParams {
        family: FamilyId,
        violations: Vec<String>,
    },
    /// Construction is impossible with the given data (missing pieces,
    /// dependent user-supplied functions, exactness obstructions).
    Unbuildable {
        family: FamilyId,
        reason: String,
    },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownFamily(s) => write!(f, "unknown family: {s}"),
            CatalogError::InvalidParams { family, violations } => {
                write!(
                    f,
                    "invalid parameters for {family}: {}",
                    violations.join("; ")
                )
            }
            CatalogError::Unbuildable { family, reason } => {
                write!(f, "cannot build {family}: {reason}")
            }
        }
    }
}

impl std::error::Error for CatalogError {}

/// One exponent of the even function set Σ: generators z^l e^{σz}, l ≤ top.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SigmaBlock {
    pub exponent: Scalar,
    pub top: i64,
}

/// User-supplied even generator g(z)θ∂θ + h(z).
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct EvenFunctionEntry {
    pub theta_dtheta: QuasiPoly,
    pub scalar: QuasiPoly,
}

/// User-supplied odd generator θφ(z)∂z + χ(z)∂θ + ω(z)θ.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct OddFunctionEntry {
    pub theta_dz: QuasiPoly,
    pub dtheta: QuasiPoly,
    pub theta: QuasiPoly,
}

/// User-supplied module function f(z) + g(z)θ.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct ModuleFunctionEntry {
    pub even: QuasiPoly,
    pub odd: QuasiPoly,
}

/// Selection of the invariant module where a family admits several shapes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleChoice {
    /// One of the named shapes n0.0 … n3.3.
    Label { name: String },
    /// The one-dimensional module ⟨1⟩.
    SpanOne,
    /// The one-dimensional module ⟨1 + θ⟩.
    SpanOnePlusTheta,
}

/// All table parameters in one bag. Families read the fields they use and
/// validation rejects what their rules forbid; unused fields are ignored.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ParamSet {
    pub alpha: Option<Scalar>,
    pub beta: Option<Scalar>,
    pub gamma: Option<Scalar>,
    pub delta: Option<Scalar>,
    /// The distinguished nonzero constant of the single-exponent bimodules.
    pub c: Option<Scalar>,
    /// ε ∈ {0,1}: presence of the θ∂θ-type generator.
    pub eps: Option<u8>,
    /// ε̂ ∈ {0,1}.
    pub eps_hat: Option<u8>,
    /// ε̃ ∈ {0,1}: presence of the extra module function.
    pub eps_tilde: Option<u8>,
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub r: Option<i64>,
    pub s: Option<i64>,
    pub p: Option<i64>,
    pub q: Option<i64>,
    pub t: Option<i64>,
    /// Exponent set M with per-exponent (m_μ, n_μ, r_μ, seeds).
    pub exponents_m: Vec<ExponentBlock>,
    /// Exponent set Σ with per-exponent s_σ.
    pub exponents_sigma: Vec<SigmaBlock>,
    /// Exponent set N with per-exponent (p_ν, q_ν, t_ν, seeds).
    pub exponents_n: Vec<ExponentBlock>,
    /// 1 ∈ the even algebra (where optional).
    pub with_one: bool,
    /// θ ∈ the odd subspace (where optional).
    pub with_theta: bool,
    /// Presence of the optional θ·vector-field block (cases 3_2, 3_4).
    pub with_vector_part: bool,
    pub even_functions: Vec<EvenFunctionEntry>,
    pub odd_functions: Vec<OddFunctionEntry>,
    pub module_functions: Vec<ModuleFunctionEntry>,
    pub module: Option<ModuleChoice>,
}

impl ParamSet {
    pub(crate) fn alpha(&self) -> Scalar {
        self.alpha.clone().unwrap_or_else(Scalar::zero)
    }
    pub(crate) fn beta(&self) -> Scalar {
        self.beta.clone().unwrap_or_else(Scalar::zero)
    }
    pub(crate) fn gamma(&self) -> Scalar {
        self.gamma.clone().unwrap_or_else(Scalar::zero)
    }
    pub(crate) fn delta(&self) -> Scalar {
        self.delta.clone().unwrap_or_else(Scalar::zero)
    }
    pub(crate) fn c(&self) -> Scalar {
        self.c.clone().unwrap_or_else(Scalar::one)
    }
    pub(crate) fn eps(&self) -> u8 {
        self.eps.unwrap_or(0)
    }
    pub(crate) fn eps_hat(&self) -> u8 {
        self.eps_hat.unwrap_or(0)
    }
    pub(crate) fn eps_tilde(&self) -> u8 {
        self.eps_tilde.unwrap_or(0)
    }
    pub(crate) fn m(&self) -> i64 {
        self.m.unwrap_or(-1)
    }
    pub(crate) fn n(&self) -> i64 {
        self.n.unwrap_or(-1)
    }
    pub(crate) fn r(&self) -> i64 {
        self.r.unwrap_or(0)
    }
    pub(crate) fn s(&self) -> i64 {
        self.s.unwrap_or(-1)
    }
    pub(crate) fn p(&self) -> i64 {
        self.p.unwrap_or(-1)
    }
    pub(crate) fn q(&self) -> i64 {
        self.q.unwrap_or(-1)
    }
    pub(crate) fn t(&self) -> i64 {
        self.t.unwrap_or(0)
    }

    /// m_μ at exponent 0 in M, with the −1 convention.
    pub(crate) fn m_zero(&self) -> i64 {
        self.exponents_m
            .iter()
            .find(|b| b.exponent.is_zero())
            .map(|b| b.top1)
            .unwrap_or(-1)
    }

    /// s_σ at exponent 0 in Σ, with the −1 convention.
    pub(crate) fn s_zero(&self) -> i64 {
        self.exponents_sigma
            .iter()
            .find(|b| b.exponent.is_zero())
            .map(|b| b.top)
            .unwrap_or(-1)
    }
}

/// A generator set drawn from the catalog.
#[derive(Clone, Debug, Serialize)]
pub struct SuperalgebraInstance {
    pub family: FamilyId,
    pub params: ParamSet,
    pub even_gens: Vec<SuperOperator>,
    pub odd_gens: Vec<SuperOperator>,
}

impl SuperalgebraInstance {
    pub fn check_closure(&self) -> VerificationReport {
        verify::check_graded_closure(self.family.label(), &self.even_gens, &self.odd_gens)
    }

    pub fn check_module(&self, module: &FunctionModule) -> VerificationReport {
        verify::check_module_invariance(
            &format!("{} on {}", self.family.label(), module.label),
            &self.even_gens,
            &self.odd_gens,
            &module.basis,
        )
    }

    /// Generators in CLI index order: even first, then odd.
    pub fn all_gens(&self) -> Vec<SuperOperator> {
        self.even_gens
            .iter()
            .chain(self.odd_gens.iter())
            .cloned()
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.even_gens.len() + self.odd_gens.len()
    }
}

/// A finite module of Λ¹-valued functions with an exactly independent basis.
#[derive(Clone, Debug, Serialize)]
pub struct FunctionModule {
    pub family: FamilyId,
    pub label: String,
    pub basis: Vec<SuperFunction>,
}

impl FunctionModule {
    pub(crate) fn new(
        family: FamilyId,
        label: impl Into<String>,
        basis: Vec<SuperFunction>,
    ) -> Result<Self, CatalogError> {
        let (span, kept) = SpanBasis::spanning(&basis);
        if span.rank() == 0 {
            return Err(CatalogError::Unbuildable {
                family,
                reason: "module basis is empty".into(),
            });
        }
        let basis = kept.into_iter().map(|i| basis[i].clone()).collect();
        Ok(FunctionModule {
            family,
            label: label.into(),
            basis,
        })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Checks the family's table rules against the parameters. Empty = valid.
pub fn validate_params(family: FamilyId, params: &ParamSet) -> Vec<String> {
    families::validate(family, params)
}

/// Builds the generator set after validating the table rules.
pub fn instantiate(
    family: FamilyId,
    params: &ParamSet,
) -> Result<SuperalgebraInstance, CatalogError> {
    let violations = validate_params(family, params);
    if !violations.is_empty() {
        return Err(CatalogError::InvalidParams { family, violations });
    }
    instantiate_unchecked(family, params)
}

/// Builds the generator set without rule validation. Structural problems
/// that make construction impossible still error. Used to probe how rule
/// violations break closure.
pub fn instantiate_unchecked(
    family: FamilyId,
    params: &ParamSet,
) -> Result<SuperalgebraInstance, CatalogError> {
    let (even, odd) = families::build(family, params)?;
    // keep an independent generator basis; optional blocks may overlap
    let (even_span, kept_e) =
        SpanBasis::spanning(&even.iter().map(|g| g.to_general()).collect::<Vec<_>>());
    let (_odd_span, kept_o) =
        SpanBasis::spanning(&odd.iter().map(|g| g.to_general()).collect::<Vec<_>>());
    drop(even_span);
    let even_gens: Vec<SuperOperator> = kept_e.into_iter().map(|i| even[i].clone()).collect();
    let odd_gens: Vec<SuperOperator> = kept_o.into_iter().map(|i| odd[i].clone()).collect();
    Ok(SuperalgebraInstance {
        family,
        params: params.clone(),
        even_gens,
        odd_gens,
    })
}

/// Builds the invariant function module attached to the family: the bare
/// shapes for module ids, the per-case module for odd-case ids.
pub fn instantiate_module(
    family: FamilyId,
    params: &ParamSet,
) -> Result<FunctionModule, CatalogError> {
    modules::build(family, params, true)
}

/// Same as [`instantiate_module`] but without rule validation.
pub fn instantiate_module_unchecked(
    family: FamilyId,
    params: &ParamSet,
) -> Result<FunctionModule, CatalogError> {
    modules::build(family, params, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superop::Grade;

    fn scalar(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    fn s0_3_params() -> ParamSet {
        ParamSet {
            alpha: Some(Scalar::zero()),
            beta: Some(Scalar::zero()),
            gamma: Some(Scalar::zero()),
            eps: Some(1),
            with_one: true,
            ..ParamSet::default()
        }
    }

    #[test]
    fn s0_3_generators() {
        // α = β = γ = 0, ε = 1, 1 present: {∂z, z∂z, z²∂z, θ∂θ, 1}
        let inst = instantiate(FamilyId::S0_3, &s0_3_params()).unwrap();
        assert_eq!(inst.even_gens.len(), 5);
        assert!(inst.odd_gens.is_empty());
        let rendered: Vec<String> = inst.even_gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(rendered[0], "∂z");
        assert_eq!(rendered[1], "z·∂z");
        assert_eq!(rendered[2], "z^2·∂z");
        assert_eq!(rendered[3], "θ·∂θ");
        assert_eq!(rendered[4], "1");
        assert!(inst.check_closure().passed);
    }

    #[test]
    fn case_1_4_minimal() {
        // no θ generators: the odd subspace is just θ∂z+∂θ
        let inst = instantiate(FamilyId::O1_4, &ParamSet::default()).unwrap();
        assert_eq!(inst.odd_gens.len(), 1);
        assert_eq!(inst.odd_gens[0].to_string(), "∂θ + θ·∂z");
        assert!(inst.check_closure().passed);
    }

    #[test]
    fn case_3_5_standard_form() {
        // ε = 1, 2α = 1, β = γ = 0: odd part {θz∂z, θ∂z, z∂θ, ∂θ}
        let params = ParamSet {
            alpha: Some(scalar("1/2")),
            beta: Some(Scalar::zero()),
            gamma: Some(Scalar::zero()),
            eps: Some(1),
            ..ParamSet::default()
        };
        let inst = instantiate(FamilyId::O3_5, &params).unwrap();
        assert_eq!(inst.odd_gens.len(), 4);
        let rendered: Vec<String> = inst.odd_gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(rendered, vec!["θ·z·∂z", "θ·∂z", "z·∂θ", "∂θ"]);
        for g in &inst.odd_gens {
            assert_eq!(g.to_general().grade(), Grade::Odd);
        }
        let report = inst.check_closure();
        assert!(report.passed, "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn rule_violations_reported() {
        // 3_3 wants 2α = m
        let good = ParamSet {
            alpha: Some(Scalar::one()),
            beta: Some(Scalar::zero()),
            m: Some(2),
            ..ParamSet::default()
        };
        assert!(validate_params(FamilyId::O3_3, &good).is_empty());
        let bad = ParamSet {
            m: Some(1),
            ..good.clone()
        };
        assert!(!validate_params(FamilyId::O3_3, &bad).is_empty());
        // 2_2b with ε̂ = 1 forbids ε = 1
        let bad = ParamSet {
            eps: Some(1),
            eps_hat: Some(1),
            s: Some(0),
            p: Some(0),
            q: Some(0),
            ..ParamSet::default()
        };
        let v = validate_params(FamilyId::O2_2b, &bad);
        assert!(v.iter().any(|m| m.contains("ε̂ = 1")), "{v:?}");
    }

    #[test]
    fn module_examples() {
        // n3.1 with p = 2, β = -1: {1, z, z²}
        let params = ParamSet {
            alpha: Some(Scalar::zero()),
            beta: Some(Scalar::from_int(-1)),
            p: Some(2),
            ..ParamSet::default()
        };
        let m = instantiate_module(FamilyId::N3_1, &params).unwrap();
        assert_eq!(m.dimension(), 3);
        assert!(m.basis.iter().all(|f| f.odd.is_zero()));
        // n2.1 with p = 1, q = 0: {1, z, θ}
        let params = ParamSet {
            eps: Some(1),
            p: Some(1),
            q: Some(0),
            ..ParamSet::default()
        };
        let m = instantiate_module(FamilyId::N2_1, &params).unwrap();
        assert_eq!(m.dimension(), 3);
    }

    #[test]
    fn case_1_4_module_is_invariant() {
        use crate::bimodule::ExponentBlock;
        // ν = 1, p = q = 0, two mixed functions
        let params = ParamSet {
            exponents_n: vec![ExponentBlock {
                exponent: Scalar::one(),
                top1: 0,
                top2: 0,
                mixed: 2,
                seeds: vec![],
            }],
            ..ParamSet::default()
        };
        let inst = instantiate(FamilyId::O1_4, &params).unwrap();
        let module = instantiate_module(FamilyId::O1_4, &params).unwrap();
        assert_eq!(module.dimension(), 4);
        let report = inst.check_module(&module);
        assert!(report.passed, "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn generator_counts_match_dimension_formulas() {
        // case 3_2 with the vector block: (m+1) + 1 + (m+2) odd generators
        for m in 0..=2i64 {
            let params = ParamSet {
                alpha: Some(Scalar::rational(-m, 2)),
                beta: Some(Scalar::rational(1, 2)),
                m: Some(m),
                with_vector_part: true,
                ..ParamSet::default()
            };
            let inst = instantiate(FamilyId::O3_2, &params).unwrap();
            assert_eq!(inst.odd_gens.len() as i64, (m + 1) + 1 + (m + 2));
        }
        // case 3_5: four odd generators with ε = 1, two with ε = 0
        let mut params = ParamSet {
            alpha: Some(scalar("1/2")),
            eps: Some(1),
            ..ParamSet::default()
        };
        assert_eq!(
            instantiate(FamilyId::O3_5, &params).unwrap().odd_gens.len(),
            4
        );
        params.eps = Some(0);
        assert_eq!(
            instantiate(FamilyId::O3_5, &params).unwrap().odd_gens.len(),
            2
        );
    }

    #[test]
    fn listing_counts() {
        let all = list_families();
        assert_eq!(all.len(), 45);
        let odd_rows: std::collections::BTreeSet<(&str, Option<u8>)> = all
            .iter()
            .filter(|f| matches!(f.kind, FamilyKind::Odd))
            .map(|f| (f.row, f.tier))
            .collect();
        // 2 + 4 + 7 + 6 classification rows
        assert_eq!(odd_rows.len(), 19);
        let modules = all
            .iter()
            .filter(|f| matches!(f.kind, FamilyKind::Module))
            .count();
        assert_eq!(modules, 10);
        // the 3_5 entry carries its defining rule text
        let r35 = all.iter().find(|f| f.label == "3_5").unwrap();
        assert!(r35.rules.contains("2α = 1"));
        assert!(r35.rules.contains("γ = -2β"));
    }

    #[test]
    fn a_constants_first_ten() {
        let a = compute_a_constants(10);
        let want: Vec<Scalar> = [
            (1i64, 1i64),
            (1, 2),
            (1, 8),
            (1, 16),
            (5, 128),
            (7, 256),
            (21, 1024),
            (33, 2048),
            (429, 32768),
            (715, 65536),
        ]
        .iter()
        .map(|(n, d)| Scalar::rational(*n, *d))
        .collect();
        assert_eq!(a, want);
    }
}
