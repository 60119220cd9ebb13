//! Construction and validation of the invariant function modules: the bare
//! shapes n0.0 … n3.3 and the per-case modules of the odd families,
//! including the case-1_4 exponential modules whose mixed coefficients are
//! fixed universal constants.

use crate::bimodule::{build_translation_bimodule, BimoduleParams, ExponentBlock};
use crate::quasipoly::{QuasiPoly, SuperFunction};
use crate::scalar::Scalar;
use crate::superop::SuperOperator;
use crate::verify;

use super::aconst::signed_a_constants;
use super::families;
use super::{CatalogError, FamilyId, FunctionModule, ModuleChoice, ParamSet};

fn sc(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn zmono(k: i64) -> QuasiPoly {
    QuasiPoly::z_pow(k as usize)
}

/// z^j (j ≤ p) and z^kθ (k ≤ q).
fn monomial_basis(p: i64, q: i64) -> Vec<SuperFunction> {
    let mut basis = Vec::new();
    for j in 0..=p {
        basis.push(SuperFunction::scalar(zmono(j)));
    }
    for k in 0..=q {
        basis.push(SuperFunction::theta_part(zmono(k)));
    }
    basis
}

fn bimodule_basis(
    family: FamilyId,
    blocks: &[ExponentBlock],
) -> Result<Vec<SuperFunction>, CatalogError> {
    let params = BimoduleParams {
        blocks: blocks.to_vec(),
    };
    let vectors = build_translation_bimodule(&params).map_err(|e| CatalogError::Unbuildable {
        family,
        reason: e.to_string(),
    })?;
    Ok(vectors
        .into_iter()
        .map(|(x, y)| SuperFunction::new(x, y))
        .collect())
}

/// The factorial ratio (q+l)!/(q+1)! for l ≥ 1, valid for q ≥ −1.
fn rising_ratio(q: i64, l: i64) -> Scalar {
    let mut acc = Scalar::one();
    for j in (q + 2)..=(q + l) {
        acc = &acc * &sc(j);
    }
    acc
}

/// Mixed seeds of a case-1_4 exponential block: c^{ν,l} = (q+l)!/(q+1)! ·
/// ν^{3/2−l} · a_l with the signed universal constants.
fn case_1_4_seeds(
    family: FamilyId,
    nu: &Scalar,
    q: i64,
    count: i64,
    a: &[Scalar],
) -> Result<Vec<Scalar>, CatalogError> {
    let root = nu.sqrt().ok_or_else(|| CatalogError::Unbuildable {
        family,
        reason: format!(
            "exponent {nu} has no Gaussian-rational square root; pick a perfect-square exponent"
        ),
    })?;
    let mut seeds = Vec::with_capacity(count as usize);
    for l in 1..=count {
        // ν^{3/2-l} = √ν · ν^{1-l}
        let power = &root * &nu.pow(1 - l);
        let a_l = a
            .get((l - 1) as usize)
            .cloned()
            .unwrap_or_else(Scalar::zero);
        seeds.push(&(&rising_ratio(q, l) * &power) * &a_l);
    }
    Ok(seeds)
}

/// The case-1_4 module over N with explicit universal constants; exposed so
/// perturbed constants can be probed for invariance failure.
pub fn case_1_4_module_with_constants(
    params: &ParamSet,
    a: &[Scalar],
) -> Result<FunctionModule, CatalogError> {
    let family = FamilyId::O1_4;
    let mut blocks = Vec::new();
    for b in &params.exponents_n {
        if b.exponent.is_zero() {
            blocks.push(ExponentBlock {
                exponent: b.exponent.clone(),
                top1: b.top1,
                top2: b.top2,
                mixed: 0,
                seeds: vec![],
            });
        } else {
            let seeds = case_1_4_seeds(family, &b.exponent, b.top2, b.mixed, a)?;
            blocks.push(ExponentBlock {
                exponent: b.exponent.clone(),
                top1: b.top1,
                top2: b.top2,
                mixed: b.mixed,
                seeds,
            });
        }
    }
    let basis = bimodule_basis(family, &blocks)?;
    FunctionModule::new(family, "n1.0 (fixed mixed constants)", basis)
}

// --------------------------------------------------------------- validation

fn eq(a: &Scalar, b: &Scalar) -> bool {
    a == b
}

fn two(s: &Scalar) -> Scalar {
    &sc(2) * s
}

/// Table rules of the bare module shapes.
pub(super) fn validate_bare_module(family: FamilyId, p: &ParamSet, v: &mut Vec<String>) {
    use FamilyId::*;
    match family {
        N0_0 => {
            if p.eps() != 0 || !p.alpha().is_zero() {
                v.push("ε = α = 0 required".into());
            }
            if p.module_functions.is_empty() {
                v.push("at least one module function is required".into());
            }
        }
        N0_1 => {
            if p.eps() != 1 {
                v.push("ε = 1 required".into());
            }
            if p.module_functions.is_empty() {
                v.push("at least one module function is required".into());
            }
        }
        N1_0 => {
            if p.eps() != 0 || !p.alpha().is_zero() {
                v.push("ε = α = 0 required".into());
            }
            let bim = BimoduleParams {
                blocks: p.exponents_n.clone(),
            };
            if let Err(e) = bim.validate() {
                v.push(e.to_string());
            }
        }
        N1_1 => {
            if p.eps() != 1 {
                v.push("ε = 1 required".into());
            }
            for b in &p.exponents_n {
                if b.mixed != 0 {
                    v.push("mixed functions are not allowed in this shape".into());
                }
            }
        }
        N2_0 => {
            if p.eps() != 0 {
                v.push("ε = 0 required".into());
            }
            if p.t() >= 1 {
                if !eq(&p.alpha(), &sc(p.p() - p.q())) {
                    v.push("α = p - q required when mixed functions are present".into());
                }
                if p.c().is_zero() {
                    v.push("c must be nonzero".into());
                }
                if p.p() == -1 && p.q() >= 0 {
                    v.push("mixed functions require a scalar block".into());
                }
            }
        }
        N2_1 => {
            if p.eps() != 1 {
                v.push("ε = 1 required".into());
            }
            if p.p() < 0 && p.q() < 0 {
                v.push("the module must be nonzero (p ≥ 0 or q ≥ 0)".into());
            }
        }
        N3_0 => {
            if p.eps() != 0 || !p.alpha().is_zero() {
                v.push("ε = α = 0 required".into());
            }
            if p.p() < 0 {
                v.push("p ≥ 0 required".into());
            }
            if !eq(&two(&p.beta()), &sc(-p.p())) {
                v.push("2β = -p required".into());
            }
            if p.c().is_zero() {
                v.push("c must be nonzero".into());
            }
        }
        N3_1 => {
            if p.p() < 0 {
                v.push("p ≥ 0 required".into());
            }
            if !eq(&two(&p.beta()), &sc(-p.p())) {
                v.push("2β = -p required".into());
            }
        }
        N3_2 => {
            if p.q() < 0 {
                v.push("q ≥ 0 required".into());
            }
            if !eq(&two(&(&p.alpha() + &p.beta())), &sc(-p.q())) {
                v.push("2(α+β) = -q required".into());
            }
        }
        N3_3 => {
            if p.p() < 0 || p.q() < 0 {
                v.push("p ≥ 0 and q ≥ 0 required".into());
            }
            if !eq(&two(&p.beta()), &sc(-p.p())) {
                v.push("2β = -p required".into());
            }
            if !eq(&two(&(&p.alpha() + &p.beta())), &sc(-p.q())) {
                v.push("2(α+β) = -q required".into());
            }
        }
        _ => unreachable!("not a module family"),
    }
}

/// N blocks must have matching degrees p_ν = q_ν.
fn require_balanced_n(p: &ParamSet, v: &mut Vec<String>) {
    for b in &p.exponents_n {
        if b.top1 != b.top2 {
            v.push(format!("p_ν = q_ν required at ν = {}", b.exponent));
        }
    }
}

fn require_pure_n(p: &ParamSet, v: &mut Vec<String>) {
    for b in &p.exponents_n {
        if b.mixed != 0 {
            v.push(format!("no mixed functions allowed at ν = {}", b.exponent));
        }
    }
}

/// Rules of the module rows attached to the odd cases.
fn joint_module_rules(family: FamilyId, p: &ParamSet) -> Vec<String> {
    use FamilyId::*;
    let mut v = Vec::new();
    // the even algebra must be able to carry a module at all
    let even = families::even_part_for_tier(family.tier().unwrap_or(0), p);
    if !verify::admits_finite_module(&even) {
        v.push("the even algebra's abelian part escapes ⟨θ∂θ, 1⟩; no finite module exists".into());
    }
    match family {
        O0_1 | O0_2a => {
            if p.module_functions.is_empty() {
                v.push("at least one module function is required".into());
            }
            if p.eps() == 0 && !p.alpha().is_zero() {
                v.push("α = 0 required when ε = 0".into());
            }
        }
        O0_2b => {
            if p.module_functions.is_empty() {
                v.push("at least one module function is required".into());
            }
            if !p.with_one {
                v.push("1 must be an even generator".into());
            }
            if p.eps_hat() == 0 && p.eps() != 0 {
                v.push("ε = 0 required when ε̂ = 0".into());
            }
        }
        O1_1 | O1_2a => {
            if p.eps() == 1 {
                require_pure_n(p, &mut v);
            } else if !p.alpha().is_zero() {
                v.push("α = 0 required when ε = 0".into());
            }
        }
        O1_2b => {
            if p.s_zero() < 0 {
                v.push("1 must be an even generator (0 ∈ Σ)".into());
            }
            require_balanced_n(p, &mut v);
            if p.eps_hat() == 1 {
                for b in &p.exponents_n {
                    for (i, s) in b.seeds.iter().enumerate() {
                        let want = if i == 0 {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        };
                        if s != &want {
                            v.push("mixed seeds are fixed to c¹ = 1, others 0".into());
                        }
                    }
                }
            } else {
                require_pure_n(p, &mut v);
            }
        }
        O1_3 => {
            require_balanced_n(p, &mut v);
            require_pure_n(p, &mut v);
            let theta_in_s1 = p.m_zero() >= 0;
            if theta_in_s1 && (p.s_zero() < 0 || p.eps_tilde() == 1) {
                v.push("θ in the odd subspace requires 1 in the even algebra and ε̃ = 0".into());
            }
            if p.eps_hat() == 1 && (p.s_zero() < 0 || p.eps() != 0) {
                v.push("ε̂ = 1 requires 1 in the even algebra and ε = 0".into());
            }
        }
        O1_4 => {
            let theta_in_s1 = p.m_zero() >= 0;
            if theta_in_s1 {
                if p.s_zero() < 0 {
                    v.push("θ in the odd subspace requires 1 in the even algebra".into());
                }
                require_balanced_n(p, &mut v);
                require_pure_n(p, &mut v);
            } else {
                for b in &p.exponents_n {
                    if b.exponent.is_zero() {
                        if b.mixed != 0 {
                            v.push("t₀ = 0 required".into());
                        }
                        if b.top1 != b.top2 && b.top1 != b.top2 + 1 {
                            v.push("p₀ must be q₀ or q₀+1".into());
                        }
                    } else {
                        if b.top1 != b.top2 {
                            v.push(format!("p_ν = q_ν required at ν = {}", b.exponent));
                        }
                        if !b.seeds.is_empty() {
                            v.push(format!(
                                "mixed seeds at ν = {} are determined; leave them empty",
                                b.exponent
                            ));
                        }
                    }
                }
            }
        }
        O2_1 | O2_2a => {
            if p.eps() == 0 {
                if p.t() >= 1 && !eq(&p.alpha(), &sc(p.p() - p.q())) {
                    v.push("α = p - q required when mixed functions are present".into());
                }
            } else if p.t() >= 1 {
                v.push("mixed functions are not allowed when ε = 1".into());
            }
        }
        O2_2b => {
            if p.s() < 0 {
                v.push("1 must be an even generator (s ≥ 0)".into());
            }
            if p.p() != p.q() {
                v.push("p = q required".into());
            }
            if p.eps_hat() == 1 && !eq(&p.c(), &Scalar::one()) {
                v.push("c = 1 required".into());
            }
        }
        O2_3 => {
            if p.p() != p.q() {
                v.push("p = q required".into());
            }
            let theta_in_s1 = p.m() >= 0;
            if theta_in_s1 && (p.s() < 0 || p.eps_tilde() == 1) {
                v.push("θ in the odd subspace requires 1 in the even algebra and ε̃ = 0".into());
            }
            if p.eps_hat() == 1 && (p.s() < 0 || p.eps() != 0 || !p.alpha().is_zero()) {
                v.push("ε̂ = 1 requires 1 in the even algebra and ε = α = 0".into());
            }
        }
        O2_4 => {
            if p.p() != p.q() {
                v.push("p = q required".into());
            }
            if p.s() < 0 && (p.m() >= 0 || !eq(&p.delta(), &p.beta()) || p.eps_hat() != 0) {
                v.push("without 1 in the even algebra: θ ∉ odd subspace, δ = β, ε̂ = 0".into());
            }
            if p.eps_tilde() == 1 && (p.m() >= 0 || !eq(&p.delta(), &sc(-(p.q() + 1)))) {
                v.push("ε̃ = 1 requires θ ∉ odd subspace and δ = -(q+1)".into());
            }
        }
        O2_5 => {
            if p.p() != p.q() + 1 {
                v.push("p = q+1 required".into());
            }
        }
        O2_6 => {
            let theta_in_s1 = p.m() >= 0;
            if theta_in_s1 {
                if p.s() < 0 || p.p() != p.q() {
                    v.push("θ in the odd subspace requires 1 in the even algebra and p = q".into());
                }
            } else if p.p() != p.q() && p.p() != p.q() + 1 {
                v.push("p must be q or q+1".into());
            }
        }
        O2_7 => {
            if p.p() != p.q() {
                v.push("p = q required".into());
            }
            if p.s() < 0 && (p.m() >= 0 || !eq(&p.delta(), &p.beta())) {
                v.push("without 1 in the even algebra: θ ∉ odd subspace and δ = β".into());
            }
            if p.m() >= 0 && p.eps_tilde() == 1 {
                v.push("θ in the odd subspace requires ε̃ = 0".into());
            }
        }
        O3_1 => match resolve_choice(p) {
            Some(ModuleChoice::SpanOne) => {
                if !p.beta().is_zero() {
                    v.push("β = 0 required for the module ⟨1⟩".into());
                }
            }
            Some(ModuleChoice::SpanOnePlusTheta) => {
                if p.eps() != 0 || !p.beta().is_zero() || p.m() != 2 {
                    v.push("⟨1+θ⟩ requires ε = β = 0 and m = 2".into());
                }
            }
            Some(ModuleChoice::Label { name }) if name == "n3.2" => {
                if p.m() < 1 {
                    v.push("m ≥ 1 required".into());
                }
                if !eq(&two(&p.beta()), &sc(p.m() - p.q() - 2)) {
                    v.push("2β = m - q - 2 required".into());
                }
            }
            Some(ModuleChoice::Label { name }) if name == "n3.3" => {
                if p.m() != 1 && p.m() != 2 {
                    v.push("m must be 1 or 2".into());
                }
                if !eq(&two(&p.beta()), &sc(p.m() - p.q() - 2)) || !eq(&two(&p.beta()), &sc(-p.p()))
                {
                    v.push("2β = m - q - 2 = -p required".into());
                }
            }
            _ => v.push("pick a module: span_one, span_one_plus_theta, n3.2 or n3.3".into()),
        },
        O3_2 => match label_choice(p).as_deref() {
            Some("n3.2") => {
                if !eq(&two(&p.beta()), &sc(p.m() - p.q())) {
                    v.push("2β = m - q required".into());
                }
            }
            Some("n3.3") => {
                if !eq(&two(&p.beta()), &sc(p.m() - p.q())) || !eq(&two(&p.beta()), &sc(-p.p())) {
                    v.push("2β = m - q = -p required".into());
                }
            }
            _ => v.push("pick a module: n3.2 or n3.3".into()),
        },
        O3_3 => match label_choice(p).as_deref() {
            Some("n3.1") => {
                if !eq(&two(&p.beta()), &sc(-p.p())) {
                    v.push("-2β = p required".into());
                }
            }
            Some("n3.3") => {
                if !eq(&two(&p.beta()), &sc(-p.p())) || p.p() != p.m() + p.q() {
                    v.push("-2β = p = m + q required".into());
                }
            }
            _ => v.push("pick a module: n3.1 or n3.3".into()),
        },
        O3_4a => match label_choice(p).as_deref() {
            Some("n3.1") => {
                if p.with_theta {
                    v.push("⟨z^j⟩ requires θ ∉ odd subspace".into());
                }
                if !eq(&two(&p.beta()), &sc(-p.p())) {
                    v.push("2β = -p required".into());
                }
            }
            Some("n3.3") => {
                if p.p() != p.q() || !eq(&two(&p.beta()), &sc(-p.p())) {
                    v.push("2β = -p = -q required".into());
                }
            }
            _ => v.push("pick a module: n3.1 or n3.3".into()),
        },
        O3_4b => match label_choice(p).as_deref() {
            Some("n3.0") => {
                if !eq(&p.c(), &Scalar::one()) {
                    v.push("c = 1 required".into());
                }
                let want = if p.with_vector_part {
                    sc(0)
                } else {
                    sc(-p.p())
                };
                if !eq(&two(&p.beta()), &want) {
                    v.push("2β = -p required (0 when the vector block is present)".into());
                }
            }
            Some("n3.3") => {
                if p.p() != p.q() || !eq(&two(&p.beta()), &sc(-p.p())) {
                    v.push("2β = -p = -q required".into());
                }
            }
            _ => v.push("pick a module: n3.0 or n3.3".into()),
        },
        O3_5 => match resolve_choice(p) {
            Some(ModuleChoice::SpanOne) => {
                if !p.beta().is_zero() {
                    v.push("β = 0 required for the module ⟨1⟩".into());
                }
            }
            Some(ModuleChoice::Label { name }) if name == "n3.3" => {
                if p.p() != p.q() + 1 || !eq(&two(&p.beta()), &sc(-p.p())) {
                    v.push("-2β = p = q+1 required".into());
                }
            }
            _ => v.push("pick a module: span_one or n3.3".into()),
        },
        O3_6 => {}
        _ => v.push(format!(
            "family {family} has no module row; use its a/b sub-cases"
        )),
    }
    v
}

fn resolve_choice(p: &ParamSet) -> Option<ModuleChoice> {
    p.module.clone()
}

fn label_choice(p: &ParamSet) -> Option<String> {
    match &p.module {
        Some(ModuleChoice::Label { name }) => Some(name.clone()),
        _ => None,
    }
}

// --------------------------------------------------------------- builders

fn bare_basis(family: FamilyId, p: &ParamSet) -> Result<Vec<SuperFunction>, CatalogError> {
    use FamilyId::*;
    let basis = match family {
        N0_0 => p
            .module_functions
            .iter()
            .map(|e| SuperFunction::new(e.even.clone(), e.odd.clone()))
            .collect(),
        N0_1 => {
            let mut basis = Vec::new();
            for e in &p.module_functions {
                if !e.even.is_zero() {
                    basis.push(SuperFunction::scalar(e.even.clone()));
                }
                if !e.odd.is_zero() {
                    basis.push(SuperFunction::theta_part(e.odd.clone()));
                }
            }
            basis
        }
        N1_0 | N1_1 => bimodule_basis(family, &p.exponents_n)?,
        N2_0 => {
            let bim = BimoduleParams::single_zero(p.p(), p.q(), p.t(), p.c());
            let vectors =
                build_translation_bimodule(&bim).map_err(|e| CatalogError::Unbuildable {
                    family,
                    reason: e.to_string(),
                })?;
            vectors
                .into_iter()
                .map(|(x, y)| SuperFunction::new(x, y))
                .collect()
        }
        N2_1 | N3_3 => monomial_basis(p.p(), p.q()),
        N3_0 => {
            let c = p.c();
            (0..=p.p())
                .map(|j| SuperFunction::new(zmono(j), QuasiPoly::z_pow(j as usize).scale(&c)))
                .collect()
        }
        N3_1 => monomial_basis(p.p(), -1),
        N3_2 => monomial_basis(-1, p.q()),
        _ => unreachable!("not a module family"),
    };
    Ok(basis)
}

/// Base module n^{tier.ε} used by the closure rows.
fn closure_base(tier: u8, p: &ParamSet) -> Result<(String, Vec<SuperFunction>), CatalogError> {
    use FamilyId::*;
    let (label, id) = match (tier, p.eps()) {
        (0, 0) => ("n0.0", N0_0),
        (0, _) => ("n0.1", N0_1),
        (1, 0) => ("n1.0", N1_0),
        (1, _) => ("n1.1", N1_1),
        (2, 0) => ("n2.0", N2_0),
        (2, _) => ("n2.1", N2_1),
        _ => unreachable!("closure modules live in tiers 0-2"),
    };
    Ok((label.to_string(), bare_basis(id, p)?))
}

/// Adjoin the images of the base under the odd generators.
fn close_under(base: Vec<SuperFunction>, odd: &[SuperOperator]) -> Vec<SuperFunction> {
    let mut all = base.clone();
    for g in odd {
        let op = g.to_general();
        for v in &base {
            let img = op.apply(v);
            if !img.is_zero() {
                all.push(img);
            }
        }
    }
    all
}

pub(super) fn build(
    family: FamilyId,
    p: &ParamSet,
    check: bool,
) -> Result<FunctionModule, CatalogError> {
    use FamilyId::*;
    if family.is_module() {
        if check {
            let mut v = Vec::new();
            validate_bare_module(family, p, &mut v);
            if !v.is_empty() {
                return Err(CatalogError::InvalidParams {
                    family,
                    violations: v,
                });
            }
        }
        let basis = bare_basis(family, p)?;
        return FunctionModule::new(family, family.label(), basis);
    }
    if !family.is_odd_case() {
        return Err(CatalogError::Unbuildable {
            family,
            reason: "only odd cases and module shapes have modules".into(),
        });
    }
    if check {
        let mut v = super::families::validate(family, p);
        v.extend(joint_module_rules(family, p));
        if !v.is_empty() {
            return Err(CatalogError::InvalidParams {
                family,
                violations: v,
            });
        }
    }
    let tier = family.tier().unwrap_or(0);
    match family {
        O0_1 | O0_2a | O1_1 | O1_2a | O2_1 | O2_2a => {
            let (base_label, base) = closure_base(tier, p)?;
            let (_, odd) = families::build(family, p)?;
            let basis = close_under(base, &odd);
            FunctionModule::new(family, format!("closure({base_label})"), basis)
        }
        O0_2b => {
            if p.eps_hat() == 1 {
                let mut basis = Vec::new();
                for e in &p.module_functions {
                    basis.push(SuperFunction::scalar(e.even.clone()));
                    basis.push(SuperFunction::theta_part(e.even.clone()));
                }
                FunctionModule::new(family, "doubled", basis)
            } else {
                let mut basis = Vec::new();
                for e in &p.module_functions {
                    basis.push(SuperFunction::new(e.even.clone(), e.odd.clone()));
                    basis.push(SuperFunction::new(e.odd.clone(), e.even.clone()));
                }
                FunctionModule::new(family, "mirrored", basis)
            }
        }
        O1_2b => {
            if p.eps_hat() == 1 {
                // full translation module with unit first seeds
                let blocks: Vec<ExponentBlock> = p
                    .exponents_n
                    .iter()
                    .map(|b| {
                        let mut seeds = vec![Scalar::zero(); b.mixed.max(0) as usize];
                        if !seeds.is_empty() {
                            seeds[0] = Scalar::one();
                        }
                        ExponentBlock { seeds, ..b.clone() }
                    })
                    .collect();
                let basis = bimodule_basis(family, &blocks)?;
                FunctionModule::new(family, "n1.0 (unit seeds)", basis)
            } else {
                let basis = bimodule_basis(family, &p.exponents_n)?;
                FunctionModule::new(family, "n1.1", basis)
            }
        }
        O1_3 => {
            let mut basis = bimodule_basis(family, &p.exponents_n)?;
            if p.eps_tilde() == 1 {
                let q0 = p
                    .exponents_n
                    .iter()
                    .find(|b| b.exponent.is_zero())
                    .map(|b| b.top2)
                    .unwrap_or(-1);
                let theta = if p.eps_hat() == 1 {
                    zmono(q0 + 1)
                } else {
                    QuasiPoly::zero()
                };
                basis.push(SuperFunction::new(zmono(q0 + 1), theta));
            }
            FunctionModule::new(family, "n1.1 + tail", basis)
        }
        O1_4 => {
            if p.m_zero() >= 0 {
                let basis = bimodule_basis(family, &p.exponents_n)?;
                FunctionModule::new(family, "n1.1", basis)
            } else {
                case_1_4_module_with_constants(p, &signed_a_constants(16))
            }
        }
        O2_2b => {
            if p.eps_hat() == 1 {
                let bim = BimoduleParams::single_zero(p.p(), p.q(), p.t(), Scalar::one());
                let vectors =
                    build_translation_bimodule(&bim).map_err(|e| CatalogError::Unbuildable {
                        family,
                        reason: e.to_string(),
                    })?;
                let basis = vectors
                    .into_iter()
                    .map(|(x, y)| SuperFunction::new(x, y))
                    .collect();
                FunctionModule::new(family, "n2.0 (c = 1)", basis)
            } else {
                FunctionModule::new(family, "n2.1", monomial_basis(p.p(), p.q()))
            }
        }
        O2_3 | O2_4 | O2_7 => {
            let mut basis = monomial_basis(p.p(), p.q());
            if p.eps_tilde() == 1 {
                let lam = match family {
                    O2_3 => sc(p.eps_hat() as i64),
                    O2_4 => sc((p.eps() == 0 && p.eps_hat() == 1) as i64),
                    _ => {
                        let radicand = &p.delta() + &sc(p.q() + 1);
                        radicand.sqrt().ok_or_else(|| CatalogError::Unbuildable {
                            family,
                            reason: format!(
                                "δ+q+1 = {radicand} has no Gaussian-rational square root"
                            ),
                        })?
                    }
                };
                let deg = p.q() + 1;
                basis.push(SuperFunction::new(zmono(deg), zmono(deg).scale(&lam)));
            }
            FunctionModule::new(family, "n2.1 + tail", basis)
        }
        O2_5 | O2_6 => FunctionModule::new(family, "n2.1", monomial_basis(p.p(), p.q())),
        O3_6 => FunctionModule::new(
            family,
            "span{1}",
            vec![SuperFunction::scalar(QuasiPoly::one())],
        ),
        O3_1 | O3_2 | O3_3 | O3_4a | O3_4b | O3_5 => match resolve_choice(p) {
            Some(ModuleChoice::SpanOne) => FunctionModule::new(
                family,
                "span{1}",
                vec![SuperFunction::scalar(QuasiPoly::one())],
            ),
            Some(ModuleChoice::SpanOnePlusTheta) => FunctionModule::new(
                family,
                "span{1+θ}",
                vec![SuperFunction::new(QuasiPoly::one(), QuasiPoly::one())],
            ),
            Some(ModuleChoice::Label { name }) => {
                let id: FamilyId = name.parse()?;
                if !id.is_module() {
                    return Err(CatalogError::Unbuildable {
                        family,
                        reason: format!("{name} is not a module shape"),
                    });
                }
                let basis = bare_basis(id, p)?;
                FunctionModule::new(family, name, basis)
            }
            None => Err(CatalogError::Unbuildable {
                family,
                reason: "this family admits several modules; set the module choice".into(),
            }),
        },
        _ => Err(CatalogError::Unbuildable {
            family,
            reason: "no module row for this family; use its a/b sub-cases".into(),
        }),
    }
}
