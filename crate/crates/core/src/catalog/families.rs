//! Generator construction and rule validation for every catalog family.

use crate::bimodule::{
    build_translation_bimodule, mixed_coefficients, BimoduleParams, ExponentBlock,
};
use crate::quasipoly::QuasiPoly;
use crate::scalar::Scalar;
use crate::superop::{GeneralOperator, SuperOperator};
use crate::verify::SpanBasis;
use num_traits::Signed;

use super::{CatalogError, FamilyId, ParamSet};

pub(super) type GenPair = (Vec<SuperOperator>, Vec<SuperOperator>);

fn sc(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn qc(s: &Scalar) -> QuasiPoly {
    QuasiPoly::constant(s.clone())
}

fn zp(k: i64) -> QuasiPoly {
    QuasiPoly::z_pow(k as usize)
}

fn mono(c: &Scalar, k: i64) -> QuasiPoly {
    QuasiPoly::monomial(c.clone(), k as usize, Scalar::zero())
}

fn q0() -> QuasiPoly {
    QuasiPoly::zero()
}

fn ev(dz: QuasiPoly, tdt: QuasiPoly, scl: QuasiPoly) -> SuperOperator {
    SuperOperator::even(dz, tdt, scl)
}

fn od(tdz: QuasiPoly, dth: QuasiPoly, th: QuasiPoly) -> SuperOperator {
    SuperOperator::odd(tdz, dth, th)
}

/// θ·2βi/m·z^{i−1}-style vector triple for the 3_4 cases: θ∂z, θ(z∂z+β),
/// θ(z²∂z+2βz).
fn theta_vector_triple(beta: &Scalar) -> Vec<SuperOperator> {
    vec![
        od(QuasiPoly::one(), q0(), q0()),
        od(QuasiPoly::z(), q0(), qc(beta)),
        od(QuasiPoly::z_pow(2), q0(), mono(&(&sc(2) * beta), 1)),
    ]
}

fn theta_monomials(top: i64) -> Vec<SuperOperator> {
    (0..=top).map(|i| od(q0(), q0(), zp(i))).collect()
}

// ---------------------------------------------------------------- even tiers

fn tier0_even(p: &ParamSet) -> Vec<SuperOperator> {
    let mut gens = Vec::new();
    let h1 = p
        .even_functions
        .first()
        .map(|e| e.scalar.clone())
        .unwrap_or_else(|| qc(&p.alpha()));
    if p.eps() == 1 {
        gens.push(ev(q0(), QuasiPoly::one(), h1));
    } else if !h1.is_zero() {
        gens.push(ev(q0(), q0(), h1));
    }
    for e in p.even_functions.iter().skip(1) {
        gens.push(ev(q0(), q0(), e.scalar.clone()));
    }
    if p.with_one {
        gens.push(ev(q0(), q0(), QuasiPoly::one()));
    }
    gens
}

fn tier1_even(p: &ParamSet) -> Vec<SuperOperator> {
    let mut gens = vec![ev(QuasiPoly::one(), q0(), q0())];
    if p.eps() == 1 {
        gens.push(ev(q0(), QuasiPoly::one(), mono(&p.alpha(), p.s_zero() + 1)));
    }
    for b in &p.exponents_sigma {
        for l in 0..=b.top {
            gens.push(ev(
                q0(),
                q0(),
                QuasiPoly::monomial(Scalar::one(), l as usize, b.exponent.clone()),
            ));
        }
    }
    gens
}

fn tier2_even(p: &ParamSet) -> Vec<SuperOperator> {
    let mut gens = vec![
        ev(QuasiPoly::one(), q0(), q0()),
        ev(QuasiPoly::z(), qc(&p.alpha()), qc(&p.beta())),
    ];
    if p.eps() == 1 {
        gens.push(ev(q0(), QuasiPoly::one(), qc(&p.gamma())));
    }
    for l in 0..=p.s() {
        gens.push(ev(q0(), q0(), zp(l)));
    }
    gens
}

fn tier3_even(p: &ParamSet) -> Vec<SuperOperator> {
    let two_alpha = &sc(2) * &p.alpha();
    let two_beta = &sc(2) * &p.beta();
    let mut gens = vec![
        ev(QuasiPoly::one(), q0(), q0()),
        ev(QuasiPoly::z(), qc(&p.alpha()), qc(&p.beta())),
        ev(QuasiPoly::z_pow(2), mono(&two_alpha, 1), mono(&two_beta, 1)),
    ];
    if p.eps() == 1 {
        gens.push(ev(q0(), QuasiPoly::one(), qc(&p.gamma())));
    }
    if p.with_one {
        gens.push(ev(q0(), q0(), QuasiPoly::one()));
    }
    gens
}

pub(super) fn even_part_for_tier(tier: u8, p: &ParamSet) -> Vec<SuperOperator> {
    match tier {
        0 => tier0_even(p),
        1 => tier1_even(p),
        2 => tier2_even(p),
        3 => tier3_even(p),
        _ => unreachable!(),
    }
}

// ------------------------------------------------------------- construction

fn map_bimodule(
    family: FamilyId,
    params: &BimoduleParams,
    map: impl Fn(QuasiPoly, QuasiPoly) -> SuperOperator,
) -> Result<Vec<SuperOperator>, CatalogError> {
    let vectors = build_translation_bimodule(params).map_err(|e| CatalogError::Unbuildable {
        family,
        reason: e.to_string(),
    })?;
    Ok(vectors.into_iter().map(|(x, y)| map(x, y)).collect())
}

fn m_bimodule(p: &ParamSet) -> BimoduleParams {
    BimoduleParams {
        blocks: p.exponents_m.clone(),
    }
}

/// z^i e^{μz} θ generators for the exponent blocks (top1 = cap).
fn theta_exponential_monomials(blocks: &[ExponentBlock]) -> Vec<SuperOperator> {
    let mut gens = Vec::new();
    for b in blocks {
        for i in 0..=b.top1 {
            gens.push(od(
                q0(),
                q0(),
                QuasiPoly::monomial(Scalar::one(), i as usize, b.exponent.clone()),
            ));
        }
    }
    gens
}

pub(super) fn build(family: FamilyId, p: &ParamSet) -> Result<GenPair, CatalogError> {
    use FamilyId::*;
    let pair = match family {
        L0 => {
            let gens = p
                .even_functions
                .iter()
                .map(|e| ev(q0(), e.theta_dtheta.clone(), e.scalar.clone()))
                .collect();
            (gens, vec![])
        }
        L1 => {
            let mut gens = vec![ev(QuasiPoly::one(), q0(), q0())];
            gens.extend(map_bimodule(family, &m_bimodule(p), |x, y| ev(q0(), x, y))?);
            (gens, vec![])
        }
        L2 => {
            let mut gens = vec![
                ev(QuasiPoly::one(), q0(), q0()),
                ev(QuasiPoly::z(), qc(&p.alpha()), qc(&p.beta())),
            ];
            let bim = BimoduleParams::single_zero(p.m(), p.n(), p.r(), p.c());
            gens.extend(map_bimodule(family, &bim, |x, y| ev(q0(), x, y))?);
            (gens, vec![])
        }
        L3 => {
            let mut gens = tier3_even(p);
            if p.eps() != 1 {
                // the optional abelian generator of this family is θ∂θ+γ
                gens.truncate(3);
                if p.with_one {
                    gens.push(ev(q0(), q0(), QuasiPoly::one()));
                }
            }
            (gens, vec![])
        }
        S0_0 => (tier0_even(p), vec![]),
        S0_1 => (tier1_even(p), vec![]),
        S0_2 => (tier2_even(p), vec![]),
        S0_3 => (tier3_even(p), vec![]),

        O0_1 => {
            let even = tier0_even(p);
            let mut odd: Vec<SuperOperator> = p
                .odd_functions
                .iter()
                .map(|e| od(e.theta_dz.clone(), q0(), e.theta.clone()))
                .collect();
            for gen in &even {
                let dh = gen.scalar.derive();
                if dh.is_zero() {
                    continue;
                }
                for e in &p.odd_functions {
                    let extra = dh.mul(&e.theta_dz);
                    if !extra.is_zero() {
                        odd.push(od(q0(), q0(), extra));
                    }
                }
            }
            (even, odd)
        }
        O0_2 | O0_2a => {
            let even = tier0_even(p);
            let odd = p
                .odd_functions
                .iter()
                .map(|e| od(q0(), e.dtheta.clone(), e.theta.clone()))
                .collect();
            (even, odd)
        }
        O0_2b => {
            let even = tier0_even(p);
            let odd = if p.eps_hat() == 1 {
                vec![
                    od(q0(), QuasiPoly::one(), q0()),
                    od(q0(), q0(), QuasiPoly::one()),
                ]
            } else {
                vec![od(q0(), QuasiPoly::one(), QuasiPoly::one())]
            };
            (even, odd)
        }

        O1_1 => {
            let odd = map_bimodule(family, &m_bimodule(p), |x, y| od(x, q0(), y))?;
            (tier1_even(p), odd)
        }
        O1_2 => {
            let odd = map_bimodule(family, &m_bimodule(p), |x, y| od(q0(), x, y))?;
            (tier1_even(p), odd)
        }
        O1_2a => {
            let mut odd = Vec::new();
            for b in &p.exponents_m {
                for i in 0..=b.top1 {
                    odd.push(od(
                        q0(),
                        QuasiPoly::monomial(Scalar::one(), i as usize, b.exponent.clone()),
                        q0(),
                    ));
                }
            }
            (tier1_even(p), odd)
        }
        O1_2b | O2_2b => {
            let even = if family == O1_2b {
                tier1_even(p)
            } else {
                tier2_even(p)
            };
            let mut odd = if p.eps_hat() == 1 {
                vec![od(q0(), QuasiPoly::one(), QuasiPoly::one())]
            } else {
                vec![od(q0(), QuasiPoly::one(), q0())]
            };
            if p.eps_hat() == 0 && p.with_theta {
                odd.push(od(q0(), q0(), QuasiPoly::one()));
            }
            (even, odd)
        }
        O1_3 => {
            let mut odd = vec![od(QuasiPoly::one(), q0(), q0())];
            let omega = if p.eps_hat() == 1 {
                zp(p.m_zero() + 1)
            } else {
                q0()
            };
            odd.push(od(q0(), QuasiPoly::one(), omega));
            odd.extend(theta_exponential_monomials(&p.exponents_m));
            (tier1_even(p), odd)
        }
        O1_4 => {
            let mut odd = vec![od(QuasiPoly::one(), QuasiPoly::one(), q0())];
            odd.extend(theta_exponential_monomials(&p.exponents_m));
            (tier1_even(p), odd)
        }

        O2_1 => {
            let bim = BimoduleParams::single_zero(p.m(), p.n(), p.r(), p.c());
            let odd = map_bimodule(family, &bim, |x, y| od(x, q0(), y))?;
            (tier2_even(p), odd)
        }
        O2_2 => {
            let bim = BimoduleParams::single_zero(p.m(), p.n(), p.r(), p.c());
            let odd = map_bimodule(family, &bim, |x, y| od(q0(), x, y))?;
            (tier2_even(p), odd)
        }
        O2_2a => {
            let odd = (0..=p.m()).map(|i| od(q0(), zp(i), q0())).collect();
            (tier2_even(p), odd)
        }
        O2_3 => {
            let mut odd = vec![od(QuasiPoly::one(), q0(), q0())];
            let omega = if p.eps_hat() == 1 {
                zp(p.m() + 1)
            } else {
                q0()
            };
            odd.push(od(q0(), QuasiPoly::one(), omega));
            odd.extend(theta_monomials(p.m()));
            (tier2_even(p), odd)
        }
        O2_4 => {
            let mut odd = vec![
                od(QuasiPoly::z(), q0(), qc(&p.delta())),
                od(QuasiPoly::one(), q0(), q0()),
            ];
            let tail = if p.eps() == 0 && p.eps_hat() == 1 {
                QuasiPoly::one()
            } else {
                q0()
            };
            odd.push(od(q0(), QuasiPoly::one(), tail));
            odd.extend(theta_monomials(p.m()));
            (tier2_even(p), odd)
        }
        O2_5 => {
            let mut odd = Vec::new();
            if p.eps_hat() == 1 {
                odd.push(od(QuasiPoly::one(), q0(), q0()));
                odd.push(od(q0(), QuasiPoly::z(), q0()));
            } else {
                odd.push(od(QuasiPoly::one(), QuasiPoly::z(), q0()));
            }
            odd.push(od(q0(), QuasiPoly::one(), q0()));
            odd.extend(theta_monomials(p.m()));
            (tier2_even(p), odd)
        }
        O2_6 => {
            let mut odd = vec![od(QuasiPoly::one(), QuasiPoly::one(), q0())];
            odd.extend(theta_monomials(p.m()));
            (tier2_even(p), odd)
        }
        O2_7 => {
            let mut odd = vec![
                od(QuasiPoly::z(), QuasiPoly::one(), qc(&p.delta())),
                od(QuasiPoly::one(), q0(), q0()),
            ];
            odd.extend(theta_monomials(p.m()));
            (tier2_even(p), odd)
        }

        O3_1 => {
            let m = p.m();
            let mut odd = vec![od(QuasiPoly::one(), q0(), q0())];
            for i in 1..=m {
                // θ z^{i-1}(z∂z + 2βi/m)
                let coeff = &(&sc(2) * &p.beta()) * &(&sc(i) / &sc(m));
                odd.push(od(zp(i), q0(), mono(&coeff, i - 1)));
            }
            (tier3_even(p), odd)
        }
        O3_2 => {
            let m = p.m();
            let mut odd = theta_monomials(m);
            if p.with_vector_part {
                let two_beta = &sc(2) * &p.beta();
                odd.push(od(zp(m + 2), q0(), mono(&two_beta, m + 1)));
                for j in 0..=(m + 1) {
                    odd.push(od(zp(j), q0(), q0()));
                }
            }
            (tier3_even(p), odd)
        }
        O3_3 => {
            let odd = (0..=p.m()).map(|i| od(q0(), zp(i), q0())).collect();
            (tier3_even(p), odd)
        }
        O3_4 => {
            let tail = if p.eps() == 0 && p.eps_hat() == 1 {
                QuasiPoly::one()
            } else {
                q0()
            };
            let mut odd = vec![od(q0(), QuasiPoly::one(), tail)];
            if p.eps_hat() == 1 {
                odd.push(od(q0(), q0(), QuasiPoly::one()));
            }
            if p.with_vector_part {
                odd.extend(theta_vector_triple(&p.beta()));
            }
            (tier3_even(p), odd)
        }
        O3_4a => {
            let mut odd = vec![od(q0(), QuasiPoly::one(), q0())];
            if p.with_theta {
                odd.push(od(q0(), q0(), QuasiPoly::one()));
            }
            if p.with_vector_part {
                odd.extend(theta_vector_triple(&p.beta()));
            }
            (tier3_even(p), odd)
        }
        O3_4b => {
            let mut odd = vec![od(q0(), QuasiPoly::one(), QuasiPoly::one())];
            if p.with_vector_part {
                odd.extend(theta_vector_triple(&p.beta()));
            }
            (tier3_even(p), odd)
        }
        O3_5 => {
            let two_beta = &sc(2) * &p.beta();
            let odd = if p.eps() == 1 {
                vec![
                    od(QuasiPoly::z(), q0(), qc(&two_beta)),
                    od(QuasiPoly::one(), q0(), q0()),
                    od(q0(), QuasiPoly::z(), q0()),
                    od(q0(), QuasiPoly::one(), q0()),
                ]
            } else {
                vec![
                    od(QuasiPoly::z(), QuasiPoly::z(), qc(&two_beta)),
                    od(QuasiPoly::one(), QuasiPoly::one(), q0()),
                ]
            };
            (tier3_even(p), odd)
        }
        O3_6 => {
            let odd = vec![
                od(QuasiPoly::one(), q0(), q0()),
                od(q0(), QuasiPoly::one(), q0()),
                od(q0(), QuasiPoly::z(), q0()),
                od(q0(), QuasiPoly::z_pow(2), q0()),
            ];
            (tier3_even(p), odd)
        }

        N0_0 | N0_1 | N1_0 | N1_1 | N2_0 | N2_1 | N3_0 | N3_1 | N3_2 | N3_3 => {
            return Err(CatalogError::Unbuildable {
                family,
                reason: "module families have no generators; use instantiate_module".into(),
            })
        }
    };
    Ok(pair)
}

// --------------------------------------------------------------- validation

fn is_int(x: &Scalar) -> bool {
    x.is_integer()
}

fn eq(a: &Scalar, b: &Scalar) -> bool {
    a == b
}

struct MBlockView {
    exponent: Scalar,
    m: i64,
    n: i64,
    r: i64,
    seeds: Vec<Scalar>,
}

fn m_views(p: &ParamSet) -> Vec<MBlockView> {
    p.exponents_m
        .iter()
        .map(|b| MBlockView {
            exponent: b.exponent.clone(),
            m: b.top1,
            n: b.top2,
            r: b.mixed,
            seeds: b.seeds.clone(),
        })
        .collect()
}

fn n_lookup(views: &[MBlockView], mu: &Scalar) -> i64 {
    views
        .iter()
        .find(|b| &b.exponent == mu)
        .map(|b| b.n)
        .unwrap_or(-1)
}

fn s_lookup(p: &ParamSet, sigma: &Scalar) -> i64 {
    p.exponents_sigma
        .iter()
        .find(|b| &b.exponent == sigma)
        .map(|b| b.top)
        .unwrap_or(-1)
}

fn tier0_structural(p: &ParamSet, v: &mut Vec<String>) {
    for (i, e) in p.even_functions.iter().enumerate() {
        if i == 0 {
            if !e.theta_dtheta.is_zero() {
                v.push("the first even generator's θ∂θ part is fixed by ε; supply only its scalar part".into());
            }
        } else if !e.theta_dtheta.is_zero() {
            v.push(format!("even generator {i} must be a pure function of z"));
        }
    }
    // independence of the declared generator list
    let built: Vec<GeneralOperator> = tier0_even(p)
        .iter()
        .map(SuperOperator::to_general)
        .collect();
    if SpanBasis::new(&built).is_err() {
        v.push("even generators are linearly dependent".into());
    }
}

fn tier1_structural(p: &ParamSet, v: &mut Vec<String>) {
    if p.eps() == 0 && !p.alpha().is_zero() {
        v.push("α = 0 when ε = 0".into());
    }
    for (i, b) in p.exponents_sigma.iter().enumerate() {
        if b.top < 0 {
            v.push(format!("Σ block {i}: s must be ≥ 0 for a present exponent"));
        }
        for other in &p.exponents_sigma[i + 1..] {
            if other.exponent == b.exponent {
                v.push("duplicate exponent in Σ".into());
            }
        }
    }
}

fn eps_flag(p: &ParamSet, v: &mut Vec<String>) {
    if let Some(e) = p.eps {
        if e > 1 {
            v.push("ε must be 0 or 1".into());
        }
    }
    if let Some(e) = p.eps_hat {
        if e > 1 {
            v.push("ε̂ must be 0 or 1".into());
        }
    }
    if let Some(e) = p.eps_tilde {
        if e > 1 {
            v.push("ε̃ must be 0 or 1".into());
        }
    }
}

fn bimodule_structural(blocks: &[ExponentBlock], v: &mut Vec<String>) {
    let params = BimoduleParams {
        blocks: blocks.to_vec(),
    };
    if let Err(e) = params.validate() {
        v.push(e.to_string());
    }
}

/// Pure-θ exponent blocks (cases 1_3, 1_4): only the v₁ degree cap is used.
fn pure_theta_blocks(p: &ParamSet, v: &mut Vec<String>) {
    for b in &p.exponents_m {
        if b.top2 != -1 || b.mixed != 0 {
            v.push(
                "M blocks of this case carry only the θ-degree cap (set top2 = -1, mixed = 0)"
                    .into(),
            );
        }
    }
}

/// Σ* = M* and s_μ = m_μ on the shared nonzero exponents.
fn starred_sets_match(p: &ParamSet, v: &mut Vec<String>) {
    let mut sigma_star: Vec<Scalar> = p
        .exponents_sigma
        .iter()
        .filter(|b| !b.exponent.is_zero())
        .map(|b| b.exponent.clone())
        .collect();
    let mut m_star: Vec<Scalar> = p
        .exponents_m
        .iter()
        .filter(|b| !b.exponent.is_zero())
        .map(|b| b.exponent.clone())
        .collect();
    sigma_star.sort();
    m_star.sort();
    if sigma_star != m_star {
        v.push("the nonzero exponents of Σ and M must coincide".into());
        return;
    }
    for mu in &m_star {
        let s = s_lookup(p, mu);
        let m = p
            .exponents_m
            .iter()
            .find(|b| &b.exponent == mu)
            .map(|b| b.top1)
            .unwrap_or(-1);
        if s != m {
            v.push(format!(
                "s_μ = m_μ required at μ = {mu} (got s = {s}, m = {m})"
            ));
        }
    }
}

fn case_1_1_rules(p: &ParamSet, v: &mut Vec<String>) {
    let views = m_views(p);
    let alpha_zero = p.alpha().is_zero() || p.eps() == 0;
    for b in &views {
        if b.m < 0 && b.r < 1 {
            continue;
        }
        let weight = b.m + b.r;
        for sb in &p.exponents_sigma {
            let target = &b.exponent + &sb.exponent;
            let n_t = n_lookup(&views, &target);
            if sb.exponent.is_zero() {
                let s0 = sb.top;
                let bound = if !alpha_zero {
                    s0 + weight
                } else if s0 >= 1 {
                    s0 + weight - 1
                } else {
                    continue;
                };
                if n_t < bound {
                    v.push(format!(
                        "n at μ = {} must be ≥ {bound} (σ = 0 rule)",
                        b.exponent
                    ));
                }
            } else if n_t < sb.top + weight {
                v.push(format!(
                    "n at μ+σ = {target} must be ≥ {} (σ = {} rule)",
                    sb.top + weight,
                    sb.exponent
                ));
            }
        }
    }
}

/// The degrees p of nonempty coefficient-collision sets for a pair of mixed
/// blocks: pairs (k, j), (k̃, j̃) with k+j̃ = k̃+j = p and c^{μ,k}_j + c^{μ̃,k̃}_{j̃} ≠ 0.
fn collision_degrees(a: &MBlockView, b: &MBlockView) -> Vec<i64> {
    let coeffs = |view: &MBlockView, k: i64| -> Vec<Scalar> {
        mixed_coefficients(view.m, view.n, k as usize, &view.seeds).unwrap_or_default()
    };
    let mut degrees = Vec::new();
    for k in 1..=a.r {
        let ca = coeffs(a, k);
        for j in 1..=k {
            for kt in 1..=b.r {
                let cb = coeffs(b, kt);
                for jt in 1..=kt {
                    if k + jt == kt + j {
                        let sum = &ca[(j - 1) as usize] + &cb[(jt - 1) as usize];
                        if !sum.is_zero() {
                            degrees.push(k + jt);
                        }
                    }
                }
            }
        }
    }
    degrees.sort_unstable();
    degrees.dedup();
    degrees
}

fn case_1_2_rules(p: &ParamSet, v: &mut Vec<String>) {
    let views = m_views(p);
    if p.eps() == 1 {
        for b in &views {
            if b.r >= 1 {
                v.push("mixed vectors are forbidden when ε = 1".into());
            }
        }
    }
    for a in &views {
        for b in &views {
            let target = &a.exponent + &b.exponent;
            let s_t = s_lookup(p, &target);
            let mut require = |bound: i64, why: &str| {
                if s_t < bound {
                    v.push(format!(
                        "s at μ+μ̃ = {target} must be ≥ {bound} ({why}; μ = {}, μ̃ = {})",
                        a.exponent, b.exponent
                    ));
                }
            };
            if a.m >= 0 && b.n >= 0 {
                require(a.m + b.n, "pure·pure");
            }
            if a.r >= 1 && b.n >= 0 {
                require(a.m + a.r + b.n, "mixed·pure-v2");
            }
            if a.r >= 1 && b.m >= 0 {
                require(a.n + a.r + b.m, "mixed·pure-v1");
            }
            if a.r >= 1 && b.r >= 1 {
                let d1 = a.m + b.n;
                let d2 = b.m + a.n;
                if d1 != d2 {
                    require(a.r + b.r + d1.max(d2), "mixed·mixed, distinct weights");
                } else if let Some(top) = collision_degrees(a, b).last() {
                    require(d1 + top, "mixed·mixed, colliding weights");
                }
            }
        }
    }
}

fn case_1_3_rules(p: &ParamSet, v: &mut Vec<String>) {
    pure_theta_blocks(p, v);
    starred_sets_match(p, v);
    let m0 = p.m_zero();
    let s0 = p.s_zero();
    if p.eps_hat() == 1 {
        if p.eps() != 0 || !p.alpha().is_zero() {
            v.push("ε̂ = 1 requires ε = α = 0".into());
        }
        if s0 != m0 + 1 {
            v.push(format!(
                "ε̂ = 1 requires s₀ = m₀+1 (got s₀ = {s0}, m₀ = {m0})"
            ));
        }
    } else if p.eps() == 1 && !p.alpha().is_zero() {
        if s0 != m0 {
            v.push(format!("α ≠ 0 requires s₀ = m₀ (got s₀ = {s0}, m₀ = {m0})"));
        }
    } else if s0 != m0 && s0 != m0 + 1 {
        v.push(format!("s₀ must be m₀ or m₀+1 (got s₀ = {s0}, m₀ = {m0})"));
    }
}

fn case_1_4_rules(p: &ParamSet, v: &mut Vec<String>) {
    pure_theta_blocks(p, v);
    if p.eps() != 0 || !p.alpha().is_zero() {
        v.push("ε = α = 0 required".into());
    }
    starred_sets_match(p, v);
    let m0 = p.m_zero();
    let s0 = p.s_zero();
    if s0 != m0 && s0 != m0 + 1 {
        v.push(format!("s₀ must be m₀ or m₀+1 (got s₀ = {s0}, m₀ = {m0})"));
    }
}

fn mixed_seed_structural(p: &ParamSet, v: &mut Vec<String>) {
    if p.r() >= 1 {
        if p.c().is_zero() {
            v.push("c must be nonzero when mixed vectors are present".into());
        }
        if p.m() == -1 && p.n() >= 0 {
            v.push("mixed vectors require a pure-v1 block when a v2 block is present".into());
        }
    }
}

pub(super) fn validate(family: FamilyId, p: &ParamSet) -> Vec<String> {
    use FamilyId::*;
    let mut v = Vec::new();
    eps_flag(p, &mut v);
    match family {
        L0 => {
            if p.even_functions.is_empty() {
                v.push("at least one generator is required".into());
            }
            let built: Vec<GeneralOperator> = p
                .even_functions
                .iter()
                .map(|e| ev(q0(), e.theta_dtheta.clone(), e.scalar.clone()).to_general())
                .collect();
            if SpanBasis::new(&built).is_err() {
                v.push("generators are linearly dependent".into());
            }
        }
        L1 => bimodule_structural(&p.exponents_m, &mut v),
        L2 => {
            mixed_seed_structural(p, &mut v);
            if p.r() >= 1 && p.m() != p.n() {
                v.push("m = n when mixed vectors are present".into());
            }
        }
        L3 | S0_3 => {}
        S0_0 => tier0_structural(p, &mut v),
        S0_1 => tier1_structural(p, &mut v),
        S0_2 => {}

        O0_1 => {
            tier0_structural(p, &mut v);
            if p.odd_functions.is_empty() {
                v.push("at least one odd generator is required".into());
            }
            for (i, e) in p.odd_functions.iter().enumerate() {
                if !e.dtheta.is_zero() {
                    v.push(format!(
                        "odd generator {i} must have no ∂θ part in this case"
                    ));
                }
            }
        }
        O0_2 | O0_2a => {
            tier0_structural(p, &mut v);
            if p.odd_functions.is_empty() {
                v.push("at least one odd generator is required".into());
            }
            for (i, e) in p.odd_functions.iter().enumerate() {
                if !e.theta_dz.is_zero() {
                    v.push(format!(
                        "odd generator {i} must have no θ∂z part in this case"
                    ));
                }
                if family == O0_2a && !e.theta.is_zero() {
                    v.push(format!(
                        "odd generator {i} must be a pure χ∂θ term in this sub-case"
                    ));
                }
                if p.eps() == 1 && !e.dtheta.mul(&e.theta).is_zero() {
                    v.push(format!("χ·ω must vanish for odd generator {i} when ε = 1"));
                }
            }
            // the symmetric products χ_iω_k + χ_kω_i must lie in the even span
            let even: Vec<GeneralOperator> = tier0_even(p)
                .iter()
                .map(SuperOperator::to_general)
                .collect();
            let (span, _) = SpanBasis::spanning(&even);
            for (i, a) in p.odd_functions.iter().enumerate() {
                for (k, b) in p.odd_functions.iter().enumerate().skip(i) {
                    let prod = a.dtheta.mul(&b.theta).add(&b.dtheta.mul(&a.theta));
                    if prod.is_zero() {
                        continue;
                    }
                    let as_op = GeneralOperator::function(prod);
                    if !span.contains(&as_op) {
                        v.push(format!(
                            "χ_{i}ω_{k} + χ_{k}ω_{i} does not lie in the even algebra"
                        ));
                    }
                }
            }
        }
        O0_2b => {
            tier0_structural(p, &mut v);
            if !p.with_one {
                v.push("1 must be an even generator".into());
            }
            if p.eps_hat() == 0 && p.eps() != 0 {
                v.push("ε = 0 required when ε̂ = 0".into());
            }
        }

        O1_1 => {
            tier1_structural(p, &mut v);
            bimodule_structural(&p.exponents_m, &mut v);
            if v.is_empty() {
                case_1_1_rules(p, &mut v);
            }
        }
        O1_2 => {
            tier1_structural(p, &mut v);
            bimodule_structural(&p.exponents_m, &mut v);
            if v.is_empty() {
                case_1_2_rules(p, &mut v);
            }
        }
        O1_2a => {
            tier1_structural(p, &mut v);
            for b in &p.exponents_m {
                if b.top1 < 0 || b.top2 != -1 || b.mixed != 0 {
                    v.push(
                        "this sub-case uses pure χ blocks: top1 ≥ 0, top2 = -1, no mixed".into(),
                    );
                }
            }
        }
        O1_2b => {
            tier1_structural(p, &mut v);
            if p.s_zero() < 0 {
                v.push("1 must be an even generator (0 ∈ Σ with s₀ ≥ 0)".into());
            }
            if p.eps() == 1 && p.eps_hat() == 1 {
                v.push("ε = 1 forces ε̂ = 0".into());
            }
            if p.eps_hat() == 1 && p.with_theta {
                v.push("θ is only optional when ε̂ = 0".into());
            }
        }
        O1_3 => {
            tier1_structural(p, &mut v);
            case_1_3_rules(p, &mut v);
        }
        O1_4 => {
            tier1_structural(p, &mut v);
            case_1_4_rules(p, &mut v);
        }

        O2_1 => {
            mixed_seed_structural(p, &mut v);
            if p.r() >= 1 {
                if p.m() != p.n() + 1 {
                    v.push("mixed vectors require m = n+1".into());
                }
                if p.s() > 0 {
                    v.push("mixed vectors require s = -1 or 0".into());
                }
            }
            if p.r() == 0 && p.s() > 0 && p.m() >= 0 && p.n() < p.m() + p.s() - 1 {
                v.push(format!("n must be ≥ m+s-1 = {}", p.m() + p.s() - 1));
            }
        }
        O2_2 => {
            mixed_seed_structural(p, &mut v);
            if p.eps() == 1 && p.r() >= 1 {
                v.push("mixed vectors are forbidden when ε = 1".into());
            }
            if p.r() >= 1 {
                let a = p.alpha();
                let two_alpha = &sc(2) * &a;
                if !eq(&sc(p.m()), &(&sc(p.n()) + &two_alpha)) {
                    v.push("mixed vectors require m = n + 2α".into());
                }
                if !is_int(&two_alpha) {
                    v.push("α must be a semi-integer".into());
                } else {
                    // α ≥ −(n+1)/2
                    let bound = Scalar::rational(-(p.n() + 1), 2);
                    if !a.is_real() || (&a - &bound).re().is_negative() {
                        v.push("α must be ≥ -(n+1)/2".into());
                    }
                }
            }
            if (p.m() >= 0 && p.n() >= 0) || p.r() >= 1 {
                let bound = p.m() + p.n() + 2 * p.r();
                if p.s() < bound {
                    v.push(format!("s must be ≥ m+n+2r = {bound}"));
                }
            }
        }
        O2_2a => {
            if p.m() < 0 {
                v.push("m ≥ 0 required".into());
            }
        }
        O2_2b => {
            if p.s() < 0 {
                v.push("1 must be an even generator (s ≥ 0)".into());
            }
            if p.eps_hat() == 1 && (p.eps() != 0 || !p.alpha().is_zero()) {
                v.push("ε̂ = 1 requires ε = α = 0".into());
            }
            if p.eps_hat() == 1 && p.with_theta {
                v.push("θ is only optional when ε̂ = 0".into());
            }
        }
        O2_3 => {
            if p.eps_hat() == 1 {
                if p.s() != p.m() + 1 {
                    v.push("ε̂ = 1 requires s = m+1".into());
                }
                if !eq(&(&sc(2) * &p.alpha()), &sc(-(p.m() + 1))) {
                    v.push("ε̂ = 1 requires m+1 = -2α".into());
                }
                if p.eps() != 0 {
                    v.push("ε̂ = 1 requires ε = 0".into());
                }
            } else if p.s() != p.m() && p.s() != p.m() + 1 {
                v.push("s must be m or m+1".into());
            }
        }
        O2_4 => {
            if !p.alpha().is_zero() {
                v.push("α = 0 required".into());
            }
            let branch_i = p.s() == p.m() && eq(&p.delta(), &p.beta()) && p.eps_hat() == 0;
            let branch_ii = p.s() == 0 && p.m() == -1;
            if !branch_i && !branch_ii {
                v.push("either s = m with δ = β and ε̂ = 0, or s = m+1 = 0".into());
            }
        }
        O2_5 => {
            if p.s() != p.m() + 1 {
                v.push("s = m+1 required".into());
            }
            let branch_i = p.eps() == 0 && p.beta().is_zero() && eq(&p.alpha(), &sc(1));
            let branch_ii = p.eps() == 1 && p.eps_hat() == 1 && eq(&p.beta(), &-p.gamma());
            if !branch_i && !branch_ii {
                v.push("either ε = β = 0 with α = 1, or ε = ε̂ = 1 with β = -γ".into());
            }
        }
        O2_6 => {
            if p.eps() != 0 {
                v.push("ε = 0 required".into());
            }
            if !eq(&p.alpha(), &Scalar::rational(1, 2)) {
                v.push("α = 1/2 required".into());
            }
            if p.s() != p.m() && p.s() != p.m() + 1 {
                v.push("s must be m or m+1".into());
            }
        }
        O2_7 => {
            if p.eps() != 0 || !p.alpha().is_zero() {
                v.push("ε = α = 0 required".into());
            }
            let branch_i = p.s() == p.m() && eq(&p.delta(), &p.beta());
            let branch_ii = p.s() == 0 && p.m() == -1;
            if !branch_i && !branch_ii {
                v.push("either s = m with δ = β, or s = m+1 = 0".into());
            }
        }

        O3_1 => {
            if p.m() < 0 {
                v.push("m ≥ 0 required".into());
            }
            let want = &Scalar::one() - &(&sc(p.m()) * &Scalar::rational(1, 2));
            if !eq(&p.alpha(), &want) {
                v.push("α = 1 - m/2 required".into());
            }
            if p.m() == 0 && !p.beta().is_zero() {
                v.push("β = 0 required when m = 0".into());
            }
        }
        O3_2 => {
            if p.m() < 0 {
                v.push("m ≥ 0 required".into());
            }
            if !eq(&(&sc(2) * &p.alpha()), &sc(-p.m())) {
                v.push("2α = -m required".into());
            }
        }
        O3_3 => {
            if p.m() < 0 {
                v.push("m ≥ 0 required".into());
            }
            if !eq(&(&sc(2) * &p.alpha()), &sc(p.m())) {
                v.push("2α = m required".into());
            }
        }
        O3_4 => {
            if !p.alpha().is_zero() {
                v.push("α = 0 required".into());
            }
            if p.eps_hat() == 1 && !p.with_one {
                v.push("1 must be an even generator when ε̂ = 1".into());
            }
        }
        O3_4a => {
            if !p.alpha().is_zero() {
                v.push("α = 0 required".into());
            }
            if p.with_theta && !p.with_one {
                v.push("θ in the odd subspace requires 1 in the even algebra".into());
            }
        }
        O3_4b => {
            if !p.alpha().is_zero() {
                v.push("α = 0 required".into());
            }
            if p.eps() != 0 {
                v.push("ε = 0 required".into());
            }
            if !p.with_one {
                v.push("1 must be an even generator".into());
            }
        }
        O3_5 => {
            if !eq(&(&sc(2) * &p.alpha()), &sc(1)) {
                v.push("2α = 1 required".into());
            }
            if p.eps() == 1 && !eq(&p.gamma(), &-(&sc(2) * &p.beta())) {
                v.push("γ = -2β required when ε = 1".into());
            }
        }
        O3_6 => {
            if !eq(&p.alpha(), &sc(1)) {
                v.push("α = 1 required".into());
            }
            if !p.beta().is_zero() {
                v.push("β = 0 required".into());
            }
        }

        N0_0 | N0_1 | N1_0 | N1_1 | N2_0 | N2_1 | N3_0 | N3_1 | N3_2 | N3_3 => {
            super::modules::validate_bare_module(family, p, &mut v);
        }
    }
    v
}
