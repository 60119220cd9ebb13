//! Human-readable catalog listing: generator templates, parameter schemas
//! and rule summaries for every family.

use serde::Serialize;

use super::FamilyId;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Even,
    EvenQes,
    Odd,
    Module,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyInfo {
    pub id: FamilyId,
    pub label: &'static str,
    pub kind: FamilyKind,
    pub tier: Option<u8>,
    /// Base classification row; sub-cases share their row label.
    pub row: &'static str,
    pub subcase: bool,
    pub generators: &'static str,
    pub schema: &'static str,
    pub rules: &'static str,
}

macro_rules! fam {
    ($id:ident, $kind:ident, $row:expr, $sub:expr, $gens:expr, $schema:expr, $rules:expr) => {
        FamilyInfo {
            id: FamilyId::$id,
            label: FamilyId::$id.label(),
            kind: FamilyKind::$kind,
            tier: FamilyId::$id.tier(),
            row: $row,
            subcase: $sub,
            generators: $gens,
            schema: $schema,
            rules: $rules,
        }
    };
}

/// Complete enumeration of the catalog, one entry per family.
pub fn list_families() -> Vec<FamilyInfo> {
    vec![
        fam!(
            L0,
            Even,
            "l0",
            false,
            "g_i(z)θ∂θ + h_i(z)",
            "even_functions",
            "generators linearly independent"
        ),
        fam!(
            L1,
            Even,
            "l1",
            false,
            "∂z ; bimodule over (θ∂θ, 1) for μ ∈ M",
            "exponents_m",
            "none beyond the bimodule conventions"
        ),
        fam!(
            L2,
            Even,
            "l2",
            false,
            "∂z, z∂z+αθ∂θ+β ; z^iθ∂θ, z^j, z^k(z^mθ∂θ + c_k z^n)",
            "alpha, beta, m, n, r, c",
            "m = n if r ≥ 1"
        ),
        fam!(
            L3,
            Even,
            "l3",
            false,
            "∂z, z∂z+αθ∂θ+β, z²∂z+2αzθ∂θ+2βz ; θ∂θ+γ, 1",
            "alpha, beta, gamma, eps, with_one",
            "none"
        ),
        fam!(
            S0_0,
            EvenQes,
            "s0_0",
            false,
            "εθ∂θ+h₁(z) ; h_l(z)",
            "eps, alpha or even_functions, with_one",
            "functions linearly independent"
        ),
        fam!(
            S0_1,
            EvenQes,
            "s0_1",
            false,
            "∂z ; εθ∂θ+αz^{s₀+1}, z^l e^{σz} (l ≤ s_σ, σ ∈ Σ)",
            "eps, alpha, exponents_sigma",
            "α = 0 if ε = 0; s₀ = -1 if 0 ∉ Σ"
        ),
        fam!(
            S0_2,
            EvenQes,
            "s0_2",
            false,
            "∂z, z∂z+αθ∂θ+β ; εθ∂θ+γ, z^l (l ≤ s)",
            "alpha, beta, gamma, eps, s",
            "none"
        ),
        fam!(
            S0_3,
            EvenQes,
            "s0_3",
            false,
            "∂z, z∂z+αθ∂θ+β, z²∂z+2αzθ∂θ+2βz ; εθ∂θ+γ, 1",
            "alpha, beta, gamma, eps, with_one",
            "none"
        ),
        fam!(
            O0_1,
            Odd,
            "0_1",
            false,
            "θ(φ_i∂z+ω_i), h_l'φ_iθ",
            "tier-0 params + odd_functions (φ_i, ω_i)",
            "closure adds the products h_l'·φ_i as pure-θ generators"
        ),
        fam!(
            O0_2,
            Odd,
            "0_2",
            false,
            "χ_i∂θ + ω_iθ",
            "tier-0 params + odd_functions (χ_i, ω_i)",
            "χ_iω_i = 0 if ε = 1; χ_iω_k + χ_kω_i in the even algebra"
        ),
        fam!(
            O0_2a,
            Odd,
            "0_2",
            true,
            "χ_i∂θ",
            "tier-0 params + odd_functions (χ_i)",
            "module: closure of n0.ε"
        ),
        fam!(
            O0_2b,
            Odd,
            "0_2",
            true,
            "∂θ+ε̂*θ ; ε̂θ",
            "eps, eps_hat, with_one, module_functions",
            "1 in the even algebra; ε = 0 if ε̂ = 0"
        ),
        fam!(
            O1_1,
            Odd,
            "1_1",
            false,
            "bimodule over (θ∂z, θ) for μ ∈ M",
            "tier-1 params + exponents_m",
            "n_{μ+σ} ≥ s_σ+m_μ+r_μ − [α=0][σ=0] when m_μ ≥ 0 or r_μ ≥ 1, σ ∈ Σ"
        ),
        fam!(
            O1_2,
            Odd,
            "1_2",
            false,
            "bimodule over (∂θ, θ) for μ ∈ M",
            "tier-1 params + exponents_m",
            "r_μ = 0 if ε = 1; s_{μ+μ̃} bounds for all products of blocks"
        ),
        fam!(
            O1_2a,
            Odd,
            "1_2",
            true,
            "z^i e^{μz} ∂θ (i ≤ m_μ)",
            "tier-1 params + exponents_m (pure)",
            "module: closure of n1.ε"
        ),
        fam!(
            O1_2b,
            Odd,
            "1_2",
            true,
            "∂θ+ε̂θ ; ε̂*θ",
            "eps, eps_hat, with_theta, exponents_sigma, exponents_n",
            "1 in the even algebra; ε = 1 ⇒ ε̂ = 0; p_ν = q_ν; unit seeds"
        ),
        fam!(
            O1_3,
            Odd,
            "1_3",
            false,
            "θ∂z, ∂θ+ε̂z^{m₀+1}θ ; z^i e^{μz}θ",
            "tier-1 params + eps_hat + exponents_m",
            "ε̂ = 1 ⇒ ε = α = 0; Σ* = M*, s_μ = m_μ; s₀ per the α/ε̂ branch"
        ),
        fam!(
            O1_4,
            Odd,
            "1_4",
            false,
            "θ∂z+∂θ ; z^i e^{μz}θ",
            "tier-1 params + exponents_m",
            "ε = α = 0; Σ* = M*, s_μ = m_μ, s₀ = m₀ or m₀+1"
        ),
        fam!(
            O2_1,
            Odd,
            "2_1",
            false,
            "single-exponent bimodule over (θ∂z, θ)",
            "tier-2 params + m, n, r, c",
            "r ≥ 1 ⇒ m = n+1 and s = -1,0; r = 0, s > 0, m ≥ 0 ⇒ n ≥ m+s-1"
        ),
        fam!(
            O2_2,
            Odd,
            "2_2",
            false,
            "single-exponent bimodule over (∂θ, θ)",
            "tier-2 params + m, n, r, c",
            "r = 0 if ε = 1; r ≥ 1 ⇒ m = n+2α, α semi-integer ≥ -(n+1)/2; s ≥ m+n+2r"
        ),
        fam!(
            O2_2a,
            Odd,
            "2_2",
            true,
            "z^i∂θ (i ≤ m)",
            "tier-2 params + m",
            "module: closure of n2.ε"
        ),
        fam!(
            O2_2b,
            Odd,
            "2_2",
            true,
            "∂θ+ε̂θ ; ε̂*θ",
            "tier-2 params + eps_hat, with_theta, p, q, t",
            "1 in the even algebra; ε̂ = 1 ⇒ ε = α = 0; p = q; c = 1"
        ),
        fam!(
            O2_3,
            Odd,
            "2_3",
            false,
            "θ∂z, ∂θ+ε̂z^{m+1}θ ; z^iθ",
            "tier-2 params + eps_hat, m",
            "ε̂ = 1 ⇒ s = m+1 = -2α and ε = 0; ε̂ = 0 ⇒ s = m, m+1"
        ),
        fam!(
            O2_4,
            Odd,
            "2_4",
            false,
            "θ(z∂z+δ), θ∂z, ∂θ+ε*ε̂θ ; z^iθ",
            "tier-2 params + delta, eps_hat, m",
            "α = 0; either s = m, δ = β, ε̂ = 0, or s = m+1 = 0"
        ),
        fam!(
            O2_5,
            Odd,
            "2_5",
            false,
            "θ∂z+ε̂*z∂θ, ε̂z∂θ, ∂θ ; z^iθ",
            "tier-2 params + eps_hat, m",
            "s = m+1 and either ε = β = 0, α = 1, or ε = ε̂ = 1, β = -γ"
        ),
        fam!(
            O2_6,
            Odd,
            "2_6",
            false,
            "θ∂z+∂θ ; z^iθ",
            "tier-2 params + m",
            "ε = 0, α = 1/2, s = m, m+1"
        ),
        fam!(
            O2_7,
            Odd,
            "2_7",
            false,
            "θz∂z+∂θ+δθ, θ∂z ; z^iθ",
            "tier-2 params + delta, m",
            "ε = α = 0; either s = m, δ = β, or s = m+1 = 0"
        ),
        fam!(
            O3_1,
            Odd,
            "3_1",
            false,
            "θz^{i-1}(z∂z+2βi/m) (i ≤ m)",
            "tier-3 params + m",
            "α = 1 - m/2; β = 0 if m = 0"
        ),
        fam!(
            O3_2,
            Odd,
            "3_2",
            false,
            "z^iθ ; θz^{m+1}(z∂z+2β), θz^j∂z (j ≤ m+1)",
            "tier-3 params + m, with_vector_part",
            "2α = -m"
        ),
        fam!(
            O3_3,
            Odd,
            "3_3",
            false,
            "z^i∂θ (i ≤ m)",
            "tier-3 params + m",
            "2α = m"
        ),
        fam!(
            O3_4,
            Odd,
            "3_4",
            false,
            "∂θ+ε*ε̂θ ; ε̂θ, θz^{j-1}(z∂z+jβ) (j = 0,1,2)",
            "tier-3 params + eps_hat, with_vector_part",
            "α = 0; 1 in the even algebra if ε̂ = 1"
        ),
        fam!(
            O3_4a,
            Odd,
            "3_4",
            true,
            "∂θ ; θ, θz^{j-1}(z∂z+jβ)",
            "tier-3 params + with_theta, with_vector_part",
            "α = 0; θ in the odd subspace requires 1 in the even algebra"
        ),
        fam!(
            O3_4b,
            Odd,
            "3_4",
            true,
            "∂θ+θ ; θz^{j-1}(z∂z+jβ)",
            "tier-3 params + with_vector_part",
            "α = 0; ε = 0; 1 in the even algebra"
        ),
        fam!(
            O3_5,
            Odd,
            "3_5",
            false,
            "θz∂z+ε*z∂θ+2βθ, θ∂z+ε*∂θ, εz∂θ, ε∂θ",
            "alpha, beta, gamma, eps, with_one",
            "2α = 1; γ = -2β if ε = 1"
        ),
        fam!(
            O3_6,
            Odd,
            "3_6",
            false,
            "θ∂z, z^j∂θ (j = 0,1,2)",
            "tier-3 params",
            "α = 1; β = 0"
        ),
        fam!(
            N0_0,
            Module,
            "n0.0",
            false,
            "f_j + g_jθ",
            "module_functions",
            "ε = α = 0"
        ),
        fam!(
            N0_1,
            Module,
            "n0.1",
            false,
            "f_j, g_kθ",
            "module_functions",
            "ε = 1"
        ),
        fam!(
            N1_0,
            Module,
            "n1.0",
            false,
            "translation module over (1, θ) for ν ∈ N",
            "exponents_n",
            "ε = α = 0"
        ),
        fam!(
            N1_1,
            Module,
            "n1.1",
            false,
            "z^k e^{νz}, z^k e^{νz}θ",
            "exponents_n (pure)",
            "ε = 1"
        ),
        fam!(
            N2_0,
            Module,
            "n2.0",
            false,
            "z^j, z^kθ, z^k(z^p + c_k z^qθ)",
            "p, q, t, c",
            "ε = 0; t ≥ 1 ⇒ α = p-q"
        ),
        fam!(
            N2_1,
            Module,
            "n2.1",
            false,
            "z^j (j ≤ p), z^kθ (k ≤ q)",
            "p, q",
            "ε = 1"
        ),
        fam!(
            N3_0,
            Module,
            "n3.0",
            false,
            "z^j(1 + cθ) (j ≤ p)",
            "p, c",
            "ε = α = 0; 2β = -p"
        ),
        fam!(N3_1, Module, "n3.1", false, "z^j (j ≤ p)", "p", "2β = -p"),
        fam!(
            N3_2,
            Module,
            "n3.2",
            false,
            "z^kθ (k ≤ q)",
            "q",
            "2(α+β) = -q"
        ),
        fam!(
            N3_3,
            Module,
            "n3.3",
            false,
            "z^j (j ≤ p), z^kθ (k ≤ q)",
            "p, q",
            "2β = -p; 2(α+β) = -q"
        ),
    ]
}
