//! The bounded-parameter sweep: rule-satisfying draws on a small grid
//! (integer indices ≤ 3, exponents from {0, ±1, i}, scalars from
//! {0, ±1, ±1/2, i}) covering every classification row and every module row.
//!
//! The CLI's `verify --grid` runs these; the acceptance suite pins their
//! outcomes.

use crate::bimodule::ExponentBlock;
use crate::quasipoly::QuasiPoly;
use crate::scalar::Scalar;

use super::{
    EvenFunctionEntry, FamilyId, ModuleChoice, ModuleFunctionEntry, OddFunctionEntry, ParamSet,
    SigmaBlock,
};

/// One sweep entry: a family with grid parameters. `module` names the sweep
/// section ("closure" entries verify graded closure only).
#[derive(Clone, Debug)]
pub struct GridCase {
    pub label: &'static str,
    pub family: FamilyId,
    pub params: ParamSet,
}

fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

fn si(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn mblock(mu: &str, m: i64, n: i64, r: i64, seeds: &[&str]) -> ExponentBlock {
    ExponentBlock {
        exponent: s(mu),
        top1: m,
        top2: n,
        mixed: r,
        seeds: seeds.iter().map(|x| s(x)).collect(),
    }
}

fn sigma(exp: &str, top: i64) -> SigmaBlock {
    SigmaBlock {
        exponent: s(exp),
        top,
    }
}

fn hfun(h: QuasiPoly) -> EvenFunctionEntry {
    EvenFunctionEntry {
        theta_dtheta: QuasiPoly::zero(),
        scalar: h,
    }
}

fn ofun(phi: QuasiPoly, chi: QuasiPoly, omega: QuasiPoly) -> OddFunctionEntry {
    OddFunctionEntry {
        theta_dz: phi,
        dtheta: chi,
        theta: omega,
    }
}

fn mfun(f: QuasiPoly, g: QuasiPoly) -> ModuleFunctionEntry {
    ModuleFunctionEntry { even: f, odd: g }
}

fn zp(k: usize) -> QuasiPoly {
    QuasiPoly::z_pow(k)
}

fn label(name: &str) -> Option<ModuleChoice> {
    Some(ModuleChoice::Label { name: name.into() })
}

/// Rule-satisfying closure draws, at least three per classification row.
pub fn closure_cases() -> Vec<GridCase> {
    use FamilyId::*;
    let base = ParamSet::default;
    let mut d: Vec<GridCase> = Vec::new();
    let mut push = |label: &'static str, family: FamilyId, params: ParamSet| {
        d.push(GridCase {
            label,
            family,
            params,
        });
    };

    // tier 0
    push(
        "0_1 linear h",
        O0_1,
        ParamSet {
            even_functions: vec![hfun(QuasiPoly::z())],
            odd_functions: vec![ofun(QuasiPoly::one(), QuasiPoly::zero(), QuasiPoly::zero())],
            ..base()
        },
    );
    push(
        "0_1 eps=1 quadratic h",
        O0_1,
        ParamSet {
            eps: Some(1),
            even_functions: vec![hfun(zp(2))],
            odd_functions: vec![ofun(QuasiPoly::one(), QuasiPoly::zero(), QuasiPoly::z())],
            ..base()
        },
    );
    push(
        "0_1 two functions",
        O0_1,
        ParamSet {
            even_functions: vec![hfun(zp(2)), hfun(QuasiPoly::z())],
            odd_functions: vec![ofun(QuasiPoly::z(), QuasiPoly::zero(), QuasiPoly::one())],
            ..base()
        },
    );
    push(
        "0_2 chi=1 omega=z",
        O0_2,
        ParamSet {
            even_functions: vec![hfun(QuasiPoly::z())],
            odd_functions: vec![ofun(QuasiPoly::zero(), QuasiPoly::one(), QuasiPoly::z())],
            ..base()
        },
    );
    push(
        "0_2 eps=1 split pair",
        O0_2,
        ParamSet {
            eps: Some(1),
            with_one: true,
            odd_functions: vec![
                ofun(QuasiPoly::zero(), QuasiPoly::one(), QuasiPoly::zero()),
                ofun(QuasiPoly::zero(), QuasiPoly::zero(), QuasiPoly::one()),
            ],
            ..base()
        },
    );
    push(
        "0_2 chi=omega=z",
        O0_2,
        ParamSet {
            even_functions: vec![hfun(zp(2))],
            odd_functions: vec![ofun(QuasiPoly::zero(), QuasiPoly::z(), QuasiPoly::z())],
            ..base()
        },
    );
    push(
        "0_2a pure chi",
        O0_2a,
        ParamSet {
            even_functions: vec![hfun(QuasiPoly::z())],
            odd_functions: vec![ofun(QuasiPoly::zero(), zp(2), QuasiPoly::zero())],
            ..base()
        },
    );
    push(
        "0_2b mixed",
        O0_2b,
        ParamSet {
            with_one: true,
            ..base()
        },
    );
    push(
        "0_2b split",
        O0_2b,
        ParamSet {
            eps_hat: Some(1),
            with_one: true,
            ..base()
        },
    );

    // tier 1
    push(
        "1_1 polynomial block",
        O1_1,
        ParamSet {
            exponents_m: vec![mblock("0", 0, 2, 0, &[])],
            exponents_sigma: vec![sigma("0", 1)],
            ..base()
        },
    );
    push(
        "1_1 alpha nonzero",
        O1_1,
        ParamSet {
            eps: Some(1),
            alpha: Some(si(1)),
            exponents_m: vec![mblock("0", 0, 1, 0, &[])],
            exponents_sigma: vec![sigma("0", 0)],
            ..base()
        },
    );
    push(
        "1_1 shifted exponent",
        O1_1,
        ParamSet {
            exponents_m: vec![mblock("1", 0, 1, 0, &[]), mblock("0", -1, 1, 0, &[])],
            exponents_sigma: vec![sigma("0", 1)],
            ..base()
        },
    );
    push(
        "1_1 mixed block no sigma",
        O1_1,
        ParamSet {
            exponents_m: vec![mblock("0", 0, 1, 1, &["1"])],
            ..base()
        },
    );
    push(
        "1_1 mixed with sigma",
        O1_1,
        ParamSet {
            exponents_m: vec![mblock("0", 0, 2, 1, &["1"])],
            exponents_sigma: vec![sigma("0", 1)],
            ..base()
        },
    );
    push(
        "1_2 both pure blocks",
        O1_2,
        ParamSet {
            exponents_m: vec![mblock("0", 0, 0, 0, &[])],
            exponents_sigma: vec![sigma("0", 0)],
            ..base()
        },
    );
    push(
        "1_2 wider",
        O1_2,
        ParamSet {
            exponents_m: vec![mblock("0", 1, 0, 0, &[])],
            exponents_sigma: vec![sigma("0", 1)],
            ..base()
        },
    );
    push(
        "1_2 eps=1 pure",
        O1_2,
        ParamSet {
            eps: Some(1),
            exponents_m: vec![mblock("0", 0, -1, 0, &[])],
            ..base()
        },
    );
    push(
        "1_2 with mixed",
        O1_2,
        ParamSet {
            exponents_m: vec![mblock("0", 0, 0, 1, &["1"])],
            exponents_sigma: vec![sigma("0", 2)],
            ..base()
        },
    );
    push(
        "1_2a exponential",
        O1_2a,
        ParamSet {
            exponents_m: vec![mblock("i", 1, -1, 0, &[])],
            ..base()
        },
    );
    push(
        "1_2b unit seed",
        O1_2b,
        ParamSet {
            eps_hat: Some(1),
            exponents_sigma: vec![sigma("0", 0)],
            ..base()
        },
    );
    push(
        "1_3 matched degrees",
        O1_3,
        ParamSet {
            exponents_m: vec![mblock("0", 0, -1, 0, &[])],
            exponents_sigma: vec![sigma("0", 0)],
            ..base()
        },
    );
    push(
        "1_3 s0 = m0+1",
        O1_3,
        ParamSet {
            exponents_m: vec![mblock("0", 0, -1, 0, &[])],
            exponents_sigma: vec![sigma("0", 1)],
            ..base()
        },
    );
    push(
        "1_3 twisted dtheta",
        O1_3,
        ParamSet {
            eps_hat: Some(1),
            exponents_m: vec![mblock("0", 0, -1, 0, &[])],
            exponents_sigma: vec![sigma("0", 1)],
            ..base()
        },
    );
    push(
        "1_3 alpha branch",
        O1_3,
        ParamSet {
            eps: Some(1),
            alpha: Some(si(1)),
            exponents_m: vec![mblock("0", 0, -1, 0, &[])],
            exponents_sigma: vec![sigma("0", 0)],
            ..base()
        },
    );
    push(
        "1_3 exponential pair",
        O1_3,
        ParamSet {
            exponents_m: vec![mblock("0", 0, -1, 0, &[]), mblock("1", 0, -1, 0, &[])],
            exponents_sigma: vec![sigma("0", 0), sigma("1", 0)],
            ..base()
        },
    );
    push("1_4 minimal", O1_4, base());
    push(
        "1_4 with theta",
        O1_4,
        ParamSet {
            exponents_m: vec![mblock("0", 0, -1, 0, &[])],
            exponents_sigma: vec![sigma("0", 0)],
            ..base()
        },
    );
    push(
        "1_4 s0 = m0+1",
        O1_4,
        ParamSet {
            exponents_m: vec![mblock("0", 0, -1, 0, &[])],
            exponents_sigma: vec![sigma("0", 1)],
            ..base()
        },
    );
    push(
        "1_4 exponential",
        O1_4,
        ParamSet {
            exponents_m: vec![mblock("-1", 1, -1, 0, &[])],
            exponents_sigma: vec![sigma("-1", 1)],
            ..base()
        },
    );

    // tier 2
    push(
        "2_1 pure",
        O2_1,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(-1)),
            m: Some(0),
            n: Some(1),
            s: Some(1),
            ..base()
        },
    );
    push(
        "2_1 mixed",
        O2_1,
        ParamSet {
            m: Some(1),
            n: Some(0),
            r: Some(1),
            c: Some(si(1)),
            s: Some(-1),
            ..base()
        },
    );
    push(
        "2_1 theta only",
        O2_1,
        ParamSet {
            alpha: Some(si(1)),
            m: Some(-1),
            n: Some(2),
            s: Some(0),
            ..base()
        },
    );
    push(
        "2_2 pure pair",
        O2_2,
        ParamSet {
            alpha: Some(si(1)),
            m: Some(0),
            n: Some(0),
            s: Some(0),
            ..base()
        },
    );
    push(
        "2_2 mixed",
        O2_2,
        ParamSet {
            alpha: Some(s("1/2")),
            m: Some(1),
            n: Some(0),
            r: Some(1),
            c: Some(si(1)),
            s: Some(3),
            ..base()
        },
    );
    push(
        "2_2 eps=1",
        O2_2,
        ParamSet {
            eps: Some(1),
            gamma: Some(si(2)),
            alpha: Some(s("-1/2")),
            m: Some(0),
            n: Some(0),
            s: Some(0),
            ..base()
        },
    );
    push(
        "2_2a pure dtheta",
        O2_2a,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(s("1/2")),
            m: Some(1),
            ..base()
        },
    );
    push(
        "2_2b eps_hat=1",
        O2_2b,
        ParamSet {
            s: Some(0),
            p: Some(1),
            q: Some(1),
            ..base()
        },
    );
    push(
        "2_3 s=m",
        O2_3,
        ParamSet {
            alpha: Some(si(2)),
            m: Some(0),
            s: Some(0),
            ..base()
        },
    );
    push(
        "2_3 s=m+1",
        O2_3,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(1)),
            m: Some(0),
            s: Some(1),
            ..base()
        },
    );
    push(
        "2_3 twisted",
        O2_3,
        ParamSet {
            eps_hat: Some(1),
            alpha: Some(s("-1/2")),
            m: Some(0),
            s: Some(1),
            ..base()
        },
    );
    push(
        "2_4 branch i",
        O2_4,
        ParamSet {
            beta: Some(si(1)),
            delta: Some(si(1)),
            m: Some(0),
            s: Some(0),
            ..base()
        },
    );
    push(
        "2_4 branch i wider",
        O2_4,
        ParamSet {
            beta: Some(s("-1/2")),
            delta: Some(s("-1/2")),
            m: Some(1),
            s: Some(1),
            ..base()
        },
    );
    push(
        "2_4 branch ii",
        O2_4,
        ParamSet {
            eps_hat: Some(1),
            delta: Some(si(2)),
            s: Some(0),
            ..base()
        },
    );
    push(
        "2_5 branch i",
        O2_5,
        ParamSet {
            alpha: Some(si(1)),
            m: Some(0),
            s: Some(1),
            ..base()
        },
    );
    push(
        "2_5 branch i minimal",
        O2_5,
        ParamSet {
            alpha: Some(si(1)),
            s: Some(0),
            ..base()
        },
    );
    push(
        "2_5 branch ii",
        O2_5,
        ParamSet {
            eps: Some(1),
            eps_hat: Some(1),
            alpha: Some(s("1/2")),
            beta: Some(si(-1)),
            gamma: Some(si(1)),
            m: Some(0),
            s: Some(1),
            ..base()
        },
    );
    push(
        "2_6 s=m",
        O2_6,
        ParamSet {
            alpha: Some(s("1/2")),
            m: Some(0),
            s: Some(0),
            ..base()
        },
    );
    push(
        "2_6 s=m+1",
        O2_6,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(1)),
            m: Some(0),
            s: Some(1),
            ..base()
        },
    );
    push(
        "2_6 m=1",
        O2_6,
        ParamSet {
            alpha: Some(s("1/2")),
            m: Some(1),
            s: Some(1),
            ..base()
        },
    );
    push(
        "2_7 branch i",
        O2_7,
        ParamSet {
            beta: Some(si(1)),
            delta: Some(si(1)),
            m: Some(0),
            s: Some(0),
            ..base()
        },
    );
    push(
        "2_7 branch i m=1",
        O2_7,
        ParamSet {
            beta: Some(s("1/2")),
            delta: Some(s("1/2")),
            m: Some(1),
            s: Some(1),
            ..base()
        },
    );
    push(
        "2_7 branch ii",
        O2_7,
        ParamSet {
            delta: Some(si(2)),
            s: Some(0),
            ..base()
        },
    );

    // tier 3
    push(
        "3_1 m=0",
        O3_1,
        ParamSet {
            alpha: Some(si(1)),
            m: Some(0),
            ..base()
        },
    );
    push(
        "3_1 m=1",
        O3_1,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(1)),
            m: Some(1),
            ..base()
        },
    );
    push(
        "3_1 m=2",
        O3_1,
        ParamSet {
            alpha: Some(si(0)),
            beta: Some(s("1/2")),
            m: Some(2),
            ..base()
        },
    );
    push(
        "3_2 theta only",
        O3_2,
        ParamSet {
            alpha: Some(si(0)),
            beta: Some(si(1)),
            m: Some(0),
            ..base()
        },
    );
    push(
        "3_2 with vector part",
        O3_2,
        ParamSet {
            alpha: Some(si(0)),
            beta: Some(s("1/2")),
            m: Some(0),
            with_vector_part: true,
            ..base()
        },
    );
    push(
        "3_2 m=1 vector",
        O3_2,
        ParamSet {
            alpha: Some(s("-1/2")),
            beta: Some(si(1)),
            m: Some(1),
            with_vector_part: true,
            ..base()
        },
    );
    push(
        "3_3 m=0",
        O3_3,
        ParamSet {
            alpha: Some(si(0)),
            beta: Some(si(1)),
            m: Some(0),
            ..base()
        },
    );
    push(
        "3_3 m=1",
        O3_3,
        ParamSet {
            alpha: Some(s("1/2")),
            m: Some(1),
            ..base()
        },
    );
    push(
        "3_3 m=2",
        O3_3,
        ParamSet {
            alpha: Some(si(1)),
            beta: Some(s("-1/2")),
            m: Some(2),
            ..base()
        },
    );
    push(
        "3_4 plain",
        O3_4,
        ParamSet {
            beta: Some(si(1)),
            with_vector_part: true,
            ..base()
        },
    );
    push(
        "3_4 twisted",
        O3_4,
        ParamSet {
            eps_hat: Some(1),
            with_one: true,
            ..base()
        },
    );
    push(
        "3_4 eps=1",
        O3_4,
        ParamSet {
            eps: Some(1),
            eps_hat: Some(1),
            gamma: Some(si(1)),
            with_one: true,
            ..base()
        },
    );
    push(
        "3_4a vector",
        O3_4a,
        ParamSet {
            beta: Some(s("1/2")),
            with_vector_part: true,
            ..base()
        },
    );
    push(
        "3_4b plain",
        O3_4b,
        ParamSet {
            with_one: true,
            beta: Some(s("-1/2")),
            ..base()
        },
    );
    push(
        "3_5 standard form",
        O3_5,
        ParamSet {
            alpha: Some(s("1/2")),
            eps: Some(1),
            beta: Some(si(0)),
            gamma: Some(si(0)),
            ..base()
        },
    );
    push(
        "3_5 eps=1 shifted",
        O3_5,
        ParamSet {
            alpha: Some(s("1/2")),
            eps: Some(1),
            beta: Some(s("1/2")),
            gamma: Some(si(-1)),
            with_one: true,
            ..base()
        },
    );
    push(
        "3_5 eps=0",
        O3_5,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(1)),
            ..base()
        },
    );
    push(
        "3_6 plain",
        O3_6,
        ParamSet {
            alpha: Some(si(1)),
            ..base()
        },
    );
    push(
        "3_6 with theta_dtheta",
        O3_6,
        ParamSet {
            alpha: Some(si(1)),
            eps: Some(1),
            gamma: Some(si(2)),
            ..base()
        },
    );
    push(
        "3_6 with one",
        O3_6,
        ParamSet {
            alpha: Some(si(1)),
            with_one: true,
            ..base()
        },
    );
    d
}

/// One draw per module row: the bare shapes against their even algebra
/// ("shape:" entries) and the per-case modules ("case:" entries).
pub fn module_cases() -> Vec<GridCase> {
    use FamilyId::*;
    let base = ParamSet::default;
    let mut d: Vec<GridCase> = Vec::new();
    let mut push = |label: &'static str, family: FamilyId, params: ParamSet| {
        d.push(GridCase {
            label,
            family,
            params,
        });
    };

    push(
        "shape:n0.0",
        N0_0,
        ParamSet {
            with_one: true,
            module_functions: vec![mfun(QuasiPoly::one().add(&QuasiPoly::z()), zp(2))],
            ..base()
        },
    );
    push(
        "shape:n0.1",
        N0_1,
        ParamSet {
            eps: Some(1),
            alpha: Some(s("1/2")),
            module_functions: vec![
                mfun(zp(1), zp(2)),
                mfun(QuasiPoly::one(), QuasiPoly::zero()),
            ],
            ..base()
        },
    );
    push(
        "shape:n1.0",
        N1_0,
        ParamSet {
            exponents_sigma: vec![sigma("0", 0)],
            exponents_n: vec![mblock("0", 0, 0, 1, &["1"]), mblock("1", 1, 1, 0, &[])],
            ..base()
        },
    );
    push(
        "shape:n1.1",
        N1_1,
        ParamSet {
            eps: Some(1),
            alpha: Some(si(1)),
            exponents_n: vec![mblock("0", 1, 0, 0, &[]), mblock("-1", 0, 0, 0, &[])],
            ..base()
        },
    );
    push(
        "shape:n2.0",
        N2_0,
        ParamSet {
            alpha: Some(si(1)),
            beta: Some(s("1/2")),
            s: Some(0),
            p: Some(1),
            q: Some(0),
            t: Some(1),
            c: Some(si(1)),
            ..base()
        },
    );
    push(
        "shape:n2.1",
        N2_1,
        ParamSet {
            eps: Some(1),
            alpha: Some(s("1/2")),
            beta: Some(si(-1)),
            gamma: Some(si(1)),
            s: Some(0),
            p: Some(1),
            q: Some(1),
            ..base()
        },
    );
    push(
        "shape:n3.0",
        N3_0,
        ParamSet {
            beta: Some(si(-1)),
            p: Some(2),
            c: Some(si(2)),
            with_one: true,
            ..base()
        },
    );
    push(
        "shape:n3.1",
        N3_1,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(-1)),
            eps: Some(1),
            gamma: Some(si(1)),
            p: Some(2),
            ..base()
        },
    );
    push(
        "shape:n3.2",
        N3_2,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(-1)),
            q: Some(1),
            ..base()
        },
    );
    push(
        "shape:n3.3",
        N3_3,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(s("-1/2")),
            p: Some(1),
            q: Some(0),
            ..base()
        },
    );

    push(
        "case:0_1",
        O0_1,
        ParamSet {
            with_one: true,
            odd_functions: vec![ofun(QuasiPoly::one(), QuasiPoly::zero(), QuasiPoly::z())],
            module_functions: vec![mfun(QuasiPoly::one(), QuasiPoly::one())],
            ..base()
        },
    );
    push(
        "case:0_2a",
        O0_2a,
        ParamSet {
            odd_functions: vec![ofun(QuasiPoly::zero(), QuasiPoly::z(), QuasiPoly::zero())],
            module_functions: vec![mfun(QuasiPoly::z(), QuasiPoly::one())],
            ..base()
        },
    );
    push(
        "case:0_2b:mirror",
        O0_2b,
        ParamSet {
            with_one: true,
            module_functions: vec![mfun(QuasiPoly::z(), zp(2))],
            ..base()
        },
    );
    push(
        "case:0_2b:doubled",
        O0_2b,
        ParamSet {
            eps_hat: Some(1),
            with_one: true,
            module_functions: vec![mfun(
                QuasiPoly::one().add(&QuasiPoly::z()),
                QuasiPoly::zero(),
            )],
            ..base()
        },
    );

    push(
        "case:1_1",
        O1_1,
        ParamSet {
            exponents_m: vec![mblock("0", 0, 0, 0, &[])],
            exponents_sigma: vec![sigma("0", 0)],
            exponents_n: vec![mblock("0", 1, 1, 0, &[])],
            ..base()
        },
    );
    push(
        "case:1_2a",
        O1_2a,
        ParamSet {
            exponents_m: vec![mblock("0", 1, -1, 0, &[])],
            exponents_sigma: vec![sigma("0", 0)],
            exponents_n: vec![mblock("0", 0, 1, 0, &[])],
            ..base()
        },
    );
    push(
        "case:1_2b",
        O1_2b,
        ParamSet {
            eps_hat: Some(1),
            exponents_sigma: vec![sigma("0", 0)],
            exponents_n: vec![mblock("1", 0, 0, 1, &["1"])],
            ..base()
        },
    );
    push(
        "case:1_3",
        O1_3,
        ParamSet {
            eps_tilde: Some(1),
            exponents_sigma: vec![sigma("0", 0)],
            exponents_n: vec![mblock("0", 0, 0, 0, &[])],
            ..base()
        },
    );
    push(
        "case:1_4:n1.0",
        O1_4,
        ParamSet {
            exponents_sigma: vec![sigma("0", 0)],
            exponents_n: vec![mblock("0", 1, 0, 0, &[]), mblock("1", 0, 0, 2, &[])],
            ..base()
        },
    );
    push(
        "case:1_4:n1.1",
        O1_4,
        ParamSet {
            exponents_m: vec![mblock("0", 0, -1, 0, &[])],
            exponents_sigma: vec![sigma("0", 0)],
            exponents_n: vec![mblock("1", 1, 1, 0, &[])],
            ..base()
        },
    );

    push(
        "case:2_1",
        O2_1,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(s("-1/2")),
            m: Some(1),
            n: Some(0),
            r: Some(1),
            c: Some(si(1)),
            s: Some(0),
            p: Some(1),
            q: Some(0),
            ..base()
        },
    );
    push(
        "case:2_2a",
        O2_2a,
        ParamSet {
            eps: Some(1),
            gamma: Some(si(1)),
            alpha: Some(s("1/2")),
            beta: Some(si(1)),
            m: Some(1),
            s: Some(0),
            p: Some(1),
            q: Some(0),
            ..base()
        },
    );
    push(
        "case:2_2b",
        O2_2b,
        ParamSet {
            s: Some(0),
            p: Some(1),
            q: Some(1),
            t: Some(1),
            eps_hat: Some(1),
            ..base()
        },
    );
    push(
        "case:2_3",
        O2_3,
        ParamSet {
            eps_hat: Some(1),
            eps_tilde: Some(1),
            s: Some(0),
            p: Some(0),
            q: Some(0),
            ..base()
        },
    );
    push(
        "case:2_4",
        O2_4,
        ParamSet {
            eps_tilde: Some(1),
            delta: Some(si(-1)),
            s: Some(0),
            p: Some(0),
            q: Some(0),
            ..base()
        },
    );
    push(
        "case:2_5",
        O2_5,
        ParamSet {
            alpha: Some(si(1)),
            s: Some(0),
            p: Some(1),
            q: Some(0),
            ..base()
        },
    );
    push(
        "case:2_6",
        O2_6,
        ParamSet {
            alpha: Some(s("1/2")),
            m: Some(0),
            s: Some(0),
            p: Some(1),
            q: Some(1),
            ..base()
        },
    );
    push(
        "case:2_7",
        O2_7,
        ParamSet {
            eps_tilde: Some(1),
            delta: Some(si(3)),
            s: Some(0),
            p: Some(0),
            q: Some(0),
            ..base()
        },
    );

    push(
        "case:3_1:one_plus_theta",
        O3_1,
        ParamSet {
            alpha: Some(si(0)),
            m: Some(2),
            module: Some(ModuleChoice::SpanOnePlusTheta),
            ..base()
        },
    );
    push(
        "case:3_1:one",
        O3_1,
        ParamSet {
            alpha: Some(s("1/2")),
            m: Some(1),
            module: Some(ModuleChoice::SpanOne),
            ..base()
        },
    );
    push(
        "case:3_1:n3.2",
        O3_1,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(-1)),
            m: Some(1),
            q: Some(1),
            module: label("n3.2"),
            ..base()
        },
    );
    push(
        "case:3_1:n3.3",
        O3_1,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(-1)),
            m: Some(1),
            p: Some(2),
            q: Some(1),
            module: label("n3.3"),
            ..base()
        },
    );
    push(
        "case:3_2:n3.2",
        O3_2,
        ParamSet {
            alpha: Some(si(0)),
            beta: Some(si(-1)),
            m: Some(0),
            q: Some(2),
            with_vector_part: true,
            module: label("n3.2"),
            ..base()
        },
    );
    push(
        "case:3_2:n3.3",
        O3_2,
        ParamSet {
            alpha: Some(si(0)),
            beta: Some(s("-1/2")),
            m: Some(0),
            p: Some(1),
            q: Some(1),
            with_vector_part: true,
            module: label("n3.3"),
            ..base()
        },
    );
    push(
        "case:3_3:n3.1",
        O3_3,
        ParamSet {
            alpha: Some(si(1)),
            beta: Some(si(-1)),
            m: Some(2),
            p: Some(2),
            module: label("n3.1"),
            ..base()
        },
    );
    push(
        "case:3_3:n3.3",
        O3_3,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(si(-1)),
            m: Some(1),
            p: Some(2),
            q: Some(1),
            module: label("n3.3"),
            ..base()
        },
    );
    push(
        "case:3_4a:n3.1",
        O3_4a,
        ParamSet {
            beta: Some(si(-1)),
            p: Some(2),
            module: label("n3.1"),
            ..base()
        },
    );
    push(
        "case:3_4a:n3.3",
        O3_4a,
        ParamSet {
            beta: Some(s("-1/2")),
            p: Some(1),
            q: Some(1),
            with_theta: true,
            with_one: true,
            with_vector_part: true,
            module: label("n3.3"),
            ..base()
        },
    );
    push(
        "case:3_4b:n3.0",
        O3_4b,
        ParamSet {
            beta: Some(s("-1/2")),
            p: Some(1),
            c: Some(si(1)),
            with_one: true,
            module: label("n3.0"),
            ..base()
        },
    );
    push(
        "case:3_4b:n3.3",
        O3_4b,
        ParamSet {
            beta: Some(s("-1/2")),
            p: Some(1),
            q: Some(1),
            c: Some(si(1)),
            with_one: true,
            with_vector_part: true,
            module: label("n3.3"),
            ..base()
        },
    );
    push(
        "case:3_5:one",
        O3_5,
        ParamSet {
            alpha: Some(s("1/2")),
            eps: Some(1),
            beta: Some(si(0)),
            gamma: Some(si(0)),
            module: Some(ModuleChoice::SpanOne),
            ..base()
        },
    );
    push(
        "case:3_5:n3.3",
        O3_5,
        ParamSet {
            alpha: Some(s("1/2")),
            beta: Some(s("-1/2")),
            eps: Some(1),
            gamma: Some(si(1)),
            p: Some(1),
            q: Some(0),
            module: label("n3.3"),
            ..base()
        },
    );
    push(
        "case:3_6:one",
        O3_6,
        ParamSet {
            alpha: Some(si(1)),
            ..base()
        },
    );
    d
}

/// The generator set a module case is verified against: the even algebra of
/// the matching tier for bare module shapes, the case itself otherwise.
pub fn instance_family_for(case: &GridCase) -> FamilyId {
    if case.family.is_module() {
        match case.family.tier().unwrap_or(0) {
            0 => FamilyId::S0_0,
            1 => FamilyId::S0_1,
            2 => FamilyId::S0_2,
            _ => FamilyId::S0_3,
        }
    } else {
        case.family
    }
}
