use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use superqes_core::catalog::{self, FamilyId, ModuleChoice, ParamSet};
use superqes_core::qes::{self, QuadTerm, QuadraticCombination};
use superqes_core::scalar::Scalar;
use superqes_core::superop::{GeneralOperator, TermKey};
use superqes_core::QuasiPoly;

fn osp_params(q: i64) -> ParamSet {
    let p = q + 1;
    ParamSet {
        alpha: "1/2".parse().ok(),
        beta: Some(Scalar::rational(-p, 2)),
        gamma: Some(Scalar::from_int(p)),
        eps: Some(1),
        p: Some(p),
        q: Some(q),
        module: Some(ModuleChoice::Label {
            name: "n3.3".into(),
        }),
        ..ParamSet::default()
    }
}

fn bench_compose(c: &mut Criterion) {
    let a = GeneralOperator::term(TermKey::new(true, false, 2), QuasiPoly::z_pow(3)).add(
        &GeneralOperator::term(
            TermKey::new(false, true, 1),
            QuasiPoly::exponential(Scalar::i()),
        ),
    );
    let b = GeneralOperator::term(TermKey::new(false, true, 2), QuasiPoly::z_pow(2))
        .add(&GeneralOperator::theta_dtheta());
    c.bench_function("compose second-order operators", |bench| {
        bench.iter(|| black_box(&a).compose(black_box(&b)))
    });
}

fn bench_closure(c: &mut Criterion) {
    let inst = catalog::instantiate(FamilyId::O3_5, &osp_params(1)).unwrap();
    c.bench_function("graded closure of the 2α=1 family", |bench| {
        bench.iter(|| black_box(&inst).check_closure().passed)
    });
}

fn bench_aconst(c: &mut Criterion) {
    c.bench_function("first 40 module constants", |bench| {
        bench.iter(|| catalog::compute_a_constants(black_box(40)))
    });
}

fn bench_spectrum(c: &mut Criterion) {
    let params = osp_params(2);
    let inst = catalog::instantiate(FamilyId::O3_5, &params).unwrap();
    let module = catalog::instantiate_module(FamilyId::O3_5, &params).unwrap();
    let combo = QuadraticCombination {
        pairs: vec![
            QuadTerm {
                a: 2,
                b: 0,
                coeff: Scalar::one(),
            },
            QuadTerm {
                a: 1,
                b: 1,
                coeff: Scalar::one(),
            },
            QuadTerm {
                a: 5,
                b: 6,
                coeff: Scalar::one(),
            },
        ],
        ..Default::default()
    };
    let h = qes::build_hamiltonian(&inst.all_gens(), &combo).unwrap();
    let matrix = qes::matrix_representation(&h, &module.basis).unwrap();
    c.bench_function("exact spectrum of a 7x7 representation", |bench| {
        bench.iter(|| qes::spectrum(black_box(&matrix)))
    });
}

criterion_group!(
    benches,
    bench_compose,
    bench_closure,
    bench_aconst,
    bench_spectrum
);
criterion_main!(benches);
