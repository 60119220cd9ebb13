//! Exact verification: span membership over the monomial-exponential
//! coordinate system, graded-closure checks for superalgebra generator sets,
//! and invariance checks for function modules.
//!
//! Linear independence of the family {z^k e^{μz}} (and its θ-tagged copy) is
//! a theorem of the underlying function space, so span questions reduce to
//! exact linear algebra over Q(i).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::quasipoly::{QuasiPoly, SuperFunction};
use crate::scalar::Scalar;
use crate::superop::{GeneralOperator, Grade, SuperOperator, TermKey};

/// Anything with exact coordinates over an ordered key set.
pub trait Coordinatize: Clone {
    type Key: Ord + Clone + fmt::Debug;
    fn coordinates(&self) -> BTreeMap<Self::Key, Scalar>;
    fn from_coordinates(map: &BTreeMap<Self::Key, Scalar>) -> Self;
}

impl Coordinatize for QuasiPoly {
    type Key = (Scalar, usize);
    fn coordinates(&self) -> BTreeMap<Self::Key, Scalar> {
        QuasiPoly::coordinates(self)
    }
    fn from_coordinates(map: &BTreeMap<Self::Key, Scalar>) -> Self {
        QuasiPoly::from_coordinates(map)
    }
}

impl Coordinatize for SuperFunction {
    type Key = (u8, Scalar, usize);
    fn coordinates(&self) -> BTreeMap<Self::Key, Scalar> {
        SuperFunction::coordinates(self)
    }
    fn from_coordinates(map: &BTreeMap<Self::Key, Scalar>) -> Self {
        SuperFunction::from_coordinates(map)
    }
}

impl Coordinatize for GeneralOperator {
    type Key = (TermKey, Scalar, usize);
    fn coordinates(&self) -> BTreeMap<Self::Key, Scalar> {
        GeneralOperator::coordinates(self)
    }
    fn from_coordinates(map: &BTreeMap<Self::Key, Scalar>) -> Self {
        GeneralOperator::from_coordinates(map)
    }
}

/// Pairs over an abstract two-dimensional target (v1, v2) — the shape the
/// translation-bimodule builder emits.
impl Coordinatize for (QuasiPoly, QuasiPoly) {
    type Key = (u8, Scalar, usize);
    fn coordinates(&self) -> BTreeMap<Self::Key, Scalar> {
        let mut map = BTreeMap::new();
        for ((mu, k), c) in self.0.coordinates() {
            map.insert((0u8, mu, k), c);
        }
        for ((mu, k), c) in self.1.coordinates() {
            map.insert((1u8, mu, k), c);
        }
        map
    }
    fn from_coordinates(map: &BTreeMap<Self::Key, Scalar>) -> Self {
        let mut a = BTreeMap::new();
        let mut b = BTreeMap::new();
        for ((tag, mu, k), c) in map {
            let t = if *tag == 0 { &mut a } else { &mut b };
            t.insert((mu.clone(), *k), c.clone());
        }
        (
            QuasiPoly::from_coordinates(&a),
            QuasiPoly::from_coordinates(&b),
        )
    }
}

type Coords<T> = BTreeMap<<T as Coordinatize>::Key, Scalar>;

fn coords_axpy<K: Ord + Clone>(
    target: &mut BTreeMap<K, Scalar>,
    factor: &Scalar,
    source: &BTreeMap<K, Scalar>,
) {
    for (k, v) in source {
        let entry = target.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += &(factor * v);
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

/// Row-reduced basis of the span of a list of elements, kept in reduced
/// echelon form (each pivot key occurs in exactly one stored row) together
/// with the expression of every stored row in the original elements.
pub struct SpanBasis<T: Coordinatize> {
    elements: Vec<T>,
    rows: Vec<Coords<T>>,
    combos: Vec<Vec<Scalar>>,
}

/// Outcome of a span-membership query that failed: the nonzero residual left
/// after projecting onto the span.
#[derive(Clone, Debug)]
pub struct NotInSpan<T>(pub T);

impl<T: Coordinatize> SpanBasis<T> {
    pub fn empty() -> Self {
        SpanBasis {
            elements: Vec::new(),
            rows: Vec::new(),
            combos: Vec::new(),
        }
    }

    /// Builds the reduced basis, requiring the inputs to be independent.
    /// Returns Err with the index of the first dependent element otherwise.
    pub fn new(elements: &[T]) -> Result<Self, usize> {
        let mut basis = SpanBasis::empty();
        for (i, e) in elements.iter().enumerate() {
            if !basis.insert(e.clone()) {
                return Err(i);
            }
        }
        Ok(basis)
    }

    /// Builds from a spanning set, silently dropping dependent elements.
    /// Returns the indices of the kept elements.
    pub fn spanning(elements: &[T]) -> (Self, Vec<usize>) {
        let mut basis = SpanBasis::empty();
        let mut kept = Vec::new();
        for (i, e) in elements.iter().enumerate() {
            if basis.insert(e.clone()) {
                kept.push(i);
            }
        }
        (basis, kept)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    /// Adds an element; returns false (and stores nothing) if it was already
    /// in the span.
    pub fn insert(&mut self, element: T) -> bool {
        let coords = element.coordinates();
        let n = self.elements.len();
        let (residual, mut combo) = self.reduce(&coords);
        if residual.is_empty() {
            return false;
        }
        // residual = element + Σ combo·elements; give it 1 on the new slot
        for c in self.combos.iter_mut() {
            c.push(Scalar::zero());
        }
        combo.push(Scalar::one());
        debug_assert_eq!(combo.len(), n + 1);
        // keep reduced form: eliminate the new pivot from the existing rows
        let pivot = residual.keys().next().unwrap().clone();
        let pivot_val = residual[&pivot].clone();
        for i in 0..self.rows.len() {
            if let Some(v) = self.rows[i].get(&pivot) {
                let factor = -&(v / &pivot_val);
                coords_axpy(&mut self.rows[i], &factor, &residual);
                let add: Vec<Scalar> = combo.iter().map(|c| &factor * c).collect();
                for (slot, a) in self.combos[i].iter_mut().zip(add) {
                    *slot += &a;
                }
            }
        }
        self.elements.push(element);
        self.rows.push(residual);
        self.combos.push(combo);
        true
    }

    /// Reduce coordinates against the stored rows. Returns the residual and
    /// the accumulated combination, so that residual = input + Σ combo·elements.
    fn reduce(&self, coords: &Coords<T>) -> (Coords<T>, Vec<Scalar>) {
        let mut r = coords.clone();
        let mut combo = vec![Scalar::zero(); self.elements.len()];
        for (row, row_combo) in self.rows.iter().zip(&self.combos) {
            let pivot = row.keys().next().expect("stored rows are nonzero");
            if let Some(c) = r.get(pivot) {
                let factor = -&(c / &row[pivot]);
                coords_axpy(&mut r, &factor, row);
                for (slot, rc) in combo.iter_mut().zip(row_combo) {
                    *slot += &(&factor * rc);
                }
            }
        }
        (r, combo)
    }

    /// Exact span membership. On success returns the unique coefficients in
    /// terms of the stored (independent) elements; on failure returns the
    /// residual after projection, which re-verifies as a non-member.
    pub fn membership(&self, element: &T) -> Result<Vec<Scalar>, NotInSpan<T>> {
        let (residual, combo) = self.reduce(&element.coordinates());
        if residual.is_empty() {
            Ok(combo.iter().map(|c| -c).collect())
        } else {
            Err(NotInSpan(T::from_coordinates(&residual)))
        }
    }

    pub fn contains(&self, element: &T) -> bool {
        self.membership(element).is_ok()
    }
}

/// Basis of the kernel of the linear map x ↦ Σ xᵢ·colᵢ, as coefficient
/// vectors over the columns.
pub fn nullspace<K: Ord + Clone + fmt::Debug>(columns: &[BTreeMap<K, Scalar>]) -> Vec<Vec<Scalar>> {
    // Feed columns into an echelon structure; every dependency yields one
    // basis vector of the kernel.
    struct Raw<K: Ord + Clone + fmt::Debug>(BTreeMap<K, Scalar>);
    impl<K: Ord + Clone + fmt::Debug> Clone for Raw<K> {
        fn clone(&self) -> Self {
            Raw(self.0.clone())
        }
    }
    impl<K: Ord + Clone + fmt::Debug> Coordinatize for Raw<K> {
        type Key = K;
        fn coordinates(&self) -> BTreeMap<K, Scalar> {
            self.0.clone()
        }
        fn from_coordinates(map: &BTreeMap<K, Scalar>) -> Self {
            Raw(map.clone())
        }
    }
    let mut basis: SpanBasis<Raw<K>> = SpanBasis::empty();
    let mut kept: Vec<usize> = Vec::new();
    let mut kernel = Vec::new();
    for (i, col) in columns.iter().enumerate() {
        match basis.membership(&Raw(col.clone())) {
            Ok(coeffs) => {
                let mut vec = vec![Scalar::zero(); columns.len()];
                vec[i] = Scalar::from_int(-1);
                for (slot, c) in kept.iter().zip(coeffs) {
                    vec[*slot] = c;
                }
                kernel.push(vec);
            }
            Err(_) => {
                basis.insert(Raw(col.clone()));
                kept.push(i);
            }
        }
    }
    kernel
}

/// One verified pair or generator action in a report.
#[derive(Clone, Debug)]
pub struct CheckEntry {
    pub label: String,
    pub status: CheckStatus,
    /// Membership coefficients over the target basis, when the check passed.
    pub coefficients: Option<Vec<Scalar>>,
    /// Rendered residual witness, when the check failed.
    pub residual: Option<String>,
    pub residual_operator: Option<GeneralOperator>,
    pub residual_function: Option<SuperFunction>,
}

impl Serialize for CheckEntry {
    /// Serialized as {pair, status, witness}: the witness holds the
    /// membership coefficients on pass, the rendered residual on failure.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("CheckEntry", 3)?;
        st.serialize_field("pair", &self.label)?;
        st.serialize_field("status", &self.status)?;
        match self.status {
            CheckStatus::Pass => {
                #[derive(Serialize)]
                struct W<'a> {
                    coefficients: &'a Option<Vec<Scalar>>,
                }
                st.serialize_field(
                    "witness",
                    &W {
                        coefficients: &self.coefficients,
                    },
                )?;
            }
            CheckStatus::Fail => {
                #[derive(Serialize)]
                struct W<'a> {
                    residual: &'a Option<String>,
                }
                st.serialize_field(
                    "witness",
                    &W {
                        residual: &self.residual,
                    },
                )?;
            }
        }
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Total report: every pair is checked even after the first failure.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<CheckEntry>,
    pub passed: bool,
}

impl VerificationReport {
    fn new(subject: &str) -> Self {
        VerificationReport {
            subject: subject.to_string(),
            checks: Vec::new(),
            passed: true,
        }
    }

    fn push_pass(&mut self, label: String, coefficients: Vec<Scalar>) {
        self.checks.push(CheckEntry {
            label,
            status: CheckStatus::Pass,
            coefficients: Some(coefficients),
            residual: None,
            residual_operator: None,
            residual_function: None,
        });
    }

    fn push_fail_op(&mut self, label: String, residual: GeneralOperator) {
        self.passed = false;
        self.checks.push(CheckEntry {
            label,
            status: CheckStatus::Fail,
            coefficients: None,
            residual: Some(residual.to_string()),
            residual_operator: Some(residual),
            residual_function: None,
        });
    }

    fn push_fail_fn(&mut self, label: String, residual: SuperFunction) {
        self.passed = false;
        self.checks.push(CheckEntry {
            label,
            status: CheckStatus::Fail,
            coefficients: None,
            residual: Some(residual.to_string()),
            residual_operator: None,
            residual_function: Some(residual),
        });
    }

    fn push_fail_note(&mut self, label: String, note: String) {
        self.passed = false;
        self.checks.push(CheckEntry {
            label,
            status: CheckStatus::Fail,
            coefficients: None,
            residual: Some(note),
            residual_operator: None,
            residual_function: None,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

/// Graded closure of a generator set: [even, even] ⊂ span(even),
/// [even, odd] ⊂ span(odd), {odd, odd} ⊂ span(even). Pair order is fixed by
/// generator indices, so reports are deterministic.
pub fn check_graded_closure(
    subject: &str,
    even: &[SuperOperator],
    odd: &[SuperOperator],
) -> VerificationReport {
    let mut report = VerificationReport::new(subject);
    let even_ops: Vec<GeneralOperator> = even.iter().map(SuperOperator::to_general).collect();
    let odd_ops: Vec<GeneralOperator> = odd.iter().map(SuperOperator::to_general).collect();

    for (i, op) in even_ops.iter().enumerate() {
        if op.grade() != Grade::Even {
            report.push_fail_note(
                format!("even[{i}]"),
                "generator not an even first-order operator".into(),
            );
        }
    }
    for (i, op) in odd_ops.iter().enumerate() {
        if !(op.grade() == Grade::Odd || op.is_zero()) {
            report.push_fail_note(
                format!("odd[{i}]"),
                "generator not an odd first-order operator".into(),
            );
        }
    }
    if !report.passed {
        return report;
    }

    let (even_span, _) = SpanBasis::spanning(&even_ops);
    let (odd_span, _) = SpanBasis::spanning(&odd_ops);

    for i in 0..even_ops.len() {
        for j in (i + 1)..even_ops.len() {
            let br = even_ops[i]
                .super_bracket(&even_ops[j])
                .expect("homogeneous");
            let label = format!("[even[{i}], even[{j}]]");
            match even_span.membership(&br) {
                Ok(c) => report.push_pass(label, c),
                Err(NotInSpan(r)) => report.push_fail_op(label, r),
            }
        }
    }
    for (i, e) in even_ops.iter().enumerate() {
        for (j, o) in odd_ops.iter().enumerate() {
            let br = e.super_bracket(o).expect("homogeneous");
            let label = format!("[even[{i}], odd[{j}]]");
            match odd_span.membership(&br) {
                Ok(c) => report.push_pass(label, c),
                Err(NotInSpan(r)) => report.push_fail_op(label, r),
            }
        }
    }
    for i in 0..odd_ops.len() {
        for j in i..odd_ops.len() {
            let br = odd_ops[i].super_bracket(&odd_ops[j]).expect("homogeneous");
            let label = format!("{{odd[{i}], odd[{j}]}}");
            match even_span.membership(&br) {
                Ok(c) => report.push_pass(label, c),
                Err(NotInSpan(r)) => report.push_fail_op(label, r),
            }
        }
    }
    report
}

/// Invariance of a function space: T·v ∈ span(basis) for every generator T
/// and basis function v. θ and ∂θ act on the two Λ¹ components.
pub fn check_module_invariance(
    subject: &str,
    even: &[SuperOperator],
    odd: &[SuperOperator],
    basis: &[SuperFunction],
) -> VerificationReport {
    let mut report = VerificationReport::new(subject);
    let (span, _) = SpanBasis::spanning(basis);
    let gens: Vec<(String, GeneralOperator)> = even
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("even[{i}]"), g.to_general()))
        .chain(
            odd.iter()
                .enumerate()
                .map(|(i, g)| (format!("odd[{i}]"), g.to_general())),
        )
        .collect();
    for (name, op) in &gens {
        for (j, v) in basis.iter().enumerate() {
            let image = op.apply(v);
            let label = format!("{name}·basis[{j}]");
            match span.membership(&image) {
                Ok(c) => report.push_pass(label, c),
                Err(NotInSpan(r)) => report.push_fail_fn(label, r),
            }
        }
    }
    report
}

/// Elements of the span with zero ∂z part — the intersection of the span
/// with the abelian part, as recombined operators.
fn vector_field_free_combinations(gens: &[SuperOperator]) -> Vec<SuperOperator> {
    let columns: Vec<BTreeMap<(Scalar, usize), Scalar>> =
        gens.iter().map(|g| g.dz.coordinates()).collect();
    nullspace(&columns)
        .into_iter()
        .map(|combo| {
            let mut acc = SuperOperator::zero();
            for (g, c) in gens.iter().zip(&combo) {
                acc = acc.add(&g.scale(c));
            }
            acc
        })
        .collect()
}

/// Necessary condition for a nonzero odd subspace: every operator of the
/// form g(z)θ∂θ + h(z) in the span must have constant g.
pub fn admits_odd_subspace(even: &[SuperOperator]) -> bool {
    vector_field_free_combinations(even)
        .iter()
        .all(|op| op.theta_dtheta.is_constant())
}

/// Necessary and sufficient condition for a nonzero invariant module: the
/// intersection of the span with the abelian part lies in ⟨θ∂θ, 1⟩.
pub fn admits_finite_module(even: &[SuperOperator]) -> bool {
    vector_field_free_combinations(even)
        .iter()
        .all(|op| op.theta_dtheta.is_constant() && op.scalar.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp_span(items: &[QuasiPoly]) -> SpanBasis<QuasiPoly> {
        SpanBasis::new(items).expect("independent")
    }

    #[test]
    fn membership_basic() {
        // z∂z ∈ span{∂z, z∂z} with coefficients (0, 1)
        let dz = GeneralOperator::dz();
        let zdz = GeneralOperator::term(TermKey::new(false, false, 1), QuasiPoly::z());
        let span = SpanBasis::new(&[dz, zdz.clone()]).unwrap();
        assert_eq!(
            span.membership(&zdz).unwrap(),
            vec![Scalar::zero(), Scalar::one()]
        );
    }

    #[test]
    fn membership_residual() {
        // e^z ∉ span{1, z}; residual is e^z itself
        let span = qp_span(&[QuasiPoly::one(), QuasiPoly::z()]);
        let ez = QuasiPoly::exponential(Scalar::one());
        match span.membership(&ez) {
            Err(NotInSpan(r)) => {
                assert_eq!(r, ez);
                // re-verifies as non-member
                assert!(span.membership(&r).is_err());
            }
            Ok(_) => panic!("should not be in span"),
        }
    }

    #[test]
    fn membership_after_projection() {
        // 1 + z + e^z reduced against {1, z} leaves exactly e^z
        let span = qp_span(&[QuasiPoly::one(), QuasiPoly::z()]);
        let v = QuasiPoly::one()
            .add(&QuasiPoly::z())
            .add(&QuasiPoly::exponential(Scalar::one()));
        match span.membership(&v) {
            Err(NotInSpan(r)) => assert_eq!(r, QuasiPoly::exponential(Scalar::one())),
            Ok(_) => panic!(),
        }
    }

    #[test]
    fn reconstruction_from_coefficients() {
        let a = QuasiPoly::one().add(&QuasiPoly::z());
        let b = QuasiPoly::z().add(&QuasiPoly::z_pow(2));
        let span = qp_span(&[a.clone(), b.clone()]);
        let v = a
            .scale(&Scalar::rational(1, 2))
            .add(&b.scale(&Scalar::from_int(-3)));
        let coeffs = span.membership(&v).unwrap();
        let rebuilt = a.scale(&coeffs[0]).add(&b.scale(&coeffs[1]));
        assert_eq!(rebuilt, v);
    }

    #[test]
    fn dependent_inputs_rejected() {
        let a = QuasiPoly::one();
        let b = QuasiPoly::one().scale(&Scalar::from_int(2));
        assert_eq!(SpanBasis::new(&[a.clone(), b.clone()]).err(), Some(1));
        let (span, kept) = SpanBasis::spanning(&[a, b, QuasiPoly::z()]);
        assert_eq!(span.rank(), 2);
        assert_eq!(kept, vec![0, 2]);
    }

    #[test]
    fn nullspace_finds_dependencies() {
        let cols = vec![
            QuasiPoly::one().coordinates(),
            QuasiPoly::z().coordinates(),
            QuasiPoly::one().add(&QuasiPoly::z()).coordinates(),
        ];
        let kernel = nullspace(&cols);
        assert_eq!(kernel.len(), 1);
        let k = &kernel[0];
        let combo = QuasiPoly::one()
            .scale(&k[0])
            .add(&QuasiPoly::z().scale(&k[1]))
            .add(&QuasiPoly::one().add(&QuasiPoly::z()).scale(&k[2]));
        assert!(combo.is_zero());
    }

    #[test]
    fn odd_subspace_precondition_examples() {
        // {θ∂θ + z}: g = 1 constant
        let a = SuperOperator::even(QuasiPoly::zero(), QuasiPoly::one(), QuasiPoly::z());
        assert!(admits_odd_subspace(&[a]));
        // {zθ∂θ}: g = z is not constant
        let b = SuperOperator::even(QuasiPoly::zero(), QuasiPoly::z(), QuasiPoly::zero());
        assert!(!admits_odd_subspace(&[b]));
        // {∂z}: no abelian part at all
        let c = SuperOperator::even(QuasiPoly::one(), QuasiPoly::zero(), QuasiPoly::zero());
        assert!(admits_odd_subspace(&[c]));
    }

    #[test]
    fn finite_module_condition_examples() {
        // {θ∂θ + γ, 1} lies in ⟨θ∂θ, 1⟩
        let gens = vec![
            SuperOperator::even(QuasiPoly::zero(), QuasiPoly::one(), QuasiPoly::from_int(3)),
            SuperOperator::even(QuasiPoly::zero(), QuasiPoly::zero(), QuasiPoly::one()),
        ];
        assert!(admits_finite_module(&gens));
        // z as a multiplication operator lies in the abelian part but not in 𝔞₀
        let gens = vec![
            SuperOperator::even(QuasiPoly::one(), QuasiPoly::zero(), QuasiPoly::zero()),
            SuperOperator::even(QuasiPoly::zero(), QuasiPoly::zero(), QuasiPoly::z()),
        ];
        assert!(!admits_finite_module(&gens));
        // ∂z alone is fine
        let gens = vec![SuperOperator::even(
            QuasiPoly::one(),
            QuasiPoly::zero(),
            QuasiPoly::zero(),
        )];
        assert!(admits_finite_module(&gens));
        // z∂z + z and z∂z + θ∂θ differ by θ∂θ − z, whose g is constant but
        // whose h = −z is not
        let gens = vec![
            SuperOperator::even(QuasiPoly::z(), QuasiPoly::zero(), QuasiPoly::z()),
            SuperOperator::even(QuasiPoly::z(), QuasiPoly::one(), QuasiPoly::zero()),
        ];
        assert!(admits_odd_subspace(&gens));
        assert!(!admits_finite_module(&gens));
    }

    #[test]
    fn closure_report_abelian_even() {
        let gens = vec![
            SuperOperator::even(QuasiPoly::zero(), QuasiPoly::one(), QuasiPoly::zero()),
            SuperOperator::even(QuasiPoly::zero(), QuasiPoly::zero(), QuasiPoly::one()),
        ];
        let report = check_graded_closure("abelian", &gens, &[]);
        assert!(report.passed);
        assert_eq!(report.checks.len(), 1);
    }

    #[test]
    fn invariance_constant_operator() {
        // the constant operator preserves any module
        let one = SuperOperator::even(QuasiPoly::zero(), QuasiPoly::zero(), QuasiPoly::one());
        let basis = vec![
            SuperFunction::scalar(QuasiPoly::one()),
            SuperFunction::theta_part(QuasiPoly::z()),
        ];
        let report = check_module_invariance("const", &[one], &[], &basis);
        assert!(report.passed);
    }
}
