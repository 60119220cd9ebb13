//! The QES pipeline: quadratic combinations of generators, finite matrix
//! representations on an invariant module, exact characteristic polynomials
//! with root extraction, and the ring-preserving equivalence transformations
//! (gauge by e^{p(z)}, affine change of variable with exponential θ-rescale).
//!
//! Numeric root refinement is the single inexact step; it sits behind an
//! exact characteristic polynomial and every numeric root carries its
//! residual |p(λ)|.

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::quasipoly::{Poly, QuasiPoly, SuperFunction};
use crate::scalar::Scalar;
use crate::superop::{GeneralOperator, SuperOperator, TermKey};
use crate::verify::{NotInSpan, SpanBasis};

#[derive(Clone, Debug)]
pub enum QesError {
    BadIndex {
        index: usize,
        generators: usize,
    },
    NotInvariant {
        label: String,
        residual: SuperFunction,
    },
    /// The requested transformation leaves the quasi-polynomial ring.
    NotExact(String),
}

impl fmt::Display for QesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QesError::BadIndex { index, generators } => {
                write!(
                    f,
                    "generator index {index} out of range (have {generators})"
                )
            }
            QesError::NotInvariant { label, residual } => {
                write!(f, "{label} escapes the module; residual {residual}")
            }
            QesError::NotExact(msg) => write!(f, "transformation is not exact: {msg}"),
        }
    }
}

impl std::error::Error for QesError {}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuadTerm {
    pub a: usize,
    pub b: usize,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinearTerm {
    pub a: usize,
    pub coeff: Scalar,
}

/// H = Σ c_{ab} T^a T^b + Σ c_a T^a + c₀ over the generators of one
/// instance (indices into the even-then-odd generator list). The quadratic
/// map is symmetric: an off-diagonal entry {a,b} contributes
/// c·(T^aT^b + T^bT^a).
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuadraticCombination {
    pub pairs: Vec<QuadTerm>,
    pub linear: Vec<LinearTerm>,
    pub constant: Option<Scalar>,
}

/// Normal-ordered quadratic combination; output order is at most 2 when the
/// generators are first order.
pub fn build_hamiltonian(
    generators: &[SuperOperator],
    combo: &QuadraticCombination,
) -> Result<GeneralOperator, QesError> {
    let ops: Vec<GeneralOperator> = generators.iter().map(SuperOperator::to_general).collect();
    let fetch = |i: usize| -> Result<&GeneralOperator, QesError> {
        ops.get(i).ok_or(QesError::BadIndex {
            index: i,
            generators: ops.len(),
        })
    };
    let mut h = GeneralOperator::zero();
    for t in &combo.pairs {
        let a = fetch(t.a)?;
        let b = fetch(t.b)?;
        let mut prod = a.compose(b);
        if t.a != t.b {
            prod = prod.add(&b.compose(a));
        }
        h = h.add(&prod.scale(&t.coeff));
    }
    for t in &combo.linear {
        h = h.add(&fetch(t.a)?.scale(&t.coeff));
    }
    if let Some(c) = &combo.constant {
        h = h.add(&GeneralOperator::function(QuasiPoly::constant(c.clone())));
    }
    Ok(h)
}

/// Square matrix over Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteMatrix {
    data: Vec<Vec<Scalar>>,
}

impl FiniteMatrix {
    pub fn from_rows(data: Vec<Vec<Scalar>>) -> Self {
        let n = data.len();
        assert!(n >= 1, "dimension must be at least 1");
        assert!(data.iter().all(|r| r.len() == n), "matrix must be square");
        FiniteMatrix { data }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in data.iter_mut().enumerate() {
            row[i] = Scalar::one();
        }
        FiniteMatrix { data }
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i][j]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.data
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.dim() {
            t += &self.data[i][i];
        }
        t
    }

    pub fn mul(&self, other: &FiniteMatrix) -> FiniteMatrix {
        let n = self.dim();
        assert_eq!(n, other.dim());
        let mut out = vec![vec![Scalar::zero(); n]; n];
        for (row, out_row) in self.data.iter().zip(out.iter_mut()) {
            for (factor, other_row) in row.iter().zip(&other.data) {
                if factor.is_zero() {
                    continue;
                }
                for (slot, entry) in out_row.iter_mut().zip(other_row) {
                    *slot += &(factor * entry);
                }
            }
        }
        FiniteMatrix { data: out }
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> Scalar {
        let n = self.dim();
        let mut a = self.data.clone();
        let mut sign_flip = false;
        let mut prev = Scalar::one();
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Scalar::zero();
                };
                a.swap(k, p);
                sign_flip = !sign_flip;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &num / &prev;
                }
                a[i][k] = Scalar::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_flip {
            -d
        } else {
            d
        }
    }
}

/// Exact matrix of an operator in the module basis: column j holds the
/// coefficients of H·(basis vector j). Errors with the escaping residual if
/// the module is not preserved.
pub fn matrix_representation(
    h: &GeneralOperator,
    basis: &[SuperFunction],
) -> Result<FiniteMatrix, QesError> {
    let span = SpanBasis::new(basis).map_err(|i| QesError::NotInvariant {
        label: format!("basis[{i}]"),
        residual: SuperFunction::zero(),
    })?;
    let n = basis.len();
    let mut data = vec![vec![Scalar::zero(); n]; n];
    for (j, v) in basis.iter().enumerate() {
        let image = h.apply(v);
        match span.membership(&image) {
            Ok(coeffs) => {
                for (i, c) in coeffs.into_iter().enumerate() {
                    data[i][j] = c;
                }
            }
            Err(NotInSpan(residual)) => {
                return Err(QesError::NotInvariant {
                    label: format!("H·basis[{j}]"),
                    residual,
                })
            }
        }
    }
    Ok(FiniteMatrix::from_rows(data))
}

// ------------------------------------------------- characteristic polynomial

fn poly_eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Coefficients (ascending) of det(xI − M), computed by fraction-free
/// determinants at dim+1 sample points and exact Lagrange interpolation.
pub fn charpoly(m: &FiniteMatrix) -> Vec<Scalar> {
    let n = m.dim();
    let points: Vec<Scalar> = (0..=n as i64).map(Scalar::from_int).collect();
    let values: Vec<Scalar> = points
        .iter()
        .map(|x| {
            let mut shifted = m.data.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                for (j, e) in row.iter_mut().enumerate() {
                    let v = if i == j { x - &*e } else { -&*e };
                    *e = v;
                }
            }
            FiniteMatrix { data: shifted }.det()
        })
        .collect();
    lagrange(&points, &values)
}

/// Exact interpolation through (xᵢ, yᵢ); returns ascending coefficients.
fn lagrange(points: &[Scalar], values: &[Scalar]) -> Vec<Scalar> {
    let n = points.len();
    let mut acc = vec![Scalar::zero(); n];
    for i in 0..n {
        // numerator Π_{j≠i}(x − x_j), denominator Π_{j≠i}(x_i − x_j)
        let mut num = vec![Scalar::one()];
        let mut den = Scalar::one();
        for (j, xj) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            num = poly_mul_linear(&num, &-xj.clone());
            den = &den * &(&points[i] - xj);
        }
        let w = &values[i] / &den;
        for (slot, c) in acc.iter_mut().zip(num.iter()) {
            *slot += &(c * &w);
        }
    }
    while acc.last().is_some_and(Scalar::is_zero) {
        acc.pop();
    }
    acc
}

/// Multiply by (x + shift).
fn poly_mul_linear(p: &[Scalar], shift: &Scalar) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        out[k] += &(c * shift);
        out[k + 1] += c;
    }
    out
}

/// Deflate by a verified root: p(x) / (x − root), exact.
fn deflate(p: &[Scalar], root: &Scalar) -> Vec<Scalar> {
    let n = p.len() - 1;
    let mut out = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for k in (0..n).rev() {
        carry = &p[k + 1] + &(&carry * root);
        out[k] = carry.clone();
    }
    out
}

// ------------------------------------------------------------ root finding

#[derive(Clone, Debug, PartialEq)]
pub enum RootValue {
    Exact(Scalar),
    Numeric { re: f64, im: f64 },
}

#[derive(Clone, Debug)]
pub struct Root {
    pub value: RootValue,
    /// |charpoly(λ)| evaluated in floating arithmetic; 0 for exact roots.
    pub residual: f64,
}

impl Root {
    pub fn approx(&self) -> Complex64 {
        match &self.value {
            RootValue::Exact(s) => {
                let (re, im) = s.to_f64_pair();
                Complex64::new(re, im)
            }
            RootValue::Numeric { re, im } => Complex64::new(*re, *im),
        }
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Root", 4)?;
        match &self.value {
            RootValue::Exact(s) => {
                st.serialize_field("value", &s.to_string())?;
                st.serialize_field("kind", "exact")?;
            }
            RootValue::Numeric { re, im } => {
                st.serialize_field("value", &format!("{re}{im:+}i"))?;
                st.serialize_field("kind", "numeric")?;
            }
        }
        st.serialize_field("residual", &self.residual)?;
        st.end()
    }
}

/// Exact characteristic polynomial plus roots: exact where the polynomial
/// splits over Q(i) (linear factors recognized and verified by exact
/// substitution, quadratic factors solved when the discriminant has an exact
/// square root), numeric with reported residual otherwise.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub charpoly: Vec<Scalar>,
    pub dimension: usize,
    pub trace: Scalar,
    pub roots: Vec<Root>,
}

impl Spectrum {
    pub fn all_exact(&self) -> bool {
        self.roots
            .iter()
            .all(|r| matches!(r.value, RootValue::Exact(_)))
    }

    /// Exact sum of all roots when every root is exact.
    pub fn exact_root_sum(&self) -> Option<Scalar> {
        let mut sum = Scalar::zero();
        for r in &self.roots {
            match &r.value {
                RootValue::Exact(s) => sum += s,
                RootValue::Numeric { .. } => return None,
            }
        }
        Some(sum)
    }
}

pub fn spectrum(m: &FiniteMatrix) -> Spectrum {
    let cp = charpoly(m);
    let dimension = m.dim();
    let trace = m.trace();
    let roots = poly_roots(&cp);
    Spectrum {
        charpoly: cp,
        dimension,
        trace,
        roots,
    }
}

fn to_f64_coeffs(p: &[Scalar]) -> Vec<Complex64> {
    p.iter()
        .map(|c| {
            let (re, im) = c.to_f64_pair();
            Complex64::new(re, im)
        })
        .collect()
}

fn horner_f64(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Weierstrass simultaneous iteration on a monic polynomial. Deterministic:
/// fixed starting configuration and iteration cap.
fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let seed = Complex64::new(0.4, 0.9);
    let mut xs: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..600 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= xs[i] - xs[j];
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = horner_f64(coeffs, xs[i]) / denom;
            xs[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 {
            break;
        }
    }
    xs
}

fn rationalize(x: f64, max_den: i64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    // continued-fraction expansion with bounded denominator
    let negative = x < 0.0;
    let mut x = x.abs();
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    for _ in 0..40 {
        let a = x.floor();
        if a > i64::MAX as f64 {
            return None;
        }
        let a_i = a as i64;
        let h2 = a_i.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a_i.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = x - a;
        if frac < 1e-12 {
            break;
        }
        x = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    let num = if negative { -h1 } else { h1 };
    Some(BigRational::new(num.into(), k1.into()))
}

fn recognize_exact(p: &[Scalar], approx: Complex64) -> Option<Scalar> {
    for max_den in [1i64, 12, 720, 1 << 20] {
        let re = rationalize(approx.re, max_den)?;
        let im = rationalize(approx.im, max_den)?;
        let cand = Scalar::new(re, im);
        if poly_eval(p, &cand).is_zero() {
            return Some(cand);
        }
    }
    None
}

/// Solve a monic-scaled polynomial of degree ≤ 2 exactly where possible.
fn small_degree_roots(p: &[Scalar], out: &mut Vec<Root>) {
    match p.len() {
        0 | 1 => {}
        2 => {
            let root = -&(&p[0] / &p[1]);
            out.push(Root {
                value: RootValue::Exact(root),
                residual: 0.0,
            });
        }
        3 => {
            // ax² + bx + c
            let (a, b, c) = (&p[2], &p[1], &p[0]);
            let disc = &(b * b) - &(&(&Scalar::from_int(4) * a) * c);
            if let Some(sq) = disc.sqrt() {
                let two_a = &Scalar::from_int(2) * a;
                for sgn in [Scalar::one(), Scalar::from_int(-1)] {
                    let root = &(&-b.clone() + &(&sgn * &sq)) / &two_a;
                    out.push(Root {
                        value: RootValue::Exact(root),
                        residual: 0.0,
                    });
                }
            } else {
                let coeffs = to_f64_coeffs(p);
                let lead = coeffs[2];
                let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
                for x in durand_kerner(&monic) {
                    let residual = horner_f64(&coeffs, x).norm();
                    out.push(Root {
                        value: RootValue::Numeric { re: x.re, im: x.im },
                        residual,
                    });
                }
            }
        }
        _ => unreachable!(),
    }
}

/// All roots of an exact polynomial, exact where recognizable.
pub fn poly_roots(coeffs: &[Scalar]) -> Vec<Root> {
    let mut p: Vec<Scalar> = coeffs.to_vec();
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    let mut roots = Vec::new();
    if p.is_empty() {
        return roots;
    }
    // exact zero roots
    while p.len() > 1 && p[0].is_zero() {
        roots.push(Root {
            value: RootValue::Exact(Scalar::zero()),
            residual: 0.0,
        });
        p.remove(0);
    }
    loop {
        if p.len() <= 3 {
            small_degree_roots(&p, &mut roots);
            return roots;
        }
        let coeffs_f = to_f64_coeffs(&p);
        let lead = *coeffs_f.last().unwrap();
        let monic: Vec<Complex64> = coeffs_f.iter().map(|c| c / lead).collect();
        let numeric = durand_kerner(&monic);
        let mut deflated = false;
        for x in &numeric {
            if let Some(exact) = recognize_exact(&p, *x) {
                p = deflate(&p, &exact);
                roots.push(Root {
                    value: RootValue::Exact(exact),
                    residual: 0.0,
                });
                deflated = true;
                break;
            }
        }
        if !deflated {
            for x in numeric {
                let residual = horner_f64(&coeffs_f, x).norm();
                out_of_reach(&mut roots, x, residual);
            }
            return roots;
        }
    }
}

fn out_of_reach(roots: &mut Vec<Root>, x: Complex64, residual: f64) {
    roots.push(Root {
        value: RootValue::Numeric { re: x.re, im: x.im },
        residual,
    });
}

// ------------------------------------------------------------- equivalences

/// The 2x2 matrix form of an operator, for rendering and external use.
pub fn export_matrix_form(op: &GeneralOperator) -> crate::superop::MatrixOperator {
    op.to_matrix()
}

/// Conjugation by the gauge factor u = e^{p(z)}: every ∂z becomes ∂z − p′,
/// exactly; θ and ∂θ are untouched.
pub fn gauge_transform(op: &GeneralOperator, p: &Poly) -> GeneralOperator {
    let dp = QuasiPoly::term(Scalar::zero(), p.derive());
    let twisted_dz = GeneralOperator::dz().sub(&GeneralOperator::function(dp));
    let mut powers: Vec<GeneralOperator> = vec![GeneralOperator::identity()];
    let max_order = op.order().unwrap_or(0);
    for _ in 0..max_order {
        powers.push(powers.last().unwrap().compose(&twisted_dz));
    }
    let mut out = GeneralOperator::zero();
    for (key, c) in op.terms() {
        let head = GeneralOperator::term(TermKey::new(key.theta, key.dtheta, 0), c.clone());
        out = out.add(&head.compose(&powers[key.dz]));
    }
    out
}

/// The gauge factor e^{λz} applied to a module basis (multiplication shifts
/// every exponent by λ).
pub fn gauge_shift_basis(basis: &[SuperFunction], lambda: &Scalar) -> Vec<SuperFunction> {
    basis.iter().map(|v| v.shift_exponent(lambda)).collect()
}

/// Change of variables z̄ = a·z + b, θ̄ = c·e^{λz}·θ, applied exactly.
///
/// Substitution rules: ∂z ↦ a∂z̄ + λθ̄∂θ̄, ∂θ ↦ c·e^{λz}∂θ̄,
/// θ ↦ (1/c)e^{−λz}θ̄, z ↦ (z̄−b)/a, with z rewritten inside every
/// coefficient. Errors when a coefficient exponential would need the
/// transcendental constant e^{μb/a}.
pub fn change_of_variables(
    op: &GeneralOperator,
    a: &Scalar,
    b: &Scalar,
    theta_scale: &Scalar,
    theta_rate: &Scalar,
) -> Result<GeneralOperator, QesError> {
    if a.is_zero() {
        return Err(QesError::NotExact(
            "the coefficient a must be nonzero".into(),
        ));
    }
    if theta_scale.is_zero() {
        return Err(QesError::NotExact("the θ-scale must be nonzero".into()));
    }
    let a_inv = a.inv();
    let shift = -&(b * &a_inv);
    let substitute = |f: &QuasiPoly| -> Result<QuasiPoly, QesError> {
        f.substitute_affine(&a_inv, &shift).ok_or_else(|| {
            QesError::NotExact(
                "an exponential coefficient meets a nonzero shift; set b = 0 or drop the exponentials"
                    .into(),
            )
        })
    };
    // ∂z ↦ a∂z̄ + λ θ̄∂θ̄
    let new_dz = GeneralOperator::dz()
        .scale(a)
        .add(&GeneralOperator::theta_dtheta().scale(theta_rate));
    let mut dz_powers: Vec<GeneralOperator> = vec![GeneralOperator::identity()];
    for _ in 0..op.order().unwrap_or(0) {
        dz_powers.push(dz_powers.last().unwrap().compose(&new_dz));
    }
    // θ ↦ (1/c)e^{−λz}θ̄ and ∂θ ↦ c e^{λz}∂θ̄, with z substituted
    let theta_coeff =
        substitute(&QuasiPoly::exponential(-theta_rate.clone()).scale(&theta_scale.inv()))?;
    let dtheta_coeff = substitute(&QuasiPoly::exponential(theta_rate.clone()).scale(theta_scale))?;

    let mut out = GeneralOperator::zero();
    for (key, c) in op.terms() {
        let mut factor = GeneralOperator::function(substitute(c)?);
        if key.theta {
            let theta_op = GeneralOperator::term(TermKey::new(true, false, 0), theta_coeff.clone());
            factor = theta_op.compose(&factor);
        }
        if key.dtheta {
            let dtheta_op =
                GeneralOperator::term(TermKey::new(false, true, 0), dtheta_coeff.clone());
            factor = factor.compose(&dtheta_op);
        }
        out = out.add(&factor.compose(&dz_powers[key.dz]));
    }
    Ok(out)
}
