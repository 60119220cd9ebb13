//! The associative superalgebra of normal-ordered differential operators in
//! one even variable z and one Grassmann variable θ.
//!
//! Normal order is fixed as θ^a · p(z) · ∂θ^b · ∂z^n with a, b ∈ {0,1}.
//! Composition rewrites with ∂z∘f = f∂z + f', {∂θ, θ} = 1, θ² = ∂θ² = 0,
//! and [∂z, θ] = [∂z, ∂θ] = 0; the rewrite system is confluent, so the
//! stored form is a unique normal form and equality is decidable.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::quasipoly::{QuasiPoly, SuperFunction};
use crate::scalar::Scalar;

/// Key of one normal-ordered term: θ^theta · coeff(z) · ∂θ^dtheta · ∂z^dz.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct TermKey {
    pub theta: bool,
    pub dtheta: bool,
    pub dz: usize,
}

impl TermKey {
    pub fn new(theta: bool, dtheta: bool, dz: usize) -> Self {
        TermKey { theta, dtheta, dz }
    }

    /// Grassmann parity of the term: θ and ∂θ are odd, ∂z is even.
    pub fn is_even(&self) -> bool {
        self.theta == self.dtheta
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Grade {
    Even,
    Odd,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorError {
    /// Both arguments of a super-bracket must have a defined grade.
    NonHomogeneous,
    /// The operator does not lie in the first-order superalgebra; carries a
    /// rendering of the offending term.
    NotFirstOrder(String),
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::NonHomogeneous => write!(f, "operator has mixed grade"),
            OperatorError::NotFirstOrder(t) => {
                write!(f, "operator is not first order: offending term {t}")
            }
        }
    }
}

impl std::error::Error for OperatorError {}

/// Normal-ordered operator Σ θ^a ∂θ^b p_{a,b,n}(z) ∂z^n.
///
/// Closed under composition; arbitrary ∂z order, so quadratic combinations
/// of first-order generators are first-class values.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GeneralOperator {
    terms: BTreeMap<TermKey, QuasiPoly>,
}

/// The four Grassmann words multiply into combinations of one another:
/// returns the normal-ordered expansion of (a1,b1)·(a2,b2) as
/// (integer coefficient, word) pairs.
fn grassmann_product(a1: bool, b1: bool, a2: bool, b2: bool) -> Vec<(i64, (bool, bool))> {
    match (b1, a2) {
        // no contraction needed: θ^{a1} θ^{a2} ∂θ^{b2}
        (false, _) => {
            if a1 && a2 {
                vec![]
            } else {
                vec![(1, (a1 || a2, b2))]
            }
        }
        // ∂θ · ∂θ^{b2} with nothing between
        (true, false) => {
            if b2 {
                vec![]
            } else {
                vec![(1, (a1, true))]
            }
        }
        // ∂θ · θ = 1 − θ∂θ
        (true, true) => {
            let mut out = Vec::new();
            // the "1" branch: θ^{a1} ∂θ^{b2}
            out.push((1, (a1, b2)));
            // the "−θ∂θ" branch: θ^{a1} θ ∂θ ∂θ^{b2}, kills a1=1 or b2=1
            if !a1 && !b2 {
                out.push((-1, (true, true)));
            }
            out
        }
    }
}

fn binomial(n: usize, k: usize) -> Scalar {
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for j in 0..k {
        num *= num_bigint::BigInt::from((n - j) as u64);
        den *= num_bigint::BigInt::from((j + 1) as u64);
    }
    Scalar::new(
        num_rational::BigRational::new(num, den),
        num_rational::BigRational::from_integer(0.into()),
    )
}

impl GeneralOperator {
    pub fn zero() -> Self {
        GeneralOperator {
            terms: BTreeMap::new(),
        }
    }

    pub fn identity() -> Self {
        GeneralOperator::term(TermKey::new(false, false, 0), QuasiPoly::one())
    }

    pub fn term(key: TermKey, coeff: QuasiPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        GeneralOperator { terms }
    }

    /// Multiplication operator by a function of z.
    pub fn function(coeff: QuasiPoly) -> Self {
        GeneralOperator::term(TermKey::new(false, false, 0), coeff)
    }

    pub fn dz() -> Self {
        GeneralOperator::term(TermKey::new(false, false, 1), QuasiPoly::one())
    }

    pub fn dtheta() -> Self {
        GeneralOperator::term(TermKey::new(false, true, 0), QuasiPoly::one())
    }

    pub fn theta() -> Self {
        GeneralOperator::term(TermKey::new(true, false, 0), QuasiPoly::one())
    }

    pub fn theta_dtheta() -> Self {
        GeneralOperator::term(TermKey::new(true, true, 0), QuasiPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &QuasiPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &TermKey) -> QuasiPoly {
        self.terms.get(key).cloned().unwrap_or_else(QuasiPoly::zero)
    }

    /// Highest ∂z order, None for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.dz).max()
    }

    pub fn add(&self, other: &GeneralOperator) -> GeneralOperator {
        let mut terms = self.terms.clone();
        for (key, c) in &other.terms {
            let entry = terms.entry(*key).or_insert_with(QuasiPoly::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                terms.remove(key);
            }
        }
        GeneralOperator { terms }
    }

    pub fn sub(&self, other: &GeneralOperator) -> GeneralOperator {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GeneralOperator {
        GeneralOperator {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> GeneralOperator {
        if s.is_zero() {
            return GeneralOperator::zero();
        }
        GeneralOperator {
            terms: self.terms.iter().map(|(k, c)| (*k, c.scale(s))).collect(),
        }
    }

    /// Operator composition, normal-ordered.
    pub fn compose(&self, other: &GeneralOperator) -> GeneralOperator {
        let mut out = GeneralOperator::zero();
        for (k1, p) in &self.terms {
            for (k2, q) in &other.terms {
                // Move ∂z^{n1} across q(z): Σ_j C(n1,j) q^{(j)} ∂z^{n1-j}.
                for j in 0..=k1.dz {
                    let dq = q.derive_n(j);
                    if dq.is_zero() {
                        continue;
                    }
                    let coeff = p.mul(&dq).scale(&binomial(k1.dz, j));
                    if coeff.is_zero() {
                        continue;
                    }
                    for (sign, (a, b)) in
                        grassmann_product(k1.theta, k1.dtheta, k2.theta, k2.dtheta)
                    {
                        let key = TermKey::new(a, b, k1.dz - j + k2.dz);
                        let signed = coeff.scale(&Scalar::from_int(sign));
                        out = out.add(&GeneralOperator::term(key, signed));
                    }
                }
            }
        }
        out
    }

    pub fn grade(&self) -> Grade {
        let mut even = true;
        let mut odd = true;
        for key in self.terms.keys() {
            if key.is_even() {
                odd = false;
            } else {
                even = false;
            }
        }
        // the zero operator is even by convention
        if even {
            Grade::Even
        } else if odd {
            Grade::Odd
        } else {
            Grade::Mixed
        }
    }

    /// Super-bracket [A,B]ₛ = AB − (−1)^{deg A · deg B} BA.
    pub fn super_bracket(&self, other: &GeneralOperator) -> Result<GeneralOperator, OperatorError> {
        let ga = self.grade();
        let gb = other.grade();
        if ga == Grade::Mixed || gb == Grade::Mixed {
            return Err(OperatorError::NonHomogeneous);
        }
        let ab = self.compose(other);
        let ba = other.compose(self);
        Ok(if ga == Grade::Odd && gb == Grade::Odd {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        })
    }

    /// Apply the operator to a Λ¹-valued function.
    pub fn apply(&self, v: &SuperFunction) -> SuperFunction {
        let mut out = SuperFunction::zero();
        for (key, p) in &self.terms {
            let even_n = v.even.derive_n(key.dz);
            let odd_n = v.odd.derive_n(key.dz);
            // ∂θ moves the θ-component down; θ moves the scalar component up.
            let (mut e, mut o) = if key.dtheta {
                (odd_n, QuasiPoly::zero())
            } else {
                (even_n, odd_n)
            };
            e = p.mul(&e);
            o = p.mul(&o);
            if key.theta {
                o = e;
                e = QuasiPoly::zero();
            }
            out = out.add(&SuperFunction::new(e, o));
        }
        out
    }

    /// First-order membership: decomposes into the canonical even part
    /// f∂z + gθ∂θ + h and odd part θφ∂z + χ∂θ + ωθ, or reports the term that
    /// falls outside that space.
    pub fn first_order_parts(&self) -> Result<SuperOperator, OperatorError> {
        let mut op = SuperOperator::zero();
        for (key, c) in &self.terms {
            match (key.theta, key.dtheta, key.dz) {
                (false, false, 0) => op.scalar = c.clone(),
                (false, false, 1) => op.dz = c.clone(),
                (true, true, 0) => op.theta_dtheta = c.clone(),
                (true, false, 1) => op.theta_dz = c.clone(),
                (false, true, 0) => op.dtheta = c.clone(),
                (true, false, 0) => op.theta = c.clone(),
                _ => {
                    let t = GeneralOperator::term(*key, c.clone());
                    return Err(OperatorError::NotFirstOrder(t.to_string()));
                }
            }
        }
        Ok(op)
    }

    /// Coordinates over the monomial basis θ^a ∂θ^b z^k e^{μz} ∂z^n.
    pub fn coordinates(&self) -> BTreeMap<(TermKey, Scalar, usize), Scalar> {
        let mut map = BTreeMap::new();
        for (key, c) in &self.terms {
            for ((mu, k), v) in c.coordinates() {
                map.insert((*key, mu, k), v);
            }
        }
        map
    }

    pub fn from_coordinates(map: &BTreeMap<(TermKey, Scalar, usize), Scalar>) -> GeneralOperator {
        let mut out = GeneralOperator::zero();
        for ((key, mu, k), v) in map {
            out = out.add(&GeneralOperator::term(
                *key,
                QuasiPoly::monomial(v.clone(), *k, mu.clone()),
            ));
        }
        out
    }

    /// 2x2 matrix form under θ ↔ σ⁺, ∂θ ↔ σ⁻.
    pub fn to_matrix(&self) -> MatrixOperator {
        let mut m = MatrixOperator::zero();
        for (key, c) in &self.terms {
            // Matrix of the Grassmann word, acting on columns (θ-part, scalar-part)ᵗ.
            let slots: &[(usize, usize)] = match (key.theta, key.dtheta) {
                (false, false) => &[(0, 0), (1, 1)],
                (true, false) => &[(0, 1)],
                (false, true) => &[(1, 0)],
                (true, true) => &[(0, 0)],
            };
            for &(row, col) in slots {
                m.entries[row][col].add_term(key.dz, c);
            }
        }
        m
    }
}

fn fmt_term(key: &TermKey, coeff: &QuasiPoly) -> String {
    let mut factors: Vec<String> = Vec::new();
    if key.theta {
        factors.push("θ".to_string());
    }
    let cs = coeff.to_string();
    let bare = !key.theta && !key.dtheta && key.dz == 0;
    let is_plain_one = coeff.is_constant() && coeff.poly_at(&Scalar::zero()).coeff(0).is_one();
    if !is_plain_one || bare {
        if !bare && (cs.contains('+') || cs.contains(' ') || cs.contains('*') || cs.contains('-')) {
            factors.push(format!("({cs})"));
        } else {
            factors.push(cs);
        }
    }
    if key.dtheta {
        factors.push("∂θ".to_string());
    }
    match key.dz {
        0 => {}
        1 => factors.push("∂z".to_string()),
        n => factors.push(format!("∂z^{n}")),
    }
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("·")
    }
}

impl fmt::Display for GeneralOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| fmt_term(k, c)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for GeneralOperator {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            theta: bool,
            dtheta: bool,
            dz: usize,
            coeff: &'a QuasiPoly,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(k, c)| Term {
                theta: k.theta,
                dtheta: k.dtheta,
                dz: k.dz,
                coeff: c,
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GeneralOperator {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            theta: bool,
            dtheta: bool,
            dz: usize,
            coeff: QuasiPoly,
        }
        let terms = Vec::<Term>::deserialize(deserializer)?;
        let mut out = GeneralOperator::zero();
        for t in terms {
            out = out.add(&GeneralOperator::term(
                TermKey::new(t.theta, t.dtheta, t.dz),
                t.coeff,
            ));
        }
        Ok(out)
    }
}

/// First-order operator in canonical coefficients: the even part
/// f(z)∂z + g(z)θ∂θ + h(z) and odd part θφ(z)∂z + χ(z)∂θ + ω(z)θ.
///
/// Fields are named by the basis element each function multiplies.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuperOperator {
    pub dz: QuasiPoly,
    pub theta_dtheta: QuasiPoly,
    pub scalar: QuasiPoly,
    pub theta_dz: QuasiPoly,
    pub dtheta: QuasiPoly,
    pub theta: QuasiPoly,
}

impl SuperOperator {
    pub fn zero() -> Self {
        SuperOperator {
            dz: QuasiPoly::zero(),
            theta_dtheta: QuasiPoly::zero(),
            scalar: QuasiPoly::zero(),
            theta_dz: QuasiPoly::zero(),
            dtheta: QuasiPoly::zero(),
            theta: QuasiPoly::zero(),
        }
    }

    pub fn even(dz: QuasiPoly, theta_dtheta: QuasiPoly, scalar: QuasiPoly) -> Self {
        SuperOperator {
            dz,
            theta_dtheta,
            scalar,
            ..SuperOperator::zero()
        }
    }

    pub fn odd(theta_dz: QuasiPoly, dtheta: QuasiPoly, theta: QuasiPoly) -> Self {
        SuperOperator {
            theta_dz,
            dtheta,
            theta,
            ..SuperOperator::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even_is_zero() && self.odd_is_zero()
    }

    pub fn even_is_zero(&self) -> bool {
        self.dz.is_zero() && self.theta_dtheta.is_zero() && self.scalar.is_zero()
    }

    pub fn odd_is_zero(&self) -> bool {
        self.theta_dz.is_zero() && self.dtheta.is_zero() && self.theta.is_zero()
    }

    pub fn grade(&self) -> Grade {
        match (self.even_is_zero(), self.odd_is_zero()) {
            (_, true) => Grade::Even,
            (true, false) => Grade::Odd,
            _ => Grade::Mixed,
        }
    }

    pub fn to_general(&self) -> GeneralOperator {
        let mut out = GeneralOperator::zero();
        let pieces = [
            (TermKey::new(false, false, 1), &self.dz),
            (TermKey::new(true, true, 0), &self.theta_dtheta),
            (TermKey::new(false, false, 0), &self.scalar),
            (TermKey::new(true, false, 1), &self.theta_dz),
            (TermKey::new(false, true, 0), &self.dtheta),
            (TermKey::new(true, false, 0), &self.theta),
        ];
        for (key, c) in pieces {
            out = out.add(&GeneralOperator::term(key, c.clone()));
        }
        out
    }

    pub fn apply(&self, v: &SuperFunction) -> SuperFunction {
        self.to_general().apply(v)
    }

    pub fn add(&self, other: &SuperOperator) -> SuperOperator {
        SuperOperator {
            dz: self.dz.add(&other.dz),
            theta_dtheta: self.theta_dtheta.add(&other.theta_dtheta),
            scalar: self.scalar.add(&other.scalar),
            theta_dz: self.theta_dz.add(&other.theta_dz),
            dtheta: self.dtheta.add(&other.dtheta),
            theta: self.theta.add(&other.theta),
        }
    }

    pub fn scale(&self, s: &Scalar) -> SuperOperator {
        SuperOperator {
            dz: self.dz.scale(s),
            theta_dtheta: self.theta_dtheta.scale(s),
            scalar: self.scalar.scale(s),
            theta_dz: self.theta_dz.scale(s),
            dtheta: self.dtheta.scale(s),
            theta: self.theta.scale(s),
        }
    }
}

impl fmt::Display for SuperOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_general())
    }
}

/// A scalar differential operator Σ_n p_n(z) ∂z^n.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ScalarDiffOp {
    terms: BTreeMap<usize, QuasiPoly>,
}

impl ScalarDiffOp {
    pub fn zero() -> Self {
        ScalarDiffOp {
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, order: usize, coeff: &QuasiPoly) {
        let entry = self.terms.entry(order).or_insert_with(QuasiPoly::zero);
        *entry = entry.add(coeff);
        if entry.is_zero() {
            self.terms.remove(&order);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&usize, &QuasiPoly)> {
        self.terms.iter()
    }

    pub fn apply(&self, f: &QuasiPoly) -> QuasiPoly {
        let mut out = QuasiPoly::zero();
        for (n, p) in &self.terms {
            out = out.add(&p.mul(&f.derive_n(*n)));
        }
        out
    }
}

impl fmt::Display for ScalarDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(n, c)| {
                let dz = match n {
                    0 => String::new(),
                    1 => "·∂z".to_string(),
                    n => format!("·∂z^{n}"),
                };
                format!("({c}){dz}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// 2x2 matrix of scalar differential operators, acting on two-component
/// functions (θ-part, scalar-part)ᵗ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixOperator {
    pub entries: [[ScalarDiffOp; 2]; 2],
}

impl MatrixOperator {
    pub fn zero() -> Self {
        MatrixOperator {
            entries: [
                [ScalarDiffOp::zero(), ScalarDiffOp::zero()],
                [ScalarDiffOp::zero(), ScalarDiffOp::zero()],
            ],
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries[0][1].is_zero() && self.entries[1][0].is_zero()
    }

    pub fn is_antidiagonal(&self) -> bool {
        self.entries[0][0].is_zero() && self.entries[1][1].is_zero()
    }

    /// Act on a Λ¹ function viewed as the column (odd, even)ᵗ.
    pub fn apply(&self, v: &SuperFunction) -> SuperFunction {
        let components = [&v.odd, &v.even];
        let mut out = [QuasiPoly::zero(), QuasiPoly::zero()];
        for (slot, row) in out.iter_mut().zip(&self.entries) {
            for (entry, component) in row.iter().zip(components) {
                *slot = slot.add(&entry.apply(component));
            }
        }
        let [odd, even] = out;
        SuperFunction::new(even, odd)
    }
}

impl fmt::Display for MatrixOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .entries
            .iter()
            .flatten()
            .map(|e| e.to_string())
            .collect();
        let w0 = cells[0].chars().count().max(cells[2].chars().count());
        let w1 = cells[1].chars().count().max(cells[3].chars().count());
        writeln!(f, "[ {:<w0$}   {:<w1$} ]", cells[0], cells[1])?;
        write!(f, "[ {:<w0$}   {:<w1$} ]", cells[2], cells[3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> QuasiPoly {
        QuasiPoly::z()
    }

    fn z_dz() -> GeneralOperator {
        GeneralOperator::term(TermKey::new(false, false, 1), z())
    }

    #[test]
    fn compose_leibniz() {
        // ∂z ∘ z = z∂z + 1
        let got = GeneralOperator::dz().compose(&GeneralOperator::function(z()));
        let want = z_dz().add(&GeneralOperator::identity());
        assert_eq!(got, want);
    }

    #[test]
    fn compose_anticommutation() {
        // ∂θ ∘ θ = 1 − θ∂θ
        let got = GeneralOperator::dtheta().compose(&GeneralOperator::theta());
        let want = GeneralOperator::identity().sub(&GeneralOperator::theta_dtheta());
        assert_eq!(got, want);
    }

    #[test]
    fn odd_square_is_dz() {
        // (θ∂z + ∂θ)² = ∂z
        let t = GeneralOperator::term(TermKey::new(true, false, 1), QuasiPoly::one())
            .add(&GeneralOperator::dtheta());
        assert_eq!(t.compose(&t), GeneralOperator::dz());
        // and the anticommutator is 2∂z
        let br = t.super_bracket(&t).unwrap();
        assert_eq!(br, GeneralOperator::dz().scale(&Scalar::from_int(2)));
    }

    #[test]
    fn bracket_examples() {
        // [∂z, z∂z] = ∂z
        let br = GeneralOperator::dz().super_bracket(&z_dz()).unwrap();
        assert_eq!(br, GeneralOperator::dz());
        // [θ∂θ, θ] = θ
        let br = GeneralOperator::theta_dtheta()
            .super_bracket(&GeneralOperator::theta())
            .unwrap();
        assert_eq!(br, GeneralOperator::theta());
    }

    #[test]
    fn bracket_requires_homogeneous() {
        let mixed = GeneralOperator::dz().add(&GeneralOperator::dtheta());
        assert_eq!(mixed.grade(), Grade::Mixed);
        assert_eq!(
            mixed.super_bracket(&GeneralOperator::dz()),
            Err(OperatorError::NonHomogeneous)
        );
    }

    #[test]
    fn grading() {
        let even = SuperOperator::even(z(), QuasiPoly::one(), QuasiPoly::z_pow(2)).to_general();
        assert_eq!(even.grade(), Grade::Even);
        let odd = SuperOperator::odd(z(), QuasiPoly::one(), QuasiPoly::one()).to_general();
        assert_eq!(odd.grade(), Grade::Odd);
        assert_eq!(GeneralOperator::zero().grade(), Grade::Even);
    }

    #[test]
    fn first_order_membership() {
        // z²∂z + 2αzθ∂θ + 2βz with α = 1, β = 1/2
        let op = SuperOperator::even(
            QuasiPoly::z_pow(2),
            QuasiPoly::monomial(Scalar::from_int(2), 1, Scalar::zero()),
            z(),
        );
        let round = op.to_general().first_order_parts().unwrap();
        assert_eq!(round, op);
        assert_eq!(round.grade(), Grade::Even);

        // θ∂θ∂z is not of first-order form
        let bad = GeneralOperator::term(TermKey::new(true, true, 1), QuasiPoly::one());
        assert!(matches!(
            bad.first_order_parts(),
            Err(OperatorError::NotFirstOrder(_))
        ));
        // ∂z² neither
        let dz2 = GeneralOperator::dz().compose(&GeneralOperator::dz());
        assert!(matches!(
            dz2.first_order_parts(),
            Err(OperatorError::NotFirstOrder(_))
        ));
    }

    #[test]
    fn matrix_identification() {
        // θ ↦ σ⁺
        let m = GeneralOperator::theta().to_matrix();
        assert!(!m.entries[0][1].is_zero());
        assert!(
            m.entries[0][0].is_zero() && m.entries[1][0].is_zero() && m.entries[1][1].is_zero()
        );
        // identity ↦ identity matrix
        let m = GeneralOperator::identity().to_matrix();
        assert!(m.is_diagonal());
        assert_eq!(m.entries[0][0], m.entries[1][1]);
        // f∂z + gθ∂θ + h ↦ diag(f∂z + g + h, f∂z + h)
        let f = z();
        let g = QuasiPoly::from_int(2);
        let h = QuasiPoly::z_pow(2);
        let op = SuperOperator::even(f.clone(), g.clone(), h.clone()).to_general();
        let m = op.to_matrix();
        assert!(m.is_diagonal());
        let probe = QuasiPoly::z_pow(3);
        let upper = m.entries[0][0].apply(&probe);
        let lower = m.entries[1][1].apply(&probe);
        let want_upper = f
            .mul(&probe.derive())
            .add(&g.mul(&probe))
            .add(&h.mul(&probe));
        let want_lower = f.mul(&probe.derive()).add(&h.mul(&probe));
        assert_eq!(upper, want_upper);
        assert_eq!(lower, want_lower);
    }

    #[test]
    fn apply_matches_matrix_action() {
        let op = SuperOperator::odd(z(), QuasiPoly::one(), QuasiPoly::from_int(3)).to_general();
        let v = SuperFunction::new(QuasiPoly::z_pow(2), QuasiPoly::z());
        let direct = op.apply(&v);
        let via_matrix = op.to_matrix().apply(&v);
        assert_eq!(direct, via_matrix);
    }

    #[test]
    fn rendering() {
        let op = GeneralOperator::term(TermKey::new(true, false, 1), z())
            .add(&GeneralOperator::dtheta())
            .add(&GeneralOperator::term(
                TermKey::new(true, false, 0),
                QuasiPoly::from_int(2),
            ));
        let s = op.to_string();
        assert!(s.contains("θ·z·∂z"), "got {s}");
        assert!(s.contains("∂θ"), "got {s}");
        assert!(s.contains("θ·2"), "got {s}");
    }
}
