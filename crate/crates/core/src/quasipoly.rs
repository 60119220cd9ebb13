//! The coefficient ring of quasi-polynomials: finite sums Σ_μ p_μ(z)·e^{μz}
//! with Gaussian-rational polynomial parts, plus the Λ¹-valued functions
//! f(z) + g(z)θ built from them.
//!
//! Storage is canonical: no exponent maps to the zero polynomial and every
//! polynomial has a nonzero leading coefficient, so two equal ring elements
//! have identical stored form and `==` decides ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Dense polynomial in `z`; `coeffs[k]` is the coefficient of `z^k`.
/// Invariant: empty, or the last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Scalar, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &other.coeff(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn derive(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &Scalar::from_int(k as i64))
            .collect();
        Poly::from_coeffs(out)
    }

    /// Substitute `z -> a*z + b`.
    pub fn substitute_affine(&self, a: &Scalar, b: &Scalar) -> Poly {
        let mut result = Poly::zero();
        // Horner: p(az+b) = (((c_n (az+b) + c_{n-1})(az+b) + ...)
        let lin = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        for c in self.coeffs.iter().rev() {
            result = result.mul(&lin).add(&Poly::constant(c.clone()));
        }
        result
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

/// Element of ⊕_μ Q(i)[z]·e^{μz}.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QuasiPoly {
    terms: BTreeMap<Scalar, Poly>,
}

impl QuasiPoly {
    pub fn zero() -> Self {
        QuasiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QuasiPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        QuasiPoly::term(Scalar::zero(), Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        QuasiPoly::constant(Scalar::from_int(n))
    }

    /// The variable `z`.
    pub fn z() -> Self {
        QuasiPoly::term(Scalar::zero(), Poly::monomial(Scalar::one(), 1))
    }

    /// `z^k`.
    pub fn z_pow(k: usize) -> Self {
        QuasiPoly::term(Scalar::zero(), Poly::monomial(Scalar::one(), k))
    }

    /// `e^{mu z}`.
    pub fn exponential(mu: Scalar) -> Self {
        QuasiPoly::term(mu, Poly::constant(Scalar::one()))
    }

    /// `c * z^k * e^{mu z}`.
    pub fn monomial(c: Scalar, k: usize, mu: Scalar) -> Self {
        QuasiPoly::term(mu, Poly::monomial(c, k))
    }

    pub fn term(mu: Scalar, p: Poly) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(mu, p);
        }
        QuasiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Scalar, &Poly)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Scalar> {
        self.terms.keys()
    }

    pub fn poly_at(&self, mu: &Scalar) -> Poly {
        self.terms.get(mu).cloned().unwrap_or_else(Poly::zero)
    }

    /// True when the element is a constant (degree 0, exponent 0 only).
    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => {
                let (mu, p) = self.terms.iter().next().unwrap();
                mu.is_zero() && p.degree() == Some(0)
            }
            _ => false,
        }
    }

    pub fn add(&self, other: &QuasiPoly) -> QuasiPoly {
        let mut terms = self.terms.clone();
        for (mu, p) in &other.terms {
            let entry = terms.entry(mu.clone()).or_insert_with(Poly::zero);
            *entry = entry.add(p);
            if entry.is_zero() {
                terms.remove(mu);
            }
        }
        QuasiPoly { terms }
    }

    pub fn neg(&self) -> QuasiPoly {
        QuasiPoly {
            terms: self
                .terms
                .iter()
                .map(|(mu, p)| (mu.clone(), p.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &QuasiPoly) -> QuasiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> QuasiPoly {
        if s.is_zero() {
            return QuasiPoly::zero();
        }
        QuasiPoly {
            terms: self
                .terms
                .iter()
                .map(|(mu, p)| (mu.clone(), p.scale(s)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &QuasiPoly) -> QuasiPoly {
        let mut out = QuasiPoly::zero();
        for (mu, p) in &self.terms {
            for (nu, q) in &other.terms {
                out = out.add(&QuasiPoly::term(mu + nu, p.mul(q)));
            }
        }
        out
    }

    /// d/dz, term-wise: (p e^{μz})' = (p' + μp) e^{μz}.
    pub fn derive(&self) -> QuasiPoly {
        let mut out = QuasiPoly::zero();
        for (mu, p) in &self.terms {
            let dp = p.derive().add(&p.scale(mu));
            out = out.add(&QuasiPoly::term(mu.clone(), dp));
        }
        out
    }

    pub fn derive_n(&self, n: usize) -> QuasiPoly {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.derive();
        }
        out
    }

    /// Coordinates over the basis {z^k e^{μz}}, which is linearly independent
    /// in the function space. Keys are (μ, k).
    pub fn coordinates(&self) -> BTreeMap<(Scalar, usize), Scalar> {
        let mut map = BTreeMap::new();
        for (mu, p) in &self.terms {
            for (k, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    map.insert((mu.clone(), k), c.clone());
                }
            }
        }
        map
    }

    pub fn from_coordinates(map: &BTreeMap<(Scalar, usize), Scalar>) -> QuasiPoly {
        let mut out = QuasiPoly::zero();
        for ((mu, k), c) in map {
            out = out.add(&QuasiPoly::monomial(c.clone(), *k, mu.clone()));
        }
        out
    }

    /// Substitute `z -> a*z + b`, exactly.
    ///
    /// `e^{μz}` becomes `e^{μb}·e^{μa·z}`; the constant `e^{μb}` is
    /// transcendental unless `μb = 0`, in which case this is exact. Returns
    /// None when a term would require a transcendental scale factor.
    pub fn substitute_affine(&self, a: &Scalar, b: &Scalar) -> Option<QuasiPoly> {
        let mut out = QuasiPoly::zero();
        for (mu, p) in &self.terms {
            if !mu.is_zero() && !b.is_zero() && !(mu * b).is_zero() {
                return None;
            }
            out = out.add(&QuasiPoly::term(mu * a, p.substitute_affine(a, b)));
        }
        Some(out)
    }

    /// Multiply by `e^{λz}` (shifts all exponent keys).
    pub fn shift_exponent(&self, lambda: &Scalar) -> QuasiPoly {
        QuasiPoly {
            terms: self
                .terms
                .iter()
                .map(|(mu, p)| (mu + lambda, p.clone()))
                .collect(),
        }
    }

    /// Max polynomial degree over all exponents, None if zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(Poly::degree).max()
    }
}

impl Add for &QuasiPoly {
    type Output = QuasiPoly;
    fn add(self, rhs: &QuasiPoly) -> QuasiPoly {
        QuasiPoly::add(self, rhs)
    }
}

impl Sub for &QuasiPoly {
    type Output = QuasiPoly;
    fn sub(self, rhs: &QuasiPoly) -> QuasiPoly {
        QuasiPoly::sub(self, rhs)
    }
}

impl Mul for &QuasiPoly {
    type Output = QuasiPoly;
    fn mul(self, rhs: &QuasiPoly) -> QuasiPoly {
        QuasiPoly::mul(self, rhs)
    }
}

impl Neg for &QuasiPoly {
    type Output = QuasiPoly;
    fn neg(self) -> QuasiPoly {
        QuasiPoly::neg(self)
    }
}

fn needs_parens(s: &str) -> bool {
    s[1..].contains('+') || s[1..].contains('-') || s.contains('*')
}

fn fmt_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = c.to_string();
        let body = match k {
            0 => cs,
            _ => {
                let var = if k == 1 {
                    "z".to_string()
                } else {
                    format!("z^{k}")
                };
                if c.is_one() {
                    var
                } else if (-c).is_one() {
                    format!("-{var}")
                } else if needs_parens(&cs) {
                    format!("({cs})*{var}")
                } else {
                    format!("{cs}*{var}")
                }
            }
        };
        parts.push(body);
    }
    let mut out = String::new();
    for (i, part) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(part);
        } else if let Some(stripped) = part.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(part);
        }
    }
    out
}

impl fmt::Display for QuasiPoly {
    /// `(poly)*exp(μ*z) + ...` with polynomials in descending degree; the
    /// μ = 0 block appears without an exponential factor.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (mu, p) in &self.terms {
            let ps = fmt_poly(p);
            if mu.is_zero() {
                parts.push(ps);
            } else {
                let ms = mu.to_string();
                let expo = if needs_parens(&ms) {
                    format!("exp(({ms})*z)")
                } else {
                    format!("exp({ms}*z)")
                };
                parts.push(format!("({ps})*{expo}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Serialized shape of one exponential block of a QuasiPoly.
#[derive(Serialize, Deserialize)]
struct QuasiPolyTerm {
    exp: Scalar,
    coeffs: Vec<Scalar>,
}

impl Serialize for QuasiPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let blocks: Vec<QuasiPolyTerm> = self
            .terms
            .iter()
            .map(|(mu, p)| QuasiPolyTerm {
                exp: mu.clone(),
                coeffs: p.coeffs().to_vec(),
            })
            .collect();
        blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuasiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let blocks = Vec::<QuasiPolyTerm>::deserialize(deserializer)?;
        let mut out = QuasiPoly::zero();
        for b in blocks {
            out = out.add(&QuasiPoly::term(b.exp, Poly::from_coeffs(b.coeffs)));
        }
        Ok(out)
    }
}

/// A Λ¹-valued function `even(z) + odd(z)·θ`.
///
/// In the 2x2 matrix picture this is the column vector (odd, even)ᵗ.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuperFunction {
    pub even: QuasiPoly,
    pub odd: QuasiPoly,
}

impl SuperFunction {
    pub fn new(even: QuasiPoly, odd: QuasiPoly) -> Self {
        SuperFunction { even, odd }
    }

    pub fn scalar(even: QuasiPoly) -> Self {
        SuperFunction {
            even,
            odd: QuasiPoly::zero(),
        }
    }

    pub fn theta_part(odd: QuasiPoly) -> Self {
        SuperFunction {
            even: QuasiPoly::zero(),
            odd,
        }
    }

    pub fn zero() -> Self {
        SuperFunction {
            even: QuasiPoly::zero(),
            odd: QuasiPoly::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, other: &SuperFunction) -> SuperFunction {
        SuperFunction {
            even: self.even.add(&other.even),
            odd: self.odd.add(&other.odd),
        }
    }

    pub fn sub(&self, other: &SuperFunction) -> SuperFunction {
        SuperFunction {
            even: self.even.sub(&other.even),
            odd: self.odd.sub(&other.odd),
        }
    }

    pub fn scale(&self, s: &Scalar) -> SuperFunction {
        SuperFunction {
            even: self.even.scale(s),
            odd: self.odd.scale(s),
        }
    }

    pub fn shift_exponent(&self, lambda: &Scalar) -> SuperFunction {
        SuperFunction {
            even: self.even.shift_exponent(lambda),
            odd: self.odd.shift_exponent(lambda),
        }
    }

    /// Coordinates tagged by component: 0 for the scalar part, 1 for the θ part.
    pub fn coordinates(&self) -> BTreeMap<(u8, Scalar, usize), Scalar> {
        let mut map = BTreeMap::new();
        for ((mu, k), c) in self.even.coordinates() {
            map.insert((0u8, mu, k), c);
        }
        for ((mu, k), c) in self.odd.coordinates() {
            map.insert((1u8, mu, k), c);
        }
        map
    }

    pub fn from_coordinates(map: &BTreeMap<(u8, Scalar, usize), Scalar>) -> SuperFunction {
        let mut even = BTreeMap::new();
        let mut odd = BTreeMap::new();
        for ((part, mu, k), c) in map {
            let target = if *part == 0 { &mut even } else { &mut odd };
            target.insert((mu.clone(), *k), c.clone());
        }
        SuperFunction {
            even: QuasiPoly::from_coordinates(&even),
            odd: QuasiPoly::from_coordinates(&odd),
        }
    }
}

impl fmt::Display for SuperFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.even.is_zero() {
            parts.push(self.even.to_string());
        }
        if !self.odd.is_zero() {
            let one = self.odd.is_constant() && self.odd.poly_at(&Scalar::zero()).coeff(0).is_one();
            parts.push(if one {
                "θ".to_string()
            } else {
                format!("({})*θ", self.odd)
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}
