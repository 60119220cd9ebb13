//! The universal constants of the case-1_4 mixed module coefficients.
//!
//! Requiring θ∂z + ∂θ to map each mixed basis vector of the exponential
//! block into the block's span modulo its pure-θ part, with the exponent
//! kept formal, collapses to a triangular quadratic system on the a_l alone:
//! with A(x) = Σ_l a_l x^{l-1}, the condition is A(x)² = 1 + x. Solving with
//! a₁ normalized to 1 gives a₂ = 1/2 and a_{l} = −½·Σ_{u=2}^{l-1} a_u a_{l+1−u}.

use num_traits::Signed;

use crate::scalar::Scalar;

/// The exact solution of the triangular system; signs alternate from a₃ on.
/// These are the coefficients the mixed-module construction actually needs
/// for invariance to hold.
pub fn signed_a_constants(count: usize) -> Vec<Scalar> {
    let mut a: Vec<Scalar> = Vec::with_capacity(count);
    if count >= 1 {
        a.push(Scalar::one());
    }
    if count >= 2 {
        a.push(Scalar::rational(1, 2));
    }
    let minus_half = Scalar::rational(-1, 2);
    for l in 3..=count {
        let mut sum = Scalar::zero();
        for u in 2..l {
            sum += &(&a[u - 1] * &a[l - u]);
        }
        a.push(&minus_half * &sum);
    }
    a
}

/// The constants in their conventional normalization: absolute values of
/// the solution, matching the published table of the first ten.
pub fn compute_a_constants(count: usize) -> Vec<Scalar> {
    signed_a_constants(count)
        .into_iter()
        .map(|s| if s.re().is_negative() { -s } else { s })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn normalization() {
        assert_eq!(compute_a_constants(1), vec![Scalar::one()]);
    }

    #[test]
    fn first_four() {
        let a = compute_a_constants(4);
        assert_eq!(
            a,
            vec![
                Scalar::one(),
                Scalar::rational(1, 2),
                Scalar::rational(1, 8),
                Scalar::rational(1, 16),
            ]
        );
    }

    #[test]
    fn signed_solution_satisfies_the_system() {
        // (Σ a_l x^{l-1})² = 1 + x, checked degree by degree
        let a = signed_a_constants(12);
        for d in 0..=10 {
            let mut s = Scalar::zero();
            for u in 1..=(d + 1) {
                let v = d + 2 - u;
                if v >= 1 && u <= a.len() && v <= a.len() {
                    s += &(&a[u - 1] * &a[v - 1]);
                }
            }
            let expect = match d {
                0 | 1 => Scalar::one(),
                _ => Scalar::zero(),
            };
            assert_eq!(s, expect, "degree {d}");
        }
    }

    #[test]
    fn signs_alternate_from_the_third() {
        let a = signed_a_constants(10);
        for (l, v) in a.iter().enumerate().skip(2) {
            let l = l + 1; // 1-based index
            let positive = v.re().is_positive();
            assert_eq!(positive, l % 2 == 0, "a_{l} sign");
        }
    }
}
