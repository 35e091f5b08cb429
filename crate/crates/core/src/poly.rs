//! Dense one-variable integer polynomials and evaluation in any unital ring.

use std::fmt;

use crate::scalar::Scalar;
use crate::Int;

/// What polynomial evaluation needs from a ring: `1`, `+`, `-`, `*` and
/// multiplication by an integer. Implemented by scalars and by every algebra
/// element type in the crate.
pub trait RingElement: Clone + PartialEq {
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale_int(&self, k: Int) -> Self;

    fn zero_like(&self) -> Self {
        self.scale_int(0)
    }

    fn pow_u(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl RingElement for Scalar {
    fn one_like(&self) -> Self {
        self.ring().one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_int(&self, k: Int) -> Self {
        self.scale(k)
    }
}

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::new(vec![1])
    }

    pub fn monomial(c: Int, deg: usize) -> Self {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        IntPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, k: Int) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        IntPoly::new(v)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder or needs non-integer coefficients.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(IntPoly::zero()) } else { None };
        }
        let mut quot = vec![0; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            if c % lead != 0 {
                return None;
            }
            let qc = c / lead;
            quot[i] = qc;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= qc * d;
            }
        }
        if rem.iter().all(|c| *c == 0) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Horner evaluation at `x`.
    pub fn eval<R: RingElement>(&self, x: &R) -> R {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(&x.one_like().scale_int(*c));
        }
        acc
    }

    /// Renders with variable name `var`, ascending degree, e.g.
    /// `-2 + 1*x^2`.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = if out.is_empty() {
                c
            } else if c < 0 {
                out.push_str(" - ");
                -c
            } else {
                out.push_str(" + ");
                c
            };
            match i {
                0 => out.push_str(&mag.to_string()),
                1 => out.push_str(&format!("{mag}*{var}")),
                _ => out.push_str(&format!("{mag}*{var}^{i}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Ring;

    #[test]
    fn division() {
        // (x^2 - 1) / (x - 1) = x + 1
        let num = IntPoly::new(vec![-1, 0, 1]);
        let den = IntPoly::new(vec![-1, 1]);
        assert_eq!(num.div_exact(&den), Some(IntPoly::new(vec![1, 1])));
        assert_eq!(IntPoly::new(vec![1, 0, 1]).div_exact(&den), None);
        assert_eq!(IntPoly::new(vec![1, 2]).div_exact(&IntPoly::new(vec![0, 2])), None);
    }

    #[test]
    fn horner() {
        let p = IntPoly::new(vec![-2, 0, 1]);
        let g = Ring::generic();
        // x = w + w^-1: x^2 - 2 = w^2 + w^-2
        let x = g.omega_terms([(1, 1), (-1, 1)]);
        assert_eq!(p.eval(&x), g.omega_terms([(2, 1), (-2, 1)]));
        assert_eq!(p.render("x"), "-2 + 1*x^2");
    }
}
