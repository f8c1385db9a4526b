//! Exact bivariate polynomials with big-integer coefficients.
//!
//! This is the carrier for deletion-contraction: coefficients stay exact
//! integers all the way through, and evaluation happens either in `f64` or
//! in exact rationals at the very end.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in two variables `x`, `y` with `BigInt` coefficients, stored
/// sparsely as `(i, j) -> c` for the monomial `c * x^i * y^j`. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolyZZ {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolyZZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::default();
        p.add_term(0, 0, BigInt::one());
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for ((i, j), c) in &other.terms {
            self.add_term(*i, *j, c.clone());
        }
    }

    /// Multiplies by `x` in place (shifts every exponent pair).
    pub fn mul_x(&mut self) {
        let shifted = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((i + 1, j), c.clone()))
            .collect();
        self.terms = shifted;
    }

    /// Multiplies by `y` in place.
    pub fn mul_y(&mut self) {
        let shifted = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((i, j + 1), c.clone()))
            .collect();
        self.terms = shifted;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in deterministic (exponent-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c.to_f64().unwrap_or(f64::NAN) * x.powi(i as i32) * y.powi(j as i32)
            })
            .sum()
    }

    /// Exact evaluation over the rationals.
    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            term *= rational_pow(x, i);
            term *= rational_pow(y, j);
            acc += term;
        }
        acc
    }
}

pub(crate) fn rational_pow(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        let sq = &b * &b;
        b = sq;
        e >>= 1;
    }
    acc
}

impl fmt::Display for BivariatePolyZZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first, for readability
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(&(i, j), _)| std::cmp::Reverse((i + j, i)));
        for (idx, (&(i, j), c)) in terms.iter().enumerate() {
            let mut mono = String::new();
            if **c != BigInt::one() || (i, j) == (0, 0) {
                mono.push_str(&c.to_string());
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => mono.push_str(var),
                    _ => mono.push_str(&format!("{var}^{e}")),
                }
            }
            if idx == 0 {
                write!(f, "{mono}")?;
            } else if let Some(rest) = mono.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    #[test]
    fn arithmetic_and_display() {
        let mut p = BivariatePolyZZ::one();
        p.mul_x(); // x
        let mut q = BivariatePolyZZ::one();
        q.mul_y(); // y
        p.add_assign(&q); // x + y
        assert_eq!(p.to_string(), "x + y");
        assert_eq!(p.eval_f64(2.0, 3.0), 5.0);

        p.add_term(0, 1, BigInt::from_i64(-1).unwrap()); // x
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.to_string(), "x");
    }

    #[test]
    fn rational_evaluation_is_exact() {
        let mut p = BivariatePolyZZ::zero();
        p.add_term(2, 0, BigInt::from(1)); // x^2
        p.add_term(1, 0, BigInt::from(1)); // + x
        p.add_term(0, 1, BigInt::from(1)); // + y
        let x = BigRational::new(BigInt::from(3), BigInt::from(2));
        let y = BigRational::new(BigInt::from(-1), BigInt::from(4));
        let v = p.eval_rational(&x, &y);
        assert_eq!(v, BigRational::new(BigInt::from(7), BigInt::from(2)));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = BivariatePolyZZ::zero();
        p.add_term(1, 1, BigInt::from(5));
        p.add_term(1, 1, BigInt::from(-5));
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }
}
