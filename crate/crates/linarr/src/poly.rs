//! Homogeneous polynomials in x, y, z with exact rational coefficients.
//!
//! Terms are keyed by exponent triples in lexicographic order, so every
//! iteration over a polynomial is deterministic. Only nonzero coefficients
//! are stored.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::{fmt_rat, Rat};

/// Exponents (i, j, k) of the monomial x^i y^j z^k.
pub type Exponents = [u32; 3];

/// Number of monomials of the given degree in three variables.
pub fn monomial_count(degree: usize) -> usize {
    (degree + 1) * (degree + 2) / 2
}

/// All exponent triples of the given degree, in lexicographic order.
pub fn monomials(degree: usize) -> Vec<Exponents> {
    let d = degree as u32;
    let mut out = Vec::with_capacity(monomial_count(degree));
    for i in 0..=d {
        for j in 0..=d - i {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

/// Position of an exponent triple within `monomials(degree)`.
pub fn monomial_index(degree: usize, e: &Exponents) -> usize {
    debug_assert_eq!((e[0] + e[1] + e[2]) as usize, degree);
    let (i, j) = (e[0] as usize, e[1] as usize);
    // Block of first exponent i starts after sum_{i'<i} (degree - i' + 1)
    // earlier triples; within the block the second exponent counts up.
    i * (degree + 1) - i * i.saturating_sub(1) / 2 + j
}

/// A homogeneous polynomial of fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoly {
    degree: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl HomPoly {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The linear form a x + b y + c z.
    pub fn linear(coeffs: &[Rat; 3]) -> Self {
        let mut p = Self::zero(1);
        for (axis, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = [0u32; 3];
                e[axis] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn monomial(e: Exponents, coeff: Rat) -> Self {
        let degree = (e[0] + e[1] + e[2]) as usize;
        let mut p = Self::zero(degree);
        if !coeff.is_zero() {
            p.terms.insert(e, coeff);
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let c = ca * cb;
                let entry = out.terms.entry(e).or_insert_with(Rat::zero);
                *entry += c;
                if entry.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }

    /// Sum of two polynomials of the same degree.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree, other.degree,
            "cannot add homogeneous polynomials of different degrees"
        );
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(*e).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Partial derivative along the given axis (0 = x, 1 = y, 2 = z).
    pub fn partial(&self, axis: usize) -> Self {
        assert!(axis < 3);
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[axis] == 0 {
                continue;
            }
            let mut d = *e;
            d[axis] -= 1;
            out.terms.insert(d, c * crate::rational::rat(e[axis]));
        }
        out
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = ["x", "y", "z"];
        // Largest exponent triples first reads more naturally (x^2 before z^2).
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let c_str = fmt_rat(c);
            let (sign, mag) = match c_str.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", c_str),
            };
            if n == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (axis, &exp) in e.iter().enumerate() {
                match exp {
                    0 => {}
                    1 => factors.push(vars[axis].to_string()),
                    _ => factors.push(format!("{}^{}", vars[axis], exp)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn lin(a: i64, b: i64, c: i64) -> HomPoly {
        HomPoly::linear(&[rat(a), rat(b), rat(c)])
    }

    #[test]
    fn monomial_enumeration_is_consistent() {
        for degree in 0..8 {
            let ms = monomials(degree);
            assert_eq!(ms.len(), monomial_count(degree));
            let mut sorted = ms.clone();
            sorted.sort();
            assert_eq!(ms, sorted, "lexicographic order");
            for (idx, e) in ms.iter().enumerate() {
                assert_eq!(monomial_index(degree, e), idx);
            }
        }
    }

    #[test]
    fn product_of_coordinate_lines() {
        let f = lin(1, 0, 0).mul(&lin(0, 1, 0)).mul(&lin(0, 0, 1));
        assert_eq!(f.degree(), 3);
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coeff(&[1, 1, 1]), rat(1));
        assert_eq!(f.to_string(), "x*y*z");
    }

    #[test]
    fn product_with_cancellation_structure() {
        // x*(x - y) = x^2 - x*y
        let f = lin(1, 0, 0).mul(&lin(1, -1, 0));
        assert_eq!(f.coeff(&[2, 0, 0]), rat(1));
        assert_eq!(f.coeff(&[1, 1, 0]), rat(-1));
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn partials_of_xyz() {
        let f = HomPoly::monomial([1, 1, 1], rat(1));
        assert_eq!(f.partial(0), HomPoly::monomial([0, 1, 1], rat(1)));
        assert_eq!(f.partial(1), HomPoly::monomial([1, 0, 1], rat(1)));
        assert_eq!(f.partial(2), HomPoly::monomial([1, 1, 0], rat(1)));
    }

    #[test]
    fn partials_of_x_squared() {
        let f = HomPoly::monomial([2, 0, 0], rat(1));
        assert_eq!(f.partial(0), HomPoly::monomial([1, 0, 0], rat(2)));
        assert!(f.partial(1).is_zero());
        assert!(f.partial(2).is_zero());
    }

    #[test]
    fn addition_cancels_to_zero() {
        let f = lin(1, 2, 3);
        let g = f.scale(&rat(-1));
        assert!(f.add(&g).is_zero());
    }
}
