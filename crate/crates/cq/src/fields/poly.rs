//! Sparse multivariate polynomials in the coordinates `(t, x, y, z)`.
//!
//! Used as the exact analytic representation for test potentials and gauge
//! functions: differentiation and antidifferentiation are symbolic, so every
//! derivative a check needs is available to machine precision at any order.

use crate::minkowski::Event;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Term {
    coeff: f64,
    powers: [u8; 4],
}

/// Polynomial in `(t, x, y, z)` as a normalized list of monomials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly4 {
    terms: Vec<Term>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Poly4 { terms: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Poly4::from_terms([(c, [0, 0, 0, 0])])
    }

    /// The bare coordinate `t`, `x`, `y`, or `z` (axis 0..4).
    pub fn coordinate(axis: usize) -> Self {
        let mut powers = [0u8; 4];
        powers[axis] = 1;
        Poly4::from_terms([(1.0, powers)])
    }

    /// Builds from `(coefficient, [t, x, y, z] powers)` pairs, merging
    /// duplicates and dropping zero terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (f64, [u8; 4])>) -> Self {
        let mut poly = Poly4 {
            terms: terms
                .into_iter()
                .map(|(coeff, powers)| Term { coeff, powers })
                .collect(),
        };
        poly.normalize();
        poly
    }

    /// The term list as `(coefficient, powers)` pairs.
    pub fn terms(&self) -> Vec<(f64, [u8; 4])> {
        self.terms.iter().map(|t| (t.coeff, t.powers)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalize(&mut self) {
        self.terms.sort_by_key(|t| t.powers);
        let mut merged: Vec<Term> = Vec::with_capacity(self.terms.len());
        for term in self.terms.drain(..) {
            if let Some(last) = merged.last_mut() {
                if last.powers == term.powers {
                    last.coeff += term.coeff;
                    continue;
                }
            }
            merged.push(term);
        }
        merged.retain(|t| t.coeff != 0.0);
        self.terms = merged;
    }

    pub fn eval(&self, e: Event) -> f64 {
        let c = e.coords();
        self.terms
            .iter()
            .map(|term| {
                let mut v = term.coeff;
                for (axis, &p) in term.powers.iter().enumerate() {
                    if p > 0 {
                        v *= c[axis].powi(i32::from(p));
                    }
                }
                v
            })
            .sum()
    }

    /// Exact partial derivative along `axis`.
    pub fn partial(&self, axis: usize) -> Poly4 {
        let terms = self.terms.iter().filter_map(|term| {
            let p = term.powers[axis];
            if p == 0 {
                return None;
            }
            let mut powers = term.powers;
            powers[axis] = p - 1;
            Some((term.coeff * f64::from(p), powers))
        });
        Poly4::from_terms(terms)
    }

    /// Exact antiderivative along `axis` with zero integration constant.
    pub fn antiderivative(&self, axis: usize) -> Poly4 {
        let terms = self.terms.iter().map(|term| {
            let mut powers = term.powers;
            powers[axis] += 1;
            (term.coeff / f64::from(powers[axis]), powers)
        });
        Poly4::from_terms(terms)
    }

    pub fn add(&self, other: &Poly4) -> Poly4 {
        Poly4::from_terms(self.terms().into_iter().chain(other.terms()))
    }

    pub fn scale(&self, factor: f64) -> Poly4 {
        Poly4::from_terms(self.terms().into_iter().map(|(c, p)| (c * factor, p)))
    }

    pub fn add_scaled(&self, other: &Poly4, factor: f64) -> Poly4 {
        self.add(&other.scale(factor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_partial() {
        // p = 2 t x^2 - z
        let p = Poly4::from_terms([(2.0, [1, 2, 0, 0]), (-1.0, [0, 0, 0, 1])]);
        let e = Event::new(3.0, 2.0, 0.0, 5.0);
        assert_eq!(p.eval(e), 2.0 * 3.0 * 4.0 - 5.0);
        // d/dx = 4 t x
        let px = p.partial(1);
        assert_eq!(px.eval(e), 4.0 * 3.0 * 2.0);
        // d/dy = 0
        assert!(p.partial(2).is_zero());
    }

    #[test]
    fn antiderivative_inverts_partial() {
        let p = Poly4::from_terms([(3.0, [2, 0, 1, 0]), (0.5, [0, 0, 0, 0])]);
        let back = p.antiderivative(0).partial(0);
        assert_eq!(back, p);
    }

    #[test]
    fn like_terms_merge_and_zeros_drop() {
        let p = Poly4::from_terms([(1.0, [1, 0, 0, 0]), (2.0, [1, 0, 0, 0]), (0.0, [0, 1, 0, 0])]);
        assert_eq!(p.terms(), vec![(3.0, [1, 0, 0, 0])]);
        let cancelled = p.add_scaled(&p, -1.0);
        assert!(cancelled.is_zero());
    }
}
