//! Spacetime events and the embedding `R^4 <-> M`.
//!
//! An event `(t, x, y, z)` is identified with the purely imaginary CQ number
//! `q = @t + ix + jy + kz`. Natural units, `c = 1`; the metric signature is
//! `(+,-,-,-)`, fixed by the proper interval `-conj_q(q) q = t^2-x^2-y^2-z^2`.
//! Within `M`, complex conjugation is time reversal and quaternionic
//! conjugation is parity.
//!
//! The same type carries energy-momentum `(E, px, py, pz)` and any other
//! contravariant four-component quantity.

use crate::algebra::{basis, CqNumber};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default tolerance for gating membership in `M`.
///
/// Looser than the arithmetic tolerance because it gates results of
/// multi-factor rotor products, which accumulate rounding.
pub const PROJECT_TOL: f64 = 1e-9;

/// A spacetime point (or four-vector) in natural units.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Event {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Event {
    pub const ORIGIN: Event = Event::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Event { t, x, y, z }
    }

    /// Coordinates as `[t, x, y, z]`.
    pub fn coords(&self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn from_coords(c: [f64; 4]) -> Self {
        Event::new(c[0], c[1], c[2], c[3])
    }

    /// The event shifted by `delta` along coordinate axis `axis` (0 = t .. 3 = z).
    pub fn offset(&self, axis: usize, delta: f64) -> Event {
        let mut c = self.coords();
        c[axis] += delta;
        Event::from_coords(c)
    }

    pub fn max_abs_diff(&self, other: &Event) -> f64 {
        self.coords()
            .iter()
            .zip(other.coords())
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Embeds an event as the purely imaginary CQ number `@t + ix + jy + kz`.
///
/// The result satisfies `is_minkowski` exactly.
pub fn embed(e: Event) -> CqNumber {
    CqNumber::new([0.0, e.t, e.x, e.y, e.z, 0.0, 0.0, 0.0])
}

/// Inverse of [`embed`]: reads the event coordinates off a member of `M`.
///
/// Errors with [`Error::NotInMinkowskiSubspace`] when any of the `1, @i, @j,
/// @k` coefficients exceeds `tol` — that usually means a transformation or
/// field computation has leaked outside the subspace.
pub fn project(m: &CqNumber, tol: f64) -> Result<Event> {
    let defect = m.minkowski_defect();
    if defect > tol {
        return Err(Error::NotInMinkowskiSubspace { defect, tol });
    }
    Ok(Event::new(
        m.coeff(basis::A),
        m.coeff(basis::I),
        m.coeff(basis::J),
        m.coeff(basis::K),
    ))
}

/// The proper interval `t^2 - x^2 - y^2 - z^2` of `q` in `M`, computed as the
/// real part of `-conj_q(q) q`.
///
/// The other seven coefficients of the product cancel for members of `M`;
/// `tol` gates both the membership check and that cancellation.
pub fn proper_interval(q: &CqNumber, tol: f64) -> Result<f64> {
    let defect = q.minkowski_defect();
    if defect > tol {
        return Err(Error::NotInMinkowskiSubspace { defect, tol });
    }
    let product = -(q.conj_quaternion() * *q);
    let interval = product.coeff(basis::ONE);
    let stray = (product - CqNumber::scalar(interval)).max_abs();
    debug_assert!(
        stray <= tol.max(1e-12) * (1.0 + q.max_abs() * q.max_abs()),
        "-conj_q(q) q has non-real parts of size {stray:e} for q in M"
    );
    Ok(interval)
}

/// Minkowski scalar product of two members of `M`, computed as the real part
/// of `-1/2 (conj_q(p) q + conj_q(q) p)`.
///
/// For `p = (E, px, py, pz)` and `q = (t, x, y, z)` this is
/// `E t - px x - py y - pz z`; the imaginary parts of the symmetrized product
/// cancel, which is asserted. `scalar_product(q, q)` equals the proper
/// interval of `q`.
pub fn scalar_product(p: &CqNumber, q: &CqNumber, tol: f64) -> Result<f64> {
    for m in [p, q] {
        let defect = m.minkowski_defect();
        if defect > tol {
            return Err(Error::NotInMinkowskiSubspace { defect, tol });
        }
    }
    let sym = (p.conj_quaternion() * *q + q.conj_quaternion() * *p).scale(-0.5);
    let value = sym.coeff(basis::ONE);
    let stray = (sym - CqNumber::scalar(value)).max_abs();
    debug_assert!(
        stray <= tol.max(1e-12) * (1.0 + p.max_abs() * q.max_abs()),
        "symmetrized product has imaginary parts of size {stray:e}"
    );
    Ok(value)
}

/// Scalar product of two events, convenience wrapper over the CQ route.
pub fn event_scalar_product(p: Event, q: Event) -> f64 {
    scalar_product(&embed(p), &embed(q), 0.0).expect("embedded events are exactly in M")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_writes_coefficients_in_order() {
        let q = embed(Event::new(1.0, 2.0, 3.0, 4.0));
        assert_eq!(q.coefficients(), [0.0, 1.0, 2.0, 3.0, 4.0, 0.0, 0.0, 0.0]);
        assert_eq!(embed(Event::ORIGIN), CqNumber::ZERO);
        assert!(q.is_minkowski(0.0));
    }

    #[test]
    fn quaternion_conjugate_of_embedding_is_parity() {
        let e = Event::new(1.0, 2.0, 3.0, 4.0);
        let covariant = embed(e).conj_quaternion();
        assert_eq!(covariant, embed(Event::new(1.0, -2.0, -3.0, -4.0)));
        // complex conjugate is time reversal
        let reversed = embed(e).conj_complex();
        assert_eq!(reversed, embed(Event::new(-1.0, 2.0, 3.0, 4.0)));
    }

    #[test]
    fn project_roundtrip_is_exact() {
        let e = Event::new(-0.5, 1.25, -3.0, 0.125);
        assert_eq!(project(&embed(e), 0.0).unwrap(), e);
    }

    #[test]
    fn project_rejects_values_outside_m() {
        let bad = CqNumber::ONE + CqNumber::A;
        let err = project(&bad, 1e-9).unwrap_err();
        assert!(matches!(err, Error::NotInMinkowskiSubspace { .. }));
    }

    #[test]
    fn proper_interval_examples() {
        // (2,1,0,0): 4 - 1 = 3
        let q = embed(Event::new(2.0, 1.0, 0.0, 0.0));
        assert_eq!(proper_interval(&q, 0.0).unwrap(), 3.0);
        // light-like
        let l = embed(Event::new(1.0, 1.0, 0.0, 0.0));
        assert_eq!(proper_interval(&l, 0.0).unwrap(), 0.0);
        // rejects non-members
        assert!(proper_interval(&CqNumber::ONE, 1e-12).is_err());
    }

    #[test]
    fn scalar_product_matches_component_formula() {
        let p = Event::new(2.0, -1.0, 0.5, 3.0);
        let q = Event::new(1.0, 4.0, -2.0, 0.25);
        let expected = p.t * q.t - p.x * q.x - p.y * q.y - p.z * q.z;
        let got = event_scalar_product(p, q);
        assert!((got - expected).abs() <= 1e-12);
        // <q, q> equals the proper interval
        let qq = event_scalar_product(q, q);
        let interval = proper_interval(&embed(q), 0.0).unwrap();
        assert!((qq - interval).abs() <= 1e-12);
        // symmetry
        assert_eq!(got, event_scalar_product(q, p));
    }
}
