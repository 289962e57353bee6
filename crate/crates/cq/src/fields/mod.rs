//! Field types over spacetime: scalar gauge functions, electromagnetic
//! potentials, currents, and general CQ-valued fields.
//!
//! A potential packs `(phi, Ax, Ay, Az)` into the Minkowski-valued field
//! `A = @ phi + i Ax + j Ay + k Az`; a current packs `(rho, Jx, Jy, Jz)` the
//! same way. Each of the four components is a [`Component`] — polynomial or
//! closure backed — so the differentiation backends in
//! [`crate::electrodynamics`] can be swapped without touching the field
//! definitions.

mod component;
mod poly;

pub mod library;

pub use component::{Axis, Component};
pub use poly::Poly4;

use crate::algebra::CqNumber;
use crate::error::Result;
use crate::minkowski::Event;

/// Electromagnetic potential `A = @ phi + i Ax + j Ay + k Az`.
#[derive(Debug, Clone)]
pub struct PotentialField {
    pub phi: Component,
    pub a: [Component; 3],
}

impl PotentialField {
    pub fn new(phi: Component, a: [Component; 3]) -> Self {
        PotentialField { phi, a }
    }

    pub fn zero() -> Self {
        PotentialField::new(Component::zero(), std::array::from_fn(|_| Component::zero()))
    }

    /// The four components in Minkowski order `(phi, Ax, Ay, Az)`.
    pub fn components(&self) -> [&Component; 4] {
        [&self.phi, &self.a[0], &self.a[1], &self.a[2]]
    }

    /// Value as a CQ number; lies in `M` by construction.
    pub fn value_at(&self, e: Event) -> CqNumber {
        CqNumber::new([
            0.0,
            self.phi.value(e),
            self.a[0].value(e),
            self.a[1].value(e),
            self.a[2].value(e),
            0.0,
            0.0,
            0.0,
        ])
    }

    /// Pointwise `self + factor * other`, component by component.
    pub fn add_scaled(&self, other: &PotentialField, factor: f64) -> PotentialField {
        PotentialField::new(
            self.phi.add_scaled(&other.phi, factor),
            std::array::from_fn(|i| self.a[i].add_scaled(&other.a[i], factor)),
        )
    }

    pub fn has_gradient(&self) -> bool {
        self.components().iter().all(|c| c.has_gradient())
    }

    pub fn has_hessian(&self) -> bool {
        self.components().iter().all(|c| c.has_hessian())
    }

    /// The same potential as a general CQ-valued field.
    pub fn as_cq_field(&self) -> CqField {
        CqField::from_components([
            Component::zero(),
            self.phi.clone(),
            self.a[0].clone(),
            self.a[1].clone(),
            self.a[2].clone(),
            Component::zero(),
            Component::zero(),
            Component::zero(),
        ])
    }
}

/// External current `J = @ rho + i Jx + j Jy + k Jz`.
#[derive(Debug, Clone)]
pub struct CurrentDensity {
    pub rho: Component,
    pub j: [Component; 3],
}

impl CurrentDensity {
    pub fn new(rho: Component, j: [Component; 3]) -> Self {
        CurrentDensity { rho, j }
    }

    pub fn zero() -> Self {
        CurrentDensity::new(Component::zero(), std::array::from_fn(|_| Component::zero()))
    }

    pub fn value_at(&self, e: Event) -> CqNumber {
        CqNumber::new([
            0.0,
            self.rho.value(e),
            self.j[0].value(e),
            self.j[1].value(e),
            self.j[2].value(e),
            0.0,
            0.0,
            0.0,
        ])
    }
}

/// A general CQ-valued field: one real component per basis element.
#[derive(Debug, Clone)]
pub struct CqField {
    components: [Component; 8],
}

impl CqField {
    pub fn from_components(components: [Component; 8]) -> Self {
        CqField { components }
    }

    pub fn zero() -> Self {
        CqField::from_components(std::array::from_fn(|_| Component::zero()))
    }

    /// The coordinate field `q(e) = @t + ix + jy + kz`.
    pub fn coordinates() -> Self {
        let mut components: [Component; 8] = std::array::from_fn(|_| Component::zero());
        for (slot, axis) in [1usize, 2, 3, 4].into_iter().zip(0usize..4) {
            components[slot] = Component::poly(Poly4::coordinate(axis));
        }
        CqField::from_components(components)
    }

    /// The covariant coordinate field `conj_q(q)(e) = @t - ix - jy - kz`.
    pub fn coordinates_covariant() -> Self {
        let mut components: [Component; 8] = std::array::from_fn(|_| Component::zero());
        components[1] = Component::poly(Poly4::coordinate(0));
        for (slot, axis) in [2usize, 3, 4].into_iter().zip(1usize..4) {
            components[slot] = Component::poly(Poly4::coordinate(axis).scale(-1.0));
        }
        CqField::from_components(components)
    }

    pub fn component(&self, index: usize) -> &Component {
        &self.components[index]
    }

    pub fn value_at(&self, e: Event) -> CqNumber {
        CqNumber::new(std::array::from_fn(|i| self.components[i].value(e)))
    }
}

/// Electric and magnetic field triples as component fields.
///
/// The classical, component-wise Maxwell oracle differentiates these
/// directly, with no CQ arithmetic anywhere on that route.
#[derive(Debug, Clone)]
pub struct ElectromagneticField {
    pub electric: [Component; 3],
    pub magnetic: [Component; 3],
}

impl ElectromagneticField {
    pub fn new(electric: [Component; 3], magnetic: [Component; 3]) -> Self {
        ElectromagneticField { electric, magnetic }
    }

    /// Derives `E = -dA/dt - grad phi` and `B = curl A` analytically via the
    /// component combinators. Requires analytic gradients on the potential;
    /// polynomial potentials stay exact symbolic.
    pub fn from_potential_analytic(a: &PotentialField) -> Result<Self> {
        let electric: [Component; 3] = {
            let mut out: Vec<Component> = Vec::with_capacity(3);
            for s in 0..3 {
                let dt_a = a.a[s].derivative(Axis::T)?;
                let ds_phi = a.phi.derivative(Axis::spatial(s))?;
                out.push(dt_a.scaled(-1.0).add_scaled(&ds_phi, -1.0));
            }
            out.try_into().expect("three components")
        };
        let magnetic: [Component; 3] = {
            let mut out: Vec<Component> = Vec::with_capacity(3);
            for s in 0..3 {
                let (jj, kk) = ((s + 1) % 3, (s + 2) % 3);
                let dj_ak = a.a[kk].derivative(Axis::spatial(jj))?;
                let dk_aj = a.a[jj].derivative(Axis::spatial(kk))?;
                out.push(dj_ak.add_scaled(&dk_aj, -1.0));
            }
            out.try_into().expect("three components")
        };
        Ok(ElectromagneticField::new(electric, magnetic))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn potential_value_lies_in_m() {
        let a = library::plane_wave(0.8);
        let v = a.value_at(Event::new(0.3, 0.1, -0.2, 0.9));
        assert!(v.is_minkowski(0.0));
    }

    #[test]
    fn coordinate_fields_evaluate_to_the_event() {
        let e = Event::new(1.0, -2.0, 3.0, 0.5);
        let q = CqField::coordinates().value_at(e);
        assert_eq!(q, crate::minkowski::embed(e));
        let qbar = CqField::coordinates_covariant().value_at(e);
        assert_eq!(qbar, crate::minkowski::embed(e).conj_quaternion());
    }

    #[test]
    fn analytic_em_derivation_on_simple_potentials() {
        // phi = -x, A = 0: E = (1, 0, 0), B = 0
        let a = library::uniform_eb([1.0, 0.0, 0.0], [0.0, 0.0, 0.0]);
        let em = ElectromagneticField::from_potential_analytic(&a).unwrap();
        let e = Event::new(0.2, 0.4, -0.6, 0.8);
        assert_eq!(em.electric[0].value(e), 1.0);
        assert_eq!(em.electric[1].value(e), 0.0);
        for b in &em.magnetic {
            assert_eq!(b.value(e), 0.0);
        }
        // Az = x: B = (0, -1, 0)
        let a = PotentialField::new(
            Component::zero(),
            [
                Component::zero(),
                Component::zero(),
                Component::poly(Poly4::coordinate(1)),
            ],
        );
        let em = ElectromagneticField::from_potential_analytic(&a).unwrap();
        assert_eq!(em.magnetic[0].value(e), 0.0);
        assert_eq!(em.magnetic[1].value(e), -1.0);
        assert_eq!(em.magnetic[2].value(e), 0.0);
    }

    #[test]
    fn uniform_eb_reproduces_requested_fields() {
        let e0 = [0.4, -1.2, 0.7];
        let b0 = [-0.3, 0.9, 2.0];
        let a = library::uniform_eb(e0, b0);
        let em = ElectromagneticField::from_potential_analytic(&a).unwrap();
        let e = Event::new(-0.7, 1.4, 0.3, -2.2);
        for s in 0..3 {
            assert!((em.electric[s].value(e) - e0[s]).abs() <= 1e-15);
            assert!((em.magnetic[s].value(e) - b0[s]).abs() <= 1e-15);
        }
    }
}
