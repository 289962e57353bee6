//! Built-in test fields.
//!
//! Each member targets a different subset of the four classical residuals:
//! constants and linear potentials exercise the trivial cases, the vacuum
//! plane wave balances the curl and time-derivative terms, the static
//! Gaussian blob carries a matched charge density, and the seeded random
//! polynomial/harmonic generators cover generic smooth fields. All sources
//! are smooth; singular (point-charge) currents are out of scope.

use super::component::{Axis, Component};
use super::poly::Poly4;
use super::{CurrentDensity, ElectromagneticField, PotentialField};
use crate::error::Result;
use crate::minkowski::Event;
use rand::Rng;

/// Constant potential: zero field strength, zero matched current.
pub fn constant(phi0: f64, a0: [f64; 3]) -> PotentialField {
    PotentialField::new(
        Component::constant(phi0),
        std::array::from_fn(|i| Component::constant(a0[i])),
    )
}

/// Linear potential producing the uniform fields `E = e0`, `B = b0`:
/// `phi = -e0.x`, `A = -(x cross b0) / 2`.
pub fn uniform_eb(e0: [f64; 3], b0: [f64; 3]) -> PotentialField {
    let coords = [Poly4::coordinate(1), Poly4::coordinate(2), Poly4::coordinate(3)];
    let mut phi = Poly4::zero();
    for s in 0..3 {
        phi = phi.add_scaled(&coords[s], -e0[s]);
    }
    let a = std::array::from_fn(|s| {
        let (jj, kk) = ((s + 1) % 3, (s + 2) % 3);
        // (x cross b0)_s = x_jj b0_kk - x_kk b0_jj
        let cross = coords[jj].scale(b0[kk]).add_scaled(&coords[kk], -b0[jj]);
        Component::poly(cross.scale(-0.5))
    });
    PotentialField::new(Component::poly(phi), a)
}

/// Vacuum plane wave `A = (0, amplitude * sin(z - t), 0, 0)`; an exact
/// source-free solution with `E = (a cos(z-t), 0, 0)`, `B = (0, a cos(z-t), 0)`.
pub fn plane_wave(amplitude: f64) -> PotentialField {
    PotentialField::new(
        Component::zero(),
        [
            Component::wave(amplitude, [-1.0, 0.0, 0.0, 1.0], 0.0),
            Component::zero(),
            Component::zero(),
        ],
    )
}

/// Static Gaussian potential `phi = exp(-r^2)`, `A = 0`, with the matched
/// charge density `rho = -laplacian(phi) = (6 - 4 r^2) exp(-r^2)` and zero
/// spatial current.
pub fn gaussian_blob() -> (PotentialField, CurrentDensity) {
    let phi = Component::from_fn(|e| (-r2(e)).exp())
        .with_gradient(|e| {
            let g = (-r2(e)).exp();
            [0.0, -2.0 * e.x * g, -2.0 * e.y * g, -2.0 * e.z * g]
        })
        .with_hessian(|e| {
            let g = (-r2(e)).exp();
            let xs = [0.0, e.x, e.y, e.z];
            std::array::from_fn(|a| {
                std::array::from_fn(|b| {
                    if a == 0 || b == 0 {
                        0.0
                    } else {
                        (4.0 * xs[a] * xs[b] - if a == b { 2.0 } else { 0.0 }) * g
                    }
                })
            })
        });
    let rho = Component::from_fn(|e| {
        let r2 = r2(e);
        (6.0 - 4.0 * r2) * (-r2).exp()
    });
    let potential = PotentialField::new(phi, std::array::from_fn(|_| Component::zero()));
    let current = CurrentDensity::new(rho, std::array::from_fn(|_| Component::zero()));
    (potential, current)
}

fn r2(e: Event) -> f64 {
    e.x * e.x + e.y * e.y + e.z * e.z
}

/// Seeded random polynomial potential with total degree at most `max_degree`
/// per component. Exact symbolic derivatives of every order.
pub fn random_polynomial(rng: &mut impl Rng, max_degree: u8) -> PotentialField {
    let mut component = |rng: &mut dyn rand::RngCore| {
        let mut terms = Vec::new();
        for pt in 0..=max_degree {
            for px in 0..=max_degree - pt {
                for py in 0..=max_degree - pt - px {
                    for pz in 0..=max_degree - pt - px - py {
                        terms.push((rng.random_range(-0.5..0.5), [pt, px, py, pz]));
                    }
                }
            }
        }
        Component::poly(Poly4::from_terms(terms))
    };
    PotentialField::new(
        component(rng),
        std::array::from_fn(|_| component(rng)),
    )
}

/// Seeded random harmonic potential: each component is one sine wave with
/// small integer wave vector. Smooth and non-polynomial, so finite-difference
/// truncation error is visible at every order.
pub fn random_harmonic(rng: &mut impl Rng) -> PotentialField {
    let mut component = |rng: &mut dyn rand::RngCore| {
        let mut k = [0.0; 4];
        while k.iter().all(|&v| v == 0.0) {
            k = std::array::from_fn(|_| f64::from(rng.random_range(-2_i32..=2)));
        }
        let amplitude = rng.random_range(0.2..1.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        let phase = rng.random_range(0.0..std::f64::consts::TAU);
        Component::wave(amplitude, k, phase)
    };
    PotentialField::new(
        component(rng),
        std::array::from_fn(|_| component(rng)),
    )
}

/// The current that balances the potential's field equations exactly:
/// `rho = div E` and `J = -dE/dt + curl B`, built through the component
/// combinators (classical route, no CQ arithmetic). With this current every
/// residual of the field equations vanishes analytically.
///
/// Requires second-order analytic derivatives on the potential.
pub fn matched_current(a: &PotentialField) -> Result<CurrentDensity> {
    let em = ElectromagneticField::from_potential_analytic(a)?;
    let mut rho = Component::zero();
    for s in 0..3 {
        rho = rho.add_scaled(&em.electric[s].derivative(Axis::spatial(s))?, 1.0);
    }
    let mut j: Vec<Component> = Vec::with_capacity(3);
    for s in 0..3 {
        let (jj, kk) = ((s + 1) % 3, (s + 2) % 3);
        let curl_b = em.magnetic[kk]
            .derivative(Axis::spatial(jj))?
            .add_scaled(&em.magnetic[jj].derivative(Axis::spatial(kk))?, -1.0);
        let dt_e = em.electric[s].derivative(Axis::T)?;
        j.push(dt_e.scaled(-1.0).add_scaled(&curl_b, 1.0));
    }
    Ok(CurrentDensity::new(rho, j.try_into().expect("three components")))
}

/// `n` events with coordinates uniform in `[-half_width, half_width]`.
pub fn random_events(rng: &mut impl Rng, n: usize, half_width: f64) -> Vec<Event> {
    (0..n)
        .map(|_| {
            let mut c = [0.0; 4];
            for v in &mut c {
                *v = rng.random_range(-half_width..half_width);
            }
            Event::from_coords(c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn blob_density_matches_negative_laplacian_of_phi() {
        let (potential, current) = gaussian_blob();
        let h = 1e-4;
        let e = Event::new(0.0, 0.3, -0.5, 0.8);
        // central second differences of phi, spatial axes only
        let mut lap = 0.0;
        for axis in 1..4 {
            let f = |d: f64| potential.phi.value(e.offset(axis, d));
            lap += (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
        }
        let rho = current.rho.value(e);
        assert!(
            (rho + lap).abs() <= 1e-6,
            "rho = {rho}, laplacian = {lap}"
        );
    }

    #[test]
    fn matched_current_for_polynomials_is_polynomial_exact() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let a = random_polynomial(&mut rng, 3);
        let j = matched_current(&a).unwrap();
        // rho must equal div E evaluated by hand from the potential gradient
        let e = Event::new(0.4, -0.2, 0.6, -0.8);
        let em = ElectromagneticField::from_potential_analytic(&a).unwrap();
        let div_e: f64 = (0..3)
            .map(|s| {
                em.electric[s]
                    .analytic_partial(Axis::spatial(s), e)
                    .unwrap()
            })
            .sum();
        assert!((j.rho.value(e) - div_e).abs() <= 1e-12);
    }

    #[test]
    fn random_generators_are_seed_deterministic() {
        let sample = |seed: u64| {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let a = random_polynomial(&mut rng, 2);
            let h = random_harmonic(&mut rng);
            let pts = random_events(&mut rng, 3, 1.0);
            (a.value_at(pts[0]), h.value_at(pts[1]), pts[2])
        };
        let (a1, h1, p1) = sample(42);
        let (a2, h2, p2) = sample(42);
        assert_eq!(a1, a2);
        assert_eq!(h1, h2);
        assert_eq!(p1, p2);
        let (a3, _, _) = sample(43);
        assert_ne!(a1, a3);
    }
}
