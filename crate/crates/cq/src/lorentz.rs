//! Lorentz transformations as rotor multiplication.
//!
//! A rotor is a unit CQ number `w` with `w conj_q(w) = 1`. It acts on
//! contravariant quantities by
//!
//! ```text
//! q -> w q conj_c(conj_q(w))
//! ```
//!
//! with `w = cos(theta/2) + n sin(theta/2)` for a rotation by `theta` about
//! the unit direction `n = i nx + j ny + k nz`, and
//! `w = cosh(L/2) + @ n sinh(L/2)` for a boost with rapidity `L` along `n`.
//! Both follow from `n^2 = -1` and `(n@)^2 = +1`.
//!
//! Sign convention (frozen here, since it is otherwise ambiguous): expanding
//! the boost action gives `t' = t cosh L - (n.x) sinh L`, i.e. the passive
//! transformation into a frame moving with velocity `v = tanh L` along `n`.
//! [`LorentzMatrix`] provides the classical 4x4 bridge built to the same
//! convention from the textbook component formulas, independent of the CQ
//! algebra, so the two routes can be cross-checked numerically.

use crate::algebra::{basis, CqNumber};
use crate::error::{Error, Result};
use crate::minkowski::{embed, project, Event};
use serde::{Deserialize, Serialize};

/// Tolerance for accepting a CQ value as a unit rotor.
pub const ROTOR_TOL: f64 = 1e-9;

/// A normalized spatial direction.
///
/// Construction normalizes and rejects the zero vector; the rotor formulas
/// are undefined for `n = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitDirection {
    nx: f64,
    ny: f64,
    nz: f64,
}

impl UnitDirection {
    pub const X: UnitDirection = UnitDirection { nx: 1.0, ny: 0.0, nz: 0.0 };
    pub const Y: UnitDirection = UnitDirection { nx: 0.0, ny: 1.0, nz: 0.0 };
    pub const Z: UnitDirection = UnitDirection { nx: 0.0, ny: 0.0, nz: 1.0 };

    pub fn new(nx: f64, ny: f64, nz: f64) -> Result<Self> {
        let norm = (nx * nx + ny * ny + nz * nz).sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::InvalidDirection(nx, ny, nz));
        }
        Ok(UnitDirection {
            nx: nx / norm,
            ny: ny / norm,
            nz: nz / norm,
        })
    }

    pub fn components(&self) -> [f64; 3] {
        [self.nx, self.ny, self.nz]
    }

    /// The purely quaternionic unit `i nx + j ny + k nz`; squares to -1.
    pub fn as_cq(&self) -> CqNumber {
        CqNumber::new([0.0, 0.0, self.nx, self.ny, self.nz, 0.0, 0.0, 0.0])
    }
}

/// Unit CQ number implementing a Lorentz transformation.
///
/// Rotors are closed under [`Rotor::compose`]; `w` and `-w` induce the same
/// map on `M` (double cover). Unit norm is checked at construction from raw
/// values but never silently restored afterwards — renormalization is only
/// performed on explicit request via [`Rotor::renormalized`], so drift across
/// long composition chains stays observable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rotor {
    value: CqNumber,
}

impl Rotor {
    pub const IDENTITY: Rotor = Rotor { value: CqNumber::ONE };

    /// Rotor for a rotation by `theta` (radians) about `n`:
    /// `cos(theta/2) + n sin(theta/2)`.
    pub fn rotation(n: UnitDirection, theta: f64) -> Rotor {
        let half = 0.5 * theta;
        let value = CqNumber::scalar(half.cos()) + n.as_cq().scale(half.sin());
        Rotor { value }
    }

    /// Rotor for a boost with rapidity `rapidity` along `n`:
    /// `cosh(L/2) + @ n sinh(L/2)`. The velocity parameter is `v = tanh L`.
    pub fn boost(n: UnitDirection, rapidity: f64) -> Rotor {
        let half = 0.5 * rapidity;
        let an = CqNumber::A * n.as_cq();
        let value = CqNumber::scalar(half.cosh()) + an.scale(half.sinh());
        Rotor { value }
    }

    /// Wraps a raw CQ value, checking `w conj_q(w) = 1` up to `tol`.
    pub fn from_cq(value: CqNumber, tol: f64) -> Result<Rotor> {
        let defect = (value * value.conj_quaternion() - CqNumber::ONE).max_abs();
        if defect > tol {
            return Err(Error::NotARotor { defect, tol });
        }
        Ok(Rotor { value })
    }

    pub fn as_cq(&self) -> CqNumber {
        self.value
    }

    /// Deviation of `w conj_q(w)` from 1 (sup norm).
    pub fn unit_defect(&self) -> f64 {
        (self.value * self.value.conj_quaternion() - CqNumber::ONE).max_abs()
    }

    /// Explicitly renormalized copy. For rotors built from the rotation and
    /// boost formulas and their products, `w conj_q(w)` is a positive real
    /// scalar, so dividing by its square root restores unit norm.
    pub fn renormalized(&self) -> Result<Rotor> {
        let gram = self.value * self.value.conj_quaternion();
        let real = gram.coeff(basis::ONE);
        let stray = (gram - CqNumber::scalar(real)).max_abs();
        if !(real > 0.0) || stray > ROTOR_TOL * real.max(1.0) {
            return Err(Error::NotARotor {
                defect: stray.max((real - 1.0).abs()),
                tol: ROTOR_TOL,
            });
        }
        Ok(Rotor {
            value: self.value.scale(1.0 / real.sqrt()),
        })
    }

    /// Composition: `compose(w2, w1)` applies `w1` first, then `w2`.
    pub fn compose(w2: &Rotor, w1: &Rotor) -> Rotor {
        Rotor {
            value: w2.value * w1.value,
        }
    }

    /// Contravariant action `q -> w q conj_c(conj_q(w))`.
    ///
    /// Maps `M` to `M` and preserves the proper interval. Also applies to
    /// general CQ values (differential operators transform the same way).
    pub fn apply_contravariant(&self, q: &CqNumber) -> CqNumber {
        let w = self.value;
        w * *q * w.conj_quaternion().conj_complex()
    }

    /// Covariant action `qbar -> conj_c(w) qbar conj_q(w)`.
    ///
    /// For `q` in `M` this is `conj_q` of the contravariant action of `q`.
    pub fn apply_covariant(&self, qbar: &CqNumber) -> CqNumber {
        let w = self.value;
        w.conj_complex() * *qbar * w.conj_quaternion()
    }

    /// Field-strength action `F -> conj_c(w) F conj_c(conj_q(w))`.
    ///
    /// Preserves the constraint `F = -conj_q(F)`.
    pub fn apply_field_strength(&self, f: &CqNumber) -> CqNumber {
        let w = self.value;
        w.conj_complex() * *f * w.conj_quaternion().conj_complex()
    }

    /// Transforms an event through the embedding and back.
    pub fn transform_event(&self, e: Event, tol: f64) -> Result<Event> {
        project(&self.apply_contravariant(&embed(e)), tol)
    }

    /// The equivalent 4x4 matrix: column `m` is the image of the `m`-th
    /// coordinate basis event under the contravariant action.
    pub fn to_matrix(&self) -> LorentzMatrix {
        let mut m = [[0.0; 4]; 4];
        for (col, basis_event) in [
            Event::new(1.0, 0.0, 0.0, 0.0),
            Event::new(0.0, 1.0, 0.0, 0.0),
            Event::new(0.0, 0.0, 1.0, 0.0),
            Event::new(0.0, 0.0, 0.0, 1.0),
        ]
        .iter()
        .enumerate()
        {
            let image = self.apply_contravariant(&embed(*basis_event));
            // Rotor action keeps exact members of M exactly in M up to
            // rounding; read the coordinates without gating.
            let c = [
                image.coeff(basis::A),
                image.coeff(basis::I),
                image.coeff(basis::J),
                image.coeff(basis::K),
            ];
            for row in 0..4 {
                m[row][col] = c[row];
            }
        }
        LorentzMatrix(m)
    }
}

impl std::ops::Neg for Rotor {
    type Output = Rotor;
    fn neg(self) -> Rotor {
        Rotor { value: -self.value }
    }
}

/// A 4x4 matrix acting on column vectors `(t, x, y, z)`.
///
/// Serves as the classical cross-check for the rotor route. The
/// [`LorentzMatrix::rotation`] and [`LorentzMatrix::boost`] constructors are
/// built from the textbook component formulas (Rodrigues rotation and
/// `gamma`/`v` boost entries) and share no code with the CQ algebra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LorentzMatrix(pub [[f64; 4]; 4]);

impl LorentzMatrix {
    pub const IDENTITY: LorentzMatrix = LorentzMatrix([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    /// Spatial rotation by `theta` about `n` (Rodrigues formula), time row
    /// and column trivial.
    pub fn rotation(n: UnitDirection, theta: f64) -> LorentzMatrix {
        let [nx, ny, nz] = n.components();
        let c = theta.cos();
        let s = theta.sin();
        let omc = 1.0 - c;
        let r = [
            [
                c + nx * nx * omc,
                nx * ny * omc - nz * s,
                nx * nz * omc + ny * s,
            ],
            [
                ny * nx * omc + nz * s,
                c + ny * ny * omc,
                ny * nz * omc - nx * s,
            ],
            [
                nz * nx * omc - ny * s,
                nz * ny * omc + nx * s,
                c + nz * nz * omc,
            ],
        ];
        let mut m = [[0.0; 4]; 4];
        m[0][0] = 1.0;
        for row in 0..3 {
            for col in 0..3 {
                m[row + 1][col + 1] = r[row][col];
            }
        }
        LorentzMatrix(m)
    }

    /// Boost with rapidity `rapidity` along `n`, in the same passive
    /// convention as [`Rotor::boost`]:
    ///
    /// ```text
    /// t' = t cosh L - (n.x) sinh L
    /// x' = x + ((cosh L - 1)(n.x) - t sinh L) n
    /// ```
    pub fn boost(n: UnitDirection, rapidity: f64) -> LorentzMatrix {
        let [nx, ny, nz] = n.components();
        let ch = rapidity.cosh();
        let sh = rapidity.sinh();
        let nv = [nx, ny, nz];
        let mut m = [[0.0; 4]; 4];
        m[0][0] = ch;
        for s in 0..3 {
            m[0][s + 1] = -sh * nv[s];
            m[s + 1][0] = -sh * nv[s];
            for c in 0..3 {
                m[s + 1][c + 1] = if s == c { 1.0 } else { 0.0 } + (ch - 1.0) * nv[s] * nv[c];
            }
        }
        LorentzMatrix(m)
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &LorentzMatrix) -> LorentzMatrix {
        let mut out = [[0.0; 4]; 4];
        for row in 0..4 {
            for col in 0..4 {
                out[row][col] = (0..4).map(|k| self.0[row][k] * rhs.0[k][col]).sum();
            }
        }
        LorentzMatrix(out)
    }

    pub fn apply(&self, e: Event) -> Event {
        let c = e.coords();
        let mut out = [0.0; 4];
        for (row, slot) in out.iter_mut().enumerate() {
            *slot = (0..4).map(|k| self.0[row][k] * c[k]).sum();
        }
        Event::from_coords(out)
    }

    /// Largest entry of `M^T g M - g` with `g = diag(1,-1,-1,-1)`; zero for
    /// exact Lorentz matrices.
    pub fn minkowski_defect(&self) -> f64 {
        let g = [1.0, -1.0, -1.0, -1.0];
        let mut worst = 0.0_f64;
        for a in 0..4 {
            for b in 0..4 {
                let entry: f64 = (0..4).map(|k| self.0[k][a] * g[k] * self.0[k][b]).sum();
                let expect = if a == b { g[a] } else { 0.0 };
                worst = worst.max((entry - expect).abs());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &LorentzMatrix) -> f64 {
        let mut worst = 0.0_f64;
        for row in 0..4 {
            for col in 0..4 {
                worst = worst.max((self.0[row][col] - other.0[row][col]).abs());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn unit_direction_normalizes_and_rejects_zero() {
        let n = UnitDirection::new(3.0, 0.0, 4.0).unwrap();
        let [nx, ny, nz] = n.components();
        assert!((nx - 0.6).abs() <= 1e-15 && ny == 0.0 && (nz - 0.8).abs() <= 1e-15);
        assert!(UnitDirection::new(0.0, 0.0, 0.0).is_err());
        assert!(UnitDirection::new(f64::NAN, 1.0, 0.0).is_err());
    }

    #[test]
    fn direction_squares() {
        // n^2 = -1 and (n@)^2 = +1
        let n = UnitDirection::new(1.0, -2.0, 0.5).unwrap().as_cq();
        assert!((n * n - (-CqNumber::ONE)).max_abs() <= 1e-15);
        let na = n * CqNumber::A;
        assert!((na * na - CqNumber::ONE).max_abs() <= 1e-15);
    }

    #[test]
    fn zero_angle_and_zero_rapidity_give_identity() {
        let n = UnitDirection::Z;
        assert_eq!(Rotor::rotation(n, 0.0).as_cq(), CqNumber::ONE);
        assert_eq!(Rotor::boost(n, 0.0).as_cq(), CqNumber::ONE);
    }

    #[test]
    fn full_turn_gives_minus_one_but_acts_as_identity() {
        let w = Rotor::rotation(UnitDirection::Z, 2.0 * PI);
        assert!((w.as_cq() + CqNumber::ONE).max_abs() <= 1e-15);
        let e = Event::new(0.3, 1.0, -2.0, 0.7);
        let moved = w.transform_event(e, 1e-12).unwrap();
        assert!(moved.max_abs_diff(&e) <= 1e-15);
    }

    #[test]
    fn quarter_turn_about_z_sends_x_to_y() {
        let w = Rotor::rotation(UnitDirection::Z, PI / 2.0);
        let moved = w.transform_event(Event::new(0.0, 1.0, 0.0, 0.0), 1e-12).unwrap();
        assert!(moved.max_abs_diff(&Event::new(0.0, 0.0, 1.0, 0.0)) <= 1e-15);
    }

    #[test]
    fn boost_of_rest_event_matches_hand_expansion() {
        // w (@t) conj_c(conj_q(w)) = @ t cosh L - i t sinh L for n = x
        let rapidity = 0.8;
        let w = Rotor::boost(UnitDirection::X, rapidity);
        let moved = w.transform_event(Event::new(1.0, 0.0, 0.0, 0.0), 1e-12).unwrap();
        let expect = Event::new(rapidity.cosh(), -rapidity.sinh(), 0.0, 0.0);
        assert!(moved.max_abs_diff(&expect) <= 1e-15);
    }

    #[test]
    fn rapidities_add_along_a_common_axis() {
        let (l1, l2) = (0.4, -1.1);
        let composed = Rotor::compose(
            &Rotor::boost(UnitDirection::X, l2),
            &Rotor::boost(UnitDirection::X, l1),
        );
        let single = Rotor::boost(UnitDirection::X, l1 + l2);
        assert!(composed.as_cq().max_abs_diff(&single.as_cq()) <= 1e-12);
    }

    #[test]
    fn rotation_angles_add_about_a_common_axis() {
        let (t1, t2) = (0.9, 1.7);
        let composed = Rotor::compose(
            &Rotor::rotation(UnitDirection::Z, t2),
            &Rotor::rotation(UnitDirection::Z, t1),
        );
        let single = Rotor::rotation(UnitDirection::Z, t1 + t2);
        assert!(composed.as_cq().max_abs_diff(&single.as_cq()) <= 1e-12);
    }

    #[test]
    fn compose_with_identity_is_identity_on_rotors() {
        let w = Rotor::boost(UnitDirection::new(1.0, 1.0, 0.0).unwrap(), 0.3);
        assert_eq!(Rotor::compose(&w, &Rotor::IDENTITY).as_cq(), w.as_cq());
        assert_eq!(Rotor::compose(&Rotor::IDENTITY, &w).as_cq(), w.as_cq());
    }

    #[test]
    fn negated_rotor_acts_identically() {
        let w = Rotor::rotation(UnitDirection::new(0.0, 1.0, 1.0).unwrap(), 1.3);
        let q = embed(Event::new(0.5, -1.0, 2.0, 0.25));
        let a = w.apply_contravariant(&q);
        let b = (-w).apply_contravariant(&q);
        assert!(a.max_abs_diff(&b) <= 1e-15);
    }

    #[test]
    fn covariant_action_is_conjugate_of_contravariant() {
        let w = Rotor::compose(
            &Rotor::rotation(UnitDirection::Y, 0.7),
            &Rotor::boost(UnitDirection::Z, -0.6),
        );
        let q = embed(Event::new(1.0, 0.2, -0.4, 0.9));
        let via_contra = w.apply_contravariant(&q).conj_quaternion();
        let via_co = w.apply_covariant(&q.conj_quaternion());
        assert!(via_contra.max_abs_diff(&via_co) <= 1e-12);
    }

    #[test]
    fn identity_rotor_fixes_field_strengths() {
        let f = CqNumber::new([0.0, 0.0, 0.5, -1.0, 2.0, 0.25, 0.0, -0.75]);
        assert_eq!(Rotor::IDENTITY.apply_field_strength(&f), f);
    }

    #[test]
    fn to_matrix_of_identity_and_elementary_boost() {
        assert_eq!(Rotor::IDENTITY.to_matrix(), LorentzMatrix::IDENTITY);
        let rapidity = 1.2;
        let got = Rotor::boost(UnitDirection::X, rapidity).to_matrix();
        let expect = LorentzMatrix::boost(UnitDirection::X, rapidity);
        assert!(got.max_abs_diff(&expect) <= 1e-12);
        // standard entries
        assert!((got.0[0][0] - rapidity.cosh()).abs() <= 1e-12);
        assert!((got.0[0][1] + rapidity.sinh()).abs() <= 1e-12);
    }

    #[test]
    fn textbook_matrices_preserve_the_minkowski_form() {
        let n = UnitDirection::new(-1.0, 2.0, 2.0).unwrap();
        assert!(LorentzMatrix::rotation(n, 2.2).minkowski_defect() <= 1e-12);
        assert!(LorentzMatrix::boost(n, -1.4).minkowski_defect() <= 1e-12);
    }

    #[test]
    fn renormalized_restores_unit_norm() {
        let w = Rotor::boost(UnitDirection::X, 0.9);
        let drifted = Rotor {
            value: w.as_cq().scale(1.0 + 1e-4),
        };
        assert!(drifted.unit_defect() > 1e-5);
        let fixed = drifted.renormalized().unwrap();
        assert!(fixed.unit_defect() <= 1e-12);
    }

    #[test]
    fn from_cq_rejects_non_rotors() {
        let err = Rotor::from_cq(CqNumber::scalar(2.0), 1e-9).unwrap_err();
        assert!(matches!(err, Error::NotARotor { .. }));
        assert!(Rotor::from_cq(CqNumber::ONE, 1e-12).is_ok());
    }
}
