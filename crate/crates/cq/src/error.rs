use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A value expected to lie in the Minkowski subspace `M` (zero scalar and
    /// `@e_i` coefficients) has a stray coefficient. Usually signals a
    /// transformation or field bug upstream.
    #[error("value is not in the Minkowski subspace: max stray coefficient {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotInMinkowskiSubspace { defect: f64, tol: f64 },

    /// A CQ value expected to be a field strength (no `1` or `@` parts,
    /// i.e. F = -conj_q(F)) has scalar contamination.
    #[error("value is not a field strength: scalar part {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotFieldStrength { defect: f64, tol: f64 },

    /// Analytic differentiation was requested but the field does not carry
    /// analytic derivatives of the required order.
    #[error("analytic backend unavailable: field lacks {missing} derivatives")]
    BackendUnavailable { missing: &'static str },

    /// The two algebraically equal forms of the Lagrangian density disagree.
    #[error("Lagrangian forms disagree: |formA - formB| = {defect:.3e} exceeds tolerance {tol:.3e}")]
    FormMismatch { defect: f64, tol: f64 },

    /// A gauge-fixed operation was applied to a potential that violates the
    /// gauge condition.
    #[error("gauge condition violated: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    GaugeViolation { residual: f64, tol: f64 },

    /// A direction vector could not be normalized (zero or non-finite).
    #[error("cannot normalize direction ({0}, {1}, {2})")]
    InvalidDirection(f64, f64, f64),

    /// A CQ value supplied as a rotor does not satisfy w * conj_q(w) = 1.
    #[error("value is not a unit rotor: |w conj_q(w) - 1| = {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotARotor { defect: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
