//! The complex-quaternion algebra C⊗H.
//!
//! A CQ number has eight real coefficients over the fixed ordered basis
//!
//! ```text
//! [1, @, i, j, k, @i, @j, @k]
//! ```
//!
//! with `@^2 = -1`, `i^2 = j^2 = k^2 = -1`, `ij = -ji = k` (cyclically), and
//! `@` commuting with `i`, `j`, `k`. The basis ordering is part of the
//! serialized format: the JSON form of a CQ number is an array of the eight
//! coefficients in exactly this order.
//!
//! Multiplication is table-driven: [`StructureConstants`] holds the signed
//! product of every basis pair and is the single source of truth for
//! [`CqNumber::mul`]. The table is built from the generator relations, and the
//! test suite checks it entry by entry against an independently hand-entered
//! copy.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Default absolute comparison tolerance for unit-scale coefficients.
///
/// Leaves double-precision headroom for products of up to ~10 factors.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Names of the eight basis elements, in coefficient order.
pub const BASIS_LABELS: [&str; 8] = ["1", "@", "i", "j", "k", "@i", "@j", "@k"];

/// Number with eight real coefficients over the basis `[1, @, i, j, k, @i, @j, @k]`.
///
/// Immutable value type; all operations are pure functions and safe to share
/// across threads.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CqNumber {
    coeffs: [f64; 8],
}

/// Index of each basis element within the coefficient array.
pub mod basis {
    pub const ONE: usize = 0;
    pub const A: usize = 1;
    pub const I: usize = 2;
    pub const J: usize = 3;
    pub const K: usize = 4;
    pub const AI: usize = 5;
    pub const AJ: usize = 6;
    pub const AK: usize = 7;
}

impl CqNumber {
    pub const ZERO: CqNumber = CqNumber::unit_scaled(basis::ONE, 0.0);
    /// The real unit 1.
    pub const ONE: CqNumber = CqNumber::unit_scaled(basis::ONE, 1.0);
    /// The complex unit `@`.
    pub const A: CqNumber = CqNumber::unit_scaled(basis::A, 1.0);
    /// The quaternion unit `i`.
    pub const I: CqNumber = CqNumber::unit_scaled(basis::I, 1.0);
    /// The quaternion unit `j`.
    pub const J: CqNumber = CqNumber::unit_scaled(basis::J, 1.0);
    /// The quaternion unit `k`.
    pub const K: CqNumber = CqNumber::unit_scaled(basis::K, 1.0);

    const fn unit_scaled(index: usize, value: f64) -> CqNumber {
        let mut coeffs = [0.0; 8];
        coeffs[index] = value;
        CqNumber { coeffs }
    }

    /// Builds a CQ number from its eight coefficients in basis order.
    pub const fn new(coeffs: [f64; 8]) -> Self {
        CqNumber { coeffs }
    }

    /// The basis element with the given index (0..8).
    pub fn basis_element(index: usize) -> Self {
        assert!(index < 8, "basis index out of range: {index}");
        CqNumber::unit_scaled(index, 1.0)
    }

    /// A real scalar `s` as a CQ number.
    pub fn scalar(s: f64) -> Self {
        CqNumber::unit_scaled(basis::ONE, s)
    }

    /// Coefficients in basis order `[1, @, i, j, k, @i, @j, @k]`.
    pub fn coefficients(&self) -> [f64; 8] {
        self.coeffs
    }

    /// Coefficient of basis element `index`.
    pub fn coeff(&self, index: usize) -> f64 {
        self.coeffs[index]
    }

    /// True when every coefficient is finite.
    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// Componentwise scaling by a real factor.
    pub fn scale(&self, factor: f64) -> Self {
        let mut coeffs = self.coeffs;
        for c in &mut coeffs {
            *c *= factor;
        }
        CqNumber { coeffs }
    }

    /// The complex conjugation `*`: sends `@ -> -@` and leaves `i, j, k`
    /// unchanged. Negates the `@, @i, @j, @k` coefficients. Involution and
    /// a homomorphism: `(ab)* = a* b*`.
    pub fn conj_complex(&self) -> Self {
        let c = self.coeffs;
        CqNumber::new([c[0], -c[1], c[2], c[3], c[4], -c[5], -c[6], -c[7]])
    }

    /// The quaternionic conjugation (overbar): sends `i, j, k -> -i, -j, -k`
    /// and leaves `@` unchanged. Negates the `i, j, k, @i, @j, @k`
    /// coefficients. Involution and an antihomomorphism: `conj_q(ab) =
    /// conj_q(b) conj_q(a)`.
    pub fn conj_quaternion(&self) -> Self {
        let c = self.coeffs;
        CqNumber::new([c[0], c[1], -c[2], -c[3], -c[4], -c[5], -c[6], -c[7]])
    }

    /// Largest absolute coefficient (sup norm over the basis).
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Sup-norm distance to another CQ number.
    pub fn max_abs_diff(&self, other: &CqNumber) -> f64 {
        (*self - *other).max_abs()
    }

    /// True iff the value lies in the Minkowski subspace `M` up to `tol`:
    /// the `1, @i, @j, @k` coefficients are all within `tol` of zero.
    ///
    /// Equivalently, `a* = -conj_q(a)` up to `2 tol` in every coefficient.
    pub fn is_minkowski(&self, tol: f64) -> bool {
        debug_assert!(tol >= 0.0);
        self.minkowski_defect() <= tol
    }

    /// Largest stray coefficient outside the Minkowski subspace.
    pub fn minkowski_defect(&self) -> f64 {
        let c = self.coeffs;
        c[basis::ONE]
            .abs()
            .max(c[basis::AI].abs())
            .max(c[basis::AJ].abs())
            .max(c[basis::AK].abs())
    }

    /// Table-driven bilinear product through the standard structure constants.
    pub fn mul(&self, other: &CqNumber) -> CqNumber {
        StructureConstants::standard().mul_cq(self, other)
    }
}

impl Default for CqNumber {
    fn default() -> Self {
        CqNumber::ZERO
    }
}

impl Add for CqNumber {
    type Output = CqNumber;
    fn add(self, rhs: CqNumber) -> CqNumber {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c += r;
        }
        CqNumber { coeffs }
    }
}

impl Sub for CqNumber {
    type Output = CqNumber;
    fn sub(self, rhs: CqNumber) -> CqNumber {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c -= r;
        }
        CqNumber { coeffs }
    }
}

impl Neg for CqNumber {
    type Output = CqNumber;
    fn neg(self) -> CqNumber {
        self.scale(-1.0)
    }
}

impl Mul for CqNumber {
    type Output = CqNumber;
    fn mul(self, rhs: CqNumber) -> CqNumber {
        CqNumber::mul(&self, &rhs)
    }
}

impl Mul<f64> for CqNumber {
    type Output = CqNumber;
    fn mul(self, rhs: f64) -> CqNumber {
        self.scale(rhs)
    }
}

impl Mul<CqNumber> for f64 {
    type Output = CqNumber;
    fn mul(self, rhs: CqNumber) -> CqNumber {
        rhs.scale(self)
    }
}

impl fmt::Display for CqNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c < 0.0 { "-" } else { "+" })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if idx == basis::ONE {
                write!(f, "{mag}")?;
            } else if mag == 1.0 {
                write!(f, "{}", BASIS_LABELS[idx])?;
            } else {
                write!(f, "{mag}{}", BASIS_LABELS[idx])?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Signed product of two basis elements: `sign * basis[index]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: usize,
}

/// The 8x8 table of signed basis products defining multiplication in C⊗H.
///
/// Built once from the generator relations (`@^2 = -1`, the quaternion table,
/// and `[@, i] = [@, j] = [@, k] = 0`); every product of general CQ numbers
/// expands bilinearly through it. Row is the left factor, column the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    entries: [[BasisProduct; 8]; 8],
}

/// Quaternion part of basis element `idx` (0 = 1, 1 = i, 2 = j, 3 = k).
const fn quat_part(idx: usize) -> usize {
    match idx {
        0 | 1 => 0,
        2 | 5 => 1,
        3 | 6 => 2,
        4 | 7 => 3,
        _ => unreachable!(),
    }
}

/// Power of `@` carried by basis element `idx`.
const fn complex_part(idx: usize) -> usize {
    match idx {
        0 | 2 | 3 | 4 => 0,
        1 | 5 | 6 | 7 => 1,
        _ => unreachable!(),
    }
}

const fn basis_index(a_power: usize, quat: usize) -> usize {
    match (a_power, quat) {
        (0, 0) => 0,
        (1, 0) => 1,
        (0, 1) => 2,
        (0, 2) => 3,
        (0, 3) => 4,
        (1, 1) => 5,
        (1, 2) => 6,
        (1, 3) => 7,
        _ => unreachable!(),
    }
}

/// Product of pure quaternion units (0 = 1, 1 = i, 2 = j, 3 = k):
/// `i^2 = j^2 = k^2 = -1`, `ij = -ji = k`, `jk = -kj = i`, `ki = -ik = j`.
const fn quat_product(a: usize, b: usize) -> (i8, usize) {
    match (a, b) {
        (0, b) => (1, b),
        (a, 0) => (1, a),
        (1, 1) | (2, 2) | (3, 3) => (-1, 0),
        (1, 2) => (1, 3),
        (2, 1) => (-1, 3),
        (2, 3) => (1, 1),
        (3, 2) => (-1, 1),
        (3, 1) => (1, 2),
        (1, 3) => (-1, 2),
        _ => unreachable!(),
    }
}

const fn build_table() -> [[BasisProduct; 8]; 8] {
    let mut entries = [[BasisProduct { sign: 1, index: 0 }; 8]; 8];
    let mut row = 0;
    while row < 8 {
        let mut col = 0;
        while col < 8 {
            let (qs, qi) = quat_product(quat_part(row), quat_part(col));
            // @ commutes with i, j, k, so the complex powers just add;
            // @^2 contributes the extra -1.
            let a_sum = complex_part(row) + complex_part(col);
            let sign = if a_sum == 2 { -qs } else { qs };
            entries[row][col] = BasisProduct {
                sign,
                index: basis_index(a_sum % 2, qi),
            };
            col += 1;
        }
        row += 1;
    }
    entries
}

static STANDARD_TABLE: StructureConstants = StructureConstants {
    entries: build_table(),
};

impl StructureConstants {
    /// The table derived from the generator relations.
    pub fn standard() -> &'static StructureConstants {
        &STANDARD_TABLE
    }

    /// Builds a table from explicit entries. Intended for fault-injection
    /// checks; the entries are taken as given.
    pub fn from_entries(entries: [[BasisProduct; 8]; 8]) -> Self {
        StructureConstants { entries }
    }

    /// Signed product of basis elements `row * col`.
    pub fn entry(&self, row: usize, col: usize) -> BasisProduct {
        self.entries[row][col]
    }

    /// Copy of the full table.
    pub fn entries(&self) -> [[BasisProduct; 8]; 8] {
        self.entries
    }

    /// Bilinear product of two CQ numbers through this table.
    pub fn mul_cq(&self, a: &CqNumber, b: &CqNumber) -> CqNumber {
        let mut out = [0.0; 8];
        for (row, &ca) in a.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (col, &cb) in b.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                let BasisProduct { sign, index } = self.entries[row][col];
                out[index] += f64::from(sign) * ca * cb;
            }
        }
        CqNumber::new(out)
    }
}
