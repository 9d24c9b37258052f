//! Exact 2x2 complex matrix algebra for transfer matrices and walk coins.
//!
//! Two refined matrix sets appear throughout the crate:
//!
//! * [`TransferMatrix`]: determinant-one matrices with conjugate-symmetric
//!   entries, `[[p, conj(q)], [q, conj(p)]]` with `|p|^2 - |q|^2 = 1`. They
//!   change bases between solution pairs of the stationary Schrödinger
//!   equation.
//! * [`UnitaryCoin`]: unitary matrices with equal nonzero diagonal entries,
//!   `[[a, b], [c, a]]`. They act as local scattering matrices and as the
//!   coins of the quantum walk.
//!
//! The bijection [`m_map`] sends one set onto the other and induces the
//! group operation [`star`] on coins, under which a chain of scatterers
//! composes into a single scattering matrix.

use num_complex::Complex64;

use crate::{Error, Result, TOL_ALG};

/// Plain 2x2 complex matrix. Base type for the two refined sets; carries no
/// invariants beyond finiteness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2C {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
}

impl Mat2C {
    pub fn new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        Self::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        )
    }

    pub fn mul(&self, rhs: &Mat2C) -> Mat2C {
        Mat2C::new(
            self.m11 * rhs.m11 + self.m12 * rhs.m21,
            self.m11 * rhs.m12 + self.m12 * rhs.m22,
            self.m21 * rhs.m11 + self.m22 * rhs.m21,
            self.m21 * rhs.m12 + self.m22 * rhs.m22,
        )
    }

    pub fn det(&self) -> Complex64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2C {
        Mat2C::new(
            self.m11.conj(),
            self.m21.conj(),
            self.m12.conj(),
            self.m22.conj(),
        )
    }

    /// Largest entry modulus of `self - rhs`.
    pub fn max_diff(&self, rhs: &Mat2C) -> f64 {
        let d = [
            self.m11 - rhs.m11,
            self.m12 - rhs.m12,
            self.m21 - rhs.m21,
            self.m22 - rhs.m22,
        ];
        d.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Residual of the unitarity relation `M M* = I`.
    pub fn unitarity_residual(&self) -> f64 {
        self.mul(&self.adjoint()).max_diff(&Mat2C::identity())
    }

    pub fn is_finite(&self) -> bool {
        [self.m11, self.m12, self.m21, self.m22]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Element of the transfer-matrix group: `[[p, conj(q)], [q, conj(p)]]`
/// with `|p|^2 - |q|^2 = 1`. Construction is validated; the stored form is
/// exactly conjugate-symmetric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    p: Complex64,
    q: Complex64,
}

impl TransferMatrix {
    /// Checked conversion from a raw matrix, with tolerance `tol` for the
    /// conjugate-symmetry and determinant checks.
    pub fn from_mat_with_tol(m: &Mat2C, tol: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::InvalidTransfer("non-finite entries".into()));
        }
        let sym = (m.m22 - m.m11.conj()).norm().max((m.m12 - m.m21.conj()).norm());
        if sym > tol {
            return Err(Error::InvalidTransfer(format!(
                "conjugate-symmetry residual {sym:.3e} exceeds {tol:.1e}"
            )));
        }
        let det_res = (m.det() - Complex64::new(1.0, 0.0)).norm();
        if det_res > tol {
            return Err(Error::InvalidTransfer(format!(
                "determinant residual {det_res:.3e} exceeds {tol:.1e}"
            )));
        }
        Ok(Self { p: m.m11, q: m.m21 })
    }

    /// Checked conversion with the default tolerance.
    pub fn from_mat(m: &Mat2C) -> Result<Self> {
        Self::from_mat_with_tol(m, TOL_ALG)
    }

    /// Builds the matrix directly from its two defining entries. The
    /// conjugate-symmetric form is exact by construction; the determinant
    /// condition is still checked.
    pub fn from_pq(p: Complex64, q: Complex64) -> Result<Self> {
        let det = p.norm_sqr() - q.norm_sqr();
        if !det.is_finite() || (det - 1.0).abs() > TOL_ALG * (1.0 + p.norm_sqr()) {
            return Err(Error::InvalidTransfer(format!(
                "|p|^2 - |q|^2 = {det:.12} is not 1"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn identity() -> Self {
        Self {
            p: Complex64::new(1.0, 0.0),
            q: Complex64::new(0.0, 0.0),
        }
    }

    pub fn p(&self) -> Complex64 {
        self.p
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    pub fn matrix(&self) -> Mat2C {
        Mat2C::new(self.p, self.q.conj(), self.q, self.p.conj())
    }

    /// Group product. The conjugate-symmetric form of the product is exact;
    /// the determinant inherits the factors' accuracy.
    pub fn mul(&self, rhs: &TransferMatrix) -> TransferMatrix {
        TransferMatrix {
            p: self.p * rhs.p + self.q.conj() * rhs.q,
            q: self.q * rhs.p + self.p.conj() * rhs.q,
        }
    }

    pub fn det_residual(&self) -> f64 {
        (self.p.norm_sqr() - self.q.norm_sqr() - 1.0).abs()
    }
}

/// Element of the coin group: unitary with equal nonzero diagonal entries,
/// `[[a, b], [c, a]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitaryCoin {
    a: Complex64,
    b: Complex64,
    c: Complex64,
}

impl UnitaryCoin {
    /// Checked conversion from a raw matrix with tolerance `tol`.
    pub fn from_mat_with_tol(m: &Mat2C, tol: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::InvalidCoin("non-finite entries".into()));
        }
        let diag = (m.m11 - m.m22).norm();
        if diag > tol {
            return Err(Error::InvalidCoin(format!(
                "diagonal entries differ by {diag:.3e}"
            )));
        }
        if m.m11.norm() <= tol {
            return Err(Error::DegenerateCoin);
        }
        let uni = m.unitarity_residual();
        if uni > tol {
            return Err(Error::InvalidCoin(format!(
                "unitarity residual {uni:.3e} exceeds {tol:.1e}"
            )));
        }
        Ok(Self {
            a: m.m11,
            b: m.m12,
            c: m.m21,
        })
    }

    /// Checked conversion with the default tolerance.
    pub fn from_mat(m: &Mat2C) -> Result<Self> {
        Self::from_mat_with_tol(m, TOL_ALG)
    }

    pub fn identity() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
        }
    }

    /// The Hadamard-type coin `(1/sqrt 2) [[1, 1], [-1, 1]]`.
    pub fn hadamard() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            a: Complex64::new(s, 0.0),
            b: Complex64::new(s, 0.0),
            c: Complex64::new(-s, 0.0),
        }
    }

    /// (1,1) and (2,2) entry.
    pub fn a(&self) -> Complex64 {
        self.a
    }

    /// (1,2) entry.
    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// (2,1) entry.
    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn matrix(&self) -> Mat2C {
        Mat2C::new(self.a, self.b, self.c, self.a)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        (self.a - Complex64::new(1.0, 0.0)).norm() <= tol
            && self.b.norm() <= tol
            && self.c.norm() <= tol
    }
}

/// Maps a transfer matrix to its coin: `T = [[p, conj(q)], [q, conj(p)]]`
/// goes to `(1/conj(p)) [[1, conj(q)], [-q, 1]]`.
///
/// Total on the validated input type: `|p|^2 = 1 + |q|^2 >= 1`, so the
/// diagonal entry never vanishes. The image has its equal-diagonal form
/// exact by construction.
pub fn m_map(t: &TransferMatrix) -> UnitaryCoin {
    let inv_pbar = Complex64::new(1.0, 0.0) / t.p.conj();
    UnitaryCoin {
        a: inv_pbar,
        b: inv_pbar * t.q.conj(),
        c: -inv_pbar * t.q,
    }
}

/// Inverse of [`m_map`]: `[[a, b], [c, a]]` goes to
/// `[[conj(a)^-1, a^-1 b], [conj(a)^-1 conj(b), a^-1]]`.
pub fn m_inverse(s: &UnitaryCoin) -> TransferMatrix {
    let p = Complex64::new(1.0, 0.0) / s.a.conj();
    let q = s.b.conj() / s.a.conj();
    TransferMatrix { p, q }
}

/// Induced group operation on coins:
/// `S1 * S2 = m_map(m_inverse(S1) . m_inverse(S2))`.
///
/// Implemented literally through the transfer-matrix product rather than a
/// simplified closed form, so a fast path can later be validated against it.
pub fn star(s1: &UnitaryCoin, s2: &UnitaryCoin) -> UnitaryCoin {
    m_map(&m_inverse(s1).mul(&m_inverse(s2)))
}

/// Left fold of [`star`] over an ordered coin list. Equals the image under
/// [`m_map`] of the ordered product of the preimages.
pub fn star_fold(coins: &[UnitaryCoin]) -> Result<UnitaryCoin> {
    let (first, rest) = coins.split_first().ok_or(Error::EmptySequence)?;
    let mut t = m_inverse(first);
    for coin in rest {
        t = t.mul(&m_inverse(coin));
    }
    Ok(m_map(&t))
}
