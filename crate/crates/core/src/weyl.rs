//! Central characters of the quantum Weyl algebra and their braiding.
//!
//! At a 2N-th root of unity the center of the extended Weyl algebra is
//! generated by x^N, y^N, z^N, and a central character is determined by its
//! values on those generators. Conjugation by the R-matrix acts on the center
//! by explicit rational formulas, and the induced map on pairs of characters
//! reproduces the shape braiding. The module is an independent derivation of
//! the braiding, used as an oracle against [`crate::shape::braid`].

use crate::cplx::rel_dist;
use crate::diagram::Sign;
use crate::holonomy::Mat2C;
use crate::shape::Shape;
use crate::{Error, Result, EPS_SING};
use num_complex::Complex64;

/// A central character, recorded by its values on x^N, y^N, z^N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentralCharacter {
    pub x_n: Complex64,
    pub y_n: Complex64,
    pub z_n: Complex64,
}

impl CentralCharacter {
    pub fn from_shape(chi: &Shape) -> CentralCharacter {
        CentralCharacter {
            x_n: chi.a,
            y_n: chi.b,
            z_n: chi.m,
        }
    }

    pub fn to_shape(&self) -> Result<Shape> {
        Shape::new(self.x_n, self.y_n, self.z_n)
    }
}

/// Braid a pair of central characters through a crossing of the given sign,
/// returning (χ₂′, χ₁′).
///
/// A positive crossing evaluates the pair against the inverse R-action on
/// the center; a negative crossing evaluates the forward action on the
/// swapped pair. Both paths avoid the shape-braiding formulas entirely.
pub fn weyl_center_braid(
    sign: Sign,
    chi1: CentralCharacter,
    chi2: CentralCharacter,
) -> Result<(CentralCharacter, CentralCharacter)> {
    match sign {
        Sign::Positive => {
            let (c1p, c2p) = inverse_r_action(chi1, chi2)?;
            Ok((c2p, c1p))
        }
        Sign::Negative => {
            // B⁻¹(χ₁, χ₂) = (χ₂′, χ₁′) holds exactly when the forward action
            // applied to the pair (χ₂, χ₁) produces (χ₂′ ⊗ χ₁′).
            let (c2p, c1p) = forward_r_action(chi2, chi1)?;
            Ok((c2p, c1p))
        }
    }
}

/// Evaluate (χ₁ ⊗ χ₂) ∘ (R-action)⁻¹ on the central generators of each
/// tensor factor. Returns (χ₁′, χ₂′) in tensor-slot order.
fn inverse_r_action(
    chi1: CentralCharacter,
    chi2: CentralCharacter,
) -> Result<(CentralCharacter, CentralCharacter)> {
    let one = Complex64::new(1.0, 0.0);
    let (a1, b1, m1) = (chi1.x_n, chi1.y_n, chi1.z_n);
    let (a2, b2, m2) = (chi2.x_n, chi2.y_n, chi2.z_n);
    // G̃ = 1 + x₂⁻ᴺ (y₁ᴺ/y₂ᴺ)(x₁ᴺ − z₁ᴺ)(x₂ᴺ − z₂⁻ᴺ)
    let g_tilde = one + (b1 / b2) * (a1 - m1) * (a2 - one / m2) / a2;
    guard(g_tilde, "G̃")?;
    // x₁ᴺ ↦ x₁ᴺ G̃⁻¹,  x₂ᴺ ↦ x₂ᴺ G̃
    let a1p = a1 / g_tilde;
    let a2p = a2 * g_tilde;
    // y₁⁻ᴺ ↦ (z₁ᴺ/z₂ᴺ) y₂⁻ᴺ + (y₁⁻ᴺ − z₁ᴺ y₂⁻ᴺ) x₂ᴺ
    let inv_b1p = (m1 / m2) / b2 + (one / b1 - m1 / b2) * a2;
    guard(inv_b1p, "χ₁′(y⁻ᴺ)")?;
    let b1p = one / inv_b1p;
    // y₂ᴺ ↦ y₁ᴺ + (y₂ᴺ − z₁ᴺ y₁ᴺ) x₁⁻ᴺ
    let b2p = b1 + (b2 - m1 * b1) / a1;
    guard(b2p, "χ₂′(yᴺ)")?;
    Ok((
        CentralCharacter { x_n: a1p, y_n: b1p, z_n: m1 },
        CentralCharacter { x_n: a2p, y_n: b2p, z_n: m2 },
    ))
}

/// Evaluate (χ₁ ⊗ χ₂) ∘ (R-action) on the central generators.
fn forward_r_action(
    chi1: CentralCharacter,
    chi2: CentralCharacter,
) -> Result<(CentralCharacter, CentralCharacter)> {
    let one = Complex64::new(1.0, 0.0);
    let (a1, b1, m1) = (chi1.x_n, chi1.y_n, chi1.z_n);
    let (a2, b2, m2) = (chi2.x_n, chi2.y_n, chi2.z_n);
    // G = 1 + x₁⁻ᴺ (y₁ᴺ/y₂ᴺ)(x₁ᴺ − z₁ᴺ)(x₂ᴺ − z₂⁻ᴺ)
    let g = one + (b1 / b2) * (a1 - m1) * (a2 - one / m2) / a1;
    guard(g, "G")?;
    // x₁ᴺ ↦ x₁ᴺ G,  x₂ᴺ ↦ x₂ᴺ G⁻¹
    let a1p = a1 * g;
    let a2p = a2 / g;
    // y₁⁻ᴺ ↦ y₂⁻ᴺ + (y₁⁻ᴺ − y₂⁻ᴺ z₂⁻ᴺ) x₂⁻ᴺ
    let inv_b1p = one / b2 + (one / b1 - one / (b2 * m2)) / a2;
    guard(inv_b1p, "χ₁′(y⁻ᴺ)")?;
    let b1p = one / inv_b1p;
    // y₂ᴺ ↦ (z₁ᴺ/z₂ᴺ) y₁ᴺ + (y₂ᴺ − y₁ᴺ/z₂ᴺ) x₁ᴺ
    let b2p = (m1 / m2) * b1 + (b2 - b1 / m2) * a1;
    guard(b2p, "χ₂′(yᴺ)")?;
    Ok((
        CentralCharacter { x_n: a1p, y_n: b1p, z_n: m1 },
        CentralCharacter { x_n: a2p, y_n: b2p, z_n: m2 },
    ))
}

fn guard(v: Complex64, what: &str) -> Result<()> {
    if !v.is_finite() || v.norm() < EPS_SING {
        return Err(Error::SingularBraiding(format!(
            "central factor {what} = {v} within {EPS_SING} of the singular locus"
        )));
    }
    Ok(())
}

/// The pair of matrices a central character maps to: the values of the
/// character on (K^N, K^N F^N, E^N) arranged as the lower/upper triangular
/// holonomy pair of the corresponding shape.
pub fn phi_character(chi: &CentralCharacter) -> (Mat2C, Mat2C) {
    let one = Complex64::new(1.0, 0.0);
    let (a, b, m) = (chi.x_n, chi.y_n, chi.z_n);
    // χ(K^N) = a, χ(E^N) = b(a − m), χ(K^N F^N) = a · b⁻¹(1 − 1/(m a)) = (a − 1/m)/b.
    let e_n = b * (a - m);
    let kf_n = (a - one / m) / b;
    (
        Mat2C::new(a, Complex64::new(0.0, 0.0), kf_n, one),
        Mat2C::new(one, e_n, Complex64::new(0.0, 0.0), a),
    )
}

/// Largest relative deviation between the two matrix pairs of a character and
/// the holonomy matrices of the associated shape.
pub fn phi_matches_shape(chi: &CentralCharacter) -> f64 {
    let shape = Shape {
        a: chi.x_n,
        b: chi.y_n,
        m: chi.z_n,
    };
    let (gp, gm) = phi_character(chi);
    let (xp, xm) = crate::holonomy::shape_matrices(&shape);
    gp.close_to(&xp).max(gm.close_to(&xm))
}

/// Relative deviation between the central-character braiding and the shape
/// braiding on the same inputs.
pub fn braiding_deviation(sign: Sign, chi1: &Shape, chi2: &Shape) -> Result<f64> {
    let (s2p, s1p) = crate::shape::braid(sign, *chi1, *chi2)?;
    let (w2p, w1p) = weyl_center_braid(
        sign,
        CentralCharacter::from_shape(chi1),
        CentralCharacter::from_shape(chi2),
    )?;
    let d = rel_dist(w1p.x_n, s1p.a)
        .max(rel_dist(w1p.y_n, s1p.b))
        .max(rel_dist(w1p.z_n, s1p.m))
        .max(rel_dist(w2p.x_n, s2p.a))
        .max(rel_dist(w2p.y_n, s2p.b))
        .max(rel_dist(w2p.z_n, s2p.m));
    Ok(d)
}
