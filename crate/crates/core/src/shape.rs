//! Shape triples and the braiding imposed at crossings.
//!
//! A shape is a triple (a, b, m) of nonzero complex numbers attached to a
//! diagram segment. The braiding B maps the two incoming shapes of a positive
//! crossing to the outgoing ones, B(χ₁, χ₂) = (χ₂′, χ₁′); its inverse governs
//! negative crossings. A shaping of a diagram is an assignment of shapes to
//! all segments satisfying these relations, with one meridian eigenvalue m
//! per link component.

use crate::cplx::{is_finite_nonzero, rel_dist, CPair};
use crate::diagram::{LinkDiagram, Sign};
use crate::report::ResidualReport;
use crate::{Error, Result, EPS_SING};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shape {
    pub a: Complex64,
    pub b: Complex64,
    pub m: Complex64,
}

impl Shape {
    pub fn new(a: Complex64, b: Complex64, m: Complex64) -> Result<Shape> {
        let shape = Shape { a, b, m };
        shape.validate()?;
        Ok(shape)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("a", self.a), ("b", self.b), ("m", self.m)] {
            if !is_finite_nonzero(v) {
                return Err(Error::SingularBraiding(format!(
                    "shape component {name} = {v} must be finite and nonzero"
                )));
            }
        }
        Ok(())
    }

    pub fn close_to(&self, other: &Shape) -> f64 {
        rel_dist(self.a, other.a)
            .max(rel_dist(self.b, other.b))
            .max(rel_dist(self.m, other.m))
    }
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            a: CPair,
            b: CPair,
            m: CPair,
        }
        Repr {
            a: self.a.into(),
            b: self.b.into(),
            m: self.m.into(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Shape, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            a: CPair,
            b: CPair,
            m: CPair,
        }
        let r = Repr::deserialize(d)?;
        Ok(Shape {
            a: r.a.into(),
            b: r.b.into(),
            m: r.m.into(),
        })
    }
}

/// The four shapes at a crossing together with its sign. χ₁, χ₂ are the
/// incoming shapes, χ₁′, χ₂′ the outgoing ones.
#[derive(Debug, Clone, Copy)]
pub struct CrossingShapes {
    pub chi1: Shape,
    pub chi2: Shape,
    pub chi1p: Shape,
    pub chi2p: Shape,
    pub sign: Sign,
}

impl CrossingShapes {
    /// Braid the incoming pair and record all four shapes.
    pub fn from_inputs(sign: Sign, chi1: Shape, chi2: Shape) -> Result<CrossingShapes> {
        let (chi2p, chi1p) = braid(sign, chi1, chi2)?;
        Ok(CrossingShapes {
            chi1,
            chi2,
            chi1p,
            chi2p,
            sign,
        })
    }

    /// Residual of the braiding relation on the stored outputs.
    pub fn braiding_residual(&self) -> f64 {
        match braid(self.sign, self.chi1, self.chi2) {
            Ok((chi2p, chi1p)) => self.chi2p.close_to(&chi2p).max(self.chi1p.close_to(&chi1p)),
            Err(_) => f64::INFINITY,
        }
    }
}

/// The braiding at a crossing of the given sign: returns (χ₂′, χ₁′).
///
/// Positive crossings use the defining transformation with
/// A = 1 − (m₁b₁/b₂)(1 − a₁/m₁)(1 − 1/m₂a₂); negative crossings use the
/// inverse map with Ã = 1 − (b₂/m₁b₁)(1 − m₁a₁)(1 − m₂/a₂). In both cases
/// m₁′ = m₁ and m₂′ = m₂ are copied, not recomputed.
pub fn braid(sign: Sign, chi1: Shape, chi2: Shape) -> Result<(Shape, Shape)> {
    chi1.validate()?;
    chi2.validate()?;
    let (a1, b1, m1) = (chi1.a, chi1.b, chi1.m);
    let (a2, b2, m2) = (chi2.a, chi2.b, chi2.m);
    let one = Complex64::new(1.0, 0.0);
    let (a1p, a2p, b1p, b2p) = match sign {
        Sign::Positive => {
            let factor = (m1 * b1 / b2) * (one - a1 / m1) * (one - one / (m2 * a2));
            let a_big = one - factor;
            guard(a_big, "A")?;
            let a1p = a1 / a_big;
            let a2p = a2 * a_big;
            let d1 = one - m2 * a2 * (one - b2 / (m1 * b1));
            guard(d1, "b1' denominator")?;
            let b1p = (m2 * b2 / m1) / d1;
            let b2p = b1 * (one - (m1 / a1) * (one - b2 / (m1 * b1)));
            (a1p, a2p, b1p, b2p)
        }
        Sign::Negative => {
            let factor = (b2 / (m1 * b1)) * (one - m1 * a1) * (one - m2 / a2);
            let a_big = one - factor;
            guard(a_big, "Ã")?;
            let a1p = a1 / a_big;
            let a2p = a2 * a_big;
            let b1p = (m2 * b2 / m1) * (one - (a2 / m2) * (one - m1 * b1 / b2));
            let d2 = one - (one / (m1 * a1)) * (one - m1 * b1 / b2);
            guard(d2, "b2' denominator")?;
            let b2p = b1 / d2;
            (a1p, a2p, b1p, b2p)
        }
    };
    let chi1p = Shape::new(a1p, b1p, m1)
        .map_err(|_| Error::SingularBraiding("output χ₁′ leaves (ℂ×)³".into()))?;
    let chi2p = Shape::new(a2p, b2p, m2)
        .map_err(|_| Error::SingularBraiding("output χ₂′ leaves (ℂ×)³".into()))?;
    Ok((chi2p, chi1p))
}

fn guard(v: Complex64, what: &str) -> Result<()> {
    if !v.is_finite() || v.norm() < EPS_SING {
        return Err(Error::SingularBraiding(format!(
            "{what} = {v} within {EPS_SING} of the singular locus"
        )));
    }
    Ok(())
}

/// Pinched / degenerate classification of a crossing satisfying the braiding.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CrossingFlags {
    pub pinched: bool,
    pub degenerate: bool,
}

/// Classify a crossing. A crossing is pinched when b₂ = m₁b₁ (equivalently
/// any of the other three pinch equations) and degenerate when a₁ = a₁′
/// (equivalently a₂ = a₂′). A degenerate crossing is necessarily pinched.
pub fn crossing_flags(cs: &CrossingShapes) -> Result<CrossingFlags> {
    crossing_flags_tol(cs, EPS_SING)
}

pub fn crossing_flags_tol(cs: &CrossingShapes, tol: f64) -> Result<CrossingFlags> {
    let (c1, c2, c1p, c2p) = (&cs.chi1, &cs.chi2, &cs.chi1p, &cs.chi2p);
    let pinch_eqs = [
        rel_dist(c2.b, c1.m * c1.b),
        rel_dist(c2.m * c2.b, c1.m * c1p.b),
        rel_dist(c2p.b, c1.b),
        rel_dist(c2.m * c2p.b, c1p.b),
    ];
    let pinched = consistent_flag(&pinch_eqs, tol).ok_or_else(|| {
        Error::InconsistentCrossing(format!(
            "pinch equations disagree (residuals {pinch_eqs:?}); \
             the shapes do not satisfy the braiding"
        ))
    })?;
    let deg_eqs = [rel_dist(c1.a, c1p.a), rel_dist(c2.a, c2p.a)];
    let degenerate = consistent_flag(&deg_eqs, tol).ok_or_else(|| {
        Error::InconsistentCrossing(format!(
            "degeneracy equations disagree (residuals {deg_eqs:?})"
        ))
    })?;
    if degenerate && !pinched {
        return Err(Error::InconsistentCrossing(
            "degenerate but not pinched; the shapes do not satisfy the braiding".into(),
        ));
    }
    Ok(CrossingFlags { pinched, degenerate })
}

/// Decide whether a family of equivalent equations holds. All residuals below
/// `tol` (or within the loose band √tol when any is below `tol`) means yes;
/// all at or above `tol` means no; a residual below `tol` next to one far
/// above it means the equivalence itself is broken.
fn consistent_flag(residuals: &[f64], tol: f64) -> Option<bool> {
    let lo = residuals.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = residuals.iter().cloned().fold(0.0, f64::max);
    if hi <= tol {
        Some(true)
    } else if lo >= tol {
        Some(false)
    } else if hi < tol.sqrt() {
        Some(true)
    } else {
        None
    }
}

/// A shaping: one shape per segment of a diagram.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Shaping {
    pub shapes: Vec<Shape>,
}

impl Shaping {
    pub fn new(shapes: Vec<Shape>) -> Shaping {
        Shaping { shapes }
    }

    pub fn shape(&self, segment: usize) -> &Shape {
        &self.shapes[segment]
    }

    /// Meridian eigenvalue of a component (the m of its first segment).
    pub fn component_m(&self, diagram: &LinkDiagram, component: usize) -> Complex64 {
        self.shapes[diagram.components[component][0]].m
    }

    /// The four shapes at a crossing in slot order.
    pub fn at_crossing(&self, diagram: &LinkDiagram, ci: usize) -> CrossingShapes {
        let c = &diagram.crossings[ci];
        CrossingShapes {
            chi1: self.shapes[c.in1],
            chi2: self.shapes[c.in2],
            chi1p: self.shapes[c.out1],
            chi2p: self.shapes[c.out2],
            sign: c.sign,
        }
    }
}

/// Check a shaping against the braiding at every crossing and the constancy
/// of m along every component.
pub fn verify_shaping(diagram: &LinkDiagram, shaping: &Shaping, tol: f64) -> ResidualReport {
    let mut report = ResidualReport::new(tol);
    if shaping.shapes.len() != diagram.n_segments {
        report.push(
            format!(
                "shaping size {} vs {} segments",
                shaping.shapes.len(),
                diagram.n_segments
            ),
            f64::INFINITY,
        );
        return report;
    }
    for (ci, _) in diagram.crossings.iter().enumerate() {
        let cs = shaping.at_crossing(diagram, ci);
        report.push(format!("crossing {ci} braiding"), cs.braiding_residual());
    }
    for (j, comp) in diagram.components.iter().enumerate() {
        let m0 = shaping.shapes[comp[0]].m;
        let res = comp
            .iter()
            .map(|&s| rel_dist(shaping.shapes[s].m, m0))
            .fold(0.0, f64::max);
        report.push(format!("component {j} m constancy"), res);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::cr;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn sh(a: f64, b: f64, m: f64) -> Shape {
        Shape::new(cr(a), cr(b), cr(m)).unwrap()
    }

    pub(crate) fn random_shape(rng: &mut impl Rng) -> Shape {
        let mut draw = |rng: &mut dyn rand::RngCore| {
            let r = (rng.gen_range(0.2f64.ln()..5.0f64.ln())).exp();
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(r, t)
        };
        Shape {
            a: draw(rng),
            b: draw(rng),
            m: draw(rng),
        }
    }

    /// Draw a pair on which both braidings stay comfortably away from the
    /// singular locus.
    pub(crate) fn generic_pair(rng: &mut impl Rng) -> (Shape, Shape) {
        loop {
            let c1 = random_shape(rng);
            let c2 = random_shape(rng);
            let fwd = braid(Sign::Positive, c1, c2);
            if let Ok((c2p, c1p)) = fwd {
                let back = braid(Sign::Negative, c1p.clone(), c2p.clone());
                let min_out = [c1p, c2p]
                    .iter()
                    .flat_map(|s| [s.a.norm(), s.b.norm()])
                    .fold(f64::INFINITY, f64::min);
                if back.is_ok() && min_out > 1e-3 && min_out < 1e3 {
                    return (c1, c2);
                }
            }
        }
    }

    #[test]
    fn braid_factor_identity_case() {
        // a₁ = m₁ kills the factor in A, so A = 1 and the a-values pass through.
        let chi1 = sh(3.0, 1.5, 3.0);
        let chi2 = sh(5.0, 2.0, 2.0);
        let (chi2p, chi1p) = braid(Sign::Positive, chi1, chi2).unwrap();
        assert!(rel_dist(chi1p.a, chi1.a) < 1e-14);
        assert!(rel_dist(chi2p.a, chi2.a) < 1e-14);
    }

    #[test]
    fn braid_worked_example() {
        // Direct substitution into the positive transformation.
        let chi1 = sh(2.0, 1.0, 3.0);
        let chi2 = sh(5.0, 2.0, 2.0);
        let (chi2p, chi1p) = braid(Sign::Positive, chi1, chi2).unwrap();
        assert!(rel_dist(chi2p.a, cr(11.0 / 4.0)) < 1e-14);
        assert!(rel_dist(chi2p.b, cr(0.5)) < 1e-14);
        assert!(rel_dist(chi2p.m, cr(2.0)) < 1e-14);
        assert!(rel_dist(chi1p.a, cr(40.0 / 11.0)) < 1e-14);
        assert!(rel_dist(chi1p.b, cr(-4.0 / 7.0)) < 1e-14);
        assert!(rel_dist(chi1p.m, cr(3.0)) < 1e-14);
    }

    #[test]
    fn braid_inverse_roundtrip() {
        let chi1 = sh(2.0, 1.0, 3.0);
        let chi2 = sh(5.0, 2.0, 2.0);
        let (chi2p, chi1p) = braid(Sign::Positive, chi1, chi2).unwrap();
        let (back2, back1) = braid(Sign::Negative, chi1p, chi2p).unwrap();
        assert!(back1.close_to(&chi1) < 1e-10);
        assert!(back2.close_to(&chi2) < 1e-10);
    }

    #[test]
    fn m_copied_exactly() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (c1, c2) = generic_pair(&mut rng);
            let (c2p, c1p) = braid(Sign::Positive, c1, c2).unwrap();
            assert_eq!(c1p.m, c1.m);
            assert_eq!(c2p.m, c2.m);
        }
    }

    #[test]
    fn a_product_conserved() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let (c1, c2) = generic_pair(&mut rng);
            let (c2p, c1p) = braid(Sign::Positive, c1, c2).unwrap();
            assert!(rel_dist(c1.a * c2.a, c1p.a * c2p.a) < 1e-12);
        }
    }

    #[test]
    fn yang_baxter_on_triples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let b = |x: Shape, y: Shape| braid(Sign::Positive, x, y);
        let mut done = 0;
        while done < 100 {
            let (x, y) = generic_pair(&mut rng);
            let (z, _) = generic_pair(&mut rng);
            let lhs = (|| -> Result<(Shape, Shape, Shape)> {
                // (B×id)(id×B)(B×id)
                let (y1, x1) = b(x, y)?;
                let (z1, x2) = b(x1, z)?;
                let (z2, y2) = b(y1, z1)?;
                Ok((z2, y2, x2))
            })();
            let rhs = (|| -> Result<(Shape, Shape, Shape)> {
                // (id×B)(B×id)(id×B)
                let (z1, y1) = b(y, z)?;
                let (z2, x1) = b(x, z1)?;
                let (y2, x2) = b(x1, y1)?;
                Ok((z2, y2, x2))
            })();
            if let (Ok(l), Ok(r)) = (lhs, rhs) {
                assert!(l.0.close_to(&r.0) < 1e-9, "{:?} vs {:?}", l.0, r.0);
                assert!(l.1.close_to(&r.1) < 1e-9);
                assert!(l.2.close_to(&r.2) < 1e-9);
                done += 1;
            }
        }
    }

    #[test]
    fn flags_degenerate_when_a_passes_through() {
        let chi1 = sh(3.0, 1.5, 3.0); // a₁ = m₁ forces A = 1
        let chi2 = sh(5.0, 2.0, 2.0);
        let cs = CrossingShapes::from_inputs(Sign::Positive, chi1, chi2).unwrap();
        let flags = crossing_flags(&cs).unwrap();
        assert!(flags.degenerate);
        assert!(flags.pinched);
    }

    #[test]
    fn flags_generic_crossing_unpinched() {
        let cs = CrossingShapes::from_inputs(Sign::Positive, sh(2.0, 1.0, 3.0), sh(5.0, 2.0, 2.0))
            .unwrap();
        let flags = crossing_flags(&cs).unwrap();
        assert!(!flags.pinched);
        assert!(!flags.degenerate);
    }

    #[test]
    fn pinched_but_nondegenerate() {
        // b₂ = m₁ b₁ with a₁ ≠ m₁: pinched while the a-values still move.
        let chi1 = sh(2.0, 1.0, 3.0);
        let chi2 = sh(5.0, 3.0, 2.0); // b₂ = 3 = m₁ b₁
        let cs = CrossingShapes::from_inputs(Sign::Positive, chi1, chi2).unwrap();
        let flags = crossing_flags(&cs).unwrap();
        assert!(flags.pinched);
        assert!(!flags.degenerate);
    }

    #[test]
    fn singular_braiding_rejected() {
        // Choose inputs with A = 0: need (m₁b₁/b₂)(1−a₁/m₁)(1−1/m₂a₂) = 1.
        // With m₁=2, b₁=1, a₁=1, m₂=1, a₂=1/2 the third factor is -1 and the
        // second is 1/2, so b₂ = -1 makes the product 1.
        let chi1 = sh(1.0, 1.0, 2.0);
        let chi2 = sh(0.5, -1.0, 1.0);
        assert!(matches!(
            braid(Sign::Positive, chi1, chi2),
            Err(Error::SingularBraiding(_))
        ));
    }

    #[test]
    fn verify_shaping_flags_random_shapes() {
        let d = LinkDiagram::trefoil();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let shaping = Shaping::new((0..6).map(|_| random_shape(&mut rng)).collect());
        let report = verify_shaping(&d, &shaping, 1e-10);
        assert!(!report.pass);
        assert!(report.max_residual > 1e-3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn inverse_composes_to_identity(seed in 0u64..1u64 << 48) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let (c1, c2) = generic_pair(&mut rng);
            let (c2p, c1p) = braid(Sign::Positive, c1, c2).unwrap();
            let (back2, back1) = braid(Sign::Negative, c1p, c2p).unwrap();
            prop_assert!(back1.close_to(&c1) < 1e-10);
            prop_assert!(back2.close_to(&c2) < 1e-10);
            // And the other composition order.
            let (d2, d1) = braid(Sign::Negative, c1, c2).unwrap();
            let (fwd2, fwd1) = braid(Sign::Positive, d1, d2).unwrap();
            prop_assert!(fwd1.close_to(&c1) < 1e-10);
            prop_assert!(fwd2.close_to(&c2) < 1e-10);
        }
    }
}
