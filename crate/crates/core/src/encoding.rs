//! Maps between real feature vectors, Bloch vectors and density operators.
//!
//! A feature vector with `m` coordinates is lifted onto the unit sphere
//! `S^m` by the inverse stereographic projection; the resulting Pauli
//! components determine a pure density operator. For two features this is
//! the ordinary Bloch sphere and a 2x2 matrix; for more features the
//! generalized Pauli (Gell-Mann) basis takes over, with the unused
//! components pinned to zero.

use alloc::vec;
use alloc::vec::Vec;

use libm::{fabs, sqrt};
use num_complex::Complex64;

use crate::error::Error;
use crate::matrix::CMatrix;
use crate::{ACCUM_TOL, EXACT_TOL};

/// A real pattern: an ordered list of finite feature values.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    coords: Vec<f64>,
}

impl FeatureVector {
    /// Validates that every coordinate is finite and that there is at least
    /// one of them.
    pub fn new(coords: impl Into<Vec<f64>>) -> Result<Self, Error> {
        let coords = coords.into();
        if coords.is_empty() {
            return Err(Error::InvalidSpec("feature vector must not be empty"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteInput);
        }
        Ok(FeatureVector { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Real Pauli components `r_1..r_m` of a state, with `|r| <= 1`.
///
/// Vectors produced by [`inverse_stereographic`] lie on the unit sphere
/// itself (pure states); interior vectors arise from mixed states.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector {
    components: Vec<f64>,
}

impl BlochVector {
    /// Accepts any finite vector with squared norm at most `1 + 1e-9`.
    pub fn new(components: impl Into<Vec<f64>>) -> Result<Self, Error> {
        let components = components.into();
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteInput);
        }
        let norm_sq = components.iter().map(|c| c * c).sum::<f64>();
        if norm_sq > 1.0 + ACCUM_TOL {
            return Err(Error::NotUnitNorm { norm_sq });
        }
        Ok(BlochVector { components })
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn norm_sq(&self) -> f64 {
        self.components.iter().map(|c| c * c).sum()
    }

    /// True when the vector lies on the sphere surface within `1e-9`.
    pub fn is_surface(&self) -> bool {
        fabs(self.norm_sq() - 1.0) <= ACCUM_TOL
    }
}

/// A pure 2x2 density operator together with the Bloch vector it encodes.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityPattern {
    matrix: CMatrix,
    bloch: BlochVector,
}

impl DensityPattern {
    /// Validates an arbitrary 2x2 matrix as a pure density operator and
    /// reads its Bloch vector off the entries.
    pub fn from_matrix(matrix: CMatrix) -> Result<Self, Error> {
        if matrix.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: matrix.dim(),
            });
        }
        matrix.validate_density()?;
        if fabs(matrix.purity() - 1.0) > ACCUM_TOL {
            return Err(Error::NotADensityMatrix("state is not pure"));
        }
        let bloch = bloch_of_matrix(&matrix)?;
        Ok(DensityPattern { matrix, bloch })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// The Bloch vector recorded when the pattern was built.
    pub fn bloch(&self) -> &BlochVector {
        &self.bloch
    }

    /// Third Pauli component; 1 only at the north pole.
    pub fn r3(&self) -> f64 {
        self.bloch.components()[2]
    }
}

/// The generalized Pauli basis for a 2- or 3-dimensional Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedBasis {
    dimension: usize,
    matrices: Vec<CMatrix>,
}

impl GeneralizedBasis {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The `n^2 - 1` basis matrices, in the conventional order.
    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }
}

/// An n-dimensional density operator built from padded Pauli components.
///
/// The Bloch vector always carries all `n^2 - 1` components; the ones not
/// determined by the feature vector are stored as explicit zeros so that
/// distances can operate uniformly on full-length vectors. `feature_dim`
/// remembers how many real features the live components encode.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedDensityPattern {
    matrix: CMatrix,
    bloch: BlochVector,
    feature_dim: usize,
}

impl GeneralizedDensityPattern {
    /// Assembles the density operator for explicit Pauli components.
    ///
    /// `bloch` must have all `n^2 - 1` components of the `n`-dimensional
    /// basis; `feature_dim` tells how many of the leading components came
    /// from a feature vector (the `feature_dim + 1` leading components are
    /// the live ones).
    pub fn from_bloch(bloch: BlochVector, feature_dim: usize, n: usize) -> Result<Self, Error> {
        let basis = gell_mann_basis(n)?;
        if bloch.len() != n * n - 1 {
            return Err(Error::DimensionMismatch {
                expected: n * n - 1,
                actual: bloch.len(),
            });
        }
        if feature_dim + 1 > bloch.len() {
            return Err(Error::UnsupportedFeatureCount {
                features: feature_dim,
                dimension: n,
            });
        }
        // n = 2 uses rho = (I + sum r_i s_i) / 2; n = 3 uses
        // rho = (I + sqrt(3) sum r_i s_i) / 3.
        let coefficient = match n {
            2 => 1.0,
            3 => sqrt(3.0),
            _ => return Err(Error::UnsupportedDimension(n)),
        };
        let mut matrix = CMatrix::identity(n);
        for (r, sigma) in bloch.components().iter().zip(basis.matrices()) {
            matrix = matrix + sigma.scale(coefficient * r);
        }
        let matrix = matrix.scale(1.0 / n as f64);
        Ok(GeneralizedDensityPattern {
            matrix,
            bloch,
            feature_dim,
        })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn bloch(&self) -> &BlochVector {
        &self.bloch
    }

    /// Number of real features encoded in the leading components.
    pub fn feature_dim(&self) -> usize {
        self.feature_dim
    }

    pub fn hilbert_dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Lifts an `m`-dimensional pattern onto the unit sphere `S^m`.
///
/// Component `i <= m` is `2 x_i / (|x|^2 + 1)`; the added last component is
/// `(|x|^2 - 1) / (|x|^2 + 1)`. The output always lies on the sphere
/// surface, so it encodes a pure state.
pub fn inverse_stereographic(v: &FeatureVector) -> Result<BlochVector, Error> {
    let denom = v.coords().iter().map(|x| x * x).sum::<f64>() + 1.0;
    if !denom.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    let mut components = Vec::with_capacity(v.dim() + 1);
    components.extend(v.coords().iter().map(|x| 2.0 * x / denom));
    components.push((denom - 2.0) / denom);
    BlochVector::new(components)
}

/// Projects a surface point of `S^m` (other than the north pole) back to
/// the plane: `x_i = r_i / (1 - r_{m+1})`.
pub fn stereographic(r: &BlochVector) -> Result<FeatureVector, Error> {
    if r.len() < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: r.len(),
        });
    }
    if !r.is_surface() {
        return Err(Error::NotUnitNorm {
            norm_sq: r.norm_sq(),
        });
    }
    let last = *r.components().last().expect("length checked above");
    let denom = 1.0 - last;
    if denom <= EXACT_TOL {
        return Err(Error::NorthPole);
    }
    let coords: Vec<f64> = r.components()[..r.len() - 1]
        .iter()
        .map(|ri| ri / denom)
        .collect();
    FeatureVector::new(coords)
}

fn bloch_of_feature_pair(x: f64, y: f64) -> [f64; 3] {
    let denom = x * x + y * y + 1.0;
    [2.0 * x / denom, 2.0 * y / denom, (denom - 2.0) / denom]
}

/// Encodes a two-feature pattern as its pure density operator
///
/// ```text
/// rho = 1/(x^2 + y^2 + 1) * [ x^2 + y^2   x - iy ]
///                           [ x + iy      1      ]
/// ```
pub fn encode(v: &FeatureVector) -> Result<DensityPattern, Error> {
    if v.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: v.dim(),
        });
    }
    let (x, y) = (v.coords()[0], v.coords()[1]);
    let s = x * x + y * y;
    let denom = s + 1.0;
    if !denom.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    let matrix = CMatrix::from_rows2([
        [
            Complex64::new(s / denom, 0.0),
            Complex64::new(x / denom, -y / denom),
        ],
        [
            Complex64::new(x / denom, y / denom),
            Complex64::new(1.0 / denom, 0.0),
        ],
    ]);
    let bloch = BlochVector::new(bloch_of_feature_pair(x, y))?;
    Ok(DensityPattern { matrix, bloch })
}

fn bloch_of_matrix(matrix: &CMatrix) -> Result<BlochVector, Error> {
    BlochVector::new([
        2.0 * matrix[(1, 0)].re,
        2.0 * matrix[(1, 0)].im,
        matrix[(0, 0)].re - matrix[(1, 1)].re,
    ])
}

/// Reads the Pauli components `r_i = tr(rho sigma_i)` off a density
/// pattern's matrix. Agrees with the vector stored at encoding time up to
/// rounding.
pub fn bloch_components(pattern: &DensityPattern) -> BlochVector {
    bloch_of_matrix(pattern.matrix()).expect("valid patterns have in-range components")
}

/// The Pauli matrices (`n = 2`) or the eight Gell-Mann matrices (`n = 3`),
/// in the conventional order. Every matrix is Hermitian and traceless and
/// the set satisfies `tr(s_i s_j) = 2 d_ij`.
pub fn gell_mann_basis(n: usize) -> Result<GeneralizedBasis, Error> {
    let z = Complex64::ZERO;
    let one = Complex64::ONE;
    let i = Complex64::I;
    let matrices = match n {
        2 => vec![
            CMatrix::from_rows2([[z, one], [one, z]]),
            CMatrix::from_rows2([[z, -i], [i, z]]),
            CMatrix::from_rows2([[one, z], [z, -one]]),
        ],
        3 => {
            let s = 1.0 / sqrt(3.0);
            vec![
                CMatrix::from_rows3([[z, one, z], [one, z, z], [z, z, z]]),
                CMatrix::from_rows3([[z, -i, z], [i, z, z], [z, z, z]]),
                CMatrix::from_rows3([[one, z, z], [z, -one, z], [z, z, z]]),
                CMatrix::from_rows3([[z, z, one], [z, z, z], [one, z, z]]),
                CMatrix::from_rows3([[z, z, -i], [z, z, z], [i, z, z]]),
                CMatrix::from_rows3([[z, z, z], [z, z, one], [z, one, z]]),
                CMatrix::from_rows3([[z, z, z], [z, z, -i], [z, i, z]]),
                CMatrix::from_rows3([
                    [one.scale(s), z, z],
                    [z, one.scale(s), z],
                    [z, z, one.scale(-2.0 * s)],
                ]),
            ]
        }
        _ => return Err(Error::UnsupportedDimension(n)),
    };
    Ok(GeneralizedBasis {
        dimension: n,
        matrices,
    })
}

/// Encodes an `m`-feature pattern in an `n`-dimensional Hilbert space.
///
/// The first `m + 1` Pauli components come from [`inverse_stereographic`];
/// the remaining `n^2 - m - 2` components are pinned to zero. `m` must fit
/// the dimension: `m + 1 <= n^2 - 1`, and `n` must be the smallest such
/// dimension (a pattern that fits the plain Bloch sphere is rejected at
/// `n = 3`).
pub fn encode_generalized(v: &FeatureVector, n: usize) -> Result<GeneralizedDensityPattern, Error> {
    if n != 2 && n != 3 {
        return Err(Error::UnsupportedDimension(n));
    }
    let m = v.dim();
    let lower = if n == 2 { 1 } else { (n - 1) * (n - 1) - 1 };
    if m < lower || m > n * n - 2 {
        return Err(Error::UnsupportedFeatureCount {
            features: m,
            dimension: n,
        });
    }
    let live = inverse_stereographic(v)?;
    let mut components = live.components().to_vec();
    components.resize(n * n - 1, 0.0);
    GeneralizedDensityPattern::from_bloch(BlochVector::new(components)?, m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Xoshiro256;
    use approx::assert_relative_eq;

    fn fv(coords: &[f64]) -> FeatureVector {
        FeatureVector::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn inverse_stereographic_worked_example() {
        let r = inverse_stereographic(&fv(&[1.0, 3.0])).unwrap();
        assert_relative_eq!(r.components()[0], 2.0 / 11.0, epsilon = 1e-15);
        assert_relative_eq!(r.components()[1], 6.0 / 11.0, epsilon = 1e-15);
        assert_relative_eq!(r.components()[2], 9.0 / 11.0, epsilon = 1e-15);
    }

    #[test]
    fn origin_maps_to_south_pole() {
        let r = inverse_stereographic(&fv(&[0.0, 0.0])).unwrap();
        assert_eq!(r.components(), &[0.0, 0.0, -1.0]);
    }

    #[test]
    fn three_feature_lift() {
        let r = inverse_stereographic(&fv(&[1.0, 1.0, 1.0])).unwrap();
        assert_eq!(r.components(), &[0.5, 0.5, 0.5, 0.5]);
    }

    #[test]
    fn lifted_vectors_sit_on_the_sphere() {
        let mut rng = Xoshiro256::new(11);
        for _ in 0..2000 {
            let m = 1 + rng.next_index(5);
            let coords: alloc::vec::Vec<f64> = (0..m).map(|_| rng.next_in(-100.0, 100.0)).collect();
            let r = inverse_stereographic(&fv(&coords)).unwrap();
            assert!(fabs(r.norm_sq() - 1.0) <= 1e-9);
            assert!(r.is_surface());
        }
    }

    #[test]
    fn stereographic_south_pole() {
        let r = BlochVector::new([0.0, 0.0, -1.0]).unwrap();
        assert_eq!(stereographic(&r).unwrap().coords(), &[0.0, 0.0]);
    }

    #[test]
    fn stereographic_inverts_worked_example() {
        let r = BlochVector::new([2.0 / 11.0, 6.0 / 11.0, 9.0 / 11.0]).unwrap();
        let v = stereographic(&r).unwrap();
        assert_relative_eq!(v.coords()[0], 1.0, epsilon = 1e-10);
        assert_relative_eq!(v.coords()[1], 3.0, epsilon = 1e-10);
    }

    #[test]
    fn round_trip_identity() {
        let mut rng = Xoshiro256::new(3);
        for _ in 0..10_000 {
            let m = 1 + rng.next_index(4);
            let coords: alloc::vec::Vec<f64> = (0..m).map(|_| rng.next_in(-100.0, 100.0)).collect();
            let v = fv(&coords);
            let back = stereographic(&inverse_stereographic(&v).unwrap()).unwrap();
            for (a, b) in v.coords().iter().zip(back.coords()) {
                assert_relative_eq!(a, b, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn north_pole_is_rejected() {
        let r = BlochVector::new([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(stereographic(&r), Err(Error::NorthPole));
    }

    #[test]
    fn off_sphere_vector_is_rejected() {
        let r = BlochVector::new([0.1, 0.0, 0.0]).unwrap();
        assert!(matches!(stereographic(&r), Err(Error::NotUnitNorm { .. })));
    }

    #[test]
    fn encode_worked_example() {
        let p = encode(&fv(&[1.0, 3.0])).unwrap();
        let m = p.matrix();
        assert_relative_eq!(m[(0, 0)].re, 10.0 / 11.0, epsilon = 1e-12);
        assert_relative_eq!(m[(0, 1)].re, 1.0 / 11.0, epsilon = 1e-12);
        assert_relative_eq!(m[(0, 1)].im, -3.0 / 11.0, epsilon = 1e-12);
        assert_relative_eq!(m[(1, 0)].re, 1.0 / 11.0, epsilon = 1e-12);
        assert_relative_eq!(m[(1, 0)].im, 3.0 / 11.0, epsilon = 1e-12);
        assert_relative_eq!(m[(1, 1)].re, 1.0 / 11.0, epsilon = 1e-12);
    }

    #[test]
    fn encode_origin_and_unit_point() {
        let origin = encode(&fv(&[0.0, 0.0])).unwrap();
        assert_eq!(origin.matrix()[(0, 0)], Complex64::ZERO);
        assert_eq!(origin.matrix()[(1, 1)], Complex64::ONE);

        let p = encode(&fv(&[1.0, 0.0])).unwrap();
        for idx in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert_relative_eq!(p.matrix()[idx].re, 0.5, epsilon = 1e-15);
            assert_relative_eq!(p.matrix()[idx].im, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn encode_rejects_wrong_dimension() {
        assert!(matches!(
            encode(&fv(&[1.0, 2.0, 3.0])),
            Err(Error::DimensionMismatch {
                expected: 2,
                actual: 3
            })
        ));
    }

    #[test]
    fn encoded_states_are_pure_density_operators() {
        let mut rng = Xoshiro256::new(5);
        for _ in 0..2000 {
            let p = encode(&fv(&[rng.next_in(-50.0, 50.0), rng.next_in(-50.0, 50.0)])).unwrap();
            let m = p.matrix();
            assert!(m.is_hermitian(1e-12));
            assert_relative_eq!(m.trace().re, 1.0, epsilon = 1e-12);
            let eigs = m.hermitian_eigenvalues().unwrap();
            assert!(eigs[0] >= -1e-12);
            assert_relative_eq!(m.purity(), 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn nearby_patterns_encode_to_distinct_states() {
        let mut rng = Xoshiro256::new(17);
        for _ in 0..1000 {
            let x = rng.next_in(-20.0, 20.0);
            let y = rng.next_in(-20.0, 20.0);
            let a = encode(&fv(&[x, y])).unwrap();
            let b = encode(&fv(&[x + 1e-6, y])).unwrap();
            assert!(a.matrix().max_abs_diff(b.matrix()) > 0.0);
        }
    }

    #[test]
    fn bloch_components_match_stored_vector() {
        let p = encode(&fv(&[1.0, 3.0])).unwrap();
        let r = bloch_components(&p);
        assert_relative_eq!(r.components()[0], 2.0 / 11.0, epsilon = 1e-12);
        assert_relative_eq!(r.components()[1], 6.0 / 11.0, epsilon = 1e-12);
        assert_relative_eq!(r.components()[2], 9.0 / 11.0, epsilon = 1e-12);

        let south = bloch_components(&encode(&fv(&[0.0, 0.0])).unwrap());
        assert_eq!(south.components(), &[0.0, 0.0, -1.0]);
    }

    #[test]
    fn bloch_components_agree_with_trace_measurement() {
        // Independent route: full matrix product with each Pauli matrix.
        let basis = gell_mann_basis(2).unwrap();
        let mut rng = Xoshiro256::new(23);
        for _ in 0..1000 {
            let v = fv(&[rng.next_in(-30.0, 30.0), rng.next_in(-30.0, 30.0)]);
            let p = encode(&v).unwrap();
            let lifted = inverse_stereographic(&v).unwrap();
            for (k, sigma) in basis.matrices().iter().enumerate() {
                let traced = (*p.matrix() * *sigma).trace();
                assert_relative_eq!(traced.re, lifted.components()[k], epsilon = 1e-12);
                assert_relative_eq!(traced.im, 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn pauli_basis_matrices() {
        let basis = gell_mann_basis(2).unwrap();
        assert_eq!(basis.matrices().len(), 3);
        let s1 = &basis.matrices()[0];
        assert_eq!(s1[(0, 1)], Complex64::ONE);
        assert_eq!(s1[(1, 0)], Complex64::ONE);
        let s2 = &basis.matrices()[1];
        assert_eq!(s2[(0, 1)], -Complex64::I);
        assert_eq!(s2[(1, 0)], Complex64::I);
        let s3 = &basis.matrices()[2];
        assert_eq!(s3[(0, 0)], Complex64::ONE);
        assert_eq!(s3[(1, 1)], -Complex64::ONE);
    }

    #[test]
    fn last_gell_mann_matrix_is_scaled_diagonal() {
        let basis = gell_mann_basis(3).unwrap();
        assert_eq!(basis.matrices().len(), 8);
        let s8 = &basis.matrices()[7];
        let s = 1.0 / 3.0f64.sqrt();
        assert_relative_eq!(s8[(0, 0)].re, s, epsilon = 1e-15);
        assert_relative_eq!(s8[(1, 1)].re, s, epsilon = 1e-15);
        assert_relative_eq!(s8[(2, 2)].re, -2.0 * s, epsilon = 1e-15);
    }

    #[test]
    fn basis_matrices_are_traceless_hermitian_and_orthogonal() {
        for n in [2usize, 3] {
            let basis = gell_mann_basis(n).unwrap();
            for (i, a) in basis.matrices().iter().enumerate() {
                assert!(a.is_hermitian(1e-12));
                assert!(fabs(a.trace().re) <= 1e-12 && fabs(a.trace().im) <= 1e-12);
                for (j, b) in basis.matrices().iter().enumerate() {
                    let t = a.product_trace(b);
                    let expected = if i == j { 2.0 } else { 0.0 };
                    assert_relative_eq!(t.re, expected, epsilon = 1e-12);
                    assert_relative_eq!(t.im, 0.0, epsilon = 1e-12);
                }
            }
        }
        assert!(matches!(
            gell_mann_basis(4),
            Err(Error::UnsupportedDimension(4))
        ));
    }

    #[test]
    fn generalized_encoding_pads_with_zeros() {
        let p = encode_generalized(&fv(&[1.0, 1.0, 1.0]), 3).unwrap();
        assert_eq!(
            p.bloch().components(),
            &[0.5, 0.5, 0.5, 0.5, 0.0, 0.0, 0.0, 0.0]
        );
        assert_eq!(p.feature_dim(), 3);
        assert_eq!(p.hilbert_dim(), 3);

        let q = encode_generalized(&fv(&[0.0, 0.0, 0.0]), 3).unwrap();
        assert_eq!(
            q.bloch().components(),
            &[0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0]
        );
    }

    #[test]
    fn generalized_matrix_shape_matches_reduced_form() {
        // With live components (r1..r4, 0, 0, 0, 0) the matrix collapses to
        // [[sqrt(3) r3 + 1, sqrt(3)(r1 - i r2), sqrt(3) r4],
        //  [sqrt(3)(r1 + i r2), -sqrt(3) r3 + 1, 0],
        //  [sqrt(3) r4, 0, 1]] / 3.
        let p = encode_generalized(&fv(&[1.0, 1.0, 1.0]), 3).unwrap();
        let r = p.bloch().components();
        let s3 = 3.0f64.sqrt();
        let m = p.matrix();
        assert_relative_eq!(m[(0, 0)].re, (s3 * r[2] + 1.0) / 3.0, epsilon = 1e-12);
        assert_relative_eq!(m[(0, 1)].re, s3 * r[0] / 3.0, epsilon = 1e-12);
        assert_relative_eq!(m[(0, 1)].im, -s3 * r[1] / 3.0, epsilon = 1e-12);
        assert_relative_eq!(m[(0, 2)].re, s3 * r[3] / 3.0, epsilon = 1e-12);
        assert_relative_eq!(m[(1, 1)].re, (-s3 * r[2] + 1.0) / 3.0, epsilon = 1e-12);
        assert_relative_eq!(m[(1, 2)].re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(m[(2, 2)].re, 1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn generalized_matrices_have_unit_trace() {
        let mut rng = Xoshiro256::new(29);
        for _ in 0..100 {
            let m = 3 + rng.next_index(5); // 3..=7 features in n = 3
            let coords: alloc::vec::Vec<f64> = (0..m).map(|_| rng.next_in(-10.0, 10.0)).collect();
            let p = encode_generalized(&fv(&coords), 3).unwrap();
            assert!(p.matrix().is_hermitian(1e-12));
            assert_relative_eq!(p.matrix().trace().re, 1.0, epsilon = 1e-12);
            assert_relative_eq!(p.matrix().trace().im, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn generalized_two_dimensional_case_matches_plain_encoding() {
        let v = fv(&[1.0, 3.0]);
        let plain = encode(&v).unwrap();
        let general = encode_generalized(&v, 2).unwrap();
        assert!(plain.matrix().max_abs_diff(general.matrix()) <= 1e-12);
    }

    #[test]
    fn feature_count_bands_are_enforced() {
        assert!(matches!(
            encode_generalized(&fv(&[1.0, 2.0]), 3),
            Err(Error::UnsupportedFeatureCount {
                features: 2,
                dimension: 3
            })
        ));
        let eight = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];
        assert!(matches!(
            encode_generalized(&fv(&eight), 3),
            Err(Error::UnsupportedFeatureCount {
                features: 8,
                dimension: 3
            })
        ));
        assert!(matches!(
            encode_generalized(&fv(&[1.0, 2.0, 3.0]), 2),
            Err(Error::UnsupportedFeatureCount {
                features: 3,
                dimension: 2
            })
        ));
        assert!(matches!(
            encode_generalized(&fv(&[1.0]), 4),
            Err(Error::UnsupportedDimension(4))
        ));
    }

    #[test]
    fn density_pattern_from_matrix_validates() {
        let north = CMatrix::from_rows2([
            [Complex64::ONE, Complex64::ZERO],
            [Complex64::ZERO, Complex64::ZERO],
        ]);
        let p = DensityPattern::from_matrix(north).unwrap();
        assert_eq!(p.bloch().components(), &[0.0, 0.0, 1.0]);

        // Mixed state: rejected for want of purity.
        let mixed = CMatrix::identity(2).scale(0.5);
        assert!(matches!(
            DensityPattern::from_matrix(mixed),
            Err(Error::NotADensityMatrix("state is not pure"))
        ));

        // Trace 2: rejected outright.
        let double = CMatrix::identity(2);
        assert!(DensityPattern::from_matrix(double).is_err());
    }

    #[test]
    fn non_finite_inputs_are_rejected() {
        assert_eq!(
            FeatureVector::new([f64::NAN, 1.0]),
            Err(Error::NonFiniteInput)
        );
        assert_eq!(
            FeatureVector::new([f64::INFINITY]),
            Err(Error::NonFiniteInput)
        );
        assert!(FeatureVector::new(Vec::new()).is_err());
    }
}
