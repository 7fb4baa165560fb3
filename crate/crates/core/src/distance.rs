//! Trace distance between density operators and its normalized forms.
//!
//! The raw trace distance `d_tr(a, b) = (1/2) sum_i |lambda_i|` over the
//! eigenvalues of `a - b` measures states; multiplying by the factor
//! `K = 2 / sqrt((1 - r_a3)(1 - r_b3))` turns it into exactly the Euclidean
//! distance between the stereographic preimages of two density patterns,
//! which is what lets the Nearest Mean Classifier run on quantum states.

use libm::{fabs, sqrt};

use crate::encoding::{DensityPattern, FeatureVector, GeneralizedDensityPattern};
use crate::error::Error;
use crate::matrix::CMatrix;
use crate::EXACT_TOL;

/// The pieces of a normalized trace distance evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceDistanceBreakdown {
    /// The raw trace distance `d_tr`.
    pub raw: f64,
    /// The normalization factor `K`.
    pub factor: f64,
    /// `factor * raw`; equals the Euclidean distance between the preimages.
    pub normalized: f64,
    /// `|lambda|` of the difference matrix, whose eigenvalues are
    /// `+-|lambda|`; for 2x2 states this equals `raw`.
    pub eigenvalue_magnitude: f64,
}

/// Trace distance `(1/2) sum |lambda_i|` between two density matrices of
/// equal dimension (2 or 3). Always in `[0, 1]`; 1 exactly for orthogonal
/// pure states.
pub fn trace_distance(a: &CMatrix, b: &CMatrix) -> Result<f64, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            actual: b.dim(),
        });
    }
    let eigs = (*a - *b).hermitian_eigenvalues()?;
    Ok(0.5 * eigs[..a.dim()].iter().map(|e| fabs(*e)).sum::<f64>())
}

/// Normalized trace distance between two density patterns, with the raw
/// distance, the factor and the eigenvalue magnitude broken out.
///
/// Fails with [`Error::SingularNormalization`] when either pattern sits at
/// the north pole, where the factor diverges. Patterns produced by
/// [`crate::encode`] never do.
pub fn normalized_trace_distance(
    a: &DensityPattern,
    b: &DensityPattern,
) -> Result<TraceDistanceBreakdown, Error> {
    let ka = 1.0 - a.r3();
    let kb = 1.0 - b.r3();
    if ka < EXACT_TOL || kb < EXACT_TOL {
        return Err(Error::SingularNormalization);
    }
    let raw = trace_distance(a.matrix(), b.matrix())?;
    let factor = 2.0 / sqrt(ka * kb);
    Ok(TraceDistanceBreakdown {
        raw,
        factor,
        normalized: factor * raw,
        eigenvalue_magnitude: raw,
    })
}

/// Plain L2 distance between two equal-length feature vectors.
pub fn euclidean_distance(a: &FeatureVector, b: &FeatureVector) -> Result<f64, Error> {
    if a.dim() != b.dim() {
        return Err(Error::LengthMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let sum: f64 = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| (x - y) * (x - y))
        .sum();
    Ok(sqrt(sum))
}

/// Which algebraic arrangement of the generalized normalized trace distance
/// to evaluate. The two differ in how the cross terms of the numerator pair
/// Pauli components with the final (pole-direction) components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GeneralizedDistanceForm {
    /// Anchors both numerator cross terms on the first argument's final
    /// component. Not symmetric in its arguments.
    #[default]
    LeftAnchored,
    /// Pairs each vector's components with the *other* vector's final
    /// component. Symmetric, and equal to the Euclidean distance between
    /// the stereographic preimages.
    Symmetric,
}

/// Generalized normalized trace distance on padded Pauli components, in the
/// default [`GeneralizedDistanceForm::LeftAnchored`] arrangement.
pub fn generalized_normalized_trace_distance(
    a: &GeneralizedDensityPattern,
    b: &GeneralizedDensityPattern,
) -> Result<f64, Error> {
    generalized_normalized_trace_distance_with(a, b, GeneralizedDistanceForm::default())
}

/// Generalized normalized trace distance with an explicit choice of form.
///
/// With `m` features the sum runs over the first `m` Pauli components and
/// the denominator is `(1 - r_a[m+1])(1 - r_b[m+1])` (no square root; the
/// bracketed numerator terms already carry one factor of each).
pub fn generalized_normalized_trace_distance_with(
    a: &GeneralizedDensityPattern,
    b: &GeneralizedDensityPattern,
    form: GeneralizedDistanceForm,
) -> Result<f64, Error> {
    if a.hilbert_dim() != b.hilbert_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.hilbert_dim(),
            actual: b.hilbert_dim(),
        });
    }
    if a.feature_dim() != b.feature_dim() {
        return Err(Error::LengthMismatch {
            left: a.feature_dim(),
            right: b.feature_dim(),
        });
    }
    let m = a.feature_dim();
    let ra = a.bloch().components();
    let rb = b.bloch().components();
    let ra_last = ra[m];
    let rb_last = rb[m];
    let denom = (1.0 - ra_last) * (1.0 - rb_last);
    if fabs(denom) < EXACT_TOL {
        return Err(Error::SingularNormalization);
    }
    let mut sum = 0.0;
    for i in 0..m {
        let bracket = match form {
            GeneralizedDistanceForm::LeftAnchored => {
                (ra[i] - rb[i]) - (ra[i] * ra_last - rb[i] * ra_last)
            }
            GeneralizedDistanceForm::Symmetric => {
                (ra[i] - rb[i]) - (ra[i] * rb_last - rb[i] * ra_last)
            }
        };
        sum += bracket * bracket;
    }
    Ok(sqrt(sum) / denom)
}
