//! Minimal 3-D spatial math: rotations, homogeneous transforms, skew maps,
//! 6-vector screws, and integration on the rotation group.
//!
//! Rotations are stored as the 3×3 matrix itself so that frame algebra maps
//! one-to-one onto the matrix expressions used throughout the rest of the
//! crate; drift from repeated composition is removed by polar projection.

use nalgebra::{Matrix3, Vector3};

/// Orthonormality / determinant tolerance for [`Rot3`] validity checks.
pub const ROT_TOL: f64 = 1e-9;

/// A 3×3 rotation matrix (member of SO(3)).
///
/// Invariants: `RᵀR = I` and `det R = +1`, both within [`ROT_TOL`]. All
/// constructors in this module produce matrices that satisfy them by
/// construction; [`Rot3::renormalized`] restores them after drift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rot3(Matrix3<f64>);

impl Rot3 {
    /// Identity rotation.
    pub fn identity() -> Self {
        Rot3(Matrix3::identity())
    }

    /// Wraps a matrix without validation. The caller asserts it is a rotation.
    pub fn from_matrix_unchecked(m: Matrix3<f64>) -> Self {
        Rot3(m)
    }

    /// Wraps a matrix, checking the SO(3) invariants within [`ROT_TOL`].
    pub fn try_from_matrix(m: Matrix3<f64>) -> Result<Self, SpatialError> {
        let r = Rot3(m);
        if r.orthonormality_error() > ROT_TOL {
            return Err(SpatialError::NotOrthonormal {
                error: r.orthonormality_error(),
            });
        }
        if (m.determinant() - 1.0).abs() > ROT_TOL {
            return Err(SpatialError::NotProperRotation {
                det: m.determinant(),
            });
        }
        Ok(r)
    }

    /// Rotation about the z-axis.
    pub fn rot_z(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Rot3(Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0))
    }

    /// Rotation about the y-axis.
    pub fn rot_y(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Rot3(Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c))
    }

    /// Rotation about the x-axis.
    pub fn rot_x(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Rot3(Matrix3::new(1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c))
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    /// Rotates a vector.
    pub fn apply(&self, v: &Vector3<f64>) -> Vector3<f64> {
        self.0 * v
    }

    /// Inverse rotation (transpose).
    pub fn inverse(&self) -> Self {
        Rot3(self.0.transpose())
    }

    /// Composition `self · other`.
    pub fn compose(&self, other: &Rot3) -> Self {
        Rot3(self.0 * other.0)
    }

    /// Max-norm of `RᵀR − I`.
    pub fn orthonormality_error(&self) -> f64 {
        (self.0.transpose() * self.0 - Matrix3::identity()).amax()
    }

    /// Nearest rotation matrix in the Frobenius sense (polar projection via
    /// SVD, `R = U·Vᵀ` with the determinant sign fixed).
    pub fn renormalized(&self) -> Self {
        let svd = self.0.svd(true, true);
        let u = svd.u.expect("svd requested u");
        let v_t = svd.v_t.expect("svd requested v_t");
        let mut r = u * v_t;
        if r.determinant() < 0.0 {
            // Flip the least-significant singular direction.
            let mut u = u;
            u.column_mut(2).neg_mut();
            r = u * v_t;
        }
        Rot3(r)
    }

    /// Extracts roll/pitch/yaw angles (inverse of [`rpy_to_rot`]); pitch is
    /// resolved in (−π/2, π/2).
    pub fn to_rpy(&self) -> EulerRPY {
        let m = &self.0;
        EulerRPY {
            phi: m[(2, 1)].atan2(m[(2, 2)]),
            theta: (-m[(2, 0)]).asin(),
            psi: m[(1, 0)].atan2(m[(0, 0)]),
        }
    }
}

/// A rigid-body pose: rotation plus translation. The implicit homogeneous
/// bottom row is (0,0,0,1). Translation units follow the caller's convention
/// (millimeters in joint/arm kinematics, meters in dynamics).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform {
    pub rot: Rot3,
    pub trans: Vector3<f64>,
}

impl Transform {
    /// Identity pose.
    pub fn identity() -> Self {
        Transform {
            rot: Rot3::identity(),
            trans: Vector3::zeros(),
        }
    }

    pub fn new(rot: Rot3, trans: Vector3<f64>) -> Self {
        Transform { rot, trans }
    }

    /// Pure translation.
    pub fn translation(t: Vector3<f64>) -> Self {
        Transform {
            rot: Rot3::identity(),
            trans: t,
        }
    }

    /// Pure rotation.
    pub fn rotation(r: Rot3) -> Self {
        Transform {
            rot: r,
            trans: Vector3::zeros(),
        }
    }
}

/// Composition `a ∘ b` (apply `b` first in `a`'s frame).
pub fn compose(a: &Transform, b: &Transform) -> Transform {
    Transform {
        rot: a.rot.compose(&b.rot),
        trans: a.rot.apply(&b.trans) + a.trans,
    }
}

/// Applies a transform to a point.
pub fn apply(t: &Transform, p: &Vector3<f64>) -> Vector3<f64> {
    t.rot.apply(p) + t.trans
}

/// Inverse transform: `invert(t) ∘ t = identity`.
pub fn invert(t: &Transform) -> Transform {
    let rot_inv = t.rot.inverse();
    Transform {
        trans: -rot_inv.apply(&t.trans),
        rot: rot_inv,
    }
}

/// A 6-vector screw `(angular; linear)`: a twist `(ω; v)` or a wrench,
/// stated per use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Screw6 {
    pub angular: Vector3<f64>,
    pub linear: Vector3<f64>,
}

impl Screw6 {
    pub fn new(angular: Vector3<f64>, linear: Vector3<f64>) -> Self {
        Screw6 { angular, linear }
    }

    pub fn from_components(wx: f64, wy: f64, wz: f64, vx: f64, vy: f64, vz: f64) -> Self {
        Screw6 {
            angular: Vector3::new(wx, wy, wz),
            linear: Vector3::new(vx, vy, vz),
        }
    }

    /// Stacks the screw as `[ω; v]` for matrix assembly.
    pub fn as_array(&self) -> [f64; 6] {
        [
            self.angular.x,
            self.angular.y,
            self.angular.z,
            self.linear.x,
            self.linear.y,
            self.linear.z,
        ]
    }

    /// Reciprocal product `⟨s₁,s₂⟩ = ω₁·v₂ + ω₂·v₁`.
    pub fn reciprocal_product(&self, other: &Screw6) -> f64 {
        self.angular.dot(&other.linear) + other.angular.dot(&self.linear)
    }
}

/// Roll/pitch/yaw Euler angles, radians. Unambiguous conversion requires
/// `theta ∈ (−π/2, π/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerRPY {
    pub phi: f64,
    pub theta: f64,
    pub psi: f64,
}

impl EulerRPY {
    pub fn new(phi: f64, theta: f64, psi: f64) -> Self {
        EulerRPY { phi, theta, psi }
    }

    pub fn zero() -> Self {
        EulerRPY {
            phi: 0.0,
            theta: 0.0,
            psi: 0.0,
        }
    }
}

/// Errors from spatial-math validity checks.
#[derive(Debug, thiserror::Error)]
pub enum SpatialError {
    #[error("matrix is not orthonormal (max |RᵀR − I| = {error:.3e})")]
    NotOrthonormal { error: f64 },
    #[error("matrix is a reflection, not a rotation (det = {det:.6})")]
    NotProperRotation { det: f64 },
}

/// Anti-symmetric (cross-product) matrix of a vector: `skew(v)·w = v × w`.
pub fn skew(v: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(0.0, -v.z, v.y, v.z, 0.0, -v.x, -v.y, v.x, 0.0)
}

/// Extracts the vector from an anti-symmetric matrix (inverse of [`skew`],
/// averaging the off-diagonal pairs).
pub fn vee(m: &Matrix3<f64>) -> Vector3<f64> {
    Vector3::new(
        0.5 * (m[(2, 1)] - m[(1, 2)]),
        0.5 * (m[(0, 2)] - m[(2, 0)]),
        0.5 * (m[(1, 0)] - m[(0, 1)]),
    )
}

/// Rotation matrix from roll/pitch/yaw angles:
///
/// ```text
/// R = | CθCψ   SφSθCψ − CφSψ   CφSθCψ + SφSψ |
///     | CθSψ   SφSθSψ + CφCψ   CφSθSψ − SφCψ |
///     | −Sθ    SφCθ            CφCθ          |
/// ```
pub fn rpy_to_rot(e: &EulerRPY) -> Rot3 {
    let (s_phi, c_phi) = e.phi.sin_cos();
    let (s_th, c_th) = e.theta.sin_cos();
    let (s_psi, c_psi) = e.psi.sin_cos();
    Rot3::from_matrix_unchecked(Matrix3::new(
        c_th * c_psi,
        s_phi * s_th * c_psi - c_phi * s_psi,
        c_phi * s_th * c_psi + s_phi * s_psi,
        c_th * s_psi,
        s_phi * s_th * s_psi + c_phi * c_psi,
        c_phi * s_th * s_psi - s_phi * c_psi,
        -s_th,
        s_phi * c_th,
        c_phi * c_th,
    ))
}

/// Rodrigues rotation by `ω·dt`: the exact solution of `Ṙ = R·skew(ω)` over
/// a step with constant `ω`. The `‖ω‖ → 0` limit is the identity; small
/// angles use series forms of `sinθ/θ` and `(1−cosθ)/θ²`.
pub fn exp_so3(omega: &Vector3<f64>, dt: f64) -> Rot3 {
    exp_so3_vec(&(omega * dt))
}

/// Rodrigues rotation for a rotation vector `φ = ω·dt`.
pub fn exp_so3_vec(phi: &Vector3<f64>) -> Rot3 {
    let theta2 = phi.norm_squared();
    let theta = theta2.sqrt();
    let (a, b) = if theta < 1e-6 {
        // sinθ/θ and (1−cosθ)/θ² to O(θ⁴).
        (
            1.0 - theta2 / 6.0 + theta2 * theta2 / 120.0,
            0.5 - theta2 / 24.0 + theta2 * theta2 / 720.0,
        )
    } else {
        (theta.sin() / theta, (1.0 - theta.cos()) / theta2)
    };
    let k = skew(phi);
    Rot3::from_matrix_unchecked(Matrix3::identity() + k * a + k * k * b)
}

/// Inverse of the differential of the exponential map, truncated to the
/// commutator order needed by a fourth-order Lie-group integrator:
/// `dexp⁻¹_φ(ω) ≈ ω − ½ φ×ω + 1/12 φ×(φ×ω)`.
pub fn dexpinv_so3(phi: &Vector3<f64>, omega: &Vector3<f64>) -> Vector3<f64> {
    let c1 = phi.cross(omega);
    omega - 0.5 * c1 + phi.cross(&c1) / 12.0
}
