//! Tendon mechanics of the tension-amplification tendon (TAT) and the
//! closed-form kinematics, torque, and stiffness of the 1-DOF rolling elbow
//! and the 3-DOF wrist.
//!
//! All lengths are millimeters, forces newtons, torques N·mm. Winding a
//! cable N times through the pulley groups multiplies the output force by N
//! and the effective stiffness by N².
//!
//! Sign convention: positive elbow angle contracts the agonist (top) tendon;
//! a positive wrist pitch/yaw delta means the tendon anchored on the +x/+y
//! side shortens.

use crate::spatial::{compose, Rot3, Transform};
use nalgebra::Vector3;

/// Elbow bend limit, ±π/4.
pub const ELBOW_RANGE: f64 = std::f64::consts::FRAC_PI_4;
/// Wrist bend limit per axis, ±π/4.
pub const WRIST_BEND_RANGE: f64 = std::f64::consts::FRAC_PI_4;
/// Wrist roll limit, ±π.
pub const ROLL_RANGE: f64 = std::f64::consts::PI;

/// Steel-cable properties. The two fields play distinct roles that the
/// design formulas draw on separately: `max_tension` caps the usable tension
/// difference in every `min(·)` clamp, while `axial_stiffness` (EA, force
/// per unit strain) drives the elastic stiffness derivations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CableSpec {
    /// Working tension limit of the cable, N.
    pub max_tension: f64,
    /// Axial stiffness EA of the cable, N (force per unit strain).
    pub axial_stiffness: f64,
}

impl CableSpec {
    pub fn new(max_tension: f64, axial_stiffness: f64) -> Result<Self, JointError> {
        if !(max_tension > 0.0) || !(axial_stiffness > 0.0) {
            return Err(JointError::InvalidDesign {
                what: "cable max_tension and axial_stiffness must be positive",
            });
        }
        Ok(CableSpec {
            max_tension,
            axial_stiffness,
        })
    }
}

impl Default for CableSpec {
    /// 0.6 mm 7×19 steel cable: 300 N working limit, EA ≈ 2·10⁴ N.
    fn default() -> Self {
        CableSpec {
            max_tension: 300.0,
            axial_stiffness: 2.0e4,
        }
    }
}

/// Rolling-elbow design parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElbowDesign {
    /// Rolling-surface curvature radius, mm.
    pub r: f64,
    /// Agonist–antagonist tendon separation, mm.
    pub d_e: f64,
    /// TAT winding count.
    pub n_e: u32,
    /// Motor capstan radius, mm.
    pub r_capstan: f64,
    pub cable: CableSpec,
}

impl ElbowDesign {
    pub fn new(
        r: f64,
        d_e: f64,
        n_e: u32,
        r_capstan: f64,
        cable: CableSpec,
    ) -> Result<Self, JointError> {
        if !(r > 0.0) {
            return Err(JointError::InvalidDesign {
                what: "elbow rolling radius must be positive",
            });
        }
        // Keeps the agonist length 2R − d_e·sin(θ/2) positive over the
        // joint's rolling range.
        if !(d_e > 0.0 && d_e < 2.0 * r * std::f64::consts::SQRT_2) {
            return Err(JointError::InvalidDesign {
                what: "elbow tendon separation must satisfy 0 < d_e < 2R·sqrt(2)",
            });
        }
        if n_e < 1 {
            return Err(JointError::InvalidDesign {
                what: "elbow winding count must be at least 1",
            });
        }
        if !(r_capstan > 0.0) {
            return Err(JointError::InvalidDesign {
                what: "capstan radius must be positive",
            });
        }
        Ok(ElbowDesign {
            r,
            d_e,
            n_e,
            r_capstan,
            cable,
        })
    }
}

impl Default for ElbowDesign {
    /// Production values: R = 45 mm, d_e = 48√2 mm, N_e = 6, R_capstan = 11 mm.
    fn default() -> Self {
        ElbowDesign {
            r: 45.0,
            d_e: 48.0 * std::f64::consts::SQRT_2,
            n_e: 6,
            r_capstan: 11.0,
            cable: CableSpec::default(),
        }
    }
}

/// Wrist design parameters: the 2-DOF rolling bend plus the geared roll axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WristDesign {
    /// Tendon anchor offset from the wrist center, mm.
    pub w: f64,
    /// Platform separation along the rolling axis, mm. Configurable; the
    /// bend-transform translation scales with it.
    pub h: f64,
    /// TAT winding count of the bend tendons.
    pub n_w: u32,
    /// Planetary gear ratio of the roll drive.
    pub n_r: f64,
    /// Motor capstan radius of the bend tendons, mm.
    pub r_capstan: f64,
    /// Roll-drive capstan radius, mm.
    pub r_capstan_roll: f64,
    pub cable: CableSpec,
}

impl WristDesign {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        w: f64,
        h: f64,
        n_w: u32,
        n_r: f64,
        r_capstan: f64,
        r_capstan_roll: f64,
        cable: CableSpec,
    ) -> Result<Self, JointError> {
        if !(w > 0.0) || !(h > 0.0) {
            return Err(JointError::InvalidDesign {
                what: "wrist tendon offset and platform separation must be positive",
            });
        }
        if n_w < 1 {
            return Err(JointError::InvalidDesign {
                what: "wrist winding count must be at least 1",
            });
        }
        if !(n_r >= 1.0) {
            return Err(JointError::InvalidDesign {
                what: "roll gear ratio must be at least 1",
            });
        }
        if !(r_capstan > 0.0) || !(r_capstan_roll > 0.0) {
            return Err(JointError::InvalidDesign {
                what: "capstan radii must be positive",
            });
        }
        Ok(WristDesign {
            w,
            h,
            n_w,
            n_r,
            r_capstan,
            r_capstan_roll,
            cable,
        })
    }
}

impl Default for WristDesign {
    /// Production values: w = 40 mm, N_w = 4, N_r = 5, R_capstan = 11 mm,
    /// roll capstan 25 mm. h = 80 mm default (configurable).
    fn default() -> Self {
        WristDesign {
            w: 40.0,
            h: 80.0,
            n_w: 4,
            n_r: 5.0,
            r_capstan: 11.0,
            r_capstan_roll: 25.0,
            cable: CableSpec::default(),
        }
    }
}

/// Full joint pose of the arm's driven joints: the elbow bend, the wrist
/// bend (magnitude + direction), and the roll angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointState {
    /// Elbow bend, rad, within ±π/4.
    pub elbow_theta: f64,
    /// Wrist bend magnitude, rad, ≥ 0 (direction carried by `wrist_phi`).
    pub wrist_theta: f64,
    /// Wrist bend direction, rad.
    pub wrist_phi: f64,
    /// Roll angle, rad, within ±π.
    pub roll: f64,
}

impl JointState {
    pub fn new(
        elbow_theta: f64,
        wrist_theta: f64,
        wrist_phi: f64,
        roll: f64,
    ) -> Result<Self, JointError> {
        if elbow_theta.abs() > ELBOW_RANGE {
            return Err(JointError::OutOfRange {
                joint: "elbow",
                value: elbow_theta,
                limit: ELBOW_RANGE,
            });
        }
        if !(wrist_theta >= 0.0) || wrist_theta > WRIST_BEND_RANGE * std::f64::consts::SQRT_2 {
            return Err(JointError::OutOfRange {
                joint: "wrist bend",
                value: wrist_theta,
                limit: WRIST_BEND_RANGE * std::f64::consts::SQRT_2,
            });
        }
        if roll.abs() > ROLL_RANGE {
            return Err(JointError::OutOfRange {
                joint: "roll",
                value: roll,
                limit: ROLL_RANGE,
            });
        }
        Ok(JointState {
            elbow_theta,
            wrist_theta,
            wrist_phi,
            roll,
        })
    }
}

/// Joint-model errors.
#[derive(Debug, thiserror::Error)]
pub enum JointError {
    #[error("invalid joint design: {what}")]
    InvalidDesign { what: &'static str },
    #[error("motor torque must be non-negative, got {value}")]
    NegativeTorque { value: f64 },
    #[error("{joint} angle {value:.4} rad exceeds ±{limit:.4} rad")]
    OutOfRange {
        joint: &'static str,
        value: f64,
        limit: f64,
    },
    #[error("joint geometry violated: {what}")]
    Geometry { what: &'static str },
}

/// Total pulling force of a tendon wound `n` times, driven by a motor torque
/// (N·mm) through a capstan of radius `r_capstan` (mm):
/// `T = N·τ_motor/R_capstan`.
pub fn tat_output_force(tau_motor: f64, n: u32, r_capstan: f64) -> Result<f64, JointError> {
    if tau_motor < 0.0 {
        return Err(JointError::NegativeTorque { value: tau_motor });
    }
    Ok(f64::from(n) * tau_motor / r_capstan)
}

/// Effective tendon stiffness after `n` windings: `N²·E_cable`.
pub fn tat_stiffness(cable_stiffness: f64, n: u32) -> f64 {
    let n = f64::from(n);
    n * n * cable_stiffness
}

/// Tension difference available at a joint: the motor tension clamped by the
/// cable's working limit.
fn tension_delta(tau_motor: f64, r_capstan: f64, cable: &CableSpec) -> f64 {
    (tau_motor / r_capstan).min(cable.max_tension)
}

/// Agonist and antagonist tendon lengths of the elbow at bend `theta`:
/// `L_ago = N_e(2R − d_e·sin(θ/2))`, `L_ant = N_e(2R + d_e·sin(θ/2))`.
///
/// Errors when the agonist length would be non-positive (the design's
/// slack-free assumption is violated).
pub fn elbow_tendon_lengths(theta: f64, d: &ElbowDesign) -> Result<(f64, f64), JointError> {
    let n = f64::from(d.n_e);
    let half = d.d_e * (theta / 2.0).sin();
    let ago = n * (2.0 * d.r - half);
    let ant = n * (2.0 * d.r + half);
    if ago <= 0.0 {
        return Err(JointError::Geometry {
            what: "agonist tendon length is non-positive",
        });
    }
    Ok((ago, ant))
}

/// Length changes of the elbow tendon pair from the straight pose:
/// `ΔL_ago = −N_e·d_e·sin(θ/2)`, `ΔL_ant = +N_e·d_e·sin(θ/2)`.
/// The two deltas cancel exactly for every bend angle.
pub fn elbow_tendon_deltas(theta: f64, d: &ElbowDesign) -> (f64, f64) {
    let delta = f64::from(d.n_e) * d.d_e * (theta / 2.0).sin();
    (-delta, delta)
}

/// Pose of the elbow's moving end relative to its fixed end:
/// `Rot(Z, θ/2)·Trans(X, 2R)·Rot(Z, θ/2)`, i.e. a rotation by θ about z with
/// translation `(2R·cos(θ/2), 2R·sin(θ/2), 0)`.
pub fn elbow_transform(theta: f64, r: f64) -> Transform {
    let (s_half, c_half) = (theta / 2.0).sin_cos();
    Transform::new(
        Rot3::rot_z(theta),
        Vector3::new(2.0 * r * c_half, 2.0 * r * s_half, 0.0),
    )
}

/// Same pose assembled from its three factors; retained as the slow route
/// for validating the closed form.
pub fn elbow_transform_composed(theta: f64, r: f64) -> Transform {
    let half = Transform::rotation(Rot3::rot_z(theta / 2.0));
    let push = Transform::translation(Vector3::new(2.0 * r, 0.0, 0.0));
    compose(&compose(&half, &push), &half)
}

/// Output torque of the elbow (N·mm):
/// `τ = (N_e·d_e/2)·cos(θ/2)·ΔT`, `ΔT = min(T_max, τ_motor/R_capstan)`.
pub fn elbow_torque(theta: f64, tau_motor: f64, d: &ElbowDesign) -> Result<f64, JointError> {
    if tau_motor < 0.0 {
        return Err(JointError::NegativeTorque { value: tau_motor });
    }
    let dt = tension_delta(tau_motor, d.r_capstan, &d.cable);
    Ok(f64::from(d.n_e) * d.d_e / 2.0 * (theta / 2.0).cos() * dt)
}

/// Rotational stiffness of the elbow (N·mm/rad):
/// `k = (N_e·d_e·cos(θ/2))²·EA·R / (4R² − d_e²·sin²(θ/2))`.
pub fn elbow_stiffness(theta: f64, d: &ElbowDesign) -> Result<f64, JointError> {
    let s_half = (theta / 2.0).sin();
    let denom = 4.0 * d.r * d.r - d.d_e * d.d_e * s_half * s_half;
    if denom <= 0.0 {
        return Err(JointError::Geometry {
            what: "elbow stiffness denominator 4R² − d_e²·sin²(θ/2) is non-positive",
        });
    }
    let lever = f64::from(d.n_e) * d.d_e * (theta / 2.0).cos();
    Ok(lever * lever * d.cable.axial_stiffness * d.r / denom)
}

/// Pose of the wrist's moving platform for a bend of magnitude `theta` in
/// the direction `phi`: `Rot(Z,φ)·Rot(Y,θ/2)·Trans(Z,h)·Rot(Y,θ/2)·Rot(Z,−φ)`.
pub fn wrist_transform(phi: f64, theta: f64, h: f64) -> Transform {
    let rz = Transform::rotation(Rot3::rot_z(phi));
    let ry = Transform::rotation(Rot3::rot_y(theta / 2.0));
    let tz = Transform::translation(Vector3::new(0.0, 0.0, h));
    let rz_inv = Transform::rotation(Rot3::rot_z(-phi));
    compose(&compose(&compose(&compose(&rz, &ry), &tz), &ry), &rz_inv)
}

/// Closed-form entries of [`wrist_transform`] (rotation by θ about the
/// in-plane axis `(−sinφ, cosφ, 0)` with the rolled translation).
pub fn wrist_transform_closed_form(phi: f64, theta: f64, h: f64) -> Transform {
    let (s_phi, c_phi) = phi.sin_cos();
    let (s_th, c_th) = theta.sin_cos();
    let s_half = (theta / 2.0).sin();
    let c_half = (theta / 2.0).cos();
    let s2 = s_half * s_half;
    let rot = nalgebra::Matrix3::new(
        1.0 - 2.0 * c_phi * c_phi * s2,
        -(2.0 * phi).sin() * s2,
        c_phi * s_th,
        -(2.0 * phi).sin() * s2,
        1.0 - 2.0 * s_phi * s_phi * s2,
        s_phi * s_th,
        -c_phi * s_th,
        -s_phi * s_th,
        c_th,
    );
    Transform::new(
        Rot3::from_matrix_unchecked(rot),
        Vector3::new(h * c_phi * s_half, h * s_phi * s_half, h * c_half),
    )
}

/// Coupled-pair tendon length changes of the wrist bend:
/// `ΔL_pitch = 2·N_w·w·cos(φ)·sin(θ/2)`, `ΔL_yaw = 2·N_w·w·sin(φ)·sin(θ/2)`.
/// Positive means the tendon anchored on the +x / +y side shortens.
pub fn wrist_tendon_deltas(phi: f64, theta: f64, d: &WristDesign) -> (f64, f64) {
    let scale = 2.0 * f64::from(d.n_w) * d.w * (theta / 2.0).sin();
    (scale * phi.cos(), scale * phi.sin())
}

/// Straight-line chord lengths of the four bend tendons, anchors at
/// `(±w,0,0)` and `(0,±w,0)` on both platforms, scaled by the winding count.
/// Order: `[p1(+x), p2(−x), y1(+y), y2(−y)]`.
///
/// This is a chord model used to cross-validate the coupled-pair deltas; the
/// two agree within 2% for bends up to π/4.
pub fn wrist_tendon_lengths_geometric(phi: f64, theta: f64, d: &WristDesign) -> [f64; 4] {
    let t = wrist_transform(phi, theta, d.h);
    let n = f64::from(d.n_w);
    let anchors = [
        Vector3::new(d.w, 0.0, 0.0),
        Vector3::new(-d.w, 0.0, 0.0),
        Vector3::new(0.0, d.w, 0.0),
        Vector3::new(0.0, -d.w, 0.0),
    ];
    let mut lengths = [0.0; 4];
    for (len, anchor) in lengths.iter_mut().zip(anchors.iter()) {
        *len = n * (anchor - crate::spatial::apply(&t, anchor)).norm();
    }
    lengths
}

/// Combined output torque of the 2-DOF wrist bend (N·mm):
/// `τ = N_w·w·cos(θ/2)·(ΔT_pitch·|sinφ| + ΔT_yaw·|cosφ|)`.
pub fn wrist2dof_torque(
    phi: f64,
    theta: f64,
    motor_torques: (f64, f64),
    d: &WristDesign,
) -> Result<f64, JointError> {
    let (tau_pitch, tau_yaw) = motor_torques;
    if tau_pitch < 0.0 {
        return Err(JointError::NegativeTorque { value: tau_pitch });
    }
    if tau_yaw < 0.0 {
        return Err(JointError::NegativeTorque { value: tau_yaw });
    }
    let dt_pitch = tension_delta(tau_pitch, d.r_capstan, &d.cable);
    let dt_yaw = tension_delta(tau_yaw, d.r_capstan, &d.cable);
    Ok(f64::from(d.n_w)
        * d.w
        * (theta / 2.0).cos()
        * (dt_pitch * phi.sin().abs() + dt_yaw * phi.cos().abs()))
}

/// Bend stiffness of the 2-DOF wrist (N·mm/rad), independent of the bend
/// direction: `k = 2·N_w²·w²·cos²(θ/2)·EA`.
pub fn wrist2dof_stiffness(theta: f64, d: &WristDesign) -> f64 {
    let n = f64::from(d.n_w);
    let c_half = (theta / 2.0).cos();
    2.0 * n * n * d.w * d.w * c_half * c_half * d.cable.axial_stiffness
}

/// Roll-axis output torque and stiffness through the planetary reduction:
/// `τ = N_r·R_roll·ΔT` with `ΔT = min(T_max, τ_motor/R_capstan)`, and
/// `k = 2·(N_r·R_roll)²·EA`. With `N_r = 1` this is the plain cable-capstan
/// drive.
pub fn wrist_roll_torque_stiffness(
    tau_motor: f64,
    d: &WristDesign,
) -> Result<(f64, f64), JointError> {
    if tau_motor < 0.0 {
        return Err(JointError::NegativeTorque { value: tau_motor });
    }
    let dt = tension_delta(tau_motor, d.r_capstan, &d.cable);
    let lever = d.n_r * d.r_capstan_roll;
    Ok((lever * dt, 2.0 * lever * lever * d.cable.axial_stiffness))
}
