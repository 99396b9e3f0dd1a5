//! Full-arm kinematics: the 7-row modified-DH chain with virtual coupled
//! joints, forward kinematics, geometric Jacobians, end-effector state in
//! the inertial frame, and workspace sampling under three UAV-freedom modes.
//!
//! The chain has seven revolute rows driven by only four independent angles:
//! rows 1–2 share the elbow angle, rows 3 and 6 share the wrist pitch
//! component, rows 4–5 share the wrist yaw component, and row 7 is the roll.
//! Link parameters follow the modified (Craig) convention, lengths in
//! millimeters.

use crate::spatial::{compose, skew, Rot3, Transform};
use crate::MM_TO_M;
use nalgebra::{SMatrix, Vector3};
use rayon::prelude::*;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// Number of chain rows.
pub const NUM_ROWS: usize = 7;
/// Number of independent joint angles.
pub const NUM_JOINTS: usize = 4;

/// Independent joint limits: bend joints ±π/4, roll ±π.
pub const JOINT_LIMITS: [f64; NUM_JOINTS] = [FRAC_PI_4, FRAC_PI_4, FRAC_PI_4, PI];

/// One modified-DH row. The row's joint angle is
/// `θ_i = q[driver] + theta_offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MdhRow {
    /// Constant added to the driving independent angle, rad.
    pub theta_offset: f64,
    /// Link offset along the joint axis, mm.
    pub d: f64,
    /// Link length `a_{i−1}`, mm.
    pub a_prev: f64,
    /// Link twist `α_{i−1}`, rad.
    pub alpha_prev: f64,
    /// Index of the driving independent angle (0-based, 0..4).
    pub driver: usize,
}

impl MdhRow {
    /// Pose contribution of this row at joint angle `theta`:
    /// `Rot(X, α_{i−1})·Trans(X, a_{i−1})·Rot(Z, θ_i)·Trans(Z, d_i)`.
    pub fn transform(&self, theta: f64) -> Transform {
        let rot_x = Rot3::rot_x(self.alpha_prev);
        let rot_z = Rot3::rot_z(theta);
        Transform::new(
            rot_x.compose(&rot_z),
            rot_x.apply(&Vector3::new(self.a_prev, 0.0, self.d)),
        )
    }
}

/// The 4 independent joint angles, radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointVector(pub [f64; NUM_JOINTS]);

impl JointVector {
    pub fn zero() -> Self {
        JointVector([0.0; NUM_JOINTS])
    }

    pub fn new(q: [f64; NUM_JOINTS]) -> Result<Self, ArmError> {
        check_limits(&q)?;
        Ok(JointVector(q))
    }

    /// Skips the range check; used by over-range replication scenarios.
    pub fn new_unchecked(q: [f64; NUM_JOINTS]) -> Self {
        JointVector(q)
    }
}

fn check_limits(q: &[f64; NUM_JOINTS]) -> Result<(), ArmError> {
    for (i, (&angle, &limit)) in q.iter().zip(JOINT_LIMITS.iter()).enumerate() {
        if !angle.is_finite() || angle.abs() > limit + 1e-12 {
            return Err(ArmError::JointOutOfRange {
                joint: i + 1,
                value: angle,
                limit,
            });
        }
    }
    Ok(())
}

/// Arm kinematic chain: the 7 MD-H rows plus the pose of the arm base in
/// the UAV body frame.
#[derive(Debug, Clone, PartialEq)]
pub struct ArmChain {
    pub rows: [MdhRow; NUM_ROWS],
    /// Arm base in the UAV body frame (translation in mm).
    pub base_offset: Transform,
}

impl Default for ArmChain {
    /// Production MD-H table. `a₂ = 1 mm` is a real design offset, kept
    /// verbatim.
    fn default() -> Self {
        let rows = [
            MdhRow {
                theta_offset: 0.0,
                d: 0.0,
                a_prev: 200.0,
                alpha_prev: 0.0,
                driver: 0,
            },
            MdhRow {
                theta_offset: FRAC_PI_2,
                d: 0.0,
                a_prev: 80.0,
                alpha_prev: 0.0,
                driver: 0,
            },
            MdhRow {
                theta_offset: 0.0,
                d: 300.0,
                a_prev: 1.0,
                alpha_prev: FRAC_PI_2,
                driver: 1,
            },
            MdhRow {
                theta_offset: -FRAC_PI_2,
                d: 0.0,
                a_prev: 0.0,
                alpha_prev: -FRAC_PI_2,
                driver: 2,
            },
            MdhRow {
                theta_offset: FRAC_PI_2,
                d: 0.0,
                a_prev: 90.0,
                alpha_prev: 0.0,
                driver: 2,
            },
            MdhRow {
                theta_offset: 0.0,
                d: 0.0,
                a_prev: 0.0,
                alpha_prev: FRAC_PI_2,
                driver: 1,
            },
            MdhRow {
                theta_offset: 0.0,
                d: 100.0,
                a_prev: 0.0,
                alpha_prev: 0.0,
                driver: 3,
            },
        ];
        ArmChain {
            rows,
            // Arm base 90 mm below the UAV COM (body z points down).
            base_offset: Transform::translation(Vector3::new(0.0, 0.0, 90.0)),
        }
    }
}

impl ArmChain {
    /// Expands the 4 independent angles to the 7 chain angles:
    /// `(θ̄₁, θ̄₁+π/2, θ̄₂, θ̄₃−π/2, θ̄₃+π/2, θ̄₂, θ̄₄)`.
    pub fn expand_joints(&self, q: &JointVector) -> Result<[f64; NUM_ROWS], ArmError> {
        check_limits(&q.0)?;
        Ok(self.expand_joints_unchecked(q))
    }

    /// Expansion without the range check (over-range replication scenarios).
    pub fn expand_joints_unchecked(&self, q: &JointVector) -> [f64; NUM_ROWS] {
        let mut angles = [0.0; NUM_ROWS];
        for (angle, row) in angles.iter_mut().zip(self.rows.iter()) {
            *angle = q.0[row.driver] + row.theta_offset;
        }
        angles
    }

    /// Pose of every chain frame in the UAV body frame, index 0 = arm base,
    /// index i = frame after row i. Translations in mm.
    pub fn frame_poses(&self, q: &JointVector) -> [Transform; NUM_ROWS + 1] {
        let angles = self.expand_joints_unchecked(q);
        let mut poses = [Transform::identity(); NUM_ROWS + 1];
        poses[0] = self.base_offset;
        for i in 0..NUM_ROWS {
            poses[i + 1] = compose(&poses[i], &self.rows[i].transform(angles[i]));
        }
        poses
    }

    /// End-effector pose in the UAV body frame (translation in mm).
    pub fn forward_kinematics(&self, q: &JointVector) -> Result<Transform, ArmError> {
        check_limits(&q.0)?;
        Ok(self.forward_kinematics_unchecked(q))
    }

    /// FK without the range check.
    pub fn forward_kinematics_unchecked(&self, q: &JointVector) -> Transform {
        self.frame_poses(q)[NUM_ROWS]
    }

    /// Geometric Jacobians mapping independent joint rates to end-effector
    /// linear (mm/s) and angular (rad/s) velocity in the UAV body frame.
    /// Coupled rows contribute to their shared column by the chain rule.
    pub fn jacobians(&self, q: &JointVector) -> (SMatrix<f64, 3, 4>, SMatrix<f64, 3, 4>) {
        let poses = self.frame_poses(q);
        let p_end = poses[NUM_ROWS].trans;
        let mut j_v = SMatrix::<f64, 3, 4>::zeros();
        let mut j_w = SMatrix::<f64, 3, 4>::zeros();
        for (i, row) in self.rows.iter().enumerate() {
            let frame = &poses[i + 1];
            let axis = frame.rot.apply(&Vector3::z());
            let arm = p_end - frame.trans;
            let lin = axis.cross(&arm);
            for k in 0..3 {
                j_v[(k, row.driver)] += lin[k];
                j_w[(k, row.driver)] += axis[k];
            }
        }
        (j_v, j_w)
    }

    /// Conservative reach bound from the arm base, mm: `Σ(|a_i| + |d_i|)`.
    pub fn reach_bound(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.a_prev.abs() + r.d.abs())
            .sum()
    }
}

/// End-effector state in the inertial frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndEffectorState {
    /// Position, m.
    pub position: Vector3<f64>,
    /// Linear velocity, m/s.
    pub velocity: Vector3<f64>,
    /// Angular velocity, rad/s.
    pub angular_velocity: Vector3<f64>,
}

/// UAV pose and twist used to transport the end-effector state into the
/// inertial frame. SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UavState {
    /// UAV COM position in the inertial frame, m.
    pub position: Vector3<f64>,
    /// UAV COM velocity in the inertial frame, m/s.
    pub velocity: Vector3<f64>,
    /// Body-to-inertial rotation.
    pub rotation: Rot3,
    /// Angular velocity in the inertial frame, rad/s.
    pub angular_velocity: Vector3<f64>,
}

/// End-effector position, velocity, and angular velocity in the inertial
/// frame:
///
/// ```text
/// p_E = p_B + R·ᴮp_E
/// ṗ_E = ṗ_B − skew(R·ᴮp_E)·ω_B + R·ᴮṗ_E        ᴮṗ_E = J_v·q̇
/// ω_E = ω_B + R·J_w·q̇
/// ```
pub fn end_effector_inertial(
    uav: &UavState,
    chain: &ArmChain,
    q: &JointVector,
    qdot: &[f64; NUM_JOINTS],
) -> EndEffectorState {
    let (j_v, j_w) = chain.jacobians(q);
    let qdot_v = nalgebra::SVector::<f64, 4>::from_column_slice(qdot);
    let p_body = chain.forward_kinematics_unchecked(q).trans * MM_TO_M;
    let v_body = j_v * qdot_v * MM_TO_M;
    let w_body = j_w * qdot_v;
    let r = &uav.rotation;
    EndEffectorState {
        position: uav.position + r.apply(&p_body),
        velocity: uav.velocity - skew(&r.apply(&p_body)) * uav.angular_velocity
            + r.apply(&v_body),
        angular_velocity: uav.angular_velocity + r.apply(&w_body),
    }
}

/// UAV freedom modes for workspace analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WorkspaceMode {
    /// UAV fixed in hover.
    Hover,
    /// Hover at a fixed point with free yaw.
    HoverYaw,
    /// Free yaw plus motion along the gravity axis within ±`vertical_range`.
    YawVertical {
        /// Half-range of vertical motion, m.
        vertical_range: f64,
    },
}

/// Grid resolution for workspace sampling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleResolution {
    /// Samples per joint axis.
    pub joint: usize,
    /// Yaw samples over [−π, π] (modes 2–3).
    pub yaw: usize,
    /// Vertical samples over ±vertical_range (mode 3).
    pub vertical: usize,
}

impl Default for SampleResolution {
    fn default() -> Self {
        SampleResolution {
            joint: 17,
            yaw: 25,
            vertical: 11,
        }
    }
}

/// Arm-kinematics errors.
#[derive(Debug, thiserror::Error)]
pub enum ArmError {
    #[error("joint {joint} angle {value:.4} rad exceeds ±{limit:.4} rad")]
    JointOutOfRange {
        joint: usize,
        value: f64,
        limit: f64,
    },
    #[error("workspace sampling needs at least 2 samples per axis, got {got}")]
    ResolutionTooCoarse { got: usize },
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| lo + step * i as f64).collect()
}

/// Samples the end-effector workspace on a joint-range grid, returning
/// positions in meters in the world frame (UAV COM at the origin). Modes 2
/// and 3 add the yaw and vertical freedoms as rigid copies of the hover
/// cloud, which is what the extra UAV freedoms do physically.
pub fn workspace_sample(
    chain: &ArmChain,
    mode: WorkspaceMode,
    res: &SampleResolution,
) -> Result<Vec<Vector3<f64>>, ArmError> {
    if res.joint < 2 {
        return Err(ArmError::ResolutionTooCoarse { got: res.joint });
    }
    let axes: Vec<Vec<f64>> = JOINT_LIMITS
        .iter()
        .map(|&lim| linspace(-lim, lim, res.joint))
        .collect();

    let mut configs = Vec::with_capacity(res.joint.pow(4));
    for &q1 in &axes[0] {
        for &q2 in &axes[1] {
            for &q3 in &axes[2] {
                for &q4 in &axes[3] {
                    configs.push(JointVector([q1, q2, q3, q4]));
                }
            }
        }
    }
    let hover: Vec<Vector3<f64>> = configs
        .par_iter()
        .map(|q| chain.forward_kinematics_unchecked(q).trans * MM_TO_M)
        .collect();

    let cloud = match mode {
        WorkspaceMode::Hover => hover,
        WorkspaceMode::HoverYaw => {
            if res.yaw < 2 {
                return Err(ArmError::ResolutionTooCoarse { got: res.yaw });
            }
            let yaws = linspace(-PI, PI, res.yaw);
            let mut cloud = Vec::with_capacity(hover.len() * yaws.len());
            for &yaw in &yaws {
                let r = Rot3::rot_z(yaw);
                cloud.extend(hover.iter().map(|p| r.apply(p)));
            }
            cloud
        }
        WorkspaceMode::YawVertical { vertical_range } => {
            if res.yaw < 2 || res.vertical < 2 {
                return Err(ArmError::ResolutionTooCoarse {
                    got: res.yaw.min(res.vertical),
                });
            }
            if !(vertical_range > 0.0) {
                return Err(ArmError::ResolutionTooCoarse { got: 0 });
            }
            let yaws = linspace(-PI, PI, res.yaw);
            let heights = linspace(-vertical_range, vertical_range, res.vertical);
            let mut cloud = Vec::with_capacity(hover.len() * yaws.len() * heights.len());
            for &z in &heights {
                let lift = Vector3::new(0.0, 0.0, z);
                for &yaw in &yaws {
                    let r = Rot3::rot_z(yaw);
                    cloud.extend(hover.iter().map(|p| r.apply(p) + lift));
                }
            }
            cloud
        }
    };
    Ok(cloud)
}

/// FK of a sweep over one joint, other joints fixed; used by the CLI.
pub fn sweep_joint(
    chain: &ArmChain,
    base_q: &JointVector,
    joint: usize,
    resolution: usize,
) -> Result<Vec<(f64, Transform)>, ArmError> {
    if joint == 0 || joint > NUM_JOINTS {
        return Err(ArmError::JointOutOfRange {
            joint,
            value: f64::NAN,
            limit: 0.0,
        });
    }
    let lim = JOINT_LIMITS[joint - 1];
    Ok(linspace(-lim, lim, resolution + 1)
        .into_iter()
        .map(|angle| {
            let mut q = *base_q;
            q.0[joint - 1] = angle;
            (angle, chain.forward_kinematics_unchecked(&q))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use nalgebra::Matrix4;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(0xa2)
    }

    fn random_q(rng: &mut ChaCha8Rng) -> JointVector {
        JointVector([
            rng.gen_range(-FRAC_PI_4..FRAC_PI_4),
            rng.gen_range(-FRAC_PI_4..FRAC_PI_4),
            rng.gen_range(-FRAC_PI_4..FRAC_PI_4),
            rng.gen_range(-PI..PI),
        ])
    }

    /// Independent 4×4 homogeneous-matrix evaluation of the chain used as
    /// the FK oracle (does not share the Transform composition path).
    fn fk_oracle(chain: &ArmChain, q: &JointVector) -> Matrix4<f64> {
        let mut m = Matrix4::identity();
        m[(0, 3)] = chain.base_offset.trans.x;
        m[(1, 3)] = chain.base_offset.trans.y;
        m[(2, 3)] = chain.base_offset.trans.z;
        let angles = chain.expand_joints_unchecked(q);
        for (row, &theta) in chain.rows.iter().zip(angles.iter()) {
            let (sa, ca) = row.alpha_prev.sin_cos();
            let (st, ct) = theta.sin_cos();
            // Rot(X,α)·Trans(X,a)·Rot(Z,θ)·Trans(Z,d) as one 4×4.
            let link = Matrix4::new(
                ct,
                -st,
                0.0,
                row.a_prev,
                ca * st,
                ca * ct,
                -sa,
                -sa * row.d,
                sa * st,
                sa * ct,
                ca,
                ca * row.d,
                0.0,
                0.0,
                0.0,
                1.0,
            );
            m *= link;
        }
        m
    }

    #[test]
    fn expand_joints_zero_configuration() {
        let chain = ArmChain::default();
        let angles = chain.expand_joints(&JointVector::zero()).unwrap();
        let expected = [0.0, FRAC_PI_2, 0.0, -FRAC_PI_2, FRAC_PI_2, 0.0, 0.0];
        for (a, e) in angles.iter().zip(expected.iter()) {
            assert_eq!(a, e);
        }
    }

    #[test]
    fn expand_joints_offset_addition() {
        let chain = ArmChain::default();
        let angles = chain
            .expand_joints(&JointVector([FRAC_PI_4, 0.1, -0.2, 1.0]))
            .unwrap();
        assert_eq!(angles[0], FRAC_PI_4);
        assert_eq!(angles[1], FRAC_PI_4 + FRAC_PI_2);
    }

    #[test]
    fn expand_joints_coupled_rows_identical() {
        let chain = ArmChain::default();
        let mut rng = rng();
        for _ in 0..100 {
            let q = random_q(&mut rng);
            let angles = chain.expand_joints_unchecked(&q);
            // Rows 3 and 6 carry the same driver and offset, bitwise equal.
            assert_eq!(angles[2], angles[5]);
            assert_relative_eq!(angles[4] - angles[3], PI, epsilon = 1e-15);
        }
    }

    #[test]
    fn expand_joints_rejects_out_of_range() {
        let chain = ArmChain::default();
        let err = chain
            .expand_joints(&JointVector([0.0, 1.0, 0.0, 0.0]))
            .unwrap_err();
        match err {
            ArmError::JointOutOfRange { joint, .. } => assert_eq!(joint, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn fk_matches_matrix_product_oracle() {
        let chain = ArmChain::default();
        let mut rng = rng();
        for _ in 0..200 {
            let q = random_q(&mut rng);
            let t = chain.forward_kinematics(&q).unwrap();
            let oracle = fk_oracle(&chain, &q);
            for i in 0..3 {
                assert_abs_diff_eq!(t.trans[i], oracle[(i, 3)], epsilon = 1e-9);
                for j in 0..3 {
                    assert_abs_diff_eq!(t.rot.matrix()[(i, j)], oracle[(i, j)], epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn fk_rotation_stays_orthonormal() {
        let chain = ArmChain::default();
        let mut rng = rng();
        for _ in 0..200 {
            let q = random_q(&mut rng);
            let t = chain.forward_kinematics_unchecked(&q);
            assert!(t.rot.orthonormality_error() < 1e-9);
        }
    }

    #[test]
    fn roll_joint_spins_about_tool_axis_without_moving_tip() {
        let chain = ArmChain::default();
        let base = chain
            .forward_kinematics(&JointVector([0.1, -0.2, 0.3, 0.0]))
            .unwrap();
        for &roll in &[-2.0, -0.5, 1.0, 3.0] {
            let t = chain
                .forward_kinematics(&JointVector([0.1, -0.2, 0.3, roll]))
                .unwrap();
            assert_abs_diff_eq!(t.trans, base.trans, epsilon = 1e-9);
            // Tool z-axis unchanged by the roll.
            let z0 = base.rot.apply(&Vector3::z());
            let z1 = t.rot.apply(&Vector3::z());
            assert_abs_diff_eq!(z0, z1, epsilon = 1e-9);
        }
    }

    #[test]
    fn fk_respects_reach_bound() {
        let chain = ArmChain::default();
        let bound = chain.reach_bound() + chain.base_offset.trans.norm();
        let mut rng = rng();
        for _ in 0..500 {
            let q = random_q(&mut rng);
            let t = chain.forward_kinematics_unchecked(&q);
            assert!(t.trans.norm() <= bound + 1e-9);
        }
    }

    #[test]
    fn jacobians_match_central_differences() {
        let chain = ArmChain::default();
        let mut rng = rng();
        let eps = 1e-6;
        for _ in 0..100 {
            let q = random_q(&mut rng);
            let (j_v, j_w) = chain.jacobians(&q);
            let scale = j_v.amax().max(1.0);
            for k in 0..NUM_JOINTS {
                let mut qp = q;
                let mut qm = q;
                qp.0[k] += eps;
                qm.0[k] -= eps;
                let tp = chain.forward_kinematics_unchecked(&qp);
                let tm = chain.forward_kinematics_unchecked(&qm);
                let v_fd = (tp.trans - tm.trans) / (2.0 * eps);
                for i in 0..3 {
                    assert_abs_diff_eq!(j_v[(i, k)], v_fd[i], epsilon = 1e-6 * scale);
                }
                // Angular columns from the antisymmetric part of Ṙ·Rᵀ.
                let t0 = chain.forward_kinematics_unchecked(&q);
                let dr = (tp.rot.matrix() - tm.rot.matrix()) / (2.0 * eps);
                let w_fd = crate::spatial::vee(&(dr * t0.rot.matrix().transpose()));
                for i in 0..3 {
                    assert_abs_diff_eq!(j_w[(i, k)], w_fd[i], epsilon = 1e-6);
                }
            }
        }
    }

    #[test]
    fn jacobian_roll_column_is_tool_axis() {
        let chain = ArmChain::default();
        let q = JointVector([0.1, 0.2, -0.15, 0.8]);
        let (j_v, j_w) = chain.jacobians(&q);
        let tool_z = chain
            .forward_kinematics_unchecked(&q)
            .rot
            .apply(&Vector3::z());
        for i in 0..3 {
            assert_abs_diff_eq!(j_w[(i, 3)], tool_z[i], epsilon = 1e-12);
            assert_abs_diff_eq!(j_v[(i, 3)], 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn jacobian_linear_rank_at_zero_is_two() {
        // Measured via SVD and frozen: the position Jacobian at q = 0 has
        // rank 2, not 3. The coupled wrist-pitch rows cancel to first order
        // at the straight pose (verified by central differences, which give
        // an exactly zero column), and the roll column is structurally zero,
        // so only two independent translation directions remain.
        let chain = ArmChain::default();
        let (j_v, _) = chain.jacobians(&JointVector::zero());
        let svd = j_v.svd(false, false);
        let max_sv = svd.singular_values.max();
        let rank = svd
            .singular_values
            .iter()
            .filter(|&&s| s > 1e-10 * max_sv)
            .count();
        assert_eq!(rank, 2);

        // Away from the straight pose the deficiency disappears.
        let (j_v, _) = chain.jacobians(&JointVector([0.1, 0.2, -0.15, 0.4]));
        let svd = j_v.svd(false, false);
        let max_sv = svd.singular_values.max();
        let rank = svd
            .singular_values
            .iter()
            .filter(|&&s| s > 1e-10 * max_sv)
            .count();
        assert_eq!(rank, 3);
    }

    #[test]
    fn end_effector_static_everything() {
        let chain = ArmChain::default();
        let uav = UavState {
            position: Vector3::new(1.0, 2.0, -3.0),
            velocity: Vector3::zeros(),
            rotation: Rot3::identity(),
            angular_velocity: Vector3::zeros(),
        };
        let s = end_effector_inertial(&uav, &chain, &JointVector::zero(), &[0.0; 4]);
        assert_abs_diff_eq!(s.velocity, Vector3::zeros(), epsilon = 1e-15);
        assert_abs_diff_eq!(s.angular_velocity, Vector3::zeros(), epsilon = 1e-15);
        let fk = chain.forward_kinematics_unchecked(&JointVector::zero());
        assert_abs_diff_eq!(s.position, uav.position + fk.trans * MM_TO_M, epsilon = 1e-12);
    }

    #[test]
    fn end_effector_pure_translation_transport() {
        let chain = ArmChain::default();
        let uav = UavState {
            position: Vector3::zeros(),
            velocity: Vector3::new(0.4, -0.1, 0.7),
            rotation: Rot3::identity(),
            angular_velocity: Vector3::zeros(),
        };
        let s = end_effector_inertial(&uav, &chain, &JointVector::zero(), &[0.0; 4]);
        assert_abs_diff_eq!(s.velocity, uav.velocity, epsilon = 1e-15);
    }

    #[test]
    fn end_effector_pure_yaw_velocity_magnitude() {
        let chain = ArmChain::default();
        let omega = 0.8;
        let uav = UavState {
            position: Vector3::zeros(),
            velocity: Vector3::zeros(),
            rotation: Rot3::identity(),
            angular_velocity: Vector3::new(0.0, 0.0, omega),
        };
        let q = JointVector([0.1, 0.05, -0.1, 0.3]);
        let s = end_effector_inertial(&uav, &chain, &q, &[0.0; 4]);
        let p = chain.forward_kinematics_unchecked(&q).trans * MM_TO_M;
        let horizontal = (p.x * p.x + p.y * p.y).sqrt();
        assert_relative_eq!(s.velocity.norm(), omega * horizontal, epsilon = 1e-12);
    }

    #[test]
    fn workspace_mode_containment_and_reach() {
        let chain = ArmChain::default();
        let res = SampleResolution {
            joint: 5,
            yaw: 9,
            vertical: 5,
        };
        let hover = workspace_sample(&chain, WorkspaceMode::Hover, &res).unwrap();
        let hover_yaw = workspace_sample(&chain, WorkspaceMode::HoverYaw, &res).unwrap();
        let full = workspace_sample(
            &chain,
            WorkspaceMode::YawVertical {
                vertical_range: 0.5,
            },
            &res,
        )
        .unwrap();
        assert_eq!(hover.len(), 5usize.pow(4));
        assert_eq!(hover_yaw.len(), hover.len() * 9);
        assert_eq!(full.len(), hover.len() * 9 * 5);

        let contains = |cloud: &[Vector3<f64>], p: &Vector3<f64>| {
            cloud.iter().any(|c| (c - p).norm() < 1e-9)
        };
        for p in hover.iter().step_by(37) {
            assert!(contains(&hover_yaw, p));
        }
        for p in hover_yaw.iter().step_by(331) {
            assert!(contains(&full, p));
        }

        let bound =
            (chain.reach_bound() + chain.base_offset.trans.norm()) * MM_TO_M + 0.5 + 1e-9;
        for p in &full {
            assert!(p.norm() <= bound);
        }
    }

    #[test]
    fn workspace_hover_yaw_rotation_symmetric() {
        // Rotating the cloud by one yaw-grid step maps it onto itself.
        let chain = ArmChain::default();
        let res = SampleResolution {
            joint: 4,
            yaw: 9,
            vertical: 2,
        };
        let cloud = workspace_sample(&chain, WorkspaceMode::HoverYaw, &res).unwrap();
        let step = 2.0 * PI / 8.0;
        let r = Rot3::rot_z(step);
        for p in cloud.iter().step_by(11) {
            let rotated = r.apply(p);
            let nearest = cloud
                .iter()
                .map(|c| (c - rotated).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-9, "rotated point {rotated:?} missing");
        }
    }

    #[test]
    fn workspace_rejects_coarse_resolution() {
        let chain = ArmChain::default();
        let res = SampleResolution {
            joint: 1,
            yaw: 9,
            vertical: 3,
        };
        assert!(matches!(
            workspace_sample(&chain, WorkspaceMode::Hover, &res),
            Err(ArmError::ResolutionTooCoarse { .. })
        ));
    }

    #[test]
    fn sweep_has_resolution_plus_one_rows() {
        let chain = ArmChain::default();
        let rows = sweep_joint(&chain, &JointVector::zero(), 2, 16).unwrap();
        assert_eq!(rows.len(), 17);
        assert!(sweep_joint(&chain, &JointVector::zero(), 5, 16).is_err());
    }
}
