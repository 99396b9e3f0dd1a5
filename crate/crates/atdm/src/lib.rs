//! Modeling and simulation toolkit for an aerial tendon-driven manipulator:
//! a hexrotor UAV carrying a 4-DOF anthropomorphic arm whose actuators all
//! sit at the base.
//!
//! The crate is organized around the physical subsystems:
//!
//! - [`spatial`] — minimal 3-D spatial math (rotations, homogeneous
//!   transforms, screws, integration on the rotation group).
//! - [`joints`] — tension-amplification tendon (TAT) mechanics and the
//!   closed-form kinematics, torque, and stiffness of the rolling elbow and
//!   wrist joints.
//! - [`arm`] — the full 7-row MD-H chain with virtual coupled joints,
//!   forward kinematics, geometric Jacobians, and workspace sampling.
//! - [`dynamics`] — rigid-body dynamics of the combined system, COM and
//!   inertia aggregation, the coupling-disturbance wrench, and an
//!   independent momentum-based disturbance oracle.
//! - [`sim`] — scenario harness: sinusoidal joint trajectories, a plain
//!   hover controller, MAV/RMSV metrics, and base-mounted vs joint-mounted
//!   actuator comparison tables.
//! - [`linkage`] — screw-system analysis of the antiparallelogram wrist
//!   linkage and the constrained circle-approximation fit.
//! - [`config`] — JSON configuration document and run manifests shared by
//!   the CLI.
//! - [`io`] — deterministic CSV emission for simulation results, point
//!   clouds, and analysis curves.
//!
//! Unit convention: joint-design formulas work in millimeters and newtons
//! (matching the design parameter values they were derived with); dynamics
//! works in SI meters/kilograms. The single conversion boundary lives in
//! `dynamics` where link poses are converted to meters.

pub mod arm;
pub mod config;
pub mod dynamics;
pub mod io;
pub mod joints;
pub mod linkage;
pub mod sim;
pub mod spatial;

/// Millimeters-to-meters conversion used at the kinematics/dynamics boundary.
pub const MM_TO_M: f64 = 1.0e-3;

/// Standard gravity, m/s² (NED convention: gravity points along +z).
pub const GRAVITY: f64 = 9.81;
