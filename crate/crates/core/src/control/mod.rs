//! Exact controllability analysis of threshold Laplacians.
//!
//! Three independent decision procedures are kept deliberately separate so
//! they can cross-check each other: the Kalman rank test, the eigenvector
//! (PBH) test over the exact eigenbasis, and the local rank test that works
//! run-by-run on the construction string through small checking matrices.

mod checking;
mod design;
mod global;
mod matrix;

pub use checking::{
    checking_family, local_checking_matrix, local_control_matrix, local_rank_check,
    CheckingMatrix, ControllabilityReport,
};
pub use design::{design_binary, design_terminal};
pub use global::{class_rank_floor_check, kalman_check, kalman_rank, min_controllers, pbh_check};
pub use matrix::{ControlKind, ControlMatrix};

use crate::error::{Error, Result};
use crate::threshold::ThresholdGraph;

/// Which decision procedure to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    LocalRank,
    Pbh,
    Kalman,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::LocalRank => "local-rank",
            Method::Pbh => "pbh",
            Method::Kalman => "kalman",
        }
    }
}

/// Runs one decision procedure.
pub fn check_with_method(
    g: &ThresholdGraph,
    b: &ControlMatrix,
    method: Method,
) -> Result<ControllabilityReport> {
    match method {
        Method::LocalRank => local_rank_check(g, b),
        Method::Pbh => pbh_check(g, b),
        Method::Kalman => kalman_check(g, b),
    }
}

/// Runs all three procedures and errors if they ever disagree; on success
/// returns the most informative report (witness or failing prefix kept).
pub fn check_all_methods(g: &ThresholdGraph, b: &ControlMatrix) -> Result<ControllabilityReport> {
    let local = local_rank_check(g, b)?;
    let pbh = pbh_check(g, b)?;
    let kalman = kalman_check(g, b)?;
    if local.controllable != pbh.controllable || pbh.controllable != kalman.controllable {
        return Err(Error::InvalidInput(format!(
            "controllability methods disagree: local-rank={}, pbh={}, kalman={}",
            local.controllable, pbh.controllable, kalman.controllable
        )));
    }
    Ok(ControllabilityReport {
        controllable: local.controllable,
        witness: pbh.witness,
        failing_prefix: local.failing_prefix,
    })
}
