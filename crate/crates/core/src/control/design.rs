use crate::control::checking::local_rank_check;
use crate::control::global::{kalman_rank, min_controllers};
use crate::control::matrix::ControlMatrix;
use crate::error::Result;
use crate::threshold::ThresholdGraph;

/// Designs a binary control matrix with the minimum number of columns
/// (the largest eigenvalue multiplicity).
///
/// Inside each degree class, listed in canonical order, the first m-2
/// vertices drive controllers 1..m-2. A class whose degree differs from the
/// trace adds its (m-1)-th vertex on controller m-1; the single class whose
/// degree equals the trace instead adds its last vertex on the final
/// controller. Every column ends up nonempty and the result passes the
/// local rank test.
pub fn design_binary(g: &ThresholdGraph) -> Result<ControlMatrix> {
    let k = g.k();
    if k == 1 {
        return ControlMatrix::binary_from_columns(1, &[vec![0]]);
    }
    let d = g.degrees();
    let tau = d.trace();
    let (p, _) = min_controllers(d);
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); p];
    let classes = d.classes();
    for ((value, m), range) in classes.into_iter().zip(d.class_ranges()) {
        let verts: Vec<usize> = range.collect();
        if value == tau {
            for t in 1..=m.saturating_sub(2) {
                columns[t - 1].push(verts[t - 1]);
            }
            columns[p - 1].push(verts[m - 1]);
        } else {
            for t in 1..=m.saturating_sub(1) {
                columns[t - 1].push(verts[t - 1]);
            }
        }
    }
    assert!(columns.iter().all(|c| !c.is_empty()), "every controller drives some vertex");
    let b = ControlMatrix::binary_from_columns(k, &columns)?;
    debug_assert!(local_rank_check(g, &b)?.controllable, "designed input must be controllable");
    Ok(b)
}

/// Designs a terminal control matrix (one driven vertex per column) with the
/// minimum number of columns, k minus the number of distinct degrees.
///
/// The driven set is the same one the binary design touches: the first m-1
/// vertices of each class, except that the trace-degree class swaps its
/// (m-1)-th vertex for its last.
pub fn design_terminal(g: &ThresholdGraph) -> Result<ControlMatrix> {
    let k = g.k();
    if k == 1 {
        return ControlMatrix::terminal_from_vertices(1, &[0]);
    }
    let d = g.degrees();
    let tau = d.trace();
    let mut touched: Vec<usize> = Vec::new();
    for ((value, m), range) in d.classes().into_iter().zip(d.class_ranges()) {
        let verts: Vec<usize> = range.collect();
        if value == tau {
            touched.extend_from_slice(&verts[..m.saturating_sub(2)]);
            touched.push(verts[m - 1]);
        } else {
            touched.extend_from_slice(&verts[..m - 1]);
        }
    }
    touched.sort_unstable();
    let (_, expected) = min_controllers(d);
    assert_eq!(touched.len(), expected, "terminal design uses the minimum column count");
    let b = ControlMatrix::terminal_from_vertices(k, &touched)?;
    debug_assert_eq!(kalman_rank(g.laplacian(), &b)?, k, "designed input must be controllable");
    Ok(b)
}
