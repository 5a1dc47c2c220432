//! Batch evaluation over many parameter points.
//!
//! With the `parallel` feature (default) work is spread over the rayon pool;
//! without it every mode runs sequentially. Output order always matches input
//! order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;
use crate::physicality::{physicality_report, PhysicalityReport};
use crate::state::ParamVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `(0..n).map(f)` in the requested mode, collected in index order.
pub fn map_indexed<T, F>(n: usize, mode: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
        _ => (0..n).map(f).collect(),
    }
}

pub fn evaluate_batch(points: &[ParamVector], mode: Execution) -> Result<Vec<PhysicalityReport>> {
    map_indexed(points.len(), mode, |i| physicality_report(&points[i]))
        .into_iter()
        .collect()
}
