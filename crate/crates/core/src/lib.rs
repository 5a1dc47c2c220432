//! Qutrit states in the eight-parameter polarization form and their three
//! real Bloch-type vectors `u`, `v`, `w`.
//!
//! A state is `rho = I/3 + t` with `t` traceless Hermitian. Physicality is
//! the pair of trace inequalities `(3/2) Tr t^2 <= 1` and
//! `9 Tr(t^2/2 - t^3) <= 1`; `u` and `v` split their left-hand sides into
//! three diagonal contributions and `w` is the diagonal of `rho`.

pub mod atlas;
pub mod bloch;
pub mod error;
pub mod exec;
pub mod physicality;
pub mod sampling;
pub mod scene;
pub mod state;

pub use bloch::{bloch_triple, u_vector, v_vector, w_vector, BlochLabel, BlochTriple, BlochVector};
pub use error::{Error, Result};
pub use exec::{evaluate_batch, Execution};
pub use physicality::{is_physical, physicality_report, PhysicalityReport};
pub use sampling::{sample, SampleMethod, SamplerConfig};
pub use scene::{evaluate, SceneDocument};
pub use state::{build_rho, build_t, extract_params, HermitianMatrix3, Param, ParamVector};
