//! Exact computations with Schur determinants, semi-infinite wedges and the
//! vertex operators relating them.

pub mod boson;
pub mod error;
pub mod fermion;
pub mod infinite;
pub mod partition;
pub mod ring;
pub mod series;
pub mod verify;
pub mod vertex;

pub use boson::{
    epoly_to_schur, h_of_e, jacobi_trudi, mult, pieri, schur_to_epoly, x_of_e, BilateralSeq, EPoly,
    HSeq, SchurVector,
};
pub use error::{Error, Result};
pub use fermion::{contract, sigma_boson, wedge_insert, WedgeMonomial, WedgeVector};
pub use infinite::{corrupted_u0, exp_vertex, kp_residual, kp_residual_of, u_gen_infinite, HPoly};
pub use partition::{add_vertical_strip, remove_vertical_strip, Partition};
pub use ring::{rat, rat_frac, Laurent, Rat, Ring};
pub use series::TSeries;
pub use series::{apply_odo, cauchy_decompose, combine_u_basis, is_in_kernel, u_gen};
pub use verify::{run_suite, Report, Suite};
pub use vertex::{g, g_vee, gamma, gamma_vee, LaurentBoson};
