//! Exact tensor calculus on a coordinate chart.

pub mod bach;
pub mod chart;
pub mod curvature;
pub mod hermitian;
pub mod metric;
#[allow(clippy::module_inception)]
pub mod tensor;
pub mod weyl;

pub use bach::{bach, bach_single, tracefree_ricci, weyl_action};
pub use chart::Chart;
pub use curvature::{
    christoffel, covariant_derivative, curvature, lower_riemann, ricci, scalar_curvature, Connection,
    CurvatureBundle,
};
pub use hermitian::{
    check_hermitian, complex_structure_from, compose, hamiltonian_form_residual, identity,
    invariance_residual, j_on_one_form, kahler_form, killing_tensor_residual, killing_vector_residual,
    lee_form, lower_endomorphism, nabla_j, nijenhuis, omega_trace, square_residual,
};
pub use metric::{d0, d1, d2, determinant, inverse, wedge12, Metric};
pub use tensor::{ChartTensor, Symmetry};
pub use weyl::{hodge_star, levi_civita, schouten, weyl_split, weyl_split_from, weyl_tensor, WeylSplit};
