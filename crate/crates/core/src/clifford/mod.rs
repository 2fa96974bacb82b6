//! Clifford algebra tools and the Hermitian monogenic transform.

pub mod algebra;
pub mod hermitian;
pub mod witt;

pub use algebra::{blade_sign, Multivector};
pub use hermitian::{
    dirac_z, dirac_zdag, herm_dual_exact, herm_dual_factor, herm_dual_monte_carlo, herm_dual_operator_form, herm_inner,
    herm_inversion_factor, herm_invert, herm_radon, herm_radon_split, herm_reconstruct, hmono_wave, lift, HermPoly,
    HermProjection,
};
pub use witt::{
    grade_projection, has_grade, herm_vector, idempotent, is_spinor, null_tau, spin_euler, spinor_basis,
    spinor_basis_element, witt, witt_identities_hold,
};
