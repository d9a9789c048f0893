//! Curves over finite fields: point counting, zeta numerators, Weil
//! validation, and the exact regularized product of closed-point norms.

pub mod curve;
pub mod field;
pub mod zeta;

pub use curve::{count_points, count_points_with_modulus, CurveSpec, InfinityRule};
pub use field::FiniteField;
pub use zeta::{
    counts_from_numerator, jacobi_fermat_numerator, numerator_from_counts, regprod_funcfield,
    regprod_funcfield_via_roots, weil_validate, FuncFieldProduct, WeilStatus, ZetaNumerator,
};
