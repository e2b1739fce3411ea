//! q-arithmetic, the sl₂ R-matrix and its enhancement, and the banded
//! contraction engine that evaluates Φ(β) on V^{⊗n}.
//!
//! Basis vectors of V^{⊗n} are indexed in mixed radix with the first leg as
//! the most significant digit. A crossing σ_p^{±1} acts on legs `p` and
//! `p + 1` through `R^{±1}`, where `R(e_k ⊗ e_l) = Σ R^{ij}_{kl} e_i ⊗ e_j`.

mod q;
mod rmatrix;
mod tensor;
pub(crate) use tensor::braid_diagonal;
mod verify;

pub use q::{qfact, qnum, ColorDim, QBinomials, QExponent};
pub use rmatrix::{mu_entry, r_entry, r_inverse_entry, BandEntry, EnhancedYB, RMatrixTable};
pub use tensor::{OperatorTensor, StateTensor};
pub use verify::{
    skein_matrix_residual, verify_inverse, verify_mu_commutation, verify_trace_axiom,
    verify_yang_baxter,
};
