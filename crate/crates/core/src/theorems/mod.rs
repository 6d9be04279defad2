//! Verification suites: theorem-level zero checks, the signed-sum lemmas
//! over the object sets, and the Laplace-type expansion.

pub mod family;
pub mod figures;
pub mod laplace;
pub mod lemmas;
pub mod report;
pub mod suites;
pub mod xpoly;

pub use family::{check_commuting, ConstraintFamily, MixedConstraintFamily};
pub use figures::{figure_terms, figure_terms2, verify_figures, FigureTerm};
pub use laplace::{det_b_minor, laplace_value, phillips_laplace_check, substituted_entries};
pub use lemmas::{
    check_involution, lemma_g2_sum, lemma_g_sum, lemma_h2_sum, lemma_h_sum, pathmutation2_entry_identity,
    pathmutation_entry_identity, verify_lemmas, verify_lemmas2,
};
pub use report::{Status, VerificationReport};
pub use suites::{shuffled_order, verify_bapat_roy, verify_cor_2matrices, verify_mixed_theorem, verify_phillips};
pub use xpoly::{mixed_x_poly, multivar_char_poly, substitute_commuting, XPolynomial};
