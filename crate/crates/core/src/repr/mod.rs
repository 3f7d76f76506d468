//! GL_r and symmetric group combinatorics: tableaux, major index,
//! dimensions and multiplicities of the graded pieces.

mod characters;
mod gl;
mod modules;
mod partition;
mod r2;

pub use characters::{
    adams_klyashko_check, alpha, beta, lemma_gcd_failure, lemma_gcd_identity, lemma_gcd_identity_full_range, lemma_gcd_sum, lemma_mobius_identity, s_character_identity,
    AdamsCheck,
};
pub use gl::{for_each_ssyt, gl_dimension, lr_coefficients, power_sum, schur_eval, ssyt_count};
pub use modules::{
    decompose, dim_j, dim_m, dim_rn0_phi, dim_rn1_mobius, dim_rni, dim_s, dim_t, j_shapes, klyashko_multiplicity,
    m_shapes, pettet_ranks, t_shapes, theorem2_rank, theorem3_decomposition, DecompositionEntry, DecompositionReport, Module, Part,
};
pub use partition::{
    maj_class_count, maj_distribution, major_index, partitions, partitions_bounded, standard_tableaux, Partition,
    StandardTableau,
};
pub use r2::{
    r2_compare_printed, r2_multiplicities, r2_theta, theta_j_corrected, theta_j_printed, theta_m_corrected,
    theta_m_printed, theta_totals, R2Cell, R2Mismatch, R2Row, PRINTED_R2_J, PRINTED_R2_J_TOTALS, PRINTED_R2_M,
    PRINTED_R2_M_TOTALS,
};
