#pragma once

namespace fhyp::tol {

// Single home for every numeric threshold the library and its acceptance
// checks rely on.  Three rungs: exact algebraic identities, geometric and
// projective computations, and comparisons between two independently rounded
// numerical routes.
inline constexpr double algebraic = 1e-11;
inline constexpr double geometric = 1e-9;
inline constexpr double double_oracle = 1e-7;

// |norm - 1| band classifying a point as boundary rather than interior.
inline constexpr double boundary_band = 1e-9;
// Pairwise Hermitian products smaller than this make a triple degenerate.
inline constexpr double degenerate_form = 1e-12;
// Pivot floor for the indefinite Gram-Schmidt completion.
inline constexpr double pivot = 1e-10;
// Residual allowed in M^† J M = J for a matrix to count as an isometry.
inline constexpr double form_preservation = 1e-10;
// Power-iteration growth must exceed 1 by this margin to call loxodromy.
inline constexpr double loxodromy_growth = 1e-8;
// Residual allowed when a constructed map must match prescribed images.
inline constexpr double image_residual = 1e-8;
// Minimum separation between marker values on a bending grid.
inline constexpr double marker_gap = 1e-6;

}  // namespace fhyp::tol
