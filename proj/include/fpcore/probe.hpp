#pragma once

#include "fpcore/finite_potent.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fpcore {

/// N x N truncation of the compact nilpotent weighted shift on l^2:
/// e_n ↦ e_{n+1}/(n+1) for even n (1-based), every other e_n ↦ 0.
Operator truncated_weighted_shift(std::size_t n);

/// Minimal-norm preimages of y_m = sum_{k=1..m} e_{2k+1}/(2k+1).
///
/// The image points converge in l^2 while the preimage norms grow like √m,
/// so the shift is not bounded below on [Ker]^⊥ and its image is not closed.
struct TruncationReport {
    std::vector<std::size_t> levels;
    std::vector<double> target_norms;
    std::vector<double> preimage_norms;
    /// Exact squared norms, kept rational until the report is emitted.
    std::vector<mpq_class> target_norms2;
    std::vector<mpq_class> preimage_norms2;

    /// "m,target_norm,preimage_norm" with one row per level.
    std::string to_csv() const;
};

TruncationReport preimage_growth(std::size_t max_m);

}  // namespace fpcore
