#include "fpcore/probe.hpp"

#include "fpcore/errors.hpp"
#include "fpcore/gen_inverse.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace fpcore {

Operator truncated_weighted_shift(std::size_t n) {
    if (n < 4) throw DimensionMismatch("truncated_weighted_shift needs N >= 4");
    Matrix m(n, n, Field::Real);
    // Column j holds the image of e_{j+1}.
    for (std::size_t j = 1; j + 1 < n; j += 2) {
        const std::size_t basis_index = j + 1;  // even, 1-based
        m(j + 1, j) = Scalar(mpq_class(1, static_cast<unsigned long>(basis_index + 1)));
    }
    return Operator::finite(m);
}

TruncationReport preimage_growth(std::size_t max_m) {
    if (max_m < 2) throw DimensionMismatch("preimage_growth needs max_m >= 2");
    const std::size_t n = 2 * max_m + 2;
    const Operator shift = truncated_weighted_shift(n);
    const Matrix mp = moore_penrose(shift).block();
    const double target_bound = std::numbers::pi * std::numbers::pi / 8.0 - 1.0 + 1e-9;

    TruncationReport report;
    Vector y(n, Scalar::zero(Field::Real));
    for (std::size_t m = 1; m <= max_m; ++m) {
        // Add e_{2m+1} / (2m+1); 1-based index 2m+1 is position 2m.
        y[2 * m] = Scalar(mpq_class(1, static_cast<unsigned long>(2 * m + 1)));
        Vector x = mp * y;
        if (!(shift.block() * x == y)) throw InvariantViolation("y_m is not in the image");

        mpq_class x2 = 0;
        mpq_class y2 = 0;
        for (const auto& s : x) x2 += s.norm2();
        for (const auto& s : y) y2 += s.norm2();

        const double preimage = std::sqrt(x2.get_d());
        const double target = std::sqrt(y2.get_d());
        if (std::abs(preimage - std::sqrt(static_cast<double>(m))) > 1e-12)
            throw InvariantViolation("preimage norm departs from sqrt(m)");
        if (y2.get_d() > target_bound) throw InvariantViolation("target norm exceeds its limit");

        report.levels.push_back(m);
        report.preimage_norms2.push_back(x2);
        report.target_norms2.push_back(y2);
        report.preimage_norms.push_back(preimage);
        report.target_norms.push_back(target);
    }
    return report;
}

std::string TruncationReport::to_csv() const {
    std::string out = "m,target_norm,preimage_norm\n";
    char line[128];
    for (std::size_t k = 0; k < levels.size(); ++k) {
        std::snprintf(line, sizeof line, "%zu,%.15g,%.15g\n", levels[k], target_norms[k],
                      preimage_norms[k]);
        out += line;
    }
    return out;
}

}  // namespace fpcore
