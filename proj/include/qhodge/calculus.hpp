#pragma once

#include "qhodge/matrix.hpp"

namespace qhodge {

struct NotClosedError : std::runtime_error {
    NotClosedError(int j, int l, const std::string& monomial)
        : std::runtime_error("one-form is not closed at pair (" + std::to_string(j) + "," + std::to_string(l) +
                             "), monomial [" + monomial + "]"),
          j(j), l(l), monomial(monomial) {}
    int j, l;
    std::string monomial;
};

struct InconsistentPrimitiveError : std::runtime_error {
    explicit InconsistentPrimitiveError(const std::string& monomial)
        : std::runtime_error("cross-variable primitive mismatch at monomial [" + monomial + "]"), monomial(monomial) {}
    std::string monomial;
};

/// Primitive F of the closed 1-form sum_j omega[j] dz_j with F(0) = 0.
/// omega has one entry per variable z_1..z_r.
LogPolySeries integrate_closed_one_form(const std::vector<LogPolySeries>& omega);

/// Entrywise version for endomorphism-valued forms.
LogPolyMat integrate_closed_one_form(const std::vector<LogPolyMat>& omega);

}  // namespace qhodge
