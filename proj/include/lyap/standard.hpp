#pragma once

#include <vector>

#include "lyap/matrix.hpp"
#include "lyap/spectrum.hpp"
#include "lyap/systems.hpp"

namespace lyap {

/// Benettin-style state: trajectory, orthonormal variation vectors (columns of
/// z) and the accumulated logarithms of their stretch factors.
struct BenettinState {
    double t = 0.0;
    Vector x;
    SquareMatrix z;
    std::vector<double> logsum;
};

struct GramSchmidtResult {
    SquareMatrix q;          // orthonormal columns
    std::vector<double> r;   // stretch factors, diagonal of the triangular factor
};

/// Columns with norm below this after projection count as collapsed.
inline constexpr double kRankCollapseGuard = 1e-300;

/// Classical Gram–Schmidt on the columns of z with one re-orthogonalization
/// pass. Throws RankCollapse if a column becomes degenerate.
GramSchmidtResult gram_schmidt(const SquareMatrix& z);

/// Integrates (x, Z) with Ż = A Z from Z(0) = I, renormalizing after every big
/// step and reporting logsum_i / t.
RunResult run_standard(const SystemSpec& system, const Vector& x0, const RunOptions& opts);

} // namespace lyap
