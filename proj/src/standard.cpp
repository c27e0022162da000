#include "lyap/standard.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "lyap/linalg.hpp"
#include "run_loop.hpp"

namespace lyap {

GramSchmidtResult gram_schmidt(const SquareMatrix& z)
{
    const std::size_t n = z.size();
    GramSchmidtResult out{SquareMatrix(n), std::vector<double>(n)};
    std::vector<double> v(n);
    std::vector<double> proj(n);

    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t k = 0; k < n; ++k)
            v[k] = z(k, c);
        // twice is enough
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < c; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    s += out.q(k, j) * v[k];
                proj[j] = s;
            }
            for (std::size_t j = 0; j < c; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    v[k] -= proj[j] * out.q(k, j);
        }
        double norm = 0.0;
        for (double e : v)
            norm += e * e;
        norm = std::sqrt(norm);
        if (!(norm > kRankCollapseGuard)) {
            std::ostringstream os;
            os << "gram_schmidt: column " << c << " collapsed (norm " << norm << ")";
            throw RankCollapse(os.str());
        }
        out.r[c] = norm;
        for (std::size_t k = 0; k < n; ++k)
            out.q(k, c) = v[k] / norm;
    }
    return out;
}

RunResult run_standard(const SystemSpec& system, const Vector& x0, const RunOptions& opts)
{
    std::vector<double> logsum(system.dim, 0.0);

    auto deriv = [&](double t, const Vector& x, const MatrixState& s) {
        const SquareMatrix a = system.jacobian(t, x);
        return MatrixState{a * s.m, a.trace()};
    };
    auto post = [&](double, MatrixState& s) {
        GramSchmidtResult gs = gram_schmidt(s.m);
        for (std::size_t i = 0; i < logsum.size(); ++i)
            logsum[i] += std::log(gs.r[i]);
        s.m = std::move(gs.q);
    };
    auto exponents = [&](double t, const MatrixState&) {
        std::vector<double> e(logsum);
        for (auto& v : e)
            v /= t;
        std::sort(e.begin(), e.end(), std::greater<>());
        return e;
    };
    return detail::drive(Method::standard, system, x0, SquareMatrix::identity(system.dim), opts,
                         deriv, post, exponents);
}

} // namespace lyap
