#include "lyap/spectrum.hpp"

#include <cmath>

namespace lyap {

std::string_view method_name(Method m)
{
    return m == Method::continuous ? "continuous" : "standard";
}

const SpectrumRow& SpectrumSeries::final_row() const
{
    if (rows.empty())
        throw Error("spectrum series is empty");
    return rows.back();
}

void RunOptions::validate() const
{
    if (!(h > 0.0) || !std::isfinite(h))
        throw Error("run: h must be positive");
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw Error("run: t_end must be positive");
    if (record_every < 1)
        throw Error("run: record_every must be >= 1");
    if (big_steps() < 1)
        throw Error("run: t_end shorter than one big step (4h)");
}

long long RunOptions::big_steps() const
{
    return std::llround(t_end / (kSubsteps * h));
}

} // namespace lyap
