#pragma once

#include "errors.hpp"

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace monoratio {

enum class Spacing { Linear, Log };

inline std::string_view to_string(Spacing s) { return s == Spacing::Linear ? "linear" : "log"; }

inline Spacing parse_spacing(std::string_view s)
{
    if (s == "linear")
        return Spacing::Linear;
    if (s == "log")
        return Spacing::Log;
    throw domain_error("unknown grid spacing '" + std::string(s) + "' (expected linear|log)");
}

/// Finite sample of a closed interval [lo, hi].
struct GridSpec {
    int count = 32;
    double lo = 1e-3;
    double hi = 1e3;
    Spacing spacing = Spacing::Log;
};

inline std::vector<double> make_grid(const GridSpec& spec)
{
    if (spec.count < 2)
        throw domain_error("grid needs at least two points");
    if (!(spec.lo < spec.hi) || !std::isfinite(spec.lo) || !std::isfinite(spec.hi))
        throw domain_error("grid needs finite endpoints with lo < hi");
    if (spec.spacing == Spacing::Log && !(spec.lo > 0.0))
        throw domain_error("log grid needs lo > 0");

    std::vector<double> pts(static_cast<std::size_t>(spec.count));
    const double n = spec.count - 1;
    if (spec.spacing == Spacing::Linear) {
        for (int i = 0; i < spec.count; ++i)
            pts[i] = spec.lo + (spec.hi - spec.lo) * (i / n);
    } else {
        const double llo = std::log(spec.lo);
        const double lhi = std::log(spec.hi);
        for (int i = 0; i < spec.count; ++i)
            pts[i] = std::exp(llo + (lhi - llo) * (i / n));
    }
    pts.front() = spec.lo;
    pts.back() = spec.hi;
    return pts;
}

} // namespace monoratio
