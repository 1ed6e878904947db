// One parameter set per region: the predicted pattern of
// Gamma(ct+d)/Gamma(at+b) next to what dense sampling sees.

#include <monoratio/monoratio.hpp>

#include <cmath>
#include <cstdio>

using namespace monoratio;

int main()
{
    struct Case {
        double a, b, c, d;
    };
    const Case cases[] = {
        {1.0, 1.0, 1.0, 2.0}, // D1
        {2.0, 3.0, 1.0, 1.0}, // D2
        {3.0, 2.0, 1.0, 2.5}, // D3
        {2.0, 0.1, 1.0, 5.0}, // D4
        {1.0, 1.0, 2.0, 3.0}, // D5
        {1.0, 5.0, 2.0, 4.0}, // D6
        {1.0, 3.0, 3.0, 0.2}, // D7
    };
    std::printf("%-6s %-22s %-11s %-12s %-11s %s\n", "region", "(a, b, c, d)", "predicted", "t*", "observed",
                "change");
    for (const auto& k : cases) {
        const MonotonicityVerdict v = gamma_ratio_pattern(k.a, k.b, k.c, k.d);
        const ObservedPattern o = detect_pattern(
            [&](double t) { return std::lgamma(k.c * t + k.d) - std::lgamma(k.a * t + k.b); }, 1e-3, 50.0, 4096);
        char params[64];
        std::snprintf(params, sizeof params, "(%g, %g, %g, %g)", k.a, k.b, k.c, k.d);
        std::printf("%-6s %-22s %-11s ", std::string(to_string(classify_region(k.a, k.b, k.c, k.d))).c_str(), params,
                    std::string(to_string(v.pattern)).c_str());
        if (v.turning_point)
            std::printf("%-12.6g ", *v.turning_point);
        else
            std::printf("%-12s ", "-");
        std::printf("%-11s ", std::string(to_string(o.pattern)).c_str());
        if (!o.change_points.empty())
            std::printf("%.6g", o.change_points.front());
        std::printf("\n");
    }
}
