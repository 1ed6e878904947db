// Laplace-transform ratio order for a few pairs of distributions.

#include <monoratio/monoratio.hpp>

#include <cstdio>

using namespace monoratio;

int main()
{
    struct Pair {
        RandomVariableModel x, y;
    };
    const Pair pairs[] = {
        {rv::exponential(1.0), rv::exponential(2.0)},
        {rv::gamma(2.0, 1.0), rv::exponential(1.0)},
        {rv::size_biased_geometric(0.5), rv::geometric(0.5)},
        {rv::poisson(1.0), rv::poisson(3.0)},
        {rv::exponential(1.0), rv::exponential(1.0)},
        {rv::uniform(1.0), rv::uniform(2.0)},
    };
    OrderOptions opt;
    opt.always_fallback = true;
    std::printf("%-24s %-18s %-12s %-34s %s\n", "X", "Y", "relation", "provenance", "grid");
    for (const auto& p : pairs) {
        const OrderVerdict v = lt_ratio_order(p.x, p.y, opt);
        std::printf("%-24s %-18s %-12s %-34s %s\n", p.x.name.c_str(), p.y.name.c_str(),
                    std::string(to_string(v.relation)).c_str(), v.provenance.c_str(),
                    v.fallback_relation ? std::string(to_string(*v.fallback_relation)).c_str() : "");
    }
}
