// E_{a,b}(t) / E_{c,d}(t) along t, with the verdict from the series rules.
//
//   demo_mittag_leffler_ratio [a b c d]

#include <monoratio/monoratio.hpp>

#include <cstdio>
#include <cstdlib>

using namespace monoratio;

int main(int argc, char** argv)
{
    double a = 2.0, b = 0.1, c = 1.0, d = 5.0;
    if (argc == 5) {
        a = std::atof(argv[1]);
        b = std::atof(argv[2]);
        c = std::atof(argv[3]);
        d = std::atof(argv[4]);
    } else if (argc != 1) {
        std::fprintf(stderr, "usage: %s [a b c d]\n", argv[0]);
        return 1;
    }

    try {
        const auto v = predict_de_ratio(a, b, c, d, AnyKernel{DiscreteKernelFamily{DiscreteFamilyId::PowerK}});
        std::printf("E_{%g,%g}/E_{%g,%g}: %s via %s", a, b, c, d, std::string(to_string(v.pattern)).c_str(),
                    v.provenance.c_str());
        if (v.turning_point)
            std::printf(", t* = %.8g", *v.turning_point);
        std::printf("\n\n%10s %16s\n", "t", "ratio");
        for (double t : make_grid({13, 1e-2, 30.0, Spacing::Log})) {
            const double r = mittag_leffler(a, b, t).value / mittag_leffler(c, d, t).value;
            std::printf("%10.4g %16.10g\n", t, r);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    }
}
