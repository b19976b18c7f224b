// Regenerates the embedded quantile table for the Lc stability statistic by
// simulating its asymptotic null distribution: driftless random-walk
// regressors, iid errors, FMOLS scores. Output is the initializer for
// core/src/hansen_table.cpp.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "mdcoint/cointegration.hpp"
#include "mdcoint/rng.hpp"

using namespace mdcoint;

int main(int argc, char** argv) {
    int reps = 40000;
    int T = 1000;
    int max_m = 6;
    if (argc > 1) reps = std::stoi(argv[1]);
    if (argc > 2) T = std::stoi(argv[2]);
    if (argc > 3) max_m = std::stoi(argv[3]);

    const double pvals[6] = {0.20, 0.10, 0.075, 0.05, 0.025, 0.01};

    std::printf("// reps = %d, T = %d\n", reps, T);
    std::printf("const double kLcQuantiles[%d][6] = {\n", max_m);
    std::printf("    // p:   0.20     0.10     0.075    0.05     0.025    0.01\n");
    for (int m = 1; m <= max_m; ++m) {
        std::vector<double> stats(static_cast<std::size_t>(reps));
        for (int rep = 0; rep < reps; ++rep) {
            NormalRng rng(0xC01D5EEDULL + static_cast<std::uint64_t>(m) * 1000003ULL +
                          static_cast<std::uint64_t>(rep));
            Matrix X(static_cast<std::size_t>(T), static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) {
                double level = 0.0;
                for (int t = 0; t < T; ++t) {
                    level += rng.next();
                    X(static_cast<std::size_t>(t), static_cast<std::size_t>(j)) = level;
                }
            }
            std::vector<double> y(static_cast<std::size_t>(T));
            for (int t = 0; t < T; ++t) y[static_cast<std::size_t>(t)] = rng.next();
            const CointEstimate est = fmols(y, X);
            stats[static_cast<std::size_t>(rep)] = hansen_lc(est, X).statistic;
        }
        std::sort(stats.begin(), stats.end());
        std::printf("    {");
        for (int i = 0; i < 6; ++i) {
            // upper-tail p -> order statistic at (1-p)
            const double pos = (1.0 - pvals[i]) * (reps - 1);
            const std::size_t lo = static_cast<std::size_t>(pos);
            const double frac = pos - static_cast<double>(lo);
            const double q = stats[lo] + frac * (stats[std::min<std::size_t>(
                                                     lo + 1, stats.size() - 1)] -
                                                 stats[lo]);
            std::printf("%.4f%s", q, i + 1 < 6 ? ", " : "");
        }
        std::printf("},  // m = %d\n", m);
    }
    std::printf("};\n");
    return 0;
}
