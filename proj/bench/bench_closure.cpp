// Serial vs OpenMP closure on realized tensor products. Prints timings and
// fails if the two paths disagree.
#include "yangirr/closure.hpp"
#include "yangirr/yangian.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <vector>

using namespace yangirr;

namespace {

ModuleSpec spec(Weight lambda, int N, int h) { return {std::move(lambda), {}, N, h}; }

double time_closure(const std::vector<RatMatrix>& gens, std::size_t cap, const ClosureOptions& opt,
                    std::size_t& dim) {
    const auto t0 = std::chrono::steady_clock::now();
    dim = algebra_closure_dim(gens, cap, opt);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    struct Case {
        const char* name;
        std::vector<ModuleSpec> specs;
    };
    const std::vector<Case> cases = {
        {"vector x vector, d = 1", {spec({1, 0}, 2, 1), spec({1, 0}, 2, 0)}},
        {"(2,1) x vector, N = 3, d = 2", {spec({2, 1, 0}, 3, 2), spec({1, 0, 0}, 3, 0)}},
        {"(2) x (2), N = 2, d = 1", {spec({2, 0}, 2, 1), spec({2, 0}, 2, 0)}},
        {"vector^3, N = 2, d = 1, 1", {spec({1, 0}, 2, 2), spec({1, 0}, 2, 1), spec({1, 0}, 2, 0)}},
        {"(2,1) x (1,1), N = 3, d = 5", {spec({2, 1, 0}, 3, 5), spec({1, 1, 0}, 3, 0)}},
    };
    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%-32s %5s %9s %9s %9s %9s %s\n", "case", "dim", "closure", "serial_s", "omp_s", "speedup", "match");
    int bad = 0;
    for (const auto& c : cases) {
        const GeneratorSet g = module_action(c.specs);
        const auto gens = g.coefficients();
        const std::size_t cap = g.dim * g.dim;
        ClosureOptions serial, par;
        serial.parallel = false;
        serial.modular_prefilter = par.modular_prefilter = false;
        par.parallel = true;
        std::size_t ds = 0, dp = 0;
        const double ts = time_closure(gens, cap, serial, ds);
        const double tp = time_closure(gens, cap, par, dp);
        const bool match = ds == dp;
        bad += !match;
        std::printf("%-32s %5zu %9zu %9.3f %9.3f %9.2f %s\n", c.name, g.dim, ds, ts, tp, tp > 0 ? ts / tp : 0.0,
                    match ? "yes" : "NO");
    }
    return bad == 0 ? 0 : 1;
}
