#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace mixorder::detail {

// Unregularized incomplete gamma functions, s > 0, x >= 0.
// Series for x < s + 1, Lentz continued fraction otherwise.
double upper_incomplete_gamma(double s, double x);
double lower_incomplete_gamma(double s, double x);

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
};

// Adaptive Gauss-Kronrod 7-15 bisection on [a, b] (a <= b, both finite).
// Splits the worst interval until the summed error estimate is below
// abs_tol or the interval budget is exhausted.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              int max_intervals = 4000);

// Deterministic uniform helpers on top of mt19937_64.  The standard
// distributions are implementation-defined, so draws go through fixed
// bit manipulation to keep sweep output identical across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {  // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    double log_uniform(double lo, double hi);
    // inclusive integer range, rejection-free modulo bias is acceptable
    // for the small ranges used by the samplers
    int uniform_int(int lo, int hi);

  private:
    std::mt19937_64 eng_;
};

// Runs fn(i) for i in [0, n).  Thread count is capped by the
// MIXORDER_THREADS environment variable (0 or unset = hardware).
// Results must be written to disjoint slots; iteration order is not
// guaranteed, so fn must not depend on it.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mixorder::detail
