#include "mixorder/detail/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mixorder::detail {

namespace {

// regularized lower incomplete gamma P(s,x) by power series
double gamma_p_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// regularized upper incomplete gamma Q(s,x) by Lentz continued fraction
double gamma_q_cf(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

}  // namespace

double upper_incomplete_gamma(double s, double x) {
    if (!(s > 0.0) || x < 0.0) throw std::domain_error("incomplete gamma: need s > 0, x >= 0");
    if (x == 0.0) return std::tgamma(s);
    const double q = (x < s + 1.0) ? 1.0 - gamma_p_series(s, x) : gamma_q_cf(s, x);
    return q * std::tgamma(s);
}

double lower_incomplete_gamma(double s, double x) {
    if (!(s > 0.0) || x < 0.0) throw std::domain_error("incomplete gamma: need s > 0, x >= 0");
    if (x == 0.0) return 0.0;
    const double p = (x < s + 1.0) ? gamma_p_series(s, x) : 1.0 - gamma_q_cf(s, x);
    return p * std::tgamma(s);
}

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1]
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    double k15;
    double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k15 = kWgk[7] * fc;
    double g7 = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fs = f(c - dx) + f(c + dx);
        k15 += kWgk[i] * fs;
        if (i % 2 == 1) g7 += kWg[i / 2] * fs;
    }
    k15 *= h;
    g7 *= h;
    const double d = std::fabs(k15 - g7);
    const double scaled = std::pow(200.0 * d, 1.5);
    return {k15, std::min(d, scaled)};
}

struct Interval {
    double a, b, value, err;
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              int max_intervals) {
    QuadResult out;
    if (a >= b) return out;
    std::vector<Interval> heap;
    auto push = [&](double lo, double hi) {
        PanelResult p = gk15(f, lo, hi);
        out.evaluations += 15;
        heap.push_back({lo, hi, p.k15, p.err});
    };
    push(a, b);
    while (static_cast<int>(heap.size()) < max_intervals) {
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < heap.size(); ++i) {
            total_err += heap[i].err;
            if (heap[i].err > heap[worst].err) worst = i;
        }
        if (total_err <= abs_tol) break;
        Interval iv = heap[worst];
        if (iv.b - iv.a < std::fabs(iv.a) * 1e-15 + 1e-300) break;  // cannot split further
        heap.erase(heap.begin() + static_cast<std::ptrdiff_t>(worst));
        const double mid = 0.5 * (iv.a + iv.b);
        push(iv.a, mid);
        push(mid, iv.b);
    }
    for (const Interval& iv : heap) {
        out.value += iv.value;
        out.abs_error += iv.err;
    }
    return out;
}

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(static_cast<std::uint64_t>(uniform01() * static_cast<double>(span)) % span);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned cap = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("MIXORDER_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 0) cap = (v == 0) ? cap : static_cast<unsigned>(v);
    }
    if (cap <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned workers = std::min<std::size_t>(cap, n);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace mixorder::detail
