#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mixorder/distribution.hpp"

namespace mixorder {

enum class Family { Exponential, Weibull, Frechet, Power };

enum class Functional { Pdf, Cdf, Sf, Quantile, Hazard, ReversedHazard, LogDensitySlope };

// FR: h(t)            RFR: h~(t)          PFR: t*h(t)
// PRFR: t*h~(t)       PLR: -t*f'(t)/f(t)  LR: f'(t)/f(t)
enum class AgingNotion { FR, RFR, PFR, PRFR, PLR, LR };

enum class Monotonicity { Increasing, Decreasing, Constant, NonMonotone };

struct MonotoneVerdict {
    Monotonicity classification = Monotonicity::Constant;
    // (t1, t2) with t1 < t2 where the established direction is contradicted
    std::optional<std::pair<double, double>> witness;
    double slack = 0.0;  // absolute tie tolerance; the same value is applied relatively
};

// Geometric (log-spaced) evaluation grid used by the aging classifier.
struct ProbeGrid {
    double lo = 0.0;
    double hi = 0.0;
    int points = 512;
    double eps_abs = 1e-9;
    double eps_rel = 1e-9;
};

// Parametric baseline family on [0, inf) (Power: [0, b]).  All functionals
// are closed form; quantities outside the support follow density
// conventions (pdf 0, cdf 0/1).  Immutable.
class BaselineDistribution final : public Distribution {
  public:
    Family family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    double support_lo() const override { return 0.0; }
    double support_hi() const override { return upper_; }

    double pdf(double x) const override;
    double cdf(double x) const override;
    double sf(double x) const override;
    double quantile(double p) const override;
    double hazard(double x) const override;
    double reversed_hazard(double x) const override;
    // f'(t)/f(t) from the closed form; valid strictly inside the support
    double log_density_slope(double t) const;

    double integrated_sf(double x, double tol) const override;
    using Distribution::integrated_sf;
    bool proper() const override { return true; }
    bool finite_mean() const override;
    double mean() const override;

    // Formula variants clipped only from below (the t <= 0 cut each family's
    // closed form carries).  They coincide with pdf/cdf on the unbounded
    // families and continue past the upper endpoint for Power; the mixture
    // evaluators use these, which is what makes the improper bounded-support
    // configurations representable.
    double pdf_formula(double t) const;
    double cdf_formula(double t) const;
    // false when the formula tail does not vanish (bounded-support families)
    bool formula_tail_decays() const { return family_ != Family::Power; }

    friend BaselineDistribution make_baseline(Family, std::span<const double>);

  private:
    BaselineDistribution(Family f, std::vector<double> p, double upper)
        : family_(f), params_(std::move(p)), upper_(upper) {}

    Family family_;
    std::vector<double> params_;
    double upper_;
};

// Validates the parameter vector for the family; throws std::invalid_argument.
BaselineDistribution make_baseline(Family family, std::span<const double> params);

double eval(const BaselineDistribution& baseline, Functional functional, double point);

// Evaluates the notion's defining function on a geometric grid over the probe
// interval and classifies its monotonicity.  The verdict only speaks for the
// probed interval.  Throws std::invalid_argument for a bad probe and
// std::domain_error when fewer than 8 grid points are usable (inconclusive).
MonotoneVerdict classify_monotone_aging(const BaselineDistribution& baseline,
                                        AgingNotion notion, const ProbeGrid& probe);

// Shared tie-aware monotonicity classifier over a sampled sequence.
MonotoneVerdict classify_monotone_sequence(std::span<const double> xs,
                                           std::span<const double> ys,
                                           double eps_abs, double eps_rel);

std::string to_string(Family f);
std::string to_string(Monotonicity m);
Family family_from_string(const std::string& s);

}  // namespace mixorder
