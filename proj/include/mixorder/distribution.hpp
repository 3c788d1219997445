#pragma once

namespace mixorder {

// Runtime surface shared by baseline distributions and mixture models so the
// order checks can probe either side of a comparison uniformly.  Evaluation
// is pure and const; implementations are immutable after construction and
// safe for concurrent use.
class Distribution {
  public:
    virtual ~Distribution() = default;

    virtual double pdf(double x) const = 0;
    virtual double cdf(double x) const = 0;
    virtual double sf(double x) const = 0;
    // left-continuous inverse of cdf, p in (0,1); throws std::domain_error otherwise
    virtual double quantile(double p) const = 0;
    virtual double hazard(double x) const = 0;
    virtual double reversed_hazard(double x) const = 0;
    // integral of sf over [x, inf); tol is the quadrature budget where one applies
    virtual double integrated_sf(double x, double tol) const = 0;
    double integrated_sf(double x) const { return integrated_sf(x, 1e-10); }

    virtual double support_lo() const = 0;
    virtual double support_hi() const = 0;
    virtual bool proper() const = 0;
    virtual bool finite_mean() const = 0;
    virtual double mean() const = 0;
};

}  // namespace mixorder
