#pragma once

#include <vector>

#include "ess/alpha.hpp"
#include "ess/errors.hpp"

namespace ess {

struct interval {
    double lo;
    double hi;
};

// Continuous density on the real line: a named family or a tabulated grid
// density interpolated linearly between nodes.
//
// Continuous Ess carries the units of x (it is an effective support
// length) and, unlike the discrete quantity, may drop below 1.
class density {
  public:
    enum class family { gaussian, exponential, uniform, grid };

    static constexpr double grid_mass_tolerance = 1e-6;

    static density gaussian(double mean, double variance);
    static density exponential(double rate);  // rate b in b exp(-b x)
    static density uniform(double lo, double hi);
    // Nodes must be strictly ascending; values nonnegative and integrating
    // to 1 under the trapezoidal rule within grid_mass_tolerance.
    static density grid(std::vector<double> x, std::vector<double> f);

    family kind() const noexcept { return family_; }
    double mean() const noexcept { return a_; }      // gaussian
    double variance() const noexcept { return b_; }  // gaussian
    double rate() const noexcept { return a_; }      // exponential
    double lo() const noexcept { return a_; }        // uniform
    double hi() const noexcept { return b_; }        // uniform
    const std::vector<double>& grid_x() const noexcept { return gx_; }
    const std::vector<double>& grid_f() const noexcept { return gf_; }

    // Density value at x; 0 outside the support or grid range.
    double operator()(double x) const noexcept;

    // Truncated integration domain leaving out at most 1e-12 of the mass:
    // mean +- 8 sigma for the gaussian, [0, 40/rate] for the exponential,
    // the exact support otherwise.
    interval default_domain() const noexcept;

    // Supremum of the density over dom.
    double sup(interval dom) const noexcept;

  private:
    density(family f, double a, double b) noexcept
        : family_(f), a_(a), b_(b) {}
    density(std::vector<double> x, std::vector<double> f) noexcept
        : family_(family::grid), gx_(std::move(x)), gf_(std::move(f)) {}

    family family_;
    double a_ = 0.0;
    double b_ = 0.0;
    std::vector<double> gx_;
    std::vector<double> gf_;
};

// Closed-form Ess of the named families; grid densities have none and
// throw unsupported_family.
//
//   gaussian:     sqrt(2 pi s2) / a^(1/(2(1-a)));  sqrt(2 pi e s2) at
//                 order 1;  sqrt(2 pi s2) in the infinite-order limit
//   exponential:  a^(1/(a-1)) / b;  e/b at order 1;  1/b at infinity
//   uniform:      hi - lo at every order
double ess_closed_form(const density& d, alpha a);

// (integral of f^a over dom)^(1/(1-a)), evaluated numerically: adaptive
// composite Simpson for the named families, dyadic trapezoid refinement
// with Richardson extrapolation for grid densities. Order 1 integrates
// -f ln f and exponentiates; the infinite-order limit is 1/sup f over dom.
// tol bounds the estimated error of the inner integral.
double ess_quadrature(const density& d, alpha a, interval dom, double tol);

// Same, over the density's default domain.
double ess_quadrature(const density& d, alpha a, double tol = 1e-8);

}  // namespace ess
