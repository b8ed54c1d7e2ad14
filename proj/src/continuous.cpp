#include "ess/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace ess {

namespace {

double gaussian_pdf(double mean, double variance, double x) noexcept {
    double z = x - mean;
    return std::exp(-z * z / (2.0 * variance)) /
           std::sqrt(2.0 * std::numbers::pi * variance);
}

}  // namespace

density density::gaussian(double mean, double variance) {
    if (!std::isfinite(mean)) throw domain_error("gaussian mean must be finite");
    if (!std::isfinite(variance) || !(variance > 0.0))
        throw domain_error("gaussian variance must be positive");
    return density(family::gaussian, mean, variance);
}

density density::exponential(double rate) {
    if (!std::isfinite(rate) || !(rate > 0.0))
        throw domain_error("exponential rate must be positive");
    return density(family::exponential, rate, 0.0);
}

density density::uniform(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo))
        throw domain_error("uniform bounds must be finite with hi > lo");
    return density(family::uniform, lo, hi);
}

density density::grid(std::vector<double> x, std::vector<double> f) {
    if (x.size() < 2 || x.size() != f.size())
        throw domain_error("grid density needs >= 2 matching nodes");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i])) throw domain_error("grid node must be finite");
        if (i > 0 && !(x[i] > x[i - 1]))
            throw domain_error("grid nodes must be strictly ascending");
        if (!(f[i] >= 0.0) || !std::isfinite(f[i]))
            throw domain_error("grid density values must be nonnegative");
    }
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        mass += 0.5 * (f[i] + f[i + 1]) * (x[i + 1] - x[i]);
    if (!(std::abs(mass - 1.0) <= grid_mass_tolerance))
        throw normalization_error("grid density must integrate to 1, got " +
                                  std::to_string(mass));
    return density(std::move(x), std::move(f));
}

double density::operator()(double x) const noexcept {
    switch (family_) {
        case family::gaussian:
            return gaussian_pdf(a_, b_, x);
        case family::exponential:
            return x < 0.0 ? 0.0 : a_ * std::exp(-a_ * x);
        case family::uniform:
            return (x < a_ || x > b_) ? 0.0 : 1.0 / (b_ - a_);
        case family::grid: {
            if (x < gx_.front() || x > gx_.back()) return 0.0;
            auto it = std::upper_bound(gx_.begin(), gx_.end(), x);
            if (it == gx_.end()) return gf_.back();
            std::size_t k = static_cast<std::size_t>(it - gx_.begin());
            if (k == 0) return gf_.front();
            double t = (x - gx_[k - 1]) / (gx_[k] - gx_[k - 1]);
            return gf_[k - 1] + t * (gf_[k] - gf_[k - 1]);
        }
    }
    return 0.0;
}

interval density::default_domain() const noexcept {
    switch (family_) {
        case family::gaussian:
            return {a_ - 8.0 * std::sqrt(b_), a_ + 8.0 * std::sqrt(b_)};
        case family::exponential:
            return {0.0, 40.0 / a_};
        case family::uniform:
            return {a_, b_};
        case family::grid:
            return {gx_.front(), gx_.back()};
    }
    return {0.0, 1.0};
}

double density::sup(interval dom) const noexcept {
    switch (family_) {
        case family::gaussian:
            return gaussian_pdf(a_, b_, std::clamp(a_, dom.lo, dom.hi));
        case family::exponential:
            return (*this)(std::clamp(0.0, dom.lo, dom.hi));
        case family::uniform:
            return (dom.hi < a_ || dom.lo > b_) ? 0.0 : 1.0 / (b_ - a_);
        case family::grid: {
            double best = std::max((*this)(std::clamp(dom.lo, gx_.front(), gx_.back())),
                                   (*this)(std::clamp(dom.hi, gx_.front(), gx_.back())));
            for (std::size_t i = 0; i < gx_.size(); ++i)
                if (gx_[i] >= dom.lo && gx_[i] <= dom.hi)
                    best = std::max(best, gf_[i]);
            return best;
        }
    }
    return 0.0;
}

double ess_closed_form(const density& d, alpha a) {
    switch (d.kind()) {
        case density::family::gaussian: {
            double width = std::sqrt(2.0 * std::numbers::pi * d.variance());
            if (a.is_infinity()) return width;
            if (a.is_one()) return width * std::sqrt(std::numbers::e);
            double v = a.value();
            return width * std::exp(-std::log(v) / (2.0 * (1.0 - v)));
        }
        case density::family::exponential: {
            if (a.is_infinity()) return 1.0 / d.rate();
            if (a.is_one()) return std::numbers::e / d.rate();
            double v = a.value();
            return std::exp(std::log(v) / (v - 1.0)) / d.rate();
        }
        case density::family::uniform:
            return d.hi() - d.lo();
        case density::family::grid:
            break;
    }
    throw unsupported_family("grid densities have no closed form");
}

namespace {

constexpr int simpson_depth_cap = 40;
constexpr int simpson_seed_panels = 8;

// Classic adaptive Simpson: a panel is accepted once halving it moves the
// estimate by less than 15 * tol, with the budget split across halves.
template <class F>
double simpson_panel(const F& g, double lo, double mid, double hi, double g_lo,
                     double g_mid, double g_hi, double whole, double tol,
                     int depth) {
    double lm = 0.5 * (lo + mid);
    double rm = 0.5 * (mid + hi);
    double g_lm = g(lm);
    double g_rm = g(rm);
    double h = hi - lo;
    double left = h / 12.0 * (g_lo + 4.0 * g_lm + g_mid);
    double right = h / 12.0 * (g_mid + 4.0 * g_rm + g_hi);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= simpson_depth_cap)
        throw quadrature_error(
            "adaptive refinement did not converge within the depth cap");
    return simpson_panel(g, lo, lm, mid, g_lo, g_lm, g_mid, left, 0.5 * tol,
                         depth + 1) +
           simpson_panel(g, mid, rm, hi, g_mid, g_rm, g_hi, right, 0.5 * tol,
                         depth + 1);
}

// Composite wrapper: seeding with several panels keeps a symmetric
// integrand from fooling the first estimate.
template <class F>
double adaptive_simpson(const F& g, interval dom, double tol) {
    double h = (dom.hi - dom.lo) / simpson_seed_panels;
    double total = 0.0;
    for (int i = 0; i < simpson_seed_panels; ++i) {
        double lo = dom.lo + i * h;
        double hi = (i + 1 == simpson_seed_panels) ? dom.hi : lo + h;
        double mid = 0.5 * (lo + hi);
        double g_lo = g(lo);
        double g_mid = g(mid);
        double g_hi = g(hi);
        double whole = (hi - lo) / 6.0 * (g_lo + 4.0 * g_mid + g_hi);
        total += simpson_panel(g, lo, mid, hi, g_lo, g_mid, g_hi, whole,
                               tol / simpson_seed_panels, 0);
    }
    return total;
}

constexpr int richardson_level_cap = 22;

// Trapezoidal sums over dyadically refined nodes with one Richardson
// extrapolation step; grid densities are only piecewise smooth, so the
// node set stays anchored at the tabulated breakpoints.
template <class F>
double trapezoid_richardson(const F& g, std::vector<double> nodes, double tol) {
    auto trapezoid = [&](const std::vector<double>& xs) {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            sum += 0.5 * (g(xs[i]) + g(xs[i + 1])) * (xs[i + 1] - xs[i]);
        return sum;
    };
    double t_prev = trapezoid(nodes);
    double r_prev = t_prev;
    for (int level = 0; level < richardson_level_cap; ++level) {
        std::vector<double> refined;
        refined.reserve(nodes.size() * 2);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            refined.push_back(nodes[i]);
            refined.push_back(0.5 * (nodes[i] + nodes[i + 1]));
        }
        refined.push_back(nodes.back());
        nodes = std::move(refined);
        double t = trapezoid(nodes);
        double r = t + (t - t_prev) / 3.0;
        if (level > 0 && std::abs(r - r_prev) <= tol) return r;
        t_prev = t;
        r_prev = r;
    }
    throw quadrature_error(
        "trapezoid refinement did not converge within the level cap");
}

// Integration domain clipped to where the density can be nonzero.
interval clip_to_support(const density& d, interval dom) {
    switch (d.kind()) {
        case density::family::exponential:
            dom.lo = std::max(dom.lo, 0.0);
            break;
        case density::family::uniform:
            dom.lo = std::max(dom.lo, d.lo());
            dom.hi = std::min(dom.hi, d.hi());
            break;
        case density::family::grid:
            dom.lo = std::max(dom.lo, d.grid_x().front());
            dom.hi = std::min(dom.hi, d.grid_x().back());
            break;
        case density::family::gaussian:
            break;
    }
    return dom;
}

template <class F>
double integrate(const density& d, const F& g, interval dom, double tol) {
    if (d.kind() != density::family::grid) return adaptive_simpson(g, dom, tol);
    std::vector<double> nodes;
    nodes.push_back(dom.lo);
    for (double x : d.grid_x())
        if (x > dom.lo && x < dom.hi) nodes.push_back(x);
    nodes.push_back(dom.hi);
    return trapezoid_richardson(g, std::move(nodes), tol);
}

}  // namespace

double ess_quadrature(const density& d, alpha a, interval dom, double tol) {
    if (!(tol > 0.0)) throw domain_error("quadrature tolerance must be positive");
    if (!std::isfinite(dom.lo) || !std::isfinite(dom.hi) || !(dom.lo < dom.hi))
        throw domain_error("integration domain must be a finite interval");
    if (a.is_infinity()) {
        double peak = d.sup(dom);
        if (!(peak > 0.0))
            throw domain_error("density has no mass on the requested domain");
        return 1.0 / peak;
    }
    dom = clip_to_support(d, dom);
    if (!(dom.lo < dom.hi))
        throw domain_error("density has no mass on the requested domain");
    if (a.is_one()) {
        auto g = [&d](double x) {
            double f = d(x);
            return f > 0.0 ? -f * std::log(f) : 0.0;
        };
        return std::exp(integrate(d, g, dom, tol));
    }
    double v = a.value();
    auto g = [&d, v](double x) { return std::pow(d(x), v); };
    double power_integral = integrate(d, g, dom, tol);
    if (!(power_integral > 0.0))
        throw domain_error("density has no mass on the requested domain");
    return std::exp(std::log(power_integral) / (1.0 - v));
}

double ess_quadrature(const density& d, alpha a, double tol) {
    return ess_quadrature(d, a, d.default_domain(), tol);
}

}  // namespace ess
