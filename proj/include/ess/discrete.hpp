#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ess/alpha.hpp"
#include "ess/errors.hpp"

namespace ess {

class pmf;

namespace detail {
// Constructor for values that are probabilities by construction (products,
// marginals, conditionals): entries are clamped to [0, 1] and the sum is
// not re-checked.
pmf unchecked_pmf(std::vector<double> probs) noexcept;
}  // namespace detail

// Finite discrete probability mass function. Entries are nonnegative and
// sum to 1 within sum_tolerance. Zero entries are legal and every
// computation skips them, so 0 log 0 = 0 and 0^a = 0 hold throughout.
class pmf {
  public:
    static constexpr double sum_tolerance = 1e-9;

    explicit pmf(std::vector<double> probs);

    // Uniform pmf on m outcomes.
    static pmf uniform(std::size_t m);
    // All probability on outcome `hot` of m outcomes.
    static pmf degenerate(std::size_t m, std::size_t hot = 0);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const noexcept { return probs_[i]; }
    const std::vector<double>& probs() const noexcept { return probs_; }
    auto begin() const noexcept { return probs_.begin(); }
    auto end() const noexcept { return probs_.end(); }

  private:
    struct unchecked_t {};
    pmf(std::vector<double> probs, unchecked_t) noexcept
        : probs_(std::move(probs)) {}
    friend pmf detail::unchecked_pmf(std::vector<double>) noexcept;

    std::vector<double> probs_;
};

// Builds a pmf from raw weights. With normalize the weights are scaled by
// their total; otherwise the total must already be 1 within
// pmf::sum_tolerance.
pmf make_pmf(std::vector<double> weights, bool normalize = false);

// Number of strictly positive entries.
std::size_t support_size(const pmf& p) noexcept;

// -sum p_i ln p_i over the support, in nats. Lies in [0, ln m].
double shannon_entropy(const pmf& p) noexcept;

// Order-a Renyi entropy in nats, i.e. ln ess(p, a).
double renyi_entropy(const pmf& p, alpha a) noexcept;

// Effective support size (sum_i p_i^a)^(1/(1-a)); exp(H(p)) at order 1 and
// 1/max_i p_i in the infinite-order limit. Lies in [1, support_size(p)].
double ess(const pmf& p, alpha a) noexcept;

// Joint pmf of two independent variables, flattened row-major (the x index
// varies slower).
pmf product_pmf(const pmf& x, const pmf& y);

// One distribution profiled over an order grid.
struct profile {
    std::vector<alpha> alphas;
    std::vector<double> values;
};

// ess evaluated at each order, order of the grid preserved.
profile ess_profile(const pmf& p, std::span<const alpha> alphas);

}  // namespace ess
