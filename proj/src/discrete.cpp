#include "ess/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ess {

pmf detail::unchecked_pmf(std::vector<double> probs) noexcept {
    for (double& v : probs) v = std::clamp(v, 0.0, 1.0);
    return pmf(std::move(probs), pmf::unchecked_t{});
}

pmf::pmf(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw domain_error("pmf needs at least one entry");
    double total = 0.0;
    for (double v : probs_) {
        if (!(v >= 0.0)) throw domain_error("pmf entries must be nonnegative");
        total += v;
    }
    if (!(std::abs(total - 1.0) <= sum_tolerance))
        throw normalization_error("pmf entries must sum to 1, got " +
                                  std::to_string(total));
}

pmf pmf::uniform(std::size_t m) {
    if (m == 0) throw domain_error("uniform pmf needs at least one outcome");
    return detail::unchecked_pmf(
        std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

pmf pmf::degenerate(std::size_t m, std::size_t hot) {
    if (m == 0) throw domain_error("degenerate pmf needs at least one outcome");
    if (hot >= m) throw domain_error("degenerate outcome index out of range");
    std::vector<double> probs(m, 0.0);
    probs[hot] = 1.0;
    return detail::unchecked_pmf(std::move(probs));
}

pmf make_pmf(std::vector<double> weights, bool normalize) {
    if (weights.empty()) throw domain_error("weights must be nonempty");
    double total = 0.0;
    for (double v : weights) {
        if (!(v >= 0.0)) throw domain_error("weights must be nonnegative");
        total += v;
    }
    if (normalize) {
        if (!std::isfinite(total) || !(total > 0.0))
            throw domain_error("cannot normalize weights with total " +
                               std::to_string(total));
        for (double& v : weights) v /= total;
    }
    return pmf(std::move(weights));
}

std::size_t support_size(const pmf& p) noexcept {
    return static_cast<std::size_t>(
        std::count_if(p.begin(), p.end(), [](double v) { return v > 0.0; }));
}

double shannon_entropy(const pmf& p) noexcept {
    double h = 0.0;
    for (double v : p)
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

namespace {

// ln sum_i p_i^a over the support, with the largest exponent factored out
// so large orders and tiny probabilities stay in range.
double log_power_sum(const pmf& p, double a) noexcept {
    double emax = -std::numeric_limits<double>::infinity();
    for (double v : p)
        if (v > 0.0) emax = std::max(emax, a * std::log(v));
    double sum = 0.0;
    for (double v : p)
        if (v > 0.0) sum += std::exp(a * std::log(v) - emax);
    return emax + std::log(sum);
}

double max_prob(const pmf& p) noexcept {
    return *std::max_element(p.begin(), p.end());
}

}  // namespace

double renyi_entropy(const pmf& p, alpha a) noexcept {
    if (a.is_one()) return shannon_entropy(p);
    if (a.is_infinity()) return -std::log(max_prob(p));
    return log_power_sum(p, a.value()) / (1.0 - a.value());
}

double ess(const pmf& p, alpha a) noexcept {
    if (a.is_infinity()) return 1.0 / max_prob(p);
    return std::exp(renyi_entropy(p, a));
}

pmf product_pmf(const pmf& x, const pmf& y) {
    std::vector<double> probs;
    probs.reserve(x.size() * y.size());
    for (double px : x)
        for (double py : y) probs.push_back(px * py);
    return detail::unchecked_pmf(std::move(probs));
}

profile ess_profile(const pmf& p, std::span<const alpha> alphas) {
    if (alphas.empty()) throw domain_error("profile needs at least one order");
    profile result;
    result.alphas.assign(alphas.begin(), alphas.end());
    result.values.reserve(alphas.size());
    for (alpha a : alphas) result.values.push_back(ess(p, a));
    return result;
}

}  // namespace ess
