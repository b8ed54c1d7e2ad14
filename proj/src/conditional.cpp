#include "ess/conditional.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace ess {

joint_pmf::joint_pmf(std::size_t n_rows, std::size_t n_cols,
                     std::vector<double> data)
    : n_rows_(n_rows), n_cols_(n_cols), data_(std::move(data)) {
    if (n_rows_ == 0 || n_cols_ == 0)
        throw domain_error("joint table needs at least one row and column");
    if (data_.size() != n_rows_ * n_cols_)
        throw domain_error("joint table data does not match its dimensions");
    double total = 0.0;
    for (double v : data_) {
        if (!(v >= 0.0))
            throw domain_error("joint probabilities must be nonnegative");
        total += v;
    }
    if (!(std::abs(total - 1.0) <= sum_tolerance))
        throw normalization_error("joint probabilities must sum to 1, got " +
                                  std::to_string(total));
}

joint_pmf::joint_pmf(const std::vector<std::vector<double>>& rows)
    : joint_pmf(rows.size(), rows.empty() ? 0 : rows.front().size(), [&] {
          std::vector<double> flat;
          for (const auto& r : rows) {
              if (r.size() != rows.front().size())
                  throw domain_error("joint table rows must have equal length");
              flat.insert(flat.end(), r.begin(), r.end());
          }
          return flat;
      }()) {}

joint_pmf product_joint(const pmf& x, const pmf& y) {
    return joint_pmf(x.size(), y.size(), product_pmf(x, y).probs());
}

pmf marginal_x(const joint_pmf& j) {
    std::vector<double> sums(j.rows(), 0.0);
    for (std::size_t i = 0; i < j.rows(); ++i) {
        auto row = j.row(i);
        sums[i] = std::accumulate(row.begin(), row.end(), 0.0);
    }
    return detail::unchecked_pmf(std::move(sums));
}

pmf marginal_y(const joint_pmf& j) {
    std::vector<double> sums(j.cols(), 0.0);
    for (std::size_t i = 0; i < j.rows(); ++i)
        for (std::size_t k = 0; k < j.cols(); ++k) sums[k] += j.at(i, k);
    return detail::unchecked_pmf(std::move(sums));
}

pmf flatten(const joint_pmf& j) { return detail::unchecked_pmf(j.data()); }

pmf conditional_y_given_x(const joint_pmf& j, std::size_t i) {
    if (i >= j.rows()) throw domain_error("conditioning row out of range");
    auto row = j.row(i);
    double total = std::accumulate(row.begin(), row.end(), 0.0);
    if (!(total > 0.0))
        throw conditioning_error("conditioning on a zero-probability row");
    std::vector<double> probs(row.begin(), row.end());
    for (double& v : probs) v /= total;
    return detail::unchecked_pmf(std::move(probs));
}

double mean_conditional_ess(const joint_pmf& j, alpha a) {
    return ess(flatten(j), a) / ess(marginal_x(j), a);
}

namespace {

// exp(sum_i p(x_i) ln ess(p(Y|X=x_i), a)), skipping zero-probability rows.
double weighted_geometric_row_ess(const joint_pmf& j, alpha a) {
    pmf px = marginal_x(j);
    double log_mean = 0.0;
    for (std::size_t i = 0; i < j.rows(); ++i) {
        if (!(px[i] > 0.0)) continue;
        log_mean += px[i] * renyi_entropy(conditional_y_given_x(j, i), a);
    }
    return std::exp(log_mean);
}

}  // namespace

double chain_identity_rhs(const joint_pmf& j) {
    return weighted_geometric_row_ess(j, alpha::one());
}

chain_report verify_chain_identity(const joint_pmf& j, alpha a) {
    chain_report report;
    report.lhs = mean_conditional_ess(j, a);
    report.rhs_geometric = weighted_geometric_row_ess(j, a);
    report.abs_gap = std::abs(report.lhs - report.rhs_geometric);
    return report;
}

}  // namespace ess
