#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ess/discrete.hpp"

namespace ess {

// Joint distribution of two finite discrete variables, stored row-major:
// entry (i, j) is p(X = x_i, Y = y_j). Entries are nonnegative and the
// grand total is 1 within sum_tolerance.
class joint_pmf {
  public:
    static constexpr double sum_tolerance = 1e-9;

    joint_pmf(std::size_t n_rows, std::size_t n_cols, std::vector<double> data);
    explicit joint_pmf(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return n_rows_; }
    std::size_t cols() const noexcept { return n_cols_; }
    double at(std::size_t i, std::size_t j) const noexcept {
        return data_[i * n_cols_ + j];
    }
    std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * n_cols_, n_cols_};
    }
    const std::vector<double>& data() const noexcept { return data_; }

  private:
    std::size_t n_rows_;
    std::size_t n_cols_;
    std::vector<double> data_;
};

// Joint table of two independent variables: entry (i, j) = x_i * y_j.
joint_pmf product_joint(const pmf& x, const pmf& y);

// Row sums: p(X).
pmf marginal_x(const joint_pmf& j);

// Column sums: p(Y).
pmf marginal_y(const joint_pmf& j);

// All table entries as one pmf, row-major. Ordering is irrelevant to any
// Ess value by symmetry.
pmf flatten(const joint_pmf& j);

// Row i renormalized: p(Y | X = x_i). Conditioning on a row of probability
// zero throws conditioning_error.
pmf conditional_y_given_x(const joint_pmf& j, std::size_t i);

// Ess of the mean conditional distribution,
// ess(p(X,Y), a) / ess(p(X), a). The value does not depend on which
// conditioning outcome is considered, which is why the interface takes no
// row argument.
double mean_conditional_ess(const joint_pmf& j, alpha a);

// p(X)-weighted geometric mean of the per-row conditional Ess values at
// order 1. Rows of probability zero contribute a unit factor.
double chain_identity_rhs(const joint_pmf& j);

struct chain_report {
    double lhs;            // mean_conditional_ess(j, a)
    double rhs_geometric;  // weighted geometric mean of row Ess values at a
    double abs_gap;        // |lhs - rhs_geometric|
};

// Compares the two sides of the order-1 chain identity, with the
// right-hand side generalized to any order. The gap vanishes at order 1
// and whenever the variables are independent; at other orders it is
// reported, not asserted.
chain_report verify_chain_identity(const joint_pmf& j, alpha a);

}  // namespace ess
