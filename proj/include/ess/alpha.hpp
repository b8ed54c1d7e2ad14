#pragma once

#include <cmath>
#include <limits>

#include "ess/errors.hpp"

namespace ess {

// Order parameter of the effective-support-size family.
//
// Finite orders are strictly positive and must differ from 1 by more than
// one_gap; the order-1 and infinite-order limits carry their own tags, so
// the 1/(1 - alpha) singularity never enters a computation.
class alpha {
  public:
    static constexpr double one_gap = 1e-12;

    static alpha finite(double value) {
        if (!std::isfinite(value) || !(value > 0.0))
            throw domain_error("alpha must be a positive finite real");
        if (std::abs(value - 1.0) <= one_gap)
            throw domain_error("alpha this close to 1 must be alpha::one()");
        return alpha(kind::finite, value);
    }
    static constexpr alpha one() noexcept { return alpha(kind::one, 1.0); }
    static constexpr alpha infinity() noexcept {
        return alpha(kind::infinity, std::numeric_limits<double>::infinity());
    }

    constexpr bool is_finite() const noexcept { return kind_ == kind::finite; }
    constexpr bool is_one() const noexcept { return kind_ == kind::one; }
    constexpr bool is_infinity() const noexcept { return kind_ == kind::infinity; }

    // Position on the extended order axis: the finite value, 1 for one(),
    // +inf for infinity(). Orders sort by it.
    constexpr double value() const noexcept { return value_; }

    friend constexpr bool operator==(alpha a, alpha b) noexcept {
        return a.kind_ == b.kind_ && a.value_ == b.value_;
    }

  private:
    enum class kind { finite, one, infinity };

    constexpr alpha(kind k, double v) noexcept : kind_(k), value_(v) {}

    kind kind_;
    double value_;
};

}  // namespace ess
