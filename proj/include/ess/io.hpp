#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ess/conditional.hpp"
#include "ess/continuous.hpp"
#include "ess/discrete.hpp"

namespace ess {

// "1" (anything within 1e-12 of it) -> one, "inf" -> infinity, any other
// positive decimal -> finite.
alpha parse_alpha(std::string_view token);

// Comma-separated order tokens.
std::vector<alpha> parse_alpha_list(std::string_view text);

std::string to_string(alpha a);

// Comma/whitespace-separated decimal literals (one value per CSV row also
// works); '#' starts a comment line; brackets are ignored.
pmf parse_pmf_text(std::string_view text, bool normalize = false);

// Rectangular CSV of nonnegative joint probabilities, one row per line.
joint_pmf parse_joint_csv(std::string_view text);

// Two-column CSV (x, f(x)) tabulating a grid density.
density parse_grid_csv(std::string_view text);

// Fixed six decimal places, the precision used by every table and report.
std::string format_fixed6(double v);

std::string format_pmf(const pmf& p);

// The order grid of the reference table: 0.001, 0.1, 0.5, 0.9, 1, 1.5, 2,
// 10 and the infinite-order limit.
std::vector<alpha> table1_alphas();

// The two-outcome pmfs of the reference table, [0.5,0.5] ... [1.0,0.0].
std::vector<pmf> table1_pmfs();

// Recomputes the reference table of Ess values over table1_pmfs() and
// table1_alphas(), six decimal places per cell.
std::string render_table1();

}  // namespace ess
