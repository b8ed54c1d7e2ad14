#include "ess/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace ess {

namespace {

bool is_delim(char c, std::string_view delims) {
    return delims.find(c) != std::string_view::npos;
}

// Splits on any of the delimiters; '#' discards the rest of its line.
std::vector<std::string_view> tokenize(std::string_view text,
                                       std::string_view delims) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (is_delim(text[i], delims)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !is_delim(text[i], delims) && text[i] != '#')
            ++i;
        tokens.push_back(text.substr(start, i - start));
    }
    return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            lines.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return lines;
}

double parse_double(std::string_view token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error("not a number: '" + std::string(token) + "'");
    return value;
}

std::vector<double> parse_number_list(std::string_view text,
                                      std::string_view delims) {
    std::vector<double> values;
    for (auto token : tokenize(text, delims)) values.push_back(parse_double(token));
    return values;
}

constexpr std::string_view pmf_delims = " \t\r\n,;[]";

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

}  // namespace

alpha parse_alpha(std::string_view token) {
    if (iequals(token, "inf") || iequals(token, "infinity") || token == "∞")
        return alpha::infinity();
    double value = parse_double(token);
    if (std::abs(value - 1.0) <= alpha::one_gap) return alpha::one();
    return alpha::finite(value);
}

std::vector<alpha> parse_alpha_list(std::string_view text) {
    std::vector<alpha> alphas;
    for (auto token : tokenize(text, " \t\r\n,"))
        alphas.push_back(parse_alpha(token));
    if (alphas.empty()) throw parse_error("no orders given");
    return alphas;
}

std::string to_string(alpha a) {
    if (a.is_one()) return "1";
    if (a.is_infinity()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", a.value());
    return buf;
}

pmf parse_pmf_text(std::string_view text, bool normalize) {
    auto values = parse_number_list(text, pmf_delims);
    if (values.empty()) throw parse_error("no probability values given");
    return make_pmf(std::move(values), normalize);
}

joint_pmf parse_joint_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    for (auto line : split_lines(text)) {
        auto values = parse_number_list(line, " \t\r,;");
        if (values.empty()) continue;  // blank or comment line
        if (!rows.empty() && values.size() != rows.front().size())
            throw parse_error("joint table rows must have equal length");
        rows.push_back(std::move(values));
    }
    if (rows.empty()) throw parse_error("no joint probabilities given");
    return joint_pmf(rows);
}

density parse_grid_csv(std::string_view text) {
    std::vector<double> xs;
    std::vector<double> fs;
    for (auto line : split_lines(text)) {
        auto values = parse_number_list(line, " \t\r,;");
        if (values.empty()) continue;
        if (values.size() != 2)
            throw parse_error("grid density rows must be 'x,f(x)' pairs");
        xs.push_back(values[0]);
        fs.push_back(values[1]);
    }
    if (xs.empty()) throw parse_error("no grid density rows given");
    return density::grid(std::move(xs), std::move(fs));
}

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string format_pmf(const pmf& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_fixed6(p[i]);
    }
    out += "]";
    return out;
}

std::vector<alpha> table1_alphas() {
    return {alpha::finite(0.001), alpha::finite(0.1), alpha::finite(0.5),
            alpha::finite(0.9),   alpha::one(),       alpha::finite(1.5),
            alpha::finite(2.0),   alpha::finite(10.0), alpha::infinity()};
}

std::vector<pmf> table1_pmfs() {
    std::vector<pmf> pmfs;
    for (double head : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0})
        pmfs.push_back(pmf({head, 1.0 - head}));
    return pmfs;
}

std::string render_table1() {
    const auto alphas = table1_alphas();
    const auto pmfs = table1_pmfs();
    std::ostringstream out;
    out << std::left << std::setw(8) << "alpha";
    out << std::right;
    for (const pmf& p : pmfs) {
        char label[32];
        std::snprintf(label, sizeof label, "[%.1f,%.1f]", p[0], p[1]);
        out << std::setw(12) << label;
    }
    out << '\n';
    for (alpha a : alphas) {
        out << std::left << std::setw(8) << to_string(a) << std::right;
        for (const pmf& p : pmfs) out << std::setw(12) << format_fixed6(ess(p, a));
        out << '\n';
    }
    return out.str();
}

}  // namespace ess
