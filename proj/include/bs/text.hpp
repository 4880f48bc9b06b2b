#pragma once

// Textual forms: words as comma-separated letters, subwords as sorted
// position lists "{1,3}", columns as comma lists, shaped tableaux as
// columns joined by '*', polynomials in descending-lex term order.

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bs/charpoly.hpp"
#include "bs/crystal.hpp"
#include "bs/standard.hpp"
#include "bs/weyl.hpp"

namespace bs {

inline constexpr std::string_view kEmptyTableau = "∅";  // ∅

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        std::size_t pos = s.find(sep);
        parts.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return parts;
}

inline int parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    return v;
}

}  // namespace detail

inline std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (std::string_view part : detail::split(s, ',')) out.push_back(detail::parse_int(part));
    return out;
}

inline std::string format_int_list(const std::vector<int>& v) {
    std::string s;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(v[j]);
    }
    return s;
}

// "{1,3}" -> subword; "{}" is the empty subword.
inline Subword parse_subword(std::string_view s, int l) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("subword must look like {1,3}");
    Subword J = Subword::empty(l);
    for (int k : parse_int_list(s.substr(1, s.size() - 2))) {
        if (k < 1 || k > l) throw std::invalid_argument("subword position out of [1,l]");
        J = J.with(k);
    }
    return J;
}

inline std::string format_subword(const Subword& J) {
    return "{" + format_int_list(J.positions()) + "}";
}

inline std::string format_column(const Column& kappa) { return format_int_list(kappa.entries); }

// Shaped tableau: columns joined by '*', e.g. "2*2,3*1" for 2.23.1.
inline std::string format_tableau(const Tableau& tau, const Shape& shape) {
    std::vector<Column> cols = shape_columns(tau, shape);
    if (cols.empty()) return std::string(kEmptyTableau);
    std::string s;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j) s += '*';
        s += format_column(cols[j]);
    }
    return s;
}

// Unshaped tableau: flat comma list.
inline std::string format_tableau(const Tableau& tau) {
    if (tau.empty()) return std::string(kEmptyTableau);
    return format_int_list(tau.entries);
}

inline Tableau parse_tableau(std::string_view s) {
    if (s == kEmptyTableau || s.empty()) return Tableau{};
    Tableau tau;
    for (std::string_view col : detail::split(s, '*'))
        for (int r : parse_int_list(col)) tau.entries.push_back(r);
    return tau;
}

// Terms in descending-lex exponent order; zero exponents omitted; "0" for
// the zero polynomial.
inline std::string format_polynomial(const LaurentPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Coeff abs = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::string vars;
        for (int r = 0; r < f.n; ++r) {
            if (e[r] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += "x" + std::to_string(r + 1);
            if (e[r] != 1) vars += "^" + std::to_string(e[r]);
        }
        if (vars.empty()) {
            s += abs.str();
        } else {
            if (abs != 1) s += abs.str() + "*";
            s += vars;
        }
    }
    return s;
}

}  // namespace bs
