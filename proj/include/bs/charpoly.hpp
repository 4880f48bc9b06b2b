#pragma once

// Exact Laurent-polynomial character ring, isobaric divided differences,
// Demazure's character formula, and the key/Schur specializations.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <vector>

#include "bs/crystal.hpp"
#include "bs/standard.hpp"
#include "bs/weyl.hpp"

namespace bs {

using Coeff = boost::multiprecision::cpp_int;

// Sparse Z-linear combination of monomials in x_1..x_n; exponents may be
// negative.  No zero coefficients are ever stored.
struct LaurentPolynomial {
    int n = 0;
    std::map<std::vector<int>, Coeff> terms;

    explicit LaurentPolynomial(int rank = 0) : n(rank) {}

    static LaurentPolynomial zero(int n) { return LaurentPolynomial(n); }
    static LaurentPolynomial constant(int n, Coeff c) {
        LaurentPolynomial f(n);
        if (c != 0) f.terms.emplace(std::vector<int>(n, 0), std::move(c));
        return f;
    }
    static LaurentPolynomial monomial(int n, std::vector<int> exps, Coeff c = 1) {
        LaurentPolynomial f(n);
        if (c != 0) f.terms.emplace(std::move(exps), std::move(c));
        return f;
    }
    // x_1 x_2 ... x_i
    static LaurentPolynomial fundamental_weight(int n, int i) {
        std::vector<int> e(n, 0);
        for (int r = 0; r < i; ++r) e[r] = 1;
        return monomial(n, std::move(e));
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const std::vector<int>& exps, const Coeff& c) {
        auto it = terms.find(exps);
        if (it == terms.end()) {
            if (c != 0) terms.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial c = a;
        for (const auto& [e, co] : b.terms) c.add_term(e, co);
        return c;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial c = a;
        for (const auto& [e, co] : b.terms) c.add_term(e, -co);
        return c;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial c(a.n);
        std::vector<int> e(a.n);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                for (int r = 0; r < a.n; ++r) e[r] = ea[r] + eb[r];
                c.add_term(e, ca * cb);
            }
        return c;
    }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms == b.terms;
    }

    // Substitute x_1 = ... = x_n = 1.
    Coeff eval_at_one() const {
        Coeff s = 0;
        for (const auto& [e, c] : terms) s += c;
        return s;
    }

    // s_i acting by swapping the exponents of x_i and x_{i+1}.
    LaurentPolynomial reflect(int i) const {
        LaurentPolynomial out(n);
        for (const auto& [e, c] : terms) {
            std::vector<int> ee = e;
            std::swap(ee[i - 1], ee[i]);
            out.terms.emplace(std::move(ee), c);
        }
        return out;
    }
};

// x^tau = product of x_{r_j} over the entries of tau.
inline LaurentPolynomial weight_monomial(int n, const Tableau& tau) {
    std::vector<int> e(n, 0);
    for (int r : tau.entries) {
        if (r < 1 || r > n) throw std::invalid_argument("weight_monomial: entry out of [1,n]");
        ++e[r - 1];
    }
    return LaurentPolynomial::monomial(n, std::move(e));
}

// Isobaric divided difference Lam_i f = (x_i f - x_{i+1} s_i f)/(x_i - x_{i+1}).
// The numerator is divided exactly along the (x_i, x_{i+1}) pair; a nonzero
// remainder indicates an arithmetic bug.
inline LaurentPolynomial divided_difference(int i, const LaurentPolynomial& f) {
    int n = f.n;
    if (i < 1 || i > n - 1) throw std::invalid_argument("divided_difference: letter out of range");
    std::vector<int> xi(n, 0), xip(n, 0);
    xi[i - 1] = 1;
    xip[i] = 1;
    LaurentPolynomial num = LaurentPolynomial::monomial(n, xi) * f -
                            LaurentPolynomial::monomial(n, xip) * f.reflect(i);

    // Group numerator terms by the exponents away from the pair plus the pair
    // total s = a + b; within a group divide sum c_a x_i^a x_{i+1}^{s-a} by
    // (x_i - x_{i+1}) via synthetic division: q_{a-1} = c_a + q_a downward.
    std::map<std::vector<int>, std::map<int, Coeff>> groups;
    for (const auto& [e, c] : num.terms) {
        std::vector<int> key = e;
        int a = e[i - 1], b = e[i];
        key[i - 1] = a + b;
        key[i] = 0;
        groups[std::move(key)][a] = c;
    }
    LaurentPolynomial out(n);
    for (const auto& [key, coeffs] : groups) {
        int s = key[i - 1];
        int a_max = coeffs.rbegin()->first;
        int a_min = coeffs.begin()->first;
        std::vector<int> e = key;
        // q holds q_a while descending; q_{a-1} = c_a + q_a, q_{a_max} = 0.
        Coeff q = 0;
        for (int a = a_max; a > a_min; --a) {
            auto it = coeffs.find(a);
            if (it != coeffs.end()) q += it->second;
            e[i - 1] = a - 1;
            e[i] = s - a;
            out.add_term(e, q);
        }
        q += coeffs.begin()->second;
        if (q != 0) throw std::logic_error("divided_difference: nonzero remainder");
    }
    return out;
}

// Demazure's formula with J-selected operators:
//   Lam_{i_1}^{d_1}(omega_{i_1}^{m_1} Lam_{i_2}^{d_2}(...)).
inline LaurentPolynomial demazure_character(const Word& word, const Subword& J,
                                            const std::vector<int>& mult) {
    Shape shape(word, mult);  // validates
    int n = word.n;
    LaurentPolynomial f = LaurentPolynomial::constant(n, 1);
    for (int k = word.length(); k >= 1; --k) {
        LaurentPolynomial om = LaurentPolynomial::fundamental_weight(n, word.letter(k));
        for (int m = 0; m < mult[k - 1]; ++m) f = f * om;
        if (J.contains(k)) f = divided_difference(word.letter(k), f);
    }
    return f;
}

// Char T = sum of weight monomials over the set.
inline LaurentPolynomial set_character(int n, const TableauSet& ts) {
    LaurentPolynomial f(n);
    for (const Tableau& tau : ts)
        for (const auto& [e, c] : weight_monomial(n, tau).terms) f.add_term(e, c);
    return f;
}

// Shape realizing the Demazure module V_w(lambda): multiplicities supported
// on the last occurrence of each letter, counting columns of each height.
// Requires the last occurrences j_1 < j_2 < ... of the letters present.
inline Shape key_shape(const Word& word, const std::vector<int>& lambda) {
    for (std::size_t r = 0; r + 1 < lambda.size(); ++r)
        if (lambda[r] < lambda[r + 1])
            throw std::invalid_argument("key_shape: lambda is not a partition");
    if (!is_reduced(word, Subword::full(word.length())))
        throw std::invalid_argument("key_shape: word is not reduced");
    std::vector<int> last(word.n, 0);  // last[k] = last occurrence of letter k, 0 if absent
    for (int k = 1; k <= word.length(); ++k) last[word.letter(k)] = k;
    int prev = 0;
    for (int k = 1; k <= word.n - 1; ++k) {
        if (last[k] == 0) continue;
        if (last[k] <= prev)
            throw std::invalid_argument("key_shape: last occurrences are not increasing");
        prev = last[k];
    }
    auto part = [&](int k) {
        return k <= static_cast<int>(lambda.size()) ? lambda[k - 1] : 0;
    };
    std::vector<int> mult(word.length(), 0);
    for (int k = 1; k <= word.n; ++k) {
        int cols = part(k) - part(k + 1);  // columns of height k in the diagram
        if (cols == 0) continue;
        if (k > word.n - 1 || last[k] == 0)
            throw std::invalid_argument("key_shape: lambda needs a column height absent from the word");
        mult[last[k] - 1] = cols;
    }
    return Shape(word, std::move(mult));
}

// Schur polynomial s_lambda(x_1..x_n) by direct semistandard-tableau
// enumeration; independent oracle for the key specialization.
inline LaurentPolynomial schur_oracle(const std::vector<int>& lambda, int n) {
    for (std::size_t r = 0; r + 1 < lambda.size(); ++r)
        if (lambda[r] < lambda[r + 1])
            throw std::invalid_argument("schur_oracle: lambda is not a partition");
    if (static_cast<int>(lambda.size()) > n)
        throw std::invalid_argument("schur_oracle: lambda has more than n parts");
    LaurentPolynomial f(n);
    int rows = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(lambda[r], 0);
    std::vector<int> content(n, 0);
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            f.add_term(content, 1);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= lambda[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);                  // rows weakly increase
        if (r > 0 && c < lambda[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);  // columns strictly
        for (int v = lo; v <= n; ++v) {
            fill[r][c] = v;
            ++content[v - 1];
            self(self, nr, nc);
            --content[v - 1];
        }
    };
    if (rows == 0 || lambda[0] == 0)
        return LaurentPolynomial::constant(n, 1);
    rec(rec, 0, 0);
    return f;
}

}  // namespace bs
