#pragma once

// Plucker minors on Grassmannian coordinates, standard monomials, sampling
// of configuration points via parabolic matrix products, and finite-field
// rank certification of linear independence.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bs/standard.hpp"
#include "bs/weyl.hpp"

namespace bs {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 31) - 1;

// Arithmetic modulo a fixed prime p < 2^32.
struct PrimeField {
    std::uint64_t p = kDefaultPrime;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        for (a %= p; e; e >>= 1) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p - 2);
    }
};

// Dense matrix of residues, row-major.
struct FpMatrix {
    int rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    FpMatrix() = default;
    FpMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::uint64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static FpMatrix identity(int n) {
        FpMatrix m(n, n);
        for (int r = 0; r < n; ++r) m.at(r, r) = 1;
        return m;
    }

    FpMatrix multiply(const FpMatrix& other, const PrimeField& fp) const {
        FpMatrix out(rows, other.cols);
        for (int r = 0; r < rows; ++r)
            for (int k = 0; k < cols; ++k) {
                std::uint64_t v = at(r, k);
                if (v == 0) continue;
                for (int c = 0; c < other.cols; ++c)
                    out.at(r, c) = fp.add(out.at(r, c), fp.mul(v, other.at(k, c)));
            }
        return out;
    }

    FpMatrix first_columns(int c) const {
        FpMatrix out(rows, c);
        for (int r = 0; r < rows; ++r)
            for (int j = 0; j < c; ++j) out.at(r, j) = at(r, j);
        return out;
    }
};

// Gaussian elimination in place; returns the rank.
inline int rank(FpMatrix m, const PrimeField& fp) {
    int rk = 0;
    for (int c = 0; c < m.cols && rk < m.rows; ++c) {
        int piv = -1;
        for (int r = rk; r < m.rows; ++r)
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rk, j));
        std::uint64_t iv = fp.inv(m.at(rk, c));
        for (int r = rk + 1; r < m.rows; ++r) {
            std::uint64_t f = fp.mul(m.at(r, c), iv);
            if (f == 0) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(r, j) = fp.sub(m.at(r, j), fp.mul(f, m.at(rk, j)));
        }
        ++rk;
    }
    return rk;
}

inline std::uint64_t determinant(FpMatrix m, const PrimeField& fp) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
    std::uint64_t det = 1;
    for (int c = 0; c < m.cols; ++c) {
        int piv = -1;
        for (int r = c; r < m.rows; ++r)
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = fp.neg(det);
        }
        det = fp.mul(det, m.at(c, c));
        std::uint64_t iv = fp.inv(m.at(c, c));
        for (int r = c + 1; r < m.rows; ++r) {
            std::uint64_t f = fp.mul(m.at(r, c), iv);
            if (f == 0) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(r, j) = fp.sub(m.at(r, j), fp.mul(f, m.at(c, j)));
        }
    }
    return det;
}

// Delta_kappa(x): minor of x on the rows named by the column.
inline std::uint64_t plucker_minor(const Column& kappa, const FpMatrix& x, const PrimeField& fp) {
    int i = kappa.size();
    if (i != x.cols) throw std::invalid_argument("plucker_minor: column size != matrix width");
    FpMatrix sub(i, i);
    for (int r = 0; r < i; ++r) {
        int row = kappa.entries[r] - 1;
        if (row >= x.rows) throw std::invalid_argument("plucker_minor: row index out of range");
        for (int c = 0; c < i; ++c) sub.at(r, c) = x.at(row, c);
    }
    return determinant(std::move(sub), fp);
}

// Homogeneous coordinates of a point of Gr(i): n x i_k factor per slot.
struct ConfigurationPoint {
    std::vector<FpMatrix> factors;
};

// Delta_tau(z) = product of per-column minors, slot j read off factor j.
inline std::uint64_t standard_monomial_eval(const Tableau& tau, const Shape& shape,
                                            const ConfigurationPoint& z, const PrimeField& fp) {
    if (z.factors.size() != static_cast<std::size_t>(shape.word.length()))
        throw std::invalid_argument("standard_monomial_eval: point/shape mismatch");
    std::vector<Column> cols = shape_columns(tau, shape);
    std::vector<int> slots = column_slots(shape);
    std::uint64_t v = 1;
    for (std::size_t j = 0; j < cols.size(); ++j)
        v = fp.mul(v, plucker_minor(cols[j], z.factors[slots[j] - 1], fp));
    return v;
}

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4b855ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Invertible matrix in the zero-pattern of B, or of P_i when sub_row > 0:
// upper triangular plus one possibly nonzero (sub_row+1, sub_row) entry.
inline FpMatrix sample_pattern(int n, int sub_row, std::mt19937_64& rng, const PrimeField& fp) {
    std::uniform_int_distribution<std::uint64_t> dist(0, fp.p - 1);
    while (true) {
        FpMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = r; c < n; ++c) m.at(r, c) = dist(rng);
        if (sub_row > 0) m.at(sub_row, sub_row - 1) = dist(rng);
        if (determinant(m, fp) != 0) return m;
    }
}

}  // namespace detail

// Point of Z_J: p_j drawn in P_{i_j} for j in J and in B otherwise; the k-th
// coordinate is the first i_k columns of p_1...p_k.  Deterministic in
// (J, seed).
inline ConfigurationPoint sample_point(const Word& word, const Subword& J, std::uint64_t seed,
                                       const PrimeField& fp = {}) {
    std::mt19937_64 rng(detail::splitmix(seed ^ detail::splitmix(J.mask)));
    ConfigurationPoint z;
    FpMatrix prod = FpMatrix::identity(word.n);
    for (int k = 1; k <= word.length(); ++k) {
        int sub_row = J.contains(k) ? word.letter(k) : 0;
        FpMatrix pk = detail::sample_pattern(word.n, sub_row, rng, fp);
        prod = prod.multiply(pk, fp);
        z.factors.push_back(prod.first_columns(word.letter(k)));
    }
    return z;
}

// Rank of the evaluation matrix of T at points sampled from the union of the
// Z_J components.  rank == |T| certifies linear independence.
inline int independence_rank(const TableauSet& ts, const Shape& shape,
                             const std::vector<Subword>& Js, int points_per_component,
                             std::uint64_t seed, const PrimeField& fp = {}) {
    if (ts.empty()) throw std::invalid_argument("independence_rank: empty tableau set");
    int cols = static_cast<int>(ts.size());
    FpMatrix m(static_cast<int>(Js.size()) * points_per_component, cols);
    int row = 0;
    for (std::size_t jdx = 0; jdx < Js.size(); ++jdx) {
        for (int t = 0; t < points_per_component; ++t) {
            ConfigurationPoint z =
                sample_point(shape.word, Js[jdx], detail::splitmix(seed + jdx * 1000003 + t), fp);
            int c = 0;
            for (const Tableau& tau : ts) m.at(row, c++) = standard_monomial_eval(tau, shape, z, fp);
            ++row;
        }
    }
    return rank(std::move(m), fp);
}

// All columns of size i with entries in [1, n].
inline std::vector<Column> all_columns(int i, int n) {
    std::vector<Column> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == i) {
            out.emplace_back(cur);
            return;
        }
        for (int r = lo; r <= n; ++r) {
            cur.push_back(r);
            self(self, r + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Sampled check that the image of the k-th coordinate of Z_J is the Schubert
// variety of kappa_max = w_max(J cap [k]) . omega_{i_k}: minors above it
// vanish on every sample and Delta_{kappa_max} is nonzero on at least one.
inline bool schubert_image_check(const Word& word, const Subword& J, int k, int trials,
                                 std::uint64_t seed, const PrimeField& fp = {}) {
    Column kmax = max_column_up_to(word, J, k);
    bool saw_nonzero = false;
    std::vector<Column> cols = all_columns(word.letter(k), word.n);
    for (int t = 0; t < trials; ++t) {
        ConfigurationPoint z = sample_point(word, J, detail::splitmix(seed) + t, fp);
        const FpMatrix& x = z.factors[k - 1];
        for (const Column& kp : cols) {
            std::uint64_t v = plucker_minor(kp, x, fp);
            if (!bruhat_leq(kp, kmax) && v != 0) return false;
            if (kp == kmax && v != 0) saw_nonzero = true;
        }
    }
    return saw_nonzero;
}

}  // namespace bs
