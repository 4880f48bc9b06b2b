#pragma once

// Standard tableaux two ways: the Demazure/concatenation recursion for
// C(J,m) and the brute-force reduced-nest oracle for T(J,m), plus the
// standardness test and the structural checkers used by the proofs.

#include <map>
#include <stdexcept>
#include <vector>

#include "bs/crystal.hpp"
#include "bs/weyl.hpp"

namespace bs {

struct ResourceBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StandardSet {
    Shape shape;
    Subword ambient;
    TableauSet tableaux;
};

// Decreasing chain of subwords, one per column slot of the shape.
struct ReducedNest {
    std::vector<Subword> subwords;
};

// Slot positions of a shape in column order: k repeated m_k times.
inline std::vector<int> column_slots(const Shape& shape) {
    std::vector<int> slots;
    for (int k = 1; k <= shape.word.length(); ++k)
        for (int m = 0; m < shape.mult[k - 1]; ++m) slots.push_back(k);
    return slots;
}

// Column decomposition of a shaped tableau; throws on length mismatch.
inline std::vector<Column> shape_columns(const Tableau& tau, const Shape& shape) {
    std::vector<Column> cols;
    std::size_t pos = 0;
    for (int k : column_slots(shape)) {
        int sz = shape.word.letter(k);
        if (pos + sz > tau.entries.size())
            throw std::invalid_argument("tableau shorter than its shape");
        cols.emplace_back(std::vector<int>(tau.entries.begin() + pos, tau.entries.begin() + pos + sz));
        pos += sz;
    }
    if (pos != tau.entries.size())
        throw std::invalid_argument("tableau longer than its shape");
    return cols;
}

// C(J,m): right-to-left evaluation of
//   Lam_{i_1}^{d_1}(omega_{i_1}^{*m_1} * Lam_{i_2}^{d_2}(... )).
inline StandardSet generate_constructible(const Word& word, const Subword& J,
                                          const std::vector<int>& mult) {
    Shape shape(word, mult);
    TableauSet ts;
    ts.insert(Tableau{});
    for (int k = word.length(); k >= 1; --k) {
        Tableau prefix = column_power(fundamental_column(word.letter(k)), mult[k - 1]);
        if (!prefix.empty()) {
            TableauSet next;
            for (const Tableau& t : ts) next.insert(concat(prefix, t));
            ts = std::move(next);
        }
        if (J.contains(k)) ts = demazure_set(word.letter(k), ts);
    }
    return StandardSet{shape, J, std::move(ts)};
}

namespace detail {

struct NestEnumerator {
    const Word& word;
    std::vector<int> slots;
    // suffix sets keyed by (slot index, cap mask)
    std::map<std::pair<int, std::uint64_t>, TableauSet> memo;

    const TableauSet& suffixes(int slot, std::uint64_t cap) {
        auto key = std::make_pair(slot, cap);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        TableauSet out;
        if (slot == static_cast<int>(slots.size())) {
            out.insert(Tableau{});
        } else {
            int k = slots[slot];
            // all sub-masks of cap, including cap and 0
            std::uint64_t sub = cap;
            while (true) {
                Subword Jk(sub, word.length());
                if (is_reduced(word, Jk.up_to(k))) {
                    Tableau col(column_up_to(word, Jk, k));
                    for (const Tableau& tail : suffixes(slot + 1, sub))
                        out.insert(concat(col, tail));
                }
                if (sub == 0) break;
                sub = (sub - 1) & cap;
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    }
};

}  // namespace detail

// T(J,m): depth-first enumeration of reduced nests under J, memoized on
// (slot, current cap mask).  Exists to certify the fast path, not to scale.
inline StandardSet generate_liftable(const Word& word, const Subword& J,
                                     const std::vector<int>& mult, int max_l = 12) {
    if (word.length() > max_l)
        throw ResourceBoundError("generate_liftable: word length exceeds oracle bound");
    Shape shape(word, mult);
    detail::NestEnumerator en{word, column_slots(shape), {}};
    TableauSet ts = en.suffixes(0, J.mask);
    return StandardSet{shape, J, std::move(ts)};
}

// Finds one reduced nest under J generating tau, or nullopt.
inline std::optional<ReducedNest> find_lifting(const Word& word, const Subword& J,
                                               const std::vector<int>& mult, const Tableau& tau,
                                               int max_l = 12) {
    if (word.length() > max_l)
        throw ResourceBoundError("find_lifting: word length exceeds oracle bound");
    Shape shape(word, mult);
    std::vector<Column> cols = shape_columns(tau, shape);
    std::vector<int> slots = column_slots(shape);
    std::vector<Subword> chain;
    auto dfs = [&](auto&& self, int slot, std::uint64_t cap) -> bool {
        if (slot == static_cast<int>(slots.size())) return true;
        int k = slots[slot];
        std::uint64_t sub = cap;
        while (true) {
            Subword Jk(sub, word.length());
            if (is_reduced(word, Jk.up_to(k)) && column_up_to(word, Jk, k) == cols[slot]) {
                chain.push_back(Jk);
                if (self(self, slot + 1, sub)) return true;
                chain.pop_back();
            }
            if (sub == 0) break;
            sub = (sub - 1) & cap;
        }
        return false;
    };
    if (!dfs(dfs, 0, J.mask)) return std::nullopt;
    return ReducedNest{std::move(chain)};
}

struct StandardVerdict {
    bool standard = false;
    std::vector<int> raise_counts;  // witness (a_1, ..., a_l) on success
    Tableau residual;               // stuck residual on failure
};

// Greedy inversion of the generation recursion: at step k raise with e_{i_k}
// as far as possible, then strip the prefix omega_{i_k}^{*m_k}.
inline StandardVerdict is_standard(const Tableau& tau, const Shape& shape) {
    shape_columns(tau, shape);  // validates the shape
    StandardVerdict v;
    Tableau cur = tau;
    for (int k = 1; k <= shape.word.length(); ++k) {
        int i = shape.word.letter(k);
        int a = 0;
        for (MaybeTableau t = raise(i, cur); t; t = raise(i, *t)) {
            cur = *t;
            ++a;
        }
        v.raise_counts.push_back(a);
        Tableau prefix = column_power(fundamental_column(i), shape.mult[k - 1]);
        if (cur.size() < prefix.size() ||
            !std::equal(prefix.entries.begin(), prefix.entries.end(), cur.entries.begin())) {
            v.residual = cur;
            return v;
        }
        cur.entries.erase(cur.entries.begin(), cur.entries.begin() + prefix.size());
    }
    if (!cur.empty()) {
        v.residual = cur;
        return v;
    }
    v.standard = true;
    return v;
}

// Lemma 2 / Theorem 2+(i) recursion check:
//   C(J,m) = kmax * C(J, m - eps(k))  u  U_{J' <_k J} C(J',m).
inline bool check_recursion(const Word& word, const Subword& J, const std::vector<int>& mult) {
    int k = 0;
    for (int j = 1; j <= word.length(); ++j) {
        if (mult[j - 1] > 0) {
            k = j;
            break;
        }
    }
    if (k == 0) throw std::invalid_argument("check_recursion: m must have a positive entry");

    TableauSet lhs = generate_constructible(word, J, mult).tableaux;

    Column kmax = max_column_up_to(word, J, k);
    std::vector<int> mless = mult;
    --mless[k - 1];
    TableauSet rhs;
    for (const Tableau& t : generate_constructible(word, J, mless).tableaux)
        rhs.insert(concat(Tableau(kmax), t));
    // all strict subsets J' of J with a strictly smaller max column at k
    std::uint64_t sub = J.mask;
    while (sub != 0) {
        sub = (sub - 1) & J.mask;
        Subword Jp(sub, word.length());
        if (less_wrt_column(word, Jp, J, k)) {
            TableauSet part = generate_constructible(word, Jp, mult).tableaux;
            rhs.insert(part.begin(), part.end());
        }
    }
    return lhs == rhs;
}

// Every i-string meets T fully, or exactly in its head.
inline bool check_headstring(const TableauSet& ts, int n) {
    for (int i = 1; i <= n - 1; ++i) {
        for (const Tableau& tau : ts) {
            std::vector<Tableau> s = string_through(i, tau);
            int hits = 0;
            for (const Tableau& t : s) hits += ts.count(t);
            if (hits == static_cast<int>(s.size())) continue;
            if (hits == 1 && !raise(i, tau)) continue;
            return false;
        }
    }
    return true;
}

enum class TailInvariance { Equal, Unequal, HypothesisViolated };

// Lemma 3: equal tails past k and equal w_max on [k] force T(J,m) = T(J',m)
// for m supported on [k,l].
inline TailInvariance check_tail_invariance(const Word& word, const Subword& J,
                                            const Subword& Jp, const std::vector<int>& mult,
                                            int k) {
    for (int j = 1; j < k; ++j)
        if (mult[j - 1] != 0) return TailInvariance::HypothesisViolated;
    if ((J.mask & ~J.up_to(k).mask) != (Jp.mask & ~Jp.up_to(k).mask))
        return TailInvariance::HypothesisViolated;
    if (w_max(word, J.up_to(k)) != w_max(word, Jp.up_to(k)))
        return TailInvariance::HypothesisViolated;
    TableauSet a = generate_constructible(word, J, mult).tableaux;
    TableauSet b = generate_constructible(word, Jp, mult).tableaux;
    return a == b ? TailInvariance::Equal : TailInvariance::Unequal;
}

}  // namespace bs
