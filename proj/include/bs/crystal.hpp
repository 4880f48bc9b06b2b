#pragma once

// Tableaux, the root operators f_i / e_i, i-strings, and the plactic
// Demazure set-operator.

#include <optional>
#include <set>
#include <vector>

#include "bs/weyl.hpp"

namespace bs {

// Flat entry sequence; the column decomposition lives in the Shape.
struct Tableau {
    std::vector<int> entries;

    Tableau() = default;
    explicit Tableau(std::vector<int> e) : entries(std::move(e)) {}
    explicit Tableau(const Column& kappa) : entries(kappa.entries) {}

    bool empty() const { return entries.empty(); }
    int size() const { return static_cast<int>(entries.size()); }

    // Canonical total order: length first, then lexicographic on entries.
    friend bool operator<(const Tableau& a, const Tableau& b) {
        if (a.entries.size() != b.entries.size())
            return a.entries.size() < b.entries.size();
        return a.entries < b.entries;
    }
    friend bool operator==(const Tableau& a, const Tableau& b) { return a.entries == b.entries; }
};

// The null symbol O of the root-operator calculus.
using MaybeTableau = std::optional<Tableau>;

using TableauSet = std::set<Tableau>;

inline Tableau concat(const Tableau& a, const Tableau& b) {
    Tableau c = a;
    c.entries.insert(c.entries.end(), b.entries.begin(), b.entries.end());
    return c;
}

// Null absorbs concatenation.
inline MaybeTableau concat(const MaybeTableau& a, const MaybeTableau& b) {
    if (!a || !b) return std::nullopt;
    return concat(*a, *b);
}

// kappa repeated m times.
inline Tableau column_power(const Column& kappa, int m) {
    Tableau t;
    for (int r = 0; r < m; ++r)
        t.entries.insert(t.entries.end(), kappa.entries.begin(), kappa.entries.end());
    return t;
}

namespace detail {

// Pairing rule for letter i in one left-to-right pass: an entry i acts as an
// opening bracket, an entry i+1 closes the most recent unmatched i.
// Survivors are the unmatched i+1's (all preceding) and unmatched i's.
struct PairingScan {
    std::vector<int> open_i;        // positions of surviving i's, increasing
    std::vector<int> surviving_ip;  // positions of surviving (i+1)'s, increasing
};

inline PairingScan pair_entries(int i, const Tableau& tau) {
    PairingScan s;
    for (int pos = 0; pos < tau.size(); ++pos) {
        int r = tau.entries[pos];
        if (r == i) {
            s.open_i.push_back(pos);
        } else if (r == i + 1) {
            if (!s.open_i.empty())
                s.open_i.pop_back();
            else
                s.surviving_ip.push_back(pos);
        }
    }
    return s;
}

}  // namespace detail

// f_i: leftmost surviving i becomes i+1, or null when none survives.
inline MaybeTableau lower(int i, const Tableau& tau) {
    auto scan = detail::pair_entries(i, tau);
    if (scan.open_i.empty()) return std::nullopt;
    Tableau out = tau;
    out.entries[scan.open_i.front()] = i + 1;
    return out;
}

// e_i: rightmost surviving i+1 becomes i; inverse of lower on its domain.
inline MaybeTableau raise(int i, const Tableau& tau) {
    auto scan = detail::pair_entries(i, tau);
    if (scan.surviving_ip.empty()) return std::nullopt;
    Tableau out = tau;
    out.entries[scan.surviving_ip.back()] = i;
    return out;
}

inline MaybeTableau lower(int i, const MaybeTableau& tau) {
    return tau ? lower(i, *tau) : std::nullopt;
}
inline MaybeTableau raise(int i, const MaybeTableau& tau) {
    return tau ? raise(i, *tau) : std::nullopt;
}

inline MaybeTableau lower_pow(int i, const Tableau& tau, int a) {
    MaybeTableau t = tau;
    for (int r = 0; r < a && t; ++r) t = lower(i, *t);
    return t;
}
inline MaybeTableau raise_pow(int i, const Tableau& tau, int a) {
    MaybeTableau t = tau;
    for (int r = 0; r < a && t; ++r) t = raise(i, *t);
    return t;
}

// The i-string through tau, ordered head to tail; the head h has e_i h = null.
inline std::vector<Tableau> string_through(int i, const Tableau& tau) {
    std::vector<Tableau> up;
    for (MaybeTableau t = raise(i, tau); t; t = raise(i, *t)) up.push_back(*t);
    std::vector<Tableau> s(up.rbegin(), up.rend());
    s.push_back(tau);
    for (MaybeTableau t = lower(i, tau); t; t = lower(i, *t)) s.push_back(*t);
    return s;
}

// Plactic Demazure operator: closure of T under f_i.
inline TableauSet demazure_set(int i, const TableauSet& ts) {
    TableauSet out;
    for (const Tableau& tau : ts) {
        out.insert(tau);
        for (MaybeTableau t = lower(i, tau); t; t = lower(i, *t)) out.insert(*t);
    }
    return out;
}

// f_i^a (kappa * tau') via the column concatenation law:
//   (f_i kappa) * (f_i^{a-1} tau')  if f_i kappa != null and e_i tau' = null,
//   kappa * (f_i^a tau')            otherwise.
// Computed as a checked identity against iterated lowering.
inline MaybeTableau concat_lower_law(int i, const Column& kappa, const Tableau& tau_p, int a) {
    if (a < 1) throw std::invalid_argument("concat_lower_law: a must be >= 1");
    Tableau head(kappa);
    MaybeTableau split;
    if (lower(i, head) && !raise(i, tau_p)) {
        MaybeTableau tail = a == 1 ? MaybeTableau{tau_p} : lower_pow(i, tau_p, a - 1);
        split = concat(lower(i, head), tail);
    } else {
        split = concat(MaybeTableau{head}, lower_pow(i, tau_p, a));
    }
    MaybeTableau direct = lower_pow(i, concat(head, tau_p), a);
    if (split != direct)
        throw std::logic_error("concat_lower_law: split formula disagrees with iterated lowering");
    return direct;
}

// Dual law for e_i^a (kappa * tau'), with c the number of times tau' can be
// raised (e_i^c tau' != null, e_i^{c+1} tau' = null):
//   if f_i kappa != null:  kappa * (e_i^a tau')  for a < c, null for a >= c;
//   if f_i kappa  = null:  kappa * (e_i^a tau')            for a <= c,
//                          (e_i kappa) * (e_i^c tau')      for a = c + 1,
//                          null                            for a >= c + 2.
// This unrolls the single-step rule: raising prefers the tail while the tail
// can still be raised twice more (once more when f_i kappa = null), and only
// then touches the column.
inline MaybeTableau concat_raise_law(int i, const Column& kappa, const Tableau& tau_p, int a) {
    if (a < 1) throw std::invalid_argument("concat_raise_law: a must be >= 1");
    Tableau head(kappa);
    int c = 0;
    for (MaybeTableau t = raise(i, tau_p); t; t = raise(i, *t)) ++c;
    MaybeTableau split;
    if (lower(i, head)) {
        split = a < c ? concat(MaybeTableau{head}, raise_pow(i, tau_p, a)) : std::nullopt;
    } else if (a <= c) {
        split = concat(MaybeTableau{head}, raise_pow(i, tau_p, a));
    } else if (a == c + 1) {
        split = concat(raise(i, head), raise_pow(i, tau_p, c));
    } else {
        split = std::nullopt;
    }
    MaybeTableau direct = raise_pow(i, concat(head, tau_p), a);
    if (split != direct)
        throw std::logic_error("concat_raise_law: split formula disagrees with iterated raising");
    return direct;
}

}  // namespace bs
