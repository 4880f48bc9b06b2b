#pragma once

// Words, subwords, permutations of S_n, columns and their Bruhat order.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bs {

// Strictly increasing sequence r_1 < ... < r_i of values in [1, n].
struct Column {
    std::vector<int> entries;

    Column() = default;
    explicit Column(std::vector<int> e) : entries(std::move(e)) {
        for (std::size_t j = 0; j + 1 < entries.size(); ++j)
            if (entries[j] >= entries[j + 1])
                throw std::invalid_argument("column entries must strictly increase");
        if (!entries.empty() && entries.front() < 1)
            throw std::invalid_argument("column entries must be >= 1");
    }

    int size() const { return static_cast<int>(entries.size()); }
    auto operator<=>(const Column&) const = default;
};

// Fundamental weight column (1, 2, ..., i).
inline Column fundamental_column(int i) {
    std::vector<int> e(i);
    std::iota(e.begin(), e.end(), 1);
    return Column(std::move(e));
}

// Elementwise comparison; both columns must have the same size.
inline bool bruhat_leq(const Column& a, const Column& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("bruhat_leq: column size mismatch");
    for (int j = 0; j < a.size(); ++j)
        if (a.entries[j] > b.entries[j]) return false;
    return true;
}

// One-line notation over [1, n]: images[r-1] = w(r).
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n) {
        Permutation w;
        w.images.resize(n);
        std::iota(w.images.begin(), w.images.end(), 1);
        return w;
    }

    static Permutation transposition(int i, int n) {
        Permutation w = identity(n);
        std::swap(w.images[i - 1], w.images[i]);
        return w;
    }

    int n() const { return static_cast<int>(images.size()); }
    int operator()(int r) const { return images[r - 1]; }

    // Composition convention: (v*w)(r) = v(w(r)).
    friend Permutation operator*(const Permutation& v, const Permutation& w) {
        Permutation u;
        u.images.resize(w.images.size());
        for (std::size_t r = 0; r < w.images.size(); ++r)
            u.images[r] = v.images[w.images[r] - 1];
        return u;
    }

    // Coxeter length as inversion count.
    int length() const {
        int inv = 0;
        for (std::size_t a = 0; a < images.size(); ++a)
            for (std::size_t b = a + 1; b < images.size(); ++b)
                if (images[a] > images[b]) ++inv;
        return inv;
    }

    auto operator<=>(const Permutation&) const = default;
};

// Bruhat order on S_n via the sorted-prefix criterion: u <= w iff for
// every k the sorted list of {u(1),...,u(k)} is elementwise <= that of w.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
    int n = u.n();
    if (n != w.n()) throw std::invalid_argument("bruhat_leq: rank mismatch");
    std::vector<int> pu, pw;
    for (int k = 1; k <= n; ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
        for (int j = 0; j < k; ++j)
            if (pu[j] > pw[j]) return false;
    }
    return true;
}

// Sorted increasing rearrangement of (w(r_1), ..., w(r_i)).
inline Column apply_permutation(const Permutation& w, const Column& kappa) {
    std::vector<int> e;
    e.reserve(kappa.entries.size());
    for (int r : kappa.entries) e.push_back(w(r));
    std::sort(e.begin(), e.end());
    return Column(std::move(e));
}

// The ambient word i = (i_1, ..., i_l) with letters in [1, n-1].
struct Word {
    std::vector<int> letters;
    int n = 2;

    Word() = default;
    Word(std::vector<int> ls, int rank) : letters(std::move(ls)), n(rank) {
        for (int i : letters)
            if (i < 1 || i > n - 1)
                throw std::invalid_argument("word letter out of [1, n-1]");
    }

    int length() const { return static_cast<int>(letters.size()); }
    int letter(int k) const { return letters[k - 1]; }  // 1-based
};

// Multiplicities attached to a word: m_k columns of size i_k at slot k.
struct Shape {
    Word word;
    std::vector<int> mult;

    Shape() = default;
    Shape(Word w, std::vector<int> m) : word(std::move(w)), mult(std::move(m)) {
        if (mult.size() != static_cast<std::size_t>(word.length()))
            throw std::invalid_argument("mult length must equal word length");
        for (int m_k : mult)
            if (m_k < 0) throw std::invalid_argument("multiplicities must be >= 0");
    }

    int total_columns() const { return std::accumulate(mult.begin(), mult.end(), 0); }
};

// Positional subset J of [l], stored as a bitmask; bit (k-1) <=> k in J.
struct Subword {
    std::uint64_t mask = 0;
    int l = 0;

    Subword() = default;
    Subword(std::uint64_t m, int len) : mask(m), l(len) {
        if (len < 0 || len > 63) throw std::invalid_argument("subword length out of range");
        if (len < 63 && (m >> len) != 0)
            throw std::invalid_argument("subword mask exceeds [l]");
    }

    static Subword empty(int l) { return Subword(0, l); }
    static Subword full(int l) { return Subword(l == 0 ? 0 : (~std::uint64_t{0} >> (64 - l)), l); }

    bool contains(int k) const { return (mask >> (k - 1)) & 1; }
    int size() const { return static_cast<int>(std::popcount(mask)); }
    bool subset_of(const Subword& other) const { return (mask & ~other.mask) == 0; }
    Subword with(int k) const { return Subword(mask | (std::uint64_t{1} << (k - 1)), l); }
    Subword without(int k) const { return Subword(mask & ~(std::uint64_t{1} << (k - 1)), l); }

    // J intersected with [k].
    Subword up_to(int k) const {
        std::uint64_t low = k == 0 ? 0 : (~std::uint64_t{0} >> (64 - k));
        return Subword(mask & low, l);
    }

    // Member positions in increasing order.
    std::vector<int> positions() const {
        std::vector<int> ps;
        for (int k = 1; k <= l; ++k)
            if (contains(k)) ps.push_back(k);
        return ps;
    }

    auto operator<=>(const Subword&) const = default;
};

// w(J) = product of s_{i_j} over j in J, in increasing position order.
inline Permutation word_permutation(const Word& word, const Subword& J) {
    Permutation w = Permutation::identity(word.n);
    for (int k = 1; k <= J.l; ++k)
        if (J.contains(k)) w = w * Permutation::transposition(word.letter(k), word.n);
    return w;
}

inline bool is_reduced(const Word& word, const Subword& J) {
    return word_permutation(word, J).length() == J.size();
}

// Greedy left-to-right Demazure product: absorb s_{i_j} only when it
// increases length.  Equals w(J') for any maximal-length reduced J' in J.
inline Permutation w_max(const Word& word, const Subword& J) {
    Permutation w = Permutation::identity(word.n);
    for (int k = 1; k <= J.l; ++k) {
        if (!J.contains(k)) continue;
        Permutation ws = w * Permutation::transposition(word.letter(k), word.n);
        if (ws.length() > w.length()) w = ws;
    }
    return w;
}

// Column generated by J up to position k: w(J cap [k]) . omega_{i_k}.
inline Column column_up_to(const Word& word, const Subword& J, int k) {
    if (k < 1 || k > word.length()) throw std::invalid_argument("column_up_to: k out of range");
    return apply_permutation(word_permutation(word, J.up_to(k)), fundamental_column(word.letter(k)));
}

// Max flavor: w_max(J cap [k]) . omega_{i_k}.
inline Column max_column_up_to(const Word& word, const Subword& J, int k) {
    if (k < 1 || k > word.length()) throw std::invalid_argument("max_column_up_to: k out of range");
    return apply_permutation(w_max(word, J.up_to(k)), fundamental_column(word.letter(k)));
}

// J' is less than J with respect to column k: strict containment plus a
// strictly Bruhat-smaller maximal column at position k.
inline bool less_wrt_column(const Word& word, const Subword& Jp, const Subword& J, int k) {
    if (!(Jp.subset_of(J) && Jp != J)) return false;
    Column a = max_column_up_to(word, Jp, k);
    Column b = max_column_up_to(word, J, k);
    return a != b && bruhat_leq(a, b);
}

}  // namespace bs
