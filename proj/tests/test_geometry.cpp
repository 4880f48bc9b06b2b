#include <doctest.h>

#include "bs/geometry.hpp"
#include "bs/standard.hpp"

using namespace bs;

namespace {

const PrimeField kF{};
const Word kRunning({1, 2, 1}, 3);

FpMatrix identity_pattern(int n, int i) {
    FpMatrix m(n, i);
    for (int r = 0; r < i; ++r) m.at(r, r) = 1;
    return m;
}

}  // namespace

TEST_CASE("plucker_minor basics") {
    CHECK(plucker_minor(fundamental_column(2), identity_pattern(3, 2), kF) == 1);
    FpMatrix e1(3, 1);
    e1.at(0, 0) = 1;
    CHECK(plucker_minor(Column({2}), e1, kF) == 0);
    CHECK_THROWS_AS(plucker_minor(Column({1, 2}), e1, kF), std::invalid_argument);
}

TEST_CASE("plucker_minor matches the introduction's closed form") {
    // Delta_2132 = x_2 (y_11 y_32 - y_31 y_12) z_2 on the GL(3) coordinates
    PrimeField fp;
    FpMatrix x(3, 1), y(3, 2), z(3, 1);
    std::uint64_t vals = 1;
    for (auto* e : {&x.a, &z.a})
        for (auto& v : *e) v = vals++ * 17 % fp.p;
    for (auto& v : y.a) v = vals++ * 131 % fp.p;
    std::uint64_t minor_y = fp.sub(fp.mul(y.at(0, 0), y.at(2, 1)), fp.mul(y.at(2, 0), y.at(0, 1)));
    std::uint64_t want = fp.mul(fp.mul(x.at(1, 0), minor_y), z.at(1, 0));

    Shape shape(kRunning, {1, 1, 1});
    ConfigurationPoint pt{{x, y, z}};
    CHECK(standard_monomial_eval(Tableau({2, 1, 3, 2}), shape, pt, fp) == want);
}

TEST_CASE("standard_monomial_eval basics") {
    Shape shape(kRunning, {1, 1, 1});
    ConfigurationPoint pt{{identity_pattern(3, 1), identity_pattern(3, 2), identity_pattern(3, 1)}};
    CHECK(standard_monomial_eval(Tableau({1, 1, 2, 1}), shape, pt, kF) == 1);
    CHECK(standard_monomial_eval(Tableau{}, Shape(kRunning, {0, 0, 0}),
                                 ConfigurationPoint{{FpMatrix(3, 1), FpMatrix(3, 2), FpMatrix(3, 1)}},
                                 kF) == 1);
}

TEST_CASE("sample_point determinism and triangular case") {
    ConfigurationPoint a = sample_point(kRunning, Subword::full(3), 42);
    ConfigurationPoint b = sample_point(kRunning, Subword::full(3), 42);
    for (std::size_t k = 0; k < a.factors.size(); ++k) CHECK(a.factors[k].a == b.factors[k].a);
    ConfigurationPoint c = sample_point(kRunning, Subword::full(3), 43);
    CHECK(a.factors[0].a != c.factors[0].a);

    // J = {}: products stay upper triangular, principal minors nonzero
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        ConfigurationPoint z = sample_point(kRunning, Subword::empty(3), seed);
        for (int k = 1; k <= 3; ++k)
            CHECK(plucker_minor(fundamental_column(kRunning.letter(k)), z.factors[k - 1], kF) != 0);
    }
}

TEST_CASE("schubert_image_check examples") {
    CHECK(schubert_image_check(kRunning, Subword::empty(3), 2, 8, 1));
    CHECK(schubert_image_check(kRunning, Subword(0b001, 3), 1, 8, 1));
    CHECK(schubert_image_check(kRunning, Subword::full(3), 3, 8, 1));
    // every (J, k) at desk scale
    for (std::uint64_t mask = 0; mask < 8; ++mask)
        for (int k = 1; k <= 3; ++k)
            CHECK(schubert_image_check(kRunning, Subword(mask, 3), k, 6, 7));
}

TEST_CASE("minors above the Schubert image vanish for J = {1} at k = 1") {
    // s_1 F^1 within F^2 forces the row-3 coordinate to zero
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        ConfigurationPoint z = sample_point(kRunning, Subword(0b001, 3), seed);
        CHECK(plucker_minor(Column({3}), z.factors[0], kF) == 0);
    }
}

TEST_CASE("independence rank of the running example is 13") {
    TableauSet ts = generate_constructible(kRunning, Subword::full(3), {1, 1, 1}).tableaux;
    Shape shape(kRunning, {1, 1, 1});
    CHECK(independence_rank(ts, shape, {Subword::full(3)}, 20, 5) == 13);
}

TEST_CASE("independence on the non-ample union remark") {
    Shape shape(kRunning, {0, 0, 1});
    TableauSet ts{Tableau({1}), Tableau({2})};
    CHECK(independence_rank(ts, shape, {Subword(0b001, 3), Subword(0b100, 3)}, 10, 5) == 2);
}

TEST_CASE("rank is the set size for the trivial shape") {
    Shape shape(kRunning, {0, 0, 0});
    CHECK(independence_rank(TableauSet{Tableau{}}, shape, {Subword::full(3)}, 3, 0) == 1);
}

TEST_CASE("rank is monotone in points and bounded by the set size") {
    TableauSet ts = generate_constructible(kRunning, Subword::full(3), {1, 1, 1}).tableaux;
    Shape shape(kRunning, {1, 1, 1});
    int prev = 0;
    for (int pts : {1, 4, 8, 13, 20}) {
        int rk = independence_rank(ts, shape, {Subword::full(3)}, pts, 9);
        CHECK(rk >= prev);
        CHECK(rk <= static_cast<int>(ts.size()));
        CHECK(rk <= pts);
        prev = rk;
    }
}

TEST_CASE("torus scaling multiplies the monomial by the weight") {
    PrimeField fp;
    Shape shape(kRunning, {1, 1, 1});
    TableauSet ts = generate_constructible(kRunning, Subword::full(3), {1, 1, 1}).tableaux;
    ConfigurationPoint z = sample_point(kRunning, Subword::full(3), 3);
    std::uint64_t t = 12345;
    for (int row = 1; row <= 3; ++row) {
        ConfigurationPoint scaled = z;
        for (FpMatrix& f : scaled.factors)
            for (int c = 0; c < f.cols; ++c) f.at(row - 1, c) = fp.mul(f.at(row - 1, c), t);
        for (const Tableau& tau : ts) {
            int count = static_cast<int>(std::count(tau.entries.begin(), tau.entries.end(), row));
            CHECK(standard_monomial_eval(tau, shape, scaled, fp) ==
                  fp.mul(standard_monomial_eval(tau, shape, z, fp), fp.pow(t, count)));
        }
    }
}

TEST_CASE("desk-scale independence sweep") {
    // small words: full standard set has full rank at J = [l]
    for (const auto& [letters, n, mult] :
         std::vector<std::tuple<std::vector<int>, int, std::vector<int>>>{
             {{1}, 2, {2}},
             {{1, 1}, 2, {1, 1}},
             {{1, 2}, 3, {1, 1}},
             {{2, 1, 2}, 3, {0, 1, 1}},
             {{1, 2, 1}, 3, {2, 1, 0}},
             {{3, 2, 3}, 4, {0, 2, 1}}}) {
        Word word(letters, n);
        Subword J = Subword::full(word.length());
        TableauSet ts = generate_constructible(word, J, mult).tableaux;
        Shape shape(word, mult);
        int want = static_cast<int>(ts.size());
        CHECK(independence_rank(ts, shape, {J}, want + 5, 11) == want);
    }
}
