#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include <shiftpl/series.hpp>
#include <shiftpl/series_json.hpp>

#include "test_support.hpp"

using namespace shiftpl;

namespace {

const truncation_window W{4, 6};

series X(letter k, const truncation_window& w = W) { return series::letter(k, w); }
series one(const truncation_window& w = W) { return series::one(w); }
series sigma1(const truncation_window& w = W)
{
    series s(w);
    for (letter k = 1; k <= w.max_letter; ++k)
        s.add(word{k}, rational(1));
    return s;
}

} // namespace

TEST_CASE("word statistics")
{
    CHECK(word_stats(word{1, 2}) == word_statistics{3, 2, 1});
    CHECK(word_stats(word{}) == word_statistics{0, 0, std::nullopt});
    CHECK(word_stats(word{-1, 0, 3}) == word_statistics{2, 3, -1});
    CHECK(word{1, 2} != word{2, 1});
    CHECK(word{1} < word{1, 0});
}

TEST_CASE("coefficient lookup respects the window")
{
    auto c = series_inverse(one() - sigma1());
    CHECK(c.coefficient(word{1, 2}) == 1);
    CHECK(c.coefficient(word{2, 1}) == 1);
    CHECK(c.coefficient(word{0, 1}) == 0);
    CHECK_THROWS_AS(c.coefficient(word{7}), window_error);
    CHECK_THROWS_AS(c.coefficient(word{1, 1, 1, 1, 1}), window_error);
    // A letter below the support floor makes the coefficient known to be zero.
    CHECK(c.coefficient(word{-1, 9}) == 0);
}

TEST_CASE("series_linear")
{
    auto s = series_linear<rational>({{1, one()}, {1, X(1)}});
    CHECK(s.size() == 2);
    CHECK(s.coefficient(word{}) == 1);
    CHECK(s.coefficient(word{1}) == 1);

    std::mt19937 rng(7);
    auto r = testing::random_series(rng, W, 30);
    CHECK(series_linear<rational>({{1, r}, {-1, r}}).is_zero());

    auto two = series_linear<rational>({{2, one()}, {2, X(0)}});
    CHECK(rational(1, 2) * two == one() + X(0));

    CHECK_THROWS_AS(series_linear<rational>(std::span<const std::pair<rational, series>>{}), precondition_error);

    auto narrow = series::one(truncation_window{2, 3});
    CHECK((narrow + r).window() == truncation_window{2, 3});
}

TEST_CASE("series_mul is concatenation")
{
    CHECK(X(1) * X(2) == series::monomial(word{1, 2}, 1, W));
    CHECK(X(2) * X(1) == series::monomial(word{2, 1}, 1, W));
    CHECK(X(2) * X(1) != X(1) * X(2));
    auto p = (one() + X(1)) * (one() + X(2));
    CHECK(p.size() == 4);
    CHECK(p.coefficient(word{1, 2}) == 1);
    CHECK(p.coefficient(word{2, 1}) == 0);
}

TEST_CASE("series_inverse")
{
    SECTION("geometric series")
    {
        auto g = series_inverse(one() - X(1));
        CHECK(g.size() == 5);
        for (int k = 0; k <= 4; ++k) {
            std::vector<letter> ones(k, 1);
            CHECK(g.coefficient(word(ones.begin(), ones.end())) == 1);
        }
    }
    SECTION("scaled geometric series")
    {
        auto g = series_inverse(series_linear<rational>({{2, one()}, {-2, X(0)}}));
        CHECK(g.coefficient(word{}) == rational(1, 2));
        CHECK(g.coefficient(word{0, 0, 0}) == rational(1, 2));
    }
    SECTION("zero constant term")
    {
        CHECK_THROWS_AS(series_inverse(X(1)), not_invertible);
    }
    SECTION("agrees with the literal Neumann sum")
    {
        std::mt19937 rng(11);
        for (int i = 0; i < 20; ++i) {
            auto r = testing::random_series(rng, W, 25) + series_linear<rational>({{rational(1 + i % 3), one()}});
            if (is_zero(r.constant_term()))
                continue;
            CHECK(series_inverse(r) == testing::neumann_inverse(r));
        }
    }
}

TEST_CASE("shift and sign_flip")
{
    CHECK(shift(X(0), 1) == X(1).restricted(W.max_length, W.max_letter));
    CHECK(shift(X(0), 1).coefficient(word{1}) == 1);
    auto s = shift(series::monomial(word{1, 2}, 1, W), 2);
    CHECK(s.coefficient(word{3, 4}) == 1);
    CHECK(s.window() == truncation_window{4, 8, 2});

    auto neg = shift(X(0, truncation_window{2, 3}), -1);
    CHECK(neg.coefficient(word{-1}) == 1);
    CHECK(neg.window().min_letter == -1);

    CHECK(sign_flip(series::monomial(word{1, 2}, 1, W)).coefficient(word{1, 2}) == 1);
    CHECK(sign_flip(X(1)).coefficient(word{1}) == -1);
}

TEST_CASE("ring axioms on sampled windows")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        truncation_window w{1 + trial % 4, 1 + trial % 6};
        auto a = testing::random_series(rng, w, 12);
        auto b = testing::random_series(rng, w, 12);
        auto c = testing::random_series(rng, w, 12);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(sign_flip(a * b) == sign_flip(a) * sign_flip(b));
        CHECK(sign_flip(sign_flip(a)) == a);
        CHECK(shift(shift(a, 2), 3) == shift(a, 5));
        CHECK(shift(shift(a, 2), 3).window() == shift(a, 5).window());
        CHECK(shift(shift(a, -2), 2) == a);

        auto u = a + series::one(w);
        if (!is_zero(u.constant_term())) {
            auto inv = series_inverse(u);
            CHECK(u * inv == series::one(w));
            CHECK(inv * u == series::one(w));
            CHECK(series_inverse(inv) == u);
        }
    }
}

TEST_CASE("window exactness under enlargement")
{
    // Composition language computed at two window sizes agrees on the smaller one.
    truncation_window small{3, 4}, large{5, 7};
    auto c_small = series_inverse(one(small) - sigma1(small));
    auto c_large = series_inverse(one(large) - sigma1(large));
    CHECK(c_large.restricted(small) == c_small);
    CHECK(first_difference(c_large, c_small) == std::nullopt);
}

TEST_CASE("JSON dump is sorted and round-trips")
{
    auto s = series_linear<rational>({{rational(1, 2), X(2) * X(1)}, {-3, X(1)}, {1, one()}});
    CHECK(dump_series(s) ==
          R"({"window":{"L":4,"K":6,"O":0},"terms":[{"word":[],"coeff":"1/1"},{"word":[1],"coeff":"-3/1"},)"
          R"({"word":[2,1],"coeff":"1/2"}]})");

    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        auto r = testing::random_series(rng, W, 20);
        auto back = series_from_json<rational>(series_to_json(r));
        CHECK(back == r);
        CHECK(back.window() == r.window());
        CHECK(dump_series(back) == dump_series(r));
    }

    auto m = to_marked(s);
    m.add(word{3}, tpoly{0, rational(2)});
    auto mj = series_to_json(m);
    CHECK(mj["terms"][3]["coeff"].dump() == R"({"t":[["0/1","2/1"]]})");
    CHECK(series_from_json<tpoly>(mj) == m);

    auto bad = series_to_json(s);
    bad["terms"][0]["word"] = {9};
    CHECK_THROWS(series_from_json<rational>(bad));
}
