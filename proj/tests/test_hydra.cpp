#include <map>

#include <catch_amalgamated.hpp>

#include <shiftpl/hydra.hpp>
#include <shiftpl/oracle.hpp>

using namespace shiftpl;

namespace {

series language(language_kind kind, std::optional<long> m, const truncation_window& w)
{
    return build_language(kind, {m, {}}, w);
}

series X(letter k, const truncation_window& w) { return series::letter(k, w); }

bool weakly_decreasing(const word& x)
{
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] > x[i - 1])
            return false;
    return true;
}

} // namespace

TEST_CASE("enriched trees: small cases")
{
    const truncation_window w{5, 8};
    const truncation_window inner{4, 8};
    CHECK(enriched_trees(series::one(inner), w) == X(0, w));

    auto a = enriched_trees(language(language_kind::pi_m, 2, inner), w);
    for (const word& x : {word{0, 1}, word{0, 1, 1}, word{0, 2, 1}, word{0, 1, 2}, word{0}})
        CHECK(a.coefficient(x) == 1);
    CHECK(a.coefficient(word{0, 3}) == 0);
    CHECK(a.coefficient(word{1}) == 0);
    CHECK(series_order(a) == 0);

    CHECK_THROWS_AS(enriched_trees(series::zero(inner), w), precondition_error);
    CHECK_THROWS_AS(enriched_trees(series::one(truncation_window{2, 8}), w), window_error);
}

TEST_CASE("enriched tree coefficients count colored trees")
{
    const truncation_window w{5, 10};
    for (long m : {1L, 2L, 3L}) {
        auto a = enriched_trees(language(language_kind::pi_m, m, truncation_window{4, 10}), w);
        auto ok = [m](const word& x) {
            return weakly_decreasing(x) && std::all_of(x.begin(), x.end(), [m](letter d) { return d <= m; });
        };
        std::map<word, int> counts;
        for (const auto& t : oracle::enum_trees(0, 10, ok))
            if (static_cast<int>(t.preorder.size()) <= w.max_length)
                ++counts[t.preorder];
        std::map<word, int> from_series;
        for (const auto& [x, c] : a.terms()) {
            REQUIRE(c.get_den() == 1);
            if (x.weight() <= 10)
                from_series[x] = static_cast<int>(c.get_num().get_si());
        }
        CHECK(from_series == counts);
    }
}

TEST_CASE("trees enriched with all partitions are X_0 times compositions")
{
    const truncation_window w{5, 10};
    auto a = enriched_trees(language(language_kind::pi_inf, std::nullopt, truncation_window{4, 10}), w);
    auto comps = language(language_kind::compositions, std::nullopt, truncation_window{4, 10});
    CHECK(a == prefix_letter(0, comps));
}

TEST_CASE("hydra fractions")
{
    const truncation_window w{5, 8};
    for (long m : {1L, 2L, 3L}) {
        auto r = hydra_R(m, w);
        CHECK(r.coefficient(word{0}) == 1);
        auto pi = language(language_kind::pi_m, m, truncation_window{4, 8});
        CHECK(sign_flip(r) == -enriched_trees(pi, w));
    }
    auto r1 = hydra_R(1, w);
    CHECK(r1.coefficient(word{0, 1}) == -1);
    CHECK(r1.coefficient(word{0, 1, 2}) == 1);
    CHECK(r1.coefficient(word{0, 1, 1}) == 1);
    // R_1 = X_0 / (1 + sigma R_1)
    auto rhs = X(0, w) * series_inverse(series::one(w) + shift(r1, 1).restricted(w));
    CHECK(r1 == rhs);

    auto r_inf = hydra_R(std::nullopt, w);
    CHECK(r_inf == hydra_R(8, w));
    CHECK_THROWS_AS(hydra_R(0, w), precondition_error);
}

TEST_CASE("quotient forms")
{
    const truncation_window w{5, 10};
    for (long m : {2L, 3L, 4L}) {
        auto q = quotient_partition_form(m, w);
        CHECK(q.window() == w);
        CHECK(q == hydra_R(m - 1, w));
        auto c = quotient_composition_form(m, w);
        CHECK(c == enriched_trees(language(language_kind::pi_m, m - 1, truncation_window{4, 10}), w));
    }
    CHECK_THROWS_AS(quotient_partition_form(1, w), precondition_error);
    CHECK_THROWS_AS(quotient_composition_form(1, w), precondition_error);
}

TEST_CASE("hydra fractions invert through distinct partitions")
{
    const truncation_window w{5, 10};
    for (long m : {1L, 2L, 3L}) {
        auto r = hydra_R(m, w);
        auto s = prefix_letter(0, language(language_kind::pi_upper_m, m, truncation_window{4, 10}));
        auto p = plethysm(r, s);
        CHECK(p == X(0, p.window()));
        auto inv = plethystic_inverse(r);
        CHECK(inv == s);
    }
}

TEST_CASE("compositions factor into cyclic blocks")
{
    const truncation_window w{5, 12};
    auto pi_inf = language(language_kind::pi_inf, std::nullopt, w);
    auto comps = language(language_kind::compositions, std::nullopt, w);
    auto x0c = prefix_letter(0, language(language_kind::compositions, std::nullopt, truncation_window{4, 12}));
    CHECK(plethysm(pi_inf, x0c) == comps);

    for (long m : {1L, 2L}) {
        auto a = enriched_trees(language(language_kind::pi_m, m, truncation_window{4, 12}), w);
        CHECK(plethysm(pi_inf, a) == language(language_kind::c_m, m, w));
    }
}

TEST_CASE("local minima factorization")
{
    auto f = local_minima_factor(word{3, 5, 7, 7, 4, 5});
    CHECK(f.minima == word{3});
    CHECK(f.blocks == std::vector<word>{word{5, 7, 7, 4, 5}});

    f = local_minima_factor(word{2, 3, 1, 5, 1});
    CHECK(f.minima == word{2, 1, 1});
    CHECK(f.blocks == std::vector<word>{word{3}, word{5}, word{}});

    f = local_minima_factor(word{4});
    CHECK(f.minima == word{4});
    CHECK(f.blocks == std::vector<word>{word{}});

    CHECK(local_minima_factor(word{}).minima.empty());
    CHECK_THROWS_AS(local_minima_factor(word{1, 0}), precondition_error);

    for (int n = 1; n <= 14; ++n)
        for (const auto& k : oracle::enum_compositions(n)) {
            auto g = local_minima_factor(k);
            REQUIRE(reassemble(g) == k);
            CHECK(static_cast<int>(g.minima.size()) == oracle::count_local_minima(k));
            bool ok = true;
            for (std::size_t i = 0; i < g.minima.size(); ++i) {
                word block{g.minima[i]};
                block.append(g.blocks[i]);
                ok = ok && oracle::is_cyclic(block) && (i == 0 || g.minima[i] <= g.minima[i - 1]);
            }
            CHECK(ok);
        }
}

TEST_CASE("compositions marked by local minima")
{
    const truncation_window w{5, 12};
    auto marked = compositions_by_local_minima(w);
    CHECK(marked.window() == w);
    oracle::count_table from_series;
    for (const auto& [x, c] : marked.terms()) {
        if (x.empty() || x.weight() > 12)
            continue;
        for (int t = 0; t <= c.degree(); ++t) {
            const auto& v = c.coefficients()[static_cast<std::size_t>(t)];
            if (!is_zero(v))
                from_series.add(x.weight(), static_cast<long>(x.size()), t, v.get_num().get_ui());
        }
    }
    oracle::count_table expected;
    auto all = oracle::count_table_for(oracle::table_kind::compositions_by_minima, 12);
    for (const auto& [key, c] : all.entries())
        if (std::get<1>(key) <= w.max_length)
            expected.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    CHECK(from_series == expected);
}
