#pragma once

// Catalog of identities and the runner that checks them.
//
// Each entry is data: an id, a statement, default bounds and either two
// constructors (left and right side, compared coefficientwise) or a property
// check returning a witness on failure. Series identities use bounds as the
// window (L, K); q-series identities read L as the z-degree and K as the
// q-degree, and oracle sides count words of weight <= K and length <= L.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "hydra.hpp"
#include "oracle.hpp"
#include "qseries.hpp"
#include "trees.hpp"

namespace shiftpl::verify {

struct bounds {
    int L = 5;
    int K = 14;
    friend bool operator==(const bounds&, const bounds&) = default;
};

/// Largest windows on which series are built. Memory grows steeply with L:
/// R_1 needs about 2 s at L = 10, K = 40 and about 50 s at L = 12.
inline constexpr bounds series_limits{12, 64};

/// Throws window_error when w exceeds series_limits.
inline void require_within_limits(const truncation_window& w)
{
    if (w.max_length > series_limits.L || w.max_letter > series_limits.K || w.max_length < 1 || w.max_letter < 1)
        throw window_error("window " + to_string(w) + " is outside 1 <= L <= " + std::to_string(series_limits.L) +
                           ", 1 <= K <= " + std::to_string(series_limits.K));
}

enum class identity_kind { series, q_series, property };

struct identity {
    std::string id;
    std::string statement;
    identity_kind kind = identity_kind::series;
    bounds defaults;
    std::function<series(const bounds&)> lhs;
    std::function<series(const bounds&)> rhs;
    std::function<zq_series(const bounds&)> q_lhs;
    std::function<zq_series(const bounds&)> q_rhs;
    /// Property identities: a witness on failure, none on success.
    std::function<std::optional<std::string>(const bounds&)> check;
    /// Whether the check builds noncommutative series on the window (L, K).
    bool builds_series = true;
};

struct report {
    std::string id;
    std::string window;
    bool pass = false;
    std::optional<std::string> witness;
    double seconds = 0;

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j{{"id", id}, {"window", window}, {"status", pass ? "pass" : "fail"}};
        j["witness"] = witness ? nlohmann::ordered_json(*witness) : nlohmann::ordered_json();
        j["seconds"] = seconds;
        return j;
    }

    std::string line() const
    {
        std::ostringstream os;
        os << (pass ? "PASS " : "FAIL ") << id << " [" << window << "]";
        if (witness)
            os << " " << *witness;
        os.setf(std::ios::fixed);
        os.precision(2);
        os << " " << seconds << "s";
        return os.str();
    }
};

namespace detail {

inline std::string coefficient_text(const rational& c) { return to_fraction_string(c); }

inline std::string coefficient_text(const tpoly& c)
{
    std::ostringstream os;
    os << c;
    return os.str();
}

inline tpoly t_power(long j)
{
    std::vector<rational> cs(static_cast<std::size_t>(j + 1));
    cs.back() = 1;
    return tpoly(std::move(cs));
}

/// 1 + sum over words w of z^{length} t^{marker(w)} q^{weight}, for weights 1..b.K.
inline zq_series oracle_series(const bounds& b, const std::function<std::vector<word>(int)>& words,
                               const std::function<long(const word&)>& marker = {})
{
    zq_series r = zq_series::one(b.L, b.K);
    for (int n = 1; n <= b.K; ++n)
        for (const auto& w : words(n))
            if (static_cast<int>(w.size()) <= b.L)
                r.add(static_cast<int>(w.size()), n, t_power(marker ? marker(w) : 0));
    return r;
}

inline truncation_window window_of(const bounds& b) { return {b.L, b.K}; }
inline truncation_window inner_of(const bounds& b) { return {b.L - 1, b.K}; }

inline bool weakly_decreasing(const word& x)
{
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] > x[i - 1])
            return false;
    return true;
}

inline std::vector<word> cyclic_compositions(int n)
{
    return oracle::enum_compositions(n, oracle::is_cyclic);
}

/// Round trip and validity of the insertion tree for cyclic compositions of
/// weight <= b.K, and set equality with the enumerated trees for every root.
inline std::optional<std::string> check_insertion(const bounds& b)
{
    int n = b.K;
    if (n < 1 || n > oracle::max_composition_weight)
        throw precondition_error("insertion check needs 1 <= K <= " + std::to_string(oracle::max_composition_weight));
    // A root r >= 1 has at most (n - 1) / 2 children, with offsets at most n - 2.
    auto pi = build_language(language_kind::pi_inf, {}, truncation_window{std::max(1, (n - 1) / 2), std::max(1, n - 2)});
    std::vector<std::set<std::string>> by_root(static_cast<std::size_t>(n + 1));
    for (int w = 1; w <= n; ++w)
        for (const auto& k : cyclic_compositions(w)) {
            auto t = insertion_tree(k);
            if (preorder_word(t) != k)
                return "round trip fails at (" + to_string(k) + ")";
            auto v = validate_tree(t, pi, k[0]);
            if (v != tree_verdict::valid)
                return "tree " + to_text(t) + " of (" + to_string(k) + ") is not valid";
            by_root[static_cast<std::size_t>(k[0])].insert(to_text(t));
        }
    for (int r = 1; r <= n; ++r) {
        std::set<std::string> enumerated;
        for (const auto& t : oracle::enum_trees(r, n, weakly_decreasing))
            enumerated.insert(t.text);
        if (enumerated != by_root[static_cast<std::size_t>(r)])
            return "tree sets differ for root " + std::to_string(r);
    }
    return std::nullopt;
}

/// Differences <= m is exactly validity against Pi_m, and the trees obtained are
/// exactly those whose child offsets are weakly decreasing and <= m.
inline std::optional<std::string> check_refinement(long m, const bounds& b)
{
    int n = b.K;
    if (n < 1 || n > oracle::max_composition_weight)
        throw precondition_error("refinement check needs 1 <= K <= " + std::to_string(oracle::max_composition_weight));
    auto pim = build_language(language_kind::pi_m, {m, {}}, truncation_window{n, n});
    auto bounded = oracle::differences([m](long d) { return d <= m; });
    std::vector<std::set<std::string>> by_root(static_cast<std::size_t>(n + 1));
    for (int w = 1; w <= n; ++w)
        for (const auto& k : cyclic_compositions(w)) {
            auto t = insertion_tree(k);
            auto v = validate_tree(t, pim, k[0]);
            if (v == tree_verdict::undecidable)
                return "validity of " + to_text(t) + " is undecidable";
            if (bounded(k) != (v == tree_verdict::valid))
                return "refinement fails at (" + to_string(k) + ")";
            if (bounded(k))
                by_root[static_cast<std::size_t>(k[0])].insert(to_text(t));
        }
    auto ok = [m](const word& x) {
        return weakly_decreasing(x) && std::all_of(x.begin(), x.end(), [m](letter d) { return d <= m; });
    };
    for (int r = 1; r <= n; ++r) {
        std::set<std::string> enumerated;
        for (const auto& t : oracle::enum_trees(r, n, ok))
            enumerated.insert(t.text);
        if (enumerated != by_root[static_cast<std::size_t>(r)])
            return "tree sets differ for root " + std::to_string(r) + " and m = " + std::to_string(m);
    }
    return std::nullopt;
}

inline std::optional<std::string> check_minima_factorization(const bounds& b)
{
    for (int n = 1; n <= b.K; ++n)
        for (const auto& k : oracle::enum_compositions(n)) {
            auto f = local_minima_factor(k);
            if (reassemble(f) != k)
                return "reassembly fails at (" + to_string(k) + ")";
            if (static_cast<int>(f.minima.size()) != oracle::count_local_minima(k))
                return "wrong number of minima at (" + to_string(k) + ")";
            for (std::size_t i = 0; i < f.minima.size(); ++i) {
                word block{f.minima[i]};
                block.append(f.blocks[i]);
                if (!oracle::is_cyclic(block) || (i > 0 && f.minima[i] > f.minima[i - 1]))
                    return "bad block " + std::to_string(i) + " at (" + to_string(k) + ")";
            }
        }
    return std::nullopt;
}

struct set_family {
    const char* tag;
    const char* spec;
};

inline const std::vector<set_family>& set_families()
{
    static const std::vector<set_family> families{
        {"from2", "2.."},  {"from3", "3.."},  {"1to3", "1..3"}, {"single2", "{2}"},
        {"even", "0 mod 2"}, {"even-pos", "0 mod 2, no-zero"}, {"odd", "odd"}, {"1mod3", "1 mod 3"},
    };
    return families;
}

inline std::optional<std::string> check_worked_examples(const bounds& b)
{
    for (const auto& f : set_families()) {
        auto s = set_spec::parse(f.spec);
        auto special = ps_worked_example(s, b.L, b.K);
        if (!special)
            return std::string("no worked example for ") + f.spec;
        if (auto d = first_difference(*special, closed_form_ps(s, b.L, b.K)))
            return std::string("S = ") + f.spec + " differs at (z,t,q)=(" + std::to_string(std::get<0>(*d)) + "," +
                   std::to_string(std::get<1>(*d)) + "," + std::to_string(std::get<2>(*d)) + ")";
    }
    return std::nullopt;
}

inline std::optional<std::string> fixed_point_witness(const std::string& what, const implicit_solution<rational>& s,
                                                      int expected_iterations)
{
    if (s.iterations != expected_iterations)
        return what + ": " + std::to_string(s.iterations) + " iterations, expected " +
               std::to_string(expected_iterations);
    if (auto d = first_difference(s.solution, s.next))
        return what + ": iterates N and N+1 differ at (" + to_string(*d) + ")";
    return std::nullopt;
}

/// Iterates N = K + L and N + 1 agree for every tree equation and inverse
/// equation used in the catalog, at the given bounds.
inline std::optional<std::string> check_solver(const bounds& b)
{
    auto w = window_of(b);
    int n = b.K + b.L;
    for (std::optional<long> m : {std::optional<long>(1), std::optional<long>(2), std::optional<long>(3),
                                  std::optional<long>()}) {
        auto pi = partitions_decreasing(m, inner_of(b));
        std::string name = m ? "Pi_" + std::to_string(*m) : std::string("Pi_inf");
        if (auto e = fixed_point_witness("A of " + name, enriched_trees_detailed(pi, w), n))
            return e;
        if (auto e = fixed_point_witness("A of " + name + "(-X)", enriched_trees_detailed(sign_flip(pi), w), n))
            return e;
    }
    // Inverse equations are solved on (L, K', 0) where K' = K - ord.
    auto sigma1 = build_language(language_kind::sigma, {std::nullopt, set_spec::from(1)}, w);
    if (auto e = fixed_point_witness("inverse of Sigma_1", plethystic_inverse_detailed(sigma1), n - 1))
        return e;
    auto cplus = build_language(language_kind::compositions, {}, w) - series::one(w);
    if (auto e = fixed_point_witness("inverse of C+", plethystic_inverse_detailed(cplus), n - 1))
        return e;
    for (long m : {1L, 2L, 3L})
        if (auto e = fixed_point_witness("inverse of R_" + std::to_string(m),
                                         plethystic_inverse_detailed(hydra_R(m, w)), n))
            return e;
    return std::nullopt;
}

inline series x0_on(const truncation_window& w) { return series::letter(0, w); }

/// An inverse identity R o_s R^<-1> = X_0 with R built on (L, K + ord R) so
/// that the composite is certified on (L, K, -ord R).
inline identity inverse_identity(std::string id, std::string statement, letter order,
                                 std::function<series(const truncation_window&)> r)
{
    identity e{std::move(id), std::move(statement), identity_kind::series, {5, 12}};
    e.lhs = [r, order](const bounds& b) {
        auto rr = r(truncation_window{b.L, b.K + order});
        return plethysm(rr, plethystic_inverse(rr));
    };
    e.rhs = [order](const bounds& b) { return x0_on(truncation_window{b.L, b.K, -order}); };
    return e;
}

inline std::vector<identity> build_catalog()
{
    std::vector<identity> c;
    auto series_id = [&](std::string id, std::string statement, bounds d, std::function<series(const bounds&)> l,
                         std::function<series(const bounds&)> r) {
        identity e{std::move(id), std::move(statement), identity_kind::series, d};
        e.lhs = std::move(l);
        e.rhs = std::move(r);
        c.push_back(std::move(e));
    };
    auto q_id = [&](std::string id, std::string statement, bounds d, std::function<zq_series(const bounds&)> l,
                    std::function<zq_series(const bounds&)> r, bool builds_series = true) {
        identity e{std::move(id), std::move(statement), identity_kind::q_series, d};
        e.builds_series = builds_series;
        e.q_lhs = std::move(l);
        e.q_rhs = std::move(r);
        c.push_back(std::move(e));
    };
    auto property = [&](std::string id, std::string statement, bounds d,
                        std::function<std::optional<std::string>(const bounds&)> f, bool builds_series = false) {
        identity e{std::move(id), std::move(statement), identity_kind::property, d};
        e.builds_series = builds_series;
        e.check = std::move(f);
        c.push_back(std::move(e));
    };

    q_id("rr-quotient", "umbral(R_1) = z P_2(zq) / P_2(z)", {8, 40},
         [](const bounds& b) { return umbral(hydra_R(1, window_of(b)), b.L, b.K); },
         [](const bounds& b) {
             auto p = closed_form_pm(2, b.L, b.K);
             return (p.substitute_zq(1) * p.reciprocal()).times_z();
         });

    for (long m : {2L, 3L, 4L})
        series_id("quotient-partitions-m" + std::to_string(m),
                  "R_" + std::to_string(m - 1) + " = X_0 (sigma^" + std::to_string(m - 1) + " P_" +
                      std::to_string(m) + ") (P_" + std::to_string(m) + ")^-1",
                  {6, 18}, [m](const bounds& b) { return hydra_R(m - 1, window_of(b)); },
                  [m](const bounds& b) { return quotient_partition_form(m, window_of(b)); });

    for (long m : {2L, 3L}) {
        auto ms = std::to_string(m - 1);
        series_id("quotient-compositions-m" + std::to_string(m),
                  "A_{Pi_" + ms + "} = X_0 (sigma^" + ms + " C^(" + ms + "))^-1 C^(" + ms + ")", {6, 18},
                  [m](const bounds& b) { return enriched_trees(partitions_decreasing(m - 1, inner_of(b)), window_of(b)); },
                  [m](const bounds& b) { return quotient_composition_form(m, window_of(b)); });
        q_id("quotient-compositions-q-m" + std::to_string(m), "umbral(A_{Pi_" + ms + "}) in closed form", {6, 30},
             [m](const bounds& b) {
                 return umbral(enriched_trees(partitions_decreasing(m - 1, inner_of(b)), window_of(b)), b.L, b.K);
             },
             [m](const bounds& b) { return closed_form_hydra_a(m, b.L, b.K); });
    }

    for (long m : {2L, 3L}) {
        auto ms = std::to_string(m);
        series_id("k-duality-m" + ms, "K-dual of P_" + ms + " = C^(" + std::to_string(m - 1) + ")", {5, 14},
                  [m](const bounds& b) { return k_dual(build_language(language_kind::p_m, {m, {}}, window_of(b))); },
                  [m](const bounds& b) { return build_language(language_kind::c_m, {m - 1, {}}, window_of(b)); });
        q_id("bounded-differences-q-m" + ms,
             "1 / sum_k (-1)^k q^{" + ms + " C(k,2)+k} z^k / (q;q)_k counts differences <= " + std::to_string(m - 1),
             {16, 16}, [m](const bounds& b) { return closed_form_cm(m, b.L, b.K); },
             [m](const bounds& b) {
                 return oracle_series(b, [m](int n) {
                     return oracle::enum_compositions(n, oracle::differences([m](long d) { return d <= m - 1; }));
                 });
             },
             false);
    }

    property("insertion-bijection", "insertion trees of cyclic compositions: round trip, validity, all trees", {1, 14},
             check_insertion);
    property("insertion-refinement", "differences <= m exactly when the insertion tree is Pi_m-enriched, m = 1, 2",
             {1, 12}, [](const bounds& b) {
                 for (long m : {1L, 2L})
                     if (auto e = check_refinement(m, b))
                         return e;
                 return std::optional<std::string>();
             });

    q_id("local-minima-q", "closed form with t marking local minima", {16, 16},
         [](const bounds& b) { return closed_form_local_minima(b.L, b.K); },
         [](const bounds& b) {
             return oracle_series(
                 b, [](int n) { return oracle::enum_compositions(n); },
                 [](const word& k) { return static_cast<long>(oracle::count_local_minima(k)); });
         },
         false);
    q_id("local-minima-nc", "umbral(Pi_inf o_s (t X_0 C)) in closed form", {5, 12},
         [](const bounds& b) { return umbral(compositions_by_local_minima(window_of(b)), b.L, b.K); },
         [](const bounds& b) { return closed_form_local_minima(b.L, b.K); });
    property("local-minima-factorization", "split at running minima: cyclic blocks, weakly decreasing minima",
             {1, 14}, check_minima_factorization);

    for (const auto& f : set_families()) {
        auto s = set_spec::parse(f.spec);
        q_id(std::string("branchless-") + f.tag, std::string("P_S closed form, S = ") + f.spec, {6, 24},
             [s](const bounds& b) { return closed_form_ps(s, b.L, b.K); },
             [s](const bounds& b) {
                 return oracle_series(b, [&s](int n) {
                     return oracle::enum_partitions_with_rises(n, [&s](long d) { return s.contains(d); });
                 });
             },
             false);
    }
    property("branchless-worked-examples", "family formulas for P_S agree with the generic sum", {6, 24},
             check_worked_examples);

    for (const auto& f : set_families()) {
        auto s = set_spec::parse(f.spec);
        q_id(std::string("dual-compositions-") + f.tag, std::string("C^S-hat closed form, S = ") + f.spec, {14, 14},
             [s](const bounds& b) { return closed_form_cshat(s, b.L, b.K); },
             [s](const bounds& b) {
                 return oracle_series(b, [&s](int n) {
                     return oracle::enum_compositions(
                         n, oracle::differences([&s](long d) { return !(d >= 0 && s.contains(d)); }));
                 });
             },
             false);
    }

    for (long m : {2L, 3L}) {
        auto ms = std::to_string(m);
        series_id("distinct-partitions-m" + ms, "P_" + ms + " o_s (X_0 Pi^" + std::to_string(m - 1) + ") = Pi^inf",
                  {5, 14},
                  [m](const bounds& b) {
                      auto pm = build_language(language_kind::p_m, {m, {}}, window_of(b));
                      auto up = build_language(language_kind::pi_upper_m, {m - 1, {}}, inner_of(b));
                      return plethysm(pm, prefix_letter(0, up));
                  },
                  [](const bounds& b) { return build_language(language_kind::pi_upper_inf, {}, window_of(b)); });
    }
    series_id("carlitz-factorization", "Carlitz o_s (X_0 / (1 - X_0)) = C", {5, 14},
              [](const bounds& b) {
                  auto w = window_of(b);
                  auto x0 = x0_on(w);
                  return plethysm(build_language(language_kind::carlitz, {}, w),
                                  x0 * series_inverse(series::one(w) - x0));
              },
              [](const bounds& b) { return build_language(language_kind::compositions, {}, window_of(b)); });
    series_id("cyclic-factorization", "Pi_inf o_s (X_0 C) = C", {5, 14},
              [](const bounds& b) {
                  auto c = build_language(language_kind::compositions, {}, inner_of(b));
                  return plethysm(build_language(language_kind::pi_inf, {}, window_of(b)), prefix_letter(0, c));
              },
              [](const bounds& b) { return build_language(language_kind::compositions, {}, window_of(b)); });

    c.push_back(inverse_identity("inverse-sigma1", "Sigma_1 o_s Sigma_1^<-1> = X_0", 1, [](const truncation_window& w) {
        return build_language(language_kind::sigma, {std::nullopt, set_spec::from(1)}, w);
    }));
    c.push_back(inverse_identity("inverse-compositions", "C+ o_s (C+)^<-1> = X_0", 1,
                                 [](const truncation_window& w) {
                                     return build_language(language_kind::compositions, {}, w) - series::one(w);
                                 }));
    for (long m : {1L, 2L, 3L})
        c.push_back(inverse_identity("inverse-hydra-m" + std::to_string(m),
                                     "R_" + std::to_string(m) + " o_s R_" + std::to_string(m) + "^<-1> = X_0", 0,
                                     [m](const truncation_window& w) { return hydra_R(m, w); }));
    c.push_back(inverse_identity("inverse-branchless-odd", "P_odd+ o_s (P_odd+)^<-1> = X_0", 1,
                                 [](const truncation_window& w) {
                                     return build_language(language_kind::p_s, {std::nullopt, set_spec::odd()}, w) -
                                            series::one(w);
                                 }));
    // Closed-form inverses, built from inputs on (L, K + 2 ord).
    series_id("inverse-sigma1-closed", "Sigma_1^<-1> = X_-1 - X_0", {5, 12},
              [](const bounds& b) {
                  return plethystic_inverse(build_language(language_kind::sigma, {std::nullopt, set_spec::from(1)},
                                                           truncation_window{b.L, b.K + 2}));
              },
              [](const bounds& b) {
                  truncation_window w{b.L, b.K, -1};
                  return series::letter(-1, w) - x0_on(w);
              });
    series_id("inverse-compositions-closed", "(C+)^<-1> = X_-1 / (1 + X_-1) - X_0 / (1 + X_0)", {5, 12},
              [](const bounds& b) {
                  truncation_window in{b.L, b.K + 2};
                  return plethystic_inverse(build_language(language_kind::compositions, {}, in) - series::one(in));
              },
              [](const bounds& b) {
                  truncation_window w{b.L, b.K, -1};
                  auto xm = series::letter(-1, w);
                  auto x0 = x0_on(w);
                  return xm * series_inverse(series::one(w) + xm) - x0 * series_inverse(series::one(w) + x0);
              });
    for (long m : {1L, 2L, 3L})
        series_id("inverse-hydra-closed-m" + std::to_string(m),
                  "R_" + std::to_string(m) + "^<-1> = X_0 Pi^" + std::to_string(m), {5, 12},
                  [m](const bounds& b) { return plethystic_inverse(hydra_R(m, window_of(b))); },
                  [m](const bounds& b) {
                      return prefix_letter(0, build_language(language_kind::pi_upper_m, {m, {}}, inner_of(b)));
                  });

    property("solver-fixed-point", "iterates N = K + L and N + 1 agree for every tree and inverse equation", {5, 12},
             check_solver, true);
    return c;
}

} // namespace detail

inline const std::vector<identity>& catalog()
{
    static const std::vector<identity> c = detail::build_catalog();
    return c;
}

inline const identity* find(std::string_view id)
{
    for (const auto& e : catalog())
        if (e.id == id)
            return &e;
    return nullptr;
}

/// Checks one identity. Window and precondition errors propagate: they mean
/// the requested bounds cannot be certified or are out of range, not that the
/// identity failed.
inline report run(const identity& e, const std::optional<bounds>& requested = std::nullopt)
{
    const bounds b = requested.value_or(e.defaults);
    if (e.builds_series)
        require_within_limits(truncation_window{b.L, b.K});
    else if (b.L < 1 || b.K < 1)
        throw window_error("bounds must be positive");
    auto start = std::chrono::steady_clock::now();
    report r{e.id};
    switch (e.kind) {
    case identity_kind::series: {
        auto l = e.lhs(b);
        auto rr = e.rhs(b);
        auto w = intersect(l.window(), rr.window());
        r.window = to_string(w);
        if (w.max_length < b.L || w.max_letter < b.K) {
            r.witness = "certified window " + to_string(w) + " is smaller than requested";
        } else if (auto d = first_difference(l, rr)) {
            r.witness = "word (" + to_string(*d) + "): lhs " + detail::coefficient_text(l.coefficient(*d)) +
                        ", rhs " + detail::coefficient_text(rr.coefficient(*d));
        }
        break;
    }
    case identity_kind::q_series: {
        auto l = e.q_lhs(b);
        auto rr = e.q_rhs(b);
        r.window = "z<=" + std::to_string(b.L) + ",q<=" + std::to_string(b.K);
        if (l.zmax() < b.L || rr.zmax() < b.L || l.qmax() < b.K || rr.qmax() < b.K) {
            r.witness = "a side is not certified up to the requested degrees";
        } else if (auto d = first_difference(l, rr)) {
            auto [z, t, q] = *d;
            r.witness = "(z,t,q)=(" + std::to_string(z) + "," + std::to_string(t) + "," + std::to_string(q) +
                        "): lhs " + to_fraction_string(l.coefficient(z, t, q)) + ", rhs " +
                        to_fraction_string(rr.coefficient(z, t, q));
        }
        break;
    }
    case identity_kind::property:
        r.window = "L=" + std::to_string(b.L) + ",K=" + std::to_string(b.K);
        r.witness = e.check(b);
        break;
    }
    r.pass = !r.witness;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Runs identities on a small pool of threads; reports come back in input order.
/// Errors become failing reports whose witness is the error message.
inline std::vector<report> run_many(const std::vector<const identity*>& ids, unsigned threads = 0)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, ids.size())));
    std::vector<report> out(ids.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < ids.size(); i = next++) {
            try {
                out[i] = run(*ids[i]);
            } catch (const std::exception& ex) {
                out[i] = report{ids[i]->id, "", false, std::string("error: ") + ex.what(), 0};
            }
        }
    };
    if (threads == 1) {
        work();
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    return out;
}

/// The acceptance criteria as groups of catalog ids.
struct criterion {
    int number;
    std::string title;
    std::vector<std::string> ids;
};

inline const std::vector<criterion>& criteria()
{
    static const std::vector<criterion> cs = [] {
        std::vector<criterion> v{
            {1, "Rogers-Ramanujan continued fraction", {"rr-quotient"}},
            {2, "partition quotient form", {"quotient-partitions-m2", "quotient-partitions-m3", "quotient-partitions-m4"}},
            {3, "composition quotient form",
             {"quotient-compositions-m2", "quotient-compositions-m3", "quotient-compositions-q-m2",
              "quotient-compositions-q-m3"}},
            {4, "K-duality", {"k-duality-m2", "k-duality-m3", "bounded-differences-q-m2", "bounded-differences-q-m3"}},
            {5, "insertion bijection", {"insertion-bijection", "insertion-refinement"}},
            {6, "local minima", {"local-minima-q", "local-minima-nc", "local-minima-factorization"}},
            {7, "branchless partitions", {}},
            {8, "dual compositions", {}},
            {9, "plethysm structure",
             {"distinct-partitions-m2", "distinct-partitions-m3", "carlitz-factorization", "cyclic-factorization"}},
            {10, "plethystic inverses",
             {"inverse-sigma1", "inverse-compositions", "inverse-hydra-m1", "inverse-hydra-m2", "inverse-hydra-m3",
              "inverse-branchless-odd", "inverse-sigma1-closed", "inverse-compositions-closed",
              "inverse-hydra-closed-m1", "inverse-hydra-closed-m2", "inverse-hydra-closed-m3"}},
            {11, "solver fixed point", {"solver-fixed-point"}},
        };
        for (const auto& f : detail::set_families()) {
            v[6].ids.push_back(std::string("branchless-") + f.tag);
            v[7].ids.push_back(std::string("dual-compositions-") + f.tag);
        }
        v[6].ids.push_back("branchless-worked-examples");
        return v;
    }();
    return cs;
}

} // namespace shiftpl::verify
