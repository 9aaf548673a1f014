#pragma once

// Enriched shift-plethystic trees, hydra continued fractions and the two
// quotient forms, plus the local-minima factorization of compositions.

#include <optional>
#include <string>
#include <vector>

#include "languages.hpp"
#include "plethysm.hpp"

namespace shiftpl {

/// F = X_0 M(Y), the right-hand side whose solution is the M-enriched tree series.
inline bi_series tree_equation(const series& m, const truncation_window& w)
{
    if (m.constant_term() != 1)
        throw precondition_error("enriched_trees: M must have constant term 1");
    if (m.window().max_length + 1 < w.max_length || m.window().max_letter < w.max_letter)
        throw window_error("enriched_trees: M does not cover window " + to_string(w));
    series f(bi_series::encoded_window(w.max_length, w.max_letter));
    for (const auto& [x, c] : m.terms()) {
        word e{bi_series::x_code(0)};
        for (letter k : x)
            e.push_back(bi_series::y_code(k));
        f.add(e, c);
    }
    return bi_series(std::move(f));
}

inline implicit_solution<rational> enriched_trees_detailed(const series& m, const truncation_window& w)
{
    return solve_implicit_detailed(tree_equation(m, w), w);
}

/// A_M = X_0 (M o_s A_M) on w. M must be known on (w.L - 1, w.K).
inline series enriched_trees(const series& m, const truncation_window& w)
{
    return enriched_trees_detailed(m, w).solution;
}

/// Pi_m, or Pi_inf when m is none.
inline series partitions_decreasing(std::optional<long> m, const truncation_window& w)
{
    if (m)
        return build_language(language_kind::pi_m, {*m, {}}, w);
    return build_language(language_kind::pi_inf, {}, w);
}

/// Hydra fraction R_m = A_{Pi_m(-X)}; m = none gives the infinitely headed one.
///
/// Also checks A_{Pi_m} = -R_m(-X) on the window.
inline series hydra_R(std::optional<long> m, const truncation_window& w)
{
    if (m && *m < 1)
        throw precondition_error("hydra_R: m must be positive");
    auto pi = partitions_decreasing(m, truncation_window{w.max_length - 1, w.max_letter});
    auto r = enriched_trees(sign_flip(pi), w);
    if (auto d = first_difference(sign_flip(r), -enriched_trees(pi, w)))
        throw internal_error("hydra_R: sign relation fails at (" + to_string(*d) + ")");
    return r;
}

/// X_0 (sigma^{m-1} P_m) (P_m)^{-1}, built from the m-distinct partitions alone.
inline series quotient_partition_form(long m, const truncation_window& w)
{
    if (m < 2)
        throw precondition_error("quotient_partition_form: m must be at least 2");
    truncation_window inner{w.max_length - 1, w.max_letter};
    auto p = build_language(language_kind::p_m, {m, {}}, inner);
    auto q = shift(p, static_cast<letter>(m - 1)) * series_inverse(p);
    return prefix_letter(0, q.restricted(inner));
}

/// X_0 (sigma^{m-1} C^(m-1))^{-1} C^(m-1), built from bounded-difference compositions alone.
inline series quotient_composition_form(long m, const truncation_window& w)
{
    if (m < 2)
        throw precondition_error("quotient_composition_form: m must be at least 2");
    truncation_window inner{w.max_length - 1, w.max_letter};
    auto c = build_language(language_kind::c_m, {m - 1, {}}, inner);
    auto q = series_inverse(shift(c, static_cast<letter>(m - 1))) * c;
    return prefix_letter(0, q.restricted(inner));
}

/// Composition split at its running minima: k = mu_1 w_1 | mu_2 w_2 | ... with
/// each mu_i w_i cyclic and mu weakly decreasing.
struct local_minima_factorization {
    word minima;
    std::vector<word> blocks;

    friend bool operator==(const local_minima_factorization&, const local_minima_factorization&) = default;
};

inline local_minima_factorization local_minima_factor(const word& k)
{
    for (letter x : k)
        if (x < 1)
            throw precondition_error("local_minima_factor: (" + to_string(k) + ") is not a composition");
    local_minima_factorization f;
    for (letter x : k) {
        if (f.minima.empty() || x <= f.minima.back()) {
            f.minima.push_back(x);
            f.blocks.emplace_back();
        } else {
            f.blocks.back().push_back(x);
        }
    }
    return f;
}

inline word reassemble(const local_minima_factorization& f)
{
    word k;
    for (std::size_t i = 0; i < f.minima.size(); ++i) {
        k.push_back(f.minima[i]);
        k.append(f.blocks[i]);
    }
    return k;
}

/// Compositions with t marking local minima: Pi_inf o_s (t X_0 C).
inline marked_series compositions_by_local_minima(const truncation_window& w)
{
    auto pi = to_marked(build_language(language_kind::pi_inf, {}, w));
    auto c = build_language(language_kind::compositions, {}, truncation_window{w.max_length - 1, w.max_letter});
    auto x0c = scale(tpoly::t(), to_marked(prefix_letter(0, c)));
    return plethysm(pi, x0c);
}

} // namespace shiftpl
