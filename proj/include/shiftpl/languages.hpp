#pragma once

// The language families: letter sums, partitions, compositions and linked
// languages, materialized on a window by direct enumeration.

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "series.hpp"
#include "set_spec.hpp"

namespace shiftpl {

/// Linked language 1 + Sigma_W + L_B: the words over W whose adjacent letter
/// pairs all lie in the link set B. W must be a subset of the positive integers.
class linked_language {
public:
    using membership = std::function<bool(letter)>;
    using links = std::function<bool(letter, letter)>;

    linked_language(membership w, links b, std::string name = {})
        : w_(std::move(w)), b_(std::move(b)), name_(std::move(name))
    {
    }

    bool in_alphabet(letter k) const { return k >= 1 && w_(k); }
    bool linked(letter a, letter b) const { return b_(a, b); }
    const std::string& name() const { return name_; }

    /// Same alphabet with complemented links.
    linked_language dual() const
    {
        auto b = b_;
        return linked_language(w_, [b](letter i, letter j) { return !b(i, j); }, name_.empty() ? "" : name_ + "!");
    }

    bool contains(const word& x) const
    {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!in_alphabet(x[i]))
                return false;
            if (i && !linked(x[i - 1], x[i]))
                return false;
        }
        return true;
    }

    /// The language on w, all coefficients 1.
    series realize(const truncation_window& w) const
    {
        series s(w);
        std::vector<letter> alphabet;
        for (letter k = std::max<letter>(1, w.min_letter); k <= w.max_letter; ++k)
            if (in_alphabet(k))
                alphabet.push_back(k);
        word cur;
        s.add(cur, rational(1));
        extend(s, cur, alphabet, w.max_length);
        return s;
    }

private:
    void extend(series& s, word& cur, const std::vector<letter>& alphabet, int max_length) const
    {
        if (static_cast<int>(cur.size()) >= max_length)
            return;
        for (letter k : alphabet) {
            if (!cur.empty() && !linked(cur.back(), k))
                continue;
            cur.push_back(k);
            s.add(cur, rational(1));
            extend(s, cur, alphabet, max_length);
            cur.pop_back();
        }
    }

    membership w_;
    links b_;
    std::string name_;
};

/// Named families.
enum class language_kind {
    sigma,        ///< Sigma_S = sum_{k in S} X_k
    compositions, ///< all compositions
    pi_m,         ///< partitions, weakly decreasing, parts <= m
    pi_inf,       ///< partitions, weakly decreasing
    pi_upper_m,   ///< distinct partitions, increasing, parts <= m
    pi_upper_inf, ///< distinct partitions, increasing
    p_m,          ///< m-distinct partitions: increasing, rises >= m
    p_s,          ///< partitions, increasing, rises in S
    c_m,          ///< compositions with contiguous differences <= m
    c_shat,       ///< compositions with contiguous differences outside S
    carlitz,      ///< compositions without equal adjacent parts
    repeated,     ///< words repeating a single letter: 1 + sum_i X_i/(1 - X_i)
};

struct language_params {
    std::optional<long> m;       ///< bound for the _m kinds; none means unbounded where allowed
    std::optional<set_spec> set; ///< S for sigma, p_s, c_shat
};

namespace detail {

inline long need_m(const language_params& p, const char* kind)
{
    if (!p.m)
        throw precondition_error(std::string(kind) + " needs a parameter m");
    if (*p.m < 0)
        throw precondition_error(std::string(kind) + ": m must be nonnegative");
    return *p.m;
}

inline const set_spec& need_set(const language_params& p, const char* kind)
{
    if (!p.set)
        throw precondition_error(std::string(kind) + " needs a set S");
    return *p.set;
}

} // namespace detail

/// The linked language behind a named family (every kind except sigma).
inline linked_language as_linked(language_kind kind, const language_params& p = {})
{
    auto any = [](letter) { return true; };
    switch (kind) {
    case language_kind::compositions:
        return {any, [](letter, letter) { return true; }, "C"};
    case language_kind::pi_m: {
        long m = detail::need_m(p, "Pi_m");
        return {[m](letter k) { return k <= m; }, [](letter a, letter b) { return b <= a; }, "Pi_" + std::to_string(m)};
    }
    case language_kind::pi_inf:
        return {any, [](letter a, letter b) { return b <= a; }, "Pi_inf"};
    case language_kind::pi_upper_m: {
        long m = detail::need_m(p, "PiUpper_m");
        return {[m](letter k) { return k <= m; }, [](letter a, letter b) { return b > a; }, "Pi^" + std::to_string(m)};
    }
    case language_kind::pi_upper_inf:
        return {any, [](letter a, letter b) { return b > a; }, "Pi^inf"};
    case language_kind::p_m: {
        long m = detail::need_m(p, "P_m");
        return {any, [m](letter a, letter b) { return b - a >= m; }, "P_" + std::to_string(m)};
    }
    case language_kind::p_s: {
        auto s = detail::need_set(p, "P_S");
        return {any, [s](letter a, letter b) { return b >= a && s.contains(b - a); }, "P_" + s.to_string()};
    }
    case language_kind::c_m: {
        long m = detail::need_m(p, "C_m");
        return {any, [m](letter a, letter b) { return b - a <= m; }, "C^(" + std::to_string(m) + ")"};
    }
    case language_kind::c_shat: {
        auto s = detail::need_set(p, "C_Shat");
        return {any, [s](letter a, letter b) { return !(b >= a && s.contains(b - a)); }, "C^(^" + s.to_string() + ")"};
    }
    case language_kind::carlitz:
        return {any, [](letter a, letter b) { return a != b; }, "Carlitz"};
    case language_kind::repeated:
        return {any, [](letter a, letter b) { return a == b; }, "O"};
    case language_kind::sigma:
        break;
    }
    throw precondition_error("Sigma_S is not a linked language");
}

/// Sigma_S on the window: the single letters X_k, k in S.
inline series sigma_series(const set_spec& s, const truncation_window& w)
{
    series out(w);
    for (letter k = std::max<letter>(0, w.min_letter); k <= w.max_letter; ++k)
        if (s.contains(k))
            out.add(word{k}, rational(1));
    return out;
}

/// Exact truncation of a named family on the window.
inline series build_language(language_kind kind, const language_params& p, const truncation_window& w)
{
    if (kind == language_kind::sigma)
        return sigma_series(detail::need_set(p, "Sigma"), w);
    return as_linked(kind, p).realize(w);
}

/// L^g = sum over L of (-1)^length X_w.
inline series graded_gf(const series& l) { return sign_flip(l); }

/// L^! = (L^g)^{-1}. Asserts the result is again a language (0/1 coefficients).
inline series k_dual(const series& l)
{
    auto d = series_inverse(graded_gf(l));
    for (const auto& [x, c] : d.terms())
        if (c != 1)
            throw precondition_error("k_dual: coefficient " + to_fraction_string(c) + " at (" + to_string(x) +
                                     "); the input is not a linked language");
    return d;
}

inline series k_dual(const linked_language& l, const truncation_window& w) { return k_dual(l.realize(w)); }

} // namespace shiftpl
