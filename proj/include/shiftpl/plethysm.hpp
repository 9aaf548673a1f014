#pragma once

// Shift-plethysm, implicit shift-plethystic equations and plethystic inversion.

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "series.hpp"

namespace shiftpl {

namespace detail {

/// The words of a series as a suffix trie with identical subtries merged.
///
/// Substituting factor(k) for every letter k is then evaluated node by node:
/// value(node) = c(node) + sum over children of factor(letter) * value(child),
/// and letters leading to the same child are summed before multiplying. For
/// linked languages the number of distinct nodes is tiny, which makes the
/// substitution cost independent of the number of words.
template <coefficient_ring C>
class compiled_series {
public:
    using term_map = typename basic_series<C>::term_map;

    explicit compiled_series(const basic_series<C>& r)
    {
        auto terms = r.sorted_terms();
        root_ = build(std::span<const typename basic_series<C>::term>(terms), 0);
    }

    std::size_t node_count() const { return nodes_.size(); }

    /// Sum over the words x of the series of coeff * factor(x_1) ... factor(x_l),
    /// keeping words of length <= w.max_length. factor(k) must return a series
    /// without constant term, already restricted to w.
    template <class Factor>
    term_map evaluate(Factor& factor, const truncation_window& w) const
    {
        std::map<std::pair<int, int>, term_map> memo;
        return value(root_, w.max_length, factor, memo);
    }

private:
    struct node {
        int coeff;                                           ///< index into coeffs_, -1 for none
        std::vector<std::pair<int, std::vector<letter>>> groups; ///< child -> letters leading there
    };

    int build(std::span<const typename basic_series<C>::term> ts, std::size_t depth)
    {
        int coeff = -1;
        std::size_t i = 0;
        if (!ts.empty() && ts[0].first.size() == depth) {
            coeff = intern(ts[0].second);
            i = 1;
        }
        std::map<int, std::vector<letter>> by_child;
        while (i < ts.size()) {
            letter a = ts[i].first[depth];
            std::size_t j = i + 1;
            while (j < ts.size() && ts[j].first[depth] == a)
                ++j;
            by_child[build(ts.subspan(i, j - i), depth + 1)].push_back(a);
            i = j;
        }
        std::vector<std::pair<int, std::vector<letter>>> groups(by_child.begin(), by_child.end());
        auto key = std::make_pair(coeff, groups);
        auto [it, inserted] = ids_.try_emplace(key, static_cast<int>(nodes_.size()));
        if (inserted)
            nodes_.push_back({coeff, std::move(groups)});
        return it->second;
    }

    int intern(const C& c)
    {
        std::ostringstream os;
        os << c;
        auto [it, inserted] = coeff_ids_.try_emplace(os.str(), static_cast<int>(coeffs_.size()));
        if (inserted)
            coeffs_.push_back(c);
        return it->second;
    }

    template <class Factor>
    const term_map& value(int id, int budget, Factor& factor, std::map<std::pair<int, int>, term_map>& memo) const
    {
        auto key = std::make_pair(id, budget);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        const auto& n = nodes_[static_cast<std::size_t>(id)];
        term_map v;
        if (n.coeff >= 0)
            v.emplace(word{}, coeffs_[static_cast<std::size_t>(n.coeff)]);
        if (budget > 0) {
            for (const auto& [child, letters] : n.groups) {
                const auto& cv = value(child, budget - 1, factor, memo);
                if (cv.empty())
                    continue;
                term_map head;
                for (letter a : letters)
                    for (const auto& [x, c] : factor(a).terms())
                        if (static_cast<int>(x.size()) <= budget) {
                            auto [it, inserted] = head.try_emplace(x, c);
                            if (!inserted)
                                it->second += c;
                        }
                std::vector<std::vector<const typename term_map::value_type*>> tails(
                    static_cast<std::size_t>(budget));
                for (const auto& kv : cv)
                    tails[kv.first.size()].push_back(&kv);
                for (const auto& [x, cx] : head) {
                    if (is_zero(cx))
                        continue;
                    auto room = static_cast<std::size_t>(budget) - x.size();
                    for (std::size_t l = 0; l <= room; ++l)
                        for (const auto* y : tails[l]) {
                            C c = cx * y->second;
                            auto [it, inserted] = v.try_emplace(x + y->first, std::move(c));
                            if (!inserted)
                                it->second += c;
                        }
                }
            }
            std::erase_if(v, [](const auto& kv) { return is_zero(kv.second); });
        }
        return memo.emplace(key, std::move(v)).first->second;
    }

    std::vector<node> nodes_;
    std::vector<C> coeffs_;
    std::map<std::pair<int, std::vector<std::pair<int, std::vector<letter>>>>, int> ids_;
    std::map<std::string, int> coeff_ids_;
    int root_ = -1;
};

/// Memoized sigma^k S restricted to a fixed window.
template <coefficient_ring C>
class shifted_copies {
public:
    shifted_copies(const basic_series<C>& s, const truncation_window& w) : s_(&s), w_(w) {}

    const basic_series<C>& operator()(letter k)
    {
        auto it = cache_.find(k);
        if (it == cache_.end())
            it = cache_.emplace(k, shift(*s_, k).restricted(w_)).first;
        return it->second;
    }

private:
    const basic_series<C>* s_;
    truncation_window w_;
    std::map<letter, basic_series<C>> cache_;
};

/// The terms whose words have max letter + length <= bound.
template <coefficient_ring C>
basic_series<C> settled_part(const basic_series<C>& g, int bound)
{
    typename basic_series<C>::term_map kept;
    for (const auto& [x, c] : g.terms())
        if (x.max_letter().value_or(0) + static_cast<int>(x.size()) <= bound)
            kept.emplace(x, c);
    return basic_series<C>(g.window(), std::move(kept));
}

template <coefficient_ring C>
letter order_or_floor(const basic_series<C>& s)
{
    for (const auto& [x, c] : s.terms())
        if (!x.empty())
            return series_order(s);
    return s.window().min_letter;
}

template <coefficient_ring C>
void require_zero_constant(const basic_series<C>& s, const char* what)
{
    if (s.terms().contains(word{}))
        throw precondition_error(std::string(what) + ": substituted series must have zero constant term");
}

} // namespace detail

/// Window on which R o_s S is certified exact.
///
/// An output word of length l uses words of R of length <= l whose letters k
/// satisfy ord(R) <= k <= max(word) - ord(S), and pieces of sigma^k S. Both
/// inputs must cover those regions, which bounds the output letter range.
template <coefficient_ring C>
truncation_window plethysm_window(const basic_series<C>& r, const basic_series<C>& s)
{
    const auto& wr = r.window();
    const auto& ws = s.window();
    letter ord_r = detail::order_or_floor(r);
    letter ord_s = detail::order_or_floor(s);
    int L = std::min(wr.max_length, ws.max_length);
    letter K = std::min(wr.max_letter + ord_s, ws.max_letter + ord_r);
    letter O = wr.min_letter + ws.min_letter;
    if (K < O || L < 1)
        throw window_error("plethysm: input windows certify no output window (R: " + to_string(wr) +
                           ", S: " + to_string(ws) + ")");
    return truncation_window{L, K, O};
}

/// X_w o_s S = (sigma^{w1} S)(sigma^{w2} S)...; the empty word gives 1.
template <coefficient_ring C>
basic_series<C> word_plethysm(const word& w, const basic_series<C>& s)
{
    detail::require_zero_constant(s, "word_plethysm");
    letter lo = w.empty() ? 0 : *w.order();
    auto out = basic_series<C>::one(s.window().shifted(lo));
    for (letter k : w)
        out = out * shift(s, k);
    return out;
}

/// Shift-plethysm R o_s S = sum_w <R,X_w> X_w o_s S, on the certified window.
template <coefficient_ring C>
basic_series<C> plethysm(const basic_series<C>& r, const basic_series<C>& s)
{
    detail::require_zero_constant(s, "plethysm");
    auto w = plethysm_window(r, s);
    detail::shifted_copies<C> copies(s, w);
    return basic_series<C>(w, detail::compiled_series<C>(r).evaluate(copies, w));
}

/// Series in the doubled alphabet {X_k} u {Y_k}, the right-hand side of an
/// implicit equation Y_0 = F(X; Y).
///
/// Stored as an ordinary series over encoded letters: X_k is 2k and Y_k is
/// 2k + 1, so the window (L, K) on both families is (L, 2K + 1, 0).
template <coefficient_ring C>
class basic_bi_series {
public:
    using series_type = basic_series<C>;

    static letter x_code(letter k) { return 2 * k; }
    static letter y_code(letter k) { return 2 * k + 1; }
    static truncation_window encoded_window(int L, letter K) { return truncation_window{L, 2 * K + 1, 0}; }

    basic_bi_series() = default;
    explicit basic_bi_series(series_type encoded) : enc_(std::move(encoded))
    {
        if (enc_.window().min_letter != 0)
            throw precondition_error("bi-series encoding requires floor 0");
    }

    static basic_bi_series zero(int L, letter K) { return basic_bi_series(series_type(encoded_window(L, K))); }

    /// S(X) viewed in the doubled alphabet, on the window (L, K).
    static basic_bi_series from_x(const series_type& s, int L, letter K) { return lift(s, L, K, false); }
    /// S(Y): every X_k of S renamed Y_k.
    static basic_bi_series from_y(const series_type& s, int L, letter K) { return lift(s, L, K, true); }

    static basic_bi_series x(letter k, int L, letter K)
    {
        return basic_bi_series(series_type::letter(x_code(k), encoded_window(L, K)));
    }
    static basic_bi_series y(letter k, int L, letter K)
    {
        return basic_bi_series(series_type::letter(y_code(k), encoded_window(L, K)));
    }

    const series_type& encoded() const { return enc_; }
    int max_length() const { return enc_.window().max_length; }
    letter max_index() const { return (enc_.window().max_letter - 1) / 2; }

    /// Coefficient of a mixed word given as (is_y, index) pairs.
    C coefficient(std::span<const std::pair<bool, letter>> letters) const
    {
        word w;
        for (auto [is_y, k] : letters)
            w.push_back(is_y ? y_code(k) : x_code(k));
        return enc_.coefficient(w);
    }

    friend basic_bi_series operator+(const basic_bi_series& a, const basic_bi_series& b)
    {
        return basic_bi_series(a.enc_ + b.enc_);
    }
    friend basic_bi_series operator-(const basic_bi_series& a, const basic_bi_series& b)
    {
        return basic_bi_series(a.enc_ - b.enc_);
    }
    friend basic_bi_series operator*(const basic_bi_series& a, const basic_bi_series& b)
    {
        return basic_bi_series(a.enc_ * b.enc_);
    }
    friend basic_bi_series operator*(const rational& s, const basic_bi_series& a) { return basic_bi_series(s * a.enc_); }

private:
    static basic_bi_series lift(const series_type& s, int L, letter K, bool to_y)
    {
        if (s.window().min_letter < 0)
            throw precondition_error("bi-series letters must be nonnegative");
        int l = std::min(L, s.window().max_length);
        letter k = std::min(K, s.window().max_letter);
        series_type out(encoded_window(l, k));
        for (const auto& [x, c] : s.terms()) {
            word e;
            for (letter a : x)
                e.push_back(to_y ? y_code(a) : x_code(a));
            out.add(e, c);
        }
        return basic_bi_series(std::move(out));
    }

    series_type enc_;
};

using bi_series = basic_bi_series<rational>;

/// F(X; G, sigma G, sigma^2 G, ...) restricted to w, with F already compiled.
template <coefficient_ring C>
basic_series<C> substitute(const detail::compiled_series<C>& f, const basic_series<C>& g, const truncation_window& w)
{
    detail::shifted_copies<C> copies(g, w);
    std::map<letter, basic_series<C>> xs;
    auto factor = [&](letter code) -> const basic_series<C>& {
        letter k = code / 2;
        if (code % 2)
            return copies(k);
        auto it = xs.find(k);
        if (it == xs.end())
            it = xs.emplace(k, basic_series<C>::letter(k, w)).first;
        return it->second;
    };
    return basic_series<C>(w, f.evaluate(factor, w));
}

/// F(X; G, sigma G, sigma^2 G, ...) restricted to w.
template <coefficient_ring C>
basic_series<C> substitute(const basic_bi_series<C>& f, const basic_series<C>& g, const truncation_window& w)
{
    return substitute(detail::compiled_series<C>(f.encoded()), g, w);
}

template <coefficient_ring C>
struct implicit_solution {
    basic_series<C> solution;   ///< iterate N = K + L
    basic_series<C> next;       ///< iterate N + 1, equal to `solution` on the window
    int iterations = 0;         ///< N
};

/// Iterates G <- F(X; G) from G = 0 and returns iterates N = K + L and N + 1.
///
/// A coefficient of a word with max letter k and length l is stable after
/// k + l iterations, so N = K + L covers the whole window. The same argument
/// shows that the coefficients of iterate i + 1 on words with k + l <= i + 1
/// only read iterate i on words with k + l <= i, so each iterate is kept on
/// that region alone; this leaves iterate N unchanged on the window and keeps
/// the intermediate series as sparse as the solution. Iterate N + 1 is
/// computed in full.
template <coefficient_ring C>
implicit_solution<C> solve_implicit_detailed(const basic_bi_series<C>& f, const truncation_window& w)
{
    if (w.min_letter != 0)
        throw precondition_error("solve_implicit: window floor must be 0");
    if (f.max_length() < w.max_length || f.max_index() < w.max_letter)
        throw window_error("solve_implicit: F is not certified on window " + to_string(w));
    const auto& enc = f.encoded();
    if (!is_zero(enc.coefficient(word{})))
        throw precondition_error("solve_implicit: F has a constant term");
    if (!is_zero(enc.coefficient(word{basic_bi_series<C>::y_code(0)})))
        throw precondition_error("solve_implicit: F has a Y_0 term");

    const int n = w.max_letter + w.max_length;
    const detail::compiled_series<C> compiled(enc);
    auto g = basic_series<C>::zero(w);
    for (int i = 1; i <= n; ++i) {
        g = substitute(compiled, g, w);
        if (i < n)
            g = detail::settled_part(g, i);
    }
    auto next = substitute(compiled, g, w);
    if (auto d = first_difference(g, next))
        throw internal_error("solve_implicit: iterate " + std::to_string(n) + " is not a fixed point at word (" +
                             to_string(*d) + ")");
    return {std::move(g), std::move(next), n};
}

/// The unique solution G of G = F(X; G, sigma G, ...) on the window w.
template <coefficient_ring C>
basic_series<C> solve_implicit(const basic_bi_series<C>& f, const truncation_window& w)
{
    return solve_implicit_detailed(f, w).solution;
}

/// R^<-1> with R o_s R^<-1> = X_0 = R^<-1> o_s R, with both solver iterates.
///
/// For R of order n the order-0 series sigma^{-n} R is inverted through
/// F = (1/a)(X_0 - R0+(Y)), a = <R0, X_0>, and the result is shifted back by -n.
/// The output window is (L, K - 2n, -n) for an input window (L, K, .).
template <coefficient_ring C>
implicit_solution<C> plethystic_inverse_detailed(const basic_series<C>& r)
{
    if (!is_zero(r.constant_term()))
        throw precondition_error("plethystic_inverse: R has a constant term");
    const letter n = series_order(r);
    auto r0 = shift(r, -n).with_floor(0);
    auto alpha = as_scalar(r0.coefficient(word{0}));
    if (!alpha || is_zero(*alpha))
        throw not_invertible("plethystic_inverse: coefficient of X_" + std::to_string(n) +
                             " is not an invertible scalar");
    const auto& w0 = r0.window();
    const int L = w0.max_length;
    const letter K = w0.max_letter;

    auto rplus = r0;
    rplus.add(word{0}, C(rational(-*alpha)));
    rational inv_alpha = 1 / *alpha;
    auto f = inv_alpha * (basic_bi_series<C>::x(0, L, K) - basic_bi_series<C>::from_y(rplus, L, K));
    auto g = solve_implicit_detailed(f, truncation_window{L, K, 0});
    return {shift(g.solution, -n), shift(g.next, -n), g.iterations};
}

template <coefficient_ring C>
basic_series<C> plethystic_inverse(const basic_series<C>& r)
{
    return plethystic_inverse_detailed(r).solution;
}

} // namespace shiftpl
