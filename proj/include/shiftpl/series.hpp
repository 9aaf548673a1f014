#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coefficient.hpp"
#include "errors.hpp"
#include "window.hpp"
#include "word.hpp"

namespace shiftpl {

/// Truncated noncommutative formal power series over the alphabet {X_k : k in Z}.
///
/// Holds the exact coefficient of every word its window admits; zero
/// coefficients are never stored. Values are immutable once built and all
/// operations below are pure.
template <coefficient_ring C>
class basic_series {
public:
    using coefficient_type = C;
    using term_map = std::unordered_map<word, C, word_hash>;
    using term = std::pair<word, C>;

    basic_series() = default;
    explicit basic_series(const truncation_window& w) : window_(w) {}
    basic_series(const truncation_window& w, term_map terms) : window_(w), terms_(std::move(terms)) { prune(); }

    static basic_series zero(const truncation_window& w) { return basic_series(w); }
    static basic_series constant(const C& c, const truncation_window& w)
    {
        basic_series s(w);
        s.add(word{}, c);
        return s;
    }
    static basic_series one(const truncation_window& w) { return constant(C(rational(1)), w); }
    static basic_series monomial(const word& x, const C& c, const truncation_window& w)
    {
        basic_series s(w);
        s.add(x, c);
        return s;
    }
    /// The single letter X_k (zero if k falls outside the window).
    static basic_series letter(shiftpl::letter k, const truncation_window& w)
    {
        return monomial(word{k}, C(rational(1)), w);
    }

    const truncation_window& window() const { return window_; }
    const term_map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// <R, w>; throws window_error if the window does not certify w.
    C coefficient(const word& w) const
    {
        if (!window_.certifies(w))
            throw window_error("word (" + to_string(w) + ") lies outside window " + to_string(window_));
        auto it = terms_.find(w);
        return it == terms_.end() ? C() : it->second;
    }
    C constant_term() const { return coefficient(word{}); }

    /// Adds c to the coefficient of w. Words outside the window are dropped:
    /// the stored series is the restriction of the true one to its window.
    void add(const word& w, const C& c)
    {
        if (is_zero_coeff(c) || !window_.admits(w))
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second))
                terms_.erase(it);
        }
    }

    /// Same series on a smaller region. The floor is kept.
    basic_series restricted(int max_length, shiftpl::letter max_letter) const
    {
        truncation_window w{std::min(max_length, window_.max_length), std::min(max_letter, window_.max_letter),
                            window_.min_letter};
        if (w.max_letter < w.min_letter)
            w.max_letter = w.min_letter;
        basic_series r(w);
        if (w == window_) {
            r.terms_ = terms_;
            return r;
        }
        for (const auto& [x, c] : terms_)
            if (w.admits(x))
                r.terms_.emplace(x, c);
        return r;
    }
    basic_series restricted(const truncation_window& w) const
    {
        auto r = restricted(w.max_length, w.max_letter);
        if (w.min_letter < r.window_.min_letter)
            r.window_.min_letter = w.min_letter;
        return r;
    }

    /// Re-declares the support floor. Raising it is only allowed when no stored
    /// word has a letter below the new floor.
    basic_series with_floor(shiftpl::letter floor) const
    {
        for (const auto& [x, c] : terms_)
            if (auto o = x.order(); o && *o < floor)
                throw precondition_error("series has support below requested floor " + std::to_string(floor));
        basic_series r = *this;
        r.window_.min_letter = floor;
        if (r.window_.max_letter < floor)
            r.window_.max_letter = floor;
        return r;
    }

    /// Terms sorted lexicographically by word.
    std::vector<term> sorted_terms() const
    {
        std::vector<term> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const term& a, const term& b) { return a.first < b.first; });
        return v;
    }

    template <class F>
    basic_series<std::invoke_result_t<F, const C&>> map_coefficients(F f) const
    {
        basic_series<std::invoke_result_t<F, const C&>> r(window_);
        for (const auto& [x, c] : terms_)
            r.add(x, f(c));
        return r;
    }

    /// Equality on the intersection of both windows.
    friend bool operator==(const basic_series& a, const basic_series& b) { return !first_difference(a, b); }

    /// Lexicographically least word on the common window where a and b differ.
    friend std::optional<word> first_difference(const basic_series& a, const basic_series& b)
    {
        auto w = intersect(a.window_, b.window_);
        std::optional<word> best;
        auto consider = [&](const word& x) {
            if (!best || x < *best)
                best = x;
        };
        for (const auto& [x, c] : a.terms_) {
            if (!w.admits(x))
                continue;
            auto it = b.terms_.find(x);
            if (it == b.terms_.end() || !(it->second == c))
                consider(x);
        }
        for (const auto& [x, c] : b.terms_)
            if (w.admits(x) && !a.terms_.contains(x))
                consider(x);
        return best;
    }

    friend std::ostream& operator<<(std::ostream& os, const basic_series& s)
    {
        auto ts = s.sorted_terms();
        if (ts.empty())
            os << "0";
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (i)
                os << " + ";
            os << "(" << ts[i].second << ")";
            if (ts[i].first.empty())
                os << "*1";
            else
                os << "*X" << ts[i].first;
        }
        return os << "  [" << s.window_ << "]";
    }

private:
    static bool is_zero_coeff(const C& c) { return shiftpl::is_zero(c); }
    void prune()
    {
        std::erase_if(terms_, [&](const auto& kv) { return is_zero_coeff(kv.second) || !window_.admits(kv.first); });
    }

    template <coefficient_ring>
    friend class basic_series;

    truncation_window window_;
    term_map terms_;
};

using series = basic_series<rational>;
using marked_series = basic_series<tpoly>;

/// Rational series viewed with t-polynomial coefficients.
inline marked_series to_marked(const series& s)
{
    return s.map_coefficients([](const rational& c) { return tpoly(c); });
}

namespace detail {

template <coefficient_ring C>
using term_ptrs = std::vector<const std::pair<const word, C>*>;

/// Stored terms of s that lie inside w, bucketed by word length 0..w.max_length.
template <coefficient_ring C>
std::vector<term_ptrs<C>> by_length(const basic_series<C>& s, const truncation_window& w)
{
    std::vector<term_ptrs<C>> buckets(static_cast<std::size_t>(std::max(w.max_length, 0)) + 1);
    for (const auto& kv : s.terms())
        if (w.admits(kv.first))
            buckets[kv.first.size()].push_back(&kv);
    return buckets;
}

/// acc += a * b restricted to words of length <= max_len inside w.
template <coefficient_ring C>
void multiply_into(typename basic_series<C>::term_map& acc, const basic_series<C>& a, const basic_series<C>& b,
                   const truncation_window& w)
{
    auto bb = by_length(b, w);
    for (const auto& [u, cu] : a.terms()) {
        if (!w.admits(u))
            continue;
        int room = w.max_length - static_cast<int>(u.size());
        for (int l = 0; l <= room; ++l) {
            for (const auto* v : bb[static_cast<std::size_t>(l)]) {
                C c = cu * v->second;
                auto [it, inserted] = acc.try_emplace(u + v->first, std::move(c));
                if (!inserted)
                    it->second += c;
            }
        }
    }
}

} // namespace detail

/// Coefficient-wise linear combination; the window is the intersection of the inputs'.
template <coefficient_ring C>
basic_series<C> series_linear(std::span<const std::pair<rational, basic_series<C>>> terms)
{
    if (terms.empty())
        throw precondition_error("series_linear needs at least one term");
    truncation_window w = terms.front().second.window();
    for (const auto& t : terms)
        w = intersect(w, t.second.window());
    typename basic_series<C>::term_map acc;
    for (const auto& [s, r] : terms) {
        if (is_zero(s))
            continue;
        for (const auto& [x, c] : r.terms()) {
            if (!w.admits(x))
                continue;
            C v = s * c;
            auto [it, inserted] = acc.try_emplace(x, std::move(v));
            if (!inserted)
                it->second += v;
        }
    }
    return basic_series<C>(w, std::move(acc));
}

template <coefficient_ring C>
basic_series<C> series_linear(std::initializer_list<std::pair<rational, basic_series<C>>> terms)
{
    return series_linear<C>(std::span<const std::pair<rational, basic_series<C>>>(terms.begin(), terms.size()));
}

template <coefficient_ring C>
basic_series<C> operator+(const basic_series<C>& a, const basic_series<C>& b)
{
    return series_linear<C>({{rational(1), a}, {rational(1), b}});
}
template <coefficient_ring C>
basic_series<C> operator-(const basic_series<C>& a, const basic_series<C>& b)
{
    return series_linear<C>({{rational(1), a}, {rational(-1), b}});
}
template <coefficient_ring C>
basic_series<C> operator-(const basic_series<C>& a)
{
    return a.map_coefficients([](const C& c) -> C { return -c; });
}
template <coefficient_ring C>
basic_series<C> operator*(const rational& s, const basic_series<C>& a)
{
    if (is_zero(s))
        return basic_series<C>::zero(a.window());
    return a.map_coefficients([&](const C& c) { return C(s * c); });
}
/// Multiplies every coefficient by a ring element (e.g. the marker t).
template <coefficient_ring C>
basic_series<C> scale(const C& s, const basic_series<C>& a)
{
    return a.map_coefficients([&](const C& c) { return C(s * c); });
}

/// Cauchy product: <RS, w> = sum over w = w1 w2 of <R,w1><S,w2>.
///
/// Concatenation never shortens words nor creates new letters, so the product
/// is exact on the intersection of the factor windows.
template <coefficient_ring C>
basic_series<C> series_mul(const basic_series<C>& r, const basic_series<C>& s)
{
    auto w = intersect(r.window(), s.window());
    typename basic_series<C>::term_map acc;
    detail::multiply_into(acc, r, s, w);
    return basic_series<C>(w, std::move(acc));
}

template <coefficient_ring C>
basic_series<C> operator*(const basic_series<C>& r, const basic_series<C>& s)
{
    return series_mul(r, s);
}

/// Multiplicative inverse R^{-1} = (1/a) sum_n (1 - R/a)^n, a = <R,1>.
///
/// Evaluated length by length: the words of length n in R^{-1} are
/// -(1/a) sum_{j>=1} R_j * (R^{-1})_{n-j}, which is the same truncated sum
/// without materializing the powers.
template <coefficient_ring C>
basic_series<C> series_inverse(const basic_series<C>& r)
{
    const auto& w = r.window();
    auto alpha = as_scalar(r.constant_term());
    if (!alpha || is_zero(*alpha))
        throw not_invertible("series_inverse: constant term is not an invertible scalar");
    const rational neg_inv_alpha = -1 / *alpha;

    auto rb = detail::by_length(r, w);
    const auto L = static_cast<std::size_t>(w.max_length);
    std::vector<typename basic_series<C>::term_map> layers(L + 1);
    layers[0].emplace(word{}, C(rational(-neg_inv_alpha)));
    for (std::size_t n = 1; n <= L; ++n) {
        auto& layer = layers[n];
        for (std::size_t j = 1; j <= n; ++j) {
            for (const auto* u : rb[j]) {
                for (const auto& [v, cv] : layers[n - j]) {
                    C c = neg_inv_alpha * C(u->second * cv);
                    auto [it, inserted] = layer.try_emplace(u->first + v, std::move(c));
                    if (!inserted)
                        it->second += c;
                }
            }
        }
        std::erase_if(layer, [](const auto& kv) { return is_zero(kv.second); });
    }
    typename basic_series<C>::term_map all;
    for (auto& layer : layers)
        all.merge(layer);
    return basic_series<C>(w, std::move(all));
}

/// sigma^n: X_k -> X_{k+n}. The window moves with the letters.
template <coefficient_ring C>
basic_series<C> shift(const basic_series<C>& r, letter n)
{
    typename basic_series<C>::term_map out;
    out.reserve(r.size());
    for (const auto& [x, c] : r.terms())
        out.emplace(x.shifted(n), c);
    return basic_series<C>(r.window().shifted(n), std::move(out));
}

/// R(-X): <R(-X), w> = (-1)^{length(w)} <R, w>.
template <coefficient_ring C>
basic_series<C> sign_flip(const basic_series<C>& r)
{
    typename basic_series<C>::term_map out;
    out.reserve(r.size());
    for (const auto& [x, c] : r.terms())
        out.emplace(x, x.size() % 2 ? C(-c) : c);
    return basic_series<C>(r.window(), std::move(out));
}

/// X_k * S, certified one letter longer than S.
template <coefficient_ring C>
basic_series<C> prefix_letter(letter k, const basic_series<C>& s)
{
    const auto& sw = s.window();
    truncation_window w{sw.max_length + 1, sw.max_letter, std::min(sw.min_letter, k)};
    typename basic_series<C>::term_map out;
    if (k <= sw.max_letter) {
        out.reserve(s.size());
        for (const auto& [x, c] : s.terms())
            out.emplace(word{k} + x, c);
    }
    return basic_series<C>(w, std::move(out));
}

/// Least letter over the nonempty stored words of R.
template <coefficient_ring C>
letter series_order(const basic_series<C>& r)
{
    std::optional<letter> best;
    for (const auto& [x, c] : r.terms())
        if (auto o = x.order(); o && (!best || *o < *best))
            best = o;
    if (!best)
        throw precondition_error("series_order: constant series has no order");
    return *best;
}

} // namespace shiftpl
