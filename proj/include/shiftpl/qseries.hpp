#pragma once

// Umbral images X_k -> z q^k and the closed-form q-series evaluators.

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "series.hpp"
#include "set_spec.hpp"

namespace shiftpl {

/// Truncated Laurent series in q with rational coefficients: no terms below
/// `lo`, exact through `hi`.
class qlaurent {
public:
    qlaurent() = default;
    qlaurent(long lo, long hi) : lo_(lo), hi_(hi), c_(static_cast<std::size_t>(std::max(0L, hi - lo + 1))) {}

    static qlaurent monomial(long e, const rational& c, long lo, long hi)
    {
        qlaurent r(lo, hi);
        r.add(e, c);
        return r;
    }
    static qlaurent one(long hi) { return monomial(0, rational(1), 0, hi); }

    long lo() const { return lo_; }
    long hi() const { return hi_; }
    rational operator[](long e) const
    {
        if (e > hi_)
            throw window_error("q-degree " + std::to_string(e) + " beyond truncation " + std::to_string(hi_));
        return e < lo_ ? rational(0) : c_[static_cast<std::size_t>(e - lo_)];
    }
    void add(long e, const rational& v)
    {
        if (e < lo_)
            throw precondition_error("q-degree " + std::to_string(e) + " below series floor");
        if (e <= hi_)
            c_[static_cast<std::size_t>(e - lo_)] += v;
    }

    /// Same values, truncated at min(hi, new_hi).
    qlaurent truncated(long new_hi) const
    {
        qlaurent r(lo_, std::min(hi_, new_hi));
        for (long e = lo_; e <= r.hi_; ++e)
            r.c_[static_cast<std::size_t>(e - lo_)] = (*this)[e];
        return r;
    }

    friend qlaurent operator*(const qlaurent& a, const qlaurent& b)
    {
        qlaurent r(a.lo_ + b.lo_, std::min(a.hi_ + b.lo_, b.hi_ + a.lo_));
        for (long i = a.lo_; i <= a.hi_; ++i) {
            const auto& x = a.c_[static_cast<std::size_t>(i - a.lo_)];
            if (is_zero(x))
                continue;
            for (long j = b.lo_; j <= b.hi_ && i + j <= r.hi_; ++j) {
                const auto& y = b.c_[static_cast<std::size_t>(j - b.lo_)];
                if (!is_zero(y))
                    r.c_[static_cast<std::size_t>(i + j - r.lo_)] += x * y;
            }
        }
        return r;
    }
    friend qlaurent operator+(const qlaurent& a, const qlaurent& b)
    {
        qlaurent r(std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
        for (long e = r.lo_; e <= r.hi_; ++e)
            r.c_[static_cast<std::size_t>(e - r.lo_)] = a[e] + b[e];
        return r;
    }
    friend qlaurent operator*(const rational& s, const qlaurent& a)
    {
        qlaurent r = a;
        for (auto& x : r.c_)
            x *= s;
        return r;
    }

    /// Multiplicative inverse; the coefficient at `lo` must be nonzero.
    qlaurent inverse() const
    {
        rational a0 = (*this)[lo_];
        if (is_zero(a0))
            throw not_invertible("q-series with vanishing leading coefficient");
        long n = hi_ - lo_;
        qlaurent r(-lo_, hi_ - 2 * lo_);
        std::vector<rational> b(static_cast<std::size_t>(n + 1));
        rational inv = 1 / a0;
        for (long i = 0; i <= n; ++i) {
            rational s = i == 0 ? rational(1) : rational(0);
            for (long j = 1; j <= i; ++j)
                s -= c_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i - j)];
            b[static_cast<std::size_t>(i)] = s * inv;
        }
        for (long i = 0; i <= n; ++i)
            r.c_[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)];
        return r;
    }

    friend bool operator==(const qlaurent& a, const qlaurent& b)
    {
        long lo = std::min(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
        for (long e = lo; e <= hi; ++e)
            if (a[e] != b[e])
                return false;
        return true;
    }

private:
    long lo_ = 0;
    long hi_ = -1;
    std::vector<rational> c_;
};

/// (q^a; q^s)_n = (1 - q^a)(1 - q^{a+s}) ... (1 - q^{a+(n-1)s}), truncated at hi.
inline qlaurent pochhammer(long a, long s, long n, long hi)
{
    auto r = qlaurent::one(hi);
    for (long i = 0; i < n; ++i) {
        auto f = qlaurent::one(hi);
        f.add(a + i * s, rational(-1));
        r = r * f;
    }
    return r;
}

inline long binom2(long k) { return k * (k - 1) / 2; }

/// Truncated series in z and q with coefficients in Q[t]: for each z-degree
/// 0..zmax a Laurent polynomial in q on [qmin, qmax].
class zq_series {
public:
    zq_series() = default;
    zq_series(int zmax, long qmin, long qmax)
        : zmax_(zmax), qmin_(qmin), qmax_(qmax),
          c_(static_cast<std::size_t>(zmax + 1), std::vector<tpoly>(static_cast<std::size_t>(std::max(0L, qmax - qmin + 1))))
    {
        if (zmax < 0)
            throw precondition_error("zq_series: negative z bound");
    }

    static zq_series monomial(int zdeg, long qdeg, const tpoly& c, int zmax, long qmin, long qmax)
    {
        zq_series r(zmax, qmin, qmax);
        r.add(zdeg, qdeg, c);
        return r;
    }
    static zq_series one(int zmax, long qmax) { return monomial(0, 0, tpoly(rational(1)), zmax, 0, qmax); }

    int zmax() const { return zmax_; }
    long qmin() const { return qmin_; }
    long qmax() const { return qmax_; }

    tpoly coefficient(int z, long q) const
    {
        if (z < 0 || z > zmax_ || q > qmax_)
            throw window_error("coefficient z^" + std::to_string(z) + " q^" + std::to_string(q) +
                               " outside certified bounds");
        if (q < qmin_)
            return tpoly();
        return c_[static_cast<std::size_t>(z)][static_cast<std::size_t>(q - qmin_)];
    }
    /// Rational coefficient of z^z t^t q^q.
    rational coefficient(int z, int t, long q) const
    {
        const auto& p = coefficient(z, q);
        return t <= p.degree() ? p.coefficients()[static_cast<std::size_t>(t)] : rational(0);
    }

    void add(int z, long q, const tpoly& v)
    {
        if (q < qmin_)
            throw precondition_error("q-degree below series floor");
        if (z < 0 || z > zmax_ || q > qmax_)
            return;
        c_[static_cast<std::size_t>(z)][static_cast<std::size_t>(q - qmin_)] += v;
    }

    /// Sets the z^k coefficient from a q-series.
    void add_z_coefficient(int k, const qlaurent& f, const tpoly& scale = tpoly(rational(1)))
    {
        if (f.hi() < qmax_)
            throw internal_error("closed form evaluated below the requested q bound");
        for (long e = std::max(f.lo(), qmin_); e <= qmax_; ++e) {
            rational v = f[e];
            if (!is_zero(v))
                add(k, e, scale * tpoly(v));
        }
    }

    zq_series truncated(int zmax, long qmax) const
    {
        zq_series r(std::min(zmax, zmax_), qmin_, std::min(qmax, qmax_));
        for (int z = 0; z <= r.zmax_; ++z)
            for (long q = qmin_; q <= r.qmax_; ++q)
                r.c_[static_cast<std::size_t>(z)][static_cast<std::size_t>(q - qmin_)] = coefficient(z, q);
        return r;
    }

    friend zq_series operator+(const zq_series& a, const zq_series& b) { return combine(a, b, rational(1)); }
    friend zq_series operator-(const zq_series& a, const zq_series& b) { return combine(a, b, rational(-1)); }

    friend zq_series operator*(const zq_series& a, const zq_series& b)
    {
        zq_series r(std::min(a.zmax_, b.zmax_), a.qmin_ + b.qmin_,
                    std::min(a.qmax_ + b.qmin_, b.qmax_ + a.qmin_));
        for (int i = 0; i <= r.zmax_; ++i)
            for (long p = a.qmin_; p <= a.qmax_; ++p) {
                const auto& x = a.c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(p - a.qmin_)];
                if (is_zero(x))
                    continue;
                for (int j = 0; i + j <= r.zmax_; ++j)
                    for (long s = b.qmin_; s <= b.qmax_ && p + s <= r.qmax_; ++s) {
                        const auto& y = b.c_[static_cast<std::size_t>(j)][static_cast<std::size_t>(s - b.qmin_)];
                        if (!is_zero(y))
                            r.c_[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(p + s - r.qmin_)] += x * y;
                    }
            }
        return r;
    }

    /// Multiplicative inverse. Needs qmin = 0 and a nonzero rational z^0 q^0 coefficient.
    zq_series reciprocal() const
    {
        if (qmin_ != 0)
            throw precondition_error("zq_reciprocal needs qmin = 0");
        auto a00 = as_scalar(coefficient(0, 0));
        if (!a00 || is_zero(*a00))
            throw not_invertible("zq_reciprocal: constant term is not a nonzero rational");
        rational inv = 1 / *a00;
        zq_series r(zmax_, 0, qmax_);
        // Coefficients in (z-degree, q-degree) order; each depends only on smaller ones.
        for (int n = 0; n <= zmax_; ++n)
            for (long e = 0; e <= qmax_; ++e) {
                tpoly s = (n == 0 && e == 0) ? tpoly(rational(1)) : tpoly();
                for (int j = 0; j <= n; ++j)
                    for (long f = 0; f <= e; ++f) {
                        if (j == 0 && f == 0)
                            continue;
                        const auto& x = c_[static_cast<std::size_t>(j)][static_cast<std::size_t>(f)];
                        if (!is_zero(x))
                            s -= x * r.c_[static_cast<std::size_t>(n - j)][static_cast<std::size_t>(e - f)];
                    }
                r.c_[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)] = inv * s;
            }
        return r;
    }

    /// z -> z q^n.
    zq_series substitute_zq(long n) const
    {
        long lo = n < 0 ? qmin_ + n * zmax_ : qmin_;
        long hi = n < 0 ? qmax_ + n * zmax_ : qmax_;
        zq_series r(zmax_, lo, hi);
        for (int z = 0; z <= zmax_; ++z)
            for (long q = qmin_; q <= qmax_; ++q) {
                const auto& x = c_[static_cast<std::size_t>(z)][static_cast<std::size_t>(q - qmin_)];
                if (!is_zero(x))
                    r.add(z, q + n * z, x);
            }
        return r;
    }

    /// Multiplies by z (the top z-degree is dropped).
    zq_series times_z() const
    {
        zq_series r(zmax_, qmin_, qmax_);
        for (int z = 0; z < zmax_; ++z)
            r.c_[static_cast<std::size_t>(z + 1)] = c_[static_cast<std::size_t>(z)];
        return r;
    }

    /// First (z, t, q) where a and b differ on their common bounds.
    friend std::optional<std::tuple<int, int, long>> first_difference(const zq_series& a, const zq_series& b)
    {
        int zmax = std::min(a.zmax_, b.zmax_);
        long qmin = std::min(a.qmin_, b.qmin_), qmax = std::min(a.qmax_, b.qmax_);
        for (int z = 0; z <= zmax; ++z)
            for (long q = qmin; q <= qmax; ++q) {
                auto x = a.coefficient(z, q), y = b.coefficient(z, q);
                if (!(x == y)) {
                    int t = 0;
                    while (t <= std::max(x.degree(), y.degree()) &&
                           (t <= x.degree() ? x.coefficients()[static_cast<std::size_t>(t)] : rational(0)) ==
                               (t <= y.degree() ? y.coefficients()[static_cast<std::size_t>(t)] : rational(0)))
                        ++t;
                    return std::tuple{z, t, q};
                }
            }
        return std::nullopt;
    }
    friend bool operator==(const zq_series& a, const zq_series& b) { return !first_difference(a, b); }

    /// Rows (z, t, q, coefficient) for the nonzero coefficients, ordered by z, then t, then q.
    std::vector<std::tuple<int, int, long, rational>> rows() const
    {
        std::vector<std::tuple<int, int, long, rational>> out;
        for (int z = 0; z <= zmax_; ++z) {
            int tmax = -1;
            for (const auto& p : c_[static_cast<std::size_t>(z)])
                tmax = std::max(tmax, p.degree());
            for (int t = 0; t <= tmax; ++t)
                for (long q = qmin_; q <= qmax_; ++q) {
                    rational v = coefficient(z, t, q);
                    if (!is_zero(v))
                        out.emplace_back(z, t, q, v);
                }
        }
        return out;
    }

    void write_tsv(std::ostream& os) const
    {
        os << "z\tt\tq\tcoeff\n";
        for (const auto& [z, t, q, v] : rows())
            os << z << '\t' << t << '\t' << q << '\t' << to_fraction_string(v) << '\n';
    }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json rs = nlohmann::ordered_json::array();
        for (const auto& [z, t, q, v] : rows())
            rs.push_back(nlohmann::ordered_json{{"z", z}, {"t", t}, {"q", q}, {"coeff", to_fraction_string(v)}});
        return nlohmann::ordered_json{{"bounds", {{"zmax", zmax_}, {"qmin", qmin_}, {"qmax", qmax_}}}, {"rows", rs}};
    }

private:
    static zq_series combine(const zq_series& a, const zq_series& b, const rational& sb)
    {
        zq_series r(std::min(a.zmax_, b.zmax_), std::min(a.qmin_, b.qmin_), std::min(a.qmax_, b.qmax_));
        for (int z = 0; z <= r.zmax_; ++z)
            for (long q = r.qmin_; q <= r.qmax_; ++q)
                r.c_[static_cast<std::size_t>(z)][static_cast<std::size_t>(q - r.qmin_)] =
                    a.coefficient(z, q) + sb * b.coefficient(z, q);
        return r;
    }

    int zmax_ = 0;
    long qmin_ = 0;
    long qmax_ = -1;
    std::vector<std::vector<tpoly>> c_;
};

inline zq_series zq_mul(const zq_series& a, const zq_series& b) { return a * b; }
inline zq_series zq_reciprocal(const zq_series& a) { return a.reciprocal(); }

/// Largest q-degree on which the umbral image of a series with window w is exact:
/// every word of weight <= n and length <= L must have its letters <= K.
inline long umbral_q_bound(const truncation_window& w)
{
    if (w.min_letter >= 0)
        return w.max_letter;
    return w.max_letter + static_cast<long>(w.min_letter) * (w.max_length - 1);
}

/// sum_w <R,w> t^. z^{length w} q^{weight w}, on z <= zmax and q <= qmax.
template <coefficient_ring C>
zq_series umbral(const basic_series<C>& r, int zmax, long qmax)
{
    const auto& w = r.window();
    if (zmax > w.max_length)
        throw window_error("umbral: z-degree " + std::to_string(zmax) + " exceeds word length bound " +
                           std::to_string(w.max_length));
    if (qmax > umbral_q_bound(w))
        throw window_error("umbral: q-degree " + std::to_string(qmax) + " exceeds certified bound " +
                           std::to_string(umbral_q_bound(w)));
    long qmin = w.min_letter < 0 ? static_cast<long>(w.min_letter) * zmax : 0;
    zq_series out(zmax, qmin, qmax);
    for (const auto& [x, c] : r.terms())
        if (static_cast<int>(x.size()) <= zmax)
            out.add(static_cast<int>(x.size()), x.weight(), to_tpoly(c));
    return out;
}

/// (S_k)!(q) = S_k(q) S_{k-1}(q) ... S_1(q) with S_j(q) = sum_{s in S} q^{j(s-1)},
/// exact through q^qmax. (S_0)! = 1. When 0 is in S the result has negative powers.
inline qlaurent sk_factorial(const set_spec& s, long k, long qmax)
{
    if (k < 0)
        throw precondition_error("sk_factorial: k must be nonnegative");
    // Each S_j has lowest degree >= -j, so the other factors lower the
    // product's exactness by at most k(k+1)/2.
    long margin = k * (k + 1) / 2;
    long hi = qmax + margin;
    auto r = qlaurent::one(hi);
    for (long j = 1; j <= k; ++j) {
        long lo = s.contains(0) ? -j : 0;
        qlaurent sj(lo, hi);
        for (long x : s.elements_upto(hi / j + 1))
            sj.add(j * (x - 1), rational(1));
        r = r * sj;
    }
    return r.truncated(qmax);
}

/// Identifiers of the closed forms.
enum class closed_form_id { pm, cm, rm, hydra_a, ps, cshat, local_minima };

struct closed_form_params {
    long m = 2;
    std::optional<set_spec> set;
};

namespace detail {

/// sum_{k=0}^{zmax} sign^k q^{a_k} z^k / (q;q)_k with a_k = exponent(k).
template <class Exponent>
zq_series pochhammer_sum(int zmax, long qmax, int sign, Exponent exponent)
{
    zq_series r(zmax, 0, qmax);
    for (int k = 0; k <= zmax; ++k) {
        long a = exponent(k);
        if (a > qmax)
            continue;
        auto f = qlaurent::monomial(a, rational(k % 2 && sign < 0 ? -1 : 1), 0, qmax) *
                 pochhammer(1, 1, k, qmax).inverse();
        r.add_z_coefficient(k, f);
    }
    return r;
}

/// 1 + sum_{k>=1} sign^k q^{C(k+1,2)} / (1 - q^k) (S_{k-1})!(q) z^k.
inline zq_series ps_sum(const set_spec& s, int zmax, long qmax, int sign)
{
    zq_series r = zq_series::one(zmax, qmax);
    for (int k = 1; k <= zmax; ++k) {
        long a = binom2(k + 1);
        // (S_{k-1})! starts at q^{-C(k,2)} when 0 is in S; the head needs that much extra room.
        long room = s.contains(0) ? binom2(k) : 0;
        if (a - room > qmax)
            continue;
        auto fact = sk_factorial(s, k - 1, qmax - a + room);
        auto head = qlaurent::monomial(a, rational(k % 2 && sign < 0 ? -1 : 1), a, qmax + room) *
                    pochhammer(k, k, 1, qmax + room).inverse();
        auto f = (head * fact).truncated(qmax);
        if (f.lo() < 0)
            throw internal_error("P_S term has negative q-degree");
        r.add_z_coefficient(k, f);
    }
    return r;
}

} // namespace detail

/// m-distinct partitions: sum_k q^{m C(k,2) + k} z^k / (q;q)_k.
inline zq_series closed_form_pm(long m, int zmax, long qmax)
{
    return detail::pochhammer_sum(zmax, qmax, 1, [m](long k) { return m * binom2(k) + k; });
}

/// Compositions with contiguous differences <= m-1: the reciprocal of the
/// alternating m-distinct sum.
inline zq_series closed_form_cm(long m, int zmax, long qmax)
{
    return detail::pochhammer_sum(zmax, qmax, -1, [m](long k) { return m * binom2(k) + k; }).reciprocal();
}

/// Hydra fraction R_{m-1}(z) = z P_m(z q^{m-1}) / P_m(z).
inline zq_series closed_form_rm(long m, int zmax, long qmax)
{
    auto num = detail::pochhammer_sum(zmax, qmax, 1, [m](long k) { return m * binom2(k + 1); });
    auto den = closed_form_pm(m, zmax, qmax);
    return (num * den.reciprocal()).times_z();
}

/// Trees enriched with Pi_{m-1}: z D(z q^{m-1}) / D(z), D the alternating m-distinct sum.
inline zq_series closed_form_hydra_a(long m, int zmax, long qmax)
{
    auto num = detail::pochhammer_sum(zmax, qmax, -1, [m](long k) { return m * binom2(k + 1); });
    auto den = detail::pochhammer_sum(zmax, qmax, -1, [m](long k) { return m * binom2(k) + k; });
    return (num * den.reciprocal()).times_z();
}

/// Partitions with rises in S: 1 + sum_k q^{C(k+1,2)} / (1 - q^k) (S_{k-1})!(q) z^k.
inline zq_series closed_form_ps(const set_spec& s, int zmax, long qmax) { return detail::ps_sum(s, zmax, qmax, 1); }

/// Compositions with contiguous differences in Z \ S: reciprocal of the alternating P_S sum.
inline zq_series closed_form_cshat(const set_spec& s, int zmax, long qmax)
{
    return detail::ps_sum(s, zmax, qmax, -1).reciprocal();
}

/// Compositions with t marking local minima:
/// prod_{k>=1} (1 - q - z q^{k+1}) / (1 - q - z q^{k+1} + q^k (q - 1) z t).
/// Factors with k > qmax are 1 on the bounds.
inline zq_series closed_form_local_minima(int zmax, long qmax)
{
    auto r = zq_series::one(zmax, qmax);
    const tpoly one(rational(1));
    for (long k = 1; k <= qmax; ++k) {
        zq_series num(zmax, 0, qmax);
        num.add(0, 0, one);
        num.add(0, 1, -one);
        num.add(1, k + 1, -one);
        zq_series den = num;
        den.add(1, k + 1, tpoly::t());
        den.add(1, k, -tpoly::t());
        r = r * num * den.reciprocal();
    }
    return r;
}

inline zq_series closed_form(closed_form_id id, const closed_form_params& p, int zmax, long qmax)
{
    auto need_set = [&]() -> const set_spec& {
        if (!p.set)
            throw precondition_error("closed form needs a set S");
        return *p.set;
    };
    auto need_m = [&](long lo) {
        if (p.m < lo)
            throw precondition_error("closed form needs m >= " + std::to_string(lo));
        return p.m;
    };
    switch (id) {
    case closed_form_id::pm:
        return closed_form_pm(need_m(0), zmax, qmax);
    case closed_form_id::cm:
        return closed_form_cm(need_m(1), zmax, qmax);
    case closed_form_id::rm:
        return closed_form_rm(need_m(2), zmax, qmax);
    case closed_form_id::hydra_a:
        return closed_form_hydra_a(need_m(2), zmax, qmax);
    case closed_form_id::ps:
        return closed_form_ps(need_set(), zmax, qmax);
    case closed_form_id::cshat:
        return closed_form_cshat(need_set(), zmax, qmax);
    case closed_form_id::local_minima:
        return closed_form_local_minima(zmax, qmax);
    }
    throw precondition_error("unknown closed form");
}

/// The worked-example formulas for P_S, each written out for its family:
///   [m, inf)    q^{m C(k,2)+k} / (q;q)_k
///   [m, n]      q^{m C(k,2)+k} (q^{n-m+1}; q^{n-m+1})_{k-1} / (q;q)_k
///   {m}         q^{m C(k,2)+k} / (1 - q^k)
///   mN          q^k / ((1 - q^k) (q^m; q^m)_{k-1})
///   mN+         q^{m C(k,2)+k} / ((1 - q^k) (q^m; q^m)_{k-1})
///   l mod m     q^{l C(k,2)+k} / ((1 - q^k) (q^m; q^m)_{k-1})
/// Returns none for sets outside these families.
inline std::optional<zq_series> ps_worked_example(const set_spec& s, int zmax, long qmax)
{
    using term_fn = std::function<qlaurent(long)>;
    auto sum = [&](const term_fn& f) {
        zq_series r = zq_series::one(zmax, qmax);
        for (int k = 1; k <= zmax; ++k)
            r.add_z_coefficient(k, f(k).truncated(qmax));
        return r;
    };
    auto q_pow = [&](long e) { return qlaurent::monomial(e, rational(1), 0, qmax); };
    auto one_minus_qk = [&](long k) { return pochhammer(k, k, 1, qmax); };
    auto qq = [&](long k) { return pochhammer(1, 1, k, qmax); };
    auto qm_qm = [&](long m, long n) { return pochhammer(m, m, n, qmax); };

    const auto& n = s.value();
    if (const auto* iv = std::get_if<set_spec::interval>(&n)) {
        long m = iv->lo;
        if (!iv->hi)
            return sum([&](long k) { return q_pow(m * binom2(k) + k) * qq(k).inverse(); });
        long hi = *iv->hi;
        if (hi == m)
            return sum([&](long k) { return q_pow(m * binom2(k) + k) * one_minus_qk(k).inverse(); });
        long d = hi - m + 1;
        return sum([&](long k) { return q_pow(m * binom2(k) + k) * qm_qm(d, k - 1) * qq(k).inverse(); });
    }
    if (const auto* fin = std::get_if<set_spec::finite>(&n)) {
        if (fin->elements.size() != 1)
            return std::nullopt;
        long m = *fin->elements.begin();
        return sum([&](long k) { return q_pow(m * binom2(k) + k) * one_minus_qk(k).inverse(); });
    }
    if (const auto* pr = std::get_if<set_spec::progression>(&n)) {
        long l = pr->first, m = pr->step;
        if (pr->no_zero && l == 0)
            l = m;
        if (l == 0)
            return sum([&](long k) { return q_pow(k) * (one_minus_qk(k) * qm_qm(m, k - 1)).inverse(); });
        if (l == m)
            return sum([&](long k) { return q_pow(m * binom2(k) + k) * (one_minus_qk(k) * qm_qm(m, k - 1)).inverse(); });
        if (l > m)
            return std::nullopt;
        return sum([&](long k) { return q_pow(l * binom2(k) + k) * (one_minus_qk(k) * qm_qm(m, k - 1)).inverse(); });
    }
    return std::nullopt;
}

} // namespace shiftpl
