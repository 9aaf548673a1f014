#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace shiftpl {

/// Dense polynomial in the statistic marker t with exact rational coefficients.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient vector and equality is plain vector equality.
class tpoly {
public:
    tpoly() = default;
    tpoly(const rational& c) // NOLINT: implicit promotion from scalars is intended
    {
        if (!shiftpl::is_zero(c))
            c_.push_back(c);
    }
    tpoly(long c) : tpoly(rational(c)) {} // NOLINT
    tpoly(int c) : tpoly(rational(c)) {}  // NOLINT
    tpoly(std::initializer_list<rational> cs) : c_(cs) { trim(); }
    explicit tpoly(std::vector<rational> cs) : c_(std::move(cs)) { trim(); }

    /// The marker t itself.
    static tpoly t() { return tpoly{rational(0), rational(1)}; }
    static tpoly monomial(std::size_t deg, const rational& c)
    {
        std::vector<rational> cs(deg + 1);
        cs[deg] = c;
        return tpoly(std::move(cs));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<rational>& coefficients() const { return c_; }
    rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : rational(0); }
    rational constant_term() const { return (*this)[0]; }
    bool is_constant() const { return c_.size() <= 1; }

    tpoly& operator+=(const tpoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    tpoly& operator-=(const tpoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    tpoly& operator*=(const tpoly& o)
    {
        *this = *this * o;
        return *this;
    }
    tpoly& operator*=(const rational& s)
    {
        if (shiftpl::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_)
            x *= s;
        return *this;
    }

    friend tpoly operator+(tpoly a, const tpoly& b) { return a += b; }
    friend tpoly operator-(tpoly a, const tpoly& b) { return a -= b; }
    friend tpoly operator-(tpoly a)
    {
        for (auto& x : a.c_)
            x = -x;
        return a;
    }
    friend tpoly operator*(const tpoly& a, const tpoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        return tpoly(std::move(out));
    }
    friend tpoly operator*(tpoly a, const rational& s) { return a *= s; }
    friend tpoly operator*(const rational& s, tpoly a) { return a *= s; }

    friend bool operator==(const tpoly&, const tpoly&) = default;

    friend std::ostream& operator<<(std::ostream& os, const tpoly& p)
    {
        if (p.is_zero())
            return os << "0";
        bool first = true;
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (shiftpl::is_zero(p.c_[i]))
                continue;
            if (!first)
                os << " + ";
            first = false;
            os << p.c_[i];
            if (i == 1)
                os << "*t";
            else if (i > 1)
                os << "*t^" << i;
        }
        return os;
    }

private:
    void trim()
    {
        while (!c_.empty() && shiftpl::is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<rational> c_;
};

inline bool is_zero(const tpoly& p) { return p.is_zero(); }

} // namespace shiftpl
