#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftpl {

/// Exact rational scalar. Every coefficient in the library is built on it.
using rational = mpq_class;

inline bool is_zero(const rational& x) { return sgn(x) == 0; }

/// p/q in lowest terms. mpq_class(p, q) alone does not reduce.
inline rational make_rational(long p, long q)
{
    rational r(p, q);
    r.canonicalize();
    return r;
}

/// Canonical "p/q" text form; the denominator is always written, e.g. "1/1".
inline std::string to_fraction_string(const rational& x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Accepts "p", "p/q" and "-p/q".
inline rational parse_rational(std::string_view text)
{
    std::string s(text);
    rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (sgn(r.get_den()) == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace shiftpl
