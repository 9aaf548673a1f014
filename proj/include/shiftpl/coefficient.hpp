#pragma once

#include <concepts>
#include <optional>

#include "rational.hpp"
#include "tpoly.hpp"

namespace shiftpl {

/// Ring of series coefficients: exact rationals, or polynomials in the marker t.
template <class C>
concept coefficient_ring = std::regular<C> && requires(C a, const C& b, const rational& s) {
    { is_zero(b) } -> std::convertible_to<bool>;
    a += b;
    a -= b;
    { b * b } -> std::convertible_to<C>;
    { s * b } -> std::convertible_to<C>;
    { -b } -> std::convertible_to<C>;
    C(s);
};

/// The scalar value of `c` when it is free of the marker, otherwise nothing.
inline std::optional<rational> as_scalar(const rational& c) { return c; }
inline std::optional<rational> as_scalar(const tpoly& c)
{
    if (!c.is_constant())
        return std::nullopt;
    return c.constant_term();
}

inline int marker_degree(const rational& c) { return is_zero(c) ? -1 : 0; }
inline int marker_degree(const tpoly& c) { return c.degree(); }

inline tpoly to_tpoly(const rational& c) { return tpoly(c); }
inline const tpoly& to_tpoly(const tpoly& c) { return c; }

} // namespace shiftpl
