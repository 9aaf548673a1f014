#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "word.hpp"

namespace shiftpl {

/// Finite region on which a truncated series is exact.
///
/// A series with window (L, K, O) stores every coefficient of words of length
/// at most L whose letters lie in [O, K]. The floor O is also a support bound:
/// the series vanishes on every word containing a letter below O, so such
/// coefficients are known (zero) even though they are not stored. Words longer
/// than L or containing a letter above K are not certified.
struct truncation_window {
    int max_length = 1;
    letter max_letter = 0;
    letter min_letter = 0;

    constexpr truncation_window() = default;
    constexpr truncation_window(int L, letter K, letter O = 0) : max_length(L), max_letter(K), min_letter(O)
    {
        if (L < 0)
            throw precondition_error("window length must be nonnegative");
        if (O > K)
            throw precondition_error("window floor exceeds max letter");
    }

    /// Stored region: length <= L and every letter in [O, K].
    bool admits(const word& w) const
    {
        if (static_cast<int>(w.size()) > max_length)
            return false;
        return std::all_of(w.begin(), w.end(), [&](letter k) { return k >= min_letter && k <= max_letter; });
    }

    /// The coefficient of w is known: either stored, or zero by the support floor.
    bool certifies(const word& w) const
    {
        if (static_cast<int>(w.size()) > max_length)
            return false;
        return std::all_of(w.begin(), w.end(), [&](letter k) { return k <= max_letter; }) ||
               std::any_of(w.begin(), w.end(), [&](letter k) { return k < min_letter; });
    }

    /// True when every word this window certifies is also certified by `outer`.
    bool within(const truncation_window& outer) const
    {
        return max_length <= outer.max_length && max_letter <= outer.max_letter && min_letter >= outer.min_letter;
    }

    truncation_window shifted(letter n) const { return {max_length, max_letter + n, min_letter + n}; }

    friend bool operator==(const truncation_window&, const truncation_window&) = default;

    friend std::ostream& operator<<(std::ostream& os, const truncation_window& w)
    {
        return os << "L=" << w.max_length << ",K=" << w.max_letter << ",O=" << w.min_letter;
    }
};

/// Common certified region of two windows. Support floors combine by minimum
/// because a series vanishing below O also vanishes below any smaller floor.
inline truncation_window intersect(const truncation_window& a, const truncation_window& b)
{
    truncation_window w;
    w.max_length = std::min(a.max_length, b.max_length);
    w.max_letter = std::min(a.max_letter, b.max_letter);
    w.min_letter = std::min(a.min_letter, b.min_letter);
    return w;
}

inline std::string to_string(const truncation_window& w)
{
    return "L=" + std::to_string(w.max_length) + ",K=" + std::to_string(w.max_letter) +
           ",O=" + std::to_string(w.min_letter);
}

} // namespace shiftpl
