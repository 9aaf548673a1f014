#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace shiftpl {

using letter = int;

/// Finite sequence of integer letters indexing the monomial X_{k1} X_{k2} ... X_{kl}.
///
/// The empty word is the unit 1. Words are compared letter by letter, so two
/// words are equal iff their sequences are identical (no commutation).
class word {
public:
    using storage = boost::container::small_vector<letter, 10>;
    using const_iterator = storage::const_iterator;

    word() = default;
    word(std::initializer_list<letter> ls) : l_(ls) {}
    explicit word(std::span<const letter> ls) : l_(ls.begin(), ls.end()) {}
    template <class It>
    word(It first, It last) : l_(first, last)
    {
    }

    std::size_t size() const { return l_.size(); }
    bool empty() const { return l_.empty(); }
    letter operator[](std::size_t i) const { return l_[i]; }
    letter front() const { return l_.front(); }
    letter back() const { return l_.back(); }
    const_iterator begin() const { return l_.begin(); }
    const_iterator end() const { return l_.end(); }
    std::span<const letter> letters() const { return {l_.data(), l_.size()}; }

    void push_back(letter k) { l_.push_back(k); }
    void pop_back() { l_.pop_back(); }
    void append(const word& o) { l_.insert(l_.end(), o.l_.begin(), o.l_.end()); }

    /// |w|: sum of the letters.
    long weight() const { return std::accumulate(l_.begin(), l_.end(), 0L); }
    /// Minimum letter; none for the empty word.
    std::optional<letter> order() const
    {
        if (l_.empty())
            return std::nullopt;
        return *std::min_element(l_.begin(), l_.end());
    }
    std::optional<letter> max_letter() const
    {
        if (l_.empty())
            return std::nullopt;
        return *std::max_element(l_.begin(), l_.end());
    }

    /// Letter-wise translation by n.
    word shifted(letter n) const
    {
        word r = *this;
        for (auto& k : r.l_)
            k += n;
        return r;
    }

    word subword(std::size_t pos, std::size_t len) const
    {
        return word(l_.begin() + static_cast<std::ptrdiff_t>(pos),
                    l_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    }

    friend word operator+(const word& a, const word& b)
    {
        word r;
        r.l_.reserve(a.size() + b.size());
        r.l_.insert(r.l_.end(), a.l_.begin(), a.l_.end());
        r.l_.insert(r.l_.end(), b.l_.begin(), b.l_.end());
        return r;
    }

    friend bool operator==(const word& a, const word& b)
    {
        return std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
    /// Lexicographic order; a proper prefix sorts first.
    friend std::strong_ordering operator<=>(const word& a, const word& b)
    {
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const word& w)
    {
        os << '(';
        for (std::size_t i = 0; i < w.size(); ++i)
            os << (i ? "," : "") << w[i];
        return os << ')';
    }

private:
    storage l_;
};

struct word_hash {
    std::size_t operator()(const word& w) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ w.size();
        for (letter k : w) {
            h ^= static_cast<std::uint32_t>(k);
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

struct word_statistics {
    long weight;
    std::size_t length;
    std::optional<letter> order;
    friend bool operator==(const word_statistics&, const word_statistics&) = default;
};

inline word_statistics word_stats(const word& w) { return {w.weight(), w.size(), w.order()}; }

inline std::string to_string(const word& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

} // namespace shiftpl
