#pragma once

// Decidable subsets of N used as rise sets and letter sets.
//
// Text syntax:
//   odd              {1, 3, 5, ...}
//   m..              [m, inf)
//   m..n             [m, n]
//   {a,b,c}          finite set
//   l mod m          {l, l+m, l+2m, ...}
//   l mod m, no-zero the same with 0 removed
//   A | B            union

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace shiftpl {

class set_spec {
public:
    struct finite {
        std::set<long> elements;
    };
    struct interval {
        long lo = 0;
        std::optional<long> hi;  ///< none means unbounded
    };
    /// {first + j * step : j >= 0}, optionally without 0.
    struct progression {
        long first = 0;
        long step = 1;
        bool no_zero = false;
    };
    struct set_union {
        std::vector<set_spec> parts;
    };
    using node = std::variant<finite, interval, progression, set_union>;

    set_spec() : n_(finite{}) {}
    explicit set_spec(node n) : n_(std::move(n)) { validate(); }

    static set_spec of(std::initializer_list<long> xs) { return set_spec(finite{std::set<long>(xs)}); }
    static set_spec from(long lo) { return set_spec(interval{lo, std::nullopt}); }
    static set_spec range(long lo, long hi) { return set_spec(interval{lo, hi}); }
    static set_spec residues(long l, long m, bool no_zero = false) { return set_spec(progression{l, m, no_zero}); }
    static set_spec odd() { return residues(1, 2); }
    static set_spec unite(std::vector<set_spec> parts) { return set_spec(set_union{std::move(parts)}); }

    const node& value() const { return n_; }

    bool contains(long x) const
    {
        return std::visit(
            [&](const auto& n) -> bool {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, finite>)
                    return n.elements.contains(x);
                else if constexpr (std::is_same_v<T, interval>)
                    return x >= n.lo && (!n.hi || x <= *n.hi);
                else if constexpr (std::is_same_v<T, progression>)
                    return x >= n.first && (x - n.first) % n.step == 0 && !(n.no_zero && x == 0);
                else
                    return std::any_of(n.parts.begin(), n.parts.end(), [&](const set_spec& p) { return p.contains(x); });
            },
            n_);
    }

    /// Elements in [0, hi], ascending.
    std::vector<long> elements_upto(long hi) const
    {
        std::vector<long> v;
        for (long x = 0; x <= hi; ++x)
            if (contains(x))
                v.push_back(x);
        return v;
    }

    std::string to_string() const
    {
        return std::visit(
            [](const auto& n) -> std::string {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, finite>) {
                    std::string s = "{";
                    bool first = true;
                    for (long x : n.elements) {
                        s += (first ? "" : ",") + std::to_string(x);
                        first = false;
                    }
                    return s + "}";
                } else if constexpr (std::is_same_v<T, interval>) {
                    return std::to_string(n.lo) + ".." + (n.hi ? std::to_string(*n.hi) : "");
                } else if constexpr (std::is_same_v<T, progression>) {
                    if (n.first == 1 && n.step == 2 && !n.no_zero)
                        return "odd";
                    return std::to_string(n.first) + " mod " + std::to_string(n.step) + (n.no_zero ? ", no-zero" : "");
                } else {
                    std::string s;
                    for (std::size_t i = 0; i < n.parts.size(); ++i)
                        s += (i ? " | " : "") + n.parts[i].to_string();
                    return s;
                }
            },
            n_);
    }

    static set_spec parse(std::string_view text)
    {
        std::string t = trim(text);
        if (t.empty())
            throw precondition_error("empty set specification");
        if (t.find('|') != std::string::npos) {
            std::vector<set_spec> parts;
            std::size_t start = 0;
            while (true) {
                auto bar = t.find('|', start);
                parts.push_back(parse(std::string_view(t).substr(start, bar - start)));
                if (bar == std::string::npos)
                    break;
                start = bar + 1;
            }
            return unite(std::move(parts));
        }
        if (t == "odd")
            return odd();
        if (t.front() == '{') {
            if (t.back() != '}')
                throw precondition_error("malformed set '" + t + "'");
            std::set<long> xs;
            std::stringstream ss(t.substr(1, t.size() - 2));
            std::string item;
            while (std::getline(ss, item, ','))
                if (!trim(item).empty())
                    xs.insert(to_long(item));
            return set_spec(finite{std::move(xs)});
        }
        if (auto dots = t.find(".."); dots != std::string::npos) {
            long lo = to_long(t.substr(0, dots));
            std::string rest = trim(t.substr(dots + 2));
            if (rest.empty())
                return from(lo);
            return range(lo, to_long(rest));
        }
        if (auto mod = t.find(" mod "); mod != std::string::npos) {
            long l = to_long(t.substr(0, mod));
            std::string rest = t.substr(mod + 5);
            bool no_zero = false;
            if (auto comma = rest.find(','); comma != std::string::npos) {
                if (trim(rest.substr(comma + 1)) != "no-zero")
                    throw precondition_error("unknown qualifier in '" + t + "'");
                no_zero = true;
                rest = rest.substr(0, comma);
            }
            return residues(l, to_long(rest), no_zero);
        }
        return of({to_long(t)});
    }

private:
    void validate() const
    {
        std::visit(
            [](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, finite>) {
                    if (!n.elements.empty() && *n.elements.begin() < 0)
                        throw precondition_error("set elements must be nonnegative");
                } else if constexpr (std::is_same_v<T, interval>) {
                    if (n.lo < 0 || (n.hi && *n.hi < n.lo))
                        throw precondition_error("interval must satisfy 0 <= lo <= hi");
                } else if constexpr (std::is_same_v<T, progression>) {
                    if (n.first < 0 || n.step < 1)
                        throw precondition_error("progression needs first >= 0 and step >= 1");
                }
            },
            n_);
    }

    static std::string trim(std::string_view s)
    {
        auto b = s.find_first_not_of(" \t");
        if (b == std::string_view::npos)
            return {};
        auto e = s.find_last_not_of(" \t");
        return std::string(s.substr(b, e - b + 1));
    }

    static long to_long(std::string_view s)
    {
        std::string t = trim(s);
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(t, &pos);
        } catch (const std::exception&) {
            throw precondition_error("expected an integer, got '" + t + "'");
        }
        if (pos != t.size())
            throw precondition_error("expected an integer, got '" + t + "'");
        return v;
    }

    node n_;
};

} // namespace shiftpl
