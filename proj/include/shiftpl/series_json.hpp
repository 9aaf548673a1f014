#pragma once

// JSON dump of truncated series:
//   {"window":{"L":int,"K":int,"O":int},
//    "terms":[{"word":[int,...],"coeff":"p/q" | {"t":[["p/q",...]]}}, ...]}
// Terms are sorted lexicographically by word, so equal series dump to equal bytes.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "series.hpp"

namespace shiftpl {

inline nlohmann::ordered_json coefficient_to_json(const rational& c) { return to_fraction_string(c); }

inline nlohmann::ordered_json coefficient_to_json(const tpoly& c)
{
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : c.coefficients())
        row.push_back(to_fraction_string(x));
    return nlohmann::ordered_json{{"t", nlohmann::ordered_json::array({row})}};
}

inline nlohmann::ordered_json window_to_json(const truncation_window& w)
{
    return nlohmann::ordered_json{{"L", w.max_length}, {"K", w.max_letter}, {"O", w.min_letter}};
}

template <coefficient_ring C>
nlohmann::ordered_json series_to_json(const basic_series<C>& s)
{
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [x, c] : s.sorted_terms()) {
        nlohmann::ordered_json letters = nlohmann::ordered_json::array();
        for (letter k : x)
            letters.push_back(k);
        terms.push_back(nlohmann::ordered_json{{"word", letters}, {"coeff", coefficient_to_json(c)}});
    }
    return nlohmann::ordered_json{{"window", window_to_json(s.window())}, {"terms", terms}};
}

template <coefficient_ring C>
std::string dump_series(const basic_series<C>& s)
{
    return series_to_json(s).dump();
}

namespace detail {

inline void parse_coefficient(const nlohmann::ordered_json& j, rational& out) { out = parse_rational(j.get<std::string>()); }

inline void parse_coefficient(const nlohmann::ordered_json& j, tpoly& out)
{
    if (j.is_string()) {
        out = tpoly(parse_rational(j.get<std::string>()));
        return;
    }
    const auto& rows = j.at("t");
    if (!rows.is_array() || rows.size() != 1)
        throw std::invalid_argument("marked coefficient must be {\"t\":[[...]]}");
    std::vector<rational> cs;
    for (const auto& x : rows.at(0))
        cs.push_back(parse_rational(x.get<std::string>()));
    out = tpoly(std::move(cs));
}

} // namespace detail

/// Inverse of series_to_json. Throws on malformed input or words outside the window.
template <coefficient_ring C>
basic_series<C> series_from_json(const nlohmann::ordered_json& j)
{
    const auto& w = j.at("window");
    truncation_window win{w.at("L").get<int>(), w.at("K").get<letter>(), w.at("O").get<letter>()};
    basic_series<C> s(win);
    for (const auto& t : j.at("terms")) {
        word x;
        for (const auto& k : t.at("word"))
            x.push_back(k.get<letter>());
        if (!win.admits(x))
            throw std::invalid_argument("term (" + to_string(x) + ") lies outside the declared window");
        C c;
        detail::parse_coefficient(t.at("coeff"), c);
        s.add(x, c);
    }
    return s;
}

} // namespace shiftpl
