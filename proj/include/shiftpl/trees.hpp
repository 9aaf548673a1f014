#pragma once

// Colored plane trees: preorder words, text form, the insertion algorithm and
// validity against an enriching language.

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "series.hpp"

namespace shiftpl {

/// Rooted plane tree with nonnegative integer vertex colors.
struct ptree {
    letter color = 0;
    std::vector<ptree> children;

    friend bool operator==(const ptree&, const ptree&) = default;
};

inline void append_preorder(const ptree& t, word& out)
{
    out.push_back(t.color);
    for (const auto& c : t.children)
        append_preorder(c, out);
}

/// Root first, then each child subtree left to right.
inline word preorder_word(const ptree& t)
{
    word w;
    append_preorder(t, w);
    return w;
}

/// Text form "3(5(7 7) 4(5))": a color, then its children in parentheses.
inline std::string to_text(const ptree& t)
{
    std::string s = std::to_string(t.color);
    if (!t.children.empty()) {
        s += '(';
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            if (i)
                s += ' ';
            s += to_text(t.children[i]);
        }
        s += ')';
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const ptree& t) { return os << to_text(t); }

namespace detail {

inline ptree parse_tree_at(std::string_view s, std::size_t& pos)
{
    auto skip = [&] {
        while (pos < s.size() && s[pos] == ' ')
            ++pos;
    };
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (start == pos)
        throw precondition_error("tree text: expected a color at offset " + std::to_string(start));
    ptree t{std::stoi(std::string(s.substr(start, pos - start))), {}};
    skip();
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        while (true) {
            t.children.push_back(parse_tree_at(s, pos));
            skip();
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            if (pos >= s.size())
                throw precondition_error("tree text: unbalanced parentheses");
        }
    }
    return t;
}

} // namespace detail

inline ptree parse_tree(std::string_view s)
{
    std::size_t pos = 0;
    auto t = detail::parse_tree_at(s, pos);
    while (pos < s.size() && s[pos] == ' ')
        ++pos;
    if (pos != s.size())
        throw precondition_error("tree text: trailing characters");
    return t;
}

/// First part >= 1 and strictly smaller than every later part.
inline bool is_cyclic_composition(const word& k)
{
    if (k.empty() || k[0] < 1)
        return false;
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i] <= k[0])
            return false;
    return true;
}

/// Builds a tree from a cyclic composition by rightmost-branch insertion: each
/// new part becomes the rightmost child of the deepest vertex on the rightmost
/// branch whose color is strictly smaller.
inline ptree insertion_tree(const word& k)
{
    if (!is_cyclic_composition(k))
        throw precondition_error("insertion_tree: (" + to_string(k) + ") is not a cyclic composition");
    ptree root{k[0], {}};
    // Rightmost branch, root to leaf. Only the last vertex gains children, so
    // the pointers above it stay valid.
    std::vector<ptree*> branch{&root};
    for (std::size_t i = 1; i < k.size(); ++i) {
        while (branch.back()->color >= k[i])
            branch.pop_back();
        auto& parent = *branch.back();
        parent.children.push_back(ptree{k[i], {}});
        branch.push_back(&parent.children.back());
    }
    return root;
}

inline std::size_t count_leaves(const ptree& t)
{
    if (t.children.empty())
        return 1;
    std::size_t n = 0;
    for (const auto& c : t.children)
        n += count_leaves(c);
    return n;
}

inline std::size_t count_internal(const ptree& t)
{
    if (t.children.empty())
        return 0;
    std::size_t n = 1;
    for (const auto& c : t.children)
        n += count_internal(c);
    return n;
}

enum class tree_verdict { valid, invalid, undecidable };

inline std::ostream& operator<<(std::ostream& os, tree_verdict v)
{
    switch (v) {
    case tree_verdict::valid:
        return os << "valid";
    case tree_verdict::invalid:
        return os << "invalid";
    case tree_verdict::undecidable:
        return os << "undecidable";
    }
    return os;
}

/// Checks that the root has color root_color and that, at every internal
/// vertex of color c, the children colors minus c form a word of M. A child
/// word outside M's window makes the answer undecidable unless some other
/// vertex already fails.
inline tree_verdict validate_tree(const ptree& t, const series& m, letter root_color)
{
    if (t.color != root_color)
        return tree_verdict::invalid;
    bool unknown = false;
    bool bad = false;
    auto visit = [&](auto&& self, const ptree& v) -> void {
        if (bad)
            return;
        if (!v.children.empty()) {
            word offsets;
            for (const auto& c : v.children)
                offsets.push_back(c.color - v.color);
            if (!m.window().certifies(offsets))
                unknown = true;
            else if (is_zero(m.coefficient(offsets)))
                bad = true;
        }
        for (const auto& c : v.children)
            self(self, c);
    };
    visit(visit, t);
    if (bad)
        return tree_verdict::invalid;
    return unknown ? tree_verdict::undecidable : tree_verdict::valid;
}

} // namespace shiftpl
