#pragma once

// Brute-force enumerators used as independent references.
//
// Nothing here calls the series, language, tree or q-series code: constraints
// arrive as plain predicates and results are words or integer tables. Costs:
// compositions of n take 2^{n-1} steps, partitions with rises far less, and
// colored trees grow like the cyclic compositions they biject with.

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace shiftpl::oracle {

inline constexpr int max_composition_weight = 24;
inline constexpr int max_partition_weight = 40;

using word_filter = std::function<bool(const word&)>;

/// Calls visit(k) for every composition k of n, in lexicographic order.
inline void for_each_composition(int n, const std::function<void(const word&)>& visit)
{
    if (n < 1 || n > max_composition_weight)
        throw precondition_error("compositions are enumerated for 1 <= n <= " +
                                 std::to_string(max_composition_weight));
    word cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            visit(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
}

inline std::vector<word> enum_compositions(int n, const word_filter& keep = {})
{
    std::vector<word> out;
    for_each_composition(n, [&](const word& k) {
        if (!keep || keep(k))
            out.push_back(k);
    });
    return out;
}

/// Filter: every contiguous difference k_{i+1} - k_i satisfies ok.
inline word_filter differences(std::function<bool(long)> ok)
{
    return [ok = std::move(ok)](const word& k) {
        for (std::size_t i = 1; i < k.size(); ++i)
            if (!ok(static_cast<long>(k[i]) - k[i - 1]))
                return false;
        return true;
    };
}

inline word_filter no_equal_adjacent()
{
    return differences([](long d) { return d != 0; });
}

/// Partitions of n written in weakly increasing order, first part >= 1, with
/// every rise lambda_{i+1} - lambda_i accepted by rise_ok.
inline std::vector<word> enum_partitions_with_rises(int n, const std::function<bool(long)>& rise_ok)
{
    if (n < 0 || n > max_partition_weight)
        throw precondition_error("partitions are enumerated for 0 <= n <= " + std::to_string(max_partition_weight));
    std::vector<word> out;
    word cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            if (!cur.empty())
                out.push_back(cur);
            return;
        }
        int lo = cur.empty() ? 1 : cur.back();
        for (int p = lo; p <= rest; ++p) {
            if (!cur.empty() && !rise_ok(p - cur.back()))
                continue;
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

/// Number of positions holding a value <= every earlier value.
inline int count_local_minima(const word& k)
{
    int count = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        bool minimum = true;
        for (std::size_t j = 0; j < i; ++j)
            if (k[j] < k[i])
                minimum = false;
        count += minimum;
    }
    return count;
}

inline int count_rises(const word& k)
{
    int r = 0;
    for (std::size_t i = 1; i < k.size(); ++i)
        r += k[i] > k[i - 1];
    return r;
}

inline bool is_cyclic(const word& k)
{
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i] <= k[0])
            return false;
    return !k.empty() && k[0] >= 1;
}

/// Counts keyed by (weight n, length k, marker t).
class count_table {
public:
    using key = std::tuple<long, long, long>;

    void add(long n, long k, long t, std::uint64_t c = 1) { counts_[{n, k, t}] += c; }
    std::uint64_t at(long n, long k, long t) const
    {
        auto it = counts_.find({n, k, t});
        return it == counts_.end() ? 0 : it->second;
    }
    /// Sum over all lengths and markers for weight n.
    std::uint64_t total(long n) const
    {
        std::uint64_t s = 0;
        for (const auto& [key, c] : counts_)
            if (std::get<0>(key) == n)
                s += c;
        return s;
    }
    const std::map<key, std::uint64_t>& entries() const { return counts_; }

    /// TSV with columns z, t, q, count: length, marker, weight, count; sorted by (z, t, q).
    void write_tsv(std::ostream& os) const
    {
        std::map<std::tuple<long, long, long>, std::uint64_t> by_z;
        for (const auto& [key, c] : counts_)
            by_z[{std::get<1>(key), std::get<2>(key), std::get<0>(key)}] = c;
        os << "z\tt\tq\tcount\n";
        for (const auto& [key, c] : by_z)
            os << std::get<0>(key) << '\t' << std::get<1>(key) << '\t' << std::get<2>(key) << '\t' << c << '\n';
    }

    friend bool operator==(const count_table&, const count_table&) = default;

private:
    std::map<key, std::uint64_t> counts_;
};

/// Tabulates words by (weight, length, marker(word)).
inline count_table tabulate(const std::vector<word>& words, const std::function<long(const word&)>& marker = {})
{
    count_table t;
    for (const auto& w : words)
        t.add(w.weight(), static_cast<long>(w.size()), marker ? marker(w) : 0);
    return t;
}

/// Named tables over weights 1..nmax.
enum class table_kind { compositions, carlitz, bounded_differences, compositions_by_minima, partitions_with_rises };

inline count_table count_table_for(table_kind kind, int nmax, long m = 0,
                                   const std::function<bool(long)>& rises = {})
{
    count_table t;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<word> ws;
        std::function<long(const word&)> marker;
        switch (kind) {
        case table_kind::compositions:
            ws = enum_compositions(n);
            break;
        case table_kind::carlitz:
            ws = enum_compositions(n, no_equal_adjacent());
            break;
        case table_kind::bounded_differences:
            ws = enum_compositions(n, differences([m](long d) { return d <= m; }));
            break;
        case table_kind::compositions_by_minima:
            ws = enum_compositions(n);
            marker = [](const word& k) { return static_cast<long>(count_local_minima(k)); };
            break;
        case table_kind::partitions_with_rises:
            ws = enum_partitions_with_rises(n, rises);
            break;
        }
        for (const auto& w : ws)
            t.add(n, static_cast<long>(w.size()), marker ? marker(w) : 0);
    }
    return t;
}

/// A colored plane tree described without the tree module: its text form
/// "c(child child ...)" and its preorder word.
struct tree_record {
    std::string text;
    word preorder;
    friend auto operator<=>(const tree_record&, const tree_record&) = default;
};

/// All plane trees with root color `root` and total color weight <= max_weight
/// in which each vertex of color c has children colors c + d_1, ..., c + d_r
/// with all d_i >= 1 and child_ok((d_1, ..., d_r)) true.
inline std::vector<tree_record> enum_trees(int root, int max_weight, const word_filter& child_ok)
{
    struct partial {
        std::string text;
        word pre;
        int weight;
    };
    // trees_at(c, budget): every tree with root color c and weight <= budget.
    std::function<std::vector<partial>(int, int)> trees_at;
    // Extends the child list of an open vertex of color c by further subtrees.
    std::function<void(int, int, word&, const partial&, std::vector<partial>&)> children =
        [&](int c, int budget, word& offsets, const partial& acc, std::vector<partial>& out) {
            if (!offsets.empty() && child_ok(offsets))
                out.push_back({acc.text + ")", acc.pre, acc.weight});
            for (int d = 1; c + d <= budget; ++d) {
                for (const auto& sub : trees_at(c + d, budget)) {
                    offsets.push_back(d);
                    partial next{acc.text + (offsets.size() == 1 ? "" : " ") + sub.text, acc.pre + sub.pre,
                                 acc.weight + sub.weight};
                    children(c, budget - sub.weight, offsets, next, out);
                    offsets.pop_back();
                }
            }
        };
    trees_at = [&](int c, int budget) {
        std::vector<partial> out;
        if (c > budget)
            return out;
        out.push_back({std::to_string(c), word{c}, c});
        word offsets;
        children(c, budget - c, offsets, partial{std::to_string(c) + "(", word{c}, c}, out);
        return out;
    };
    std::vector<tree_record> result;
    for (const auto& t : trees_at(root, max_weight))
        result.push_back({t.text, t.pre});
    return result;
}

} // namespace shiftpl::oracle
