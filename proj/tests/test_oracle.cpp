#include <set>
#include <sstream>

#include <catch_amalgamated.hpp>

#include <shiftpl/oracle.hpp>

using namespace shiftpl;

TEST_CASE("composition enumeration")
{
    for (int n = 1; n <= 16; ++n)
        CHECK(oracle::enum_compositions(n).size() == (std::size_t{1} << (n - 1)));
    CHECK(oracle::enum_compositions(3) == std::vector<word>{word{1, 1, 1}, word{1, 2}, word{2, 1}, word{3}});

    // Carlitz compositions: 1, 1, 3, 4, 7, 14, 23, 39, 71, 124, 214, 378
    const std::size_t carlitz[] = {1, 1, 3, 4, 7, 14, 23, 39, 71, 124, 214, 378};
    for (int n = 1; n <= 12; ++n)
        CHECK(oracle::enum_compositions(n, oracle::no_equal_adjacent()).size() == carlitz[n - 1]);
    CHECK(oracle::enum_compositions(4, oracle::no_equal_adjacent()).size() == 4);

    CHECK_THROWS_AS(oracle::enum_compositions(0), precondition_error);
    CHECK_THROWS_AS(oracle::enum_compositions(oracle::max_composition_weight + 1), precondition_error);
}

TEST_CASE("partitions with restricted rises")
{
    auto p = oracle::enum_partitions_with_rises(5, [](long d) { return d >= 2; });
    CHECK(p == std::vector<word>{word{1, 4}, word{5}});

    // Parts differing by at least 2: 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12, 14, 17
    const std::size_t rr[] = {1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12, 14, 17};
    for (int n = 1; n <= 16; ++n)
        CHECK(oracle::enum_partitions_with_rises(n, [](long d) { return d >= 2; }).size() == rr[n - 1]);

    // Every rise allowed: the partition numbers.
    const std::size_t partitions[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n)
        CHECK(oracle::enum_partitions_with_rises(n, [](long) { return true; }).size() == partitions[n - 1]);

    // Distinct parts.
    CHECK(oracle::enum_partitions_with_rises(10, [](long d) { return d >= 1; }).size() == 10);
    CHECK(oracle::enum_partitions_with_rises(0, [](long) { return true; }).empty());
    CHECK_THROWS_AS(oracle::enum_partitions_with_rises(-1, [](long) { return true; }), precondition_error);
}

TEST_CASE("statistics on words")
{
    CHECK(oracle::count_local_minima(word{2, 3, 1, 5, 1}) == 3);
    CHECK(oracle::count_local_minima(word{1, 2, 3}) == 1);
    CHECK(oracle::count_local_minima(word{3, 3, 3}) == 3);
    CHECK(oracle::count_local_minima(word{}) == 0);
    CHECK(oracle::count_rises(word{1, 3, 2, 4}) == 2);
    CHECK(oracle::is_cyclic(word{3, 5, 7, 7, 4, 5}));
    CHECK(!oracle::is_cyclic(word{3, 5, 3}));
    CHECK(!oracle::is_cyclic(word{}));
    CHECK(oracle::differences([](long d) { return d <= 1; })(word{3, 4, 1, 2}));
    CHECK(!oracle::differences([](long d) { return d <= 1; })(word{1, 3}));
}

TEST_CASE("count tables")
{
    auto t = oracle::count_table_for(oracle::table_kind::compositions, 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(t.total(n) == (std::uint64_t{1} << (n - 1)));
    // Compositions of n with k parts: C(n-1, k-1).
    CHECK(t.at(6, 3, 0) == 10);

    auto m = oracle::count_table_for(oracle::table_kind::compositions_by_minima, 10);
    // Exactly one local minimum: the first part is the strict minimum, or the only part.
    for (int n = 1; n <= 10; ++n) {
        std::uint64_t single = 0;
        for (long k = 1; k <= n; ++k)
            single += m.at(n, k, 1);
        CHECK(single == oracle::enum_compositions(n, oracle::is_cyclic).size());
        CHECK(m.total(n) == (std::uint64_t{1} << (n - 1)));
    }

    auto b = oracle::count_table_for(oracle::table_kind::bounded_differences, 8, 0);
    CHECK(b.total(8) == 22); // weakly decreasing: the partitions of 8
    CHECK(b == oracle::tabulate([] {
              std::vector<word> all;
              for (int n = 1; n <= 8; ++n)
                  for (const auto& k : oracle::enum_compositions(n, oracle::differences([](long d) { return d <= 0; })))
                      all.push_back(k);
              return all;
          }()));

    auto r = oracle::count_table_for(oracle::table_kind::partitions_with_rises, 5, 0, [](long d) { return d >= 2; });
    CHECK(r.at(5, 1, 0) == 1);
    CHECK(r.at(5, 2, 0) == 1);
    CHECK(r.total(5) == 2);
}

TEST_CASE("count table output is deterministic")
{
    auto a = oracle::count_table_for(oracle::table_kind::compositions_by_minima, 3);
    auto b = oracle::count_table_for(oracle::table_kind::compositions_by_minima, 3);
    CHECK(a == b);
    std::ostringstream os;
    a.write_tsv(os);
    CHECK(os.str() == "z\tt\tq\tcount\n"
                      "1\t1\t1\t1\n1\t1\t2\t1\n1\t1\t3\t1\n"
                      "2\t1\t3\t1\n2\t2\t2\t1\n2\t2\t3\t1\n"
                      "3\t3\t3\t1\n");
}

TEST_CASE("colored tree enumeration")
{
    auto any = [](const word&) { return true; };
    auto trees = oracle::enum_trees(1, 3, any);
    std::set<std::string> texts;
    for (const auto& t : trees)
        texts.insert(t.text);
    CHECK(texts == std::set<std::string>{"1", "1(2)"});

    trees = oracle::enum_trees(1, 5, any);
    texts.clear();
    for (const auto& t : trees)
        texts.insert(t.text);
    CHECK(texts == std::set<std::string>{"1", "1(2)", "1(3)", "1(4)", "1(2 2)"});

    auto decreasing = [](const word& d) {
        for (std::size_t i = 1; i < d.size(); ++i)
            if (d[i] > d[i - 1])
                return false;
        return true;
    };
    for (const auto& t : oracle::enum_trees(2, 9, any)) {
        CHECK(t.preorder.front() == 2);
        CHECK(t.preorder.weight() <= 9);
    }
    // Weakly decreasing offsets: preorder words are distinct cyclic compositions.
    auto dec = oracle::enum_trees(1, 8, decreasing);
    std::set<word> words;
    for (const auto& t : dec) {
        CHECK(oracle::is_cyclic(t.preorder));
        words.insert(t.preorder);
    }
    CHECK(words.size() == dec.size());
    CHECK(words.count(word{1, 2, 2, 3}) == 1);
    CHECK(words.count(word{1, 3, 2}) == 1);
    CHECK(words.count(word{1, 2, 3}) == 1);
}
