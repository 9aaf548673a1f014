#include <set>

#include <catch_amalgamated.hpp>

#include <shiftpl/verify.hpp>

using namespace shiftpl;

TEST_CASE("catalog ids are unique and cover the criteria")
{
    std::set<std::string> ids;
    for (const auto& e : verify::catalog()) {
        CHECK(ids.insert(e.id).second);
        CHECK(!e.statement.empty());
        switch (e.kind) {
        case verify::identity_kind::series:
            CHECK((e.lhs && e.rhs));
            break;
        case verify::identity_kind::q_series:
            CHECK((e.q_lhs && e.q_rhs));
            break;
        case verify::identity_kind::property:
            CHECK(static_cast<bool>(e.check));
            break;
        }
    }
    std::set<std::string> used;
    CHECK(verify::criteria().size() == 11);
    for (const auto& c : verify::criteria()) {
        CHECK(!c.ids.empty());
        for (const auto& id : c.ids) {
            CHECK(verify::find(id) != nullptr);
            used.insert(id);
        }
    }
    CHECK(used == ids);
    CHECK(verify::find("no-such-identity") == nullptr);
    CHECK(verify::find("rr-quotient")->defaults == verify::bounds{8, 40});
}

TEST_CASE("identities pass at small bounds")
{
    const std::pair<const char*, verify::bounds> small[] = {
        {"rr-quotient", {4, 12}},
        {"quotient-partitions-m2", {4, 8}},
        {"quotient-compositions-m3", {4, 8}},
        {"quotient-compositions-q-m2", {4, 10}},
        {"k-duality-m2", {4, 8}},
        {"bounded-differences-q-m3", {8, 8}},
        {"insertion-bijection", {1, 8}},
        {"insertion-refinement", {1, 7}},
        {"local-minima-q", {8, 8}},
        {"local-minima-nc", {4, 8}},
        {"branchless-even", {5, 12}},
        {"branchless-worked-examples", {4, 12}},
        {"dual-compositions-odd", {8, 8}},
        {"carlitz-factorization", {4, 8}},
        {"inverse-compositions", {4, 7}},
        {"inverse-hydra-closed-m2", {4, 8}},
        {"solver-fixed-point", {3, 5}},
    };
    for (const auto& [id, b] : small) {
        INFO(id);
        const auto* e = verify::find(id);
        REQUIRE(e != nullptr);
        auto r = verify::run(*e, b);
        CHECK(r.pass);
        CHECK(!r.witness);
        CHECK(r.id == id);
    }
}

TEST_CASE("failing identities carry a witness")
{
    verify::identity bad{"bad", "X_0 = X_0 + X_(1,1)", verify::identity_kind::series, {3, 4}};
    bad.lhs = [](const verify::bounds& b) { return series::letter(0, {b.L, b.K}); };
    bad.rhs = [](const verify::bounds& b) {
        truncation_window w{b.L, b.K};
        return series::letter(0, w) + series::monomial(word{1, 1}, rational(1), w);
    };
    auto r = verify::run(bad);
    CHECK(!r.pass);
    REQUIRE(r.witness);
    CHECK(*r.witness == "word (1,1): lhs 0/1, rhs 1/1");
    CHECK(r.window == "L=3,K=4,O=0");

    verify::identity narrow{"narrow", "certified on less than asked", verify::identity_kind::series, {3, 4}};
    narrow.lhs = [](const verify::bounds&) { return series::one({3, 2}); };
    narrow.rhs = [](const verify::bounds& b) { return series::one({b.L, b.K}); };
    auto n = verify::run(narrow);
    CHECK(!n.pass);
    CHECK(n.witness == "certified window L=3,K=2,O=0 is smaller than requested");

    verify::identity q{"q", "1 = 1 + zq", verify::identity_kind::q_series, {2, 3}};
    q.q_lhs = [](const verify::bounds& b) { return zq_series::one(b.L, b.K); };
    q.q_rhs = [](const verify::bounds& b) {
        auto r = zq_series::one(b.L, b.K);
        r.add(1, 1, tpoly(rational(1)));
        return r;
    };
    auto qr = verify::run(q);
    CHECK(!qr.pass);
    CHECK(qr.witness == "(z,t,q)=(1,0,1): lhs 0/1, rhs 1/1");
    CHECK(qr.line().rfind("FAIL q [z<=2,q<=3] (z,t,q)=(1,0,1): lhs 0/1, rhs 1/1 ", 0) == 0);

    auto j = qr.to_json();
    CHECK(j["status"] == "fail");
    CHECK(j["id"] == "q");
    CHECK(j["window"] == "z<=2,q<=3");
}

TEST_CASE("runner turns errors into failing reports")
{
    verify::identity throws{"throws", "uncertifiable", verify::identity_kind::series, {3, 4}};
    throws.lhs = [](const verify::bounds&) -> series { throw window_error("too wide"); };
    throws.rhs = throws.lhs;
    CHECK_THROWS_AS(verify::run(throws), window_error);

    verify::identity small = *verify::find("k-duality-m2");
    small.defaults = {4, 6};
    auto reports = verify::run_many({&throws, &small}, 2);
    REQUIRE(reports.size() == 2);
    CHECK(!reports[0].pass);
    CHECK(reports[0].witness == "error: too wide");
    CHECK(reports[1].pass);
    CHECK(reports[1].id == "k-duality-m2");
}

TEST_CASE("series windows are limited")
{
    const auto* rr = verify::find("rr-quotient");
    CHECK_THROWS_AS(verify::run(*rr, verify::bounds{verify::series_limits.L + 1, 10}), window_error);
    CHECK_THROWS_AS(verify::run(*rr, verify::bounds{4, verify::series_limits.K + 1}), window_error);
    CHECK_THROWS_AS(verify::run(*rr, verify::bounds{0, 10}), window_error);
    // Closed form against the oracle: no series are built, so only the oracle limits apply.
    const auto* lm = verify::find("local-minima-q");
    CHECK(verify::run(*lm, verify::bounds{verify::series_limits.L + 4, 12}).pass);
    CHECK_THROWS_AS(verify::run(*lm, verify::bounds{4, oracle::max_composition_weight + 1}), precondition_error);
}
