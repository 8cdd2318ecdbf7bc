#include <doctest.h>

#include <set>

#include "witt/errors.hpp"
#include "witt/veritas.hpp"

using namespace witt;

TEST_CASE("claim registry is sorted and duplicate-free") {
    const auto& claims = all_claims();
    CHECK(claims.size() >= 20);
    std::set<std::string> seen;
    std::string prev;
    for (const auto& c : claims) {
        CHECK(prev < c.id);
        prev = c.id;
        CHECK(seen.insert(c.id).second);
        CHECK_FALSE(c.paper_ref.empty());
        CHECK(bool(c.run));
    }
}

TEST_CASE("running a single cheap claim") {
    auto res = run_claim("lemma-6-1-identity");
    CHECK(res.status == "pass");
    CHECK(res.elapsed_ms >= 0);
    CHECK_FALSE(res.detail.empty());
}

TEST_CASE("unknown claim ids are an error") {
    CHECK_THROWS_AS(run_claim("no-such-claim"), DomainError);
    VerifyConfig cfg;
    cfg.only = {"lemma-6-1-identity", "no-such-claim"};
    CHECK_THROWS_AS(run_all(cfg), DomainError);
}

TEST_CASE("witt-mode claims skip when excluded") {
    VerifyConfig cfg;
    cfg.include_witt = false;
    auto res = run_claim("remark-3-10", cfg);
    CHECK(res.status == "skipped");
    cfg.include_witt = true;
    CHECK(run_claim("remark-3-10", cfg).status == "pass");
}

TEST_CASE("only filter restricts the run") {
    VerifyConfig cfg;
    cfg.only = {"geom-f", "lemma-6-1-identity"};
    auto results = run_all(cfg);
    REQUIRE(results.size() == 2);
    CHECK(results[0].id == "geom-f");
    CHECK(results[1].id == "lemma-6-1-identity");
}

TEST_CASE("report serialization carries the schema fields") {
    VerifyConfig cfg;
    cfg.only = {"lemma-6-1-identity"};
    Report rep = make_report(cfg);
    auto j = rep.to_json();
    CHECK(j["tool_version"] == tool_version());
    REQUIRE(j["claims"].size() == 1);
    const auto& c = j["claims"][0];
    for (const char* key : {"id", "paper_ref", "status", "expected", "computed", "detail",
                            "elapsed_ms"})
        CHECK(c.contains(key));
    CHECK(j["all_pass"] == rep.all_pass());
    std::string table = rep.render_table();
    CHECK(table.find("lemma-6-1-identity") != std::string::npos);
    CHECK(table.find("1 claims: 1 passed") != std::string::npos);
}

TEST_CASE("max_degree truncation is recorded") {
    VerifyConfig cfg;
    cfg.max_degree = 4;
    auto res = run_claim("thm-5-1-g", cfg);
    CHECK(res.detail.find("truncated") != std::string::npos);
}
