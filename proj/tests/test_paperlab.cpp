#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/paperlab.hpp"

#include <cstdlib>
#include <set>

using namespace alcove;

TEST_CASE("registry")
{
    std::set<std::string> ids;
    for (const auto& c : lab::claim_registry()) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.description.empty());
        CHECK_FALSE(c.location.empty());
    }
    for (const char* id : {"d4-needs-8", "f4-case1-fvector", "e8-orbit-covers", "nh-equals-phi", "e8-fvector"})
        CHECK(ids.count(id) == 1);
    CHECK_THROWS_AS(lab::verify("no-such-claim"), lab::UnknownClaim);
}

TEST_CASE("single claims")
{
    lab::RunOptions opts;
    opts.timing = false;
    const auto d4 = lab::verify("d4-needs-8", opts);
    CHECK(d4.status == lab::Status::Verified);
    CHECK(d4.details["min_cover"] == 8);
    CHECK(d4.details["lower_bound"] == 6);
    CHECK(d4.details["greedy"].get<int>() >= 8);
    CHECK(d4.elapsed_ms == 0);

    const auto j = lab::to_json(d4);
    CHECK(j["status"] == "verified");
    CHECK(j["id"] == "d4-needs-8");
    CHECK_FALSE(j.contains("witness"));

    opts.params.type = CartanType::parse("F4");
    const auto nh = lab::verify("nh-equals-phi", opts);
    CHECK(nh.status == lab::Status::Verified);
    CHECK(nh.details["types"].size() == 1);
    CHECK(nh.details["types"][0]["coxeter_number"] == 12);
    CHECK(nh.details["types"][0]["long"] == 24);
}

TEST_CASE("skipped, capped and refuted outcomes")
{
    const auto e8 = lab::verify("e8-fvector");
    CHECK(e8.status == lab::Status::Skipped);
    CHECK(e8.details.contains("reason"));
    CHECK(lab::all_passed({e8}));

    ::setenv("ALCOVE_MAX_DD_RAYS", "10", 1);
    const auto capped = lab::verify("d4-fvector");
    ::unsetenv("ALCOVE_MAX_DD_RAYS");
    CHECK(capped.status == lab::Status::ResourceCapped);
    CHECK(lab::all_passed({capped}));

    const auto lines = lab::verify("highest-root-lines");
    CHECK(lines.status == lab::Status::Refuted);
    CHECK(lines.witness.find("E6") != std::string::npos);
    CHECK_FALSE(lab::all_passed({e8, lines}));
    CHECK(lab::verify("highest-root-bn").status == lab::Status::Verified);
}

TEST_CASE("parameters")
{
    lab::RunOptions opts;
    opts.params.type = CartanType::parse("B3");
    opts.params.lambda = Rational(5);
    opts.params.mu = Rational(3);
    const auto r = lab::verify("symmetric-h-generators", opts);
    CHECK(r.status == lab::Status::Verified);
    CHECK(r.details["specs"][0]["points"] == 6);
    opts.params.mu = Rational(2);
    CHECK_THROWS_AS(lab::verify("symmetric-h-generators", opts), std::invalid_argument);
}
