#include <doctest.h>

#include "cdsgame/errors.hpp"
#include "cdsgame/suites.hpp"

using namespace cds;

namespace {

SuiteLimits small() {
    SuiteLimits l;
    l.max_n = 5;
    l.max_m = 3;
    l.collapse_max_m = 3;
    l.tight_max_n = 8;
    l.samples = 200;
    l.random_graphs = 100;
    return l;
}

json stable(const SuiteResult& r) {
    json doc = to_json(r);
    doc.erase("timing");
    return doc;
}

} // namespace

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    for (const char* expected : {"paper-examples", "commutation", "pile-lemma", "chain-collapse", "np-classification",
                                 "bounds", "tight", "formats"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CHECK_THROWS_AS(verify_suite("no-such-suite"), ArgumentError);
}

TEST_CASE("suites that should pass do pass at small limits") {
    for (const char* name : {"commutation", "pile-lemma", "np-classification", "bounds", "tight", "formats"}) {
        INFO(name);
        const auto r = verify_suite(name, small());
        CHECK(r.cases > 0);
        CHECK(r.passed());
        const json doc = to_json(r);
        CHECK(doc["suite"] == name);
        CHECK(doc.contains("timing"));
        CHECK(doc["failures"].is_array());
    }
}

TEST_CASE("the chain-collapse suite reports the interior spine edges") {
    const auto r = verify_suite("chain-collapse", small());
    CHECK_FALSE(r.passed());
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.findings.contains("collapse_by_m"));
}

TEST_CASE("suite output is deterministic and independent of thread count") {
    for (const char* name : {"commutation", "pile-lemma", "chain-collapse"}) {
        INFO(name);
        auto one = small();
        auto four = small();
        four.threads = 4;
        const auto a = stable(verify_suite(name, one));
        CHECK(a == stable(verify_suite(name, one)));
        CHECK(a == stable(verify_suite(name, four)));
    }
}

TEST_CASE("a different seed changes the sampled cases but not the verdict") {
    auto l = small();
    l.seed = 99;
    CHECK(verify_suite("commutation", l).passed());
}
