#include <doctest.h>

#include "ihall/errors.hpp"
#include "ihall/suites.hpp"

using namespace ihall;

TEST_CASE("config validation") {
    SuiteConfig cfg;
    cfg.qList = {6};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.qList = {2};
    cfg.suites = {"no-such-suite"};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.suites = {"zeta"};
    CHECK_NOTHROW(cfg.validate());
    cfg.rLo = 2;
    cfg.rHi = -2;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("single-suite run and report shape") {
    SuiteConfig cfg;
    cfg.qList = {7};
    cfg.suites = {"zeta"};
    cfg.nMax = 6;
    Report rep = runSuites(cfg);
    CHECK(rep.allPass());
    CHECK(rep.cases().size() == 6);
    nlohmann::json j = rep.toJson();
    REQUIRE(j.is_array());
    CHECK(j[0]["suite"] == "zeta");
    CHECK(j[0]["cases"].size() == 6);
    CHECK(j[0]["cases"][0]["status"] == "pass");
    std::string tap = rep.toTap();
    CHECK(tap.rfind("1..6", 0) == 0);
}

TEST_CASE("reports are stable across runs") {
    SuiteConfig cfg;
    cfg.qList = {2};
    cfg.suites = {"aut-lemma", "diagram"};
    auto strip = [](Report rep) {
        nlohmann::json j = rep.toJson();
        for (auto& suite : j)
            for (auto& c : suite["cases"]) c.erase("ms");
        return j.dump();
    };
    CHECK(strip(runSuites(cfg)) == strip(runSuites(cfg)));
}

TEST_CASE("tables are deterministic") {
    TableRequest req;
    req.kind = "census";
    req.q = 2;
    req.dMax = 4;
    req.format = "csv";
    std::string a = emitTables(req);
    std::string b = emitTables(req);
    CHECK(a == b);
    CHECK(a == "degree,points\n1,3\n2,1\n3,2\n4,3\n");
    req.kind = "hall";
    req.maxSize = 3;
    req.format = "json";
    CHECK(emitTables(req) == emitTables(req));
    req.kind = "nonsense";
    CHECK_THROWS_AS(emitTables(req), ConfigError);
}
