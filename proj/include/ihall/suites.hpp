#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ihall/report.hpp"

namespace ihall {

// Batch harness configuration. Bounds are validated against the engine caps
// before anything runs.
struct SuiteConfig {
    std::vector<long> qList = {2, 3};
    int mMax = 6;
    int rLo = -3, rHi = 3;
    int torsionCap = 6;
    int seriesOrder = 4;
    int nMax = 10;
    std::set<std::string> suites;  // empty or "all" selects every suite

    static const std::vector<std::string>& knownSuites();
    void validate() const;  // throws ConfigError
};

Report runSuites(const SuiteConfig& cfg);

// the counting-lemma suites, also used by the acceptance harness:
// profile sums against q^{2a} - q^{2a-2}, the zeta product of the point
// census as a truncated series, and the brute extension-middle sums
Report autLemmaSuite(long q, int aMax);
Report zetaSeriesSuite(long q, int order);
Report claimSuite(long p, int mMax);

// deterministic table emission; kind is one of hall | jordan | census
struct TableRequest {
    std::string kind;
    long q = 2;
    int maxSize = 4;
    int dMax = 4;
    std::string format = "json";  // json | csv
};
std::string emitTables(const TableRequest& req);

// the oracle-equivalence suites, factored out for the compare subcommand:
// name is one of counting | jordan | census | all
Report runOracleCompare(const std::string& name);

}  // namespace ihall
