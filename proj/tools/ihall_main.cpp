// Batch verification harness and table emitter for the iHall engine.
//
//   ihall verify --suites all --q 2,3 --m-max 6 --r-range=-3..3 --order 4
//                --report json:out.json
//   ihall tables hall --q 2 --max-size 5 --format csv
//   ihall oracle compare --suite counting
//
// Exit codes: 0 all pass, 1 failures, 2 configuration error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ihall/errors.hpp"
#include "ihall/suites.hpp"

namespace {

std::vector<long> parseQList(const std::string& s) {
    std::vector<long> qs;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) qs.push_back(std::stol(item));
    return qs;
}

void parseRRange(const std::string& s, int& lo, int& hi) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw ihall::ConfigError("r-range: expected lo..hi");
    lo = std::stoi(s.substr(0, pos));
    hi = std::stoi(s.substr(pos + 2));
}

int writeReport(const ihall::Report& rep, const std::string& reportSpec, bool tap) {
    if (tap) std::cout << rep.toTap();
    if (!reportSpec.empty()) {
        auto pos = reportSpec.find(':');
        std::string fmt = pos == std::string::npos ? reportSpec : reportSpec.substr(0, pos);
        std::string path = pos == std::string::npos ? "" : reportSpec.substr(pos + 1);
        if (fmt != "json") throw ihall::ConfigError("report: only json:<path> is supported");
        std::ofstream out(path);
        if (!out) throw ihall::ConfigError("report: cannot open " + path);
        out << rep.toJson().dump(2) << "\n";
    }
    size_t fails = rep.failCount();
    std::cout << rep.cases().size() << " cases, " << fails << " failures\n";
    if (fails) {
        for (const auto& c : rep.cases())
            if (!c.pass) {
                std::cout << "FAIL " << c.suite << "/" << c.id << "\n";
                for (const auto& w : c.witness) std::cout << "  " << w << "\n";
            }
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact iHall algebra engine for the projective line"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run identity suites");
    std::string suitesCsv = "all";
    std::string qCsv = "2,3";
    std::string rRange = "-3..3";
    std::string reportSpec;
    bool tap = false;
    ihall::SuiteConfig cfg;
    verify->add_option("--suites", suitesCsv, "comma list or 'all'");
    verify->add_option("--q", qCsv, "comma list of prime powers");
    verify->add_option("--m-max", cfg.mMax, "symbolic identity degree bound");
    verify->add_option("--r-range", rRange, "line-bundle degree range lo..hi");
    verify->add_option("--order", cfg.seriesOrder, "generating-function truncation order");
    verify->add_option("--n-max", cfg.nMax, "zeta identity bound");
    verify->add_option("--torsion-cap", cfg.torsionCap, "torsion degree bound");
    verify->add_option("--report", reportSpec, "json:<path>");
    verify->add_flag("--tap", tap, "print a TAP stream");

    // tables
    auto* tables = app.add_subcommand("tables", "emit deterministic tables");
    ihall::TableRequest treq;
    tables->add_option("kind", treq.kind, "hall | jordan | census")->required();
    tables->add_option("--q", treq.q, "prime power");
    tables->add_option("--max-size", treq.maxSize, "partition size bound");
    tables->add_option("--d-max", treq.dMax, "census degree bound");
    tables->add_option("--format", treq.format, "json | csv");
    std::string outPath;
    tables->add_option("--out", outPath, "output file (default stdout)");

    // oracle
    auto* oracleCmd = app.add_subcommand("oracle", "first-principles cross-checks");
    auto* compare = oracleCmd->add_subcommand("compare", "compare closed forms with brute force");
    std::string oracleSuite = "all";
    compare->add_option("--suite", oracleSuite, "counting | jordan | census | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            cfg.qList = parseQList(qCsv);
            parseRRange(rRange, cfg.rLo, cfg.rHi);
            std::istringstream is(suitesCsv);
            std::string item;
            while (std::getline(is, item, ',')) cfg.suites.insert(item);
            ihall::Report rep = ihall::runSuites(cfg);
            return writeReport(rep, reportSpec, tap);
        }
        if (*tables) {
            std::string text = ihall::emitTables(treq);
            if (outPath.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(outPath);
                if (!out) throw ihall::ConfigError("tables: cannot open " + outPath);
                out << text;
            }
            return 0;
        }
        if (*compare) {
            ihall::Report rep = ihall::runOracleCompare(oracleSuite);
            return writeReport(rep, reportSpec, tap);
        }
        std::cerr << "missing subcommand\n";
        return 2;
    } catch (const ihall::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
