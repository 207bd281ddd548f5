#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace ihall {

class CaseTimer {
public:
    double ms() const {
        auto d = std::chrono::steady_clock::now() - t0_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// One verification case: an identity instance checked exactly. On failure
// the witness holds the term strings of the nonzero difference element.
struct CaseRecord {
    std::string suite;
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    bool pass = false;
    std::vector<std::string> witness;
    double ms = 0.0;
};

class Report {
public:
    void add(CaseRecord c) { cases_.push_back(std::move(c)); }
    void merge(const Report& o) { cases_.insert(cases_.end(), o.cases_.begin(), o.cases_.end()); }
    const std::vector<CaseRecord>& cases() const { return cases_; }
    bool allPass() const;
    size_t failCount() const;

    // one object per suite: { suite, params, cases: [{id, status, witness, ms}] }
    nlohmann::json toJson() const;
    std::string toTap() const;

private:
    std::vector<CaseRecord> cases_;
};

}  // namespace ihall
