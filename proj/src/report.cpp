#include "ihall/report.hpp"

#include <map>
#include <sstream>

namespace ihall {

bool Report::allPass() const { return failCount() == 0; }

size_t Report::failCount() const {
    size_t n = 0;
    for (const auto& c : cases_)
        if (!c.pass) ++n;
    return n;
}

nlohmann::json Report::toJson() const {
    // group by suite, preserving first-seen order
    std::vector<std::string> order;
    std::map<std::string, nlohmann::json> by;
    for (const auto& c : cases_) {
        if (!by.count(c.suite)) {
            order.push_back(c.suite);
            by[c.suite] = {{"suite", c.suite}, {"params", c.params}, {"cases", nlohmann::json::array()}};
        }
        nlohmann::json jc = {{"id", c.id},
                             {"status", c.pass ? "pass" : "fail"},
                             {"witness", c.witness},
                             {"ms", c.ms}};
        by[c.suite]["cases"].push_back(jc);
    }
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : order) out.push_back(by[s]);
    return out;
}

std::string Report::toTap() const {
    std::ostringstream os;
    os << "1.." << cases_.size() << "\n";
    size_t i = 1;
    for (const auto& c : cases_) {
        os << (c.pass ? "ok " : "not ok ") << i++ << " - " << c.suite << "/" << c.id << "\n";
        for (const auto& w : c.witness) os << "# " << w << "\n";
    }
    return os.str();
}

}  // namespace ihall
