#include "ihall/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ihall {

void Partition::canonicalize() {
    std::sort(p_.begin(), p_.end(), std::greater<int>());
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    if (!p_.empty() && p_.back() < 0) throw std::domain_error("Partition: negative part");
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

std::vector<Partition> Partition::all(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending parts, largest first
    auto rec = [&](auto&& self, int rem, int maxPart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rem, maxPart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rem - k, k);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (p_.empty()) return Partition();
    c.resize(static_cast<size_t>(p_[0]), 0);
    for (int part : p_)
        for (int i = 0; i < part; ++i) ++c[static_cast<size_t>(i)];
    return Partition(c);
}

long Partition::nStat() const {
    long n = 0;
    for (size_t i = 0; i < p_.size(); ++i) n += static_cast<long>(i) * p_[i];
    return n;
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(p_.begin(), p_.end(), k));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return p_ <=> o.p_;
}

std::string Partition::toString() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i) os << ",";
        os << p_[i];
    }
    os << ")";
    return os.str();
}

}  // namespace ihall
