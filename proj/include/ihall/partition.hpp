#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ihall {

// Integer partition, parts weakly decreasing, no zero parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : p_(parts) { canonicalize(); }
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) { canonicalize(); }

    static std::vector<Partition> all(int n);  // partitions of n

    bool empty() const { return p_.empty(); }
    int size() const;    // |lambda|
    int length() const { return static_cast<int>(p_.size()); }
    const std::vector<int>& parts() const { return p_; }
    int part(int i) const { return p_[static_cast<size_t>(i)]; }

    Partition conjugate() const;
    long nStat() const;            // n(lambda) = sum (i-1) lambda_i
    int multiplicity(int k) const;  // number of parts equal to k

    // total order: by |lambda|, then lexicographic on the parts
    std::strong_ordering operator<=>(const Partition& o) const;
    bool operator==(const Partition& o) const { return p_ == o.p_; }

    std::string toString() const;

private:
    std::vector<int> p_;
    void canonicalize();
};

}  // namespace ihall
