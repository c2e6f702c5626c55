#pragma once

#include <string>
#include <vector>

#include "macd/bigcomplex.hpp"
#include "macd/qkernel.hpp"

namespace macd {

// Weakly decreasing, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& s);
    // true when v is weakly decreasing and nonnegative
    static bool is_partition(const std::vector<int>& v);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    // part i (0-based), zero beyond the length
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    std::vector<int> padded(int n) const;
    int multiplicity(int k) const;

    std::string str() const;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
Rational z_lambda(const Partition& p);
// reverse-lexicographic list of partitions of n, optionally bounded
std::vector<Partition> partitions_of(int n, int max_length = -1, int max_part = -1);
bool dominates(const Partition& a, const Partition& b);

// the three displayed product forms for b_lambda(q,t)
Rational b_lambda(const Partition& p, const QtPoint& pt, int n);
Rational b_lambda_first(const Partition& p, const QtPoint& pt);
Rational b_lambda_second(const Partition& p, const QtPoint& pt);

struct ComplexPartition {
    std::vector<BigComplex> parts;
};

}  // namespace macd
