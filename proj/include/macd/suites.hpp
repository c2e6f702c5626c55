#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace macd {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    long cases = 0;
    std::string detail;  // first witness on failure, summary otherwise
    double seconds = 0;
};

// 1: recursion formula vs Gram-Schmidt, |lambda| <= 6, l(lambda) <= 3
CheckResult check_recursion_oracle(std::uint64_t seed);
// 2: Pieri expansion vs product, |lambda| + m <= 6, l(lambda) <= 2
CheckResult check_pieri(std::uint64_t seed);
// 3: dual recursion vs Gram-Schmidt P, parts <= 3, |lambda| <= 6
CheckResult check_dual_recursion(std::uint64_t seed);
// 4: corollary pairs at n = 2 and the n = 1 reductions to Bressoud's pair
CheckResult check_orthogonality(std::uint64_t seed);
// 5: terminating registry identities, n in {1,2,3}, sizes <= 4
CheckResult check_terminating_registry(std::uint64_t seed);
// 6: an87n, an87np, an65n-new exactly and an65nt-new numerically
CheckResult check_new_identities(std::uint64_t seed);
// 7: the C-type determinant 8phi7 exactly
CheckResult check_conjecture(std::uint64_t seed);
// 8: specialized Pieri/recursion displays, |lambda| <= 5
CheckResult check_bridge(std::uint64_t seed);
// 9: Pieri in exactly n = 2 variables, m <= 3
CheckResult check_restricted_pieri(std::uint64_t seed);
// 10: complex-part functions (integer order, evaluation, duality, padding, inductive step)
CheckResult check_complex(std::uint64_t seed);
// 11: 6phi5 degeneration and n-independence of b_lambda
CheckResult check_degenerations(std::uint64_t seed);

CheckResult run_criterion(int criterion, std::uint64_t seed);

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

const std::vector<std::string>& suite_names();
// throws std::invalid_argument for unknown names
std::vector<int> suite_criteria(const std::string& name);
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace macd
