#ifndef GOODMAN_VERIFY_HPP
#define GOODMAN_VERIFY_HPP

#include <string>
#include <vector>

// The cross-module identity suite: every law the library rests on,
// checked for one bound and reported check by check. Each check states
// its first counterexample when it fails; enumeration-backed checks cap
// themselves at the oracle limit whatever bound they are given.

namespace goodman {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // scope on success, first counterexample on failure
};

std::vector<CheckResult> run_verification(int max_n);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace goodman

#endif  // GOODMAN_VERIFY_HPP
