#ifndef SKEINLAB_VERIFY_HPP
#define SKEINLAB_VERIFY_HPP

#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"

namespace skeinlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // residual or counterexample description
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_json() const;
    std::string to_text() const;
};

// Known suite names: laurent, tl, skein, fusion, lickorish.  "all" runs each
// of them in that order.  Throws std::invalid_argument on an unknown name.
std::vector<SuiteResult> run_suites(const std::string& name);

// All words of length 0..max_len over the generators of B_n (and inverses),
// in lexicographic order.
std::vector<BraidWord> enumerate_braids(int strands, int max_len);

}  // namespace skeinlab

#endif  // SKEINLAB_VERIFY_HPP
