#pragma once

#include <string>
#include <vector>

namespace ncalg {

struct CheckResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::vector<std::string> notes;  // failure details
};

// The full verification suite: every numbered check runs with its pinned
// tolerances and returns one result.
std::vector<CheckResult> run_paper_suite();

}  // namespace ncalg
