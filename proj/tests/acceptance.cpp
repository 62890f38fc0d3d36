// Acceptance gate: runs every numbered verification check at its pinned
// tolerance and prints one PASS/FAIL line per criterion.
#include <iostream>

#include "ncalg/suite.hpp"

int main() {
    bool all = true;
    for (const auto& r : ncalg::run_paper_suite()) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion-" << r.id << " " << r.title
                  << "\n";
        for (const auto& note : r.notes) std::cout << "       " << note << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
    return all ? 0 : 1;
}
