#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracsum/expr.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

// Seeded property suites behind `cli verify`. Residuals are normalized as
// |lhs - rhs| / max(1, |rhs|) unless a property states otherwise.
struct PropertyResult {
    std::string name;
    int cases = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;
    bool pass() const {
        for (const auto& p : properties)
            if (!p.pass) return false;
        return true;
    }
};

// Suites: axioms, table1, euler-maclaurin, derivative, oracles, specfun.
std::vector<std::string> verify_suite_names();
SuiteReport run_verify_suite(const std::string& suite, std::uint64_t seed, int count);

// sum_{k=1}^{n} f(k) by literal loop (shared test oracle).
Complex classical_loop_sum(const CatalogExpr& e, int n);

}  // namespace fracsum
