#ifndef INVAR_VERIFY_HPP
#define INVAR_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace invar::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail; // deterministic, no timing
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    bool pass() const;
};

struct Params {
    std::optional<std::int64_t> max_n; // suite-specific limit override
    std::uint64_t work_budget = 1'000'000'000;
    unsigned workers = 1;
};

/// Suites in acceptance order: oracle, harris-wehlau, olson, reciprocity,
/// dimension-facts, bounds, envelope, transport, growth, kac-bound,
/// hardy-ramanujan, weyl.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const Params& params = {});

/// Deterministic plain-text rendering: one line per check plus a summary.
std::string render_report(const std::vector<SuiteResult>& results);

} // namespace invar::verify

#endif
