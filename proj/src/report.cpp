#include "pgf/report.hpp"

#include <algorithm>
#include <utility>

namespace pgf {

void VerificationReport::expect_equal(std::string name, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    checks.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::overall() const noexcept { return failures() == 0; }

std::size_t VerificationReport::failures() const noexcept {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

}  // namespace pgf
