#pragma once

#include "pgf/group_type.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pgf {

/// Outcome of comparing one expected value against one computed value.
struct Check {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
};

/// Pass/fail record for one (type, p) instance. Overall status is always the
/// conjunction of the recorded checks.
struct VerificationReport {
    GroupType type;
    std::int64_t p = 0;
    std::vector<Check> checks;

    /// Records a check that passes iff the two renderings are equal.
    void expect_equal(std::string name, std::string expected, std::string actual);
    void append(const VerificationReport& other);

    [[nodiscard]] bool overall() const noexcept;
    [[nodiscard]] std::size_t failures() const noexcept;
};

}  // namespace pgf
