#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pgf {

class NegativeExponent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Isomorphism type Z_{p^l1} x Z_{p^l2} x Z_{p^l3} of an abelian p-group of
/// rank at most 3, stored as the descending exponent triple (l1 >= l2 >= l3 >= 0).
/// Lower ranks are zero-padded.
class GroupType {
public:
    /// The trivial group.
    constexpr GroupType() = default;

    /// Sorts the entries descending; throws NegativeExponent on any entry < 0.
    static GroupType normalize(std::array<long, 3> raw);
    /// Like normalize but rejects non-descending input with std::invalid_argument.
    static GroupType from_descending(std::array<long, 3> exps);
    /// Elementary abelian group of the given rank (0..3).
    static GroupType elementary(int rank);

    [[nodiscard]] constexpr int operator[](std::size_t i) const noexcept { return exps_[i]; }
    [[nodiscard]] constexpr const std::array<int, 3>& exponents() const noexcept { return exps_; }
    [[nodiscard]] int rank() const noexcept;
    /// log_p of the group order.
    [[nodiscard]] int order_exponent() const noexcept { return exps_[0] + exps_[1] + exps_[2]; }

    /// "l1,l2,l3"
    [[nodiscard]] std::string to_string() const;

    friend constexpr auto operator<=>(const GroupType&, const GroupType&) = default;

private:
    std::array<int, 3> exps_{0, 0, 0};
};

mpz_class group_order(const GroupType& t, std::int64_t p);

/// All exponents <= 1; the trivial group counts as elementary abelian.
bool is_elementary_abelian(const GroupType& t) noexcept;

/// Parses the text form "l1,l2,l3" (exactly three non-negative integers,
/// already descending).
GroupType parse_group_type(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GroupType& t);

}  // namespace pgf
