#pragma once

#include "pgf/group_type.hpp"
#include "pgf/polynomial.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace pgf {

/// Which closed form produced a FormulaResult.
enum class Method { eq3, theorem3, corollary4 };

std::string_view method_name(Method m) noexcept;

/// Evaluate at a concrete integer p (>= 2).
struct Numeric {
    std::int64_t p;
};
/// Keep p as an indeterminate and return a polynomial.
struct Symbolic {};

using Mode = std::variant<Numeric, Symbolic>;

struct FormulaResult {
    std::variant<BigInt, IntPolynomial> value;
    Method method;

    [[nodiscard]] bool is_symbolic() const noexcept { return std::holds_alternative<IntPolynomial>(value); }
    /// Throws std::bad_variant_access if the result is symbolic.
    [[nodiscard]] const BigInt& number() const { return std::get<BigInt>(value); }
    [[nodiscard]] const IntPolynomial& polynomial() const { return std::get<IntPolynomial>(value); }
    /// Decimal string or canonical polynomial rendering.
    [[nodiscard]] std::string to_string() const;
};

/// Total number of subgroups of the group of type t, from the closed-form
/// quotient A / ((p^2-1)^2 (p-1)). Applied verbatim also when l2 or l3 is zero.
/// Throws InexactDivision if the quotient is not exact.
FormulaResult subgroup_count_f(const GroupType& t, const Mode& mode);

/// Subgroup count over an arbitrary triple: zero if any entry is negative,
/// otherwise the count for the sorted triple.
FormulaResult f_ext(std::array<long, 3> raw, const Mode& mode);

/// Factorization number from the eight-term alternating combination of
/// squared subgroup counts. Arguments that fall out of range vanish, so
/// rank-1 and rank-2 types are handled as well.
FormulaResult f2_theorem3(const GroupType& t, const Mode& mode);

/// Equal-exponent specialization for Z_{p^l}^3.
FormulaResult f2_corollary4(long lambda, const Mode& mode);

}  // namespace pgf
