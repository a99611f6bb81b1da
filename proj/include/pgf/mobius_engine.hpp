#pragma once

#include "pgf/group_type.hpp"
#include "pgf/polynomial.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace pgf {

class InvalidSubspace : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Number of k-dimensional subspaces of an n-dimensional space over F_p.
BigInt gaussian_binomial(int n, int k, std::int64_t p);

/// Subspace of F_p^r (r <= 3) held as its canonical reduced row-echelon
/// basis. Columns beyond r are zero. Equal subspaces compare equal.
struct Subspace {
    int dim = 0;
    std::array<std::array<std::int64_t, 3>, 3> rows{};

    friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

/// Every k-dimensional subspace of F_p^r, ordered lexicographically by the
/// row-major entries of the RREF basis.
std::vector<Subspace> enumerate_subspaces(int r, int k, std::int64_t p);

/// Moebius value mu(1, H) of a p-group of type t: zero unless t is
/// elementary abelian of rank n, in which case (-1)^n p^(n(n-1)/2).
BigInt hall_mobius(const GroupType& t, std::int64_t p);

/// Type of G / lift(E), where the socle coordinate e_j lifts to
/// p^(l_j - 1) in the j-th cyclic factor. Computed as the cokernel of the
/// relation matrix via Smith normal form.
GroupType quotient_type(const GroupType& t, const Subspace& e, std::int64_t p);

/// Invariant factors of an integer matrix (diagonal of its Smith normal form,
/// nonzero entries only, each dividing the next).
std::vector<BigInt> invariant_factors(std::vector<std::vector<BigInt>> m);

struct QuotientCensus {
    int k = 0;
    std::map<GroupType, BigInt> entries;

    [[nodiscard]] BigInt total() const;
    friend bool operator==(const QuotientCensus&, const QuotientCensus&) = default;
};

/// Aggregates quotient_type over all k-dimensional subspaces of the socle of
/// a rank-3 group.
QuotientCensus quotient_type_census(const GroupType& t, int k, std::int64_t p);

/// The classification of quotients by order-p (k = 1) and order-p^2 (k = 2)
/// socle subgroups as multiplicities p^2, p, 1 of the three reduced types,
/// merged where normalized types coincide. Rank-3 only.
QuotientCensus expected_census(const GroupType& t, int k, std::int64_t p);

/// F2 as the sum over socle subspaces E of f(G/E)^2 * mu(E).
BigInt f2_via_mobius(const GroupType& t, std::int64_t p);

}  // namespace pgf
