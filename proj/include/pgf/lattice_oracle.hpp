#pragma once

#include "pgf/group_type.hpp"
#include "pgf/polynomial.hpp"
#include "pgf/report.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace pgf {

class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotComparable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultOrderCap = 4096;

/// kDefaultOrderCap unless PGF_MAX_ORDER holds a positive integer.
std::size_t default_order_cap();

/// Fixed-size bit vector with word-level set operations.
class MemberSet {
public:
    MemberSet() = default;
    explicit MemberSet(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    [[nodiscard]] bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] std::size_t size() const noexcept { return nbits_; }
    [[nodiscard]] bool is_subset_of(const MemberSet& other) const noexcept;
    /// popcount(*this & other) without materializing the intersection.
    [[nodiscard]] std::size_t intersection_count(const MemberSet& other) const noexcept;
    [[nodiscard]] const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    /// Calls fn(i) for every set bit in increasing order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
    }

    friend MemberSet operator&(MemberSet a, const MemberSet& b) noexcept;
    friend bool operator==(const MemberSet&, const MemberSet&) = default;
    /// Orders by the smallest index at which the sets differ; the set that
    /// contains that index comes first.
    friend bool member_order(const MemberSet& a, const MemberSet& b) noexcept;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct MemberSetHash {
    std::size_t operator()(const MemberSet& s) const noexcept;
};

/// Z_{p^l1} x Z_{p^l2} x Z_{p^l3} with its elements listed in lexicographic
/// order of their coordinates; index 0 is the identity.
class ConcreteGroup {
public:
    using Element = std::array<std::int64_t, 3>;

    ConcreteGroup(const GroupType& t, std::int64_t p);

    [[nodiscard]] std::int64_t p() const noexcept { return p_; }
    [[nodiscard]] const GroupType& type() const noexcept { return type_; }
    [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
    [[nodiscard]] const Element& element(std::size_t i) const { return elements_[i]; }
    [[nodiscard]] std::size_t index_of(const Element& e) const noexcept;

    [[nodiscard]] std::size_t add(std::size_t a, std::size_t b) const noexcept;
    [[nodiscard]] std::size_t negate(std::size_t a) const noexcept;
    [[nodiscard]] std::size_t multiply(std::size_t a, std::int64_t k) const noexcept;
    /// Smallest e with p^e * x = 0.
    [[nodiscard]] int order_exponent(std::size_t a) const noexcept { return order_exp_[a]; }

private:
    std::int64_t p_;
    GroupType type_;
    std::array<std::int64_t, 3> moduli_{};
    std::vector<Element> elements_;
    std::vector<int> order_exp_;
};

/// Throws TooLarge when p^(l1+l2+l3) exceeds cap.
ConcreteGroup build_group(const GroupType& t, std::int64_t p, std::size_t cap = default_order_cap());

struct SubgroupSet {
    std::size_t id = 0;
    MemberSet members;
    std::size_t order = 0;
};

/// Every subgroup of a ConcreteGroup, sorted by (order, member_order), with
/// the containment relation precomputed in both directions. Id 0 is the
/// trivial subgroup and the last id is the whole group.
class Lattice {
public:
    explicit Lattice(std::vector<MemberSet> subgroups);

    [[nodiscard]] const std::vector<SubgroupSet>& subgroups() const noexcept { return subgroups_; }
    [[nodiscard]] std::size_t size() const noexcept { return subgroups_.size(); }
    [[nodiscard]] const SubgroupSet& operator[](std::size_t id) const { return subgroups_[id]; }
    [[nodiscard]] std::size_t bottom() const noexcept { return 0; }
    [[nodiscard]] std::size_t top() const noexcept { return subgroups_.size() - 1; }

    /// H <= K.
    [[nodiscard]] bool contains(std::size_t h, std::size_t k) const { return above_[h].test(k); }
    /// Ids of all K with H <= K (bit vector over subgroup ids).
    [[nodiscard]] const MemberSet& above(std::size_t h) const { return above_[h]; }
    /// Ids of all K with K <= H.
    [[nodiscard]] const MemberSet& below(std::size_t h) const { return below_[h]; }
    [[nodiscard]] std::optional<std::size_t> find(const MemberSet& members) const;

    /// mu(H, K) for all K >= H, indexed by subgroup id (zero off the upset).
    /// Memoized; safe to call concurrently.
    [[nodiscard]] const std::vector<BigInt>& mobius_row(std::size_t h) const;

private:
    std::vector<SubgroupSet> subgroups_;
    std::vector<MemberSet> above_;
    std::vector<MemberSet> below_;
    std::unordered_map<MemberSet, std::size_t, MemberSetHash> index_;

    std::unique_ptr<std::mutex> mobius_mutex_ = std::make_unique<std::mutex>();
    mutable std::unordered_map<std::size_t, std::vector<BigInt>> mobius_rows_;
};

/// Subgroup generated by the union of two subgroups.
MemberSet join(const ConcreteGroup& g, const MemberSet& a, const MemberSet& b);

/// Seeds with every cyclic subgroup and closes under joins until no new
/// subgroup appears.
Lattice all_subgroups(const ConcreteGroup& g);

/// Every pairwise join and intersection of the lattice is again in it.
bool is_join_meet_closed(const ConcreteGroup& g, const Lattice& lattice);

/// Abelian type of H read off from how many of its elements p^k kills.
GroupType subgroup_type(const ConcreteGroup& g, const SubgroupSet& h);
/// Abelian type of G/H, from how many elements p^k maps into H.
GroupType quotient_subgroup_type(const ConcreteGroup& g, const SubgroupSet& h);

struct FactorizationTally {
    BigInt ordered;    ///< pairs (H, K) with HK = G
    BigInt unordered;  ///< pairs with id(H) <= id(K)
    BigInt diagonal;   ///< pairs with H = K
};

FactorizationTally tally_factorizations(const ConcreteGroup& g, const Lattice& lattice);
/// Ordered pairs (H, K) with HK = G, via |H||K| = |G||H n K|.
BigInt count_factorizations(const ConcreteGroup& g, const Lattice& lattice);

/// Number of subgroups K with H <= K <= G, i.e. |L(G/H)|.
std::size_t interval_size(const Lattice& lattice, std::size_t h);

/// Lattice Moebius value mu(H, K); throws NotComparable unless H <= K.
BigInt mobius_interval(const Lattice& lattice, std::size_t h, std::size_t k);

/// mu(1, H) against the closed form for every subgroup H.
VerificationReport verify_hall(const ConcreteGroup& g, const Lattice& lattice);

/// Sum over H of |L(H)|^2 mu(H, G) and of |L(G/H)|^2 mu(1, H), both against
/// the brute-force factorization count. Also checks mu(H, G) = mu(1, G/H).
VerificationReport verify_eq2_forms(const ConcreteGroup& g, const Lattice& lattice);

}  // namespace pgf
