#include "pgf/mobius_engine.hpp"

#include "pgf/closed_form.hpp"
#include "pgf/lattice_oracle.hpp"

#include <doctest.h>

#include <set>

using pgf::BigInt;
using pgf::GroupType;
using pgf::Subspace;

namespace {

GroupType T(long a, long b, long c) { return GroupType::normalize({a, b, c}); }

using Vec = std::array<std::int64_t, 3>;

// All subspaces of F_p^n of dimension k, as sets of vectors, found by taking
// spans of every k-tuple of vectors.
std::set<std::set<Vec>> brute_subspaces(int n, int k, std::int64_t p) {
    std::vector<Vec> vectors;
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (std::int64_t code = 0; code < total; ++code) {
        Vec v{0, 0, 0};
        std::int64_t c = code;
        for (int i = n - 1; i >= 0; --i) {
            v[static_cast<std::size_t>(i)] = c % p;
            c /= p;
        }
        vectors.push_back(v);
    }
    std::int64_t target = 1;
    for (int i = 0; i < k; ++i) target *= p;

    std::set<std::set<Vec>> found;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    while (true) {
        std::set<Vec> span{Vec{0, 0, 0}};
        for (std::size_t idx : pick) {
            std::set<Vec> next;
            for (const Vec& s : span)
                for (std::int64_t m = 0; m < p; ++m) {
                    Vec w{};
                    for (std::size_t j = 0; j < 3; ++j) w[j] = (s[j] + m * vectors[idx][j]) % p;
                    next.insert(w);
                }
            span = std::move(next);
        }
        if (static_cast<std::int64_t>(span.size()) == target) found.insert(span);
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == vectors.size()) pick[pos++] = 0;
        if (pos == pick.size()) break;
    }
    return found;
}

std::set<Vec> span_of(const Subspace& s, std::int64_t p) {
    std::set<Vec> span{Vec{0, 0, 0}};
    for (int r = 0; r < s.dim; ++r) {
        std::set<Vec> next;
        for (const Vec& v : span)
            for (std::int64_t m = 0; m < p; ++m) {
                Vec w{};
                for (std::size_t j = 0; j < 3; ++j) w[j] = (v[j] + m * s.rows[static_cast<std::size_t>(r)][j]) % p;
                next.insert(w);
            }
        span = std::move(next);
    }
    return span;
}

// Type of G / lift(E) by brute force in the concrete group.
GroupType brute_quotient_type(const GroupType& t, const Subspace& e, std::int64_t p) {
    const pgf::ConcreteGroup g = pgf::build_group(t, p);
    pgf::MemberSet h(g.order());
    h.set(0);
    for (int r = 0; r < e.dim; ++r) {
        pgf::ConcreteGroup::Element lifted{0, 0, 0};
        for (std::size_t j = 0; j < 3; ++j) {
            if (t[j] == 0) continue;
            std::int64_t scale = 1;
            for (int i = 1; i < t[j]; ++i) scale *= p;
            lifted[j] = e.rows[static_cast<std::size_t>(r)][j] * scale;
        }
        pgf::MemberSet cyc(g.order());
        const std::size_t x = g.index_of(lifted);
        std::size_t y = 0;
        do {
            cyc.set(y);
            y = g.add(y, x);
        } while (y != 0);
        h = pgf::join(g, h, cyc);
    }
    return pgf::quotient_subgroup_type(g, pgf::SubgroupSet{0, h, h.count()});
}

}  // namespace

TEST_CASE("gaussian binomials") {
    CHECK(pgf::gaussian_binomial(3, 1, 2) == 7);
    CHECK(pgf::gaussian_binomial(3, 2, 2) == 7);
    CHECK(pgf::gaussian_binomial(2, 1, 3) == 4);
    for (int n = 0; n <= 5; ++n) CHECK(pgf::gaussian_binomial(n, 0, 11) == 1);
    CHECK(pgf::gaussian_binomial(4, 2, 2) == 35);
    CHECK_THROWS(pgf::gaussian_binomial(2, 3, 2));
}

TEST_CASE("subspace enumeration examples") {
    const auto lines = pgf::enumerate_subspaces(2, 1, 2);
    REQUIRE(lines.size() == 3);
    std::set<std::array<std::int64_t, 3>> firsts;
    for (const auto& s : lines) firsts.insert(s.rows[0]);
    CHECK(firsts == std::set<std::array<std::int64_t, 3>>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK(std::is_sorted(lines.begin(), lines.end(), [](const Subspace& a, const Subspace& b) { return a.rows < b.rows; }));

    for (std::int64_t q : {2, 3, 5}) {
        const auto whole = pgf::enumerate_subspaces(3, 3, q);
        REQUIRE(whole.size() == 1);
        CHECK(whole[0].rows == decltype(whole[0].rows){{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
    }
    CHECK(pgf::enumerate_subspaces(3, 1, 2).size() == 7);
}

TEST_CASE("subspace enumeration is complete, canonical, and counted by gaussian binomials") {
    for (std::int64_t q : {2, 3, 5})
        for (int r = 0; r <= 3; ++r)
            for (int k = 0; k <= r; ++k) {
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(k);
                const auto subs = pgf::enumerate_subspaces(r, k, q);
                CHECK(BigInt(static_cast<unsigned long>(subs.size())) == pgf::gaussian_binomial(r, k, q));
                std::set<std::set<Vec>> spans;
                for (const auto& s : subs) spans.insert(span_of(s, q));
                CHECK(spans.size() == subs.size());
                if (q <= 3) CHECK(spans == brute_subspaces(r, k, q));
            }
}

TEST_CASE("hall mobius values") {
    for (std::int64_t q : {2, 3, 5}) {
        CHECK(pgf::hall_mobius(T(1, 1, 1), q) == -q * q * q);
        CHECK(pgf::hall_mobius(T(1, 1, 0), q) == q);
        CHECK(pgf::hall_mobius(T(1, 0, 0), q) == -1);
        CHECK(pgf::hall_mobius(T(2, 1, 0), q) == 0);
        CHECK(pgf::hall_mobius(T(2, 0, 0), q) == 0);
        CHECK(pgf::hall_mobius(T(0, 0, 0), q) == 1);
    }
}

TEST_CASE("invariant factors") {
    using Row = std::vector<BigInt>;
    CHECK(pgf::invariant_factors({Row{2, 4, 4}, Row{-6, 6, 12}, Row{10, -4, -16}}) == std::vector<BigInt>{2, 6, 12});
    CHECK(pgf::invariant_factors({Row{4, 0, 2}, Row{0, 8, 0}}) == std::vector<BigInt>{2, 8});
    CHECK(pgf::invariant_factors({Row{0, 0}, Row{0, 0}}).empty());
}

TEST_CASE("quotient type examples") {
    for (std::int64_t q : {2, 3, 5})
        for (const Subspace& e : pgf::enumerate_subspaces(3, 1, q)) CHECK(pgf::quotient_type(T(1, 1, 1), e, q) == T(1, 1, 0));

    Subspace e3;
    e3.dim = 1;
    e3.rows[0] = {0, 0, 1};
    CHECK(pgf::quotient_type(T(3, 2, 1), e3, 2) == T(3, 2, 0));

    Subspace e1;
    e1.dim = 1;
    e1.rows[0] = {1, 0, 0};
    CHECK(pgf::quotient_type(T(3, 2, 1), e1, 2) == T(2, 2, 1));

    Subspace full;
    full.dim = 3;
    full.rows = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    CHECK(pgf::quotient_type(T(3, 2, 1), full, 2) == T(2, 1, 0));

    Subspace too_big;
    too_big.dim = 2;
    too_big.rows = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}};
    CHECK_THROWS_AS(pgf::quotient_type(T(3, 0, 0), too_big, 2), pgf::InvalidSubspace);
}

TEST_CASE("quotient types match brute force in the concrete group") {
    for (std::int64_t q : {2, 3})
        for (long a = 1; a <= 3; ++a)
            for (long b = 0; b <= a; ++b)
                for (long c = 0; c <= b; ++c) {
                    const GroupType t = T(a, b, c);
                    if (pgf::group_order(t, q) > 729) continue;
                    for (int k = 0; k <= t.rank(); ++k)
                        for (const Subspace& e : pgf::enumerate_subspaces(t.rank(), k, q)) {
                            CAPTURE(t);
                            CAPTURE(q);
                            CHECK(pgf::quotient_type(t, e, q) == brute_quotient_type(t, e, q));
                        }
                }
}

TEST_CASE("census examples") {
    pgf::QuotientCensus k1{1, {{T(3, 2, 0), 4}, {T(3, 1, 1), 2}, {T(2, 2, 1), 1}}};
    CHECK(pgf::quotient_type_census(T(3, 2, 1), 1, 2) == k1);
    pgf::QuotientCensus k2{2, {{T(3, 1, 0), 4}, {T(2, 2, 0), 2}, {T(2, 1, 1), 1}}};
    CHECK(pgf::quotient_type_census(T(3, 2, 1), 2, 2) == k2);
    for (std::int64_t q : {2, 3, 5}) {
        const auto c = pgf::quotient_type_census(T(1, 1, 1), 1, q);
        REQUIRE(c.entries.size() == 1);
        CHECK(c.entries.at(T(1, 1, 0)) == q * q + q + 1);
    }
    CHECK_THROWS(pgf::quotient_type_census(T(2, 1, 0), 1, 2));
    CHECK_THROWS(pgf::quotient_type_census(T(2, 1, 1), 3, 2));
}

TEST_CASE("census matches the classification on the rank-3 grid") {
    for (std::int64_t q : {2, 3})
        for (long a = 1; a <= 4; ++a)
            for (long b = 1; b <= a; ++b)
                for (long c = 1; c <= b; ++c) {
                    const GroupType t = T(a, b, c);
                    CAPTURE(t);
                    CAPTURE(q);
                    for (int k = 1; k <= 2; ++k) {
                        const auto census = pgf::quotient_type_census(t, k, q);
                        CHECK(census.total() == pgf::gaussian_binomial(3, k, q));
                        CHECK(census == pgf::expected_census(t, k, q));
                    }
                    const auto full = pgf::enumerate_subspaces(3, 3, q).front();
                    CHECK(pgf::quotient_type(t, full, q) == T(a - 1, b - 1, c - 1));
                }
}

TEST_CASE("factorization number via mobius") {
    for (std::int64_t q : {2, 3, 5, 7}) CHECK(pgf::f2_via_mobius(T(1, 0, 0), q) == 3);
    CHECK(pgf::f2_via_mobius(T(3, 2, 1), 2) == 1635);
    // 5p^8+8p^7+16p^6+15p^5+21p^4+16p^3+20p^2+11p+13 at p = 3
    CHECK(pgf::f2_via_mobius(T(2, 2, 2), 3) == 67969);
    CHECK(pgf::f2_via_mobius(T(0, 0, 0), 2) == 1);
}

TEST_CASE("mobius route reproduces the closed form") {
    for (std::int64_t q : {2, 3, 5})
        for (long a = 0; a <= 4; ++a)
            for (long b = 0; b <= a; ++b)
                for (long c = 0; c <= b; ++c) {
                    const GroupType t = T(a, b, c);
                    CAPTURE(t);
                    CAPTURE(q);
                    CHECK(pgf::f2_via_mobius(t, q) == pgf::f2_theorem3(t, pgf::Numeric{q}).number());
                }
}
