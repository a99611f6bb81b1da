#include "pgf/mobius_engine.hpp"

#include "pgf/closed_form.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <utility>

namespace pgf {

namespace {

BigInt ipow(std::int64_t base, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

void require_prime_like(std::int64_t p) {
    if (p < 2) throw std::domain_error("p must be at least 2");
}

// Fills the free entries of an RREF skeleton in odometer order.
void fill_free(Subspace& s, const std::vector<std::pair<int, int>>& free, std::size_t pos, std::int64_t p,
               std::vector<Subspace>& out) {
    if (pos == free.size()) {
        out.push_back(s);
        return;
    }
    auto [row, col] = free[pos];
    for (std::int64_t v = 0; v < p; ++v) {
        s.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        fill_free(s, free, pos + 1, p, out);
    }
    s.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
}

unsigned long p_valuation(BigInt d, std::int64_t p) {
    d = abs(d);
    const BigInt bp(static_cast<long>(p));
    unsigned long v = 0;
    while (d != 0 && mpz_divisible_p(d.get_mpz_t(), bp.get_mpz_t())) {
        d /= bp;
        ++v;
    }
    if (d != 1) throw std::logic_error("invariant factor is not a power of p");
    return v;
}

}  // namespace

BigInt gaussian_binomial(int n, int k, std::int64_t p) {
    if (k < 0 || k > n) throw std::invalid_argument("gaussian_binomial requires 0 <= k <= n");
    require_prime_like(p);
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= ipow(p, static_cast<unsigned long>(n - i)) - 1;
        den *= ipow(p, static_cast<unsigned long>(k - i)) - 1;
    }
    return num / den;
}

std::vector<Subspace> enumerate_subspaces(int r, int k, std::int64_t p) {
    if (r < 0 || r > 3 || k < 0 || k > r) throw std::invalid_argument("enumerate_subspaces requires 0 <= k <= r <= 3");
    require_prime_like(p);

    std::vector<Subspace> out;
    // Pivot column sets are the k-subsets of {0..r-1}, chosen by bitmask.
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<int> pivots;
        for (int c = 0; c < r; ++c)
            if (mask & (1u << c)) pivots.push_back(c);

        Subspace s;
        s.dim = k;
        std::vector<std::pair<int, int>> free;
        for (int i = 0; i < k; ++i) {
            s.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
            for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < r; ++c)
                if (!(mask & (1u << c))) free.emplace_back(i, c);
        }
        fill_free(s, free, 0, p, out);
    }
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.rows < b.rows; });
    return out;
}

BigInt hall_mobius(const GroupType& t, std::int64_t p) {
    if (!is_elementary_abelian(t)) return 0;
    const int n = t.rank();
    BigInt mu = ipow(p, static_cast<unsigned long>(n * (n - 1) / 2));
    return n % 2 == 0 ? mu : BigInt(-mu);
}

std::vector<BigInt> invariant_factors(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<BigInt> diag;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Pivot on the entry of least nonzero absolute value.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
            if (pr == rows) return diag;  // remaining block is zero
            std::swap(m[t], m[pr]);
            for (auto& row : m) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility of the rest of the block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                        for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(m[t][t]));
    }
    return diag;
}

GroupType quotient_type(const GroupType& t, const Subspace& e, std::int64_t p) {
    require_prime_like(p);
    if (e.dim < 0 || e.dim > t.rank())
        throw InvalidSubspace("subspace of dimension " + std::to_string(e.dim) + " exceeds rank " +
                              std::to_string(t.rank()) + " of type " + t.to_string());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const auto v = e.rows[i][j];
            if (v < 0 || v >= p || (i >= static_cast<std::size_t>(e.dim) && v != 0) ||
                (j >= static_cast<std::size_t>(t.rank()) && v != 0))
                throw InvalidSubspace("subspace entry out of range for type " + t.to_string());
        }

    // Columns: p^{l_j} e_j for the defining relations, then the lifted basis.
    const std::size_t cols = 3 + static_cast<std::size_t>(e.dim);
    std::vector<std::vector<BigInt>> m(3, std::vector<BigInt>(cols, BigInt(0)));
    for (std::size_t j = 0; j < 3; ++j) {
        m[j][j] = ipow(p, static_cast<unsigned long>(t[j]));
        for (std::size_t b = 0; b < static_cast<std::size_t>(e.dim); ++b) {
            if (t[j] == 0) continue;
            m[j][3 + b] = BigInt(static_cast<long>(e.rows[b][j])) * ipow(p, static_cast<unsigned long>(t[j] - 1));
        }
    }

    std::array<long, 3> exps{0, 0, 0};
    std::size_t slot = 0;
    for (const BigInt& d : invariant_factors(std::move(m))) {
        const unsigned long v = p_valuation(d, p);
        if (v == 0) continue;
        if (slot == 3) throw std::logic_error("quotient has rank above 3");
        exps[slot++] = static_cast<long>(v);
    }
    return GroupType::normalize(exps);
}

BigInt QuotientCensus::total() const {
    BigInt sum = 0;
    for (const auto& [type, count] : entries) sum += count;
    return sum;
}

QuotientCensus quotient_type_census(const GroupType& t, int k, std::int64_t p) {
    if (t.rank() != 3) throw std::invalid_argument("census requires a rank-3 type, got " + t.to_string());
    if (k < 1 || k > 2) throw std::invalid_argument("census is defined for k = 1 or 2");
    QuotientCensus census{k, {}};
    for (const Subspace& e : enumerate_subspaces(3, k, p)) census.entries[quotient_type(t, e, p)] += 1;
    return census;
}

QuotientCensus expected_census(const GroupType& t, int k, std::int64_t p) {
    if (t.rank() != 3) throw std::invalid_argument("census requires a rank-3 type, got " + t.to_string());
    if (k < 1 || k > 2) throw std::invalid_argument("census is defined for k = 1 or 2");
    const long l1 = t[0], l2 = t[1], l3 = t[2];
    const BigInt bp(static_cast<long>(p));
    QuotientCensus census{k, {}};
    if (k == 1) {
        census.entries[GroupType::normalize({l1, l2, l3 - 1})] += bp * bp;
        census.entries[GroupType::normalize({l1, l2 - 1, l3})] += bp;
        census.entries[GroupType::normalize({l1 - 1, l2, l3})] += 1;
    } else {
        census.entries[GroupType::normalize({l1, l2 - 1, l3 - 1})] += bp * bp;
        census.entries[GroupType::normalize({l1 - 1, l2, l3 - 1})] += bp;
        census.entries[GroupType::normalize({l1 - 1, l2 - 1, l3})] += 1;
    }
    return census;
}

BigInt f2_via_mobius(const GroupType& t, std::int64_t p) {
    require_prime_like(p);
    const int r = t.rank();
    BigInt sum = 0;
    for (int k = 0; k <= r; ++k) {
        const BigInt mu = hall_mobius(GroupType::elementary(k), p);
        for (const Subspace& e : enumerate_subspaces(r, k, p)) {
            const BigInt f = subgroup_count_f(quotient_type(t, e, p), Numeric{p}).number();
            sum += f * f * mu;
        }
    }
    return sum;
}

}  // namespace pgf
