#include "pgf/lattice_oracle.hpp"

#include "pgf/mobius_engine.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <string_view>
#include <unordered_set>

namespace pgf {

namespace {
__extension__ using Wide = __int128;
}

std::size_t default_order_cap() {
    if (const char* env = std::getenv("PGF_MAX_ORDER")) {
        std::string_view text(env);
        std::size_t cap = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
        if (ec == std::errc{} && ptr == text.data() + text.size() && cap > 0) return cap;
    }
    return kDefaultOrderCap;
}

// ---------------------------------------------------------------- MemberSet

std::size_t MemberSet::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool MemberSet::is_subset_of(const MemberSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::size_t MemberSet::intersection_count(const MemberSet& other) const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
}

MemberSet operator&(MemberSet a, const MemberSet& b) noexcept {
    for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] &= b.words_[i];
    return a;
}

bool member_order(const MemberSet& a, const MemberSet& b) noexcept {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff == 0) continue;
        const std::uint64_t lowest = diff & (~diff + 1);
        return (a.words_[i] & lowest) != 0;
    }
    return false;
}

std::size_t MemberSetHash::operator()(const MemberSet& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : s.words()) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

// ------------------------------------------------------------ ConcreteGroup

ConcreteGroup::ConcreteGroup(const GroupType& t, std::int64_t p) : p_(p), type_(t) {
    std::size_t total = 1;
    for (std::size_t j = 0; j < 3; ++j) {
        std::int64_t m = 1;
        for (int e = 0; e < t[j]; ++e) m *= p;
        moduli_[j] = m;
        total *= static_cast<std::size_t>(m);
    }
    elements_.reserve(total);
    order_exp_.reserve(total);
    for (std::int64_t a = 0; a < moduli_[0]; ++a)
        for (std::int64_t b = 0; b < moduli_[1]; ++b)
            for (std::int64_t c = 0; c < moduli_[2]; ++c) {
                Element e{a, b, c};
                int ord = 0;
                for (std::size_t j = 0; j < 3; ++j) {
                    // order of e_j in Z_{p^l} is p^(l - v_p(e_j))
                    std::int64_t v = e[j];
                    int exp = t[j];
                    while (v != 0 && v % p == 0) {
                        v /= p;
                        --exp;
                    }
                    if (e[j] != 0) ord = std::max(ord, exp);
                }
                elements_.push_back(e);
                order_exp_.push_back(ord);
            }
}

std::size_t ConcreteGroup::index_of(const Element& e) const noexcept {
    return static_cast<std::size_t>((e[0] * moduli_[1] + e[1]) * moduli_[2] + e[2]);
}

std::size_t ConcreteGroup::add(std::size_t a, std::size_t b) const noexcept {
    const Element& x = elements_[a];
    const Element& y = elements_[b];
    Element s{};
    for (std::size_t j = 0; j < 3; ++j) s[j] = (x[j] + y[j]) % moduli_[j];
    return index_of(s);
}

std::size_t ConcreteGroup::negate(std::size_t a) const noexcept {
    const Element& x = elements_[a];
    Element s{};
    for (std::size_t j = 0; j < 3; ++j) s[j] = (moduli_[j] - x[j]) % moduli_[j];
    return index_of(s);
}

std::size_t ConcreteGroup::multiply(std::size_t a, std::int64_t k) const noexcept {
    const Element& x = elements_[a];
    Element s{};
    for (std::size_t j = 0; j < 3; ++j) {
        const std::int64_t kk = ((k % moduli_[j]) + moduli_[j]) % moduli_[j];
        s[j] = static_cast<std::int64_t>((static_cast<Wide>(x[j]) * kk) % moduli_[j]);
    }
    return index_of(s);
}

ConcreteGroup build_group(const GroupType& t, std::int64_t p, std::size_t cap) {
    if (p < 2) throw std::domain_error("p must be at least 2");
    const mpz_class order = group_order(t, p);
    if (order > mpz_class(static_cast<unsigned long>(cap)))
        throw TooLarge("group of type " + t.to_string() + " at p=" + std::to_string(p) + " has " + order.get_str() +
                       " elements, above the cap of " + std::to_string(cap));
    return ConcreteGroup(t, p);
}

// ------------------------------------------------------------------ Lattice

Lattice::Lattice(std::vector<MemberSet> subgroups) {
    std::sort(subgroups.begin(), subgroups.end(), [](const MemberSet& a, const MemberSet& b) {
        const auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return member_order(a, b);
    });
    const std::size_t n = subgroups.size();
    subgroups_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t order = subgroups[i].count();
        index_.emplace(subgroups[i], i);
        subgroups_.push_back({i, std::move(subgroups[i]), order});
    }
    above_.assign(n, MemberSet(n));
    below_.assign(n, MemberSet(n));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = h; k < n; ++k) {
            if (subgroups_[k].order % subgroups_[h].order != 0) continue;
            if (subgroups_[h].members.is_subset_of(subgroups_[k].members)) {
                above_[h].set(k);
                below_[k].set(h);
            }
        }
}

std::optional<std::size_t> Lattice::find(const MemberSet& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<BigInt>& Lattice::mobius_row(std::size_t h) const {
    std::lock_guard lock(*mobius_mutex_);
    if (auto it = mobius_rows_.find(h); it != mobius_rows_.end()) return it->second;

    // Ids are a linear extension of containment, so each K sees every
    // L in [H, K) already filled in.
    std::vector<BigInt> row(size(), BigInt(0));
    const MemberSet& up = above_[h];
    up.for_each([&](std::size_t k) {
        if (k == h) {
            row[k] = 1;
            return;
        }
        BigInt sum = 0;
        (up & below_[k]).for_each([&](std::size_t l) {
            if (l != k) sum += row[l];
        });
        row[k] = -sum;
    });
    return mobius_rows_.emplace(h, std::move(row)).first->second;
}

// --------------------------------------------------------------- operations

MemberSet join(const ConcreteGroup& g, const MemberSet& a, const MemberSet& b) {
    std::vector<std::size_t> a_elems;
    a_elems.reserve(a.count());
    a.for_each([&](std::size_t i) { a_elems.push_back(i); });

    // a + b is the union of the cosets a + x, x in b; a coset is already
    // present as soon as its representative is.
    MemberSet out(g.order());
    b.for_each([&](std::size_t x) {
        if (out.test(x)) return;
        for (std::size_t y : a_elems) out.set(g.add(y, x));
    });
    return out;
}

Lattice all_subgroups(const ConcreteGroup& g) {
    const std::size_t n = g.order();

    std::vector<MemberSet> seeds;
    std::unordered_set<MemberSet, MemberSetHash> seen;
    for (std::size_t x = 0; x < n; ++x) {
        MemberSet cyc(n);
        std::size_t y = 0;
        do {
            cyc.set(y);
            y = g.add(y, x);
        } while (y != 0);
        if (seen.insert(cyc).second) seeds.push_back(std::move(cyc));
    }

    std::vector<MemberSet> found(seeds.begin(), seeds.end());
    std::deque<std::size_t> work;
    for (std::size_t i = 0; i < found.size(); ++i) work.push_back(i);
    while (!work.empty()) {
        const std::size_t i = work.front();
        work.pop_front();
        for (const MemberSet& c : seeds) {
            if (c.is_subset_of(found[i])) continue;
            MemberSet j = join(g, found[i], c);
            if (seen.insert(j).second) {
                found.push_back(std::move(j));
                work.push_back(found.size() - 1);
            }
        }
    }
    return Lattice(std::move(found));
}

bool is_join_meet_closed(const ConcreteGroup& g, const Lattice& lattice) {
    const auto& subs = lattice.subgroups();
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = a + 1; b < subs.size(); ++b) {
            if (!lattice.find(subs[a].members & subs[b].members)) return false;
            if (!lattice.find(join(g, subs[a].members, subs[b].members))) return false;
        }
    return true;
}

namespace {

int log_p(std::size_t n, std::int64_t p) {
    int e = 0;
    while (n > 1) {
        if (n % static_cast<std::size_t>(p) != 0) throw std::logic_error("order is not a power of p");
        n /= static_cast<std::size_t>(p);
        ++e;
    }
    return e;
}

// Given n_k = log_p of the size of the p^k-torsion for k = 0, 1, ..., the
// differences form the conjugate of the type partition.
GroupType type_from_torsion(const std::vector<int>& torsion_log) {
    std::array<long, 3> parts{0, 0, 0};
    for (std::size_t k = 1; k < torsion_log.size(); ++k) {
        const int d = torsion_log[k] - torsion_log[k - 1];
        if (d > 3) throw std::logic_error("subgroup rank exceeds 3");
        for (int i = 0; i < d; ++i) parts[static_cast<std::size_t>(i)] += 1;
    }
    return GroupType::normalize(parts);
}

}  // namespace

GroupType subgroup_type(const ConcreteGroup& g, const SubgroupSet& h) {
    const int total = log_p(h.order, g.p());
    std::vector<int> torsion{0};
    for (int k = 1; torsion.back() < total; ++k) {
        std::size_t cnt = 0;
        h.members.for_each([&](std::size_t x) {
            if (g.order_exponent(x) <= k) ++cnt;
        });
        torsion.push_back(log_p(cnt, g.p()));
    }
    return type_from_torsion(torsion);
}

GroupType quotient_subgroup_type(const ConcreteGroup& g, const SubgroupSet& h) {
    const int total = log_p(g.order() / h.order, g.p());
    std::vector<int> torsion{0};
    std::int64_t pk = 1;
    for (int k = 1; torsion.back() < total; ++k) {
        pk *= g.p();
        std::size_t cnt = 0;
        for (std::size_t x = 0; x < g.order(); ++x)
            if (h.members.test(g.multiply(x, pk))) ++cnt;
        torsion.push_back(log_p(cnt / h.order, g.p()));
    }
    return type_from_torsion(torsion);
}

FactorizationTally tally_factorizations(const ConcreteGroup& g, const Lattice& lattice) {
    const auto& subs = lattice.subgroups();
    const std::uint64_t order = g.order();
    std::uint64_t ordered = 0, unordered = 0, diagonal = 0;
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = 0; b < subs.size(); ++b) {
            const std::uint64_t prod = static_cast<std::uint64_t>(subs[a].order) * subs[b].order;
            if (prod < order) continue;
            const std::uint64_t meet = subs[a].members.intersection_count(subs[b].members);
            if (prod != order * meet) continue;
            ++ordered;
            if (a <= b) ++unordered;
            if (a == b) ++diagonal;
        }
    return {BigInt(static_cast<unsigned long>(ordered)), BigInt(static_cast<unsigned long>(unordered)),
            BigInt(static_cast<unsigned long>(diagonal))};
}

BigInt count_factorizations(const ConcreteGroup& g, const Lattice& lattice) {
    return tally_factorizations(g, lattice).ordered;
}

std::size_t interval_size(const Lattice& lattice, std::size_t h) { return lattice.above(h).count(); }

BigInt mobius_interval(const Lattice& lattice, std::size_t h, std::size_t k) {
    if (h >= lattice.size() || k >= lattice.size()) throw std::out_of_range("subgroup id out of range");
    if (!lattice.contains(h, k))
        throw NotComparable("subgroup " + std::to_string(h) + " is not contained in subgroup " + std::to_string(k));
    return lattice.mobius_row(h)[k];
}

VerificationReport verify_hall(const ConcreteGroup& g, const Lattice& lattice) {
    VerificationReport report{g.type(), g.p(), {}};
    const auto& row = lattice.mobius_row(lattice.bottom());
    std::size_t mismatches = 0;
    VerificationReport details{g.type(), g.p(), {}};
    for (const SubgroupSet& h : lattice.subgroups()) {
        const GroupType t = subgroup_type(g, h);
        const BigInt expected = hall_mobius(t, g.p());
        if (expected != row[h.id]) {
            ++mismatches;
            details.expect_equal("hall.subgroup[" + std::to_string(h.id) + "] type " + t.to_string(),
                                 expected.get_str(), row[h.id].get_str());
        }
    }
    report.expect_equal("hall.mismatches_over_" + std::to_string(lattice.size()) + "_subgroups", "0",
                        std::to_string(mismatches));
    report.append(details);
    return report;
}

VerificationReport verify_eq2_forms(const ConcreteGroup& g, const Lattice& lattice) {
    VerificationReport report{g.type(), g.p(), {}};
    const std::size_t top = lattice.top();

    // mu(H, G) for every H, filled from the top down.
    std::vector<BigInt> to_top(lattice.size(), BigInt(0));
    for (std::size_t h = lattice.size(); h-- > 0;) {
        if (h == top) {
            to_top[h] = 1;
            continue;
        }
        BigInt sum = 0;
        lattice.above(h).for_each([&](std::size_t l) {
            if (l != h) sum += to_top[l];
        });
        to_top[h] = -sum;
    }

    BigInt s1 = 0, s2 = 0;
    std::size_t duality_mismatches = 0;
    for (const SubgroupSet& h : lattice.subgroups()) {
        const BigInt below = static_cast<unsigned long>(lattice.below(h.id).count());
        s1 += below * below * to_top[h.id];
        const BigInt above = static_cast<unsigned long>(interval_size(lattice, h.id));
        s2 += above * above * hall_mobius(subgroup_type(g, h), g.p());
        if (to_top[h.id] != hall_mobius(quotient_subgroup_type(g, h), g.p())) ++duality_mismatches;
    }
    const BigInt brute = count_factorizations(g, lattice);
    report.expect_equal("eq2.sum_L(H)^2_mu(H,G)", brute.get_str(), s1.get_str());
    report.expect_equal("eq2.sum_L(G/H)^2_mu(H)", brute.get_str(), s2.get_str());
    report.expect_equal("eq2.mu(H,G)_equals_mu(G/H)_mismatches", "0", std::to_string(duality_mismatches));
    return report;
}

}  // namespace pgf
