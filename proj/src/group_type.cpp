#include "pgf/group_type.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <ostream>

namespace pgf {

namespace {
constexpr long kMaxExponent = 1 << 20;
}

GroupType GroupType::normalize(std::array<long, 3> raw) {
    for (long e : raw) {
        if (e < 0) throw NegativeExponent("negative exponent " + std::to_string(e) + " in group type");
        if (e > kMaxExponent) throw std::out_of_range("exponent " + std::to_string(e) + " out of range");
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    GroupType t;
    for (std::size_t i = 0; i < 3; ++i) t.exps_[i] = static_cast<int>(raw[i]);
    return t;
}

GroupType GroupType::from_descending(std::array<long, 3> exps) {
    if (!(exps[0] >= exps[1] && exps[1] >= exps[2]))
        throw std::invalid_argument("group type exponents must be descending: " + std::to_string(exps[0]) + "," +
                                    std::to_string(exps[1]) + "," + std::to_string(exps[2]));
    return normalize(exps);
}

GroupType GroupType::elementary(int rank) {
    if (rank < 0 || rank > 3) throw std::invalid_argument("rank must lie in 0..3");
    std::array<long, 3> raw{0, 0, 0};
    for (int i = 0; i < rank; ++i) raw[static_cast<std::size_t>(i)] = 1;
    return normalize(raw);
}

int GroupType::rank() const noexcept {
    return static_cast<int>(std::count_if(exps_.begin(), exps_.end(), [](int e) { return e > 0; }));
}

std::string GroupType::to_string() const {
    return std::to_string(exps_[0]) + "," + std::to_string(exps_[1]) + "," + std::to_string(exps_[2]);
}

mpz_class group_order(const GroupType& t, std::int64_t p) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(t.order_exponent()));
    return out;
}

bool is_elementary_abelian(const GroupType& t) noexcept { return t[0] <= 1; }

GroupType parse_group_type(std::string_view text) {
    std::array<long, 3> vals{};
    std::size_t field = 0;
    const char* cur = text.data();
    const char* end = text.data() + text.size();
    while (true) {
        if (field == 3) throw std::invalid_argument("group type needs exactly three entries: '" + std::string(text) + "'");
        long v = 0;
        auto [ptr, ec] = std::from_chars(cur, end, v);
        if (ec != std::errc{} || ptr == cur)
            throw std::invalid_argument("malformed group type '" + std::string(text) + "', expected l1,l2,l3");
        vals[field++] = v;
        cur = ptr;
        if (cur == end) break;
        if (*cur != ',') throw std::invalid_argument("malformed group type '" + std::string(text) + "'");
        ++cur;
    }
    if (field != 3) throw std::invalid_argument("group type needs exactly three entries: '" + std::string(text) + "'");
    return GroupType::from_descending(vals);
}

std::ostream& operator<<(std::ostream& os, const GroupType& t) { return os << '(' << t.to_string() << ')'; }

}  // namespace pgf
