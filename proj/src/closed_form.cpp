#include "pgf/closed_form.hpp"

#include <stdexcept>
#include <utility>

namespace pgf {

std::string_view method_name(Method m) noexcept {
    switch (m) {
        case Method::eq3: return "eq3";
        case Method::theorem3: return "theorem3";
        case Method::corollary4: return "corollary4";
    }
    return "unknown";
}

std::string FormulaResult::to_string() const {
    return std::visit(
        [](const auto& v) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BigInt>)
                return v.get_str();
            else
                return v.to_string();
        },
        value);
}

namespace {

// The formulas are written once over a ring R that is either BigInt (p is a
// number) or IntPolynomial (p is the indeterminate).

template <class R>
R power(R base, long e) {
    R acc(1L);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return acc;
}

BigInt divide_exactly(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("division by zero");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InexactDivision(num.get_str() + " is not divisible by " + den.get_str());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

IntPolynomial divide_exactly(const IntPolynomial& num, const IntPolynomial& den) { return div_exact(num, den); }

template <class R>
R subgroup_count(const GroupType& t, const R& p) {
    const long l1 = t[0], l2 = t[1], l3 = t[2];
    auto term = [&p](long c, long e) -> R { return R(c) * power(p, e); };

    R numerator = term((l3 + 1) * (l1 - l2 + 1), l2 + l3 + 5);
    numerator += term(2 * (l3 + 1), l2 + l3 + 4);
    numerator -= term(2 * (l3 + 1) * (l1 - l2), l2 + l3 + 3);
    numerator -= term(2 * (l3 + 1), l2 + l3 + 2);
    numerator += term((l3 + 1) * (l1 - l2 - 1), l2 + l3 + 1);
    numerator -= term(l1 + l2 - l3 + 3, 2 * l3 + 4);
    numerator -= term(2, 2 * l3 + 3);
    numerator += term(l1 + l2 - l3 - 1, 2 * l3 + 2);
    numerator += term(l1 + l2 + l3 + 5, 2);
    numerator += term(2, 1);
    numerator -= term(l1 + l2 + l3 + 1, 0);

    const R one(1L);
    const R p2m1 = p * p - one;
    const R denominator = p2m1 * p2m1 * (p - one);
    return divide_exactly(numerator, denominator);
}

template <class R>
R f_squared(long a, long b, long c, const R& p) {
    if (a < 0 || b < 0 || c < 0) return R(0L);
    R f = subgroup_count(GroupType::normalize({a, b, c}), p);
    return f * f;
}

template <class R>
R theorem3(const GroupType& t, const R& p) {
    const long l1 = t[0], l2 = t[1], l3 = t[2];
    const R p2 = p * p;
    const R p3 = p2 * p;

    R acc = f_squared(l1, l2, l3, p);
    acc -= p3 * f_squared(l1 - 1, l2 - 1, l3 - 1, p);
    acc += p * (f_squared(l1 - 1, l2 - 1, l3, p) + p * f_squared(l1 - 1, l2, l3 - 1, p) +
                p2 * f_squared(l1, l2 - 1, l3 - 1, p));
    acc -= f_squared(l1 - 1, l2, l3, p) + p * f_squared(l1, l2 - 1, l3, p) + p2 * f_squared(l1, l2, l3 - 1, p);
    return acc;
}

template <class R>
R corollary4(long l, const R& p) {
    const R one(1L);
    const R p2 = p * p;
    const R cyc = one + p + p2;

    R acc = f_squared(l, l, l, p);
    acc -= p2 * p * f_squared(l - 1, l - 1, l - 1, p);
    acc += p * cyc * f_squared(l, l - 1, l - 1, p);
    acc -= cyc * f_squared(l, l, l - 1, p);
    return acc;
}

template <class Fn>
FormulaResult dispatch(const Mode& mode, Method method, Fn&& fn) {
    if (const auto* num = std::get_if<Numeric>(&mode)) {
        if (num->p < 2) throw std::domain_error("p must be at least 2, got " + std::to_string(num->p));
        return {fn(BigInt(static_cast<long>(num->p))), method};
    }
    return {fn(IntPolynomial::indeterminate()), method};
}

}  // namespace

FormulaResult subgroup_count_f(const GroupType& t, const Mode& mode) {
    return dispatch(mode, Method::eq3, [&t](const auto& p) { return subgroup_count(t, p); });
}

FormulaResult f_ext(std::array<long, 3> raw, const Mode& mode) {
    for (long e : raw)
        if (e < 0) return dispatch(mode, Method::eq3, [](const auto& p) { return std::decay_t<decltype(p)>(0L); });
    return subgroup_count_f(GroupType::normalize(raw), mode);
}

FormulaResult f2_theorem3(const GroupType& t, const Mode& mode) {
    return dispatch(mode, Method::theorem3, [&t](const auto& p) { return theorem3(t, p); });
}

FormulaResult f2_corollary4(long lambda, const Mode& mode) {
    if (lambda < 0) throw NegativeExponent("corollary exponent must be non-negative");
    return dispatch(mode, Method::corollary4, [lambda](const auto& p) { return corollary4(lambda, p); });
}

}  // namespace pgf
