#include "pgf/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace pgf {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(const BigInt& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial::IntPolynomial(long constant) : IntPolynomial(BigInt(constant)) {}

IntPolynomial IntPolynomial::monomial(const BigInt& coeff, std::size_t power) {
    if (coeff == 0) return {};
    IntPolynomial out;
    out.coeffs_.assign(power + 1, BigInt(0));
    out.coeffs_[power] = coeff;
    return out;
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

IntPolynomial scale(IntPolynomial a, const BigInt& c) { return a * IntPolynomial(c); }

IntPolynomial div_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree())
        throw InexactDivision("degree of divisor exceeds degree of dividend: " + num.to_string() + " / " +
                              den.to_string());

    std::vector<BigInt> rem = num.coeffs();
    const auto& d = den.coeffs();
    const std::size_t dn = d.size() - 1;
    std::vector<BigInt> quot(rem.size() - dn, BigInt(0));

    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt& top = rem[k + dn];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
            throw InexactDivision("fractional quotient coefficient in " + num.to_string() + " / " +
                                  den.to_string());
        BigInt q = top / d.back();
        for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= q * d[j];
        quot[k] = std::move(q);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
        throw InexactDivision("nonzero remainder in " + num.to_string() + " / " + den.to_string());
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += 'p';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& poly) { return os << poly.to_string(); }

}  // namespace pgf
