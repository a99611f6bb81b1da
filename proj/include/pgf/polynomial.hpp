#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgf {

using BigInt = mpz_class;

/// Raised by div_exact when some long-division step leaves a fractional
/// quotient coefficient or a nonzero remainder survives.
class InexactDivision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense polynomial in the indeterminate p with arbitrary-precision integer
/// coefficients. Coefficient i multiplies p^i. Always normalized: the leading
/// stored coefficient is nonzero and the zero polynomial stores nothing.
class IntPolynomial {
public:
    /// Degree reported for the zero polynomial.
    static constexpr long kMinusInfinity = -1;

    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(const BigInt& constant);  // NOLINT: implicit lift of constants
    IntPolynomial(long constant);           // NOLINT

    static IntPolynomial monomial(const BigInt& coeff, std::size_t power);
    static IntPolynomial indeterminate() { return monomial(1, 1); }

    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of p^i; zero beyond the degree.
    [[nodiscard]] BigInt coeff(std::size_t i) const;
    [[nodiscard]] const BigInt& leading() const;

    /// Horner evaluation at an integer point.
    [[nodiscard]] BigInt eval(const BigInt& x) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(IntPolynomial a);

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Descending powers, no spaces, e.g. "9p^6+15p^5-p+13"; "0" for zero.
    [[nodiscard]] std::string to_string() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

IntPolynomial scale(IntPolynomial a, const BigInt& c);

/// Returns q with q * den == num. Throws InexactDivision otherwise, and
/// std::domain_error when den is zero.
IntPolynomial div_exact(const IntPolynomial& num, const IntPolynomial& den);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& poly);

}  // namespace pgf
