#pragma once

/**
 * @file qpoly.hpp
 * @brief Exact univariate polynomials in q with arbitrary-precision integer
 *        coefficients, plus the q-analogues built on them.
 *
 * The zero polynomial is the empty coefficient sequence, and every other
 * value keeps a nonzero leading coefficient, so structural equality is
 * polynomial equality.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace narayana {

using Integer = mpz_class;

class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Integer> coeffs);
    QPoly(std::initializer_list<long> coeffs);

    /// c * q^exponent
    static QPoly monomial(const Integer& c, std::size_t exponent);
    static QPoly one() { return monomial(1, 0); }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 for zero.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Exponent of the lowest nonzero term; -1 for zero.
    long low_degree() const noexcept;

    /// Coefficient of q^i (zero past the end).
    Integer coeff(std::size_t i) const;

    Integer evaluate(const Integer& q) const;

    /// Multiply by q^k.
    QPoly shifted(std::size_t k) const;

    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);

    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
    friend bool operator==(const QPoly& lhs, const QPoly& rhs) = default;

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

/// "1 + 3q^2 + q^5"; zero terms omitted, "0" for the zero polynomial.
std::string to_string(const QPoly& p);
std::ostream& operator<<(std::ostream& os, const QPoly& p);

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class InexactDivision : public std::domain_error {
public:
    explicit InexactDivision(QPoly remainder);
    const QPoly& remainder() const noexcept { return remainder_; }

private:
    QPoly remainder_;
};

/// Quotient a / b over the integers. Throws InexactDivision carrying the
/// nonzero remainder when b does not divide a in Z[q].
QPoly exact_div(const QPoly& a, const QPoly& b);

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
QPoly q_int(unsigned n);

/// [n]! = [n][n-1]...[1]; [0]! = 1.
QPoly q_factorial(unsigned n);

/// Gaussian binomial via the q-Pascal recurrence; zero for k < 0 or k > n.
QPoly q_binomial(unsigned n, long k);

/// All Gaussian binomials [m choose j] for m <= n, row-indexed.
std::vector<std::vector<QPoly>> q_binomial_table(unsigned n);

/// (1/[n]) [n choose k] [n choose k+1] q^{k^2+k}. Requires n >= 1.
QPoly q_narayana_closed(unsigned n, unsigned k);

Integer binomial(unsigned n, long k);

/// N(n,k) = (1/n) C(n,k) C(n,k+1). Requires n >= 1.
Integer narayana(unsigned n, unsigned k);

/// C(2n,n)/(n+1).
Integer catalan(unsigned n);

}  // namespace narayana
