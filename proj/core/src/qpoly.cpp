#include "narayana/qpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace narayana {

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

QPoly QPoly::monomial(const Integer& c, std::size_t exponent) {
    if (c == 0) return {};
    std::vector<Integer> coeffs(exponent + 1);
    coeffs[exponent] = c;
    return QPoly(std::move(coeffs));
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long QPoly::low_degree() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return static_cast<long>(i);
    }
    return -1;
}

Integer QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer QPoly::evaluate(const Integer& q) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

QPoly QPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Integer> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(out));
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const Integer& c = cs[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += "q";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << to_string(p); }

InexactDivision::InexactDivision(QPoly remainder)
    : std::domain_error("inexact division: remainder " + to_string(remainder)),
      remainder_(std::move(remainder)) {}

QPoly exact_div(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};

    std::vector<Integer> rem = a.coeffs();
    const auto& den = b.coeffs();
    const std::size_t db = den.size() - 1;
    const Integer& lead = den.back();
    if (rem.size() < den.size()) throw InexactDivision(a);

    std::vector<Integer> quot(rem.size() - db);
    for (std::size_t top = rem.size(); top-- > db;) {
        if (rem[top] == 0) continue;
        if (!mpz_divisible_p(rem[top].get_mpz_t(), lead.get_mpz_t())) {
            throw InexactDivision(QPoly(rem));
        }
        Integer factor = rem[top] / lead;
        const std::size_t shift = top - db;
        quot[shift] = factor;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= factor * den[j];
    }
    QPoly remainder(std::move(rem));
    if (!remainder.is_zero()) throw InexactDivision(std::move(remainder));
    return QPoly(std::move(quot));
}

QPoly q_int(unsigned n) { return QPoly(std::vector<Integer>(n, Integer(1))); }

QPoly q_factorial(unsigned n) {
    QPoly acc = QPoly::one();
    for (unsigned i = 2; i <= n; ++i) acc *= q_int(i);
    return acc;
}

std::vector<std::vector<QPoly>> q_binomial_table(unsigned n) {
    std::vector<std::vector<QPoly>> rows(n + 1);
    rows[0] = {QPoly::one()};
    for (unsigned m = 1; m <= n; ++m) {
        auto& row = rows[m];
        const auto& prev = rows[m - 1];
        row.resize(m + 1);
        row[0] = QPoly::one();
        row[m] = QPoly::one();
        // [m, j] = [m-1, j-1] + q^j [m-1, j]
        for (unsigned j = 1; j < m; ++j) row[j] = prev[j - 1] + prev[j].shifted(j);
    }
    return rows;
}

QPoly q_binomial(unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(n)) return {};
    const auto kk = static_cast<unsigned>(std::min<long>(k, static_cast<long>(n) - k));
    // Only the first kk+1 columns of each row are needed.
    std::vector<QPoly> row{QPoly::one()};
    for (unsigned m = 1; m <= n; ++m) {
        const unsigned width = std::min(m, kk);
        std::vector<QPoly> next(width + 1);
        next[0] = QPoly::one();
        for (unsigned j = 1; j <= width; ++j) {
            const QPoly above = j < row.size() ? row[j] : QPoly{};
            next[j] = row[j - 1] + above.shifted(j);
        }
        row = std::move(next);
    }
    return row[kk];
}

QPoly q_narayana_closed(unsigned n, unsigned k) {
    if (n == 0) throw std::invalid_argument("q_narayana_closed: n must be positive");
    if (k >= n) return {};
    const QPoly numerator = q_binomial(n, k) * q_binomial(n, static_cast<long>(k) + 1);
    return exact_div(numerator, q_int(n)).shifted(static_cast<std::size_t>(k) * k + k);
}

Integer binomial(unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(n)) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

Integer narayana(unsigned n, unsigned k) {
    if (n == 0) throw std::invalid_argument("narayana: n must be positive");
    Integer prod = binomial(n, k) * binomial(n, static_cast<long>(k) + 1);
    Integer out;
    mpz_divexact_ui(out.get_mpz_t(), prod.get_mpz_t(), n);
    return out;
}

Integer catalan(unsigned n) {
    Integer out = binomial(2 * n, n);
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), n + 1);
    return out;
}

}  // namespace narayana
