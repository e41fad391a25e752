#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mahonia/exact_int.hpp"

namespace mahonia {

/// Dense univariate polynomial with exact integer coefficients.
///
/// Canonical form: the coefficient vector carries no trailing zeros, and the
/// zero polynomial is the empty sequence, so equality is structural. Values
/// are immutable after construction; all arithmetic returns fresh objects.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(ExactInt c);
    static UniPoly monomial(ExactInt c, std::size_t exponent);
    /// 1 + x + ... + x^(terms-1); the zero polynomial when terms == 0.
    static UniPoly geometric(std::size_t terms);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    const std::vector<ExactInt>& coeffs() const { return coeffs_; }

    /// Coefficient of x^k; zero beyond the degree.
    const ExactInt& coeff(std::size_t k) const;

    ExactInt eval(const ExactInt& x) const;

    /// Product with all terms of exponent > max_deg discarded.
    UniPoly mul_truncated(const UniPoly& rhs, std::size_t max_deg) const;

    /// Schoolbook long division; returns (quotient, remainder). The divisor
    /// must be nonzero and every elimination step must stay integral, which
    /// always holds for divisors with leading coefficient 1.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    bool operator==(const UniPoly&) const = default;

    std::string to_string(const char* var = "q") const;

  private:
    void trim();

    std::vector<ExactInt> coeffs_;
};

}  // namespace mahonia
