#pragma once

#include <map>
#include <utility>

#include "mahonia/exact_int.hpp"
#include "mahonia/unipoly.hpp"

namespace mahonia {

/// Sparse bivariate polynomial in (t, q). Zero coefficients are never stored,
/// so equality is structural.
class BiPoly {
  public:
    using Key = std::pair<unsigned, unsigned>;  // (t exponent, q exponent)

    BiPoly() = default;

    static BiPoly one();
    static BiPoly term(unsigned t_exp, unsigned q_exp, ExactInt c);
    /// p(q) * t^t_exp * q^q_shift viewed as a bivariate polynomial.
    static BiPoly from_unipoly(const UniPoly& p, unsigned t_exp, unsigned q_shift);

    /// Coefficient of t^t_exp q^q_exp; zero for absent terms.
    const ExactInt& coeff(unsigned t_exp, unsigned q_exp) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, ExactInt>& terms() const { return terms_; }

    BiPoly& add_term(unsigned t_exp, unsigned q_exp, const ExactInt& c);

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    bool operator==(const BiPoly&) const = default;

  private:
    std::map<Key, ExactInt> terms_;
};

}  // namespace mahonia
