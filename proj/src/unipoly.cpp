#include "mahonia/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mahonia {

namespace {
const ExactInt kZero(0);
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(ExactInt c) {
    std::vector<ExactInt> v;
    if (c != 0) v.push_back(std::move(c));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monomial(ExactInt c, std::size_t exponent) {
    if (c == 0) return UniPoly();
    std::vector<ExactInt> v(exponent + 1);
    v.back() = std::move(c);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::geometric(std::size_t terms) {
    return UniPoly(std::vector<ExactInt>(terms, ExactInt(1)));
}

const ExactInt& UniPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

ExactInt UniPoly::eval(const ExactInt& x) const {
    ExactInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<ExactInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<ExactInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    std::vector<ExactInt> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<ExactInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::mul_truncated(const UniPoly& rhs, std::size_t max_deg) const {
    if (is_zero() || rhs.is_zero()) return UniPoly();
    std::vector<ExactInt> out(std::min(coeffs_.size() + rhs.coeffs_.size() - 1, max_deg + 1));
    for (std::size_t i = 0; i < coeffs_.size() && i < out.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const std::size_t jmax = std::min(rhs.coeffs_.size(), out.size() - i);
        for (std::size_t j = 0; j < jmax; ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("UniPoly::divmod: division by zero polynomial");
    if (coeffs_.size() < divisor.coeffs_.size()) return {UniPoly(), *this};

    const ExactInt& lead = divisor.coeffs_.back();
    std::vector<ExactInt> rem = coeffs_;
    std::vector<ExactInt> quot(coeffs_.size() - divisor.coeffs_.size() + 1);

    for (std::size_t pos = rem.size(); pos-- >= divisor.coeffs_.size();) {
        if (rem[pos] == 0) continue;
        if (!mpz_divisible_p(rem[pos].get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("UniPoly::divmod: elimination step is not integral");
        ExactInt factor = rem[pos] / lead;
        const std::size_t shift = pos - (divisor.coeffs_.size() - 1);
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[shift + j] -= factor * divisor.coeffs_[j];
        quot[shift] = std::move(factor);
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const ExactInt& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        ExactInt mag = abs(c);
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace mahonia
