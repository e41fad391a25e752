#include "mahonia/bipoly.hpp"

namespace mahonia {

namespace {
const ExactInt kZero(0);
}

BiPoly BiPoly::one() { return term(0, 0, ExactInt(1)); }

BiPoly BiPoly::term(unsigned t_exp, unsigned q_exp, ExactInt c) {
    BiPoly p;
    if (c != 0) p.terms_.emplace(Key{t_exp, q_exp}, std::move(c));
    return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p, unsigned t_exp, unsigned q_shift) {
    BiPoly out;
    const auto& cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        out.terms_.emplace(Key{t_exp, q_shift + static_cast<unsigned>(k)}, cs[k]);
    }
    return out;
}

const ExactInt& BiPoly::coeff(unsigned t_exp, unsigned q_exp) const {
    auto it = terms_.find(Key{t_exp, q_exp});
    return it == terms_.end() ? kZero : it->second;
}

BiPoly& BiPoly::add_term(unsigned t_exp, unsigned q_exp, const ExactInt& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(Key{t_exp, q_exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [key, c] : b.terms_) out.add_term(key.first, key.second, c);
    return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

}  // namespace mahonia
