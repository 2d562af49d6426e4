#include "llcw/laurent.hpp"

namespace llcw {

LaurentPoly LaurentPoly::constant(const ScalarExt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const ScalarExt& c, long xpow) {
    LaurentPoly p(c.config());
    p.add_term(xpow, c);
    return p;
}

long LaurentPoly::min_deg() const {
    if (t_.empty()) throw precondition_error("degree of zero polynomial");
    return t_.begin()->first;
}

long LaurentPoly::max_deg() const {
    if (t_.empty()) throw precondition_error("degree of zero polynomial");
    return t_.rbegin()->first;
}

void LaurentPoly::add_term(long xpow, const ScalarExt& c) {
    if (c.is_zero()) return;
    if (!cfg_) cfg_ = c.config();
    auto it = t_.find(xpow);
    if (it == t_.end()) {
        t_.emplace(xpow, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    if (!r.cfg_) r.cfg_ = o.cfg_;
    for (const auto& [k, c] : o.t_) r.add_term(k, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    if (!r.cfg_) r.cfg_ = o.cfg_;
    for (const auto& [k, c] : o.t_) r.add_term(k, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(cfg_ ? cfg_ : o.cfg_);
    for (const auto& [k1, c1] : t_)
        for (const auto& [k2, c2] : o.t_) r.add_term(k1 + k2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const ScalarExt& c) const {
    LaurentPoly r(cfg_);
    for (const auto& [k, cc] : t_) r.add_term(k, cc * c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = t_.begin();
    auto jt = o.t_.begin();
    for (; it != t_.end(); ++it, ++jt) {
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::substitute(const ScalarExt& c, long k) const {
    if (k == 0) throw precondition_error("substitution exponent must be nonzero");
    LaurentPoly r(cfg_);
    for (const auto& [e, coeff] : t_) {
        ScalarExt factor = c.pow(e);
        r.add_term(e * k, coeff * factor);
    }
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly(cfg_);
    LaurentPoly rem = *this;
    LaurentPoly quo(cfg_);
    ScalarExt lead_inv;
    try {
        lead_inv = d.t_.rbegin()->second.inverse();
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
    long dd = d.max_deg();
    // in an exact Laurent division the lowest quotient exponent is pinned by
    // the lowest exponents of dividend and divisor
    long quo_floor = min_deg() - d.min_deg();
    while (!rem.is_zero() && rem.max_deg() - dd >= quo_floor) {
        long shift = rem.max_deg() - dd;
        ScalarExt c = rem.t_.rbegin()->second * lead_inv;
        quo.add_term(shift, c);
        for (const auto& [k, cc] : d.t_) rem.add_term(k + shift, -(cc * c));
    }
    if (!rem.is_zero()) return std::nullopt;
    return quo;
}

LaurentRat::LaurentRat(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw precondition_error("zero denominator");
    normalize();
}

LaurentRat LaurentRat::from_poly(LaurentPoly p) {
    auto cfg = p.config();
    return LaurentRat(std::move(p),
                      LaurentPoly::constant(ScalarExt::from_rational(cfg, 1)));
}

LaurentRat LaurentRat::constant(const ScalarExt& c) {
    return from_poly(LaurentPoly::constant(c));
}

LaurentRat LaurentRat::monomial(const ScalarExt& c, long xpow) {
    return from_poly(LaurentPoly::monomial(c, xpow));
}

LaurentRat LaurentRat::one(ConfigPtr cfg) {
    return constant(ScalarExt::from_rational(cfg, 1));
}

void LaurentRat::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(ScalarExt::from_rational(den_.config(), 1));
        return;
    }
    // cancel a common X power so den has min degree 0
    long shift = den_.min_deg();
    if (shift != 0) {
        LaurentPoly n(num_.config()), d(den_.config());
        for (const auto& [k, c] : num_.terms()) n.add_term(k - shift, c);
        for (const auto& [k, c] : den_.terms()) d.add_term(k - shift, c);
        num_ = n;
        den_ = d;
    }
    // try full cancellation when den divides num
    if (auto q = num_.divide_exact(den_)) {
        num_ = *q;
        den_ = LaurentPoly::constant(ScalarExt::from_rational(den_.config(), 1));
        return;
    }
    // normalize the trailing denominator coefficient to 1 when possible
    try {
        ScalarExt t = den_.terms().begin()->second;
        ScalarExt tinv = t.inverse();
        num_ = num_ * tinv;
        den_ = den_ * tinv;
    } catch (const std::runtime_error&) {
    }
}

LaurentRat LaurentRat::operator+(const LaurentRat& o) const {
    return LaurentRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LaurentRat LaurentRat::operator-(const LaurentRat& o) const {
    return LaurentRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

LaurentRat LaurentRat::operator*(const LaurentRat& o) const {
    return LaurentRat(num_ * o.num_, den_ * o.den_);
}

LaurentRat LaurentRat::operator*(const ScalarExt& c) const {
    return LaurentRat(num_ * c, den_);
}

LaurentRat LaurentRat::reciprocal() const {
    if (num_.is_zero()) throw precondition_error("reciprocal of zero");
    return LaurentRat(den_, num_);
}

bool LaurentRat::operator==(const LaurentRat& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

LaurentRat LaurentRat::substitute(const ScalarExt& c, long k) const {
    return LaurentRat(num_.substitute(c, k), den_.substitute(c, k));
}

MonomialForm MonomialForm::of(const LaurentRat& r) {
    const auto& num = r.num();
    const auto& den = r.den();
    if (num.is_zero()) throw consistency_error("zero is not a monomial");
    if (den.terms().size() == 1 && num.terms().size() == 1) {
        auto [dk, dc] = *den.terms().begin();
        auto [nk, nc] = *num.terms().begin();
        return MonomialForm{nc * dc.inverse(), nk - dk};
    }
    if (auto q = num.divide_exact(den)) {
        if (q->terms().size() == 1) {
            auto [k, c] = *q->terms().begin();
            return MonomialForm{c, k};
        }
    }
    throw consistency_error("rational function is not a monomial");
}

} // namespace llcw
