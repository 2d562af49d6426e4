#include "llcw/scalar.hpp"

#include <cmath>

namespace llcw {

ScalarExt ScalarExt::from_rational(ConfigPtr cfg, const mpq_class& r) {
    return ScalarExt(Cyclo(cfg, r), Cyclo(cfg));
}

ScalarExt ScalarExt::from_cyclo(Cyclo a) {
    Cyclo b(a.config());
    return ScalarExt(std::move(a), std::move(b));
}

ScalarExt ScalarExt::sqrt_q(ConfigPtr cfg) {
    return ScalarExt(Cyclo(cfg), Cyclo(cfg, 1));
}

ScalarExt ScalarExt::root_of_unity(ConfigPtr cfg, long order, long exponent) {
    if (order <= 0 || cfg->M() % order != 0)
        throw config_error("root-of-unity order " + std::to_string(order) +
                           " does not divide M = " + std::to_string(cfg->M()));
    long e = exponent % order;
    if (e < 0) e += order;
    return from_cyclo(Cyclo::zeta_pow(cfg, (cfg->M() / order) * e));
}

ScalarExt ScalarExt::operator+(const ScalarExt& o) const {
    return ScalarExt(a_ + o.a_, b_ + o.b_);
}

ScalarExt ScalarExt::operator-(const ScalarExt& o) const {
    return ScalarExt(a_ - o.a_, b_ - o.b_);
}

ScalarExt ScalarExt::operator-() const { return ScalarExt(-a_, -b_); }

ScalarExt ScalarExt::operator*(const ScalarExt& o) const {
    // (a1 + b1 y)(a2 + b2 y) with y^2 = q
    Cyclo q(a_.config(), (long)config()->q());
    return ScalarExt(a_ * o.a_ + q * (b_ * o.b_), a_ * o.b_ + b_ * o.a_);
}

ScalarExt ScalarExt::conj() const { return ScalarExt(a_.conj(), b_.conj()); }

ScalarExt ScalarExt::norm2() const { return *this * conj(); }

ScalarExt ScalarExt::inverse() const {
    if (is_zero()) throw precondition_error("division by zero in Q(zeta_M)[sqrt q]");
    Cyclo q(a_.config(), (long)config()->q());
    if (b_.is_zero()) return ScalarExt(a_.inverse(), b_);
    if (a_.is_zero()) {
        // (b y)^{-1} = y b^{-1} / q
        Cyclo binv = b_.inverse();
        Cyclo qinv = q.inverse();
        return ScalarExt(a_, binv * qinv);
    }
    Cyclo d = a_ * a_ - q * (b_ * b_);
    if (d.is_zero())
        throw precondition_error("element not invertible in Q(zeta_M)[sqrt q] "
                                 "(sqrt q has a cyclotomic shadow here)");
    Cyclo dinv = d.inverse();
    return ScalarExt(a_ * dinv, -(b_ * dinv));
}

ScalarExt ScalarExt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ScalarExt r = from_rational(config(), 1);
    ScalarExt b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::complex<double> ScalarExt::embed() const {
    double sq = std::sqrt((double)config()->q());
    return a_.embed() + sq * b_.embed();
}

std::optional<ScalarExt::UnitMonomial> ScalarExt::as_unit_monomial(long max_order) const {
    if (is_zero()) return std::nullopt;
    auto cfg = config();
    long q = cfg->q();
    // pure-component case: z = c * y^s with c cyclotomic
    if (a_.is_zero() || b_.is_zero()) {
        long s = a_.is_zero() ? 1 : 0;
        const Cyclo& c = s ? b_ : a_;
        mpq_class r;
        if ((c * c.conj()).is_rational(&r) && r > 0) {
            // r must be q^{2t} for an integer t
            long t = 0;
            mpq_class cur = 1;
            while (cur < r) { cur *= q * q; ++t; }
            while (cur > r && t > -64) { cur /= q * q; --t; }
            if (cur == r) {
                mpq_class scale(1);
                for (long i = 0; i < std::abs(t); ++i) scale *= q;
                Cyclo u = t >= 0 ? c * Cyclo(cfg, mpq_class(1) / scale)
                                 : c * Cyclo(cfg, scale);
                if (cfg->M() % max_order == 0) {
                    for (long k = 0; k < max_order; ++k) {
                        if (u == Cyclo::zeta_pow(cfg, (cfg->M() / max_order) * k))
                            return UnitMonomial{k, max_order, s, t};
                    }
                }
            }
        }
    }
    if (auto k = as_root_of_unity(max_order))
        return UnitMonomial{*k, max_order, 0, 0};
    return std::nullopt;
}

std::optional<long> ScalarExt::as_root_of_unity(long max_order) const {
    auto cfg = config();
    if (cfg->M() % max_order != 0) return std::nullopt;
    if (!(norm2() == from_rational(cfg, 1))) return std::nullopt;
    ScalarExt sq = *this * *this;
    auto e = embed();
    for (long k = 0; k < max_order; ++k) {
        ScalarExt u = root_of_unity(cfg, max_order, k);
        if (!(sq == u * u)) continue;
        // z = +-u; the embedding separates the two candidates by distance 2
        if (std::abs(e - u.embed()) < 0.5) return k;
    }
    return std::nullopt;
}

} // namespace llcw
