#include "llcw/padic.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace llcw {

namespace {

long pow_checked(long p, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) {
        if (r > (1L << 61) / p) throw config_error("p-adic modulus exceeds 2^61");
        r *= p;
    }
    return r;
}

} // namespace

PadicRing PadicRing::make(long p, long f, long K, long Kcmp, long low) {
    if (p < 2 || f < 1 || K < 1 || low > 0 || Kcmp > K)
        throw precondition_error("bad p-adic ring parameters");
    PadicRing R;
    R.p = p;
    R.f = f;
    R.K = K;
    R.Kcmp = Kcmp;
    R.low = low;
    R.res = ResidueTower::make(p, f, 1);
    R.mod = R.res->modulus();
    // p^0 .. p^{range - low}: products in mul() are reduced mod p^{range - low}
    R.ppow.resize(R.range() - low + 1);
    R.ppow[0] = 1;
    for (size_t i = 1; i < R.ppow.size(); ++i)
        R.ppow[i] = pow_checked(p, (long)i);
    return R;
}

PadicNum raw(const PadicRing& R, std::vector<long> c, long prec) {
    PadicNum x;
    x.R_ = &R;
    x.c_ = std::move(c);
    x.prec_ = std::min(prec, R.K);
    if (x.prec_ <= R.low) throw precision_error("p-adic precision exhausted");
    x.reduce();
    return x;
}

void PadicNum::reduce() {
    long m = R_->ppow[prec_ - R_->low];
    for (auto& v : c_) v = ((v % m) + m) % m;
}

PadicNum PadicNum::zero(const PadicRing& R) {
    return raw(R, std::vector<long>(R.f, 0), R.K);
}

PadicNum PadicNum::from_int(const PadicRing& R, long v) {
    return from_rational(R, mpq_class(v));
}

PadicNum PadicNum::from_rational(const PadicRing& R, const mpq_class& r) {
    mpz_class num = r.get_num(), den = r.get_den();
    long val = 0;
    while (num != 0 && num % R.p == 0) { num /= R.p; ++val; }
    while (den % R.p == 0) { den /= R.p; --val; }
    if (num != 0 && val < R.low)
        throw precision_error("rational valuation below representable range");
    std::vector<long> c(R.f, 0);
    if (num != 0) {
        mpz_class m = R.ppow[R.range()];
        mpz_class di;
        mpz_invert(di.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        mpz_class u = ((num * di) % m + m) % m;
        u = u * R.ppow[val - R.low] % m;
        c[0] = u.get_si();
    }
    return raw(R, c, R.K);
}

PadicNum PadicNum::pi_pow(const PadicRing& R, long v) {
    if (v < R.low) throw precision_error("valuation below representable range");
    std::vector<long> c(R.f, 0);
    if (v - R.low < R.range()) c[0] = R.ppow[v - R.low];
    return raw(R, c, R.K);
}

PadicNum PadicNum::lift_residue(const PadicRing& R, long kelem, long val) {
    if (val < R.low) throw precision_error("valuation below representable range");
    std::vector<long> c(R.f, 0);
    for (long i = 0; i < R.f; ++i) {
        long d = kelem % R.p;
        kelem /= R.p;
        if (val - R.low < R.range()) c[i] = d * R.ppow[val - R.low];
    }
    return raw(R, c, R.K);
}

PadicNum PadicNum::teichmuller(const PadicRing& R, long kelem, long val) {
    PadicNum x = lift_residue(R, kelem, 0);
    if (kelem != 0) {
        long q = R.res->q();
        // x -> x^q gains at least one digit of agreement with the
        // multiplicative representative per step
        for (long step = 0; step < R.range(); ++step) {
            PadicNum y = from_int(R, 1);
            PadicNum b = x;
            long e = q;
            while (e > 0) {
                if (e & 1) y = y.mul(b);
                b = b.mul(b);
                e >>= 1;
            }
            x = y;
        }
    }
    if (val != 0) x = x.mul(pi_pow(R, val));
    return x;
}

PadicNum PadicNum::from_digits(const PadicRing& R,
                               const std::vector<std::vector<long>>& digits) {
    std::vector<long> c(R.f, 0);
    for (long i = 0; i < R.f && i < (long)digits.size(); ++i)
        for (long t = 0; t < (long)digits[i].size() && t < R.range(); ++t)
            c[i] += digits[i][t] % R.p * R.ppow[t];
    return raw(R, c, R.K);
}

PadicNum PadicNum::add(const PadicNum& o) const {
    std::vector<long> c(R_->f);
    for (long i = 0; i < R_->f; ++i) c[i] = c_[i] + o.c_[i];
    return raw(*R_, c, std::min(prec_, o.prec_));
}

PadicNum PadicNum::neg() const {
    std::vector<long> c(R_->f);
    for (long i = 0; i < R_->f; ++i) c[i] = -c_[i];
    return raw(*R_, c, prec_);
}

PadicNum PadicNum::sub(const PadicNum& o) const { return add(o.neg()); }

PadicNum PadicNum::mul(const PadicNum& o) const {
    const PadicRing& R = *R_;
    long f = R.f;
    // exact product mod p^{range - low}, then divide by p^{-low} to restore
    // the fixed-point scale
    __int128 big = R.ppow[R.range() - R.low];
    std::vector<__int128> prod(2 * f - 1, 0);
    for (long i = 0; i < f; ++i)
        for (long j = 0; j < f; ++j)
            prod[i + j] += (__int128)c_[i] * o.c_[j];
    for (auto& v : prod) v %= big;
    for (long d = 2 * f - 2; d >= f; --d) {
        __int128 t = prod[d] % big;
        prod[d] = 0;
        for (long i = 0; i < f; ++i) {
            prod[d - f + i] -= t * R.mod[i];
            prod[d - f + i] %= big;
        }
    }
    long shift = -R.low;
    long pshift = R.ppow[shift];
    std::vector<long> c(f);
    for (long i = 0; i < f; ++i) {
        __int128 v = ((prod[i] % big) + big) % big;
        if (v % pshift != 0)
            throw precision_error("p-adic product valuation underflow");
        c[i] = (long)(v / pshift);
    }
    long va = valuation_lb(), vb = o.valuation_lb();
    long prec = std::min(prec_ + vb, o.prec_ + va);
    return raw(R, c, prec);
}

long PadicNum::valuation_lb() const {
    long best = prec_;
    for (long v : c_) {
        if (v == 0) continue;
        long w = 0;
        while (v % R_->p == 0) { v /= R_->p; ++w; }
        best = std::min(best, w + R_->low);
    }
    return best;
}

long PadicNum::valuation() const {
    long v = valuation_lb();
    if (v >= prec_)
        throw precision_error("element indistinguishable from zero at precision " +
                              std::to_string(prec_));
    return v;
}

bool PadicNum::val_at_least(long b) const {
    long v = valuation_lb();
    if (v < b) return false;
    if (b > prec_)
        throw precision_error("valuation bound " + std::to_string(b) +
                              " undecidable at precision " + std::to_string(prec_));
    return true;
}

long PadicNum::residue_at(long s) const {
    if (!val_at_least(s)) throw precondition_error("residue needs valuation >= shift");
    long enc = 0, mul = 1;
    long div = R_->ppow[s - R_->low];
    for (long i = 0; i < R_->f; ++i) {
        enc += (c_[i] / div % R_->p) * mul;
        mul *= R_->p;
    }
    return enc;
}

PadicNum PadicNum::inv() const {
    const PadicRing& R = *R_;
    long v = valuation();
    if (-v < R.low) throw precision_error("inverse valuation below range");
    // unit part: digits shifted so that valuation becomes 0
    long div = R.ppow[v - R.low];
    PadicNum u = raw(R, c_, prec_);
    for (auto& x : u.c_) x = x / div * R.ppow[-R.low];
    u.prec_ = R.K;
    // Newton iteration from the residue field inverse
    long r0 = u.residue_at(0);
    PadicNum y = lift_residue(R, R.res->inv(r0), 0);
    PadicNum two = from_int(R, 2);
    for (int it = 0; it < 6; ++it) y = y.mul(two.sub(u.mul(y)));
    // rescale by pi^{-v} and restore precision bookkeeping
    PadicNum out = y.mul(pi_pow(R, -v));
    out.prec_ = std::min(R.K, prec_ - 2 * v);
    if (out.prec_ <= R.low) throw precision_error("p-adic precision exhausted");
    out.reduce();
    return out;
}

bool PadicNum::congruent(const PadicNum& o, long Kp) const {
    if (Kp > prec_ || Kp > o.prec_)
        throw precision_error("comparison precision exceeds known digits");
    long m = R_->ppow[Kp - R_->low];
    for (long i = 0; i < R_->f; ++i)
        if (((c_[i] - o.c_[i]) % m + m) % m != 0) return false;
    return true;
}

PadicMatrix PadicMatrix::zeros(const PadicRing& R, long N) {
    PadicMatrix M;
    M.R = &R;
    M.N = N;
    M.e.assign(N * N, PadicNum::zero(R));
    return M;
}

PadicMatrix PadicMatrix::identity(const PadicRing& R, long N) {
    PadicMatrix M = zeros(R, N);
    for (long i = 0; i < N; ++i) M.at(i, i) = PadicNum::from_int(R, 1);
    return M;
}

PadicMatrix PadicMatrix::mul(const PadicMatrix& o) const {
    PadicMatrix M = zeros(*R, N);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            PadicNum s = PadicNum::zero(*R);
            for (long k = 0; k < N; ++k) s = s.add(at(i, k).mul(o.at(k, j)));
            M.at(i, j) = s;
        }
    return M;
}

PadicMatrix PadicMatrix::transpose() const {
    PadicMatrix M = zeros(*R, N);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) M.at(i, j) = at(j, i);
    return M;
}

bool PadicMatrix::congruent(const PadicMatrix& o, long Kp) const {
    for (long i = 0; i < N * N; ++i)
        if (!e[i].congruent(o.e[i], Kp)) return false;
    return true;
}

} // namespace llcw
